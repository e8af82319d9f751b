"""Size caps for the brute-force code paths.

``SEMICAT_SIZE_CAP`` overrides the defaults. It is either a bare integer
(applied to the congruence-enumeration cap) or a comma list such as
``congruences=12,generators=20000``.
"""

import os

DEFAULT_CAPS = {
    "generators": 5000,        # monoid_from_generators
    "congruences": 10,         # all_congruences on monoids
    "cat_congruences": 12,     # all_cat_congruences on categories (arrows)
    "normal_subgroups": 128,   # all_normal_subgroups
    "sylow": 24,               # Sylow oracle
    "kernel_objects": 2000,    # kernel_category object count
}


def _parse_env(raw):
    caps = {}
    raw = raw.strip()
    if not raw:
        return caps
    if raw.isdigit():
        caps["congruences"] = int(raw)
        return caps
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in DEFAULT_CAPS:
            raise ValueError(f"unknown size cap {key!r}")
        caps[key] = int(val)
    return caps


_session = {}


def set_caps(raw: str) -> None:
    """Session-wide caps in the same format as the environment variable."""
    _session.clear()
    _session.update(_parse_env(raw))


def cap(name, override=None):
    """Effective cap: explicit override, session, environment, default."""
    if override is not None:
        return override
    if name in _session:
        return _session[name]
    env = _parse_env(os.environ.get("SEMICAT_SIZE_CAP", ""))
    return env.get(name, DEFAULT_CAPS[name])
