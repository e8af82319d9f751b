"""``semicat`` command-line interface.

Every command prints one JSON document on stdout. Exit status is 0 for
success or a true property, 1 for a false property, 2 for errors (reported
as JSON on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import config, zoo
from .category import (FiniteCategory, cat_quotient, category_from_monoid,
                       category_to_json, consolidation, ell_malcev_membership,
                       is_lh_morphism_cat, is_mpq, kernel_category,
                       local_monoid_at, mpq_factorize, supertech_construct)
from .core import FiniteMonoid, greens, is_lh_congruence, local_monoid, quotient
from .errors import IndexOutOfRange, ParseError, SemicatError
from .ggm import ggm_quotient, lh_canonical_congruence, malcev_membership
from .groups import as_group, get_predicate, h_radical
from .jsonio import (congruence_from_json, congruence_to_json, from_json,
                     monoid_to_json, read_json, to_json)
from .rees import rees_representation
from .verify import ALIASES, SUITES, VerifyConfig, run_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# --------------------------------------------------------------------------
# input helpers

def load(arg: str):
    """A JSON file, or a builtin object given as ``zoo:<name>``."""
    if arg.startswith("zoo:"):
        return zoo.builtin_zoo(arg[4:])
    if not Path(arg).exists() and arg in zoo.zoo_names():
        return zoo.builtin_zoo(arg)
    return from_json(read_json(arg))


def load_monoid(arg: str) -> FiniteMonoid:
    obj = load(arg)
    if isinstance(obj, FiniteCategory):
        raise ParseError(f"{arg}: expected a monoid, got a category")
    return obj


def load_category(arg: str) -> FiniteCategory:
    obj = load(arg)
    return obj if isinstance(obj, FiniteCategory) else category_from_monoid(obj)


def load_congruence(arg: str, size: int):
    text = arg.strip()
    if text[:1] in "[{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid inline congruence: {exc.msg}") from None
    else:
        data = read_json(arg)
    c = congruence_from_json(data)
    if len(c.class_of) != size:
        raise IndexOutOfRange(f"congruence has {len(c.class_of)} entries, expected {size}")
    return c


def _j_or_all(g, j):
    if j is None:
        return list(g.regular_j_classes())
    if not 0 <= j < g.num_j:
        raise IndexOutOfRange(f"J-class {j} outside 0..{g.num_j - 1}")
    return [j]


# --------------------------------------------------------------------------
# commands; each returns (payload, exit status)

def cmd_green(args):
    S = load_monoid(args.input)
    g = greens(S)
    return {
        "size": S.size,
        "r_class": list(g.r_class),
        "l_class": list(g.l_class),
        "h_class": list(g.h_class),
        "j_class": list(g.j_class),
        "j_classes": [
            {"id": j, "elements": list(g.j_members[j]), "regular": g.regular[j],
             "below": sorted(g.j_below[j])}
            for j in range(g.num_j)
        ],
        "idempotents": list(g.idempotents),
    }, 0


def cmd_localmonoid(args):
    obj = load(args.input)
    if isinstance(obj, FiniteCategory):
        if args.object is None:
            raise ParseError("--object is required for a category")
        M = local_monoid_at(obj, args.object)
    else:
        if args.e is None:
            raise ParseError("--e is required for a monoid")
        M, _ = local_monoid(obj, args.e)
    out = monoid_to_json(M)
    out["embedding"] = list(M.support)
    return out, 0


def cmd_radical(args):
    G = as_group(load_monoid(args.input))
    N = h_radical(G, get_predicate(args.pvar))
    return {"order": N.size, "elements": sorted(N.support)}, 0


def cmd_rees(args):
    S = load_monoid(args.input)
    g = greens(S)
    reps = [rees_representation(S, j, g).to_json() for j in _j_or_all(g, args.j)]
    return (reps[0] if args.j is not None else {"j_classes": reps}), 0


def cmd_ggm(args):
    S = load_monoid(args.input)
    g = greens(S)
    out = []
    for j in _j_or_all(g, args.j):
        rep = rees_representation(S, j, g)
        N = None
        if args.pvar:
            N = h_radical(rep.group, get_predicate(args.pvar))
        res = ggm_quotient(S, j, N, g, rep)
        out.append({"jclass": j, "congruence": congruence_to_json(res.congruence),
                    "quotient": monoid_to_json(res.quotient)})
    return (out[0] if args.j is not None else {"results": out}), 0


def cmd_canon_lh(args):
    S = load_monoid(args.input)
    c = lh_canonical_congruence(S, get_predicate(args.h))
    Q, _ = quotient(S, c)
    return {"congruence": congruence_to_json(c), "quotient": monoid_to_json(Q)}, 0


def cmd_malcev(args):
    H, V = get_predicate(args.h), get_predicate(args.v)
    obj = load(args.input)
    if isinstance(obj, FiniteCategory):
        member = ell_malcev_membership(obj, H, V)
    else:
        member = malcev_membership(obj, H, V)
    return {"member": member}, 0 if member else 1


def cmd_consolidate(args):
    M, _ = consolidation(load_category(args.input))
    return monoid_to_json(M), 0


def _quotient_morphism(args):
    obj = load(args.input)
    if args.congruence is None:
        raise ParseError("--congruence is required")
    C = obj if isinstance(obj, FiniteCategory) else category_from_monoid(obj)
    k = load_congruence(args.congruence, C.num_arrows)
    return obj, C, k


def cmd_kernel(args):
    _, C, k = _quotient_morphism(args)
    _, phi = cat_quotient(C, k)
    K = kernel_category(phi)
    return {"objects": [list(o) for o in K.objects],
            "arrow_reps": [list(r) for r in K.arrow_reps],
            "category": category_to_json(K.category)}, 0


def cmd_check_lh(args):
    obj, C, k = _quotient_morphism(args)
    H = get_predicate(args.h)
    if isinstance(obj, FiniteCategory):
        _, phi = cat_quotient(C, k)
        lh = is_lh_morphism_cat(phi, H)
    else:
        quotient(obj, k)     # rejects partitions that are not congruences
        lh = is_lh_congruence(obj, k, H)
    return {"lh": lh}, 0 if lh else 1


def cmd_factor_mpq(args):
    _, C, k = _quotient_morphism(args)
    _, phi = cat_quotient(C, k)
    if phi.is_injective:
        return {"is_mpq": False, "length": 0, "steps": []}, 0
    steps = mpq_factorize(phi)
    return {"is_mpq": is_mpq(phi), "length": len(steps),
            "steps": [congruence_to_json(s.kernel()) for s in steps]}, 0


def cmd_supertech(args):
    C = load_category(args.input)
    H = get_predicate(args.h)
    V = get_predicate(args.v) if args.v else None
    res = supertech_construct(C, H, V)
    out = {"congruence": congruence_to_json(res.congruence),
           "category": category_to_json(res.category),
           "consolidated_congruence": congruence_to_json(res.consolidated)}
    if V is not None:
        out["member"] = ell_malcev_membership(C, H, V)
    return out, 0


def cmd_verify(args):
    names = list(SUITES) if args.all or not args.suite else args.suite
    for n in names:
        if ALIASES.get(n, n) not in SUITES:
            raise ParseError(f"unknown suite {n!r}; choose from {sorted(SUITES)}")
    cfg = VerifyConfig(bound=args.bound, random_monoids=args.random,
                       random_size=args.random_size, categories=args.categories,
                       seed=args.seed, jobs=args.jobs, corpus_dir=args.corpus)
    results = [run_suite(n, cfg) for n in names]
    ok = all(r.passed for r in results)
    return {"passed": ok, "suites": [r.as_dict() for r in results]}, 0 if ok else 1


def cmd_zoo(args):
    if args.name is None:
        return {"names": zoo.zoo_names()}, 0
    return to_json(zoo.builtin_zoo(args.name)), 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semicat", description="Finite monoid and category computations.")
    p.add_argument("--seed", type=int, default=0, help="seed for random corpora")
    p.add_argument("--size-cap", default=None,
                   help="size caps, e.g. 12 or congruences=12,generators=20000")
    p.add_argument("--json", action="store_true", help="JSON output (the only mode)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help_, inp=True):
        sp = sub.add_parser(name, help=help_)
        if inp:
            sp.add_argument("input", help="JSON file or zoo:<name>")
        sp.set_defaults(func=fn)
        return sp

    command("green", cmd_green, "Green's relations")
    sp = command("localmonoid", cmd_localmonoid, "local monoid eSe or C(c,c)")
    sp.add_argument("--e", type=int)
    sp.add_argument("--object", type=int)
    sp = command("radical", cmd_radical, "largest normal H-subgroup of a group")
    sp.add_argument("--pvar", required=True)
    sp = command("rees", cmd_rees, "Rees coordinates of regular J-classes")
    sp.add_argument("--j", type=int)
    sp = command("ggm", cmd_ggm, "GGM quotient at a regular J-class")
    sp.add_argument("--j", type=int)
    sp.add_argument("--pvar", help="use the radical for this group pseudovariety")
    sp = command("canon-lh", cmd_canon_lh, "largest LH-quotient")
    sp.add_argument("--h", required=True)
    sp = command("malcev", cmd_malcev, "membership in LH (m) V")
    sp.add_argument("--h", required=True)
    sp.add_argument("--v", required=True)
    command("consolidate", cmd_consolidate, "consolidation monoid of a category")
    for name, fn, help_ in (("kernel", cmd_kernel, "kernel category of a quotient"),
                            ("check-lh", cmd_check_lh, "is a quotient an LH-morphism"),
                            ("factor-mpq", cmd_factor_mpq, "factor into maximal proper quotients")):
        sp = command(name, fn, help_)
        sp.add_argument("--congruence", help="file or inline JSON with class labels")
        if name == "check-lh":
            sp.add_argument("--h", required=True)
    sp = command("supertech", cmd_supertech, "canonical LH quotient of a category")
    sp.add_argument("--h", required=True)
    sp.add_argument("--v")
    sp = command("verify", cmd_verify, "run invariant suites over a corpus", inp=False)
    sp.add_argument("--suite", action="append")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--bound", type=int, default=8)
    sp.add_argument("--random", type=int, default=200)
    sp.add_argument("--random-size", type=int, default=6)
    sp.add_argument("--categories", type=int, default=60)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--corpus", help="directory of extra JSON inputs")
    sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sp = command("zoo", cmd_zoo, "list or print builtin objects", inp=False)
    sp.add_argument("name", nargs="?")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.size_cap:
            try:
                config.set_caps(args.size_cap)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        payload, status = args.func(args)
    except SemicatError as exc:
        print(json.dumps(exc.as_dict()), file=sys.stderr)
        return 2
    print(json.dumps(payload))
    return status


if __name__ == "__main__":
    sys.exit(main())
