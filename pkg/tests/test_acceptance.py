"""Acceptance criteria 1-8, each run on the default seeded corpus.

Every criterion prints one PASS/FAIL line; the lines are also repeated in
the pytest terminal summary.
"""

import time

import pytest

from semicat import verify
from semicat.verify import VerifyConfig, run_suite

from conftest import ACCEPTANCE_LINES

CFG = VerifyConfig()

# criterion -> (suites, time limit in seconds or None)
CRITERIA = {
    1: (("maximality",), 300),
    2: (("membership",), None),
    3: (("putcha-schutzenberger",), 120),
    4: (("LHtocd", "toconsolidate"), None),
    5: (("technical",), None),
    6: (("kernelin", "passtocat"), None),
    7: (("supertech",), None),
    8: (("greens", "rees", "sylow", "radcong"), None),
}
TOTAL_LIMIT = 600
_elapsed = {}


def _report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def test_corpus_sizes():
    mons = verify.monoids(CFG)
    randoms = [m for name, m in mons if name.startswith("rand")]
    assert len(randoms) >= 200 and all(M.size <= 6 for M in randoms)
    assert all(M.size <= 8 for name, M in mons if not name.startswith("rand"))
    cats = verify.categories(CFG)
    assert all(C.num_objects <= 3 and C.num_arrows <= 12 for _, C in cats)
    assert len(verify.morphisms(CFG)) >= 100
    assert all(C.num_objects <= 2 and C.num_arrows <= 10 for _, C in verify.tiny_categories(CFG))


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    suites, limit = CRITERIA[n]
    start = time.perf_counter()
    results = [run_suite(s, CFG) for s in suites]
    seconds = time.perf_counter() - start
    _elapsed[n] = seconds
    failures = [f for r in results for f in r.failures]
    checked = sum(r.checked for r in results)
    in_time = limit is None or seconds < limit
    ok = not failures and checked > 0 and in_time
    _report(n, ok, f"({', '.join(suites)}: {checked} checks, {len(failures)} discrepancies, "
                   f"{seconds:.1f}s)")
    assert not failures, failures[:10]
    assert checked > 0
    assert in_time, f"took {seconds:.1f}s, limit {limit}s"


def test_total_runtime():
    total = sum(_elapsed.values())
    ok = len(_elapsed) == len(CRITERIA) and total < TOTAL_LIMIT
    _report("runtime", ok, f"({total:.1f}s over {len(_elapsed)} criteria, limit {TOTAL_LIMIT}s)")
    assert ok
