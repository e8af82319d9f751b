import random

from hypothesis import assume, strategies as st

from semicat import zoo
from semicat.core import monoid_from_generators
from semicat.errors import SizeLimitExceeded


@st.composite
def transformation_monoids(draw, max_size=12, max_degree=4):
    degree = draw(st.integers(2, max_degree))
    point = st.integers(0, degree - 1)
    maps = draw(st.lists(st.tuples(*[point] * degree), min_size=1, max_size=3))
    try:
        M = monoid_from_generators(maps, degree, limit=max_size)
    except SizeLimitExceeded:
        assume(False)
    return M


@st.composite
def karoubi_categories(draw, max_objects=3, max_arrows=12):
    M = draw(transformation_monoids(max_size=10))
    idem = list(M.idempotents)
    objs = draw(st.lists(st.sampled_from(idem), min_size=1, max_size=max_objects))
    C = zoo.karoubi(M, objs)
    assume(C.num_arrows <= max_arrows)
    return C


def relabel(M, seed):
    """An isomorphic copy of M under a random permutation of its elements."""
    perm = list(range(M.size))
    random.Random(seed).shuffle(perm)
    inv = [perm.index(i) for i in range(M.size)]
    table = [[perm[M.table[inv[x]][inv[y]]] for y in range(M.size)] for x in range(M.size)]
    ident = None if M.identity is None else perm[M.identity]
    return table, ident, perm


# PASS/FAIL lines from the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
