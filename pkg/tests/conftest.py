import hypothesis.strategies as st
import pytest

from catmirror import LEAF, Node, sigma_inv

# Filled in by tests/test_acceptance.py; printed at the end of the run.
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[k]
        line = f"criterion {k:>2} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


def ternary_trees(max_internal: int = 12):
    """Random ternary trees, grown from a leaf up to ``max_internal`` nodes."""
    return st.recursive(
        st.just(LEAF),
        lambda kids: st.tuples(kids, kids, kids).map(lambda t: Node(*t)),
        max_leaves=2 * max_internal + 1,
    )


def nc_trees(max_internal: int = 12):
    """Random non-crossing trees, pulled back from random ternary trees."""
    return ternary_trees(max_internal).map(sigma_inv)


@pytest.fixture(scope="session")
def fig_tree():
    from catmirror import NctLabeledTree
    return NctLabeledTree(5, [(1, 2), (1, 3), (3, 4), (3, 5)])


@pytest.fixture(scope="session")
def fig_dissection():
    from catmirror import QuadDissection
    return QuadDissection(5, [(1, 4), (5, 8), (5, 10)])
