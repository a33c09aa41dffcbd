import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edgeres.graph import Graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def monomial_gens(draw, max_vars=6, max_gens=8, max_exp=2):
    k = draw(st.integers(1, max_vars))
    exps = st.tuples(*[st.integers(0, max_exp)] * k).filter(lambda m: sum(m) > 0)
    return k, draw(st.lists(exps, min_size=1, max_size=max_gens))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
