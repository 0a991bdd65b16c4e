import pytest
from hypothesis import strategies as st

from socstable.generators import GenConfig, fig1, gen_random, tight
from socstable.model import make_instance

P_ACCEPT = (0.3, 0.7, 1.0)
P_SOCIAL = (0.0, 0.3, 0.7, 1.0)

ACCEPTANCE_LINES: list[str] = []


def corpus_configs(seeds_per_cell: int = 100):
    """Seeded configs covering every 1..5 x 1..5 shape and probability cell."""
    out = []
    for pa in P_ACCEPT:
        for ps in P_SOCIAL:
            for s in range(seeds_per_cell):
                out.append(GenConfig(1 + s % 5, 1 + (s // 5) % 5, pa, ps, seed=1000 * s + 17))
    return out


@pytest.fixture(scope="session")
def corpus():
    return [gen_random(c) for c in corpus_configs()]


@pytest.fixture
def fig1_instance():
    return fig1()


@pytest.fixture
def tight_instance():
    return tight()


@st.composite
def instances(draw, max_men=4, max_women=4, symmetric=None):
    n_men = draw(st.integers(0, max_men))
    n_women = draw(st.integers(0, max_women))
    men = [f"m{i + 1}" for i in range(n_men)]
    women = [f"w{j + 1}" for j in range(n_women)]
    pairs = [(m, w) for m in men for w in women]
    sym = draw(st.booleans()) if symmetric is None else symmetric
    man_ok = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    woman_ok = man_ok if sym else draw(
        st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs))
    )
    social = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    men_prefs = {
        m: draw(st.permutations([w for (mm, w), ok in zip(pairs, man_ok) if mm == m and ok]))
        for m in men
    }
    women_prefs = {
        w: draw(st.permutations([m for (m, ww), ok in zip(pairs, woman_ok) if ww == w and ok]))
        for w in women
    }
    edges = [p for p, e in zip(pairs, social) if e]
    return make_instance(men, women, men_prefs, women_prefs, edges)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
