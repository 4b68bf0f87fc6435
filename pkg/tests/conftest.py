import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from lex_engine import MonomialSet, count, unrank  # noqa: E402
from monomial_core import Monomial  # noqa: E402


def mono(*exps: int) -> Monomial:
    return Monomial(tuple(exps))


@st.composite
def monomials(draw, min_vars: int = 1, max_vars: int = 4, max_exp: int = 3, min_degree: int = 0):
    n = draw(st.integers(min_value=min_vars, max_value=max_vars))
    exps = draw(st.lists(st.integers(min_value=0, max_value=max_exp), min_size=n, max_size=n)
                .filter(lambda e: sum(e) >= min_degree))
    return Monomial(tuple(exps))


@st.composite
def monomials_of(draw, nvars: int, degree: int):
    """Uniform-ish draw from S_{n,d} by composition."""
    cuts = sorted(draw(st.lists(st.integers(min_value=0, max_value=degree),
                                min_size=nvars - 1, max_size=nvars - 1)))
    bounds = [0] + cuts + [degree]
    return Monomial(tuple(bounds[i + 1] - bounds[i] for i in range(nvars)))


@st.composite
def bounded_monomials(draw, max_vars: int = 4, max_degree: int = 8, min_degree: int = 0):
    n = draw(st.integers(min_value=1, max_value=max_vars))
    d = draw(st.integers(min_value=min_degree, max_value=max_degree))
    return draw(monomials_of(n, d))


@st.composite
def lex_chain(draw, length: int, max_vars: int = 4, max_degree: int = 6):
    """Monomials u1 >= u2 >= ... of one degree, drawn by rank."""
    n = draw(st.integers(min_value=1, max_value=max_vars))
    d = draw(st.integers(min_value=1, max_value=max_degree))
    size = count(n, d)
    ranks = sorted(draw(st.lists(st.integers(min_value=0, max_value=size - 1),
                                 min_size=length, max_size=length)))
    return [unrank(n, d, r) for r in ranks]


@st.composite
def degree_subsets(draw, max_vars: int = 4, max_degree: int = 5, min_degree: int = 1):
    """Nonempty random subsets of S_{n,d}."""
    n = draw(st.integers(min_value=1, max_value=max_vars))
    d = draw(st.integers(min_value=min_degree, max_value=max_degree))
    ranks = draw(st.lists(st.integers(min_value=0, max_value=count(n, d) - 1),
                          min_size=1, max_size=12, unique=True))
    return MonomialSet.from_members(n, d, (unrank(n, d, r) for r in ranks))


@pytest.fixture
def x2x3():
    return mono(0, 1, 1, 0)


@pytest.fixture
def x2_squared():
    return mono(0, 2, 0, 0)
