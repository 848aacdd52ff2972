import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gray2 import search as S
from gray2.gray import gray_colax
from gray2.mates import pos_twocat
from gray2.phi import phi_obj
from gray2.poset import ordinal_poset
from gray2.theta2 import C1, C2, Theta2Obj, objects_up_to
from gray2.twocat import cotensor, realize

needs_cython = pytest.mark.skipif("cython" not in S.available_backends(),
                                  reason="compiled backend not built")

PAIRS = [
    (phi_obj(Theta2Obj(2, (1, 1)), 1), realize(Theta2Obj(2, (1, 1)))),
    (gray_colax(C2, C1), cotensor(realize(C2), 1)),
    (realize(C2), pos_twocat([ordinal_poset(1), ordinal_poset(2)])),
]


@needs_cython
@pytest.mark.parametrize("i", range(len(PAIRS)))
def test_backends_agree(i):
    X, Y = PAIRS[i]
    a = S.search(X, Y, backend="cython")
    b = S.search(X, Y, backend="python")
    assert len(a) > 0
    assert np.array_equal(a, b)


@pytest.mark.parametrize("backend", S.available_backends())
def test_budget_exceeded(backend):
    X, Y = PAIRS[0]
    with pytest.raises(S.BudgetExceeded):
        S.search(X, Y, budget=5, backend=backend)


@pytest.mark.parametrize("backend", S.available_backends())
def test_limit_and_injective(backend):
    X = realize(C2)
    assert len(S.search(X, X, limit=1, backend=backend)) == 1
    # automorphisms of a single 2-cell: only the identity
    assert len(S.search(X, X, injective=True, backend=backend)) == 1


def test_rows_are_canonically_sorted():
    X, Y = PAIRS[1]
    rows = S.search(X, Y)
    assert [tuple(r) for r in rows] == sorted(tuple(r) for r in rows)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("GRAY2_BUDGET", "1234")
    assert S.default_budget() == 1234
    monkeypatch.delenv("GRAY2_BUDGET")
    assert S.default_budget() == S.DEFAULT_BUDGET


def test_backend_env(monkeypatch):
    monkeypatch.setenv("GRAY2_BACKEND", "python")
    assert S.default_backend() == "python"


OBJS = objects_up_to(2, 1)


@needs_cython
@settings(max_examples=20, deadline=None)
@given(st.sampled_from(OBJS), st.sampled_from(OBJS), st.booleans())
def test_backends_agree_on_gray_products(I, J, inj):
    X, Y = realize(I), gray_colax(J, C1)
    assert np.array_equal(S.search(X, Y, backend="cython", injective=inj),
                          S.search(X, Y, backend="python", injective=inj))
