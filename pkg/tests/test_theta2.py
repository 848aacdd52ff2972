import pytest
from hypothesis import given, strategies as st

from gray2.theta2 import (C0, C1, C2, DeltaMor, Theta2Error, Theta2Mor, Theta2Obj, classify,
                          compose, delta_maps, factorize_inert_active, identity, morphisms,
                          objects_up_to, parse_obj, tau, tau_mor)
from oracles import monotone, theta2_hom_count

objs = st.integers(0, 3).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.integers(0, 4), min_size=k, max_size=k)))


@given(objs)
def test_notation_round_trips(kn):
    I = Theta2Obj(kn[0], tuple(kn[1]))
    assert parse_obj(str(I)) == I
    assert parse_obj(" " + str(I).replace(",", " , ") + " ") == I


def test_parse():
    assert parse_obj("[2](1,0)") == Theta2Obj(2, (1, 0))
    assert parse_obj("[0]()") == C0
    assert parse_obj("[3]") == Theta2Obj(3, (0, 0, 0))
    for bad in ("[2](1)", "[1](", "(1)", "[a](0)"):
        with pytest.raises(Theta2Error):
            parse_obj(bad)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 3), (2, 2), (3, 1)])
def test_delta_maps(m, n):
    assert [d.values for d in delta_maps(m, n)] == sorted(monotone(m, n))


@pytest.mark.parametrize("S", objects_up_to(2, 1))
@pytest.mark.parametrize("T", objects_up_to(2, 1))
def test_hom_cardinality(S, T):
    assert sum(1 for _ in morphisms(S, T)) == theta2_hom_count(S.k, S.ns, T.k, T.ns)


def test_bad_morphism_rejected():
    with pytest.raises(Theta2Error):
        Theta2Mor(C1, C2, DeltaMor(1, 1, (0, 1)), {})


SMALL = [C0, C1, C2, Theta2Obj(2, (1, 0)), Theta2Obj(1, (2,))]


def test_composition_is_associative_and_unital():
    for A in SMALL:
        for B in SMALL:
            for f in morphisms(A, B):
                assert compose(identity(B), f) == f == compose(f, identity(A))
    A, B, C, D = C1, C2, Theta2Obj(2, (1, 0)), Theta2Obj(1, (2,))
    for f in morphisms(A, B):
        for g in morphisms(B, C):
            for h in morphisms(C, D):
                assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@pytest.mark.parametrize("S", SMALL)
@pytest.mark.parametrize("T", SMALL + [Theta2Obj(2, (2, 1))])
def test_inert_active_factorization(S, T):
    for f in morphisms(S, T):
        a, e = factorize_inert_active(f)
        assert classify(a)["active"] and classify(e)["inert"]
        assert compose(e, a) == f


def test_tau():
    assert tau(2, 1) == Theta2Obj(2, (1, 1))
    t = tau_mor(DeltaMor(1, 2, (0, 2)), DeltaMor(0, 1, (1,)))
    assert t.source == tau(1, 0) and t.target == tau(2, 1)
    assert len(t.psis) == 2


def test_classify_identity():
    c = classify(identity(Theta2Obj(2, (1, 2))))
    assert c == {"inert": True, "active": True}
