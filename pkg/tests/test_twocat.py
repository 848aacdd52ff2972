import itertools
import json

import pytest

from gray2.fincat import from_poset, product_cat
from gray2.poset import ordinal_poset
from gray2.theta2 import C0, C1, C2, Theta2Obj, morphisms, objects_up_to
from gray2.twocat import (CatGraph, TwoCat, TwoCatError, TwoFunctor, count_two_functors,
                          cotensor, discrete_twocat, evaluation, free_linear, functor_violation,
                          identity_functor, iso_two_cats, locally_discrete, localize_2morphisms,
                          one_op, product_twocat, realize, realize_mor, terminal_twocat, two_op)
from oracles import theta2_hom_count


def brute_count(X, Y):
    """Enumerate boundary-compatible assignments and keep the strict 2-functors."""
    S, T = X.flat(), Y.flat()
    n = 0
    for f0 in itertools.product(range(T.n0), repeat=S.n0):
        c1 = [[j for j in range(T.n1) if T.src1[j] == f0[S.src1[i]] and T.tgt1[j] == f0[S.tgt1[i]]]
              for i in range(S.n1)]
        for f1 in itertools.product(*c1):
            c2 = [[j for j in range(T.n2) if T.src2[j] == f1[S.src2[i]]
                   and T.tgt2[j] == f1[S.tgt2[i]]] for i in range(S.n2)]
            for f2 in itertools.product(*c2):
                if functor_violation(TwoFunctor(X, Y, f0, f1, f2, check=False)) is None:
                    n += 1
    return n


SMALL = [realize(C0), realize(C1), realize(C2), realize(Theta2Obj(2, (0, 1)))]


@pytest.mark.parametrize("i", range(len(SMALL)))
@pytest.mark.parametrize("j", range(len(SMALL)))
def test_search_matches_brute_force(i, j):
    assert count_two_functors(SMALL[i], SMALL[j]) == brute_count(SMALL[i], SMALL[j])


@pytest.mark.parametrize("S", objects_up_to(2, 1))
@pytest.mark.parametrize("T", objects_up_to(2, 1))
def test_realization_is_fully_faithful(S, T):
    # strict 2-functors between realized cells are exactly the Theta_2 maps
    assert count_two_functors(realize(S), realize(T)) == theta2_hom_count(S.k, S.ns, T.k, T.ns)


def test_realize_mor_is_valid_and_injective_on_maps():
    S, T = C2, Theta2Obj(2, (1, 2))
    keys = {realize_mor(f).key() for f in morphisms(S, T)}
    assert len(keys) == theta2_hom_count(1, (1,), 2, (1, 2))


def test_realize_c2():
    X = realize(C2)
    assert X.objects == (0, 1)
    assert len(X.hom(0, 1).objects) == 2
    assert len(X.hom(0, 1).non_identity_morphisms()) == 1
    assert not X.has_hom(1, 0)


def test_free_linear_hom_is_product():
    a = from_poset(ordinal_poset(1))
    X = free_linear(CatGraph([a, product_cat(a, a)]))
    H = X.hom(0, 2)
    assert len(H.objects) == 2 * 4
    assert len(H.morphisms) == 3 * 9


def test_cotensor():
    X = realize(C2)
    Y = cotensor(X, 1)
    assert Y.objects == X.objects
    # arrows in hom(0,1) = [1]: three objects; squares between them: six
    assert len(Y.hom(0, 1).objects) == 3
    assert len(Y.hom(0, 1).morphisms) == 6
    Y.validate()
    for v in (0, 1):
        assert functor_violation(evaluation(X, 1, v, Y)) is None


def test_duals():
    X = realize(Theta2Obj(2, (1, 0)))
    assert iso_two_cats(two_op(two_op(X)), X) is not None
    assert iso_two_cats(one_op(X), realize(Theta2Obj(2, (0, 1)))) is not None
    assert iso_two_cats(two_op(X), X) is not None


def test_iso_search_negative():
    assert iso_two_cats(realize(Theta2Obj(2, (1, 0))), realize(Theta2Obj(2, (0, 1)))) is None


def test_localize_cell():
    L = localize_2morphisms(realize(C2))
    assert len(L.objects) == 2 and len(L.hom(0, 1)) == 1


def test_product_twocat():
    P = product_twocat(realize(C1), realize(C1))
    assert len(P.objects) == 4
    assert len(P.hom((0, 0), (1, 1)).objects) == 1


def test_small_builders():
    assert terminal_twocat().size() == (1, 1, 1)
    D = discrete_twocat("ab")
    assert len(D.objects) == 2 and not D.has_hom("a", "b")
    L = locally_discrete(from_poset(ordinal_poset(2)))
    assert functor_violation(identity_functor(L)) is None


def test_invalid_functor_rejected():
    X = realize(C2)
    F = identity_functor(X)
    f2 = list(F.f2)
    f2[0], f2[1] = f2[1], f2[0]
    with pytest.raises(TwoCatError):
        TwoFunctor(X, X, F.f0, F.f1, f2)


def test_json_round_trip():
    X = cotensor(realize(C2), 1)
    Y = TwoCat.from_json(json.loads(json.dumps(X.to_json())))
    assert iso_two_cats(X, Y) is not None
    assert Y.size() == X.size()
