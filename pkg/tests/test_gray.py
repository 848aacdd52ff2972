import pytest

from gray2.fincat import fincat_iso, from_poset, product_cat
from gray2.gray import (GRAY_CASES, check_graytenscolim, gray_colax, gray_colax_mor, gray_colax_of,
                        gray_lax, graytenscolim_diagram, product_realized, to_product)
from gray2.poset import max_chain_poset, ordinal_poset, product
from gray2.probe import Cocone, default_probes, verify_pushout
from gray2.theta2 import C0, C1, C2, Theta2Obj, compose, identity, morphisms, objects_up_to
from gray2.twocat import (functor_violation, is_iso, localize_2morphisms, realize, two_op)


def test_square():
    G = gray_colax(C1, C1)
    assert len(G.objects) == 4
    H = G.hom((0, 0), (1, 1))
    assert fincat_iso(H, from_poset(ordinal_poset(1))) is not None
    for (x, y), K in G.homs.items():
        if (x, y) != ((0, 0), (1, 1)):
            assert len(K.objects) == 1 and len(K.morphisms) == 1


def test_unit_is_neutral():
    for J in objects_up_to(2, 1):
        assert is_iso(gray_colax(C0, J), realize(J))
        assert is_iso(gray_colax(J, C0), realize(J))


def test_cylinder_hom_is_a_square():
    H = gray_colax(C2, C1).hom((0, 0), (1, 1))
    assert len(H.objects) == 4
    sq = from_poset(product(ordinal_poset(1), ordinal_poset(1)))
    assert fincat_iso(H, sq) is not None
    assert H.objects[0] == ("HV", (0,), (0,))
    assert H.between(("HV", (0,), (0,)), ("VH", (1,), (0,)))


def test_hom_of_grid_is_shuffle_poset():
    I, J = Theta2Obj(3, (0, 0, 0)), Theta2Obj(2, (0, 0))
    H = gray_colax(I, J).hom((0, 0), (3, 2))
    assert fincat_iso(H, from_poset(max_chain_poset(3, 2))) is not None


def test_cylinder_localizes_to_product():
    L = localize_2morphisms(gray_colax(C2, C1))
    a = from_poset(ordinal_poset(1))
    assert fincat_iso(L, product_cat(a, a)) is not None


def test_gray_differs_from_product():
    assert not is_iso(gray_colax(C1, C1), product_realized(C1, C1))
    assert functor_violation(to_product(C2, C1)) is None


@pytest.mark.parametrize("I", [C1, C2, Theta2Obj(2, (1, 0))])
@pytest.mark.parametrize("J", [C1, C2])
def test_duality(I, J):
    assert is_iso(two_op(gray_lax(I, J)),
                  gray_colax_of(two_op(realize(I)), two_op(realize(J)), I.k, J.k))


def test_lax_is_swapped_colax():
    G = gray_lax(C2, C1)
    assert set(G.objects) == set(gray_colax(C2, C1).objects)
    assert is_iso(G, gray_colax(C1, C2))


def test_functoriality():
    A, B, C = C1, C2, Theta2Obj(2, (1, 0))
    for f in morphisms(A, B):
        for g in morphisms(B, C):
            for h in morphisms(C1, C2):
                F = gray_colax_mor(f, h)
                assert functor_violation(F) is None
                G = gray_colax_mor(g, identity(C2))
                lhs = F.then(G).key()
                rhs = gray_colax_mor(compose(g, f), h).key()
                assert lhs == rhs


SOME_PROBES = [p for p in default_probes() if p[0] in ("[1](1)", "[2](1,1)", "Pos([0]..[1])")]


@pytest.mark.parametrize("case", GRAY_CASES)
def test_gluing(case):
    assert check_graytenscolim(case, SOME_PROBES).ok


def test_gluing_fails_under_corruption():
    rep = check_graytenscolim("sq", SOME_PROBES, corrupt="collapse")
    assert not rep.ok and rep.first_failure().witness


def test_wrong_decomposition_fails():
    # the same pieces glued into the cartesian product instead of the Gray product
    span, cocone = graytenscolim_diagram("sq")
    p = to_product(C1, C1, source=cocone.apex)
    wrong = Cocone(p.target, {t: leg.then(p) for t, leg in cocone.legs.items()})
    rep = verify_pushout(span, wrong, SOME_PROBES)
    bad = rep.first_failure()
    assert (bad.probe, bad.maps_from_apex, bad.limit_size) == ("[1](1)", 10, 14)
    assert "has no extension to the apex" in bad.witness
