"""Small worked examples, one or two per operation."""

import itertools
import random

import pytest

from gray2 import mates as M
from gray2.fincat import (discrete, fincat_iso, from_poset, functor_cat, opposite, pi0,
                          product_cat)
from gray2.gray import gray_colax, gray_lax
from gray2.phi import nu
from gray2.poset import (LatticePath, PosetError, antichain, concat_paths, interval_poset,
                         max_chain_poset, ordinal_poset, poset_iso, product)
from gray2.theta2 import (C0, C1, C2, Theta2Obj, classify, compose, morphisms, objects_up_to,
                          one_op_obj, two_op_obj)
from gray2.twocat import (CatGraph, cotensor, count_two_functors, enumerate_two_functors,
                          free_linear, is_iso, localize_2morphisms, realize, two_op)


def chain(n):
    return from_poset(ordinal_poset(n))


# -- posets -------------------------------------------------------------------

def test_interval_and_ordinal_sizes():
    assert len(interval_poset(3, 2)) == 0
    assert len(list(ordinal_poset(5).strict_pairs())) == 15
    p = product(ordinal_poset(2), ordinal_poset(3))
    assert len(p) == 12 and len(list(p.pairs())) == 60


def test_concat_paths():
    p = LatticePath("HV")
    q = LatticePath("VH", (1, 1))
    assert concat_paths(p, q) == LatticePath("HVVH")
    assert concat_paths(p, q).end == (2, 2)
    with pytest.raises(PosetError):
        concat_paths(q, p)


@pytest.mark.parametrize("k,m", [(1, 2), (2, 2), (2, 3)])
def test_transpose_reverses_shuffle_order(k, m):
    a, b = max_chain_poset(k, m), max_chain_poset(m, k)
    swap = str.maketrans("HV", "VH")
    for x in a.elements:
        for y in a.elements:
            assert a.le(x, y) == b.le(y.translate(swap), x.translate(swap))
    assert poset_iso(a.opposite(), b) is not None


# -- finite categories ---------------------------------------------------------

def test_functor_category_sizes():
    assert len(functor_cat(chain(1), chain(1)).objects) == 3
    F = functor_cat(chain(1), discrete([0, 1]))
    assert len(F.objects) == 2 and not list(F.non_identity_morphisms())
    assert len(product_cat(chain(1), chain(1), chain(1)).morphisms) == 27


@pytest.mark.parametrize("c,d,e", [(chain(1), chain(1), chain(1)),
                                   (discrete([0, 1]), chain(1), chain(2)),
                                   (chain(1), discrete([0, 1]), chain(1))])
def test_exponential_law(c, d, e):
    lhs = functor_cat(product_cat(c, d), e)
    rhs = functor_cat(c, functor_cat(d, e))
    assert fincat_iso(lhs, rhs) is not None


def test_components_ignore_direction():
    c = from_poset(max_chain_poset(2, 2))
    assert len(pi0(c)) == 1
    d = product_cat(chain(1), discrete([0, 1, 2]))
    assert sorted(map(len, pi0(d))) == sorted(map(len, pi0(opposite(d))))


# -- Theta_2 ------------------------------------------------------------------

def test_factorization_is_unique():
    """Each map is inert . active for exactly one middle object and pair."""
    mids = objects_up_to(2, 2)
    for S in objects_up_to(2, 1):
        for T in objects_up_to(2, 1):
            seen = {}
            for Mid in mids:
                acts = [a for a in morphisms(S, Mid) if classify(a)["active"]]
                inerts = [e for e in morphisms(Mid, T) if classify(e)["inert"]]
                for a, e in itertools.product(acts, inerts):
                    f = compose(e, a)
                    seen[f] = seen.get(f, 0) + 1
            assert set(seen) == set(morphisms(S, T))
            assert set(seen.values()) == {1}


def test_inert_and_active_are_closed_under_composition():
    objs = objects_up_to(2, 1)
    for S, T, U in itertools.product(objs, repeat=3):
        for f in morphisms(S, T):
            cf = classify(f)
            for g in morphisms(T, U):
                cg = classify(g)
                c = classify(compose(g, f))
                for kind in ("inert", "active"):
                    if cf[kind] and cg[kind]:
                        assert c[kind]


def test_both_inert_and_active_only_for_identities():
    for S in objects_up_to(2, 2):
        for T in objects_up_to(2, 2):
            for f in morphisms(S, T):
                c = classify(f)
                assert (c["inert"] and c["active"]) == f.is_identity()


def test_duals_of_objects():
    I = Theta2Obj(2, (2, 0))
    assert one_op_obj(one_op_obj(I)) == I
    assert one_op_obj(I) == Theta2Obj(2, (0, 2))
    same, rev = two_op_obj(C2)
    assert same == C2 and rev == ((1, 0),)


# -- 2-categories --------------------------------------------------------------

def test_maps_between_cells():
    assert count_two_functors(realize(C1), realize(C2)) == 4
    X = realize(C2)
    assert count_two_functors(realize(C0), X) == len(X.objects)
    assert not is_iso(realize(C1), realize(C2))


def test_hom_of_a_realized_object():
    X = realize(Theta2Obj(2, (1, 0)))
    assert fincat_iso(X.hom(0, 2), chain(1)) is not None


def test_free_linear_on_points_is_a_chain():
    for n in range(4):
        X = free_linear(CatGraph([from_poset(ordinal_poset(0))] * n))
        assert is_iso(X, realize(Theta2Obj(n, (0,) * n)))
    X = free_linear(CatGraph([chain(1), chain(1)]))
    assert len(X.hom(0, 2).morphisms) == 9


@pytest.mark.parametrize("I", [C1, C2, Theta2Obj(2, (1, 0))])
def test_cotensor_examples(I):
    X = realize(I)
    assert is_iso(cotensor(X, 0), X)
    assert count_two_functors(realize(C1), cotensor(X, 1)) == X.flat().n2


@pytest.mark.parametrize("I", objects_up_to(2, 1))
def test_dual_and_localization_laws(I):
    X = realize(I)
    assert is_iso(two_op(X), X)
    assert fincat_iso(localize_2morphisms(two_op(X)), localize_2morphisms(X)) is not None


def test_localizing_a_locally_discrete_category_does_nothing():
    X = realize(Theta2Obj(2, (0, 0)))
    L = localize_2morphisms(X)
    assert fincat_iso(L, chain(2)) is not None


def test_interchange_in_the_cylinder():
    X = gray_colax(C2, C1)
    rng = random.Random(7)
    objs = X.objects
    triples = [(x, y, z) for x in objs for y in objs for z in objs
               if X.has_hom(x, y) and X.has_hom(y, z)]
    checked = 0
    for _ in range(300):
        x, y, z = rng.choice(triples)
        H, K = X.hom(x, y), X.hom(y, z)
        a = rng.choice(H.morphisms)
        b = rng.choice(K.morphisms)
        a2 = rng.choice(H.out_of(H.tgt[a]))
        b2 = rng.choice(K.out_of(K.tgt[b]))
        lhs = X.hcomp2(x, y, z, X.vcomp(x, y, a, a2), X.vcomp(y, z, b, b2))
        rhs = X.vcomp(x, z, X.hcomp2(x, y, z, a, b), X.hcomp2(x, y, z, a2, b2))
        assert lhs == rhs
        checked += 1
    assert checked == 300


# -- Gray products and Phi -------------------------------------------------------

def test_gray_units_and_symmetry():
    assert is_iso(gray_lax(C0, C2), realize(C2))
    assert is_iso(gray_lax(C1, C1), gray_colax(C1, C1))


@pytest.mark.parametrize("I,m", [(C1, 1), (C2, 2), (Theta2Obj(2, (1, 0)), 1),
                                 (Theta2Obj(2, (1, 1)), 2)])
def test_nu_image(I, m):
    """Onto objects; a 1-cell is hit exactly when its columns never decrease."""
    F = nu(I, m)
    T = F.target.flat()
    assert len(set(F.f0)) == T.n0
    hit = set(F.f1)
    for n, (x, y, f) in enumerate(T.cells1):
        cols = [c for _, c in f]
        assert (n in hit) == (cols == sorted(cols)), (x, y, f)
    if I.k <= 1:
        assert len(hit) == T.n1


# -- adjunctions ----------------------------------------------------------------

def test_only_identity_adjunctions_in_a_cell():
    X = realize(C2)
    adjs = M.find_adjunctions(X)
    assert len(adjs) == len(X.objects)
    assert all(a.A == a.B and a.l == X.unit[a.A] for a in adjs)


def test_poset_2_category_examples():
    pt = ordinal_poset(0)
    X = M.pos_twocat([pt, antichain(1)])
    assert sum(len(H.objects) for H in X.homs.values()) == 4
    Y = M.pos_twocat([ordinal_poset(1)])
    assert len(Y.hom(0, 0).objects) == 3


def test_identity_square_over_identity_adjunction():
    X = M.pos_twocat([ordinal_poset(1)])
    ida = M.identity_adjunction(X, 0)
    sqs = M.squares_over(X, ida, ida)
    ids = [s for s in sqs if s.left == X.unit[0] and s.right == X.unit[0]]
    assert len(ids) == 1
    m = M.mate(ids[0], ida, ida)
    assert m.left == m.right == X.unit[0]
    assert m.filler == X.id2(0, 0, X.unit[0])


def test_non_invertible_filler_is_rejected():
    X = M.pos_twocat([ordinal_poset(1), ordinal_poset(2)])
    adjs = M.find_adjunctions(X)
    for ta in adjs:
        for ba in adjs:
            for sq in M.squares_over(X, ta, ba):
                if M.inverse_2cell(X, sq.x0, sq.y1, sq.filler) is None:
                    with pytest.raises(M.MateError):
                        M.laxfunadj_unit_counit(sq, ta, ba)
                    return
    pytest.fail("no square with a non-invertible filler")


def test_enumerate_matches_count():
    X, Y = realize(C2), gray_colax(C1, C1)
    assert len(enumerate_two_functors(X, Y)) == count_two_functors(X, Y)
