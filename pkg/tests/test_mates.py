import pytest

from gray2 import mates as M
from gray2.fincat import functor_cat
from gray2.poset import all_posets, ordinal_poset
from oracles import galois_count

POSETS = [p for n in range(1, 4) for p in all_posets(n)]


@pytest.fixture(scope="module")
def pos3():
    X = M.pos_twocat(POSETS)
    return X, M.find_adjunctions(X)


def as_rel(p):
    return (list(p.elements), p.le)


def test_adjunctions_match_galois_oracle(pos3):
    X, adjs = pos3
    expected = sum(galois_count(as_rel(p), as_rel(q)) for p in POSETS for q in POSETS)
    assert len(adjs) == expected
    assert all(M.check_triangle(a) for a in adjs)


def test_galois_pairs_agree_with_brute_force():
    p, q = ordinal_poset(2), POSETS[3]
    assert len(M.galois_pairs(p, q)) == galois_count(as_rel(p), as_rel(q))


def test_right_adjoints_are_unique(pos3):
    _, adjs = pos3
    seen = {}
    for a in adjs:
        assert seen.setdefault((a.A, a.B, a.l), a.r) == a.r


def test_identity_adjunction():
    X = M.pos_twocat([ordinal_poset(2)])
    assert M.check_triangle(M.identity_adjunction(X, 0))


def test_monotone_maps_count():
    # monotone maps [2] -> [2]
    assert len(M.monotone_maps(ordinal_poset(2), ordinal_poset(2))) == 10


def test_mate_is_an_involution():
    X = M.pos_twocat([ordinal_poset(1), ordinal_poset(2)])
    adjs = M.find_adjunctions(X)
    n = 0
    for ta in adjs:
        for ba in adjs:
            for d in ("colax", "lax"):
                for sq in M.squares_over(X, ta, ba, d):
                    m = M.mate(sq, ta, ba)
                    assert m.direction != sq.direction
                    assert M.mate(m, ta, ba).key() == sq.key()
                    n += 1
    assert n > 100


def test_composite_adjunction_and_pasting():
    X = M.pos_twocat([ordinal_poset(1), ordinal_poset(2)])
    adjs = M.find_adjunctions(X)
    checked = 0
    for t1 in adjs:
        for t2 in adjs:
            if t1.B != t2.A:
                continue
            tc = M.compose_adjunctions(t1, t2)
            assert M.check_triangle(tc)
            for s1 in M.squares_over(X, t1, t1):
                for s2 in M.squares_over(X, t2, t2):
                    if s1.right != s2.left:
                        continue
                    lhs = M.mate(M.paste_horizontal(s1, s2), tc, tc)
                    rhs = M.paste_lax(M.mate(s2, t2, t2), M.mate(s1, t1, t1))
                    assert lhs.key() == rhs.key()
                    checked += 1
    assert checked > 0


def test_invertible_squares_satisfy_unit_counit_equations():
    X = M.pos_twocat([ordinal_poset(1), ordinal_poset(2)])
    adjs = M.find_adjunctions(X)
    n = 0
    for ta in adjs:
        for ba in adjs:
            for sq in M.squares_over(X, ta, ba):
                if M.inverse_2cell(X, sq.x0, sq.y1, sq.filler) is not None:
                    assert M.laxfunadj_unit_counit(sq, ta, ba).ok
                    n += 1
    assert n > 0


def test_idempotent_monoid_bed():
    E = M.idempotent_monoid()
    assert len(functor_cat(E, E).objects) == 2
    X = M.cat_twocat([E])
    adjs = M.find_adjunctions(X)
    assert adjs
    for ta in adjs:
        for ba in adjs:
            for sq in M.squares_over(X, ta, ba):
                assert M.mate(M.mate(sq, ta, ba), ta, ba).key() == sq.key()


def test_perturbed_counit_breaks_triangles_and_equations():
    X = M.cat_twocat([M.idempotent_monoid()])
    adj = M.find_adjunctions(X)[0]
    bad = M.perturb_counit(adj)
    assert bad is not None and not M.check_triangle(bad)
    failures = []
    for sq in M.squares_over(X, bad, bad):
        if M.inverse_2cell(X, sq.x0, sq.y1, sq.filler) is not None:
            rep = M.laxfunadj_unit_counit(sq, bad, bad)
            if not rep.ok:
                failures.append(rep)
    assert failures


def test_square_validation():
    X = M.pos_twocat([ordinal_poset(1)])
    adj = M.identity_adjunction(X, 0)
    sq = M.squares_over(X, adj, adj)[0]
    data = sq.to_json()
    assert M.Square2.from_json(X, data).key() == sq.key()
    data["direction"] = "sideways"
    with pytest.raises(M.MateError):
        M.Square2.from_json(X, data)


def test_adjunction_json_rejects_non_adjunction():
    X = M.cat_twocat([M.idempotent_monoid()])
    adj = M.perturb_counit(M.find_adjunctions(X)[0])
    with pytest.raises(M.MateError):
        M.AdjunctionData.from_json(X, adj.to_json())
