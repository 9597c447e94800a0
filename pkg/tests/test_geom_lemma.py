import pytest

from parind import PreconditionError, build, d_w, dml, graded_pieces, heights, orbit_dim, weyl_group
from parind.geom_lemma import check_dw_dim, closure_leq
from parind.jh_lattice import subsets_between


def _w(rd, word):
    return weyl_group(rd).from_word(word)


def test_closure_order_examples():
    a1 = build("A1")
    G = weyl_group(a1)
    s, e = G.simple(0), G.identity
    assert closure_leq(a1, (), (), s, e)
    assert not closure_leq(a1, (), (), e, s)
    a2 = build("A2")
    for w in weyl_group(a2):
        assert closure_leq(a2, (), (), weyl_group(a2).longest, w)
        assert closure_leq(a2, (), (), w, w)
    with pytest.raises(PreconditionError):
        closure_leq(a2, {0}, (), _w(a2, [0]), _w(a2, []))


def test_orbit_dims_a1():
    rd = build("A1", z_dim=1)
    G = weyl_group(rd)
    assert orbit_dim(rd, (), (), G.simple(0)) == 3 == rd.dim_G()
    assert orbit_dim(rd, (), (), G.identity) == 2


def test_orbit_dims_a2_are_bruhat_cells():
    rd = build("A2")
    for w in weyl_group(rd):
        assert orbit_dim(rd, (), (), w) == 5 + w.length


@pytest.mark.parametrize("name,d", [("A2", None), ("B2", [1, 2]), ("G2", None), ("A3", None)])
def test_orbit_dims_monotone_and_open_orbit_is_dense(name, d):
    rd = build(name, d=d)
    for I in subsets_between((), rd.delta):
        for K in subsets_between((), rd.delta):
            reps = dml(rd, I, K)
            dims = {w: orbit_dim(rd, I, K, w) for w in reps}
            assert max(dims.values()) == rd.dim_G()
            for v in reps:
                for w in reps:
                    if closure_leq(rd, I, K, v, w):
                        assert dims[v] >= dims[w]


def test_full_parabolics_give_one_orbit():
    rd = build("B2")
    h = heights(rd, rd.delta, rd.delta)
    assert list(h.values()) == [1]
    assert orbit_dim(rd, rd.delta, rd.delta, weyl_group(rd).identity) == rd.dim_G()


def test_heights_examples():
    a1 = build("A1")
    G = weyl_group(a1)
    assert heights(a1, (), ()) == {G.simple(0): 1, G.identity: 2}
    a2 = build("A2")
    h = {repr(w): v for w, v in heights(a2, (), ()).items()}
    assert h == {"s1s2s1": 1, "s1s2": 2, "s2s1": 2, "s1": 3, "s2": 3, "e": 4}


def test_graded_pieces_a1():
    rd = build("A1")
    F = graded_pieces(rd, (), ())
    assert F.length == 2
    (top,), (bottom,) = F.groups
    assert (repr(top.w), top.shift, top.delta.cyclo) == ("s1", -1, (1,))
    assert (repr(bottom.w), bottom.shift) == ("e", 0)


def test_graded_pieces_a2_parabolic():
    rd = build("A2")
    pieces = graded_pieces(rd, {0}, ()).pieces()
    assert sorted((p.w.word, p.shift) for p in pieces) == [((), 0), ((1,), -1), ((1, 0), -2)]
    for p in pieces:
        assert p.coinv_levi <= {0} and p.ind_levi == frozenset()


def test_single_piece_for_full_parabolics():
    rd = build("G2")
    (piece,) = graded_pieces(rd, rd.delta, rd.delta).pieces()
    assert piece.w == weyl_group(rd).identity and piece.shift == 0 and piece.delta.is_trivial()
    assert piece.coinv_levi == rd.delta == piece.ind_levi


def test_shifts_scale_with_f():
    rd = build("B2", d=[1, 2], f=3)
    for p in graded_pieces(rd, (), ()).pieces():
        assert p.shift == -3 * d_w(rd, p.w)


def test_check_dw_dim_examples():
    rd = build("A1", f=2)
    G = weyl_group(rd)
    assert check_dw_dim(rd, (), (), G.identity).lhs == 0
    cert = check_dw_dim(rd, (), (), G.simple(0))
    assert cert.holds and cert.lhs == cert.rhs == 2
