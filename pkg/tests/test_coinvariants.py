import pytest

from parind import (
    PreconditionError,
    build,
    character,
    chars_equal,
    delta_w,
    ps_coinvariants,
    star,
    steinberg_coinvariants,
    steinberg_corollary,
    trivial,
    verify_by_resolution,
    weyl_group,
)
from parind.coinvariants import e1_euler_counts, steinberg_counts
from parind.jh_lattice import subsets_between
from parind.weyl import dml, i_of_w, transport_subset


def _flat(groups):
    return [(j, repr(s.w), s.ind_levi, s.character.cyclo, s.character.sym) for j, rows in groups.items() for s in rows]


def test_ps_a1():
    rd = build("A1")
    chi = character(rd, cyclo=[3], sym={"u": 1})
    out = ps_coinvariants(rd, (), (), chi)
    s = weyl_group(rd).simple(0)
    assert list(out) == [0, 1]
    assert chars_equal(out[0][0].character, chi)
    assert out[1][0].w == s and out[1][0].degree == -1
    assert out[1][0].character.cyclo == (1 - 3,)


def test_ps_full_k_is_identity():
    for name in ["A2", "B2", "G2"]:
        rd = build(name)
        for I in subsets_between((), rd.delta):
            chi = trivial(rd)
            out = ps_coinvariants(rd, I, rd.delta, chi)
            assert list(out) == [0]
            (row,) = out[0]
            assert row.w == weyl_group(rd).identity and row.ind_levi == I and chars_equal(row.character, chi)


def test_ps_a2_parabolic():
    rd = build("A2")
    out = ps_coinvariants(rd, {0}, (), trivial(rd))
    assert [(j, [repr(r.w) for r in rows]) for j, rows in out.items()] == [(0, ["e"]), (1, ["s2"]), (2, ["s2s1"])]


def test_ps_degrees_scale_with_f():
    rd = build("B2", d=[1, 2], f=2)
    for j, rows in ps_coinvariants(rd, (), (), trivial(rd)).items():
        for r in rows:
            assert r.degree == -j
            assert chars_equal(r.character, star(rd, trivial(rd), r.w))
    assert max(ps_coinvariants(rd, (), (), trivial(rd))) == 2 * 6


def test_ps_requires_levi_character():
    rd = build("A2")
    with pytest.raises(PreconditionError):
        ps_coinvariants(rd, {0}, (), character(rd, cyclo=[1, 0]))


def test_steinberg_examples():
    a1 = build("A1")
    out = steinberg_coinvariants(a1, (), ())
    assert list(out) == [1] and repr(out[1][0].w) == "s1"
    a2 = build("A2")
    out = steinberg_coinvariants(a2, (), ())
    assert list(out) == [3]
    (row,) = out[3]
    assert row.w == weyl_group(a2).longest and row.character.cyclo == (2, 2)
    full = steinberg_coinvariants(a2, a2.delta, ())
    assert list(full) == [0] and full[0][0].character.is_trivial()


def test_steinberg_full_k():
    rd = build("B2")
    for I in subsets_between((), rd.delta):
        out = steinberg_coinvariants(rd, I, rd.delta)
        assert list(out) == [0]
        (row,) = out[0]
        assert row.constituent.base == I and row.constituent.ambient == rd.delta


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_corollary_agrees(name):
    rd = build(name)
    for I in subsets_between((), rd.delta):
        full = steinberg_coinvariants(rd, I, ())
        cor = steinberg_corollary(rd, I)
        assert _flat(cor) == [(j, w, lev, c, sym) for j, w, lev, c, sym in _flat(full)]
        for rows in full.values():
            for r in rows:
                assert r.constituent.base == frozenset() == r.constituent.ambient


def test_ind_levi_of_steinberg_summands():
    rd = build("A3")
    G = weyl_group(rd)
    for I in subsets_between((), rd.delta):
        for K in subsets_between((), rd.delta):
            for rows in steinberg_coinvariants(rd, I, K).values():
                for r in rows:
                    assert r.ind_levi == K & transport_subset(rd, G.inverse(r.w), i_of_w(rd, r.w))
                    assert chars_equal(r.character, delta_w(rd, r.w))


def test_resolution_example():
    rd = build("A1")
    cert = verify_by_resolution(rd, (), (), weyl_group(rd).identity)
    assert cert.predicted is None and cert.h0 == frozenset() and cert.holds
    with pytest.raises(PreconditionError):
        verify_by_resolution(build("A2"), {0}, (), weyl_group(build("A2")).simple(0))


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A1xA1"])
def test_resolution_and_euler_exhaustive(name):
    rd = build(name)
    for I in subsets_between((), rd.delta):
        for K in subsets_between((), rd.delta):
            for w in dml(rd, I, K):
                assert verify_by_resolution(rd, I, K, w).holds
            assert e1_euler_counts(rd, I, K) == steinberg_counts(rd, I, K)
