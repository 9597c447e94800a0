import pytest

from parind import InputError, PreconditionError, bruhat_leq, build, d_w, dml, i_of_w, weyl_group
from parind.jh_lattice import subsets_between
from parind.oracles import bruhat_lower_set, double_coset_count, poly_mul, weyl_permutations
from parind.weyl import in_dml, inversion_set, kilmoyer, transport_subset

ORDERS = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48, "C3": 48, "A1xA1": 4}


@pytest.mark.parametrize("name,order", ORDERS.items())
def test_orders_match_permutation_group(name, order):
    rd = build(name)
    assert len(weyl_group(rd)) == order == len(weyl_permutations(rd))


def test_group_is_closed_with_identity():
    G = weyl_group(build("B2"))
    elems = set(G)
    assert G.identity in elems
    for v in G:
        assert G.mul(v, G.inverse(v)) == G.identity
        for w in G:
            assert G.mul(v, w) in elems


@pytest.mark.parametrize("name", ORDERS)
def test_lengths_and_inversion_sets(name):
    rd = build(name)
    G = weyl_group(rd)
    assert inversion_set(rd, G.identity) == frozenset()
    assert inversion_set(rd, G.longest) == frozenset(rd.positive_roots)
    for w in G:
        inv = inversion_set(rd, w)
        assert len(inv) == w.length
        # β ↦ −w(β) maps inv(w) onto inv(w⁻¹)
        assert {tuple(-c for c in G.act(w, b)) for b in inv} == inversion_set(rd, G.inverse(w))
        for v in G:
            assert G.mul(v, w).length <= v.length + w.length


def test_inversion_examples():
    rd = build("A2")
    G = weyl_group(rd)
    assert inversion_set(rd, G.from_word([1, 0])) == {(1, 0), (1, 1)}
    assert inversion_set(build("A1"), weyl_group(build("A1")).simple(0)) == {(1,)}


def test_d_w_examples():
    a1, a2 = build("A1"), build("A2")
    assert d_w(a1, weyl_group(a1).simple(0)) == 1
    assert d_w(a2, weyl_group(a2).longest) == 3
    for w in weyl_group(a2):
        assert d_w(a2, w) == w.length
    b2 = build("B2", d=[1, 2])
    assert d_w(b2, weyl_group(b2).longest) == 6


def test_canonical_words_are_lexicographically_least():
    G = weyl_group(build("A2"))
    assert G.longest.word == (0, 1, 0)
    assert G.from_word([1, 0, 1]) == G.longest
    assert repr(G.from_word([1, 0])) == "s2s1"
    with pytest.raises(InputError):
        G.from_word([3])


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3"])
def test_bruhat_matches_reflection_chains(name):
    rd = build(name)
    G = weyl_group(rd)
    for w in G:
        below = bruhat_lower_set(rd, w.matrix)
        for v in G:
            assert bruhat_leq(rd, v, w) == (v.matrix in below)


def test_bruhat_examples():
    rd = build("A2")
    G = weyl_group(rd)
    s1, s2 = G.simple(0), G.simple(1)
    assert bruhat_leq(rd, s1, G.from_word([0, 1]))
    assert not bruhat_leq(rd, s1, s2)
    for w in G:
        assert bruhat_leq(rd, G.identity, w) and bruhat_leq(rd, w, G.longest)


def test_dml_examples():
    rd = build("A2")
    G = weyl_group(rd)
    reps = dml(rd, {0}, ())
    assert [w.word for w in reps] == [(), (1,), (1, 0)]
    assert [d_w(rd, w) for w in reps] == [0, 1, 2]
    assert set(dml(rd, (), ())) == set(G)
    assert dml(rd, rd.delta, rd.delta) == [G.identity]
    with pytest.raises(InputError):
        dml(rd, {5}, ())


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_dml_counts_and_minimality(name):
    rd = build(name)
    G = weyl_group(rd)
    for I in subsets_between((), rd.delta):
        WI = G.parabolic(I)
        for K in subsets_between((), rd.delta):
            WK = G.parabolic(K)
            reps = dml(rd, I, K)
            assert len(reps) == double_coset_count(rd, I, K)
            for w in reps:
                coset = {G.mul(G.mul(u, w), v) for u in WI for v in WK}
                assert min(x.length for x in coset) == w.length
                assert [x for x in coset if x.length == w.length] == [w]


@pytest.mark.parametrize(
    "name,factors",
    [("A1", [[1, 1]]), ("A2", [[1, 1], [1, 1, 1]]), ("B2", [[1, 1], [1, 1, 1, 1]])],
)
def test_poincare_polynomial(name, factors):
    G = weyl_group(build(name))
    tally = [0] * (G.longest.length + 1)
    for w in G:
        tally[w.length] += 1
    expected = [1]
    for f in factors:
        expected = poly_mul(expected, f)
    assert tally == expected


def test_i_of_w():
    rd = build("A2")
    G = weyl_group(rd)
    assert i_of_w(rd, G.identity) == rd.delta
    assert i_of_w(rd, G.simple(0)) == {1}
    assert i_of_w(rd, G.longest) == frozenset()


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_i_of_w_is_the_largest_admissible_subset(name):
    rd = build(name)
    G = weyl_group(rd)
    for w in G:
        winv = G.inverse(w)
        ok = [J for J in subsets_between((), rd.delta) if in_dml(rd, winv, (), J)]
        assert max(ok, key=len) == i_of_w(rd, w)
        assert all(J <= i_of_w(rd, w) for J in ok)


def test_kilmoyer():
    rd = build("A2")
    G = weyl_group(rd)
    cert = kilmoyer(rd, {0}, G.identity, {1})
    assert cert.holds and cert.subset == frozenset()
    w = G.from_word([1, 0])
    assert w in dml(rd, {0}, {1})
    cert = kilmoyer(rd, {0}, w, {1})
    assert cert.holds and cert.subset == frozenset({0}) == {0} & transport_subset(rd, w, {1})
    with pytest.raises(PreconditionError):
        kilmoyer(rd, {0}, G.simple(0), ())
