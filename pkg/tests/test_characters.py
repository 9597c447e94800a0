from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parind import InputError, ModeError, alpha_w, build, character, chars_equal, delta_w, rho, star, trivial, weyl_group
from parind.characters import CONCRETE, SymbolAction, apply_weyl, dual, is_twisting, tensor
from parind.root_datum import Weight

RANK3 = ["A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"]


def test_alpha_examples():
    a1, a2 = build("A1"), build("A2")
    G = weyl_group(a2)
    assert alpha_w(a2, G.identity) == (0, 0)
    assert alpha_w(a1, weyl_group(a1).simple(0)) == (1,)
    assert alpha_w(a2, G.longest) == (2, 2)


def test_rho_examples():
    assert rho(build("A1")) == (Fraction(1, 2),)
    assert rho(build("A2")) == (1, 1)
    assert rho(build("A1xA1")) == (Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize("name", RANK3)
def test_alpha_is_rho_difference_and_cocycle(name):
    rd = build(name)
    G = weyl_group(rd)
    r = rho(rd)
    for w in G:
        assert alpha_w(rd, w) == r - G.act(G.inverse(w), r)
        for v in G:
            assert alpha_w(rd, G.mul(v, w)) == alpha_w(rd, w) + G.act(G.inverse(w), alpha_w(rd, v))
    assert len({alpha_w(rd, w) for w in G}) == len(G)


@pytest.mark.parametrize("name,d", [("B2", [1, 2]), ("B3", [2, 2, 1]), ("G2", [1, 3])])
def test_rho_pairs_to_weights(name, d):
    rd = build(name, d=d)
    r = rho(rd)
    assert all(rd.pairing(r, i) == rd.d[i] for i in range(rd.rank))
    assert is_twisting(rd, r)


def test_twisting_examples():
    assert is_twisting(build("A2"), (1, 1))
    assert not is_twisting(build("A1"), (0,))
    assert is_twisting(build("A1"), Weight(["1/2"]))


def test_twisting_factorization():
    rd = build("B2", d=[1, 2])
    G = weyl_group(rd)
    # θ = ρ + (anything W-fixed) would do; here the pairing forces θ = ρ
    theta = rho(rd)
    for w in G:
        assert alpha_w(rd, w) == theta - G.act(G.inverse(w), theta)


def test_delta_examples():
    rd = build("A1", p=5)
    s = weyl_group(rd).simple(0)
    assert delta_w(rd, weyl_group(rd).identity).is_trivial()
    assert delta_w(rd, s, CONCRETE).cyclo == (1,)
    a2 = build("A2")
    assert delta_w(a2, weyl_group(a2).longest).cyclo == (2, 2)
    with pytest.raises(ModeError):
        delta_w(build("A1"), s, CONCRETE)


def test_star_example_mod_four():
    rd = build("A1", z_dim=2, p=5)
    s = weyl_group(rd).simple(0)
    chi = character(rd, cyclo=[2], mode=CONCRETE)
    # δ_s ⊗ s(χ): 1 + (-2) = -1 ≡ 3 mod 4
    assert star(rd, chi, s).cyclo == (3,)
    assert chars_equal(star(rd, chi, weyl_group(rd).identity), chi)


def test_star_of_trivial_is_delta():
    rd = build("G2")
    for w in weyl_group(rd):
        assert star(rd, trivial(rd), w).cyclo == alpha_w(rd, w)


def test_equality_modes():
    rd = build("A1", p=5)
    a = character(rd, cyclo=[1], mode=CONCRETE)
    b = character(rd, cyclo=[5], mode=CONCRETE)
    assert chars_equal(a, b)
    assert not chars_equal(character(rd, cyclo=[1]), character(rd, cyclo=[5]))
    assert not chars_equal(character(rd, sym={"u": 1}), character(rd, sym={"v": 1}))
    with pytest.raises(ModeError):
        chars_equal(a, character(rd, cyclo=[1]))


def test_concrete_reduction_is_idempotent():
    rd = build("A2", p=7)
    chi = character(rd, cyclo=[13, -4], mode=CONCRETE)
    assert chi.cyclo == (1, 2)
    assert character(rd, cyclo=chi.cyclo, mode=CONCRETE) == chi
    with pytest.raises(InputError):
        character(rd, cyclo=[Fraction(1, 2), 0], mode=CONCRETE)


def test_group_structure():
    rd = build("A2")
    chi = character(rd, cyclo=[1, 2], sym={"u": 3})
    assert tensor(chi, dual(chi)).is_trivial()
    with pytest.raises(InputError):
        character(rd, cyclo=[1])


SWAP = {"u": "v", "v": "u"}


def test_symbol_action_validation():
    b2 = build("B2")
    good = SymbolAction(frozenset({"u", "v"}), {0: SWAP, 1: SWAP})
    good.validate(b2)
    # in A2 the braid relation has odd length, so swapping under s1 only is not a W-action
    bad = SymbolAction(frozenset({"u", "v"}), {0: SWAP})
    with pytest.raises(InputError, match="Coxeter"):
        bad.validate(build("A2"))
    with pytest.raises(InputError):
        SymbolAction(frozenset({"u"}), {0: {"u": "w"}}).validate(b2)


def test_undeclared_symbol_rejected():
    rd = build("A1")
    action = SymbolAction(frozenset({"u"}), {0: {}})
    with pytest.raises(InputError, match="no declared"):
        apply_weyl(rd, weyl_group(rd).simple(0), character(rd, sym={"x": 1}), action)


B2 = build("B2", d=[1, 2])
B2_ACTION = SymbolAction(frozenset({"u", "v"}), {0: SWAP, 1: SWAP})
coeff = st.integers(min_value=-6, max_value=6)


@settings(max_examples=40, deadline=None)
@given(a=coeff, b=coeff, u=coeff, v=coeff)
def test_star_is_a_right_action_on_b2(a, b, u, v):
    G = weyl_group(B2)
    chi = character(B2, cyclo=[a, b], sym={"u": u, "v": v})
    for x in G:
        for y in G:
            lhs = star(B2, star(B2, chi, x, B2_ACTION), y, B2_ACTION)
            assert chars_equal(lhs, star(B2, chi, G.mul(x, y), B2_ACTION))


def test_shifted_action_matches_stepwise_transport():
    rd = build("A1")
    action = SymbolAction(frozenset({"u", "v"}), {0: SWAP}, {0: {"u": (1,), "v": (1,)}})
    action.validate(rd)
    s = weyl_group(rd).simple(0)
    chi = character(rd, cyclo=[0], sym={"u": 1})
    moved = apply_weyl(rd, s, chi, action)
    assert moved.sym == (("v", 1),) and moved.cyclo == (1,)
