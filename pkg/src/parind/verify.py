"""Property suites run by ``parind verify``.

Each suite walks its parameter space in a fixed order and stops at the first
counterexample, which is reported with every parameter needed to reproduce it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator

from .characters import alpha_w, character, chars_equal, delta_w, is_twisting, rho, star, tensor
from .coinvariants import e1_euler_counts, steinberg_counts, verify_by_resolution
from .ext_predictor import claim_check
from .geom_lemma import check_dw_dim, graded_pieces, heights
from .jh_lattice import build_complex, cohomology, subsets_between
from .oracles import double_coset_count
from .root_datum import RootDatum, Weight
from .weyl import d_w, dml, kilmoyer, weyl_group

# (name, params) for a failure; None when the case passes
Check = tuple[str, dict] | None


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _names(S) -> list[str]:
    return [f"a{i + 1}" for i in sorted(S)]


def _word(w) -> list[int]:
    return [i + 1 for i in w.word]


def _pairs(rd: RootDatum):
    subsets = subsets_between((), rd.delta)
    return [(I, K) for I in subsets for K in subsets]


def _run(name: str, cases: Iterator[Check]) -> SuiteResult:
    out = SuiteResult(name)
    for failure in cases:
        out.checked += 1
        if failure is not None:
            what, params = failure
            out.counterexample = {"check": what, **params}
            break
    return out


# --------------------------------------------------------------------------
# suites


def _dw_dim(rd: RootDatum) -> Iterator[Check]:
    for I, K in _pairs(rd):
        for w in dml(rd, I, K):
            cert = check_dw_dim(rd, I, K, w)
            yield None if cert.holds else (
                "f*d_w == dim(n_w^-1(Ubar) ∩ N)",
                {"I": _names(I), "K": _names(K), "w": _word(w), "lhs": cert.lhs, "rhs": cert.rhs},
            )


def _probe_characters(rd: RootDatum):
    out = [character(rd)]
    out += [character(rd, cyclo=rd.simple_root(i)) for i in range(rd.rank)]
    out.append(character(rd, cyclo=[i + 2 for i in range(rd.rank)], sym={"u": 1}))
    return out


def _cocycle(rd: RootDatum) -> Iterator[Check]:
    G = weyl_group(rd)
    r = rho(rd)
    alpha = {w: alpha_w(rd, w) for w in G}
    for i in range(rd.rank):
        got = rd.pairing(r, i)
        yield None if got == rd.d[i] else ("<rho, alpha_i^vee> == d_i", {"i": i + 1, "pairing": str(got)})
    for w in G:
        winv = G.inverse(w)
        yield None if alpha[w] == r - G.act(winv, r) else ("alpha_w == rho - w^-1 rho", {"w": _word(w)})
    for v in G:
        for w in G:
            winv = G.inverse(w)
            rhs = alpha[w] + G.act(winv, alpha[v])
            yield None if alpha[G.mul(v, w)] == rhs else (
                "alpha_vw == alpha_w + w^-1 alpha_v",
                {"v": _word(v), "w": _word(w)},
            )
    seen: dict = {}
    for w in G:
        other = seen.setdefault(alpha[w], w)
        yield None if other == w else ("w -> alpha_w injective", {"v": _word(other), "w": _word(w)})
    # ρ is a twisting element, so α_w = θ − w⁻¹θ with θ = ρ
    theta = r
    yield None if is_twisting(rd, theta) else ("rho is twisting", {})
    for w in G:
        yield None if alpha[w] == theta - G.act(G.inverse(w), theta) else (
            "alpha_w == theta - w^-1 theta",
            {"w": _word(w)},
        )
    for chi in _probe_characters(rd):
        for v in G:
            for w in G:
                lhs = star(rd, star(rd, chi, v), w)
                rhs = star(rd, chi, G.mul(v, w))
                yield None if chars_equal(lhs, rhs) else (
                    "(chi*v)*w == chi*(vw)",
                    {"chi": repr(chi), "v": _word(v), "w": _word(w)},
                )
    for v in G:
        for w in G:
            lhs = delta_w(rd, G.mul(v, w))
            rhs = tensor(delta_w(rd, w), character(rd, cyclo=G.act(G.inverse(w), Weight(alpha[v]))))
            yield None if chars_equal(lhs, rhs) else ("delta_vw == delta_w w^-1(delta_v)", {"v": _word(v), "w": _word(w)})


def _cosets(rd: RootDatum) -> Iterator[Check]:
    for I, K in _pairs(rd):
        ours, brute = len(dml(rd, I, K)), double_coset_count(rd, I, K)
        yield None if ours == brute else (
            "|D_I,K| == #(W_I \\ W / W_K)",
            {"I": _names(I), "K": _names(K), "representatives": ours, "orbits": brute},
        )


def _kilmoyer(rd: RootDatum) -> Iterator[Check]:
    for J, K in _pairs(rd):
        for w in dml(rd, J, K):
            yield None if kilmoyer(rd, J, w, K).holds else (
                "Σ_J ∩ w(Σ_K) == Σ_{J ∩ w(K)}",
                {"J": _names(J), "K": _names(K), "w": _word(w)},
            )


def _claim(rd: RootDatum) -> Iterator[Check]:
    cert = claim_check(rd)
    if cert.holds:
        yield from (None for _ in range(cert.checked))
        return
    I, K, a = cert.counterexamples[0]
    yield ("root-level conditions force I == K", {"I": _names(I), "K": _names(K), "alpha": f"a{a + 1}"})


def coefficient_parameters(rd: RootDatum):
    """All ``(I0, I1, I, K)`` with ``I, K ⊆ I1``."""
    subsets = subsets_between((), rd.delta)
    for I0 in subsets:
        for I1 in subsets:
            inner = subsets_between((), I1)
            for I in inner:
                for K in inner:
                    yield I0, I1, I, K


def check_coefficient_complex(rd: RootDatum, I0, I1, I, K, order=None) -> Check:
    cx = build_complex(rd, I0, I1, I, K, order)
    if not cx.d_squared_zero():
        what = "d∘d == 0"
    elif any(g.dim for g in cohomology(cx) if g.degree < 0):
        what = "H^{<0} == 0"
    else:
        return None
    params = {"I0": _names(I0), "I1": _names(I1), "I": _names(I), "K": _names(K)}
    params["order"] = [i + 1 for i in cx.order]
    return what, params


def _coefficient(rd: RootDatum, sample: int = 200, seed: int = 0) -> Iterator[Check]:
    params = list(coefficient_parameters(rd))
    if rd.rank <= 2:
        for order in permutations(range(rd.rank)):
            for I0, I1, I, K in params:
                yield check_coefficient_complex(rd, I0, I1, I, K, order)
        return
    rng = random.Random(seed)
    for _ in range(sample):
        I0, I1, I, K = rng.choice(params)
        order = tuple(rng.sample(range(rd.rank), rd.rank))
        yield check_coefficient_complex(rd, I0, I1, I, K, order)


def _steinberg(rd: RootDatum) -> Iterator[Check]:
    for I, K in _pairs(rd):
        for w in dml(rd, I, K):
            cert = verify_by_resolution(rd, I, K, w)
            yield None if cert.holds else (
                "resolution complex matches the Steinberg summand",
                {"I": _names(I), "K": _names(K), "w": _word(w)},
            )
        yield None if e1_euler_counts(rd, I, K) == steinberg_counts(rd, I, K) else (
            "E1 Euler bookkeeping",
            {"I": _names(I), "K": _names(K)},
        )


def _heights(rd: RootDatum) -> Iterator[Check]:
    G = weyl_group(rd)
    if all(x == 1 for x in rd.d):
        top = G.longest.length
        for w, h in heights(rd, (), ()).items():
            yield None if h == top - w.length + 1 else (
                "height == l(w0) - l(w) + 1",
                {"w": _word(w), "height": h},
            )
    for I, K in _pairs(rd):
        reps = dml(rd, I, K)
        pieces = graded_pieces(rd, I, K).pieces()
        ok = len(pieces) == len(reps) and sorted(p.shift for p in pieces) == sorted(-rd.f * d_w(rd, w) for w in reps)
        yield None if ok else ("one graded piece per w with shift -f*d_w", {"I": _names(I), "K": _names(K)})


SUITES: dict[str, Callable[[RootDatum], Iterator[Check]]] = {
    "dw_dim": _dw_dim,
    "cocycle": _cocycle,
    "cosets": _cosets,
    "kilmoyer": _kilmoyer,
    "claim": _claim,
    "coefficient": _coefficient,
    "steinberg": _steinberg,
    "heights": _heights,
}


def run_suite(rd: RootDatum, name: str) -> SuiteResult:
    return _run(name, SUITES[name](rd))


def run_suites(rd: RootDatum, names: list[str] | None = None) -> list[SuiteResult]:
    return [run_suite(rd, n) for n in (names or list(SUITES))]

