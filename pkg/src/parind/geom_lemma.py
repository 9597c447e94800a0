"""Orbit combinatorics of ``P_I \\ G / P_K`` and the graded pieces of the filtration.

Orbits are indexed by ``D_{I,K}``. The closure order ``n <= n'`` (the orbit of
``n'`` lies in the closure of the orbit of ``n``) is reverse Bruhat order on
these minimal representatives. Dimensions are F-dimensions; cohomological
shifts are reported over ``Q_p``, i.e. multiplied by ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import FORMAL, SmoothCharacter, delta_w
from .errors import PreconditionError
from .root_datum import RootDatum
from .weyl import (
    Subset,
    WeylElement,
    bruhat_leq,
    check_subset,
    d_w,
    dml,
    in_dml,
    inversion_set,
    kilmoyer,
    positive_subsystem,
    require_dml,
    root_subsystem,
    transport_subset,
    weyl_group,
)


def closure_leq(rd: RootDatum, I, K, w: WeylElement, w2: WeylElement) -> bool:
    """True iff the orbit of ``w2`` lies in the closure of the orbit of ``w``."""
    for x in (w, w2):
        if not in_dml(rd, x, I, K):
            raise PreconditionError(f"{x!r} is not in D_I,K")
    return bruhat_leq(rd, w2, w)


def _parabolic_roots(rd: RootDatum, subset) -> frozenset:
    return frozenset(rd.positive_roots) | root_subsystem(rd, subset)


def _dim_from_roots(rd: RootDatum, roots) -> int:
    return rd.z_dim + sum(rd.root_d(b) for b in roots)


def orbit_dim(rd: RootDatum, I, K, w: WeylElement) -> int:
    """F-dimension of ``P_I n_w P_K``: ``dim P + dim Q - dim(P ∩ w(Q))``."""
    I, K = check_subset(rd, I), check_subset(rd, K)
    require_dml(rd, w, I, K)
    G = weyl_group(rd)
    p_roots = _parabolic_roots(rd, I)
    q_roots = _parabolic_roots(rd, K)
    meet = p_roots & frozenset(G.act(w, b) for b in q_roots)
    return _dim_from_roots(rd, p_roots) + _dim_from_roots(rd, q_roots) - _dim_from_roots(rd, meet)


def heights(rd: RootDatum, I, K) -> dict[WeylElement, int]:
    """Peel off, step by step, the open orbits of maximal dimension."""
    remaining = list(dml(rd, I, K))
    dims = {w: orbit_dim(rd, I, K, w) for w in remaining}
    out: dict[WeylElement, int] = {}
    step = 0
    while remaining:
        step += 1
        # open in the remaining closed set = no remaining orbit has it in its closure
        open_ = [w for w in remaining if not any(v != w and bruhat_leq(rd, w, v) for v in remaining)]
        top = max(dims[w] for w in open_)
        for w in open_:
            if dims[w] == top:
                out[w] = step
        remaining = [w for w in remaining if w not in out]
    return out


@dataclass(frozen=True)
class GradedPiece:
    w: WeylElement
    shift: int  # -f * d_w
    delta: SmoothCharacter
    coinv_levi: Subset  # I ∩ w(K), Levi of M ∩ n(Q) inside M
    ind_levi: Subset  # w⁻¹(I) ∩ K, Levi of the inducing parabolic inside L
    height: int


@dataclass(frozen=True)
class Filtration:
    I: Subset
    K: Subset
    groups: tuple[tuple[GradedPiece, ...], ...]  # groups[i] holds the pieces of height i + 1

    @property
    def length(self) -> int:
        return len(self.groups)

    def pieces(self) -> list[GradedPiece]:
        return [p for g in self.groups for p in g]


def graded_pieces(rd: RootDatum, I, K, mode: str = FORMAL) -> Filtration:
    """One graded piece per ``w`` in ``D_{I,K}``, grouped by height."""
    I, K = check_subset(rd, I), check_subset(rd, K)
    G = weyl_group(rd)
    h = heights(rd, I, K)
    pieces = []
    for w in dml(rd, I, K):
        cert = kilmoyer(rd, I, w, K)
        if not cert.holds:
            raise AssertionError(f"root-set intersection identity fails at {w!r}")
        ind_levi = transport_subset(rd, G.inverse(w), cert.subset)
        if ind_levi != K & transport_subset(rd, G.inverse(w), I):
            raise AssertionError(f"inducing Levi mismatch at {w!r}")
        pieces.append(
            GradedPiece(
                w=w,
                shift=-rd.f * d_w(rd, w),
                delta=delta_w(rd, w, mode),
                coinv_levi=cert.subset,
                ind_levi=ind_levi,
                height=h[w],
            )
        )
    r = max(h.values())
    groups = tuple(tuple(p for p in pieces if p.height == i) for i in range(1, r + 1))
    return Filtration(I=I, K=K, groups=groups)


@dataclass(frozen=True)
class DimCertificate:
    w: WeylElement
    lhs: int  # f * d_w
    rhs: int  # f * sum of d over Σ_N ∩ w⁻¹(Σ_Ū)
    roots_equal: bool

    @property
    def holds(self) -> bool:
        return self.roots_equal and self.lhs == self.rhs


def check_dw_dim(rd: RootDatum, I, K, w: WeylElement) -> DimCertificate:
    """Compare ``f * d_w`` with the dimension of ``n_w⁻¹(Ū) ∩ N`` computed from roots."""
    I, K = check_subset(rd, I), check_subset(rd, K)
    require_dml(rd, w, I, K)
    G = weyl_group(rd)
    sigma_n = frozenset(rd.positive_roots) - positive_subsystem(rd, K)
    sigma_ubar = frozenset(tuple(-c for c in b) for b in frozenset(rd.positive_roots) - positive_subsystem(rd, I))
    # β ∈ w⁻¹(Σ_Ū)  iff  w(β) ∈ Σ_Ū
    meet = frozenset(b for b in sigma_n if G.act(w, b) in sigma_ubar)
    inv = inversion_set(rd, w)
    return DimCertificate(
        w=w,
        lhs=rd.f * d_w(rd, w),
        rhs=rd.f * sum(rd.root_d(b) for b in meet),
        roots_equal=meet == inv,
    )
