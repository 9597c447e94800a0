"""Derived coinvariants of principal series and generalized Steinberg representations.

Results are returned as ``{j: [SummandDescriptor, ...]}`` where ``j >= 0`` and
the summands sit in cohomological degree ``-j``. Only degrees with at least one
summand appear.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .characters import FORMAL, SmoothCharacter, SymbolAction, apply_weyl, chars_equal, delta_w, star, trivial
from .errors import PreconditionError
from .jh_lattice import build_complex, cohomology, subsets_between
from .root_datum import RootDatum
from .weyl import Subset, WeylElement, check_subset, d_w, dml, i_of_w, kilmoyer, require_dml, transport_subset, weyl_group


@dataclass(frozen=True)
class SteinbergLabel:
    """``Sp_{P_base}^{M_ambient}``."""

    ambient: Subset
    base: Subset


@dataclass(frozen=True)
class SummandDescriptor:
    degree: int  # -j
    w: WeylElement
    ind_levi: Subset  # Levi of the inducing parabolic inside M_K
    character: SmoothCharacter
    constituent: SteinbergLabel | None = None


def _group(rows: list[SummandDescriptor]) -> dict[int, list[SummandDescriptor]]:
    out: dict[int, list[SummandDescriptor]] = {}
    for row in rows:
        out.setdefault(-row.degree, []).append(row)
    return dict(sorted(out.items()))


def require_levi_character(rd: RootDatum, I, chi: SmoothCharacter, action: SymbolAction | None) -> None:
    G = weyl_group(rd)
    for i in I:
        if not chars_equal(apply_weyl(rd, G.simple(i), chi, action), chi):
            raise PreconditionError(f"character {chi!r} is not invariant under s{i + 1}, so it does not come from M_I")


def ps_coinvariants(
    rd: RootDatum, I, K, chi: SmoothCharacter, action: SymbolAction | None = None
) -> dict[int, list[SummandDescriptor]]:
    """Cohomology of ``L(U_K, pInd_{P_I}^G chi)`` as a sum of parabolic inductions."""
    I, K = check_subset(rd, I), check_subset(rd, K)
    require_levi_character(rd, I, chi, action)
    G = weyl_group(rd)
    rows = []
    for w in dml(rd, I, K):
        rows.append(
            SummandDescriptor(
                degree=-rd.f * d_w(rd, w),
                w=w,
                ind_levi=K & transport_subset(rd, G.inverse(w), I),
                character=star(rd, chi, w, action),
            )
        )
    return _group(rows)


def steinberg_condition(rd: RootDatum, I, K, w: WeylElement) -> bool:
    """``I(w) \\ I ⊆ w(K)``."""
    return i_of_w(rd, w) - frozenset(I) <= transport_subset(rd, w, K)


def steinberg_coinvariants(rd: RootDatum, I, K, mode: str = FORMAL) -> dict[int, list[SummandDescriptor]]:
    """Cohomology of ``L(U_K, Sp_{P_I}^G)``."""
    I, K = check_subset(rd, I), check_subset(rd, K)
    G = weyl_group(rd)
    rows = []
    for w in dml(rd, I, K):
        if not steinberg_condition(rd, I, K, w):
            continue
        Iw = i_of_w(rd, w)
        wK = transport_subset(rd, w, K)
        base = kilmoyer(rd, I, w, K).subset
        rows.append(
            SummandDescriptor(
                degree=-rd.f * d_w(rd, w),
                w=w,
                ind_levi=K & transport_subset(rd, G.inverse(w), Iw),
                character=delta_w(rd, w, mode),
                constituent=SteinbergLabel(ambient=Iw & wK, base=base),
            )
        )
    return _group(rows)


def steinberg_corollary(rd: RootDatum, I, mode: str = FORMAL) -> dict[int, list[SummandDescriptor]]:
    """The ``K = ∅`` case: one character ``delta_w`` per ``w`` in ``D_{I,∅}`` with ``I(w) = I``."""
    I = check_subset(rd, I)
    rows = [
        SummandDescriptor(degree=-rd.f * d_w(rd, w), w=w, ind_levi=frozenset(), character=delta_w(rd, w, mode))
        for w in dml(rd, I, ())
        if i_of_w(rd, w) == I
    ]
    return _group(rows)


@dataclass(frozen=True)
class ResolutionCertificate:
    w: WeylElement
    predicted: SteinbergLabel | None  # None when the summand is omitted
    h0: frozenset  # constituents of H^0 of the resolution complex
    exact_below_zero: bool
    d_squared_zero: bool

    @property
    def holds(self) -> bool:
        expected = frozenset() if self.predicted is None else frozenset({self.predicted.base})
        return self.exact_below_zero and self.d_squared_zero and self.h0 == expected


def verify_by_resolution(rd: RootDatum, I, K, w: WeylElement, order=None) -> ResolutionCertificate:
    """Recompute the ``w``-th column of the Steinberg spectral sequence from its complex.

    The complex ``C(w)`` lives over ``M_{I(w) ∩ w(K)}`` and is indexed by
    subsets of ``I(w) \\ I``; it must be exact below degree 0, and its ``H^0``
    must be the single constituent ``I ∩ w(K)`` exactly when the summand for
    ``w`` is emitted.
    """
    I, K = check_subset(rd, I), check_subset(rd, K)
    require_dml(rd, w, I, K)
    Iw = i_of_w(rd, w)
    ambient = Iw & transport_subset(rd, w, K)
    cx = build_complex(rd, I0=I, I1=Iw, I=I, K=ambient, order=order)
    groups = cohomology(cx)
    h0 = next(g for g in groups if g.degree == 0)
    predicted = None
    if steinberg_condition(rd, I, K, w):
        predicted = SteinbergLabel(ambient=ambient, base=kilmoyer(rd, I, w, K).subset)
    return ResolutionCertificate(
        w=w,
        predicted=predicted,
        h0=frozenset(S for S, _ in h0.constituents),
        exact_below_zero=all(g.dim == 0 for g in groups if g.degree < 0),
        d_squared_zero=cx.d_squared_zero(),
    )


def e1_euler_counts(rd: RootDatum, I, K) -> Counter:
    """Alternating constituent counts along each row of the first page.

    Row ``-j`` of the page is ``⊕_{J ⊇ I} L^{-j}(U_K, pInd_{P_J}^G)`` in column
    ``-|J \\ I|``. Each summand ``pInd(delta_w)`` is expanded into Steinberg
    constituents of ``M_{I(w) ∩ w(K)}``; keys are ``(j, w, T)``.
    """
    I, K = check_subset(rd, I), check_subset(rd, K)
    counts: Counter = Counter()
    for J in subsets_between(I, rd.delta):
        sign = -1 if len(J - I) % 2 else 1
        for j, rows in ps_coinvariants(rd, J, K, trivial(rd)).items():
            for row in rows:
                ambient = i_of_w(rd, row.w) & transport_subset(rd, row.w, K)
                base = transport_subset(rd, row.w, row.ind_levi)
                for T in subsets_between(base, ambient):
                    counts[(j, row.w, T)] += sign
    return Counter({k: v for k, v in counts.items() if v})


def steinberg_counts(rd: RootDatum, I, K) -> Counter:
    return Counter(
        {(j, row.w, row.constituent.base): 1 for j, rows in steinberg_coinvariants(rd, I, K).items() for row in rows}
    )
