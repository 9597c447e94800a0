"""Decision procedures for Ext groups between parabolically induced representations.

Two query families are supported. Principal-series queries compare
``pInd_{P_I} chi`` with ``pInd_B chi'`` for characters; parabolic queries
compare ``pInd_{P_I} V`` with ``pInd_{P_K} W`` for abstract representations
described only by cuspidality and central-character flags. Every verdict
names the rule it came from; when no rule applies the answer is
``undetermined`` rather than a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .characters import SmoothCharacter, SymbolAction, chars_equal, delta_w, star
from .coinvariants import require_levi_character
from .errors import InputError
from .root_datum import RootDatum
from .weyl import Subset, WeylElement, check_subset, d_w, dml, root_subsystem, transport_subset, weyl_group

# verdict kinds
VANISHES = "vanishes"
DIMENSION = "dimension"
TRANSFERRED = "transferred_to_levi"
HOM_SUM = "hom_sum"
EXACT_SEQUENCE = "exact_sequence"
NECESSARY = "necessary_condition"
UNDETERMINED = "undetermined"

# rule tags
PS_NECESSARY = "ps-necessary-condition"
PS_GENERIC = "ps-generic-dimension"
EXT_INCOMPARABLE = "ext-incomparable-cuspidal"
EXT_EQUAL_LOW = "ext-equal-below-f"
EXT_EQUAL_TOP = "ext-equal-at-f-sequence"
EXT_EQUAL_TOP_CUSPIDAL = "ext-equal-at-f-cuspidal"
EXT_SUPER = "ext-proper-superset-left-cuspidal"
EXT_SUB = "ext-proper-subset-right-cuspidal"
NO_RULE = "no-rule"


@dataclass(frozen=True)
class SpecialSets:
    delta1: Subset  # simple roots whose root group has F-dimension 1
    perp: Subset  # simple roots orthogonal to every root of I
    perp1: Subset


def special_sets(rd: RootDatum, I) -> SpecialSets:
    I = check_subset(rd, I)
    delta1 = frozenset(i for i in range(rd.rank) if rd.d[i] == 1)
    perp = frozenset(a for a in range(rd.rank) if all(rd.pairing(rd.simple_root(a), b) == 0 for b in I))
    return SpecialSets(delta1, perp, perp & delta1)


# --------------------------------------------------------------------------
# cohomology of the minimal Levi


@dataclass(frozen=True)
class TorusAssumptions:
    """Hypotheses under which ``H^*(Z, k)`` is an exterior algebra.

    ``Z`` split (so ``Z ≅ (F^×)^z_dim``), ``p`` odd, and no nontrivial
    ``p``-th roots of unity in ``F``.
    """

    split: bool = False
    p_odd: bool = False
    no_pth_roots_of_unity: bool = False

    @classmethod
    def all(cls) -> "TorusAssumptions":
        return cls(True, True, True)

    def hold(self) -> bool:
        return self.split and self.p_odd and self.no_pth_roots_of_unity


def split_torus_poincare(torus_rank: int, f: int) -> tuple[int, ...]:
    """Coefficients of ``(1 + t)^(torus_rank * (f + 1))``."""
    n = torus_rank * (f + 1)
    return tuple(math.comb(n, i) for i in range(n + 1))


def torus_poincare(rd: RootDatum, assumptions: TorusAssumptions) -> tuple[int, ...] | None:
    """Poincaré polynomial of ``H^*(Z, k)``, or ``None`` when the assumptions fail."""
    if not assumptions.hold():
        return None
    return split_torus_poincare(rd.z_dim, rd.f)


def torus_cohomology_dim(rd: RootDatum, degree: int, assumptions: TorusAssumptions) -> int | None:
    poly = torus_poincare(rd, assumptions)
    if poly is None:
        return None
    return poly[degree] if 0 <= degree < len(poly) else 0


# --------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class LeviExt:
    """``Ext^degree_{M_levi}(source, target)``; ``*_induced_from`` marks a parabolic induction inside ``M_levi``."""

    levi: Subset
    degree: int
    source_induced_from: Subset | None = None
    target_induced_from: Subset | None = None


@dataclass(frozen=True)
class HomSummand:
    """``Hom_{M_levi}(delta_alpha ⊗ n_alpha^{-1} V', W')`` for one simple root ``alpha``."""

    alpha: int
    twist: SmoothCharacter
    levi: Subset


@dataclass(frozen=True)
class ExtPrediction:
    kind: str
    rule: str
    dimension: int | None = None
    candidates: tuple[WeylElement, ...] = ()
    levi_ext: LeviExt | None = None
    hom_summands: tuple[HomSummand, ...] = ()
    # exact sequence 0 -> Ext^f_M -> Ext^f_G -> X -> Ext^{f+1}_M; X is hom_summands
    sequence_degree: int | None = None
    notes: tuple[str, ...] = field(default=())


def undetermined(note: str) -> ExtPrediction:
    return ExtPrediction(UNDETERMINED, NO_RULE, notes=(note,))


def distinct_central_characters(a: SmoothCharacter, b: SmoothCharacter) -> bool:
    """A central element acting by different scalars kills every Ext group."""
    return not chars_equal(a, b)


def predict_ps_ext(
    rd: RootDatum,
    I,
    chi: SmoothCharacter,
    chi_prime: SmoothCharacter,
    r: int,
    assumptions: TorusAssumptions | None = None,
    action: SymbolAction | None = None,
) -> ExtPrediction:
    """``Ext^r_G(pInd_{P_I} chi, pInd_B chi')``.

    Candidates are the ``w`` in ``D_{I,∅}`` with ``chi' = chi ⋆ w`` and
    ``f * d_w <= r``; without one the group vanishes. If ``chi`` is generic
    (``chi ⋆ w != chi`` for ``w != e``), ``chi'`` matches exactly one ``w`` and
    the torus cohomology is known, the dimension is ``dim H^{r - f d_w}(Z, k)``.
    """
    I = check_subset(rd, I)
    if not isinstance(r, int) or r < 0:
        raise InputError(f"degree must be a nonnegative integer, got {r!r}")
    require_levi_character(rd, I, chi, action)
    reps = dml(rd, I, ())
    twisted = {w: star(rd, chi, w, action) for w in reps}
    matches = [w for w in reps if chars_equal(chi_prime, twisted[w])]
    qualifying = tuple(w for w in matches if rd.f * d_w(rd, w) <= r)
    if not qualifying:
        return ExtPrediction(VANISHES, PS_NECESSARY, dimension=0)
    generic = all(not chars_equal(twisted[w], chi) for w in reps if w.length > 0)
    if generic and len(matches) == 1:
        (w,) = qualifying
        dim = torus_cohomology_dim(rd, r - rd.f * d_w(rd, w), assumptions or TorusAssumptions())
        if dim is not None:
            return ExtPrediction(DIMENSION, PS_GENERIC, dimension=dim, candidates=qualifying)
        return ExtPrediction(NECESSARY, PS_NECESSARY, candidates=qualifying, notes=("torus cohomology not evaluated",))
    return ExtPrediction(NECESSARY, PS_NECESSARY, candidates=qualifying)


@dataclass(frozen=True)
class ExtQuery:
    I: Subset
    K: Subset
    r: int
    left_cuspidal: bool = False  # V
    right_cuspidal: bool = False  # W
    distinct_central_characters: bool | None = None
    central_v: SmoothCharacter | None = None
    central_w: SmoothCharacter | None = None

    def resolved_distinct(self) -> bool:
        derived = None
        if self.central_v is not None and self.central_w is not None:
            derived = distinct_central_characters(self.central_v, self.central_w)
        if self.distinct_central_characters is None:
            return bool(derived)
        if derived is not None and derived != self.distinct_central_characters:
            raise InputError("distinct-central-character flag contradicts the given central characters")
        return self.distinct_central_characters


def containment(I: Subset, K: Subset) -> str:
    if I == K:
        return "equal"
    if I < K:
        return "sub"
    if I > K:
        return "super"
    return "incomparable"


def _twist_summands(rd: RootDatum, I: Subset, alphas) -> tuple[HomSummand, ...]:
    G = weyl_group(rd)
    out = []
    for a in sorted(alphas):
        s = G.simple(a)
        out.append(HomSummand(alpha=a, twist=delta_w(rd, s), levi=I & transport_subset(rd, s, I)))
    return tuple(out)


def predict_parabolic_ext(rd: RootDatum, query: ExtQuery) -> ExtPrediction:
    """``Ext^r_G(pInd_{P_I} V, pInd_{P_K} W)`` from containment, flags and degree."""
    I, K = check_subset(rd, query.I), check_subset(rd, query.K)
    r, f = query.r, rd.f
    if not isinstance(r, int) or r < 0:
        raise InputError(f"degree must be a nonnegative integer, got {r!r}")
    distinct = query.resolved_distinct()
    rel = containment(I, K)

    if rel == "incomparable":
        if query.left_cuspidal and query.right_cuspidal and r == 1:
            return ExtPrediction(VANISHES, EXT_INCOMPARABLE, dimension=0)
        return undetermined("incomparable parabolics: only degree 1 with both cuspidality flags is covered")

    if rel == "equal":
        if r < f:
            return ExtPrediction(TRANSFERRED, EXT_EQUAL_LOW, levi_ext=LeviExt(levi=I, degree=r))
        if r == f:
            sets = special_sets(rd, I)
            if (query.left_cuspidal or query.right_cuspidal) and distinct:
                return ExtPrediction(HOM_SUM, EXT_EQUAL_TOP_CUSPIDAL, hom_summands=_twist_summands(rd, I, sets.perp1))
            return ExtPrediction(
                EXACT_SEQUENCE,
                EXT_EQUAL_TOP,
                levi_ext=LeviExt(levi=I, degree=f),
                hom_summands=_twist_summands(rd, I, sets.delta1 - I),
                sequence_degree=f,
            )
        return undetermined("equal parabolics above degree f")

    if rel == "super":
        if query.left_cuspidal and r <= f:
            return ExtPrediction(TRANSFERRED, EXT_SUPER, levi_ext=LeviExt(levi=I, degree=r, target_induced_from=K))
        return undetermined("P ⊋ Q needs V left cuspidal and r <= f")

    if query.right_cuspidal and r <= f:
        return ExtPrediction(TRANSFERRED, EXT_SUB, levi_ext=LeviExt(levi=K, degree=r, source_induced_from=I))
    return undetermined("P ⊊ Q needs W right cuspidal and r <= f")


# --------------------------------------------------------------------------
# root-level claim behind the incomparable case


@dataclass(frozen=True)
class ClaimCertificate:
    checked: int
    counterexamples: tuple[tuple[Subset, Subset, int], ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def claim_check(rd: RootDatum) -> ClaimCertificate:
    """If ``M ∩ n_α(N)`` and ``n_α⁻¹(U) ∩ L`` are trivial for a simple ``α``, then ``I = K``.

    Tested exhaustively over all pairs of subsets and all simple roots at the
    level of root sets.
    """
    from .jh_lattice import subsets_between

    G = weyl_group(rd)
    positive = frozenset(rd.positive_roots)
    subsets = subsets_between((), rd.delta)
    checked = 0
    bad = []
    for I in subsets:
        sigma_m = root_subsystem(rd, I)
        sigma_u = positive - sigma_m
        for K in subsets:
            sigma_l = root_subsystem(rd, K)
            sigma_n = positive - sigma_l
            for a in range(rd.rank):
                s = G.simple(a)
                checked += 1
                m_meets_n = any(G.act(s, b) in sigma_m for b in sigma_n)
                # s_α is an involution, so s_α⁻¹(Σ_U) = s_α(Σ_U)
                u_meets_l = any(G.act(s, b) in sigma_l for b in sigma_u)
                if not m_meets_n and not u_meets_l and I != K:
                    bad.append((I, K, a))
    return ClaimCertificate(checked, tuple(bad))
