"""Multiplicity-free Jordan-Hölder lattices and coefficient-system complexes.

A parabolic induction ``pInd_{P_S}^{M_K}(1)`` is modelled by its set of
constituents ``{J : S ⊆ J ⊆ K}`` (the generalized Steinberg representations).
Submodules of such a module are determined by their constituent sets, so
sums and intersections become unions and intersections.

A complex of such modules whose maps are the canonical inclusions is
linearized to a complex of Q-vector spaces with basis ``(summand, constituent)``;
each inclusion is the identity on shared constituents. Ranks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError
from .root_datum import RootDatum
from .weyl import Subset, check_subset


def subsets_between(low: Iterable[int], high: Iterable[int]) -> list[frozenset]:
    """All ``J`` with ``low ⊆ J ⊆ high``, ordered by size then sorted contents."""
    low, high = frozenset(low), frozenset(high)
    free = sorted(high - low)
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            out.append(low | frozenset(extra))
    return out


@dataclass(frozen=True)
class MultFreeModule:
    ambient: Subset  # K: the module lives over M_K
    constituents: frozenset  # of frozensets J ⊆ K, each labelling Sp_{P_J}^{M_K}

    def __post_init__(self) -> None:
        for J in self.constituents:
            if not J <= self.ambient:
                raise InputError(f"constituent {sorted(J)} is not inside the ambient set")

    def is_upward_closed(self) -> bool:
        return all(T in self.constituents for S in self.constituents for T in subsets_between(S, self.ambient))

    def __len__(self) -> int:
        return len(self.constituents)


def jh_of_pind(K: Iterable[int], S: Iterable[int]) -> MultFreeModule:
    """Constituents of ``pInd_{P_S}^{M_K}(1)``."""
    K, S = frozenset(K), frozenset(S)
    if not S <= K:
        raise InputError(f"inducing subset {sorted(S)} is not contained in {sorted(K)}")
    return MultFreeModule(K, frozenset(subsets_between(S, K)))


def _same_ambient(a: MultFreeModule, b: MultFreeModule) -> None:
    if a.ambient != b.ambient:
        raise InputError("modules live over different Levi subgroups")


def lattice_sum(a: MultFreeModule, b: MultFreeModule) -> MultFreeModule:
    _same_ambient(a, b)
    return MultFreeModule(a.ambient, a.constituents | b.constituents)


def lattice_intersect(a: MultFreeModule, b: MultFreeModule) -> MultFreeModule:
    _same_ambient(a, b)
    return MultFreeModule(a.ambient, a.constituents & b.constituents)


# --------------------------------------------------------------------------
# exact linear algebra


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for c in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, n_rows):
            if m[r][c] != 0:
                factor = m[r][c] / m[rank][c]
                for cc in range(c, n_cols):
                    m[r][cc] -= factor * m[rank][cc]
        rank += 1
        if rank == n_rows:
            break
    return rank


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


# --------------------------------------------------------------------------
# coefficient-system complexes


@dataclass(frozen=True)
class Term:
    J: frozenset  # summand index, J ⊆ I1 \ I0
    module: MultFreeModule


@dataclass(frozen=True)
class CoefficientComplex:
    I0: Subset
    I1: Subset
    I: Subset
    K: Subset
    order: tuple[int, ...]  # total order on the simple roots, smallest first
    terms: dict  # degree n <= 0 -> tuple[Term, ...]
    bases: dict  # degree -> tuple[(J, S), ...]
    differentials: dict  # degree n -> matrix C^n -> C^{n+1} (rows: target basis)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def dims(self) -> dict[int, int]:
        return {n: len(b) for n, b in self.bases.items()}

    def d_squared_zero(self) -> bool:
        for n in self.degrees:
            if n + 1 in self.differentials:
                prod = matmul(self.differentials[n + 1], self.differentials[n])
                if any(x != 0 for row in prod for x in row):
                    return False
        return True


def koszul_sign(I0: Iterable[int], J: Iterable[int], j0: int, order: Sequence[int]) -> int:
    """``(-1)^{|{j ∈ I0 ⊔ J : j ≺ j0}|}``."""
    pos = {a: k for k, a in enumerate(order)}
    count = sum(1 for j in set(I0) | set(J) if pos[j] < pos[j0])
    return -1 if count % 2 else 1


def build_complex(rd: RootDatum, I0, I1, I, K, order: Sequence[int] | None = None) -> CoefficientComplex:
    """The complex ``J ↦ pInd_{P_{(I ∪ J) ∩ K}}^{M_K}`` over subsets ``J ⊆ I1 \\ I0``."""
    I0, I1, I, K = (check_subset(rd, x) for x in (I0, I1, I, K))
    if not (I <= I1 and K <= I1):
        raise InputError("need I ⊆ I1 and K ⊆ I1")
    order = tuple(range(rd.rank)) if order is None else tuple(order)
    if sorted(order) != list(range(rd.rank)):
        raise InputError("order must be a permutation of the simple roots")
    index = sorted(I1 - I0, key=order.index)
    terms: dict[int, tuple[Term, ...]] = {}
    bases: dict[int, tuple] = {}
    for size in range(len(index) + 1):
        n = -size
        summands = []
        basis = []
        for J in combinations(index, size):
            J = frozenset(J)
            module = jh_of_pind(K, (I | J) & K)
            summands.append(Term(J, module))
            for S in sorted(module.constituents, key=lambda s: (len(s), sorted(s))):
                basis.append((J, S))
        terms[n] = tuple(summands)
        bases[n] = tuple(basis)
    differentials = {}
    for n in range(-len(index), 0):
        src, tgt = bases[n], bases[n + 1]
        tgt_pos = {b: k for k, b in enumerate(tgt)}
        mat = [[0] * len(src) for _ in tgt]
        for col, (J, S) in enumerate(src):
            for j0 in J:
                face = J - {j0}
                # inclusion V(J) -> V(J \ {j0}) is the identity on constituent S
                mat[tgt_pos[(face, S)]][col] += koszul_sign(I0, face, j0, order)
        differentials[n] = mat
    return CoefficientComplex(I0, I1, I, K, order, terms, bases, differentials)


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    dim: int
    constituents: tuple  # ((S, multiplicity), ...) supporting this degree


def _cohomology_dims(degrees: list[int], dims: dict[int, int], diff: dict[int, list]) -> dict[int, int]:
    ranks = {n: exact_rank(m) if m and m[0] else 0 for n, m in diff.items()}
    out = {}
    for n in degrees:
        kernel = dims[n] - ranks.get(n, 0)
        image = ranks.get(n - 1, 0)
        out[n] = kernel - image
    return out


def cohomology(cx: CoefficientComplex) -> list[CohomologyGroup]:
    """Cohomology per degree, with the constituents that carry it.

    The full dimensions come from ranks of the whole differentials; the
    constituent support from the subcomplex spanned by each constituent.
    The two are cross-checked.
    """
    degrees = cx.degrees
    total = _cohomology_dims(degrees, cx.dims(), cx.differentials)
    labels = sorted({S for b in cx.bases.values() for _, S in b}, key=lambda s: (len(s), sorted(s)))
    per_label: dict[int, list] = {n: [] for n in degrees}
    for S in labels:
        keep = {n: [k for k, (_, T) in enumerate(cx.bases[n]) if T == S] for n in degrees}
        sub = {
            n: [[m[r][c] for c in keep[n]] for r in keep[n + 1]]
            for n, m in cx.differentials.items()
        }
        dims = {n: len(keep[n]) for n in degrees}
        for n, h in _cohomology_dims(degrees, dims, sub).items():
            if h:
                per_label[n].append((S, h))
    out = []
    for n in degrees:
        if sum(h for _, h in per_label[n]) != total[n]:
            raise AssertionError(f"constituent blocks disagree with the full complex in degree {n}")
        out.append(CohomologyGroup(n, total[n], tuple(per_label[n])))
    return out


def h0_label(cx: CoefficientComplex) -> MultFreeModule:
    """Constituents of ``H^0`` as a (not necessarily upward-closed) family over ``M_K``."""
    h0 = next(g for g in cohomology(cx) if g.degree == 0)
    if any(m != 1 for _, m in h0.constituents):
        raise AssertionError("H^0 is not multiplicity free")
    return MultFreeModule(cx.K, frozenset(S for S, _ in h0.constituents))


def is_resolution(cx: CoefficientComplex) -> bool:
    return cx.d_squared_zero() and all(g.dim == 0 for g in cohomology(cx) if g.degree < 0)
