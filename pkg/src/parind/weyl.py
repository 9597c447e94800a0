"""Weyl group enumeration, Bruhat order and parabolic double cosets.

Elements carry their exact action on the root lattice (an integer matrix in
the simple-root basis, acting on column vectors) and the lexicographically
smallest reduced word. Words are 0-based internally; ``(1, 0)`` is the product
``s_2 s_1`` in 1-based notation, i.e. ``s_1`` is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .root_datum import RootDatum, Weight

Matrix = tuple  # tuple[tuple[int, ...], ...]
Subset = frozenset  # frozenset[int] of simple-root indices


@dataclass(frozen=True, eq=False)
class WeylElement:
    word: tuple[int, ...]
    matrix: Matrix

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self) -> tuple:
        return (len(self.word), self.word)

    def __repr__(self) -> str:
        return "".join(f"s{i + 1}" for i in self.word) or "e"


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(m: Matrix, v: Sequence):
    return tuple(sum(m[i][k] * v[k] for k in range(len(v))) for i in range(len(m)))


class WeylGroup:
    """All elements of the finite Weyl group of a datum, canonically labelled."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        n = rd.rank
        self.identity_matrix = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        gens = []
        for i in range(n):
            cols = [rd.reflect(i, rd.simple_root(j)) for j in range(n)]
            gens.append(tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))
        self.generators: tuple[Matrix, ...] = tuple(gens)

        # breadth-first by length; the lexicographically least reduced word of w
        # is the least of lexmin(v) + (i,) over all v with v s_i = w, l(v) < l(w)
        e = WeylElement((), self.identity_matrix)
        by_matrix = {e.matrix: e}
        level = [e]
        ordered = [e]
        while level:
            best: dict[Matrix, tuple[int, ...]] = {}
            for v in level:
                for i in range(n):
                    m = _matmul(v.matrix, gens[i])
                    if m in by_matrix:
                        continue
                    word = v.word + (i,)
                    if m not in best or word < best[m]:
                        best[m] = word
            level = sorted((WeylElement(w, m) for m, w in best.items()), key=WeylElement.sort_key)
            for x in level:
                by_matrix[x.matrix] = x
            ordered.extend(level)
        self.elements: tuple[WeylElement, ...] = tuple(ordered)
        self._by_matrix = by_matrix
        self._inverses: dict[WeylElement, WeylElement] = {}
        self.identity = e
        self.longest = max(ordered, key=WeylElement.sort_key)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def canonical(self, matrix: Matrix) -> WeylElement:
        return self._by_matrix[matrix]

    def simple(self, i: int) -> WeylElement:
        return self._by_matrix[self.generators[i]]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        m = self.identity_matrix
        for i in word:
            if not 0 <= i < self.rd.rank:
                raise InputError(f"simple reflection index {i + 1} out of range")
            m = _matmul(m, self.generators[i])
        return self._by_matrix[m]

    def mul(self, v: WeylElement, w: WeylElement) -> WeylElement:
        return self._by_matrix[_matmul(v.matrix, w.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        try:
            return self._inverses[w]
        except KeyError:
            inv = self._inverses[w] = self.from_word(reversed(w.word))
            return inv

    def act(self, w: WeylElement, vec: Sequence):
        out = _matvec(w.matrix, vec)
        return Weight(out) if isinstance(vec, Weight) else out

    def parabolic(self, subset: Iterable[int]) -> list[WeylElement]:
        """Elements of the standard parabolic subgroup ``W_I``."""
        subset = frozenset(subset)
        return [w for w in self.elements if set(w.word) <= subset]


@lru_cache(maxsize=None)
def weyl_group(rd: RootDatum) -> WeylGroup:
    return WeylGroup(rd)


def enumerate_weyl(rd: RootDatum) -> tuple[WeylElement, ...]:
    return weyl_group(rd).elements


# --------------------------------------------------------------------------
# roots and subsets


def is_positive(v: Sequence) -> bool:
    return all(c >= 0 for c in v) and any(c != 0 for c in v)


def root_subsystem(rd: RootDatum, subset: Iterable[int]) -> frozenset:
    """All roots (both signs) supported on the given simple roots."""
    subset = frozenset(subset)
    return frozenset(r for r in rd.roots if all(c == 0 for j, c in enumerate(r) if j not in subset))


def positive_subsystem(rd: RootDatum, subset: Iterable[int]) -> frozenset:
    return frozenset(r for r in root_subsystem(rd, subset) if is_positive(r))


def check_subset(rd: RootDatum, subset: Iterable[int]) -> Subset:
    subset = frozenset(subset)
    if not subset <= rd.delta:
        raise InputError(f"subset {sorted(i + 1 for i in subset)} is not contained in the simple roots")
    return subset


def transport_subset(rd: RootDatum, w: WeylElement, subset: Iterable[int]) -> Subset:
    """``w(K) ∩ Δ``: simple roots of the form ``w(beta)`` with ``beta`` in ``K``."""
    G = weyl_group(rd)
    out = set()
    for b in subset:
        image = G.act(w, rd.simple_root(b))
        for i in range(rd.rank):
            if image == rd.simple_root(i):
                out.add(i)
    return frozenset(out)


# --------------------------------------------------------------------------
# lengths, inversions and Bruhat order


@lru_cache(maxsize=None)
def inversion_set(rd: RootDatum, w: WeylElement) -> frozenset:
    """``Σ⁺ ∩ w⁻¹(−Σ⁺)``: positive roots sent to negative roots by ``w``."""
    G = weyl_group(rd)
    return frozenset(b for b in rd.positive_roots if not is_positive(G.act(w, b)))


def d_w(rd: RootDatum, w: WeylElement) -> int:
    """Weighted length: sum of ``d_beta`` over the inversion set."""
    return sum(rd.root_d(b) for b in inversion_set(rd, w))


@lru_cache(maxsize=None)
def _lower_interval(rd: RootDatum, w: WeylElement) -> frozenset:
    # products of all subwords of one reduced word form the Bruhat interval [e, w]
    G = weyl_group(rd)
    reached = {G.identity}
    for i in w.word:
        s = G.simple(i)
        reached |= {G.mul(x, s) for x in reached}
    return frozenset(reached)


def bruhat_leq(rd: RootDatum, v: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the subword property."""
    if v.length > w.length:
        return False
    return v in _lower_interval(rd, w)


# --------------------------------------------------------------------------
# minimal double coset representatives


def in_dml(rd: RootDatum, w: WeylElement, I: Iterable[int], K: Iterable[int]) -> bool:
    """``w(Δ_K) ⊆ Σ⁺`` and ``w⁻¹(Δ_I) ⊆ Σ⁺``."""
    G = weyl_group(rd)
    winv = G.inverse(w)
    return all(is_positive(G.act(w, rd.simple_root(k))) for k in K) and all(
        is_positive(G.act(winv, rd.simple_root(i))) for i in I
    )


def dml_sort_key(rd: RootDatum, w: WeylElement) -> tuple:
    return (d_w(rd, w), w.length, w.word)


@lru_cache(maxsize=None)
def _dml(rd: RootDatum, I: Subset, K: Subset) -> tuple[WeylElement, ...]:
    members = [w for w in weyl_group(rd) if in_dml(rd, w, I, K)]
    return tuple(sorted(members, key=lambda w: dml_sort_key(rd, w)))


def dml(rd: RootDatum, I: Iterable[int], K: Iterable[int]) -> list[WeylElement]:
    """Minimal-length representatives of ``W_I \\ W / W_K``, sorted by ``(d_w, length, word)``."""
    return list(_dml(rd, check_subset(rd, I), check_subset(rd, K)))


def require_dml(rd: RootDatum, w: WeylElement, I: Iterable[int], K: Iterable[int]) -> None:
    if not in_dml(rd, w, I, K):
        raise PreconditionError(
            f"{w!r} is not a minimal double coset representative for "
            f"I={sorted(i + 1 for i in I)}, K={sorted(k + 1 for k in K)}"
        )


def i_of_w(rd: RootDatum, w: WeylElement) -> Subset:
    """Simple roots ``alpha`` with ``l(s_alpha w) = l(w) + 1``, i.e. ``w⁻¹(alpha) > 0``."""
    G = weyl_group(rd)
    winv = G.inverse(w)
    return frozenset(i for i in range(rd.rank) if is_positive(G.act(winv, rd.simple_root(i))))


@dataclass(frozen=True)
class KilmoyerCertificate:
    subset: Subset  # J' ∩ w(K)
    holds: bool  # Σ_{J'} ∩ w(Σ_K) == Σ_{J' ∩ w(K)}
    intersection_size: int


def kilmoyer(rd: RootDatum, J: Iterable[int], w: WeylElement, K: Iterable[int]) -> KilmoyerCertificate:
    """Compute ``J ∩ w(K)`` and check ``Σ_J ∩ w(Σ_K) = Σ_{J ∩ w(K)}`` root by root."""
    J = check_subset(rd, J)
    K = check_subset(rd, K)
    require_dml(rd, w, J, K)
    G = weyl_group(rd)
    subset = J & transport_subset(rd, w, K)
    lhs = root_subsystem(rd, J) & frozenset(G.act(w, b) for b in root_subsystem(rd, K))
    rhs = root_subsystem(rd, subset)
    return KilmoyerCertificate(subset=subset, holds=lhs == rhs, intersection_size=len(lhs))
