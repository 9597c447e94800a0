"""Weights and smooth characters of the minimal Levi.

A character is a cyclotomic part (a weight ``lambda``, standing for
``eps_F ∘ lambda``) tensored with an opaque symbolic part: a finitely supported
integer vector over user-declared symbols. In ``"concrete"`` mode the
cyclotomic exponents are reduced mod ``p - 1``, the order of the image of
``eps_F``; in ``"formal"`` mode they are kept as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError, ModeError
from .root_datum import RootDatum, Weight
from .weyl import WeylElement, inversion_set, weyl_group

FORMAL = "formal"
CONCRETE = "concrete"
MODES = (FORMAL, CONCRETE)


@lru_cache(maxsize=None)
def alpha_w(rd: RootDatum, w: WeylElement) -> Weight:
    """Sum of ``d_beta * beta`` over the inversion set of ``w``."""
    total = Weight.zero(rd.rank)
    for b in inversion_set(rd, w):
        total = total + Weight(b) * rd.root_d(b)
    return total


def rho(rd: RootDatum) -> Weight:
    """Half the ``d``-weighted sum of the positive roots."""
    total = Weight.zero(rd.rank)
    for b in rd.positive_roots:
        total = total + Weight(b) * rd.root_d(b)
    return total * Fraction(1, 2)


def is_twisting(rd: RootDatum, theta) -> bool:
    return all(rd.pairing(Weight(theta), i) == rd.d[i] for i in range(rd.rank))


@dataclass(frozen=True)
class SmoothCharacter:
    cyclo: Weight
    sym: tuple[tuple[str, int], ...] = ()
    mode: str = FORMAL
    modulus: int | None = None  # p - 1 in concrete mode

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ModeError(f"unknown character mode {self.mode!r}")
        if (self.mode == CONCRETE) != (self.modulus is not None):
            raise ModeError("concrete characters need a modulus, formal ones must not have one")

    @property
    def sym_dict(self) -> dict[str, int]:
        return dict(self.sym)

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.cyclo) and not self.sym

    def __repr__(self) -> str:
        parts = ["(" + ", ".join(str(c) for c in self.cyclo) + ")"]
        parts += [f"{name}^{m}" for name, m in self.sym]
        tail = f" mod {self.modulus}" if self.modulus else ""
        return "chi[" + " ".join(parts) + tail + "]"


def _normal_sym(sym: Mapping[str, int] | Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    items = sym.items() if isinstance(sym, Mapping) else sym
    acc: dict[str, int] = {}
    for name, m in items:
        if not isinstance(m, int) or isinstance(m, bool):
            raise InputError(f"symbol exponent for {name!r} must be an integer")
        acc[str(name)] = acc.get(str(name), 0) + m
    return tuple(sorted((k, v) for k, v in acc.items() if v != 0))


def _modulus(rd: RootDatum, mode: str) -> int | None:
    if mode == FORMAL:
        return None
    if mode != CONCRETE:
        raise ModeError(f"unknown character mode {mode!r}")
    if rd.p is None:
        raise ModeError("concrete character mode needs the datum to declare a prime p")
    return rd.p - 1


def _reduce(cyclo: Weight, modulus: int | None) -> Weight:
    if modulus is None:
        return cyclo
    if not cyclo.is_integral():
        raise InputError(f"concrete characters need integral exponents, got {cyclo}")
    return Weight(c % modulus for c in cyclo)


def character(rd: RootDatum, cyclo=None, sym=None, mode: str = FORMAL) -> SmoothCharacter:
    """Build a character; ``cyclo`` defaults to zero and ``sym`` to empty."""
    modulus = _modulus(rd, mode)
    cyclo = Weight.zero(rd.rank) if cyclo is None else Weight(cyclo)
    if len(cyclo) != rd.rank:
        raise InputError(f"cyclotomic part needs {rd.rank} entries, got {len(cyclo)}")
    return SmoothCharacter(_reduce(cyclo, modulus), _normal_sym(sym or {}), mode, modulus)


def trivial(rd: RootDatum, mode: str = FORMAL) -> SmoothCharacter:
    return character(rd, mode=mode)


def tensor(a: SmoothCharacter, b: SmoothCharacter) -> SmoothCharacter:
    _same_mode(a, b)
    sym = _normal_sym(list(a.sym) + list(b.sym))
    return SmoothCharacter(_reduce(a.cyclo + b.cyclo, a.modulus), sym, a.mode, a.modulus)


def dual(a: SmoothCharacter) -> SmoothCharacter:
    sym = tuple((k, -v) for k, v in a.sym)
    return SmoothCharacter(_reduce(-a.cyclo, a.modulus), sym, a.mode, a.modulus)


def _same_mode(a: SmoothCharacter, b: SmoothCharacter) -> None:
    if a.mode != b.mode or a.modulus != b.modulus:
        raise ModeError(f"cannot combine {a.mode} and {b.mode} characters")


def chars_equal(a: SmoothCharacter, b: SmoothCharacter) -> bool:
    _same_mode(a, b)
    return a.cyclo == b.cyclo and a.sym == b.sym


# --------------------------------------------------------------------------
# Weyl action on symbols


_BRAID_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass
class SymbolAction:
    """Declared action of the simple reflections on the symbol alphabet.

    ``perms[i]`` maps symbols to symbols under ``s_i`` (missing entries are
    fixed); ``shifts[i][x]`` is an integer weight picked up by the cyclotomic
    part when ``s_i`` moves one copy of ``x``. With ``alphabet=None`` every
    symbol is fixed by all of ``W``.
    """

    alphabet: frozenset[str] | None = None
    perms: dict[int, dict[str, str]] = field(default_factory=dict)
    shifts: dict[int, dict[str, tuple[int, ...]]] = field(default_factory=dict)

    def apply_simple(self, rd: RootDatum, i: int, chi: SmoothCharacter) -> SmoothCharacter:
        cyclo = rd.reflect(i, chi.cyclo)
        out: dict[str, int] = {}
        perm = self.perms.get(i, {})
        shift = self.shifts.get(i, {})
        for x, m in chi.sym:
            if self.alphabet is not None and x not in self.alphabet:
                raise InputError(f"symbol {x!r} has no declared Weyl action")
            y = perm.get(x, x)
            out[y] = out.get(y, 0) + m
            if x in shift:
                cyclo = cyclo + Weight(shift[x]) * m
        return SmoothCharacter(_reduce(cyclo, chi.modulus), _normal_sym(out), chi.mode, chi.modulus)

    def validate(self, rd: RootDatum) -> None:
        """Check that the generators satisfy the Coxeter relations of ``W``."""
        if self.alphabet is None:
            if self.perms or self.shifts:
                raise InputError("a symbol action with permutations needs an alphabet")
            return
        for i, perm in self.perms.items():
            if not 0 <= i < rd.rank:
                raise InputError(f"symbol action names generator {i + 1} outside the datum")
            if set(perm) - self.alphabet or set(perm.values()) - self.alphabet:
                raise InputError("symbol permutation leaves the declared alphabet")
            if len(set(perm.values())) != len(perm) or set(perm.values()) != set(perm):
                raise InputError(f"symbol map of generator {i + 1} is not a permutation")
        for i, shifts in self.shifts.items():
            for x, v in shifts.items():
                if x not in self.alphabet or len(v) != rd.rank:
                    raise InputError(f"bad weight shift for symbol {x!r} under generator {i + 1}")
        basis = [character(rd, cyclo=rd.simple_root(k)) for k in range(rd.rank)]
        basis += [character(rd, sym={x: 1}) for x in sorted(self.alphabet)]
        for i in range(rd.rank):
            for j in range(i, rd.rank):
                if i == j:
                    word = (i, i)
                else:
                    word = (i, j) * _BRAID_ORDER[rd.cartan[i][j] * rd.cartan[j][i]]
                for v in basis:
                    x = v
                    for g in reversed(word):
                        x = self.apply_simple(rd, g, x)
                    if not chars_equal(x, v):
                        raise InputError(f"declared symbol action violates a Coxeter relation at ({i + 1}, {j + 1})")


TRIVIAL_ACTION = SymbolAction()


def apply_weyl(rd: RootDatum, w: WeylElement, chi: SmoothCharacter, action: SymbolAction | None = None) -> SmoothCharacter:
    """Transport ``chi`` along ``w`` (left action)."""
    action = action or TRIVIAL_ACTION
    if action.shifts:
        for i in reversed(w.word):
            chi = action.apply_simple(rd, i, chi)
        return chi
    # no weight shifts: the cyclotomic part moves by the action matrix in one step
    sym = dict(chi.sym)
    for i in reversed(w.word):
        perm = action.perms.get(i, {})
        moved: dict[str, int] = {}
        for x, m in sym.items():
            if action.alphabet is not None and x not in action.alphabet:
                raise InputError(f"symbol {x!r} has no declared Weyl action")
            y = perm.get(x, x)
            moved[y] = moved.get(y, 0) + m
        sym = moved
    cyclo = weyl_group(rd).act(w, chi.cyclo)
    return SmoothCharacter(_reduce(cyclo, chi.modulus), _normal_sym(sym), chi.mode, chi.modulus)


def delta_w(rd: RootDatum, w: WeylElement, mode: str = FORMAL) -> SmoothCharacter:
    """The character ``eps_F ∘ alpha_w``."""
    return character(rd, cyclo=alpha_w(rd, w), mode=mode)


def star(rd: RootDatum, chi: SmoothCharacter, w: WeylElement, action: SymbolAction | None = None) -> SmoothCharacter:
    """``chi ⋆ w = delta_w ⊗ w⁻¹(chi)``; a right action of ``W``."""
    winv = weyl_group(rd).inverse(w)
    return tensor(delta_w(rd, w, chi.mode), apply_weyl(rd, winv, chi, action))
