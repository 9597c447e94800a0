"""Finite reduced root systems with per-root dimension weights.

Roots and weights live in the simple-root basis. The pairing convention is
``cartan[i][j] = <alpha_i, alpha_j^vee>``, so the simple reflection ``s_i``
sends ``lambda`` to ``lambda - <lambda, alpha_i^vee> alpha_i`` with
``<lambda, alpha_i^vee> = sum_j lambda_j * cartan[j][i]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError

Root = tuple  # tuple[int, ...] in the simple-root basis

# Reflection closure larger than this is treated as an infinite root system.
MAX_ROOTS = 4000


def _exact(c):
    """Integral entries stay ``int`` (fast arithmetic); others become ``Fraction``."""
    if type(c) is int:
        return c
    q = Fraction(c)
    return q.numerator if q.denominator == 1 else q


class Weight(tuple):
    """Exact rational vector over the simple-root basis; entries are ``int`` or ``Fraction``.

    Subclasses ``tuple`` so that a weight with integral entries compares and
    hashes equal to the corresponding integer root tuple.
    """

    def __new__(cls, coeffs: Iterable) -> "Weight":
        return super().__new__(cls, (_exact(c) for c in coeffs))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls([0] * rank)

    def __add__(self, other):  # type: ignore[override]
        _check_len(self, other)
        return Weight(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        _check_len(self, other)
        return Weight(a - b for a, b in zip(self, other))

    def __rsub__(self, other):
        _check_len(self, other)
        return Weight(b - a for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, scalar):  # type: ignore[override]
        return Weight(a * scalar for a in self)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise InputError(f"weight {self} is not integral")
        return tuple(int(a) for a in self)

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(a) for a in self) + ")"


def _check_len(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


# --------------------------------------------------------------------------
# Named Cartan matrices


def _chain(n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


def _simple_type(letter: str, n: int) -> list[list[int]]:
    if letter == "A" and n >= 1:
        return _chain(n)
    if letter == "B" and n >= 2:
        # alpha_n short
        m = _chain(n)
        m[n - 2][n - 1] = -2
        return m
    if letter == "C" and n >= 2:
        # alpha_n long
        m = _chain(n)
        m[n - 1][n - 2] = -2
        return m
    if letter == "D" and n >= 3:
        m = _chain(n)
        m[n - 2][n - 1] = m[n - 1][n - 2] = 0
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return m
    if letter == "G" and n == 2:
        # alpha_1 short, alpha_2 long
        return [[2, -1], [-3, 2]]
    if letter == "F" and n == 4:
        m = _chain(4)
        m[1][2] = -2
        return m
    if letter == "E" and n in (6, 7, 8):
        # Bourbaki labels: 1-3-4-5-...-n chain, 2 attached to 4
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for a, b in edges:
            m[a][b] = m[b][a] = -1
        return m
    raise InputError(f"unknown or unsupported Cartan type {letter}{n}")


def cartan_matrix(type_name: str) -> list[list[int]]:
    """Cartan matrix of a named type such as ``"A2"``, ``"G2"`` or ``"A1xB2"``."""
    parts = [p.strip() for p in re.split(r"[x×*]", type_name.strip()) if p.strip()]
    if not parts:
        raise InputError(f"empty Cartan type {type_name!r}")
    blocks = []
    for part in parts:
        match = re.fullmatch(r"([A-Ga-g])(\d+)", part)
        if not match:
            raise InputError(f"cannot parse Cartan type {part!r}")
        blocks.append(_simple_type(match.group(1).upper(), int(match.group(2))))
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                m[offset + i][offset + j] = v
        offset += len(b)
    return m


# --------------------------------------------------------------------------
# The datum


@dataclass(frozen=True)
class RootDatum:
    """A finite reduced root system with dimension weights.

    ``d[i]`` is the F-dimension of the root group of the i-th simple root;
    it is extended Weyl-invariantly to every root. ``z_dim`` is the
    F-dimension of the minimal Levi, ``f`` the degree ``[F:Q_p]`` and ``p``
    an optional odd prime enabling concrete (mod ``p-1``) characters.
    """

    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    z_dim: int
    f: int = 1
    p: int | None = None
    name: str = ""
    positive_roots: tuple[Root, ...] = field(init=False, repr=False, compare=False)
    _root_d: Mapping[Root, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _validate_cartan(self.cartan)
        n = len(self.cartan)
        if len(self.d) != n or any(not isinstance(x, int) or x < 1 for x in self.d):
            raise InputError(f"d must list {n} positive integers, got {list(self.d)}")
        if not isinstance(self.z_dim, int) or self.z_dim < 0:
            raise InputError(f"z_dim must be a nonnegative integer, got {self.z_dim!r}")
        if not isinstance(self.f, int) or self.f < 1:
            raise InputError(f"f must be a positive integer, got {self.f!r}")
        if self.p is not None and (not _is_prime(self.p) or self.p == 2):
            raise InputError(f"p must be an odd prime, got {self.p!r}")
        root_d = _reflection_closure(self.cartan, self.d)
        positive = sorted(
            (r for r in root_d if all(c >= 0 for c in r)), key=lambda r: (sum(r), tuple(-c for c in r))
        )
        object.__setattr__(self, "positive_roots", tuple(positive))
        object.__setattr__(self, "_root_d", root_d)

    # -- basic data -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def delta(self) -> frozenset[int]:
        """All simple-root indices."""
        return frozenset(range(self.rank))

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    @property
    def roots(self) -> tuple[Root, ...]:
        neg = tuple(tuple(-c for c in r) for r in self.positive_roots)
        return self.positive_roots + neg

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self._root_d

    def root_d(self, root: Sequence) -> int:
        """Dimension weight ``d_beta`` of an arbitrary root."""
        try:
            return self._root_d[tuple(root)]
        except KeyError:
            raise InputError(f"{tuple(root)} is not a root") from None

    def names(self) -> list[str]:
        return [f"a{i + 1}" for i in range(self.rank)]

    # -- linear algebra on the root lattice --------------------------------

    def pairing(self, weight: Sequence, i: int) -> Fraction | int:
        """``<weight, alpha_i^vee>``."""
        return sum(weight[j] * self.cartan[j][i] for j in range(self.rank))

    def reflect(self, i: int, weight: Sequence):
        """Simple reflection ``s_i`` applied to a root or weight."""
        c = self.pairing(weight, i)
        out = [weight[j] for j in range(self.rank)]
        out[i] = out[i] - c
        if isinstance(weight, Weight):
            return Weight(out)
        return tuple(out)

    # -- dimensions ---------------------------------------------------------

    def dim_G(self) -> int:
        """F-dimension of the whole group."""
        return self.z_dim + 2 * sum(self.root_d(r) for r in self.positive_roots)

    def to_spec(self) -> dict:
        out = {"cartan": [list(r) for r in self.cartan], "d": list(self.d), "z_dim": self.z_dim, "f": self.f}
        if self.p is not None:
            out["p"] = self.p
        if self.name:
            out["name"] = self.name
        return out


def _is_prime(p) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _validate_cartan(cartan) -> None:
    n = len(cartan)
    if n == 0:
        raise InputError("Cartan matrix must have positive rank")
    for i, row in enumerate(cartan):
        if len(row) != n:
            raise InputError("Cartan matrix must be square")
        for j, a in enumerate(row):
            if not isinstance(a, int) or isinstance(a, bool):
                raise InputError("Cartan matrix entries must be integers")
            if i == j and a != 2:
                raise InputError("Cartan matrix must have 2 on the diagonal")
            if i != j and (a > 0 or (a == 0) != (cartan[j][i] == 0)):
                raise InputError("off-diagonal Cartan entries must be <= 0 and vanish symmetrically")


def _reflection_closure(cartan, d) -> dict[Root, int]:
    """All roots, each with its propagated weight; rejects infinite or Weyl-variant input."""
    n = len(cartan)
    root_d: dict[Root, int] = {}
    frontier = []
    for i in range(n):
        r = tuple(1 if j == i else 0 for j in range(n))
        root_d[r] = d[i]
        frontier.append(r)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                c = sum(r[j] * cartan[j][i] for j in range(n))
                s = list(r)
                s[i] -= c
                s = tuple(s)
                if s in root_d:
                    if root_d[s] != root_d[r]:
                        raise InputError(f"weights d={list(d)} are not Weyl-invariant (conflict at root {s})")
                    continue
                if not (all(x >= 0 for x in s) or all(x <= 0 for x in s)):
                    raise InputError("Cartan matrix is not of finite type (mixed-sign root)")
                root_d[s] = root_d[r]
                nxt.append(s)
                if len(root_d) > MAX_ROOTS:
                    raise InputError("Cartan matrix is not of finite type (reflection closure does not terminate)")
        frontier = nxt
    return root_d


# --------------------------------------------------------------------------
# Construction from specs


def build(
    spec: str | Mapping | None = None,
    *,
    d: Sequence[int] | None = None,
    z_dim: int | None = None,
    f: int = 1,
    p: int | None = None,
) -> RootDatum:
    """Build a :class:`RootDatum` from a type name, a Cartan matrix or a spec mapping.

    >>> len(build("G2").positive_roots)
    6
    """
    name = ""
    if isinstance(spec, str):
        name = spec
        cartan = cartan_matrix(spec)
    elif isinstance(spec, Mapping):
        spec = dict(spec)
        if "type" in spec and "cartan" in spec:
            raise InputError("give either 'type' or 'cartan', not both")
        if "type" in spec:
            name = str(spec["type"])
            cartan = cartan_matrix(name)
        elif "cartan" in spec:
            cartan = spec["cartan"]
            name = str(spec.get("name", ""))
        else:
            raise InputError("datum spec needs a 'type' or a 'cartan' entry")
        unknown = set(spec) - {"type", "cartan", "d", "z_dim", "f", "p", "name"}
        if unknown:
            raise InputError(f"unknown datum keys: {sorted(unknown)}")
        d = spec.get("d", d)
        z_dim = spec.get("z_dim", z_dim)
        f = spec.get("f", f)
        p = spec.get("p", p)
    elif spec is None:
        raise InputError("no datum spec given")
    else:
        cartan = spec  # explicit matrix
    try:
        cartan_t = tuple(tuple(row) for row in cartan)
    except TypeError:
        raise InputError("Cartan matrix must be a list of integer rows") from None
    n = len(cartan_t)
    if d is None:
        d = [1] * n
    if z_dim is None:
        z_dim = n
    return RootDatum(cartan=cartan_t, d=tuple(d), z_dim=z_dim, f=f, p=p, name=name)
