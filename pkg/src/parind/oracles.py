"""Brute-force cross-checks that share no code path with the main algorithms.

Each function recomputes a quantity from first principles: the Weyl group
as a permutation group on roots, positive roots from root strings, Bruhat
order from reflection chains, double cosets by orbit enumeration, and torus
cohomology by a Künneth product over elementary factors.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product
from math import lcm

from .root_datum import RootDatum


def string_positive_roots(cartan) -> set[tuple[int, ...]]:
    """Positive roots via root strings: ``beta + alpha_i`` is a root iff ``q > 0``.

    For a root ``beta`` the ``alpha_i``-string through it is
    ``beta - p alpha_i, ..., beta + q alpha_i`` with ``p - q = <beta, alpha_i^vee>``.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                q = p - sum(beta[j] * cartan[j][i] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        level = nxt
    return found


def _perm_generators(rd: RootDatum):
    roots = list(rd.roots)
    index = {r: k for k, r in enumerate(roots)}
    gens = []
    for i in range(rd.rank):
        gens.append(tuple(index[rd.reflect(i, r)] for r in roots))
    return roots, index, gens


def _compose(a, b):
    """``a ∘ b`` as permutations (apply ``b`` first)."""
    return tuple(a[x] for x in b)


def weyl_permutations(rd: RootDatum, subset=None) -> set[tuple[int, ...]]:
    """The group generated by the chosen simple reflections, as permutations of all roots."""
    roots, _, gens = _perm_generators(rd)
    use = [gens[i] for i in (range(rd.rank) if subset is None else sorted(subset))]
    identity = tuple(range(len(roots)))
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in use:
            h = _compose(g, s)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def double_coset_count(rd: RootDatum, I, K) -> int:
    """Number of orbits of ``W_I × W_K`` on ``W`` by ``(u, v)·w = u w v⁻¹``."""
    W = weyl_permutations(rd)
    WI = weyl_permutations(rd, I)
    WK = weyl_permutations(rd, K)
    remaining = set(W)
    count = 0
    while remaining:
        w = remaining.pop()
        count += 1
        orbit = {_compose(_compose(u, w), v) for u in WI for v in WK}
        remaining -= orbit
    return count


def bruhat_lower_set(rd: RootDatum, w_matrix) -> set[tuple]:
    """Elements below ``w`` in Bruhat order, via chains ``x > x t`` over all reflections ``t``.

    Elements are given and returned as integer action matrices in the
    simple-root basis.
    """
    n = rd.rank

    def mat_of_root_map(f):
        cols = [f(tuple(int(i == j) for j in range(n))) for i in range(n)]
        return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))

    def apply(m, v):
        return tuple(sum(m[i][k] * v[k] for k in range(n)) for i in range(n))

    def length(m):
        return sum(1 for r in rd.positive_roots if any(c < 0 for c in apply(m, r)))

    # W-invariant form (α_i, α_j) = a_ij c_j from symmetrizing the Cartan matrix
    sym = _symmetrizer(rd.cartan)

    def form(x, y):
        return sum(x[i] * rd.cartan[i][j] * sym[j] * y[j] for i in range(n) for j in range(n))

    def reflection(beta):
        bb = form(beta, beta)
        return mat_of_root_map(lambda x: tuple(x[i] - 2 * form(x, beta) * beta[i] // bb for i in range(n)))

    reflections = [reflection(b) for b in rd.positive_roots]
    start = tuple(tuple(row) for row in w_matrix)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        lx = length(x)
        for t in reflections:
            y = mul(x, t)
            if y not in seen and length(y) < lx:
                seen.add(y)
                queue.append(y)
    return seen


def _symmetrizer(cartan) -> list[int]:
    """Positive integers ``c_j`` with ``a_ij c_j = a_ji c_i`` (``a_ij = <α_i, α_j^vee>``)."""
    n = len(cartan)
    c: list[Fraction | None] = [None] * n
    for start in range(n):
        if c[start] is not None:
            continue
        c[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and c[j] is None:
                    c[j] = c[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
    denom = lcm(*(x.denominator for x in c))
    return [int(x * denom) for x in c]


# --------------------------------------------------------------------------
# torus cohomology


def poly_mul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def kunneth_torus_poincare(torus_rank: int, f: int) -> list[int]:
    """Poincaré polynomial of ``H^*((F^×)^torus_rank, F_p)`` for ``F`` of degree ``f``.

    Under the usual hypotheses ``F^× ≅ Z × μ × Z_p^f`` with ``μ`` finite of
    order prime to ``p``. Each ``Z`` and each ``Z_p`` contributes
    ``H^* = F_p ⊕ F_p[-1]``; ``μ`` contributes ``F_p`` in degree 0.
    """
    factors = [[1, 1]] + [[1, 1]] * f + [[1]]
    poly = [1]
    for _ in range(torus_rank):
        for g in factors:
            poly = poly_mul(poly, g)
    return poly


def exterior_dims(generators: int) -> list[int]:
    """Dimension of each degree of an exterior algebra, by listing monomials."""
    out = [0] * (generators + 1)
    for bits in product((0, 1), repeat=generators):
        out[sum(bits)] += 1
    return out
