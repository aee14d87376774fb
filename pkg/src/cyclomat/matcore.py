"""Core digraph model: square integer matrices with charge/edge semantics.

A digraph on n vertices is a square integer matrix ``a``: the diagonal
entry ``a[i][i]`` is the charge of vertex i, and ``a[i][j]`` is the weight
of the directed edge from i to j. Nothing is assumed about symmetry;
whether a matrix is symmetric or sign-symmetric is a queryable property,
never an invariant.

All values are immutable after construction and every operation is a pure
function, so instances are safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "Digraph",
    "SurdMatrix",
    "is_sign_symmetric",
    "is_symmetric",
    "transpose",
    "induced_subgraph",
    "is_connected",
    "connected_components",
    "symmetric_components",
    "row_norms",
]


def sgn(x: int) -> int:
    """Sign of x: 1, -1 or 0."""
    return (x > 0) - (x < 0)


class Digraph:
    """Immutable square integer matrix viewed as a charged weighted digraph."""

    __slots__ = ("a", "n", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        a = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(a)
        if n == 0:
            raise ValueError("a digraph needs at least one vertex")
        if any(len(row) != n for row in a):
            raise ValueError("adjacency matrix must be square")
        self.a = a
        self.n = n
        self._hash = hash(a)

    def charge(self, i: int) -> int:
        return self.a[i][i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and self.a == other.a

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph({[list(r) for r in self.a]})"


def _squarefree_split(m: int) -> tuple[int, int]:
    """Write m >= 0 as c*c*s with s squarefree; return (c, s)."""
    c, s, d = 1, 1, 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        c *= d ** (e // 2)
        if e % 2:
            s *= d
        d += 1
    return c, s * m


class SurdMatrix:
    """Symmetric matrix over signed square roots, stored exactly.

    Entry (i, j) stores an integer t; the represented value is
    sgn(t)*sqrt(|t|), so t = -2 encodes -sqrt(2) and diagonal integers c
    are encoded as sgn(c)*c**2.
    """

    __slots__ = ("t", "n", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        t = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(t)
        if n == 0:
            raise ValueError("a surd matrix needs at least one vertex")
        if any(len(row) != n for row in t):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if t[i][j] != t[j][i]:
                    raise ValueError("surd matrices must be symmetric")
        self.t = t
        self.n = n
        self._hash = hash(t)

    def value(self, i: int, j: int) -> float:
        t = self.t[i][j]
        return sgn(t) * abs(t) ** 0.5

    def to_float(self) -> list[list[float]]:
        return [[self.value(i, j) for j in range(self.n)] for i in range(self.n)]

    def square_radicals(self) -> list[list[dict[int, int]]]:
        """Exact S*S as a matrix of {squarefree radicand: integer coefficient}.

        Each product sqrt(|t_ij|)*sqrt(|t_jk|) is reduced to c*sqrt(s) with s
        squarefree, so entries stay exact integer combinations of radicals.
        """
        n, t = self.n, self.t
        out: list[list[dict[int, int]]] = [[{} for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for k in range(n):
                acc = out[i][k]
                for j in range(n):
                    x, y = t[i][j], t[j][k]
                    if x == 0 or y == 0:
                        continue
                    c, s = _squarefree_split(abs(x) * abs(y))
                    coeff = sgn(x) * sgn(y) * c
                    acc[s] = acc.get(s, 0) + coeff
                    if acc[s] == 0:
                        del acc[s]
        return out

    def squares_to(self, scalar: int) -> bool:
        """True iff S*S equals scalar times the identity, exactly."""
        sq = self.square_radicals()
        for i in range(self.n):
            for j in range(self.n):
                want = {1: scalar} if (i == j and scalar != 0) else {}
                if sq[i][j] != want:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SurdMatrix) and self.t == other.t

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SurdMatrix({[list(r) for r in self.t]})"


def is_sign_symmetric(g: Digraph) -> bool:
    """True iff sgn(a_ij) == sgn(a_ji) for all i, j."""
    a, n = g.a, g.n
    for i in range(n):
        for j in range(i + 1, n):
            if sgn(a[i][j]) != sgn(a[j][i]):
                return False
    return True


def is_symmetric(g: Digraph) -> bool:
    """True iff a_ij == a_ji for all i, j."""
    a, n = g.a, g.n
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def transpose(g: Digraph) -> Digraph:
    return Digraph(tuple(zip(*g.a)))


def induced_subgraph(g: Digraph, keep: Sequence[int]) -> Digraph:
    """Principal submatrix on the strictly increasing vertex set `keep`."""
    keep = tuple(keep)
    if not keep:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if any(v < 0 or v >= g.n for v in keep):
        raise ValueError(f"vertex index out of range 0..{g.n - 1}: {keep}")
    if any(keep[i] >= keep[i + 1] for i in range(len(keep) - 1)):
        raise ValueError("vertex set must be strictly increasing")
    a = g.a
    return Digraph(tuple(tuple(a[i][j] for j in keep) for i in keep))


def _forward_reach(a: tuple, n: int, start: int) -> int:
    """Bitmask of vertices reachable from `start` along nonzero arcs."""
    seen = 1 << start
    stack = [start]
    while stack:
        i = stack.pop()
        row = a[i]
        for j in range(n):
            if j != i and row[j] != 0 and not seen >> j & 1:
                seen |= 1 << j
                stack.append(j)
    return seen


def is_connected(g: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a nonzero-arc path.

    This is strong connectivity; for sign-symmetric matrices it coincides
    with connectivity of the underlying undirected graph.
    """
    n = g.n
    if n == 1:
        return True
    full = (1 << n) - 1
    if _forward_reach(g.a, n, 0) != full:
        return False
    at = tuple(zip(*g.a))
    return _forward_reach(at, n, 0) == full


def connected_components(g: Digraph) -> list[tuple[int, ...]]:
    """Partition into maximal (strongly) connected vertex sets, each sorted."""
    n, a = g.n, g.a
    fwd = [_forward_reach(a, n, i) for i in range(n)]
    comps: list[tuple[int, ...]] = []
    assigned = 0
    for i in range(n):
        if assigned >> i & 1:
            continue
        members = [j for j in range(n) if fwd[i] >> j & 1 and fwd[j] >> i & 1]
        for j in members:
            assigned |= 1 << j
        comps.append(tuple(members))
    return comps


def symmetric_components(g: Digraph) -> list[tuple[int, ...]]:
    """Components after zeroing every entry pair with a_ij != a_ji."""
    a, n = g.a, g.n
    bstar = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] == a[j][i]:
                bstar[i][j] = a[i][j]
    return connected_components(Digraph(bstar))


def row_norms(g: Digraph) -> tuple[int, ...]:
    """Diagonal of A*A: the norm sum_j a_ij*a_ji of each row/vertex."""
    a, n = g.a, g.n
    return tuple(sum(a[i][j] * a[j][i] for j in range(n)) for i in range(n))
