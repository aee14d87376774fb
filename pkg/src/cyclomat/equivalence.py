"""Signed-permutation equivalence: group action, canonical forms, invariants.

Two digraphs A and B are equivalent when P^T A P = +/-B for a signed
permutation matrix P; the diagonal case is a sign switching. Equivalence
is decided through a canonical form: the matrix whose entry sequence,
read in growing-principal-block order, is lexicographically least over the
whole group (all vertex orderings, all sign patterns, both global signs).
The canonicalisation is a backtracking search over vertex orderings with
greedy sign resolution and prefix pruning against the incumbent; a
transform achieving the canonical form is retained so equivalence queries
can return an explicit witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matcore import Digraph, transpose

__all__ = [
    "SignedPermutation",
    "apply",
    "sign_switch",
    "canonical_form",
    "are_equivalent",
    "equivalence_witness",
    "equivalent_to_transpose",
    "weight_modulus_sequences",
]


@dataclass(frozen=True)
class SignedPermutation:
    """A vertex bijection i -> perm[i] plus per-vertex signs and a global sign."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]
    negate: int = 1

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a bijection on 0..n-1")
        if len(self.signs) != n or any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +/-1 per vertex")
        if self.negate not in (-1, 1):
            raise ValueError("negate must be +/-1")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(n)), (1,) * n, 1)

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """self after other: apply(g, self.compose(other)) == apply(apply(g, other), self)."""
        if len(self.perm) != len(other.perm):
            raise ValueError("size mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(
            other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm))
        )
        return SignedPermutation(perm, signs, self.negate * other.negate)

    def inverse(self) -> SignedPermutation:
        n = len(self.perm)
        inv = [0] * n
        signs = [1] * n
        for i in range(n):
            inv[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPermutation(tuple(inv), tuple(signs), self.negate)


def apply(g: Digraph, p: SignedPermutation) -> Digraph:
    """negate * P^T A P: entry [perm[i]][perm[j]] = negate*signs[i]*signs[j]*a[i][j]."""
    if len(p.perm) != g.n:
        raise ValueError(f"permutation size {len(p.perm)} != order {g.n}")
    n, a = g.n, g.a
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        si = p.signs[i]
        pi = p.perm[i]
        for j in range(n):
            out[pi][p.perm[j]] = p.negate * si * p.signs[j] * a[i][j]
    return Digraph(out)


def sign_switch(g: Digraph, signs: list[int] | tuple[int, ...]) -> Digraph:
    """Diagonal special case of `apply`: identity permutation, no negation."""
    if len(signs) != g.n:
        raise ValueError(f"sign vector length {len(signs)} != order {g.n}")
    return apply(g, SignedPermutation(tuple(range(g.n)), tuple(signs), 1))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------
#
# The encoding of a matrix M enumerates entries by growing leading principal
# blocks: for each d, first row d up to the diagonal (M[d][0..d]), then
# column d above it (M[0..d-1][d]). Prefixes therefore depend only on the
# vertices placed so far, which makes incremental comparison sound.
#
# Sign patterns are resolved with a union-find over vertices carrying
# relative signs. Scanning entries in encoding order, a nonzero entry whose
# endpoints lie in distinct sign classes is free: the classes are merged
# with the relative sign that makes the entry -|x|, the lexicographic
# optimum at that position. An entry within one class is forced. This
# yields the exact minimum over all sign assignments for a fixed vertex
# order and global sign, so the outer search minimises over orders and the
# global sign only.


def _find(parent: list[int], parity: list[int], x: int) -> tuple[int, int]:
    s = 1
    while parent[x] != x:
        s *= parity[x]
        x = parent[x]
    return x, s


def _entry_value(
    parent: list[int], parity: list[int], u: int, v: int, x: int, negate: int
) -> int:
    """Value of a nonzero entry, merging sign classes greedily when free."""
    ru, su = _find(parent, parity, u)
    rv, sv = _find(parent, parity, v)
    if ru == rv:
        return negate * su * sv * x
    # eps[ru] := rel * eps[rv] chosen so the entry becomes -|x|
    rel = -1 if negate * su * sv * x > 0 else 1
    parent[ru] = rv
    parity[ru] = rel
    return -abs(x)


def _block_values(
    a: tuple, order: list[int], parent: list[int], parity: list[int], v: int, negate: int
) -> list[int]:
    """Entry values contributed by appending vertex v (mutates the sign state)."""
    vals: list[int] = []
    row_v = a[v]
    for u in order:
        x = row_v[u]
        vals.append(_entry_value(parent, parity, u, v, x, negate) if x else 0)
    vals.append(negate * row_v[v])
    for u in order:
        x = a[u][v]
        vals.append(_entry_value(parent, parity, u, v, x, negate) if x else 0)
    return vals


class _Canonicalizer:
    def __init__(self, g: Digraph):
        self.a = g.a
        self.n = g.n
        self.best: list[int] | None = None
        self.best_transform: tuple[list[int], list[int], list[int], int] | None = None

    def run(self) -> tuple[Digraph, SignedPermutation]:
        n = self.n
        for negate in (1, -1):
            self._dfs([], list(range(n)), [1] * n, [], negate)
        order, parent, parity, negate = self.best_transform  # type: ignore[misc]
        perm = [0] * n
        for pos, u in enumerate(order):
            perm[u] = pos
        signs = tuple(_find(parent, parity, x)[1] for x in range(n))
        transform = SignedPermutation(tuple(perm), signs, negate)
        key = _rebuild(self.best, n)  # type: ignore[arg-type]
        return key, transform

    def _dfs(
        self,
        order: list[int],
        parent: list[int],
        parity: list[int],
        vals: list[int],
        negate: int,
    ):
        if len(order) == self.n:
            if self.best is None or vals < self.best:
                self.best = list(vals)
                self.best_transform = (list(order), parent, parity, negate)
            return
        candidates = []
        for v in range(self.n):
            if v in order:
                continue
            par, pty = parent.copy(), parity.copy()
            block = _block_values(self.a, order, par, pty, v, negate)
            candidates.append((block, v, par, pty))
        candidates.sort(key=lambda c: c[0])
        for block, v, par, pty in candidates:
            cand = vals + block
            if self.best is not None and cand > self.best[: len(cand)]:
                break  # candidates are sorted: the rest are no better
            order.append(v)
            self._dfs(order, par, pty, cand, negate)
            order.pop()


def _rebuild(enc: list[int], n: int) -> Digraph:
    m = [[0] * n for _ in range(n)]
    it = iter(enc)
    for d in range(n):
        for j in range(d + 1):
            m[d][j] = next(it)
        for j in range(d):
            m[j][d] = next(it)
    return Digraph(m)


_canon_cache: dict[tuple, tuple[Digraph, SignedPermutation]] = {}


def _canonical_data(g: Digraph) -> tuple[Digraph, SignedPermutation]:
    hit = _canon_cache.get(g.a)
    if hit is None:
        hit = _Canonicalizer(g).run()
        _canon_cache[g.a] = hit
    return hit


def canonical_form(g: Digraph) -> Digraph:
    """Least representative of g's orbit; equal for two digraphs iff equivalent."""
    return _canonical_data(g)[0]


def are_equivalent(a: Digraph, b: Digraph) -> bool:
    """True iff P^T A P = +/-B for some signed permutation P."""
    if a.n != b.n:
        return False
    return canonical_form(a) == canonical_form(b)


def equivalence_witness(a: Digraph, b: Digraph) -> SignedPermutation | None:
    """A transform p with apply(a, p) == b, or None when inequivalent."""
    if a.n != b.n:
        return None
    key_a, ta = _canonical_data(a)
    key_b, tb = _canonical_data(b)
    if key_a != key_b:
        return None
    return tb.inverse().compose(ta)


def equivalent_to_transpose(g: Digraph) -> bool:
    return are_equivalent(g, transpose(g))


def _underlying(g: Digraph) -> list[list[int]]:
    a, n = g.a, g.n
    return [
        [j for j in range(n) if j != i and (a[i][j] != 0 or a[j][i] != 0)]
        for i in range(n)
    ]


def weight_modulus_sequences(
    g: Digraph, max_len: int, with_charges: bool = False
) -> set[tuple[int, ...]]:
    """Moduli of edge weights along directed traversals of induced paths.

    Paths have at most `max_len` vertices; both traversal directions of an
    asymmetric edge contribute their own moduli. With `with_charges`, the
    moduli of the visited charges are interleaved, which stays invariant
    under equivalence and separates some charged digraphs from their
    transposes when bare weight sequences cannot.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    a, n = g.a, g.n
    adj = _underlying(g)
    out: set[tuple[int, ...]] = set()

    def extend(path: list[int]):
        if len(path) >= 2:
            seq: list[int] = []
            if with_charges:
                seq.append(abs(a[path[0]][path[0]]))
            for u, v in zip(path, path[1:]):
                seq.append(abs(a[u][v]))
                if with_charges:
                    seq.append(abs(a[v][v]))
            out.add(tuple(seq))
        if len(path) == max_len:
            return
        last = path[-1]
        for v in adj[last]:
            if v in path:
                continue
            # induced: v may touch only the current endpoint
            if any(u != last and v in adj[u] for u in path):
                continue
            path.append(v)
            extend(path)
            path.pop()

    for start in range(n):
        extend([start])
    return out
