"""Constructive symmetrizability tests, integer symmetrizers, symmetrizations.

A real matrix B is symmetrizable when D^-1 B D is symmetric for some
positive diagonal D, equivalently when the balancing condition
b_ij*d_j^2 = b_ji*d_i^2 holds. For integer matrices this is decidable by
a breadth-first labelling: B is symmetrizable iff it is sign-symmetric and
the product of weights around every cycle equals the product in the
reverse direction. The labelling also yields a minimal integer witness
(the d_i^2) and the unique symmetrization, whose entries are signed square
roots of the products b_ij*b_ji.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .matcore import Digraph, SurdMatrix, is_sign_symmetric, sgn

__all__ = [
    "CycleViolation",
    "Symmetrizer",
    "NotSymmetrizableError",
    "check_cycle_condition",
    "is_symmetrizable",
    "compute_symmetrizer",
    "symmetrization",
    "balancing_holds",
]


@dataclass(frozen=True)
class CycleViolation:
    """A directed cycle whose forward and backward weight products differ."""

    cycle: tuple[int, ...]
    forward_product: int
    backward_product: int


@dataclass(frozen=True)
class Symmetrizer:
    """Per-vertex positive integers d_i^2 witnessing the balancing condition."""

    dsq: tuple[int, ...]


class NotSymmetrizableError(ValueError):
    """Raised when an operation requires a symmetrizable matrix.

    `violation` carries the offending CycleViolation, or None when the
    matrix already fails sign symmetry.
    """

    def __init__(self, message: str, violation: CycleViolation | None = None):
        super().__init__(message)
        self.violation = violation


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _label_components(
    g: Digraph,
) -> tuple[list[Fraction], list[list[int]]] | CycleViolation:
    """Breadth-first vertex labelling with exact rationals.

    The root of each component gets label 1 and crossing the arc i -> j
    multiplies the label by a_ji/a_ij. A revisited vertex whose recomputed
    label disagrees exposes a cycle with unbalanced products; otherwise the
    labels are the d_i^2 up to component-wise scaling. Every non-tree edge
    is checked once after its endpoints are labelled.
    """
    a, n = g.a, g.n
    labels: list[Fraction | None] = [None] * n
    parent = [-1] * n
    comps: list[list[int]] = []
    for root in range(n):
        if labels[root] is not None:
            continue
        labels[root] = Fraction(1)
        comp = [root]
        queue = [root]
        while queue:
            i = queue.pop(0)
            li = labels[i]
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                ratio = Fraction(a[j][i], a[i][j])
                if labels[j] is None:
                    labels[j] = li * ratio
                    parent[j] = i
                    comp.append(j)
                    queue.append(j)
                elif labels[j] != li * ratio:
                    # Close the tree path from j to i with the arc i -> j.
                    pi = _tree_path(parent, i)
                    pj = _tree_path(parent, j)
                    while len(pi) > 1 and len(pj) > 1 and pi[-2] == pj[-2]:
                        pi.pop()
                        pj.pop()
                    cycle = tuple(pj[:-1] + list(reversed(pi)))
                    fwd = bwd = 1
                    for k in range(len(cycle)):
                        u, v = cycle[k], cycle[(k + 1) % len(cycle)]
                        fwd *= a[u][v]
                        bwd *= a[v][u]
                    return CycleViolation(cycle, fwd, bwd)
        comps.append(comp)
    return [labels[i] for i in range(n)], comps  # type: ignore[misc]


def check_cycle_condition(g: Digraph) -> CycleViolation | None:
    """Return None when all cycle products balance, else a certificate.

    The input must be sign-symmetric; otherwise the labelling procedure is
    undefined and a ValueError is raised.
    """
    if not is_sign_symmetric(g):
        raise ValueError("cycle condition labelling requires a sign-symmetric matrix")
    result = _label_components(g)
    return result if isinstance(result, CycleViolation) else None


def is_symmetrizable(g: Digraph) -> bool:
    """True iff g is sign-symmetric and every cycle product balances."""
    if not is_sign_symmetric(g):
        return False
    return not isinstance(_label_components(g), CycleViolation)


def _require_symmetrizable(g: Digraph):
    if not is_sign_symmetric(g):
        raise NotSymmetrizableError("matrix is not sign-symmetric")
    result = _label_components(g)
    if isinstance(result, CycleViolation):
        raise NotSymmetrizableError(
            f"cycle condition fails on cycle {result.cycle}: "
            f"{result.forward_product} != {result.backward_product}",
            violation=result,
        )
    return result


def compute_symmetrizer(g: Digraph) -> Symmetrizer:
    """Minimal integer d_i^2: within each connected component the gcd is 1."""
    labels, comps = _require_symmetrizable(g)
    dsq = [0] * g.n
    for comp in comps:
        scale = lcm(*(labels[i].denominator for i in comp))
        nums = [int(labels[i] * scale) for i in comp]
        shrink = gcd(*nums)
        for i, v in zip(comp, nums):
            dsq[i] = v // shrink
    return Symmetrizer(tuple(dsq))


def symmetrization(g: Digraph) -> SurdMatrix:
    """The unique symmetric matrix D^-1 B D, entries sgn(b_ij)*sqrt(b_ij*b_ji)."""
    _require_symmetrizable(g)
    a, n = g.a, g.n
    t = [[0] * n for _ in range(n)]
    for i in range(n):
        t[i][i] = sgn(a[i][i]) * a[i][i] * a[i][i]
        for j in range(i + 1, n):
            t[i][j] = t[j][i] = sgn(a[i][j]) * a[i][j] * a[j][i]
    return SurdMatrix(t)


def balancing_holds(g: Digraph, d: Symmetrizer) -> bool:
    """True iff a_ij*dsq[j] == a_ji*dsq[i] for all i, j."""
    if len(d.dsq) != g.n:
        raise ValueError(f"symmetrizer length {len(d.dsq)} != order {g.n}")
    a, n, dsq = g.a, g.n, d.dsq
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] * dsq[j] != a[j][i] * dsq[i]:
                return False
    return True
