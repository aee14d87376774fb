"""Exact integer characteristic polynomials and certified root location.

Characteristic polynomials use the Faddeev-LeVerrier recurrence, whose
divisions are exact over the integers, with the monic det(xI - A) sign
convention. Root location is certified without floating point:

* interval counts run square-free decomposition (Yun) first, then integer
  Sturm chains evaluated at rational points, with endpoint membership
  decided by exact evaluation;
* membership of *all* roots in an interval, for real-rooted polynomials,
  uses derivative signs at the endpoints (the coefficients of p shifted to
  an endpoint are elementary symmetric functions of the shifted roots);
* interlacing is certified by comparing cumulative root counts at rational
  points that separate every root of both polynomials.

``eigenvalues_float`` is the one floating-point routine, kept as a
cross-check oracle for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .matcore import Digraph
from .symmetrize import NotSymmetrizableError, is_symmetrizable, symmetrization

__all__ = [
    "IntPolynomial",
    "RootCount",
    "char_poly",
    "count_roots",
    "is_cyclotomic",
    "all_eigs_in_open",
    "is_plus_minus_two_only",
    "interlaces",
    "eigenvalues_float",
]

Rational = Fraction | int


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial; coeffs ascending, leading nonzero."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Rational) -> Rational:
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class RootCount:
    """Number of real roots (with multiplicity) in a rational interval."""

    lo: Fraction | None
    hi: Fraction | None
    open_lo: bool
    open_hi: bool
    count: int


# ---------------------------------------------------------------------------
# dense polynomial helpers on ascending integer/Fraction coefficient tuples
# ---------------------------------------------------------------------------


def _strip(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _deriv(c: tuple) -> tuple:
    return _strip([k * c[k] for k in range(1, len(c))])


def _mul(f: tuple, g: tuple) -> tuple:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip(out)


def _content(f: tuple) -> int:
    return gcd(*(abs(c) for c in f)) if f else 0


def _primitive(f: tuple) -> tuple:
    c = _content(f)
    return tuple(v // c for v in f) if c > 1 else f


def _to_fracs(f: tuple) -> tuple:
    return tuple(Fraction(c) for c in f)


def _frac_divmod(f: tuple, g: tuple) -> tuple[tuple, tuple]:
    """Quotient and remainder over the rationals (g nonzero)."""
    rem = list(f)
    q = [Fraction(0)] * max(1, len(f) - len(g) + 1)
    glead = g[-1]
    while len(rem) >= len(g) and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        k = len(rem) - len(g)
        factor = Fraction(rem[-1]) / glead
        q[k] = factor
        for i, b in enumerate(g):
            rem[k + i] -= factor * b
        rem.pop()
    return _strip(q), _strip(rem)


def _clear_denominators(f: tuple) -> tuple:
    """Scale a rational polynomial by a positive constant into primitive Z[x]."""
    if not f:
        return ()
    mult = 1
    for c in f:
        d = Fraction(c).denominator
        mult = mult * d // gcd(mult, d)
    ints = [int(c * mult) for c in f]
    return _primitive(tuple(ints))


def _gcd_poly(f: tuple, g: tuple) -> tuple:
    """Primitive integer gcd (positive leading coefficient)."""
    a, b = _to_fracs(f), _to_fracs(g)
    while b:
        a, b = b, _frac_divmod(a, b)[1]
    out = _clear_denominators(a)
    if out and out[-1] < 0:
        out = tuple(-c for c in out)
    return out


def _div_exact(f: tuple, g: tuple) -> tuple:
    q, r = _frac_divmod(_to_fracs(f), _to_fracs(g))
    if r or any(c.denominator != 1 for c in q):
        raise ArithmeticError("division was expected to be exact")
    return tuple(int(c) for c in q)


def _squarefree_factors(f: tuple) -> list[tuple[tuple, int]]:
    """Yun decomposition: f = c * prod g_i^i with each g_i squarefree."""
    f = _primitive(f)
    if len(f) <= 1:
        return []
    d = _deriv(f)
    g = _gcd_poly(f, d)
    if len(g) == 1:
        return [(f, 1)]
    out = []
    w = _div_exact(f, g)
    y = _div_exact(d, g)
    i = 1
    while len(w) > 1:
        z = _strip([a - b for a, b in _zip_pad(y, _deriv(w))])
        if not z:
            out.append((w, i))
            break
        gi = _gcd_poly(w, z)
        if len(gi) > 1:
            out.append((gi, i))
        w = _div_exact(w, gi)
        y = _div_exact(z, gi)
        i += 1
    return out


def _zip_pad(a: tuple, b: tuple):
    la, lb = len(a), len(b)
    if la < lb:
        a = a + (0,) * (lb - la)
    elif lb < la:
        b = b + (0,) * (la - lb)
    return zip(a, b)


def _sturm_chain(f: tuple) -> list[tuple]:
    """Sturm chain of a squarefree primitive integer polynomial.

    Each remainder is rescaled into primitive Z[x] by a positive constant,
    which preserves all sign variation counts.
    """
    chain = [f, _deriv(f)]
    fa, fb = _to_fracs(chain[0]), _to_fracs(chain[1])
    while len(chain[-1]) > 1:
        r = _frac_divmod(fa, fb)[1]
        if not r:
            break
        nxt = _clear_denominators(tuple(-c for c in r))
        chain.append(nxt)
        fa, fb = fb, _to_fracs(nxt)
    return chain


def _sign_at(f: tuple, x: Fraction | None, *, neg_inf: bool = False) -> int:
    """Sign of f at a rational point or at +/-infinity (integer arithmetic)."""
    if not f:
        return 0
    if x is None:
        lead = f[-1]
        s = (lead > 0) - (lead < 0)
        if neg_inf and (len(f) - 1) % 2:
            s = -s
        return s
    num, den = x.numerator, x.denominator
    # Homogeneous Horner: den^deg * f(num/den) has the sign of f at x.
    total = 0
    dpow = 1
    for c in reversed(f):
        total = total * num + c * dpow
        dpow *= den
    return (total > 0) - (total < 0)


def _variations(chain: list[tuple], x: Fraction | None, *, neg_inf: bool = False) -> int:
    signs = [s for s in (_sign_at(p, x, neg_inf=neg_inf) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_distinct_open(
    f: tuple, lo: Fraction | None, hi: Fraction | None
) -> int:
    """Distinct roots of squarefree f in (lo, hi); f must not vanish at lo/hi."""
    chain = _sturm_chain(f)
    vlo = _variations(chain, lo, neg_inf=True) if lo is None else _variations(chain, lo)
    vhi = _variations(chain, hi)
    return vlo - vhi


def _deflate_root(f: tuple, r: Fraction) -> tuple:
    """Divide out one (x - r) factor; r must be a root."""
    q, rem = _frac_divmod(_to_fracs(f), (Fraction(-r), Fraction(1)))
    if rem:
        raise ArithmeticError("deflation point is not a root")
    return _clear_denominators(q)


def _multiplicity_at(factors: list[tuple[tuple, int]], r: Fraction) -> int:
    return sum(m for f, m in factors if _sign_at(f, r) == 0)


def _as_frac(x: Rational | None) -> Fraction | None:
    return None if x is None else Fraction(x)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _charpoly_adjugate(a: tuple, n: int) -> tuple[tuple, list[list[list[int]]]]:
    """Faddeev-LeVerrier: char poly coefficients (ascending) and the matrices
    M_0..M_{n-1} with adj(xI - A) = sum_k M_k x^(n-1-k)."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    adj = [m]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    rng = range(n)
    for k in range(1, n + 1):
        am = [[sum(ai[l] * m[l][j] for l in rng) for j in rng] for ai in a]
        tr = sum(am[i][i] for i in rng)
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace division not exact")
        ck = -tr // k
        coeffs[n - k] = ck
        m = [[am[i][j] + (ck if i == j else 0) for j in rng] for i in rng]
        if k < n:
            adj.append(m)
    return tuple(coeffs), adj


def char_poly(g: Digraph) -> IntPolynomial:
    """det(xI - A) with exact integer coefficients (Faddeev-LeVerrier)."""
    return IntPolynomial(_charpoly_adjugate(g.a, g.n)[0])


def _bordered_charpoly(
    chi: tuple, adj: list[list[list[int]]], edges: list[tuple[int, int, int]], d: int
) -> tuple:
    """Char poly after bordering with one vertex of charge d.

    `edges` lists (i, p, q) with p the entry parent->new in row i and q the
    entry new->parent: det(xI - H) = (x - d) chi(x) - q^T adj(xI - A) p.
    """
    n = len(chi) - 1
    out = [0] * (n + 2)
    for k, ck in enumerate(chi):
        out[k + 1] += ck
        out[k] -= d * ck
    for k, m in enumerate(adj):
        s = 0
        for i, _, qi in edges:
            mi = m[i]
            for j, pj, _ in edges:
                s += qi * mi[j] * pj
        if s:
            out[n - 1 - k] -= s
    return tuple(out)


def count_roots(
    p: IntPolynomial,
    lo: Rational | None,
    hi: Rational | None,
    open_lo: bool = False,
    open_hi: bool = False,
) -> RootCount:
    """Exact number of real roots in the interval, with multiplicity.

    `None` endpoints mean the interval is unbounded on that side. Endpoint
    membership is decided by exact evaluation, never by counting limits.
    """
    flo, fhi = _as_frac(lo), _as_frac(hi)
    if flo is not None and fhi is not None and flo > fhi:
        raise ValueError("interval endpoints out of order")
    coeffs = p.coeffs
    if len(coeffs) == 1:
        return RootCount(flo, fhi, open_lo, open_hi, 0)
    factors = _squarefree_factors(coeffs)
    if flo is not None and fhi is not None and flo == fhi:
        count = 0 if (open_lo or open_hi) else _multiplicity_at(factors, flo)
        return RootCount(flo, fhi, open_lo, open_hi, count)
    total = 0
    for f, mult in factors:
        froot_lo = flo is not None and _sign_at(f, flo) == 0
        froot_hi = fhi is not None and _sign_at(f, fhi) == 0
        inner = f
        if froot_lo:
            inner = _deflate_root(inner, flo)
        if froot_hi and len(inner) > 1:
            inner = _deflate_root(inner, fhi)
        distinct = _count_distinct_open(inner, flo, fhi) if len(inner) > 1 else 0
        if froot_lo and not open_lo:
            distinct += 1
        if froot_hi and not open_hi:
            distinct += 1
        total += mult * distinct
    return RootCount(flo, fhi, open_lo, open_hi, total)


def _all_roots_at_most(coeffs: tuple, bound: int, strict: bool) -> bool:
    """All roots of a monic real-rooted polynomial are <= bound (< if strict).

    Shifting to the bound makes the coefficients elementary symmetric
    functions of bound - root_i, so they are all nonnegative (positive)
    exactly when every shifted root is.
    """
    f = coeffs
    while len(f) > 1:
        v = 0
        for c in reversed(f):
            v = v * bound + c
        if v < 0 or (strict and v == 0):
            return False
        f = _deriv(f)
    return True


def _reflect(coeffs: tuple) -> tuple:
    """Monic polynomial whose roots are the negated roots."""
    deg = len(coeffs) - 1
    out = tuple(c if (deg - k) % 2 == 0 else -c for k, c in enumerate(coeffs))
    return out if out[-1] > 0 else tuple(-c for c in out)


def _coeffs_within_two(coeffs: tuple, strict: bool) -> bool:
    return _all_roots_at_most(coeffs, 2, strict) and _all_roots_at_most(
        _reflect(coeffs), 2, strict
    )


def _real_rooted_within(p: IntPolynomial, strict: bool) -> bool:
    """All roots in [-2, 2] (or (-2, 2)); valid only for real-rooted p."""
    return _coeffs_within_two(p.coeffs, strict)


def is_cyclotomic(g: Digraph) -> bool:
    """True iff g is symmetrizable with every eigenvalue in the closed [-2, 2]."""
    if not is_symmetrizable(g):
        return False
    return _real_rooted_within(char_poly(g), strict=False)


def all_eigs_in_open(g: Digraph) -> bool:
    """True iff g is symmetrizable with every eigenvalue strictly inside (-2, 2)."""
    if not is_symmetrizable(g):
        return False
    return _real_rooted_within(char_poly(g), strict=True)


def is_plus_minus_two_only(g: Digraph) -> bool:
    """True iff A*A = 4I exactly (all eigenvalues at +/-2, full eigenbasis)."""
    a, n = g.a, g.n
    for i in range(n):
        for j in range(n):
            want = 4 if i == j else 0
            if sum(a[i][k] * a[k][j] for k in range(n)) != want:
                return False
    return True


def _count_all_real(p: IntPolynomial) -> bool:
    return count_roots(p, None, None).count == p.degree


def _isolation_points(f: tuple) -> list[Fraction]:
    """Rationals hitting every gap [r_i, r_{i+1}) between roots of squarefree f.

    Returns a point below the least root plus the right endpoint of one
    isolating interval per root, found by Sturm bisection.
    """
    lead = abs(f[-1])
    bound = 1 + max(abs(c) for c in f) // lead
    chain = _sturm_chain(f)
    lo, hi = Fraction(-bound - 1), Fraction(bound + 1)
    points = [lo]
    stack = [(lo, hi, _variations(chain, lo) - _variations(chain, hi))]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            points.append(b)
            continue
        mid = (a + b) / 2
        vm = _variations(chain, mid)
        left = _variations(chain, a) - vm
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    return sorted(set(points))


def interlaces(parent: IntPolynomial, child: IntPolynomial) -> bool:
    """Certify l_1 <= m_1 <= l_2 <= ... <= m_{n-1} <= l_n exactly.

    Both polynomials must be real-rooted and deg(child) = deg(parent) - 1.
    Interlacing holds iff at every real t the cumulative root counts satisfy
    parent_count - 1 <= child_count <= parent_count; it suffices to test one
    rational point in each gap between consecutive roots of either.
    """
    if child.degree != parent.degree - 1:
        raise ValueError("child degree must be one less than parent degree")
    if not (_count_all_real(parent) and _count_all_real(child)):
        raise ValueError("interlacing is defined for real-rooted polynomials")
    product = _mul(parent.coeffs, child.coeffs)
    sf = _primitive(_div_exact(product, _gcd_poly(product, _deriv(product))))
    for t in _isolation_points(sf):
        np_ = count_roots(parent, None, t).count
        nc = count_roots(child, None, t).count
        if not (np_ - 1 <= nc <= np_):
            return False
    return True


def eigenvalues_float(g: Digraph) -> list[float]:
    """Floating eigenvalue approximations via the symmetrization (oracle only)."""
    if not is_symmetrizable(g):
        raise NotSymmetrizableError("eigenvalues_float needs a symmetrizable matrix")
    s = symmetrization(g)
    return [float(x) for x in np.linalg.eigvalsh(np.array(s.to_float()))]
