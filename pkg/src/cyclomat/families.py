"""Generators for every named digraph and surd-graph family.

Each builder fixes one concrete integer matrix per family instance; all
statements about the families hold up to signed-permutation equivalence,
so any fixed representative works, but a fixed one keeps outputs
byte-for-byte reproducible. Vertex orderings are documented per builder.

Tilde families follow the convention that the subscript is one fewer than
the number of vertices; all other subscripts equal the number of vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .matcore import Digraph, SurdMatrix, transpose

__all__ = ["FamilyId", "generate", "generate_surd", "catalog", "parse_family_name", "family_label"]


@dataclass(frozen=True)
class FamilyId:
    name: str
    n: int | None = None
    transposed: bool = False


def _empty(n: int) -> list[list[int]]:
    return [[0] * n for _ in range(n)]


def _edge(m: list[list[int]], i: int, j: int, fwd: int = 1, back: int | None = None):
    m[i][j] = fwd
    m[j][i] = fwd if back is None else back


def _path(n: int) -> list[list[int]]:
    m = _empty(n)
    for i in range(n - 1):
        _edge(m, i, i + 1)
    return m


# -- simply laced ------------------------------------------------------------


def _a(n: int) -> list[list[int]]:
    return _path(n)


def _atilde(n: int) -> list[list[int]]:
    if n == 1:
        return [[0, 2], [2, 0]]
    m = _path(n + 1)
    _edge(m, 0, n)
    return m


def _d(n: int) -> list[list[int]]:
    # fork tips 0,1 on vertex 2, then a path 2..n-1
    m = _empty(n)
    _edge(m, 0, 2)
    _edge(m, 1, 2)
    for i in range(2, n - 1):
        _edge(m, i, i + 1)
    return m


def _dtilde(n: int) -> list[list[int]]:
    # forks at both ends of the path 2..n-2
    m = _empty(n + 1)
    _edge(m, 0, 2)
    _edge(m, 1, 2)
    for i in range(2, n - 2):
        _edge(m, i, i + 1)
    _edge(m, n - 2, n - 1)
    _edge(m, n - 2, n)
    return m


def _branch_path(length: int, branch_at: int, branch_len: int) -> list[list[int]]:
    n = length + branch_len
    m = _empty(n)
    for i in range(length - 1):
        _edge(m, i, i + 1)
    prev = branch_at
    for k in range(branch_len):
        _edge(m, prev, length + k)
        prev = length + k
    return m


def _e_family(n: int) -> list[list[int]]:
    # E6/E7/E8: path of n-1 vertices with one extra vertex on position 2
    return _branch_path(n - 1, 2, 1)


def _e6tilde() -> list[list[int]]:
    return _branch_path(5, 2, 2)


def _e7tilde() -> list[list[int]]:
    return _branch_path(7, 3, 1)


def _e8tilde() -> list[list[int]]:
    return _branch_path(8, 2, 1)


# -- sporadic uncharged maximal digraphs --------------------------------------


def _a1tilde_prime() -> list[list[int]]:
    return [[0, 1], [4, 0]]


def _o4prime() -> list[list[int]]:
    # vertex order: bottom-left, top-left, bottom-right, top-right
    return [[0, -1, 1, 0], [-1, 0, 0, 1], [3, 0, 0, 1], [0, 3, 1, 0]]


def _o4doubleprime() -> list[list[int]]:
    return [[0, -1, 1, 0], [-1, 0, 0, 1], [2, 0, 0, 1], [0, 2, 1, 0]]


def _s8minus() -> list[list[int]]:
    """Cube with {1,2} pairs on a perfect matching, three negative edges.

    Vertex order follows the drawing: front square bottom/top then back
    square bottom/top, left column before right.
    """
    m = _empty(8)
    i, j, k, l, mm, n, o, p = range(8)
    _edge(m, i, j, 2, 1)
    _edge(m, k, l, 2, 1)
    _edge(m, mm, n, -2, -1)
    _edge(m, o, p, 2, 1)
    _edge(m, i, k)
    _edge(m, i, mm)
    _edge(m, j, l, -1)
    _edge(m, j, n)
    _edge(m, l, p)
    _edge(m, k, o, -1)
    _edge(m, mm, o)
    _edge(m, n, p)
    return m


# -- the L ladders -----------------------------------------------------------
#
# Vertex order for L/L'/LG: left apex 0, top row 1..r, bottom row r+1..2r,
# right apex 2r+1, with n = 2r+2. For L+/LG+: apex 0, top 1..r, bottom
# r+1..2r (the two charged vertices are r and 2r), with n = 2r+1.


def _ladder_core(m: list[list[int]], top0: int, bot0: int, r: int):
    for k in range(r - 1):
        _edge(m, top0 + k, top0 + k + 1, 1)
        _edge(m, bot0 + k, bot0 + k + 1, -1)
        _edge(m, bot0 + k, top0 + k + 1, -1)
        _edge(m, top0 + k, bot0 + k + 1, 1)


def _l(n: int, primed: bool = False) -> list[list[int]]:
    r = (n - 2) // 2
    m = _empty(n)
    top0, bot0, omega = 1, r + 1, n - 1
    _edge(m, 0, top0, 2, 1)
    _edge(m, 0, bot0, 2, 1)
    _ladder_core(m, top0, bot0, r)
    if primed:
        _edge(m, top0 + r - 1, omega, 2, 1)
        _edge(m, bot0 + r - 1, omega, -2, -1)
    else:
        _edge(m, top0 + r - 1, omega, 1, 2)
        _edge(m, bot0 + r - 1, omega, -1, -2)
    return m


def _lplus(n: int) -> list[list[int]]:
    r = (n - 1) // 2
    m = _empty(n)
    top0, bot0 = 1, r + 1
    _edge(m, 0, top0, 1, 2)
    _edge(m, 0, bot0, 1, 2)
    _ladder_core(m, top0, bot0, r)
    _edge(m, top0 + r - 1, bot0 + r - 1, -1)
    m[top0 + r - 1][top0 + r - 1] = 1
    m[bot0 + r - 1][bot0 + r - 1] = 1
    return m


# -- charged sporadics --------------------------------------------------------


def _a2pm() -> list[list[int]]:
    return [[1, 3], [1, -1]]


def _o4pm() -> list[list[int]]:
    # order: bottom-left(-), top-left(+), bottom-right(+), top-right(-)
    return [[-1, 1, 2, 0], [1, 1, 0, 2], [1, 0, 1, -1], [0, 1, -1, -1]]


def _b2pm() -> list[list[int]]:
    return [[1, 1], [2, -1]]


# -- affine non-simply-laced Dynkin diagrams ----------------------------------


def _btilde(n: int) -> list[list[int]]:
    # fork tips 0,1 on vertex 2; path 2..n; the far edge carries the {2,1} pair
    m = _empty(n + 1)
    _edge(m, 0, 2)
    _edge(m, 1, 2)
    for i in range(2, n - 1):
        _edge(m, i, i + 1)
    _edge(m, n - 1, n, 2, 1)
    return m


def _ctilde(n: int) -> list[list[int]]:
    # path 0..n; the weight-2 entries point into both end vertices
    m = _path(n + 1)
    m[1][0] = 2
    m[n - 1][n] = 2
    return m


def _ctilde_prime(n: int) -> list[list[int]]:
    # path 0..n; both weight-2 entries point toward vertex 0
    m = _path(n + 1)
    m[1][0] = 2
    m[n][n - 1] = 2
    return m


def _f4tilde() -> list[list[int]]:
    m = _path(5)
    m[3][2] = 2
    return m


def _g2tilde() -> list[list[int]]:
    m = _path(3)
    m[2][1] = 3
    return m


# -- finite non-simply-laced Dynkin diagrams ----------------------------------


def _b(n: int) -> list[list[int]]:
    m = _path(n)
    m[1][0] = 2
    return m


def _c(n: int) -> list[list[int]]:
    return [list(r) for r in zip(*_b(n))]


def _f4() -> list[list[int]]:
    m = _path(4)
    m[2][1] = 2
    return m


def _g2() -> list[list[int]]:
    return [[0, 1], [3, 0]]


# -- charged families ---------------------------------------------------------


def _i(n: int) -> list[list[int]]:
    # charged end 0, path 0..n-3, fork tips n-2 and n-1 on vertex n-3
    m = _empty(n)
    m[0][0] = 1
    for i in range(n - 3):
        _edge(m, i, i + 1)
    _edge(m, n - 3, n - 2)
    _edge(m, n - 3, n - 1)
    return m


def _j(n: int) -> list[list[int]]:
    m = _path(n)
    m[0][0] = 1
    m[n - 1][n - 1] = 1
    return m


def _m(n: int) -> list[list[int]]:
    m = _path(n)
    m[1][0] = 2
    m[n - 1][n - 1] = 1
    return m


def _pplus(n: int) -> list[list[int]]:
    m = _path(n)
    m[0][0] = 1
    return m


# -- surd-graph companions of the maximal digraphs -------------------------------------------------------


def _a2g_pm() -> list[list[int]]:
    return [[1, 3], [3, -1]]


def _o4g_prime() -> list[list[int]]:
    return [[0, -1, 3, 0], [-1, 0, 0, 3], [3, 0, 0, 1], [0, 3, 1, 0]]


def _o4g_pm() -> list[list[int]]:
    return [[-1, 1, 2, 0], [1, 1, 0, 2], [2, 0, 1, -1], [0, 2, -1, -1]]


def _s8g_minus() -> list[list[int]]:
    m = _empty(8)
    i, j, k, l, mm, n, o, p = range(8)
    _edge(m, i, j, 2)
    _edge(m, k, l, 2)
    _edge(m, mm, n, -2)
    _edge(m, o, p, 2)
    _edge(m, i, k)
    _edge(m, i, mm)
    _edge(m, j, l, -1)
    _edge(m, j, n)
    _edge(m, l, p)
    _edge(m, k, o, -1)
    _edge(m, mm, o)
    _edge(m, n, p)
    return m


def _lg(n: int) -> list[list[int]]:
    r = (n - 2) // 2
    m = _empty(n)
    top0, bot0, omega = 1, r + 1, n - 1
    _edge(m, 0, top0, 2)
    _edge(m, 0, bot0, 2)
    _ladder_core(m, top0, bot0, r)
    _edge(m, top0 + r - 1, omega, 2)
    _edge(m, bot0 + r - 1, omega, -2)
    return m


def _lgplus(n: int) -> list[list[int]]:
    r = (n - 1) // 2
    m = _empty(n)
    top0, bot0 = 1, r + 1
    _edge(m, 0, top0, 2)
    _edge(m, 0, bot0, 2)
    _ladder_core(m, top0, bot0, r)
    _edge(m, top0 + r - 1, bot0 + r - 1, -1)
    m[top0 + r - 1][top0 + r - 1] = 1
    m[bot0 + r - 1][bot0 + r - 1] = 1
    return m


# -- registry ------------------------------------------------------------------


def _even_ge4(n: int) -> bool:
    return n >= 4 and n % 2 == 0


def _odd_ge3(n: int) -> bool:
    return n >= 3 and n % 2 == 1


@dataclass(frozen=True)
class _Family:
    builder: object
    valid: object  # predicate on n, or None for fixed families
    order_of: object  # order as a function of n (None: builder takes no n)
    self_transpose: object = None  # predicate on n; None means always
    surd: bool = False
    transpose_in_catalog: bool = True  # False when another family is the transpose


_FAMILIES: dict[str, _Family] = {
    "A": _Family(_a, lambda n: n >= 1, lambda n: n),
    "Atilde": _Family(_atilde, lambda n: n >= 1, lambda n: n + 1),
    "D": _Family(_d, lambda n: n >= 4, lambda n: n),
    "Dtilde": _Family(_dtilde, lambda n: n >= 4, lambda n: n + 1),
    "E6": _Family(lambda: _e_family(6), None, None),
    "E7": _Family(lambda: _e_family(7), None, None),
    "E8": _Family(lambda: _e_family(8), None, None),
    "E6tilde": _Family(_e6tilde, None, None),
    "E7tilde": _Family(_e7tilde, None, None),
    "E8tilde": _Family(_e8tilde, None, None),
    "A1tilde": _Family(lambda: [[0, 2], [2, 0]], None, None),
    "A1tilde_prime": _Family(_a1tilde_prime, None, None),
    "O4prime": _Family(_o4prime, None, None),
    "S8minus": _Family(_s8minus, None, None),
    "L": _Family(_l, _even_ge4, lambda n: n, self_transpose=lambda n: n == 4),
    "Lprime": _Family(lambda n: _l(n, True), _even_ge4, lambda n: n),
    "Lplus": _Family(_lplus, _odd_ge3, lambda n: n, self_transpose=lambda n: False),
    "A2pm": _Family(_a2pm, None, None),
    "O4pm": _Family(_o4pm, None, None),
    "Btilde": _Family(_btilde, lambda n: n >= 3, lambda n: n + 1, self_transpose=lambda n: False),
    "Ctilde": _Family(_ctilde, lambda n: n >= 2, lambda n: n + 1, self_transpose=lambda n: False),
    "Ctilde_prime": _Family(_ctilde_prime, lambda n: n >= 2, lambda n: n + 1),
    "F4tilde": _Family(_f4tilde, None, None, self_transpose=lambda n: False),
    "G2tilde": _Family(_g2tilde, None, None, self_transpose=lambda n: False),
    "B": _Family(_b, lambda n: n >= 2, lambda n: n, self_transpose=lambda n: n == 2,
                 transpose_in_catalog=False),
    "C": _Family(_c, lambda n: n >= 3, lambda n: n, self_transpose=lambda n: False,
                 transpose_in_catalog=False),
    "F4": _Family(_f4, None, None),
    "G2": _Family(_g2, None, None),
    "I": _Family(_i, lambda n: n >= 3, lambda n: n),
    "J": _Family(_j, lambda n: n >= 2, lambda n: n),
    "M": _Family(_m, lambda n: n >= 2, lambda n: n, self_transpose=lambda n: False),
    "Pplus": _Family(_pplus, lambda n: n >= 1, lambda n: n),
    "O4doubleprime": _Family(_o4doubleprime, None, None),
    "B2pm": _Family(_b2pm, None, None),
    "A2G_pm": _Family(_a2g_pm, None, None, surd=True),
    "O4G_prime": _Family(_o4g_prime, None, None, surd=True),
    "O4G_pm": _Family(_o4g_pm, None, None, surd=True),
    "S8G_minus": _Family(_s8g_minus, None, None, surd=True),
    "LG": _Family(_lg, _even_ge4, lambda n: n, surd=True),
    "LGplus": _Family(_lgplus, _odd_ge3, lambda n: n, surd=True),
}

_FIXED_ORDERS = {
    "E6": 6, "E7": 7, "E8": 8, "E6tilde": 7, "E7tilde": 8, "E8tilde": 9,
    "A1tilde": 2, "A1tilde_prime": 2, "O4prime": 4, "S8minus": 8,
    "A2pm": 2, "O4pm": 4, "F4tilde": 5, "G2tilde": 3, "F4": 4, "G2": 2,
    "O4doubleprime": 4, "B2pm": 2, "A2G_pm": 2, "O4G_prime": 4,
    "O4G_pm": 4, "S8G_minus": 8,
}


def _resolve(name: str, n: int | None) -> tuple[_Family, list]:
    fam = _FAMILIES.get(name)
    if fam is None:
        raise ValueError(f"unknown family {name!r}")
    if fam.valid is None:
        if n is not None and name in _FIXED_ORDERS and _FIXED_ORDERS[name] != n:
            raise ValueError(f"family {name} has no order parameter {n}")
        return fam, []
    if n is None:
        raise ValueError(f"family {name} needs an order parameter")
    if not fam.valid(n):
        raise ValueError(f"order {n} is out of range for family {name}")
    return fam, [n]


def generate(name: str | FamilyId, n: int | None = None, transposed: bool = False) -> Digraph:
    """Integer matrix of a family instance, transposed when requested."""
    if isinstance(name, FamilyId):
        name, n, transposed = name.name, name.n, name.transposed
    fam, args = _resolve(name, n)
    if fam.surd:
        raise ValueError(f"family {name} is a surd graph; use generate_surd")
    g = Digraph(fam.builder(*args))
    return transpose(g) if transposed else g


def generate_surd(name: str | FamilyId, n: int | None = None) -> SurdMatrix:
    """Symmetric surd matrix of one of the G-suffixed surd families."""
    if isinstance(name, FamilyId):
        name, n = name.name, name.n
    fam, args = _resolve(name, n)
    if not fam.surd:
        raise ValueError(f"family {name} is not a surd-graph family")
    return SurdMatrix(fam.builder(*args))


def family_order(fid: FamilyId) -> int:
    fam, _ = _resolve(fid.name, fid.n)
    if fam.order_of is None:
        return _FIXED_ORDERS[fid.name]
    return fam.order_of(fid.n)


def catalog(max_n: int) -> list[tuple[FamilyId, Digraph]]:
    """All integer family instances of order <= max_n, plus transposes of
    the instances that are not equivalent to their own transpose."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    out: list[tuple[FamilyId, Digraph]] = []
    for name, fam in _FAMILIES.items():
        if fam.surd:
            continue
        if fam.valid is None:
            orders: list[int | None] = [None] if _FIXED_ORDERS[name] <= max_n else []
        else:
            # Atilde(1) duplicates the fixed A1tilde entry
            start = 2 if name == "Atilde" else 1
            orders = [n for n in range(start, max_n + 1) if fam.valid(n) and fam.order_of(n) <= max_n]
        for n in orders:
            fid = FamilyId(name, n)
            out.append((fid, generate(fid)))
            self_t = True if fam.self_transpose is None else fam.self_transpose(n)
            if not self_t and fam.transpose_in_catalog:
                fid_t = FamilyId(name, n, transposed=True)
                out.append((fid_t, generate(fid_t)))
    return out


_LABELS = {
    "A": "A{n}", "Atilde": "A~{n}", "D": "D{n}", "Dtilde": "D~{n}",
    "E6": "E6", "E7": "E7", "E8": "E8",
    "E6tilde": "E~6", "E7tilde": "E~7", "E8tilde": "E~8",
    "A1tilde": "A~1", "A1tilde_prime": "A~1'",
    "O4prime": "O4'", "S8minus": "S8-",
    "L": "L{n}", "Lprime": "L{n}'", "Lplus": "L{n}+",
    "A2pm": "A2+-", "O4pm": "O4+-",
    "Btilde": "B~{n}", "Ctilde": "C~{n}", "Ctilde_prime": "C~{n}'",
    "F4tilde": "F~4", "G2tilde": "G~2",
    "B": "B{n}", "C": "C{n}", "F4": "F4", "G2": "G2",
    "I": "I{n}", "J": "J{n}", "M": "M{n}", "Pplus": "P{n}+",
    "O4doubleprime": "O4''", "B2pm": "B2+-",
    "A2G_pm": "A2G+-", "O4G_prime": "O4G'", "O4G_pm": "O4G+-",
    "S8G_minus": "S8G-", "LG": "LG{n}", "LGplus": "LG{n}+",
}


def family_label(fid: FamilyId) -> str:
    label = _LABELS[fid.name].format(n=fid.n)
    return label + "^T" if fid.transposed else label


_LITERAL_NAMES = {
    "a~1": "A1tilde", "a~1'": "A1tilde_prime", "o4'": "O4prime",
    "o4''": "O4doubleprime", "s8-": "S8minus", "a2+-": "A2pm", "o4+-": "O4pm",
    "b2+-": "B2pm", "f4": "F4", "g2": "G2", "f~4": "F4tilde", "g~2": "G2tilde",
    "e6": "E6", "e7": "E7", "e8": "E8",
    "e~6": "E6tilde", "e~7": "E7tilde", "e~8": "E8tilde",
    "a2g+-": "A2G_pm", "o4g'": "O4G_prime", "o4g+-": "O4G_pm", "s8g-": "S8G_minus",
}

_PARAMETRIC = {
    ("A", False, ""): "A", ("A", True, ""): "Atilde",
    ("B", False, ""): "B", ("B", True, ""): "Btilde",
    ("C", False, ""): "C", ("C", True, ""): "Ctilde", ("C", True, "'"): "Ctilde_prime",
    ("D", False, ""): "D", ("D", True, ""): "Dtilde",
    ("I", False, ""): "I", ("J", False, ""): "J",
    ("L", False, ""): "L", ("L", False, "'"): "Lprime", ("L", False, "+"): "Lplus",
    ("M", False, ""): "M", ("P", False, "+"): "Pplus",
}


def parse_family_name(text: str, n: int | None = None) -> FamilyId:
    """Parse CLI family syntax: ~ marks tildes, ' primes (C~4', L6+, B3^T)."""
    s = text.strip().lower()
    transposed = False
    if s.endswith("^t"):
        transposed = True
        s = s[:-2]
    if s in _LITERAL_NAMES:
        return FamilyId(_LITERAL_NAMES[s], None, transposed)
    m = re.match(r"^lg(\d*)(\+?)$", s)
    if m:
        num = int(m.group(1)) if m.group(1) else n
        if num is None:
            raise ValueError(f"family {text!r} needs an order parameter")
        return FamilyId("LGplus" if m.group(2) else "LG", num, transposed)
    m = re.match(r"^([a-z])(~?)(\d*)(''|'|\+)?$", s)
    if not m:
        raise ValueError(f"cannot parse family name {text!r}")
    letter = m.group(1).upper()
    num = int(m.group(3)) if m.group(3) else n
    key = _PARAMETRIC.get((letter, bool(m.group(2)), m.group(4) or ""))
    if key is None:
        raise ValueError(f"cannot parse family name {text!r}")
    if num is None:
        raise ValueError(f"family {text!r} needs an order parameter")
    if key == "Atilde" and num == 1:
        return FamilyId("A1tilde", None, transposed)
    return FamilyId(key, num, transposed)
