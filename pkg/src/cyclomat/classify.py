"""Bounded exhaustive classification of connected admissible matrices.

The search grows connected digraphs one vertex at a time, deduplicating
with canonical forms at every level (orderly generation). Growth is
complete because admissibility is hereditary under vertex deletion
(interlacing) and every connected graph has a non-cut vertex; when only
nonsymmetric results are wanted the search starts from the asymmetric
2-vertex seeds instead, since an asymmetric entry pair survives inside
every connected prefix that contains it.

Extension entries are bounded by the 2x2 interlacing constraint on the
new principal pairs (same sign, product at most 4, and a product of 4
forces both incident charges to zero) together with the row-norm bound:
every diagonal entry of A*A equals the matching diagonal entry of S*S,
which interlacing caps at 4 on [-2,2] (strictly below 4 on (-2,2)).
The spectral certificate itself runs last, on exact characteristic
polynomials.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .equivalence import canonical_form, sign_switch
from .matcore import Digraph, induced_subgraph, is_connected, is_symmetric, row_norms
from .families import catalog, family_label
from .spectra import (
    _bordered_charpoly,
    _charpoly_adjugate,
    _coeffs_within_two,
    _real_rooted_within,
    char_poly,
    is_plus_minus_two_only,
)
from .symmetrize import _label_components, CycleViolation

__all__ = [
    "SearchConstraints",
    "ClassEntry",
    "ClassificationReport",
    "VerificationResult",
    "extensions",
    "enumerate_classes",
    "match_families",
    "is_maximal",
    "embeds",
    "verify_theorem_1",
    "verify_corollary_1",
    "verify_theorem_2",
    "verify_corollary_5",
    "verify_corollary_3",
]

DEFAULT_CAP = 10


def search_cap() -> int:
    """Order cap for exhaustive searches; CYCLOMAT_MAX_ORDER overrides."""
    return int(os.environ.get("CYCLOMAT_MAX_ORDER", DEFAULT_CAP))


@dataclass(frozen=True)
class SearchConstraints:
    max_order: int
    require_nonsymmetric: bool = False
    require_nonnegative: bool = False
    allow_charges: bool = True
    open_interval: bool = False

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")


@dataclass
class ClassEntry:
    digraph: Digraph  # canonical representative
    order: int
    maximal: bool
    family: str | None = None


@dataclass
class ClassificationReport:
    constraints: SearchConstraints
    entries: list[ClassEntry] = field(default_factory=list)

    def by_order(self) -> dict[int, list[ClassEntry]]:
        out: dict[int, list[ClassEntry]] = {}
        for e in self.entries:
            out.setdefault(e.order, []).append(e)
        return out

    def maximal_entries(self) -> list[ClassEntry]:
        return [e for e in self.entries if e.maximal]

    def to_text(self) -> str:
        c = self.constraints
        lines = [
            "classification report",
            "constraints: max_order={} interval={} nonnegative={} charges={} nonsymmetric={}".format(
                c.max_order,
                "open" if c.open_interval else "closed",
                "yes" if c.require_nonnegative else "no",
                "yes" if c.allow_charges else "no",
                "yes" if c.require_nonsymmetric else "no",
            ),
        ]
        for order, entries in sorted(self.by_order().items()):
            n_max = sum(e.maximal for e in entries)
            lines.append(f"order {order}: {len(entries)} classes ({n_max} maximal)")
            for e in sorted(entries, key=lambda e: e.digraph.a):
                tag = "maximal" if e.maximal else "       "
                fam = e.family or "unlisted"
                lines.append(f"  {fam:<10s} {tag} {json.dumps([list(r) for r in e.digraph.a])}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        c = self.constraints
        orders = {}
        for order, entries in sorted(self.by_order().items()):
            orders[str(order)] = [
                {
                    "matrix": [list(r) for r in e.digraph.a],
                    "maximal": e.maximal,
                    "family": e.family or "unlisted",
                }
                for e in sorted(entries, key=lambda e: e.digraph.a)
            ]
        return {
            "constraints": {
                "max_order": c.max_order,
                "interval": "open" if c.open_interval else "closed",
                "nonnegative": c.require_nonnegative,
                "charges": c.allow_charges,
                "nonsymmetric": c.require_nonsymmetric,
            },
            "orders": orders,
        }


# ---------------------------------------------------------------------------
# extension generation
# ---------------------------------------------------------------------------

# (p, q) = (a[i][new], a[new][i]) per edge: same sign, 1 <= p*q <= 4.
_PAIRS_ALL = [
    (1, 1), (-1, -1),
    (1, 2), (2, 1), (-1, -2), (-2, -1),
    (1, 3), (3, 1), (-1, -3), (-3, -1),
    (1, 4), (4, 1), (2, 2), (-1, -4), (-4, -1), (-2, -2),
]
_PAIRS_NONNEG = [p for p in _PAIRS_ALL if p[0] > 0]


def _charge_options(c: SearchConstraints) -> tuple[int, ...]:
    if not c.allow_charges:
        return (0,)
    base = (0, 1, -1) if c.open_interval else (0, 1, -1, 2, -2)
    if c.require_nonnegative:
        base = tuple(x for x in base if x >= 0)
    return base


def _parent_dsq(g: Digraph) -> tuple[Fraction, ...]:
    labels, _ = _label_components(g)  # parents are always symmetrizable
    return tuple(labels)


def _extensions_iter(g: Digraph, c: SearchConstraints, dsq=None, norms=None):
    """Admissible one-vertex extensions of a connected admissible digraph."""
    n = g.n
    if dsq is None:
        res = _label_components(g)
        if isinstance(res, CycleViolation):
            raise ValueError("extensions need a symmetrizable digraph")
        dsq = tuple(res[0])
    if norms is None:
        norms = row_norms(g)
    budget = 3 if c.open_interval else 4
    residual = [budget - x for x in norms]
    pairs = _PAIRS_NONNEG if c.require_nonnegative else _PAIRS_ALL
    charges = _charge_options(c)
    a = g.a
    chi, adj = _charpoly_adjugate(a, n)

    assignments: list[list[tuple[int, int, int]]] = []

    def rec(start: int, acc: list[tuple[int, int, int]], used: int):
        if acc:
            assignments.append(acc.copy())
        for i in range(start, n):
            ri = residual[i]
            if ri < 1:
                continue
            for p, q in pairs:
                pr = p * q
                if pr > ri or used + pr > budget:
                    continue
                if pr == 4 and a[i][i] != 0:
                    continue
                acc.append((i, p, q))
                rec(i + 1, acc, used + pr)
                acc.pop()

    rec(0, [], 0)

    strict = c.open_interval
    for edges in assignments:
        total = sum(p * q for _, p, q in edges)
        # cycle condition: the new vertex label must be consistent
        d_new = None
        ok = True
        for i, p, q in edges:
            cand = dsq[i] * Fraction(q, p)
            if d_new is None:
                d_new = cand
            elif cand != d_new:
                ok = False
                break
        if not ok:
            continue
        has_product4 = any(p * q == 4 for _, p, q in edges)
        for ch in charges:
            if ch * ch + total > budget:
                continue
            if has_product4 and ch != 0:
                continue
            if not _coeffs_within_two(_bordered_charpoly(chi, adj, edges, ch), strict):
                continue
            rows = [list(row) + [0] for row in a]
            new_row = [0] * (n + 1)
            for i, p, q in edges:
                rows[i][n] = p
                new_row[i] = q
            new_row[n] = ch
            rows.append(new_row)
            yield Digraph(rows)


def extensions(g: Digraph, constraints: SearchConstraints) -> list[Digraph]:
    """All admissible one-vertex extensions (g as leading principal block)."""
    return list(_extensions_iter(g, constraints))


def is_maximal(g: Digraph, constraints: SearchConstraints) -> bool:
    """True iff g admits no admissible one-vertex extension."""
    return next(_extensions_iter(g, constraints), None) is None


# ---------------------------------------------------------------------------
# orderly enumeration
# ---------------------------------------------------------------------------


def _seed_classes(c: SearchConstraints) -> dict[Digraph, Digraph]:
    """Canonical key -> representative for the smallest admissible orders."""
    seeds: dict[Digraph, Digraph] = {}
    if not c.require_nonsymmetric:
        for ch in _charge_options(c):
            if ch * ch > (3 if c.open_interval else 4):
                continue
            g = Digraph([[ch]])
            seeds.setdefault(canonical_form(g), g)
        return seeds
    pairs = _PAIRS_NONNEG if c.require_nonnegative else _PAIRS_ALL
    charges = _charge_options(c)
    budget = 3 if c.open_interval else 4
    for p, q in pairs:
        if p == q:
            continue  # symmetric 2x2
        for c1 in charges:
            for c2 in charges:
                if p * q == 4 and (c1 or c2):
                    continue
                if c1 * c1 + p * q > budget or c2 * c2 + p * q > budget:
                    continue
                g = Digraph([[c1, p], [q, c2]])
                if _real_rooted_within(char_poly(g), strict=c.open_interval):
                    seeds.setdefault(canonical_form(g), g)
    return seeds


def enumerate_classes(
    constraints: SearchConstraints, cap: int | None = None
) -> ClassificationReport:
    """Breadth-first orderly enumeration of admissible classes up to max_order.

    Representatives are pairwise inequivalent (canonical dedupe per level);
    each entry's maximal flag reflects an explicit extension scan, which at
    the top level probes one order beyond max_order.
    """
    cap = search_cap() if cap is None else cap
    if constraints.max_order > cap:
        raise ValueError(
            f"max_order {constraints.max_order} exceeds the search cap {cap}; "
            "the search is exponential, raise CYCLOMAT_MAX_ORDER deliberately"
        )
    report = ClassificationReport(constraints)
    level = _seed_classes(constraints)
    first_order = 2 if constraints.require_nonsymmetric else 1
    order = first_order
    while level and order <= constraints.max_order:
        nxt: dict[Digraph, Digraph] = {}
        last_level = order == constraints.max_order
        for key, rep in level.items():
            dsq = _parent_dsq(rep)
            norms = row_norms(rep)
            grew = False
            for h in _extensions_iter(rep, constraints, dsq, norms):
                grew = True
                if last_level:
                    break  # only the maximality flag is needed here
                nxt.setdefault(canonical_form(h), h)
            if not constraints.require_nonsymmetric or not is_symmetric(rep):
                report.entries.append(ClassEntry(key, order, maximal=not grew))
        level = nxt
        order += 1
    return report


def match_families(report: ClassificationReport, max_n: int | None = None) -> None:
    """Label entries with catalog family names (plus the 1x1 matrix (2))."""
    max_n = max_n or report.constraints.max_order
    names = {canonical_form(g): family_label(fid) for fid, g in catalog(max_n)}
    names[canonical_form(Digraph([[2]]))] = "(2)"
    for e in report.entries:
        e.family = names.get(e.digraph)


# ---------------------------------------------------------------------------
# embedding search
# ---------------------------------------------------------------------------


def _connected_subgraph_keys(host: Digraph) -> dict[Digraph, tuple[int, ...]]:
    """Canonical key -> one witness vertex set, over connected induced subgraphs."""
    out: dict[Digraph, tuple[int, ...]] = {}
    for k in range(1, host.n + 1):
        for keep in combinations(range(host.n), k):
            sub = induced_subgraph(host, keep)
            if not is_connected(sub):
                continue
            out.setdefault(canonical_form(sub), keep)
    return out


def embeds(pattern: Digraph, host: Digraph) -> bool:
    """True iff some induced subgraph of host is equivalent to pattern."""
    if pattern.n > host.n:
        return False
    key = canonical_form(pattern)
    for keep in combinations(range(host.n), pattern.n):
        sub = induced_subgraph(host, keep)
        if canonical_form(sub) == key:
            return True
    return False


# ---------------------------------------------------------------------------
# theorem verifications
# ---------------------------------------------------------------------------


@dataclass
class VerificationResult:
    name: str
    max_order: int
    passed: bool
    found: list[str]
    missing: list[str]
    unexpected: list[str]
    notes: list[str]
    report: ClassificationReport

    def to_text(self) -> str:
        lines = [
            f"verify {self.name} max_order={self.max_order}: "
            + ("PASS" if self.passed else "FAIL"),
            f"classes found: {len(self.found)}; missing: {len(self.missing)}; "
            f"unexpected: {len(self.unexpected)}",
        ]
        for label in self.found:
            lines.append(f"  found {label}")
        for label in self.missing:
            lines.append(f"  MISSING {label}")
        for label in self.unexpected:
            lines.append(f"  UNEXPECTED {label}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "verification": self.name,
            "max_order": self.max_order,
            "passed": self.passed,
            "found": self.found,
            "missing": self.missing,
            "unexpected": self.unexpected,
            "notes": self.notes,
            "report": self.report.to_json_dict() if self.report else None,
        }


def _expected_keys(names: set[str], max_order: int) -> dict[Digraph, str]:
    out = {}
    for fid, g in catalog(max_order):
        if fid.name in names:
            out.setdefault(canonical_form(g), family_label(fid))
    return out


def _diff_result(
    name: str,
    max_order: int,
    found_keys: dict[Digraph, str],
    expected: dict[Digraph, str],
    notes: list[str],
    report: ClassificationReport,
    extra_pass: bool = True,
) -> VerificationResult:
    missing = sorted(lbl for key, lbl in expected.items() if key not in found_keys)
    unexpected = sorted(
        found_keys[key] for key in found_keys if key not in expected
    )
    passed = not missing and not unexpected and extra_pass
    return VerificationResult(
        name,
        max_order,
        passed,
        sorted(found_keys.values()),
        missing,
        unexpected,
        notes,
        report,
    )


def _label_found(report_entries: list[ClassEntry], expected: dict[Digraph, str]):
    found = {}
    for e in report_entries:
        label = expected.get(e.digraph) or e.family or json.dumps(
            [list(r) for r in e.digraph.a]
        )
        found[e.digraph] = label
    return found


_T1_NAMES = {"A1tilde_prime", "O4prime", "S8minus", "L", "Lprime", "Lplus", "A2pm", "O4pm"}


def verify_theorem_1(max_order: int, cap: int | None = None) -> VerificationResult:
    """Maximal nonsymmetric cyclotomic classes match the named families, with
    A*A = 4I for each; non-maximal classes embed in a maximal one when a
    container exists within the order bound."""
    constraints = SearchConstraints(max_order, require_nonsymmetric=True)
    report = enumerate_classes(constraints, cap)
    match_families(report)
    expected = _expected_keys(_T1_NAMES, max_order)
    maximal = report.maximal_entries()
    found = _label_found(maximal, expected)
    notes = []
    ok = True
    for e in maximal:
        if not is_plus_minus_two_only(e.digraph):
            ok = False
            notes.append(f"maximal class without A^2=4I: {e.digraph!r}")
    maximal_reps = [e.digraph for e in maximal]
    embedded = 0
    open_ended = 0
    for e in report.entries:
        if e.maximal:
            continue
        if any(embeds(e.digraph, m) for m in maximal_reps if m.n >= e.digraph.n):
            embedded += 1
        else:
            # container exceeds the bound; the class must keep growing
            if is_maximal(e.digraph, constraints):
                ok = False
                notes.append(f"non-maximal entry with no extension: {e.digraph!r}")
            else:
                open_ended += 1
    notes.append(
        f"containment: {embedded} non-maximal classes embed in an in-bound maximal "
        f"class, {open_ended} grow past the bound"
    )
    return _diff_result("theorem1", max_order, found, expected, notes, report, ok)


def verify_theorem_2(max_order: int, cap: int | None = None) -> VerificationResult:
    """Every nonsymmetric class with spectrum in (-2,2) is a named family
    instance, and the instance set is reproduced exactly."""
    constraints = SearchConstraints(
        max_order, require_nonsymmetric=True, open_interval=True
    )
    report = enumerate_classes(constraints, cap)
    match_families(report)
    expected = _expected_keys({"B", "C", "F4", "G2", "O4doubleprime", "B2pm"}, max_order)
    found = _label_found(report.entries, expected)
    notes = []
    ok = True
    genuinely_maximal = sorted(e.family or "?" for e in report.maximal_entries())
    notes.append("no-extension classes: " + ", ".join(genuinely_maximal))
    # containment: every class embeds in a family instance at most one order up
    containers = [
        g
        for fid, g in catalog(max_order + 1)
        if fid.name in {"B", "C", "F4", "G2", "O4doubleprime", "B2pm"}
    ]
    for e in report.entries:
        if not any(embeds(e.digraph, h) for h in containers):
            ok = False
            notes.append(f"class embeds in no family container: {e.digraph!r}")
    return _diff_result("theorem2", max_order, found, expected, notes, report, ok)


def _partition_entries(entries: list[ClassEntry]):
    """Split classes by symmetric/charged using the (2)-style convention:
    1x1 matrices with |charge| = 2 count as uncharged symmetric."""
    parts = {
        ("sym", "uncharged"): [],
        ("sym", "charged"): [],
        ("nonsym", "uncharged"): [],
        ("nonsym", "charged"): [],
    }
    for e in entries:
        g = e.digraph
        sym = "sym" if is_symmetric(g) else "nonsym"
        charged = any(g.a[i][i] != 0 for i in range(g.n))
        if g.n == 1 and abs(g.a[0][0]) == 2:
            charged = False
        parts[(sym, "charged" if charged else "uncharged")].append(e)
    return parts


def verify_corollary_1(max_order: int, cap: int | None = None) -> VerificationResult:
    """Maximal nonnegative cyclotomic classes match the four family lists."""
    constraints = SearchConstraints(max_order, require_nonnegative=True)
    report = enumerate_classes(constraints, cap)
    match_families(report)
    parts = _partition_entries(report.maximal_entries())
    bullets = {
        ("sym", "uncharged"): {"A1tilde", "Atilde", "Dtilde", "E6tilde", "E7tilde", "E8tilde"},
        ("nonsym", "uncharged"): {"A1tilde_prime", "Btilde", "Ctilde", "Ctilde_prime", "G2tilde", "F4tilde"},
        ("sym", "charged"): {"I", "J"},
        ("nonsym", "charged"): {"M"},
    }
    found: dict[Digraph, str] = {}
    expected: dict[Digraph, str] = {}
    notes = []
    ok = True
    for part, names in bullets.items():
        exp = _expected_keys(names, max_order)
        if part == ("sym", "uncharged"):
            exp[canonical_form(Digraph([[2]]))] = "(2)"
        got = _label_found(parts[part], exp)
        for key in got:
            if key not in exp:
                ok = False
                notes.append(f"bullet {part}: unexpected {got[key]}")
        for key in exp:
            if key not in got:
                ok = False
                notes.append(f"bullet {part}: missing {exp[key]}")
        found.update(got)
        expected.update(exp)
    return _diff_result("corollary1", max_order, found, expected, notes, report, ok)


def verify_corollary_5(max_order: int, cap: int | None = None) -> VerificationResult:
    """Nonnegative open-interval classes match the four family lists; the
    charged nonsymmetric list is empty."""
    constraints = SearchConstraints(max_order, require_nonnegative=True, open_interval=True)
    report = enumerate_classes(constraints, cap)
    match_families(report)
    parts = _partition_entries(report.entries)
    bullets = {
        ("sym", "uncharged"): {"A", "D", "E6", "E7", "E8"},
        ("nonsym", "uncharged"): {"B", "C", "F4", "G2"},
        ("sym", "charged"): {"Pplus"},
        ("nonsym", "charged"): set(),
    }
    found: dict[Digraph, str] = {}
    expected: dict[Digraph, str] = {}
    notes = []
    ok = True
    for part, names in bullets.items():
        exp = _expected_keys(names, max_order)
        got = _label_found(parts[part], exp)
        for key in got:
            if key not in exp:
                ok = False
                notes.append(f"bullet {part}: unexpected {got[key]}")
        for key in exp:
            if key not in got:
                ok = False
                notes.append(f"bullet {part}: missing {exp[key]}")
        found.update(got)
        expected.update(exp)
    if parts[("nonsym", "charged")]:
        ok = False
        notes.append("charged nonsymmetric admissible set is not empty")
    else:
        notes.append("charged nonsymmetric admissible set is empty")
    return _diff_result("corollary5", max_order, found, expected, notes, report, ok)


def _switch_to_nonnegative(g: Digraph) -> Digraph | None:
    """A sign switching making all entries nonnegative, or None."""
    a, n = g.a, g.n
    if any(a[i][i] < 0 for i in range(n)):
        return None
    signs = [0] * n
    for root in range(n):
        if signs[root]:
            continue
        signs[root] = 1
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or (a[i][j] == 0 and a[j][i] == 0):
                    continue
                want = signs[i] * (1 if a[i][j] > 0 or a[j][i] > 0 else -1)
                if signs[j] == 0:
                    signs[j] = want
                    stack.append(j)
                elif signs[j] != want:
                    return None
    return sign_switch(g, signs)


_AFFINE_NONSYM = {"A1tilde_prime", "Btilde", "Ctilde", "Ctilde_prime", "F4tilde", "G2tilde"}


def verify_corollary_3(max_order: int, cap: int | None = None) -> VerificationResult:
    """Within the maximal closed-interval digraphs, the nonsymmetric connected
    subgraphs maximal for carrying no charges and switching to nonnegative
    entries are exactly the embeddable affine family instances."""
    cap = search_cap() if cap is None else cap
    if max_order > cap:
        raise ValueError(f"max_order {max_order} exceeds the search cap {cap}")
    hosts = [(fid, g) for fid, g in catalog(max_order) if fid.name in _T1_NAMES]
    p_constraints = SearchConstraints(
        max_order + 1, require_nonnegative=True, allow_charges=False
    )
    found: dict[Digraph, str] = {}
    per_host: dict[str, set[str]] = {}
    names = {canonical_form(g): family_label(fid) for fid, g in catalog(max_order)}
    subgraph_keysets: list[dict[Digraph, tuple[int, ...]]] = []
    for fid, host in hosts:
        keys = _connected_subgraph_keys(host)
        subgraph_keysets.append(keys)
        host_found = set()
        for key in keys:
            if is_symmetric(key):
                continue
            if any(key.a[i][i] != 0 for i in range(key.n)):
                continue
            nn = _switch_to_nonnegative(key)
            if nn is None:
                continue
            if not is_maximal(nn, p_constraints):
                continue
            label = names.get(key, json.dumps([list(r) for r in key.a]))
            found[key] = label
            host_found.add(label)
        per_host[family_label(fid)] = host_found
    # expected: affine nonsymmetric instances that embed in some host
    expected: dict[Digraph, str] = {}
    for fid, g in catalog(max_order):
        if fid.name not in _AFFINE_NONSYM:
            continue
        key = canonical_form(g)
        if any(key in keys for keys in subgraph_keysets):
            expected[key] = family_label(fid)
    notes = [f"from {h}: " + ", ".join(sorted(s)) for h, s in sorted(per_host.items()) if s]
    return _diff_result("corollary3", max_order, found, expected, notes, report=ClassificationReport(
        SearchConstraints(max_order)
    ))
