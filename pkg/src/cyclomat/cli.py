"""Command-line front end: digraph file format, subcommands, reports.

The digraph format is line-oriented with 1-indexed vertices:

    # comment
    n 4           vertex count, exactly once, first
    c 1 -1        charge lines (vertex, integer)
    e 1 2 1 3     edge lines (i, j, a_ij, a_ji), one per unordered pair

Exit status: 0 on success or a passing verification, 1 on a verification
mismatch, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import (
    Digraph,
    NotSymmetrizableError,
    all_eigs_in_open,
    char_poly,
    compute_symmetrizer,
    count_roots,
    eigenvalues_float,
    equivalence_witness,
    generate,
    is_connected,
    is_cyclotomic,
    is_plus_minus_two_only,
    is_sign_symmetric,
    is_symmetrizable,
    symmetrization,
)
from .classify import (
    SearchConstraints,
    enumerate_classes,
    match_families,
    verify_corollary_1,
    verify_corollary_3,
    verify_corollary_5,
    verify_theorem_1,
    verify_theorem_2,
)
from .families import family_order, parse_family_name

__all__ = ["DigraphDocument", "ParseError", "parse", "emit", "main", "run"]


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class DigraphDocument:
    """Parsed digraph file: counts are 1-indexed as written."""

    n: int
    charges: dict[int, int] = field(default_factory=dict)
    edges: list[tuple[int, int, int, int]] = field(default_factory=list)

    def to_digraph(self) -> Digraph:
        m = [[0] * self.n for _ in range(self.n)]
        for v, c in self.charges.items():
            m[v - 1][v - 1] = c
        for i, j, aij, aji in self.edges:
            m[i - 1][j - 1] = aij
            m[j - 1][i - 1] = aji
        return Digraph(m)

    @classmethod
    def from_digraph(cls, g: Digraph) -> DigraphDocument:
        doc = cls(g.n)
        for i in range(g.n):
            if g.a[i][i]:
                doc.charges[i + 1] = g.a[i][i]
            for j in range(i + 1, g.n):
                if g.a[i][j] or g.a[j][i]:
                    doc.edges.append((i + 1, j + 1, g.a[i][j], g.a[j][i]))
        return doc


def _token_column(line: str, index: int) -> int:
    """1-based column where the index-th whitespace-separated token starts."""
    seen = -1
    for pos, ch in enumerate(line):
        if ch.isspace() or (pos and not line[pos - 1].isspace()):
            continue
        seen += 1
        if seen == index:
            return pos + 1
    return max(1, len(line))


def parse(text: str) -> DigraphDocument:
    """Parse the digraph format, reporting line/column on every error."""
    doc: DigraphDocument | None = None
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue

        def fail(index: int, message: str):
            raise ParseError(lineno, _token_column(line, index), message)

        def intval(index: int) -> int:
            try:
                return int(tokens[index])
            except (IndexError, ValueError):
                fail(index if index < len(tokens) else len(tokens) - 1,
                     f"expected an integer for field {index + 1}")

        kind = tokens[0]
        if kind == "n":
            if doc is not None:
                fail(0, "duplicate n line")
            if len(tokens) != 2:
                fail(0, "n takes exactly one integer")
            count = intval(1)
            if count < 1:
                fail(1, "vertex count must be at least 1")
            doc = DigraphDocument(count)
        elif kind in ("c", "e"):
            if doc is None:
                fail(0, "the n line must come first")
            if kind == "c":
                if len(tokens) != 3:
                    fail(0, "c takes a vertex and a charge")
                v, charge = intval(1), intval(2)
                if not 1 <= v <= doc.n:
                    fail(1, f"vertex {v} out of range 1..{doc.n}")
                if v in doc.charges:
                    fail(1, f"duplicate charge for vertex {v}")
                doc.charges[v] = charge
            else:
                if len(tokens) != 5:
                    fail(0, "e takes i j a_ij a_ji")
                i, j = intval(1), intval(2)
                aij, aji = intval(3), intval(4)
                for idx, v in ((1, i), (2, j)):
                    if not 1 <= v <= doc.n:
                        fail(idx, f"vertex {v} out of range 1..{doc.n}")
                if i == j:
                    fail(2, "edges need two distinct vertices")
                pair = (min(i, j), max(i, j))
                if pair in seen_pairs:
                    fail(1, f"duplicate edge record for pair {pair}")
                seen_pairs.add(pair)
                doc.edges.append((i, j, aij, aji))
        else:
            fail(0, f"unknown record type {kind!r}")
    if doc is None:
        raise ParseError(1, 1, "missing n line")
    return doc


def emit(doc: DigraphDocument) -> str:
    lines = [f"n {doc.n}"]
    for v in sorted(doc.charges):
        lines.append(f"c {v} {doc.charges[v]}")
    for i, j, aij, aji in doc.edges:
        lines.append(f"e {i} {j} {aij} {aji}")
    return "\n".join(lines) + "\n"


def _load(path: str) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read()).to_digraph()


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_check(args) -> int:
    g = _load(args.file)
    facts = {
        "sign_symmetric": is_sign_symmetric(g),
        "symmetrizable": is_symmetrizable(g),
        "connected": is_connected(g),
        "cyclotomic": is_cyclotomic(g),
        "open_interval": all_eigs_in_open(g),
        "a2_equals_4i": is_plus_minus_two_only(g),
    }
    if args.json:
        _emit_json(facts)
    else:
        for key, value in facts.items():
            print(f"{key.replace('_', ' ')}: {'yes' if value else 'no'}")
    return 0


def _cmd_symmetrize(args) -> int:
    g = _load(args.file)
    try:
        d = compute_symmetrizer(g)
        s = symmetrization(g)
    except NotSymmetrizableError as exc:
        violation = exc.violation
        if args.json:
            _emit_json({
                "symmetrizable": False,
                "reason": str(exc),
                "cycle": list(violation.cycle) if violation else None,
            })
        else:
            print(f"not symmetrizable: {exc}")
        return 1
    if args.json:
        _emit_json({
            "symmetrizable": True,
            "dsq": list(d.dsq),
            "surd_matrix": [list(r) for r in s.t],
        })
    else:
        print("dsq:", " ".join(str(x) for x in d.dsq))
        print("surd matrix t (entry = sgn(t)*sqrt|t|):")
        for row in s.t:
            print("  " + " ".join(f"{x:3d}" for x in row))
    return 0


_BUCKETS = (
    ("(-inf,-2)", None, -2, True, True),
    ("[-2]", -2, -2, False, False),
    ("(-2,2)", -2, 2, True, True),
    ("[2]", 2, 2, False, False),
    ("(2,inf)", 2, None, True, True),
)


def _cmd_spectrum(args) -> int:
    g = _load(args.file)
    p = char_poly(g)
    counts = {
        label: count_roots(p, lo, hi, olo, ohi).count
        for label, lo, hi, olo, ohi in _BUCKETS
    }
    eigs = None
    if args.approx or args.plot:
        try:
            eigs = eigenvalues_float(g)
        except NotSymmetrizableError:
            eigs = None
    if args.plot:
        from .report import save_spectrum_figure

        save_spectrum_figure(eigs or [], args.plot)
    if args.json:
        payload = {"char_poly": list(p.coeffs), "counts": counts}
        if args.approx:
            payload["eigenvalues_approx"] = eigs
        _emit_json(payload)
    else:
        print("char poly coefficients (ascending):", list(p.coeffs))
        for label, _, _, _, _ in _BUCKETS:
            print(f"roots in {label}: {counts[label]}")
        if args.approx:
            if eigs is None:
                print("approx eigenvalues: not symmetrizable")
            else:
                print("approx eigenvalues:", " ".join(f"{x:.6f}" for x in eigs))
    return 0


def _cmd_equiv(args) -> int:
    a = _load(args.file1)
    b = _load(args.file2)
    witness = equivalence_witness(a, b)
    if args.json:
        payload = {"equivalent": witness is not None}
        if witness is not None:
            payload["witness"] = {
                "perm": list(witness.perm),
                "signs": list(witness.signs),
                "negate": witness.negate,
            }
        _emit_json(payload)
    elif witness is None:
        print("not equivalent")
    else:
        print("equivalent")
        print("witness perm (0-indexed image):", list(witness.perm))
        print("witness signs:", list(witness.signs))
        print("witness negate:", witness.negate)
    return 0


def _cmd_family(args) -> int:
    fid = parse_family_name(args.name, args.n)
    g = generate(fid)
    doc = DigraphDocument.from_digraph(g)
    if args.json:
        _emit_json({
            "family": args.name,
            "order": family_order(fid),
            "matrix": [list(r) for r in g.a],
        })
    else:
        sys.stdout.write(emit(doc))
    return 0


def _cmd_classify(args) -> int:
    constraints = SearchConstraints(
        max_order=args.max_order,
        require_nonsymmetric=args.nonsymmetric,
        require_nonnegative=args.nonnegative,
        open_interval=args.open,
    )
    report = enumerate_classes(constraints)
    match_families(report)
    if args.plot:
        from .report import save_classification_figure

        save_classification_figure(report, args.plot)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print(report.to_text())
    return 0


_VERIFIERS = {
    "theorem1": verify_theorem_1,
    "theorem2": verify_theorem_2,
    "corollary1": verify_corollary_1,
    "corollary3": verify_corollary_3,
    "corollary5": verify_corollary_5,
}


def _cmd_verify(args) -> int:
    result = _VERIFIERS[args.target](args.max_order)
    if args.plot and result.report.entries:
        from .report import save_classification_figure

        save_classification_figure(result.report, args.plot)
    if args.json:
        _emit_json(result.to_json_dict())
    else:
        print(result.to_text())
    return 0 if result.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclomat",
        description="exact spectral certificates for symmetrizable integer matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = with_json(sub.add_parser("check", help="structural and spectral predicates"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = with_json(sub.add_parser("symmetrize", help="integer symmetrizer and surd matrix"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_symmetrize)

    p = with_json(sub.add_parser("spectrum", help="char poly and exact root counts"))
    p.add_argument("file")
    p.add_argument("--approx", action="store_true", help="include float eigenvalues")
    p.add_argument("--plot", metavar="PATH", help="render eigenvalue figure to a file")
    p.set_defaults(func=_cmd_spectrum)

    p = with_json(sub.add_parser("equiv", help="signed-permutation equivalence"))
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_equiv)

    p = with_json(sub.add_parser("family", help="emit a named family generator"))
    p.add_argument("name")
    p.add_argument("n", nargs="?", type=int, default=None)
    p.set_defaults(func=_cmd_family)

    p = with_json(sub.add_parser("classify", help="enumerate admissible classes"))
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--nonnegative", action="store_true")
    p.add_argument("--open", action="store_true")
    p.add_argument("--nonsymmetric", action="store_true")
    p.add_argument("--plot", metavar="PATH", help="render class-count figure to a file")
    p.set_defaults(func=_cmd_classify)

    p = with_json(sub.add_parser("verify", help="re-derive a classification statement"))
    p.add_argument("target", choices=sorted(_VERIFIERS))
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--plot", metavar="PATH", help="render class-count figure to a file")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
