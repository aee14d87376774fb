"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the whole suite takes a few minutes, dominated by the order-8
classification search and the brute-force completeness oracle.
"""

import itertools
import json
import random
from fractions import Fraction

import cyclomat as cy
from cyclomat.classify import SearchConstraints, enumerate_classes
from cyclomat.cli import main
from cyclomat.equivalence import canonical_form, weight_modulus_sequences
from cyclomat.spectra import _real_rooted_within
from conftest import random_symmetrizable


def _announce(number: int, text: str):
    print(f"ACCEPTANCE {number}: PASS - {text}")


def _run_verify_json(capsys, target: str, max_order: int) -> dict:
    code = main(["verify", target, "--max-order", str(max_order), "--json"])
    out = capsys.readouterr().out
    data = json.loads(out)
    assert code == 0, f"verify {target} exited {code}: {data}"
    return data


def test_criterion_1_theorem1_order8(capsys):
    data = _run_verify_json(capsys, "theorem1", 8)
    expected = {
        "A~1'", "A2+-", "L3+", "L3+^T", "O4'", "L4", "L4'", "O4+-",
        "L5+", "L5+^T", "L6", "L6^T", "L6'", "L7+", "L7+^T",
        "S8-", "L8", "L8^T", "L8'",
    }
    assert data["passed"] is True
    assert set(data["found"]) == expected
    assert data["missing"] == [] and data["unexpected"] == []
    # A^2 = 4I for every maximal class, re-checked from the report
    for order_entries in data["report"]["orders"].values():
        for entry in order_entries:
            if entry["maximal"]:
                assert cy.is_plus_minus_two_only(cy.Digraph(entry["matrix"]))
    _announce(1, f"theorem1 at order 8 finds exactly {len(expected)} classes, all with A^2=4I")


def test_criterion_2_theorem2_order6(capsys):
    data = _run_verify_json(capsys, "theorem2", 6)
    expected = {
        "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6",
        "G2", "F4", "O4''", "B2+-",
    }
    assert data["passed"] is True
    assert set(data["found"]) == expected
    _announce(2, "theorem2 at order 6 reproduces the thirteen family classes exactly")


def test_criterion_3_corollary1_order6(capsys):
    data = _run_verify_json(capsys, "corollary1", 6)
    assert data["passed"] is True
    found = set(data["found"])
    for label in ("B~3", "B~3^T", "B~5", "B~5^T"):
        assert label in found  # both transposes are distinct classes
    for label in ("C~2'", "C~3'", "C~5'"):
        assert label in found  # and self-transpose primed chains appear once
        assert label + "^T" not in found
    _announce(3, f"corollary1 at order 6 matches the four family lists ({len(found)} classes)")


def test_criterion_4_corollary5_negative_claim_order8():
    report = enumerate_classes(
        SearchConstraints(8, require_nonnegative=True, open_interval=True)
    )
    offenders = [
        e.digraph
        for e in report.entries
        if not cy.is_symmetric(e.digraph)
        and any(e.digraph.a[i][i] for i in range(e.digraph.n))
    ]
    assert offenders == []
    _announce(4, "no charged nonsymmetric nonnegative class with spectrum in (-2,2) up to order 8")


_LEMMA_EQUIV_POSITIVE = (
    [("A1tilde_prime", None), ("O4prime", None), ("S8minus", None), ("L", 4),
     ("A2pm", None), ("O4pm", None), ("B", 2), ("F4", None), ("G2", None),
     ("O4doubleprime", None), ("B2pm", None)]
    + [("Lprime", n) for n in (4, 6, 8, 10)]
    + [("Ctilde_prime", n) for n in (3, 4, 5, 6, 7, 8, 9)]
)

_COROLLARY_INEQUIV = (
    [("M", n) for n in range(2, 11)]
    + [("B", n) for n in range(3, 11)]
    + [("Btilde", n) for n in range(3, 10)]  # order n+1 <= 10
    + [("Ctilde", n) for n in range(2, 10)]
    + [("F4tilde", None), ("G2tilde", None)]
    + [("L", n) for n in (6, 8, 10)]
    + [("Lplus", n) for n in (3, 5, 7, 9)]
)


def test_criterion_5_transpose_ledger():
    for name, n in _LEMMA_EQUIV_POSITIVE:
        assert cy.equivalent_to_transpose(cy.generate(name, n)), (name, n)
    for name, n in _COROLLARY_INEQUIV:
        g = cy.generate(name, n)
        gt = cy.transpose(g)
        assert not cy.are_equivalent(g, gt), (name, n)
        plain = weight_modulus_sequences(g, g.n) != weight_modulus_sequences(gt, g.n)
        charged = weight_modulus_sequences(
            g, g.n, with_charges=True
        ) != weight_modulus_sequences(gt, g.n, with_charges=True)
        assert plain or charged, (name, n)
        if (name, n) not in (("M", 2), ("Lplus", 3), ("Lplus", 5)):
            assert plain, (name, n)  # bare sequences separate except the special cases
    _announce(5, "transpose-equivalence matches both family lists at orders <= 10, "
                 "with weight-sequence separators for every negative verdict")


_PAIRS = [
    (0, 0), (1, 1), (-1, -1), (1, 2), (2, 1), (-1, -2), (-2, -1),
    (1, 3), (3, 1), (-1, -3), (-3, -1),
    (1, 4), (4, 1), (2, 2), (-1, -4), (-4, -1), (-2, -2),
]


def test_criterion_6_brute_force_oracle_n3():
    import time

    start = time.time()
    configs = {
        "closed": SearchConstraints(3),
        "open": SearchConstraints(3, open_interval=True),
        "closed_nonsym": SearchConstraints(3, require_nonsymmetric=True),
    }
    oracle: dict[str, set] = {k: set() for k in configs}
    for n in range(1, 4):
        slots = list(itertools.combinations(range(n), 2))
        for charges in itertools.product(range(-2, 3), repeat=n):
            for pairvals in itertools.product(_PAIRS, repeat=len(slots)):
                m = [[0] * n for _ in range(n)]
                for i in range(n):
                    m[i][i] = charges[i]
                for (i, j), (p, q) in zip(slots, pairvals):
                    m[i][j], m[j][i] = p, q
                g = cy.Digraph(m)
                if not cy.is_connected(g) or not cy.is_symmetrizable(g):
                    continue
                p = cy.char_poly(g)
                closed = _real_rooted_within(p, strict=False)
                if not closed:
                    continue
                key = canonical_form(g)
                oracle["closed"].add(key)
                if _real_rooted_within(p, strict=True) and all(abs(c) <= 1 for c in charges):
                    oracle["open"].add(key)
                if n >= 2 and not cy.is_symmetric(g):
                    oracle["closed_nonsym"].add(key)
    for label, cons in configs.items():
        mine = {e.digraph for e in enumerate_classes(cons).entries}
        assert mine == oracle[label], label
    elapsed = time.time() - start
    assert elapsed < 60, f"oracle comparison took {elapsed:.1f}s"
    _announce(6, f"search equals the brute-force oracle at n <= 3 "
                 f"({len(oracle['closed'])} closed classes, {elapsed:.0f}s)")


def test_criterion_7_interlacing_and_sturm_float_agreement():
    rng = random.Random(0xACCE71)
    checked = 0
    for _ in range(1000):
        g = random_symmetrizable(rng, nmax=7)
        p = cy.char_poly(g)
        eigs = cy.eigenvalues_float(g)
        for q in (-2, Fraction(-1, 2), 1, 2):
            exact = cy.count_roots(p, None, q).count
            lo = sum(1 for x in eigs if x <= float(q) - 1e-6)
            hi = sum(1 for x in eigs if x <= float(q) + 1e-6)
            assert lo <= exact <= hi, (g, q)
        for v in range(g.n):
            if g.n == 1:
                continue
            keep = tuple(x for x in range(g.n) if x != v)
            child = cy.char_poly(cy.induced_subgraph(g, keep))
            assert cy.interlaces(p, child), (g, v)
            checked += 1
    _announce(7, f"interlacing holds for every deletion of 1000 random symmetrizables "
                 f"({checked} checks); Sturm counts bracket the float spectra at 1e-6")


_SURD_PAIRS = (
    [("A2pm", None, "A2G_pm", None), ("O4prime", None, "O4G_prime", None),
     ("O4pm", None, "O4G_pm", None), ("S8minus", None, "S8G_minus", None)]
    + [("L", n, "LG", n) for n in (4, 6, 8, 10, 12)]
    + [("Lprime", n, "LG", n) for n in (4, 6, 8, 10, 12)]
    + [("Lplus", n, "LGplus", n) for n in (3, 5, 7, 9, 11)]
)


def test_criterion_8_symmetrization_suite():
    for gname, gn, sname, sn in _SURD_PAIRS:
        g = cy.generate(gname, gn)
        surd = cy.generate_surd(sname, sn)
        assert cy.symmetrization(g).t == surd.t, (gname, gn)
        assert surd.squares_to(4), (sname, sn)
    _announce(8, f"symmetrizations match the surd-graph generators entrywise and "
                 f"S^2=4I exactly for all {len(_SURD_PAIRS)} maximal pairs")


def test_criterion_9_removal_bound_exhaustive():
    for name, bound in (("S8minus", 4), ("O4prime", 2)):
        g = cy.generate(name)
        for k in range(1, g.n + 1):
            for keep in itertools.combinations(range(g.n), k):
                sub = cy.induced_subgraph(g, keep)
                if cy.all_eigs_in_open(sub):
                    assert k <= bound, (name, keep)
    _announce(9, "every open-interval induced subgraph has <= n/2 vertices "
                 "(all 256 subsets of the cube, all 16 of the quadrilateral)")
