import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomat import (
    Digraph,
    SignedPermutation,
    apply,
    are_equivalent,
    canonical_form,
    char_poly,
    equivalence_witness,
    equivalent_to_transpose,
    generate,
    is_symmetrizable,
    sign_switch,
    transpose,
    weight_modulus_sequences,
)
from conftest import random_digraph, random_symmetrizable

B2 = Digraph([[0, 1], [2, 0]])


def random_signed_perm(rng: random.Random, n: int) -> SignedPermutation:
    perm = list(range(n))
    rng.shuffle(perm)
    signs = tuple(rng.choice((-1, 1)) for _ in range(n))
    return SignedPermutation(tuple(perm), signs, rng.choice((-1, 1)))


def test_apply_identity_and_signs():
    g = generate("O4prime")
    assert apply(g, SignedPermutation.identity(4)) == g
    allneg = SignedPermutation(tuple(range(4)), (-1,) * 4, 1)
    assert apply(g, allneg) == g
    with pytest.raises(ValueError):
        apply(g, SignedPermutation.identity(3))


def test_apply_known_witness_for_o4prime():
    o4p = generate("O4prime")
    p = SignedPermutation((2, 3, 0, 1), (-1, 1, -1, 1), 1)
    assert apply(transpose(o4p), p) == o4p


def test_sign_switch():
    g = Digraph([[1, -1, 0], [-1, 0, 1], [0, 1, -1]])
    assert sign_switch(g, (1, 1, 1)) == g
    switched = sign_switch(g, (-1, 1, 1))
    assert switched.a[0][1] == 1 and switched.a[1][0] == 1
    # charges are fixed by any switching
    assert [switched.a[i][i] for i in range(3)] == [1, 0, -1]
    with pytest.raises(ValueError):
        sign_switch(g, (1, 1))


@st.composite
def signed_perms(draw, n):
    perm = draw(st.permutations(range(n)))
    signs = tuple(draw(st.sampled_from((-1, 1))) for _ in range(n))
    negate = draw(st.sampled_from((-1, 1)))
    return SignedPermutation(tuple(perm), signs, negate)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_group_laws(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    m = [[data.draw(st.integers(min_value=-3, max_value=3)) for _ in range(n)] for _ in range(n)]
    g = Digraph(m)
    p = data.draw(signed_perms(n))
    q = data.draw(signed_perms(n))
    assert apply(g, p.compose(q)) == apply(apply(g, q), p)
    assert apply(apply(g, p), p.inverse()) == g


def test_canonical_form_orbit_invariance(rng):
    for _ in range(200):
        g = random_digraph(rng, nmax=6)
        p = random_signed_perm(rng, g.n)
        assert canonical_form(g) == canonical_form(apply(g, p))


def test_canonical_form_brute_force_oracle(rng):
    # exact minimum over the whole group for small orders
    def encode(g):
        out = []
        for d in range(g.n):
            out.extend(g.a[d][j] for j in range(d + 1))
            out.extend(g.a[j][d] for j in range(d))
        return out

    for _ in range(40):
        g = random_digraph(rng, nmax=3)
        n = g.n
        best = None
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((-1, 1), repeat=n):
                for negate in (-1, 1):
                    h = apply(g, SignedPermutation(perm, signs, negate))
                    enc = encode(h)
                    if best is None or enc < best:
                        best = enc
        assert encode(canonical_form(g)) == best


def test_canonical_transform_reapplies(rng):
    from cyclomat.equivalence import _canonical_data

    for _ in range(60):
        g = random_digraph(rng, nmax=6)
        key, t = _canonical_data(g)
        assert apply(g, t) == key


def test_canonical_form_fixed_point_and_negation(rng):
    for _ in range(40):
        g = random_digraph(rng, nmax=5)
        key = canonical_form(g)
        assert canonical_form(key) == key
        neg = Digraph([[-x for x in row] for row in g.a])
        assert canonical_form(neg) == key


def test_are_equivalent_and_witness():
    o4p = generate("O4prime")
    assert are_equivalent(transpose(o4p), o4p)
    w = equivalence_witness(transpose(o4p), o4p)
    assert apply(transpose(o4p), w) == o4p
    b3 = generate("B", 3)
    assert not are_equivalent(b3, transpose(b3))
    assert equivalence_witness(b3, transpose(b3)) is None
    g = Digraph([[1, 2], [1, 0]])
    assert are_equivalent(g, Digraph([[-1, -2], [-1, 0]]))
    assert not are_equivalent(g, Digraph([[1]]))


def test_witness_roundtrip_random(rng):
    for _ in range(60):
        g = random_digraph(rng, nmax=5)
        p = random_signed_perm(rng, g.n)
        h = apply(g, p)
        w = equivalence_witness(g, h)
        assert w is not None and apply(g, w) == h


def test_equivalence_preserves_char_poly_up_to_reflection(rng):
    for _ in range(40):
        g = random_digraph(rng, nmax=5)
        p = random_signed_perm(rng, g.n)
        h = apply(g, p)
        pc = char_poly(g).coeffs
        hc = char_poly(h).coeffs
        if p.negate == 1:
            assert pc == hc
        else:
            deg = len(pc) - 1
            reflected = tuple(c if (deg - k) % 2 == 0 else -c for k, c in enumerate(pc))
            assert reflected == hc


def test_equivalence_preserves_symmetrizability(rng):
    for _ in range(40):
        g = random_symmetrizable(rng, nmax=5)
        p = random_signed_perm(rng, g.n)
        assert is_symmetrizable(apply(g, p))


def test_l4_and_l4prime_inequivalent():
    assert canonical_form(generate("L", 4)) != canonical_form(generate("Lprime", 4))


def test_weight_modulus_sequences():
    assert weight_modulus_sequences(B2, 2) == {(1,), (2,)}
    gt = generate("G2tilde")
    seqs = weight_modulus_sequences(gt, 3)
    assert (3, 1) in seqs and (3, 1) not in weight_modulus_sequences(transpose(gt), 3)
    f4t = generate("F4tilde")
    assert (1, 2, 1, 1) in weight_modulus_sequences(f4t, 5)
    with pytest.raises(ValueError):
        weight_modulus_sequences(B2, 0)


def test_wms_invariant_under_equivalence(rng):
    for _ in range(30):
        g = random_digraph(rng, nmax=5)
        p = random_signed_perm(rng, g.n)
        assert weight_modulus_sequences(g, g.n) == weight_modulus_sequences(apply(g, p), g.n)
        charged = weight_modulus_sequences(g, g.n, with_charges=True)
        assert charged == weight_modulus_sequences(apply(g, p), g.n, with_charges=True)


def test_wms_separator_implies_inequivalence(rng):
    for _ in range(40):
        a = random_digraph(rng, nmax=5)
        b = random_digraph(rng, nmax=5)
        if a.n != b.n:
            continue
        if weight_modulus_sequences(a, a.n) != weight_modulus_sequences(b, b.n):
            assert not are_equivalent(a, b)


def test_equivalent_to_transpose():
    assert equivalent_to_transpose(generate("Ctilde_prime", 3))
    assert not equivalent_to_transpose(generate("M", 2))
    assert equivalent_to_transpose(Digraph([[0, 1, 0], [1, 1, 1], [0, 1, 0]]))
