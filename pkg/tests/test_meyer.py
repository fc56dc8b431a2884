"""Meyer cocycle, the signature recursion, and the Seifert-matrix oracle."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from braidwalk.braid import BraidWord, closure_components
from braidwalk.burau import burau_minus1
from braidwalk.linalg import mat_mul, mat_pow
from braidwalk.meyer import (
    MeyerInput,
    check_big_entries,
    gg_signature,
    is_hyperbolic,
    meyer_cocycle,
    meyer_gram,
    meyer_space,
    power_signatures,
    quasipositive_invariants,
    seifert_matrix,
    seifert_signature_oracle,
)

S1 = ((1, 0), (-1, 1))
S2 = ((1, 1), (0, 1))


def sl2_words(max_size=8):
    return st.lists(st.sampled_from([S1, S2,
                                     ((1, 0), (1, 1)), ((1, -1), (0, 1))]),
                    max_size=max_size)


def sl2_matrices(max_size=8):
    def prod(ms):
        out = ((1, 0), (0, 1))
        for m in ms:
            out = mat_mul(out, m)
        return out
    return sl2_words(max_size).map(prod)


def words3(max_size=10):
    return st.lists(st.sampled_from([1, -1, 2, -2]), max_size=max_size).map(
        lambda ls: BraidWord(3, ls)
    )


def test_meyer_input_validation():
    MeyerInput(S1, S2)
    with pytest.raises(ValueError):
        MeyerInput(((1, 0), (0, 2)), S2)
    with pytest.raises(ValueError):
        MeyerInput(((1, 0, 0), (0, 1, 0)), S2)


def test_meyer_anchors():
    assert meyer_cocycle(S1, S1) == 1
    assert meyer_cocycle(S1, S2) == 0
    assert meyer_cocycle(S2, S2) == 1
    prod = mat_mul(S1, S2)
    assert meyer_cocycle(prod, prod) == 2


def test_meyer_space_and_gram():
    # gamma1 = gamma2 = s1: E is one-dimensional
    e = meyer_space(S1, S1)
    assert len(e) == 1
    basis, gram = meyer_gram(S1, S1)
    assert len(basis) == 1 and len(gram) == 1
    # identity against anything gives the empty space
    assert meyer_space(((1, 0), (0, 1)), S1) == []
    assert meyer_cocycle(((1, 0), (0, 1)), S1) == 0


@settings(max_examples=120)
@given(sl2_matrices(6), sl2_matrices(6), sl2_matrices(6))
def test_cocycle_identity(a, b, c):
    lhs = meyer_cocycle(a, b) + meyer_cocycle(mat_mul(a, b), c)
    rhs = meyer_cocycle(b, c) + meyer_cocycle(a, mat_mul(b, c))
    assert lhs == rhs


@given(sl2_matrices(8), sl2_matrices(8))
def test_meyer_bounded(a, b):
    assert abs(meyer_cocycle(a, b)) <= 2


def test_hyperbolic_powers_vanish():
    gamma = ((1, 1), (1, 2))
    assert is_hyperbolic(gamma)
    for a in range(1, 5):
        for b in range(1, 5):
            assert meyer_cocycle(mat_pow(gamma, a), mat_pow(gamma, b)) == 0
    assert not is_hyperbolic(S1)
    assert not is_hyperbolic(((0, 1), (-1, 0)))


def test_gg_signature_anchors():
    cases = {
        (): 0,
        (1,): 0,
        (1, 1): -1,
        (1, 1, 1): -2,
        (1, 2, 1, 2): -2,            # trefoil
        (1, -2, 1, -2): 0,           # figure eight
        (1, 2, 1, 2, 1, 2): -4,      # (3,3) torus link
        (1, 2, 1, 2, 1, 2, 1, 2): -6,    # (3,4) torus knot
        (1, 2) * 5: -8,              # (3,5) torus knot
    }
    for letters, expected in cases.items():
        res = gg_signature(BraidWord(3, letters))
        assert res.value == expected, (letters, res.value)


def test_gg_signature_result_fields():
    res = gg_signature(BraidWord(3, (1, 2, 1, 2)))
    assert res.value == -2
    assert res.word_length == 4
    assert res.components == 1


def test_gg_requires_three_strands():
    with pytest.raises(ValueError):
        gg_signature(BraidWord(2, (1, 1, 1)))
    with pytest.raises(ValueError):
        gg_signature(BraidWord(4, (1, 2, 3)))


def test_seifert_matrix_anchor():
    v = seifert_matrix(BraidWord(2, (1, 1, 1)))
    assert v == ((-1, 1), (0, -1))
    assert seifert_signature_oracle(BraidWord(2, (1, 1, 1))) == -2


def test_seifert_oracle_on_other_strand_counts():
    assert seifert_signature_oracle(BraidWord(2, (1, 1))) == -1    # Hopf
    assert seifert_signature_oracle(BraidWord(4, (1, 2, 3))) == 0  # unknot
    assert seifert_signature_oracle(BraidWord(4, (1, 1, 2, 2, 3, 3))) == -3
    assert seifert_signature_oracle(BraidWord(3, ())) == 0


@settings(max_examples=150, deadline=None)
@given(words3(14))
def test_recursion_matches_oracle(w):
    assert gg_signature(w).value == seifert_signature_oracle(w)


def test_mirror_negates_signature():
    rng = random.Random(7)
    for _ in range(40):
        letters = tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 16)))
        w = BraidWord(3, letters)
        mirror = BraidWord(3, tuple(-g for g in letters))
        assert gg_signature(mirror).value == -gg_signature(w).value


@settings(max_examples=80, deadline=None)
@given(words3(10), words3(10))
def test_quasimorphism_defect(a, b):
    d = gg_signature(a * b).value - gg_signature(a).value - gg_signature(b).value
    assert abs(d) <= 2


def test_power_signatures_match_expansion():
    w = BraidWord(3, (1, 2))
    sigs = power_signatures(w, 6)
    for n in range(1, 7):
        assert sigs[n - 1] == gg_signature(w ** n).value


def test_quasipositive_invariants():
    chi, g4 = quasipositive_invariants(bands=2, strands=3, components=1)
    assert chi == 1 and g4 == 0
    chi, g4 = quasipositive_invariants(bands=4, strands=3, components=1)
    assert chi == -1 and g4 == 1
    chi, g4 = quasipositive_invariants(bands=2, strands=3)
    assert chi == 1 and g4 is None
    # zero bands is the identity braid: closure is the n-component unlink
    chi, g4 = quasipositive_invariants(bands=0, strands=3)
    assert chi == 3 and g4 is None
    with pytest.raises(ValueError):
        quasipositive_invariants(bands=-1, strands=3)
    with pytest.raises(ValueError):
        quasipositive_invariants(bands=2, strands=1)


def test_check_big_entries():
    assert not check_big_entries(BraidWord(3, (1,)))
    assert not check_big_entries(BraidWord(3, ()))
    found = None
    rng = random.Random(1)
    while found is None:
        letters = tuple(rng.choice([1, -1, 2, -2]) for _ in range(10))
        w = BraidWord(3, letters)
        if check_big_entries(w):
            found = w
    m = burau_minus1(found)
    assert all(abs(x) > 2 for row in m for x in row)
    with pytest.raises(ValueError):
        check_big_entries(BraidWord(4, (1, 2, 3)))


def test_big_entries_kill_conjugated_signatures():
    # the transience mechanism in one example: big entries force zero
    # signature for the whole conjugated family
    rng = random.Random(3)
    beta = None
    while beta is None:
        letters = tuple(rng.choice([1, -1, 2, -2]) for _ in range(12))
        w = BraidWord(3, letters)
        if check_big_entries(w):
            beta = w
    for a in (1, 2):
        for b in (1, 2):
            word = BraidWord(3, (a,)) * beta * BraidWord(3, (b,)) * (beta ** -1)
            sigs = power_signatures(word, 8)
            assert all(s == 0 for s in sigs)
