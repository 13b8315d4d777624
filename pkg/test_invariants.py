from fractions import Fraction

import pytest

import config
from invariants import (
    INEQUIVALENT, UNDECIDED, Signature, all_invariants, family_count, inequivalence_check,
    sigma_determinant, signature, slocc_exponent, verify_slocc_equation,
)
from partition import enumerate_partitions
from qstate import (
    LocalOperator, NonInvertibleError, OperatorChain, SizeMismatchError, apply_local_ops,
    canonical_state, random_invertible_chain, random_state,
)
from scalars import GaussRational


def test_vector_shape_and_order():
    vector = all_invariants(random_state(6, seed=1))
    assert vector.c == 10
    assert [p.canonical_index for p in vector.partitions] == list(range(1, 11))
    assert vector.entry(1) is vector.values[0]


def test_threaded_evaluation_keeps_order():
    state = random_state(6, seed=2)
    assert all_invariants(state, workers=4).values == all_invariants(state, workers=1).values


def test_signature_bits():
    sig = Signature.from_values(all_invariants(canonical_state('chi6', 6)).values)
    assert sig.delta_string == '0101000101'
    assert sig.family_id == (1 << 1) + (1 << 3) + (1 << 7) + (1 << 9)


def test_family_count():
    assert family_count(4) == 8
    assert family_count(6) == 1024


@pytest.mark.parametrize('n,exponent', [(2, 1), (4, 2), (6, 4), (8, 8)])
def test_slocc_exponent(n, exponent):
    assert slocc_exponent(n) == exponent


@pytest.mark.parametrize('n', [2, 4, 6])
def test_slocc_equation_holds_exactly(n):
    for trial in range(50):
        psi = random_state(n, config.EXACT_MODE, seed=[n, trial])
        chain = random_invertible_chain(n, config.EXACT_MODE, seed=[n, trial, 1])
        report = verify_slocc_equation(psi, chain)
        assert report.passed, f"trial {trial}"
        assert report.max_relative_error is None


def test_slocc_equation_holds_in_float():
    for trial in range(20):
        psi = random_state(6, config.FLOAT_MODE, seed=[6, trial])
        chain = random_invertible_chain(6, config.FLOAT_MODE, seed=[6, trial, 1])
        report = verify_slocc_equation(psi, chain)
        assert report.passed
        assert report.max_relative_error <= config.SLOCC_REL_TOLERANCE


def test_slocc_rejects_singular_chains():
    psi = random_state(2, seed=0)
    singular = LocalOperator.from_rows([[1, 2], [2, 4]])
    with pytest.raises(NonInvertibleError):
        verify_slocc_equation(psi, OperatorChain((singular, LocalOperator.identity())))
    with pytest.raises(SizeMismatchError):
        verify_slocc_equation(psi, OperatorChain.identity(4))


@pytest.mark.parametrize('n', [2, 4, 6])
def test_homogeneity(n):
    psi = random_state(n, seed=[40, n])
    lam = GaussRational(2, 1)
    scaled = all_invariants(psi.scaled(lam))
    base = all_invariants(psi)
    factor = lam ** (2 ** (n // 2))
    for left, right in zip(scaled.values, base.values):
        assert left.value == right.value * factor


def test_witness_states():
    chi = all_invariants(canonical_state('chi6', 6))
    assert chi.entry(10).value == -1
    for kind, k in [('ghz', None), ('w', None), ('dicke', 2), ('dicke', 3), ('dicke', 4), ('dicke', 5)]:
        vector = all_invariants(canonical_state(kind, 6, k=k))
        assert all(v.zero_verdict for v in vector.values), kind


def test_witness_states_in_float():
    chi = all_invariants(canonical_state('chi6', 6, config.FLOAT_MODE))
    assert abs(chi.entry(10).value + 1 / 4096) <= 1e-12
    ghz = all_invariants(canonical_state('ghz', 6, config.FLOAT_MODE))
    assert all(v.zero_verdict for v in ghz.values)


@pytest.mark.parametrize('kind,k', [('chi6', None), ('ghz', None), ('w', None), ('dicke', 3)])
def test_signature_is_stable_under_local_operators(kind, k):
    state = canonical_state(kind, 6, k=k)
    expected = signature(state)
    for trial in range(20):
        chain = random_invertible_chain(6, seed=[99, trial])
        assert signature(apply_local_ops(state, chain)) == expected


def test_chi_is_inequivalent_to_ghz(chi6, ghz6):
    verdict = inequivalence_check(chi6, ghz6)
    assert verdict.verdict == INEQUIVALENT
    assert 10 in verdict.witnesses
    assert verdict.witnesses == (2, 4, 8, 10)


def test_matching_patterns_are_undecided(ghz6, w6):
    verdict = inequivalence_check(ghz6, w6)
    assert verdict.verdict == UNDECIDED
    assert not verdict.inequivalent and verdict.witnesses == ()


def test_mixed_modes_compare_in_float(chi6, ghz6):
    floating_ghz = canonical_state('ghz', 6, config.FLOAT_MODE)
    assert inequivalence_check(chi6, floating_ghz).witnesses == (2, 4, 8, 10)
    with pytest.raises(SizeMismatchError):
        inequivalence_check(chi6, canonical_state('ghz', 4))


def test_sigma_determinant_equals_invariant_up_to_sign():
    psi = random_state(6, seed=12)
    vector = all_invariants(psi)
    for p in enumerate_partitions(6):
        value = sigma_determinant(psi, p).value
        assert value == vector.entry(p.canonical_index).value or value == -vector.entry(p.canonical_index).value


def test_exact_state_evaluated_in_float():
    psi = random_state(4, seed=5)
    exact = all_invariants(psi)
    floating = all_invariants(psi, config.FLOAT_MODE)
    assert floating.mode == config.FLOAT_MODE
    for e, f in zip(exact.values, floating.values):
        assert abs(complex(e.value) - f.value) <= 1e-9 * max(1.0, abs(complex(e.value)))


def test_rational_amplitudes():
    psi = random_state(4, seed=6).scaled(GaussRational(Fraction(1, 3)))
    base = all_invariants(random_state(4, seed=6))
    scaled = all_invariants(psi)
    assert scaled.entry(2).value == base.entry(2).value * Fraction(1, 81)


@pytest.mark.parametrize('n', [2, 4, 6, 8])
def test_zero_state_is_in_family_zero(n):
    zero_state = random_state(n, seed=0).scaled(GaussRational(0))
    sig = signature(zero_state)
    assert sig.family_id == 0
    assert sig.delta == (0,) * len(enumerate_partitions(n))
    assert signature(zero_state, config.FLOAT_MODE).family_id == 0
