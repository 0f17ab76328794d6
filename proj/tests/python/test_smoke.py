import math

import numpy as np
import pytest

import planark


def test_version():
    assert planark.__version__


def test_worked_example_block():
    block = planark.build_canonical_block(11, 6)
    sets = block.index_sets()
    assert len(sets) == 17
    assert sets[:11] == [[j] for j in range(1, 12)]
    assert sets[11] == [1, 7]
    assert sets[16] == [6, 7, 8, 9, 10, 11]
    assert planark.verify_block(block, 2).passed


def test_block_parameter_errors():
    with pytest.raises(planark.PlanarkError):
        planark.build_canonical_block(3, 3)


def test_poa_certification():
    array = planark.poa_from_block(planark.block_for_length(3, 8), 3)
    assert array.r == 27 and array.n == 8
    assert planark.verify_strength(array).passed
    assert planark.verify_irredundant(array).passed
    again = planark.poa_from_json(planark.poa_to_json(array))
    assert again.rows() == array.rows()


def test_fixture_uniformity():
    eq4 = planark.build_fixture("eq4")
    report = planark.verify_planar_k_uniform(eq4, 2)
    assert report.all_passed and len(report.windows) == 5
    assert not planark.verify_planar_k_uniform(planark.build_fixture("eq7"), 4).all_passed


def test_dense_vector_and_density_agreement():
    eq4 = planark.build_fixture("eq4")
    amplitudes = planark.to_dense(eq4)
    assert amplitudes.shape == (32,)
    assert math.isclose(np.vdot(amplitudes, amplitudes).real, 1.0, abs_tol=1e-12)

    exact = planark.reduced_density(eq4, [1, 2])
    oracle = planark.dense_reduced_density(amplitudes, 2, 5, [1, 2])
    assert np.max(np.abs(exact - oracle)) < 1e-12
    assert np.max(np.abs(exact - np.eye(4) / 4)) < 1e-12


def test_entropy_formula():
    odd = planark.build_pme_odd(2, 2)
    profile = planark.bipartition_profile(5, [1, 2], "pme-odd")
    assert (profile.s, profile.t) == (2, 0)
    predicted = planark.predicted_entropy(profile, "pme-odd")
    numeric = planark.von_neumann_entropy(odd, [1, 2])
    assert math.isclose(numeric, predicted, abs_tol=1e-9)

    even = planark.build_pme_even(2, 2)
    assert planark.von_neumann_entropy(even, [1, 3]) < 1e-9
    assert planark.is_genuinely_entangled(odd)
    assert not planark.is_genuinely_entangled(even)


def test_basis_orthogonality():
    eq4 = planark.build_fixture("eq4")
    basis = planark.generate_basis(eq4, 2)
    assert len(basis) == 32
    for _, state in basis[:6]:
        assert abs(planark.inner_product(eq4, state)) < 1e-10 or state == eq4


def test_shares_roundtrip():
    eq4 = planark.build_fixture("eq4")
    shares = planark.extract_shares(eq4, 5)
    assert len(shares) == 2
    gram = [[planark.inner_product(a, b) for b in shares] for a in shares]
    assert abs(gram[0][0] - 1) < 1e-12 and abs(gram[0][1]) < 1e-12
    assert planark.reassemble_shares(shares, 5) == eq4


def test_classify_levels():
    levels = planark.classify_support_levels(8, 2, 2)
    assert [lvl.state.support_size() for lvl in levels] == [4, 8, 16]
    assert all(lvl.is_kmin_uniform for lvl in levels)
