import numpy as np
import pytest
from numpy.testing import assert_allclose

from idsep import algebra
from idsep.errors import DimensionMismatch, NonCommutingError, NormalizationError
from idsep.hilbert import (
    HilbertSpace,
    Ket,
    basis_ket,
    bell_states,
    identity_op,
    qubit,
    sigma_x,
    sigma_z,
    tensor_ket,
    tensor_op,
)


def particle_local_pair(degree_bound=4):
    eye = identity_op(qubit())
    left = algebra.generate(
        [tensor_op(sigma_x(), eye), tensor_op(sigma_z(), eye)], degree_bound
    )
    right = algebra.generate(
        [tensor_op(eye, sigma_x()), tensor_op(eye, sigma_z())], degree_bound
    )
    return left, right


def monomial_set_contains(subalgebra, target, tol=1e-10):
    return any(
        np.abs(m.matrix - target.matrix).max() <= tol for m in subalgebra.monomials
    )


class TestGenerate:
    def test_projector_collapses_to_two_monomials(self):
        p = basis_ket(qubit(), 0).outer()
        sub = algebra.generate([p], 3)
        assert len(sub.monomials) == 2  # identity and the projector itself

    def test_orthogonal_bell_projectors(self):
        # oracle: explicit matrix products; the two projectors are orthogonal
        # so their product vanishes and is dropped
        states = bell_states()
        p_phi = states["phi_plus"].outer()
        p_psi = states["psi_plus"].outer()
        assert np.abs((p_phi @ p_psi).matrix).max() <= 1e-12
        sub = algebra.generate([p_phi, p_psi], 2)
        assert len(sub.monomials) == 3
        assert monomial_set_contains(sub, p_phi)
        assert monomial_set_contains(sub, p_psi)

    def test_ladder_pair_contains_number_operator(self):
        from idsep import fock

        space = fock.double_well(cutoff=3)
        e_l = basis_ket(space.mode_space, "L")
        a = fock.annihilation_op(space, e_l).matrix
        sub = algebra.generate([a], 2)
        number_op = a.dagger() @ a
        assert monomial_set_contains(sub, number_op)

    def test_dimension_guard(self):
        with pytest.raises(DimensionMismatch):
            algebra.generate([sigma_z(), identity_op(HilbertSpace.of_dim(3))], 2)


class TestCommutation:
    def test_particle_local_pair_commutes(self):
        left, right = particle_local_pair()
        assert algebra.subalgebras_commute(left, right) <= 1e-12

    def test_bell_subalgebras_commute(self):
        plus, minus = algebra.bell_subalgebras()
        assert algebra.subalgebras_commute(plus, minus) <= 1e-12
        # each side is internally commutative as well
        assert algebra.subalgebras_commute(plus, plus) <= 1e-12
        assert algebra.subalgebras_commute(minus, minus) <= 1e-12

    def test_pauli_pair_commutator_norm(self):
        eye = identity_op(qubit())
        a = algebra.generate([tensor_op(sigma_z(), eye)], 1)
        b = algebra.generate([tensor_op(sigma_x(), eye)], 1)
        assert abs(algebra.subalgebras_commute(a, b) - 2.0) <= 1e-12


class TestBellSubalgebras:
    def test_projector_expansion(self):
        # the phi-plus projector written out as a sum of tensor products
        states = bell_states()
        q = qubit()
        zero, one = basis_ket(q, 0), basis_ket(q, 1)
        expansion = 0.5 * (
            tensor_op(zero.outer(), zero.outer()).matrix
            + tensor_op(one.outer(), one.outer()).matrix
            + tensor_op(zero.outer(one), zero.outer(one)).matrix
            + tensor_op(one.outer(zero), one.outer(zero)).matrix
        )
        assert_allclose(states["phi_plus"].outer().matrix, expansion, atol=1e-12)

    def test_monomial_content(self):
        plus, _ = algebra.bell_subalgebras()
        states = bell_states()
        assert monomial_set_contains(plus, states["psi_plus"].outer())
        assert monomial_set_contains(plus, states["phi_plus"].outer())
        assert len(plus.monomials) == 3

    def test_cross_projector_expectations(self):
        # oracle: direct matrix evaluation on the symmetric Bell state
        states = bell_states()
        psi = states["psi_plus"]
        p_plus = states["psi_plus"].outer()
        p_minus = states["psi_minus"].outer()
        joint = np.vdot(psi.amplitudes, (p_plus @ p_minus).matrix @ psi.amplitudes)
        marg = np.vdot(psi.amplitudes, p_plus.matrix @ psi.amplitudes) * np.vdot(
            psi.amplitudes, p_minus.matrix @ psi.amplitudes
        )
        assert abs(joint) <= 1e-12
        assert abs(marg) <= 1e-12


class TestFactorizationTest:
    def test_product_state_is_particle_locally_separable(self):
        q = qubit()
        state = tensor_ket(basis_ket(q, 0), basis_ket(q, 0))
        left, right = particle_local_pair()
        report = algebra.factorization_test(state, left, right)
        assert report.verdict == algebra.VERDICT_SEPARABLE
        assert report.max_violation <= 1e-9
        # ... and every single pair row stays below tolerance
        assert max(row[5] for row in report.pairs) <= 1e-9

    def test_product_state_fails_on_bell_projectors(self):
        q = qubit()
        state = tensor_ket(basis_ket(q, 0), basis_ket(q, 0))
        plus, minus = algebra.bell_subalgebras()
        report = algebra.factorization_test(state, plus, minus)
        assert report.verdict == algebra.VERDICT_ENTANGLED
        assert report.max_violation >= 0.25 - 1e-12
        # the monomial witness is the (phi-plus, phi-minus) projector pair
        mono_rows = [
            row for row in report.pairs if ".m" in row[0] and ".m" in row[1]
        ]
        assert max(row[5] for row in mono_rows) == pytest.approx(0.25, abs=1e-12)

    @pytest.mark.parametrize("name", ["psi_plus", "psi_minus", "phi_plus", "phi_minus"])
    def test_bell_states_separable_for_bell_projectors(self, name):
        state = bell_states()[name]
        plus, minus = algebra.bell_subalgebras()
        report = algebra.factorization_test(state, plus, minus)
        assert report.verdict == algebra.VERDICT_SEPARABLE

    @pytest.mark.parametrize("name", ["psi_plus", "psi_minus", "phi_plus", "phi_minus"])
    def test_bell_state_particle_local_witness(self, name):
        state = bell_states()[name]
        left, right = particle_local_pair()
        report = algebra.factorization_test(state, left, right)
        assert report.verdict == algebra.VERDICT_ENTANGLED
        # sigma_z (x) 1 against 1 (x) sigma_z: |+-1 - 0| = 1
        eye = identity_op(qubit())
        z1 = tensor_op(sigma_z(), eye)
        z2 = tensor_op(eye, sigma_z())
        psi = state.amplitudes
        joint = np.vdot(psi, (z1 @ z2).matrix @ psi)
        marg = np.vdot(psi, z1.matrix @ psi) * np.vdot(psi, z2.matrix @ psi)
        assert abs(abs(joint - marg) - 1.0) <= 1e-12
        assert report.max_violation >= 1.0 - 1e-12

    def test_noncommuting_inputs_rejected(self):
        eye = identity_op(qubit())
        a = algebra.generate([tensor_op(sigma_z(), eye)], 2)
        b = algebra.generate([tensor_op(sigma_x(), eye)], 2)
        state = bell_states()["psi_plus"]
        with pytest.raises(NonCommutingError):
            algebra.factorization_test(state, a, b)

    def test_requires_normalized_state(self):
        left, right = particle_local_pair()
        state = Ket(HilbertSpace.of_dim(4), [1.0, 1.0, 0.0, 0.0])
        with pytest.raises(NormalizationError):
            algebra.factorization_test(state, left, right)

    def test_swap_symmetry(self):
        q = qubit()
        state = tensor_ket(basis_ket(q, 0), basis_ket(q, 0))
        plus, minus = algebra.bell_subalgebras()
        forward = algebra.factorization_test(state, plus, minus)
        backward = algebra.factorization_test(state, minus, plus)
        assert abs(forward.max_violation - backward.max_violation) <= 1e-12

    def test_generator_scaling_does_not_change_verdict(self):
        q = qubit()
        state = tensor_ket(basis_ket(q, 0), basis_ket(q, 0))
        states = bell_states()
        plain_plus = algebra.generate(
            [states["psi_plus"].outer(), states["phi_plus"].outer()], 2
        )
        scaled_plus = algebra.generate(
            [7.0 * states["psi_plus"].outer(), 7.0 * states["phi_plus"].outer()], 2
        )
        minus = algebra.generate(
            [states["psi_minus"].outer(), states["phi_minus"].outer()], 2
        )
        plain = algebra.factorization_test(state, plain_plus, minus)
        scaled = algebra.factorization_test(state, scaled_plus, minus)
        assert plain.verdict == scaled.verdict
        assert abs(plain.max_violation - scaled.max_violation) <= 1e-9

    def test_random_product_states_factorize(self):
        rng = np.random.default_rng(31)
        left, right = particle_local_pair()
        q = qubit()
        for _ in range(5):
            v = Ket(q, rng.standard_normal(2) + 1j * rng.standard_normal(2)).normalized()
            w = Ket(q, rng.standard_normal(2) + 1j * rng.standard_normal(2)).normalized()
            report = algebra.factorization_test(tensor_ket(v, w), left, right)
            assert max(row[5] for row in report.pairs) <= 1e-9

    def test_hermitian_maximum_is_tracked(self):
        q = qubit()
        state = tensor_ket(basis_ket(q, 0), basis_ket(q, 0))
        plus, minus = algebra.bell_subalgebras()
        report = algebra.factorization_test(state, plus, minus)
        assert report.max_violation_hermitian > 0.0
        assert report.max_violation_hermitian <= report.max_violation + 1e-12
        assert report.witness_pair_hermitian is not None
