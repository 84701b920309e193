"""
Tests for control measurement and heralded correction.

The central case: two entanglement-breaking channels in the switch still
deliver the carrier once the control outcome picks the right Pauli.
"""

import numpy as np
import pytest

from hopswitch.errors import DimensionMismatchError, MissingCorrectionError, NonUnitaryError, NormalizationError
from hopswitch.quantum.channels import eb_xz, random_channel, unitary_channel
from hopswitch.quantum.numerics import IDENTITY2, PAULI_X, PAULI_Y, PAULI_Z, trace_distance
from hopswitch.quantum.states import DensityMatrix, named_state, random_density_matrix
from hopswitch.quantum.supermaps import apply_joint, carrier_marginal, quantum_switch
from hopswitch.quantum.measurement import (
    computational_basis,
    heralded_correction_check,
    measure_control,
    pauli_correction_search,
    plus_minus_basis,
)


class TestMeasureControl:
    def setup_method(self):
        self.plus = named_state("plus")

    def test_switch_of_anticommuting_unitaries_always_gives_minus(self):
        out = apply_joint(quantum_switch(unitary_channel(PAULI_X), unitary_channel(PAULI_Z)), named_state("zero"), self.plus)
        outcomes = {o.label: o for o in measure_control(out, plus_minus_basis())}
        assert outcomes["+"].probability == pytest.approx(0.0, abs=1e-12)
        assert outcomes["+"].post_state is None
        assert outcomes["-"].probability == pytest.approx(1.0)
        assert np.allclose(outcomes["-"].post_state.matrix, named_state("one").matrix)

    def test_eb_switch_outcomes_are_even(self):
        out = apply_joint(quantum_switch(eb_xz(), eb_xz()), random_density_matrix(2, seed=3), self.plus)
        probabilities = [o.probability for o in measure_control(out, plus_minus_basis())]
        assert probabilities == pytest.approx([0.5, 0.5])

    def test_computational_basis_probabilities_sum_to_one(self):
        out = apply_joint(quantum_switch(eb_xz(), eb_xz()), named_state("plus"), self.plus)
        outcomes = measure_control(out, computational_basis())
        assert [o.label for o in outcomes] == ["0", "1"]
        assert sum(o.probability for o in outcomes) == pytest.approx(1.0)

    def test_rejects_non_orthonormal_basis(self):
        out = apply_joint(quantum_switch(eb_xz(), eb_xz()), named_state("zero"), self.plus)
        basis = [("a", np.array([1, 0])), ("b", np.array([1, 1]) / np.sqrt(2))]
        with pytest.raises(NormalizationError):
            measure_control(out, basis)

    def test_rejects_wrong_basis_size(self):
        out = apply_joint(quantum_switch(eb_xz(), eb_xz()), named_state("zero"), self.plus)
        with pytest.raises(DimensionMismatchError):
            measure_control(out, plus_minus_basis()[:1])

    @pytest.mark.parametrize("epsilon", [1e-4, 1e-5])
    def test_rare_outcome_still_yields_a_valid_post_state(self, epsilon):
        # {X, R Z} = 2 sin(eps) I for R = exp(-i eps Y), so p(+) = sin(eps)^2 and the + branch leaves rho untouched
        tilted = (np.cos(epsilon) * IDENTITY2 - 1j * np.sin(epsilon) * PAULI_Y) @ PAULI_Z
        switch = quantum_switch(unitary_channel(PAULI_X), unitary_channel(tilted))
        carrier = random_density_matrix(2, seed=21)
        outcomes = {o.label: o for o in measure_control(apply_joint(switch, carrier, self.plus), plus_minus_basis())}
        assert outcomes["+"].probability == pytest.approx(np.sin(epsilon) ** 2, rel=1e-4)
        assert trace_distance(outcomes["+"].post_state, carrier) <= 1e-4
        assert np.min(np.linalg.eigvalsh(outcomes["+"].post_state.matrix)) >= -1e-12

    def test_zero_probability_is_reported_as_exactly_zero(self):
        out = apply_joint(quantum_switch(unitary_channel(PAULI_X), unitary_channel(PAULI_Z)), named_state("plus"), self.plus)
        outcomes = {o.label: o for o in measure_control(out, plus_minus_basis())}
        assert outcomes["+"].probability == 0.0

    @pytest.mark.parametrize("basis", [plus_minus_basis(), computational_basis()], ids=["plus-minus", "computational"])
    def test_post_states_average_back_to_the_carrier_marginal(self, basis):
        switch = quantum_switch(random_channel(2, 2, seed=31), eb_xz())
        for seed in range(5):
            out = apply_joint(switch, random_density_matrix(2, seed=seed), self.plus)
            mixture = sum(o.probability * o.post_state.matrix for o in measure_control(out, basis) if o.post_state is not None)
            assert np.allclose(mixture, carrier_marginal(out).matrix, atol=1e-10)


class TestHeraldedCorrection:
    def setup_method(self):
        self.switch = quantum_switch(eb_xz(), eb_xz())
        self.plus = named_state("plus")

    def outcomes_for(self, carrier: DensityMatrix):
        return measure_control(apply_joint(self.switch, carrier, self.plus), plus_minus_basis())

    def test_identity_and_y_corrections_restore_the_carrier(self):
        for seed in range(20):
            carrier = random_density_matrix(2, seed=seed)
            report = heralded_correction_check(self.outcomes_for(carrier), carrier, {"+": IDENTITY2, "-": PAULI_Y})
            assert report.worst_case <= 1e-9

    def test_without_correction_the_minus_branch_is_wrong(self):
        carrier = named_state("plus")
        report = heralded_correction_check(self.outcomes_for(carrier), carrier, {"+": IDENTITY2, "-": IDENTITY2})
        assert report.per_outcome["+"] == pytest.approx(0.0, abs=1e-12)
        assert report.per_outcome["-"] == pytest.approx(trace_distance(PAULI_Y @ carrier.matrix @ PAULI_Y, carrier.matrix))
        assert report.worst_case > 0.5

    def test_missing_correction(self):
        carrier = named_state("zero")
        with pytest.raises(MissingCorrectionError):
            heralded_correction_check(self.outcomes_for(carrier), carrier, {"+": IDENTITY2})

    def test_zero_probability_outcome_needs_no_correction(self):
        switch = quantum_switch(unitary_channel(PAULI_X), unitary_channel(PAULI_Z))
        carrier = named_state("zero")
        outcomes = measure_control(apply_joint(switch, carrier, self.plus), plus_minus_basis())
        report = heralded_correction_check(outcomes, carrier, {"-": PAULI_X})
        assert report.per_outcome["+"] is None
        assert report.worst_case == pytest.approx(0.0, abs=1e-12)

    def test_non_unitary_correction(self):
        carrier = named_state("zero")
        with pytest.raises(NonUnitaryError):
            heralded_correction_check(self.outcomes_for(carrier), carrier, {"+": IDENTITY2, "-": 2 * IDENTITY2})

    def test_correction_shape(self):
        carrier = named_state("zero")
        with pytest.raises(DimensionMismatchError):
            heralded_correction_check(self.outcomes_for(carrier), carrier, {"+": IDENTITY2, "-": np.eye(3)})

    def test_pauli_search_finds_a_working_correction(self):
        carrier = random_density_matrix(2, seed=77)
        report = pauli_correction_search(self.outcomes_for(carrier), carrier)
        assert report.worst_case <= 1e-9
        assert set(report.corrections) == {"+", "-"}

    def test_pauli_search_needs_a_qubit(self):
        with pytest.raises(DimensionMismatchError):
            pauli_correction_search([], DensityMatrix.maximally_mixed(3))
