"""
Property checks run over many seeded inputs.

These are slower than the unit tests next door: they sweep Haar unitaries,
random channels and random carriers rather than one hand-picked case.
"""

import numpy as np
import pytest

from hopswitch.models.specs import ScenarioConfig
from hopswitch.quantum.channels import eb_xz, random_channel, standard_library, unitary_channel
from hopswitch.quantum.coins import named_coin
from hopswitch.quantum.dtqw import coin_state_vector, run_walk
from hopswitch.quantum.measurement import heralded_correction_check, measure_control, plus_minus_basis
from hopswitch.quantum.numerics import IDENTITY2, PAULI_X, PAULI_Y, PAULI_Z, projector
from hopswitch.quantum.states import named_state, random_density_matrix
from hopswitch.quantum.supermaps import apply_joint, quantum_switch, spatial_superposition
from hopswitch.quantum.vacuum import make_vacuum_extension, uniform_extension
from hopswitch.quantum.walk_hybrid import evolve, hop_channel
from hopswitch.scenarios import sweep

MINUS = np.array([1.0, -1.0]) / np.sqrt(2.0)


class TestUnitarySweeps:
    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_hundred_haar_pairs_match_the_switch(self, dim):
        summary = sweep(ScenarioConfig(scenario="sweep", trials=100, dim=dim, seed=dim))
        assert len(summary.trials) == 100
        assert summary.max_distance <= 1e-10
        assert summary.equivalent

    def test_random_channels_stay_away_from_the_switch(self):
        summary = sweep(ScenarioConfig(scenario="sweep", trials=20, family="random-channel", kraus_count=2))
        assert summary.max_distance > 0.01
        assert not summary.equivalent


class TestWorkedInstance:
    def setup_method(self):
        self.e = make_vacuum_extension(unitary_channel(PAULI_X), [1.0])
        self.d = make_vacuum_extension(unitary_channel(PAULI_Z), [1.0])
        self.expected = np.kron(named_state("one").matrix, projector(MINUS))

    def test_two_hops_end_in_one_minus(self):
        w = hop_channel(spatial_superposition(self.e, self.d), named_coin("X"))
        out = evolve(w, 2, named_state("zero"), named_state("plus"))
        assert np.max(np.abs(out.matrix - self.expected)) <= 1e-12

    def test_switch_ends_in_one_minus(self):
        out = apply_joint(quantum_switch(self.e.channel, self.d.channel), named_state("zero"), named_state("plus"))
        assert np.max(np.abs(out.matrix - self.expected)) <= 1e-12


class TestHeraldedTransmission:
    def test_twenty_random_carriers(self):
        switch = quantum_switch(eb_xz(), eb_xz())
        corrections = {"+": IDENTITY2, "-": PAULI_Y}
        for seed in range(20):
            carrier = random_density_matrix(2, seed=1000 + seed)
            outcomes = measure_control(apply_joint(switch, carrier, named_state("plus")), plus_minus_basis())
            assert [o.probability for o in outcomes] == pytest.approx([0.5, 0.5], abs=1e-12)
            assert heralded_correction_check(outcomes, carrier, corrections).worst_case <= 1e-10


class TestClosure:
    def channels(self):
        return standard_library() + [random_channel(2, 1 + seed % 3, seed=seed) for seed in range(50)]

    def test_supermaps_and_hop_channels_are_cptp(self):
        channels = self.channels()
        for e, d in zip(channels, channels[1:] + channels[:1]):
            spatial = spatial_superposition(uniform_extension(e), uniform_extension(d))
            assert spatial.closure_residual() <= 1e-10
            assert quantum_switch(e, d).closure_residual() <= 1e-10
            assert hop_channel(spatial, named_coin("H")).closure_residual() <= 1e-10


class TestBalancedWalk:
    @pytest.mark.parametrize("steps", range(0, 21))
    def test_symmetric_distribution(self, steps):
        dist = run_walk(steps, coin_state_vector("balanced"), named_coin("H"))
        for x in range(1, steps + 1):
            assert dist[x] == pytest.approx(dist[-x], abs=1e-12)
