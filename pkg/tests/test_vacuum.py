"""Tests for vacuum-extended channels and their spec codec."""

import numpy as np
import pytest

from hopswitch.errors import DimensionMismatchError, NormalizationError, ParameterRangeError
from hopswitch.quantum.channels import channels_equal, eb_xz, unitary_channel
from hopswitch.quantum.numerics import HADAMARD, PAULI_X
from hopswitch.quantum.vacuum import (
    amplitude_weights,
    concentrated_extension,
    extension_from_spec,
    extension_to_spec,
    make_vacuum_extension,
    uniform_extension,
    vacuum_interference_operator,
)


class TestVacuumExtendedChannel:
    def setup_method(self):
        self.channel = eb_xz()

    def test_uniform_extension_is_normalized(self):
        ext = uniform_extension(self.channel)
        assert amplitude_weights(ext) == pytest.approx([0.5, 0.5])

    def test_complex_amplitudes_are_accepted(self):
        ext = make_vacuum_extension(self.channel, [1j / np.sqrt(2.0), -1 / np.sqrt(2.0)])
        assert ext.amplitudes[0] == pytest.approx(1j / np.sqrt(2.0))

    def test_amplitude_count_must_match_kraus_count(self):
        with pytest.raises(DimensionMismatchError):
            make_vacuum_extension(self.channel, [1.0])

    def test_amplitudes_must_be_normalized(self):
        with pytest.raises(NormalizationError):
            make_vacuum_extension(self.channel, [1.0, 1.0])

    def test_concentrated_extension(self):
        ext = concentrated_extension(self.channel, 1)
        assert ext.amplitudes == (0j, 1 + 0j)

    def test_concentrated_index_out_of_range(self):
        with pytest.raises(ParameterRangeError):
            concentrated_extension(self.channel, 2)

    def test_extension_exposes_channel_shape(self):
        ext = uniform_extension(self.channel)
        assert ext.dim == 2
        assert len(ext.kraus) == 2
        assert ext.name == "eb_xz"


class TestInterferenceOperator:
    def test_uniform_eb_xz_gives_scaled_hadamard(self):
        op = vacuum_interference_operator(uniform_extension(eb_xz()))
        assert np.allclose(op, HADAMARD / np.sqrt(2.0))

    def test_unitary_with_unit_amplitude_is_the_unitary(self):
        ext = make_vacuum_extension(unitary_channel(PAULI_X), [1.0])
        assert np.allclose(vacuum_interference_operator(ext), PAULI_X)

    def test_amplitudes_enter_conjugated(self):
        ext = make_vacuum_extension(unitary_channel(PAULI_X), [1j])
        assert np.allclose(vacuum_interference_operator(ext), -1j * PAULI_X)


class TestExtensionCodec:
    def test_round_trip(self):
        ext = make_vacuum_extension(eb_xz(), [0.6, 0.8j])
        restored = extension_from_spec(extension_to_spec(ext))
        assert channels_equal(ext.channel, restored.channel)
        assert restored.amplitudes == pytest.approx(ext.amplitudes)
