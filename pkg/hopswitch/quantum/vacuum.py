"""
Vacuum-extended channels: a Kraus channel paired with one vacuum amplitude per
Kraus operator.

The vacuum state itself is never represented.  Once the spatial superposition
Kraus operators are written out, the vacuum sector has been eliminated and the
amplitudes are the only trace it leaves, so carrying a dim + 1 space would only
add states nothing ever populates.  Amplitudes belong to the given Kraus
representation; they are not transformed under a change of Kraus basis.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from hopswitch.config import settings
from hopswitch.errors import DimensionMismatchError, NormalizationError, ParameterRangeError
from hopswitch.models.specs import ExtensionSpec
from hopswitch.quantum.channels import KrausChannel, make_channel
from hopswitch.quantum.numerics import ComplexMatrix
from hopswitch.utils.serialization import decode_matrix, decode_vector, encode_matrix, encode_vector

logger = logging.getLogger(__name__)


class VacuumExtendedChannel(BaseModel):
    """A channel plus normalized vacuum amplitudes (sum |a_i|^2 = 1)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    channel: KrausChannel
    amplitudes: Tuple[complex, ...]

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _coerce(cls, value):
        return tuple(complex(a) for a in value)

    @model_validator(mode="after")
    def _check_invariants(self) -> "VacuumExtendedChannel":
        if len(self.amplitudes) != self.channel.kraus_count:
            raise DimensionMismatchError(
                f"{len(self.amplitudes)} amplitudes given for {self.channel.kraus_count} Kraus operators"
            )
        norm = sum(abs(a) ** 2 for a in self.amplitudes)
        if abs(norm - 1.0) > settings.STATE_TOLERANCE:
            raise NormalizationError(f"vacuum amplitudes have sum |a|^2 = {norm:.12g}, expected 1")
        return self

    @property
    def dim(self) -> int:
        return self.channel.dim

    @property
    def kraus(self) -> Tuple[np.ndarray, ...]:
        return self.channel.kraus

    @property
    def name(self):
        return self.channel.name


def make_vacuum_extension(ch: KrausChannel, amplitudes: Sequence[complex]) -> VacuumExtendedChannel:
    return VacuumExtendedChannel(channel=ch, amplitudes=list(amplitudes))


def uniform_extension(ch: KrausChannel) -> VacuumExtendedChannel:
    """All amplitudes 1/sqrt(n)."""
    n = ch.kraus_count
    return make_vacuum_extension(ch, [1.0 / np.sqrt(n)] * n)


def concentrated_extension(ch: KrausChannel, index: int) -> VacuumExtendedChannel:
    """Amplitude 1 on Kraus operator `index`, 0 elsewhere."""
    if not 0 <= index < ch.kraus_count:
        raise ParameterRangeError(f"index {index} out of range for {ch.kraus_count} Kraus operators")
    amplitudes = [0.0] * ch.kraus_count
    amplitudes[index] = 1.0
    return make_vacuum_extension(ch, amplitudes)


def vacuum_interference_operator(ext: VacuumExtendedChannel) -> ComplexMatrix:
    """sum_i conj(a_i) K_i.

    After one hop from a control coherence, the off-diagonal carrier block of the
    E/D superposition is F rho G^dag with F, G these operators for E and D.
    """
    out = np.zeros((ext.dim, ext.dim), dtype=np.complex128)
    for amplitude, k in zip(ext.amplitudes, ext.kraus):
        out += np.conj(amplitude) * k
    return out


def amplitude_weights(ext: VacuumExtendedChannel) -> List[float]:
    return [abs(a) ** 2 for a in ext.amplitudes]


def extension_from_spec(spec: ExtensionSpec) -> VacuumExtendedChannel:
    ch = make_channel([decode_matrix(op) for op in spec.kraus], name=spec.name)
    return make_vacuum_extension(ch, decode_vector(spec.vacuum_amplitudes))


def extension_to_spec(ext: VacuumExtendedChannel) -> ExtensionSpec:
    return ExtensionSpec(
        name=ext.name,
        dim=ext.dim,
        kraus=[encode_matrix(k) for k in ext.kraus],
        vacuum_amplitudes=encode_vector(np.array(ext.amplitudes)),
    )
