"""Coin operators shared by the hop channel and the reference quantum walk."""

import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from hopswitch.config import settings
from hopswitch.errors import DimensionMismatchError, NonUnitaryError, ParameterRangeError
from hopswitch.quantum.numerics import HADAMARD, IDENTITY2, PAULI_X, frozen, is_unitary

logger = logging.getLogger(__name__)

NAMED_COINS = {"I": IDENTITY2, "X": PAULI_X, "H": HADAMARD}


class CoinOperator(BaseModel):
    """A 2x2 unitary acting on the control / coin qubit."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray
    name: Optional[str] = None

    @field_validator("matrix", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen(value)

    @model_validator(mode="after")
    def _check_unitary(self) -> "CoinOperator":
        if self.matrix.shape != (2, 2):
            raise DimensionMismatchError(f"a coin is 2x2, got shape {self.matrix.shape}")
        if not is_unitary(self.matrix, settings.UNITARY_TOLERANCE):
            raise NonUnitaryError(f"coin {self.name or '<explicit>'} is not unitary")
        return self


def named_coin(name: str) -> CoinOperator:
    """I (no toss), X (Pauli flip) or H (Hadamard)."""
    key = name.upper()
    if key not in NAMED_COINS:
        raise ParameterRangeError(f"unknown coin {name!r}; named coins are {sorted(NAMED_COINS)}")
    return CoinOperator(matrix=NAMED_COINS[key], name=key)
