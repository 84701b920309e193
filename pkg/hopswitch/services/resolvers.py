"""
Turn the string-valued parts of a ScenarioConfig into numeric objects.

Coins and carrier states are either a name (I | X | H, zero | one | plus |
minus | mixed) or a path to a JSON spec file.  Channel files may or may not
carry vacuum amplitudes; without them the uniform extension is used.

A relative path that does not exist is retried under DATA_DIR, so the bundled
samples can be named as e.g. `--channel-e eb_xz.json`.
"""

import json
import logging
from pathlib import Path
from typing import Tuple, Type, TypeVar

from pydantic import BaseModel

from hopswitch.config import settings
from hopswitch.errors import ConfigurationError
from hopswitch.models.specs import ChannelSpec, CoinSpec, ExtensionSpec, ScenarioConfig, StateSpec
from hopswitch.quantum.channels import KrausChannel, channel_from_spec
from hopswitch.quantum.coins import NAMED_COINS, CoinOperator, named_coin
from hopswitch.quantum.states import DensityMatrix, named_state
from hopswitch.quantum.vacuum import VacuumExtendedChannel, extension_from_spec, uniform_extension
from hopswitch.utils.serialization import decode_matrix

logger = logging.getLogger(__name__)

NAMED_STATES = ("zero", "one", "plus", "minus", "mixed")

ModelT = TypeVar("ModelT", bound=BaseModel)


def locate(path: str) -> Path:
    """Return `path` itself if it exists, else its DATA_DIR counterpart if that exists."""
    candidate = Path(path)
    if candidate.exists() or candidate.is_absolute():
        return candidate
    bundled = Path(settings.DATA_DIR) / candidate
    return bundled if bundled.exists() else candidate


def load_model(path: str, model: Type[ModelT]) -> ModelT:
    """Read and validate a JSON spec file; missing files and bad JSON propagate as-is."""
    text = locate(path).read_text(encoding="utf-8")
    return model.model_validate_json(text)


def load_channel(path: str) -> KrausChannel:
    return channel_from_spec(load_model(path, ChannelSpec))


def load_extension(path: str) -> VacuumExtendedChannel:
    """Extension spec if the file has vacuum_amplitudes, else the uniform extension."""
    raw = json.loads(locate(path).read_text(encoding="utf-8"))
    if isinstance(raw, dict) and "vacuum_amplitudes" in raw:
        return extension_from_spec(ExtensionSpec.model_validate(raw))
    channel = channel_from_spec(ChannelSpec.model_validate(raw))
    logger.info("No vacuum amplitudes in %s – using the uniform extension", path)
    return uniform_extension(channel)


def resolve_extension_pair(cfg: ScenarioConfig) -> Tuple[VacuumExtendedChannel, VacuumExtendedChannel]:
    if not cfg.channel_e or not cfg.channel_d:
        raise ConfigurationError(f"scenario {cfg.scenario.value} needs both --channel-e and --channel-d")
    return load_extension(cfg.channel_e), load_extension(cfg.channel_d)


def resolve_coin(value: str) -> CoinOperator:
    if value.upper() in NAMED_COINS:
        return named_coin(value)
    if not locate(value).exists():
        raise ConfigurationError(f"coin {value!r} is neither a named coin {sorted(NAMED_COINS)} nor a file")
    spec = load_model(value, CoinSpec)
    return CoinOperator(matrix=decode_matrix(spec.matrix), name=spec.name or Path(value).stem)


def resolve_state(value: str, dim: int) -> DensityMatrix:
    if value.lower() in NAMED_STATES:
        return named_state(value, dim)
    if not locate(value).exists():
        raise ConfigurationError(f"state {value!r} is neither a named state {list(NAMED_STATES)} nor a file")
    state = DensityMatrix(matrix=decode_matrix(load_model(value, StateSpec).matrix))
    if state.dim != dim:
        raise ConfigurationError(f"state file {value} has dim {state.dim}, expected {dim}")
    return state
