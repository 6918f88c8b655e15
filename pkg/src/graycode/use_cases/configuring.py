"""Module for defining configuration."""

import os
from pathlib import Path

from application_settings import ConfigBase, ConfigSectionBase
from pydantic.dataclasses import dataclass

_ORACLE_CAP_ENV_VAR = "GRAYCODE_ORACLE_CAP"
_DEBUG_CHECKS_ENV_VAR = "GRAYCODE_DEBUG_CHECKS"


@dataclass(frozen=True)
class OracleConfig(ConfigSectionBase):
    """Config for the brute-force oracles"""

    bfs_cap: int = 14
    """Maximum word length for breadth-first distance computations; defaults to 14"""

    avoiders_cap: int = 10
    """Maximum size for enumerating pattern avoiders; defaults to 10"""


@dataclass(frozen=True)
class GenerationConfig(ConfigSectionBase):
    """Config for generating listings"""

    max_n_without_force: int = 28
    """Largest word length the command line generates without --force; defaults to 28"""

    debug_checks: bool = False
    """Whether or not to verify the induction properties at every level"""


@dataclass(frozen=True)
class GraycodeConfig(ConfigBase):
    """Config for graycode"""

    oracle: OracleConfig = OracleConfig()
    generation: GenerationConfig = GenerationConfig()

    @classmethod
    def default_filepath(cls) -> Path | None:
        """
        Return the fully qualified default path for the config/settingsfile.
        We do not use a settings file; the defaults and the environment suffice.
        """
        return None


def get_oracle_cap() -> int:
    """Get the word length cap of the distance oracle.

    The environment variable GRAYCODE_ORACLE_CAP takes precedence over the config.
    """
    if (cap_str := os.environ.get(_ORACLE_CAP_ENV_VAR, None)) is None:
        return GraycodeConfig.get().oracle.bfs_cap
    try:
        cap = int(cap_str)
    except ValueError as ex:
        raise ValueError(
            f"{_ORACLE_CAP_ENV_VAR} should be a positive integer, got {cap_str!r}"
        ) from ex
    if cap < 1:
        raise ValueError(
            f"{_ORACLE_CAP_ENV_VAR} should be a positive integer, got {cap}"
        )
    return cap


def get_avoiders_cap() -> int:
    """Get the size cap of the avoider enumeration."""
    return GraycodeConfig.get().oracle.avoiders_cap


def get_debug_checks() -> bool:
    """Return True if every induction level should be verified.

    The environment variable GRAYCODE_DEBUG_CHECKS switches the checks on.
    """
    if flag := os.environ.get(_DEBUG_CHECKS_ENV_VAR, None):
        return flag.strip().lower() in ("1", "true", "yes")
    return GraycodeConfig.get().generation.debug_checks


def get_max_n_without_force() -> int:
    """Get the largest word length that may be generated without forcing."""
    return GraycodeConfig.get().generation.max_n_without_force
