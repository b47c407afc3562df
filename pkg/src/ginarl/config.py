from __future__ import annotations

from enum import Enum

import pydantic
from pydantic import BaseModel, ConfigDict, Field

from .gin import GinConfig
from .validators import ValidationError

MODULE = "cli-io"


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


class RunConfig(BaseModel):
    """Options shared by every CLI subcommand."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = Field(default=1, ge=0)
    coeff_bound: int = Field(default=1000, ge=2)
    max_trials: int = Field(default=8, ge=2)
    max_degree: int = Field(default=40, ge=1)
    output_format: OutputFormat = OutputFormat.TEXT
    wall_clock: bool = False

    @classmethod
    def build(cls, **values: object) -> "RunConfig":
        """Construct, turning pydantic errors into ValidationError."""
        try:
            return cls(**values)
        except pydantic.ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()
            )
            raise ValidationError(f"Invalid run configuration: {problems}", module=MODULE) from e

    def to_gin_config(self) -> GinConfig:
        return GinConfig(
            seed=self.seed,
            coeff_bound=self.coeff_bound,
            max_trials=self.max_trials,
            max_degree=self.max_degree,
        )
