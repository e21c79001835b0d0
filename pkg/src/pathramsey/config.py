"""Run-time knobs shared by the pipelines and the command line."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction

SEED_ENV = "PATHRAMSEY_SEED"


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class Config:
    """``strict`` turns asymptotic hypotheses into hard errors; otherwise they are warnings."""

    seed: int = 0
    trials: int = 200
    exact_limit: int = 20
    restarts: int = 2_000
    strict: bool = False
    eps: Fraction = Fraction(1, 100)

    def __post_init__(self) -> None:
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.trials < 1 or self.exact_limit < 1 or self.restarts < 0:
            raise ValueError("trials and exact_limit must be positive, restarts non-negative")

    def with_(self, **kw) -> Config:
        return replace(self, **kw)
