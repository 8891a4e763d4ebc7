"""Run configuration entity."""
from dataclasses import dataclass
from typing import Literal


OutputFormat = Literal["text", "json"]


@dataclass
class RunConfig:
    """Bundle dimensions, generator caps and self-check settings."""

    # Bundle
    n: int = 1
    m: int = 1

    # Seeded generator
    seed: int = 1
    cases: int = 20
    max_order: int = 3
    max_degree: int = 3
    max_terms: int = 3

    # Output
    format: OutputFormat = "text"

    # Self-check parallelism (does not affect results)
    workers: int = 1

    def __post_init__(self):
        """Validate configuration."""
        if self.n < 1 or self.m < 1:
            raise ValueError("Bundle dimensions n and m must be >= 1")

        if not 0 <= self.seed < 2**64:
            raise ValueError("Seed must be a 64-bit unsigned integer")

        if self.cases < 1:
            raise ValueError("Cases must be >= 1")

        if min(self.max_order, self.max_degree, self.max_terms) < 0:
            raise ValueError("Generator caps must be >= 0")

        if self.format not in ("text", "json"):
            raise ValueError(f"Unknown format: {self.format}")

        if self.workers < 1:
            raise ValueError("Workers must be >= 1")

    @staticmethod
    def default() -> "RunConfig":
        """Create default configuration."""
        return RunConfig(
            n=1,
            m=1,
            seed=1,
            cases=20,
            max_order=3,
            max_degree=3,
            max_terms=3,
            format="text",
            workers=1
        )
