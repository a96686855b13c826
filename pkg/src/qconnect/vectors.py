"""Coefficient vectors I_m(n) / C_m(n) with provenance metadata."""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import GaussScalar, ONE, ZERO

INVERSION = "inversion"
CONNECTION = "connection"


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients indexed m = 0..n, tagged with how they were produced."""

    values: tuple[GaussScalar, ...]
    n: int
    kind: str
    provenance: str

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError(
                f"coefficient vector for degree {self.n} needs {self.n + 1} values, "
                f"got {len(self.values)}"
            )

    def __getitem__(self, m: int) -> GaussScalar:
        return self.values[m]

    def __iter__(self):
        return iter(self.values)

    def is_delta(self) -> bool:
        """True when the vector is the Kronecker delta at m = n."""
        return all(not v for v in self.values[:-1]) and self.values[-1] == ONE


def kronecker_delta(n: int, kind: str, provenance: str) -> CoefficientVector:
    return CoefficientVector(tuple([ZERO] * n + [ONE]), n, kind, provenance)
