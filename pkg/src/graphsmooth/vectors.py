from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np


class Regime(enum.Enum):
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"


@dataclass(frozen=True, eq=False)
class SmoothingVector:
    """Vertex values together with the norm regime they were normalised for.

    ``values`` is a float array, or a tuple of :class:`fractions.Fraction`
    when the vector was built exactly (sparsest-cut vectors).
    """

    values: Sequence[Any]
    regime: Regime
    objective: Any

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array([float(v) for v in self.values])

    def is_feasible(self, tol: float = 1e-9) -> bool:
        x = self.as_array()
        if abs(x.sum()) > tol:
            return False
        if self.regime is Regime.L1:
            return abs(np.abs(x).sum() - 1.0) <= tol
        if self.regime is Regime.L2:
            return abs(np.linalg.norm(x) - 1.0) <= tol
        return abs(np.abs(x).max() - 1.0) <= tol
