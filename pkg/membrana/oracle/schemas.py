### Results of the verification integrators

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class OdeSamples:
    """Solucion muestreada en una malla uniforme y su error estimado por medio paso."""
    nodes: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray
    error_estimate: float

    def at_end(self):
        return float(self.values[-1]), float(self.derivatives[-1])
