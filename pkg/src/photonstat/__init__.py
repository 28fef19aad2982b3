"""Photon statistics and phase-space numerics for multimode light.

The package covers three families of states and the machinery connecting
them:

* mixed Gaussian states of N modes (``gaussian``): photon-number
  distributions through a multivariable Hermite-polynomial engine
  (``multihermite``), Husimi Q-functions and the inverse Q -> Wigner map;
* even/odd coherent superpositions, a.k.a. Schrodinger cat states
  (``cat_states``): exact distributions, covariances, Q and Wigner
  functions;
* grid-based integral transforms between density matrix, Wigner and Q
  representations plus replacement evolution under linear symplectic maps
  (``phase_space``), fed by a parametric-oscillator solver (``oscillator``).

``fock_oracle`` is a deliberately independent truncated Fock-space
implementation used by the test suite to cross-check everything else.
"""

__version__ = "0.1.0"

from . import cat_states, cli, fock_oracle, gaussian, multihermite, oscillator, phase_space
from .errors import (
    ConditioningError,
    ConfigError,
    DegenerateOverlapError,
    GridSupportError,
    ImaginaryResidueError,
    NumericalHealthError,
    UncertaintyError,
    WronskianDriftError,
)

__all__ = [
    "__version__",
    "cat_states",
    "cli",
    "fock_oracle",
    "gaussian",
    "multihermite",
    "oscillator",
    "phase_space",
    "NumericalHealthError",
    "ImaginaryResidueError",
    "UncertaintyError",
    "WronskianDriftError",
    "ConditioningError",
    "DegenerateOverlapError",
    "GridSupportError",
    "ConfigError",
]
