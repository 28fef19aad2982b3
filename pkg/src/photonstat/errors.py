"""Exception types shared across the package.

``NumericalHealthError`` and its subclasses signal that a computation
produced numerically untrustworthy output (probabilities with a large
imaginary residue, an integrator losing its conserved invariant, ...).
They derive from ``RuntimeError`` rather than ``ValueError`` because the
caller's arguments were well-formed; it is the arithmetic that went bad.
The CLI maps them to exit code 3.
"""


class NumericalHealthError(RuntimeError):
    """A result failed one of the package's numerical-health checks."""


class ImaginaryResidueError(NumericalHealthError):
    """A quantity that must be real carries a large imaginary part."""


class UncertaintyError(NumericalHealthError):
    """A dispersion matrix violates the generalized uncertainty relation."""


class WronskianDriftError(NumericalHealthError):
    """An oscillator trajectory drifted off its conserved Wronskian."""


class ConditioningError(NumericalHealthError):
    """An ill-conditioned reconstruction exceeded its divergence guard."""


class DegenerateOverlapError(NumericalHealthError):
    """The combined matrix of an overlap result is singular."""


class GridSupportError(NumericalHealthError):
    """Too much mass sits outside (or at the edge of) a sampling grid."""


class ConfigError(ValueError):
    """A CLI job configuration failed schema validation.

    ``errors`` holds one ``{"path": <json pointer>, "message": ...}`` entry
    per violation so callers can report all of them at once.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(f"{e['path']}: {e['message']}" for e in self.errors))
