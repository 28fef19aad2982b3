"""Small numerical hygiene helpers used by several modules."""

import numpy as np

from .errors import ImaginaryResidueError

# Default residue policy: absolute floor plus a relative band.  Quantities
# checked here (probabilities, quasi-probability values) are O(1).
RESIDUE_ATOL = 1e-10
RESIDUE_RTOL = 1e-8

SYMMETRY_TOL = 1e-12


def coerce_real(value, what, atol=RESIDUE_ATOL, rtol=RESIDUE_RTOL, clip=False):
    """Strip the imaginary part of ``value`` after checking it is residue-sized.

    Raises ``ImaginaryResidueError`` when ``|Im| > atol + rtol * |Re|``.
    With ``clip=True`` small negative real parts are clipped to zero.
    """
    value = complex(value)
    if abs(value.imag) > atol + rtol * abs(value.real):
        raise ImaginaryResidueError(
            f"{what}: imaginary residue {value.imag:.3e} on real part {value.real:.3e}"
        )
    real = value.real
    if clip and real < 0.0:
        real = 0.0
    return real


def coerce_real_array(values, what, atol=RESIDUE_ATOL, rtol=RESIDUE_RTOL, clip=False):
    """Array version of :func:`coerce_real`."""
    values = np.asarray(values)
    if np.iscomplexobj(values):
        bad = np.abs(values.imag) > atol + rtol * np.abs(values.real)
        if np.any(bad):
            worst = values[bad].flat[np.argmax(np.abs(values[bad].imag))]
            raise ImaginaryResidueError(
                f"{what}: imaginary residue up to {worst.imag:.3e} (real part {worst.real:.3e})"
            )
        values = values.real
    out = np.array(values, dtype=float)
    if clip:
        np.clip(out, 0.0, None, out=out)
    return out


def require_symmetric(mat, what, tol=SYMMETRY_TOL):
    """Check ``mat`` is symmetric within ``tol`` (relative) and return (A+A^T)/2.

    Symmetrizing removes accumulated round-off so downstream code can rely
    on exact symmetry.
    """
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"{what}: expected a square matrix, got shape {mat.shape}")
    scale = max(1.0, float(np.max(np.abs(mat))) if mat.size else 1.0)
    defect = float(np.max(np.abs(mat - mat.T))) if mat.size else 0.0
    if defect > tol * scale:
        raise ValueError(f"{what}: symmetry defect {defect:.3e} exceeds {tol:.1e} * {scale:.3e}")
    return 0.5 * (mat + mat.T)


def readonly(arr):
    """Return a non-writeable copy; used to keep dataclass fields immutable."""
    out = np.array(arr)
    out.setflags(write=False)
    return out
