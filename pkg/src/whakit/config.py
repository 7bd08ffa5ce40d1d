"""Numerical policy: tolerances and the deterministic RNG seed.

All equality in this package is approximate equality of complex arrays:
``x == y`` means ``norm(x - y) <= abs_tol + rel_tol * max(norm(x), norm(y))``
with the Frobenius norm.  A single :class:`Tolerance` instance is threaded
through every check; ``DEFAULT_TOL`` is the package-wide default
(1e-9 absolute, 1e-9 relative).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Deterministic seed used everywhere randomness is needed ("WHA1" as ASCII).
DEFAULT_SEED = 0x57484131

#: Residual bound for rounding real numbers to integers (block sizes,
#: inclusion multiplicities, fusion multiplicities).
INT_ROUNDING_TOL = 1e-6


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair used for all approximate comparisons."""

    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def bound(self, *scales) -> float:
        """Comparison threshold for quantities of the given magnitudes."""
        scale = max((float(s) for s in scales), default=0.0)
        return self.abs_tol + self.rel_tol * scale

    def close(self, x, y) -> bool:
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        if x.shape != y.shape:
            return False
        return float(np.linalg.norm(x - y)) <= self.bound(np.linalg.norm(x), np.linalg.norm(y))

    def residual(self, x, y) -> float:
        """Frobenius-norm distance between two arrays."""
        return float(np.linalg.norm(np.asarray(x, dtype=complex) - np.asarray(y, dtype=complex)))

    def is_zero(self, x, scale: float = 1.0) -> bool:
        return float(np.linalg.norm(np.asarray(x, dtype=complex))) <= self.bound(scale)

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.abs_tol * factor, self.rel_tol * factor)


#: Package-wide default tolerance.
DEFAULT_TOL = Tolerance()


def get_tol(tol: Tolerance | None) -> Tolerance:
    """Resolve an optional per-call tolerance to the default."""
    return DEFAULT_TOL if tol is None else tol


def rng(seed: int | None = None) -> np.random.Generator:
    """Fresh deterministic generator (results never depend on call order)."""
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def round_to_int(x: float, what: str = "value", tol: float = INT_ROUNDING_TOL) -> int:
    """Round to the nearest integer, raising if the residual exceeds ``tol``."""
    from .errors import NonIntegerMultiplicity

    n = int(round(float(np.real(x))))
    resid = abs(complex(x) - n)
    if resid > tol:
        raise NonIntegerMultiplicity(f"{what} = {x!r} is not an integer (residual {resid:.3e})")
    return n
