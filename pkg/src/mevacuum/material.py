"""Magnetoelectric material model.

The medium obeys D = eps E + chi H and B = mu H + chi^T E, with a
susceptibility tensor whose only nonzero entries are chi_xy and chi_yx.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

#: |chi| above which the first-order dispersion relations are flagged
LINEARIZATION_THRESHOLD = 0.1

PLUS_Z = +1
MINUS_Z = -1


class LinearizationWarning(UserWarning):
    """A susceptibility entry is too large for first-order dispersion."""


@dataclass(frozen=True)
class MESusceptibility:
    chi_xy: float = 0.0
    chi_yx: float = 0.0

    @property
    def delta_chi(self) -> float:
        return delta_chi(self)

    def tensor(self) -> np.ndarray:
        """The full 3x3 susceptibility matrix."""
        chi = np.zeros((3, 3))
        chi[0, 1] = self.chi_xy
        chi[1, 0] = self.chi_yx
        return chi

    def swapped(self) -> "MESusceptibility":
        return MESusceptibility(chi_xy=self.chi_yx, chi_yx=self.chi_xy)

    def linearization_warnings(self, threshold: float = LINEARIZATION_THRESHOLD) -> list[str]:
        out = []
        for name in ("chi_xy", "chi_yx"):
            value = getattr(self, name)
            if abs(value) > threshold:
                out.append(
                    f"|{name}| = {abs(value):.3g} exceeds {threshold:g}; "
                    "first-order dispersion relations are unreliable"
                )
        return out


@dataclass(frozen=True)
class MaterialParams:
    """Gaussian-unit constitutive parameters of the fluid.

    ``viscosity`` is the dynamic viscosity in poise. ``n0`` is always derived
    from ``epsilon * mu`` and never stored.
    """

    epsilon: float = 1.0
    mu: float = 1.0
    susceptibility: MESusceptibility = field(default_factory=MESusceptibility)
    viscosity: float = 0.01

    def __post_init__(self):
        if not self.epsilon >= 1.0:
            raise ValueError(f"epsilon must be >= 1, got {self.epsilon!r}")
        if not self.mu > 0.0:
            raise ValueError(f"mu must be > 0, got {self.mu!r}")
        if not self.viscosity > 0.0:
            raise ValueError(f"viscosity must be > 0, got {self.viscosity!r}")
        for message in self.susceptibility.linearization_warnings():
            warnings.warn(message, LinearizationWarning, stacklevel=3)

    @property
    def n0(self) -> float:
        return math.sqrt(self.epsilon * self.mu)

    @property
    def chi(self) -> MESusceptibility:
        return self.susceptibility

    def with_susceptibility(self, s: MESusceptibility) -> "MaterialParams":
        return MaterialParams(self.epsilon, self.mu, s, self.viscosity)


def delta_chi(s: MESusceptibility) -> float:
    """chi_xy - chi_yx; every anisotropic effect is proportional to it."""
    return s.chi_xy - s.chi_yx


def refractive_index(m: MaterialParams, direction: int, polarization: int) -> float:
    """Signed index of the mode travelling along ``direction`` (+1 or -1).

    n(+-, 1) = +-n0 + chi_xy and n(+-, 2) = +-n0 - chi_yx.
    """
    if polarization not in (1, 2):
        raise ValueError(f"polarization must be 1 or 2, got {polarization!r}")
    if direction not in (PLUS_Z, MINUS_Z):
        raise ValueError(f"direction must be +1 or -1, got {direction!r}")
    if not m.epsilon * m.mu > 0.0:
        raise ValueError("epsilon * mu must be positive")
    s = m.susceptibility
    shift = s.chi_xy if polarization == 1 else -s.chi_yx
    return direction * m.n0 + shift


def induced_susceptibility(alpha: float, E_applied: float, B_applied: float) -> MESusceptibility:
    """Linear induction model chi_xy = -chi_yx = alpha * E * B.

    The coupling constant is a user input; the model is antisymmetric by
    construction so that delta_chi = 2 alpha E B.
    """
    for name, value in (("alpha", alpha), ("E_applied", E_applied), ("B_applied", B_applied)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    chi = alpha * E_applied * B_applied
    return MESusceptibility(chi_xy=chi, chi_yx=-chi)
