"""Boundary-complete force accounting for an ME segment in a tube.

Region 1 is the field-exposed segment, region 2 the rest of the tube.
Surface 12 is the segment exit (1 -> 2 for right-moving modes), surface 21
the entry. At steady state both bulk regions carry zero average force
density; each surface contributes a vacuum stress T0 spread as a constant
gradient over the tube length, +T0/L at 12 and -T0/L at 21.

The *naive* ledger keeps only f1, f2 and f12 and predicts a net T0/L. The
*full* ledger adds f21 and the net cancels exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .material import MINUS_Z, PLUS_Z, MaterialParams, MESusceptibility
from .modes import averaged_momentum_density

OPEN_TUBE = "open-tube"
CLOSED_LOOP = "closed-loop"
NAIVE = "naive"
FULL = "full"


class UnsteadyFieldsError(ValueError):
    """Bulk forces were requested for time-dependent susceptibility."""


class ProvenanceError(ValueError):
    """A ledger and a flow result were built from different vacuum stresses."""


@dataclass(frozen=True)
class Geometry:
    a: float
    L: float
    me_segment: tuple[float, float]
    topology: str = CLOSED_LOOP

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"tube radius must be > 0, got {self.a!r}")
        if not self.L > 0:
            raise ValueError(f"tube length must be > 0, got {self.L!r}")
        start, end = self.me_segment
        if not 0.0 <= start <= end <= self.L:
            raise ValueError(
                f"me_segment {self.me_segment!r} must satisfy 0 <= start <= end <= L={self.L!r}"
            )
        if self.topology not in (OPEN_TUBE, CLOSED_LOOP):
            raise ValueError(f"unknown topology {self.topology!r}")

    @property
    def segment_length(self) -> float:
        return self.me_segment[1] - self.me_segment[0]


@dataclass(frozen=True)
class LedgerEntry:
    label: str
    force_density: float
    provenance: str


@dataclass(frozen=True)
class ForceLedger:
    entries: tuple[LedgerEntry, ...]
    net: float
    mode: str
    T0: float
    geometry: Geometry
    warnings: tuple[str, ...] = field(default=())

    def entry(self, label: str) -> LedgerEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)


@dataclass(frozen=True)
class AuditReport:
    net_force_density: float
    implied_power: float
    fields_steady: bool
    verdict: str


def bulk_region_force(region: int, steady: bool = True) -> float:
    """Average EM force density inside a bulk region; zero when steady."""
    if region not in (1, 2):
        raise ValueError(f"region must be 1 or 2, got {region!r}")
    if not steady:
        raise UnsteadyFieldsError(
            "bulk force for time-dependent susceptibility is not a steady quantity; "
            "use mevacuum.macro.transient_impulse"
        )
    return 0.0


def surface_force(T0: float, L: float, surface: str) -> float:
    """Surface contribution T0/L (surface '12') or -T0/L (surface '21')."""
    if not L > 0:
        raise ValueError(f"L must be > 0, got {L!r}")
    surface = str(surface)
    if surface == "12":
        return T0 / L
    if surface == "21":
        return -(T0 / L)
    raise ValueError(f"surface must be '12' or '21', got {surface!r}")


def stress_profile(geom: Geometry, T0: float, z: float, surface: str = "12") -> float:
    """Vacuum stress along the tube downstream of one surface.

    Falls linearly from T0 at the surface to zero after one tube length,
    so its gradient is the constant -T0/L whose magnitude is the surface term.
    """
    origin = geom.me_segment[1] if surface == "12" else geom.me_segment[0]
    s = (z - origin) % geom.L if geom.topology == CLOSED_LOOP else z - origin
    if s < 0 or s > geom.L:
        return 0.0
    sign = 1.0 if surface == "12" else -1.0
    return sign * T0 * (1.0 - s / geom.L)


def net_force(geom: Geometry, T0: float, mode: str = FULL) -> ForceLedger:
    """Build the naive or full force ledger for one geometry."""
    if mode not in (NAIVE, FULL):
        raise ValueError(f"mode must be 'naive' or 'full', got {mode!r}")
    warnings = []
    entries = [
        LedgerEntry("f1", bulk_region_force(1), "bulk"),
        LedgerEntry("f2", bulk_region_force(2), "bulk"),
    ]
    degenerate = geom.segment_length == 0.0
    if degenerate:
        warnings.append("ME segment has zero length; surfaces 12 and 21 coincide")
        entries.append(LedgerEntry("f12", surface_force(T0, geom.L, "12"), "surface"))
        entries.append(LedgerEntry("f21", surface_force(T0, geom.L, "21"), "surface"))
    else:
        entries.append(LedgerEntry("f12", surface_force(T0, geom.L, "12"), "surface"))
        if mode == FULL:
            entries.append(LedgerEntry("f21", surface_force(T0, geom.L, "21"), "surface"))
    net = 0.0
    for e in entries:
        net += e.force_density
    return ForceLedger(
        entries=tuple(entries), net=net, mode=mode, T0=T0, geometry=geom, warnings=tuple(warnings)
    )


def first_law_audit(ledger: ForceLedger, flow, fields_steady: bool = True) -> AuditReport:
    """Flag steady configurations that dissipate power with no energy input.

    ``flow`` is a :class:`mevacuum.macro.FlowResult` computed from the same T0.
    """
    if not math.isclose(ledger.T0, flow.T0, rel_tol=1e-12, abs_tol=0.0):
        raise ProvenanceError(
            f"ledger T0={ledger.T0!r} and flow T0={flow.T0!r} come from different vacuum stresses"
        )
    implied_power = flow.P if ledger.net != 0.0 else 0.0
    violation = bool(fields_steady) and implied_power > 0.0
    return AuditReport(
        net_force_density=ledger.net,
        implied_power=implied_power,
        fields_steady=bool(fields_steady),
        verdict="first-law-violation" if violation else "consistent",
    )


def surface_momentum_deltas(omega: float, E0k: float, m: MaterialParams, direction: int = PLUS_Z):
    """Change in mode-set momentum density crossing each surface of the segment.

    A mode entering region 1 picks up the ME momentum density and gives it
    back on exit. Right-moving modes enter through 21 and leave through 12;
    left-moving modes the reverse. Returns ``{"enter": (surface, dp),
    "exit": (surface, dp)}``.
    """
    outside = m.with_susceptibility(MESusceptibility())
    g_in = averaged_momentum_density(omega, E0k, m).g_avg
    g_out = averaged_momentum_density(omega, E0k, outside).g_avg
    if direction == PLUS_Z:
        return {"enter": ("21", g_in - g_out), "exit": ("12", g_out - g_in)}
    if direction == MINUS_Z:
        return {"enter": ("12", g_in - g_out), "exit": ("21", g_out - g_in)}
    raise ValueError(f"direction must be +1 or -1, got {direction!r}")
