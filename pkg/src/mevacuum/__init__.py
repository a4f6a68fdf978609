"""Semi-classical vacuum momentum transfer to magnetoelectric media.

Gaussian units throughout; SI only at the CLI boundary.
"""
from .ledger import Geometry, first_law_audit, net_force, surface_force
from .macro import flow_rate, poiseuille_speed, radiometer_spin, transient_impulse, tube_flow
from .material import MaterialParams, MESusceptibility, delta_chi, induced_susceptibility, refractive_index
from .modes import PlaneWaveMode, averaged_momentum_density, net_mode_stress, time_average
from .vacuum import CutoffSpec, required_delta_chi, vacuum_stress

__all__ = [
    "CutoffSpec",
    "Geometry",
    "MESusceptibility",
    "MaterialParams",
    "PlaneWaveMode",
    "averaged_momentum_density",
    "delta_chi",
    "first_law_audit",
    "flow_rate",
    "induced_susceptibility",
    "net_force",
    "net_mode_stress",
    "poiseuille_speed",
    "radiometer_spin",
    "refractive_index",
    "required_delta_chi",
    "surface_force",
    "time_average",
    "transient_impulse",
    "tube_flow",
    "vacuum_stress",
]
