from .hypersphere import Hypersphere, new_hypersphere, t_from_radius
from .spaceform import FrameVector, SpaceForm
from .tension import (
    TauHatTerms,
    TensionLadder,
    energy4_density,
    es4_tension_coefficient,
    solve_proper_radius,
    tau4_closed_form,
    tau4_coefficient,
    tau_hat4_terms,
    tension_ladder,
)

__all__ = [
    "FrameVector",
    "Hypersphere",
    "SpaceForm",
    "TauHatTerms",
    "TensionLadder",
    "energy4_density",
    "es4_tension_coefficient",
    "new_hypersphere",
    "solve_proper_radius",
    "t_from_radius",
    "tau4_closed_form",
    "tau4_coefficient",
    "tau_hat4_terms",
    "tension_ladder",
]
