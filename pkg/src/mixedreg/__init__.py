"""Desk-scale numerical lab for mixed boundary value problems.

Whitney extension/restriction operators on segment sets, P1 finite
elements for divergence-form operators with mixed boundary conditions
on slit domains, a contraction solver with certified rate, and the
experiment drivers built on top of them.
"""

__version__ = "0.1.0"

from .geometry import (
    PlanarScene,
    SegmentSet,
    RegularityReport,
    JonesReport,
    ahlfors_regularity,
    collapse_crack,
    dist_to_set,
    jones_check,
    relative_volume,
    load_scene,
    save_scene,
    slit_square_scene,
    unit_square_scene,
)
