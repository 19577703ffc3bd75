"""Campbell-Hausdorff machinery, curve-family nondegeneracy conditions, and
nilpotent group models with closed-form right-logarithmic derivatives."""

from oscillab.brackets.liealg import LieSeries, FreeNilpotent, bch
from oscillab.brackets.curves import CurveFamilySpec, xhat_fields, check_conditions
from oscillab.brackets.groups import (
    GroupModel,
    GRCurve,
    group_g_r,
    dr_matrix,
    mizohata_dr,
    heisenberg_model,
    mizohata_model,
    abelian_model,
)

__all__ = [
    "LieSeries",
    "FreeNilpotent",
    "bch",
    "CurveFamilySpec",
    "xhat_fields",
    "check_conditions",
    "GroupModel",
    "GRCurve",
    "group_g_r",
    "dr_matrix",
    "mizohata_dr",
    "heisenberg_model",
    "mizohata_model",
    "abelian_model",
]
