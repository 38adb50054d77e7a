"""Exact-arithmetic measures on partitions and plane partitions.

Everything is computed over arbitrary-precision rationals; the verification
sweeps compare canonical factored forms, so every check is exact.
"""

from .forms import FactoredForm, LinearForm, PoleAtPoint, canonical_linear_form, swap_product
from .laurent import AxesMismatch, ConstantTermPresent, LaurentPoly
from .partitions import (
    INF,
    BadCornerIndex,
    CellNotInPartition,
    CornerData,
    Partition,
    PlanePartition,
    arm,
    classical_hook,
    conjugate,
    contains,
    corner_data,
    enumerate_partitions,
    enumerate_plane_partitions,
    enumerate_plane_partitions_up_to,
    hook_lower,
    hook_upper,
    leg,
    remove_corner,
    removable_corners,
)
from .series import BadConstantTerm, PowerSeries, macmahon_series
from .edge import (
    EdgeCharacter,
    RatioFactor,
    cell_poly,
    cell_poly_inverse,
    corner_poly,
    corner_poly_from_corners,
    edge_f_poly,
    edge_growth_factors,
    edge_growth_ratio,
    edge_measure,
    jack_growth_factors,
    jack_growth_ratio,
    jack_measure,
    swap_poly,
    verify_corner_poly,
    verify_growth_ratios,
    verify_measures_match,
    verify_measures_signed,
    verify_swap_quotient,
)
from .vertex import (
    VertexCharacter,
    ZReport,
    box_poly,
    macmahon_power_at_point,
    vertex_f_poly,
    vertex_measure,
    verify_partition_function,
    weight_series_at_point,
)
from .reports import VerificationReport

__version__ = "0.1.0"
