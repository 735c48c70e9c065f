"""1D semi-Lagrangian advection with convexity-preserving interpolation.

Carries nodal values and first derivatives, interpolating each upwind cell
with a Hermite cubic, a convexity-preserving rational form, or their blend
with the smallest weight that still rules out spurious oscillation.
"""

from .core import active_backend
from .diagnostics import (
    DiagnosticsRecord,
    convexity_indicator,
    count_sign_regions,
    field_extrema,
    l1_error,
)
from .experiments import (
    ExperimentConfig,
    ExperimentKind,
    ExperimentResult,
    ExperimentSetup,
    init_extreme,
    init_sine,
    init_square,
    init_triangle,
    run_experiment,
    smooth_3point,
)
from .kernels import (
    CIP,
    HYBRID,
    MODIFIED_RATIONAL,
    RATIONAL,
    CellClass,
    CellStencil,
    InterpResult,
    MixingState,
    SchemeKind,
    cell_from_nodes,
    classify_cell,
    eval_cubic,
    eval_hybrid,
    eval_rational,
    feasibility_margin,
    hybrid_scheme,
    hybrid_second_derivative,
    interpolate,
    optimal_alpha,
)
from .solver import (
    BoundaryKind,
    GridField,
    StepParams,
    VelocityField,
    local_courant,
    max_cfl,
    run,
    step,
    velocity_gradient,
)
from .svgplot import render_svg

__version__ = "0.1.0"
