"""Matrix interpolation on the unit disk by functions with positive real part.

Given distinct nodes z_k in the open unit disk and N x N target matrices
C_k, the package decides whether an analytic matrix function T with
T(z) + T(z)* >= 0 and T(z_k) = C_k exists, whether it is unique, and
evaluates any member of the solution family through an operator model:
the block Pick matrix is realized as a Gram matrix, an isometry is built
on the realization, and solutions correspond to contraction-valued
parameters on its defect subspaces.

Quick start::

    from pickcara import CaratheodoryInterpolator

    est = CaratheodoryInterpolator().fit([0.0, 0.5], [1.0, 3.0])
    est.determinate_        # True: this data forces (1 + z) / (1 - z)
    est.predict([0.25])     # array([[[1.6666...]]])

The same pipeline is scriptable through the ``pickcara`` command line
tool (check / solve / generate / verify) over JSON files.
"""

from .estimator import CaratheodoryInterpolator
from .gram import GramModel, factor_gram, inner
from .herglotz import (
    AtomicHerglotzMeasure,
    eval_herglotz,
    make_problem,
    random_measure,
)
from .isometry import (
    DeterminacyDecision,
    IsometryModel,
    ModelConsistencyError,
    build_isometry,
    determinacy_by_defect,
    determinacy_by_linear_systems,
)
from .mobius import MobiusTransform, normalize_problem, pullback_evaluate
from .pick import (
    InfeasibleDataError,
    InterpolationProblem,
    PickMatrix,
    PsdReport,
    build_pick_matrix,
    extend_problem,
    kernel_block,
    validate_psd,
)
from .resolvent import (
    ContractionParameter,
    SolutionEvaluator,
    VerificationReport,
    evaluate_solution,
    extended_operator,
    make_contraction_parameter,
    make_evaluator,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "CaratheodoryInterpolator",
    "GramModel",
    "factor_gram",
    "inner",
    "AtomicHerglotzMeasure",
    "eval_herglotz",
    "make_problem",
    "random_measure",
    "DeterminacyDecision",
    "IsometryModel",
    "ModelConsistencyError",
    "build_isometry",
    "determinacy_by_defect",
    "determinacy_by_linear_systems",
    "MobiusTransform",
    "normalize_problem",
    "pullback_evaluate",
    "InfeasibleDataError",
    "InterpolationProblem",
    "PickMatrix",
    "PsdReport",
    "build_pick_matrix",
    "extend_problem",
    "kernel_block",
    "validate_psd",
    "ContractionParameter",
    "SolutionEvaluator",
    "VerificationReport",
    "evaluate_solution",
    "extended_operator",
    "make_contraction_parameter",
    "make_evaluator",
    "verify_solution",
    "__version__",
]
