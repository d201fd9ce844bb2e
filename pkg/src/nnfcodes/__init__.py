"""Weight and distance distributions of binary (nonlinear) codes.

Codes are turned into their defining polynomials in numerical normal form;
integer weight and distance polynomials are then evaluated on the whole
hypercube with a fast Moebius (zeta) transform.
"""

__version__ = "0.1.0"

from .boolfn import (
    AnfPoly,
    NnfPoly,
    OpCounter,
    TruthTable,
    anf_from_nnf,
    anf_from_truth,
    eval_nnf_hypercube,
    nnf_coefficient_direct,
    nnf_from_anf,
    nnf_from_truth,
    nnf_of_linear,
    poly_add,
    poly_mul_squarefree,
    shift_variables,
    truth_from_anf,
)
from .codes import (
    BinaryCode,
    DefiningPolynomials,
    GeneratorMatrix,
    code_from_generator,
    code_from_polynomials,
    defining_polynomials,
    load_code,
    pad_to_power_of_two,
    partition_power_subcodes,
)
from .distance import DistanceDistribution, distance_distribution, distance_polynomial, min_distance
from .errors import *  # noqa: F401,F403
from .weight import WeightDistribution, min_weight, weight_distribution, weight_polynomial
