"""
측지 완비성 판정 모듈

E-다항식, 로그 측지선 해 탐색, Ricci 계수 기반 완비성 분류기를 제공합니다.
"""

from .polynomials import (
    EPolynomials,
    RealRoot,
    RootSet,
    e_evaluate,
    e_polynomials,
    equation_residual,
    real_roots,
    resultant,
)
from .log_geodesics import LogGeodesicSolution, canonical_witnesses, log_geodesic_solutions
from .classifier import (
    Branch,
    CompletenessVerdict,
    SymmetricModel,
    classify,
    identify_symmetric_model,
    is_linearly_isomorphic_rank2,
    recover_delta,
)

__all__ = [
    "EPolynomials",
    "RealRoot",
    "RootSet",
    "e_evaluate",
    "e_polynomials",
    "equation_residual",
    "real_roots",
    "resultant",
    "LogGeodesicSolution",
    "canonical_witnesses",
    "log_geodesic_solutions",
    "Branch",
    "CompletenessVerdict",
    "SymmetricModel",
    "classify",
    "identify_symmetric_model",
    "is_linearly_isomorphic_rank2",
    "recover_delta",
]
