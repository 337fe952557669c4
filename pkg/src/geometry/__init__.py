"""
Type A 아핀 곡면 기하 모듈

Christoffel 기호 값 타입, Ricci 텐서와 불변량, GL(2,ℝ) 작용을 제공합니다.
"""

from .christoffel import (
    CHRISTOFFEL_KEYS,
    CanonicalKind,
    CanonicalModel,
    ChristoffelSymbols,
    RicciDerivative,
    SymmetricBilinear,
    canonical_model,
    parse_canonical,
)
from .curvature import (
    Definiteness,
    RicciReport,
    invariants_sigma_psi,
    nabla_ricci,
    rank_signature,
    rho_check,
    ricci,
    ricci_pullback,
    ricci_report,
)
from .linear import LinearMap, normalize_generic, pushforward

__all__ = [
    "CHRISTOFFEL_KEYS",
    "CanonicalKind",
    "CanonicalModel",
    "ChristoffelSymbols",
    "RicciDerivative",
    "SymmetricBilinear",
    "canonical_model",
    "parse_canonical",
    "Definiteness",
    "RicciReport",
    "invariants_sigma_psi",
    "nabla_ricci",
    "rank_signature",
    "rho_check",
    "ricci",
    "ricci_pullback",
    "ricci_report",
    "LinearMap",
    "normalize_generic",
    "pushforward",
]
