__version__ = "0.1.0"

from .exceptions import (
    AffineSurfaceError,
    ConfigurationError,
    InputDomainError,
    SingularMapError,
    ModelDocumentError,
    DegenerateRicciError,
    MisuseError,
    NumericFailureError,
    InternalInconsistencyError,
)

__all__ = [
    "AffineSurfaceError",
    "ConfigurationError",
    "InputDomainError",
    "SingularMapError",
    "ModelDocumentError",
    "DegenerateRicciError",
    "MisuseError",
    "NumericFailureError",
    "InternalInconsistencyError",
]
