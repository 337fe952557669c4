class AffineSurfaceError(Exception):
    pass


class ConfigurationError(AffineSurfaceError):
    pass


class InputDomainError(AffineSurfaceError):
    pass


class SingularMapError(InputDomainError):
    pass


class ModelDocumentError(InputDomainError):
    pass


class DegenerateRicciError(AffineSurfaceError):
    pass


class MisuseError(AffineSurfaceError):
    pass


class NumericFailureError(AffineSurfaceError):
    pass


class InternalInconsistencyError(NumericFailureError):
    pass
