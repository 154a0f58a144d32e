"""Exception types shared across the package."""


class HyperprymError(Exception):
    """Base class for all package errors."""


class BadDegree(HyperprymError):
    pass


class NotSquarefree(HyperprymError):
    pass


class NotPrime(HyperprymError):
    pass


class ExhaustedRetries(HyperprymError):
    pass


class InvalidClass(HyperprymError):
    pass


class BadCertificate(HyperprymError):
    pass


class SieveMismatch(HyperprymError):
    pass


class ZeroElement(HyperprymError):
    pass


class AmbiguousValuation(HyperprymError):
    """Valuation of a multi-term element is not decided by the term minimum."""


class NotDescending(HyperprymError):
    """Product of eigendifferentials whose indices do not cancel mod d."""


class ZeroSection(HyperprymError):
    pass


class PathTooClose(HyperprymError):
    """No admissible integration corridor at the required clearance."""


class RankDeficient(HyperprymError):
    pass


class PrecisionLoss(HyperprymError):
    pass


class RelationFailure(HyperprymError):
    """An exact integer identity that must hold failed."""


class NotIntegral(HyperprymError):
    """A map expected to stabilize an integral lattice does not."""


class Inconclusive(HyperprymError):
    pass


class SchemaError(HyperprymError):
    pass
