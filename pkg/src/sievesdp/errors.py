"""Exception types shared across the package.

Every exception carries a stable machine-readable ``code`` so that callers
(and the CLI) can react without parsing messages.  Problem validation is the
one place where we collect *all* violations before raising, since a malformed
problem file usually has several defects at once.
"""

from __future__ import annotations

from dataclasses import dataclass


class SieveSdpError(Exception):
    """Base class for all library errors."""

    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__doc__ or self.code)


@dataclass(frozen=True)
class Violation:
    """One defect found while validating an object (code + human detail)."""

    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class ProblemValidationError(SieveSdpError):
    """A sifting problem violates its invariants."""

    code = "invalid_problem"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    def has(self, code: str) -> bool:
        return any(v.code == code for v in self.violations)


# Violation codes used by validate_problem.
EMPTY_PART = "EmptyPart"
PARTS_DONT_COVER = "PartsDontCover"
KAPPA_OUT_OF_RANGE = "KappaOutOfRange"
DUPLICATE_PARTITION_NAME = "DuplicatePartitionName"


class UnknownPartition(SieveSdpError):
    """A partition name does not belong to the problem."""

    code = "UnknownPartition"


class IndexOutOfRange(SieveSdpError):
    """An element or matrix index is outside the universe."""

    code = "IndexOutOfRange"


class NotAnInterval(SieveSdpError):
    """Operation requires an interval universe 0..N-1."""

    code = "NotAnInterval"


class PartsNotSingleton(SieveSdpError):
    """Operation requires a partition whose parts are singletons."""

    code = "PartsNotSingleton"


class DimensionMismatch(SieveSdpError):
    """Matrix dimensions do not match the problem universe."""

    code = "DimensionMismatch"


class LimitExceeded(SieveSdpError):
    """A configured enumeration limit was exceeded."""

    code = "LimitExceeded"


class GuardExceeded(SieveSdpError):
    """Input is larger than the exhaustive-search guard allows."""

    code = "GuardExceeded"


class DimensionCapExceeded(SieveSdpError):
    """Universe exceeds the dense-matrix cap (see SIEVESDP_MAX_DIM)."""

    code = "DimensionCapExceeded"


class TooManyPartitions(SieveSdpError):
    """Subset enumeration over the partitions is out of reach."""

    code = "TooManyPartitions"


class MalformedCertificate(SieveSdpError):
    """Certificate bytes/JSON could not be parsed."""

    code = "MalformedCertificate"


class MalformedProblem(SieveSdpError):
    """Problem JSON could not be parsed."""

    code = "MalformedProblem"


class InfeasibleSpec(SieveSdpError):
    """Large-sieve spec has phi_kappa(p) <= 0 for a used partition."""

    code = "InfeasibleSpec"


class EmptyD(SieveSdpError):
    """Large-sieve subset collection D is empty or misses the empty set."""

    code = "EmptyD"


class NotDeltaSpaced(SieveSdpError):
    """Fractions are not pairwise delta-spaced mod 1."""

    code = "NotDeltaSpaced"


class InfeasibleDenominator(SieveSdpError):
    """Larger-sieve denominator sum_p log(p)/(p-kappa_p) - log N is not positive."""

    code = "InfeasibleDenominator"


class NotOrthogonal(SieveSdpError):
    """Universe is not in bijection with the product of the parts."""

    code = "NotOrthogonal"


class TwoPartDegenerate(SieveSdpError):
    """Orthogonal construction is degenerate when some partition has 2 parts."""

    code = "TwoPartDegenerate"


class NotTwoParts(SieveSdpError):
    """Two-part combination requires a partition with exactly two parts."""

    code = "NotTwoParts"


class SubcertificateInvalid(SieveSdpError):
    """A sub-certificate does not verify on its induced subproblem."""

    code = "SubcertificateInvalid"


class InvalidWeights(SieveSdpError):
    """Linear sieve weights fail the validity inequalities."""

    code = "InvalidWeights"


class NonInvertible(SieveSdpError):
    """Coefficient transform is degenerate (some partition has 2 parts)."""

    code = "NonInvertible"

    def __init__(self, names):
        self.names = tuple(names)
        super().__init__(
            "transform basis degenerates for two-part partitions: "
            + ", ".join(self.names)
        )


class SolverError(SieveSdpError):
    """Internal solver failure (emitted certificate did not verify)."""

    code = "SolverError"
