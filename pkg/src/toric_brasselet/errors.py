"""Exception and warning types.

Every error carries a stable ``code`` string so reports and the CLI can name
the failure without depending on class names.
"""


class ToricError(ValueError):
    code = "ToricError"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class ZeroVector(ToricError):
    code = "ZeroVector"


class EmptyGenerators(ToricError):
    code = "EmptyGenerators"


class NotInSpan(ToricError):
    code = "NotInSpan"


class NotInLattice(ToricError):
    code = "NotInLattice"


class NotStronglyConvex(ToricError):
    code = "NotStronglyConvex"


class SupportOutsideCone(ToricError):
    code = "SupportOutsideCone"


class UnboundedBelow(ToricError):
    code = "UnboundedBelow"


class DimensionMismatch(ToricError):
    code = "DimensionMismatch"


class FaceMissesNewtonPolygon(ToricError):
    code = "FaceMissesNewtonPolygon"


class OriginInSupport(ToricError):
    code = "OriginInSupport"


class EulerTableIncomplete(ToricError):
    code = "EulerTableIncomplete"


class GenericityFailure(ToricError):
    code = "GenericityFailure"


class NotPrepolar(ToricError):
    code = "NotPrepolar"


class CommonComponent(ToricError):
    code = "CommonComponent"


class ConditionViolated(ToricError):
    code = "ConditionViolated"


class NotConstant(ToricError):
    code = "NotConstant"


class NotCoprime(ToricError):
    code = "NotCoprime"


class RangeError(ToricError):
    code = "RangeError"


class ParseError(ToricError):
    code = "ParseError"

    def __init__(self, message: str = "", position: int | None = None, **details):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message, position=position, **details)
        self.position = position


class UnknownVariable(ParseError):
    code = "UnknownVariable"


class NegativeExponent(ParseError):
    code = "NegativeExponent"


class ZeroPolynomial(ToricError):
    code = "ZeroPolynomial"


# Hypothesis failures map to CLI exit code 2 rather than 1.
HYPOTHESIS_FAILURES = (NotPrepolar, ConditionViolated, CommonComponent, NotConstant)


class ToricWarning(UserWarning):
    pass


class NoAdmissibleComposition(ToricWarning):
    """Raised as a warning: the composition sum defining K is empty."""


class FaceDimTooSmall(ToricWarning):
    pass


class AssumptionViolation(ToricWarning):
    pass
