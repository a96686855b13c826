"""Exception types shared across the package."""

from __future__ import annotations


class QConnectError(Exception):
    """Base class for all library errors."""


class ScalarParseError(QConnectError):
    """A scalar literal failed to parse; carries the offending position."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse scalar {text!r} at position {position}: {reason}")


class ContextDegreeExceeded(QConnectError):
    """A degree beyond the context's max_degree was requested."""


class InvalidContext(QConnectError):
    """The base q is unusable (zero, one, or a root of unity in range)."""


class DenominatorVanishes(QConnectError):
    """A denominator q-Pochhammer hit zero before the series terminated."""

    def __init__(self, k: int, which: str):
        self.k = k
        self.which = which
        super().__init__(f"denominator factor vanished at term k={k}: {which}")


class VanishingFactor(QConnectError):
    """A closed-form coefficient requires dividing by a vanished factor."""

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"vanishing factor: {which}")


class PreconditionViolated(QConnectError):
    """A formula's shared-parameter precondition does not hold."""

    def __init__(self, constraint: str):
        self.constraint = constraint
        super().__init__(f"precondition violated: {constraint}")


class UnknownFamily(QConnectError):
    """No family with the requested id is registered."""


class UnknownRow(QConnectError):
    """No closed-form inversion is available for this family."""


class UnknownPair(QConnectError):
    """No closed-form connection is available for this pair of instances."""


class BindingError(QConnectError):
    """Instance bindings do not match the family's declared parameters."""


class DegenerateLeadingCoefficient(QConnectError):
    """A polynomial that must have exact degree n has a vanishing leading term."""


class VariableMismatch(QConnectError):
    """Two families do not share working-variable semantics."""


class MixedContexts(QConnectError):
    """Operands belong to different q-contexts."""


class NonMonicInput(QConnectError):
    """The recursive inverter requires a monic expansion table."""
