"""Exception types raised across the package."""


class CondIIDError(Exception):
    """Base class for all package errors."""


class ImpossibleHistory(CondIIDError):
    """The label process assigns probability zero to the given history."""


class OutsideSupport(CondIIDError):
    """A point lies in neither class-conditional support."""


class UnsupportedDimension(CondIIDError):
    """An exact (closed-form) computation was requested outside d=1."""


class EmptySample(CondIIDError):
    pass


class EnumerationTooLarge(CondIIDError):
    """Exact enumeration requested beyond the configured guard."""


class PoleAtOne(CondIIDError):
    pass


class PreconditionViolated(CondIIDError):
    pass


class ArgumentMismatch(CondIIDError):
    """Bound inputs were evaluated at points other than the ones prescribed."""


class InvalidConfig(CondIIDError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))
