"""Exception hierarchy shared by the library and the CLI."""


class TrilogError(Exception):
    """Base class for every domain error raised by trilog."""

    @property
    def message(self) -> str:
        return str(self.args[0]) if self.args else type(self).__name__


class ParameterError(TrilogError, ValueError):
    """Invalid parameters: unsupported ell, mismatched moduli, singular matrices."""


class CompositeModulusError(ParameterError):
    """2^e2 * 3^e3 - 1 is not prime."""


class UnknownParamsError(TrilogError, KeyError):
    """No parameter set with the requested name."""


class GenerationError(TrilogError, RuntimeError):
    """Random sampling gave up after its retry budget."""


class StrategyError(TrilogError, ValueError):
    """A split vector does not describe a full strategy."""


class DigitRangeError(TrilogError, ValueError):
    """A signed digit lies outside its allowed range."""


class DegenerateInputError(TrilogError, ValueError):
    """Neither candidate base generates the subgroup."""


class NotInSubgroupError(TrilogError, ValueError):
    """An element is not in the subgroup the table or base spans."""


class ConsistencyError(TrilogError, ArithmeticError):
    """An internal invariant failed (corrupted table, bad final digit, failed self-test)."""


class UsageError(TrilogError):
    """Command-line flags that parse but do not make sense together."""
