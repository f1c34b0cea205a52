"""Exception types shared across the toolkit."""


class SwitchkitError(Exception):
    """Base class for all toolkit errors."""


class TooLarge(SwitchkitError):
    """Graph exceeds the size cap of an exhaustive procedure."""


class SizeMismatch(SwitchkitError):
    """Two objects that must share a vertex/variable count do not."""


class MalformedGraph6(SwitchkitError):
    """Input is not a valid graph6 string."""


class ArityMismatch(SwitchkitError):
    """Formula arity differs from what a construction requires."""


class NotVariableOnly(SwitchkitError):
    """Switching set contains vertices outside the variable layer."""


class BudgetExceeded(SwitchkitError):
    """Induced-pattern search hit its node budget before deciding."""
