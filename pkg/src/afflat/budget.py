"""Global cap for enumeration-based searches.

Library default is uncapped (every search in this package terminates
mathematically).  The CLI installs a cap from AFFLAT_MAX_DEN so adversarial
inputs fail fast with a resource error instead of grinding.
"""

from .errors import SearchBudgetExceeded

_MAX_DEN = None


def set_max_den(value):
    """Set the global search cap (None disables it). Returns the old value."""
    global _MAX_DEN
    old = _MAX_DEN
    _MAX_DEN = value
    return old


def check(value, what="denominator search"):
    """Raise SearchBudgetExceeded if value passed the configured cap."""
    if _MAX_DEN is not None and value > _MAX_DEN:
        raise SearchBudgetExceeded(
            "%s passed the cap %d (AFFLAT_MAX_DEN)" % (what, _MAX_DEN))
