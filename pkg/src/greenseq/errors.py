"""Exception taxonomy.

Exit-code mapping used by the CLI: SpecError/UsageError/GateError are
usage-class failures (exit 2); TheoremViolation and InvariantViolation
mean a mathematical check failed (exit 1).
"""


class SpecError(ValueError):
    """Invalid algebra description (Kupisch series, orientation word, file)."""


class UsageError(ValueError):
    """Operation applied to arguments it does not support."""


class GateError(RuntimeError):
    """A brute-force size gate was exceeded; nothing was computed."""


class InvariantViolation(RuntimeError):
    """An internal structural invariant failed: indicates a bug."""


class TheoremViolation(RuntimeError):
    """An executable theorem check failed; carries the witnessing data."""
