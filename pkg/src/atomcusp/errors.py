"""Exception types shared across the package.

The CLI maps these onto exit codes, so library code should raise the most
specific class that applies instead of bare ValueError where a caller needs
to tell the cases apart.
"""


class ConfigError(ValueError):
    """Invalid run configuration or malformed input file."""


class ConvergenceError(RuntimeError):
    """Self-consistent iteration did not reach its tolerances.

    Carries the energy and residual history so the caller can diagnose
    (or report) what the iteration was doing when it gave up.
    """

    def __init__(self, message, energies=None, residuals=None):
        super().__init__(message)
        self.energies = list(energies) if energies is not None else []
        self.residuals = list(residuals) if residuals is not None else []


class VerificationError(RuntimeError):
    """A verification check ran but its contract was not met."""
