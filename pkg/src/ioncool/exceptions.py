"""
Exception types shared across ioncool
"""


class IonCoolError(Exception):
    """Base class for ioncool errors"""


class ConfigError(IonCoolError, ValueError):
    """Invalid experiment configuration (CLI exit code 2)"""

    def __init__(self, message: str, key: str = ""):
        super().__init__(message)
        self.key = key


class NumericalError(IonCoolError, RuntimeError):
    """Numerical failure: truncation overflow, non-convergence, broken contracts (CLI exit code 3)"""
