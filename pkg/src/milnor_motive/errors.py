class IntegralityViolation(ArithmeticError):
    """A localization sum did not land in the polynomial ring."""


class FreenessViolation(ArithmeticError):
    """Hilbert-series deconvolution produced a negative rank."""


class VerificationError(AssertionError):
    """A claimed identity between correspondences failed."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        super().__init__(f"{identity} failed" + (f": {detail}" if detail else ""))
