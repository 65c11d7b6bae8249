"""Exception hierarchy shared by all symzeta modules."""


class SymZetaError(Exception):
    """Base class for all numeric/domain failures raised by this package."""


class PoleAtOne(SymZetaError):
    """zeta(s) requested within 1e-12 of the simple pole at s = 1."""


class PoleAtNonpositiveInteger(SymZetaError):
    """log_gamma(s) requested at (or within 1e-12 of) a pole of Gamma."""


class NumericOverflow(SymZetaError):
    """A value exceeds the representable double-precision exponent range."""


class PrecisionUnreachable(SymZetaError):
    """The requested absolute-error bound cannot be certified within the
    configured term budget (or the input is outside the guarantee window)."""


class RankTooLarge(SymZetaError):
    """Partition enumeration requested for more than 10 weights."""


class NearPole(SymZetaError):
    """Evaluation point is within the guard distance of a pole s = 1/c of
    one of the expansion factors; carries the offending pole location."""

    def __init__(self, pole: float, message: str | None = None):
        self.pole = pole
        super().__init__(message or f"evaluation point too close to pole at s = {pole!r}")


class OutsideConvergenceRegion(SymZetaError):
    """Brute-force multi-sum requested outside its absolute-convergence domain."""


class OutsideRegime(SymZetaError):
    """Asymptotic model requested outside its validity regime."""


class AtAPoint(SymZetaError):
    """Logarithmic derivative of G requested where |G| < 1e-12."""


class BoundaryTooCloseToZero(SymZetaError):
    """A zero of G sits too close to the integration contour even after
    the allowed perturbation attempts."""


class NonIntegerWinding(SymZetaError):
    """A winding integral failed to settle within 1e-3 of a nonnegative
    integer at maximum refinement."""


class NewtonDiverged(SymZetaError):
    """Newton refinement left its enclosing cell or failed to converge."""


class MissingPoints(SymZetaError):
    """A report was requested but no located a-point set is available."""
