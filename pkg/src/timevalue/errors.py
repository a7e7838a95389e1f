"""Exception hierarchy shared by every module."""


class ValuationError(Exception):
    """Base class for all errors raised by timevalue."""


class OutOfDomain(ValuationError, ValueError):
    """An argument lies outside the domain where the formula is defined."""


class AxiomViolation(OutOfDomain):
    """A value pair implies knowledge lost value, which the knowledge axiom forbids."""


class EndpointSingularity(OutOfDomain):
    """A density was evaluated at an endpoint where it diverges."""


class EmptyInput(ValuationError, ValueError):
    """A sequence argument that must be non-empty was empty."""


class EmptyStream(EmptyInput):
    """A cash-flow stream with no flows was given where flows are required."""


class NumericalFailure(ValuationError, ArithmeticError):
    """A numerical routine could not reach its requested tolerance."""


class NonConvergence(NumericalFailure):
    """An iterative solver exhausted its iteration budget."""


class NoSignChange(NumericalFailure):
    """The objective has the same sign at both ends of the bracket."""


class Inconclusive(NumericalFailure):
    """A divergence probe did not cross its threshold within the period budget.

    ``value_at_n_max`` holds the compounded value reached at the last period
    examined, so the caller can judge how far it is from the threshold.
    """

    def __init__(self, value_at_n_max: float, n_max: int):
        self.value_at_n_max = value_at_n_max
        self.n_max = n_max
        super().__init__(
            f"threshold not crossed within {n_max} periods "
            f"(value at n_max = {value_at_n_max!r}); raise n_max"
        )
