"""Time value of money and of knowledge.

Money is discounted when brought from the future to the present; knowledge,
which never loses value, is compounded in both directions. This package
implements both sides, certifies the divergence of compounding knowledge
values with finite witnesses, and tabulates the associated weight curves.
"""

from timevalue.core import (
    CashFlow,
    CashFlowStream,
    DivergenceCertificate,
    Divergent,
    Finite,
    Rate,
    RateKind,
    ValuationResult,
    check_periods,
    make_rate,
    make_stream,
)
from timevalue.errors import (
    AxiomViolation,
    EmptyInput,
    EmptyStream,
    EndpointSingularity,
    Inconclusive,
    NoSignChange,
    NonConvergence,
    NumericalFailure,
    OutOfDomain,
    ValuationError,
)
from timevalue.knowledge import (
    Epoch,
    KnowledgeValue,
    indifference_select,
    limit_probe,
    transport_value,
    weight,
)
from timevalue.money import (
    DiscountFactor,
    discount_factor,
    discount_factor_exp_continuous,
    discount_factor_growth,
    discount_factor_hyperbolic,
    fv_of_pv,
    pv_of_fv,
    pv_of_stream,
)
from timevalue.profiles import (
    BetaDensity,
    GaussianProfile,
    ImpulseResponse,
    MixtureProfile,
    NascentDelta,
    NormalDensity,
    beta_density,
    beta_function,
    exp_decay,
    exp_growth,
    gaussian_weight,
    impulse_response,
    make_mixture,
    mixture_weight,
    nascent_delta,
    normal_density,
)
from timevalue.quadrature import integrate
from timevalue.solver import Bracket, implied_knowledge_rate, implied_rate, irr

__version__ = "0.1.0"
