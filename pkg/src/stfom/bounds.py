"""Mapping figures of merit onto dimensionless diffusion-model bounds.

Two phenomenological models of classical-quantum gravitational coupling
are supported.  In the ultra-local discrete model the dimensionless
coupling scales like FOM * r_N^4 / (m_N * G^2); in the non-local
continuous model it scales like FOM * r_N^3 / G^2.  For each model a
published reference point (anchor) fixes the absolute normalisation, so
bounds from new figures of merit follow by pure proportionality:

    bound(fom) = bound_ref * fom / fom_ref

The anchored path is authoritative; si_bound() evaluates the raw SI
combinations and is kept for exploratory scaling checks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from types import MappingProxyType

from .errors import ModelMismatchError, NegativeInputError, NonPositiveError
from .quantities import Constants

# Figure of merit of the classic Cavendish torsion balance, the baseline
# against which orders of improvement are counted.
CAVENDISH_FOM = 1.0e14


class ModelId(enum.Enum):
    """The two diffusion models a bound can belong to."""

    ULTRA_LOCAL_DISCRETE = "ultra-local-discrete"
    NON_LOCAL_CONTINUOUS = "non-local-continuous"


@dataclass(frozen=True)
class BoundAnchor:
    """Reference point tying a model's bound scale to a known experiment.

    fom_ref is the figure of merit of the anchoring experiment, bound_ref
    the dimensionless bound it established, and lower_bound the value
    below which the model is already excluded by decoherence arguments.
    """

    model: ModelId
    fom_ref: float
    bound_ref: float
    lower_bound: float

    def __post_init__(self) -> None:
        for name in ("fom_ref", "bound_ref", "lower_bound"):
            value = getattr(self, name)
            if value <= 0.0:
                raise NonPositiveError(name, value)


DEFAULT_ANCHORS: MappingProxyType[ModelId, BoundAnchor] = MappingProxyType({
    ModelId.ULTRA_LOCAL_DISCRETE: BoundAnchor(
        model=ModelId.ULTRA_LOCAL_DISCRETE,
        fom_ref=2.98e-1,
        bound_ref=1.0e-16,
        lower_bound=1.0e-25,
    ),
    ModelId.NON_LOCAL_CONTINUOUS: BoundAnchor(
        model=ModelId.NON_LOCAL_CONTINUOUS,
        fom_ref=2.98e-1,
        bound_ref=1.0e-24,
        lower_bound=1.0e-35,
    ),
})


def _check_anchor(model: ModelId, anchor: BoundAnchor) -> None:
    if anchor.model is not model:
        raise ModelMismatchError(
            f"anchor belongs to {anchor.model.value}, not {model.value}"
        )


def si_bound(model: ModelId, fom: float, constants: Constants | None = None) -> float:
    """Dimensionless bound from the raw SI constant combination."""
    if fom < 0.0:
        raise NegativeInputError("fom", fom)
    if constants is None:
        constants = Constants()
    g_squared = constants.G * constants.G
    if model is ModelId.ULTRA_LOCAL_DISCRETE:
        return fom * constants.r_N**4 / (constants.m_N * g_squared)
    return fom * constants.r_N**3 / g_squared


def anchored_bound(model: ModelId, fom: float, anchor: BoundAnchor) -> float:
    """Bound scaled off the anchor; exact at the anchor's own FOM."""
    if fom < 0.0:
        raise NegativeInputError("fom", fom)
    _check_anchor(model, anchor)
    return anchor.bound_ref * (fom / anchor.fom_ref)


def fom_threshold(model: ModelId, bound: float, anchor: BoundAnchor) -> float:
    """Figure of merit needed to reach a given bound; inverse of anchored_bound."""
    if bound < 0.0:
        raise NegativeInputError("bound", bound)
    _check_anchor(model, anchor)
    return anchor.fom_ref * (bound / anchor.bound_ref)


def orders_of_improvement(fom: float, baseline_fom: float = CAVENDISH_FOM) -> float:
    """Decades of figure-of-merit improvement over a baseline experiment."""
    if fom <= 0.0:
        raise NonPositiveError("fom", fom)
    if baseline_fom <= 0.0:
        raise NonPositiveError("baseline_fom", baseline_fom)
    return math.log10(baseline_fom / fom)


@dataclass(frozen=True)
class BoundReport:
    """Everything a single (model, FOM) pair implies."""

    model: ModelId
    fom: float
    anchored: float
    si: float
    lower_bound: float
    below_lower_bound: bool
    orders_vs_baseline: float


def bound_report(
    model: ModelId,
    fom: float,
    anchor: BoundAnchor | None = None,
    constants: Constants | None = None,
    baseline_fom: float = CAVENDISH_FOM,
) -> BoundReport:
    """Assemble the anchored bound, SI bound, and baseline comparison."""
    if anchor is None:
        anchor = DEFAULT_ANCHORS[model]
    anchored = anchored_bound(model, fom, anchor)
    return BoundReport(
        model=model,
        fom=fom,
        anchored=anchored,
        si=si_bound(model, fom, constants),
        lower_bound=anchor.lower_bound,
        below_lower_bound=anchored < anchor.lower_bound,
        orders_vs_baseline=orders_of_improvement(fom, baseline_fom),
    )
