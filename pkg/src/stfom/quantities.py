"""Physical constants, unit-tagged scalars, and spectral density conversions.

The package works in SI throughout.  Frequencies are stored in Hz and
converted to angular frequency in exactly one place, angular_frequency().
Noise levels appear in two interchangeable forms: amplitude spectral
densities (what experiments quote, e.g. N/sqrt(Hz)) and power spectral
densities (what the formulas consume, e.g. N^2/Hz).  asd_to_psd() and
psd_to_asd() move between them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import (
    ConstantsError,
    NegativeInputError,
    NonFiniteError,
    NonPositiveError,
    UnitMismatchError,
    UnknownConstantError,
)

# Default constant values, SI.  CODATA 2018 for N_A, k_B, l_P, m_P; the
# gravitational constant and the nuclear scales are kept at the precision
# the downstream formulas actually resolve.
GRAVITATIONAL_CONSTANT = 6.674e-11
AVOGADRO = 6.02214076e23
BOLTZMANN = 1.380649e-23
PLANCK_LENGTH = 1.616255e-35
PLANCK_MASS = 2.176434e-8
NUCLEUS_RADIUS = 1.0e-15
NUCLEON_MASS = 1.6726e-27

# Canonical text form of the defaults, parseable by load_constants().
DEFAULT_CONSTANTS_TEXT = """\
# default physical constants (SI)
G 6.674e-11
N_A 6.02214076e23
k_B 1.380649e-23
l_P 1.616255e-35
m_P 2.176434e-8
r_N 1.0e-15
m_N 1.6726e-27
"""


class Unit(enum.Enum):
    """Closed set of unit tags used by the analysis.

    This is a fixed enumeration, not a dimensional algebra: quantities of
    the same unit add, everything scales by plain numbers, and the only
    unit-changing operations are the dedicated ASD/PSD conversions.
    """

    KILOGRAM = "kg"
    HERTZ = "Hz"
    RADIAN_PER_SECOND = "rad/s"
    KELVIN = "K"
    SECOND = "s"
    NEWTON = "N"
    METER_PER_SECOND2 = "m/s^2"
    FORCE_ASD = "N/sqrt(Hz)"
    ACCEL_ASD = "m s^-2/sqrt(Hz)"
    FORCE_PSD = "N^2/Hz"
    ACCEL_PSD = "m^2 s^-4/Hz"
    FOM = "m^2/s^3"
    KILOGRAM_PER_MOL = "kg/mol"
    PER_MOL = "1/mol"
    DIMENSIONLESS = "1"


@dataclass(frozen=True)
class Quantity:
    """A finite scalar tagged with one of the closed units."""

    value: float
    unit: Unit

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise NonFiniteError(f"quantity value must be finite, got {self.value!r}")

    def _check_same_unit(self, other: Quantity) -> None:
        if not isinstance(other, Quantity):
            raise UnitMismatchError(f"expected a Quantity, got {type(other).__name__}")
        if other.unit is not self.unit:
            raise UnitMismatchError(
                f"cannot combine {self.unit.value} with {other.unit.value}"
            )

    def __add__(self, other: Quantity) -> Quantity:
        self._check_same_unit(other)
        return Quantity(self.value + other.value, self.unit)

    def __sub__(self, other: Quantity) -> Quantity:
        self._check_same_unit(other)
        return Quantity(self.value - other.value, self.unit)

    def __mul__(self, factor: float) -> Quantity:
        if isinstance(factor, Quantity):
            raise UnitMismatchError(
                "quantities do not multiply; scale by a plain number"
            )
        return Quantity(self.value * factor, self.unit)

    __rmul__ = __mul__

    def __truediv__(self, divisor: float) -> Quantity:
        if isinstance(divisor, Quantity):
            raise UnitMismatchError(
                "quantities do not divide; scale by a plain number"
            )
        return Quantity(self.value / divisor, self.unit)


@dataclass(frozen=True)
class Constants:
    """The physical constants every formula in the package draws from.

    G       gravitational constant, m^3 kg^-1 s^-2
    N_A     Avogadro constant, mol^-1
    k_B     Boltzmann constant, J/K
    l_P     Planck length, m
    m_P     Planck mass, kg
    r_N     typical nucleus radius, m
    m_N     nucleon mass, kg
    """

    G: float = GRAVITATIONAL_CONSTANT
    N_A: float = AVOGADRO
    k_B: float = BOLTZMANN
    l_P: float = PLANCK_LENGTH
    m_P: float = PLANCK_MASS
    r_N: float = NUCLEUS_RADIUS
    m_N: float = NUCLEON_MASS

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise NonPositiveError(name, value)


_CONSTANT_NAMES = frozenset(Constants.__dataclass_fields__)


def load_constants(text: str) -> Constants:
    """Parse a constants override file and merge it over the defaults.

    The format is line oriented UTF-8: blank lines and '#' comments are
    ignored, every other line is 'name value' separated by whitespace.
    Only the seven known constant names are accepted; values must be
    strictly positive.  A later line for the same name overrides an
    earlier one.
    """
    overrides: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ConstantsError(
                f"line {lineno}: expected 'name value', got {raw.strip()!r}"
            )
        name, value_text = parts
        if name not in _CONSTANT_NAMES:
            raise UnknownConstantError(name)
        try:
            value = float(value_text)
        except ValueError:
            raise ConstantsError(
                f"line {lineno}: bad numeric value {value_text!r} for {name}"
            ) from None
        if not math.isfinite(value) or value <= 0.0:
            raise NonPositiveError(name, value)
        overrides[name] = value
    return replace(Constants(), **overrides)


def angular_frequency(f0_hz: float) -> float:
    """Convert a resonance frequency in Hz to angular frequency in rad/s."""
    if f0_hz <= 0.0:
        raise NonPositiveError("f0_hz", f0_hz)
    return 2.0 * math.pi * f0_hz


_ASD_TO_PSD_UNIT = {
    Unit.FORCE_ASD: Unit.FORCE_PSD,
    Unit.ACCEL_ASD: Unit.ACCEL_PSD,
    Unit.DIMENSIONLESS: Unit.DIMENSIONLESS,
}
_PSD_TO_ASD_UNIT = {psd: asd for asd, psd in _ASD_TO_PSD_UNIT.items()}


def asd_to_psd(x):
    """Square an amplitude spectral density into a power spectral density.

    Accepts a plain non-negative float or a Quantity carrying one of the
    ASD units (force, acceleration, or dimensionless as a fixed point).
    """
    if isinstance(x, Quantity):
        unit = _ASD_TO_PSD_UNIT.get(x.unit)
        if unit is None:
            raise UnitMismatchError(f"{x.unit.value} is not an amplitude density")
        if x.value < 0.0:
            raise NegativeInputError("amplitude spectral density", x.value)
        return Quantity(x.value * x.value, unit)
    if x < 0.0:
        raise NegativeInputError("amplitude spectral density", x)
    return x * x


def psd_to_asd(x):
    """Square root of a power spectral density, inverse of asd_to_psd."""
    if isinstance(x, Quantity):
        unit = _PSD_TO_ASD_UNIT.get(x.unit)
        if unit is None:
            raise UnitMismatchError(f"{x.unit.value} is not a power density")
        if x.value < 0.0:
            raise NegativeInputError("power spectral density", x.value)
        return Quantity(math.sqrt(x.value), unit)
    if x < 0.0:
        raise NegativeInputError("power spectral density", x)
    return math.sqrt(x)
