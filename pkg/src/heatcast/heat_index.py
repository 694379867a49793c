"""Steadman heat index from air temperature plus relative humidity or dew point.

The operational formula is the NWS Rothfusz regression with the standard
low-humidity and high-humidity adjustments, evaluated in Fahrenheit and
converted back to Celsius. Below the 80 F threshold the simple formula
averaged with the temperature is returned instead, matching NWS practice.
"""

from __future__ import annotations

import math

from .errors import DomainError

# Magnus saturation-vapour-pressure constants (Alduchov & Eskridge fit);
# alternatives differ by < 0.3% RH over the meteorological range.
MAGNUS_A = 17.625
MAGNUS_B = 243.04

# Dew point may exceed air temperature by up to this much before the pair is
# rejected; real sensor pairs occasionally disagree by a few tenths.
DEW_POINT_SLACK_C = 0.5


def celsius_to_fahrenheit(t: float) -> float:
    return t * 9.0 / 5.0 + 32.0


def fahrenheit_to_celsius(t: float) -> float:
    return (t - 32.0) * 5.0 / 9.0


def relative_humidity_from_dew_point(t: float, td: float) -> float:
    """Relative humidity (percent) implied by temperature and dew point.

    Magnus form: RH = 100 * exp(a*td/(b+td) - a*t/(b+t)), clamped to [0, 100].
    """
    if not (math.isfinite(t) and math.isfinite(td)):
        raise DomainError("temperature and dew point must be finite")
    if t <= -MAGNUS_B or td <= -MAGNUS_B:
        raise DomainError(f"Magnus formula undefined at or below {-MAGNUS_B} C")
    if td > t + DEW_POINT_SLACK_C:
        raise DomainError(f"dew point {td} C exceeds air temperature {t} C")
    rh = 100.0 * math.exp(
        MAGNUS_A * td / (MAGNUS_B + td) - MAGNUS_A * t / (MAGNUS_B + t)
    )
    return min(100.0, max(0.0, rh))


def _rothfusz(tf: float, rh: float) -> float:
    """Full Rothfusz regression with NWS adjustments, Fahrenheit in and out."""
    hi = (
        -42.379
        + 2.04901523 * tf
        + 10.14333127 * rh
        - 0.22475541 * tf * rh
        - 0.00683783 * tf * tf
        - 0.05481717 * rh * rh
        + 0.00122874 * tf * tf * rh
        + 0.00085282 * tf * rh * rh
        - 0.00000199 * tf * tf * rh * rh
    )
    if rh < 13.0 and 80.0 <= tf <= 112.0:
        hi -= ((13.0 - rh) / 4.0) * math.sqrt((17.0 - abs(tf - 95.0)) / 17.0)
    elif rh > 85.0 and 80.0 <= tf <= 87.0:
        hi += ((rh - 85.0) / 10.0) * ((87.0 - tf) / 2.0)
    return hi


def steadman_heat_index(t: float, rh: float) -> float:
    """Heat index in Celsius for air temperature ``t`` (C) and humidity ``rh`` (%).

    The simple formula averaged with the temperature is used when that
    average stays below 80 F; otherwise the Rothfusz regression applies.
    """
    if not 0.0 <= rh <= 100.0:
        raise DomainError(f"relative humidity {rh} outside [0, 100]")
    tf = celsius_to_fahrenheit(t)
    simple = 0.5 * (tf + 61.0 + 1.2 * (tf - 68.0) + 0.094 * rh)
    averaged = 0.5 * (simple + tf)
    if averaged < 80.0:
        return fahrenheit_to_celsius(averaged)
    return fahrenheit_to_celsius(_rothfusz(tf, rh))


def heat_index_dew_point_variant(t: float, td: float) -> float:
    """Heat index computed from dew point by deriving humidity first."""
    return steadman_heat_index(t, relative_humidity_from_dew_point(t, td))
