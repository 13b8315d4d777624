"""
Scalar arithmetic for state amplitudes
Exact Gaussian rationals, float complex values, and the text forms used by
state files and JSON reports
"""

import math
import re
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

import numpy as np

import config

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_INTEGER = re.compile(r'^[+-]?\d+$')
_RATIONAL = re.compile(r'^[+-]?\d+/\d+$')
_DECIMAL = re.compile(r'^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$')


# ═══════════════════════════════════════════════════════════════════
# 🔢 GAUSSIAN RATIONALS
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class GaussRational:
    """Complex number re + im*i with exact rational parts"""
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('re', 'im'):
            value = getattr(self, name)
            if isinstance(value, (float, complex)) or not isinstance(value, (int, Fraction)):
                raise TypeError(f"GaussRational parts must be int or Fraction, got {type(value).__name__}")
            # Fraction is always reduced with a positive denominator
            object.__setattr__(self, name, Fraction(value))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussRational(Fraction(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRational((self.re * other.re + self.im * other.im) / norm,
                             (self.im * other.re - self.re * other.im) / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = GaussRational(Fraction(1)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = '-' if self.im < 0 else '+'
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussRational()
ONE = GaussRational(Fraction(1))


# ═══════════════════════════════════════════════════════════════════
# 🔀 MODE HELPERS
# ═══════════════════════════════════════════════════════════════════

def check_mode(mode: str) -> str:
    if mode not in config.MODES:
        raise ValueError(f"Unknown arithmetic mode '{mode}' (expected one of {', '.join(config.MODES)})")
    return mode


def zero(mode: str):
    return ZERO if check_mode(mode) == config.EXACT_MODE else 0j


def one(mode: str):
    return ONE if check_mode(mode) == config.EXACT_MODE else 1 + 0j


def scalar(re_part, im_part=0, mode: str = config.EXACT_MODE):
    """Build a scalar of the requested mode from real and imaginary parts"""
    if check_mode(mode) == config.EXACT_MODE:
        return GaussRational(re_part, im_part)
    return complex(float(re_part), float(im_part))


def to_array(values: Iterable, mode: str) -> np.ndarray:
    """Amplitude array: object dtype of GaussRational, or complex128"""
    if check_mode(mode) == config.EXACT_MODE:
        values = list(values)
        array = np.empty(len(values), dtype=object)
        for index, value in enumerate(values):
            coerced = GaussRational._coerce(value)
            if coerced is None:
                raise TypeError(f"Exact amplitudes must be Gaussian rationals, got {type(value).__name__}")
            array[index] = coerced
        return array
    return np.asarray([complex(v) for v in values], dtype=np.complex128)


def to_float_array(values: np.ndarray) -> np.ndarray:
    """Cast exact amplitudes to complex128 (float arrays pass through)"""
    if values.dtype == object:
        return np.asarray([complex(v) for v in values.ravel()], dtype=np.complex128).reshape(values.shape)
    return values.astype(np.complex128)


# ═══════════════════════════════════════════════════════════════════
# 📝 TEXT FORMS
# ═══════════════════════════════════════════════════════════════════

def parse_component(text: str) -> Tuple[Union[Fraction, float], bool]:
    """
    Parse one real number of a state file

    Returns:
        (value, exact) where exact is True for integer or p/q forms
    """
    text = text.strip()
    if _INTEGER.match(text) or _RATIONAL.match(text):
        return Fraction(text), True
    if _DECIMAL.match(text):
        value = float(text)
        if not math.isfinite(value):
            raise ValueError(f"Number out of float range: '{text}'")
        return value, False
    raise ValueError(f"Not a number: '{text}'")


def format_component(value) -> str:
    """Rational string for exact parts, shortest round-trip decimal for floats"""
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return repr(float(value))


def scalar_parts(value) -> Tuple[str, str]:
    """(re, im) strings of a scalar in either mode"""
    if isinstance(value, GaussRational):
        return format_component(value.re), format_component(value.im)
    value = complex(value)
    return format_component(value.real), format_component(value.imag)


def parse_scalar(re_text: str, im_text: str, mode: str = config.EXACT_MODE):
    """Inverse of scalar_parts for the requested mode"""
    re_value, re_exact = parse_component(re_text)
    im_value, im_exact = parse_component(im_text)
    if mode == config.EXACT_MODE:
        if not (re_exact and im_exact):
            raise ValueError(f"Decimal value '{re_text} {im_text}' cannot be read in exact mode")
        return GaussRational(re_value, im_value)
    return complex(float(re_value), float(im_value))
