"""
Value types shared by the manifest and the numerical data models.
"""

# Framelium imports
from .xobject import XObject

# Standard library imports
import datetime
import math
from typing import Annotated, Any

# External imports
from pydantic import BeforeValidator, PlainSerializer


def _parse_complex(value: Any) -> complex:
    """Accepts a complex, a real number or a two-element [re, im] sequence."""
    if isinstance(value, bool):
        raise ValueError("booleans are not complex values")
    if isinstance(value, (int, float, complex)):
        z = complex(value)
    elif isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex values are encoded as [re, im], got {len(value)} elements")
        re, im = value
        if isinstance(re, bool) or isinstance(im, bool) or not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
            raise ValueError(f"complex components must be real numbers, got {value!r}")
        z = complex(float(re), float(im))
    else:
        raise ValueError(f"cannot interpret {value!r} as a complex value")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"complex value {value!r} is not finite")
    return z


def _dump_complex(value: complex) -> list[float]:
    return [value.real, value.imag]


ComplexValue = Annotated[complex, BeforeValidator(_parse_complex), PlainSerializer(_dump_complex, return_type=list[float])]
"""Finite complex scalar; JSON encoding is the two-element array [re, im]."""


class ManifestValueTypes:
    """Type definitions for manifest values."""
    Date = datetime.date
    Complex = ComplexValue


class ManifestValue(XObject, ManifestValueTypes):
    """Base class for manifest values with common type definitions."""
