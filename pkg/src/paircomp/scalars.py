"""Scalar values: finite real or complex numbers and their text forms.

All matrix entries, weights and roots in this package are plain Python
``complex`` values (a real is a complex with zero imaginary part). Helpers
here centralize finiteness checks, tolerant equality, canonicalization of
IEEE negative zeros, and the ``a+bi`` text format used in files and reports.
"""

from __future__ import annotations

import cmath
import math
import re

from .errors import ParseError

#: Default absolute tolerance, per component, for identity checks.
ABS_TOL = 1e-9

_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_FLOAT = rf"[-+]?{_UNSIGNED}"
_COMPLEX_RE = re.compile(
    rf"^\s*(?P<re>{_FLOAT})(?P<imsign>[-+])(?P<imabs>{_UNSIGNED})?i\s*$"
)
_PURE_IMAG_RE = re.compile(rf"^\s*(?P<im>{_FLOAT}|[-+]?)i\s*$")


def canonical(z: complex) -> complex:
    """Replace IEEE negative zeros so phase/log land on the principal branch."""
    re_, im = z.real, z.imag
    return complex(re_ if re_ != 0.0 else 0.0, im if im != 0.0 else 0.0)


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def is_real(z: complex) -> bool:
    return z.imag == 0.0


def close_abs(a: complex, b: complex, tol: float = ABS_TOL) -> bool:
    """Componentwise absolute closeness."""
    return abs(a.real - b.real) <= tol and abs(a.imag - b.imag) <= tol


def close_rel(a: complex, b: complex, tol: float = ABS_TOL) -> bool:
    """|a-b| <= tol * max(|a|, |b|), with equality at zero."""
    return abs(a - b) <= tol * max(abs(a), abs(b))


def parse_scalar(raw: int | float | str) -> complex:
    """Parse a JSON-style entry: a number, or a string like ``"0+1i"``.

    Accepted string forms: ``a+bi``, ``a-bi``, ``bi``, ``i``, ``-i``. The
    coefficient grammar is the usual decimal/exponent float syntax.
    """
    if isinstance(raw, bool):
        raise ParseError(f"not a scalar: {raw!r}")
    if isinstance(raw, (int, float)):
        value = complex(float(raw), 0.0)
    elif isinstance(raw, str):
        m = _COMPLEX_RE.match(raw)
        if m:
            imabs = float(m.group("imabs")) if m.group("imabs") else 1.0
            im = imabs if m.group("imsign") == "+" else -imabs
            value = complex(float(m.group("re")), im)
        elif "i" not in raw:
            try:
                value = complex(float(raw), 0.0)
            except ValueError as exc:
                raise ParseError(f"cannot parse scalar {raw!r}") from exc
        else:
            m = _PURE_IMAG_RE.match(raw)
            if m is None:
                raise ParseError(f"cannot parse scalar {raw!r}")
            part = m.group("im")
            if part in ("", "+"):
                im = 1.0
            elif part == "-":
                im = -1.0
            else:
                im = float(part)
            value = complex(0.0, im)
    else:
        raise ParseError(f"not a scalar: {raw!r}")
    if not is_finite(value):
        raise ParseError(f"scalar {raw!r} is not finite")
    return canonical(value)


def scalar_to_json(z: complex) -> float | str:
    """Bit-exact JSON form: real scalars as numbers, others as ``a+bi`` strings."""
    z = canonical(z)
    if is_real(z):
        return z.real
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def format_scalar(z: complex, sig: int = 12) -> str:
    """Human-readable form with ``sig`` significant digits; reals print as reals."""
    z = canonical(z)
    if is_real(z):
        return f"{z.real:.{sig}g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.{sig}g}{sign}{abs(z.imag):.{sig}g}i"


def round_sig(x: float, sig: int = 12) -> float:
    """Round to ``sig`` significant digits (used for wire/report numbers)."""
    if not math.isfinite(x):
        return x
    return float(f"{x:.{sig}g}")


def principal_log(z: complex) -> complex:
    """Complex logarithm on the principal branch, Arg in (-pi, pi].

    Negative zeros are canonicalized first so log(-1) = i*pi, never -i*pi.
    """
    z = canonical(z)
    if z == 0:
        raise ZeroDivisionError("log of zero")
    return cmath.log(z)


def nth_roots(z: complex, n: int) -> list[complex]:
    """All n complex n-th roots of z, k = 0..n-1 over the principal argument.

    Root k is |z|^(1/n) * exp(i*(theta + 2*pi*k)/n) with theta = Arg z in
    (-pi, pi].
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    z = canonical(z)
    r = abs(z) ** (1.0 / n)
    theta = cmath.phase(z)
    return [canonical(cmath.rect(r, (theta + 2.0 * math.pi * k) / n)) for k in range(n)]
