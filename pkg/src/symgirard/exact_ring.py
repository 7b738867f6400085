"""Exact coefficient arithmetic: rationals and dense univariate polynomials.

Scalars are arbitrary-precision rationals, backed by ``gmpy2.mpq`` when
available and by ``fractions.Fraction`` otherwise.  Both representations are
always stored reduced, with a positive denominator and zero represented as
0/1, so re-reducing a stored value is the identity.

``UniPoly`` is a dense univariate polynomial over the scalars in a named
indeterminate.  The zero polynomial has an empty coefficient tuple, and its
degree is the sentinel ``None`` rather than a number.  A scalar combined
with a polynomial is promoted to degree 0; combining polynomials in
different indeterminates raises :class:`IndeterminateMismatch`.

A ring element ("RingElem") is either a scalar or a UniPoly.  There is no
floating point anywhere in this module and every comparison is exact.

Serialization: scalars render as ``"num/den"`` (``"num"`` when the
denominator is 1); polynomials as a list of coefficient strings, lowest
degree first.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

try:
    from gmpy2 import mpq as Rat

    _SCALAR_TYPES = (type(Rat(0)), Fraction, int)
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rat = Fraction
    _SCALAR_TYPES = (Fraction, int)


class IndeterminateMismatch(ValueError):
    """Arithmetic between polynomials in different indeterminates."""


class InexactDivision(ArithmeticError):
    """An exact polynomial quotient was requested but a remainder is left."""


def is_scalar(x) -> bool:
    return isinstance(x, _SCALAR_TYPES)


def as_scalar(x) -> Rat:
    """Coerce an int, Fraction, mpq, or "num/den" string to the scalar type."""
    return Rat(x)


def scalar_to_str(x) -> str:
    return str(as_scalar(x))


def scalar_from_str(s: str) -> Rat:
    return Rat(s)


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Immutable; trailing zero coefficients are stripped on construction so
    the highest stored coefficient of a nonzero polynomial is nonzero.
    """

    __slots__ = ("name", "coeffs")

    def __init__(self, name: str, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.name = name
        self.coeffs = tuple(cs)

    @classmethod
    def gen(cls, name: str = "q") -> "UniPoly":
        """The generator polynomial, e.g. q itself."""
        return cls(name, (0, 1))

    @classmethod
    def constant(cls, name: str, value) -> "UniPoly":
        return cls(name, (value,))

    @property
    def degree(self):
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Rat:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant polynomial")
        return self.coeffs[0] if self.coeffs else Rat(0)

    def coefficient(self, k: int) -> Rat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Rat(0)

    def _coerce(self, other):
        """Return (self, other) as same-name UniPolys, or None if not coercible."""
        if isinstance(other, UniPoly):
            if other.name != self.name:
                raise IndeterminateMismatch(
                    f"cannot combine polynomials in {self.name!r} and {other.name!r}"
                )
            return self, other
        if is_scalar(other):
            return self, UniPoly(self.name, (other,))
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = max(len(a.coeffs), len(b.coeffs))
        return UniPoly(
            a.name,
            (a.coefficient(i) + b.coefficient(i) for i in range(n)),
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.name, (-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_zero or b.is_zero:
            return UniPoly(a.name)
        out = [Rat(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
        return UniPoly(a.name, out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = UniPoly(self.name, (1,))
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if self.name == other.name:
                return self.coeffs == other.coeffs
            # constants compare equal across indeterminates
            if self.is_constant and other.is_constant:
                return self.constant_value() == other.constant_value()
            return False
        if is_scalar(other):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_value())
        return hash((self.name, self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def evaluate(self, value) -> Rat:
        """Exact Horner evaluation at a scalar point."""
        v = as_scalar(value)
        acc = Rat(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divexact(self, other) -> "UniPoly":
        """Exact quotient self / other; raises InexactDivision on a remainder."""
        if is_scalar(other):
            other = UniPoly(self.name, (other,))
        pair = self._coerce(other)
        a, b = pair
        if b.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(a.coeffs)
        db = b.degree
        lead = b.coeffs[-1]
        quot = [Rat(0)] * max(len(rem) - db, 1)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            quot[i - db] = c
            for j, cb in enumerate(b.coeffs):
                rem[i - db + j] -= c * cb
        if any(c != 0 for c in rem):
            raise InexactDivision(f"{a} is not divisible by {b}")
        return UniPoly(a.name, quot)

    def to_coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = self.name if i == 1 else f"{self.name}^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"UniPoly({self.name!r}, {[str(c) for c in self.coeffs]})"


RingElem = Union[UniPoly, Fraction, int]


def unipoly_from_strings(name: str, coeff_strings: Sequence[str]) -> UniPoly:
    return UniPoly(name, (scalar_from_str(s) for s in coeff_strings))


def _as_elem(x):
    return x if isinstance(x, UniPoly) else as_scalar(x)


def ring_add(a, b):
    """Exact sum of two ring elements, promoting scalars to degree 0."""
    return _as_elem(a) + _as_elem(b)


def ring_sub(a, b):
    return _as_elem(a) - _as_elem(b)


def ring_mul(a, b):
    """Exact product of two ring elements."""
    return _as_elem(a) * _as_elem(b)


def ring_neg(a):
    return -_as_elem(a)


def ring_equal(a, b) -> bool:
    return _as_elem(a) == _as_elem(b)


def poly_eval(p, value) -> Rat:
    """Evaluate a ring element at a scalar point (identity on scalars)."""
    if isinstance(p, UniPoly):
        return p.evaluate(value)
    return as_scalar(p)


def invert_constant(x):
    """Multiplicative inverse of a nonzero scalar or nonzero constant polynomial."""
    if isinstance(x, UniPoly):
        if not x.is_constant or x.is_zero:
            raise ZeroDivisionError(f"{x} has no constant-term inverse")
        return UniPoly(x.name, (Rat(1) / x.constant_value(),))
    v = as_scalar(x)
    return Rat(1) / v


def elem_to_jsonable(x):
    """Scalar -> "num/den" string; UniPoly -> list of coefficient strings."""
    if isinstance(x, UniPoly):
        return x.to_coeff_strings()
    if is_scalar(x):
        return scalar_to_str(x)
    if isinstance(x, (tuple, list)):
        return [elem_to_jsonable(v) for v in x]
    return x


def elem_to_text(x) -> str:
    """Single-cell text form: scalars bare, polynomials as a JSON coefficient array."""
    j = elem_to_jsonable(x)
    return j if isinstance(j, str) else json.dumps(j)
