"""Truncated formal power series with exact coefficients.

A series stores its coefficients c_0..c_T for a fixed truncation order T;
arithmetic never reads or writes beyond index T, and mixing truncation
orders raises OrderMismatch instead of silently truncating.  Down-shortening
is always explicit through ``truncate``.

The generating series of a variable set are built from their finite product
forms:

    E(t) = prod (1 + t*x_i)        coefficient k is e_k
    H(t) = prod (1 - t*x_i)^(-1)   coefficient k is h_k
    P(t) = sum  x_i / (1 - t*x_i)  coefficient k is p_{k+1}

and H(t) * E(-t) = 1, P(t) = H'(t)/H(t) are verified identities connecting
them.
"""

from __future__ import annotations

from typing import Sequence

from .exact_ring import Rat, RingElem, UniPoly, as_scalar, invert_constant


class OrderMismatch(ValueError):
    """Arithmetic or comparison between series of different truncation orders."""


class NonInvertibleConstantTerm(ValueError):
    """Inversion of a series whose constant term is not an invertible constant."""


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [c if isinstance(c, UniPoly) else as_scalar(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be nonnegative")
            if len(cs) > order + 1:
                raise ValueError(
                    f"{len(cs)} coefficients exceed truncation order {order}; "
                    "use truncate() to shorten explicitly"
                )
            cs.extend(Rat(0) for _ in range(order + 1 - len(cs)))
        if not cs:
            raise ValueError("a truncated series stores at least the constant term")
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Rat(1)], order=order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([Rat(0)], order=order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> RingElem:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def _check_order(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise OrderMismatch(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Cauchy product, truncated at the common order."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        T = self.order
        out = []
        for n in range(T + 1):
            acc = Rat(0)
            for k in range(n + 1):
                a = self.coeffs[k]
                if a == 0:
                    continue
                acc = acc + a * other.coeffs[n - k]
            out.append(acc)
        return TruncatedSeries(out)

    def truncate(self, new_order: int) -> "TruncatedSeries":
        if not 0 <= new_order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {new_order}")
        return TruncatedSeries(self.coeffs[: new_order + 1])

    def scale_argument(self, c) -> "TruncatedSeries":
        """Substitute t -> c*t, i.e. coefficient n picks up a factor c^n."""
        out = []
        power = Rat(1)
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return TruncatedSeries(out)

    def derivative(self) -> "TruncatedSeries":
        """d/dt, truncated at T-1."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 truncation has no terms")
        return TruncatedSeries([n * self.coeffs[n] for n in range(1, self.order + 1)])

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the truncation order.

        Standard recursive convolution: b_0 = a_0^(-1) and
        b_n = -a_0^(-1) * sum_{k=1..n} a_k b_{n-k}.
        """
        try:
            c0_inv = invert_constant(self.coeffs[0])
        except ZeroDivisionError as exc:
            raise NonInvertibleConstantTerm(str(exc)) from exc
        out = [c0_inv]
        for n in range(1, self.order + 1):
            acc = Rat(0)
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a == 0:
                    continue
                acc = acc + a * out[n - k]
            out.append(-(c0_inv * acc))
        return TruncatedSeries(out)

    def to_jsonable(self):
        from .exact_ring import elem_to_jsonable

        return [elem_to_jsonable(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def log_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """a'/a, truncated at T-1 (a' already lives there)."""
    deriv = a.derivative()
    return deriv * a.truncate(a.order - 1).inverse()


def apply_t_ddt(a: TruncatedSeries) -> TruncatedSeries:
    """The operator t*d/dt: coefficient n becomes n*c_n; order unchanged."""
    return TruncatedSeries([n * c for n, c in enumerate(a.coeffs)])


def build_E(X: Sequence[RingElem], T: int) -> TruncatedSeries:
    """prod (1 + t*x_i) truncated at T; coefficient k is e_k(X)."""
    result = TruncatedSeries.one(T)
    for x in X:
        result = result * TruncatedSeries([Rat(1), x][: T + 1], order=T)
    return result


def build_H(X: Sequence[RingElem], T: int) -> TruncatedSeries:
    """prod (1 - t*x_i)^(-1) truncated at T; coefficient k is h_k(X)."""
    result = TruncatedSeries.one(T)
    for x in X:
        result = result * TruncatedSeries([Rat(1), -x][: T + 1], order=T).inverse()
    return result


def build_P(X: Sequence[RingElem], T: int) -> TruncatedSeries:
    """sum of geometric expansions x/(1 - t*x); coefficient k is p_{k+1}(X)."""
    out = [Rat(0)] * (T + 1)
    for x in X:
        power = x
        for k in range(T + 1):
            out[k] = out[k] + power
            power = power * x
    return TruncatedSeries(out)
