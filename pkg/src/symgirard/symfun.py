"""Symmetric functions of a finite variable set, two ways.

The definitional path enumerates monomials directly: ``elementary`` sums
products over strictly increasing index subsets, ``complete`` over weakly
increasing index tuples, ``power_sum`` sums k-th powers, and ``monomial``
sums the distinct monomials with a given exponent partition.  These are the
testing oracles.

``basis_table`` is the fast path: it computes the same e/h values from the
power sums through the Newton-Girard recurrences

    n*e_n = sum_{k=1..n} (-1)^(k-1) * p_k * e_{n-k}
    n*h_n = sum_{k=1..n}            p_k * h_{n-k}

and the two paths agreeing exactly on every input is itself one of the
verified identities.

Conventions enforced everywhere: e_0 = h_0 = 1 and p_0 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_ring import Rat, RingElem, UniPoly, as_scalar, is_scalar
from .partitions import Partition, validate_partition
from .report import VerifyReport

VariableSet = tuple


def variable_set(values) -> VariableSet:
    """Normalize a sequence of scalars/polynomials into a variable set tuple.

    Entries must share one coefficient domain: scalars freely mix with
    polynomials in a single indeterminate, never two indeterminates.
    """
    vals = tuple(v if isinstance(v, UniPoly) else as_scalar(v) for v in values)
    names = {v.name for v in vals if isinstance(v, UniPoly)}
    if len(names) > 1:
        raise ValueError(f"variable set mixes indeterminates {sorted(names)}")
    return vals


def elementary(X: Sequence[RingElem], k: int) -> RingElem:
    """e_k by direct enumeration over strictly increasing index subsets."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Rat(1)
    xs = list(X)
    if k > len(xs):
        return Rat(0)
    total = Rat(0)

    def accumulate(start, depth, prefix):
        nonlocal total
        if depth == k:
            total = total + prefix
            return
        # leave room for the remaining k-depth factors
        for i in range(start, len(xs) - (k - depth) + 1):
            accumulate(i + 1, depth + 1, prefix * xs[i])

    accumulate(0, 0, Rat(1))
    return total


def complete(X: Sequence[RingElem], k: int) -> RingElem:
    """h_k by direct enumeration over weakly increasing index tuples."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Rat(1)
    xs = list(X)
    total = Rat(0)

    def accumulate(start, depth, prefix):
        nonlocal total
        if depth == k:
            total = total + prefix
            return
        for i in range(start, len(xs)):
            accumulate(i, depth + 1, prefix * xs[i])

    accumulate(0, 0, Rat(1))
    return total


def power_sum(X: Sequence[RingElem], k: int) -> RingElem:
    """p_k = sum of k-th powers; p_0 is 0 by convention."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Rat(0)
    total = Rat(0)
    for x in X:
        total = total + x**k
    return total


def _distinct_exponent_vectors(exps: tuple[int, ...]):
    """All distinct orderings of the exponent multiset, each exactly once."""
    counts = {}
    for e in exps:
        counts[e] = counts.get(e, 0) + 1
    n = len(exps)
    vec = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(vec)
            return
        for e in list(counts):
            if counts[e] == 0:
                continue
            counts[e] -= 1
            vec[pos] = e
            yield from rec(pos + 1)
            counts[e] += 1

    yield from rec(0)


def monomial(X: Sequence[RingElem], lam) -> RingElem:
    """m_lam: sum of the distinct monomials whose exponent multiset is lam."""
    lam = validate_partition(lam)
    xs = list(X)
    if len(lam) > len(xs):
        return Rat(0)
    if not lam:
        return Rat(1)
    exps = lam + (0,) * (len(xs) - len(lam))
    total = Rat(0)
    for vec in _distinct_exponent_vectors(exps):
        term = Rat(1)
        for x, e in zip(xs, vec):
            if e:
                term = term * x**e
        total = total + term
    return total


@dataclass(frozen=True)
class BasisTable:
    """e, h, p values for degrees 0..N (p[0] stored as 0)."""

    e: tuple
    h: tuple
    p: tuple


def basis_table(X: Sequence[RingElem], N: int) -> BasisTable:
    """Build e_0..e_N and h_0..h_N from the power sums by the recurrences.

    Division by n is exact in the rational/polynomial coefficient domain.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    p = [power_sum(X, k) for k in range(N + 1)]
    e = [Rat(1)]
    h = [Rat(1)]
    for n in range(1, N + 1):
        acc_e = Rat(0)
        acc_h = Rat(0)
        for k in range(1, n + 1):
            term = p[k] * e[n - k]
            acc_e = acc_e + (term if k % 2 == 1 else -term)
            acc_h = acc_h + p[k] * h[n - k]
        e.append(acc_e * Rat(1, n))
        h.append(acc_h * Rat(1, n))
    return BasisTable(tuple(e), tuple(h), tuple(p))


def verify_newton_e(X: Sequence[RingElem], n: int) -> VerifyReport:
    """Check n*e_n = sum_{k=1..n} (-1)^(k-1) p_k e_{n-k} with brute-force values."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = n * elementary(X, n)
    rhs = Rat(0)
    for k in range(1, n + 1):
        term = power_sum(X, k) * elementary(X, n - k)
        rhs = rhs + (term if k % 2 == 1 else -term)
    return VerifyReport("newton-e", n, lhs, rhs, lhs == rhs, {"size": len(list(X))})


def verify_newton_h(X: Sequence[RingElem], n: int) -> VerifyReport:
    """Check n*h_n = sum_{k=1..n} p_k h_{n-k} with brute-force values."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = n * complete(X, n)
    rhs = Rat(0)
    for k in range(1, n + 1):
        rhs = rhs + power_sum(X, k) * complete(X, n - k)
    return VerifyReport("newton-h", n, lhs, rhs, lhs == rhs, {"size": len(list(X))})


def power_sum_convolutions(X: Sequence[RingElem], n: int):
    """The two signed e/h convolutions that both evaluate to p_n.

        sum_{k=0..n} (-1)^(k-1) * k * e_k * h_{n-k}
        sum_{k=0..n} (-1)^(n-k) * k * h_k * e_{n-k}

    The k=0 terms vanish through the factor k, so the loops stay literal.
    """
    if n < 1:
        raise ValueError("n must be positive")
    e = [elementary(X, k) for k in range(n + 1)]
    h = [complete(X, k) for k in range(n + 1)]
    form_eh = Rat(0)
    form_he = Rat(0)
    for k in range(0, n + 1):
        t1 = k * e[k] * h[n - k]
        form_eh = form_eh + (t1 if (k - 1) % 2 == 0 else -t1)
        t2 = k * h[k] * e[n - k]
        form_he = form_he + (t2 if (n - k) % 2 == 0 else -t2)
    return form_eh, form_he


def verify_power_sum_convolution(X: Sequence[RingElem], n: int) -> VerifyReport:
    """Check that both convolution forms equal the directly computed p_n."""
    form_eh, form_he = power_sum_convolutions(X, n)
    p_n = power_sum(X, n)
    equal = form_eh == p_n and form_he == p_n
    return VerifyReport(
        "power-convolution",
        n,
        p_n,
        (form_eh, form_he),
        equal,
        {"size": len(list(X))},
    )
