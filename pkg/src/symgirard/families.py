"""Specialized variable-set families and the closed forms they evaluate to.

Each family builds a finite variable set whose elementary / complete /
power-sum values are classical quantities:

    ONES             {1,...,1} (n copies)      binomial coefficients
    GEOMETRIC_Q      {1, q, ..., q^(n-1)}      q-binomial coefficients
    ARITH_PROG       {r, r+m, ..., r+n*m}      Whitney/Stirling numbers,
                                               Bernoulli-polynomial power sums
    JACOBI_STIRLING  {i*(i-1+2*gamma)}_{i=1..n}  Jacobi-Stirling numbers
    ZETA_NODES       {1/i^s}_{i=1..N}          truncated multiple zeta values
    PRIME_NODES      {1/p^s}_{p prime <= limit}  truncated prime zeta sums

The verify_* operations compute both sides of each correspondence exactly:
the symmetric-function side by definitional enumeration, the closed-form
side by an independent recurrence or integer enumeration.

Index conventions for the recurrence tables, frozen by small-case agreement
with the symmetric-function side (nu_i = i*(i-1+2*gamma)):

    h_k(nu_1..nu_n) = JS2(n+k, n)    JS2(a,b) = JS2(a-1,b-1) + b*(b-1+2g)*JS2(a-1,b)
    e_k(nu_1..nu_n) = JS1(n+1, n+1-k)  JS1(a,b) = JS1(a-1,b-1) + (a-1)*(a-2+2g)*JS1(a-1,b)

with JS1(0,0) = JS2(0,0) = 1, zero outside 0 <= b <= a.  The plain Stirling
tables used for the arithmetic-progression cross-check follow the same
shapes with weights b and -(a-1).

Truncation semantics are honest throughout: ZETA_NODES sums cap the largest
index at N, and PRIME_NODES sums range over integers all of whose prime
factors are <= limit, with exactly k of them counted with multiplicity for
h_k (distinct and squarefree for e_k).  Nothing here estimates tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Mapping, Sequence

from .exact_ring import Rat, RingElem, UniPoly, as_scalar, is_scalar
from .report import VerifyReport
from .symfun import complete, elementary, power_sum, variable_set

KINDS = (
    "ONES",
    "GEOMETRIC_Q",
    "ARITH_PROG",
    "JACOBI_STIRLING",
    "ZETA_NODES",
    "PRIME_NODES",
)


class InvalidParam(ValueError):
    """A family parameter is missing, unknown, or out of range."""


class DomainError(ValueError):
    """Arguments outside an operation's domain (e.g. k > n for q-binomials)."""


# required parameter names, and which of them must be (positive) integers
_PARAM_SPECS = {
    "ONES": ({"n"}, set()),
    "GEOMETRIC_Q": ({"n"}, {"q"}),
    "ARITH_PROG": ({"n", "r", "m"}, set()),
    "JACOBI_STIRLING": ({"n", "gamma"}, set()),
    "ZETA_NODES": ({"N", "s"}, set()),
    "PRIME_NODES": ({"limit", "s"}, set()),
}
_INT_PARAMS = {"n", "N", "s", "limit"}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Mapping

    @classmethod
    def from_json(cls, obj: Mapping) -> "FamilySpec":
        return cls(str(obj.get("kind", "")), dict(obj.get("params", {})))

    def to_jsonable(self) -> dict:
        out = {}
        for k in sorted(self.params):
            v = self.params[k]
            out[k] = v if isinstance(v, int) else str(as_scalar(v))
        return {"kind": self.kind, "params": out}


def _validated_params(spec: FamilySpec) -> dict:
    if spec.kind not in _PARAM_SPECS:
        raise InvalidParam(f"unknown family kind {spec.kind!r}; choices: {KINDS}")
    required, optional = _PARAM_SPECS[spec.kind]
    given = set(spec.params)
    missing = required - given
    unknown = given - required - optional
    if missing:
        raise InvalidParam(f"{spec.kind} missing params: {sorted(missing)}")
    if unknown:
        raise InvalidParam(f"{spec.kind} does not take params: {sorted(unknown)}")
    out = {}
    for name, value in spec.params.items():
        if name in _INT_PARAMS:
            iv = int(value)
            if iv != as_scalar(value):
                raise InvalidParam(f"{name} must be an integer, got {value!r}")
            out[name] = iv
        else:
            out[name] = as_scalar(value)
    if "n" in out and out["n"] < 0:
        raise InvalidParam("n must be nonnegative")
    if "N" in out and out["N"] < 1:
        raise InvalidParam("N must be positive")
    if "s" in out and out["s"] < 1:
        raise InvalidParam("s must be a positive integer")
    if "limit" in out and out["limit"] < 2:
        raise InvalidParam("prime limit must be at least 2")
    return out


def build_family(spec: FamilySpec) -> tuple:
    """Build the variable set a FamilySpec describes."""
    p = _validated_params(spec)
    kind = spec.kind
    if kind == "ONES":
        return variable_set([Rat(1)] * p["n"])
    if kind == "GEOMETRIC_Q":
        q = p.get("q", UniPoly.gen("q"))
        return variable_set([q**i for i in range(p["n"])])
    if kind == "ARITH_PROG":
        r, m = p["r"], p["m"]
        return variable_set([r + j * m for j in range(p["n"] + 1)])
    if kind == "JACOBI_STIRLING":
        g = p["gamma"]
        return variable_set([i * (i - 1 + 2 * g) for i in range(1, p["n"] + 1)])
    if kind == "ZETA_NODES":
        s = p["s"]
        return variable_set([Rat(1, i**s) for i in range(1, p["N"] + 1)])
    if kind == "PRIME_NODES":
        s = p["s"]
        return variable_set([Rat(1, pr**s) for pr in prime_sieve(p["limit"])])
    raise InvalidParam(kind)  # unreachable


# ---------------------------------------------------------------------------
# q-binomials


def q_pochhammer(a: RingElem, n: int, q: RingElem | None = None) -> RingElem:
    """(a; q)_n = prod_{j=0..n-1} (1 - a*q^j); the empty product for n = 0."""
    if n < 0:
        raise DomainError("q-Pochhammer length must be nonnegative")
    if q is None:
        q = UniPoly.gen("q")
    result = UniPoly(q.name, (1,)) if isinstance(q, UniPoly) else Rat(1)
    qpow = result
    for _ in range(n):
        result = result * (1 - a * qpow)
        qpow = qpow * q
    return result


def q_binomial(n: int, k: int) -> UniPoly:
    """Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}), an exact quotient."""
    if k < 0 or n < 0 or k > n:
        raise DomainError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    q = UniPoly.gen("q")
    num = q_pochhammer(q, n)
    den = q_pochhammer(q, k) * q_pochhammer(q, n - k)
    return num.divexact(den)


def _q_power_sum(n: int, k: int) -> UniPoly:
    """(1 - q^(n*k)) / (1 - q^k) as an exact polynomial quotient."""
    q = UniPoly.gen("q")
    one = UniPoly("q", (1,))
    return (one - q ** (n * k)).divexact(one - q**k)


def verify_q_row(n: int, K: int) -> list[VerifyReport]:
    """Geometric family {1, q, ..., q^(n-1)} against its q-binomial closed forms.

    e_k = q^C(k,2) * qbin(n, k), h_k = qbin(n+k-1, k), and
    p_k = (1 - q^(n*k)) / (1 - q^k), all as exact polynomial identities.
    """
    if n < 1:
        raise InvalidParam("n must be positive")
    if K < 0:
        raise InvalidParam("K must be nonnegative")
    X = build_family(FamilySpec("GEOMETRIC_Q", {"n": n}))
    q = UniPoly.gen("q")
    echo = {"family": {"kind": "GEOMETRIC_Q", "params": {"n": n}}}
    reports = []
    for k in range(min(K, n) + 1):
        lhs = elementary(X, k)
        rhs = q ** math.comb(k, 2) * q_binomial(n, k)
        reports.append(VerifyReport("q-row-e", k, lhs, rhs, lhs == rhs, echo))
    for k in range(K + 1):
        lhs = complete(X, k)
        rhs = q_binomial(n + k - 1, k)
        reports.append(VerifyReport("q-row-h", k, lhs, rhs, lhs == rhs, echo))
    for k in range(1, K + 1):
        lhs = power_sum(X, k)
        rhs = _q_power_sum(n, k)
        reports.append(VerifyReport("q-row-p", k, lhs, rhs, lhs == rhs, echo))
    return reports


# ---------------------------------------------------------------------------
# Bernoulli polynomials and arithmetic progressions


def bernoulli_polynomials(K: int) -> list[UniPoly]:
    """B_0(x)..B_K(x) with exact rational coefficients.

    Built from B_n(x) = x^n - sum_{j<n} C(n,j) * B_j(x) / (n-j+1), which
    pins the standard normalization (B_n(1) = B_n(0) for n >= 2).
    """
    if K < 0:
        raise InvalidParam("K must be nonnegative")
    x = UniPoly.gen("x")
    polys = [UniPoly("x", (1,))]
    for n in range(1, K + 1):
        acc = x**n
        for j in range(n):
            acc = acc - polys[j] * Rat(math.comb(n, j), n - j + 1)
        polys.append(acc)
    return polys


def verify_arith_prog_power_sum(r, m, n: int, k: int) -> VerifyReport:
    """Direct power sum over {r, r+m, ..., r+n*m} against the Bernoulli form

        m^k / (k+1) * (B_{k+1}(n+1+r/m) - B_{k+1}(r/m)).
    """
    r, m = as_scalar(r), as_scalar(m)
    if m == 0:
        raise InvalidParam("m must be nonzero (the closed form divides by m)")
    if k < 1:
        raise InvalidParam("k must be positive")
    X = build_family(FamilySpec("ARITH_PROG", {"n": n, "r": r, "m": m}))
    direct = power_sum(X, k)
    B = bernoulli_polynomials(k + 1)[k + 1]
    closed = m**k * Rat(1, k + 1) * (B.evaluate(n + 1 + r / m) - B.evaluate(r / m))
    echo = {
        "family": {"kind": "ARITH_PROG", "params": {"n": n, "r": str(r), "m": str(m)}},
        "k": k,
    }
    return VerifyReport("arith-prog-power-sum", n, direct, closed, direct == closed, echo)


def _weighted_stirling_table(weight, a: int, b: int, cache: dict) -> Rat:
    """Triangle T(a,b) = T(a-1,b-1) + weight(a,b)*T(a-1,b), T(0,0) = 1."""
    if a == 0 and b == 0:
        return Rat(1)
    if b < 0 or b > a:
        return Rat(0)
    key = (a, b)
    if key not in cache:
        cache[key] = _weighted_stirling_table(
            weight, a - 1, b - 1, cache
        ) + weight(a, b) * _weighted_stirling_table(weight, a - 1, b, cache)
    return cache[key]


_S2_CACHE: dict = {}
_S1_CACHE: dict = {}


def stirling2(a: int, b: int) -> Rat:
    """Stirling numbers of the second kind, S(a,b) = b*S(a-1,b) + S(a-1,b-1)."""
    return _weighted_stirling_table(lambda _, col: col, a, b, _S2_CACHE)


def stirling1_signed(a: int, b: int) -> Rat:
    """Signed Stirling numbers of the first kind, s(a,b) = s(a-1,b-1) - (a-1)*s(a-1,b)."""
    return _weighted_stirling_table(lambda row, _: -(row - 1), a, b, _S1_CACHE)


def verify_whitney_stirling_crosscheck(n: int, k: int) -> VerifyReport:
    """The arithmetic progression at (m, r) = (1, 0), i.e. {0, 1, ..., n}.

    Zero entries contribute nothing, so h_k equals h_k(1..n) = S(n+k, n) and
    e_k equals (-1)^k * s(n+1, n+1-k), both against independent recurrences.
    """
    if n < 1:
        raise InvalidParam("n must be positive")
    if k < 0:
        raise InvalidParam("k must be nonnegative")
    X = build_family(FamilySpec("ARITH_PROG", {"n": n, "r": 0, "m": 1}))
    h_val = complete(X, k)
    h_oracle = stirling2(n + k, n)
    e_val = elementary(X, k)
    e_oracle = (-1) ** k * stirling1_signed(n + 1, n + 1 - k)
    equal = h_val == h_oracle and e_val == e_oracle
    return VerifyReport(
        "whitney-stirling",
        n,
        (h_val, e_val),
        (h_oracle, e_oracle),
        equal,
        {"family": {"kind": "ARITH_PROG", "params": {"n": n, "r": "0", "m": "1"}}, "k": k},
    )


# ---------------------------------------------------------------------------
# Jacobi-Stirling numbers

_JS_CACHES: dict = {}


def jacobi_stirling2(a: int, b: int, gamma) -> Rat:
    """Second-kind table with weight b*(b-1+2*gamma) on the staying branch."""
    g = as_scalar(gamma)
    cache = _JS_CACHES.setdefault(("2", g), {})
    return _weighted_stirling_table(
        lambda _, col: col * (col - 1 + 2 * g), a, b, cache
    )


def jacobi_stirling1(a: int, b: int, gamma) -> Rat:
    """First-kind table with weight (a-1)*(a-2+2*gamma) on the staying branch."""
    g = as_scalar(gamma)
    cache = _JS_CACHES.setdefault(("1", g), {})
    return _weighted_stirling_table(
        lambda row, _: (row - 1) * (row - 2 + 2 * g), a, b, cache
    )


def verify_jacobi_stirling_row(n: int, gamma, K: int) -> list[VerifyReport]:
    """Nodes {i*(i-1+2*gamma)} against the first/second-kind recurrences.

    e_k(nu_1..nu_n) = JS1(n+1, n+1-k) for k <= n, and
    h_k(nu_1..nu_n) = JS2(n+k, n) for all k <= K.
    """
    if K < 0:
        raise InvalidParam("K must be nonnegative")
    g = as_scalar(gamma)
    X = build_family(FamilySpec("JACOBI_STIRLING", {"n": n, "gamma": g}))
    echo = {"family": {"kind": "JACOBI_STIRLING", "params": {"n": n, "gamma": str(g)}}}
    reports = []
    for k in range(min(K, n) + 1):
        lhs = elementary(X, k)
        rhs = jacobi_stirling1(n + 1, n + 1 - k, g)
        reports.append(VerifyReport("jacobi-stirling-e", k, lhs, rhs, lhs == rhs, echo))
    for k in range(K + 1):
        lhs = complete(X, k)
        rhs = jacobi_stirling2(n + k, n, g)
        reports.append(VerifyReport("jacobi-stirling-h", k, lhs, rhs, lhs == rhs, echo))
    return reports


# ---------------------------------------------------------------------------
# Prime and zeta node families


def prime_sieve(limit: int) -> list[int]:
    """Primes <= limit by the sieve of Eratosthenes."""
    if limit < 2:
        raise InvalidParam("prime limit must be at least 2")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


def _smallest_prime_factors(bound: int) -> list[int]:
    spf = list(range(bound + 1))
    for i in range(2, int(bound**0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, bound + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def _factor_profile(n: int, spf: Sequence[int]):
    """(distinct prime count, total prime count, squarefree?, largest prime)."""
    omega = big_omega = 0
    squarefree = True
    largest = 1
    while n > 1:
        p = spf[n]
        mult = 0
        while n % p == 0:
            n //= p
            mult += 1
        omega += 1
        big_omega += mult
        squarefree = squarefree and mult == 1
        largest = p
    return omega, big_omega, squarefree, largest


def verify_prime_row(s: int, limit: int, k: int) -> VerifyReport:
    """Prime-reciprocal nodes {1/p^s : p <= limit} against integer enumerations.

    e_k matches the sum of mu(n)^2 / n^s over squarefree n with k distinct
    prime factors, h_k the sum of 1/n^s over n with k prime factors counted
    with multiplicity, both restricted to n whose prime factors are <= limit
    (exactly the finite truncation); p_k matches the truncated prime zeta
    value P(s*k).  Enumeration cost grows like limit^k.
    """
    if s < 1:
        raise InvalidParam("s must be a positive integer")
    if k < 0:
        raise InvalidParam("k must be nonnegative")
    primes = prime_sieve(limit)
    X = build_family(FamilySpec("PRIME_NODES", {"limit": limit, "s": s}))
    e_val = elementary(X, k)
    h_val = complete(X, k)
    p_val = power_sum(X, k)

    if k == 0:
        e_sum, h_sum, p_sum = Rat(1), Rat(1), Rat(0)
    else:
        e_bound = math.prod(primes[-k:]) if k <= len(primes) else 0
        h_bound = primes[-1] ** k
        spf = _smallest_prime_factors(max(e_bound, h_bound))
        e_sum, h_sum = Rat(0), Rat(0)
        for n in range(2, len(spf)):
            omega, big_omega, squarefree, largest = _factor_profile(n, spf)
            if largest > limit:
                continue
            if squarefree and omega == k and n <= e_bound:
                e_sum += Rat(1, n**s)
            if big_omega == k:
                h_sum += Rat(1, n**s)
        p_sum = sum((Rat(1, p ** (s * k)) for p in primes), Rat(0))

    equal = e_val == e_sum and h_val == h_sum and p_val == p_sum
    return VerifyReport(
        "prime-row",
        k,
        (e_val, h_val, p_val),
        (e_sum, h_sum, p_sum),
        equal,
        {"family": {"kind": "PRIME_NODES", "params": {"limit": limit, "s": s}}},
    )


def verify_zeta_row(s: int, N: int, K: int) -> list[VerifyReport]:
    """Reciprocal-power nodes {1/i^s : i <= N} against chain enumerations.

    e_k is the truncated multiple zeta value over strict chains
    n_1 > ... > n_k with n_1 <= N, h_k the star variant over weak chains,
    and p_k the truncated zeta value sum_{i<=N} 1/i^(s*k).
    """
    if s < 1 or N < 1:
        raise InvalidParam("need s >= 1 and N >= 1")
    if K < 0:
        raise InvalidParam("K must be nonnegative")
    X = build_family(FamilySpec("ZETA_NODES", {"N": N, "s": s}))
    echo = {"family": {"kind": "ZETA_NODES", "params": {"N": N, "s": s}}}
    reports = []
    for k in range(K + 1):
        e_val = elementary(X, k)
        e_sum = sum(
            (Rat(1, math.prod(c) ** s) for c in combinations(range(1, N + 1), k)),
            Rat(0),
        )
        reports.append(VerifyReport("zeta-row-e", k, e_val, e_sum, e_val == e_sum, echo))
        h_val = complete(X, k)
        h_sum = sum(
            (
                Rat(1, math.prod(c) ** s)
                for c in combinations_with_replacement(range(1, N + 1), k)
            ),
            Rat(0),
        )
        reports.append(VerifyReport("zeta-row-h", k, h_val, h_sum, h_val == h_sum, echo))
        if k >= 1:
            p_val = power_sum(X, k)
            p_sum = sum((Rat(1, i ** (s * k)) for i in range(1, N + 1)), Rat(0))
            reports.append(
                VerifyReport("zeta-row-p", k, p_val, p_sum, p_val == p_sum, echo)
            )
    return reports
