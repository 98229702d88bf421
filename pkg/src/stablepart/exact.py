"""Exact rationals for small shapes, counting series, and asymptotic constants.

The probability that a fixed partition is stable is an integral over the unit
cube of a polynomial: one factor ``x_h`` per odd-cycle member and one factor
``1 - x_i x_j`` per pair not adjacent in the partition. Rather than expanding
all ``2^pairs`` monomials at once, variables are integrated out one at a
time. At each step the state is the exponent vector of the variables not yet
integrated, and a variable's own monomial ``x^e`` integrates to ``1/(e+1)``.
The result is identical to full expansion, computed over ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import CapExceeded
from .partition import CyclicPartition

PAIR_CAP = 28
GF_PAIR_CAP = 12


def _as_partition(shape) -> CyclicPartition:
    if isinstance(shape, CyclicPartition):
        return shape
    if isinstance(shape, str):
        from .enumeration import ShapeSpec

        shape = ShapeSpec.parse(shape)
    return shape.to_partition()


@dataclass(frozen=True)
class _Integrand:
    """Variables, initial exponents and pair list of the stability integral."""

    members: tuple  # members carrying a variable
    exps: tuple  # initial exponent of x per variable (1 on odd-cycle members)
    pairs: tuple  # (a, b) variable indices, a < b
    unary: bool  # extra (1 - x_k) on every variable (fixed-point case)
    n: int
    m: int


def _integrand(pi: CyclicPartition) -> _Integrand:
    h = pi.fixed_point
    if sum(len(c) == 1 for c in pi.cycles) > 1:
        raise ValueError("at most one fixed point is supported")
    if not pi.is_reduced:
        raise ValueError("shape must be reduced (even cycles of length 2 only)")
    members = tuple(v for v in range(pi.n) if v != h)
    index = {v: k for k, v in enumerate(members)}
    odd = set(pi.odd_members)
    exps = tuple(1 if v in odd else 0 for v in members)
    adj = pi.adjacent_pairs
    pairs = tuple(
        (index[a], index[b])
        for ia, a in enumerate(members)
        for b in members[ia + 1:]
        if (a, b) not in adj
    )
    return _Integrand(members, exps, pairs, h is not None, pi.n, pi.m)


def non_adjacent_pair_count(shape) -> int:
    return len(_integrand(_as_partition(shape)).pairs)


def _forward(k: int, pairs) -> list:
    fwd = [[] for _ in range(k)]
    for a, b in pairs:
        fwd[a].append(b)
    return fwd


@lru_cache(maxsize=256)
def _integrate(itg: _Integrand) -> Fraction:
    k = len(itg.members)
    fwd = _forward(k, itg.pairs)
    states = {itg.exps: Fraction(1)}
    for v in range(k):
        nbrs = fwd[v]
        offs = [w - v - 1 for w in nbrs]
        choices = [(0, 1)] if not itg.unary else [(0, 1), (1, -1)]
        new = {}
        for state, coef in states.items():
            e0 = state[0]
            rest = list(state[1:])
            for bits in product((0, 1), repeat=len(nbrs)):
                deg = sum(bits)
                nxt = rest[:]
                for b, o in zip(bits, offs):
                    if b:
                        nxt[o] += 1
                key = tuple(nxt)
                base = -coef if deg % 2 else coef
                for extra, sign in choices:
                    term = base * sign / (e0 + deg + extra + 1)
                    new[key] = new.get(key, 0) + term
        states = new
    return sum(states.values(), Fraction(0))


def exact_stability_probability(shape, cap: int = PAIR_CAP) -> Fraction:
    """Exact P(partition stable) for a uniform random instance."""
    itg = _integrand(_as_partition(shape))
    if len(itg.pairs) > cap:
        raise CapExceeded(
            f"{len(itg.pairs)} non-adjacent pairs exceeds the expansion cap {cap}"
        )
    return _integrate(itg)


# -- rank generating function -------------------------------------------


@dataclass(frozen=True)
class RankPolynomial:
    """Polynomial in z with exact rational coefficients, stored sparsely."""

    coeffs: tuple  # ((power, Fraction), ...) sorted by power, zeros dropped

    @classmethod
    def from_dict(cls, d: dict) -> RankPolynomial:
        return cls(tuple(sorted((int(k), Fraction(v)) for k, v in d.items() if v != 0)))

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __call__(self, z) -> Fraction:
        z = Fraction(z)
        return sum((c * z**k for k, c in self.coeffs), Fraction(0))

    def total(self) -> Fraction:
        return sum((c for _, c in self.coeffs), Fraction(0))

    @property
    def min_power(self) -> int | None:
        return self.coeffs[0][0] if self.coeffs else None

    @property
    def max_power(self) -> int | None:
        return self.coeffs[-1][0] if self.coeffs else None

    def __str__(self):
        return " + ".join(f"({c})*z^{k}" for k, c in self.coeffs) or "0"


@lru_cache(maxsize=None)
def _beta_int(a: int, b: int) -> Fraction:
    """Integral of x^a (1-x)^b over [0, 1]."""
    return Fraction(math.factorial(a) * math.factorial(b), math.factorial(a + b + 1))


# per pair: exponents of (x_i, 1-x_i, x_j, 1-x_j) and the power of z
_GF_TERMS = ((0, 1, 0, 1, 0), (1, 0, 0, 1, 1), (0, 1, 1, 0, 1))


def exact_rank_gf(shape, cap: int = GF_PAIR_CAP) -> RankPolynomial:
    """Exact E[z^(rank sum) ; partition stable] as a polynomial in z."""
    pi = _as_partition(shape)
    if pi.has_fixed_point:
        raise ValueError("the rank generating function is defined for fixed-point-free shapes")
    itg = _integrand(pi)
    if len(itg.pairs) > cap:
        raise CapExceeded(f"{len(itg.pairs)} non-adjacent pairs exceeds the cap {cap} for the rank GF")
    k = len(itg.members)
    fwd = _forward(k, itg.pairs)
    # state: ((a, b) per remaining variable, z power)
    start = tuple((e, 0) for e in itg.exps)
    states = {(start, 0): Fraction(1)}
    for v in range(k):
        nbrs = fwd[v]
        offs = [w - v - 1 for w in nbrs]
        new = {}
        for (ab, zp), coef in states.items():
            a0, b0 = ab[0]
            rest = ab[1:]
            for terms in product(_GF_TERMS, repeat=len(nbrs)):
                a, b, z = a0, b0, zp
                nxt = list(rest)
                for (ai, bi, aj, bj, zz), o in zip(terms, offs):
                    a += ai
                    b += bi
                    z += zz
                    pa, pb = nxt[o]
                    nxt[o] = (pa + aj, pb + bj)
                key = (tuple(nxt), z)
                new[key] = new.get(key, 0) + coef * _beta_int(a, b)
        states = new
    poly = {}
    shift = itg.n + itg.m
    for ((), z), coef in states.items():
        poly[z + shift] = poly.get(z + shift, 0) + coef
    return RankPolynomial.from_dict(poly)


# -- counting series -----------------------------------------------------


def _exp_series(a: list) -> list:
    """Coefficients of exp(A) given those of A (with a[0] == 0)."""
    order = len(a) - 1
    b = [Fraction(0)] * (order + 1)
    b[0] = Fraction(1)
    for n in range(1, order + 1):
        b[n] = sum((k * a[k] * b[n - k] for k in range(1, n + 1) if a[k]), Fraction(0)) / n
    return b


def _mul_series(a: list, b: list) -> list:
    order = len(a) - 1
    return [sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(order + 1)]


def _odd_cycle_series(order: int) -> list:
    return [Fraction(1, j) if j >= 3 and j % 2 else Fraction(0) for j in range(order + 1)]


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer count, got {x}")
    return x.numerator


def f_odd(m: int) -> int:
    """Permutations of [m] whose cycles are all odd with length >= 3."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _as_int(math.factorial(m) * _exp_series(_odd_cycle_series(m))[m])


def f_odd_by_cycles(m: int) -> dict:
    """k -> number of such permutations with exactly k cycles."""
    a = _odd_cycle_series(m)
    out = {}
    power = [Fraction(1)] + [Fraction(0)] * m  # A^k / k!
    for k in range(0, m // 3 + 1):
        if k:
            power = [c / k for c in _mul_series(power, a)]
        val = _as_int(math.factorial(m) * power[m])
        if val:
            out[k] = val
    return out


def f_odd_weighted(m: int) -> int:
    """Sum over k of k times the number of odd-cycle permutations with k cycles."""
    if m < 0:
        raise ValueError("m must be non-negative")
    a = _odd_cycle_series(m)
    return _as_int(math.factorial(m) * _mul_series(a, _exp_series(a))[m])


def f_even_circuits_weighted(nu: int) -> int:
    """Sum over permutations of [2 nu] with all cycles even and >= 4 of 2^(cycles).

    This equals the sum over mu of 2^(2 mu) f(2 nu, mu) where f counts the
    circuit decompositions with mu circuits: a circuit of length 2j on the
    vertex set of a j-cycle comes with two orientations, which is the extra
    factor of 2 per cycle on top of the 2^mu already counted by the cycles.
    """
    if nu < 0:
        raise ValueError("nu must be non-negative")
    order = 2 * nu
    a = [Fraction(2, j) if j >= 4 and j % 2 == 0 else Fraction(0) for j in range(order + 1)]
    return _as_int(math.factorial(order) * _exp_series(a)[order])


def double_factorial(k: int) -> int:
    if k < -1:
        raise ValueError(f"double factorial needs k >= -1, got {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


# -- expectations --------------------------------------------------------


def _cycle_types(n: int, include_fixed_point: bool):
    """Cycle types (tuples of lengths) of reduced partitions of [n]."""
    parts = [2] + list(range(3, n + 1, 2))

    def rec(rem, max_idx):
        if rem == 0:
            yield ()
            return
        for idx in range(max_idx, -1, -1):
            c = parts[idx]
            if c <= rem:
                for tail in rec(rem - c, idx):
                    yield (c,) + tail

    for t in rec(n, len(parts) - 1):
        yield t
    if include_fixed_point:
        for t in rec(n - 1, len(parts) - 1):
            yield t + (1,)


def labelled_count(cycle_type) -> int:
    """Permutations of [n] with the given cycle type."""
    n = sum(cycle_type)
    denom = 1
    for c in set(cycle_type):
        k = cycle_type.count(c)
        denom *= c**k * math.factorial(k)
    return math.factorial(n) // denom


def exact_expected_partitions(n: int, include_fixed_point: bool = False, cap: int = PAIR_CAP) -> Fraction:
    """Exact expected number of stable reduced partitions of a uniform instance."""
    if n < 2:
        raise ValueError("n must be at least 2")
    from .enumeration import ShapeSpec

    total = Fraction(0)
    for t in _cycle_types(n, include_fixed_point):
        shape = ShapeSpec(t)
        total += labelled_count(t) * exact_stability_probability(shape.to_partition(), cap)
    return total


# -- asymptotics and constants -------------------------------------------


def leading_constant() -> float:
    """Gamma(1/4) / (sqrt(pi e) 2^(1/4)), the growth constant of E[S_n] / n^(1/4)."""
    return math.gamma(0.25) / (math.sqrt(math.pi * math.e) * 2**0.25)


def asymptotic_expected_partitions(n: float) -> float:
    if n < 2:
        raise ValueError("n must be at least 2")
    return leading_constant() * n**0.25


def asymptotic_p_stable(n: int, m: int) -> float:
    """e^(1/2) / (n+m-1)!!, the large-n approximation of P(stable)."""
    if n + m < 1:
        raise ValueError("need n + m >= 1")
    return math.exp(0.5) * float(Fraction(1, double_factorial(n + m - 1)))


def second_moment_integrand(x: float, y: float) -> float:
    return x**-0.5 * math.exp(-(x * x) / 2 - 2 * x * y - y * y)


def second_moment_constant(epsabs: float = 1e-10, epsrel: float = 1e-10) -> float:
    """e^(-3/2) sqrt(2/pi^2) times the double integral of the integrand over the quadrant.

    With x = u^2 the x^(-1/2) singularity disappears: dx/sqrt(x) = 2 du.
    """
    from scipy import integrate

    def f(y, u):
        return 2.0 * math.exp(-(u**4) / 2 - 2 * u * u * y - y * y)

    val, _ = integrate.dblquad(f, 0, math.inf, 0, math.inf, epsabs=epsabs, epsrel=epsrel)
    return math.exp(-1.5) * math.sqrt(2 / math.pi**2) * val


def qn_bound(n: float, c: float | None = None) -> float:
    """2 e c n^(-1/4), the bound on the expected multiple-predecessor fraction."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if c is None:
        c = second_moment_constant()
    return 2 * math.e * c * n**-0.25


def constants() -> dict:
    return {
        "second_moment_constant": second_moment_constant(),
        "leading_constant": leading_constant(),
        "exp_half": math.exp(0.5),
        "gamma_quarter": math.gamma(0.25),
    }


__all__ = [
    "RankPolynomial",
    "exact_stability_probability",
    "exact_rank_gf",
    "non_adjacent_pair_count",
    "f_odd",
    "f_odd_by_cycles",
    "f_odd_weighted",
    "f_even_circuits_weighted",
    "double_factorial",
    "labelled_count",
    "exact_expected_partitions",
    "leading_constant",
    "asymptotic_expected_partitions",
    "asymptotic_p_stable",
    "second_moment_integrand",
    "second_moment_constant",
    "qn_bound",
    "constants",
]
