"""Torus localization on the Hilbert scheme of points of the plane.

Fixed points of the full torus (t1, t2) are monomial ideals, indexed by
partitions; the box in row r and column c (both 0-based) corresponds to the
monomial x^c y^r.  Per box with arm a and leg l, the tangent space carries
the hook pair of weights

    (a + 1) * t1 - l * t2      and      -a * t1 + (l + 1) * t2,

with the arm paired to the t1 axis.  The tautological fiber at a monomial
ideal is spanned by the monomials of the quotient ring; as functions they
transform with the dual torus weight -(c * t1 + r * t2), so the Chern
character components are ch_k = sum over boxes of (-(c*t1 + r*t2))^k / k!.
This orientation of the two conventions is pinned by the verification
suite: the empty bracket equals 1/(n! t^(2n)), the ch_1 bracket vanishes,
and the ch_2 .. ch_6 brackets match their closed forms.

The diagonal one-parameter torus is reached without any rational-function
arithmetic: substitute t1 = t, t2 = t + eps, invert each tangent factor as
an EpsSeries (a factor whose diagonal part vanishes contributes an exact
eps^(-1) pole), and read off the eps^0 coefficient of the sum over all
partitions.  The sum is regular at eps = 0; surviving negative powers
signal a convention bug and raise :class:`LocalizationError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Union

from .exact import BivarPoly, EpsSeries, ExactError, LaurentPoly, eps_invert


class LocalizationError(ExactError):
    """The fixed-point sum failed an exactness or regularity check."""


@dataclass(frozen=True)
class Partition:
    """A partition as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = self.parts[0]
        conj = tuple(sum(1 for p in self.parts if p > c) for c in range(cols))
        return Partition(conj)

    def boxes(self) -> list[tuple[int, int]]:
        """All boxes (row, col), row-major order."""
        return [(r, c) for r, p in enumerate(self.parts) for c in range(p)]

    def __contains__(self, box: tuple[int, int]) -> bool:
        r, c = box
        return 0 <= r < len(self.parts) and 0 <= c < self.parts[r]

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


PartitionLike = Union[Partition, Iterable[int]]


def _as_partition(lam: PartitionLike) -> Partition:
    if isinstance(lam, Partition):
        return lam
    return Partition(tuple(lam))


def normalize_insertions(ks: Iterable[int]) -> tuple[int, ...]:
    """Canonical (sorted) form of a multiset of ch indices, all >= 0."""
    out = tuple(sorted(int(k) for k in ks))
    if any(k < 0 for k in out):
        raise ValueError("ch indices must be nonnegative")
    return out


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, max(n, 1), [])
    return out


def arm_leg(lam: PartitionLike, box: tuple[int, int]) -> tuple[int, int]:
    """Arm and leg of a box: cells to its right in the row, below in the column."""
    lam = _as_partition(lam)
    if box not in lam:
        raise ValueError(f"box {box} is outside {lam}")
    r, c = box
    arm = lam.parts[r] - c - 1
    leg = lam.conjugate().parts[c] - r - 1
    return arm, leg


def tangent_weights(lam: PartitionLike) -> list[tuple[int, int]]:
    """Tangent weights at the fixed point of ``lam``, as (t1, t2) coefficient pairs.

    Each box contributes the hook pair (a+1, -l) and (-a, l+1); see the
    module docstring for how this pairing is pinned.
    """
    lam = _as_partition(lam)
    out: list[tuple[int, int]] = []
    conj = lam.conjugate().parts
    for r, p in enumerate(lam.parts):
        for c in range(p):
            a = p - c - 1
            l = conj[c] - r - 1
            out.append((a + 1, -l))
            out.append((-a, l + 1))
    return out


def taut_weights(lam: PartitionLike) -> list[tuple[int, int]]:
    """Monomial weights (c, r) of the tautological fiber, one per box."""
    lam = _as_partition(lam)
    return [(c, r) for (r, c) in lam.boxes()]


@dataclass(frozen=True)
class FixedPointData:
    """Cached weight data of one torus-fixed point."""

    partition: Partition
    tangent: tuple[tuple[int, int], ...]
    taut: tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def _fixed_point_data(parts: tuple[int, ...]) -> FixedPointData:
    lam = Partition(parts)
    return FixedPointData(lam, tuple(tangent_weights(lam)), tuple(taut_weights(lam)))


def fixed_point_data(lam: PartitionLike) -> FixedPointData:
    return _fixed_point_data(_as_partition(lam).parts)


@lru_cache(maxsize=None)
def _ch_value(parts: tuple[int, ...], k: int) -> BivarPoly:
    data = _fixed_point_data(parts)
    total = BivarPoly.zero()
    kfac = factorial(k)
    for (i, j) in data.taut:
        # (-(i*t1 + j*t2))^k expanded by the binomial theorem
        terms = {}
        for a in range(k + 1):
            c = Fraction((-1) ** k * comb(k, a) * i ** a * j ** (k - a), kfac)
            if c != 0:
                terms[(a, k - a)] = c
        total = total + BivarPoly(terms)
    return total


def ch_value(lam: PartitionLike, k: int) -> BivarPoly:
    """Chern character component ch_k of the tautological bundle at ``lam``.

    Equals sum over boxes of (-(c*t1 + r*t2))^k / k!, with the dual sign
    because the fiber consists of functions.  ch_0 is the constant n.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _ch_value(_as_partition(lam).parts, int(k))


def _pole_count(data: FixedPointData) -> int:
    return sum(1 for (a, b) in data.tangent if a + b == 0)


@lru_cache(maxsize=None)
def _inverse_euler_eps(parts: tuple[int, ...], eps_on_second: bool) -> EpsSeries:
    """Product over tangent weights of 1/((a+b)t + c1*eps), c1 the eps slope."""
    data = _fixed_point_data(parts)
    budget = _pole_count(data)
    acc = EpsSeries({0: LaurentPoly.constant(1)}, min_exp=0, trunc_order=None)
    for (a, b) in data.tangent:
        slope = b if eps_on_second else a
        c0 = LaurentPoly.monomial("t", 1, a + b) if a + b != 0 else LaurentPoly.zero("t")
        acc = acc * eps_invert(c0, slope, budget)
    return acc


def _contribution(lam: Partition, ks: tuple[int, ...], eps_on_second: bool) -> EpsSeries:
    numerator = BivarPoly.constant(1)
    for k in ks:
        numerator = numerator * _ch_value(lam.parts, k)
    if numerator.is_zero():
        return EpsSeries.zero()
    return numerator.diagonal_eps(eps_on_second) * _inverse_euler_eps(lam.parts, eps_on_second)


def hilb_integral(n: int, ks: Iterable[int] = (), *,
                  eps_on_second: bool = True) -> LaurentPoly:
    """Integral of prod_i ch_{k_i} over the n-point Hilbert scheme of the
    plane, equivariant for the diagonal torus, as a Laurent polynomial in t.

    The empty insertion list gives 1/(n! t^(2n)).  ``eps_on_second`` picks
    which full-torus variable carries the auxiliary eps; the result is
    independent of the choice (the fixed-point set is transpose symmetric).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ks = normalize_insertions(ks)
    total = EpsSeries.zero()
    for lam in enumerate_partitions(n):
        total = total + _contribution(lam, ks, eps_on_second)
    for j in range(total.min_exp, 0):
        if not total.coefficient(j).is_zero():
            raise LocalizationError("localization sum not regular on diagonal")
    return total.coefficient(0)


def hilb_integral_via_limit(n: int, ks: Iterable[int] = (), *,
                            var: str = "t") -> LaurentPoly:
    """Cross-check path for :func:`hilb_integral`, avoiding eps-series entirely.

    Collects the full-torus sum of ch-products over tangent Euler classes as
    a single fraction of bivariate polynomials, expands numerator and
    denominator around the diagonal t2 = t1 - delta, cancels the leading
    power of delta, and evaluates at delta = 0.  Slow (the common
    denominator is the product of all fixed-point Euler classes) but
    structurally independent of the factor-by-factor inversion.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ks = normalize_insertions(ks)
    num = BivarPoly.zero()
    den = BivarPoly.constant(1)
    for lam in enumerate_partitions(n):
        data = fixed_point_data(lam)
        nl = BivarPoly.constant(1)
        for k in ks:
            nl = nl * _ch_value(lam.parts, k)
        dl = BivarPoly.constant(1)
        for (a, b) in data.tangent:
            dl = dl * BivarPoly.linear(a, b)
        num = num * dl + nl * den
        den = den * dl
    num_d = num.expand_near_diagonal(var)
    den_d = den.expand_near_diagonal(var)
    v = min(den_d)
    if any(j < v for j in num_d):
        raise LocalizationError("localization sum not regular on diagonal")
    lead_num = num_d.get(v, LaurentPoly.zero(var))
    return lead_num.div_monomial(den_d[v])
