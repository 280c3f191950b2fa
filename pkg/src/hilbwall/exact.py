"""Exact arithmetic kernels: rationals, sparse Laurent polynomials, and
truncated formal series.

Everything in this module is exact.  Rationals are ``fractions.Fraction``.
A Laurent polynomial is a sparse map ``exponent -> Fraction`` together with
a variable symbol (the symbols in use elsewhere are t, t1, t2, q, z, u and
the fresh cross-check variable s); a bivariate polynomial in (t1, t2) is a
map ``(e1, e2) -> Fraction`` with nonnegative exponents.  Two truncated
series types sit on top:

* :class:`EpsSeries` is a Laurent series in a bookkeeping variable eps with
  Laurent-polynomial coefficients.  It carries a lower exponent bound and an
  explicit truncation order; every binary operation records the pessimistic
  truncation of its operands, so precision loss is always visible.
* :class:`QSeries` is a power series in q known through an explicit order,
  with Fraction or Laurent-polynomial coefficients.

The zero polynomial has an empty term map; constructors prune zero
coefficients.  Canonical rendering sorts terms by ascending exponent and
prints rationals as ``p/q`` (or plain ``p`` when the denominator is one),
so rendered output is byte stable and usable in golden tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional, Union

Scalar = Union[int, Fraction]


class ExactError(ValueError):
    """Domain error in the exact-arithmetic layer."""


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ExactError(f"not an exact scalar: {x!r}")


def rat_arith(a: Scalar, b: Scalar, op: str) -> Fraction:
    """Apply one of '+', '-', '*', '/' to two exact rationals."""
    a, b = _frac(a), _frac(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ExactError("rational division by zero")
        return a / b
    raise ExactError(f"unknown rational operation {op!r}")


class LaurentPoly:
    """Sparse Laurent polynomial in a single variable, exact coefficients.

    Term maps never contain zero coefficients.  Two values compare equal
    exactly when their term maps are equal (a constant is equal to the same
    constant in any variable); binary operations require matching variables
    unless one operand is a constant or a plain scalar.
    """

    __slots__ = ("var", "terms")

    def __init__(self, var: str, terms: Optional[Mapping[int, Scalar]] = None):
        self.var = var
        clean: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _frac(c)
                if c != 0:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def zero(cls, var: str = "t") -> "LaurentPoly":
        return cls(var, {})

    @classmethod
    def constant(cls, c: Scalar, var: str = "t") -> "LaurentPoly":
        return cls(var, {0: _frac(c)})

    @classmethod
    def monomial(cls, var: str, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls(var, {exp: _frac(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def coefficient(self, exp: int) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def homogeneous_degree(self) -> Optional[int]:
        """The single exponent if this is a monomial, else None (zero -> None)."""
        if len(self.terms) == 1:
            return next(iter(self.terms))
        return None

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ExactError(
                    f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        var = self.var if not self.is_constant() else other.var
        return LaurentPoly(var, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        var = self.var if not self.is_constant() else other.var
        return LaurentPoly(var, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ExactError("division by zero")
            return LaurentPoly(self.var, {e: c / other for e, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ExactError("Laurent power requires a nonnegative integer")
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def div_monomial(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly by a nonzero monomial."""
        if not other.is_monomial():
            raise ExactError("divisor must be a nonzero monomial")
        (e, c), = other.terms.items()
        return LaurentPoly(self.var, {e1 - e: c1 / c for e1, c1 in self.terms.items()})

    def rename(self, var: str) -> "LaurentPoly":
        return LaurentPoly(var, self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                pieces.append(str(c))
            elif e == 1:
                pieces.append(f"{c}*{self.var}")
            else:
                pieces.append(f"{c}*{self.var}^{e}")
        text = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text

    def __repr__(self):
        return f"LaurentPoly({self.var!r}, {self.terms!r})"


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Apply one of '+', '-', '*' to two Laurent polynomials."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    raise ExactError(f"unknown Laurent operation {op!r}")


class BivarPoly:
    """Polynomial in (t1, t2) with exact coefficients and exponents >= 0."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[tuple[int, int], Scalar]] = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (e1, e2), c in terms.items():
                if e1 < 0 or e2 < 0:
                    raise ExactError("bivariate exponents must be nonnegative")
                c = _frac(c)
                if c != 0:
                    clean[(int(e1), int(e2))] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "BivarPoly":
        """The linear form a*t1 + b*t2."""
        return cls({(1, 0): a, (0, 1): b})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly.constant(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                key = (a1 + b1, a2 + b2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ExactError("bivariate power requires a nonnegative integer")
        result = BivarPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def swap(self) -> "BivarPoly":
        """Exchange t1 and t2."""
        return BivarPoly({(e2, e1): c for (e1, e2), c in self.terms.items()})

    def diagonal_eps(self, eps_on_second: bool = True, var: str = "t") -> "EpsSeries":
        """Exact expansion under t1 = t, t2 = t + eps (or eps on t1 instead).

        Returns an EpsSeries with no truncation: the input is a polynomial,
        so every eps coefficient is known.
        """
        coeffs: dict[int, dict[int, Fraction]] = {}
        for (e1, e2), c in self.terms.items():
            base, expanded = (e1, e2) if eps_on_second else (e2, e1)
            for j in range(expanded + 1):
                tpow = base + expanded - j
                cj = c * comb(expanded, j)
                coeffs.setdefault(j, {})
                coeffs[j][tpow] = coeffs[j].get(tpow, Fraction(0)) + cj
        polys = {j: LaurentPoly(var, m) for j, m in coeffs.items()}
        return EpsSeries(polys, min_exp=0, trunc_order=None, var=var)

    def expand_near_diagonal(self, var: str = "t") -> dict[int, LaurentPoly]:
        """Expand P(t1, t2) with t2 = t1 - delta as {delta power: poly in t1}.

        Zero coefficients are dropped; the empty dict is the zero polynomial.
        """
        coeffs: dict[int, dict[int, Fraction]] = {}
        for (e1, e2), c in self.terms.items():
            for j in range(e2 + 1):
                cj = c * comb(e2, j) * (-1) ** j
                tpow = e1 + e2 - j
                coeffs.setdefault(j, {})
                coeffs[j][tpow] = coeffs[j].get(tpow, Fraction(0)) + cj
        out = {}
        for j, m in coeffs.items():
            poly = LaurentPoly(var, m)
            if not poly.is_zero():
                out[j] = poly
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        def mono(e1, e2):
            out = []
            if e1:
                out.append("t1" if e1 == 1 else f"t1^{e1}")
            if e2:
                out.append("t2" if e2 == 1 else f"t2^{e2}")
            return "*".join(out)
        pieces = []
        for (e1, e2) in sorted(self.terms):
            c = self.terms[(e1, e2)]
            m = mono(e1, e2)
            pieces.append(f"{c}*{m}" if m else str(c))
        return " + ".join(pieces)

    def __repr__(self):
        return f"BivarPoly({self.terms!r})"


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class EpsSeries:
    """Truncated Laurent series in eps with Laurent-polynomial coefficients.

    ``coefficients`` maps the eps exponent to a Laurent polynomial in t.
    ``min_exp`` is a declared lower bound on occurring exponents, and
    ``trunc_order`` is the last exponent whose coefficient is known
    (``None`` means the series is exact: all higher coefficients are zero).
    Products take the pessimistic truncation ``min(a.trunc + b.min_exp,
    b.trunc + a.min_exp)``, sums the plain minimum.
    """

    __slots__ = ("coefficients", "min_exp", "trunc_order", "var")

    def __init__(self, coefficients: Mapping[int, LaurentPoly], min_exp: int = 0,
                 trunc_order: Optional[int] = None, var: str = "t"):
        clean = {int(j): c for j, c in coefficients.items() if not c.is_zero()}
        if clean:
            lowest = min(clean)
            if lowest < min_exp:
                min_exp = lowest
        if trunc_order is not None:
            if any(j > trunc_order for j in clean):
                raise ExactError("coefficient beyond declared truncation")
            if min_exp > trunc_order:
                raise ExactError("min_exp exceeds trunc_order")
        self.coefficients = clean
        self.min_exp = min_exp
        self.trunc_order = trunc_order
        self.var = var

    @classmethod
    def zero(cls, var: str = "t") -> "EpsSeries":
        return cls({}, min_exp=0, trunc_order=None, var=var)

    def coefficient(self, j: int) -> LaurentPoly:
        """The coefficient of eps^j; raises if j lies beyond the truncation."""
        if self.trunc_order is not None and j > self.trunc_order:
            raise ExactError(f"eps^{j} is beyond the truncation order")
        return self.coefficients.get(j, LaurentPoly.zero(self.var))

    def __add__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        trunc = _min_trunc(self.trunc_order, other.trunc_order)
        out = dict(self.coefficients)
        for j, c in other.coefficients.items():
            cur = out.get(j)
            out[j] = c if cur is None else cur + c
        if trunc is not None:
            out = {j: c for j, c in out.items() if j <= trunc}
        return EpsSeries(out, min_exp=min(self.min_exp, other.min_exp),
                         trunc_order=trunc, var=self.var)

    def __neg__(self):
        return EpsSeries({j: -c for j, c in self.coefficients.items()},
                         min_exp=self.min_exp, trunc_order=self.trunc_order,
                         var=self.var)

    def __sub__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        candidates = []
        if self.trunc_order is not None:
            candidates.append(self.trunc_order + other.min_exp)
        if other.trunc_order is not None:
            candidates.append(other.trunc_order + self.min_exp)
        trunc = min(candidates) if candidates else None
        out: dict[int, LaurentPoly] = {}
        for j1, c1 in self.coefficients.items():
            for j2, c2 in other.coefficients.items():
                j = j1 + j2
                if trunc is not None and j > trunc:
                    continue
                prod = c1 * c2
                cur = out.get(j)
                out[j] = prod if cur is None else cur + prod
        return EpsSeries(out, min_exp=self.min_exp + other.min_exp,
                         trunc_order=trunc, var=self.var)

    def __eq__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset((j, c) for j, c in self.coefficients.items()))

    def __str__(self):
        if not self.coefficients:
            return "0"
        pieces = []
        for j in sorted(self.coefficients):
            c = self.coefficients[j]
            body = f"({c})"
            if j == 0:
                pieces.append(body)
            elif j == 1:
                pieces.append(f"{body}*eps")
            else:
                pieces.append(f"{body}*eps^{j}")
        tail = "" if self.trunc_order is None else f" + O(eps^{self.trunc_order + 1})"
        return " + ".join(pieces) + tail

    def __repr__(self):
        return (f"EpsSeries({self.coefficients!r}, min_exp={self.min_exp}, "
                f"trunc_order={self.trunc_order})")


def eps_invert(c0: LaurentPoly, c1: Scalar, budget: int) -> EpsSeries:
    """Invert the linear factor c0 + c1*eps as an EpsSeries.

    For c0 a nonzero Laurent monomial the result is the geometric expansion
    (1/c0) * sum_j (-c1*eps/c0)^j, truncated at ``budget``.  For c0 = 0 the
    factor is exactly c1*eps, and the inverse is the exact monomial
    eps^(-1)/c1.
    """
    if budget < 0:
        raise ExactError("eps budget must be nonnegative")
    c1 = _frac(c1)
    if c0.is_zero():
        if c1 == 0:
            raise ExactError("cannot invert the zero factor")
        return EpsSeries({-1: LaurentPoly.constant(1 / c1, c0.var)},
                         min_exp=-1, trunc_order=None, var=c0.var)
    if not c0.is_monomial():
        raise ExactError("eps_invert requires a monomial eps^0 part")
    (e, c), = c0.terms.items()
    coeffs: dict[int, LaurentPoly] = {}
    for j in range(budget + 1):
        coeff = (-c1) ** j / c ** (j + 1)
        if coeff != 0:
            coeffs[j] = LaurentPoly.monomial(c0.var, -e * (j + 1), coeff)
    return EpsSeries(coeffs, min_exp=0, trunc_order=budget, var=c0.var)


class QSeries:
    """Power series in q truncated at a known order.

    Coefficients live in any exact ring with +, * and scalar division
    (Fractions or Laurent polynomials in t here).  The order of a binary
    result is the minimum of the operand orders, and equality is compared
    only through the common order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = list(coeffs)
        if not coeffs:
            raise ExactError("a QSeries needs at least the q^0 coefficient")
        self.coeffs = coeffs

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, Scalar]) -> "QSeries":
        out = [Fraction(0)] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                out[n] = _frac(c)
        return cls(out)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int):
        if n > self.order:
            raise ExactError(f"q^{n} is beyond the truncation order")
        return self.coeffs[n]

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ExactError("cannot extend a truncated series")
        return QSeries(self.coeffs[: order + 1])

    def negate_q(self) -> "QSeries":
        """Substitute q -> -q."""
        return QSeries([c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)])

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(m + 1)])

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self.coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        m = min(self.order, other.order)
        out = []
        for n in range(m + 1):
            acc = None
            for i in range(n + 1):
                term = self.coeffs[i] * other.coeffs[n - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return QSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(m + 1))

    def __str__(self):
        return "; ".join(f"q^{n}: {c}" for n, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"QSeries({self.coeffs!r})"


def _unit_inverse(c):
    """Inverse of an invertible coefficient (Fraction or Laurent monomial)."""
    if isinstance(c, LaurentPoly):
        if not c.is_monomial():
            raise ExactError("cannot invert a non-monomial coefficient")
        (e, v), = c.terms.items()
        return LaurentPoly.monomial(c.var, -e, 1 / v)
    c = _frac(c)
    if c == 0:
        raise ExactError("cannot invert zero")
    return 1 / c


def qs_inverse(s: QSeries) -> QSeries:
    """Multiplicative inverse of a series with invertible constant term."""
    inv0 = _unit_inverse(s.coeffs[0])
    out = [inv0]
    for n in range(1, s.order + 1):
        acc = s.coeffs[1] * out[n - 1]
        for i in range(2, n + 1):
            acc = acc + s.coeffs[i] * out[n - i]
        out.append(-(acc * inv0))
    return QSeries(out)


def qs_pow_int(s: QSeries, c: int) -> QSeries:
    """Integer power of a series; negative powers go through qs_inverse."""
    if not isinstance(c, int):
        raise ExactError("series power must be an integer")
    if c < 0:
        return qs_pow_int(qs_inverse(s), -c)
    result = QSeries([Fraction(1)] + [Fraction(0)] * s.order)
    base = s
    n = c
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def qs_exp(s: QSeries) -> QSeries:
    """Exponential of a series with zero constant term."""
    if s.coeffs[0] != 0:
        raise ExactError("qs_exp requires constant term 0")
    order = s.order
    result = QSeries([Fraction(1)] + [Fraction(0)] * order)
    term = result
    for k in range(1, order + 1):
        term = (term * s) * Fraction(1, k)
        result = result + term
    return result


def qs_log(s: QSeries) -> QSeries:
    """Logarithm of a series with constant term 1."""
    if s.coeffs[0] != 1:
        raise ExactError("qs_log requires constant term 1")
    order = s.order
    x = s - QSeries([Fraction(1)] + [Fraction(0)] * order)
    result = QSeries([Fraction(0)] * (order + 1))
    power = QSeries([Fraction(1)] + [Fraction(0)] * order)
    for k in range(1, order + 1):
        power = power * x
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def qs_compose(outer: QSeries, inner: QSeries) -> QSeries:
    """Substitute ``inner`` (constant term 0) into ``outer``."""
    if inner.coeffs[0] != 0:
        raise ExactError("qs_compose requires inner constant term 0")
    order = min(outer.order, inner.order)
    result = QSeries([Fraction(0)] * (order + 1))
    for k in range(order, -1, -1):
        result = result * inner.truncate(order)
        result = result + QSeries([outer.coeffs[k]] + [Fraction(0)] * order)
    return result


def euler_inverse_series(order: int) -> QSeries:
    """The Euler product inverse prod_{m>=1} (1 - q^m)^(-1).

    The q^n coefficient is the number of partitions of n; computed by the
    standard coin-style recurrence.
    """
    if order < 0:
        raise ExactError("order must be nonnegative")
    counts = [0] * (order + 1)
    counts[0] = 1
    for m in range(1, order + 1):
        for i in range(m, order + 1):
            counts[i] += counts[i - m]
    return QSeries([Fraction(c) for c in counts])


def macmahon_series(order: int) -> QSeries:
    """The MacMahon function prod_{m>=1} (1 - q^m)^(-m).

    The q^n coefficient counts plane partitions of n.  Each factor
    (1 - q^m)^(-1) acts as a stride-m prefix sum, applied m times.
    """
    if order < 0:
        raise ExactError("order must be nonnegative")
    counts = [0] * (order + 1)
    counts[0] = 1
    for m in range(1, order + 1):
        for _ in range(m):
            for i in range(m, order + 1):
                counts[i] += counts[i - m]
    return QSeries([Fraction(c) for c in counts])
