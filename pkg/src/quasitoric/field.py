"""Exact scalars: Q and real algebraic extensions Q(alpha).

A field handle carries a monic squarefree minimal polynomial with rational
coefficients together with an isolating interval for one of its real roots.
Elements are dense power-basis polynomials in alpha with Fraction
coefficients, so equality is coefficient equality and every arithmetic
operation is exact.  Sign determination refines the isolating interval by
bisection until interval evaluation of the element excludes zero; Sturm
chains make root counting (and hence isolation) decidable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZero,
    MixedFields,
    MultipleRootsInInterval,
    NoRootInInterval,
    NotInvertible,
    NotSquarefree,
    ParseError,
)

RationalLike = Union[int, Fraction, str]

# Number of futile bisections of the isolating interval before running the
# gcd test that detects a reducible modulus (an exact zero with nonzero
# coefficients; impossible over an irreducible modulus).
_REDUCIBILITY_CHECK_AFTER = 12


def parse_rational(text: RationalLike) -> Fraction:
    """Parse integer or "p/q" text into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {text!r}") from exc
    raise ParseError(f"not a rational: {text!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# dense polynomials over Q, coefficients ascending
# ---------------------------------------------------------------------------

def _trim(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def _deg(p: Sequence[Fraction]) -> int:
    return len(p) - 1


def _poly_add(p, q):
    n = max(len(p), len(q))
    return _trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
        for i in range(n)
    ])


def _poly_neg(p):
    return tuple(-c for c in p)


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _poly_divmod(p, q):
    """Exact division with remainder in Q[x]; q must be nonzero."""
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(_trim(p))
    quot = [Fraction(0)] * max(0, len(rem) - len(q) + 1)
    dq = _deg(q)
    lead = q[-1]
    while len(rem) - 1 >= dq and rem:
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
        rem = list(_trim(rem))
    return _trim(quot), _trim(rem)


def _poly_gcd(p, q):
    """Monic gcd in Q[x]."""
    a, b = _trim(p), _trim(q)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _poly_xgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g, g the monic gcd."""
    a, b = _trim(p), _trim(q)
    sa, sb = (Fraction(1),), ()
    ta, tb = (), (Fraction(1),)
    while b:
        quo, rem = _poly_divmod(a, b)
        a, b = b, rem
        sa, sb = sb, _poly_add(sa, _poly_neg(_poly_mul(quo, sb)))
        ta, tb = tb, _poly_add(ta, _poly_neg(_poly_mul(quo, tb)))
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
        sa = tuple(c / lead for c in sa)
        ta = tuple(c / lead for c in ta)
    return a, sa, ta


def _poly_derivative(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _poly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _interval_eval(p, lo: Fraction, hi: Fraction):
    """Evaluate p over [lo, hi] by interval Horner; returns (min, max)."""
    if lo == hi:
        v = _poly_eval(p, lo)
        return v, v
    alo = ahi = Fraction(0)
    for c in reversed(p):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def _sturm_chain(p):
    chain = [_trim(p), _poly_derivative(p)]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        chain.append(_poly_neg(r))
    chain.pop()
    return chain


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(p, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    chain = _sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

class RealAlgebraicField:
    """Q(alpha) for alpha the unique root of a monic squarefree polynomial
    in an isolating interval.  Degree 1 degenerates to Q.

    The isolating interval only ever shrinks (refinements are cached on the
    handle); every cached state isolates the same root, so sharing a handle
    across threads stays sound.
    """

    __slots__ = ("minpoly", "_lo", "_hi")

    def __init__(self, minpoly: Iterable[RationalLike],
                 interval: tuple[RationalLike, RationalLike]):
        poly = _trim([parse_rational(c) for c in minpoly])
        if _deg(poly) < 1:
            raise ParseError("minimal polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise ParseError("minimal polynomial must be monic")
        lo, hi = (parse_rational(interval[0]), parse_rational(interval[1]))
        if not lo < hi:
            raise ParseError("interval endpoints must satisfy lo < hi")
        g = _poly_gcd(poly, _poly_derivative(poly))
        if _deg(g) > 0:
            raise NotSquarefree(
                f"gcd with derivative has degree {_deg(g)}")
        if _poly_eval(poly, lo) == 0 or _poly_eval(poly, hi) == 0:
            raise NoRootInInterval(
                "minimal polynomial vanishes at an interval endpoint")
        roots = _count_roots(poly, lo, hi)
        if roots == 0:
            raise NoRootInInterval("no root of the minimal polynomial in "
                                   f"[{lo}, {hi}]")
        if roots > 1:
            raise MultipleRootsInInterval(
                f"{roots} roots of the minimal polynomial in [{lo}, {hi}]")
        self.minpoly = poly
        self._lo = lo
        self._hi = hi

    # -- basic data --

    @property
    def degree(self) -> int:
        return _deg(self.minpoly)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def __repr__(self):
        terms = " + ".join(f"{c}*x^{i}" for i, c in enumerate(self.minpoly)
                           if c != 0)
        return f"RealAlgebraicField({terms} = 0 in [{self._lo}, {self._hi}])"

    def is_rational_field(self) -> bool:
        return self.degree == 1

    def same_field(self, other: "RealAlgebraicField") -> bool:
        """Same minimal polynomial and same isolated root."""
        if self is other:
            return True
        if self.minpoly != other.minpoly:
            return False
        lo = max(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if lo >= hi:
            # Disjoint (or touching) cached intervals isolate distinct roots:
            # each interval contains its root strictly inside.
            return False
        return _count_roots(self.minpoly, lo, hi) == 1

    # -- interval refinement --

    def refine(self) -> tuple[Fraction, Fraction]:
        """One bisection step; keeps the root inside, never grows."""
        lo, hi = self._lo, self._hi
        if lo == hi:
            return lo, hi
        mid = (lo + hi) / 2
        vmid = _poly_eval(self.minpoly, mid)
        if vmid == 0:
            # The isolated root is the rational midpoint itself.
            self._lo = self._hi = mid
        elif (_poly_eval(self.minpoly, lo) < 0) != (vmid < 0):
            self._hi = mid
        else:
            self._lo = mid
        return self._lo, self._hi

    def refine_below(self, width: Fraction) -> tuple[Fraction, Fraction]:
        while self._hi - self._lo > width:
            self.refine()
        return self._lo, self._hi

    # -- element constructors --

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, "p/q" text, coefficient list, or
        element of an equivalent field into this field."""
        if isinstance(value, FieldElement):
            if value.field is self or self.same_field(value.field):
                return FieldElement(self, value.coeffs)
            raise MixedFields("element belongs to a different field")
        if isinstance(value, (int, Fraction, str)):
            coeffs = [parse_rational(value)]
        else:
            coeffs = [parse_rational(c) for c in value]
        if len(coeffs) > self.degree:
            extra = _trim(coeffs)
            if len(extra) > self.degree:
                raise ParseError(
                    f"coefficient list longer than field degree {self.degree}")
            coeffs = list(extra)
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def alpha(self) -> "FieldElement":
        """The isolated root as an element."""
        if self.degree == 1:
            return self.element(-self.minpoly[0])
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return FieldElement(self, tuple(coeffs))


def rational_field() -> RealAlgebraicField:
    """The degree-1 field Q (alpha = 0)."""
    return RealAlgebraicField(["0", "1"], ("-1", "1"))


class FieldElement:
    """Immutable power-basis element of a RealAlgebraicField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: RealAlgebraicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    # -- coercion --

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if self.field.same_field(other.field):
                return FieldElement(self.field, other.coeffs)
            raise MixedFields("operands belong to different fields")
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    # -- ring structure --

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(
            a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(
            a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = _poly_mul(self.coeffs, o.coeffs)
        _, rem = _poly_divmod(prod, self.field.minpoly)
        coeffs = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return FieldElement(self.field, tuple(coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        g, s, _ = _poly_xgcd(_trim(self.coeffs), self.field.minpoly)
        if _deg(g) > 0:
            raise NotInvertible(
                "element shares a factor with the modulus; "
                "the declared minimal polynomial is reducible")
        _, rem = _poly_divmod(s, self.field.minpoly)
        coeffs = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return FieldElement(self.field, tuple(coeffs))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- equality, ordering, sign --

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, FieldElement) \
            else other
        if o is None or not isinstance(o, FieldElement):
            return NotImplemented
        if o.field is not self.field and not self.field.same_field(o.field):
            return False
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field.minpoly))

    def __bool__(self):
        return not self.is_zero()

    def sign(self) -> int:
        """Exact sign of the real embedding: -1, 0, or +1."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coeffs[0] > 0 else -1
        poly = _trim(self.coeffs)
        rounds = 0
        while True:
            lo, hi = self.field.interval
            vlo, vhi = _interval_eval(poly, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            if lo == hi:
                # alpha is the rational point lo and the element vanishes
                # there: only possible for a reducible modulus.
                raise NotInvertible(
                    "element with nonzero coefficients evaluates to zero; "
                    "the declared minimal polynomial is reducible")
            rounds += 1
            if rounds == _REDUCIBILITY_CHECK_AFTER:
                g = _poly_gcd(poly, self.field.minpoly)
                if _deg(g) > 0 and _count_roots(g, lo, hi) > 0:
                    raise NotInvertible(
                        "element vanishes at alpha; the declared minimal "
                        "polynomial is reducible")
            self.field.refine()

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- integer parts and decimal display --

    def floor(self) -> int:
        if self.is_rational():
            c = self.coeffs[0]
            return c.numerator // c.denominator
        poly = _trim(self.coeffs)
        rounds = 0
        while True:
            lo, hi = self.field.interval
            vlo, vhi = _interval_eval(poly, lo, hi)
            flo = vlo.numerator // vlo.denominator
            fhi = vhi.numerator // vhi.denominator
            if flo == fhi:
                return flo
            rounds += 1
            if rounds == _REDUCIBILITY_CHECK_AFTER:
                g = _poly_gcd(poly, self.field.minpoly)
                if _deg(g) > 0 and _count_roots(g, lo, hi) > 0:
                    raise NotInvertible(
                        "element vanishes at alpha; the declared minimal "
                        "polynomial is reducible")
            self.field.refine()

    def decimal(self, significant: int = 12) -> str:
        """Plain-decimal approximation at the given number of significant
        digits (display only; derived from exact comparisons)."""
        s = self.sign()
        if s == 0:
            return "0"
        mag = -self if s < 0 else self
        # leading-digit exponent e with 10^e <= mag < 10^(e+1)
        e = 0
        while mag >= Fraction(10) ** (e + 1):
            e += 1
        while mag < Fraction(10) ** e:
            e -= 1
        scale = Fraction(10) ** (significant - 1 - e)
        scaled = mag * scale
        if scaled.is_rational():
            n = _round_half_even(scaled.as_fraction())
        else:
            # irrational: never a tie, floor(x + 1/2) is the rounding
            n = (scaled + Fraction(1, 2)).floor()
        if n == 10 ** significant:
            n //= 10
            e += 1
        digits = str(n)
        assert len(digits) == significant
        if e >= significant:
            body = digits + "0" * (e - significant + 1)
        elif e >= 0:
            body = digits[:e + 1] + "." + digits[e + 1:]
        else:
            body = "0." + "0" * (-e - 1) + digits
        return ("-" if s < 0 else "") + body

    def __repr__(self):
        if self.is_rational():
            return f"FieldElement({format_rational(self.coeffs[0])})"
        terms = " + ".join(f"{c}*a^{i}" if i else str(c)
                           for i, c in enumerate(self.coeffs) if c != 0)
        return f"FieldElement({terms})"


def _round_half_even(x: Fraction) -> int:
    q, r = divmod(x.numerator, x.denominator)
    double = 2 * r
    if double > x.denominator:
        return q + 1
    if double < x.denominator:
        return q
    return q if q % 2 == 0 else q + 1
