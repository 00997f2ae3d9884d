"""Exact scalars: rationals and univariate rational functions in kappa.

Rationals are ``fractions.Fraction``.  Elements of Q(kappa) are
:class:`RationalFunctionK`, stored as a reduced quotient of two integer
polynomials (``flint.fmpz_poly``) with the denominator's leading
coefficient positive.  Because the form is canonical, equality is a
structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from flint import fmpq_poly, fmpz_poly

from .errors import PoleAt, PoleTooDeep, ZeroDenominator, ZeroFunction

__all__ = [
    "Fraction",
    "UniPolyK",
    "RationalFunctionK",
    "KAPPA",
    "ONE",
    "ZERO",
    "affine",
    "as_rf",
    "normalize",
    "eval_at",
    "vanishing_order",
    "scaled_limit",
    "parse_rational",
    "format_rational",
]

# polynomial in kappa with rational coefficients, ascending order
UniPolyK = fmpq_poly

_ZERO = fmpz_poly([])
_ONE = fmpz_poly([1])


def _to_fmpz_pair(obj):
    """Return (num, den) integer polynomials representing ``obj``."""
    if isinstance(obj, fmpz_poly):
        return obj, _ONE
    if isinstance(obj, int):
        return fmpz_poly([obj]), _ONE
    if isinstance(obj, _RationalABC):
        return fmpz_poly([int(obj.numerator)]), fmpz_poly([int(obj.denominator)])
    if isinstance(obj, fmpq_poly):
        return obj.numer(), fmpz_poly([int(obj.denom())])
    if isinstance(obj, (list, tuple)):
        coeffs = [Fraction(c) for c in obj]
        den = 1
        for c in coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        return fmpz_poly([int(c * den) for c in coeffs]), fmpz_poly([den])
    if isinstance(obj, RationalFunctionK):
        return obj.num, obj.den
    raise TypeError(f"cannot interpret {obj!r} as a polynomial in kappa")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _reduce(num, den):
    if den == _ZERO:
        raise ZeroDenominator("denominator is the zero polynomial")
    if num == _ZERO:
        return _ZERO, _ONE
    g = num.gcd(den)
    if g != _ONE:
        num = num // g
        den = den // g
    if den[den.degree()] < 0:
        num, den = -num, -den
    return num, den


class RationalFunctionK:
    """An element of Q(kappa) in canonical reduced form.

    >>> RationalFunctionK([-1, 0, 1], [-1, 1])
    RationalFunctionK([1, 1], [1])
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n1, d1 = _to_fmpz_pair(num)
        n2, d2 = _to_fmpz_pair(den)
        if n2 == _ZERO:
            raise ZeroDenominator("denominator is the zero polynomial")
        self.num, self.den = _reduce(n1 * d2, d1 * n2)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    # -- inspection ------------------------------------------------------
    def is_zero(self):
        return self.num == _ZERO

    def __bool__(self):
        return self.num != _ZERO

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def is_polynomial(self):
        return self.den.degree() == 0 and abs(int(self.den[0])) == 1

    def constant(self):
        """The value as a Fraction; only valid when :meth:`is_constant`."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(int(self.num[0]) if self.num.degree() >= 0 else 0, int(self.den[0]))

    def num_coeffs(self):
        return [int(c) for c in self.num.coeffs()] or [0]

    def den_coeffs(self):
        return [int(c) for c in self.den.coeffs()]

    def to_lists(self):
        return self.num_coeffs(), self.den_coeffs()

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunctionK):
            return other
        if isinstance(other, int):
            return RationalFunctionK._raw(fmpz_poly([other]) if other else _ZERO, _ONE)
        if isinstance(other, _RationalABC):
            return RationalFunctionK._raw(
                fmpz_poly([int(other.numerator)]) if other else _ZERO,
                fmpz_poly([int(other.denominator)]),
            )
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den == o.den:
            return RationalFunctionK._raw(*_reduce(self.num + o.num, self.den))
        g = self.den.gcd(o.den)
        b1 = self.den // g
        d1 = o.den // g
        return RationalFunctionK._raw(*_reduce(self.num * d1 + o.num * b1, b1 * o.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionK._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return ZERO
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        num = (self.num // g1) * (o.num // g2)
        den = (self.den // g2) * (o.den // g1)
        return RationalFunctionK._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDenominator("inverse of zero")
        num, den = self.den, self.num
        if den[den.degree()] < 0:
            num, den = -num, -den
        return RationalFunctionK._raw(num, den)

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

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunctionK._raw(self.num**e, self.den**e) if e else ONE

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((tuple(self.num_coeffs()), tuple(self.den_coeffs())))

    # -- text ------------------------------------------------------------
    def __repr__(self):
        return f"RationalFunctionK({self.num_coeffs()}, {self.den_coeffs()})"

    def __str__(self):
        n = _poly_str(self.num_coeffs())
        if self.den_coeffs() == [1]:
            return n
        d = _poly_str(self.den_coeffs())
        if _nterms(self.num_coeffs()) > 1:
            n = f"({n})"
        if _nterms(self.den_coeffs()) > 1:
            d = f"({d})"
        return f"{n} / {d}"

    def format_lists(self):
        """Ascending coefficient-list form, e.g. ``[3,2] / [1]`` for 3+2k."""
        n, d = self.to_lists()
        return "[" + ",".join(map(str, n)) + "] / [" + ",".join(map(str, d)) + "]"


def _nterms(coeffs):
    return sum(1 for c in coeffs if c)


def _poly_str(coeffs, var="κ"):
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


ZERO = RationalFunctionK._raw(_ZERO, _ONE)
ONE = RationalFunctionK._raw(_ONE, _ONE)
KAPPA = RationalFunctionK._raw(fmpz_poly([0, 1]), _ONE)


def affine(a, b):
    """The rational function a*kappa + b for integers a, b."""
    return RationalFunctionK._raw(*_reduce(fmpz_poly([b, a]), _ONE))


def as_rf(x):
    """Coerce an int, Fraction or RationalFunctionK to RationalFunctionK."""
    out = RationalFunctionK._coerce(x)
    if out is None:
        raise TypeError(f"not a scalar: {x!r}")
    return out


def normalize(num, den):
    """Canonical reduced form of num/den; coefficient lists are ascending in kappa."""
    return RationalFunctionK(num, den)


def _horner(poly, x):
    acc = Fraction(0)
    for c in reversed(poly.coeffs()):
        acc = acc * x + int(c)
    return acc


def eval_at(f, k0):
    """Value of f at kappa = k0 (a rational)."""
    k0 = Fraction(k0)
    if not isinstance(f, RationalFunctionK):
        return Fraction(f)
    d = _horner(f.den, k0)
    if d == 0:
        raise PoleAt(k0)
    return _horner(f.num, k0) / d


def _linear_factor(k0):
    # q*kappa - p for k0 = p/q
    return fmpz_poly([-k0.numerator, k0.denominator])


def _multiplicity(poly, k0):
    lin = _linear_factor(k0)
    count = 0
    while poly.degree() >= 1:
        q, r = divmod(poly, lin)
        if r != _ZERO:
            break
        poly = q
        count += 1
    return count, poly


def vanishing_order(f, k0):
    """Multiplicity of (kappa - k0) in f; negative for a pole."""
    f = as_rf(f)
    if not f:
        raise ZeroFunction("vanishing order of the zero function is undefined")
    k0 = Fraction(k0)
    zn, _ = _multiplicity(f.num, k0)
    zd, _ = _multiplicity(f.den, k0)
    return zn - zd


def scaled_limit(f, k0, k=0):
    """lim_{kappa -> k0} (kappa - k0)^k f(kappa)."""
    f = as_rf(f)
    k0 = Fraction(k0)
    if not f:
        return Fraction(0)
    zn, num_rest = _multiplicity(f.num, k0)
    zd, den_rest = _multiplicity(f.den, k0)
    order = zn - zd
    if order < -k:
        raise PoleTooDeep(k0, order, k)
    if order > -k:
        return Fraction(0)
    # (kappa-k0)^k / (q kappa - p)^k = q^-k
    return _horner(num_rest, k0) / (_horner(den_rest, k0) * Fraction(k0.denominator) ** k)


def parse_rational(text):
    """Parse "p/q" (or an integer) into a Fraction; accepts a unicode minus."""
    return Fraction(str(text).strip().replace("−", "-"))


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
