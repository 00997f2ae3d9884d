"""Sparse multivariate polynomials with exact coefficients.

Coefficients are either :class:`RationalFunctionK` (generic kappa) or
``Fraction`` (after specialization); the two never need to mix inside
one polynomial, though arithmetic between them is well defined.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .comb import length, linext_key
from .errors import ArityMismatch, IndexOutOfRange, PoleAt, PoleTooDeep
from .scalar import RationalFunctionK, as_rf, eval_at, scaled_limit

__all__ = ["SparsePolynomial", "Permutation", "divided_difference_terms"]


class SparsePolynomial:
    """A finite map exponent -> nonzero coefficient, in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ArityMismatch(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if c:
                clean[exp] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._wrap(nvars, {})

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, i, nvars):
        if not 1 <= i <= nvars:
            raise IndexOutOfRange(f"x_{i} in {nvars} variables")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- queries ---------------------------------------------------------
    def coef(self, alpha):
        alpha = tuple(alpha)
        if len(alpha) != self.nvars:
            raise ArityMismatch(f"exponent {alpha} in {self.nvars} variables")
        return self.terms.get(alpha, 0)

    def __getitem__(self, alpha):
        return self.coef(alpha)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def support(self):
        return set(self.terms)

    def sorted_terms(self):
        """Terms in descending linear-extension order of their exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]),) + linext_key(t[0]), reverse=True)

    def leading_exponent(self):
        if not self.terms:
            return None
        return max(self.terms, key=lambda e: (sum(e),) + linext_key(e))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degrees(self):
        return sorted({sum(e) for e in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d):
        return SparsePolynomial._wrap(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def max_length(self):
        return max((length(e) for e in self.terms), default=0)

    # -- ring structure --------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, SparsePolynomial):
            if other == 0:
                return self
            other = SparsePolynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePolynomial._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._wrap(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return SparsePolynomial.zero(self.nvars)
        return SparsePolynomial._wrap(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return SparsePolynomial(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = SparsePolynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def map_coefficients(self, f):
        return SparsePolynomial(self.nvars, {e: f(c) for e, c in self.terms.items()})

    # -- symmetric group -------------------------------------------------
    def act(self, w):
        if w.n != self.nvars:
            raise ArityMismatch(f"permutation of {w.n} acting on {self.nvars} variables")
        return SparsePolynomial._wrap(self.nvars, {w.act_on(e): c for e, c in self.terms.items()})

    def swap(self, i, j):
        """The transposition (i, j) applied to the variables."""
        def sw(e):
            e = list(e)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            return tuple(e)

        return SparsePolynomial._wrap(self.nvars, {sw(e): c for e, c in self.terms.items()})

    def divided_transposition(self, i, j):
        """(p - (i,j)p) / (x_i - x_j), computed termwise."""
        if i == j:
            raise IndexOutOfRange("need i != j")
        out = {}
        for e, c in self.terms.items():
            for e2, s in divided_difference_terms(e, i - 1, j - 1):
                v = out.get(e2)
                v = (c if s > 0 else -c) if v is None else (v + c if s > 0 else v - c)
                out[e2] = v
        return SparsePolynomial(self.nvars, out)

    def derivative(self, i):
        out = {}
        k = i - 1
        for e, c in self.terms.items():
            if e[k]:
                e2 = e[:k] + (e[k] - 1,) + e[k + 1 :]
                out[e2] = c * e[k]
        return SparsePolynomial._wrap(self.nvars, out)

    def times_variable(self, i):
        k = i - 1
        return SparsePolynomial._wrap(
            self.nvars, {e[:k] + (e[k] + 1,) + e[k + 1 :]: c for e, c in self.terms.items()}
        )

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v = v * x**a
            total = total + v
        return total

    # -- specialization --------------------------------------------------
    def specialize(self, k0):
        out = {}
        for e, c in self.terms.items():
            try:
                out[e] = eval_at(c, k0)
            except PoleAt as exc:
                raise PoleAt(exc.k0, e) from None
        return SparsePolynomial(self.nvars, out)

    def scaled_limit(self, k0, k=0):
        out = {}
        for e, c in self.terms.items():
            try:
                out[e] = scaled_limit(c, k0, k)
            except PoleTooDeep as exc:
                raise PoleTooDeep(exc.k0, exc.order, exc.k, e) from None
        return SparsePolynomial(self.nvars, out)

    # -- text / serialization --------------------------------------------
    def to_dict(self):
        terms = []
        for e, c in self.sorted_terms():
            rf = as_rf(c)
            terms.append({"exp": list(e), "num": rf.num_coeffs(), "den": rf.den_coeffs()})
        return {"nvars": self.nvars, "terms": terms}

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data, rational=False):
        terms = {}
        for t in data["terms"]:
            rf = RationalFunctionK(t["num"], t["den"])
            terms[tuple(t["exp"])] = rf.constant() if rational and rf.is_constant() else rf
        return cls(data["nvars"], terms)

    @classmethod
    def from_json(cls, text, rational=False):
        return cls.from_dict(json.loads(text), rational=rational)

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (f"x{k + 1}" if a == 1 else f"x{k + 1}^{a}") for k, a in enumerate(e) if a
            )
            cs = _coef_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coef_str(c):
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def divided_difference_terms(e, a_idx, b_idx):
    """Exponents (with sign) of (x^e - (a b) x^e) / (x_a - x_b); indices 0-based."""
    a, b = e[a_idx], e[b_idx]
    if a == b:
        return []
    out = []
    base = list(e)
    if a > b:
        for l in range(a - b):
            base[a_idx] = a - 1 - l
            base[b_idx] = b + l
            out.append((tuple(base), 1))
    else:
        for l in range(b - a):
            base[a_idx] = a + l
            base[b_idx] = b - 1 - l
            out.append((tuple(base), -1))
    return out


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is w(i)."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation")

    @property
    def n(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i, j, n):
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        """Composition: (self * other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for i, w in enumerate(self.images, 1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def act_on(self, alpha):
        """(w alpha)_i = alpha_{w^{-1}(i)}."""
        out = [0] * self.n
        for i, a in enumerate(alpha):
            out[self.images[i] - 1] = a
        return tuple(out)
