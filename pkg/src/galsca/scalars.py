"""Exact scalars: Gaussian rationals and Laurent polynomials in ``u`` (u**2 = c).

Every value is immutable and kept in canonical form, so equality is
structural and hashing is safe.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union


class DivergenceError(ArithmeticError):
    """Raised when a Laurent polynomial has no finite limit as u -> infinity."""


class NonMonomialDivision(ArithmeticError):
    """Raised when dividing by a Laurent polynomial with more than one term."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        return cls(x)

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not o.im:
            return GaussianRational(self.re / o.re, self.im / o.re)
        norm = o.re * o.re + o.im * o.im
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are exact")
        if n < 0:
            return GaussianRational(1) / (self ** (-n))
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return other == self
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({render_gaussian(self)!r})"

    def __str__(self):
        return render_gaussian(self)


Scalar = Union[GaussianRational, "LaurentPoly"]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    """Short constructor; accepts ints, Fractions or 'p/q' strings."""
    return GaussianRational(re, im)


class LaurentPoly:
    """Sparse Laurent polynomial sum_n c_n u**n with Gaussian-rational c_n."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | Iterable[Tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, GaussianRational] = {}
        for n, c in items:
            if not isinstance(n, int):
                raise TypeError("Laurent exponents must be integers")
            c = GaussianRational.coerce(c)
            acc[n] = acc.get(n, ZERO) + c
        object.__setattr__(self, "_terms",
                           tuple(sorted((n, c) for n, c in acc.items() if c)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, coeff, exponent: int) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        return cls({0: x})

    @property
    def terms(self) -> Dict[int, GaussianRational]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def max_degree(self):
        """Highest exponent with a nonzero coefficient (None for 0)."""
        return self._terms[-1][0] if self._terms else None

    def min_degree(self):
        return self._terms[0][0] if self._terms else None

    def coefficient(self, n: int) -> GaussianRational:
        for m, c in self._terms:
            if m == n:
                return c
        return ZERO

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return LaurentPoly((n, -c) for n, c in self._terms)

    def __add__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly(list(self._terms) + list(o._terms))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = []
        for n, c in self._terms:
            for m, d in o._terms:
                out.append((n + m, c * d))
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = LaurentPoly.coerce(other)
        if not o:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not o.is_monomial():
            raise NonMonomialDivision("Laurent division is only defined by monomials")
        m, d = o._terms[0]
        return LaurentPoly((n - m, c / d) for n, c in self._terms)

    def __rtruediv__(self, other):
        return LaurentPoly.coerce(other) / self

    def __eq__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.coefficient(0))
        return hash(self._terms)

    def __repr__(self):
        return f"LaurentPoly({render_laurent(self)!r})"

    def __str__(self):
        return render_laurent(self)


def u_power(n: int) -> LaurentPoly:
    return LaurentPoly({n: 1})


def laurent_limit(p) -> GaussianRational:
    """Limit of ``p`` as u -> infinity.

    Negative powers vanish; any surviving positive power raises
    :class:`DivergenceError`.
    """
    if isinstance(p, GaussianRational):
        return p
    p = LaurentPoly.coerce(p)
    top = p.max_degree()
    if top is not None and top > 0:
        raise DivergenceError(f"{p} diverges as u -> infinity (degree {top})")
    return p.coefficient(0)


# -- canonical strings --------------------------------------------------------

def _render_q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def render_gaussian(x: GaussianRational) -> str:
    """Canonical form ``p/q`` or ``p/q+r/s*i`` (real part always present)."""
    s = _render_q(x.re)
    if x.im:
        sign = "+" if x.im > 0 else "-"
        s += f"{sign}{_render_q(abs(x.im))}*i"
    return s


def render_laurent(p: LaurentPoly) -> str:
    """Canonical form ``(c)*u^n + ...`` with exponents descending; ``0`` for zero."""
    if not p:
        return "0"
    return " + ".join(f"({render_gaussian(c)})*u^{n}" for n, c in reversed(p._terms))


_GAUSS_RE = re.compile(r"^(-?\d+)/(\d+)(?:([+-])(\d+)/(\d+)\*i)?$")
_LAURENT_TERM_RE = re.compile(r"^\((.+)\)\*u\^(-?\d+)$")


def parse_gaussian(s: str) -> GaussianRational:
    m = _GAUSS_RE.match(s.strip())
    if not m:
        raise ValueError(f"not a canonical Gaussian rational: {s!r}")
    re_part = Fraction(int(m.group(1)), int(m.group(2)))
    im_part = Fraction(0)
    if m.group(3):
        im_part = Fraction(int(m.group(4)), int(m.group(5)))
        if m.group(3) == "-":
            im_part = -im_part
    return GaussianRational(re_part, im_part)


def parse_laurent(s: str) -> LaurentPoly:
    s = s.strip()
    if s == "0":
        return LaurentPoly()
    terms = []
    for chunk in s.split(" + "):
        m = _LAURENT_TERM_RE.match(chunk.strip())
        if not m:
            raise ValueError(f"not a canonical Laurent term: {chunk!r}")
        terms.append((int(m.group(2)), parse_gaussian(m.group(1))))
    return LaurentPoly(terms)


def render_scalar(x) -> str:
    if isinstance(x, LaurentPoly):
        return render_laurent(x)
    return render_gaussian(GaussianRational.coerce(x))


def parse_scalar(s: str, domain: str = "constant"):
    if domain == "laurent":
        return parse_laurent(s)
    return parse_gaussian(s)


def scalar_arith(a, b, op: str):
    """Apply ``op`` in {'+', '-', '*', '/'} (unicode variants accepted)."""
    op = {"−": "-", "×": "*", "÷": "/"}.get(op, op)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operator {op!r}")
