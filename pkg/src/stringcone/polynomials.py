"""Sparse exact polynomial arithmetic in one and two variables.

Two immutable value types cover every polynomial in the package:

* :class:`UnivariatePolynomial` — integer coefficients, nonnegative
  exponents; used for S-, G-, H- and Hilbert-style series data.
* :class:`BivariateLaurentPolynomial` — integer coefficients indexed by
  (possibly negative) exponent pairs of the two formal variables u, v;
  the universal value type for E-functions and B-polynomials.

Coefficients are Python integers, so all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisionNotExact


def _clean(terms: Mapping) -> dict:
    return {k: int(c) for k, c in terms.items() if c != 0}


class UnivariatePolynomial:
    """Sparse polynomial in one variable t with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        cleaned = _clean(coeffs or {})
        if any(k < 0 for k in cleaned):
            raise ValueError("negative exponent in univariate polynomial")
        object.__setattr__(self, "coeffs", dict(sorted(cleaned.items())))

    @classmethod
    def zero(cls) -> "UnivariatePolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "UnivariatePolynomial":
        return cls({0: 1})

    @classmethod
    def t(cls, k: int = 1, c: int = 1) -> "UnivariatePolynomial":
        return cls({k: c})

    @classmethod
    def from_coeff_list(cls, coeffs: Iterable[int]) -> "UnivariatePolynomial":
        return cls({i: c for i, c in enumerate(coeffs)})

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def coeff(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def coeff_list(self, upto: int | None = None) -> list[int]:
        n = self.degree() if upto is None else upto
        return [self.coeff(k) for k in range(max(n, -1) + 1)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, UnivariatePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return UnivariatePolynomial(out)

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivariatePolynomial({k: c * other for k, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UnivariatePolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = UnivariatePolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value: int):
        return sum(c * value**k for k, c in self.coeffs.items())

    def reversed(self, n: int) -> "UnivariatePolynomial":
        """t^n * p(1/t); requires degree(p) <= n."""
        if self.degree() > n:
            raise ValueError("degree exceeds reversal bound")
        return UnivariatePolynomial({n - k: c for k, c in self.coeffs.items()})

    def is_palindromic(self, n: int) -> bool:
        """Whether p(t) == t^n p(1/t)."""
        return self.degree() <= n and self.reversed(n) == self

    def to_bivariate(self, u_exp: int, v_exp: int,
                     sign: int = 1) -> "BivariateLaurentPolynomial":
        """Substitute t -> sign * u^u_exp * v^v_exp."""
        out: dict[tuple[int, int], int] = {}
        for k, c in self.coeffs.items():
            key = (u_exp * k, v_exp * k)
            out[key] = out.get(key, 0) + c * sign**k
        return BivariateLaurentPolynomial(out)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs.items():
            if k == 0:
                parts.append(f"{c}")
            else:
                mono = "t" if k == 1 else f"t^{k}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def truncate_below(p: UnivariatePolynomial, r) -> UnivariatePolynomial:
    """Keep exactly the terms of degree strictly below r (r may be rational)."""
    bound = Fraction(r)
    return UnivariatePolynomial({k: c for k, c in p.coeffs.items() if k < bound})


class Monomial:
    """Signed monomial ±u^a v^b, the only legal substitution image."""

    __slots__ = ("sign", "u", "v")

    def __init__(self, sign: int, u: int, v: int):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.sign = sign
        self.u = u
        self.v = v

    U = None  # populated below
    V = None


Monomial.U = Monomial(1, 1, 0)
Monomial.V = Monomial(1, 0, 1)


class BivariateLaurentPolynomial:
    """Sparse Laurent polynomial in u, v with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned = _clean(terms or {})
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    @classmethod
    def zero(cls) -> "BivariateLaurentPolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "BivariateLaurentPolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "BivariateLaurentPolynomial":
        return cls({(a, b): c})

    def coeff(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, BivariateLaurentPolynomial)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariateLaurentPolynomial(out)

    def __neg__(self):
        return BivariateLaurentPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariateLaurentPolynomial(
                {k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariateLaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariateLaurentPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = BivariateLaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_by_monomial(self, a: int, b: int) -> "BivariateLaurentPolynomial":
        """Exact division by u^a v^b (a plain exponent shift for Laurent terms)."""
        return BivariateLaurentPolynomial(
            {(x - a, y - b): c for (x, y), c in self.terms.items()})

    def require_polynomial(self) -> "BivariateLaurentPolynomial":
        """Assert there are no negative exponents left after cancellations."""
        for (a, b) in self.terms:
            if a < 0 or b < 0:
                raise DivisionNotExact(
                    f"term u^{a} v^{b} has a negative exponent")
        return self

    def min_exponents(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (min(a for a, _ in self.terms), min(b for _, b in self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        def mono(a, b):
            parts = []
            if a:
                parts.append("u" if a == 1 else f"u^{a}")
            if b:
                parts.append("v" if b == 1 else f"v^{b}")
            return "*".join(parts)

        parts = []
        for (a, b), c in self.terms.items():
            m = mono(a, b)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")


def substitute(p: BivariateLaurentPolynomial, image_of_u: Monomial,
               image_of_v: Monomial) -> BivariateLaurentPolynomial:
    """Exact monomial substitution u -> image_of_u, v -> image_of_v."""
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in p.terms.items():
        ua, va = image_of_u.u * a, image_of_u.v * a
        ub, vb = image_of_v.u * b, image_of_v.v * b
        sign = (image_of_u.sign ** (a & 1)) * (image_of_v.sign ** (b & 1))
        key = (ua + ub, va + vb)
        out[key] = out.get(key, 0) + sign * c
    return BivariateLaurentPolynomial(out)


def swap_uv(p: BivariateLaurentPolynomial) -> BivariateLaurentPolynomial:
    return BivariateLaurentPolynomial({(b, a): c for (a, b), c in p.terms.items()})
