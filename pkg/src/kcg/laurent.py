"""Integer Laurent polynomials in canonical form, with complete
factorization into irreducibles over the integers.

Knot polynomials are only defined up to a unit +-t^k, so equality has to
be read modulo that freedom.  The canonical representative fixes it once
and for all: exponents start at zero (offset 0), the constant coefficient
is nonzero and strictly positive, and the top coefficient is nonzero.
Unit equivalence then becomes literal equality of values, and the
canonical form is closed under multiplication (the constant term of a
product is the product of the constant terms).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _intpoly
from .errors import PolynomialError

#: Hard cap on factorization degree; census polynomials stay below 12.
FACTOR_DEGREE_CAP = 64


@dataclass(frozen=True)
class LaurentPoly:
    """Canonical integer Laurent polynomial.

    ``coeffs`` lists coefficients from the lowest exponent up; ``offset``
    is the exponent of the first entry and is always 0 in canonical form.
    Construct via :func:`canonicalize` unless the input is already known
    to be canonical.
    """

    coeffs: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no canonical form")
        if self.offset != 0 or self.coeffs[0] <= 0 or self.coeffs[-1] == 0:
            raise PolynomialError(f"not in canonical form: {self.coeffs!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_text(self) -> str:
        return ";".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return mul(self, other)


ONE = LaurentPoly((1,))


def canonicalize(raw_coeffs, raw_offset: int = 0) -> LaurentPoly:
    """Unique representative of a Laurent polynomial modulo units +-t^k.

    Leading and trailing zero coefficients are stripped (absorbing the
    offset), and the sign is fixed so the constant term is positive.
    Idempotent on canonical input.
    """
    cs = list(raw_coeffs)
    lo = 0
    while lo < len(cs) and cs[lo] == 0:
        lo += 1
    hi = len(cs)
    while hi > lo and cs[hi - 1] == 0:
        hi -= 1
    cs = cs[lo:hi]
    if not cs:
        raise PolynomialError("zero polynomial has no canonical form")
    if cs[0] < 0:
        cs = [-c for c in cs]
    return LaurentPoly(tuple(cs))


def poly_from_text(text: str) -> LaurentPoly:
    """Parse the semicolon encoding, e.g. ``2;-12;30;-39;30;-12;2``."""
    parts = [p.strip() for p in text.split(";")]
    try:
        coeffs = [int(p) for p in parts]
    except ValueError as exc:
        raise PolynomialError(f"bad polynomial encoding: {text!r}") from exc
    return canonicalize(coeffs)


def poly_to_text(p: LaurentPoly) -> str:
    return p.to_text()


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Product of canonical polynomials; canonical by construction."""
    return LaurentPoly(tuple(_intpoly.mul(list(p.coeffs), list(q.coeffs))))


def reciprocal(p: LaurentPoly) -> LaurentPoly:
    """Canonical form of p(1/t): reverse the coefficients, fix the sign."""
    return canonicalize(list(reversed(p.coeffs)))


def is_symmetric(p: LaurentPoly) -> bool:
    """Whether p equals p(1/t) up to a unit."""
    return reciprocal(p) == p


def eval_int(p: LaurentPoly, x: int) -> int:
    """Exact value of the polynomial part at an integer point."""
    return _intpoly.eval_at(list(p.coeffs), x)


@dataclass(frozen=True)
class Factorization:
    """Multiset of irreducible canonical factors with multiplicities.

    ``unit * prod(factor**mult)`` reproduces the factored polynomial
    exactly; with the positive-constant canonical form the unit always
    works out to +1.  Factors are sorted by (degree, coefficients).
    """

    unit: int
    factors: tuple[tuple[LaurentPoly, int], ...]

    def expand(self) -> LaurentPoly:
        if self.unit != 1:
            raise PolynomialError("unit -1 has no canonical expansion")
        out = ONE
        for q, m in self.factors:
            for _ in range(m):
                out = mul(out, q)
        return out

    def multiplicity(self, q: LaurentPoly) -> int:
        for fac, m in self.factors:
            if fac == q:
                return m
        return 0

    def divides(self, other: "Factorization") -> bool:
        """Multiset inclusion of this factorization in ``other``."""
        return all(other.multiplicity(q) >= m for q, m in self.factors)

    @property
    def irreducible(self) -> bool:
        return (len(self.factors) == 1 and self.factors[0][1] == 1
                and self.factors[0][0].degree >= 1)

    def __mul__(self, other: "Factorization") -> "Factorization":
        merged: dict[LaurentPoly, int] = {}
        for q, m in self.factors + other.factors:
            merged[q] = merged.get(q, 0) + m
        return Factorization(self.unit * other.unit, _sorted_factors(merged))


def _sorted_factors(table: dict[LaurentPoly, int]):
    return tuple(sorted(table.items(), key=lambda item: (item[0].degree, item[0].coeffs)))


def factor(p: LaurentPoly) -> Factorization:
    """Complete factorization into irreducibles over the integers.

    Constant prime factors of the content are emitted as degree-0
    factors, so expanding the result always reproduces the input exactly.
    """
    if p.degree > FACTOR_DEGREE_CAP:
        raise PolynomialError("degree limit exceeded")
    table: dict[LaurentPoly, int] = {}
    cont, prim = _intpoly.primitive(list(p.coeffs))
    for q, e in _intpoly.factor_int(cont):
        if q != 1:
            table[LaurentPoly((q,))] = e
    if _intpoly.degree(prim) >= 1:
        if prim[-1] < 0:
            prim = _intpoly.neg(prim)
        for raw, m in _intpoly.factor_primitive(prim):
            fac = canonicalize(raw)
            table[fac] = table.get(fac, 0) + m
    result = Factorization(1, _sorted_factors(table))
    if result.expand() != p:
        raise AssertionError("factorization failed to reproduce the input")
    return result
