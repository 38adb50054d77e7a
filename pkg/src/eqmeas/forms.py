"""Integer linear forms in (u, v, w) and canonical factored products of them.

A measure value is stored fully factored: a sign, a positive rational content,
and a product of primitive integer linear forms raised to (possibly negative)
integer exponents.  Canonicalization makes equality of measure values a
structural comparison, with no polynomial arithmetic needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .laurent import ConstantTermPresent, LaurentPoly


class PoleAtPoint(ArithmeticError):
    """A linear form with negative exponent vanishes at the evaluation point."""


@dataclass(frozen=True)
class LinearForm:
    """The form a*u + b*v + c*w with integer coefficients.

    Canonical instances are primitive (gcd of coefficients 1) with the first
    nonzero coefficient positive; ``canonical_linear_form`` produces those.
    """

    a: int
    b: int
    c: int

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c)

    def value_at(self, u: Fraction, v: Fraction, w: Fraction) -> Fraction:
        return self.a * u + self.b * v + self.c * w

    def text(self) -> str:
        return "(%d*u%+d*v%+d*w)" % (self.a, self.b, self.c)

    def __repr__(self) -> str:
        return "LinearForm(%d, %d, %d)" % (self.a, self.b, self.c)


ZERO_FORM = LinearForm(0, 0, 0)


def canonical_linear_form(raw) -> tuple[LinearForm, Fraction]:
    """Split an integer coefficient triple into (primitive canonical form, scalar).

    raw == scalar * form holds exactly.  The zero triple returns the zero form
    with scalar 1; callers that forbid zero must check ``form.is_zero``.
    Canonicalizing a canonical form returns it unchanged with scalar 1.
    """
    a, b, c = raw
    if not (a or b or c):
        return ZERO_FORM, Fraction(1)
    g = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
    lead = a if a else (b if b else c)
    if lead < 0:
        g = -g
    return LinearForm(a // g, b // g, c // g), Fraction(g)


@dataclass(frozen=True)
class FactoredForm:
    """sign * content * product of primitive linear forms with integer exponents.

    ``factors`` is sorted by coefficient triple and never contains a zero
    exponent or a non-canonical form, so ``==`` is the exact equality of the
    represented rational functions in factored shape.
    """

    unit: int
    content: Fraction
    factors: tuple[tuple[LinearForm, int], ...]

    @classmethod
    def one(cls) -> "FactoredForm":
        return cls(1, Fraction(1), ())

    @classmethod
    def from_parts(cls, unit: int, content: Fraction, factor_map: dict) -> "FactoredForm":
        if unit not in (1, -1):
            raise ValueError("unit must be +1 or -1")
        if content <= 0:
            raise ValueError("content must be positive")
        items = tuple(sorted(((f, e) for f, e in factor_map.items() if e), key=lambda fe: fe[0].coeffs))
        return cls(unit, Fraction(content), items)

    @classmethod
    def from_linear(cls, raw, exponent: int = 1) -> "FactoredForm":
        """The value (a*u + b*v + c*w)^exponent, canonicalized.

        Content and sign of the raw triple are absorbed into the product's
        content and unit so that e.g. 2u+2v and u+v contribute the same form.
        """
        form, scalar = canonical_linear_form(raw)
        if form.is_zero:
            raise ValueError("zero linear form has no factored representation")
        if exponent == 0:
            return cls.one()
        unit = -1 if (scalar < 0 and exponent % 2) else 1
        content = Fraction(abs(scalar)) ** exponent
        return cls(unit, content, ((form, exponent),))

    @property
    def is_one(self) -> bool:
        return self.unit == 1 and self.content == 1 and not self.factors

    def _factor_map(self) -> dict:
        return dict(self.factors)

    def __mul__(self, other: "FactoredForm") -> "FactoredForm":
        merged = self._factor_map()
        for form, exp in other.factors:
            merged[form] = merged.get(form, 0) + exp
        return FactoredForm.from_parts(self.unit * other.unit, self.content * other.content, merged)

    def __truediv__(self, other: "FactoredForm") -> "FactoredForm":
        return self * other.pow(-1)

    def pow(self, k: int) -> "FactoredForm":
        if k == 0:
            return FactoredForm.one()
        unit = self.unit if k % 2 else 1
        return FactoredForm.from_parts(unit, self.content ** k, {f: e * k for f, e in self.factors})

    def negated(self) -> "FactoredForm":
        return FactoredForm(-self.unit, self.content, self.factors)

    def value_at(self, point) -> Fraction:
        """Exact evaluation at (u, v, w).

        A vanishing factor with positive exponent makes the value 0; a
        vanishing factor with negative exponent raises PoleAtPoint.
        """
        u, v, w = point
        values = []
        for form, exp in self.factors:
            val = form.value_at(u, v, w)
            if val == 0 and exp < 0:
                raise PoleAtPoint("%s vanishes at (%s, %s, %s)" % (form.text(), u, v, w))
            values.append((val, exp))
        result = self.unit * self.content
        for val, exp in values:
            result *= Fraction(val) ** exp
        return result

    def permuted(self, axis_map) -> "FactoredForm":
        """Send the coefficient of axis j to axis axis_map[j] in every factor.

        Re-canonicalization may flip a form's sign; the flip is absorbed into
        the unit.  Used for the u<->v and (u,v,w)-permutation symmetry checks.
        """
        unit = self.unit
        content = self.content
        factors: dict = {}
        for form, exp in self.factors:
            raw = [0, 0, 0]
            for j, coeff in enumerate(form.coeffs):
                raw[axis_map[j]] = coeff
            newform, scalar = canonical_linear_form(raw)
            if scalar < 0 and exp % 2:
                unit = -unit
            content *= Fraction(abs(scalar)) ** exp
            factors[newform] = factors.get(newform, 0) + exp
        return FactoredForm.from_parts(unit, content, factors)

    def text(self) -> str:
        head = "%+d * %d/%d" % (self.unit, self.content.numerator, self.content.denominator)
        tail = "".join(" * %s^%d" % (form.text(), exp) for form, exp in self.factors)
        return head + tail

    def json_dict(self) -> dict:
        return {
            "unit": self.unit,
            "content": "%d/%d" % (self.content.numerator, self.content.denominator),
            "factors": [{"form": list(form.coeffs), "exp": exp} for form, exp in self.factors],
        }

    def __repr__(self) -> str:
        return "FactoredForm[%s]" % self.text()


def swap_product(poly: LaurentPoly, multiplier: int = 1) -> FactoredForm:
    """Turn a constant-term-free Laurent polynomial into a product of forms.

    Each monomial becomes one linear form: a 2-axis term r^i s^j maps to
    i*u - j*v, a 3-axis term r^i s^j t^k maps to i*u + j*v + k*w.  The term's
    coefficient times ``multiplier`` becomes the factor's exponent, so the
    additive structure of the polynomial becomes multiplicative.
    """
    if multiplier not in (1, -1):
        raise ValueError("multiplier must be +1 or -1")
    if poly.constant_term():
        raise ConstantTermPresent("swap is undefined for polynomials with a constant term")
    result = FactoredForm.one()
    for exps, coeff in poly.sorted_terms():
        if poly.axes == 2:
            raw = (exps[0], -exps[1], 0)
        else:
            raw = exps
        result = result * FactoredForm.from_linear(raw, multiplier * coeff)
    return result
