"""Sparse Laurent polynomials with exact integer coefficients."""

from __future__ import annotations


class AxesMismatch(ValueError):
    """Raised when combining Laurent polynomials over different variable sets."""


class ConstantTermPresent(ValueError):
    """Raised when a constant term appears where the construction forbids one."""


class LaurentPoly:
    """Finitely supported map from integer exponent tuples to integer coefficients.

    Two axes mean variables (r, s); three axes mean (r, s, t).  Exponents may
    be negative.  Zero coefficients are never stored.  Instances are immutable
    by convention: every operation returns a new polynomial.
    """

    __slots__ = ("axes", "terms")

    def __init__(self, axes: int, terms=None):
        if axes not in (2, 3):
            raise ValueError("axes must be 2 or 3, got %r" % (axes,))
        clean = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != axes:
                raise AxesMismatch("exponent tuple %r does not have %d entries" % (exps, axes))
            if coeff:
                clean[tuple(exps)] = coeff
        self.axes = axes
        self.terms = clean

    @classmethod
    def zero(cls, axes: int) -> "LaurentPoly":
        return cls(axes, {})

    @classmethod
    def one(cls, axes: int) -> "LaurentPoly":
        return cls(axes, {(0,) * axes: 1})

    @classmethod
    def monomial(cls, axes: int, exps, coeff: int = 1) -> "LaurentPoly":
        return cls(axes, {tuple(exps): coeff})

    def _check_axes(self, other: "LaurentPoly") -> None:
        if self.axes != other.axes:
            raise AxesMismatch("cannot combine %d-axis and %d-axis polynomials" % (self.axes, other.axes))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.axes == other.axes and self.terms == other.terms

    def __hash__(self):
        return hash((self.axes, frozenset(self.terms.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_axes(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, 0) + coeff
        return LaurentPoly(self.axes, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.axes, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_axes(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.axes, out)

    def shifted(self, exps) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent tuple."""
        exps = tuple(exps)
        if len(exps) != self.axes:
            raise AxesMismatch("shift tuple %r does not have %d entries" % (exps, self.axes))
        return LaurentPoly(self.axes, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def reflected(self) -> "LaurentPoly":
        """Negate every exponent (the bar involution on monomials)."""
        return LaurentPoly(self.axes, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.axes, 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly(%d, 0)" % self.axes
        names = "rst"[: self.axes]
        bits = []
        for exps, coeff in self.sorted_terms():
            mono = "".join("%s^%d" % (n, e) for n, e in zip(names, exps) if e)
            bits.append("%+d%s" % (coeff, "*" + mono if mono else ""))
        return "LaurentPoly(%d, %s)" % (self.axes, " ".join(bits))
