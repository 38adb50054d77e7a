"""The vertex measure on plane partitions and its partition-function check.

The boxes of a plane partition generate Q = sum r^i s^j t^k, the character is

    F = Q - Qbar/(rst) + Q*Qbar*(1-r)(1-s)(1-t)/(rst),

and the measure is the product over monomials of (i*u + j*v + k*w) raised to
minus the coefficient.  The weighted generating function over all plane
partitions is compared, coefficient by coefficient at exact random rational
points, with a power of the all-plane-partitions generating function; the
single global substitution q -> sigma*q making them agree is recorded rather
than presumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .forms import FactoredForm, PoleAtPoint, swap_product
from .laurent import ConstantTermPresent, LaurentPoly
from .partitions import PlanePartition, enumerate_plane_partitions_up_to
from .series import PowerSeries, macmahon_series

Point = tuple[Fraction, Fraction, Fraction]

# Fixed point on the plane u+v+w = 0, used only for reporting the measure's
# values there.  Chosen so no factor of any measure of size <= 4 vanishes.
CY_POINT: Point = (Fraction(1), Fraction(5), Fraction(-6))


def box_poly(pi: PlanePartition) -> LaurentPoly:
    """Q: one monomial r^i s^j t^k per box, coefficient 1."""
    return LaurentPoly(3, {box: 1 for box in pi.boxes})


def _corner_kernel3() -> LaurentPoly:
    # (1 - r)(1 - s)(1 - t)
    terms = {}
    for er in (0, 1):
        for es in (0, 1):
            for et in (0, 1):
                terms[(er, es, et)] = (-1) ** (er + es + et)
    return LaurentPoly(3, terms)


@dataclass(frozen=True)
class VertexCharacter:
    """Q, Qbar and the character F for one plane partition; F has no constant term."""

    q_poly: LaurentPoly
    qbar_poly: LaurentPoly
    f_poly: LaurentPoly

    def __post_init__(self):
        if self.qbar_poly != self.q_poly.reflected():
            raise ValueError("reflected box polynomial does not match")
        if self.f_poly.constant_term():
            raise ConstantTermPresent("vertex character has a constant term")

    @classmethod
    def from_plane_partition(cls, pi: PlanePartition) -> "VertexCharacter":
        q = box_poly(pi)
        qbar = q.reflected()
        shift = (-1, -1, -1)
        f = q - qbar.shifted(shift) + (q * qbar * _corner_kernel3()).shifted(shift)
        return cls(q, qbar, f)


def vertex_f_poly(pi: PlanePartition) -> LaurentPoly:
    return VertexCharacter.from_plane_partition(pi).f_poly


def vertex_measure(pi: PlanePartition) -> FactoredForm:
    """Product of (i*u + j*v + k*w)^(-coefficient) over the character's terms."""
    return swap_product(vertex_f_poly(pi), -1)


def _measures_by_size(order: int) -> list[list[tuple[PlanePartition, FactoredForm]]]:
    levels = enumerate_plane_partitions_up_to(order)
    return [[(pi, vertex_measure(pi)) for pi in level] for level in levels]


def weight_series_at_point(order: int, point: Point, measures=None) -> PowerSeries:
    """Exact coefficientwise sum of measure values, graded by box count.

    The constant coefficient is 1 (the empty plane partition's empty product).
    Raises PoleAtPoint if some measure cannot be evaluated at the point.
    """
    if measures is None:
        measures = _measures_by_size(order)
    coeffs = []
    for level in measures[: order + 1]:
        total = Fraction(0)
        for _, weight in level:
            total += weight.value_at(point)
        coeffs.append(total)
    return PowerSeries(coeffs)


def macmahon_exponent_at(point: Point) -> Fraction:
    """(u+v)(v+w)(w+u)/(uvw) evaluated exactly."""
    u, v, w = point
    if u * v * w == 0:
        raise ZeroDivisionError("the exponent needs u*v*w != 0")
    return Fraction((u + v) * (v + w) * (w + u), 1) / (u * v * w)


def macmahon_power_at_point(order: int, point: Point, sigma: int) -> PowerSeries:
    """The all-plane-partitions product generating function, with q -> sigma*q,
    raised to minus the exponent evaluated at the point."""
    exponent = macmahon_exponent_at(point)
    return macmahon_series(order).with_sign(sigma).pow(-exponent)


@dataclass
class ZReport:
    """Outcome of the partition-function identity check at random points."""

    order: int
    points: list[Point]
    sign: str  # "+1", "-1", or "none"
    per_point: list[bool]
    matched_plus: list[bool]
    matched_minus: list[bool]
    cy: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sign != "none" and all(self.per_point)

    def json_dict(self) -> dict:
        return {
            "order": self.order,
            "points": [[str(u), str(v), str(w)] for u, v, w in self.points],
            "sign": self.sign,
            "per_point": list(self.per_point),
            "cy": self.cy,
        }


def _collect_forms(measures) -> set:
    forms = set()
    for level in measures:
        for _, weight in level:
            for form, _ in weight.factors:
                forms.add(form)
    return forms


def sample_points(num_points: int, forms, seed: int) -> list[Point]:
    """Seeded integer-valued rational points with every given form nonvanishing.

    Coordinates are drawn from [1, 97]; a draw where any form vanishes is
    discarded and redrawn.
    """
    rng = random.Random(seed)
    points: list[Point] = []
    attempts = 0
    while len(points) < num_points:
        attempts += 1
        if attempts > 10000 * max(1, num_points):
            raise RuntimeError("could not sample pole-free points")
        pt = (Fraction(rng.randint(1, 97)), Fraction(rng.randint(1, 97)), Fraction(rng.randint(1, 97)))
        if all(form.value_at(*pt) != 0 for form in forms):
            points.append(pt)
    return points


def _cy_values(max_size: int = 4) -> list[dict]:
    out = []
    levels = enumerate_plane_partitions_up_to(max_size)
    for size in range(1, max_size + 1):
        for pi in levels[size]:
            try:
                value = str(vertex_measure(pi).value_at(CY_POINT))
            except PoleAtPoint:
                value = "pole"
            out.append({"plane_partition": pi.text(), "size": size, "value": value})
    return out


def verify_partition_function(order: int, num_points: int, seed: int) -> ZReport:
    """Compare the weighted sum with the closed-form power at seeded random points.

    Both substitutions q -> +q and q -> -q of the closed form are tested; the
    report records the sign under which every point matched, or "none".
    Values of the measure at a fixed point with u+v+w = 0 are attached for
    sizes up to 4, for the record.
    """
    if order < 1 or num_points < 1:
        raise ValueError("order and num_points must be at least 1")
    measures = _measures_by_size(order)
    points = sample_points(num_points, _collect_forms(measures), seed)
    matched_plus = []
    matched_minus = []
    for pt in points:
        weighted = weight_series_at_point(order, pt, measures)
        matched_plus.append(weighted == macmahon_power_at_point(order, pt, 1))
        matched_minus.append(weighted == macmahon_power_at_point(order, pt, -1))
    if all(matched_plus):
        sign, per_point = "+1", matched_plus
    elif all(matched_minus):
        sign, per_point = "-1", matched_minus
    else:
        sign = "none"
        per_point = [p or m for p, m in zip(matched_plus, matched_minus)]
    return ZReport(
        order=order,
        points=points,
        sign=sign,
        per_point=per_point,
        matched_plus=matched_plus,
        matched_minus=matched_minus,
        cy=_cy_values(min(order, 4)),
    )
