from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eqmeas.edge import (
    EdgeCharacter,
    cell_poly,
    cell_poly_inverse,
    corner_poly,
    corner_poly_from_corners,
    edge_f_poly,
    edge_growth_factors,
    edge_growth_ratio,
    edge_measure,
    jack_growth_factors,
    jack_growth_ratio,
    jack_measure,
    swap_poly,
    verify_corner_poly,
    verify_growth_ratios,
    verify_measures_match,
    verify_measures_signed,
    verify_swap_quotient,
)
from eqmeas.forms import FactoredForm
from eqmeas.laurent import ConstantTermPresent, LaurentPoly
from eqmeas.partitions import Partition, arm, corner_data, enumerate_partitions, leg, remove_corner, removable_corners


def ff(raw, exp=1):
    return FactoredForm.from_linear(raw, exp)


ONE_OVER_UV = ff((1, 0, 0), -1) * ff((0, 1, 0), -1)


def test_cell_poly_goldens():
    assert cell_poly(Partition((1,))) == LaurentPoly.one(2)
    assert cell_poly(Partition((3, 2))) == LaurentPoly(2, {(0, 0): 1, (0, 1): 1, (0, 2): 1, (1, 0): 1, (1, 1): 1})
    assert not cell_poly(Partition(()))


def test_cell_poly_inverse_is_reflection():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert cell_poly_inverse(lam) == cell_poly(lam).reflected()


def test_edge_character_goldens():
    assert edge_f_poly(Partition((1,))) == LaurentPoly(2, {(-1, 0): -1, (0, -1): -1})
    assert not edge_f_poly(Partition(()))
    assert edge_f_poly(Partition((2,))) == LaurentPoly(2, {(-1, 0): -1, (-1, 1): -1, (0, -1): -1, (0, -2): -1})


def test_edge_character_no_constant_term():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert edge_f_poly(lam).constant_term() == 0


def test_edge_character_constructor_rejects_constant():
    with pytest.raises(ConstantTermPresent):
        EdgeCharacter(LaurentPoly.one(2), LaurentPoly.one(2), LaurentPoly.one(2))


def test_edge_character_enumerates_both_hooks():
    # F is minus the sum over cells of r^leg s^-(arm+1) + r^-(leg+1) s^arm
    for n in range(9):
        for lam in enumerate_partitions(n):
            terms = {}
            for cell in lam.cells():
                a, l = arm(lam, cell), leg(lam, cell)
                for e in ((l, -(a + 1)), (-(l + 1), a)):
                    terms[e] = terms.get(e, 0) - 1
            assert edge_f_poly(lam) == LaurentPoly(2, terms)


def test_corner_poly_goldens():
    assert corner_poly(Partition((3, 2))) == LaurentPoly(
        2, {(0, 0): 1, (1, 3): 1, (2, 2): 1, (0, 3): -1, (1, 2): -1, (2, 0): -1}
    )
    assert corner_poly(Partition((1,))) == LaurentPoly(2, {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    assert not corner_poly(Partition(()))
    assert not corner_poly_from_corners(Partition(()))


def test_corner_poly_closed_form_matches():
    for n in range(11):
        for lam in enumerate_partitions(n):
            assert corner_poly(lam) == corner_poly_from_corners(lam)


def test_swap_goldens():
    assert swap_poly(LaurentPoly(2, {(-1, 0): -1, (0, -1): -1})) == ONE_OVER_UV.negated()
    # swap(r - s) = u * (-v)^-1 = -u/v
    assert swap_poly(LaurentPoly(2, {(1, 0): 1, (0, 1): -1})) == (ff((1, 0, 0)) * ff((0, 1, 0), -1)).negated()
    assert swap_poly(LaurentPoly.zero(2)).is_one


def test_swap_rejects_constant_term():
    with pytest.raises(ConstantTermPresent):
        swap_poly(LaurentPoly(2, {(0, 0): 1, (1, 0): 1}))


def test_swap_same_slope_terms_canonicalize():
    # 3 r^2 s^2 swaps to (2u-2v)^3 = 8 (u-v)^3
    value = swap_poly(LaurentPoly(2, {(2, 2): 3}))
    assert value == FactoredForm.from_parts(1, Fraction(8), {ff((1, -1, 0)).factors[0][0]: 3})


exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda e: e != (0, 0))
free_polys = st.dictionaries(exps, st.integers(-5, 5), max_size=8).map(lambda t: LaurentPoly(2, t))


@given(free_polys, free_polys)
def test_swap_turns_sums_into_products(f, g):
    assert swap_poly(f + g) == swap_poly(f) * swap_poly(g)


@given(free_polys, free_polys)
def test_swap_turns_differences_into_quotients(f, g):
    assert swap_poly(f - g) == swap_poly(f) / swap_poly(g)


def test_measure_goldens_one_box():
    lam = Partition((1,))
    assert jack_measure(lam) == ONE_OVER_UV
    assert edge_measure(lam) == ONE_OVER_UV.negated()
    assert jack_measure(lam).value_at((Fraction(1), Fraction(1), Fraction(9))) == 1


def test_measure_goldens_size_two():
    # hand-expanded characters: F((2)) = -1/r - s/r - 1/s - 1/s^2, so the swap
    # carries two negative forms and the signs cancel
    two = ff((0, 2, 0), -1) * ff((0, 1, 0), -1) * ff((1, 0, 0), -1) * ff((1, 1, 0), -1)
    assert two.content == Fraction(1, 2)
    assert jack_measure(Partition((2,))) == two
    assert edge_measure(Partition((2,))) == two
    col = ff((2, 0, 0), -1) * ff((1, 0, 0), -1) * ff((0, 1, 0), -1) * ff((1, 1, 0), -1)
    assert jack_measure(Partition((1, 1))) == col
    assert edge_measure(Partition((1, 1))) == col


def test_jack_measure_3_2_is_reciprocal_of_ten_hooks():
    # the ten deformed hooks of (3,2), each inverted
    expected = FactoredForm.one()
    for raw in [(1, 3, 0), (2, 2, 0), (1, 2, 0), (2, 1, 0), (0, 1, 0), (1, 0, 0), (0, 2, 0), (1, 1, 0), (0, 1, 0), (1, 0, 0)]:
        expected = expected * ff(raw, -1)
    assert jack_measure(Partition((3, 2))) == expected
    assert sum(abs(e) for _, e in jack_measure(Partition((3, 2))).factors) == 10


def test_jack_measure_value_against_plain_fraction_oracle():
    point = (Fraction(3), Fraction(7), Fraction(0))
    for lam in [Partition((3, 2)), Partition((4, 4, 1)), Partition((2, 1, 1))]:
        product = Fraction(1)
        for cell in lam.cells():
            a, l = arm(lam, cell), leg(lam, cell)
            product *= (point[0] * l + point[1] * (a + 1)) * (point[0] * (1 + l) + point[1] * a)
        assert jack_measure(lam).value_at(point) == 1 / product


def test_empty_partition_measures_are_one():
    assert jack_measure(Partition(())).is_one
    assert edge_measure(Partition(())).is_one


def test_measures_differ_by_size_parity():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            expected = jack_measure(lam) if n % 2 == 0 else jack_measure(lam).negated()
            assert edge_measure(lam) == expected


def test_conjugation_swaps_u_and_v():
    from eqmeas.partitions import conjugate

    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            swapped = jack_measure(lam).permuted((1, 0, 2))
            assert jack_measure(conjugate(lam)) == swapped
            assert edge_measure(conjugate(lam)) == edge_measure(lam).permuted((1, 0, 2))


def test_jack_growth_factor_goldens_one_box():
    factors = jack_growth_factors(Partition((1,)), 1)
    assert len(factors) == 1
    assert factors[0].case == "k=ell"
    assert factors[0].value == ONE_OVER_UV
    assert jack_growth_ratio(Partition((1,)), 1) == ONE_OVER_UV


def test_edge_growth_factor_goldens_one_box():
    factors = edge_growth_factors(Partition((1,)), 1)
    assert len(factors) == 1
    assert factors[0].value == ONE_OVER_UV.negated()
    assert edge_growth_ratio(Partition((1,)), 1) == ONE_OVER_UV.negated()


def test_growth_factor_count_is_corner_count():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            m = corner_data(lam).m
            for ell in removable_corners(lam):
                assert len(jack_growth_factors(lam, ell)) == m
                assert len(edge_growth_factors(lam, ell)) == m


def test_isolated_corner_factor_reduces_to_one_over_uv():
    # whenever the removed corner has no row/column run to telescope against,
    # the k = ell factor alone is 1/(uv)
    seen = 0
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            cd = corner_data(lam)
            for ell in removable_corners(lam):
                if cd.rho[ell + 1] == cd.rho[ell] - 1 and cd.gamma[ell - 1] == cd.gamma[ell] - 1:
                    seen += 1
                    factor = next(f for f in jack_growth_factors(lam, ell) if f.k == ell)
                    assert factor.value == ONE_OVER_UV
    assert seen > 0
    staircase = next(f for f in jack_growth_factors(Partition((2, 1)), 1) if f.case == "k=ell")
    assert staircase.value == ONE_OVER_UV


def test_growth_ratios_match_direct_quotients():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            for ell in removable_corners(lam):
                mu = remove_corner(lam, ell)
                assert jack_growth_ratio(lam, ell) == jack_measure(lam) / jack_measure(mu)
                assert edge_growth_ratio(lam, ell) == edge_measure(lam) / edge_measure(mu)


def test_growth_ratios_differ_by_exactly_one_sign():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            for ell in removable_corners(lam):
                assert jack_growth_ratio(lam, ell) == edge_growth_ratio(lam, ell).negated()


def test_verify_measures_match_reports_even_sizes():
    report = verify_measures_match(6)
    assert report.checked == 29
    assert report.passed == 11  # odd sizes 1, 3, 5
    assert len(report.failures) == 18
    assert {f["partition"] for f in report.failures} == {
        lam.text() for n in (2, 4, 6) for lam in enumerate_partitions(n)
    }
    assert any("(-1)^size" in note for note in report.notes)


def test_verify_measures_signed_passes():
    report = verify_measures_signed(6)
    assert report.checked == 29
    assert report.passed == 29
    assert report.ok


def test_verify_growth_ratio_reports():
    reports = verify_growth_ratios(6)
    assert reports["jack_ratio"].ok
    assert reports["edge_ratio"].ok
    assert reports["ratio_sign_equality"].ok
    assert not reports["ratio_equality"].ok
    assert reports["ratio_equality"].passed == 0
    counts = {key: rep.checked for key, rep in reports.items()}
    assert len(set(counts.values())) == 1


def test_verify_corner_poly_report():
    report = verify_corner_poly(8)
    assert report.ok
    assert report.checked == sum(len(enumerate_partitions(n)) for n in range(9))


def test_verify_swap_quotient_report():
    report = verify_swap_quotient(60, seed=11)
    assert report.ok
    assert report.checked == 60


def test_verify_swap_quotient_deterministic():
    a = verify_swap_quotient(10, seed=5)
    b = verify_swap_quotient(10, seed=5)
    assert a.json_dict() == b.json_dict()


def test_parallel_sweeps_match_serial():
    assert verify_measures_match(6, jobs=2).json_dict() == verify_measures_match(6).json_dict()
    serial = {k: r.json_dict() for k, r in verify_growth_ratios(5).items()}
    parallel = {k: r.json_dict() for k, r in verify_growth_ratios(5, jobs=2).items()}
    assert serial == parallel
