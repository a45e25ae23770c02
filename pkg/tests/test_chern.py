from fractions import Fraction

import pytest

from innerlie import (
    BalancedMetric,
    SimpleSystem,
    chern_report,
    chern_scalar,
    find_admissible_ordering,
    make_ordering,
    pair_by_name,
    ricci_structure_check,
    ricci_value,
    root_vector,
    solve_for_pair,
    standard_ordering,
    weyl_delta,
)

F = Fraction


def test_weyl_delta_a2():
    ordering = standard_ordering(pair_by_name("su(2,1)"))
    assert weyl_delta(ordering) == root_vector(2, 0, -2)


def test_weyl_delta_negated_ordering():
    pair = pair_by_name("su(2,1)")
    ordering = standard_ordering(pair)
    reversed_system = SimpleSystem([-s for s in ordering.system.simples])
    reversed_ordering = make_ordering(pair, reversed_system)
    assert weyl_delta(reversed_ordering) == -weyl_delta(ordering)


def test_weyl_delta_nonzero_for_g2_reflected():
    pair = pair_by_name("g2(2)")
    ordering = find_admissible_ordering(pair)
    assert not weyl_delta(ordering).is_zero()


def test_ricci_value_a2():
    ordering = standard_ordering(pair_by_name("su(2,1)"))
    assert ricci_value(root_vector(1, 0, -1), ordering) == 4


def test_ricci_value_antisymmetric():
    pair = pair_by_name("so(3,2)")
    ordering = standard_ordering(pair)
    for root in pair.system.roots:
        assert ricci_value(-root, ordering) == -ricci_value(root, ordering)


def test_ricci_value_rejects_non_root():
    ordering = standard_ordering(pair_by_name("su(2,1)"))
    with pytest.raises(ValueError):
        ricci_value(root_vector(1, 1, -2), ordering)


def test_chern_scalar_vanishes_on_balanced():
    for name in ["g2(2)", "so(1,4)", "f4(4)", "su(3,2)"]:
        pair = pair_by_name(name)
        metric = solve_for_pair(pair)
        assert chern_scalar(metric, metric.ordering, pair) == 0


def test_chern_scalar_nonzero_on_unbalanced():
    pair = pair_by_name("su(2,1)")
    ordering = standard_ordering(pair)
    unit = BalancedMetric(g={r: F(1) for r in ordering.positives}, ordering=ordering)
    value = chern_scalar(unit, ordering, pair)
    # imbalance (0,2,-2) against delta (2,0,-2), doubled
    assert value == 2 * root_vector(0, 2, -2).dot(root_vector(2, 0, -2)) == 8


def test_chern_scalar_linear_in_metric():
    pair = pair_by_name("su(2,1)")
    ordering = standard_ordering(pair)
    unit = BalancedMetric(g={r: F(1) for r in ordering.positives}, ordering=ordering)
    scaled = BalancedMetric(g={r: F(7, 3) for r in ordering.positives}, ordering=ordering)
    assert chern_scalar(scaled, ordering, pair) == F(7, 3) * chern_scalar(unit, ordering, pair)


@pytest.mark.parametrize("name", ["su(2,1)", "so(1,4)", "g2(2)"])
def test_ricci_structure_pattern(name):
    pair = pair_by_name(name)
    ordering = find_admissible_ordering(pair)
    assert ricci_structure_check(ordering, pair)


def test_chern_report_flags():
    pair = pair_by_name("so(1,4)")
    metric = solve_for_pair(pair)
    report = chern_report(metric, metric.ordering, pair)
    assert report.scalar_curvature == 0
    assert report.delta_nonzero and report.kodaira_flag
    assert report.delta == weyl_delta(metric.ordering)
