from fractions import Fraction

import pytest

from innerlie import (
    BalancedMetric,
    CompactnessGrading,
    InfeasibleOrdering,
    InnerPair,
    RootSystemError,
    SimpleSystem,
    assemble_system,
    build_root_system,
    family_metric,
    find_admissible_ordering,
    make_ordering,
    pair_by_name,
    root_vector,
    scan_binvariant,
    solve_constructive,
    solve_for_pair,
    solve_so1_2n,
    standard_ordering,
    verify_balanced,
)

F = Fraction


def unit_metric(ordering):
    return BalancedMetric(g={r: F(1) for r in ordering.positives}, ordering=ordering)


def weighted_sums(metric, pair):
    """Independent oracle: recompute both sides of the identity from scratch."""
    dim = pair.system.ambient_dim
    compact = [F(0)] * dim
    noncompact = [F(0)] * dim
    for root, value in metric.g.items():
        target = compact if pair.grading.is_compact(root) else noncompact
        for i, c in enumerate(root.coords):
            target[i] += value * c
    return compact, noncompact


def test_assemble_g2_shape():
    pair = pair_by_name("g2(2)")
    ordering = find_admissible_ordering(pair)
    system = assemble_system(ordering, pair)
    # one relation per simple root, four non-simple positive unknowns
    assert len(ordering.compact_simples) + len(ordering.noncompact_simples) == 2
    assert len(system.spanned_compact) + len(system.unspanned_compact) + len(system.nc_nonsimple) == 4
    assert system.unspanned_compact == ()
    assert set(system.spanned_compact) == {root_vector(1, -1, 0), root_vector(-1, -1, 2)}
    assert system.unknowns == 6


def test_assemble_unknowns_match_positives(catalog8):
    for pair in catalog8[:12]:
        ordering = find_admissible_ordering(pair)
        system = assemble_system(ordering, pair)
        assert system.unknowns == len(pair.system.roots) // 2


def test_assemble_su21_standard_has_empty_sigma():
    pair = pair_by_name("su(2,1)")
    system = assemble_system(standard_ordering(pair), pair)
    assert system.spanned_compact == ()  # every compact positive root is simple here


@pytest.mark.parametrize("name", ["su(2,1)", "su(3,2)", "su(4,3)"])
def test_su_standard_ordering_infeasible(name):
    pair = pair_by_name(name)
    ordering = standard_ordering(pair)
    with pytest.raises(InfeasibleOrdering) as excinfo:
        solve_constructive(assemble_system(ordering, pair))
    assert excinfo.value.simple_root in ordering.noncompact_simples
    assert "non-positive" in str(excinfo.value)


def test_solve_g2_frozen_regression():
    pair = pair_by_name("g2(2)")
    metric = solve_for_pair(pair)
    assert metric.g == {
        root_vector(-1, -1, 2): F(4),
        root_vector(-1, 0, 1): F(8),
        root_vector(0, -1, 1): F(1),
        root_vector(1, -2, 1): F(1),
        root_vector(1, -1, 0): F(1),
        root_vector(2, -1, -1): F(2),
    }
    assert verify_balanced(metric, pair)
    compact, noncompact = weighted_sums(metric, pair)
    assert compact == noncompact


def test_solve_deterministic():
    pair = pair_by_name("f4(4)")
    assert solve_for_pair(pair).g == solve_for_pair(pair).g


def test_solve_e8_at_scale():
    pair = pair_by_name("e8(8)")
    metric = solve_for_pair(pair)
    assert len(metric.g) == 120
    assert min(metric.g.values()) > 0
    assert verify_balanced(metric, pair)
    compact, noncompact = weighted_sums(metric, pair)
    assert compact == noncompact


def test_solve_so1_2n_n2():
    metric = solve_so1_2n(2, 1, 2)
    assert metric.g == {
        root_vector(1, 0): F(3),   # z_1
        root_vector(0, 1): F(1),   # z_2 = y - x
        root_vector(1, -1): F(1),  # x
        root_vector(1, 1): F(2),   # y
    }
    pair = pair_by_name("so(1,4)")
    assert verify_balanced(metric, pair)


def test_solve_so1_2n_boundary_rejected():
    with pytest.raises(RootSystemError, match="z_2"):
        solve_so1_2n(2, 1, 1)
    with pytest.raises(RootSystemError):
        solve_so1_2n(2, 2, 1)  # x > y forces z_n <= 0
    with pytest.raises(RootSystemError):
        solve_so1_2n(1, 1, 2)
    with pytest.raises(RootSystemError):
        solve_so1_2n(2, 0, 2)


def test_solve_so1_2n_n3():
    from innerlie.balanced import so_1_2n_pair
    metric = solve_so1_2n(3, 1, 2)
    shorts = {i: metric.g[root_vector(*(int(j == i) for j in range(3)))] for i in range(3)}
    assert (shorts[0], shorts[1], shorts[2]) == (F(6), F(4), F(2))
    assert verify_balanced(metric, so_1_2n_pair(3))


def test_so1_2n_rational_family():
    metric = solve_so1_2n(2, F(1, 3), F(1, 2))
    assert verify_balanced(metric, pair_by_name("so(1,4)"))
    assert all(v > 0 for v in metric.g.values())


def su12_pair():
    """The su(1,2)-painted grading on A2 (blocks {e1}, {e2, e3})."""
    system = build_root_system("A", 2)
    return InnerPair(name="su(1,2)", family="A", rank=2, params={"p": 1, "q": 2},
                     system=system, grading=CompactnessGrading(system, (0,)),
                     dim_g=8, dim_k=4)


def test_verify_balanced_hand_oracle_true():
    pair = su12_pair()
    chamber = SimpleSystem([root_vector(-1, 1, 0), root_vector(1, 0, -1)])  # e2 > e1 > e3
    ordering = make_ordering(pair, chamber)
    assert set(ordering.positives) == {
        root_vector(-1, 1, 0), root_vector(0, 1, -1), root_vector(1, 0, -1)}
    assert verify_balanced(unit_metric(ordering), pair)


def test_verify_balanced_hand_oracle_false():
    pair = pair_by_name("su(2,1)")
    ordering = standard_ordering(pair)
    assert not verify_balanced(unit_metric(ordering), pair)


def test_verify_balanced_rejects_wrong_domain():
    pair = pair_by_name("su(2,1)")
    ordering = standard_ordering(pair)
    metric = unit_metric(ordering)
    del metric.g[root_vector(1, 0, -1)]
    with pytest.raises(RootSystemError):
        verify_balanced(metric, pair)


def test_scan_su21_finds_unit_balanced_chambers():
    pair = pair_by_name("su(2,1)")
    found = scan_binvariant(pair)
    assert found
    keys = {ordering.system.key() for ordering in found}
    expected = SimpleSystem([root_vector(1, 0, -1), root_vector(0, -1, 1)])  # e1 > e3 > e2
    assert expected.key() in keys
    for ordering in found:
        assert verify_balanced(unit_metric(ordering), pair)


def test_scan_su32_nonempty():
    found = scan_binvariant(pair_by_name("su(3,2)"))
    assert found
    for ordering in found:
        assert verify_balanced(unit_metric(ordering), pair_by_name("su(3,2)"))


def test_scan_so32_and_g2_empty():
    assert scan_binvariant(pair_by_name("so(3,2)")) == []
    assert scan_binvariant(pair_by_name("g2(2)")) == []


def test_scan_refuses_above_bound():
    with pytest.raises(RootSystemError, match="refusing"):
        scan_binvariant(pair_by_name("f4(4)"), exhaustive_rank_bound=2)


@pytest.mark.parametrize("name", ["g2(2)", "f4(4)"])
@pytest.mark.parametrize("t", [2, 3, 5])
def test_family_scaling(name, t):
    pair = pair_by_name(name)
    ordering = find_admissible_ordering(pair)
    system = assemble_system(ordering, pair)
    base = solve_constructive(system)
    scaled = family_metric(system, base, t)
    assert verify_balanced(scaled, pair)
    assert all(v > 0 for v in scaled.g.values())
    for root in system.spanned_compact:
        assert scaled.g[root] == base.g[root] * t
    for root in system.nc_nonsimple + system.unspanned_compact:
        assert scaled.g[root] == base.g[root]


def test_family_scaling_requires_t_at_least_one():
    pair = pair_by_name("g2(2)")
    ordering = find_admissible_ordering(pair)
    system = assemble_system(ordering, pair)
    base = solve_constructive(system)
    with pytest.raises(RootSystemError):
        family_metric(system, base, F(1, 2))
