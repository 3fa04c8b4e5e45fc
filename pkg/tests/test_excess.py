"""Excess quantities and projection bounds.

Claims checked:
  * the two delta-prime routes (path counting vs matrix powers) agree
  * simple, spectral and weighted excess reproduce hand values
  * the scaling substitution between the two normalizations is exact
  * projection sums respect their bounds and detect attainment
  * subset-system validation and the masked-power consistency rule
"""

from fractions import Fraction

import mpmath
import pytest

from dgexcess import (AnalysisContext, build_digraph, complete, directed_cycle,
                      delta_profile, distance_structure, enumerate_digraphs,
                      generalized_projection_sum, hypercube, masked_power_check,
                      path, petersen, predistance_polynomials,
                      projection_tables, q_norm_check, simple_excess,
                      spectral_excess, upper_projection_sum,
                      wdr_projection_sum, weighted_excess)


# -- Helpers -----------------------------------------------------------------

def ctx_for(G):
    return AnalysisContext(G)


def corpus3():
    return list(enumerate_digraphs(3, "strongly_connected"))


# -- Delta-prime routes ------------------------------------------------------

def test_projection_tables_agree_with_path_counts():
    graphs = [path(3), petersen(), hypercube(3), directed_cycle(7)]
    graphs += list(enumerate_digraphs(4, "strongly_connected",
                                      sample_limit=40, seed=9))
    for G in graphs:
        ds = distance_structure(G)
        basis = predistance_polynomials(G)
        tables = projection_tables(ds, basis)
        profile = delta_profile(ds)
        assert tables.delta_prime == profile.delta_prime
        for k in range(ds.diameter + 1):
            assert tables.inner[k][k] == profile.delta_prime[k]


def test_support_vanishing_below_distance():
    ds = distance_structure(petersen())
    tables = projection_tables(ds, predistance_polynomials(petersen()))
    # <A_k, p_j(A)> = 0 whenever j < k: no walks shorter than the distance
    assert tables.inner[2][1] == 0 and tables.inner[1][0] == 0
    assert tables.inner[2][0] == 0


# -- Excess values -----------------------------------------------------------

def test_named_excess_values():
    cases = [
        (path(3), Fraction(2, 3), Fraction(8, 9)),
        (petersen(), Fraction(6), Fraction(6)),
        (complete(4), Fraction(3), Fraction(3)),
        (hypercube(3), Fraction(36), Fraction(36)),
    ]
    for G, eps_g, eps_d in cases:
        ctx = ctx_for(G)
        assert simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter) == eps_g
        assert spectral_excess(ctx.basis) == eps_d
    for n in range(3, 13):
        ctx = ctx_for(directed_cycle(n))
        assert simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter) == 1
        assert spectral_excess(ctx.basis) == 1


def test_simple_excess_zero_when_d_exceeds_diameter():
    paw = build_digraph(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2),
                            (0, 3), (3, 0)])
    ctx = ctx_for(paw)
    assert ctx.basis.d == 3 and ctx.ds.diameter == 2
    assert simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter) == 0
    assert spectral_excess(ctx.basis) > 0


def test_weighted_layers_path3():
    G = path(3)
    ctx = ctx_for(G)
    W = ctx.weighted
    assert not W.exact
    with mpmath.workdps(W.dps):
        assert abs(W.delta[0] - mpmath.mpf(9) / 8) < 1e-30
        assert abs(W.delta[2] - mpmath.mpf(3) / 8) < 1e-30
        assert abs(W.delta_prime[2] - mpmath.mpf(1) / 2) < 1e-30
        ew = weighted_excess(W, ctx.ds, ctx.basis.d)
        assert abs(ew - mpmath.mpf(2) / 3) < 1e-30


def test_weighted_equals_simple_for_regular():
    for G in (petersen(), complete(5), directed_cycle(6), hypercube(3)):
        ctx = ctx_for(G)
        W = ctx.weighted
        assert W.exact
        ew = weighted_excess(W, ctx.ds, ctx.basis.d)
        assert ew == simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter)


def test_scaling_substitution_is_exact():
    # <A_k, P_j(A)>^2 / delta_j equals <A_k, p_j(A)>^2 / eps_j, with
    # P_j = c_j p_j and c_j^2 = delta_j / eps_j; both sides as rationals
    for G in corpus3():
        ctx = ctx_for(G)
        D = ctx.ds.diameter
        for k in range(D + 1):
            for j in range(D + 1):
                T = ctx.tables.inner[k][j]
                lhs = ctx.basis.c2[j] * T * T / ctx.profile.delta[j]
                rhs = T * T / ctx.basis.norms2[j]
                assert lhs == rhs


# -- Projection bounds -------------------------------------------------------

def test_projection_sums_named():
    ctx = ctx_for(petersen())
    diag = wdr_projection_sum(ctx.ds, ctx.basis)
    upper = upper_projection_sum(ctx.ds, ctx.basis)
    assert diag.total == 10 and diag.attained
    assert upper.total == 10 and upper.attained
    ctx = ctx_for(path(3))
    diag = wdr_projection_sum(ctx.ds, ctx.basis)
    assert diag.total == Fraction(17, 6) and not diag.attained
    assert diag.holds and diag.per_k_holds


def test_q_norm_named_values():
    assert q_norm_check(predistance_polynomials(petersen()), 10) == \
        (Fraction(10), True)
    value, attained = q_norm_check(predistance_polynomials(hypercube(3)), 8)
    assert value == 52 and not attained
    for n in (3, 5, 8, 12):
        assert q_norm_check(predistance_polynomials(directed_cycle(n)), n) == \
            (Fraction(n), True)


def test_generalized_sum_validation():
    ctx = ctx_for(petersen())
    D = ctx.ds.diameter
    good = [[k] for k in range(D + 1)]
    pb = generalized_projection_sum(ctx.ds, ctx.basis, good, "ii")
    assert pb.attained                   # Petersen is distance-regular
    with pytest.raises(ValueError):
        generalized_projection_sum(ctx.ds, ctx.basis, good, "iii")
    with pytest.raises(ValueError):
        generalized_projection_sum(ctx.ds, ctx.basis, good[:-1], "i")
    with pytest.raises(ValueError):
        generalized_projection_sum(ctx.ds, ctx.basis,
                                   [[0], [], [2]], "i")
    with pytest.raises(ValueError):
        generalized_projection_sum(ctx.ds, ctx.basis,
                                   [[0], [1], [D + 1]], "i")
    with pytest.raises(ValueError):
        generalized_projection_sum(ctx.ds, ctx.basis,
                                   [[1], [1], [2]], "ii")  # 0 not in S_0


def test_generalized_sum_bounded_on_corpus():
    import random
    rng = random.Random(7)
    for G in corpus3():
        ctx = ctx_for(G)
        D = ctx.ds.diameter
        for _ in range(100):
            subsets = []
            for k in range(D + 1):
                S = [j for j in range(D + 1) if rng.random() < 0.6]
                subsets.append(S or [rng.randrange(D + 1)])
            pb = generalized_projection_sum(ctx.ds, ctx.basis, subsets, "i")
            assert pb.holds


def test_masked_power_rule():
    for G in corpus3():
        assert masked_power_check(distance_structure(G))
    assert masked_power_check(distance_structure(petersen()))
