"""Exact matrix arithmetic, minimal polynomials and the spectrum.

Claims checked:
  * MatrixPowers escalates past int64 without losing exactness
  * trace inner products and Frobenius sums agree with schoolbook math
  * the monomial Gram-Schmidt reproduces a textbook re-derivation
  * minimal polynomials of the named graphs come out exactly
  * eigenvalue clustering, multiplicities and Perron certification
  * Hoffman ingredients divide exactly and reject non-roots
"""

import os
from fractions import Fraction

import mpmath
import numpy as np
import pytest

import oracles
from dgexcess import (MatrixPowers, PerronError, Polynomial, SpectrumError,
                      build_digraph, complete, directed_cycle, frobenius_sum,
                      hoffman_ingredients, hypercube, minimal_polynomial,
                      normality_test, orthogonal_monomial_basis, path,
                      perron_value, petersen, power_traces, spectrum,
                      trace_inner_product, working_dps)
from dgexcess.generators import enumerate_digraphs


# -- Matrix powers and inner products ----------------------------------------

def test_matrix_powers_basic():
    A = directed_cycle(4).adjacency
    mp = MatrixPowers(A)
    assert (mp[0] == np.eye(4, dtype=np.int64)).all()
    assert (mp[4] == np.eye(4, dtype=np.int64)).all()
    assert mp.trace(2) == 0 and mp.trace(4) == 4


def test_matrix_powers_escalates_past_int64():
    A = complete(8).adjacency          # entries grow like 7^k
    mp = MatrixPowers(A)
    P30 = mp[30]
    assert P30.dtype == object
    ref = oracles.naive_power([[int(x) for x in row] for row in A], 30)
    assert int(P30[0, 1]) == ref[0][1]
    assert int(P30[0, 0]) == ref[0][0]
    assert ref[0][1] > 2 ** 63         # the check was not vacuous


def test_frobenius_sum_matches_schoolbook():
    A = petersen().adjacency
    P, Q = A @ A, A @ A @ A
    expected = int((P * Q).sum())
    assert frobenius_sum(P, Q) == expected
    big = MatrixPowers(complete(8).adjacency)
    r = frobenius_sum(big[20], big[20])
    naive = oracles.naive_power([[int(x) for x in row] for row in
                                 complete(8).adjacency], 20)
    assert r == sum(naive[i][j] ** 2 for i in range(8) for j in range(8))


def test_trace_inner_product_exactness():
    A = path(3).adjacency
    v = trace_inner_product(A, A)
    assert isinstance(v, Fraction) and v == Fraction(4, 3)
    w = trace_inner_product(A.astype(float), A.astype(float))
    assert isinstance(w, float) and abs(w - 4 / 3) < 1e-12


def test_normality():
    assert normality_test(petersen().adjacency)
    assert normality_test(directed_cycle(5).adjacency)
    assert not normality_test(build_digraph(
        3, [(0, 1), (1, 2), (2, 0), (0, 2)]).adjacency)


# -- Gram-Schmidt against the textbook oracle --------------------------------

def test_monomial_basis_matches_naive_gram_schmidt():
    graphs = [path(3), petersen(), directed_cycle(5), hypercube(3)]
    for G in enumerate_digraphs(4, "strongly_connected", sample_limit=60,
                                seed=3):
        graphs.append(G)
    for G in graphs:
        mb = orthogonal_monomial_basis(MatrixPowers(G.adjacency))
        A = [[int(x) for x in row] for row in G.adjacency]
        basis, norms, minpoly = oracles.naive_gram_schmidt(A)
        assert list(mb.norms2) == norms
        assert [tuple(p.coeffs) for p in mb.polys] == \
            [tuple(b) for b in basis]
        assert tuple(mb.minpoly.coeffs) == tuple(minpoly)


def test_minimal_polynomials_named():
    m, dhat = minimal_polynomial(path(3))
    assert m == Polynomial((0, -2, 0, 1))          # x^3 - 2x
    assert dhat == 2
    m, _ = minimal_polynomial(complete(4))
    assert m == Polynomial((-3, -2, 1))            # (x-3)(x+1)
    m, _ = minimal_polynomial(directed_cycle(6))
    assert m == Polynomial((-1, 0, 0, 0, 0, 0, 1))
    m, dhat = minimal_polynomial(petersen())
    assert m == Polynomial((6, -5, -2, 1))         # (x-3)(x-1)(x+2)
    assert dhat == 2


def test_power_traces():
    G = petersen()
    traces = power_traces(G, 5)
    naive = oracles.naive_power_list(
        [[int(x) for x in row] for row in G.adjacency], 5)
    assert traces == [sum(P[i][i] for i in range(10)) for P in naive]
    assert traces[5] == 120
    assert traces[3] == 0                          # triangle-free


# -- Spectrum ----------------------------------------------------------------

def test_spectrum_petersen():
    spec = spectrum(petersen())
    assert spec.d == 2
    vals = {(round(z.real, 9), round(z.imag, 9)): m for z, m in spec.values}
    assert vals == {(3.0, 0.0): 1, (1.0, 0.0): 5, (-2.0, 0.0): 4}
    assert spec.lambda0_exact == 3
    assert spec.exact_lambda0


def test_spectrum_directed_cycle_complex_pairs():
    spec = spectrum(directed_cycle(5))
    assert spec.d == 4
    assert spec.lambda0_exact == 1
    assert sum(m for _, m in spec.values) == 5
    offreal = [z for z, _ in spec.values if abs(z.imag) > 1e-9]
    assert len(offreal) == 4


def test_spectrum_irrational_perron_not_certified():
    spec = spectrum(path(3))
    assert spec.lambda0_exact is None
    assert abs(float(spec.lambda0) - 2 ** 0.5) < 1e-12
    assert not spec.exact_lambda0


def test_spectrum_pi0():
    spec = spectrum(petersen())
    assert abs(spec.pi0() - 10) < 1e-9             # (3-1)(3+2)


def test_perron_value_regular_fast_path():
    lam, exact = perron_value(hypercube(3).adjacency,
                              minimal_polynomial(hypercube(3))[0])
    assert exact == 3 and lam == 3


def test_perron_certification_respects_precision_env(monkeypatch):
    monkeypatch.setenv("DGEXCESS_PRECISION", "30")
    assert working_dps() == 30
    spec = spectrum(path(3))
    with mpmath.workdps(40):
        err = abs(spec.lambda0 ** 2 - 2)
    assert err < mpmath.mpf(10) ** -25
    monkeypatch.setenv("DGEXCESS_PRECISION", "7")
    assert working_dps() == 15                     # floor applied
    monkeypatch.setenv("DGEXCESS_PRECISION", "x")
    with pytest.raises(ValueError):
        working_dps()


def test_singleton_spectrum():
    spec = spectrum(build_digraph(1, []))
    assert spec.values == ((0j, 1),)
    assert spec.lambda0_exact == 0


# -- Hoffman ingredients -----------------------------------------------------

def test_hoffman_ingredients_exact():
    m, _ = minimal_polynomial(complete(4))
    S, S0 = hoffman_ingredients(m, Fraction(3))
    assert S == Polynomial((1, 1))                 # x + 1
    assert S0 == 4


def test_hoffman_ingredients_rejects_non_root():
    m, _ = minimal_polynomial(complete(4))
    with pytest.raises(ValueError):
        hoffman_ingredients(m, Fraction(2))
