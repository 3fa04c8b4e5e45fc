"""Acceptance gate: one test per advertised guarantee.

Every criterion prints a single [criterion N] PASS/FAIL line with the
checked population size and elapsed time; failures raise with up to
five counterexamples, each embedding the offending digraph as an edge
list.  Exact claims are compared with zero tolerance; numeric claims
at the stated tolerances (1e-9 for excess equalities, 1e-8 for the
spectral-route coefficient and conjugation checks).
"""

import time
from fractions import Fraction

import pytest

import oracles
from dgexcess import (AnalysisContext, complete, directed_cycle, dr_direct,
                      enumerate_digraphs, hypercube, path, petersen,
                      predistance_polynomials, q_norm_check, simple_excess,
                      spectral_excess, tensor_lift)
from dgexcess.harness import (check_conjugation, check_excess_product,
                              check_geodetic_set, check_odd_girth_suite,
                              check_projection_sums, check_simple_set,
                              check_weighted_set, family_suite,
                              standard_families)

EXPECTED_COUNTS = {2: 1, 3: 18, 4: 1606}


@pytest.fixture(scope="module")
def corpus():
    """Analysis contexts for every strongly connected digraph on up to
    four vertices, exhaustively enumerated."""
    out = []
    for n in (2, 3, 4):
        members = [AnalysisContext(G)
                   for G in enumerate_digraphs(n, "strongly_connected")]
        assert len(members) == EXPECTED_COUNTS[n]
        out.extend(members)
    return out


def _conclude(num, description, checked, started, failures):
    elapsed = time.monotonic() - started
    status = "FAIL" if failures else "PASS"
    print(f"[criterion {num}] {status}: {description} "
          f"({checked} checked, {elapsed:.1f}s)")
    if failures:
        raise AssertionError(f"criterion {num}: {len(failures)} failure(s)\n"
                             + "\n".join(failures[:5]))


def test_criterion_1_projection_sums_exhaustive(corpus):
    started = time.monotonic()
    failures = []
    for ctx in corpus:
        failures += check_projection_sums(ctx, systems=20)
    _conclude(1, "projection sums bounded by n, attained iff weakly "
                 "distance-regular, incl. 20 random subset systems per digraph",
              len(corpus), started, failures)


def test_criterion_2_simple_excess_corpus_and_sampled(corpus):
    started = time.monotonic()
    failures = []
    for ctx in corpus:
        failures += check_simple_set(ctx)
    sampled = 0
    for G in enumerate_digraphs(5, "strongly_connected", sample_limit=20000,
                                seed=1729):
        failures += check_simple_set(AnalysisContext(G))
        sampled += 1
        if sampled == 10000:
            break
    assert sampled == 10000, "sampler yielded fewer than 10^4 digraphs"
    _conclude(2, "simple excess <= spectral excess, equality iff "
                 "distance-regular on normal digraphs (incl. 10^4 at n=5)",
              len(corpus) + sampled, started, failures)


def test_criterion_3_weighted_excess(corpus):
    started = time.monotonic()
    failures = []
    checked = 0
    for ctx in corpus:
        if ctx.normal:
            failures += check_weighted_set(ctx, tol=1e-9)
            checked += 1
    _conclude(3, "weighted excess equality iff distance-regular (exact on "
                 "regular, 1e-9 otherwise), weighted = simple on regular",
              checked, started, failures)


def test_criterion_4_geodetic_excess(corpus):
    started = time.monotonic()
    failures = []
    checked = 0
    for ctx in corpus:
        if ctx.normal:
            failures += check_geodetic_set(ctx)
            checked += 1
    value, attained = q_norm_check(predistance_polynomials(petersen()), 10)
    if not (value == 10 and attained):
        failures.append(f"Petersen q-norm {value} should attain 10")
    value, attained = q_norm_check(predistance_polynomials(hypercube(3)), 8)
    if not (value == 52 and not attained):
        failures.append(f"cube q-norm {value} should be 52, missing 8")
    for n in range(3, 13):
        value, attained = q_norm_check(
            predistance_polynomials(directed_cycle(n)), n)
        if not attained:
            failures.append(f"directed cycle {n}: q-norm {value} missed {n}")
    _conclude(4, "q-norm hits n iff geodetic distance-regular; named values",
              checked + 12, started, failures)


def test_criterion_5_named_values_against_oracle():
    started = time.monotonic()
    cases = [("P_3", path(3), Fraction(2, 3), Fraction(8, 9)),
             ("Petersen", petersen(), Fraction(6), Fraction(6)),
             ("K_4", complete(4), Fraction(3), Fraction(3)),
             ("Q_3", hypercube(3), Fraction(36), Fraction(36))]
    for n in range(3, 13):
        cases.append((f"C_{n}", directed_cycle(n), Fraction(1), Fraction(1)))
    failures = []
    for label, G, want_simple, want_spectral in cases:
        ref = oracles.naive_excess_pair(G.n, G.arcs)
        ctx = AnalysisContext(G)
        got = (simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter),
               spectral_excess(ctx.basis))
        if ref != (want_simple, want_spectral):
            failures.append(f"{label}: oracle produced {ref}, expected "
                            f"({want_simple}, {want_spectral})")
        if got != (want_simple, want_spectral):
            failures.append(f"{label}: library produced {got}, expected "
                            f"({want_simple}, {want_spectral})")
    _conclude(5, "named excess pairs reproduced independently by the "
                 "brute-force oracle and the library", len(cases), started,
              failures)


def test_criterion_6_excess_through_spectrum(corpus):
    started = time.monotonic()
    failures = []
    checked = 0
    for ctx in corpus:
        if dr_direct(ctx.ds).decision:
            failures += check_excess_product(ctx, tol=1e-9)
            checked += 1
    ctx = AnalysisContext(petersen())
    s_prime = ctx.monomial.minpoly.squarefree_part().derivative()
    pi0 = s_prime(Fraction(3))
    if pi0 != 10 or (Fraction(pi0, 10)) ** 2 * ctx.profile.delta[2] != 6:
        failures.append(f"Petersen pi0 route gave {pi0}")
    _conclude(6, "(pi0/n)^2 * delta_D equals the simple excess on every "
                 "distance-regular member", checked + 1, started, failures)


def test_criterion_7_odd_girth_suite(corpus):
    started = time.monotonic()
    failures = []
    for ctx in corpus:
        failures += check_odd_girth_suite(ctx)
    _conclude(7, "odd-girth ceiling, forcing at the floor, nonempty "
                 "trichotomy, trace route agreement", len(corpus), started,
              failures)


def test_criterion_8_spectral_route_numerics(corpus):
    started = time.monotonic()
    failures = []
    checked = 0
    for ctx in corpus:
        if ctx.normal:
            failures += check_conjugation(ctx, tol=1e-8)
            checked += 1
    for label, G, _expected in standard_families(max_vertices=64):
        ctx = AnalysisContext(G)
        if ctx.normal:
            failures += [f"{label}: {m}" for m in check_conjugation(ctx, tol=1e-8)]
            checked += 1
    _conclude(8, "spectral-route coefficients within 1e-8 of exact and "
                 "f(A) = transpose within 1e-8, corpus and families",
              checked, started, failures)


def test_criterion_9_generator_contracts():
    started = time.monotonic()
    suite = family_suite()
    failures = list(suite.failures)
    for g in (3, 4, 5):
        for m in (2, 3):
            lifted = tensor_lift(directed_cycle(g), m)
            ds = AnalysisContext(lifted).ds
            if not dr_direct(ds).decision or ds.diameter != g:
                failures.append(f"lift of C_{g} by {m}: dr="
                                f"{dr_direct(ds).decision} D={ds.diameter}")
    _conclude(9, "advertised family properties hold via direct oracles; "
                 "cycle lifts are distance-regular with D = g",
              suite.checked + 6, started, failures)
