"""Batch verification of the theory on enumerated corpora and families.

Each check_* function takes an AnalysisContext and returns failure
messages (empty list means the digraph passed).  check_digraph bundles
them; verify_corpus walks the enumeration, optionally fanning digraphs
out to worker processes, and every failure message embeds the digraph
as an edge list so a counterexample is immediately reproducible.

Random subset systems are seeded from the digraph itself, so results
do not depend on traversal or worker order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

import mpmath

from .classify import (AnalysisContext, InconsistencyAlarm, dr_direct,
                       generalized_odd_graph_check, odd_girth_spectral,
                       trichotomy, wdr_direct)
from .digraph import (Digraph, bipartite_test, geodetic_test, girth, is_infinite,
                      odd_girth, regularity_test)
from .excess import (generalized_projection_sum, q_norm_check, simple_excess,
                     spectral_excess, upper_projection_sum, wdr_projection_sum,
                     weighted_excess)
from .generators import (circulant, complete, complete_bipartite,
                         directed_cycle, hypercube, kneser_odd_graph,
                         paley_tournament, path, petersen, tensor_lift)
from .linalg import matrix_polynomial, power_traces
from .orthopoly import conjugation_polynomial, spectral_predistance
from .reportio import digraph_to_edgelist


def _tag(G: Digraph, message: str) -> str:
    return f"{message}\n{digraph_to_edgelist(G)}"


def _graph_rng(G: Digraph) -> random.Random:
    return random.Random(f"{G.n}:{G.arcs}")


def random_subset_systems(D: int, count: int, rng, force_diagonal=True):
    """Random S_0..S_D with nonempty S_k subseteq {0..D}; k in S_k when
    force_diagonal (the regime where attaining the bound characterizes
    weak distance-regularity)."""
    out = []
    for _ in range(count):
        system = []
        for k in range(D + 1):
            S = {j for j in range(D + 1) if rng.random() < 0.5}
            if force_diagonal:
                S.add(k)
            elif not S:
                S.add(rng.randrange(D + 1))
            system.append(sorted(S))
        out.append(system)
    return out


# -- Per-digraph checks ------------------------------------------------------

def check_projection_sums(ctx: AnalysisContext, systems: int = 20) -> list:
    """Diagonal and upper-triangular projection sums stay at or below n,
    attaining it exactly for the weakly distance-regular digraphs; the
    same for random subset-system sums in both variants."""
    G, n = ctx.G, ctx.G.n
    failures = []
    is_wdr = wdr_direct(ctx.ds)[0].decision

    diag = wdr_projection_sum(ctx.ds, ctx.basis, ctx.powers, ctx.tables, ctx.profile)
    upper = upper_projection_sum(ctx.ds, ctx.basis, ctx.powers, ctx.tables,
                                 ctx.profile)
    for label, pb in (("diagonal", diag), ("triangular", upper)):
        if not pb.holds:
            failures.append(_tag(G, f"{label} projection sum {pb.total} > {n}"))
        if pb.attained != is_wdr:
            failures.append(_tag(G, f"{label} sum {pb.total} attains n={n}: "
                                    f"{pb.attained}, but wdr_direct: {is_wdr}"))
    if not diag.per_k_holds:
        failures.append(_tag(G, "a per-class diagonal projection exceeds delta_k"))
    if not upper.per_k_holds:
        failures.append(_tag(G, "a per-class triangular projection exceeds delta_k"))

    rng = _graph_rng(G)
    D = ctx.ds.diameter
    for system in random_subset_systems(D, systems, rng, force_diagonal=True):
        for variant in ("i", "ii"):
            pb = generalized_projection_sum(ctx.ds, ctx.basis, system, variant,
                                            ctx.powers, ctx.tables, ctx.profile)
            if not pb.holds:
                failures.append(_tag(G, f"subset-system sum (variant {variant}) "
                                        f"{pb.total} > {n} for {system}"))
            if pb.attained != is_wdr:
                failures.append(_tag(G, f"subset-system sum (variant {variant}) "
                                        f"{pb.total} attains n={n}: {pb.attained}, "
                                        f"wdr_direct: {is_wdr} for {system}"))
    for system in random_subset_systems(D, 2, rng, force_diagonal=False):
        pb = generalized_projection_sum(ctx.ds, ctx.basis, system, "i",
                                        ctx.powers, ctx.tables, ctx.profile)
        if not pb.holds:
            failures.append(_tag(G, f"free subset-system sum {pb.total} > {n} "
                                    f"for {system}"))
    return failures


def check_simple_set(ctx: AnalysisContext) -> list:
    """Simple excess never exceeds spectral excess; equality decides
    distance-regularity exactly on the normal digraphs."""
    G = ctx.G
    failures = []
    eps_g = simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter)
    eps_d = spectral_excess(ctx.basis)
    if eps_g > eps_d:
        failures.append(_tag(G, f"simple excess {eps_g} > spectral excess {eps_d}"))
    if ctx.normal:
        is_dr = dr_direct(ctx.ds).decision
        if (eps_g == eps_d) != is_dr:
            failures.append(_tag(G, f"simple excess {eps_g} vs spectral {eps_d}: "
                                    f"equality {eps_g == eps_d}, dr_direct {is_dr}"))
    return failures


def check_weighted_set(ctx: AnalysisContext, tol: float = 1e-9) -> list:
    """Weighted excess equals spectral excess exactly on the normal
    distance-regular digraphs (to tol on the numeric track), and equals
    the simple excess exactly whenever the digraph is regular."""
    G = ctx.G
    if not ctx.normal:
        return []
    failures = []
    eps_d = spectral_excess(ctx.basis)
    eps_w = weighted_excess(ctx.weighted, ctx.ds, ctx.basis.d)
    is_dr = dr_direct(ctx.ds).decision
    if ctx.weighted.exact:
        if (eps_w == eps_d) != is_dr:
            failures.append(_tag(G, f"weighted excess {eps_w} vs spectral {eps_d}: "
                                    f"equality {eps_w == eps_d}, dr_direct {is_dr}"))
    else:
        with mpmath.workdps(ctx.weighted.dps):
            gap = abs(mpmath.mpf(eps_d.numerator) / eps_d.denominator - eps_w)
            close = bool(gap <= tol * max(1, float(eps_d)))
        if close != is_dr:
            failures.append(_tag(G, f"weighted excess {eps_w} vs spectral {eps_d}: "
                                    f"|gap| = {float(gap)}, dr_direct {is_dr}"))
    if regularity_test(G)[0]:
        eps_g = simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter)
        if not ctx.weighted.exact:
            failures.append(_tag(G, "regular digraph landed on the numeric "
                                    "weighted track"))
        elif eps_w != eps_g:
            failures.append(_tag(G, f"regular digraph: weighted excess {eps_w} "
                                    f"!= simple excess {eps_g}"))
    return failures


def check_geodetic_set(ctx: AnalysisContext) -> list:
    """Summed squared norms hit n exactly for the geodetic
    distance-regular normal digraphs and only for them."""
    G = ctx.G
    if not ctx.normal:
        return []
    value, attained = q_norm_check(ctx.basis, G.n)
    expected = dr_direct(ctx.ds).decision and geodetic_test(ctx.ds)
    if attained != expected:
        return [_tag(G, f"q-norm {value} attains n={G.n}: {attained}, "
                        f"dr and geodetic: {expected}")]
    return []


def check_excess_product(ctx: AnalysisContext, tol: float = 1e-9) -> list:
    """For distance-regular members the simple excess factors through
    the spectrum: (pi0/n)^2 * delta_D, with pi0 the product of
    (lambda0 - lambda_i) over the other distinct eigenvalues."""
    G = ctx.G
    if not dr_direct(ctx.ds).decision:
        return []
    eps_g = simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter)
    delta_D = ctx.profile.delta[ctx.ds.diameter]
    s_prime = ctx.monomial.minpoly.squarefree_part().derivative()
    lam = ctx.hoffman
    if lam.lambda0_exact is not None:
        pi0 = s_prime(lam.lambda0_exact)
        lhs = (Fraction(pi0) / G.n) ** 2 * delta_D
        if lhs != eps_g:
            return [_tag(G, f"(pi0/n)^2*delta_D = {lhs} != simple excess {eps_g}")]
        return []
    with mpmath.workdps(lam.dps):
        pi0 = s_prime(lam.lambda0)
        lhs = (pi0 / G.n) ** 2 * mpmath.mpf(delta_D.numerator) / delta_D.denominator
        gap = abs(lhs - mpmath.mpf(eps_g.numerator) / eps_g.denominator)
    if not gap <= tol:
        return [_tag(G, f"(pi0/n)^2*delta_D off by {float(gap)} from {eps_g}")]
    return []


def check_odd_girth_suite(ctx: AnalysisContext) -> list:
    """Odd-girth ceiling, the forcing of distance-regularity at the
    floor, the three-way classification, and the trace route for the
    odd girth itself."""
    G = ctx.G
    failures = []
    g_o = odd_girth(G)
    D = ctx.ds.diameter
    d = ctx.basis.d
    if not is_infinite(g_o) and g_o > 2 * D + 1:
        failures.append(_tag(G, f"odd girth {g_o} exceeds 2D+1 = {2 * D + 1}"))
    if ctx.normal and not is_infinite(g_o) and g_o >= 2 * d + 1:
        if not dr_direct(ctx.ds).decision or g_o != 2 * d + 1:
            failures.append(_tag(G, f"odd girth {g_o} >= 2d+1 = {2 * d + 1} "
                                    f"should force distance-regularity"))
    if ctx.normal:
        try:
            trichotomy(ctx)
        except InconsistencyAlarm as e:
            failures.append(_tag(G, str(e)))
    spectral = odd_girth_spectral(power_traces(ctx.powers, G.n))
    if spectral != g_o:
        failures.append(_tag(G, f"trace odd girth {spectral} != walk odd girth {g_o}"))
    return failures


def check_conjugation(ctx: AnalysisContext, tol: float = 1e-8) -> list:
    """Numeric spectral route reproduces the exact pre-distance
    coefficients, and the conjugation polynomial maps A to its
    transpose, on normal digraphs."""
    G = ctx.G
    if not ctx.normal:
        return []
    failures = []
    spec = ctx.numeric_spectrum
    sb = spectral_predistance(spec)
    worst = 0.0
    for p_exact, p_num in zip(ctx.basis.monic, sb.polys):
        for i in range(max(p_exact.degree, p_num.degree) + 1):
            worst = max(worst, abs(float(p_exact.coefficient(i))
                                   - float(p_num.coefficient(i))))
    if not worst < tol:
        failures.append(_tag(G, f"spectral pre-distance coefficients off by {worst}"))
    f = conjugation_polynomial(spec)
    fA = matrix_polynomial(f, ctx.powers)
    AT = G.adjacency.T
    dev = max(abs(float(fA[i, j]) - float(AT[i, j]))
              for i in range(G.n) for j in range(G.n))
    if not dev < tol:
        failures.append(_tag(G, f"f(A) differs from transpose by {dev}"))
    return failures


def check_digraph(G: Digraph, tol: float = 1e-9, systems: int = 5) -> list:
    """Every per-digraph suite on one strongly connected digraph."""
    ctx = AnalysisContext(G, tol=tol)
    failures = []
    failures += check_projection_sums(ctx, systems)
    failures += check_simple_set(ctx)
    failures += check_weighted_set(ctx, tol)
    failures += check_geodetic_set(ctx)
    failures += check_excess_product(ctx)
    failures += check_odd_girth_suite(ctx)
    return failures


# -- Corpus walking ----------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


def _verify_worker(args):
    n, code, tol, systems = args
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = tuple(pairs[b] for b in range(len(pairs)) if (code >> b) & 1)
    G = Digraph(n, arcs)
    if not G.is_strongly_connected:
        return 0, []
    return 1, check_digraph(G, tol, systems)


def _codes_for(n: int, sample, seed: int):
    bits = n * (n - 1)
    total = 1 << bits
    if sample is None or sample >= total:
        return range(total)
    rng = random.Random(seed + n)
    return [rng.randrange(total) for _ in range(sample)]


def verify_corpus(max_n: int = 4, sample=None, seed: int = 0, jobs: int = 1,
                  tol: float = 1e-9, systems: int = 5):
    """Run every per-digraph suite over all (or sampled) strongly
    connected digraphs for each n up to max_n, plus the family suite."""
    results = []
    for n in range(2, max_n + 1):
        if n > 5 and sample is None:
            results.append(SuiteResult(
                f"corpus n={n}", 0,
                [f"n={n} needs --sample (exhaustive enumeration capped at 5)"]))
            continue
        codes = _codes_for(n, sample if n >= 5 else None, seed)
        label = (f"corpus n={n} ({'sampled ' + str(len(codes)) if isinstance(codes, list) else 'exhaustive'})")
        args = ((n, code, tol, systems) for code in codes)
        checked = 0
        failures = []
        if jobs > 1:
            with Pool(jobs) as pool:
                for hit, fails in pool.imap_unordered(_verify_worker, args,
                                                      chunksize=64):
                    checked += hit
                    failures += fails
        else:
            for a in args:
                hit, fails = _verify_worker(a)
                checked += hit
                failures += fails
        results.append(SuiteResult(label, checked, failures))
    results.append(family_suite(tol))
    return results


# -- Family contracts --------------------------------------------------------

def standard_families(max_vertices: int = 64):
    """The advertised corpus: (label, digraph, expected properties)."""
    roster = []

    def add(label, G, **expected):
        if G.n <= max_vertices:
            roster.append((label, G, expected))

    for n in range(3, 13):
        add(f"directed_cycle({n})", directed_cycle(n), dr=True,
            diameter=n - 1, girth=n)
    for g in (3, 4, 5):
        for m in (2, 3):
            add(f"tensor_lift(directed_cycle({g}), {m})",
                tensor_lift(directed_cycle(g), m), dr=True, diameter=g, girth=g)
    for n in range(3, 7):
        add(f"complete({n})", complete(n), dr=True, diameter=1)
    add("complete_bipartite(2,2)", complete_bipartite(2, 2), dr=True, bipartite=True)
    add("complete_bipartite(3,3)", complete_bipartite(3, 3), dr=True, bipartite=True)
    add("complete_bipartite(2,3)", complete_bipartite(2, 3), dr=False,
        bipartite=True)
    for n in range(3, 7):
        add(f"path({n})", path(n), dr=False, bipartite=True)
    for k in range(1, 7):
        add(f"hypercube({k})", hypercube(k), dr=True, diameter=k, bipartite=True)
    add("petersen", petersen(), dr=True, diameter=2, gog=True)
    for k in (2, 3, 4):
        add(f"kneser_odd_graph({k})", kneser_odd_graph(k), dr=True,
            diameter=k - 1, gog=True)
    add("circulant(7,{1,2,4})", circulant(7, (1, 2, 4)), normal=True, diameter=2)
    add("circulant(13,{1,3,9})", circulant(13, (1, 3, 9)), normal=True)
    for q in (7, 11, 19):
        add(f"paley_tournament({q})", paley_tournament(q), normal=True)
    return roster


def family_suite(tol: float = 1e-9) -> SuiteResult:
    """Criterion checks for every advertised family membership claim."""
    failures = []
    checked = 0
    for label, G, expected in standard_families():
        checked += 1
        ctx = AnalysisContext(G, tol=tol)
        if "dr" in expected and dr_direct(ctx.ds).decision != expected["dr"]:
            failures.append(_tag(G, f"{label}: dr_direct != {expected['dr']}"))
        if "diameter" in expected and ctx.ds.diameter != expected["diameter"]:
            failures.append(_tag(G, f"{label}: diameter {ctx.ds.diameter} "
                                    f"!= {expected['diameter']}"))
        if "girth" in expected and girth(G, ctx.ds) != expected["girth"]:
            failures.append(_tag(G, f"{label}: girth {girth(G, ctx.ds)} "
                                    f"!= {expected['girth']}"))
        if expected.get("bipartite") and not bipartite_test(G):
            failures.append(_tag(G, f"{label}: expected bipartite"))
        if expected.get("gog") and not generalized_odd_graph_check(ctx).decision:
            failures.append(_tag(G, f"{label}: expected generalized odd graph"))
        if expected.get("normal") and not ctx.normal:
            failures.append(_tag(G, f"{label}: expected normal"))
        if ctx.normal:
            failures += [f"{label}: {m}" for m in check_conjugation(ctx)]
            failures += [f"{label}: {m}" for m in check_simple_set(ctx)]
    return SuiteResult("families", checked, failures)
