"""Decision procedures for distance-regularity and its relatives.

Two independent routes decide each property.  The direct oracles group
intersection counts by distance class and test constancy, straight from
the definitions.  The spectral-side criteria decide the same properties
through exact equalities between excess quantities and projection sums.
Agreement between the routes is asserted wherever both apply; a
disagreement is an InconsistencyAlarm, never silently absorbed.

Verdicts are evidence-carrying: both sides of every deciding
(in)equality travel in the certificate so a consumer can audit the
comparison, including any tolerance used on the numeric track.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import mpmath
import numpy as np

from .digraph import (Digraph, DistanceStructure, INFINITE, is_infinite,
                      bipartite_test, delta_profile, distance_structure,
                      geodetic_test, girth, odd_girth, regularity_test,
                      strong_connectivity)
from .excess import (masked_power_check, projection_tables, q_norm_check,
                     simple_excess, spectral_excess, upper_projection_sum,
                     wdr_projection_sum, weighted_excess, weighted_layers)
from .linalg import (MatrixPowers, PerronError, SpectrumError, matrix_polynomial,
                     normality_test, orthogonal_monomial_basis, spectrum,
                     working_dps)
from .orthopoly import (conjugation_polynomial, hoffman_polynomial,
                        predistance_polynomials, spectral_predistance)


class InconsistencyAlarm(RuntimeError):
    """Two routes that must agree did not; carries the offending digraph."""


@dataclass(frozen=True)
class Verdict:
    name: str
    decision: bool
    method: str        # "direct", "spectral-exact" or "spectral-numeric"
    certificate: dict


@dataclass(frozen=True)
class IntersectionTable:
    kind: str          # "wdr", "dr" or "weighted"
    values: dict       # (k, i, j) -> count (exact or numeric)
    consistent: bool
    witness: dict = None


class AnalysisContext:
    """Shared scaffolding for the classifiers on one digraph.

    Everything cheap and exact is computed eagerly; the Hoffman-weighted
    pieces and the numeric spectrum are cached on first use.
    """

    def __init__(self, G: Digraph, tol: float = 1e-9, dps=None, cluster_tol=None):
        if not strong_connectivity(G):
            raise ValueError("analysis context needs a strongly connected digraph")
        self.G = G
        self.tol = tol
        self.dps = working_dps() if dps is None else dps
        self.cluster_tol = cluster_tol
        self.ds = distance_structure(G)
        self.profile = delta_profile(self.ds)
        self.powers = MatrixPowers(G.adjacency)
        self.monomial = orthogonal_monomial_basis(self.powers)
        self.basis = predistance_polynomials(G, self.powers, self.monomial, self.ds)
        self.normal = normality_test(G.adjacency)
        self.tables = projection_tables(self.ds, self.basis, self.powers)

    @cached_property
    def hoffman(self):
        return hoffman_polynomial(self.G, self.powers, self.monomial.minpoly, self.dps)

    @cached_property
    def weighted(self):
        return weighted_layers(self.G, self.hoffman, self.ds, self.powers)

    @cached_property
    def numeric_spectrum(self):
        return spectrum(self.G, self.cluster_tol, minpoly=self.monomial.minpoly,
                        dps=self.dps)


def _ctx(G) -> AnalysisContext:
    return G if isinstance(G, AnalysisContext) else AnalysisContext(G)


# -- Grouped constancy machinery ---------------------------------------------

def _distance_classes(dist: np.ndarray):
    flat = dist.ravel()
    order = np.argsort(flat, kind="stable")
    svals = flat[order]
    cuts = np.flatnonzero(np.diff(svals)) + 1
    starts = [0] + cuts.tolist() + [flat.size]
    ks = [int(svals[s]) for s in starts[:-1]]
    return order, starts, ks


def _class_spread(B, classes, wanted=None, tol=None):
    """Per-class (min, max, argmin, argmax) constancy scan of one matrix.

    Returns ({k: value}, witness); witness is None when every wanted
    class is constant (within tol for inexact entries, exactly else).
    """
    order, starts, ks = classes
    flat = B.ravel()
    n = B.shape[0]
    out = {}
    for c, k in enumerate(ks):
        if wanted is not None and k not in wanted:
            continue
        a, b = starts[c], starts[c + 1]
        seg = flat[order[a:b]]
        if B.dtype != object:
            lo, hi = seg.min(), seg.max()
            ilo, ihi = int(np.argmin(seg)), int(np.argmax(seg))
        else:
            lo = hi = seg[0]
            ilo = ihi = 0
            for t, v in enumerate(seg):
                if v < lo:
                    lo, ilo = v, t
                elif v > hi:
                    hi, ihi = v, t
        spread_ok = (lo == hi) if tol is None else bool(hi - lo <= tol)
        if not spread_ok:
            p1 = divmod(int(order[a + ilo]), n)
            p2 = divmod(int(order[a + ihi]), n)
            if B.dtype != object:
                lo, hi = lo.item(), hi.item()
            return out, {"class_distance": k, "pairs": [list(p1), list(p2)],
                         "values": [lo, hi]}
        out[k] = lo if B.dtype == object else int(lo)
    return out, None


# -- Direct oracles ----------------------------------------------------------

def wdr_direct(ds: DistanceStructure):
    """Constancy of |Gamma^+_i(u) n Gamma^-_j(v)| per distance class.

    Returns (Verdict, IntersectionTable); the table holds every
    intersection count on success and the refuting pair on failure.
    """
    D = ds.diameter
    classes = _distance_classes(ds.dist)
    values = {}
    for i in range(D + 1):
        for j in range(D + 1):
            got, witness = _class_spread(ds.layers[i] @ ds.layers[j], classes)
            if witness is not None:
                witness.update({"i": i, "j": j})
                table = IntersectionTable("wdr", values, False, witness)
                cert = {"consistent": False, "witness": witness}
                return Verdict("weakly-distance-regular", False, "direct", cert), table
            for k, v in got.items():
                values[(k, i, j)] = v
    table = IntersectionTable("wdr", values, True)
    cert = {"consistent": True, "classes_checked": len(values)}
    return Verdict("weakly-distance-regular", True, "direct", cert), table


def dr_direct(ds: DistanceStructure) -> Verdict:
    """Constancy of |Gamma^+_i(u) n Gamma^+_1(v)| over pairs at distance
    k >= 1, for each i up to k+1."""
    D = ds.diameter
    if D == 0:
        return Verdict("distance-regular", True, "direct",
                       {"consistent": True, "classes_checked": 0})
    classes = _distance_classes(ds.dist)
    A_T = ds.layers[1].T.copy()
    checked = 0
    for i in range(D + 1):
        wanted = set(range(max(1, i - 1), D + 1))
        got, witness = _class_spread(ds.layers[i] @ A_T, classes, wanted)
        if witness is not None:
            witness.update({"i": i, "j": 1})
            return Verdict("distance-regular", False, "direct",
                           {"consistent": False, "witness": witness})
        checked += len(got)
    return Verdict("distance-regular", True, "direct",
                   {"consistent": True, "classes_checked": checked})


def weighted_intersection_table(ds: DistanceStructure, HA: np.ndarray,
                                tol: float = 1e-9) -> IntersectionTable:
    """Diagonal-weight variant: each vertex w in the intersection counts
    with weight H(A)_ww instead of 1."""
    D = ds.diameter
    classes = _distance_classes(ds.dist)
    h = np.array([HA[v, v] for v in range(ds.n)], dtype=object)
    exact = all(isinstance(x, (int, Fraction)) for x in h)
    scale = max([1] + [abs(x) for x in h])
    cell_tol = None if exact else tol * float(scale) * ds.n
    values = {}
    weighted_j = [ds.layers[j].astype(object) * h[:, None] for j in range(D + 1)]
    for i in range(D + 1):
        left = ds.layers[i].astype(object)
        for j in range(D + 1):
            got, witness = _class_spread(left @ weighted_j[j], classes, tol=cell_tol)
            if witness is not None:
                witness.update({"i": i, "j": j})
                return IntersectionTable("weighted", values, False, witness)
            for k, v in got.items():
                values[(k, i, j)] = v
    return IntersectionTable("weighted", values, True)


# -- Spectral-side criteria --------------------------------------------------

def dr_by_simple_set(G) -> Verdict:
    """Distance-regularity via simple excess = spectral excess (exact)."""
    ctx = _ctx(G)
    eps_g = simple_excess(ctx.profile, ctx.basis.d, ctx.ds.diameter)
    eps_d = spectral_excess(ctx.basis)
    cert = {"simple_excess": eps_g, "spectral_excess": eps_d,
            "difference": eps_d - eps_g, "normal": ctx.normal}
    if not ctx.normal:
        cert["note"] = "equality criterion needs a normal digraph; not normal"
        return Verdict("distance-regular", False, "spectral-exact", cert)
    return Verdict("distance-regular", eps_g == eps_d, "spectral-exact", cert)


def dr_by_weighted_set(G, tol: float = 1e-9) -> Verdict:
    """Distance-regularity via weighted excess = spectral excess.

    Exact when the Perron value certified rational, else compared at
    tol * max(1, spectral excess) in the working precision.
    """
    ctx = _ctx(G)
    eps_d = spectral_excess(ctx.basis)
    eps_w = weighted_excess(ctx.weighted, ctx.ds, ctx.basis.d)
    cert = {"weighted_excess": eps_w, "spectral_excess": eps_d, "normal": ctx.normal}
    if ctx.weighted.exact:
        cert["difference"] = eps_d - eps_w
        decision = ctx.normal and eps_w == eps_d
        if not ctx.normal:
            cert["note"] = "equality criterion needs a normal digraph; not normal"
        return Verdict("distance-regular", decision, "spectral-exact", cert)
    with mpmath.workdps(ctx.weighted.dps):
        gap = abs(mpmath.mpf(eps_d.numerator) / eps_d.denominator - eps_w)
        close = bool(gap <= tol * max(1, float(eps_d)))
    cert["difference"] = float(gap)
    cert["tolerance"] = tol * max(1, float(eps_d))
    if not ctx.normal:
        cert["note"] = "equality criterion needs a normal digraph; not normal"
        return Verdict("distance-regular", False, "spectral-numeric", cert)
    return Verdict("distance-regular", close, "spectral-numeric", cert)


def geodetic_dr_check(G) -> Verdict:
    """Geodetic distance-regularity via the summed squared norms hitting n."""
    ctx = _ctx(G)
    value, attained = q_norm_check(ctx.basis, ctx.G.n)
    cert = {"q_norm": value, "n": ctx.G.n, "normal": ctx.normal}
    if not ctx.normal:
        cert["note"] = "equality criterion needs a normal digraph; not normal"
    return Verdict("geodetic-distance-regular", ctx.normal and attained,
                   "spectral-exact", cert)


def wdr_by_projection(G) -> Verdict:
    """Weak distance-regularity via the diagonal projection sum hitting n."""
    ctx = _ctx(G)
    pb = wdr_projection_sum(ctx.ds, ctx.basis, ctx.powers, ctx.tables, ctx.profile)
    cert = {"projection_sum": pb.total, "n": pb.bound}
    return Verdict("weakly-distance-regular", pb.attained, "spectral-exact", cert)


# -- Odd girth and the classification around it ------------------------------

def odd_girth_spectral(traces):
    """Smallest odd k with tr(A^k) nonzero, INFINITE when none is.

    Takes the power-trace list tr(A^0..A^m); m should be at least n,
    since a shortest odd cycle is simple.
    """
    for k in range(1, len(traces), 2):
        if traces[k] != 0:
            return k
    return INFINITE


def odd_girth_walks(G: Digraph):
    """Same value as odd_girth_spectral, through boolean walk powers.

    With a nonnegative adjacency matrix tr(A^k) != 0 exactly when a
    closed walk of length k exists, so reachability powers decide the
    trace test without big-integer arithmetic.
    """
    A = G.adjacency
    walk = A.copy()
    step2 = ((A @ A) > 0).astype(np.int64)
    for k in range(1, G.n + 1, 2):
        if np.trace(walk) != 0:
            return k
        walk = ((walk @ step2) > 0).astype(np.int64)
    return INFINITE


def generalized_odd_graph_check(G) -> Verdict:
    """Distance-regular graph (symmetric adjacency) with odd-girth 2D+1."""
    ctx = _ctx(G)
    drv = dr_direct(ctx.ds)
    symmetric = bool((ctx.G.adjacency == ctx.G.adjacency.T).all())
    g_o = odd_girth(ctx.G)
    required = 2 * ctx.ds.diameter + 1
    decision = drv.decision and symmetric and g_o == required
    cert = {"distance_regular": drv.decision, "symmetric": symmetric,
            "odd_girth": g_o, "required_odd_girth": required}
    return Verdict("generalized-odd-graph", decision, "direct", cert)


@dataclass(frozen=True)
class TrichotomyResult:
    branches: tuple    # nonempty subset of the three branch names
    odd_girth: object
    d: int
    diameter: int
    bound: int         # min(2d-1, 2D+1)


def trichotomy(G) -> TrichotomyResult:
    """Sort a connected normal digraph into at least one of: bipartite,
    generalized odd graph, odd-girth at most min(2d-1, 2D+1).

    An empty branch set would falsify the classification and raises an
    InconsistencyAlarm carrying the digraph; it is never swallowed.
    """
    ctx = _ctx(G)
    if not ctx.normal:
        raise ValueError("trichotomy classifies normal digraphs only")
    g_o = odd_girth(ctx.G)
    d = ctx.basis.d
    D = ctx.ds.diameter
    bound = min(2 * d - 1, 2 * D + 1)
    branches = []
    if bipartite_test(ctx.G):
        branches.append("bipartite")
    if generalized_odd_graph_check(ctx).decision:
        branches.append("generalized-odd-graph")
    if not is_infinite(g_o) and g_o <= bound:
        branches.append("small-odd-girth")
    if not branches:
        raise InconsistencyAlarm(
            "digraph escapes all three branches: "
            f"n={ctx.G.n} arcs={ctx.G.arcs} odd_girth={g_o} d={d} D={D}")
    return TrichotomyResult(tuple(branches), g_o, d, D, bound)


# -- The aggregate report ----------------------------------------------------

@dataclass
class AnalysisReport:
    input: dict
    flags: dict
    metrics: dict = None
    minimal_polynomial: list = None
    spectrum: dict = None
    delta: list = None
    delta_prime: list = None
    excess: dict = None
    bounds: dict = None
    verdicts: dict = None
    crosschecks: dict = None
    alarms: list = None
    tolerances: dict = None


def _input_block(G: Digraph, source=None) -> dict:
    lines = [f"{G.n} {len(G.arcs)}"] + [f"{u} {v}" for u, v in G.arcs]
    digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()[:16]
    block = {"n": G.n, "arcs": len(G.arcs), "format": "internal", "hash": digest}
    if source:
        block.update(source)
    return block


def _spectrum_block(spec) -> dict:
    return {
        "values": [[z.real, z.imag, m] for z, m in spec.values],
        "lambda0": mpmath.nstr(spec.lambda0, 17),
        "lambda0_exact": spec.lambda0_exact,
        "exact_lambda0": spec.exact_lambda0,
        "d": spec.d,
        "cluster_tol": spec.cluster_tol,
    }


def full_report(G: Digraph, tol: float = 1e-9, cluster_tol=None,
                source=None) -> AnalysisReport:
    """Every invariant, verdict and cross-check on one digraph.

    Never raises for graph-shaped reasons: a disconnected input yields a
    connectivity-only report, and internal disagreements are collected
    into the alarms list instead of propagating.
    """
    report = AnalysisReport(input=_input_block(G, source), flags={})
    if not strong_connectivity(G):
        report.flags["strongly_connected"] = False
        return report

    ctx = AnalysisContext(G, tol=tol, cluster_tol=cluster_tol)
    alarms = []
    g, g_o = girth(G, ctx.ds), odd_girth(G)
    regular, degree = regularity_test(G)
    geodetic = geodetic_test(ctx.ds)
    bipartite = bipartite_test(G)
    d = ctx.basis.d
    D = ctx.ds.diameter

    report.flags = {
        "strongly_connected": True,
        "normal": ctx.normal,
        "regular": regular,
        "geodetic": geodetic,
        "bipartite": bipartite,
    }
    report.metrics = {
        "diameter": D, "d": d, "dhat": ctx.basis.dhat,
        "girth": g, "odd_girth": g_o, "degree": degree,
    }
    report.minimal_polynomial = list(ctx.monomial.minpoly.coeffs)
    report.delta = list(ctx.profile.delta)
    report.delta_prime = list(ctx.profile.delta_prime)

    try:
        report.spectrum = _spectrum_block(ctx.numeric_spectrum)
    except (SpectrumError, PerronError) as e:
        alarms.append(f"spectrum: {e}")

    eps_simple = simple_excess(ctx.profile, d, D)
    eps_spectral = spectral_excess(ctx.basis)
    report.excess = {
        "simple": eps_simple,
        "spectral": eps_spectral,
        "exact": True,
    }
    try:
        eps_weighted = weighted_excess(ctx.weighted, ctx.ds, d)
        report.excess["weighted"] = eps_weighted
        report.excess["weighted_exact"] = ctx.weighted.exact
        if not ctx.weighted.exact:
            report.excess["weighted_dps"] = ctx.weighted.dps
    except ArithmeticError as e:
        alarms.append(f"weighted excess: {e}")
        eps_weighted = None

    diag = wdr_projection_sum(ctx.ds, ctx.basis, ctx.powers, ctx.tables, ctx.profile)
    upper = upper_projection_sum(ctx.ds, ctx.basis, ctx.powers, ctx.tables, ctx.profile)
    q_value, q_attained = q_norm_check(ctx.basis, G.n)
    report.bounds = {
        "wdr_projection": {"total": diag.total, "per_k": list(diag.per_k)},
        "upper_projection": {"total": upper.total, "per_k": list(upper.per_k)},
        "q_norm": {"value": q_value, "attained": q_attained},
    }

    wdr_v, _table = wdr_direct(ctx.ds)
    dr_v = dr_direct(ctx.ds)
    simple_v = dr_by_simple_set(ctx)
    weighted_v = dr_by_weighted_set(ctx, tol)
    geodetic_v = geodetic_dr_check(ctx)
    projection_v = wdr_by_projection(ctx)
    gog_v = generalized_odd_graph_check(ctx)

    # Headline verdicts are the spectral criteria where they apply; the
    # direct-oracle outcome rides along in each certificate.
    if ctx.normal:
        headline_dr = Verdict(simple_v.name, simple_v.decision, simple_v.method,
                              dict(simple_v.certificate,
                                   direct_decision=dr_v.decision,
                                   weighted_decision=weighted_v.decision))
    else:
        headline_dr = Verdict(dr_v.name, dr_v.decision, dr_v.method,
                              dict(dr_v.certificate, normal=False))
    report.verdicts = {
        "wdr": Verdict(projection_v.name, projection_v.decision,
                       projection_v.method,
                       dict(projection_v.certificate,
                            direct_decision=wdr_v.decision)),
        "dr": headline_dr,
        "geodetic_dr": Verdict(geodetic_v.name, geodetic_v.decision,
                               geodetic_v.method,
                               dict(geodetic_v.certificate,
                                    direct_decision=dr_v.decision and geodetic)),
        "generalized_odd_graph": gog_v,
    }
    if ctx.normal:
        try:
            report.verdicts["trichotomy"] = trichotomy(ctx)
        except InconsistencyAlarm as e:
            alarms.append(str(e))

    checks = {}
    checks["dr_equals_normal_and_wdr"] = \
        dr_v.decision == (ctx.normal and wdr_v.decision)
    checks["wdr_projection_agrees"] = projection_v.decision == wdr_v.decision
    checks["geodetic_set_agrees"] = \
        geodetic_v.decision == (dr_v.decision and geodetic and ctx.normal)
    if ctx.normal:
        checks["simple_set_agrees"] = simple_v.decision == dr_v.decision
        checks["weighted_set_agrees"] = weighted_v.decision == dr_v.decision
        checks["diagonalizable"] = ctx.basis.dhat == d
    checks["odd_girth_bound"] = is_infinite(g_o) or g_o <= 2 * D + 1
    if ctx.normal and not is_infinite(g_o) and g_o >= 2 * d + 1:
        checks["odd_girth_floor_forces_dr"] = dr_v.decision and g_o == 2 * d + 1
    checks["odd_girth_spectral_agrees"] = odd_girth_walks(G) == g_o
    checks["masked_power_rule"] = (
        masked_power_check(ctx.ds, ctx.powers)
        and ctx.tables.delta_prime == ctx.profile.delta_prime)
    checks["geodetic_iff_delta_equal"] = \
        geodetic == (ctx.profile.delta == ctx.profile.delta_prime)
    if ctx.normal:
        try:
            spec = ctx.numeric_spectrum
            sb = spectral_predistance(spec)
            worst = 0.0
            for p_exact, p_num in zip(ctx.basis.monic, sb.polys):
                for i in range(max(p_exact.degree, p_num.degree) + 1):
                    worst = max(worst, abs(float(p_exact.coefficient(i))
                                           - float(p_num.coefficient(i))))
            checks["spectral_basis_agrees"] = worst < 1e-8
            f = conjugation_polynomial(spec)
            fA = matrix_polynomial(f, ctx.powers)
            dev = float(max(abs(fA[i, j] - G.adjacency.T[i, j])
                            for i in range(G.n) for j in range(G.n)))
            checks["conjugation_transposes"] = dev < 1e-8
        except (SpectrumError, PerronError) as e:
            alarms.append(f"spectral cross-checks: {e}")
    for name, ok in checks.items():
        if ok is False:
            alarms.append(f"cross-check failed: {name}")
    report.crosschecks = checks
    report.alarms = alarms
    report.tolerances = {"tol": tol, "cluster_tol": cluster_tol,
                         "dps": ctx.dps}
    return report
