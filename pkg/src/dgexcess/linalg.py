"""Exact matrix arithmetic and the spectral side of the adjacency algebra.

Two arithmetic tracks coexist.  All quantities derivable from integer
matrix entries (moments, minimal polynomial, orthogonal basis norms) are
computed in ``fractions.Fraction`` with Python integers underneath, so
they are exact at any size.  Quantities that live at an irrational
Perron value go through mpmath at a working precision controlled by the
``DGEXCESS_PRECISION`` environment variable (decimal digits, default
50), read at call time.

Matrix powers escalate from int64 to Python-integer object arrays
before any entry can overflow; nothing here ever wraps silently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .polynomial import Polynomial

_INT64_SAFE = 2 ** 62


class SpectrumError(RuntimeError):
    """Numeric eigenvalue clustering disagrees with the exact root count."""


class PerronError(RuntimeError):
    """No admissible Perron value (real, positive, simple, maximal modulus)."""


def working_dps() -> int:
    raw = os.environ.get("DGEXCESS_PRECISION", "50")
    try:
        dps = int(raw)
    except ValueError:
        raise ValueError(f"DGEXCESS_PRECISION must be an integer, got {raw!r}")
    return max(dps, 15)


class MatrixPowers:
    """Lazily extended list I, A, A^2, ... with overflow-safe dtype escalation."""

    def __init__(self, A: np.ndarray):
        A = np.asarray(A)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError("square matrix required")
        self.n = A.shape[0]
        self.A = A.astype(np.int64)
        self._pow = [np.eye(self.n, dtype=np.int64), self.A]
        self._max_col = int(np.abs(self.A).sum(axis=0).max())

    def __getitem__(self, k: int) -> np.ndarray:
        if k < 0:
            raise IndexError("negative power")
        while len(self._pow) <= k:
            last = self._pow[-1]
            if last.dtype == object:
                nxt = last @ self.A.astype(object)
            elif int(np.abs(last).max()) * max(self._max_col, 1) >= _INT64_SAFE:
                nxt = last.astype(object) @ self.A.astype(object)
            else:
                nxt = last @ self.A
            self._pow.append(nxt)
        return self._pow[k]

    def trace(self, k: int) -> int:
        return int(np.trace(self[k]))


def frobenius_sum(P: np.ndarray, Q: np.ndarray) -> int:
    """Exact sum of the entrywise product of two integer matrices."""
    if P.dtype != object and Q.dtype != object:
        bound = int(np.abs(P).max(initial=0)) * int(np.abs(Q).max(initial=0)) * P.size
        if bound < _INT64_SAFE:
            return int((P * Q).sum())
    return int((P.astype(object) * Q.astype(object)).sum())


def trace_inner_product(C: np.ndarray, D: np.ndarray):
    """<C, D> = (1/n) tr(C D*) = (1/n) sum C.D entrywise for real matrices.

    Exact (Fraction) when both arguments hold integers or Fractions;
    otherwise returns whatever scalar type the entries produce.
    """
    if C.shape != D.shape or C.ndim != 2 or C.shape[0] != C.shape[1]:
        raise ValueError(f"shape mismatch {C.shape} vs {D.shape}")
    n = C.shape[0]
    if C.dtype != object and D.dtype != object and \
            np.issubdtype(C.dtype, np.integer) and np.issubdtype(D.dtype, np.integer):
        return Fraction(frobenius_sum(C, D), n)
    total = (C * D).sum()
    if isinstance(total, (int, Fraction)):
        return Fraction(total, n)
    return total / n


def matrix_polynomial(p: Polynomial, powers: MatrixPowers) -> np.ndarray:
    """p(A) as an object array, exact when p is."""
    n = powers.n
    acc = np.zeros((n, n), dtype=object)
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        acc = acc + powers[k].astype(object) * c
    return acc


def normality_test(A: np.ndarray) -> bool:
    A = A.astype(np.int64)
    return bool((A @ A.T == A.T @ A).all())


# -- Orthogonal monomial basis and the minimal polynomial -------------------

@dataclass(frozen=True)
class MonomialBasis:
    """Monic orthogonal polynomials of A under the trace inner product.

    polys[k] has degree k; norms2[k] = <p_k, p_k> > 0.  The first monic
    residual with norm zero is the minimal polynomial, so dhat = its
    degree minus one = len(polys) - 1.
    """

    polys: tuple
    norms2: tuple
    minpoly: Polynomial

    @property
    def dhat(self) -> int:
        return len(self.polys) - 1


def orthogonal_monomial_basis(powers: MatrixPowers) -> MonomialBasis:
    """Gram-Schmidt over 1, x, x^2, ... in exact rational arithmetic."""
    n = powers.n
    moments = {}

    def moment(i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in moments:
            moments[key] = frobenius_sum(powers[key[0]], powers[key[1]])
        return moments[key]

    polys = []
    norms2 = []
    k = 0
    while True:
        r = [Fraction(0)] * k + [Fraction(1)]
        for j, pj in enumerate(polys):
            ip = Fraction(sum(c * moment(i, k) for i, c in enumerate(pj.coeffs) if c), n)
            if ip:
                f = ip / norms2[j]
                for i, c in enumerate(pj.coeffs):
                    if c:
                        r[i] -= f * c
        # r is orthogonal to everything of lower degree, so <r, r> = <r, x^k>
        nrm = Fraction(sum(c * moment(i, k) for i, c in enumerate(r) if c), n)
        if nrm == 0:
            return MonomialBasis(tuple(polys), tuple(norms2), Polynomial(r))
        if nrm < 0:
            raise ArithmeticError("negative norm in Gram-Schmidt, moment table corrupt")
        polys.append(Polynomial(r))
        norms2.append(nrm)
        k += 1
        if k > n:
            raise ArithmeticError("minimal polynomial degree exceeded matrix size")


def _as_powers(G) -> MatrixPowers:
    if isinstance(G, MatrixPowers):
        return G
    return MatrixPowers(getattr(G, "adjacency", G))


def minimal_polynomial(G):
    """Minimal polynomial (monic, integer coefficients) and dhat = deg - 1."""
    m = orthogonal_monomial_basis(_as_powers(G)).minpoly
    return m, m.degree - 1


def power_traces(G, m: int):
    """tr(A^0), tr(A^1), ..., tr(A^m) as exact integers."""
    powers = _as_powers(G)
    return [powers.trace(k) for k in range(m + 1)]


# -- Perron value and full spectrum -----------------------------------------

def _poly_mpf(p: Polynomial):
    coeffs = []
    for c in p.coeffs:
        if isinstance(c, Fraction):
            coeffs.append(mpmath.mpf(c.numerator) / c.denominator)
        else:
            coeffs.append(mpmath.mpf(c))
    return Polynomial(coeffs)


def refine_real_root(s: Polynomial, seed: float, dps: int):
    """Newton-polish a real root of s to dps digits; certify integer roots.

    Returns (value_mpf, exact) where exact is a Fraction when the root
    is provably rational (monic integer polynomial, so rational means
    integer) and None otherwise.
    """
    ds = s.derivative()
    with mpmath.workdps(dps + 10):
        sm = _poly_mpf(s)
        dsm = _poly_mpf(ds)
        x = mpmath.mpf(seed)
        eps = mpmath.mpf(10) ** (-(dps + 5))
        for _ in range(200):
            fx = sm(x)
            dfx = dsm(x)
            if dfx == 0:
                break
            step = fx / dfx
            x = x - step
            if abs(step) <= eps * max(1, abs(x)):
                break
        c = int(mpmath.nint(x))
        if s(c) == 0 and abs(x - c) < mpmath.mpf(10) ** (-dps):
            return mpmath.mpf(c), Fraction(c)
        return +x, None


def perron_value(A: np.ndarray, minpoly: Polynomial, dps=None):
    """Largest real eigenvalue, refined to working precision and certified
    exact when rational.  Returns (mpf, Fraction | None)."""
    if dps is None:
        dps = working_dps()
    s = minpoly.squarefree_part()
    n = A.shape[0]
    if n == 1:
        return mpmath.mpf(0), Fraction(0)
    # integer fast path: a regular graph pins the Perron value to its degree
    row = A.sum(axis=1)
    if np.all(row == row[0]) and np.all(A.sum(axis=0) == row[0]):
        k = int(row[0])
        if s(k) == 0:
            return mpmath.mpf(k), Fraction(k)
    w = np.linalg.eigvals(A.astype(np.float64))
    seed = float(max(z.real for z in w if abs(z.imag) < 1e-6 * max(1.0, abs(z))))
    return refine_real_root(s, seed, dps)


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues with multiplicities, Perron value first.

    values holds (complex, multiplicity) pairs; multiplicities sum to n.
    lambda0 is an mpmath refinement of the Perron value and
    lambda0_exact its Fraction certificate when rational.  d counts
    distinct eigenvalues minus one and is exact (degree of the
    square-free part of the minimal polynomial); dhat comes from the
    minimal polynomial itself.
    """

    values: tuple
    lambda0: object
    lambda0_exact: object
    n: int
    d: int
    dhat: int
    cluster_tol: float

    @property
    def exact_lambda0(self) -> bool:
        return self.lambda0_exact is not None

    def multiplicity(self, value) -> int:
        for z, m in self.values:
            if abs(z - value) <= max(self.cluster_tol, 1e-12):
                return m
        return 0

    def pi0(self):
        """prod (lambda0 - lambda_i) over the non-Perron distinct values."""
        lam = float(self.lambda0)
        out = 1.0 + 0.0j
        for z, _ in self.values[1:]:
            out *= lam - z
        return out


def _newton_complex(coeffs, dcoeffs, z, iterations=80):
    for _ in range(iterations):
        f = 0.0 + 0.0j
        for c in reversed(coeffs):
            f = f * z + c
        df = 0.0 + 0.0j
        for c in reversed(dcoeffs):
            df = df * z + c
        if df == 0:
            return z
        step = f / df
        z = z - step
        if abs(step) <= 1e-14 * max(1.0, abs(z)):
            break
    return z


def spectrum(G, cluster_tol=None, minpoly: Polynomial = None, dps=None) -> Spectrum:
    """Numeric spectrum reconciled against the exact distinct-root count.

    Floating eigenvalues are clustered at cluster_tol (default 1e-8
    times the largest absolute row sum), each cluster Newton-polished on
    the square-free part of the minimal polynomial, and coinciding
    clusters merged.  If the survivors do not number exactly
    deg(squarefree) the discrepancy is raised as SpectrumError rather
    than absorbed.
    """
    A = np.asarray(getattr(G, "adjacency", G))
    if minpoly is None:
        minpoly = orthogonal_monomial_basis(MatrixPowers(A)).minpoly
    n = A.shape[0]
    if dps is None:
        dps = working_dps()
    s = minpoly.squarefree_part()
    n_distinct = s.degree
    tol = cluster_tol
    if tol is None:
        tol = 1e-8 * max(1.0, float(np.abs(A).sum(axis=1).max()))

    if n == 1:
        return Spectrum(((0j, 1),), mpmath.mpf(0), Fraction(0), 1, 0, minpoly.degree - 1, tol)

    w = np.linalg.eigvals(A.astype(np.float64))
    clusters = []  # [sum, count]
    for z in sorted(w, key=lambda z: (z.real, z.imag)):
        placed = False
        for cl in clusters:
            if abs(z - cl[0] / cl[1]) <= tol:
                cl[0] += z
                cl[1] += 1
                placed = True
                break
        if not placed:
            clusters.append([z, 1])

    coeffs = [complex(c) for c in s.coeffs]
    dcoeffs = [complex(c) for c in s.derivative().coeffs]
    polished = []  # [value, mult]
    for total, count in clusters:
        z = _newton_complex(coeffs, dcoeffs, total / count)
        for item in polished:
            if abs(z - item[0]) <= tol:
                item[1] += count
                break
        else:
            polished.append([z, count])

    if len(polished) != n_distinct:
        raise SpectrumError(
            f"eigenvalue clustering found {len(polished)} distinct values, "
            f"square-free minimal polynomial has degree {n_distinct}")

    radius = max(abs(z) for z, _ in polished)
    perron = [item for item in polished
              if abs(abs(item[0]) - radius) <= tol
              and abs(item[0].imag) <= tol and item[0].real > 0]
    if len(perron) != 1:
        raise PerronError(f"{len(perron)} candidate Perron clusters at modulus {radius:.6g}")
    if perron[0][1] != 1:
        raise PerronError(f"Perron value has multiplicity {perron[0][1]}")

    lam_mpf, lam_exact = refine_real_root(s, perron[0][0].real, dps)
    rest = sorted((item for item in polished if item is not perron[0]),
                  key=lambda item: (-item[0].real, -item[0].imag))
    lam_complex = complex(float(lam_mpf), 0.0)
    values = ((lam_complex, 1),) + tuple((z, m) for z, m in rest)
    if sum(m for _, m in values) != n:
        raise SpectrumError("multiplicities do not sum to the vertex count")
    return Spectrum(values, lam_mpf, lam_exact, n, n_distinct - 1,
                    minpoly.degree - 1, tol)


def hoffman_ingredients(minpoly: Polynomial, lambda0):
    """Split m(x) = (x - lambda0) S(x); returns (S, S(lambda0)).

    Exact when lambda0 is rational; otherwise carried out in mpmath at
    the precision of lambda0.
    """
    if isinstance(lambda0, (int, Fraction)):
        S, rem = minpoly.synthetic_divide(Fraction(lambda0))
        if rem != 0:
            raise ValueError(f"{lambda0} is not a root of the minimal polynomial")
        return S, S(Fraction(lambda0))
    m_mpf = _poly_mpf(minpoly)
    S, rem = m_mpf.synthetic_divide(mpmath.mpf(lambda0))
    scale = max(abs(c) for c in m_mpf.coeffs)
    if abs(rem) > scale * mpmath.mpf(10) ** (-working_dps() // 2):
        raise ValueError("claimed Perron value leaves a large division residual")
    return S, S(mpmath.mpf(lambda0))
