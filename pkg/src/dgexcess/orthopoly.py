"""Pre-distance polynomials and their spectral-side counterparts.

The pre-distance polynomials are the monic orthogonal sequence of the
adjacency matrix under the trace inner product; their squared norms are
the generic layer weights that the excess comparisons run on.  Built
twice: exactly from integer moments, and numerically from the spectrum
alone.  The two routes agreeing is one of the standing cross-checks.

Also here: the conjugation polynomial (interpolates z -> conj z on the
spectrum, giving f(A) = A^T exactly when A is normal) and the Hoffman
polynomial n S(x) / S(lambda0), whose value at A is the all-ones matrix
precisely on regular digraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .digraph import Digraph, distance_structure, delta_profile, regularity_test
from .linalg import (MatrixPowers, MonomialBasis, Spectrum, SpectrumError,
                     hoffman_ingredients, matrix_polynomial,
                     orthogonal_monomial_basis, perron_value, working_dps)
from .polynomial import Polynomial


@dataclass(frozen=True)
class PredistanceBasis:
    """Monic orthogonal polynomials with the layer data needed downstream.

    monic[k] is the degree-k pre-distance polynomial, norms2[k] its
    squared norm (the generic weight epsilon_k).  c2[k] = delta_k /
    epsilon_k rescales to the norm of the distance-k layer for k up to
    the diameter and is 1 past it; only the square is ever stored.
    """

    monic: tuple
    norms2: tuple
    c2: tuple
    diameter: int
    d: int
    exact: bool

    @property
    def dhat(self) -> int:
        return len(self.monic) - 1

    def q_partial(self, k: int) -> Polynomial:
        """Sum of the pre-distance polynomials through degree k."""
        acc = Polynomial.zero()
        for p in self.monic[:k + 1]:
            acc = acc + p
        return acc


def predistance_polynomials(G: Digraph, powers: MatrixPowers = None,
                            monomial_basis: MonomialBasis = None,
                            structure=None) -> PredistanceBasis:
    if powers is None:
        powers = MatrixPowers(G.adjacency)
    if monomial_basis is None:
        monomial_basis = orthogonal_monomial_basis(powers)
    if structure is None:
        structure = distance_structure(G)
    profile = delta_profile(structure)
    D = structure.diameter
    dhat = monomial_basis.dhat
    if D > dhat:
        raise ArithmeticError(f"diameter {D} exceeds minimal polynomial bound {dhat}")
    d = monomial_basis.minpoly.squarefree_part().degree - 1
    c2 = tuple(profile.delta[k] / monomial_basis.norms2[k] for k in range(D + 1)) \
        + (Fraction(1),) * (dhat - D)
    return PredistanceBasis(monomial_basis.polys, monomial_basis.norms2, c2,
                            D, d, True)


# -- Spectral route ----------------------------------------------------------

@dataclass(frozen=True)
class SpectralBasis:
    polys: tuple
    norms2: tuple


def _moment_matrix(spec: Spectrum, top: int) -> np.ndarray:
    """mu[i, j] = <x^i, x^j> from eigenvalues alone; validated real."""
    lam = np.array([z for z, _ in spec.values], dtype=complex)
    mult = np.array([m for _, m in spec.values], dtype=float)
    V = np.vander(lam, top + 1, increasing=True)
    mu = (V.T * mult) @ V.conj() / spec.n
    scale = max(1.0, float(np.abs(mu).max()))
    if float(np.abs(mu.imag).max()) > 1e-8 * scale:
        raise SpectrumError("spectral moment matrix has a large imaginary part")
    return mu.real


def spectral_predistance(spec: Spectrum) -> SpectralBasis:
    """Gram-Schmidt over the spectral inner product, no matrix arithmetic.

    Runs to the known degree bound dhat instead of hunting for a zero
    norm numerically.
    """
    top = spec.dhat + 1
    mu = _moment_matrix(spec, max(top, 1))
    polys = []
    norms2 = []
    for k in range(spec.dhat + 1):
        r = np.zeros(k + 1)
        r[k] = 1.0
        for j, pj in enumerate(polys):
            ip = sum(c * mu[i, k] for i, c in enumerate(pj))
            r[:len(pj)] -= (ip / norms2[j]) * pj
        nrm = float(sum(c * mu[i, k] for i, c in enumerate(r)))
        if nrm <= 0:
            raise SpectrumError(f"spectral Gram-Schmidt lost rank at degree {k}")
        polys.append(r)
        norms2.append(nrm)
    return SpectralBasis(tuple(Polynomial(tuple(p)) for p in polys), tuple(norms2))


def spectral_inner_product(p: Polynomial, q: Polynomial, spec: Spectrum) -> float:
    """(1/n) sum m_i p(lambda_i) q(conj lambda_i), validated real."""
    total = 0j
    for z, m in spec.values:
        total += m * complex(p(z)) * complex(q(np.conj(z)))
    total /= spec.n
    if abs(total.imag) > 1e-8 * max(1.0, abs(total)):
        raise SpectrumError("spectral inner product has a large imaginary part")
    return total.real


def conjugation_polynomial(spec: Spectrum) -> Polynomial:
    """Lagrange interpolation of z -> conj z on the distinct eigenvalues.

    On a normal adjacency matrix the result satisfies f(A) = A^T, which
    is how transpose-polynomiality gets tested numerically.
    """
    lam = [complex(z) for z, _ in spec.values]
    full = Polynomial((1.0 + 0j,))
    for z in lam:
        full = full * Polynomial((-z, 1.0 + 0j))
    f = Polynomial.zero()
    for z in lam:
        quotient, _ = full.synthetic_divide(z)
        den = quotient(z)
        if abs(den) < 1e-12 * max(1.0, abs(z)) ** max(spec.d, 1):
            raise ValueError("coincident eigenvalues, conjugation polynomial undefined")
        f = f + quotient.scale(np.conj(z) / den)
    coeffs = [complex(c) for c in f.coeffs]
    scale = max([1.0] + [abs(c) for c in coeffs])
    if max([0.0] + [abs(c.imag) for c in coeffs]) > 1e-8 * scale:
        raise SpectrumError("conjugation polynomial has large imaginary coefficients")
    return Polynomial(tuple(c.real for c in coeffs))


# -- Hoffman polynomial ------------------------------------------------------

@dataclass(frozen=True)
class HoffmanPolynomial:
    """H = n S(x) / S(lambda0) with (x - lambda0) S(x) the minimal polynomial."""

    poly: Polynomial
    exact: bool
    lambda0: object          # mpf
    lambda0_exact: object    # Fraction | None
    dps: int


def hoffman_polynomial(G: Digraph, powers: MatrixPowers = None,
                       minpoly: Polynomial = None, dps=None) -> HoffmanPolynomial:
    if dps is None:
        dps = working_dps()
    if powers is None:
        powers = MatrixPowers(G.adjacency)
    if minpoly is None:
        minpoly = orthogonal_monomial_basis(powers).minpoly
    is_reg, degree = regularity_test(G)
    if is_reg and G.n > 1 and minpoly(degree) == 0:
        lam_exact = Fraction(degree)
        lam = mpmath.mpf(degree)
    else:
        lam, lam_exact = perron_value(G.adjacency, minpoly, dps)
    if lam_exact is not None:
        S, S0 = hoffman_ingredients(minpoly, lam_exact)
        if S0 == 0:
            raise ArithmeticError("Perron value is a repeated root, Hoffman scaling broke")
        H = S.scale(Fraction(G.n) / S0)
        return HoffmanPolynomial(H, True, lam, lam_exact, dps)
    with mpmath.workdps(dps):
        S, S0 = hoffman_ingredients(minpoly, lam)
        H = S.scale(G.n / S0)
    return HoffmanPolynomial(H, False, lam, None, dps)


def hoffman_matrix(hp: HoffmanPolynomial, powers: MatrixPowers) -> np.ndarray:
    """H(A) as an object array (Fractions when exact, mpf otherwise)."""
    if hp.exact:
        return matrix_polynomial(hp.poly, powers)
    with mpmath.workdps(hp.dps):
        return matrix_polynomial(hp.poly, powers)


def hoffman_check(hp: HoffmanPolynomial, powers: MatrixPowers, tol=1e-9):
    """Does H(A) equal the all-ones matrix?  The regularity criterion.

    Returns (flag, max deviation); the deviation is exact zero or a
    Fraction/float bound depending on the arithmetic track.
    """
    HA = hoffman_matrix(hp, powers)
    n = powers.n
    if hp.exact:
        dev = max(abs(HA[i, j] - 1) for i in range(n) for j in range(n))
        return dev == 0, dev
    with mpmath.workdps(hp.dps):
        dev = max(abs(HA[i, j] - 1) for i in range(n) for j in range(n))
        return bool(dev <= tol), float(dev)
