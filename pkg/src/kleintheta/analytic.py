"""Floating-point oracles: Riemann theta series, holonomy of the Chern
connection along lattice loops, and plaquette curvature estimates.

Tolerances: 1e-12 for structural identities, 1e-9 for algebraic identities
evaluated numerically, 1e-6 for integrated quantities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from . import lattice as lt
from .appell_humbert import AHDatum, log_factor_of_automorphy
from .errors import ConvergenceError
from .periods import PeriodData, check_compatible, hermitian_value
from .theta import QuadraticForm, arf


@dataclass(frozen=True)
class ThetaSeriesParams:
    radius: int = 8
    zero_threshold: float = 1e-8
    steps: int = 10_000

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("truncation radius must be >= 1")
        if self.zero_threshold <= 0 or self.steps < 1:
            raise ValueError("thresholds and step counts must be positive")


def _lattice_points(g: int, radius: int) -> np.ndarray:
    r = np.arange(-radius, radius + 1)
    if g == 0:
        return np.zeros((1, 0))
    return np.array(list(product(r, repeat=g)), dtype=float)


def _theta_terms(a, b, z, Z, radius):
    g = Z.shape[0]
    n = _lattice_points(g, radius) + np.asarray(a, dtype=float)
    z = np.asarray(z, dtype=complex) + np.asarray(b, dtype=float)
    quad = np.einsum("ki,ij,kj->k", n, Z, n)
    return n, np.exp(1j * np.pi * quad + 2j * np.pi * (n @ z))


def riemann_theta(a, b, z, Z, radius: int = 8) -> complex:
    """Truncated theta series with characteristic [a, b] over |m|_inf <= radius.

    For real z the omitted tail is at most tail_bound(g, radius, lambda_min(Im Z)).
    """
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    _, terms = _theta_terms(a, b, z, Z, radius)
    return complex(terms.sum())


def theta_gradient(a, b, z, Z, radius: int = 8) -> tuple[complex, np.ndarray]:
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    n, terms = _theta_terms(a, b, z, Z, radius)
    return complex(terms.sum()), 2j * np.pi * (terms @ n)


def tail_bound(g: int, radius: int, y_min: float) -> float:
    """Bound on the omitted terms for real z: each shell |m|_inf = k holds
    (2k+1)^g - (2k-1)^g points of modulus <= exp(-pi y_min (k - 1/2)^2)."""
    total = 0.0
    for k in range(radius + 1, radius + 60):
        total += ((2 * k + 1) ** g - (2 * k - 1) ** g) * np.exp(-np.pi * y_min * (k - 0.5) ** 2)
    return float(total)


def characteristic(q: QuadraticForm) -> tuple[np.ndarray, np.ndarray]:
    """Analytic characteristic [a, b] with 2b_i = q(e_i) and 2a_i = q(f_i)."""
    g = q.genus
    b = np.array(q.values[:g], dtype=float) / 2
    a = np.array(q.values[g:], dtype=float) / 2
    return a, b


@dataclass(frozen=True)
class ParityResult:
    agrees: bool
    magnitude: float
    odd: bool
    inconclusive: bool


def theta_parity_probe(q: QuadraticForm, period: PeriodData,
                       params: ThetaSeriesParams = ThetaSeriesParams()) -> ParityResult:
    """Does theta[a, b](0) vanish exactly when Arf(q) = 1?"""
    if q.genus != period.genus:
        raise ValueError("genus mismatch")
    a, b = characteristic(q)
    mag = abs(riemann_theta(a, b, np.zeros(q.genus), period.Z, params.radius))
    vanishes = mag < params.zero_threshold
    inconclusive = params.zero_threshold <= mag < 100 * params.zero_threshold
    odd = arf(q) == 1
    return ParityResult(vanishes == odd and not inconclusive, mag, odd, inconclusive)


def holonomy_probe(datum: AHDatum, period: PeriodData, lam, steps: int = 10_000,
                   basepoint=None, tol: float = 1e-9) -> complex:
    """Holonomy of the Chern connection of exp(-pi H(v, v)) along t -> [v0 + t lam].

    The frame 1 of the automorphy trivialization is transported with the
    midpoint rule and closed up through the factor of automorphy. From a
    basepoint v0 off the lattice the result carries the extra curvature phase
    exp(2 pi i E(v0, lam)). The run is repeated at half the step count; a
    discrepancy above ``tol`` raises ConvergenceError.
    """
    if steps < 2:
        raise ConvergenceError("need at least two integration steps")
    E = check_compatible(datum.E, period)
    g = period.genus
    lam_r = np.asarray(lam, dtype=float)
    v0 = np.zeros(2 * g) if basepoint is None else np.asarray(basepoint, dtype=float)

    def transport_log(n: int) -> complex:
        t = (np.arange(n) + 0.5) / n
        pts = v0[None, :] + t[:, None] * lam_r[None, :]
        # connection form d log h restricted to (1,0) part: -pi H(v, dv)
        conn = -np.pi * hermitian_value(E, period, pts, np.broadcast_to(lam_r, pts.shape))
        return -conn.sum() / n

    close = log_factor_of_automorphy(datum, period, lam, period.to_complex(v0))
    fine = np.exp(transport_log(steps) - close)
    coarse = np.exp(transport_log(steps // 2) - close)
    if abs(fine - coarse) > tol:
        raise ConvergenceError(f"holonomy not converged at {steps} steps (|diff| = {abs(fine - coarse):.3g})")
    return complex(fine)


def _is_theta_datum(datum: AHDatum) -> bool:
    g = datum.genus
    return datum.E == lt.standard_form(g) and all(x in (0, Fraction(1, 2)) for x in datum.alpha.angles)


class _SectionFrame:
    """Unitary frame s/|s| from the theta section of a principal theta datum:
    s(v) = exp(pi/2 v^T Y^{-1} v) theta[a, b](v) with a_k = q(e_k)/2,
    b_k = q(f_k)/2 transforms by the canonical factor of automorphy."""

    def __init__(self, datum: AHDatum, period: PeriodData, radius: int):
        g = datum.genus
        self.period = period
        self.E = np.array(datum.E, dtype=float)
        self.a = np.array([float(x) for x in datum.alpha.angles[:g]])
        self.b = np.array([float(x) for x in datum.alpha.angles[g:]])
        self.Yinv = np.linalg.inv(period.Y)
        self.radius = radius

    def log_norm(self, r) -> float:
        v = self.period.to_complex(r)
        th = riemann_theta(self.a, self.b, v, self.period.Z, self.radius)
        quad = np.pi * (v @ self.Yinv @ v).real
        return float(2 * np.log(abs(th)) + quad - np.pi * hermitian_value(self.E, self.period, r, r).real)

    def dlog_norm(self, r, eta) -> float:
        v = self.period.to_complex(r)
        w = self.period.to_complex(eta) - self.period.to_complex(np.zeros_like(eta))
        th, grad = theta_gradient(self.a, self.b, v, self.period.Z, self.radius)
        d_theta = 2 * (grad @ w / th).real
        d_quad = 2 * np.pi * (v @ self.Yinv @ w).real
        d_herm = -2 * np.pi * (np.asarray(r) @ self.E @ self.period.J @ np.asarray(eta))
        return float(d_theta + d_quad + d_herm)

    def connection(self, r, xi) -> complex:
        """A(xi) = -(i/2) d log |s|^2 (J xi)."""
        return -0.5j * self.dlog_norm(r, self.period.J @ np.asarray(xi, dtype=float))


class _AutomorphyFrame:
    """Unitary frame exp(pi H(v, v)/2) of the automorphy trivialization:
    A(xi) = -pi i E(v, xi), linear in v."""

    def __init__(self, datum: AHDatum, period: PeriodData):
        self.E = np.array(datum.E, dtype=float)

    def connection(self, r, xi) -> complex:
        return -np.pi * 1j * float(np.asarray(r) @ self.E @ np.asarray(xi))


@dataclass(frozen=True)
class CurvatureReport:
    max_deviation: float
    plaquettes: int
    frame: str


def _edge(frame, start, step, substeps: int) -> complex:
    """Midpoint-rule integral of the connection form along start -> start + step."""
    piece = step / substeps
    return sum(frame.connection(start + (k + 0.5) * piece, piece) for k in range(substeps))


def plaquette_curvature(frame, base, u, w, h: float, substeps: int = 8) -> float:
    """(i / 2 pi) F(u, w) from the holonomy around one h x h plaquette."""
    base = np.asarray(base, dtype=float)
    hu = h * np.asarray(u, dtype=float)
    hw = h * np.asarray(w, dtype=float)
    loop = (_edge(frame, base, hu, substeps) + _edge(frame, base + hu, hw, substeps)
            + _edge(frame, base + hu + hw, -hu, substeps) + _edge(frame, base + hw, -hw, substeps))
    return float((1j / (2 * np.pi) * loop / h ** 2).real)


def curvature_probe(datum: AHDatum, period: PeriodData, grid_step: float,
                    samples: int = 24, seed: int = 0, radius: int = 8,
                    keep_fraction: float = 0.3, substeps: int = 8) -> CurvatureReport:
    """Max |(i/2pi)F - E| over small plaquettes in the coordinate planes.

    Theta data use the unitary frame of their theta section, whose connection
    form is not polynomial, so the estimate carries a genuine O(h^2) error
    from the midpoint transport along each edge;
    base points where |s| drops below ``keep_fraction`` of its sampled maximum
    are skipped to stay clear of the theta divisor. Other data fall back to the
    automorphy frame.
    """
    g = period.genus
    E = check_compatible(datum.E, period)
    rng = np.random.default_rng(seed)
    bases = rng.random((samples, 2 * g))
    if _is_theta_datum(datum) and g:
        frame = _SectionFrame(datum, period, radius)
        norms = np.array([frame.log_norm(p) for p in bases])
        keep = norms >= norms.max() + 2 * np.log(keep_fraction)
        bases = bases[keep]
        kind = "theta-section"
    else:
        frame = _AutomorphyFrame(datum, period)
        kind = "automorphy"
    worst, count = 0.0, 0
    eye = np.eye(2 * g)
    for p in bases:
        for i, j in combinations(range(2 * g), 2):
            est = plaquette_curvature(frame, p, eye[i], eye[j], grid_step, substeps)
            worst = max(worst, abs(est - E[i, j]))
            count += 1
    return CurvatureReport(worst, count, kind)


def theta_section(q: QuadraticForm, period: PeriodData, v, radius: int = 8) -> complex:
    """The section s of the principal theta datum of q at the complex point v."""
    g = q.genus
    a = np.array(q.values[:g], dtype=float) / 2
    b = np.array(q.values[g:], dtype=float) / 2
    v = np.asarray(v, dtype=complex)
    quad = 0.5 * np.pi * (v @ np.linalg.inv(period.Y) @ v)
    return complex(np.exp(quad) * riemann_theta(a, b, v, period.Z, radius))


def generic_imaginary_part(g: int) -> np.ndarray:
    """A fixed non-diagonal Im Z. Diagonal choices such as Y = I give product
    abelian varieties for many models, where some even theta-nulls vanish."""
    y = np.eye(g) + 0.1 * np.diag(np.arange(g))
    for i in range(g):
        for j in range(g):
            if i != j:
                y[i, j] = 0.05 * (1 + (i + j) % 3)
    return y
