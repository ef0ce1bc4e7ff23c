"""Appell-Humbert data (E, alpha) for line bundles on a complex torus.

Semi-character values are kept as exact rational angles: the angle z stands
for exp(2 pi i z). Complex numbers only appear in the factor of automorphy.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import lattice as lt
from .periods import PeriodData, check_compatible, hermitian_value
from .theta import QuadraticForm, dot2, eval_q

HALF = Fraction(1, 2)


def _angle(x) -> Fraction:
    return Fraction(x) % 1


@dataclass(frozen=True)
class SemiCharacter:
    """alpha on Z^{2g}, determined by its basis angles and the form E."""

    form: lt.Matrix
    angles: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.angles) != len(self.form):
            raise ValueError("one angle per basis vector")
        object.__setattr__(self, "angles", tuple(_angle(a) for a in self.angles))

    @property
    def rank(self) -> int:
        return len(self.angles)

    def __call__(self, lam) -> Fraction:
        return eval_semicharacter(self, lam)


@dataclass(frozen=True)
class AHDatum:
    E: lt.Matrix
    alpha: SemiCharacter

    def __post_init__(self):
        if not lt.is_skew(self.E):
            raise ValueError("E must be alternating")
        if self.alpha.form != self.E:
            raise ValueError("semi-character is adapted to a different form")

    @property
    def genus(self) -> int:
        return len(self.E) // 2


def eval_semicharacter(alpha: SemiCharacter, lam) -> Fraction:
    """Closed form: sum c_i z_i + 1/2 sum_{i<j} c_i c_j E_ij (mod 1)."""
    c = [int(x) for x in lam]
    if len(c) != alpha.rank:
        raise ValueError("lattice vector has the wrong length")
    e = alpha.form
    lin = sum((ci * a for ci, a in zip(c, alpha.angles)), Fraction(0))
    quad = sum(c[i] * c[j] * e[i][j] for i in range(len(c)) for j in range(i + 1, len(c)))
    return _angle(lin + HALF * quad)


def eval_by_recursion(alpha: SemiCharacter, lam, order=None) -> Fraction:
    """Evaluate by walking lam one signed basis step at a time, applying
    alpha(x + b) = alpha(x) alpha(b) exp(pi i E(x, b)) at each step."""
    e = alpha.form
    steps = []
    for i, ci in enumerate(lam):
        steps += [(i, 1 if ci > 0 else -1)] * abs(int(ci))
    if order is not None:
        steps = [steps[k] for k in order]
    x = [0] * alpha.rank
    value = Fraction(0)
    for i, s in steps:
        b = [0] * alpha.rank
        b[i] = s
        # alpha(-b_i) = -alpha(b_i) since alpha(0) = 1 and E(b, -b) = 0
        value += s * alpha.angles[i] + HALF * lt.pairing(e, x, b)
        x[i] += s
    return _angle(value)


def angle_numerators(alpha: SemiCharacter, lams: np.ndarray) -> tuple[np.ndarray, int]:
    """Vectorized exact evaluation: returns (numerators mod D, D)."""
    denom = 2
    for a in alpha.angles:
        denom = lcm(denom, a.denominator)
    lams = np.asarray(lams, dtype=np.int64)
    z = np.array([int(a * denom) for a in alpha.angles], dtype=np.int64)
    upper = np.triu(np.array(alpha.form, dtype=np.int64).reshape(alpha.rank, alpha.rank), 1)
    lin = lams @ z
    quad = np.einsum("ki,ij,kj->k", lams, upper, lams)
    return (lin + (denom // 2) * quad) % denom, denom


def unit(angle: Fraction) -> complex:
    return cmath.exp(2j * cmath.pi * float(angle))


def log_factor_of_automorphy(datum: AHDatum, period: PeriodData, lam, v) -> complex:
    E = check_compatible(datum.E, period)
    lam_r = np.asarray(lam, dtype=float)
    v_r = period.to_real(v)
    h_lv = hermitian_value(E, period, lam_r, v_r)
    h_ll = hermitian_value(E, period, lam_r, lam_r)
    return 2j * np.pi * float(datum.alpha(lam)) + np.pi * (h_lv + 0.5 * h_ll)


def factor_of_automorphy(datum: AHDatum, period: PeriodData, lam, v) -> complex:
    """a(lam, v) = alpha(lam) exp(pi [H(lam, v) + H(lam, lam)/2])."""
    return complex(np.exp(log_factor_of_automorphy(datum, period, lam, v)))


def trivial_datum(g: int) -> AHDatum:
    z = lt.zeros(2 * g, 2 * g)
    return AHDatum(z, SemiCharacter(z, (Fraction(0),) * (2 * g)))


def flat_datum(angles) -> AHDatum:
    z = lt.zeros(len(angles), len(angles))
    return AHDatum(z, SemiCharacter(z, tuple(angles)))


def pairing_character(eta) -> AHDatum:
    """The flat datum lam -> (-1)^{lam . eta}."""
    g = len(eta) // 2
    angles = []
    for j in range(2 * g):
        b = [int(i == j) for i in range(2 * g)]
        angles.append(HALF * dot2(b, eta, g))
    return flat_datum(angles)


def tensor(d1: AHDatum, d2: AHDatum) -> AHDatum:
    if len(d1.E) != len(d2.E):
        raise ValueError("genus mismatch")
    e = lt.add(d1.E, d2.E)
    angles = tuple(a + b for a, b in zip(d1.alpha.angles, d2.alpha.angles))
    return AHDatum(e, SemiCharacter(e, angles))


def dual(d: AHDatum) -> AHDatum:
    e = lt.neg(d.E)
    return AHDatum(e, SemiCharacter(e, tuple(-a for a in d.alpha.angles)))


def alpha_from_theta(q: QuadraticForm) -> AHDatum:
    """(cup form, lam -> (-1)^{q(lam mod 2)}), with lam cap [C] taken to be the
    coordinate identity."""
    e = lt.standard_form(q.genus)
    return AHDatum(e, SemiCharacter(e, tuple(HALF * v for v in q.values)))


def theta_formula(q: QuadraticForm, lam) -> Fraction:
    return HALF * eval_q(q, [x % 2 for x in lam])


@dataclass(frozen=True)
class SectionCount:
    count: int
    degenerate: bool
    positive: bool | None = None


def h0_count(e: lt.Matrix, period: PeriodData | None = None) -> SectionCount:
    """Pfaffian d_1...d_g of E for a non-degenerate polarization.

    With a period supplied, also reports whether E(v, Jv) is positive; a
    non-positive form has no sections and the count is 0.
    """
    divs = lt.invariant_factors(e)
    if not lt.is_skew(e):
        raise ValueError("E must be alternating")
    if any(d == 0 for d in divs):
        return SectionCount(0, True)
    # elementary divisors of an alternating form come in equal pairs
    count = 1
    for d in divs[::2]:
        count *= d
    positive = None
    if period is not None and period.genus:
        E = check_compatible(e, period)
        sym = E @ period.J
        positive = bool(np.linalg.eigvalsh(0.5 * (sym + sym.T)).min() > 0)
        if not positive:
            count = 0
    return SectionCount(count, False, positive)


def is_real_datum(datum: AHDatum, tau: lt.Matrix) -> bool:
    """E(tau x, tau y) = -E(x, y) and alpha(tau b) = conj alpha(b) on a basis.

    Both sides of the second condition are semi-characters for -E, so basis
    agreement suffices.
    """
    if len(tau) != len(datum.E):
        raise ValueError("genus mismatch")
    if not lt.is_anti_symplectic(tau, datum.E):
        return False
    tau_t = lt.transpose(tau, len(tau))
    for j, col in enumerate(tau_t):
        if datum.alpha(col) != _angle(-datum.alpha.angles[j]):
            return False
    return True
