"""Complex structures on the real Picard torus compatible with the real model.

A point of R^{2g} in lattice coordinates (x, y) is the complex vector
x + Z y, where Z = H/2 + iY. Integral Re Z * 2 is what makes complex
conjugation preserve the lattice, acting there as iota*.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lattice as lt
from .errors import IncompatibleStructureError
from .klein import RealCurveModel

STRUCTURAL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PeriodData:
    genus: int
    h_block: lt.Matrix
    Y: np.ndarray
    Z: np.ndarray
    J: np.ndarray

    @property
    def realify(self) -> np.ndarray:
        """(x, y) -> (Re, Im) of x + Zy."""
        g = self.genus
        return np.block([[np.eye(g), self.Z.real], [np.zeros((g, g)), self.Z.imag]])

    def to_complex(self, r) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        g = self.genus
        return r[..., :g] + r[..., g:] @ self.Z.T

    def to_real(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        y = np.linalg.solve(self.Y, v.imag.T).T if self.genus else v.imag
        x = v.real - y @ self.Z.real.T
        return np.concatenate([x, y], axis=-1)

    def conjugation_matrix(self) -> np.ndarray:
        g = self.genus
        r = self.realify
        flip = np.diag([1.0] * g + [-1.0] * g)
        return np.linalg.solve(r, flip @ r)


def complex_structure(model: RealCurveModel, Y=None) -> PeriodData:
    g = model.genus
    Y = np.eye(g) if Y is None else np.asarray(Y, dtype=float)
    if Y.shape != (g, g) or not np.allclose(Y, Y.T, atol=STRUCTURAL_TOL):
        raise ValueError("Y must be a symmetric g x g matrix")
    if g and np.linalg.eigvalsh(Y).min() <= STRUCTURAL_TOL:
        raise ValueError("Y must be positive definite")
    h = np.array(model.h_block, dtype=float).reshape(g, g)
    Z = 0.5 * h + 1j * Y
    r = np.block([[np.eye(g), Z.real], [np.zeros((g, g)), Z.imag]])
    mult_i = np.block([[np.zeros((g, g)), -np.eye(g)], [np.eye(g), np.zeros((g, g))]])
    J = np.linalg.solve(r, mult_i @ r) if g else np.zeros((0, 0))
    return PeriodData(g, model.h_block, Y, Z, J)


def structure_defects(period: PeriodData, e: lt.Matrix, iota: lt.Matrix) -> dict[str, float]:
    """Size of each PeriodData invariant violation; all should be ~0."""
    g = period.genus
    if g == 0:
        return {"J^2+I": 0.0, "type(1,1)": 0.0, "positivity": 0.0, "conjugation": 0.0}
    E = np.array(e, dtype=float)
    J = period.J
    sym = E @ J
    sym = 0.5 * (sym + sym.T)
    conj = period.conjugation_matrix()
    return {
        "J^2+I": float(np.abs(J @ J + np.eye(2 * g)).max()),
        "type(1,1)": float(np.abs(J.T @ E @ J - E).max()),
        # positive means the form E(v, Jv) fails to be positive definite
        "positivity": float(max(0.0, -np.linalg.eigvalsh(sym).min())),
        "conjugation": float(np.abs(conj - np.array(iota, dtype=float)).max()),
    }


def check_compatible(e, period: PeriodData, tol: float = STRUCTURAL_TOL) -> np.ndarray:
    E = np.array(e, dtype=float).reshape(2 * period.genus, 2 * period.genus)
    if period.genus and np.abs(period.J.T @ E @ period.J - E).max() > tol * max(1.0, np.abs(E).max()):
        raise IncompatibleStructureError("alternating form is not of type (1,1) for this complex structure")
    return E


def hermitian_from_alt(e, period: PeriodData) -> np.ndarray:
    """Matrix of H(v, w) = E(v, Jw) + i E(v, w) in complex coordinates,
    conjugate-linear in the first slot."""
    E = check_compatible(e, period)
    g = period.genus
    real = E @ period.J
    return real[:g, :g] + 1j * E[:g, :g]


def hermitian_value(E: np.ndarray, period: PeriodData, r1, r2):
    """H(r1, r2) for real lattice-coordinate vectors (broadcasting over rows)."""
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    ej = E @ period.J
    re = np.einsum("...i,ij,...j->...", r1, ej, r2)
    im = np.einsum("...i,ij,...j->...", r1, E, r2)
    return re + 1j * im
