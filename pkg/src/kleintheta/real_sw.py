"""Stiefel-Whitney classes of real line bundles over the real Picard torus.

The real locus of V/Lambda under tau splits into components indexed by
(1/2)Lambda^{-tau} / (1/2)(1 - tau)Lambda. Over the component of mu the class
w is a homomorphism Lambda^tau -> Z/2:

    w([0])(lam)  = exponent of alpha(lam) = +-1
    w([mu])(lam) = w([0])(lam) + E(2 mu, lam)   (mod 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import lattice as lt
from .appell_humbert import AHDatum, alpha_from_theta, angle_numerators, is_real_datum
from .errors import EmptyRealLocusError, NotRealError, VerificationError
from .klein import RealCurveModel, picard_involution
from .theta import QuadraticForm, dot2, eval_q, is_real_theta


@dataclass(frozen=True)
class RealComponent:
    """Component of the real torus through mu, stored as the integer vector 2*mu."""

    twice_mu: lt.Vector

    @property
    def mu(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.twice_mu)

    @property
    def is_identity(self) -> bool:
        return not any(self.twice_mu)

    def label(self) -> list[str]:
        return [str(m) for m in self.mu]


@dataclass(frozen=True)
class ComponentGroup:
    tau: lt.Matrix
    basis: tuple[lt.Vector, ...]
    quotient: lt.FiniteQuotient
    components: tuple[RealComponent, ...]

    def canonical(self, twice_mu) -> RealComponent:
        """Canonical component for an arbitrary representative 2*mu."""
        c = lt.coordinates(self.basis, twice_mu)
        red = self.quotient.reduce(c)
        return RealComponent(_combine(self.basis, red, len(self.tau)))

    def __len__(self) -> int:
        return len(self.components)


def _combine(basis, coeffs, dim: int) -> lt.Vector:
    return tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(dim))


def component_group(tau: lt.Matrix) -> ComponentGroup:
    """Canonical representatives of Lambda^{-tau} / (1 - tau)Lambda, which
    doubling identifies with the component set; [0] comes first."""
    dim = len(tau)
    basis = lt.eigenlattice(tau, -1)
    gens = [lt.coordinates(basis, tuple((i == j) - tau[i][j] for i in range(dim)))
            for j in range(dim)]
    quot = lt.quotient_group(gens, len(basis))
    if quot.infinite_index:
        raise VerificationError("(1 - tau)Lambda has infinite index in Lambda^{-tau}")
    comps = tuple(RealComponent(_combine(basis, rep, dim)) for rep in quot.representatives())
    return ComponentGroup(tau, tuple(basis), quot, comps)


def invariant_basis(tau: lt.Matrix) -> list[lt.Vector]:
    """Basis of Lambda^tau, the columns of every Stiefel-Whitney row."""
    return lt.eigenlattice(tau, 1)


def _require_real(datum: AHDatum, tau: lt.Matrix):
    if not is_real_datum(datum, tau):
        raise NotRealError("datum is not real: need E(tau x, tau y) = -E(x, y) and alpha o tau = conj alpha")


def w_value(datum: AHDatum, comp: RealComponent, lam) -> int:
    """w([mu])(lam) for lam in Lambda^tau (realness assumed checked)."""
    ang = datum.alpha(lam)
    if ang not in (0, Fraction(1, 2)):
        raise VerificationError(f"alpha({tuple(lam)}) = exp(2 pi i {ang}) is not +-1 on Lambda^tau")
    shift = lt.pairing(datum.E, comp.twice_mu, lam)
    return (int(2 * ang) + shift) % 2


def w_class(datum: AHDatum, tau: lt.Matrix, comp: RealComponent) -> tuple[int, ...]:
    _require_real(datum, tau)
    return tuple(w_value(datum, comp, b) for b in invariant_basis(tau))


def w_values(datum: AHDatum, comp: RealComponent, lams: np.ndarray) -> np.ndarray:
    """Vectorized w([mu]) over the rows of an integer array of Lambda^tau vectors."""
    num, den = angle_numerators(datum.alpha, lams)
    if np.any(num % (den // 2)):
        raise VerificationError("alpha is not +-1 on some vector of Lambda^tau")
    e = np.array(datum.E, dtype=np.int64).reshape(len(datum.E), len(datum.E))
    shift = np.asarray(lams, dtype=np.int64) @ (e.T @ np.array(comp.twice_mu, dtype=np.int64))
    return (num // (den // 2) + shift) % 2


def norm_value(datum: AHDatum, tau: lt.Matrix, lam) -> int:
    """E(lam, tau lam) mod 2, the value of every w([mu]) on lam + tau lam."""
    return lt.pairing(datum.E, lam, lt.matvec(tau, lam)) % 2


@dataclass(frozen=True)
class SWTable:
    model: RealCurveModel
    form: QuadraticForm
    basis: tuple[lt.Vector, ...]
    components: tuple[RealComponent, ...]
    rows: tuple[tuple[int, ...], ...]
    circle_values: tuple[tuple[int, ...], ...]
    spin: tuple[int, ...]


def sw_table(model: RealCurveModel, q: QuadraticForm) -> SWTable:
    if model.type.n == 0:
        raise EmptyRealLocusError("real locus empty; w undefined")
    if not is_real_theta(q, model):
        raise NotRealError(
            f"form {q.bits()} is not real for type ({model.type}): "
            "realness requires q(T2 x) = q(x) with T2 = iota* mod 2")
    datum = alpha_from_theta(q)
    tau = picard_involution(model)
    _require_real(datum, tau)
    basis = tuple(invariant_basis(tau))
    group = component_group(tau)
    rows, circles = [], []
    for comp in group.components:
        rows.append(tuple(w_value(datum, comp, b) for b in basis))
        circles.append(tuple(w_value(datum, comp, c) for c in model.circle_classes))
    spin = tuple((eval_q(q, [x % 2 for x in c]) + 1) % 2 for c in model.circle_classes)
    check_norm_relation(model, datum, tau)
    return SWTable(model, q, basis, group.components, tuple(rows), tuple(circles), spin)


def check_norm_relation(model: RealCurveModel, datum: AHDatum, tau: lt.Matrix) -> None:
    """w([0])(lam - iota* lam) = <lam, -iota* lam> mod 2 on the standard basis."""
    dim = len(tau)
    zero = RealComponent((0,) * dim)
    for j in range(dim):
        lam = tuple(int(i == j) for i in range(dim))
        image = lt.matvec(model.iota_star, lam)
        lhs = w_value(datum, zero, tuple(a - b for a, b in zip(lam, image)))
        rhs = lt.pairing(datum.E, lam, tuple(-x for x in image)) % 2
        if lhs != rhs:
            raise VerificationError(f"norm relation fails at basis vector {j}")


def row_at(table: SWTable, row: tuple[int, ...], lam) -> int:
    """Evaluate a row (a homomorphism on the basis) at lam in Lambda^tau."""
    c = lt.coordinates(table.basis, lam)
    return sum(ci * ri for ci, ri in zip(c, row)) % 2


def reconstruct_identity_row(table: SWTable) -> tuple[int, ...]:
    """Rebuild row [0] from spin data on the circle classes and norm values
    on (1 - iota*)Lambda alone."""
    model = table.model
    tau = picard_involution(model)
    datum = alpha_from_theta(table.form)
    dim = len(tau)
    gens, vals = [], []
    for c, s in zip(model.circle_classes, table.spin):
        gens.append(c)
        vals.append((s + 1) % 2)
    for j in range(dim):
        x = tuple(int(i == j) for i in range(dim))
        gens.append(tuple(a + b for a, b in zip(x, lt.matvec(tau, x))))
        vals.append(norm_value(datum, tau, x))
    out = []
    for b in table.basis:
        coeffs = lt.solve_integer(gens, b)
        if coeffs is None:
            raise VerificationError(f"basis vector {b} not generated by circle classes and norms")
        out.append(sum(c * v for c, v in zip(coeffs, vals)) % 2)
    return tuple(out)


def translation_shift(table: SWTable, eta) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Predicted change of (rows, spin) under q -> translate(q, eta)."""
    g = table.model.genus
    row = tuple(dot2([x % 2 for x in b], eta, g) for b in table.basis)
    spin = tuple(dot2([x % 2 for x in c], eta, g) for c in table.model.circle_classes)
    return row, spin
