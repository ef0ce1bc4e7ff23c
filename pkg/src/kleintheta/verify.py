"""Verification suites behind `kleintheta verify`.

Every check returns (passed, detail, measurements). Suites are plain lists of
checks; `all` runs them in order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import numpy as np

from . import lattice as lt
from .analytic import (ThetaSeriesParams, curvature_probe, generic_imaginary_part,
                       holonomy_probe, riemann_theta, theta_parity_probe, theta_section)
from .appell_humbert import (SemiCharacter, alpha_from_theta, dual, eval_by_recursion,
                             eval_semicharacter, flat_datum, h0_count, is_real_datum,
                             log_factor_of_automorphy, pairing_character, tensor,
                             theta_formula, trivial_datum, unit, AHDatum)
from .errors import ConvergenceError, KleinThetaError
from .klein import (TopologicalType, check_model, enumerate_types, lemma11_check,
                    picard_involution, rank_mod2, standard_model, validate_type)
from .periods import complex_structure, hermitian_value, structure_defects
from .real_sw import (RealComponent, component_group, invariant_basis, norm_value,
                      reconstruct_identity_row, sw_table, translation_shift, w_class,
                      w_values)
from .tables import dumps, table_to_dict, validate_table_dict
from .theta import (apply_mod2, arf, enumerate_theta, is_real_theta, mod2_involution,
                    real_theta, translate)

SUITE_NAMES = ("lattice", "theta", "ah", "sw", "analytic")


@dataclass
class Settings:
    seed: int = 0
    tol: float | None = None

    def rng(self, salt: int = 0) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str
    seconds: float
    measurements: dict = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.suite}/{self.name}: {self.detail} ({self.seconds:.2f}s)"

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3),
                "measurements": {k: f"{v:.17g}" if isinstance(v, float) else v
                                 for k, v in self.measurements.items()}}


_REGISTRY: dict[str, list] = {name: [] for name in SUITE_NAMES}


def check(suite: str):
    def wrap(fn):
        _REGISTRY[suite].append(fn)
        return fn
    return wrap


def run_suite(name: str, settings: Settings | None = None, on_result=None) -> list[CheckResult]:
    settings = settings or Settings()
    names = SUITE_NAMES if name == "all" else (name,)
    out = []
    for suite in names:
        for fn in _REGISTRY[suite]:
            t0 = time.perf_counter()
            try:
                passed, detail, meas = fn(settings)
            except KleinThetaError as exc:
                passed, detail, meas = False, f"{type(exc).__name__}: {exc}", {}
            res = CheckResult(suite, fn.__name__.replace("_", "-"), bool(passed), detail,
                              time.perf_counter() - t0, meas)
            if on_result:
                on_result(res)
            out.append(res)
    return out


def models(g_max: int, g_min: int = 0):
    return [standard_model(t) for t in enumerate_types(g_max) if t.n and t.g >= g_min]


def coefficient_box(dim: int, bound: int = 2) -> np.ndarray:
    if dim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(product(range(-bound, bound + 1), repeat=dim)), dtype=np.int64)


def mod2_vectors(dim: int) -> np.ndarray:
    return coefficient_box(dim, 0) if dim == 0 else \
        np.array(list(product((0, 1), repeat=dim)), dtype=np.int64)


def q_values(q, xs: np.ndarray) -> np.ndarray:
    """Vectorized eval of q on rows of a 0/1 array."""
    g = q.genus
    lin = xs @ np.array(q.values, dtype=np.int64)
    quad = (xs[:, :g] * xs[:, g:]).sum(axis=1)
    return (lin + quad) % 2


def mod2_pairing_matrix(g: int) -> np.ndarray:
    return np.abs(np.array(lt.standard_form(g), dtype=np.int64).reshape(2 * g, 2 * g))


# ---------------------------------------------------------------- lattice

def determinantal_divisors(m) -> list[int]:
    """Invariant factors via gcds of k x k minors (independent oracle)."""
    r, c = lt.shape(m)
    out, prev = [], 1
    for k in range(1, min(r, c) + 1):
        d = 0
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                d = gcd(d, lt.det(tuple(tuple(m[i][j] for j in cols) for i in rows)))
        if d == 0:
            out += [0] * (min(r, c) - k + 1)
            break
        out.append(d // prev)
        prev = d
    return out


@check("lattice")
def snf_examples(s):
    got = [lt.invariant_factors(m) for m in (lt.identity(2), ((2, 1), (0, 2)), ((0, 2), (-2, 0)))]
    want = [[1, 1], [1, 4], [2, 2]]
    return got == want, f"invariant factors {got}", {}


@check("lattice")
def snf_reproduction(s):
    rng = s.rng(1)
    bad = 0
    shapes = [(0, 0), (0, 3), (2, 0)] + [tuple(rng.integers(1, 5, 2)) for _ in range(120)]
    for r, c in shapes:
        m = lt.as_matrix(rng.integers(-6, 7, (r, c)).tolist()) if r else ()
        u, d, v = lt.smith_normal_form(m, c)
        diag = [d[i][i] for i in range(min(r, c))]
        ok = (r == 0 or lt.matmul(lt.matmul(u, m), v) == d)
        ok = ok and abs(lt.det(u)) == 1 and abs(lt.det(v)) == 1
        ok = ok and all(x >= 0 for x in diag)
        ok = ok and all(diag[i + 1] % diag[i] == 0 if diag[i] else diag[i + 1] == 0
                        for i in range(len(diag) - 1))
        if r and c:
            ok = ok and diag == determinantal_divisors(m)
        bad += not ok
    return bad == 0, f"{len(shapes) - bad}/{len(shapes)} matrices reproduce U M V = D", {}


@check("lattice")
def quotient_order_det(s):
    rng = s.rng(2)
    bad = 0
    for _ in range(100):
        n = int(rng.integers(1, 5))
        m = rng.integers(-5, 6, (n, n)).tolist()
        d = abs(lt.det(lt.as_matrix(m)))
        quot = lt.quotient_group(m, n)
        if d == 0:
            bad += not quot.infinite_index
            continue
        reps = quot.representatives()
        bad += quot.order != d or len(reps) != d or len({quot.reduce(x) for x in reps}) != d
    examples = (lt.quotient_group([(2, 0), (0, 2)], 2).divisors == (2, 2)
                and lt.quotient_group([(1, 0), (0, 1)], 2).order == 1
                and lt.quotient_group([(2,)], 1).order == 2)
    return bad == 0 and examples, f"{100 - bad}/100 random sublattices have order |det|", {}


@check("lattice")
def eigenlattice_rank_saturation(s):
    bad = []
    for m in models(6):
        g = m.genus
        for t in (m.iota_star, picard_involution(m)):
            for sign in (1, -1):
                basis = lt.eigenlattice(t, sign)
                quot = lt.quotient_group(basis, 2 * g)
                if len(basis) != g or any(d != 0 for d in quot.divisors):
                    bad.append((str(m.type), sign))
    return not bad, f"ranks g + g and saturated for all models g <= 6; failures {bad}", {}


@check("lattice")
def type_census(s):
    got = [str(t) for t in enumerate_types(1)]
    want = ["0,1,0", "0,0,1", "1,2,0", "1,0,1", "1,1,1"]
    return got == want, f"enumerate_types(1) = {got}", {}


@check("lattice")
def type_closure(s):
    emitted = set(enumerate_types(6))
    bad = 0
    for g in range(7):
        for n in range(g + 4):
            for a in (0, 1):
                t = TopologicalType(g, n, a)
                bad += validate_type(g, n, a) != (t in emitted)
    g2 = {str(t) for t in emitted if t.g == 2}
    ok = bad == 0 and g2 == {"2,1,0", "2,3,0", "2,0,1", "2,1,1", "2,2,1"}
    return ok, f"enumeration closed under the constraints ({bad} mismatches)", {}


@check("lattice")
def model_invariants(s):
    bad = {str(m.type): p for m in models(6) if (p := check_model(m))}
    return not bad, "all standard models g <= 6 satisfy every model invariant" if not bad else str(bad), {}


@check("lattice")
def component_counts(s):
    t0 = time.perf_counter()
    bad, n_types = [], 0
    for t in enumerate_types(8):
        if not t.n:
            continue
        n_types += 1
        m = standard_model(t)
        k = len(component_group(picard_involution(m)))
        if k != 2 ** (t.n - 1) or k != 2 ** (t.g - rank_mod2(m.h_block)):
            bad.append(str(t))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    return ok, f"{n_types} types g <= 8: component count 2^(n-1); failures {bad}", {"runtime_s": dt}


@check("lattice")
def circle_generation(s):
    bad = [str(m.type) for m in models(6) if not lemma11_check(m)]
    m = standard_model(TopologicalType(1, 2, 0))
    doubled = type(m)(m.type, m.iota_star, m.h_block, tuple(tuple(2 * x for x in c) for c in m.circle_classes))
    return not bad and not lemma11_check(doubled), f"generation holds for all models g <= 6; failures {bad}", {}


# ---------------------------------------------------------------- theta

@check("theta")
def theta_census(s):
    t0 = time.perf_counter()
    counts = {}
    for g in range(7):
        forms = {q.values for q in enumerate_theta(g)}
        counts[g] = len(forms)
    dt = time.perf_counter() - t0
    ok = all(c == 4 ** g for g, c in counts.items()) and dt < 5
    return ok, f"#forms by genus {counts}", {"runtime_s": dt}


@check("theta")
def arf_census(s):
    got = {}
    for g in range(5):
        odd = sum(arf(q) for q in enumerate_theta(g))
        got[g] = (4 ** g - odd, odd)
    want = {g: (2 ** g * (2 ** g + 1) // 2, 2 ** g * (2 ** g - 1) // 2) for g in range(5)}
    return got == want, f"(even, odd) by genus {got}", {}


@check("theta")
def riemann_mumford(s):
    bad = 0
    for g in range(1, 4):
        xs = mod2_vectors(2 * g)
        pair = (xs @ mod2_pairing_matrix(g) @ xs.T) % 2
        sums = (xs[:, None, :] + xs[None, :, :]) % 2
        for q in enumerate_theta(g):
            qv = q_values(q, xs)
            qs = q_values(q, sums.reshape(-1, 2 * g)).reshape(len(xs), len(xs))
            bad += int(np.any(qs != (qv[:, None] + qv[None, :] + pair) % 2))
    return bad == 0, f"q(x+y) = q(x)+q(y)+x.y for all forms and pairs, 1 <= g <= 3 ({bad} failures)", {}


@check("theta")
def arf_zero_count(s):
    bad = 0
    for g in range(4):
        xs = mod2_vectors(2 * g)
        for q in enumerate_theta(g):
            zeros = int((q_values(q, xs) == 0).sum())
            want = 2 ** (2 * g - 1) + 2 ** (g - 1) * (-1) ** arf(q) if g else 1
            bad += zeros != want
    return bad == 0, f"zero counts match 2^(2g-1) +- 2^(g-1), g <= 3 ({bad} failures)", {}


@check("theta")
def translation_torsor(s):
    bad = 0
    for g in range(3):
        forms = list(enumerate_theta(g))
        etas = [tuple(x) for x in mod2_vectors(2 * g)]
        for q in forms:
            orbit = [translate(q, eta) for eta in etas]
            bad += len(set(orbit)) != len(forms)
            for eta, q2 in zip(etas, orbit):
                bad += arf(q2) != (arf(q) + q(eta)) % 2
    return bad == 0, "translation action free and transitive; Arf shifts by q(eta), g <= 2", {}


@check("theta")
def real_forms(s):
    counts = {}
    bad = 0
    for m in models(2):
        t2 = mod2_involution(m)
        reals = real_theta(m)
        counts[str(m.type)] = len(reals)
        inv = [tuple(x) for x in mod2_vectors(2 * m.genus) if apply_mod2(t2, x) == tuple(x)]
        for q in reals:
            bad += sum(not is_real_theta(translate(q, eta), m) for eta in inv)
    ok = bad == 0 and counts["1,2,0"] == 4 and counts["1,1,1"] == 2
    return ok, f"real form counts {counts}; realness kept by invariant translations", {}


# ---------------------------------------------------------------- ah

def random_alternating(rng, dim: int) -> lt.Matrix:
    upper = np.triu(rng.integers(-3, 4, (dim, dim)), 1)
    return lt.as_matrix((upper - upper.T).tolist())


def random_angles(rng, dim: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(rng.integers(0, 12)), int(rng.integers(1, 7))) for _ in range(dim))


@check("ah")
def semicharacter_well_defined(s):
    rng = s.rng(3)
    bad = 0
    for _ in range(200):
        dim = 2 * int(rng.integers(1, 3))
        alpha = SemiCharacter(random_alternating(rng, dim), random_angles(rng, dim))
        lam = rng.integers(-3, 4, dim)
        steps = int(np.abs(lam).sum())
        closed = eval_semicharacter(alpha, lam)
        for _ in range(3):
            order = rng.permutation(steps).tolist()
            bad += eval_by_recursion(alpha, lam, order) != closed
        lam2 = rng.integers(-3, 4, dim)
        rule = (closed + alpha(lam2) + Fraction(lt.pairing(alpha.form, lam, lam2), 2)) % 1
        bad += alpha(lam + lam2) != rule
    return bad == 0, "closed form = step-by-step extension along random orders", {}


@check("ah")
def theta_two_route(s):
    bad, n = 0, 0
    for g in range(3):
        box = coefficient_box(2 * g)
        for q in enumerate_theta(g):
            d = alpha_from_theta(q)
            for lam in box:
                n += 1
                bad += not (theta_formula(q, lam) == eval_by_recursion(d.alpha, lam) == d.alpha(lam))
    return bad == 0, f"(-1)^q(lam) = step recursion on {n} (form, lam) pairs", {}


def unitary_cocycle_defect(datum, period, l1, l2, v) -> float:
    """|a(l1+l2, v) - a(l1, v+l2) a(l2, v)| after multiplying both sides by
    exp(-pi/2 [H(w, w) - H(v, v)]), w = v + l1 + l2, which makes them unimodular."""
    E = np.array(datum.E, dtype=float)
    vr = period.to_real(v)
    w = vr + l1 + l2
    weight = -0.5 * np.pi * (hermitian_value(E, period, w, w) - hermitian_value(E, period, vr, vr)).real
    lhs = log_factor_of_automorphy(datum, period, l1 + l2, v)
    rhs = (log_factor_of_automorphy(datum, period, l1, v + period.to_complex(l2) - period.to_complex(np.zeros_like(l2)))
           + log_factor_of_automorphy(datum, period, l2, v))
    return float(abs(np.exp(lhs + weight) - np.exp(rhs + weight)))


@check("ah")
def cocycle(s):
    tol = s.tol or 1e-9
    rng = s.rng(4)
    worst = 0.0
    for g in (1, 2):
        ms = models(g, g)
        for k in range(100):
            m = ms[k % len(ms)]
            period = complex_structure(m)
            q = list(enumerate_theta(g))[int(rng.integers(0, 4 ** g))]
            datum = tensor(alpha_from_theta(q), flat_datum(random_angles(rng, 2 * g)))
            l1, l2 = rng.integers(-2, 3, (2, 2 * g))
            v = period.to_complex(rng.random(2 * g))
            worst = max(worst, unitary_cocycle_defect(datum, period, l1, l2, v))
    return worst <= tol, f"max unitary cocycle defect {worst:.3g} <= {tol:g}", {"max_defect": worst}


@check("ah")
def tensor_group_law(s):
    rng = s.rng(5)
    bad = 0
    for _ in range(50):
        dim = 2 * int(rng.integers(1, 3))
        e1, e2 = random_alternating(rng, dim), random_alternating(rng, dim)
        d1 = AHDatum(e1, SemiCharacter(e1, random_angles(rng, dim)))
        d2 = AHDatum(e2, SemiCharacter(e2, random_angles(rng, dim)))
        prod_ = tensor(d1, d2)
        bad += tensor(d1, dual(d1)) != trivial_datum(dim // 2)
        for _ in range(5):
            lam = rng.integers(-3, 4, dim)
            bad += prod_.alpha(lam) != (d1.alpha(lam) + d2.alpha(lam)) % 1
    return bad == 0, "tensor adds (E, alpha); d (x) dual(d) is trivial", {}


@check("ah")
def flat_twist_intertwining(s):
    bad = 0
    for g in range(3):
        etas = [tuple(x) for x in mod2_vectors(2 * g)]
        chars = {pairing_character(eta) for eta in etas}
        bad += len(chars) != 4 ** g
        for q in enumerate_theta(g):
            for eta in etas:
                bad += alpha_from_theta(translate(q, eta)) != tensor(alpha_from_theta(q), pairing_character(eta))
    return bad == 0, "alpha(translate(q, eta)) = alpha(q) (x) (-1)^(. eta); 4^g distinct flat characters", {}


@check("ah")
def real_data_on_invariant_lattice(s):
    bad = 0
    for m in models(3):
        tau = picard_involution(m)
        basis = invariant_basis(tau)
        for q in real_theta(m):
            d = alpha_from_theta(q)
            bad += not is_real_datum(d, tau)
            bad += any(d.alpha(b) not in (0, Fraction(1, 2)) for b in basis)
    m = standard_model(TopologicalType(1, 2, 0))
    flat = flat_datum((Fraction(0), Fraction(1, 3)))
    bad += is_real_datum(flat, picard_involution(m))
    bad += is_real_datum(alpha_from_theta(list(enumerate_theta(1))[0]), lt.identity(2))
    return bad == 0, "real theta data are +-1 on Lambda^tau; non-real examples rejected", {}


@check("ah")
def section_counts(s):
    e = lt.standard_form(1)
    got = (h0_count(e).count, h0_count(lt.scale(2, e)).count, h0_count(lt.zeros(2, 2)).degenerate,
           h0_count(lt.standard_form(3)).count)
    return got == (1, 2, True, 1), f"h0(E_std), h0(2E_std), degenerate(0), h0(E_std g=3) = {got}", {}


# ---------------------------------------------------------------- sw

@check("sw")
def norm_coherence(s):
    n_checks, bad = 0, []
    for m in models(3):
        g = m.genus
        tau = picard_involution(m)
        iota = np.array(m.iota_star, dtype=np.int64).reshape(2 * g, 2 * g)
        tau_np = -iota
        e = np.array(m.cup_form, dtype=np.int64).reshape(2 * g, 2 * g)
        box = coefficient_box(2 * g)
        norm_vec = box + box @ tau_np.T
        anti = box - box @ iota.T
        norms = np.einsum("ki,ij,kj->k", box, e, box @ tau_np.T) % 2
        eq2 = np.einsum("ki,ij,kj->k", box, e, -(box @ iota.T)) % 2
        group = component_group(tau)
        shifts = [tuple((i == j) - tau[i][j] for i in range(2 * g)) for j in range(2 * g)]
        for q in real_theta(m):
            d = alpha_from_theta(q)
            zero = RealComponent((0,) * (2 * g))
            if np.any(w_values(d, zero, anti) != eq2):
                bad.append((str(m.type), q.bits(), "eq2"))
            for comp in group.components:
                if np.any(w_values(d, comp, norm_vec) != norms):
                    bad.append((str(m.type), q.bits(), comp.label()))
                row = w_class(d, tau, comp)
                for sh in shifts:
                    alt = RealComponent(tuple(a + b for a, b in zip(comp.twice_mu, sh)))
                    if w_class(d, tau, alt) != row or group.canonical(alt.twice_mu) != comp:
                        bad.append((str(m.type), q.bits(), "coset"))
                n_checks += len(box)
    return not bad, f"{n_checks} (datum, component, lam) norm checks; failures {bad[:3]}", {}


@check("sw")
def torsor_equivariance(s):
    bad, n = 0, 0
    for m in models(2):
        t2 = mod2_involution(m)
        inv = [tuple(x) for x in mod2_vectors(2 * m.genus) if apply_mod2(t2, x) == tuple(x)]
        for q in real_theta(m):
            base = sw_table(m, q)
            for eta in inv:
                moved = sw_table(m, translate(q, eta))
                row_shift, spin_shift = translation_shift(base, eta)
                for r0, r1 in zip(base.rows, moved.rows):
                    bad += tuple((a + b) % 2 for a, b in zip(r0, row_shift)) != r1
                bad += tuple((a + b) % 2 for a, b in zip(base.spin, spin_shift)) != moved.spin
                n += 1
    return bad == 0, f"{n} (form, eta) pairs shift rows by lam.eta and spin by <eta, C_i>", {}


@check("sw")
def identity_row_reconstruction(s):
    bad, n = [], 0
    for m in models(6):
        reals = real_theta(m) if m.genus <= 3 else real_theta(m)[:16]
        for q in reals:
            table = sw_table(m, q)
            n += 1
            if reconstruct_identity_row(table) != table.rows[0]:
                bad.append((str(m.type), q.bits()))
    return not bad, f"row [0] rebuilt from spin data and norms for {n} tables; failures {bad[:3]}", {}


@check("sw")
def worked_examples(s):
    t = sw_table(standard_model(TopologicalType(1, 2, 0)), enumerate_theta(1).__next__())
    ok = t.rows == ((0,), (1,)) and t.circle_values[0] == (0, 0) and t.spin == (1, 1)
    from .theta import QuadraticForm
    t2 = sw_table(standard_model(TopologicalType(1, 1, 1)), QuadraticForm(1, (1, 0)))
    ok = ok and t2.basis == ((1, -2),) and t2.rows == ((1,),)
    return ok, f"(1,2,0) rows {t.rows} spin {t.spin}; (1,1,1) row {t2.rows}", {}


@check("sw")
def json_roundtrip(s):
    import json
    n = 0
    for m in models(2):
        for q in real_theta(m):
            payload = json.loads(dumps(table_to_dict(sw_table(m, q))))
            validate_table_dict(payload)
            n += 1
    return True, f"{n} tables re-parsed and re-validated", {}


# ---------------------------------------------------------------- analytic

@check("analytic")
def period_invariants(s):
    worst = 0.0
    for m in models(3, 1):
        g = m.genus
        for y in (np.eye(g), np.diag(np.arange(1.0, g + 1)), generic_imaginary_part(g)):
            p = complex_structure(m, y)
            worst = max(worst, max(structure_defects(p, m.cup_form, m.iota_star).values()))
            if np.rint(p.conjugation_matrix()).astype(int).tolist() != [list(r) for r in m.iota_star]:
                worst = max(worst, 1.0)
    tol = 1e-12
    return worst <= tol, f"max structural defect {worst:.3g} <= {tol:g}", {"max_defect": worst}


def _holonomy_mismatch(datum, period, lam, tol):
    hol = holonomy_probe(datum, period, lam)
    a = unit(datum.alpha(lam))
    err = abs(hol - a.conjugate())
    flipped = err > tol and abs(hol - a) <= tol
    return err, flipped


@check("analytic")
def holonomy(s):
    tol = s.tol or 1e-6
    rng = s.rng(6)
    t0 = time.perf_counter()
    worst, flips, n = 0.0, 0, 0
    for m in models(2, 1):
        g = m.genus
        period = complex_structure(m)
        basis = [tuple(int(i == j) for i in range(2 * g)) for j in range(2 * g)]
        for q in real_theta(m):
            d = alpha_from_theta(q)
            lams = basis + [tuple(x) for x in rng.integers(-2, 3, (20, 2 * g))]
            for lam in lams:
                err, flipped = _holonomy_mismatch(d, period, lam, tol)
                worst = max(worst, err)
                flips += flipped
                n += 1
    # a flat character with a non-real value separates alpha from its conjugate
    flat = flat_datum((Fraction(1, 3), Fraction(1, 8)))
    period = complex_structure(standard_model(TopologicalType(1, 2, 0)))
    for lam in ((1, 0), (0, 1), (2, -1)):
        err, flipped = _holonomy_mismatch(flat, period, lam, tol)
        worst = max(worst, err)
        flips += flipped
    dt = time.perf_counter() - t0
    detail = f"{n} loops, max |hol - conj(alpha)| {worst:.3g} <= {tol:g}"
    if flips:
        detail += f"; {flips} loops match alpha itself (global conjugation flip)"
    return worst <= tol and dt < 60, detail, {"max_error": worst, "runtime_s": dt}


@check("analytic")
def curvature(s):
    out, ok = {}, True
    for t in (TopologicalType(1, 2, 0), TopologicalType(1, 1, 1), TopologicalType(2, 1, 0)):
        m = standard_model(t)
        period = complex_structure(m)
        d = alpha_from_theta(real_theta(m)[0])
        coarse = curvature_probe(d, period, 1e-2, seed=s.seed).max_deviation
        fine = curvature_probe(d, period, 5e-3, seed=s.seed).max_deviation
        ok = ok and coarse <= 1e-3 and coarse >= 3 * fine
        out[f"{t}:h=1e-2"] = coarse
        out[f"{t}:h=5e-3"] = fine
    flat = curvature_probe(trivial_datum(1), complex_structure(standard_model(TopologicalType(1, 2, 0))), 1e-2)
    ok = ok and flat.max_deviation <= 1e-12
    detail = ", ".join(f"{k} {v:.3g}" for k, v in out.items())
    return ok, f"(i/2pi)F vs E: {detail}; flat {flat.max_deviation:.3g}", out


@check("analytic")
def theta_parity(s):
    params = ThetaSeriesParams(radius=8, zero_threshold=1e-8)
    bad, inconclusive, n = 0, 0, 0
    min_even, max_odd = np.inf, 0.0
    for m in models(3, 1):
        period = complex_structure(m, generic_imaginary_part(m.genus))
        for q in enumerate_theta(m.genus):
            r = theta_parity_probe(q, period, params)
            n += 1
            bad += not r.agrees
            inconclusive += r.inconclusive
            if r.odd:
                max_odd = max(max_odd, r.magnitude)
            else:
                min_even = min(min_even, r.magnitude)
    ok = bad == 0 and inconclusive == 0 and min_even >= 1e-2
    return ok, (f"{n} characteristics: vanishing = odd Arf; min |even| {min_even:.3g}, "
                f"max |odd| {max_odd:.3g}, inconclusive {inconclusive}"), {"min_even": float(min_even), "max_odd": max_odd}


@check("analytic")
def theta_truncation(s):
    rng = s.rng(7)
    worst = 0.0
    for g in (1, 2, 3):
        for y in (np.eye(g) + 0.1 * np.ones((g, g)), generic_imaginary_part(g) + 0.2 * np.eye(g)):
            Z = 0.5 * rng.integers(0, 2, (g, g)) + 1j * y
            Z = 0.5 * (Z + Z.T)
            for a, b in product(((0,) * g, (0.5,) * g), repeat=2):
                z = rng.random(g)
                worst = max(worst, abs(riemann_theta(a, b, z, Z, 6) - riemann_theta(a, b, z, Z, 8)))
    return worst <= 1e-10, f"max change from R = 6 to R = 8: {worst:.3g}", {"max_change": worst}


@check("analytic")
def theta_section_law(s):
    rng = s.rng(8)
    worst = 0.0
    for m in models(2, 1):
        period = complex_structure(m, generic_imaginary_part(m.genus))
        for q in enumerate_theta(m.genus):
            d = alpha_from_theta(q)
            for _ in range(4):
                lam = rng.integers(-1, 2, 2 * m.genus)
                v = period.to_complex(rng.random(2 * m.genus))
                shifted = v + period.to_complex(lam) - period.to_complex(np.zeros(2 * m.genus))
                lhs = theta_section(q, period, shifted)
                rhs = np.exp(log_factor_of_automorphy(d, period, lam, v)) * theta_section(q, period, v)
                worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    return worst <= 1e-9, f"theta sections transform by a(H, alpha_q): max rel. error {worst:.3g}", {"max_rel_error": worst}
