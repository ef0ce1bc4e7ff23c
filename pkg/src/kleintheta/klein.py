"""Topological types of Klein surfaces and standard models of the involution
on H^1(C, Z)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import lattice as lt
from .errors import InvalidTypeError, SearchExhaustedError, EmptyRealLocusError

DEFAULT_SEARCH_BOUND = 2


@dataclass(frozen=True, order=True)
class TopologicalType:
    """(genus, number of real circles, non-orientability bit of C/<iota>)."""

    g: int
    n: int
    a: int

    def __str__(self) -> str:
        return f"{self.g},{self.n},{self.a}"

    @classmethod
    def parse(cls, text: str) -> "TopologicalType":
        try:
            g, n, a = (int(x) for x in text.split(","))
        except ValueError:
            raise InvalidTypeError(f"cannot parse topological type {text!r}; expected g,n,a") from None
        return cls(g, n, a)

    def violation(self) -> str | None:
        """Name of the first violated constraint, or None for a valid type."""
        g, n, a = self.g, self.n, self.a
        if g < 0 or n < 0:
            return "g and n must be non-negative"
        if a not in (0, 1):
            return "a must be 0 or 1"
        if a == 0:
            if not 1 <= n <= g + 1:
                return "range condition 1 <= n <= g+1 (a = 0)"
            if (g + 1 - n) % 2:
                return "parity condition g+1-n = 0 mod 2 (a = 0)"
        elif not 0 <= n <= g:
            return "range condition 0 <= n <= g (a = 1)"
        return None

    @property
    def comessatti(self) -> int:
        return self.g + 1 - self.n


def validate_type(g: int, n: int, a: int) -> bool:
    return TopologicalType(g, n, a).violation() is None


def enumerate_types(g_max: int) -> list[TopologicalType]:
    out = [TopologicalType(g, n, a)
           for g in range(g_max + 1) for a in (0, 1) for n in range(g + 2)]
    return [t for t in out if t.violation() is None]


@dataclass(frozen=True)
class RealCurveModel:
    type: TopologicalType
    iota_star: lt.Matrix
    h_block: lt.Matrix
    circle_classes: tuple[lt.Vector, ...]

    @property
    def genus(self) -> int:
        return self.type.g

    @property
    def cup_form(self) -> lt.Matrix:
        return lt.standard_form(self.type.g)


def involution_from_block(h: lt.Matrix) -> lt.Matrix:
    g = len(h)
    return lt.block(lt.identity(g), h, lt.zeros(g, g), lt.neg(lt.identity(g)))


def normal_form_block(t: TopologicalType) -> lt.Matrix:
    """Symmetric 0/1 block of mod-2 rank g+1-n; zero diagonal iff a = 0."""
    g, r = t.g, t.comessatti
    h = [[0] * g for _ in range(g)]
    if t.a == 1:
        for i in range(r):
            h[i][i] = 1
    else:
        for k in range(r // 2):
            h[2 * k][2 * k + 1] = h[2 * k + 1][2 * k] = 1
    return lt.as_matrix(h)


def rank_mod2(m: lt.Matrix) -> int:
    rows = [[x % 2 for x in r] for r in m]
    rk, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def _anti_invariant_generation(iota: lt.Matrix, classes) -> tuple[int | None, list[lt.Vector]]:
    """Order of H^{-iota*} / (classes + (1 - iota*)Lambda), plus the eigenbasis."""
    dim = len(iota)
    basis = lt.eigenlattice(iota, -1)
    if dim == 0:
        return 1, basis
    one_minus = [tuple((i == j) - iota[i][j] for i in range(dim)) for j in range(dim)]
    gens = []
    for v in list(classes) + one_minus:
        c = lt.solve_integer(basis, v)
        if c is None:
            return None, basis
        gens.append(c)
    return lt.quotient_group(gens, len(basis)).order, basis


def _candidates(iota: lt.Matrix, basis: list[lt.Vector], bound: int):
    """Circle-class candidates in preference order, generated lazily."""
    dim = len(iota)
    seen = set()
    for j in range(dim):
        v = tuple(int(i == j) for i in range(dim))
        if lt.matvec(iota, v) == tuple(-x for x in v):
            seen.add(v)
            yield v
    for b in basis:
        for v in (b, tuple(-x for x in b)):
            if v not in seen:
                seen.add(v)
                yield v
    rng = range(-bound, bound + 1)
    k = len(basis)
    for weight in range(2, k * bound + 1):
        for coeffs in product(rng, repeat=k):
            if sum(abs(c) for c in coeffs) != weight:
                continue
            v = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(dim))
            if v not in seen and lt.is_primitive(v):
                seen.add(v)
                yield v


def find_circle_classes(iota: lt.Matrix, n: int, bound: int = DEFAULT_SEARCH_BOUND) -> tuple[lt.Vector, ...]:
    """Deterministic greedy search for n classes satisfying the generation
    property together with (1 - iota*)Lambda."""
    dim = len(iota)
    if dim == 0:
        # rank-0 lattice: every class is the zero vector
        return ((),) * n
    order, basis = _anti_invariant_generation(iota, [])
    chosen: list[lt.Vector] = []
    for v in _candidates(iota, basis, bound):
        if len(chosen) == n - 1 or order == 1:
            break
        new_order, _ = _anti_invariant_generation(iota, chosen + [v])
        if new_order is not None and new_order < order:
            chosen.append(v)
            order = new_order
    if order != 1:
        raise SearchExhaustedError(
            f"no circle classes generating H^-iota within coefficient bound {bound}")
    closure = tuple(-sum(c[i] for c in chosen) for i in range(dim))
    if len(chosen) < n and chosen and lt.is_primitive(closure):
        chosen.append(closure)
    for v in _candidates(iota, basis, bound):
        if len(chosen) >= n:
            break
        if v not in chosen:
            chosen.append(v)
    if len(chosen) < n:
        raise SearchExhaustedError(f"only {len(chosen)} of {n} circle classes found")
    return tuple(chosen)


def standard_model(t: TopologicalType, search_bound: int = DEFAULT_SEARCH_BOUND) -> RealCurveModel:
    problem = t.violation()
    if problem:
        raise InvalidTypeError(f"invalid topological type ({t}): violates {problem}")
    if t.n == 0:
        raise EmptyRealLocusError(f"type ({t}) has empty real locus; w is undefined")
    h = normal_form_block(t)
    iota = involution_from_block(h)
    classes = find_circle_classes(iota, t.n, search_bound)
    return RealCurveModel(t, iota, h, classes)


def check_model(model: RealCurveModel) -> list[str]:
    """Every violated model invariant, as human-readable strings."""
    problems = []
    iota, e = model.iota_star, model.cup_form
    g = model.genus
    if not lt.is_involution(iota):
        problems.append("iota* is not an involution")
    if not lt.is_anti_symplectic(iota, e):
        problems.append("iota* is not anti-symplectic")
    if model.h_block != lt.transpose(model.h_block, g):
        problems.append("H block not symmetric")
    if rank_mod2(model.h_block) != model.type.comessatti:
        problems.append("rank_2(H) != g+1-n")
    if len(model.circle_classes) != model.type.n:
        problems.append("wrong number of circle classes")
    for c in model.circle_classes:
        if g and not lt.is_primitive(c):
            problems.append(f"circle class {c} not primitive")
        if lt.matvec(iota, c) != tuple(-x for x in c):
            problems.append(f"circle class {c} not anti-invariant")
    for c1 in model.circle_classes:
        for c2 in model.circle_classes:
            if lt.pairing(e, c1, c2):
                problems.append(f"cup product of {c1} and {c2} is non-zero")
    if not lemma11_check(model):
        problems.append("circle classes and (1-iota*)H^1 do not generate H^1(-iota*)")
    return problems


def lemma11_check(model: RealCurveModel) -> bool:
    order, _ = _anti_invariant_generation(model.iota_star, model.circle_classes)
    return order == 1


def picard_involution(model: RealCurveModel) -> lt.Matrix:
    """The involution on the Picard lattice, tau = -iota*."""
    return lt.neg(model.iota_star)
