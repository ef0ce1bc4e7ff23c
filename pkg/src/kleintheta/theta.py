"""Quadratic forms on (Z/2)^{2g} refining the mod-2 intersection pairing.

A theta characteristic is represented throughout by its theta form q. A form
is stored as its 2g basis values q(e_1), ..., q(e_g), q(f_1), ..., q(f_g);
in this basis the pairing x.y is sum_i (x_{e_i} y_{f_i} + x_{f_i} y_{e_i}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .klein import RealCurveModel


@dataclass(frozen=True)
class QuadraticForm:
    genus: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 2 * self.genus:
            raise ValueError(f"need {2 * self.genus} basis values, got {len(self.values)}")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("basis values must be bits")

    def __call__(self, x) -> int:
        return eval_q(self, x)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "QuadraticForm":
        if len(bits) % 2:
            raise ValueError("a form on (Z/2)^{2g} needs an even number of bits")
        return cls(len(bits) // 2, tuple(int(b) for b in bits))

    def bits(self) -> str:
        return ",".join(str(b) for b in self.values)


def dot2(x, y, g: int) -> int:
    """Mod-2 intersection pairing."""
    return sum(x[i] * y[g + i] + x[g + i] * y[i] for i in range(g)) % 2


def eval_q(q: QuadraticForm, x) -> int:
    g = q.genus
    if len(x) != 2 * g:
        raise ValueError(f"vector of length {len(x)} for a genus-{g} form")
    x = [xi % 2 for xi in x]
    lin = sum(xi * qi for xi, qi in zip(x, q.values))
    quad = sum(x[i] * x[g + i] for i in range(g))
    return (lin + quad) % 2


def arf(q: QuadraticForm) -> int:
    g = q.genus
    return sum(q.values[i] * q.values[g + i] for i in range(g)) % 2


def enumerate_theta(g: int) -> Iterator[QuadraticForm]:
    """All 2^{2g} forms, basis values read as a binary counter (e_1 most
    significant)."""
    width = 2 * g
    for k in range(1 << width):
        yield QuadraticForm(g, tuple((k >> (width - 1 - j)) & 1 for j in range(width)))


def translate(q: QuadraticForm, eta) -> QuadraticForm:
    """The form x -> q(x) + x.eta, i.e. the action of the 2-torsion point eta."""
    g = q.genus
    if len(eta) != 2 * g:
        raise ValueError("eta has the wrong length")
    eta = [v % 2 for v in eta]
    # b_i . eta for the basis vector b_i
    shift = list(eta[g:]) + list(eta[:g])
    return QuadraticForm(g, tuple((v + s) % 2 for v, s in zip(q.values, shift)))


def difference(q1: QuadraticForm, q2: QuadraticForm) -> tuple[int, ...]:
    """The unique eta with translate(q2, eta) == q1."""
    g = q1.genus
    d = [(a + b) % 2 for a, b in zip(q1.values, q2.values)]
    return tuple(d[g:] + d[:g])


def mod2_involution(model: RealCurveModel) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(x % 2 for x in row) for row in model.iota_star)


def apply_mod2(t2, x) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, x)) % 2 for row in t2)


def is_real_theta(q: QuadraticForm, model: RealCurveModel) -> bool:
    """q o T2 == q, checked on a basis.

    q o T2 is again a refinement of the pairing (T2 is symplectic mod 2), and
    two refinements agreeing on a basis are equal.
    """
    g = model.genus
    if q.genus != g:
        raise ValueError(f"genus mismatch: form {q.genus}, model {g}")
    t2 = mod2_involution(model)
    for j in range(2 * g):
        b = tuple(int(i == j) for i in range(2 * g))
        if eval_q(q, apply_mod2(t2, b)) != q.values[j]:
            return False
    return True


def real_theta(model: RealCurveModel) -> list[QuadraticForm]:
    return [q for q in enumerate_theta(model.genus) if is_real_theta(q, model)]


def zero_count(q: QuadraticForm) -> int:
    """Brute-force size of q^{-1}(0); exponential in g."""
    g = q.genus
    n = 0
    for k in range(1 << (2 * g)):
        x = [(k >> j) & 1 for j in range(2 * g)]
        n += eval_q(q, x) == 0
    return n
