from fractions import Fraction

import numpy as np
import pytest

from kleintheta.analytic import (ThetaSeriesParams, curvature_probe, generic_imaginary_part,
                                 holonomy_probe, riemann_theta, tail_bound, theta_parity_probe,
                                 theta_section)
from kleintheta.appell_humbert import AHDatum, SemiCharacter, alpha_from_theta, flat_datum, log_factor_of_automorphy, unit
from kleintheta.errors import ConvergenceError, IncompatibleStructureError
from kleintheta.klein import TopologicalType, standard_model
from kleintheta.periods import complex_structure, structure_defects
from kleintheta.theta import QuadraticForm, enumerate_theta, real_theta


def test_theta_constant_at_i():
    # theta_3(0, i) = pi^(1/4) / Gamma(3/4)
    from math import gamma, pi
    assert riemann_theta([0], [0], [0], [[1j]]) == pytest.approx(pi ** 0.25 / gamma(0.75), abs=1e-14)
    assert abs(riemann_theta([0.5], [0.5], [0], [[1j]])) < 1e-15


def test_tail_bound_small():
    assert tail_bound(3, 8, 0.8) < 1e-50


@pytest.mark.parametrize("t", [TopologicalType(1, 2, 0), TopologicalType(2, 1, 0), TopologicalType(3, 2, 1)], ids=str)
def test_period_structure(t):
    m = standard_model(t)
    for y in (None, generic_imaginary_part(t.g)):
        p = complex_structure(m, y)
        assert max(structure_defects(p, m.cup_form, m.iota_star).values()) < 1e-12


def test_parity_generic_genus_two():
    m = standard_model(TopologicalType(2, 3, 0))
    p = complex_structure(m, generic_imaginary_part(2))
    for q in enumerate_theta(2):
        r = theta_parity_probe(q, p, ThetaSeriesParams())
        assert r.agrees and not r.inconclusive


def test_section_transformation_law():
    m = standard_model(TopologicalType(1, 1, 1))
    p = complex_structure(m)
    rng = np.random.default_rng(1)
    for q in enumerate_theta(1):
        d = alpha_from_theta(q)
        for lam in [(1, 0), (0, 1), (1, -1)]:
            v = p.to_complex(rng.random(2))
            lhs = theta_section(q, p, v + p.to_complex(lam))
            rhs = np.exp(log_factor_of_automorphy(d, p, lam, v)) * theta_section(q, p, v)
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_holonomy_is_conjugate():
    m = standard_model(TopologicalType(1, 2, 0))
    p = complex_structure(m)
    d = flat_datum((Fraction(1, 3), Fraction(1, 8)))
    for lam in [(1, 0), (0, 1), (1, 1)]:
        hol = holonomy_probe(d, p, lam)
        assert abs(hol - unit(d.alpha(lam)).conjugate()) < 1e-9
    d = alpha_from_theta(real_theta(m)[3])
    want = unit(d.alpha((1, 1))).conjugate()
    assert abs(holonomy_probe(d, p, (1, 1)) - want) < 1e-6
    # away from the origin the closed-up loop picks up exp(2 pi i E(v0, lam))
    v0 = np.array([0.3, 0.2])
    shift = np.exp(2j * np.pi * (v0 @ np.array(d.E) @ np.array([1, 1])))
    assert abs(holonomy_probe(d, p, (1, 1), basepoint=v0) - want * shift) < 1e-6


def test_holonomy_convergence_guard():
    m = standard_model(TopologicalType(1, 2, 0))
    with pytest.raises(ConvergenceError):
        holonomy_probe(alpha_from_theta(QuadraticForm(1, (0, 0))), complex_structure(m), (1, 0), steps=1)


def test_incompatible_form_rejected():
    m = standard_model(TopologicalType(2, 1, 0))
    p = complex_structure(m)
    # pairs e_1 with e_2: not of type (1,1) for the period structure
    e = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))
    d = AHDatum(e, SemiCharacter(e, (0, 0, 0, 0)))
    with pytest.raises(IncompatibleStructureError):
        holonomy_probe(d, p, (1, 0, 0, 0))


def test_curvature_converges():
    m = standard_model(TopologicalType(1, 2, 0))
    p = complex_structure(m)
    d = alpha_from_theta(QuadraticForm(1, (0, 0)))
    coarse = curvature_probe(d, p, 1e-2, samples=8).max_deviation
    fine = curvature_probe(d, p, 5e-3, samples=8).max_deviation
    assert coarse <= 1e-3 and fine * 3 <= coarse
