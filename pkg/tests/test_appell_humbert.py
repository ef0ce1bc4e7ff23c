from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kleintheta import lattice as lt
from kleintheta.appell_humbert import (AHDatum, SemiCharacter, alpha_from_theta, angle_numerators,
                                       dual, eval_by_recursion, factor_of_automorphy, flat_datum,
                                       h0_count, is_real_datum, log_factor_of_automorphy,
                                       pairing_character, tensor, theta_formula, trivial_datum)
from kleintheta.klein import TopologicalType, picard_involution, standard_model
from kleintheta.periods import complex_structure
from kleintheta.theta import enumerate_theta, real_theta, translate


def semicharacters():
    def build(args):
        dim, upper, angles = args
        e = [[0] * dim for _ in range(dim)]
        k = 0
        for i in range(dim):
            for j in range(i + 1, dim):
                e[i][j], e[j][i] = upper[k], -upper[k]
                k += 1
        e = lt.as_matrix(e)
        return SemiCharacter(e, tuple(Fraction(a, 12) for a in angles))

    return st.sampled_from([2, 4]).flatmap(lambda d: st.tuples(
        st.just(d),
        st.lists(st.integers(-3, 3), min_size=d * (d - 1) // 2, max_size=d * (d - 1) // 2),
        st.lists(st.integers(0, 11), min_size=d, max_size=d))).map(build)


def vectors(dim):
    return st.lists(st.integers(-3, 3), min_size=dim, max_size=dim)


@settings(deadline=None)
@given(semicharacters(), st.data())
def test_semicharacter_law(alpha, data):
    x = data.draw(vectors(alpha.rank))
    y = data.draw(vectors(alpha.rank))
    s = [a + b for a, b in zip(x, y)]
    assert alpha(s) == (alpha(x) + alpha(y) + Fraction(lt.pairing(alpha.form, x, y), 2)) % 1
    assert alpha(x) == eval_by_recursion(alpha, x)
    order = data.draw(st.permutations(range(sum(abs(c) for c in x))))
    assert eval_by_recursion(alpha, x, order) == alpha(x)


@given(semicharacters(), st.data())
def test_vectorized_angles(alpha, data):
    lams = np.array([data.draw(vectors(alpha.rank)) for _ in range(5)])
    num, den = angle_numerators(alpha, lams)
    for lam, k in zip(lams, num):
        assert Fraction(int(k), den) == alpha(lam)


@pytest.mark.parametrize("g", [1, 2])
def test_theta_formula_matches_recursion(g):
    for q in enumerate_theta(g):
        d = alpha_from_theta(q)
        for lam in product(range(-2, 3), repeat=2 * g):
            assert theta_formula(q, lam) == eval_by_recursion(d.alpha, lam)


def test_translation_is_flat_twist():
    for q in enumerate_theta(2):
        for eta in product((0, 1), repeat=4):
            assert alpha_from_theta(translate(q, eta)) == tensor(alpha_from_theta(q), pairing_character(eta))


def test_tensor_and_dual():
    d = alpha_from_theta(next(enumerate_theta(2)))
    assert tensor(d, dual(d)) == trivial_datum(2)
    with pytest.raises(ValueError):
        AHDatum(((0, 1), (1, 0)), SemiCharacter(((0, 1), (1, 0)), (0, 0)))


def test_section_counts():
    e = lt.standard_form(1)
    assert h0_count(e).count == 1
    assert h0_count(lt.scale(2, e)).count == 2
    assert h0_count(lt.zeros(2, 2)).degenerate
    period = complex_structure(standard_model(TopologicalType(1, 2, 0)))
    assert h0_count(e, period).positive is True
    assert h0_count(lt.neg(e), period).count == 0


def test_realness():
    m = standard_model(TopologicalType(2, 1, 0))
    tau = picard_involution(m)
    for q in real_theta(m):
        assert is_real_datum(alpha_from_theta(q), tau)
    m1 = standard_model(TopologicalType(1, 2, 0))
    tau1 = picard_involution(m1)
    # tau1 = diag(-1, 1): a flat angle is allowed on e but must be real on f
    assert is_real_datum(flat_datum((Fraction(1, 3), Fraction(0))), tau1)
    assert not is_real_datum(flat_datum((Fraction(0), Fraction(1, 3))), tau1)


def test_cocycle_relative():
    rng = np.random.default_rng(0)
    m = standard_model(TopologicalType(2, 2, 1))
    period = complex_structure(m)
    d = alpha_from_theta(real_theta(m)[1])
    for _ in range(20):
        l1, l2 = rng.integers(-2, 3, (2, 4))
        v = period.to_complex(rng.random(4))
        lhs = factor_of_automorphy(d, period, l1 + l2, v)
        rhs = factor_of_automorphy(d, period, l1, v + period.to_complex(l2)) * factor_of_automorphy(d, period, l2, v)
        assert abs(lhs - rhs) <= 1e-9 * abs(lhs)


def test_factor_modulus():
    m = standard_model(TopologicalType(1, 2, 0))
    period = complex_structure(m)
    d = alpha_from_theta(next(enumerate_theta(1)))
    # on the real lattice point v = 0, |a(lam, 0)| = exp(pi H(lam, lam) / 2)
    val = log_factor_of_automorphy(d, period, (1, 0), np.zeros(1))
    assert val.real == pytest.approx(np.pi / 2)
