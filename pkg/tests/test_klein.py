import pytest

from kleintheta import lattice as lt
from kleintheta.errors import EmptyRealLocusError, InvalidTypeError
from kleintheta.klein import (TopologicalType, check_model, enumerate_types, lemma11_check,
                              picard_involution, rank_mod2, standard_model, validate_type)
from kleintheta.real_sw import component_group


def test_genus_one_census():
    assert [str(t) for t in enumerate_types(1)] == ["0,1,0", "0,0,1", "1,2,0", "1,0,1", "1,1,1"]


@pytest.mark.parametrize("g, n, a, ok", [
    (1, 2, 0, True), (2, 1, 0, True), (3, 1, 0, False), (1, 3, 0, False),
    (2, 2, 0, False), (2, 2, 1, True), (2, 3, 1, False), (0, 0, 1, True), (1, 0, 0, False),
])
def test_validate_type(g, n, a, ok):
    assert validate_type(g, n, a) is ok


def test_invalid_type_names_condition():
    with pytest.raises(InvalidTypeError, match="parity"):
        standard_model(TopologicalType(3, 1, 0))
    with pytest.raises(InvalidTypeError, match="range"):
        standard_model(TopologicalType(1, 3, 0))


def test_empty_real_locus_rejected():
    with pytest.raises(EmptyRealLocusError):
        standard_model(TopologicalType(2, 0, 1))


def test_parse():
    assert TopologicalType.parse("2,1,0") == TopologicalType(2, 1, 0)
    with pytest.raises(InvalidTypeError):
        TopologicalType.parse("2,1")


def test_model_examples():
    m = standard_model(TopologicalType(1, 2, 0))
    assert m.h_block == ((0,),)
    assert m.iota_star == ((1, 0), (0, -1))
    m = standard_model(TopologicalType(2, 1, 0))
    assert m.h_block == ((0, 1), (1, 0))


@pytest.mark.parametrize("t", [t for t in enumerate_types(4) if t.n], ids=str)
def test_models_satisfy_invariants(t):
    m = standard_model(t)
    assert check_model(m) == []
    assert rank_mod2(m.h_block) == t.g + 1 - t.n
    even = all(m.h_block[i][i] == 0 for i in range(t.g))
    assert even == (t.a == 0)
    assert len(component_group(picard_involution(m))) == 2 ** (t.n - 1)


def test_generation_fails_for_doubled_classes():
    m = standard_model(TopologicalType(1, 2, 0))
    assert lemma11_check(m)
    doubled = type(m)(m.type, m.iota_star, m.h_block,
                      tuple(tuple(2 * x for x in c) for c in m.circle_classes))
    assert not lemma11_check(doubled)


def test_picard_involution_reverses_form():
    for t in enumerate_types(3):
        if t.n:
            m = standard_model(t)
            tau = picard_involution(m)
            assert lt.is_involution(tau) and lt.is_anti_symplectic(tau, m.cup_form)
