from itertools import product

import pytest

from kleintheta.errors import EmptyRealLocusError, NotRealError
from kleintheta.klein import (RealCurveModel, TopologicalType, enumerate_types,
                              picard_involution, standard_model)
from kleintheta.real_sw import (component_group, reconstruct_identity_row, row_at, sw_table,
                                translation_shift)
from kleintheta.tables import dumps, table_to_csv, table_to_dict, validate_table_dict
from kleintheta.theta import QuadraticForm, apply_mod2, mod2_involution, real_theta, translate
import json


def test_worked_example_120():
    t = sw_table(standard_model(TopologicalType(1, 2, 0)), QuadraticForm(1, (0, 0)))
    assert len(t.components) == 2
    assert t.basis == ((0, 1),)
    assert t.rows == ((0,), (1,))
    assert t.spin == (1, 1)


def test_worked_example_111():
    t = sw_table(standard_model(TopologicalType(1, 1, 1)), QuadraticForm(1, (1, 0)))
    assert t.basis == ((1, -2),)
    assert t.rows == ((1,),)


def test_non_real_form_rejected():
    with pytest.raises(NotRealError, match="realness"):
        sw_table(standard_model(TopologicalType(1, 1, 1)), QuadraticForm(1, (0, 0)))


def test_empty_locus_rejected():
    m = standard_model(TopologicalType(1, 1, 1))
    empty = RealCurveModel(TopologicalType(1, 0, 1), m.iota_star, m.h_block, ())
    with pytest.raises(EmptyRealLocusError):
        sw_table(empty, QuadraticForm(1, (1, 0)))


@pytest.mark.parametrize("t", [t for t in enumerate_types(2) if t.n], ids=str)
def test_tables(t):
    m = standard_model(t)
    t2 = mod2_involution(m)
    invariant = [x for x in product((0, 1), repeat=2 * t.g) if apply_mod2(t2, x) == x]
    for q in real_theta(m):
        table = sw_table(m, q)
        assert len(table.rows) == 2 ** (t.n - 1)
        assert table.components[0].is_identity
        assert reconstruct_identity_row(table) == table.rows[0]
        # rows are homomorphisms: circle values follow from basis values
        for row, cv in zip(table.rows, table.circle_values):
            assert tuple(row_at(table, row, c) for c in m.circle_classes) == cv
        assert table.spin == tuple((v + 1) % 2 for v in table.circle_values[0])
        for eta in invariant:
            moved = sw_table(m, translate(q, eta))
            dr, ds = translation_shift(table, eta)
            assert moved.rows == tuple(tuple((a + b) % 2 for a, b in zip(r, dr)) for r in table.rows)
            assert moved.spin == tuple((a + b) % 2 for a, b in zip(table.spin, ds))
        payload = json.loads(dumps(table_to_dict(table)))
        validate_table_dict(payload)
        assert table_to_csv(table).count("\n") == len(table.rows) + 2


def test_component_representatives_are_canonical():
    m = standard_model(TopologicalType(3, 4, 0))
    group = component_group(picard_involution(m))
    assert len(group) == 8
    for comp in group.components:
        assert group.canonical(comp.twice_mu) == comp
