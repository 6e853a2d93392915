import os

import pytest

kvl = pytest.importorskip("_kvlogic")

TABLE1_F1 = kvl.TruthTable(3, 2, [2, 2, 0, 1, 1, 1, 0, 2, 1])
TABLE1_F2 = kvl.TruthTable(3, 1, [1, 0, 1])
TABLE2 = kvl.TruthTable(
    3, 3,
    [0, 0, 1, 2, 2, 0, 0, 0, 1,
     2, 2, 2, 1, 1, 1, 2, 2, 2,
     1, 0, 2, 0, 2, 1, 1, 0, 2],
)
TABLE3 = kvl.TruthTable(3, 2, [1, 2, 0, 2, 0, 1, 0, 1, 2])


def test_evaluate_and_range():
    assert TABLE2([0, 0, 0]) == 0
    assert TABLE2([2, 1, 1]) == 2
    assert kvl.range_of(TABLE1_F1) == 3
    assert kvl.range_of(TABLE1_F2) == 2


def test_spectrum_and_checks():
    assert kvl.spectrum({2}, TABLE2) == {2}
    assert kvl.spectrum({1, 3}, TABLE2) == {3}
    ok, witness = kvl.check_hsq(TABLE2, [{1, 3}, {2}], [3, 2])
    assert ok and witness is None
    ok, witness = kvl.check_hsq(TABLE2, [{1, 3}, {2}], [3, 3])
    assert not ok and "range=" in witness


def test_h_function_and_latin():
    ok, _ = kvl.is_h_function(TABLE3)
    assert ok
    ok, witness = kvl.is_h_function(TABLE2)
    assert not ok
    assert "values=(0,2,0)" in witness
    ok, _ = kvl.is_latin_hypercube(TABLE3)
    assert ok


def test_compose_sum_matches_golden():
    f = kvl.compose_sum(3, 3, [(1, {1, 3}, TABLE1_F1), (1, {2}, TABLE1_F2)])
    assert f == TABLE2


def test_identify_variables():
    base = kvl.TruthTable(3, 1, [1, 2, 0])
    g1 = kvl.affine_transform(base, 2, 1)
    g2 = kvl.affine_transform(base, 1, 2)
    g3 = kvl.affine_transform(base, 2, 2)
    h = kvl.compose_sum(3, 3, [(1, {1}, g1), (1, {2}, g2), (1, {3}, g3)])
    assert kvl.identify_variables(h, {1, 3}) == TABLE3
    assert kvl.identification_condition([2, 2], 3)
    assert not kvl.identification_condition([1, 2], 3)


def test_interpolation():
    modulus, coeffs, text = kvl.interpolate_unary(kvl.TruthTable(3, 1, [1, 2, 0]))
    assert (modulus, coeffs) == (3, [1, 1, 0])
    assert text == "1 + 1*x mod 3"
    assert kvl.eval_polynomial(3, [1, 1, 0], 2) == 0
    with pytest.raises(Exception):
        kvl.interpolate_unary(kvl.TruthTable(4, 1, [0, 1, 2, 3]))


def test_serialize_parse():
    text = kvl.serialize(TABLE1_F2)
    assert text == "KVLF 1\n3 1\n1 0 1\n"
    assert kvl.parse(text) == TABLE1_F2


def test_sampling_and_linear():
    f = kvl.sample_with_range(4, 2, 3, 99)
    assert kvl.range_of(f) == 3
    assert f == kvl.sample_with_range(4, 2, 3, 99)
    latin = kvl.construct_linear_h(5, [2, 3, 4])
    ok, _ = kvl.is_latin_hypercube(latin)
    assert ok


def test_golden_files():
    data_dir = os.environ.get("KVL_DATA_DIR")
    if not data_dir:
        pytest.skip("KVL_DATA_DIR not set")
    assert kvl.load_file(os.path.join(data_dir, "table2.kvlf")) == TABLE2
    assert kvl.load_file(os.path.join(data_dir, "table3.kvlf")) == TABLE3
