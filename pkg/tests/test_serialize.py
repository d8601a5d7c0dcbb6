from fractions import Fraction

import jsonschema

from shapovalov.bases import build_g_basis
from shapovalov.forms import gram_s_form
from shapovalov.matrix import ExactMatrix
from shapovalov.partitions import Multipartition, Partition
from shapovalov.serialize import (
    SCHEMAS,
    basis_family_to_json,
    label_from_json,
    label_to_json,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    snf_to_json,
    sympoly_from_json,
    sympoly_to_json,
)
from shapovalov.symfunc import SymPoly


def test_matrix_round_trip():
    X = gram_s_form(2, 2)
    data = matrix_to_json(X)
    assert data == {"rows": [[2], [1, 1]], "cols": [[2], [1, 1]], "entries": [["2", "0"], ["1", "4"]]}
    jsonschema.validate(data, SCHEMAS["matrix"])
    assert matrix_from_json(data) == X
    assert matrix_from_json(data).rows == X.rows


def test_rational_and_huge_entries():
    big = 7 ** 60
    m = ExactMatrix([[Fraction(-3, 4), big]])
    data = matrix_to_json(m)
    assert data["entries"] == [["-3/4", str(big)]]
    jsonschema.validate(data, SCHEMAS["matrix"])
    assert matrix_from_json(data) == m


def test_labels():
    assert label_to_json(Multipartition([[2, 1], []])) == [[2, 1], []]
    assert label_from_json([[2, 1], [1]]) == Multipartition([[2, 1], [1]])
    assert label_from_json([3, 1]) == Partition([3, 1])
    assert label_from_json([]) == Partition([])


def test_csv():
    text = matrix_to_csv(gram_s_form(2, 2))
    assert text.splitlines() == [',[2],"[1,1]"', '[2],2,0', '"[1,1]",1,4']


def test_sympoly_round_trip():
    f = SymPoly(3, "h", {(3,): Fraction(1, 2), (2, 1): -4})
    data = sympoly_to_json(f)
    jsonschema.validate(data, SCHEMAS["sympoly"])
    assert data["terms"][0] == {"index": [3], "num": "1", "den": "2"}
    assert sympoly_from_json(data) == f


def test_snf_record():
    data = snf_to_json((1, 8))
    assert data == {"invariant_factors": ["1", "8"], "det": "8"}
    jsonschema.validate(data, SCHEMAS["snf"])


def test_basis_family_record():
    fam = build_g_basis(2, 1, 4)[0]
    data = basis_family_to_json(fam)
    jsonschema.validate(data, SCHEMAS["basis_family"])
    assert data["family"] == "g" and data["i"] == 0
    assert data["expansions"][3] == {"index": [4], "terms": [
        {"index": [4], "num": "1", "den": "1"}, {"index": [3, 1], "num": "1", "den": "1"}]}
