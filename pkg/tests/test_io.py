import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galsca.contraction import WeightAssignment, contracted_su22n, rescale, standard_weights
from galsca.core import Gen, LinearCombination, SuperAlgebra
from galsca.io import (DocumentError, algebra_from_dict, algebra_to_dict, dumps, loads, read_algebra,
                       search_spec_from_dict, search_spec_to_dict, weights_from_dict, weights_to_dict,
                       write_algebra)
from galsca.projection import projected_su22n
from galsca.scalars import GaussianRational, LaurentPoly
from galsca.search import SearchSpec

POOL = [Gen("D"), Gen("H"), Gen("Kexp"), Gen("P", (1,)), Gen("M", (1, 2)),
        Gen("Q", (1, 1)), Gen("Q", (1, 2)), Gen("Qt+", (1, 3))]
rationals = st.fractions(max_denominator=20).filter(lambda f: abs(f) < 100)
gaussians = st.builds(GaussianRational, rationals, rationals)


@st.composite
def algebras(draw, laurent=False):
    basis = draw(st.lists(st.sampled_from(POOL), unique=True, max_size=len(POOL)))
    basis.sort(key=lambda g: g.sort_key)
    coeff = (st.dictionaries(st.integers(-3, 3), gaussians, max_size=2).map(LaurentPoly)
             if laurent else gaussians)
    table = {}
    for i, x in enumerate(basis):
        for y in basis[i:]:
            if x == y and not x.odd:
                continue
            par = (x.parity + y.parity) % 2
            tgt = [g for g in basis if g.parity == par]
            if not tgt or not draw(st.booleans()):
                continue
            terms = draw(st.lists(st.tuples(st.sampled_from(tgt), coeff), max_size=2))
            v = LinearCombination(terms)
            if v:
                table[(x, y)] = v
    return SuperAlgebra(basis, table, "laurent" if laurent else "constant", name=draw(st.text(max_size=5)))


@given(algebras())
def test_algebra_roundtrip(alg):
    doc = algebra_to_dict(alg)
    back = algebra_from_dict(loads(dumps(doc)))
    assert back == alg and back.name == alg.name
    assert dumps(algebra_to_dict(back)) == dumps(doc)


@given(algebras(laurent=True))
def test_laurent_roundtrip(alg):
    assert algebra_from_dict(loads(dumps(algebra_to_dict(alg)))) == alg


@given(st.dictionaries(st.sampled_from(["H", "B", "F", "Qt+", "k"]),
                       st.integers(-6, 6).map(lambda n: Fraction(n, 2))))
def test_weights_roundtrip(d):
    w = WeightAssignment.of(d)
    assert weights_from_dict(loads(dumps(weights_to_dict(w)))) == w


@given(st.integers(1, 4), st.integers(-4, 0), st.integers(0, 4), st.booleans(),
       st.dictionaries(st.sampled_from(["H", "P", "D"]), st.integers(-2, 2).map(lambda n: Fraction(n, 2))))
def test_search_spec_roundtrip(N, lo, hi, sym, pins):
    spec = SearchSpec.make(N, Fraction(lo, 2), Fraction(hi, 2), pins=pins, symmetric=sym)
    assert search_spec_from_dict(json.loads(json.dumps(search_spec_to_dict(spec)))) == spec


def test_real_algebras_roundtrip(tmp_path):
    alg = projected_su22n(2)[0]
    for a in (alg, contracted_su22n(2)[0], rescale(alg, standard_weights(2))):
        p = tmp_path / "a.json"
        write_algebra(a, str(p))
        assert read_algebra(str(p)) == a


def test_coefficients_are_strings():
    doc = algebra_to_dict(contracted_su22n(2)[0])
    for br in doc["brackets"]:
        for t in br["terms"]:
            assert isinstance(t["coeff"], str)


def test_bare_weights_object():
    assert weights_from_dict({"H": "1", "St-": "-3/2"}).as_dict()["St-"] == Fraction(-3, 2)


@pytest.mark.parametrize("doc", [
    {"schema_version": "2", "basis": [], "brackets": []},
    {"schema_version": "1", "document": "weights", "basis": [], "brackets": []},
    {"schema_version": "1", "basis": [{"kind": "Z", "indices": []}], "brackets": []},
    {"schema_version": "1", "basis": [{"name": "Q[1,1]", "kind": "Q", "indices": [1, 1], "parity": 0}],
     "brackets": []},
    {"schema_version": "1", "basis": [{"name": "D", "kind": "D", "indices": []}],
     "brackets": [{"left": "D", "right": "D", "terms": [{"gen": "D", "coeff": "1/1"}]}]},
    {"schema_version": "1", "basis": [{"name": "H", "kind": "H", "indices": []},
                                      {"name": "D", "kind": "D", "indices": []}],
     "brackets": [{"left": "D", "right": "H", "terms": [{"gen": "H", "coeff": "0.5"}]}]},
    {"schema_version": "1", "basis": []},
])
def test_bad_algebra_documents(doc):
    with pytest.raises(ValueError):
        algebra_from_dict(doc)


def test_bad_text():
    with pytest.raises(DocumentError):
        loads("{not json")
    with pytest.raises(DocumentError):
        loads("[1, 2]")
    with pytest.raises(DocumentError):
        weights_from_dict({"weights": {"H": "1/3"}})
    with pytest.raises(DocumentError):
        weights_from_dict({"weights": [1, 2]})
