"""AlgebraSpec / ModuleSpec JSON: round trips and parse errors with a locus."""

import json

import pytest

from sqtkit.catalog import catalog, catalog_modules, catalog_names
from sqtkit.field import GF
from sqtkit.specfile import AlgebraSpec, ModuleSpec, SpecError


@pytest.mark.parametrize("name", catalog_names())
def test_round_trip_is_canonical(name):
    text = catalog(name).to_json()
    again = AlgebraSpec.from_json(text).to_json()
    assert again == text


def test_scalars_are_strings_and_exact():
    d = json.loads(catalog("kC2-Rminus").to_json())
    assert d["R"] == [[0, 0, "1/2"], [0, 1, "1/2"], [1, 0, "1/2"], [1, 1, "-1/2"]]
    assert d["claims_quasitriangular"] is True


def test_prime_field_round_trip():
    spec = catalog("kC2-Rminus", GF(5))
    d = json.loads(spec.to_json())
    assert d["field"] == "GF(5)"
    assert [0, 0, "3 mod 5"] in d["R"]          # 1/2 = 3 mod 5
    assert AlgebraSpec.from_json(spec.to_json()).to_json() == spec.to_json()


def _broken(mutate):
    d = json.loads(catalog("kC2-triv").to_json())
    mutate(d)
    return json.dumps(d)


@pytest.mark.parametrize("mutate, locus", [
    (lambda d: d["mul"].append([0, 0, 5, "1"]), "algebra.mul[4]: index 2"),
    (lambda d: d["counit"].__setitem__(0, [0, 1]), "algebra.counit[0]: scalar must be a string"),
    (lambda d: d.pop("antipode"), "missing key 'antipode'"),
    (lambda d: d.__setitem__("field", "GF(4)"), "algebra.field"),
    (lambda d: d["unit"].__setitem__(0, [0, "x/y"]), "algebra.unit[0]"),
    (lambda d: d["unit"].append([0, "1"]), "duplicate entry"),
    (lambda d: d.__setitem__("claims_quasitriangular", "yes"), "claims_quasitriangular"),
    (lambda d: d.__setitem__("dim", 3), "algebra.dim"),
])
def test_parse_errors_name_the_locus(mutate, locus):
    with pytest.raises(SpecError, match=locus.replace("[", r"\[").replace("]", r"\]")):
        AlgebraSpec.from_json(_broken(mutate))


def test_invalid_json_reports_line():
    with pytest.raises(SpecError, match="line 1"):
        AlgebraSpec.from_json("{not json")


def test_module_round_trip_and_instantiate(rminus):
    mods = catalog_modules("kC2-Rminus")
    assert set(mods) == {"k", "reg"}
    text = mods["reg"].to_json()
    ms = ModuleSpec.from_json(text)
    assert ms.to_json() == text
    M = ms.module(rminus)
    assert M.dim == 2


def test_module_index_out_of_range(rminus):
    ms = catalog_modules("kC2-Rminus")["k"]
    ms.action.append([0, 3, 0, "1"])
    with pytest.raises(SpecError, match=r"module.action\[\d+\]: index 1"):
        ms.module(rminus)


def test_module_bad_variant():
    d = json.loads(catalog_modules("kC2-Rminus")["k"].to_json())
    d["variant"] = "diagonal"
    with pytest.raises(SpecError, match="variant"):
        ModuleSpec.from_dict(d)
