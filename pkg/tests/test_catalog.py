"""Catalog entries, fixtures and negative controls."""

import pytest

from sqtkit.catalog import (NEGATIVE_CONTROLS, CatalogError, catalog, catalog_names,
                            negative_control, structure)
from sqtkit.field import GF


def test_catalog_has_seventeen_entries():
    names = catalog_names()
    assert len(names) == 7 + 7 + 1 + 2
    assert "kC2-Rminus" in names and not set(NEGATIVE_CONTROLS) & set(names)


def test_kc2_triv_spec():
    spec = catalog("kC2-triv")
    assert spec.dim == 2 and spec.R == spec.hopf().unit2
    assert spec.claims_semicocommutative and not spec.claims_quasitriangular


def test_ks3_dual_is_commutative():
    H = structure("kS3-dual").H
    assert H.dim == 6 and H.is_commutative() and not H.is_cocommutative()


def test_rminus_needs_characteristic_not_2():
    with pytest.raises(CatalogError, match="1/2"):
        catalog("kC2-Rminus", GF(2))


def test_unknown_name():
    with pytest.raises(CatalogError, match="unknown"):
        catalog("kA5-triv")


def test_tensor_entry_dimension():
    assert structure("kC2-Rminus-x-kS3-dual").dim == 12


def test_negative_controls_are_named():
    for name in NEGATIVE_CONTROLS:
        assert negative_control(name).name == name
    with pytest.raises(CatalogError):
        negative_control("bad-everything")
