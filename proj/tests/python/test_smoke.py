"""Smoke tests for the python bindings."""

import pytest

coh1 = pytest.importorskip("coh1")


def test_list_and_info():
    names = coh1.list_spaces()
    assert "G2_2/SO4" in names
    info = coh1.space_info("G2_2/SO4")
    assert info["dim"] == 8
    assert info["split_real_form"] is True
    assert coh1.dim_space("SO(2,{n+2})/SO2SO{n+2}", 3) == 10


def test_gradation_values():
    g = coh1.gradation("G2_2/SO4", [2])
    assert g == {"level_dims": [2, 1, 2], "depth": 3}
    g = coh1.gradation("SO(2,3)/SO2SO3", [1])
    assert g["level_dims"] == [2, 1]


def test_parabolic_and_boundary():
    pd = coh1.parabolic("SL3(R)/SO3", [1])
    assert pd["dim_l_phi"] == 4 and pd["dim_n_phi"] == 2
    bd = coh1.boundary("SL4(R)/SO4", [1, 2])
    assert "SL3(R)/SO3" in bd["name_candidates"]


def test_root_system():
    sys = coh1.root_system("G2", 2)
    assert sys["highest"] == [3, 2]
    assert len(sys["positive_roots"]) == 6


def test_classify_diff_empty():
    diff = coh1.diff_against_reference("SL3(R)/SO3")
    assert diff["empty"] is True
    rep = coh1.classify("G2_2/SO4")
    assert rep["group_count"] == 7


def test_nilpotent_and_extend():
    cands = coh1.nilpotent_candidates("G2_2/SO4", [2])
    assert len(cands) == 1 and cands[0]["verdict"] == "pass"
    res = coh1.extend("SL3(R)/SO3", [1], '{"kind":"reductive-tg","key":"RH:k=0"}')
    assert res["orbit"]["singular_codim"] == 2


def test_database_roundtrip():
    assert coh1.database_roundtrip_ok()


def test_errors():
    with pytest.raises(coh1.DomainError):
        coh1.space_info("NoSuchSpace")
