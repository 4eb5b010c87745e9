"""Smoke tests for the Python bindings.

Run with PYTHONPATH pointing at <build>/python so `import vops` picks up the
freshly built extension.
"""

import pytest

import vops


def test_words():
    w = vops.CoxWord(3, [0, 2, 0])
    assert str(w) == "[2]"
    assert w.letters == [2]
    u = vops.multiply(vops.CoxWord(3, [0]), vops.CoxWord(3, [0]))
    assert u.is_identity()
    assert vops.is_involution(vops.CoxWord(3, []))
    with pytest.raises(vops.VopsError):
        vops.CoxWord(2, [5])


def test_premaniplex_basics():
    square = vops.polygon(4)
    assert square.rank == 2
    assert square.flag_count == 8
    assert vops.validate(square).ok()
    assert vops.is_connected(square)
    assert vops.apply_word(square, 0, vops.CoxWord(2, [1, 0])) == 2


def test_coset_enumeration():
    cube = vops.coxeter_flag_graph([4, 3])
    assert cube.flag_count == 48
    assert vops.is_maniplex(cube)
    hemi = vops.coxeter_flag_graph([4, 3], [[0, 1, 2] * 3])
    assert hemi.flag_count == 24


def test_product_and_symmetry():
    cube = vops.coxeter_flag_graph([4, 3])
    med = vops.product(cube, vops.medial())
    assert med.flag_count == 96
    aut = vops.automorphisms(med)
    assert aut.order() == 48
    assert len(aut.orbit_lists) == 2
    octa = vops.coxeter_flag_graph([3, 4])
    assert vops.is_isomorphic(med, vops.product(octa, vops.medial()))


def test_operator_validation_and_io():
    report = vops.validate_operator(vops.truncation())
    assert report.ok()
    text = vops.write_vop_text(vops.medial())
    assert vops.read_vop_text(text).y.flag_count == 2
    with pytest.raises(vops.VopsError):
        vops.product(vops.polygon(3), vops.medial())


def test_analysis():
    cube = vops.coxeter_flag_graph([4, 3])
    cert = vops.certify(cube, vops.truncation())
    assert cert.verdict == vops.Verdict.NoExtra
    digonal = vops.coxeter_flag_graph([2, 4])
    cert2 = vops.certify(digonal, vops.truncation())
    assert cert2.verdict == vops.Verdict.ExtraPresent
    assert cert2.product_aut_order == 48
    assert cert2.lifted_order == 16


def test_connectivity_and_covers():
    check = vops.preserves_connectivity(vops.double_cover(3))
    assert check.verdict == vops.Tri.No
    assert check.index == 2
    tetra = vops.coxeter_flag_graph([3, 3])
    assert vops.covers(tetra, vops.one_vertex(3))


def test_compose_matches_two_steps():
    tetra = vops.coxeter_flag_graph([3, 3])
    comp = vops.compose(vops.medial(), vops.truncation())
    two_step = vops.product(vops.product(tetra, vops.medial()), vops.truncation())
    assert vops.is_isomorphic(vops.product(tetra, comp), two_step)


def test_builtin_registry():
    names = vops.builtin_names()
    assert "medial" in names and "omnitruncation" in names
    assert vops.builtin("prism:3").y.flag_count == 8
    with pytest.raises(vops.VopsError):
        vops.builtin("no-such-op")
