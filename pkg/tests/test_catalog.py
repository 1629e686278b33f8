import pytest

from fgkit.catalog import (CatalogError, FAMILIES, build_family, catalog_grid, central_element,
                           nakayama_qext, qext_central_criterion, shortest_path,
                           transport)
from fgkit.centre import is_graded_central
from fgkit.coeff import field_from_spec


@pytest.mark.parametrize("fam,kw", catalog_grid(), ids=lambda v: str(v))
def test_grid_builds_with_crosscheck(fam, kw):
    spec = build_family(fam, **kw)
    d = spec.describe()
    assert d["family"] == fam and d["dual_relations"] > 0


def test_relation_counts():
    assert len(build_family("A~", n=1).lambda_presentation.relations) == 6
    assert len(build_family("A~", n=3).lambda_presentation.relations) == 12


@pytest.mark.parametrize("fam,kw", [("A~", {"n": 0}), ("Z~", {"n": 0}), ("DZ~", {"n": 1}),
                                    ("D~", {"n": 3}), ("A~", {"q": 0}), ("nope", {})])
def test_invalid_parameters(fam, kw):
    with pytest.raises(CatalogError):
        build_family(fam, **kw)


def test_expected_fg_follows_roots_of_unity():
    assert build_family("A~", n=1, q=2, field="F7").expected_fg
    assert not build_family("A~", n=1, q=2).expected_fg
    assert build_family("A~", n=1, q=-1).expected_fg
    assert not build_family("A~", n=1, q="t", field="Q(t)").expected_fg
    assert build_family("radsq", n=3).expected_fg
    assert not build_family("radsq", arrows=[("a", "0", "0"), ("b", "0", "1"), ("c", "1", "0")]).expected_fg


def test_cyclic_commutation_rule():
    # abar x = q x abar, so x alone is central only when q = 1
    spec = build_family("A~", n=2, q=2, field="F7")
    A = spec.dual_algebra(19)
    x, ab = central_element(spec, "x"), spec.el("abar0")
    q = spec.field.from_int(2)
    assert A.equal(ab * x, x * ab * q)
    assert is_graded_central(A, central_element(spec, "x^6"))[0]
    assert not is_graded_central(A, central_element(spec, "x^3"))[0]


def test_unknown_element():
    with pytest.raises(CatalogError):
        central_element(build_family("A~", n=1), "zeta")


def test_transport_and_paths():
    spec = build_family("D~", n=6)
    Q = spec.quiver
    assert len(shortest_path(Q, 0, 6)) == 4
    w = transport(central_element(spec, "alpha"), 4)
    assert w.degree == 2 + 2 * 2 and w.endpoints() == {(4, 4)}


def test_power_zero_is_unit():
    spec = build_family("A~", n=1)
    assert central_element(spec, "x^0") == central_element(spec, "x") ** 0


def test_qext_criterion_char_two():
    K = field_from_spec("F2")
    qm = {(1, 2): K.one}
    assert all(qext_central_criterion(K, qm, 1, p) for p in range(1, 5))


def test_nakayama_generic_instance():
    K = field_from_spec("Q")
    nu = nakayama_qext(K, {(1, 2): K.from_int(2)}, 2)
    assert nu == [K.from_int(-2), K.from_fraction(__import__("fractions").Fraction(-1, 2))]


def test_all_families_listed():
    assert set(FAMILIES) >= {f for f, _ in catalog_grid()}
