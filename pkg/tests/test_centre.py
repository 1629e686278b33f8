import pytest

from fgkit.catalog import build_family, central_element
from fgkit.centre import graded_centre, graded_centre_component, is_central_element, is_graded_central
from fgkit.groebner import InhomogeneousError
from fgkit.quiver import parse_presentation


def test_polynomial_ring_centre():
    p = parse_presentation("vertex 0\narrow x: 0 -> 0\n")
    rep = graded_centre(__import__("fgkit").TruncatedAlgebra(p, 6))
    # x^d is graded-central only in even degrees over Q
    assert rep.dims() == {0: 1, 1: 0, 2: 1, 3: 0, 4: 1, 5: 0}


def test_char_two_ignores_signs():
    p = parse_presentation("field F2\nvertex 0\narrow x: 0 -> 0\n")
    rep = graded_centre(__import__("fgkit").TruncatedAlgebra(p, 5))
    assert all(n == 1 for n in rep.dims().values())


def test_witness_for_non_central():
    spec = build_family("A~", n=2, q=2, field="F7")
    A = spec.dual_algebra(4)
    ok, wit = is_graded_central(A, central_element(spec, "x"))
    assert not ok and "arrow" in wit and wit["difference"]


def test_off_diagonal_witness():
    spec = build_family("A~", n=1)
    A = spec.dual_algebra(3)
    ok, wit = is_graded_central(A, spec.el("a0"))
    assert not ok and "idempotent" in wit


def test_inhomogeneous_needs_components():
    spec = build_family("A~", n=1)
    A = spec.dual_algebra(5)
    z = central_element(spec, "x") + central_element(spec, "x^2")
    with pytest.raises(InhomogeneousError):
        is_graded_central(A, z)
    assert is_central_element(A, z)


def test_component_basis_is_central():
    spec = build_family("Z~", n=1)
    A = spec.dual_algebra(5)
    for d in range(5):
        for z in graded_centre_component(A, d):
            assert is_graded_central(A, z)[0]
