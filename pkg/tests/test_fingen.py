import pytest

from fgkit.catalog import build_family, central_element, fg_check
from fgkit.fingen import (FG, INCONCLUSIVE, NOT_FG, DegenerateGeneratorError, NonCentralError,
                          generated_subalgebra_dims, module_quotient_dims)
from fgkit.freealg import FreeElement


def test_cube_powers_suffice_for_n1_at_16():
    # order 3 and two vertices: x^3 is already central and gives a zero window by 16
    spec = build_family("A~", n=1, q=2, field="F7")
    rep = fg_check(spec, 16, names=["x^3", "y^3"])
    assert rep.verdict == FG


def test_sixth_powers_need_larger_truncation():
    spec = build_family("A~", n=1, q=2, field="F7")
    rep = fg_check(spec, 16)
    assert rep.verdict == INCONCLUSIVE
    assert rep.quotient_dims[16] > 0
    rep = fg_check(spec, 36)
    assert rep.verdict == FG
    assert max(d for d, q in enumerate(rep.quotient_dims) if q) == 22


def test_non_central_rejected():
    spec = build_family("A~", n=2, q=2, field="F7")
    A = spec.dual_algebra(6)
    with pytest.raises(NonCentralError) as exc:
        module_quotient_dims(A, [central_element(spec, "x")])
    assert exc.value.witness


def test_zero_generator_rejected():
    spec = build_family("A~", n=1)
    A = spec.dual_algebra(4)
    with pytest.raises(DegenerateGeneratorError):
        module_quotient_dims(A, [FreeElement(spec.quiver, spec.field)])
    e6 = build_family("E6~")
    E6 = e6.dual_algebra(3)
    with pytest.raises(DegenerateGeneratorError):
        module_quotient_dims(E6, [e6.el("a0*abar0")], check=False)


def test_degree_zero_generators_dropped():
    spec = build_family("Z~", n=1)
    A = spec.dual_algebra(9)
    one = FreeElement.one(spec.quiver, spec.field)
    a = module_quotient_dims(A, [central_element(spec, "x"), central_element(spec, "y"), one])
    b = module_quotient_dims(A, [central_element(spec, "x"), central_element(spec, "y")])
    assert a.quotient_dims == b.quotient_dims and a.generator_degrees == [2, 4]


def test_no_positive_generators_not_fg():
    spec = build_family("A~", n=1, q="t", field="Q(t)")
    A = spec.dual_algebra(6)
    assert module_quotient_dims(A, []).verdict == NOT_FG


def test_report_serialises():
    spec = build_family("Z~", n=1)
    rep = fg_check(spec, 8)
    assert '"verdict"' in rep.to_json() and "verdict" in rep.table()


def test_generated_subalgebra_of_polynomial_generator():
    spec = build_family("A~", n=1)
    A = spec.dual_algebra(8)
    x = central_element(spec, "x")
    dims = generated_subalgebra_dims(A, list(A.to_vectors(x).items()), 8)
    assert dims == [1, 0, 1, 0, 1, 0, 1, 0, 1]
