import pytest

from fgkit.catalog import build_family, same_relation_space
from fgkit.koszul import NotQuadraticError, quadratic_dual, same_ideal
from fgkit.quiver import parse_presentation


def test_cyclic_dual_is_verbatim():
    spec = build_family("A~", n=1, q=2, field="F7")
    dual = quadratic_dual(spec.lambda_presentation)
    assert same_relation_space(dual, spec.dual_presentation)
    assert same_ideal(dual, spec.dual_presentation, D=6)


@pytest.mark.parametrize("fam,kw", [("A~", {"n": 2}), ("D~", {"n": 5}), ("E7~", {}), ("Z~", {"n": 2})])
def test_double_dual_is_identity(fam, kw):
    L = build_family(fam, **kw).lambda_presentation
    assert same_relation_space(quadratic_dual(quadratic_dual(L)), L)


def test_free_and_radical_square_zero_are_dual():
    p = parse_presentation("vertex 0\narrow x: 0 -> 0\nrelation x*x\n")
    d = quadratic_dual(p)
    assert d.relations == []
    assert len(quadratic_dual(d).relations) == 1


def test_non_quadratic_rejected():
    p = parse_presentation("vertex 0\narrow x: 0 -> 0\nrelation x*x*x\n")
    with pytest.raises(NotQuadraticError):
        quadratic_dual(p)


def test_different_ideals_detected():
    a = build_family("A~", n=1, q=1).dual_presentation
    b = build_family("A~", n=1, q=-1).dual_presentation
    assert not same_ideal(a, b, D=4)
