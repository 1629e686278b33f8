import pytest
from hypothesis import given, settings, strategies as st

from fgkit.algebra import (TruncatedAlgebra, Representation, betti_sequence, check_weakly_symmetric,
                           detect_periodicity, ext1_matrix, hom_space, is_isomorphic, simple_module,
                           syzygy)
from fgkit.catalog import build_family
from fgkit.coeff import field_from_spec
from fgkit.groebner import complete_truncated
from fgkit.quiver import MonomialOrder, Presentation, Quiver, parse_presentation

K = field_from_spec("Q")
Q2 = Quiver(["0"], [("x", "0", "0"), ("y", "0", "0")])
WORDS = ["x*x", "x*y", "y*x", "y*y"]


@settings(max_examples=40, deadline=None)
@given(coeffs=st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=3))
def test_engine_agrees_with_buchberger(coeffs):
    rels = []
    for row in coeffs:
        terms = [f"{c}*{w}" for c, w in zip(row, WORDS) if c]
        if terms:
            rels.append(Q2.element(K, " + ".join(terms)))
    if not rels:
        return
    p = Presentation(K, Q2, rels)
    A = TruncatedAlgebra(p, 6)
    gb = complete_truncated(rels, MonomialOrder(Q2), 6)
    assert A.dims()[:7] == gb.hilbert(6)


def test_dual_numbers():
    p = parse_presentation("vertex 0\narrow x: 0 -> 0\nrelation x*x\n")
    A = TruncatedAlgebra(p, 4)
    assert A.dims()[:3] == [1, 1, 0] and A.finite
    assert check_weakly_symmetric(A)
    S = simple_module(p, 0)
    assert betti_sequence(A, S, 5)["betti"] == [1] * 6
    assert detect_periodicity(A, S, 4) == 1


def test_three_loops_radical_square_zero_grows():
    p = parse_presentation("vertex 0\narrow x: 0 -> 0\narrow y: 0 -> 0\narrow z: 0 -> 0\n" +
                           "".join(f"relation {a}*{b}\n" for a in "xyz" for b in "xyz"))
    A = TruncatedAlgebra(p, 3)
    S = simple_module(p, 0)
    assert betti_sequence(A, S, 5)["betti"] == [1, 3, 9, 27, 81, 243]
    assert detect_periodicity(A, S, 4) is None


def test_not_weakly_symmetric():
    p = parse_presentation("vertex 0 1\narrow a: 0 -> 1\n")
    A = TruncatedAlgebra(p, 3)
    assert not check_weakly_symmetric(A)


def test_cyclic_lambda_is_weakly_symmetric_radical_cube_zero():
    spec = build_family("A~", n=1)
    A = spec.lambda_algebra(4)
    assert A.dims()[:4] == [2, 4, 2, 0]
    assert check_weakly_symmetric(A)
    assert ext1_matrix(A) == [[0, 2], [2, 0]]


def test_multiplication_associative_on_dual():
    spec = build_family("A~", n=2, q=2, field="F7")
    A = spec.dual_algebra(6)
    a, b, c = (spec.el(t) for t in ("a0*a1", "a2*abar2", "a2"))
    assert A.equal((a * b) * c, a * (b * c))
    assert A.normal_form(a * b * c) == A.normal_form(A.to_element(*next(iter(A.to_vectors(a * b * c).items()))))


def test_representation_checks_relations():
    p = parse_presentation("vertex 0\narrow x: 0 -> 0\nrelation x*x\n")
    with pytest.raises(ValueError):
        Representation(p, [1], {"x": [[1]]})


def test_isomorphism_of_modules():
    spec = build_family("DZ~", n=3)
    L = spec.lambda_algebra(4)
    M = Representation(spec.lambda_presentation, [0, 0, 0, 2], {"b": [[0, 1], [0, 0]]})
    N = Representation(spec.lambda_presentation, [0, 0, 0, 2], {"b": [[0, 2], [0, 0]]})
    assert is_isomorphic(M, N)
    assert not is_isomorphic(M, simple_module(spec.lambda_presentation, 3))
    assert len(hom_space(M, N)) >= 1
    om, top, pdims = syzygy(L, M)
    assert sum(om.dims) + sum(M.dims) == sum(pdims)
