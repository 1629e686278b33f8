import pytest
from hypothesis import given, settings, strategies as st

from fgkit.catalog import build_family
from fgkit.coeff import field_from_spec
from fgkit.groebner import InhomogeneousError, complete_truncated, normal_form, verify_groebner
from fgkit.quiver import MonomialOrder, Quiver

K = field_from_spec("Q")
Q1 = Quiver(["0"], [("x", "0", "0"), ("y", "0", "0")])


def rels(*texts):
    return [Q1.element(K, t) for t in texts]


def test_commutative_exterior_is_groebner():
    ok, failures = verify_groebner(rels("x*y - y*x", "x*x"), MonomialOrder(Q1), 8)
    assert ok and failures == []


def test_genuine_failure_is_reported():
    ok, failures = verify_groebner(rels("x*y - y*y"), MonomialOrder(Q1), 6)
    assert not ok
    assert failures and not failures[0][1].is_zero()


def test_completion_adds_missing_elements():
    order = MonomialOrder(Q1)
    gb = complete_truncated(rels("x*y - y*y"), order, 6)
    ok, _ = verify_groebner(gb.elements, order, 6)
    assert ok
    assert len(gb.elements) > 1


def test_cross_check_with_truncated_engine():
    spec = build_family("A~", n=2, q=2, field="F7")
    E = spec.dual_presentation
    order = MonomialOrder(E.quiver)
    gb = complete_truncated(E.relations, order, 8)
    A = spec.dual_algebra(8)
    assert gb.hilbert(8) == A.dims()[:9]
    assert [g.terms for g in gb.elements] == [g.terms for g in A.groebner_elements()]


def test_inhomogeneous_rejected():
    with pytest.raises((InhomogeneousError, ValueError)):
        complete_truncated(rels("x*y - x"), MonomialOrder(Q1), 4)


words = st.lists(st.sampled_from(["x", "y"]), min_size=1, max_size=6).map("*".join)


@settings(max_examples=50, deadline=None)
@given(w1=words, w2=words)
def test_normal_form_is_linear_and_idempotent(w1, w2):
    order = MonomialOrder(Q1)
    gb = complete_truncated(rels("x*y + y*x", "x*x"), order, 8)
    f, g = Q1.element(K, w1), Q1.element(K, w2)
    nf = gb.normal_form
    assert nf(f + g) == nf(f) + nf(g)
    assert nf(nf(f)) == nf(f)
    assert all(gb.is_normal(p) for p in nf(f).terms)


def test_module_level_normal_form_matches():
    gb = complete_truncated(rels("x*y + y*x", "x*x"), MonomialOrder(Q1), 6)
    assert normal_form(Q1.element(K, "y*x*y"), gb) == Q1.element(K, "-x*y*y")


def test_exterior_with_x_above_y_resolves_its_overlap():
    Qyx = Quiver(["0"], [("y", "0", "0"), ("x", "0", "0")])
    ok, failures = verify_groebner([Qyx.element(K, "x*y - y*x"), Qyx.element(K, "x*x")], MonomialOrder(Qyx), 6)
    assert ok and failures == []
