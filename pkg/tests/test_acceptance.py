"""Acceptance criteria, one test group per criterion."""

import random

import pytest

from fgkit import benson
from fgkit.algebra import Representation, betti_sequence, detect_periodicity, ext1_matrix
from fgkit.catalog import (_restrict, build_family, catalog_grid, central_element, fg_check,
                           identity_suite, nakayama_qext, qext_central_criterion,
                           qext_generating_exponent)
from fgkit.centre import graded_centre_component, is_graded_central
from fgkit.coeff import field_from_spec
from fgkit.fingen import FG, NOT_FG, local_span_report, module_quotient_dims
from fgkit.freealg import FreeElement
from fgkit.groebner import verify_groebner
from fgkit.koszul import quadratic_dual, same_ideal
from fgkit.quiver import MonomialOrder

crit = pytest.mark.criterion


def _central(spec, name, D=None):
    z = central_element(spec, name)
    A = spec.dual_algebra(D or z.degree + 1)
    assert A.to_vector(z), f"{name} vanishes in the algebra"
    ok, wit = is_graded_central(A, z)
    assert ok, wit
    return z.degree


def _identities(spec):
    ids = identity_suite(spec)
    D = max(max(e.degree for e in (l, r) if not e.is_zero()) for _, l, r in ids)
    A = spec.dual_algebra(D)
    bad = [lab for lab, l, r in ids if not A.equal(l, r)]
    assert not bad, bad


# 1 ---------------------------------------------------------------------------

@crit(1)
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("q,field", [(1, "Q"), (2, "F7"), ("t", "Q(t)")])
def test_c01_cyclic_dual_relations_form_groebner_basis(n, q, field):
    spec = build_family("A~", n=n, q=q, field=field)
    E = spec.dual_presentation
    ok, failures = verify_groebner(E.relations, MonomialOrder(E.quiver), 12)
    assert ok and failures == []


# 2 ---------------------------------------------------------------------------

@crit(2)
def test_c02_powers_central_over_f7():
    spec = build_family("A~", n=1, q=2, field="F7")
    for name in ("x^6", "y^6"):
        _central(spec, name)


@crit(2)
def test_c02_quotient_window_at_degree_16():
    spec = build_family("A~", n=1, q=2, field="F7")
    A = spec.dual_algebra(17)
    one = FreeElement.one(spec.quiver, spec.field)
    Z = [central_element(spec, "x^6"), central_element(spec, "y^6"), one]
    rep = module_quotient_dims(A, Z, D=16)
    assert rep.verdict == FG, rep.quotient_dims


# 3 ---------------------------------------------------------------------------

@crit(3)
def test_c03_generic_q_has_trivial_centre():
    spec = build_family("A~", n=1, q="t", field="Q(t)")
    A = spec.dual_algebra(9)
    for d in range(1, 9):
        assert A.dim(d) > 0
        assert graded_centre_component(A, d) == []
    assert fg_check(spec, 8).verdict == NOT_FG


# 4 ---------------------------------------------------------------------------

@crit(4)
@pytest.mark.parametrize("n,ydeg", [(1, 4), (2, 6)])
def test_c04_loop_family(n, ydeg):
    spec = build_family("Z~", n=n, q=1)
    assert _central(spec, "x") == 2
    assert _central(spec, "y") == ydeg
    rep = fg_check(spec, 2 * ydeg)
    assert rep.verdict == FG


# 5 ---------------------------------------------------------------------------

@crit(5)
@pytest.mark.parametrize("n", [2, 3])
def test_c05_branched_loop_family_central_and_identities(n):
    spec = build_family("DZ~", n=n)
    _central(spec, "x")
    assert _central(spec, "y") == 4 * n - 2
    _identities(spec)


@crit(5)
def test_c05_local_span_at_branch_vertex():
    spec = build_family("DZ~", n=3)
    A = spec.dual_algebra(20)
    g = lambda nm: central_element(spec, nm)
    ok, rows = local_span_report(A, 2, [_restrict(g("x"), 2), _restrict(g("y"), 2)],
                                 [g("alpha"), g("gamma"), g("b[2]")], 6, 20)
    assert ok, rows


# 6 ---------------------------------------------------------------------------

@crit(6)
def test_c06_d4_elements():
    spec = build_family("D~", n=4)
    assert _central(spec, "x") == 4
    assert _central(spec, "w") == 4


@crit(6)
def test_c06_d5_elements_and_local_span():
    spec = build_family("D~", n=5)
    _central(spec, "x")
    _central(spec, "y")
    A = spec.dual_algebra(16)
    g = lambda nm: central_element(spec, nm)
    ok, rows = local_span_report(A, 2, [_restrict(g("x"), 2), _restrict(g("y"), 2)],
                                 [g("alpha"), g("gamma"), g("delta[2]")], 3, 16)
    assert ok, rows


@crit(6)
@pytest.mark.parametrize("n", [5, 6])
def test_c06_transport_identities(n):
    _identities(build_family("D~", n=n))


# 7 ---------------------------------------------------------------------------

@crit(7)
@pytest.mark.parametrize("fam,degs", [("E6~", (6, 8)), ("E7~", (8, 12)), ("E8~", (12, 20))])
def test_c07_exceptional_elements(fam, degs):
    spec = build_family(fam)
    assert (_central(spec, "x"), _central(spec, "y")) == degs


@crit(7)
@pytest.mark.parametrize("fam", ["E6~", "E7~", "E8~"])
def test_c07_identity_suites(fam):
    _identities(build_family(fam))


# 8 ---------------------------------------------------------------------------

QEXT_CASES = [("Q", -1), ("Q", 2), ("Q", 1), ("F2", 1), ("F7", 2), ("F7", 3), ("F7", -1),
              ("Q(t)", "t"), ("Q(t)", -1)]


@crit(8)
@pytest.mark.parametrize("field,q", QEXT_CASES)
@pytest.mark.parametrize("n", [2, 3])
def test_c08_criterion_matches_brute_force(field, q, n):
    spec = build_family("qext", n=n, q=q, field=field)
    A = spec.dual_algebra(9)
    for i in range(1, n + 1):
        for p in range(1, 9):
            z = central_element(spec, f"x{i}^{p}")
            assert A.to_vector(z)
            assert is_graded_central(A, z)[0] == qext_central_criterion(spec.field, spec.params["qmatrix"], i, p)


@crit(8)
@pytest.mark.parametrize("field,q", QEXT_CASES)
@pytest.mark.parametrize("n", [2, 3])
def test_c08_fg_verdict_tracks_roots_of_unity(field, q, n):
    spec = build_family("qext", n=n, q=q, field=field)
    if spec.expected_fg:
        N = qext_generating_exponent(spec.field, spec.params["qmatrix"])
        D = n * (N - 1) + N
    else:
        D = 10
    rep = fg_check(spec, D)
    assert rep.verdict == (FG if spec.expected_fg else NOT_FG)


@crit(8)
def test_c08_nakayama_scalars():
    K = field_from_spec("Q(t)")
    t = K.gen()
    nu = nakayama_qext(K, {(1, 2): t, (1, 3): K.inv(t), (2, 3): t}, 3)
    assert all(K.is_one(v) for v in nu)
    for fld in ("Q", "F7", "F2"):
        K = field_from_spec(fld)
        assert [K.is_one(v) for v in nakayama_qext(K, {}, 1)] == [True]


# 9 ---------------------------------------------------------------------------

@crit(9)
@pytest.mark.parametrize("L", [1, 2, 3])
def test_c09_cycle_centre_dimensions(L):
    spec = build_family("radsq", n=L)
    A = spec.dual_algebra(13)
    dims = [len(graded_centre_component(A, d)) for d in range(1, 13)]
    # sign (-1)^d forces even degree; centrality forces L | d
    assert dims == [1 if d % L == 0 and d % 2 == 0 else 0 for d in range(1, 13)]


@crit(9)
def test_c09_non_cycle_quiver_centre_trivial():
    spec = build_family("radsq", arrows=[("a", "0", "0"), ("b", "0", "1"), ("c", "1", "0")])
    A = spec.dual_algebra(13)
    assert [len(graded_centre_component(A, d)) for d in range(1, 13)] == [0] * 12


# 10 --------------------------------------------------------------------------

EXPECTED_DIAGRAM = {"A~": "A~", "Z~": "Z~", "DZ~": "DZ~", "D~": "D~", "E6~": "E6~", "E7~": "E7~",
                    "E8~": "E8~", "qext": "Z~"}


@crit(10)
@pytest.mark.parametrize("fam,kw", catalog_grid(), ids=lambda v: str(v))
def test_c10_grid_is_euclidean(fam, kw):
    spec = build_family(fam, **kw)
    A = spec.lambda_algebra(4)
    E = ext1_matrix(A)
    v = benson.spectral_class(E)
    assert v.cls == benson.EQ2 and benson.verify_certificate(E, v)
    n = kw.get("n")
    want = (EXPECTED_DIAGRAM[fam], 0 if fam == "qext" else (n if fam in ("A~", "Z~", "DZ~", "D~") else None))
    assert v.diagram == want


@crit(10)
def test_c10_small_cases():
    assert benson.spectral_class([[1]]).cls == benson.LT2
    assert benson.spectral_class([[3]]).cls == benson.GT2


@crit(10)
def test_c10_random_matrices_agree_with_float():
    rng = random.Random(0)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 7)
        E = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.choice([0, 0, 0, 1, 1, 2]) if i != j else rng.choice([0, 0, 0, 1])
                E[i][j] = E[j][i] = v
        for i in range(1, n):
            if not any(E[i][j] for j in range(i)):
                j = rng.randrange(i)
                E[i][j] = E[j][i] = 1
        lam = benson.perron_estimate(E)
        v = benson.spectral_class(E)
        assert benson.verify_certificate(E, v)
        if abs(lam - 2) > 1e-6:
            assert v.cls == (benson.LT2 if lam < 2 else benson.GT2)
        else:
            assert v.cls == benson.EQ2
        checked += 1


# 11 --------------------------------------------------------------------------

@crit(11)
def test_c11_periodic_module():
    spec = build_family("DZ~", n=3, q=1)
    L = spec.lambda_algebra(4)
    M = Representation(spec.lambda_presentation, [0, 0, 0, 2], {"b": [[0, 1], [0, 0]]})
    res = betti_sequence(L, M, 6)
    assert detect_periodicity(L, M, 8) == 5
    assert len(set(res["betti"])) > 1
    assert res["betti"][2] == 2 and res["betti"].index(2) == 2


# 12 --------------------------------------------------------------------------

@crit(12)
@pytest.mark.parametrize("fam,kw", catalog_grid(), ids=lambda v: str(v))
def test_c12_computed_dual_matches_stated(fam, kw):
    spec = build_family(fam, check=False, **kw)
    assert same_ideal(quadratic_dual(spec.lambda_presentation), spec.dual_presentation, D=8)
