import pytest
from hypothesis import given, settings, strategies as st

from fgkit import benson
from fgkit.benson import EQ2, GT2, LT2, MatrixError, diagram_matrix, recognize_diagram, spectral_class

DIAGRAMS = ([("A~", n) for n in range(1, 7)] + [("D~", n) for n in range(4, 9)] +
            [("E6~", None), ("E7~", None), ("E8~", None)] + [("Z~", n) for n in range(0, 6)] +
            [("DZ~", n) for n in range(2, 7)])


@pytest.mark.parametrize("name,n", DIAGRAMS)
def test_every_euclidean_diagram_recognised(name, n):
    E = diagram_matrix(name, n)
    v = spectral_class(E)
    assert v.cls == EQ2 and v.diagram == (name, n)
    assert benson.verify_certificate(E, v)


@pytest.mark.parametrize("E,cls", [
    ([[1]], LT2), ([[3]], GT2), ([[0, 1], [1, 0]], LT2), ([[0, 3], [3, 0]], GT2),
    ([[2, 1], [1, 0]], GT2), ([[1, 1], [1, 1]], EQ2), ([[0, 1, 0], [1, 0, 1], [0, 1, 1]], LT2),
])
def test_small_cases(E, cls):
    v = spectral_class(E)
    assert v.cls == cls and benson.verify_certificate(E, v)


@pytest.mark.parametrize("E", [[[0, 1], [0, 0]], [[0, 0], [0, 0]], [[-1]], [[0, 1], [1]]])
def test_invalid_matrices(E):
    with pytest.raises(MatrixError):
        spectral_class(E)


def test_recognize_requires_eq2():
    with pytest.raises(MatrixError):
        recognize_diagram([[1]])


def _symmetric(draw_entries, n):
    E = [[0] * n for _ in range(n)]
    it = iter(draw_entries)
    for i in range(n):
        for j in range(i, n):
            E[i][j] = E[j][i] = next(it)
    for i in range(1, n):
        if not any(E[i][:i]):
            E[i][i - 1] = E[i - 1][i] = 1
    return E


@settings(max_examples=80, deadline=None)
@given(data=st.data(), n=st.integers(1, 6))
def test_certificates_and_float_agree(data, n):
    entries = data.draw(st.lists(st.integers(0, 2), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2))
    E = _symmetric(entries, n)
    v = spectral_class(E)
    assert benson.verify_certificate(E, v)
    lam = benson.perron_estimate(E)
    if abs(lam - 2) > 1e-6:
        assert v.cls == (LT2 if lam < 2 else GT2)


@settings(max_examples=30, deadline=None)
@given(name_n=st.sampled_from(DIAGRAMS), perm_seed=st.randoms())
def test_recognition_invariant_under_relabelling(name_n, perm_seed):
    E = diagram_matrix(*name_n)
    n = len(E)
    p = list(range(n))
    perm_seed.shuffle(p)
    F = [[E[p[i]][p[j]] for j in range(n)] for i in range(n)]
    assert spectral_class(F).diagram == name_n
