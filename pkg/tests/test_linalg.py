from fractions import Fraction

from hypothesis import given, settings, strategies as st

from fgkit.coeff import field_from_spec
from fgkit.linalg import Echelon, determinant, in_span, kernel, rank

Q = field_from_spec("Q")
F5 = field_from_spec("F5")

vec = st.dictionaries(st.integers(0, 5), st.integers(-3, 3).filter(bool), max_size=4)


def _norm(K, v):
    return {k: K.from_int(c) for k, c in v.items() if not K.is_zero(K.from_int(c))}


@settings(max_examples=60, deadline=None)
@given(vs=st.lists(vec, max_size=6))
def test_rank_nullity(vs):
    for K in (Q, F5):
        rows = [_norm(K, v) for v in vs]
        # kernel of the column-vector list: combinations of the vectors summing to zero
        ker = kernel(K, rows)
        assert rank(K, rows) + len(ker) == len(rows)
        for kv in ker:
            total = {}
            for j, c in kv.items():
                for i, x in rows[j].items():
                    total[i] = K.add(total.get(i, K.zero), K.mul(c, x))
            assert all(K.is_zero(x) for x in total.values())


@settings(max_examples=40, deadline=None)
@given(vs=st.lists(vec, min_size=1, max_size=5))
def test_members_are_in_span(vs):
    rows = [_norm(Q, v) for v in vs]
    assert all(in_span(Q, rows, r) for r in rows)


def test_echelon_pivots_are_maximal_columns():
    ech = Echelon(Q)
    ech.add({0: Fraction(1), 3: Fraction(2)})
    ech.add({3: Fraction(1), 1: Fraction(1)})
    assert len(ech) == 2
    assert set(ech.pivots) == {3, 1}


def test_determinant():
    assert determinant(Q, [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]) == 1
    assert F5.is_zero(determinant(F5, [[F5.from_int(2), F5.from_int(4)], [F5.from_int(1), F5.from_int(2)]]))
