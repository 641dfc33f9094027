import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from catsl2 import _accel
from catsl2.nilhecke import (
    MultiPoly,
    OperatorSpace,
    T,
    X,
    all_reduced_words,
    apply_word,
    demazure,
    far_commutation_check,
    longest_element,
    monomial_symmetric,
    monomials_up_to,
    operators_equal,
    reduced_word,
    reduced_word_independence,
    relation_table,
    staircase,
    staircase_idempotent_check,
    sym2_checks,
    t_w,
    telescoping_identity_check,
    w0_degree_check,
    w0_kills_pair_symmetric,
)
from catsl2.nilhecke.kernels import build_lookup, demazure_triplets, xmul_triplets
from catsl2.nilhecke.operators import word
from oracles import sympy_demazure

x = MultiPoly.var


def test_demazure_examples():
    assert demazure(1, x(1, 2)) == MultiPoly.const(1, 2)
    assert demazure(1, x(1, 2) * x(2, 2)).is_zero()
    assert demazure(1, x(1, 2) ** 2) == x(1, 2) + x(2, 2)


def test_demazure_index_errors():
    with pytest.raises(ValueError):
        demazure(0, x(1, 2))
    with pytest.raises(ValueError):
        demazure(2, x(1, 2))


@pytest.mark.parametrize("n,i", [(2, 1), (3, 1), (3, 2)])
def test_demazure_matches_sympy(n, i):
    for e in monomials_up_to(n, 4):
        got = demazure(i, MultiPoly.monomial(e))
        assert got.terms == sympy_demazure(i, n, {e: 1})


def test_matrix_route_matches_dict_route():
    space = OperatorSpace(3, 6)
    for i in (1, 2):
        m = space.gen(T(i)).toarray()
        for k, e in enumerate(space.basis):
            assert space.poly(m[:, k]) == demazure(i, MultiPoly.monomial(e))


@pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba unavailable")
@pytest.mark.parametrize("n,D", [(2, 9), (3, 7), (5, 5)])
def test_numba_and_numpy_kernels_agree(n, D):
    exps = np.array(monomials_up_to(n, D), dtype=np.int64)
    table = build_lookup(exps, D)
    for i in range(n - 1):
        a = demazure_triplets(exps, table, D, i, "numba")
        b = demazure_triplets(exps, table, D, i, "numpy")
        for u, v in zip(a, b):
            assert np.array_equal(u, v)
    for k in range(n):
        a = xmul_triplets(exps, table, D, k, "numba")
        b = xmul_triplets(exps, table, D, k, "numpy")
        for u, v in zip(a, b):
            assert np.array_equal(u, v)


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("CATSL2_NO_NUMBA", "1")
    assert _accel.default_backend() == "numpy"
    monkeypatch.delenv("CATSL2_NO_NUMBA")
    assert _accel.default_backend() == ("numba" if _accel.HAVE_NUMBA else "numpy")


def test_apply_word_examples():
    f = x(1, 3) ** 3 * x(2, 3) + 2 * x(3, 3) ** 2
    assert apply_word((), f) == f
    lhs = apply_word((X(1), T(1)), f) - apply_word((T(1), X(2)), f)
    assert lhs == f
    assert apply_word((T(1), T(1)), f).is_zero()
    with pytest.raises(ValueError):
        apply_word((T(3),), f)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_all_relations(n):
    table = relation_table(n, 8)
    assert all(table.values()), table


def test_relation_numpy_backend_too():
    assert all(relation_table(4, 6, backend="numpy").values())


def test_x_i_commutes_with_t_i_plus_1():
    # x_i commutes with t_{i+1}; the "-1" version only holds as x_{i+1} t_i = t_i x_i - 1
    one = MultiPoly.const(1, 3)
    assert not operators_equal(word(X(1), T(2)), word(T(2), X(1)) + [(-1, [one])], 3, 6)
    assert operators_equal(word(X(2), T(1)), word(T(1), X(1)) + [(-1, [one])], 3, 6)


def test_t_w_examples():
    f = x(1, 3) ** 4 * x(2, 3) + x(3, 3) ** 2 * x(1, 3)
    assert t_w((1, 2, 3), f) == f
    assert t_w((2, 1, 3), f) == demazure(1, f)
    for e in monomials_up_to(3, 6):
        m = MultiPoly.monomial(e)
        assert t_w((3, 2, 1), m, (1, 2, 1)) == t_w((3, 2, 1), m, (2, 1, 2))
    with pytest.raises(ValueError):
        t_w((3, 2, 1), f, (1, 2))


def test_reduced_words():
    assert reduced_word((3, 2, 1)) == (1, 2, 1)
    assert all_reduced_words((3, 2, 1)) == [(1, 2, 1), (2, 1, 2)]
    assert len(all_reduced_words(longest_element(4))) == 16
    assert reduced_word_independence(4, 6)


def test_staircase_signs():
    # frozen by brute force: the sign is +1 for every n tried
    assert staircase_idempotent_check(1) == 1
    assert staircase_idempotent_check(2) == 1
    assert staircase_idempotent_check(3) == 1
    assert staircase_idempotent_check(4) == 1


def test_staircase_numpy_backend():
    assert staircase_idempotent_check(3, backend="numpy") == 1


def test_staircase_dict_oracle_n3():
    # t_{w0}(x^delta) = 1 via the dictionary route
    assert t_w((3, 2, 1), staircase(3)) == MultiPoly.const(1, 3)


def test_telescoping():
    assert telescoping_identity_check(1, 1, 2)
    assert telescoping_identity_check(1, 2, 2, 6)
    for a in range(1, 5):
        for i in range(1, 4):
            assert telescoping_identity_check(i, a, 4, 6)
    assert far_commutation_check(1, 3, 3)
    assert far_commutation_check(3, 1, 4)


def test_sym2_and_w0():
    assert sym2_checks(3, 6, 4)
    assert sym2_checks(4, 4, 3)
    for n in (2, 3, 4):
        assert w0_kills_pair_symmetric(n, 3)
    for n in (2, 3, 4, 5):
        assert w0_degree_check(n)


def test_symmetric_function_is_central_for_w0():
    f = monomial_symmetric((2, 1), 3)
    tw0 = [T(1), T(2), T(1)]
    assert operators_equal(word(*tw0, f), word(f, *tw0), 3, 6)


def test_json_roundtrip():
    f = x(1, 3) * 3 - x(2, 3) ** 2
    data = f.to_json()
    assert data == [{"exponents": [0, 2, 0], "coeff": -1}, {"exponents": [1, 0, 0], "coeff": 3}]
    assert MultiPoly.from_json(json.loads(json.dumps(data))) == f


mono = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple)
polys3 = st.dictionaries(mono, st.integers(-5, 5), max_size=6).map(lambda d: MultiPoly(3, d))


@settings(max_examples=100, deadline=None)
@given(polys3, polys3)
def test_twisted_leibniz(f, g):
    # t_i(fg) = t_i(f) g + s_i(f) t_i(g)
    for i in (1, 2):
        assert demazure(i, f * g) == demazure(i, f) * g + f.swap(i) * demazure(i, g)
