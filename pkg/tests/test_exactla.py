import random

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from ufna.exactla import (
    DisjointSpan,
    SparseEchelon,
    det_bareiss,
    identity,
    in_span,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_trim,
    polymat_resolvent,
    rank_exact,
    rank_mod_p,
    rank_sparse,
)

PRIMES = (1_000_000_007, 998_244_353, 2_147_483_647)

int_matrices = st.integers(0, 6).flatmap(
    lambda r: st.integers(0, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_rank_examples():
    assert rank_exact(identity(3)) == 3
    assert rank_exact([[1, 0], [0, 1], [0, 1]]) == 2
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([]) == 0


def test_rank_rejects_ragged():
    with pytest.raises(ValueError):
        rank_exact([[1, 2], [3]])


@given(int_matrices)
def test_rank_agrees_with_modular_rank(m):
    ranks = {rank_mod_p(m, prime) for prime in PRIMES}
    assert ranks == {rank_exact(m)}


@given(int_matrices)
def test_rank_agrees_with_sympy(m):
    expected = sp.Matrix(m).rank() if m and m[0] else 0
    assert rank_exact(m) == expected


def test_rank_low_rank_products():
    rng = random.Random(7)
    for _ in range(30):
        k = rng.randint(0, 4)
        a = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(7)]
        b = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(k)]
        prod = [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(6)] for i in range(7)]
        assert rank_exact(prod) == rank_mod_p(prod, PRIMES[0]) <= k


def test_in_span_examples():
    m = [[1, 0], [0, 1], [0, 1]]
    assert in_span([1, 0, 0], m)
    assert in_span([0, 0, 0], m)
    e1 = [1, 0, 0]
    cols_e2_e3 = [[0, 0], [1, 0], [0, 1]]
    assert not in_span(e1, cols_e2_e3)
    with pytest.raises(ValueError):
        in_span([1, 0], m)


@given(int_matrices, st.data())
def test_sparse_echelon_matches_dense_rank(m, data):
    vectors = [{j: x for j, x in enumerate(row) if x} for row in m]
    assert rank_sparse(vectors) == rank_exact(m)
    if m and m[0]:
        v = data.draw(st.lists(st.integers(-3, 3), min_size=len(m[0]), max_size=len(m[0])))
        ech = SparseEchelon()
        for row in vectors:
            ech.add(row)
        # v in row space of m  <=>  v in column space of mᵀ
        mt = [list(col) for col in zip(*m)]
        assert ech.contains({j: x for j, x in enumerate(v)}) == in_span(v, mt)


@given(st.lists(st.integers(1, 3), min_size=0, max_size=5), st.data())
def test_disjoint_span_matches_elimination(sizes, data):
    coord = 0
    vectors = []
    for s in sizes:
        vectors.append({coord + i: data.draw(st.integers(1, 3)) for i in range(s)})
        coord += s
    n = coord + 2
    v = data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    sparse_v = {i: x for i, x in enumerate(v) if x}
    span = DisjointSpan(vectors)
    ech = SparseEchelon()
    for w in vectors:
        ech.add(w)
    assert span.rank == ech.rank == len(vectors)
    assert span.contains(sparse_v) == ech.contains(sparse_v)
    for w in vectors:
        assert span.contains({k: 3 * x for k, x in w.items()})


def test_disjoint_span_rejects_overlap():
    with pytest.raises(ValueError):
        DisjointSpan([{0: 1, 1: 1}, {1: 1}])


def test_det_bareiss_against_sympy():
    rng = random.Random(3)
    for n in range(0, 6):
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        expected = sp.Matrix(m).det() if n else 1
        assert det_bareiss(m) == expected


def test_resolvent_examples():
    assert polymat_resolvent([[0, 1], [1, 1]])[1] == (1, -1, -1)
    assert polymat_resolvent([[0, 0], [0, 0]])[1] == (1,)
    assert polymat_resolvent([[1]])[1] == (1, -1)
    assert polymat_resolvent([[0, 1], [1, 1]])[0] == (2, 1)


def _sympy_resolvent(m):
    t = sp.symbols("t")
    n = len(m)
    a = sp.eye(n) - t * sp.Matrix(m)
    adj_sum = sp.expand(sum(a.adjugate()))
    det = sp.expand(a.det())
    to_tuple = lambda e: tuple(int(c) for c in reversed(sp.Poly(e, t).all_coeffs()))
    return to_tuple(adj_sum), to_tuple(det)


@pytest.mark.parametrize("seed", range(12))
def test_resolvent_against_cofactor_expansion(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    m = [[rng.randint(0, 2) for _ in range(n)] for _ in range(n)]
    adj_sum, det = polymat_resolvent(m)
    e_adj, e_det = _sympy_resolvent(m)
    assert det == e_det
    assert adj_sum == poly_trim(e_adj)


@pytest.mark.parametrize("seed", range(12))
def test_resolvent_series_identity(seed):
    # det · Σ (1ᵀ Mⁿ 1) tⁿ = 1ᵀ adj 1, checked coefficientwise up to 3·size
    rng = random.Random(100 + seed)
    n = rng.randint(1, 5)
    m = [[rng.randint(0, 2) for _ in range(n)] for _ in range(n)]
    adj_sum, det = polymat_resolvent(m)
    counts = []
    vec = [1] * n
    for _ in range(3 * n + 2):
        counts.append(sum(vec))
        vec = [sum(x * y for x, y in zip(row, vec)) for row in m]
    lhs = poly_trim(poly_mul(det, tuple(counts))[:len(counts)])
    assert lhs == adj_sum


def test_poly_gcd_and_division():
    a = poly_mul((1, -1), (1, -1, -1))
    b = poly_mul((1, -1), (2, 1))
    assert poly_gcd(a, b) == (-1, 1)
    q, r = poly_divmod(a, (1, -1))
    assert q == (1, -1, -1) and r == ()
    assert poly_gcd((), ()) == ()
    with pytest.raises(ValueError):
        poly_divmod((1, 0, 1), (0, 2))
