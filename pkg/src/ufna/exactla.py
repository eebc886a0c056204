"""Exact integer linear algebra and univariate integer polynomials.

Everything here stays inside the integers: elimination is fraction-free
(Bareiss for dense matrices, content-reduced for sparse rows), so no
rational or floating intermediate is ever formed.

Dense matrices are plain ``list[list[int]]`` (row-major); polynomials are
tuples of coefficients, lowest degree first, without trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

IntMatrix = List[List[int]]
IntPoly = Tuple[int, ...]
SparseVector = Dict[object, int]


def _check_rectangular(m: Sequence[Sequence[int]]) -> int:
    if not m:
        return 0
    ncols = len(m[0])
    for row in m:
        if len(row) != ncols:
            raise ValueError("matrix rows have different lengths")
    return ncols


def rank_exact(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination."""
    ncols = _check_rectangular(m)
    a = [list(row) for row in m]
    nrows = len(a)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row_r = a[r]
            row_p = a[rank]
            for c in range(col + 1, ncols):
                # exact by Sylvester's identity
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(m: Sequence[Sequence[int]], prime: int) -> int:
    """Rank over GF(prime). Used only as an independent cross-check."""
    ncols = _check_rectangular(m)
    a = [[x % prime for x in row] for row in m]
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, prime)
        for r in range(len(a)):
            if r != rank and a[r][col]:
                f = a[r][col] * inv % prime
                a[r] = [(x - f * y) % prime for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def det_bareiss(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if _check_rectangular(m) != n:
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def in_span(v: Sequence[int], m: Sequence[Sequence[int]]) -> bool:
    """True iff ``v`` is a rational combination of the columns of ``m``."""
    ncols = _check_rectangular(m)
    if len(v) != len(m):
        raise ValueError(f"vector of length {len(v)} against {len(m)} rows")
    if not any(v):
        return True
    if ncols == 0:
        return False
    augmented = [list(row) + [x] for row, x in zip(m, v)]
    return rank_exact(augmented) == rank_exact(m)


def transpose(m: Sequence[Sequence[int]]) -> IntMatrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class SparseEchelon:
    """Incremental row-echelon basis of sparse integer vectors.

    Vectors are dicts ``{coordinate: value}`` over any totally ordered keys.
    Each stored vector has a distinct pivot (its smallest coordinate) and is
    kept primitive, so reduction is fraction-free with bounded growth.
    """

    def __init__(self) -> None:
        self._rows: Dict[object, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, v: SparseVector) -> SparseVector:
        w = {k: x for k, x in v.items() if x}
        done = set()
        while True:
            keys = [k for k in w if k in self._rows and k not in done]
            if not keys:
                return w
            k = min(keys)
            done.add(k)
            row = self._rows[k]
            a, b = row[k], w[k]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {c: a * x for c, x in w.items()}
            for c, x in row.items():
                y = out.get(c, 0) - b * x
                if y:
                    out[c] = y
                else:
                    out.pop(c, None)
            w = _primitive(out)

    def add(self, v: SparseVector) -> bool:
        """Insert ``v``; returns True iff it was independent of the basis."""
        w = self.reduce(v)
        if not w:
            return False
        self._rows[min(w)] = w
        return True

    def contains(self, v: SparseVector) -> bool:
        return not self.reduce(v)


class DisjointSpan:
    """Span of nonzero sparse vectors with pairwise disjoint supports.

    Such vectors are automatically independent, and ``v`` lies in their span
    iff on each touched support it is a rational multiple of the spanning
    vector and it vanishes off the union. Membership is exact and costs
    O(|supp v|) after construction.
    """

    def __init__(self, vectors: Iterable[SparseVector]) -> None:
        self._owner: Dict[object, int] = {}
        self._vectors: List[SparseVector] = []
        for v in vectors:
            v = {k: x for k, x in v.items() if x}
            if not v:
                continue
            k = len(self._vectors)
            for c in v:
                if c in self._owner:
                    raise ValueError("spanning vectors have overlapping supports")
                self._owner[c] = k
            self._vectors.append(v)

    @property
    def rank(self) -> int:
        return len(self._vectors)

    def contains(self, v: SparseVector) -> bool:
        ratio: Dict[int, Fraction] = {}
        hits: Dict[int, int] = {}
        for c, x in v.items():
            if not x:
                continue
            k = self._owner.get(c)
            if k is None:
                return False
            r = Fraction(x, self._vectors[k][c])
            if ratio.setdefault(k, r) != r:
                return False
            hits[k] = hits.get(k, 0) + 1
        return all(n == len(self._vectors[k]) for k, n in hits.items())


def _primitive(v: SparseVector) -> SparseVector:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g <= 1:
        return v
    return {k: x // g for k, x in v.items()}


def rank_sparse(vectors: Iterable[SparseVector]) -> int:
    ech = SparseEchelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


# ---------------------------------------------------------------------------
# univariate integer polynomials
# ---------------------------------------------------------------------------

def poly_trim(c: Iterable[int]) -> IntPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return poly_trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                     for i in range(n))


def poly_neg(a: IntPoly) -> IntPoly:
    return tuple(-x for x in a)


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_shift(a: IntPoly, k: int) -> IntPoly:
    """Multiply by t**k."""
    return (0,) * k + a if a else ()


def poly_eval(a: IntPoly, t):
    acc = 0
    for x in reversed(a):
        acc = acc * t + x
    return acc


def poly_content(a: IntPoly) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def _divmod_q(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def poly_divmod(a: IntPoly, b: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """Division with remainder; raises if the quotient is not integral."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q, r = _divmod_q([Fraction(x) for x in a], [Fraction(x) for x in b])
    if any(x.denominator != 1 for x in list(q) + list(r)):
        raise ValueError("division is not exact over the integers")
    return poly_trim(int(x) for x in q), poly_trim(int(x) for x in r)


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = poly_divmod(a, b)
    if r:
        raise ValueError("polynomial division leaves a remainder")
    return q


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (0 if both are 0)."""
    x = [Fraction(c) for c in a]
    y = [Fraction(c) for c in b]
    while any(y):
        _, r = _divmod_q(x, y)
        x, y = y, r
    if not any(x):
        return ()
    den = 1
    for c in x:
        den = den * c.denominator // gcd(den, c.denominator)
    g = [int(c * den) for c in x]
    content = poly_content(tuple(g))
    g = [c // content for c in g]
    if g[-1] < 0:
        g = [-c for c in g]
    return poly_trim(g)


def polymat_resolvent(m: Sequence[Sequence[int]]) -> Tuple[IntPoly, IntPoly]:
    """Return ``(1ᵀ adj(I - tM) 1, det(I - tM))`` as integer polynomials.

    Faddeev–LeVerrier: with char poly ``det(xI - M) = sum c_k x^(n-k)`` the
    reversed polynomial is ``det(I - tM) = sum c_k t^k`` and
    ``adj(I - tM) = sum B_k t^k`` where ``B_0 = I``,
    ``B_k = M B_(k-1) + c_k I`` and ``c_k = -tr(M B_(k-1)) / k`` (exact).
    """
    n = len(m)
    if _check_rectangular(m) != n:
        raise ValueError("resolvent of a non-square matrix")
    if n == 0:
        return (), (1,)
    coeffs = [1]
    sums = []
    b = identity(n)
    for k in range(1, n + 1):
        sums.append(sum(map(sum, b)))
        mb = matmul(m, b)
        tr = sum(mb[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier coefficient")
        c = -tr // k
        coeffs.append(c)
        b = mb
        for i in range(n):
            b[i][i] += c
    return poly_trim(sums), poly_trim(coeffs)
