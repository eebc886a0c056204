"""The graded homomorphism f̄: A -> kQ and the checks built on it.

f̄ sends a letter to the sum of all arrows carrying it as label (zero if
there are none). Elements of kQ are sparse dicts keyed by the underlying
normal word of each path; a path of length n has a key of length n + d, and
two keys compose when the last d letters of one equal the first d of the
next.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exactla import DisjointSpan, SparseEchelon, rank_sparse
from .language import (
    default_cap,
    has_right_extension,
    is_normal,
    normal_words,
)
from .presentation import Presentation, Word
from .quiver import (
    Path,
    Quiver,
    count_paths,
    enumerate_paths,
    longest_path_from,
    path_word,
    vertices_reaching_cycles,
)

Element = Dict[Word, int]


# ---------------------------------------------------------------------------
# path algebra arithmetic
# ---------------------------------------------------------------------------

def multiply(a: Element, b: Element, d: int) -> Element:
    """Product in kQ (left-to-right composition); non-composable pairs give 0."""
    by_source: Dict[Word, List[Tuple[Word, int]]] = defaultdict(list)
    for w, c in b.items():
        by_source[w[:d]].append((w, c))
    out: Element = {}
    for w1, c1 in a.items():
        for w2, c2 in by_source.get(w1[len(w1) - d:], ()):
            key = w1 + w2[d:]
            out[key] = out.get(key, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def unit(q: Quiver) -> Element:
    """1 = sum of the trivial paths e_v."""
    return {v: 1 for v in q.vertices}


def trivial_path(q: Quiver, v: int) -> Element:
    return {q.vertices[v]: 1}


def fbar_letter(x: int, q: Quiver) -> Element:
    return {a.word: 1 for a in q.arrows if a.label == x}


def fbar_element(w: Sequence[int], q: Quiver) -> Element:
    """f̄(x1)·…·f̄(xn) as a sparse element of kQ."""
    e = unit(q)
    letters = {}
    for x in w:
        if x not in letters:
            letters[x] = fbar_letter(x, q)
        e = multiply(e, letters[x], q.d)
        if not e:
            break
    return e


def element_to_vector(e: Element, basis: Sequence[Word]) -> List[int]:
    index = {w: i for i, w in enumerate(basis)}
    vec = [0] * len(basis)
    for w, c in e.items():
        vec[index[w]] = c
    return vec


def path_basis(q: Quiver, n: int, cap: Optional[int] = None) -> List[Word]:
    """Underlying words of the paths of length n, in canonical order."""
    return [path_word(q, pth) for pth in enumerate_paths(q, n, cap)]


def fbar_word(w: Sequence[int], q: Quiver, cap: Optional[int] = None) -> List[int]:
    """Dense image of a word over the paths of length |w|; zero if w is forbidden."""
    return element_to_vector(fbar_element(w, q), path_basis(q, len(w), cap))


def _fbar_images(n: int, q: Quiver, p: Presentation) -> Iterator[Tuple[Word, Element]]:
    """(w, f̄(w)) for the normal words of length n, lexicographically.

    Products are built incrementally along the word tree so prefixes are
    shared.
    """
    letters = [fbar_letter(x, q) for x in range(p.num_generators)]
    stack: List[Tuple[Word, Element]] = [((), unit(q))]
    while stack:
        w, e = stack.pop()
        if len(w) == n:
            yield w, e
            continue
        for x in range(p.num_generators - 1, -1, -1):
            wx = w + (x,)
            if any(len(r) <= len(wx) and wx[len(wx) - len(r):] == r
                   for r in p.relations):
                continue
            stack.append((wx, multiply(e, letters[x], q.d)))


# ---------------------------------------------------------------------------
# degree-wise matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedMapSlice:
    """Matrix of f̄_n: rows = paths of length n, columns = normal words of length n.

    Every path spells exactly one normal word, so each row holds a single 1;
    the matrix is stored as ``row_col[i]`` = column of that 1 (-1 if none).
    """

    degree: int
    paths: Tuple[Word, ...]
    words: Tuple[Word, ...]
    row_col: Tuple[int, ...]
    characterizations_agree: bool

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.paths), len(self.words)

    @property
    def matrix(self) -> List[List[int]]:
        ncols = len(self.words)
        return [[int(c == j) for j in range(ncols)] for c in self.row_col]

    def column_support(self, j: int) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.row_col) if c == j)

    def column(self, j: int) -> List[int]:
        return [int(c == j) for c in self.row_col]

    def columns(self) -> List[Tuple[int, ...]]:
        supports: List[List[int]] = [[] for _ in self.words]
        for i, c in enumerate(self.row_col):
            if c >= 0:
                supports[c].append(i)
        return [tuple(s) for s in supports]


def fbar_slice(n: int, q: Quiver, p: Presentation, cap: Optional[int] = None) -> GradedMapSlice:
    return _fbar_slice(n, q, p, default_cap() if cap is None else cap)


@lru_cache(maxsize=512)
def _fbar_slice(n: int, q: Quiver, p: Presentation, cap: int) -> GradedMapSlice:
    """Build f̄_n by label matching and cross-check it against extensions.

    Second characterization: the column of w is the indicator of the paths
    whose underlying word is w·v for a vertex v with w·v normal.
    """
    paths = tuple(path_basis(q, n, cap))
    words = normal_words(n, p, cap).words
    col_index = {w: j for j, w in enumerate(words)}
    row_col = tuple(col_index.get(pw[:n], -1) for pw in paths)

    row_index = {pw: i for i, pw in enumerate(paths)}
    by_label: List[List[int]] = [[] for _ in words]
    for i, c in enumerate(row_col):
        if c >= 0:
            by_label[c].append(i)
    agree = -1 not in row_col
    for j, w in enumerate(words):
        via_ext = sorted(row_index.get(w + v, -1)
                         for v in q.vertices if is_normal(w + v, p))
        if via_ext != by_label[j]:
            agree = False
    return GradedMapSlice(n, paths, words, row_col, agree)


@dataclass(frozen=True)
class KerCoker:
    degree: int
    dim_A: int
    num_paths: int
    rank: int
    kernel: Tuple[Word, ...]
    cokernel_dim: int
    columns_independent: bool

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)


def ker_coker_dims(n: int, q: Quiver, p: Presentation, cap: Optional[int] = None,
                   sl: Optional[GradedMapSlice] = None) -> KerCoker:
    """Exact rank of f̄_n; the kernel is spanned by the words with zero column.

    That holds because distinct nonzero columns have disjoint supports; the
    exact rank is compared with the count of nonzero columns to confirm it.
    """
    sl = sl or fbar_slice(n, q, p, cap)
    supports = sl.columns()
    rank = rank_sparse({i: 1 for i in s} for s in supports if s)
    nonzero = sum(1 for s in supports if s)
    kernel = tuple(w for w, s in zip(sl.words, supports) if not s)
    return KerCoker(
        degree=n,
        dim_A=len(sl.words),
        num_paths=len(sl.paths),
        rank=rank,
        kernel=kernel,
        cokernel_dim=len(sl.paths) - rank,
        columns_independent=(rank == nonzero and rank == len(sl.words) - len(kernel)),
    )


def check_degree_span(n: int, q: Quiver, p: Presentation) -> bool:
    """Do the f̄(w)·e_v (w normal of length n, v a vertex) span (kQ)_n?"""
    ech = SparseEchelon()
    d = q.d
    for _, e in _fbar_images(n, q, p):
        by_end: Dict[Word, Element] = defaultdict(dict)
        for pw, c in e.items():
            by_end[pw[len(pw) - d:]][pw] = c
        for piece in by_end.values():
            ech.add(piece)
    return ech.rank == count_paths(q, n)


# ---------------------------------------------------------------------------
# Fdim certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FdimCertificate:
    kind: str  # "Kernel" | "Cokernel"
    degree: int
    bound: Optional[int]
    m_max: int
    status: str  # "Certified" | "NotFoundWithinCap"
    table: Tuple[Tuple[int, bool], ...] = field(default=())

    @property
    def certified(self) -> bool:
        return self.status == "Certified"


def _certificate(kind: str, n: int, m_max: int, table: List[Tuple[int, bool]]) -> FdimCertificate:
    bound = None
    for m in range(m_max, -1, -1):
        if table[m][1]:
            bound = m
        else:
            break
    status = "Certified" if bound is not None else "NotFoundWithinCap"
    return FdimCertificate(kind, n, bound, m_max, status, tuple(table))


def kernel_fdim_certificate(n: int, m_max: int, q: Quiver, p: Presentation,
                            cap: Optional[int] = None) -> FdimCertificate:
    """Smallest m with w·A_m = 0 in A for every kernel word w of degree n."""
    kernel = ker_coker_dims(n, q, p, cap).kernel
    table = [(m, not any(has_right_extension(w, m, p) for w in kernel))
             for m in range(m_max + 1)]
    return _certificate("Kernel", n, m_max, table)


def cokernel_fdim_certificate(n: int, m_max: int, q: Quiver, p: Presentation,
                              cap: Optional[int] = None) -> FdimCertificate:
    """Smallest m with B_n·f̄(A_m') inside f̄(A_(n+m')) for m <= m' <= m_max.

    B_n·f̄(A_m') is spanned by the products path·f̄(w); each one is tested
    for membership in the column span of f̄_(n+m').
    """
    d = q.d
    paths_by_target: Dict[Word, List[Word]] = defaultdict(list)
    for pw in path_basis(q, n, cap):
        paths_by_target[pw[len(pw) - d:]].append(pw)
    table = []
    for mp in range(m_max + 1):
        image = _image_span(n + mp, q, p, default_cap() if cap is None else cap)
        table.append((mp, _products_in_image(mp, q, p, paths_by_target, image)))
    return _certificate("Cokernel", n, m_max, table)


@lru_cache(maxsize=128)
def _image_span(k: int, q: Quiver, p: Presentation, cap: int) -> DisjointSpan:
    sl = fbar_slice(k, q, p, cap)
    return DisjointSpan({sl.paths[i]: 1 for i in s} for s in sl.columns())


def _products_in_image(mp: int, q: Quiver, p: Presentation,
                       paths_by_target: Dict[Word, List[Word]], image) -> bool:
    d = q.d
    for _, e in _fbar_images(mp, q, p):
        by_source: Dict[Word, Element] = defaultdict(dict)
        for pw, c in e.items():
            by_source[pw[:d]][pw] = c
        for u, piece in by_source.items():
            for pw in paths_by_target.get(u, ()):
                if not image.contains(multiply({pw: 1}, piece, d)):
                    return False
    return True


# ---------------------------------------------------------------------------
# cyclic modules p·kQ
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicProbe:
    generator: Path
    n_max: int
    finite_over_kQ: bool
    finite_over_A: bool
    annihilated_at: Optional[int]

    @property
    def agree(self) -> bool:
        return self.finite_over_kQ == self.finite_over_A


def classify_cyclic(path: Path, n_max: int, q: Quiver) -> CyclicProbe:
    """Is p·kQ finite dimensional, and is p killed by f̄(A_m) for some m <= n_max?

    The kQ side is graph reachability: p·kQ is finite iff no directed cycle
    can be reached from the end of p. The A side multiplies by the letter
    images; coefficients never cancel (all are >= 0), so p·f̄(A_m) vanishes
    exactly when no path of the product survives, and only the end vertices
    of the surviving paths matter for the next step.
    """
    end = q.target(path)
    finite_kq = end not in vertices_reaching_cycles(q)

    d = q.d
    letters = [fbar_letter(x, q) for x in range(q.num_letters)]
    frontier = {q.vertices[end]}
    annihilated = None
    for m in range(n_max + 1):
        if not frontier:
            annihilated = m
            break
        heads = {v: 1 for v in frontier}
        nxt = set()
        for img in letters:
            for pw, c in multiply(heads, img, d).items():
                if c < 0:
                    raise AssertionError("negative coefficient in a product of f̄ images")
                nxt.add(pw[len(pw) - d:])
        frontier = nxt
    return CyclicProbe(path, n_max, finite_kq, annihilated is not None, annihilated)


def longest_tail(path: Path, q: Quiver) -> Optional[int]:
    """Length of the longest path continuing ``path`` (None if unbounded)."""
    return longest_path_from(q, q.target(path))
