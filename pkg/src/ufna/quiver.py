"""The Ufnarovskii graph of a monomial algebra.

Vertices are the normal words of length d (d = longest relation - 1) and
each normal word w of length d+1 is an arrow from its length-d prefix to its
length-d suffix, labelled by its first letter. A path of length n spells a
normal word of length n + d by overlapping its arrow words, and every normal
word of that length arises from exactly one path.

Paths compose left to right: ``a`` then ``b`` needs ``target(a) == source(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .language import CapExceeded, default_cap, normal_words
from .presentation import Presentation, Word


@dataclass(frozen=True)
class Arrow:
    word: Word
    source: int
    target: int
    label: int


@dataclass(frozen=True)
class Path:
    """``start`` is the source vertex, so length-0 paths (e_v) are representable."""

    start: int
    arrows: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True, eq=False)
class Quiver:
    d: int
    vertices: Tuple[Word, ...]
    arrows: Tuple[Arrow, ...]
    num_letters: int
    names: Tuple[str, ...] = field(default=())

    @cached_property
    def vertex_index(self) -> Dict[Word, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> Dict[Word, int]:
        return {a.word: i for i, a in enumerate(self.arrows)}

    @cached_property
    def adjacency(self) -> List[List[int]]:
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for a in self.arrows:
            m[a.source][a.target] += 1
        return m

    @cached_property
    def outgoing(self) -> Tuple[Tuple[int, ...], ...]:
        """Arrow indices leaving each vertex, sorted by arrow word."""
        out: List[List[int]] = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            out[a.source].append(i)
        return tuple(tuple(sorted(o, key=lambda i: self.arrows[i].word)) for o in out)

    @cached_property
    def incoming(self) -> Tuple[Tuple[int, ...], ...]:
        inc: List[List[int]] = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            inc[a.target].append(i)
        return tuple(tuple(o) for o in inc)

    def target(self, path: Path) -> int:
        return self.arrows[path.arrows[-1]].target if path.arrows else path.start

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from((a.source, a.target, i) for i, a in enumerate(self.arrows))
        return g

    def spell(self, w: Sequence[int]) -> str:
        if not w:
            return "ε"
        names = self.names or tuple(str(i) for i in range(self.num_letters))
        if all(len(n) == 1 for n in names):
            return "".join(names[i] for i in w)
        return ".".join(names[i] for i in w)


def build_quiver(p: Presentation, cap: int | None = None) -> Quiver:
    d = p.d
    vertices = normal_words(d, p, cap).words
    index = {v: i for i, v in enumerate(vertices)}
    arrows = tuple(
        Arrow(word=w, source=index[w[:d]], target=index[w[1:]], label=w[0])
        for w in normal_words(d + 1, p, cap).words
    )
    return Quiver(d=d, vertices=vertices, arrows=arrows,
                  num_letters=p.num_generators, names=p.generators)


@dataclass(frozen=True)
class LabelViolation:
    vertex: int
    label: int
    arrows: Tuple[int, ...]


def check_label_property(q: Quiver) -> Tuple[bool, List[LabelViolation]]:
    """Arrows ending at a common vertex must carry pairwise distinct labels."""
    violations = []
    for v, inc in enumerate(q.incoming):
        by_label: Dict[int, List[int]] = {}
        for i in inc:
            by_label.setdefault(q.arrows[i].label, []).append(i)
        for label, arrs in sorted(by_label.items()):
            if len(arrs) > 1:
                violations.append(LabelViolation(v, label, tuple(arrs)))
    return not violations, violations


def check_label_targets(q: Quiver) -> bool:
    """Dual form: arrows sharing a label end at pairwise distinct vertices."""
    seen = set()
    for a in q.arrows:
        if (a.label, a.target) in seen:
            return False
        seen.add((a.label, a.target))
    return True


def count_paths(q: Quiver, n: int) -> int:
    """1ᵀ Mⁿ 1 by repeated integer matrix-vector products."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    m = q.adjacency
    vec = [1] * len(q.vertices)
    for _ in range(n):
        vec = [sum(x * y for x, y in zip(row, vec)) for row in m]
    return sum(vec)


def iter_paths(q: Quiver, n: int, start: Optional[int] = None) -> Iterator[Path]:
    """Paths of length n in the canonical (underlying-word) order."""
    starts = range(len(q.vertices)) if start is None else (start,)
    for s in starts:
        stack = [(s, ())]
        while stack:
            v, arrs = stack.pop()
            if len(arrs) == n:
                yield Path(s, arrs)
                continue
            for i in reversed(q.outgoing[v]):
                stack.append((q.arrows[i].target, arrs + (i,)))


def enumerate_paths(q: Quiver, n: int, cap: int | None = None) -> List[Path]:
    cap = default_cap() if cap is None else cap
    out = []
    for path in iter_paths(q, n):
        out.append(path)
        if len(out) > cap:
            raise CapExceeded(f"paths of length {n}", cap)
    return out


def path_word(q: Quiver, path: Path) -> Word:
    """The normal word of length n + d read off a path by overlapping arrows."""
    if not path.arrows:
        return q.vertices[path.start]
    first = q.arrows[path.arrows[0]]
    if first.source != path.start:
        raise ValueError("path does not start at its recorded vertex")
    w = list(first.word)
    prev = first
    for i in path.arrows[1:]:
        a = q.arrows[i]
        if a.source != prev.target:
            raise ValueError("arrows are not composable")
        w.append(a.word[-1])
        prev = a
    return tuple(w)


def path_labels(q: Quiver, path: Path) -> Word:
    return tuple(q.arrows[i].label for i in path.arrows)


def path_from_word(q: Quiver, w: Word) -> Path:
    """Inverse of path_word; raises KeyError if w is not a path word."""
    d = q.d
    if len(w) < d:
        raise ValueError("word shorter than the vertex length")
    arrs = tuple(q.arrow_index[w[i:i + d + 1]] for i in range(len(w) - d))
    return Path(q.vertex_index[w[:d]], arrs)


# ---------------------------------------------------------------------------
# growth
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthClass:
    kind: str  # "FiniteDimensional" | "Polynomial" | "Exponential"
    degree: Optional[int] = None

    def __str__(self) -> str:
        return f"Polynomial({self.degree})" if self.kind == "Polynomial" else self.kind


FINITE = GrowthClass("FiniteDimensional")
EXPONENTIAL = GrowthClass("Exponential")


def _cyclic_components(q: Quiver):
    g = q.graph()
    comps = list(nx.strongly_connected_components(g))
    cyclic = {}
    for k, comp in enumerate(comps):
        edges = sum(1 for a in q.arrows if a.source in comp and a.target in comp)
        if edges:
            cyclic[k] = (comp, edges)
    return g, comps, cyclic


def growth_class(q: Quiver) -> GrowthClass:
    """Finite / polynomial / exponential growth from the cycle structure.

    A strongly connected component containing a cycle is a single simple
    cycle iff it has as many arrows as vertices; anything more means two
    distinct cycles through a common vertex, hence exponential growth.
    Otherwise the degree is the longest chain of cycles along a path.
    """
    g, comps, cyclic = _cyclic_components(q)
    if not cyclic:
        return FINITE
    if any(edges > len(comp) for comp, edges in cyclic.values()):
        return EXPONENTIAL
    cond = nx.condensation(g, scc=comps)
    best: Dict[int, int] = {}
    for c in reversed(list(nx.topological_sort(cond))):
        here = 1 if c in cyclic else 0
        best[c] = here + max((best[s] for s in cond.successors(c)), default=0)
    return GrowthClass("Polynomial", max(best.values()))


def _scc_period(q: Quiver, comp) -> int:
    # gcd of level differences along internal arrows, levels from a BFS tree
    root = min(comp)
    level = {root: 0}
    queue = [root]
    for v in queue:
        for i in q.outgoing[v]:
            t = q.arrows[i].target
            if t in comp and t not in level:
                level[t] = level[v] + 1
                queue.append(t)
    g = 0
    for a in q.arrows:
        if a.source in comp and a.target in comp:
            g = gcd(g, level[a.source] + 1 - level[a.target])
    return g


def cycle_period(q: Quiver) -> int:
    """lcm of the periods of all strongly connected components with cycles.

    Path counts restricted to a fixed residue class modulo this number are
    eventually smooth (quasi-polynomial or dominated by a single exponential).
    """
    _, _, cyclic = _cyclic_components(q)
    out = 1
    for comp, _ in cyclic.values():
        out = lcm(out, _scc_period(q, comp))
    return out


def vertices_reaching_cycles(q: Quiver) -> set:
    """Vertices from which some directed cycle is reachable."""
    g, comps, cyclic = _cyclic_components(q)
    on_cycle = set().union(*(comp for comp, _ in cyclic.values())) if cyclic else set()
    reach = set(on_cycle)
    for v in on_cycle:
        reach |= nx.ancestors(g, v)
    return reach


def longest_path_from(q: Quiver, v: int) -> Optional[int]:
    """Length of the longest path from v, or None if it is unbounded."""
    if v in vertices_reaching_cycles(q):
        return None
    g = q.graph()
    sub = g.subgraph(nx.descendants(g, v) | {v})
    order = list(nx.topological_sort(sub))
    depth = {u: 0 for u in order}
    for u in reversed(order):
        depth[u] = max((depth[t] + 1 for t in sub.successors(u)), default=0)
    return depth[v]


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(q: Quiver) -> str:
    lines = ["digraph Q {"]
    for v in q.vertices:
        lines.append(f"  {_dot_id(q.spell(v))};")
    for a in sorted(q.arrows, key=lambda a: a.word):
        src = _dot_id(q.spell(q.vertices[a.source]))
        tgt = _dot_id(q.spell(q.vertices[a.target]))
        lines.append(f"  {src} -> {tgt} [label={_dot_id(q.spell((a.label,)))}, "
                     f"tooltip={_dot_id(q.spell(a.word))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
