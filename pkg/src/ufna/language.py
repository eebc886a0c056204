"""The normal-word language of a monomial algebra, by brute force.

A word is normal when no relation occurs in it as a contiguous factor; the
normal words of length n are a basis of A_n. Everything in this module is
deliberately naive (direct factor scans) because the rest of the package is
checked against it.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .presentation import Presentation, Word

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    """An enumeration would produce more elements than the configured cap."""

    def __init__(self, what: str, cap: int):
        self.cap = cap
        super().__init__(f"{what} exceeds the resource cap of {cap} elements")


def default_cap() -> int:
    env = os.environ.get("UFNA_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class DegreeBasis:
    degree: int
    words: Tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    @property
    def dim(self) -> int:
        return len(self.words)


def is_normal(w: Word, p: Presentation) -> bool:
    for r in p.relations:
        n = len(r)
        for i in range(len(w) - n + 1):
            if w[i:i + n] == r:
                return False
    return True


def _ends_with_relation(w: Word, p: Presentation) -> bool:
    # only factors ending at the last letter are new when w[:-1] is normal
    return any(len(r) <= len(w) and w[len(w) - len(r):] == r for r in p.relations)


def _extend(prefix: Word, m: int, p: Presentation) -> Iterator[Word]:
    """All u of length m with prefix + u normal, in lexicographic order.

    ``prefix`` is assumed normal.
    """
    g = p.num_generators
    stack: List[Tuple[Word, int]] = [(prefix, 0)]
    # explicit DFS; children pushed in reverse so they pop in order
    while stack:
        w, k = stack.pop()
        if k == m:
            yield w[len(prefix):]
            continue
        for x in range(g - 1, -1, -1):
            wx = w + (x,)
            if not _ends_with_relation(wx, p):
                stack.append((wx, k + 1))


def normal_words(n: int, p: Presentation, cap: int | None = None) -> DegreeBasis:
    if n < 0:
        raise ValueError("degree must be non-negative")
    cap = default_cap() if cap is None else cap
    words = []
    for u in _extend((), n, p):
        words.append(u)
        if len(words) > cap:
            raise CapExceeded(f"basis of A_{n}", cap)
    return DegreeBasis(n, tuple(words))


def right_extensions(w: Word, m: int, p: Presentation,
                     cap: int | None = None) -> List[Word]:
    """All words u of length m such that w·u is normal."""
    if m < 0:
        raise ValueError("extension length must be non-negative")
    if not is_normal(w, p):
        raise ValueError("right_extensions needs a normal word")
    cap = default_cap() if cap is None else cap
    out = []
    for u in _extend(tuple(w), m, p):
        out.append(u)
        if len(out) > cap:
            raise CapExceeded(f"right extensions of length {m}", cap)
    return out


def has_right_extension(w: Word, m: int, p: Presentation) -> bool:
    """Whether some word of length m extends w to a normal word."""
    return next(_extend(tuple(w), m, p), None) is not None


def count_normal_words(n: int, p: Presentation) -> int:
    """dim A_n without materializing the basis.

    Dynamic programming over the last ``d`` letters (everything a future
    relation occurrence can see), still using the direct suffix scan. This is
    the counting oracle for degrees where enumeration is out of reach.
    """
    keep = p.d
    states = Counter({(): 1})
    for _ in range(n):
        nxt: Counter = Counter()
        for s, c in states.items():
            for x in range(p.num_generators):
                sx = s + (x,)
                if not _ends_with_relation(sx, p):
                    nxt[sx[max(len(sx) - keep, 0):] if keep else ()] += c
        states = nxt
    return sum(states.values())


def dims(N: int, p: Presentation, cap: int | None = None) -> List[int]:
    """[dim A_0, ..., dim A_N] by enumeration."""
    return [len(normal_words(n, p, cap)) for n in range(N + 1)]
