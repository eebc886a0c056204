"""Named fixture presentations and seeded random presentations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .language import count_normal_words
from .presentation import Presentation, load_presentation, normalize
from .quiver import Path, Quiver

FIXTURE_TEXT: Dict[str, str] = {
    "P0": "gens: x y;",
    "P1": "gens: x y; rels: yx;",
    "P2": "gens: x y; rels: xx;",
    "P3": "gens: x y; rels: xx xy yx;",
    "P4": "gens: x y; rels: xx xy yx yy;",
}


def fixture(name: str) -> Presentation:
    return normalize(load_presentation(FIXTURE_TEXT[name]))


def fixtures(names: Tuple[str, ...] = ("P0", "P1", "P2", "P3")) -> Dict[str, Presentation]:
    return {k: fixture(k) for k in names}


@dataclass(frozen=True)
class RandomSpec:
    max_generators: int = 4
    max_relation_length: int = 4
    max_relations: int = 6
    # reject presentations whose dim A_(d + budget_degree) exceeds this;
    # keeps every exact check desk-scale
    budget: int = 30000
    budget_degree: int = 16


LETTERS = "xyzw"


def random_presentation(rng: random.Random, spec: RandomSpec = RandomSpec()) -> Presentation:
    """One draw within the bounds of ``spec`` (normalized, not size-filtered)."""
    # bias toward several generators; one-letter algebras are nearly trivial
    g = rng.choice([k for k in range(1, spec.max_generators + 1) for _ in range(k)])
    nrels = rng.randint(0, spec.max_relations)
    rels = []
    for _ in range(nrels):
        # length-1 relations are rare but kept: they exercise generator deletion
        length = 1 if rng.random() < 0.05 else rng.randint(2, spec.max_relation_length)
        rels.append(tuple(rng.randrange(g) for _ in range(length)))
    return normalize(Presentation(tuple(LETTERS[:g]), tuple(rels)))


def within_budget(p: Presentation, spec: RandomSpec = RandomSpec()) -> bool:
    return count_normal_words(p.d + spec.budget_degree, p) <= spec.budget


def random_corpus(count: int = 200, seed: int = 0,
                  spec: RandomSpec = RandomSpec()) -> List[Presentation]:
    """``count`` seeded random presentations that fit the size budget."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = random_presentation(rng, spec)
        if within_budget(p, spec):
            out.append(p)
    return out


def random_word(rng: random.Random, num_letters: int, length: int) -> Tuple[int, ...]:
    return tuple(rng.randrange(num_letters) for _ in range(length))


def random_path(rng: random.Random, q: Quiver, max_length: int) -> Path:
    """A random walk from a random vertex; stops early at sinks."""
    v = rng.randrange(len(q.vertices))
    start = v
    arrows = []
    for _ in range(rng.randint(0, max_length)):
        out = q.outgoing[v]
        if not out:
            break
        i = rng.choice(out)
        arrows.append(i)
        v = q.arrows[i].target
    return Path(start, tuple(arrows))
