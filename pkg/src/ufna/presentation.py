"""Finitely presented monomial algebras k<letters>/(forbidden words).

Words are tuples of generator indices, never strings. Two input forms are
understood: the canonical JSON document

    {"generators": ["x", "y"], "relations": [["y", "x"]]}

and a compact form for single-character generators, ``gens: x y; rels: yx;``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

Word = Tuple[int, ...]


class PresentationError(ValueError):
    """Malformed or inconsistent presentation input."""

    def __init__(self, message: str, position: Optional[int] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.position = position
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif position is not None:
            where = f" (at offset {position})"
        super().__init__(message + where)


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relations: Tuple[Word, ...] = ()
    normalized: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator name")
        g = len(self.generators)
        for r in self.relations:
            if any(not 0 <= i < g for i in r):
                raise PresentationError(f"relation {r!r} has an index out of range")

    @property
    def d(self) -> int:
        """Vertex word length of the overlap graph: max relation length - 1."""
        if not self.relations:
            return 0
        return max(len(r) for r in self.relations) - 1

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def collapsed(self) -> bool:
        """Every generator was eliminated; the algebra is just k."""
        return not self.generators

    def word(self, names: Sequence[str] | str) -> Word:
        """Translate generator names (or a string of 1-char names) to a Word."""
        index = {name: i for i, name in enumerate(self.generators)}
        try:
            return tuple(index[n] for n in names)
        except KeyError as exc:
            raise PresentationError(f"unknown generator {exc.args[0]!r}") from None

    def spell(self, w: Iterable[int]) -> str:
        names = [self.generators[i] for i in w]
        if not names:
            return "ε"
        if all(len(self.generators[i]) == 1 for i in range(len(self.generators))):
            return "".join(names)
        return ".".join(names)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [[self.generators[i] for i in r] for r in self.relations],
        }


def parse_presentation(text: str) -> Presentation:
    """Parse the JSON input document. The result is not normalized."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"syntax error: {exc.msg}", position=exc.pos,
                                line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise PresentationError("top level must be an object")
    gens = doc.get("generators")
    rels = doc.get("relations", [])
    if not isinstance(gens, list) or not all(isinstance(g, str) and g for g in gens):
        raise PresentationError('"generators" must be a list of non-empty names')
    if not gens:
        raise PresentationError("empty generator list")
    if len(set(gens)) != len(gens):
        dup = next(g for g in gens if gens.count(g) > 1)
        raise PresentationError(f"duplicate generator {dup!r}")
    if not isinstance(rels, list):
        raise PresentationError('"relations" must be a list of words')
    index = {g: i for i, g in enumerate(gens)}
    words = []
    for k, rel in enumerate(rels):
        if not isinstance(rel, list) or not all(isinstance(x, str) for x in rel):
            raise PresentationError(f"relation #{k} must be a list of generator names")
        if not rel:
            raise PresentationError(f"relation #{k} is the empty word")
        for x in rel:
            if x not in index:
                raise PresentationError(f'unknown generator "{x}" in relation #{k}')
        words.append(tuple(index[x] for x in rel))
    return Presentation(tuple(gens), tuple(words))


_COMPACT = re.compile(r"\s*(gens|rels)\s*:([^;]*);?", re.S)


def parse_compact(text: str) -> Presentation:
    """Parse ``gens: x y; rels: yx xx;`` into the JSON model."""
    pos = 0
    sections = {}
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _COMPACT.match(stripped, pos)
        if not m:
            raise PresentationError("syntax error: expected 'gens:' or 'rels:'", position=pos)
        key = m.group(1)
        if key in sections:
            raise PresentationError(f"repeated section {key!r}", position=m.start(1))
        sections[key] = (m.group(2).split(), m.start(2))
        pos = m.end()
    if "gens" not in sections:
        raise PresentationError("missing 'gens:' section")
    gens, gpos = sections["gens"]
    for g in gens:
        if len(g) != 1:
            raise PresentationError(f"compact form needs 1-character generators, got {g!r}",
                                    position=gpos)
    rels, _ = sections.get("rels", ([], 0))
    doc = {"generators": gens, "relations": [list(r) for r in rels]}
    return parse_presentation(json.dumps(doc))


def load_presentation(text: str) -> Presentation:
    """Dispatch on input form: JSON if it starts with '{', else compact."""
    if text.lstrip().startswith("{"):
        return parse_presentation(text)
    return parse_compact(text)


def _is_factor(small: Word, big: Word) -> bool:
    n = len(small)
    return any(big[i:i + n] == small for i in range(len(big) - n + 1))


def normalize(p: Presentation) -> Presentation:
    """Reduce the relations to the minimal obstruction antichain.

    Length-1 relations delete their generator along with every relation that
    mentions it; remaining generators are re-indexed in document order. If
    every generator goes, the result has ``collapsed`` set (A = k).
    """
    rels = set(p.relations)
    dead = {r[0] for r in rels if len(r) == 1}
    keep = [i for i in range(len(p.generators)) if i not in dead]
    remap = {old: new for new, old in enumerate(keep)}
    rels = {tuple(remap[i] for i in r) for r in rels if not dead.intersection(r)}
    minimal = [r for r in rels
               if not any(s != r and _is_factor(s, r) for s in rels)]
    minimal.sort(key=lambda r: (len(r), r))
    return Presentation(tuple(p.generators[i] for i in keep), tuple(minimal),
                        normalized=True)
