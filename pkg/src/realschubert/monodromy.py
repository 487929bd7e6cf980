"""Covering model over a caterpillar curve, monodromy words and their orbits."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .core_shapes import BOX, Partition, Rectangle, ShapeError, format_partition, partition, size
from .dual_equiv import DEChain, DualClass, enumerate_chains, esh, sh, straight_class

Kind = Literal["sh", "esh"]

PRESETS = ("standard_cor47", "standard_lem48", "adjacent_swap_first_two", "user_supplied")


@dataclass(frozen=True)
class Generator:
    kind: Kind
    index: int

    def __post_init__(self):
        if self.kind not in ("sh", "esh"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index must be positive, got {self.index}")

    def apply(self, chain: DEChain) -> DEChain:
        return sh(chain, self.index) if self.kind == "sh" else esh(chain, self.index)

    def __str__(self):
        return f"{self.kind.capitalize()}{self.index}"


def Sh(i: int) -> Generator:
    return Generator("sh", i)


def Esh(i: int) -> Generator:
    return Generator("esh", i)


@dataclass(frozen=True)
class MonodromyWord:
    """Generators listed in the order they are applied (first element acts first)."""

    generators: tuple[Generator, ...]
    # acting set: chains carry the box in front (after the natural reindexing) or in second place
    box_position: int = 1

    def apply(self, chain: DEChain) -> DEChain:
        for g in self.generators:
            chain = g.apply(chain)
        return chain

    def __str__(self):
        return " ".join(map(str, self.generators)) or "id"

    def to_json(self) -> dict:
        return {"generators": [str(g) for g in self.generators], "box_position": self.box_position}

    @classmethod
    def parse(cls, text: str, box_position: int = 2) -> "MonodromyWord":
        """Parse words such as ``"Sh2 Esh3 Esh2"`` (commas also accepted)."""
        gens = []
        for tok in re.split(r"[\s,]+", text.strip()):
            if not tok:
                continue
            m = re.fullmatch(r"(?i)(e?sh)_?(\d+)", tok)
            if not m:
                raise ValueError(f"cannot parse generator {tok!r}")
            gens.append(Generator(m.group(1).lower(), int(m.group(2))))
        return cls(tuple(gens), box_position)


def omega_word(preset: str, r: int, user: str | Sequence[Generator] | None = None) -> MonodromyWord:
    """The monodromy word for a problem with ``r`` types.

    ``standard_cor47`` acts on chains with the box first; the other presets act
    on chains with the box second.
    """
    if preset == "standard_cor47":
        gens = [Sh(i) for i in range(1, r)] + [Esh(i) for i in range(r - 1, 0, -1)]
        return MonodromyWord(tuple(gens), 1)
    if preset == "standard_lem48":
        gens = [Sh(i) for i in range(2, r)] + [Esh(i) for i in range(r - 1, 1, -1)]
        return MonodromyWord(tuple(gens), 2)
    if preset == "adjacent_swap_first_two":
        if r < 2:
            raise ValueError("adjacent swap needs at least two types")
        middle = [Sh(i) for i in range(3, r)] + [Esh(i) for i in range(r - 1, 2, -1)]
        return MonodromyWord(tuple([Esh(2)] + middle + [Sh(2)]), 2)
    if preset == "user_supplied":
        if user is None:
            raise ValueError("user_supplied preset needs a word")
        if isinstance(user, str):
            return MonodromyWord.parse(user)
        return MonodromyWord(tuple(user), 2)
    raise ValueError(f"unknown preset {preset!r}; expected one of {PRESETS}")


def apply_word(word: MonodromyWord, chain: DEChain) -> DEChain:
    return word.apply(chain)


def cycles_of(perm: Sequence[int]) -> list[list[int]]:
    """Cycle decomposition of a permutation of ``range(len(perm))``, each cycle starting at its least element."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc, x = [], start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def sign_of(perm: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd."""
    return (len(perm) - len(cycles_of(perm))) % 2


@dataclass(frozen=True)
class OrbitReport:
    word: MonodromyWord
    set_size: int
    permutation: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(tuple(c) for c in cycles_of(self.permutation)))

    @property
    def orbit_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.orbits)

    @property
    def eta(self) -> int:
        return len(self.orbits)

    @property
    def sign(self) -> int:
        return (self.set_size - len(self.orbits)) % 2

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.permutation))

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "set_size": self.set_size,
            "orbits": [list(c) for c in self.orbits],
            "orbit_sizes": self.orbit_sizes,
            "eta": self.eta,
            "sign": self.sign,
        }


def orbits(word: MonodromyWord, chain_set: Sequence[DEChain]) -> OrbitReport:
    """Apply ``word`` to every chain and decompose the resulting permutation."""
    index = {c: i for i, c in enumerate(chain_set)}
    perm = []
    for c in chain_set:
        image = word.apply(c)
        if image not in index:
            raise RuntimeError(f"word {word} maps a chain outside the set: {image}")
        perm.append(index[image])
    if len(set(perm)) != len(perm):
        raise RuntimeError(f"word {word} is not a permutation of the set")
    return OrbitReport(word, len(chain_set), tuple(perm))


def _box_class() -> DualClass:
    return straight_class(BOX)


def iota(chain: DEChain) -> DEChain:
    """Reindex a chain starting at the single box as one starting at the empty partition."""
    if chain.inner != BOX:
        raise ShapeError("iota expects a chain with inner shape (1)")
    return DEChain((_box_class(),) + chain.classes, (), chain.outer)


def iota_inverse(chain: DEChain) -> DEChain:
    if chain.inner != () or chain.classes[0].outer != BOX:
        raise ShapeError("iota_inverse expects a chain whose first class is the single box")
    return DEChain(chain.classes[1:], BOX, chain.outer)


def insert_box(types: Sequence[Partition], position: int) -> tuple[Partition, ...]:
    """Insert the single box so that it becomes entry ``position`` (1-based)."""
    t = list(types)
    t.insert(position - 1, BOX)
    return tuple(t)


def _check_types(types: Sequence[Partition], rect: Rectangle):
    if sum(size(t) for t in types) != rect.area - 1:
        raise ShapeError(f"types have total size {sum(size(t) for t in types)}, need {rect.area - 1}")
    for t in types:
        if not rect.fits(t):
            raise ShapeError(f"type {t} does not fit in {rect}")


def acting_set(types: Sequence[Partition], rect: Rectangle, box_position: int) -> list[DEChain]:
    """The chains on which a word with the given box position acts."""
    return enumerate_chains((), rect.full, insert_box(types, box_position))


def word_orbits(types: Sequence[Partition], rect: Rectangle, word: MonodromyWord) -> OrbitReport:
    """Orbits of ``word`` on the set of chains it acts on.

    For the box-first word the set is indexed through :func:`iota`, so orbit
    indices refer to the chains starting at the single box.
    """
    types = tuple(partition(t) for t in types)
    _check_types(types, rect)
    if word.box_position == 1:
        base = enumerate_chains(BOX, rect.full, types)
        lifted = [iota(c) for c in base]
        rep = orbits(word, lifted)
        return rep
    return orbits(word, acting_set(types, rect, word.box_position))


def parse_ordering(text: str, r: int) -> tuple[int, ...]:
    """Parse a circular ordering such as ``"1324"`` or ``"1,3,2,4"`` into 0-based indices."""
    text = text.strip()
    digits = [int(x) for x in (text.split(",") if "," in text else list(text))]
    if sorted(digits) != list(range(1, r + 1)):
        raise ValueError(f"ordering {text!r} is not a permutation of 1..{r}")
    return tuple(d - 1 for d in digits)


def reorder(types: Sequence[Partition], ordering: str | None) -> tuple[Partition, ...]:
    if not ordering:
        return tuple(types)
    return tuple(types[i] for i in parse_ordering(ordering, len(types)))


def component_count(
    types: Sequence[Partition],
    rect: Rectangle,
    preset: str = "standard_cor47",
    ordering: str | None = None,
    user: str | None = None,
) -> int:
    """The number of real components for the types placed in the given circular ordering."""
    ordered = reorder([partition(t) for t in types], ordering)
    word = omega_word(preset, len(ordered), user)
    return word_orbits(ordered, rect, word).eta


@dataclass(frozen=True)
class Arc:
    kind: Kind
    index: int
    source_fiber: int
    target_fiber: int
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class CoveringModel:
    """Fibers over the nodes of a caterpillar curve and the arcs joining them.

    ``fibers[i]`` (``i = 1..r``) is the chain set with the box in position
    ``i``; it is the fiber over the node between the ``(i-1)``-th and ``i``-th
    marked points. The through-arc at ``p_i`` is ``esh_i`` and the opposite arc
    is ``sh_i``, both from ``fibers[i]`` to ``fibers[i + 1]``.
    """

    types: tuple[Partition, ...]
    rect: Rectangle
    fibers: dict[int, list[DEChain]]
    arcs: tuple[Arc, ...]

    @property
    def fiber_size(self) -> int:
        return len(self.fibers[1]) if self.fibers else 0

    @property
    def is_empty(self) -> bool:
        return self.fiber_size == 0

    def iota_base(self) -> list[DEChain]:
        """The chains starting at the single box, in the order matching ``fibers[1]``."""
        return [iota_inverse(c) for c in self.fibers[1]]

    def to_json(self) -> dict:
        return {
            "types": [list(t) for t in self.types],
            "rect": self.rect.to_json(),
            "fibers": {str(i): [c.to_json() for c in f] for i, f in sorted(self.fibers.items())},
            "arcs": [
                {"label": f"{a.kind}_{a.index}", "from": a.source_fiber, "to": a.target_fiber,
                 "map": list(a.mapping)}
                for a in self.arcs
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph covering {", "  rankdir=LR;"]
        for i, fib in sorted(self.fibers.items()):
            for k in range(len(fib)):
                lines.append(f'  "f{i}_{k}" [label="{i}:{k}"];')
        for a in self.arcs:
            for k, m in enumerate(a.mapping):
                lines.append(f'  "f{a.source_fiber}_{k}" -> "f{a.target_fiber}_{m}" [label="{a.kind}_{a.index}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def build_covering(types: Sequence[Partition], rect: Rectangle) -> CoveringModel:
    """All fibers and arc bijections of the covering over a caterpillar curve."""
    types = tuple(partition(t) for t in types)
    _check_types(types, rect)
    r = len(types)
    fibers = {i: acting_set(types, rect, i) for i in range(1, r + 1)}
    if not fibers[1]:
        return CoveringModel(types, rect, {i: [] for i in fibers}, ())
    sizes = {len(f) for f in fibers.values()}
    if len(sizes) != 1:
        raise RuntimeError(f"fibers have different sizes: {sizes}")
    arcs = []
    for i in range(1, r):
        target = {c: k for k, c in enumerate(fibers[i + 1])}
        for kind, op in (("esh", esh), ("sh", sh)):
            mapping = tuple(target[op(c, i)] for c in fibers[i])
            if len(set(mapping)) != len(mapping):
                raise RuntimeError(f"{kind}_{i} is not a bijection")
            arcs.append(Arc(kind, i, i, i + 1, mapping))
    return CoveringModel(types, rect, fibers, tuple(arcs))


def describe_types(types: Sequence[Partition]) -> str:
    return ";".join(format_partition(t) for t in types)
