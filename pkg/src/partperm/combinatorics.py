"""Integer partitions and permutations of finite sets of positive integers.

Composition convention, used everywhere in the package: ``p * q`` applies
``q`` first, so ``(p * q)(x) == p(q(x))``.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import MissingPartOne


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((2, 1, 1)).weight, Partition((2, 1, 1)).length
    (4, 3)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma format ``"3,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        return cls(parts)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, part: int) -> int:
        return sum(1 for p in self if p == part)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def sort_key(self) -> tuple:
        """Order by weight, then reverse lexicographically within a weight."""
        return (self.weight, tuple(-p for p in self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def z_value(lam: Sequence[int]) -> int:
    """Centralizer order: product of the parts times product of multiplicity factorials."""
    z = math.prod(lam)
    for m in Counter(lam).values():
        z *= math.factorial(m)
    return z


def part_transform(lam: Sequence[int], kind: str) -> Partition:
    """Apply one of ``add_one_each``, ``union_one`` or ``remove_a_one`` to a partition."""
    lam = Partition(lam)
    if kind == "add_one_each":
        return Partition(p + 1 for p in lam)
    if kind == "union_one":
        return Partition(lam + (1,))
    if kind == "remove_a_one":
        if not lam or lam[-1] != 1:
            raise MissingPartOne(f"{tuple(lam)} has no part equal to 1")
        return Partition(lam[:-1])
    raise ValueError(f"unknown partition transform {kind!r}")


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse lexicographic order.

    >>> [tuple(p) for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if k < 0:
        raise ValueError("k must be nonnegative")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(k, k)]


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of weight at most ``n``, the empty one first."""
    return [lam for k in range(n + 1) for lam in partitions_of(k)]


class Permutation:
    """A bijection of an explicit finite ground set of positive integers.

    The ground set may be larger than the support; two permutations are equal
    only when both ground sets and images agree.
    """

    __slots__ = ("ground", "images", "_map", "_hash")

    def __init__(self, mapping: Mapping[int, int]):
        ground = tuple(sorted(mapping))
        images = tuple(mapping[x] for x in ground)
        if sorted(images) != list(ground):
            raise ValueError(f"not a bijection of its ground set: {dict(mapping)}")
        if ground and ground[0] < 1:
            raise ValueError("ground set must consist of positive integers")
        self._set(ground, images)

    def _set(self, ground: tuple[int, ...], images: tuple[int, ...]) -> None:
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_map", dict(zip(ground, images)))
        object.__setattr__(self, "_hash", hash((ground, images)))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _trusted(cls, ground: tuple[int, ...], images: tuple[int, ...]) -> "Permutation":
        obj = cls.__new__(cls)
        obj._set(ground, images)
        return obj

    @classmethod
    def identity(cls, ground: Iterable[int] = ()) -> "Permutation":
        ground = tuple(sorted(set(ground)))
        return cls._trusted(ground, ground)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], ground: Iterable[int] | None = None) -> "Permutation":
        """Build from cycle notation; ``ground`` defaults to the points named in the cycles.

        >>> Permutation.from_cycles([(1, 3, 2)]).images
        (3, 1, 2)
        """
        mapping: dict[int, int] = {}
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                if a in mapping:
                    raise ValueError(f"point {a} appears twice in cycles")
                mapping[a] = b
        if ground is not None:
            ground = set(ground)
            if not set(mapping) <= ground:
                raise ValueError("cycles move points outside the ground set")
            for x in ground:
                mapping.setdefault(x, x)
        return cls(mapping)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """One-line notation on {1..len(images)}."""
        return cls(dict(enumerate(images, start=1)))

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    def as_dict(self) -> dict[int, int]:
        return dict(self._map)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(x for x, y in zip(self.ground, self.images) if x != y)

    def is_identity(self) -> bool:
        return self.ground == self.images

    def extend(self, ground: Iterable[int]) -> "Permutation":
        """The same permutation seen on a larger ground set (new points fixed)."""
        new = tuple(sorted(set(ground) | set(self.ground)))
        return Permutation._trusted(new, tuple(self._map.get(x, x) for x in new))

    def restrict(self, ground: Iterable[int]) -> "Permutation":
        """Restriction to a stable subset of the ground set."""
        new = tuple(sorted(set(ground)))
        images = tuple(self._map[x] for x in new)
        if set(images) != set(new):
            raise ValueError("subset is not stable under the permutation")
        return Permutation._trusted(new, images)

    def inverse(self) -> "Permutation":
        inv = {y: x for x, y in self._map.items()}
        return Permutation._trusted(self.ground, tuple(inv[x] for x in self.ground))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def cycles(self, with_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles, each starting at its smallest point, ordered by that point."""
        seen: set[int] = set()
        out = []
        for x in self.ground:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self._map[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self._map[y]
            if len(cyc) > 1 or with_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition.from_parts(len(c) for c in self.cycles(with_fixed=True))

    def num_cycles(self) -> int:
        return len(self.cycles(with_fixed=True))

    def sort_key(self) -> tuple:
        return (self.ground, self.images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.ground == other.ground and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self} on {set(self.ground) or '{}'})"

    def __reduce__(self):
        return (Permutation, (self._map,))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``x -> p(q(x))`` on the union of both ground sets."""
    if p.ground == q.ground:
        ground = p.ground
    else:
        ground = tuple(sorted(set(p.ground) | set(q.ground)))
    pm, qm = p._map, q._map
    images = []
    for x in ground:
        y = qm.get(x, x)
        images.append(pm.get(y, y))
    return Permutation._trusted(ground, tuple(images))


def cycle_type(p: Permutation) -> Partition:
    return p.cycle_type()


def num_cycles(p: Permutation) -> int:
    """Number of cycles, fixed points of the ground set included."""
    return p.num_cycles()


def all_permutations(ground: Iterable[int]) -> list[Permutation]:
    """Every permutation of ``ground``, in lexicographic order of images."""
    ground = tuple(sorted(set(ground)))
    return [Permutation._trusted(ground, imgs) for imgs in itertools.permutations(ground)]


def representative(lam: Sequence[int], start: int = 1) -> Permutation:
    """Type-``lam`` permutation of ``{start, ..., start+|lam|-1}`` with cycles on consecutive blocks.

    >>> str(representative((2, 1)))
    '(1 2)'
    """
    cycles = []
    nxt = start
    for part in lam:
        cycles.append(tuple(range(nxt, nxt + part)))
        nxt += part
    return Permutation.from_cycles(cycles, ground=range(start, nxt))
