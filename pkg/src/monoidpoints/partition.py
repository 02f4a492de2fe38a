"""Set partitions, union-find, and partition enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; return True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def partition(self) -> SetPartition:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return SetPartition.from_blocks(groups.values())


@dataclass(frozen=True)
class SetPartition:
    """A partition of a finite set of integers.

    Blocks are sorted internally and ordered by their least element, so two
    equal partitions always have identical ``blocks``.
    """

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> SetPartition:
        normalized = sorted(tuple(sorted(b)) for b in blocks)
        normalized = [b for b in normalized if b]
        seen: set[int] = set()
        for b in normalized:
            if seen.intersection(b):
                raise ValueError("blocks overlap")
            seen.update(b)
        return cls(tuple(normalized))

    @classmethod
    def from_labels(cls, labels: Iterable[int], carrier: Iterable[int] | None = None) -> SetPartition:
        labels = list(labels)
        carrier = range(len(labels)) if carrier is None else list(carrier)
        groups: dict[int, list[int]] = {}
        for x, lab in zip(carrier, labels):
            groups.setdefault(lab, []).append(x)
        return cls.from_blocks(groups.values())

    @classmethod
    def discrete(cls, carrier: int | Iterable[int]) -> SetPartition:
        items = range(carrier) if isinstance(carrier, int) else carrier
        return cls.from_blocks([x] for x in items)

    @classmethod
    def total(cls, carrier: int | Iterable[int]) -> SetPartition:
        items = list(range(carrier) if isinstance(carrier, int) else carrier)
        return cls.from_blocks([items] if items else [])

    @cached_property
    def labels(self) -> dict[int, int]:
        """Map each element to the index of its block."""
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    @property
    def carrier(self) -> tuple[int, ...]:
        return tuple(sorted(self.labels))

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self.labels[x]]

    def same(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def refines(self, other: SetPartition) -> bool:
        return all(len({other.labels[x] for x in b}) == 1 for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)


BELL = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all restricted growth strings of length n in lexicographic order."""
    if n == 0:
        yield ()
        return
    s = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(s)
            return
        for v in range(top + 2):
            s[i] = v
            yield from rec(i + 1, max(top, v))

    s[0] = 0
    yield from rec(1, 0)


def set_partitions(n: int) -> Iterator[SetPartition]:
    for rgs in restricted_growth_strings(n):
        yield SetPartition.from_labels(rgs)
