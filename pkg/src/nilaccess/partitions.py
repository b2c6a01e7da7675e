"""Integer partitions: parsing, printing, enumeration and the dominance order."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator

__all__ = ["Partition", "PartitionError", "partitions_of", "dominance_le"]


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive parts.

    The constructor sorts its input and drops zero parts, so
    ``Partition([1, 3, 0])`` equals ``Partition([3, 1])``.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        ps = []
        for p in parts:
            if int(p) != p:
                raise PartitionError(f"non-integer part {p!r}")
            p = int(p)
            if p < 0:
                raise PartitionError(f"negative part {p}")
            if p:
                ps.append(p)
        object.__setattr__(self, "parts", tuple(sorted(ps, reverse=True)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __lt__(self, other: "Partition") -> bool:
        # lexicographic, only for deterministic sorting; not the dominance order
        return self.parts < other.parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def partial_sums(self) -> list[int]:
        return list(accumulate(self.parts))

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > k) for k in range(self.parts[0]))

    def __str__(self) -> str:
        chunks = []
        for value, count in _runs(self.parts):
            chunks.append(f"{value}^{count}" if count > 1 else str(value))
        return "[" + ",".join(chunks) + "]"

    def expanded(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accepts ``[6,2]``, ``6,2``, ``4,2^2`` and ``[3^2,1^2]``."""
        s = text.strip()
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1]
        s = s.replace(" ", "")
        if not s:
            return cls(())
        parts = []
        for chunk in s.split(","):
            m = _CHUNK.fullmatch(chunk)
            if not m:
                raise PartitionError(f"cannot parse partition {text!r}")
            value = int(m.group(1))
            count = int(m.group(2)) if m.group(2) else 1
            if value <= 0 or count <= 0:
                raise PartitionError(f"parts and multiplicities must be positive in {text!r}")
            parts.extend([value] * count)
        return cls(parts)


_CHUNK = re.compile(r"(\d+)(?:\^(\d+))?")


def _runs(parts):
    out = []
    for p in parts:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return [(v, c) for v, c in out]


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def dominance_le(smaller: Partition, larger: Partition) -> bool:
    """True iff ``smaller <= larger`` in the dominance order."""
    if smaller.size != larger.size:
        raise PartitionError(
            f"dominance needs equal sizes, got {smaller.size} and {larger.size}"
        )
    s_acc = l_acc = 0
    for s, l in zip_longest(smaller.parts, larger.parts, fillvalue=0):
        s_acc += s
        l_acc += l
        if s_acc > l_acc:
            return False
    return True
