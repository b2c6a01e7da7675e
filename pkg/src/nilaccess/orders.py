"""Dominance and accessibility orders on nilpotent orbits.

For gl/sl the accessibility order coincides with dominance. For sp and o it
is generated by the four realisable moves (with move 1 in its generalised
form, and phantom zero parts allowed where noted); the direct move of type 5
and moves into distinguished orbits are never realisable.
"""

from __future__ import annotations

import enum
import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebras import (
    O,
    SP,
    AlgebraKind,
    InvalidPartitionError,
    KindError,
    enumerate_partitions,
    is_distinguished,
    is_valid_partition,
)
from .partitions import Partition, PartitionError, dominance_le

__all__ = [
    "MoveKind",
    "OneAccess",
    "Obstruction",
    "AccessReport",
    "DOMINANCE",
    "ACCESSIBILITY",
    "move_successors",
    "reachable_set",
    "accessible",
    "find_chain",
    "is_direct_type5",
    "one_accessible_status",
    "compare",
    "hasse_diagram",
    "diagram_json",
]

DOMINANCE = "dominance"
ACCESSIBILITY = "accessibility"


@dataclass(frozen=True)
class MoveKind:
    """A move instance: ``tag`` in M1..M4 and the parts it replaced."""

    tag: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.tag}({','.join(map(str, self.params))})"


class OneAccess(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class Obstruction(enum.Enum):
    NOT_DOMINATED = "NotDominated"
    DISTINGUISHED_TARGET = "DistinguishedTarget"
    DIRECT_TYPE5 = "DirectType5"
    NO_MOVE_PATH = "NoMovePath"


@dataclass(frozen=True)
class AccessReport:
    kind: AlgebraKind
    source: Partition
    target: Partition
    dominated: bool
    accessible: bool
    one_accessible: OneAccess
    one_accessible_reason: str
    obstruction: Optional[Obstruction] = None
    witness_chain: Optional[tuple[tuple[Partition, MoveKind], ...]] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.tag,
            "N": self.kind.N,
            "source": str(self.source),
            "target": str(self.target),
            "dominated": self.dominated,
            "accessible": self.accessible,
            "one_accessible": self.one_accessible.value,
            "one_accessible_reason": self.one_accessible_reason,
            "obstruction": self.obstruction.value if self.obstruction else None,
            "chain": (
                [[str(p), str(m)] for p, m in self.witness_chain]
                if self.witness_chain is not None
                else None
            ),
        }

    def to_text(self) -> str:
        yn = lambda b: "yes" if b else "no"
        lines = [
            f"algebra: {self.kind}",
            f"source: {self.source}",
            f"target: {self.target}",
            f"dominated: {yn(self.dominated)}",
            f"accessible: {yn(self.accessible)}",
            f"1-accessible: {self.one_accessible.value} ({self.one_accessible_reason})",
            f"obstruction: {self.obstruction.value if self.obstruction else 'none'}",
        ]
        if self.witness_chain:
            steps = [str(self.source)] + [f"-{m}-> {p}" for p, m in self.witness_chain]
            lines.append("chain: " + " ".join(steps))
        return "\n".join(lines)


def _check_pair(kind: AlgebraKind, p1: Partition, p2: Partition) -> None:
    if p1.size != p2.size:
        raise PartitionError(f"sizes differ: {p1} vs {p2}")
    for p in (p1, p2):
        if not is_valid_partition(kind, p):
            raise InvalidPartitionError(f"{p} does not label a nilpotent orbit of {kind}")


def _replace(counts: Counter, remove: list[int], add: list[int]) -> Optional[Partition]:
    c = counts.copy()
    for r in remove:
        if r == 0:
            continue
        if c[r] <= 0:
            return None
        c[r] -= 1
    for a in add:
        if a < 0:
            return None
        c[a] += 1
    return Partition(c.elements())


def _raw_moves(kind: AlgebraKind, pi: Partition):
    """Yield (MoveKind, candidate) before validity and dominance filtering."""
    counts = pi.multiplicities()
    distinct = sorted(counts, reverse=True)
    pairs = [p for p in distinct if counts[p] >= 2]
    sp = kind.tag == SP

    def avail(*parts):
        need = Counter(p for p in parts if p)
        return all(counts[p] >= k for p, k in need.items())

    # generalised move 1
    parity = 0 if sp else 1
    lows = distinct + ([0] if sp else [])
    for p in distinct:
        if p % 2 != parity:
            continue
        for q in lows:
            if q >= p or q % 2 != parity or (not sp and q < 1):
                continue
            if avail(p, q):
                h = (p + q) // 2
                yield MoveKind("M1", (p, q)), _replace(counts, [p, q], [h, h])

    # move 2: a single large part feeds a pair (possibly a phantom pair)
    for big in distinct:
        if (sp and big % 2) or (not sp and big % 2 == 0):
            continue
        if big < 2:
            continue
        for m in pairs + [0]:
            if avail(big, m, m):
                yield MoveKind("M2", (big, m)), _replace(counts, [big, m, m], [big - 2, m + 1, m + 1])

    # move 3: a pair feeds a single part of the right parity
    for n in pairs:
        singles = [q for q in distinct if q % 2 == (0 if sp else 1)]
        if sp:
            singles = singles + [0]
        for q in singles:
            if avail(n, n, q):
                yield MoveKind("M3", (n, q)), _replace(counts, [n, n, q], [n - 1, n - 1, q + 2])

    # move 4: a pair feeds another pair
    for n in pairs:
        for m in pairs + [0]:
            if m < n and avail(n, n, m, m):
                yield MoveKind("M4", (n, m)), _replace(counts, [n, n, m, m], [n - 1, n - 1, m + 1, m + 1])


@lru_cache(maxsize=None)
def _successors(kind: AlgebraKind, pi: Partition) -> tuple[tuple[Partition, MoveKind], ...]:
    found: dict[Partition, MoveKind] = {}
    for move, cand in _raw_moves(kind, pi):
        if cand is None or cand == pi or cand in found:
            continue
        if not is_valid_partition(kind, cand) or not dominance_le(cand, pi):
            continue
        found[cand] = move
    return tuple(sorted(found.items(), key=lambda kv: kv[0], reverse=True))


def move_successors(kind: AlgebraKind, pi: Partition) -> list[tuple[Partition, MoveKind]]:
    """One-move successors, largest partition first."""
    if not kind.has_form:
        raise KindError("move systems are defined for sp and o only")
    if not is_valid_partition(kind, pi):
        raise InvalidPartitionError(f"{pi} does not label a nilpotent orbit of {kind}")
    return list(_successors(kind, pi))


@lru_cache(maxsize=None)
def _bfs(kind: AlgebraKind, pi: Partition) -> dict:
    parent: dict[Partition, Optional[tuple[Partition, MoveKind]]] = {pi: None}
    queue = deque([pi])
    while queue:
        cur = queue.popleft()
        for nxt, move in _successors(kind, cur):
            if nxt not in parent:
                parent[nxt] = (cur, move)
                queue.append(nxt)
    return parent


def reachable_set(kind: AlgebraKind, pi: Partition) -> frozenset:
    """All partitions accessible from ``pi`` (including itself)."""
    if not is_valid_partition(kind, pi):
        raise InvalidPartitionError(f"{pi} does not label a nilpotent orbit of {kind}")
    if kind.is_linear:
        return frozenset(p for p in enumerate_partitions(kind) if dominance_le(p, pi))
    return frozenset(_bfs(kind, pi))


def accessible(kind: AlgebraKind, p1: Partition, p2: Partition) -> bool:
    """Whether the orbit of ``p2`` is accessible from the orbit of ``p1``."""
    _check_pair(kind, p1, p2)
    if kind.is_linear:
        return dominance_le(p2, p1)
    return p2 in _bfs(kind, p1)


def find_chain(kind: AlgebraKind, p1: Partition, p2: Partition):
    """A shortest move chain from p1 to p2 as ``[(partition, move), ...]``, or None."""
    _check_pair(kind, p1, p2)
    if kind.is_linear:
        return None
    parent = _bfs(kind, p1)
    if p2 not in parent:
        return None
    chain = []
    cur = p2
    while parent[cur] is not None:
        prev, move = parent[cur]
        chain.append((cur, move))
        cur = prev
    return list(reversed(chain))


@lru_cache(maxsize=None)
def _dominance_covers(kind: AlgebraKind) -> frozenset:
    nodes = enumerate_partitions(kind)
    below = {p: frozenset(q for q in nodes if q != p and dominance_le(q, p)) for p in nodes}
    return frozenset(_reduce(nodes, below))


def _reduce(nodes, below) -> set:
    """Transitive reduction of a strict order given as ``p -> set of elements below p``."""
    edges = set()
    for p in nodes:
        for q in below[p]:
            if not any(q in below[r] for r in below[p]):
                edges.add((p, q))
    return edges


def _type5_shape(kind: AlgebraKind, p1: Partition, p2: Partition) -> Optional[tuple[int, int]]:
    """The (large, small) parts if p1 -> p2 has the shape of a direct type 5 move."""
    lost = p1.multiplicities() - p2.multiplicities()
    gained = p2.multiplicities() - p1.multiplicities()
    big_parts = sorted(lost.elements(), reverse=True)
    new_parts = sorted(gained.elements(), reverse=True)
    gap, parity = 6, (0 if kind.tag == SP else 1)
    if len(big_parts) == 2:
        a, b = big_parts
    elif len(big_parts) == 1 and kind.tag == SP:
        a, b = big_parts[0], 0
    else:
        return None
    if a % 2 != parity or b % 2 != parity or (kind.tag == O and b < 1):
        return None
    if sorted([a - 2, b + 2], reverse=True) != new_parts or a - 2 == b + 2:
        return None
    if a < b + gap:
        return None
    return a, b


def is_direct_type5(kind: AlgebraKind, p1: Partition, p2: Partition) -> bool:
    """Whether p1 -> p2 is a covering pair of shape [2r,2s] -> [2r-2,2s+2] with 2r >= 2s+6.

    The orthogonal analogue uses odd parts with 2r+1 >= 2s+7. In sp the
    smaller part may be a phantom zero.
    """
    _check_pair(kind, p1, p2)
    if not kind.has_form:
        return False
    if _type5_shape(kind, p1, p2) is None:
        return False
    return (p1, p2) in _dominance_covers(kind)


# pairs proved not 1-accessible by a direct rank computation
_REGISTERED_NEGATIVES = {
    (SP, 8, Partition([6, 1, 1]), Partition([4, 2, 1, 1])): "rank argument on the constrained 8x8 family",
}


def one_accessible_status(kind: AlgebraKind, p1: Partition, p2: Partition) -> tuple[OneAccess, str]:
    """Tri-state 1-accessibility with a short reason string."""
    _check_pair(kind, p1, p2)
    if not dominance_le(p2, p1):
        return OneAccess.NO, "target not dominated"
    if p1 == p2:
        return OneAccess.YES, "same orbit"
    if kind.is_linear:
        return OneAccess.YES, "dominance equals 1-accessibility for gl/sl"
    for succ, move in _successors(kind, p1):
        if succ == p2:
            return OneAccess.YES, f"single move {move}"
    obstruction = _blocking_obstruction(kind, p1, p2)
    if obstruction is Obstruction.DIRECT_TYPE5:
        return OneAccess.NO, "direct move of type 5"
    if obstruction is Obstruction.DISTINGUISHED_TARGET:
        return OneAccess.NO, "target orbit is distinguished"
    reason = _REGISTERED_NEGATIVES.get((kind.tag, kind.N, p1, p2))
    if reason:
        return OneAccess.NO, reason
    if not accessible(kind, p1, p2):
        return OneAccess.NO, "not accessible"
    return OneAccess.UNKNOWN, "accessible through a chain; no single-step witness known"


def _blocking_obstruction(kind: AlgebraKind, p1: Partition, p2: Partition) -> Optional[Obstruction]:
    """DistinguishedTarget or DirectType5 for a dominated pair, if either applies.

    A type 5 step between two genuine parts is reported as such even when the
    target is also distinguished; with a phantom zero part the distinguished
    target is the more basic explanation.
    """
    shape = _type5_shape(kind, p1, p2)
    type5 = is_direct_type5(kind, p1, p2)
    if type5 and shape is not None and shape[1] > 0:
        return Obstruction.DIRECT_TYPE5
    if is_distinguished(kind, p2):
        return Obstruction.DISTINGUISHED_TARGET
    if type5:
        return Obstruction.DIRECT_TYPE5
    return None


def _obstruction(kind: AlgebraKind, p1: Partition, p2: Partition, dominated: bool, acc: bool):
    if not dominated:
        return Obstruction.NOT_DOMINATED
    if acc:
        return None
    return _blocking_obstruction(kind, p1, p2) or Obstruction.NO_MOVE_PATH


def compare(kind: AlgebraKind, p1: Partition, p2: Partition) -> AccessReport:
    _check_pair(kind, p1, p2)
    dominated = dominance_le(p2, p1)
    acc = accessible(kind, p1, p2)
    status, reason = one_accessible_status(kind, p1, p2)
    chain = find_chain(kind, p1, p2) if acc and kind.has_form else None
    return AccessReport(
        kind=kind,
        source=p1,
        target=p2,
        dominated=dominated,
        accessible=acc,
        one_accessible=status,
        one_accessible_reason=reason,
        obstruction=_obstruction(kind, p1, p2, dominated, acc),
        witness_chain=tuple(chain) if chain is not None else None,
    )


@lru_cache(maxsize=None)
def _hasse(kind: AlgebraKind, order: str) -> tuple[tuple[Partition, Partition], ...]:
    nodes = enumerate_partitions(kind)
    if order == DOMINANCE:
        edges = _dominance_covers(kind)
    elif order == ACCESSIBILITY:
        below = {p: reachable_set(kind, p) - {p} for p in nodes}
        edges = _reduce(nodes, below)
    else:
        raise ValueError(f"unknown order {order!r}")
    index = {p: k for k, p in enumerate(nodes)}
    return tuple(sorted(edges, key=lambda e: (index[e[0]], index[e[1]])))


def hasse_diagram(kind: AlgebraKind, order: str) -> list[tuple[Partition, Partition]]:
    """Covering pairs ``(upper, lower)`` of the chosen order, in enumeration order."""
    return list(_hasse(kind, order))


def diagram_json(kind: AlgebraKind, order: str) -> str:
    payload = {
        "kind": kind.tag,
        "N": kind.N,
        "order": order,
        "nodes": [str(p) for p in enumerate_partitions(kind)],
        "edges": [[str(a), str(b)] for a, b in hasse_diagram(kind, order)],
    }
    return json.dumps(payload)
