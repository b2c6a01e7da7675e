"""Classical Lie algebras gl_N, sl_N, sp_N and o_N.

Defining forms, membership tests, the partition rules labelling nilpotent
orbits, and constructors for nilpotent matrices in standard form.

Symplectic and orthogonal forms are anti-diagonal. For sp_{2n} the form
sends e_j to -e_{2n+1-j} for j <= n and to +e_{2n+1-j} otherwise; the
orthogonal form is the anti-identity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .field import I, ONE, R2, ZERO, FieldScalar
from .linalg import DimensionError, ExactMatrix, determinant, direct_sum, jordan_block
from .partitions import Partition, partitions_of

__all__ = [
    "AlgebraKind",
    "KindError",
    "InvalidPartitionError",
    "UnsupportedPartitionError",
    "GL",
    "SL",
    "SP",
    "O",
    "omega",
    "in_lie_algebra",
    "in_group",
    "is_valid_partition",
    "is_distinguished",
    "enumerate_partitions",
    "standard_form",
    "f_vector",
]

GL, SL, SP, O = "gl", "sl", "sp", "o"
_TAGS = (GL, SL, SP, O)


class KindError(ValueError):
    pass


class InvalidPartitionError(ValueError):
    pass


class UnsupportedPartitionError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraKind:
    tag: str
    N: int

    def __post_init__(self):
        tag = self.tag.lower()
        if tag not in _TAGS:
            raise KindError(f"unknown algebra kind {self.tag!r}")
        object.__setattr__(self, "tag", tag)
        if self.N < 1:
            raise KindError("dimension must be positive")
        if tag == SP and self.N % 2:
            raise KindError(f"sp needs even dimension, got {self.N}")

    @property
    def has_form(self) -> bool:
        return self.tag in (SP, O)

    @property
    def is_linear(self) -> bool:
        return self.tag in (GL, SL)

    def __str__(self) -> str:
        return f"{self.tag}_{self.N}"


def f_vector(kind: AlgebraKind, i: int) -> tuple[int, int]:
    """The basis vector written f_i, as ``(coordinate, sign)``.

    sp_{2n}: f_i = -e_{2n+1-i}. o_{2n}: f_i = e_{2n+1-i}.
    o_{2n+1}: f_i = e_{2n+2-i}, leaving e_{n+1} as the central vector.
    """
    if not kind.has_form:
        raise KindError("f-vectors exist only for sp and o")
    n = kind.N // 2
    if not 1 <= i <= n:
        raise ValueError(f"f_{i} out of range for {kind}")
    if kind.tag == SP:
        return (kind.N + 1 - i, -1)
    return (kind.N + 1 - i, 1)


@lru_cache(maxsize=None)
def omega(kind: AlgebraKind) -> ExactMatrix:
    if not kind.has_form:
        raise KindError(f"{kind} has no defining form")
    N = kind.N
    rows = [[ZERO] * N for _ in range(N)]
    for j in range(1, N + 1):
        if kind.tag == SP:
            val = -ONE if j <= N // 2 else ONE
        else:
            val = ONE
        rows[N - j][j - 1] = val
    return ExactMatrix(rows)


def _check_dim(kind: AlgebraKind, x: ExactMatrix) -> None:
    if x.shape != (kind.N, kind.N):
        raise DimensionError(f"expected {kind.N}x{kind.N}, got {x.shape}")


def in_lie_algebra(kind: AlgebraKind, x: ExactMatrix) -> bool:
    _check_dim(kind, x)
    if kind.tag == GL:
        return True
    if kind.tag == SL:
        return not x.trace()
    w = omega(kind)
    return (x.T @ w + w @ x).is_zero()


def in_group(kind: AlgebraKind, g: ExactMatrix) -> bool:
    _check_dim(kind, g)
    if kind.tag == GL:
        return bool(determinant(g))
    if kind.tag == SL:
        return determinant(g) == 1
    w = omega(kind)
    return g.T @ w @ g == w


def is_valid_partition(kind: AlgebraKind, pi: Partition) -> bool:
    if pi.size != kind.N:
        return False
    counts = pi.multiplicities()
    if kind.tag == SP:
        return all(c % 2 == 0 for p, c in counts.items() if p % 2)
    if kind.tag == O:
        return all(c % 2 == 0 for p, c in counts.items() if p % 2 == 0)
    return True


def _require_valid(kind: AlgebraKind, pi: Partition) -> None:
    if not is_valid_partition(kind, pi):
        raise InvalidPartitionError(f"{pi} does not label a nilpotent orbit of {kind}")


def is_distinguished(kind: AlgebraKind, pi: Partition) -> bool:
    """sp: distinct even parts only. o: distinct odd parts only.

    For gl/sl only the regular orbit [N] counts; this convention is used
    for display and never in the order computations.
    """
    _require_valid(kind, pi)
    if kind.is_linear:
        return pi.parts == (kind.N,)
    counts = pi.multiplicities()
    parity = 0 if kind.tag == SP else 1
    return all(p % 2 == parity and c == 1 for p, c in counts.items())


@lru_cache(maxsize=None)
def _enumerate(kind: AlgebraKind) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_of(kind.N) if is_valid_partition(kind, p))


def enumerate_partitions(kind: AlgebraKind) -> list[Partition]:
    """Valid partitions in descending lexicographic order (largest first)."""
    return list(_enumerate(kind))


def _split_layers(kind: AlgebraKind, pi: Partition):
    """Pairs (p, p) and unpaired parts, both sorted largest first."""
    pairs, singles = [], []
    for p, c in sorted(Counter(pi.parts).items(), reverse=True):
        pairs.extend([p] * (c // 2))
        if c % 2:
            singles.append(p)
    return pairs, singles


def _center_basis(center: list[int]) -> list[dict[int, FieldScalar]]:
    """Vectors u_1, u_2, ... spanning the central coordinates with B(u_s, u_t) = delta_st.

    Mirror coordinates (c, c') give (e_c + e_c')/r2 and i(e_c' - e_c)/r2; a
    self-mirrored middle coordinate gives e_m.
    """
    half = R2 / 2
    basis = []
    lo, hi = 0, len(center) - 1
    while lo < hi:
        c, c2 = center[lo], center[hi]
        basis.append({c: half, c2: half})
        basis.append({c: -I * half, c2: I * half})
        lo += 1
        hi -= 1
    if lo == hi:
        basis.append({center[lo]: ONE})
    return basis


def standard_form(kind: AlgebraKind, pi: Partition) -> ExactMatrix:
    """A nilpotent element of the Lie algebra with Jordan type ``pi``.

    gl/sl use the block diagonal Jordan form, largest block first. For sp and
    o the blocks are nested from the outside in: each pair (p, p) becomes
    J_p on the leading coordinates mirrored by -J_p on the trailing ones,
    followed by the unpaired parts. An unpaired even sp part 2m is split
    into J_m and -J_m joined by a 1 on the anti-diagonal. Unpaired odd o
    parts 2a+1 are split into J_a and -J_a and routed through an
    orthonormal vector of the central block, which is where the 1/r2 and
    i/r2 entries come from.
    """
    _require_valid(kind, pi)
    if kind.is_linear:
        return direct_sum([jordan_block(p) for p in pi.parts])

    N = kind.N
    entries: dict[tuple[int, int], FieldScalar] = {}
    pairs, singles = _split_layers(kind, pi)
    if kind.tag == SP and any(p % 2 for p in singles):
        raise UnsupportedPartitionError(f"unpaired odd part in {pi}")  # unreachable for valid input

    pos = 0

    def mirrored_blocks(length):
        nonlocal pos
        left = pos + 1
        right = N - pos - length + 1
        for k in range(length - 1):
            entries[(left + k, left + k + 1)] = ONE
            entries[(right + k, right + k + 1)] = -ONE
        pos += length
        return left, right

    for p in pairs:
        mirrored_blocks(p)

    links = []
    for p in singles:
        half = p // 2
        left, right = mirrored_blocks(half)
        if kind.tag == SP:
            entries[(left + half - 1, right)] = ONE
        elif half:
            links.append((left + half - 1, right))
        else:
            links.append(None)

    if kind.tag == O:
        center = list(range(pos + 1, N - pos + 1))
        if len(center) != len(singles):
            raise UnsupportedPartitionError(f"layout failure for {pi}")  # defensive
        for link, u in zip(links, _center_basis(center)):
            if link is None:
                continue
            last_left, first_right = link
            for c, val in u.items():
                # row last_left carries B(u, .), column first_right carries -u
                entries[(last_left, N + 1 - c)] = val
                entries[(c, first_right)] = -val

    rows = [[ZERO] * N for _ in range(N)]
    for (i, j), v in entries.items():
        rows[i - 1][j - 1] = v
    return ExactMatrix(rows)
