"""Diagonal cocharacters and limits of the adjoint action.

A cocharacter is stored by its integer weights: ``lambda(t) = diag(t^w_1, ..., t^w_N)``.
Conjugating by lambda(t) multiplies entry (i, j) by ``t^(w_i - w_j)``, so the
limit as t -> 0 is read off from the signs of the weight differences.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .algebras import GL, SL, AlgebraKind
from .field import ZERO, FieldScalar
from .linalg import DimensionError, ExactMatrix, SingularMatrixError, determinant, elementary

__all__ = [
    "Cocharacter",
    "Parabolic",
    "cochar_in_group",
    "limit",
    "fixes",
    "normalize_to_sl",
    "parabolic_membership",
]


@dataclass(frozen=True)
class Cocharacter:
    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        ws = tuple(int(w) for w in weights)
        if not ws:
            raise DimensionError("cocharacter needs at least one weight")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def blocks(cls, *spec: tuple[int, int]) -> "Cocharacter":
        """Build from ``(weight, size)`` blocks, e.g. ``blocks((1, 2), (0, 2))``."""
        ws = []
        for weight, size in spec:
            ws.extend([weight] * size)
        return cls(ws)

    @classmethod
    def parse(cls, text: str) -> "Cocharacter":
        return cls(int(w) for w in text.replace(" ", "").strip("[]()").split(","))

    def __len__(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return ",".join(map(str, self.weights))

    def shrink(self, d: int) -> "Cocharacter":
        """Drop the outer ``d`` weights on both ends."""
        if d == 0:
            return self
        if 2 * d >= len(self.weights):
            raise DimensionError("cannot shrink cocharacter that far")
        return Cocharacter(self.weights[d:-d])

    def evaluate(self, t) -> ExactMatrix:
        """The diagonal matrix lambda(t) for a nonzero scalar t."""
        t = FieldScalar.coerce(t)
        return elementary(len(self.weights), {(k + 1, k + 1): t ** w for k, w in enumerate(self.weights)})


def _check(lam: Cocharacter, x: ExactMatrix) -> None:
    if x.shape != (len(lam), len(lam)):
        raise DimensionError(f"cocharacter of length {len(lam)} vs matrix {x.shape}")


def cochar_in_group(kind: AlgebraKind, lam: Cocharacter) -> bool:
    """Whether lambda(t) lies in the group for every t."""
    if len(lam) != kind.N:
        raise DimensionError(f"cocharacter of length {len(lam)} for {kind}")
    w = lam.weights
    if kind.tag == GL:
        return True
    if kind.tag == SL:
        return sum(w) == 0
    # an anti-diagonal form is preserved iff mirrored weights cancel
    return all(w[i] + w[-1 - i] == 0 for i in range(len(w)))


def limit(lam: Cocharacter, x: ExactMatrix) -> Optional[ExactMatrix]:
    """``lim_{t->0} lambda(t) x lambda(t)^-1``, or None if it does not exist."""
    _check(lam, x)
    w = lam.weights
    rows = []
    for i, row in enumerate(x.rows):
        new = []
        for j, v in enumerate(row):
            if v:
                diff = w[i] - w[j]
                if diff < 0:
                    return None
                new.append(v if diff == 0 else ZERO)
            else:
                new.append(v)
        rows.append(new)
    return ExactMatrix(rows)


def fixes(lam: Cocharacter, y: ExactMatrix) -> bool:
    _check(lam, y)
    w = lam.weights
    return all(w[i] == w[j] for i, j, _ in y.nonzero_items())


def normalize_to_sl(lam: Cocharacter) -> Cocharacter:
    """Rescale to weight sum zero without changing any limit.

    ``w'_i = N w_i - sum(w)`` keeps the sign of every difference w_i - w_j.
    """
    n = len(lam)
    s = sum(lam.weights)
    return Cocharacter(n * w - s for w in lam.weights)


class Parabolic(enum.Enum):
    P = "P"
    L = "L"
    U = "U"
    OUTSIDE = "outside"


def parabolic_membership(lam: Cocharacter, g: ExactMatrix) -> frozenset:
    """Which of P_lambda, L_lambda, U_lambda contain ``g``.

    Returns ``{OUTSIDE}`` when the conjugation limit diverges.
    """
    _check(lam, g)
    if not determinant(g):
        raise SingularMatrixError("parabolic membership needs an invertible matrix")
    w = lam.weights
    in_p = in_l = True
    levi_part_is_identity = True
    n = len(w)
    for i in range(n):
        for j in range(n):
            v = g[i, j]
            if w[i] == w[j]:
                if v != (1 if i == j else 0):
                    levi_part_is_identity = False
            elif v:
                in_l = False
                if w[i] < w[j]:
                    in_p = False
    if not in_p:
        return frozenset({Parabolic.OUTSIDE})
    tags = {Parabolic.P}
    if in_l:
        tags.add(Parabolic.L)
    if levi_part_is_identity:
        tags.add(Parabolic.U)
    return frozenset(tags)
