"""Dense exact matrices over Q(i, r2).

Matrices are immutable. Products skip zero entries, which keeps the
sparse nilpotent matrices used throughout the package cheap to power.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .field import ONE, ZERO, FieldScalar
from .partitions import Partition

__all__ = [
    "ExactMatrix",
    "DimensionError",
    "SingularMatrixError",
    "NotNilpotentError",
    "mat_mul",
    "mat_power",
    "rank",
    "jordan_type",
    "conjugate",
    "direct_sum",
    "shrink",
    "inverse",
    "determinant",
    "identity",
    "zeros",
    "jordan_block",
    "elementary",
]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


class NotNilpotentError(ValueError):
    pass


class ExactMatrix:
    __slots__ = ("n_rows", "n_cols", "_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable], n_cols: int | None = None):
        built = tuple(tuple(FieldScalar.coerce(v) for v in row) for row in rows)
        if not built:
            raise DimensionError("matrix needs at least one row")
        width = len(built[0])
        if n_cols is not None and width != n_cols:
            raise DimensionError("column count mismatch")
        if width == 0 or any(len(r) != width for r in built):
            raise DimensionError("ragged or empty rows")
        self.n_rows = len(built)
        self.n_cols = width
        self._rows = built
        self._hash = None

    @classmethod
    def _wrap(cls, rows: tuple) -> "ExactMatrix":
        obj = cls.__new__(cls)
        obj._rows = rows
        obj.n_rows = len(rows)
        obj.n_cols = len(rows[0])
        obj._hash = None
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    @property
    def rows(self) -> tuple[tuple[FieldScalar, ...], ...]:
        return self._rows

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij) -> FieldScalar:
        """Zero-based ``m[i, j]``."""
        i, j = ij
        return self._rows[i][j]

    def entry(self, i: int, j: int) -> FieldScalar:
        """One-based access, matching the usual matrix notation."""
        return self._rows[i - 1][j - 1]

    def support(self) -> set[tuple[int, int]]:
        """One-based positions of the nonzero entries."""
        return {
            (i + 1, j + 1)
            for i, row in enumerate(self._rows)
            for j, v in enumerate(row)
            if v
        }

    def nonzero_items(self):
        for i, row in enumerate(self._rows):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def is_zero(self) -> bool:
        return not any(v for row in self._rows for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        _same_shape(self, other)
        return ExactMatrix._wrap(
            tuple(tuple(p + q for p, q in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        _same_shape(self, other)
        return ExactMatrix._wrap(
            tuple(tuple(p - q for p, q in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(tuple(-v for v in r) for r in self._rows))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def scale(self, c) -> "ExactMatrix":
        c = FieldScalar.coerce(c)
        return ExactMatrix._wrap(tuple(tuple(c * v for v in r) for r in self._rows))

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(zip(*self._rows)))

    def trace(self) -> FieldScalar:
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        total = ZERO
        for k in range(self.n_rows):
            total = total + self._rows[k][k]
        return total

    def replace(self, updates: dict) -> "ExactMatrix":
        """Copy with one-based ``{(i, j): value}`` entries overwritten."""
        rows = [list(r) for r in self._rows]
        for (i, j), v in updates.items():
            rows[i - 1][j - 1] = FieldScalar.coerce(v)
        return ExactMatrix(rows)

    # serialization
    def to_text(self) -> str:
        return ";".join(",".join(str(v) for v in row) for row in self._rows)

    @classmethod
    def from_text(cls, text: str) -> "ExactMatrix":
        return cls([FieldScalar.parse(e) for e in row.split(",")] for row in text.strip().split(";"))

    def to_json(self) -> dict:
        return {
            "rows": self.n_rows,
            "cols": self.n_cols,
            "entries": [[str(v) for v in row] for row in self._rows],
        }

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        m = cls([FieldScalar.parse(e) for e in row] for row in data["entries"])
        if m.shape != (data["rows"], data["cols"]):
            raise DimensionError("declared shape does not match entries")
        return m

    def __repr__(self) -> str:
        return f"ExactMatrix.from_text({self.to_text()!r})"

    def pretty(self) -> str:
        cells = [[str(v) for v in row] for row in self._rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _same_shape(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def zeros(n_rows: int, n_cols: int | None = None) -> ExactMatrix:
    n_cols = n_rows if n_cols is None else n_cols
    return ExactMatrix._wrap(tuple((ZERO,) * n_cols for _ in range(n_rows)))


def identity(n: int) -> ExactMatrix:
    return ExactMatrix._wrap(
        tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
    )


def elementary(n: int, entries: dict) -> ExactMatrix:
    """``n x n`` matrix with the given one-based entries and zeros elsewhere."""
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i - 1][j - 1] = FieldScalar.coerce(v)
    return ExactMatrix(rows)


def jordan_block(n: int, sign: int = 1) -> ExactMatrix:
    """Upper nilpotent Jordan block: ``sign`` on the superdiagonal."""
    return elementary(n, {(k, k + 1): sign for k in range(1, n)})


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.n_cols != b.n_rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    b_rows = [[(j, v) for j, v in enumerate(row) if v] for row in b.rows]
    out = []
    for row in a.rows:
        acc = {}
        for k, av in enumerate(row):
            if not av:
                continue
            for j, bv in b_rows[k]:
                prod = av * bv
                acc[j] = acc[j] + prod if j in acc else prod
        out.append(tuple(acc.get(j, ZERO) for j in range(b.n_cols)))
    return ExactMatrix._wrap(tuple(out))


def mat_power(x: ExactMatrix, k: int) -> ExactMatrix:
    if not x.is_square():
        raise DimensionError("power of a non-square matrix")
    if k < 0:
        raise ValueError("negative exponent")
    result = identity(x.n_rows)
    base = x
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _echelon(rows: list[list[FieldScalar]], n_cols: int):
    """In-place forward elimination; returns the pivot columns.

    Pivot rule: first nonzero entry scanning top to bottom in each column.
    """
    pivots = []
    r = 0
    n_rows = len(rows)
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        pivot_row = rows[r]
        for i in range(r + 1, n_rows):
            f = rows[i][c]
            if f:
                f = f * inv
                row_i = rows[i]
                for j in range(c, n_cols):
                    if pivot_row[j]:
                        row_i[j] = row_i[j] - f * pivot_row[j]
        pivots.append(c)
        r += 1
    return pivots


def rank(x: ExactMatrix) -> int:
    rows = [list(r) for r in x.rows if any(r)]
    if not rows:
        return 0
    return len(_echelon(rows, x.n_cols))


def determinant(x: ExactMatrix) -> FieldScalar:
    if not x.is_square():
        raise DimensionError("determinant of a non-square matrix")
    n = x.n_rows
    rows = [list(r) for r in x.rows]
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                for j in range(c, n):
                    if rows[c][j]:
                        rows[i][j] = rows[i][j] - f * rows[c][j]
    return det


def inverse(g: ExactMatrix) -> ExactMatrix:
    """Gauss-Jordan inverse."""
    if not g.is_square():
        raise DimensionError("inverse of a non-square matrix")
    n = g.n_rows
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(g.rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [v * inv if v else v for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [u - f * v if v else u for u, v in zip(aug[i], aug[c])]
    return ExactMatrix._wrap(tuple(tuple(r[n:]) for r in aug))


def conjugate(g: ExactMatrix, x: ExactMatrix) -> ExactMatrix:
    """``g x g^-1``."""
    if g.shape != x.shape or not g.is_square():
        raise DimensionError(f"cannot conjugate {x.shape} by {g.shape}")
    return mat_mul(mat_mul(g, x), inverse(g))


def rank_sequence(x: ExactMatrix) -> list[int]:
    """Ranks of ``x^0, x^1, ...`` up to the first zero power.

    Raises NotNilpotentError if ``x^N`` is nonzero.
    """
    if not x.is_square():
        raise DimensionError("rank sequence of a non-square matrix")
    n = x.n_rows
    ranks = [n]
    power = x
    for _ in range(n):
        r = rank(power)
        ranks.append(r)
        if r == 0:
            return ranks
        power = mat_mul(power, x)
    raise NotNilpotentError("matrix is not nilpotent")


def jordan_type(x: ExactMatrix) -> Partition:
    """Jordan type of a nilpotent matrix.

    The number of blocks of size at least k is rank(x^(k-1)) - rank(x^k).
    """
    ranks = rank_sequence(x)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    # at_least is the transpose partition
    return Partition(at_least).transpose()


def direct_sum(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    if not blocks:
        raise DimensionError("direct sum of no blocks")
    for b in blocks:
        if not b.is_square():
            raise DimensionError("direct sum needs square blocks")
    n = sum(b.n_rows for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        k = b.n_rows
        for r in b.rows:
            rows.append((ZERO,) * offset + tuple(r) + (ZERO,) * (n - offset - k))
        offset += k
    return ExactMatrix._wrap(tuple(rows))


def shrink(x: ExactMatrix, d: int = 1) -> ExactMatrix:
    """Delete the outer ``d`` rows and columns on every side."""
    if d < 0:
        raise ValueError("shrink depth must be non-negative")
    if not x.is_square():
        raise DimensionError("shrink needs a square matrix")
    if d == 0:
        return x
    if 2 * d >= x.n_rows:
        raise DimensionError(f"cannot shrink a {x.n_rows}x{x.n_rows} matrix by {d}")
    return ExactMatrix._wrap(tuple(tuple(r[d:-d]) for r in x.rows[d:-d]))
