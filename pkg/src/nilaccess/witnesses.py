"""Explicit cocharacter witnesses and negative-result checks.

A witness is a pair (x', lambda) where x' lies in the source orbit and the
limit of lambda(t) x' lambda(t)^-1 lies in the target orbit. Every
constructor verifies its output before returning it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebras import GL, O, SP, AlgebraKind, in_lie_algebra, is_distinguished, is_valid_partition
from .cocharacters import Cocharacter, cochar_in_group, limit
from .linalg import (
    ExactMatrix,
    NotNilpotentError,
    direct_sum,
    elementary,
    jordan_block,
    jordan_type,
    mat_power,
    rank,
)
from .orders import accessible
from .partitions import Partition, dominance_le

__all__ = [
    "MoveWitness",
    "VerificationReport",
    "WitnessParameterError",
    "WitnessConstructionError",
    "verify_witness",
    "gl_two_part_witness",
    "gl_move_I_witness",
    "gl_move_II_witness",
    "gl_rst_witness",
    "gl_example_31",
    "sp_move_witness",
    "o_move1_example",
    "o_move1_witness",
    "nontransitivity_family",
    "nontransitivity_check",
    "distinguished_obstruction_check",
    "WITNESS_BUILDERS",
]


class WitnessParameterError(ValueError):
    pass


class WitnessConstructionError(RuntimeError):
    pass


@dataclass
class VerificationReport:
    """Named boolean checks plus whatever intermediate data was computed."""

    name: str
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checks": dict(self.checks), "details": dict(self.details)}

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: {', '.join(self.failures)}"


@dataclass(frozen=True)
class MoveWitness:
    kind: AlgebraKind
    source: Partition
    target: Partition
    x_prime: ExactMatrix
    lam: Cocharacter
    provenance: str

    @property
    def name(self) -> str:
        return f"{self.kind} {self.source} -> {self.target}"

    def limit(self) -> Optional[ExactMatrix]:
        return limit(self.lam, self.x_prime)

    def to_dict(self, report: Optional[VerificationReport] = None) -> dict:
        report = report or verify_witness(self)
        return {
            "kind": self.kind.tag,
            "N": self.kind.N,
            "source": str(self.source),
            "target": str(self.target),
            "matrix": self.x_prime.to_json(),
            "weights": list(self.lam.weights),
            "provenance": self.provenance,
            "verification": report.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _safe_type(x: ExactMatrix) -> Optional[Partition]:
    try:
        return jordan_type(x)
    except NotNilpotentError:
        return None


def verify_witness(w: MoveWitness) -> VerificationReport:
    """Re-derive every witness invariant from scratch."""
    rep = VerificationReport(w.name)
    rep.checks["in_lie_algebra"] = in_lie_algebra(w.kind, w.x_prime)
    rep.checks["cochar_in_group"] = len(w.lam) == w.kind.N and cochar_in_group(w.kind, w.lam)
    src = _safe_type(w.x_prime)
    rep.details["source_type"] = str(src) if src is not None else "not nilpotent"
    rep.checks["source_type"] = src == w.source
    y = limit(w.lam, w.x_prime) if rep.checks["cochar_in_group"] else None
    rep.checks["limit_exists"] = y is not None
    tgt = _safe_type(y) if y is not None else None
    rep.details["limit_type"] = str(tgt) if tgt is not None else None
    rep.checks["target_type"] = tgt == w.target
    rep.checks["limit_in_lie_algebra"] = y is not None and in_lie_algebra(w.kind, y)
    return rep


def _finish(kind, source, target, entries, lam_weights, provenance) -> MoveWitness:
    if not (dominance_le(target, source) and target != source):
        raise WitnessParameterError(f"{target} is not strictly below {source} in dominance")
    x = elementary(kind.N, entries) if isinstance(entries, dict) else entries
    w = MoveWitness(kind, source, target, x, Cocharacter(lam_weights), provenance)
    rep = verify_witness(w)
    if not rep.passed:
        raise WitnessConstructionError(f"witness {w.name} failed: {', '.join(rep.failures)}")
    return w


def _jordan_entries(entries: dict, start: int, length: int, sign: int = 1) -> None:
    for k in range(start, start + length - 1):
        entries[(k, k + 1)] = sign


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise WitnessParameterError(msg)


# general linear ----------------------------------------------------------


def gl_two_part_witness(r: int, s: int, k: int) -> MoveWitness:
    """[r+k, s-k] -> [r, s]: J_s and J_r joined by a 1 at (k, s+1); lambda = (t I_s, I_r)."""
    _require(r >= 1 and s >= 1, "block sizes must be positive")
    _require(1 <= k < s, f"need 1 <= k < s, got k={k}, s={s}")
    N = r + s
    entries: dict = {}
    _jordan_entries(entries, 1, s)
    _jordan_entries(entries, s + 1, r)
    entries[(k, s + 1)] = 1
    return _finish(
        AlgebraKind(GL, N),
        Partition([r + k, s - k]),
        Partition([r, s]),
        entries,
        [1] * s + [0] * r,
        "general linear two-part transfer",
    )


def gl_move_I_witness(r_list, k_list, s: int) -> MoveWitness:
    """[r_1+k_1, ..., r_p+k_p, s - sum k] -> [r_1, ..., r_p, s], for r_i >= s.

    Layout J_s, J_{r_1}, ..., J_{r_p}. The first column of the block J_{r_j}
    receives +1 in row k_1+...+k_j of J_s and -1 in row k_{i+1}+...+k_j of
    each earlier J_{r_i}.
    """
    r_list, k_list = list(r_list), list(k_list)
    p = len(r_list)
    _require(p >= 1 and len(k_list) == p, "r_list and k_list must be non-empty and of equal length")
    _require(all(r >= 1 for r in r_list) and all(k >= 1 for k in k_list), "parts and transfers must be positive")
    _require(s - sum(k_list) >= 1, "s must exceed the total transfer")
    # the receiving part must be the smallest of the target parts involved
    _require(min(r_list) >= s, "move I needs every r_i >= s")
    starts = [s + 1 + sum(r_list[:i]) for i in range(p)]
    N = s + sum(r_list)
    entries: dict = {}
    _jordan_entries(entries, 1, s)
    for st, r in zip(starts, r_list):
        _jordan_entries(entries, st, r)
    for j in range(p):
        col = starts[j]
        entries[(sum(k_list[: j + 1]), col)] = 1
        for i in range(j):
            # offset < s <= r_i, so the row stays inside block i
            offset = sum(k_list[i + 1 : j + 1])
            entries[(starts[i] - 1 + offset, col)] = -1
    source = Partition([r + k for r, k in zip(r_list, k_list)] + [s - sum(k_list)])
    target = Partition(r_list + [s])
    weights = [p] * s
    for i, r in enumerate(r_list):
        weights += [p - 1 - i] * r
    return _finish(AlgebraKind(GL, N), source, target, entries, weights, "general linear move I (several parts feed one)")


def gl_move_II_witness(r: int, s_list, k_list) -> MoveWitness:
    """[r + sum k, s_1-k_1, ..., s_q-k_q] -> [r, s_1, ..., s_q], for r >= s_j.

    Layout J_{s_1}, ..., J_{s_q}, J_r with a 1 at row k_j of block j in the
    first column of block j+1.
    """
    s_list, k_list = list(s_list), list(k_list)
    q = len(s_list)
    _require(q >= 1 and len(k_list) == q, "s_list and k_list must be non-empty and of equal length")
    _require(r >= 1, "r must be positive")
    _require(all(1 <= k < s for s, k in zip(s_list, k_list)), "need 1 <= k_j < s_j")
    # the donating part must be the largest of the target parts involved
    _require(r >= max(s_list), "move II needs r >= every s_j")
    N = r + sum(s_list)
    entries: dict = {}
    offset = 0
    for sj, kj in zip(s_list, k_list):
        _jordan_entries(entries, offset + 1, sj)
        entries[(offset + kj, offset + sj + 1)] = 1
        offset += sj
    _jordan_entries(entries, offset + 1, r)
    source = Partition([r + sum(k_list)] + [s - k for s, k in zip(s_list, k_list)])
    target = Partition([r] + s_list)
    weights = []
    for j, sj in enumerate(s_list):
        weights += [q - j] * sj
    weights += [0] * r
    return _finish(AlgebraKind(GL, N), source, target, entries, weights, "general linear move II (one part feeds several)")


def gl_rst_witness(r: int, s: int, t: int, k: int, l: int) -> MoveWitness:
    """[r+k, s+l-k, t-l] -> [r, s, t] for r >= s >= t, routed through move I, move II or a two-part transfer."""
    _require(min(r, s, t) >= 1 and k >= 1 and l >= 1, "parameters must be positive")
    _require(r >= s >= t, "need r >= s >= t")
    if k < l:
        return gl_move_I_witness([r, s], [k, l - k], t)
    if k > l:
        return gl_move_II_witness(r, [s, t], [k - l, l])
    # k == l: transfer between the r and t parts with J_s inert
    base = gl_two_part_witness(r, t, k)
    x = direct_sum([base.x_prime, jordan_block(s)])
    weights = list(base.lam.weights) + [0] * s
    return _finish(
        AlgebraKind(GL, r + s + t),
        Partition([r + k, s, t - k]),
        Partition([r, s, t]),
        x,
        weights,
        "general linear three-part transfer with an inert middle part",
    )


def gl_example_31() -> MoveWitness:
    """[3,1] -> [2,2] in gl_4."""
    return _finish(
        AlgebraKind(GL, 4),
        Partition([3, 1]),
        Partition([2, 2]),
        {(1, 2): 1, (1, 3): 1, (3, 4): 1},
        [1, 1, 0, 0],
        "worked gl_4 example [3,1] -> [2,2]",
    )


# symplectic ------------------------------------------------------------


def _tilde_j(entries: dict, start: int, length: int) -> None:
    """The symplectic block of even ``length``: J_h and -J_h joined at the centre."""
    h = length // 2
    _jordan_entries(entries, start, h)
    _jordan_entries(entries, start + h, h, -1)
    if h:
        entries[(start + h - 1, start + h)] = 1


def _sp_move1(m: int) -> MoveWitness:
    _require(m >= 2, "move 1 needs m >= 2")
    h = 2 * m - 1
    N = 2 * h
    entries: dict = {}
    _jordan_entries(entries, 1, h)
    _jordan_entries(entries, h + 1, h, -1)
    entries[(1, 2 * m)] = 1
    entries[(2 * m - 1, 4 * m - 2)] = 1
    return _finish(
        AlgebraKind(SP, N),
        Partition([2 * m, 2 * m - 2]),
        Partition([h, h]),
        entries,
        [1] * h + [-1] * h,
        "symplectic move 1 [2m,2m-2] -> [2m-1,2m-1]",
    )


def _sp_move2(n: int, m: int) -> MoveWitness:
    _require(n >= 2 and m >= 1, "move 2 needs n >= 2 and m >= 1")
    N = 2 * m + 2 * n
    entries: dict = {}
    _jordan_entries(entries, 1, m + 1)
    _tilde_j(entries, m + 2, 2 * n - 2)
    _jordan_entries(entries, m + 2 * n, m + 1, -1)
    entries[(1, m + 2)] = 1
    entries[(m + 2 * n - 1, 2 * m + 2 * n)] = -1
    return _finish(
        AlgebraKind(SP, N),
        Partition([2 * n, m, m]),
        Partition([2 * n - 2, m + 1, m + 1]),
        entries,
        [1] * (m + 1) + [0] * (2 * n - 2) + [-1] * (m + 1),
        "symplectic move 2 [2n,m,m] -> [2n-2,m+1,m+1]",
    )


def _sp_move3(n: int, m: int) -> MoveWitness:
    _require(n >= 2 and m >= 1, "move 3 needs n >= 2 and m >= 1")
    N = 2 * n + 2 * m
    entries: dict = {}
    _jordan_entries(entries, 1, n - 1)
    _tilde_j(entries, n, 2 * m + 2)
    _jordan_entries(entries, n + 2 * m + 2, n - 1, -1)
    entries[(n - 1, n + 2 * m + 1)] = 1
    entries[(n, n + 2 * m + 2)] = 1
    return _finish(
        AlgebraKind(SP, N),
        Partition([n, n, 2 * m]),
        Partition([n - 1, n - 1, 2 * m + 2]),
        entries,
        [1] * (n - 1) + [0] * (2 * m + 2) + [-1] * (n - 1),
        "symplectic move 3 [n,n,2m] -> [n-1,n-1,2m+2]",
    )


def _sp_move4(n: int, m: int) -> MoveWitness:
    _require(m >= 1 and n >= m + 2, "move 4 needs n >= m+2 >= 3")
    N = 2 * m + 2 * n
    entries: dict = {}
    _jordan_entries(entries, 1, m + 1)
    _jordan_entries(entries, m + 2, n - 1)
    _jordan_entries(entries, m + n + 1, n - 1, -1)
    _jordan_entries(entries, m + 2 * n, m + 1, -1)
    entries[(1, m + 2)] = 1
    # the form forces the mirrored connector to carry the opposite sign
    entries[(m + 2 * n - 1, 2 * m + 2 * n)] = -1
    return _finish(
        AlgebraKind(SP, N),
        Partition([n, n, m, m]),
        Partition([n - 1, n - 1, m + 1, m + 1]),
        entries,
        [2] * (m + 1) + [1] * (n - 1) + [-1] * (n - 1) + [-2] * (m + 1),
        "symplectic move 4 [n,n,m,m] -> [n-1,n-1,m+1,m+1]",
    )


def sp_move_witness(move: int, **params) -> MoveWitness:
    """Symplectic witness for moves 1 to 4.

    move 1 takes ``m``; moves 2, 3 and 4 take ``n`` and ``m``.
    """
    builders = {1: _sp_move1, 2: _sp_move2, 3: _sp_move3, 4: _sp_move4}
    if move not in builders:
        raise WitnessParameterError(f"no symplectic witness for move {move}")
    try:
        return builders[move](**params)
    except TypeError as exc:
        raise WitnessParameterError(f"bad parameters for move {move}: {exc}") from None


# orthogonal ------------------------------------------------------------

_O75_PRIME = (
    "0,1,0,0,0,0,1,0,0,0,0,0;"
    "0,0,1,0,0,0,0,0,0,0,0,0;"
    "0,0,0,1,0,0,0,0,0,0,0,0;"
    "0,0,0,0,1,0,0,0,0,0,0,0;"
    "0,0,0,0,0,1,0,0,0,0,0,0;"
    "0,0,0,0,0,0,0,0,0,0,0,-1;"
    "0,0,0,0,0,0,0,-1,0,0,0,0;"
    "0,0,0,0,0,0,0,0,-1,0,0,0;"
    "0,0,0,0,0,0,0,0,0,-1,0,0;"
    "0,0,0,0,0,0,0,0,0,0,-1,0;"
    "0,0,0,0,0,0,0,0,0,0,0,-1;"
    "0,0,0,0,0,0,0,0,0,0,0,0"
)


def o_move1_example() -> MoveWitness:
    """[7,5] -> [6,6] in o_12, entered entry by entry."""
    return _finish(
        AlgebraKind(O, 12),
        Partition([7, 5]),
        Partition([6, 6]),
        ExactMatrix.from_text(_O75_PRIME),
        [1] * 6 + [-1] * 6,
        "worked o_12 example [7,5] -> [6,6]",
    )


def o_move1_witness(m: int) -> MoveWitness:
    """[2m+1, 2m-1] -> [2m, 2m] in o_{4m}.

    Extrapolated from the 12x12 example: J_{2m} and -J_{2m} with +1 at
    (1, 2m+1) and -1 at (2m, 4m).
    """
    _require(m >= 2, "orthogonal move 1 needs m >= 2")
    N = 4 * m
    entries: dict = {}
    _jordan_entries(entries, 1, 2 * m)
    _jordan_entries(entries, 2 * m + 1, 2 * m, -1)
    entries[(1, 2 * m + 1)] = 1
    entries[(2 * m, 4 * m)] = -1
    return _finish(
        AlgebraKind(O, N),
        Partition([2 * m + 1, 2 * m - 1]),
        Partition([2 * m, 2 * m]),
        entries,
        [1] * (2 * m) + [-1] * (2 * m),
        "orthogonal move 1, extrapolated from the o_12 example",
    )


# negative results ------------------------------------------------------


def nontransitivity_family(a, b, c, d, e, f, g) -> ExactMatrix:
    """The 8x8 elements of sp_8 whose limit under diag(t^n, 1, ..., 1, t^-n) is y in [4,2,1,1]."""
    return elementary(
        8,
        {
            (1, 2): a, (1, 3): b, (1, 4): c, (1, 5): d, (1, 6): e, (1, 7): f, (1, 8): g,
            (2, 7): 1, (2, 8): f,
            (3, 4): 1, (3, 8): e,
            (4, 5): 1, (4, 8): d,
            (5, 6): -1, (5, 8): -c,
            (6, 8): -b,
            (7, 8): -a,
        },
    )


def _random_rational(rng: random.Random, bound: int = 50) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def nontransitivity_check(samples: int = 200, seed: int = 0) -> VerificationReport:
    """No element of the constrained family lies in the orbit [6,1,1].

    For random rational parameters with b != 0: x is in sp_8, x^5 = b^2 E_18,
    rank x = 6, so x has exactly two Jordan blocks and cannot be of type [6,1,1].
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    sp8 = AlgebraKind(SP, 8)
    counts = {"in_sp8": 0, "x5_is_b2_E18": 0, "rank_6": 0, "two_blocks": 0, "not_611": 0}
    for _ in range(samples):
        params = [_random_rational(rng) for _ in range(7)]
        while params[1] == 0:
            params[1] = _random_rational(rng)
        b = params[1]
        x = nontransitivity_family(*params)
        counts["in_sp8"] += in_lie_algebra(sp8, x)
        counts["x5_is_b2_E18"] += mat_power(x, 5) == elementary(8, {(1, 8): b * b})
        r = rank(x)
        counts["rank_6"] += r == 6
        jt = jordan_type(x)
        counts["two_blocks"] += len(jt) == 8 - r == 2
        counts["not_611"] += jt != Partition([6, 1, 1])
    rep = VerificationReport("sp_8 [6,1,1] -/-> [4,2,1,1] in one step")
    for key, n_ok in counts.items():
        rep.checks[key] = n_ok == samples
    rep.details = {"samples": samples, "seed": seed, **{k: f"{v}/{samples}" for k, v in counts.items()}}
    return rep


def distinguished_obstruction_check(kind: AlgebraKind, src: Partition, tgt: Partition) -> VerificationReport:
    """Whether a distinguished target rules out any witness, and agreement with the order engine."""
    for p in (src, tgt):
        if not is_valid_partition(kind, p):
            raise ValueError(f"{p} does not label a nilpotent orbit of {kind}")
    fires = tgt != src and is_distinguished(kind, tgt)
    acc = accessible(kind, src, tgt)
    rep = VerificationReport(f"{kind} {src} -> {tgt} distinguished obstruction")
    rep.details = {"fires": fires, "accessible": acc}
    rep.checks["consistent_with_engine"] = not (fires and acc)
    return rep


def _ints(v) -> list[int]:
    if isinstance(v, (list, tuple)):
        return [int(x) for x in v]
    return [int(x) for x in str(v).split(",") if x]


# name -> (builder taking a dict of string or int params, parameter names)
WITNESS_BUILDERS = {
    "gl-two-part": (lambda p: gl_two_part_witness(int(p["r"]), int(p["s"]), int(p["k"])), ("r", "s", "k")),
    "gl-move-I": (lambda p: gl_move_I_witness(_ints(p["r_list"]), _ints(p["k_list"]), int(p["s"])), ("r_list", "k_list", "s")),
    "gl-move-II": (lambda p: gl_move_II_witness(int(p["r"]), _ints(p["s_list"]), _ints(p["k_list"])), ("r", "s_list", "k_list")),
    "gl-rst": (lambda p: gl_rst_witness(*(int(p[k]) for k in "rstkl")), ("r", "s", "t", "k", "l")),
    "gl-example": (lambda p: gl_example_31(), ()),
    "sp-move1": (lambda p: sp_move_witness(1, m=int(p["m"])), ("m",)),
    "sp-move2": (lambda p: sp_move_witness(2, n=int(p["n"]), m=int(p["m"])), ("n", "m")),
    "sp-move3": (lambda p: sp_move_witness(3, n=int(p["n"]), m=int(p["m"])), ("n", "m")),
    "sp-move4": (lambda p: sp_move_witness(4, n=int(p["n"]), m=int(p["m"])), ("n", "m")),
    "o-move1-example": (lambda p: o_move1_example(), ()),
    "o-move1": (lambda p: o_move1_witness(int(p["m"])), ("m",)),
}
