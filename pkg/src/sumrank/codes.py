"""Linear codes over F with an attached partition, plus the distance oracle.

A LinearCode is canonically represented by the RREF of its generator matrix,
so equality and membership are syntactic.  The exhaustive minimum-distance
oracle delegates to the table-driven kernel in `kernels` and is guarded by
an enumeration budget (default 2^24 codewords, override via SUMRANK_BUDGET).
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass

from . import linalg
from .bivar import BivarPoly, biv_mul, nu_inverse
from .errors import (
    BudgetExceeded,
    CharacteristicDividesEll,
    LengthMismatch,
    UnequalParts,
    ZeroCode,
)
from .kernels import FieldTables, min_weight
from .tower import FieldTower

DEFAULT_BUDGET = 1 << 24


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        if not self.parts or any(p <= 0 for p in self.parts):
            raise LengthMismatch("partition parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def equal_part(self) -> int:
        if len(set(self.parts)) != 1:
            raise UnequalParts(f"blocks have unequal sizes {self.parts}")
        return self.parts[0]

    @staticmethod
    def equal(nblocks, size):
        return Partition(tuple([size] * nblocks))

    @staticmethod
    def hamming(n):
        return Partition(tuple([1] * n))

    @staticmethod
    def rank(n):
        return Partition((n,))


def block_rank(tower: FieldTower, block, level="F", sub="E") -> int:
    """Rank over the subfield of the coordinate rows of the block entries."""
    rows = [tower.coords(level, sub, v) for v in block if v != 0]
    if not rows:
        return 0
    return linalg.rank(rows, tower.gf(sub))


def sumrank_weight(tower, c, part: Partition, level="F", sub="E") -> int:
    if len(c) != part.n:
        raise LengthMismatch(f"vector length {len(c)} != partition sum {part.n}")
    w = 0
    off = 0
    for p in part.parts:
        w += block_rank(tower, c[off : off + p], level, sub)
        off += p
    return w


def hamming_weight(c) -> int:
    return sum(1 for v in c if v != 0)


class LinearCode:
    """An F-linear subspace of F^n with a partition; canonical RREF rows."""

    def __init__(self, tower: FieldTower, rows, partition: Partition, level="F"):
        if rows and any(len(r) != partition.n for r in rows):
            raise LengthMismatch("generator rows do not match the partition length")
        self.tower = tower
        self.level = level
        self.partition = partition
        self.n = partition.n
        G, pivots = linalg.rref(rows, tower.gf(level))
        self.G = tuple(G)
        self.pivots = tuple(pivots)
        self.k = len(G)

    @property
    def field(self):
        return self.tower.gf(self.level)

    def contains(self, vec) -> bool:
        if len(vec) != self.n:
            raise LengthMismatch("vector length mismatch")
        return linalg.in_span(vec, self.G, self.pivots, self.field)

    def codewords(self):
        """Iterate over all codewords (budget is the caller's concern)."""
        q = self.field.order
        gf = self.field
        for idx in range(q**self.k):
            msg = []
            v = idx
            for _ in range(self.k):
                msg.append(v % q)
                v //= q
            cw = [0] * self.n
            for i, d in enumerate(msg):
                if d:
                    row = self.G[i]
                    cw = [gf.add(cw[j], gf.mul(d, row[j])) for j in range(self.n)]
            yield tuple(cw)

    def code_id(self) -> str:
        payload = json.dumps(
            {"G": [list(r) for r in self.G], "parts": list(self.partition.parts)},
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def describe(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "partition": list(self.partition.parts),
            "generator_rref": [list(r) for r in self.G],
            "code_id": self.code_id(),
        }

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.tower == other.tower
            and self.partition == other.partition
            and self.G == other.G
        )

    def __hash__(self):
        return hash((self.partition, self.G))

    def __repr__(self):
        return f"LinearCode[n={self.n}, k={self.k}, parts={self.partition.parts}]"

    @staticmethod
    def full_space(tower, partition, level="F"):
        n = partition.n
        rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        return LinearCode(tower, rows, partition, level)


def _metric_partition(C: LinearCode, metric: str) -> Partition:
    if metric == "sumrank":
        return C.partition
    if metric == "hamming":
        return Partition.hamming(C.n)
    if metric == "rank":
        return Partition.rank(C.n)
    raise ValueError(f"unknown metric {metric!r}")


_tables_cache = {}
_distance_cache = {}


def _tables_for(tower, level, sub):
    key = (tower, level, sub)
    if key not in _tables_cache:
        _tables_cache[key] = FieldTables(tower, level, sub)
    return _tables_cache[key]


def enumeration_budget() -> int:
    env = os.environ.get("SUMRANK_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def min_distance_bruteforce(
    C: LinearCode, metric: str = "sumrank", sub: str = "E", budget: int | None = None
) -> int:
    """Exact minimum weight over all nonzero codewords."""
    if C.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    if budget is None:
        budget = enumeration_budget()
    needed = C.field.order**C.k
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    part = _metric_partition(C, metric)
    key = (C.tower, C.level, sub, part.parts, C.G)
    if key in _distance_cache:
        return _distance_cache[key]
    tables = _tables_for(C.tower, C.level, sub)
    d = min_weight(C.G, tables, part.parts)
    _distance_cache[key] = d
    return d


def rho_shift(c, part: Partition):
    """Rotate blocks right by one (equal part sizes required)."""
    N = part.equal_part()
    ell = len(part.parts)
    if len(c) != ell * N:
        raise LengthMismatch("vector does not match partition")
    blocks = [tuple(c[i * N : (i + 1) * N]) for i in range(ell)]
    blocks = [blocks[-1]] + blocks[:-1]
    return tuple(v for b in blocks for v in b)


def phi_shift(c, part: Partition, t: FieldTower, level="F"):
    """Twisted in-block rotation applied to every block."""
    N = part.equal_part()
    ell = len(part.parts)
    if len(c) != ell * N:
        raise LengthMismatch("vector does not match partition")
    out = []
    for i in range(ell):
        b = c[i * N : (i + 1) * N]
        out.extend(t.twist(level, v, 1) for v in (b[-1],) + tuple(b[:-1]))
    return tuple(out)


def is_cyclic_skew_cyclic(C: LinearCode) -> bool:
    """Stability of the code under the block shift and the twisted shift.

    Checking the generators suffices: both operators are invertible, so
    containment of the generator images is containment of the code.
    """
    part = C.partition
    part.equal_part()
    for row in C.G:
        if not C.contains(rho_shift(row, part)):
            return False
        if not C.contains(phi_shift(row, part, C.tower, C.level)):
            return False
    return True


def code_from_skew_generator(g: BivarPoly, t: FieldTower) -> LinearCode:
    """The code of the left ideal generated by g, via the full monomial orbit."""
    if t.ell % t.p == 0:
        raise CharacteristicDividesEll(f"char {t.p} divides ell = {t.ell}")
    rows = []
    for i in range(t.ell):
        for j in range(t.N):
            mono = BivarPoly.monomial(t, g.level, i, j)
            rows.append(list(nu_inverse(biv_mul(mono, g))))
    part = Partition.equal(t.ell, t.N)
    return LinearCode(t, rows, part, g.level)
