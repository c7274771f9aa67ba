"""Defining sets and certified lower bounds on the minimum sum-rank distance.

All three certificate families (BCH, Hartmann-Tzeng, Roos) consume pairs
from the canonical ell x m grid {(a^i, sigma^j(beta))} for one fixed
primitive ell-th root a and one fixed normal element beta.  Exponents are
reduced mod ell in the first component and mod m in the second; membership
of a pair means the code's generator evaluates to zero there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from math import gcd

from . import linalg
from .bivar import BivarPoly, ev_total
from .errors import (
    GridNotContained,
    NotNormal,
    NotPrimitive,
    PreconditionViolated,
    SelectionTooSmall,
    ZeroCode,
)
from .tower import (
    FieldElement,
    FieldTower,
    find_normal_element,
    is_normal,
    primitive_ell_root,
)


class DefiningSetView:
    """Membership of evaluation pairs in the defining set of a CSC code."""

    def __init__(self, tower: FieldTower, generator: BivarPoly | None,
                 membership_fn=None, a: FieldElement | None = None,
                 beta: FieldElement | None = None):
        if generator is None and membership_fn is None:
            raise ValueError("need a generator or a membership predicate")
        self.tower = tower
        self.generator = generator
        self._fn = membership_fn
        self.a = a if a is not None else primitive_ell_root(tower)
        self.beta = beta if beta is not None else find_normal_element(tower)
        self._grid_cache = {}

    @classmethod
    def from_generator(cls, tower, g: BivarPoly, a=None, beta=None):
        return cls(tower, g, a=a, beta=beta)

    @classmethod
    def from_predicate(cls, tower, fn, a=None, beta=None):
        """fn(a_val, beta_val) -> bool on L-encodings."""
        return cls(tower, None, membership_fn=fn, a=a, beta=beta)

    def membership(self, a_elt, beta_elt) -> bool:
        """Arbitrary-pair query; a_elt must be an ell-th root of unity."""
        t = self.tower
        aval = a_elt.in_level("L").val if isinstance(a_elt, FieldElement) else a_elt
        bval = beta_elt.in_level("L").val if isinstance(beta_elt, FieldElement) else beta_elt
        if self._fn is not None:
            return self._fn(aval, bval)
        return ev_total(self.generator, aval, bval) == 0

    def grid_member(self, a_exp: int, sig_exp: int) -> bool:
        """Membership of (a^a_exp, sigma^sig_exp(beta))."""
        t = self.tower
        key = (a_exp % t.ell, sig_exp % t.m)
        if key not in self._grid_cache:
            aval = t.L.pow(self.a.in_level("L").val, key[0])
            bval = t.sigma(self.beta.in_level("L").val, key[1])
            self._grid_cache[key] = self.membership(aval, bval)
        return self._grid_cache[key]

    def grid_table(self):
        """The full ell x m membership table."""
        t = self.tower
        return [
            [self.grid_member(i, j) for j in range(t.m)] for i in range(t.ell)
        ]


@dataclass(frozen=True)
class BoundParams:
    kind: str  # "bch" | "ht" | "roos"
    b: int
    delta: int
    t: int | None = None  # bch step
    r: int = 0
    t1: int | None = None  # ht
    t2: int | None = None  # ht
    s: int | None = None  # roos
    ks: tuple | None = None  # roos offsets k_0 < ... < k_r

    def as_dict(self):
        d = {"kind": self.kind, "b": self.b, "delta": self.delta, "r": self.r}
        for name in ("t", "t1", "t2", "s"):
            v = getattr(self, name)
            if v is not None:
                d[name] = v
        if self.ks is not None:
            d["ks"] = list(self.ks)
        return d


@dataclass(frozen=True)
class BoundCertificate:
    params: BoundParams
    grid: tuple  # checked (a_exp, sigma_exp) pairs, reduced
    bound: int
    code_id: str
    tower: dict = dfield(default_factory=dict)

    def as_dict(self):
        return {
            "kind": self.params.kind,
            "params": self.params.as_dict(),
            "grid": [list(p) for p in self.grid],
            "bound": self.bound,
            "code_id": self.code_id,
            "tower": self.tower,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)


def _require_square(t: FieldTower):
    if t.N != t.m:
        raise PreconditionViolated("bound checkers require N = m")


def _emit(D: DefiningSetView, p: BoundParams, pairs, bound, code_id="") -> BoundCertificate:
    t = D.tower
    reduced = []
    for ae, se in pairs:
        key = (ae % t.ell, se % t.m)
        if not D.grid_member(*key):
            raise GridNotContained(key)
        reduced.append(key)
    # The theorems count a *set* of evaluation pairs: when ell and m share a
    # factor the exponent patterns can revisit the same reduced pair, which
    # would inflate the bound without adding a vanishing condition.
    if len(set(reduced)) != len(reduced):
        raise PreconditionViolated("evaluation pairs must be pairwise distinct")
    return BoundCertificate(p, tuple(reduced), bound, code_id, t.describe())


def bch_check(D: DefiningSetView, p: BoundParams, code_id="") -> BoundCertificate:
    t = D.tower
    _require_square(t)
    if p.delta < 1:
        raise PreconditionViolated("delta >= 1")
    if p.t is None or gcd(t.n, p.t) != 1:
        raise PreconditionViolated("gcd(n, t) = 1")
    pairs = [(p.b + i * p.t, i * p.t) for i in range(p.delta - 1)]
    return _emit(D, p, pairs, p.delta, code_id)


def roos_check(D: DefiningSetView, p: BoundParams, code_id="") -> BoundCertificate:
    t = D.tower
    _require_square(t)
    ks = p.ks
    if p.s is None or gcd(t.n, p.s) != 1:
        raise PreconditionViolated("gcd(n, s) = 1")
    if ks is None or len(ks) != p.r + 1:
        raise PreconditionViolated("k-list length must be r + 1")
    if any(ks[i] >= ks[i + 1] for i in range(len(ks) - 1)):
        raise PreconditionViolated("k-list must be strictly increasing")
    if ks[-1] - ks[0] > p.delta + p.r - 2:
        raise PreconditionViolated("k_r - k_0 <= delta + r - 2")
    if p.delta < 2 and p.r > 0:
        raise PreconditionViolated("delta >= 2 when r > 0")
    if p.delta < 1:
        raise PreconditionViolated("delta >= 1")
    pairs = [
        (p.b + p.s * i + k, p.s * i + k)
        for i in range(p.delta - 1)
        for k in ks
    ]
    return _emit(D, p, pairs, p.delta + p.r, code_id)


def ht_check(D: DefiningSetView, p: BoundParams, code_id="") -> BoundCertificate:
    t = D.tower
    _require_square(t)
    if p.t1 is None or gcd(t.n, p.t1) != 1:
        raise PreconditionViolated("gcd(n, t1) = 1")
    if p.t2 is None or gcd(t.n, p.t2) >= p.delta:
        raise PreconditionViolated("gcd(n, t2) < delta")
    if p.delta < 2 and p.r > 0:
        raise PreconditionViolated("delta >= 2 when r > 0")
    if p.delta < 1:
        raise PreconditionViolated("delta >= 1")
    pairs = [
        (p.b + i * p.t1 + s * p.t2, i * p.t1 + s * p.t2)
        for i in range(p.delta - 1)
        for s in range(p.r + 1)
    ]
    return _emit(D, p, pairs, p.delta + p.r, code_id)


CHECKERS = {"bch": bch_check, "ht": ht_check, "roos": roos_check}


@dataclass(frozen=True)
class SearchLimits:
    delta_max: int | None = None  # default n
    r_max: int | None = None  # default n


def _units(n):
    return [u for u in range(1, n) if gcd(n, u) == 1]


def best_bound_search(D: DefiningSetView, limits: SearchLimits = SearchLimits(),
                      code_id="") -> BoundCertificate:
    """Exhaustive scan over the three certificate families within caps.

    Ties break by kind order bch < ht < roos, then by the lexicographically
    smallest parameter tuple.  Bound 1 (empty BCH grid) is always available.
    """
    t = D.tower
    _require_square(t)
    if D.generator is not None and D.generator.is_zero():
        raise ZeroCode("the zero code has no meaningful bound certificate")
    n = t.n
    dmax = n if limits.delta_max is None else limits.delta_max
    rmax = n if limits.r_max is None else limits.r_max
    units = _units(n)
    best = None  # (bound, kind_idx, param_sort_key, BoundParams)

    def consider(bound, kind_idx, params):
        nonlocal best
        if best is None or bound > best[0] or (
            bound == best[0] and (kind_idx, params_sort_key(params)) < (best[1], best[2])
        ):
            best = (bound, kind_idx, params_sort_key(params), params)

    def params_sort_key(p: BoundParams):
        return (
            p.b,
            p.delta,
            p.t if p.t is not None else -1,
            p.t1 if p.t1 is not None else -1,
            p.t2 if p.t2 is not None else -1,
            p.s if p.s is not None else -1,
            p.ks if p.ks is not None else (),
        )

    # Everything below tracks pairs through the exponent e: with the grid
    # pair at ((b + e) mod ell, e mod m), two exponents hit the same pair
    # exactly when they agree modulo lcm(ell, m).  Membership and pairwise
    # distinctness are therefore lookups on e mod n and e mod lcm.
    lc = (t.ell * t.m) // gcd(t.ell, t.m)

    consider(1, 0, BoundParams("bch", 0, 1, t=1))
    for b in range(n):
        memb = [D.grid_member(b + e, e) for e in range(n)]

        # bch: grow the progression while new pairs are members and fresh
        for step in units:
            seen = set()
            delta = 1
            while delta - 1 <= dmax - 2:
                e = ((delta - 1) * step) % n
                if not memb[e] or e % lc in seen:
                    break
                seen.add(e % lc)
                delta += 1
            if delta >= 2:
                consider(delta, 0, BoundParams("bch", b, delta, t=step))

        for step in units:
            for delta in range(2, dmax + 1):
                base = [(step * i) % n for i in range(delta - 1)]
                base_res = {e % lc for e in base}
                if not all(memb[e] for e in base) or len(base_res) != delta - 1:
                    continue
                good = [
                    k for k in range(n)
                    if all(memb[(e + k) % n] for e in base)
                ]
                if 0 not in good:
                    continue

                # ht: extend by columns k = s*t2 while fresh and member
                for t2 in range(1, n):
                    if gcd(n, t2) >= delta:
                        continue
                    seen = set(base_res)
                    r = 0
                    while r + 1 <= rmax:
                        k = ((r + 1) * t2) % n
                        new = {(e + k) % lc for e in base}
                        if k not in good or len(new) != delta - 1 or (seen & new):
                            break
                        seen |= new
                        r += 1
                    if r >= 1:
                        consider(
                            delta + r, 1,
                            BoundParams("ht", b, delta, r=r, t1=step, t2=t2),
                        )

                # roos: all offset subsets {0} | S of good offsets, with the
                # window constraint and pairwise-fresh pair residues
                pos = [k for k in good if k != 0]
                for mask in range(1 << len(pos)):
                    ks = [0] + [pos[i] for i in range(len(pos)) if mask >> i & 1]
                    r = len(ks) - 1
                    if r < 1 or r > rmax:
                        continue
                    if ks[-1] - ks[0] > delta + r - 2:
                        continue
                    res = {
                        (e + k) % lc for e in base for k in ks
                    }
                    if len(res) != (delta - 1) * (r + 1):
                        continue
                    consider(
                        delta + r, 2,
                        BoundParams("roos", b, delta, r=r, s=step, ks=tuple(ks)),
                    )

    params = best[3]
    return CHECKERS[params.kind](D, params, code_id)


# -- linearized Reed-Solomon rank oracles -----------------------------------


def lrs_generator_matrix(t: FieldTower, a, beta, b: int, k: int):
    """The k x n block matrix (D_0 | ... | D_{ell-1}) over L with
    D_i[row][col] = sigma^{row+col}(beta) * a^{(b+row)*i}."""
    aval = a.in_level("L").val if isinstance(a, FieldElement) else a
    bval = beta.in_level("L").val if isinstance(beta, FieldElement) else beta
    if t.L.pow(aval, t.ell) != 1 or (t.ell > 1 and t.L.mult_order(aval) != t.ell):
        raise NotPrimitive("a must be a primitive ell-th root of unity")
    if not is_normal(t, bval):
        raise NotNormal("beta must be normal for L/K")
    if not 1 <= k <= t.n:
        raise PreconditionViolated("1 <= k <= n")
    L = t.L
    rows = []
    for row in range(k):
        out = []
        for i in range(t.ell):
            scale = L.pow(aval, (b + row) * i)
            for col in range(t.m):
                out.append(L.mul(t.sigma(bval, (row + col) % t.m), scale))
        rows.append(out)
    return rows


def selection_rank_oracle(t: FieldTower, a, beta, selections, k_list, s: int,
                          i: int, b: int = 0) -> int:
    """Exact rank over L of the stacked column-selection matrix A_i.

    `selections` picks, per block, indices into the conjugate basis
    {beta, sigma(beta), ..., sigma^{m-1}(beta)} scaled by a^{b*block}; the
    stacked matrix twists row group u by sigma^{u*s} and scales block `blk`
    by a^{blk*u*s}.
    """
    aval = a.in_level("L").val if isinstance(a, FieldElement) else a
    bval = beta.in_level("L").val if isinstance(beta, FieldElement) else beta
    L = t.L
    if len(selections) != t.ell:
        raise PreconditionViolated("one selection list per block")
    total = sum(len(sel) for sel in selections)
    r = len(k_list) - 1
    t_steps = total - r
    if t_steps < 1:
        raise SelectionTooSmall(f"need more than r = {r} selected columns")
    if any(k_list[j] >= k_list[j + 1] for j in range(r)):
        raise PreconditionViolated("k-list must be strictly increasing")
    if k_list[-1] - k_list[0] > t_steps + r - 1:
        raise PreconditionViolated("k_r - k_0 <= t + r - 1")
    if gcd(s, t.n) != 1:
        raise PreconditionViolated("gcd(s, ell*m) = 1")
    if not 0 <= i <= t_steps - 1:
        raise PreconditionViolated("0 <= i <= t - 1")
    if t.ell % t.p == 0 or gcd(t.ell, t.m) != 1:
        raise PreconditionViolated("ell coprime with char and with m")
    rows = []
    for u in range(i + 1):
        for k in k_list:
            row = []
            for blk, sel in enumerate(selections):
                for idx in sel:
                    alpha = L.mul(t.sigma(bval, idx), L.pow(aval, b * blk))
                    entry = L.mul(t.sigma(alpha, k), L.pow(aval, k * blk))
                    entry = L.mul(t.sigma(entry, u * s), L.pow(aval, blk * u * s))
                    row.append(entry)
            rows.append(row)
    return linalg.rank(rows, L)
