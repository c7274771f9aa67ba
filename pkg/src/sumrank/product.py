"""Tensor products of a cyclic code and a skew-cyclic code.

The product of an [ell, k1] cyclic code (Hamming metric) with an [N, k2]
skew-cyclic code (rank metric) is a cyclic-skew-cyclic code of length ell*N
with partition (N, ..., N).  Its sum-rank distance factors as d_H * d_R, its
generator is f1(x) * f2(z), and when f1 has coefficients in E its defining
set is the union-of-slices of the factors' defining sets, which feeds the
product variants of the Roos and Hartmann-Tzeng bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .bivar import BivarPoly
from .bounds import CHECKERS, BoundParams, DefiningSetView
from .codes import LinearCode, Partition, min_distance_bruteforce
from .errors import (
    CharacteristicDividesEll,
    FieldMismatch,
    GeneratorNotOverE,
    LengthMismatch,
    NotADivisor,
    PreconditionViolated,
)
from .poly import divides, trim, xl_minus_one
from .skew import SkewPoly, right_divides, sigma_eval
from .tower import FieldTower


def tensor_vector(tower: FieldTower, u, v, level="F"):
    """(u_0*v | u_1*v | ... | u_{ell-1}*v)."""
    gf = tower.gf(level)
    if not u or not v:
        raise LengthMismatch("factors must be nonempty vectors")
    return tuple(gf.mul(a, b) for a in u for b in v)


@dataclass(frozen=True)
class ProductCode:
    C1: LinearCode  # [ell, k1] cyclic, Hamming partition
    C2: LinearCode  # [N, k2] skew-cyclic, rank partition
    code: LinearCode  # length ell*N, partition (N, ..., N)
    f1: tuple | None = None  # generator of C1 (low-first coefficients)
    f2: SkewPoly | None = None  # generator of C2

    @property
    def k1(self):
        return self.C1.k

    @property
    def k2(self):
        return self.C2.k

    def matrix_view(self, cw):
        """A length-ell*N codeword as an ell x N matrix: columns lie in C1,
        rows lie in C2."""
        N = self.C2.n
        ell = self.C1.n
        if len(cw) != ell * N:
            raise LengthMismatch("codeword does not match the factor lengths")
        return tuple(tuple(cw[i * N + j] for j in range(N)) for i in range(ell))


def tensor_code(C1: LinearCode, C2: LinearCode, f1=None, f2=None) -> ProductCode:
    if C1.tower != C2.tower or C1.level != C2.level:
        raise FieldMismatch("factors must live over the same field")
    t = C1.tower
    ell, N = C1.n, C2.n
    rows = [list(tensor_vector(t, u, v, C1.level)) for u in C1.G for v in C2.G]
    part = Partition.equal(ell, N)
    code = LinearCode(t, rows, part, C1.level)
    return ProductCode(C1, C2, code, f1, f2)


def cyclic_code_from_poly(t: FieldTower, f1, level="F") -> LinearCode:
    """The [ell, ell - deg f1] cyclic code generated by f1 | x^ell - 1."""
    gf = t.gf(level)
    f1 = trim(f1)
    if not divides(f1, xl_minus_one(t.ell, gf), gf):
        raise NotADivisor("f1 must divide x^ell - 1")
    ell = t.ell
    rows = []
    for i in range(ell):
        row = [0] * ell
        for j, c in enumerate(f1):
            row[(i + j) % ell] = gf.add(row[(i + j) % ell], c)
        rows.append(row)
    return LinearCode(t, rows, Partition.hamming(ell), level)


def skew_code_from_poly(t: FieldTower, f2: SkewPoly) -> LinearCode:
    """The [N, N - deg f2] skew-cyclic code generated by f2 | z^N - 1."""
    if not right_divides(f2, SkewPoly.z_pow_minus_one(t, t.N, f2.level)):
        raise NotADivisor("f2 must be a right divisor of z^N - 1")
    gf = t.gf(f2.level)
    N = t.N
    rows = []
    for i in range(N):
        # z^i * f2 reduced mod z^N - 1; z^i twists the coefficients
        row = [0] * N
        for j, c in enumerate(f2.coeffs):
            pos = (i + j) % N
            row[pos] = gf.add(row[pos], t.twist(f2.level, c, i))
        rows.append(row)
    return LinearCode(t, rows, Partition.rank(N), f2.level)


def product_generator_poly(t: FieldTower, f1, f2: SkewPoly, level="F") -> BivarPoly:
    """g = f1(x) * f2(z) in the bivariate quotient ring."""
    if t.ell % t.p == 0:
        raise CharacteristicDividesEll(f"char {t.p} divides ell = {t.ell}")
    gf = t.gf(level)
    f1 = trim(f1)
    if not divides(f1, xl_minus_one(t.ell, gf), gf):
        raise NotADivisor("f1 must divide x^ell - 1")
    if not right_divides(f2, SkewPoly.z_pow_minus_one(t, t.N, level)):
        raise NotADivisor("f2 must be a right divisor of z^N - 1")
    grid = [[0] * t.N for _ in range(t.ell)]
    for i, a in enumerate(f1):
        for j, b in enumerate(f2.coeffs):
            if a and b:
                grid[i % t.ell][j % t.N] = gf.add(
                    grid[i % t.ell][j % t.N], gf.mul(a, b)
                )
    return BivarPoly.from_lists(t, level, grid)


def _coeffs_over_E(t: FieldTower, coeffs, level="F") -> bool:
    e_in_f = {t.lift(v, "E", level) for v in range(t.E.order)}
    return all(c in e_in_f for c in coeffs)


def product_defining_set(t: FieldTower, f1, f2: SkewPoly, level="F"):
    """Membership predicate on L-encodings: (a, beta) is a member iff
    f1(a) = 0 or the sigma-evaluation of f2 at beta vanishes."""
    f1 = trim(f1)
    if not _coeffs_over_E(t, f1, level):
        raise GeneratorNotOverE("f1 must have coefficients in E")
    L = t.L
    f1_L = [t.lift(c, level, "L") for c in f1]
    f2_L = f2.lift_to_L()

    def member(aval: int, bval: int) -> bool:
        return L.poly_eval(f1_L, aval) == 0 or sigma_eval(f2_L, bval) == 0

    return member


def product_code_from_polys(t: FieldTower, f1, f2: SkewPoly, level="F") -> ProductCode:
    C1 = cyclic_code_from_poly(t, f1, level)
    C2 = skew_code_from_poly(t, f2)
    return tensor_code(C1, C2, trim(f1), f2)


def factor_distances(P: ProductCode, budget=None):
    """(d_H(C1), d_R(C2)) by brute force."""
    dH = min_distance_bruteforce(P.C1, metric="hamming", budget=budget)
    dR = min_distance_bruteforce(P.C2, metric="rank", budget=budget)
    return dH, dR


def product_bound(P: ProductCode, kind: str, p: BoundParams, budget=None):
    """Certify the product grid containment and convert the bound delta+r
    into lower bounds on the factors' distances."""
    if kind not in ("roos", "ht"):
        raise PreconditionViolated("product bounds exist for roos and ht only")
    t = P.code.tower
    if P.f1 is None or P.f2 is None:
        raise PreconditionViolated("product bounds need the generator polynomials")
    member = product_defining_set(t, P.f1, P.f2, P.code.level)
    D = DefiningSetView.from_predicate(t, member)
    cert = CHECKERS[kind](D, p, P.code.code_id())
    dH, dR = factor_distances(P, budget)
    return {
        "certificate": cert,
        "bound": cert.bound,
        "dH_lower": ceil(cert.bound / dR),
        "dR_lower": ceil(cert.bound / dH),
        "dH": dH,
        "dR": dR,
    }


def corpus_f1(t: FieldTower, level="F"):
    """All divisors of x^ell - 1 over E, lifted to the working field."""
    from .poly import monic_divisors

    divs = monic_divisors(t.ell, t.E)
    return [tuple(t.lift(c, "E", level) for c in d) for d in divs]


def corpus_f2(t: FieldTower, level="F"):
    """All monic right divisors of z^N - 1, by exhaustive scan."""
    import itertools

    gf = t.gf(level)
    zN1 = SkewPoly.z_pow_minus_one(t, t.N, level)
    out = []
    for d in range(t.N + 1):
        for lower in itertools.product(range(gf.order), repeat=d):
            f = SkewPoly(t, level, tuple(lower) + (1,))
            if right_divides(f, zN1):
                out.append(f)
    return out
