"""Exact arithmetic in small finite fields GF(p^d).

Elements are plain integers in [0, p^d): the base-p digits of an integer are
the coordinates in the polynomial basis {1, g, ..., g^(d-1)}, where g is the
residue class of the variable modulo a deterministically chosen primitive
polynomial.  Multiplication goes through log/antilog tables, so field sizes
are capped at 2^16.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import NotPrime

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(val: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(val % p)
        val //= p
    return out


def _undigits(digs, p: int) -> int:
    val = 0
    for d in reversed(digs):
        val = val * p + d
    return val


class GF:
    """The field GF(p^deg) with a fixed primitive modulus.

    The modulus is the first monic primitive polynomial of degree `deg` in
    the scan order of integer-encoded coefficient vectors, which makes every
    derived object (tables, embeddings, canonical elements) reproducible.
    """

    def __init__(self, p: int, deg: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if deg < 1:
            raise ValueError("degree must be positive")
        order = p**deg
        if order > MAX_ORDER:
            raise ValueError(f"field order {order} exceeds table cap {MAX_ORDER}")
        self.p = p
        self.deg = deg
        self.order = order
        self.modulus = self._find_primitive_modulus()
        self._build_tables()

    # modulus encoded as digit list c_0..c_deg with c_deg = 1
    def _find_primitive_modulus(self):
        p, deg, order = self.p, self.deg, self.order
        for r in range(order):
            mod = _digits(r, p, deg) + [1]
            if self._x_order(mod) == order - 1:
                return mod
        raise AssertionError("no primitive polynomial found")

    def _x_order(self, mod) -> int:
        """Multiplicative order of x modulo `mod`, or 0 if x is not a unit."""
        p, deg, order = self.p, self.deg, self.order
        val = [0] * deg
        val[0] = 1
        for step in range(1, order):
            # multiply by x, reduce by mod
            lead = val[deg - 1]
            val = [0] + val[: deg - 1]
            if lead:
                for i in range(deg):
                    val[i] = (val[i] - lead * mod[i]) % p
            if all(v == 0 for v in val):
                return 0
            if val[0] == 1 and all(v == 0 for v in val[1:]):
                return step
        return 0

    def _build_tables(self):
        p, deg, order = self.p, self.deg, self.order
        mod = self.modulus
        exp = [0] * max(order - 1, 1)
        log = [0] * order
        val = [0] * deg
        val[0] = 1
        for i in range(order - 1):
            enc = _undigits(val, p)
            exp[i] = enc
            log[enc] = i
            lead = val[deg - 1]
            val = [0] + val[: deg - 1]
            if lead:
                for j in range(deg):
                    val[j] = (val[j] - lead * mod[j]) % p
        self.exp = exp
        self.log = log
        self.gen = exp[1] if order > 2 else 1

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da = _digits(a, self.p, self.deg)
        db = _digits(b, self.p, self.deg)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        da = _digits(a, self.p, self.deg)
        return _undigits([(-x) % self.p for x in da], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e != 0 else 1
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def frob(self, a: int, j: int = 1) -> int:
        """The p^j-power Frobenius."""
        if a == 0 or self.order == 2:
            return a
        e = pow(self.p, j % self.deg, self.order - 1)
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of zero")
        n = self.order - 1
        return n // gcd(n, self.log[a])

    # -- polynomial helpers over this field ---------------------------------

    def poly_eval(self, coeffs, a: int) -> int:
        """Evaluate sum(coeffs[i] * y^i) at y = a (Horner)."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, a), c)
        return acc

    def roots(self, coeffs) -> list[int]:
        """All roots of the polynomial in this field, ascending encoding."""
        return [a for a in range(self.order) if self.poly_eval(coeffs, a) == 0]

    def modulus_int(self) -> int:
        return _undigits(self.modulus, self.p)

    def elem_digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.deg)

    def __repr__(self):
        return f"GF({self.p}^{self.deg})"


@lru_cache(maxsize=None)
def field(p: int, deg: int) -> GF:
    return GF(p, deg)


def find_embedding(small: GF, big: GF) -> int:
    """Image of small.gen under the canonical embedding small -> big.

    The image is the smallest (by integer encoding) root in `big` of the
    modulus of `small`, so the embedding is deterministic.
    """
    if small.order == big.order:
        return big.gen if small.order > 2 else 1
    coeffs = [c % big.p for c in small.modulus]
    for a in range(big.order):
        if big.poly_eval(coeffs, a) == 0:
            return a
    raise AssertionError(f"{small} does not embed in {big}")


def embed_elem(small: GF, big: GF, image_of_gen: int, a: int) -> int:
    """Map an element of `small` into `big` along the chosen embedding."""
    digs = small.elem_digits(a)
    acc = 0
    for d in reversed(digs):
        acc = big.add(big.mul(acc, image_of_gen), d)
    return acc
