"""Exact coefficient arithmetic over the rationals and over finite fields.

Every scalar is an immutable Python value: a ``Fraction`` in characteristic
zero, or an integer in ``[0, p**e)`` encoding an element of GF(p**e) by its
base-p digit expansion (for ``e == 1`` this is the usual residue in
``[0, p)``).  A :class:`FieldSpec` carries the characteristic and knows how
to add, multiply and invert these encodings, so callers never branch on the
representation themselves.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def canonicalize(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator; (0, d) -> 0/1."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# polynomial helpers over Z/p, used only to build GF(p**e); coefficient lists
# are low-degree first with no trailing zeros

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_rem(res, mod, p)


def _poly_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) > dm:
        c = a[-1] * inv_lead % p
        if c:
            off = len(a) - 1 - dm
            for i, mi in enumerate(mod):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_powmod(a, n, mod, p):
    result = [1]
    base = _poly_rem(a, mod, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f, p):
    """Rabin test: f of degree e is irreducible over GF(p) iff
    x**(p**e) == x mod f and gcd(x**(p**(e/q)) - x, f) = 1 for prime q | e."""
    e = len(f) - 1
    x = [0, 1]
    for q in _prime_factors(e):
        h = _poly_powmod(x, p ** (e // q), f, p)
        g = _poly_gcd(f, _poly_sub(h, x, p), p)
        if len(g) != 1:
            return False
    h = _poly_powmod(x, p ** e, f, p)
    return not _poly_sub(h, x, p)


def _find_irreducible(p: int, e: int):
    """First monic irreducible of degree e over GF(p), scanning the lower
    coefficients in base-p counter order.  Deterministic across runs."""
    if e == 1:
        return [0, 1]
    counter = 1
    while True:
        digits = []
        c = counter
        for _ in range(e):
            digits.append(c % p)
            c //= p
        if c == 0:
            f = digits + [1]
            if _is_irreducible(f, p):
                return f
        counter += 1


class FieldSpec:
    """A coefficient field: the rationals (characteristic 0) or GF(p**e).

    ``characteristic`` is 0 or a word-sized prime, checked by a deterministic
    primality test.  ``degree`` > 1 selects an extension of the prime field;
    extension elements are integers encoding polynomials base p.
    """

    __slots__ = ("characteristic", "degree", "_modulus", "_mod_mask")

    def __init__(self, characteristic: int, degree: int = 1):
        if characteristic < 0 or (characteristic and not is_prime(characteristic)):
            raise ValueError("characteristic must be 0 or prime")
        if degree < 1 or (characteristic == 0 and degree != 1):
            raise ValueError("invalid extension degree")
        if characteristic >= 1 << 63:
            raise ValueError("characteristic must fit in a machine word")
        self.characteristic = characteristic
        self.degree = degree
        self._modulus = None
        self._mod_mask = None
        if characteristic and degree > 1:
            self._modulus = _find_irreducible(characteristic, degree)
            if characteristic == 2:
                self._mod_mask = sum(c << i for i, c in enumerate(self._modulus))

    # -- identity / hashing ------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.characteristic == other.characteristic
                and self.degree == other.degree)

    def __hash__(self):
        return hash((self.characteristic, self.degree))

    def __repr__(self):
        if self.characteristic == 0:
            return "FieldSpec(0)"
        if self.degree == 1:
            return f"FieldSpec({self.characteristic})"
        return f"FieldSpec({self.characteristic}, degree={self.degree})"

    @property
    def order(self):
        """Number of elements, or None for characteristic zero."""
        if self.characteristic == 0:
            return None
        return self.characteristic ** self.degree

    # -- encoding helpers --------------------------------------------------
    def _digits(self, a):
        p = self.characteristic
        out = []
        for _ in range(self.degree):
            out.append(a % p)
            a //= p
        return out

    def _encode(self, digits):
        p = self.characteristic
        v = 0
        for c in reversed(digits):
            v = v * p + c
        return v

    # -- arithmetic ----------------------------------------------------------
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def from_int(self, n: int):
        if self.characteristic == 0:
            return Fraction(n)
        return n % self.characteristic  # prime subfield embedding

    def is_zero(self, a) -> bool:
        return not a

    def add(self, a, b):
        p = self.characteristic
        if p == 0:
            return a + b
        if self.degree == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def neg(self, a):
        p = self.characteristic
        if p == 0:
            return -a
        if self.degree == 1:
            return (-a) % p
        if p == 2:
            return a
        return self._encode([(-x) % p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        p = self.characteristic
        if p == 0:
            return a * b
        if self.degree == 1:
            return a * b % p
        if p == 2:
            return self._gf2_mul(a, b)
        da, db = self._digits(a), self._digits(b)
        prod = _poly_mulmod(da, db, self._modulus, p)
        return self._encode(prod + [0] * (self.degree - len(prod)))

    def _gf2_mul(self, a, b):
        # carryless multiply then reduce by the modulus bitmask
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
        e = self.degree
        mask = self._mod_mask
        for shift in range(r.bit_length() - 1, e - 1, -1):
            if r >> shift & 1:
                r ^= mask << (shift - e)
        return r

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("not invertible")
        p = self.characteristic
        if p == 0:
            return 1 / a
        if self.degree == 1:
            return pow(a, p - 2, p)
        # a**(q-2) by square and multiply; q-1 is the group order
        return self.power(a, p ** self.degree - 2)

    def power(self, a, n: int):
        result = self.one()
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sample_nonzero(self, rng: random.Random):
        """A nonzero element: an integer in [1, 2**20] over the rationals
        (integers only, to bound coefficient growth), uniform otherwise."""
        if self.characteristic == 0:
            return Fraction(rng.randrange(1, (1 << 20) + 1))
        return rng.randrange(1, self.order)


def field_inverse(a, field: FieldSpec):
    """Multiplicative inverse of a nonzero scalar."""
    return field.inv(a)


def sample_nonzero(field: FieldSpec, rng: random.Random):
    return field.sample_nonzero(rng)


def strip_content(coeffs):
    """Scale rational coefficients to a primitive integer vector.

    Returns the multiplier applied, as a Fraction; the input list is scaled
    in place.  Sign is normalized so the first entry is positive.
    """
    if not coeffs:
        return Fraction(1)
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in coeffs:
        num_gcd = gcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
    factor = Fraction(den_lcm, num_gcd)
    if coeffs[0] < 0:
        factor = -factor
    for i, c in enumerate(coeffs):
        coeffs[i] = c * factor
    return factor
