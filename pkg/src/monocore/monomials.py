"""Exact arithmetic of monomial ideals.

A monomial ideal is stored by its unique minimal generating set: the
antichain, under componentwise divisibility, of a generating set of exponent
vectors.  Generators are kept in a fixed canonical order (ascending total
degree, ties broken by ascending lexicographic comparison) so that equal
ideals have byte-identical generator tuples across runs.

The heavy set operations (minimalization, products, box scans) run on int64
numpy arrays; exponents are validated against 64-bit overflow wherever an
operation scales them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from .scalars import FieldSpec

_MAX_EXP = (1 << 62)  # headroom below int64 so sums of two entries stay exact


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring k[x_1..x_d], optionally with positive variable weights."""

    variable_names: tuple
    field: FieldSpec
    weights: tuple | None = None

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if len(names) < 1:
            raise ValueError("ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if self.weights is not None:
            w = tuple(int(a) for a in self.weights)
            if len(w) != len(names) or any(a < 1 for a in w):
                raise ValueError("weights must be positive, one per variable")
            object.__setattr__(self, "weights", w)

    @property
    def dimension(self) -> int:
        return len(self.variable_names)


def ring(*names, char: int = 65537, weights=None, degree: int = 1) -> RingContext:
    """Convenience constructor: ring('x', 'y', char=0)."""
    return RingContext(tuple(names), FieldSpec(char, degree), weights)


def _canonical_key(e):
    return (sum(e), e)


def _as_array(vecs, d):
    if len(vecs) == 0:
        return np.empty((0, d), dtype=np.int64)
    return np.array(vecs, dtype=np.int64)


def _antichain(arr: np.ndarray):
    """Minimal elements of a set of exponent vectors, as sorted tuples.

    Vectors of equal total degree never divide one another, so after sorting
    by degree each degree slice only needs checking against the kept minimal
    vectors of strictly smaller degree.
    """
    if arr.shape[0] == 0:
        return ()
    arr = np.unique(arr, axis=0)
    deg = arr.sum(axis=1)
    order = np.lexsort(tuple(arr[:, j] for j in range(arr.shape[1] - 1, -1, -1)) + (deg,))
    arr, deg = arr[order], deg[order]
    kept = []
    kept_arr = None
    bounds = np.flatnonzero(np.diff(deg)) + 1
    for grp in np.split(arr, bounds):
        if kept_arr is not None and kept_arr.shape[0]:
            keep_mask = np.ones(grp.shape[0], dtype=bool)
            # chunk the broadcast so grp x kept stays within memory
            step = max(1, (1 << 24) // max(1, kept_arr.shape[0]))
            for i0 in range(0, grp.shape[0], step):
                blk = grp[i0:i0 + step]
                dom = (kept_arr[None, :, :] <= blk[:, None, :]).all(2).any(1)
                keep_mask[i0:i0 + blk.shape[0]] = ~dom
            grp = grp[keep_mask]
        if grp.shape[0]:
            kept.append(grp)
            kept_arr = grp if kept_arr is None else np.concatenate(kept)
    if not kept:
        return ()
    out = np.concatenate(kept)
    return tuple(map(tuple, out.tolist()))


class MonomialIdeal:
    """A monomial ideal, held by its canonical minimal generating antichain."""

    __slots__ = ("ring", "gens", "_arr")

    def __init__(self, ring: RingContext, generators):
        d = ring.dimension
        vecs = []
        for v in generators:
            t = tuple(int(x) for x in v)
            if len(t) != d:
                raise ValueError(f"exponent vector {t} has wrong length for d={d}")
            if any(x < 0 for x in t):
                raise ValueError(f"negative exponent in {t}")
            if any(x >= _MAX_EXP for x in t):
                raise OverflowError("exponent exceeds 64-bit range")
            vecs.append(t)
        self.ring = ring
        self.gens = _antichain(_as_array(vecs, d))
        self._arr = None

    @classmethod
    def _from_antichain(cls, ring, gens_sorted):
        self = cls.__new__(cls)
        self.ring = ring
        self.gens = gens_sorted
        self._arr = None
        return self

    # -- basics -------------------------------------------------------------
    @property
    def arr(self) -> np.ndarray:
        if self._arr is None:
            self._arr = _as_array(self.gens, self.ring.dimension)
        return self._arr

    def is_zero(self) -> bool:
        return len(self.gens) == 0

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __repr__(self):
        names = self.ring.variable_names
        if self.is_zero():
            return "MonomialIdeal(0)"
        return "MonomialIdeal(" + ", ".join(monomial_str(g, names) for g in self.gens) + ")"

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("incompatible rings")

    # -- membership -----------------------------------------------------------
    def contains(self, exponent) -> bool:
        """True iff some minimal generator divides the monomial componentwise."""
        e = tuple(int(x) for x in exponent)
        if len(e) != self.ring.dimension:
            raise ValueError("exponent vector has wrong length")
        if not self.gens:
            return False
        return bool((self.arr <= np.array(e, dtype=np.int64)).all(1).any())

    __contains__ = contains

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """other is a subideal of self."""
        self._check_ring(other)
        if other.is_zero():
            return True
        if self.is_zero():
            return False
        step = max(1, (1 << 24) // max(1, len(self.gens)))
        oarr = other.arr
        for i0 in range(0, oarr.shape[0], step):
            blk = oarr[i0:i0 + step]
            ok = (self.arr[None, :, :] <= blk[:, None, :]).all(2).any(1)
            if not ok.all():
                return False
        return True

    def contains_membership_mask(self, pts: np.ndarray) -> np.ndarray:
        """Vector of membership booleans for an (N, d) array of exponents."""
        if not self.gens:
            return np.zeros(pts.shape[0], dtype=bool)
        out = np.empty(pts.shape[0], dtype=bool)
        step = max(1, (1 << 24) // max(1, len(self.gens)))
        for i0 in range(0, pts.shape[0], step):
            blk = pts[i0:i0 + step]
            out[i0:i0 + blk.shape[0]] = (self.arr[None, :, :] <= blk[:, None, :]).all(2).any(1)
        return out

    # -- lattice operations ----------------------------------------------------
    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        return MonomialIdeal._from_antichain(
            self.ring, _antichain(np.concatenate([self.arr, other.arr])))

    __add__ = sum

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal._from_antichain(self.ring, ())
        a, b = self.arr, other.arr
        if a.size and b.size and int(a.max()) + int(b.max()) >= _MAX_EXP:
            raise OverflowError("exponent overflow in product")
        chunks = []
        step = max(1, (1 << 22) // max(1, b.shape[0]))
        for i0 in range(0, a.shape[0], step):
            blk = a[i0:i0 + step]
            chunks.append((blk[:, None, :] + b[None, :, :]).reshape(-1, a.shape[1]))
        sums = np.concatenate(chunks)
        return MonomialIdeal._from_antichain(self.ring, _antichain(sums))

    __mul__ = product

    def power(self, t: int) -> "MonomialIdeal":
        if t < 0:
            raise ValueError("power requires t >= 0")
        if t == 0:
            return unit_ideal(self.ring)
        result = self
        for _ in range(t - 1):
            result = result.product(self)
        return result

    __pow__ = power

    def bracket_power(self, t: int) -> "MonomialIdeal":
        """Ideal generated by the t-th powers of the minimal generators."""
        if t < 1:
            raise ValueError("bracket power requires t >= 1")
        if self.is_zero():
            return self
        if int(self.arr.max()) * t >= _MAX_EXP:
            raise OverflowError("exponent overflow in bracket power")
        return MonomialIdeal._from_antichain(self.ring, _antichain(self.arr * t))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal._from_antichain(self.ring, ())
        a, b = self.arr, other.arr
        chunks = []
        step = max(1, (1 << 22) // max(1, b.shape[0]))
        for i0 in range(0, a.shape[0], step):
            blk = a[i0:i0 + step]
            chunks.append(np.maximum(blk[:, None, :], b[None, :, :]).reshape(-1, a.shape[1]))
        lcms = np.concatenate(chunks)
        return MonomialIdeal._from_antichain(self.ring, _antichain(lcms))

    __and__ = intersect

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ideal quotient self : other, via per-generator quotients.

        self : (x^u) is generated by {v - min(v, u)}; the quotient by the
        full ideal is the intersection over its generators.
        """
        self._check_ring(other)
        if other.is_zero():
            raise ZeroDivisionError("colon by zero ideal")
        result = None
        for u in other.arr:
            quot = MonomialIdeal._from_antichain(
                self.ring, _antichain(self.arr - np.minimum(self.arr, u)))
            result = quot if result is None else result.intersect(quot)
        return result

    # -- structure --------------------------------------------------------------
    def total_degrees(self):
        return tuple(sum(g) for g in self.gens)

    def is_equigenerated(self) -> bool:
        degs = self.total_degrees()
        return len(set(degs)) <= 1

    def pure_power_exponents(self):
        """(n_1, ..., n_d) with n_i the least pure power of x_i in the ideal."""
        d = self.ring.dimension
        ns = [None] * d
        for g in self.gens:
            support = [i for i, x in enumerate(g) if x]
            if len(support) == 0:
                return (0,) * d  # unit ideal
            if len(support) == 1:
                i = support[0]
                if ns[i] is None or g[i] < ns[i]:
                    ns[i] = g[i]
        if any(n is None for n in ns):
            raise ValueError("not m-primary")
        return tuple(ns)

    def is_zero_dimensional(self) -> bool:
        try:
            self.pure_power_exponents()
            return True
        except ValueError:
            return False


def minimalize(ring: RingContext, raw) -> MonomialIdeal:
    """Canonical ideal from any generating set (the empty set gives 0)."""
    return MonomialIdeal(ring, raw)


def zero_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal._from_antichain(ring, ())


def unit_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal._from_antichain(ring, ((0,) * ring.dimension,))


def maximal_ideal(ring: RingContext) -> MonomialIdeal:
    d = ring.dimension
    return MonomialIdeal(ring, [tuple(1 if j == i else 0 for j in range(d))
                                for i in range(d)])


def pure_power_ideal(ring: RingContext, exponents) -> MonomialIdeal:
    """(x_1^{e_1}, ..., x_d^{e_d})."""
    d = ring.dimension
    e = tuple(int(x) for x in exponents)
    if len(e) != d or any(x < 1 for x in e):
        raise ValueError("need one positive exponent per variable")
    return MonomialIdeal(ring, [tuple(e[i] if j == i else 0 for j in range(d))
                                for i in range(d)])


def principal_ideal(ring: RingContext, exponent) -> MonomialIdeal:
    return MonomialIdeal(ring, [exponent])


def _box_points(bounds):
    """All lattice points of prod [0, b_i], as an (N, d) int64 array."""
    axes = [np.arange(b + 1, dtype=np.int64) for b in bounds]
    grid = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def weighted_at_least(ring: RingContext, n: int) -> MonomialIdeal:
    """Monomials of weighted degree >= n in the weighted subring.

    Exponents are in the subring generators u_i = x_i^{a_i}; entries beyond
    the pure-power threshold ceil(n / a_i) are never minimal.
    """
    if ring.weights is None:
        raise ValueError("ring has no weights")
    if n < 1:
        raise ValueError("n must be >= 1")
    a = np.array(ring.weights, dtype=np.int64)
    bounds = [ceil(n / int(ai)) for ai in a]
    pts = _box_points(bounds)
    pts = pts[pts @ a >= n]
    return MonomialIdeal._from_antichain(ring, _antichain(pts))


def graded_piece(ring: RingContext, n: int) -> MonomialIdeal:
    """Ideal generated by the monomials of weighted degree exactly n."""
    if ring.weights is None:
        raise ValueError("ring has no weights")
    if n < 0:
        return zero_ideal(ring)
    a = np.array(ring.weights, dtype=np.int64)
    bounds = [n // int(ai) for ai in a]
    pts = _box_points(bounds)
    pts = pts[pts @ a == n]
    return MonomialIdeal._from_antichain(ring, _antichain(pts))


def monomial_str(exponent, names) -> str:
    parts = []
    for name, e in zip(names, exponent):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
