"""A small Buchberger engine over exact fields.

Polynomials are dicts mapping exponent tuples to nonzero field elements; the
engine is parameterized by a term order object exposing a sort ``key``.  The
base order is degrevlex; intersections use a block order with one auxiliary
variable eliminated first, and no lex bases are computed anywhere.

Pair processing uses the normal selection strategy with the Gebauer-Moeller
update (product and chain criteria).  Reduced bases are monic, pairwise
tail-reduced, and sorted ascending by leading term, so equal ideals yield
identical bases.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .monomials import MonomialIdeal, RingContext, minimalize
from .scalars import FieldSpec, strip_content


class DegRevLex:
    """Degree first; ties broken against the last differing exponent."""

    __slots__ = ("dim",)

    def __init__(self, dim):
        self.dim = dim

    def key(self, e):
        return (sum(e), tuple(-x for x in reversed(e)))

    def negkey(self, e):
        """Order-reversing key, so a min-heap pops the leading term first."""
        return (-sum(e), tuple(reversed(e)))

    def __eq__(self, other):
        return type(other) is DegRevLex and other.dim == self.dim

    def __hash__(self):
        return hash(("drl", self.dim))


class EliminationOrder:
    """Block order: the first variable dominates, degrevlex on the rest."""

    __slots__ = ("dim",)

    def __init__(self, dim):
        self.dim = dim  # total number of variables including the block one

    def key(self, e):
        return (e[0], sum(e[1:]), tuple(-x for x in reversed(e[1:])))

    def negkey(self, e):
        return (-e[0], -sum(e[1:]), tuple(reversed(e[1:])))

    def __eq__(self, other):
        return type(other) is EliminationOrder and other.dim == self.dim

    def __hash__(self):
        return hash(("elim", self.dim))


# -- raw polynomial helpers (dict exponent -> coefficient) --------------------

def p_add_scaled(f, g, c, field):
    """f + c*g, in place into a copy of f."""
    out = dict(f)
    for e, a in g.items():
        v = field.add(out.get(e, field.zero()), field.mul(c, a))
        if field.is_zero(v):
            out.pop(e, None)
        else:
            out[e] = v
    return out


def p_mul_term(f, exp, c, field):
    return {tuple(a + b for a, b in zip(e, exp)): field.mul(v, c)
            for e, v in f.items()}


def p_mul(f, g, field):
    out = {}
    for e, a in f.items():
        for e2, b in g.items():
            k = tuple(x + y for x, y in zip(e, e2))
            v = field.add(out.get(k, field.zero()), field.mul(a, b))
            if field.is_zero(v):
                out.pop(k, None)
            else:
                out[k] = v
    return out


def _leading(f, order):
    return max(f, key=order.key)


def _strip(f, field):
    """Primitive rescale over the rationals; identity over finite fields."""
    if field.characteristic or not f:
        return f
    exps = sorted(f, key=lambda e: e)
    coeffs = [f[e] for e in exps]
    strip_content(coeffs)
    return dict(zip(exps, coeffs))


def _monic(f, order, field):
    if not f:
        return f
    c = field.inv(f[_leading(f, order)])
    return {e: field.mul(v, c) for e, v in f.items()}


def normal_form(f, basis, order, field):
    """Remainder of f on division by basis (a Groebner basis for uniqueness).

    The reducer is the first basis element, in ascending leading-term order,
    whose leading term divides the current one.
    """
    prepped = sorted(((g, _leading(g, order)) for g in basis if g),
                     key=lambda t: order.key(t[1]))
    return _normal_form_prepped(f, prepped, order, field)


def _normal_form_prepped(f, prepped, order, field):
    """Reduction against a pre-sorted list of (poly, leading term) pairs.

    Leading terms are tracked in a lazily-deleted heap so each exponent's
    order key is built exactly once; reduction only ever creates terms below
    the cancelled one, so exponents moved to the remainder cannot resurface.
    """
    if field.characteristic == 0:
        return _normal_form_rational(f, prepped, order)
    negkey = order.negkey
    h = dict(f)
    heap = [(negkey(e), e) for e in h]
    heapq.heapify(heap)
    push = heapq.heappush
    remainder = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = h.get(e)
        if c is None:
            continue
        reducer = None
        for g, lg in prepped:
            for a, b in zip(e, lg):
                if a < b:
                    break
            else:
                reducer = (g, lg)
                break
        if reducer is None:
            remainder[e] = c
            del h[e]
            continue
        g, lg = reducer
        factor = field.neg(field.div(c, g[lg]))
        shift = tuple(a - b for a, b in zip(e, lg))
        for eg, cg in g.items():
            e2 = tuple(a + b for a, b in zip(eg, shift))
            old = h.get(e2)
            if old is None:
                v = field.mul(factor, cg)
                if not field.is_zero(v):
                    h[e2] = v
                    push(heap, (negkey(e2), e2))
            else:
                v = field.add(old, field.mul(factor, cg))
                if field.is_zero(v):
                    del h[e2]
                else:
                    h[e2] = v
    return remainder


def _normal_form_rational(f, prepped, order):
    """Fraction-free reduction over the rationals.

    The working polynomial is kept with integer coefficients and a rational
    scale (true value = scale * h); a reduction by g multiplies h through by
    the leading coefficient of g instead of dividing, and the integer content
    is stripped out after every step, which is what keeps the coefficient
    growth polynomial instead of exponential.
    """
    from math import gcd, lcm

    negkey = order.negkey
    int_basis = []
    for g, lg in prepped:
        den = 1
        for c in g.values():
            den = lcm(den, c.denominator)
        gi = {e: int(c * den) for e, c in g.items()}
        int_basis.append((gi, lg, gi[lg]))

    den0 = 1
    for c in f.values():
        den0 = lcm(den0, c.denominator)
    h = {e: int(c * den0) for e, c in f.items()}
    scale = Fraction(1, den0)
    heap = [(negkey(e), e) for e in h]
    heapq.heapify(heap)
    push = heapq.heappush
    remainder = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = h.get(e)
        if c is None:
            continue
        reducer = None
        for gi, lg, lc in int_basis:
            for a, b in zip(e, lg):
                if a < b:
                    break
            else:
                reducer = (gi, lg, lc)
                break
        if reducer is None:
            remainder[e] = scale * c
            del h[e]
            continue
        gi, lg, lc = reducer
        shift = tuple(a - b for a, b in zip(e, lg))
        if lc != 1:
            for k in h:
                h[k] *= lc
            scale /= lc
        for eg, cg in gi.items():
            e2 = tuple(a + b for a, b in zip(eg, shift))
            old = h.get(e2)
            if old is None:
                v = -c * cg
                if v:
                    h[e2] = v
                    push(heap, (negkey(e2), e2))
            else:
                v = old - c * cg
                if v:
                    h[e2] = v
                else:
                    del h[e2]
        if h:
            content = 0
            for v in h.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                for k in h:
                    h[k] //= content
                scale *= content
    return remainder


def _spoly(f, g, lf, lg, order, field):
    """Cross-scaled S-polynomial (a nonzero multiple of the monic one)."""
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    a = p_mul_term(f, sf, g[lg], field)
    b = p_mul_term(g, sg, f[lf], field)
    return p_add_scaled(a, b, field.neg(field.one()), field)


def _gm_update(G, lms, pairs, heap, f, order):
    """Gebauer-Moeller pair update: drop pairs by the chain criterion and
    new pairs with coprime leading terms (product criterion).  Live pairs sit
    in ``pairs``; ``heap`` holds (key, pair) entries with lazy deletion, so
    selection never recomputes order keys."""
    lf = _leading(f, order)
    t = len(G)

    def lcm(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    for (i, j) in list(pairs):
        L = lcm(lms[i], lms[j])
        if divides(lf, L) and L != lcm(lms[i], lf) and L != lcm(lms[j], lf):
            pairs.discard((i, j))
    by_lcm = {}
    for i in range(t):
        by_lcm.setdefault(lcm(lms[i], lf), []).append(i)
    kept = []
    for L in sorted(by_lcm, key=order.key):
        if all(not divides(K, L) for K in kept):
            kept.append(L)
            coprime = any(lcm(lms[i], lf) == tuple(a + b for a, b in zip(lms[i], lf))
                          for i in by_lcm[L])
            if not coprime:
                pair = (min(by_lcm[L]), t)
                pairs.add(pair)
                heapq.heappush(heap, ((order.key(L), pair), pair))
    G.append(f)
    lms.append(lf)


def buchberger(gens, order, field, check=False):
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    G, lms = [], []
    pairs, heap = set(), []
    prepped = []  # (poly, leading term), ascending by leading term
    start = [dict(g) for g in gens if g]
    start.sort(key=lambda g: order.key(_leading(g, order)))

    def admit(f):
        _gm_update(G, lms, pairs, heap, f, order)
        lt = lms[-1]
        k = order.key(lt)
        lo, hi = 0, len(prepped)
        while lo < hi:
            mid = (lo + hi) // 2
            if order.key(prepped[mid][1]) < k:
                lo = mid + 1
            else:
                hi = mid
        prepped.insert(lo, (f, lt))

    for f in start:
        admit(_strip(f, field))
    while pairs:
        while True:
            _, (i, j) = heapq.heappop(heap)
            if (i, j) in pairs:
                break
        pairs.discard((i, j))
        s = _spoly(G[i], G[j], lms[i], lms[j], order, field)
        r = _strip(_normal_form_prepped(s, prepped, order, field), field)
        if r:
            admit(r)
    basis = _reduce_basis(G, order, field)
    if check:
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                s = _spoly(basis[i], basis[j],
                           _leading(basis[i], order), _leading(basis[j], order),
                           order, field)
                assert not normal_form(s, basis, order, field)
    return basis


def _reduce_basis(G, order, field):
    """Minimalize leading terms, tail-reduce, make monic, sort ascending."""
    pairs = sorted(((g, _leading(g, order)) for g in G if g),
                   key=lambda t: order.key(t[1]))
    minimal = []
    for g, lg in pairs:
        if not any(all(a >= b for a, b in zip(lg, lh)) for _, lh in minimal):
            minimal.append((g, lg))
    reduced = []
    for i, (g, _) in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _normal_form_prepped(g, others, order, field)
        reduced.append(_monic(r, order, field))
    reduced.sort(key=lambda g: order.key(_leading(g, order)))
    return reduced


class PolyIdeal:
    """An ideal of polynomials, with cached reduced Groebner bases per order."""

    def __init__(self, ring: RingContext, gens, field: FieldSpec | None = None):
        self.ring = ring
        self.field = field if field is not None else ring.field
        self.gens = [dict(g) for g in gens if g]
        self._gb = {}

    @classmethod
    def from_monomial(cls, ideal: MonomialIdeal, field=None):
        fld = field if field is not None else ideal.ring.field
        self = cls(ideal.ring, [{e: fld.one()} for e in ideal.gens], fld)
        # an antichain of monic monomials is its own reduced basis
        order = self.base_order()
        self._gb[order] = sorted(self.gens, key=lambda g: order.key(next(iter(g))))
        return self

    def base_order(self):
        return DegRevLex(self.ring.dimension)

    def groebner(self, order=None, check=False):
        order = order or self.base_order()
        if order not in self._gb:
            self._gb[order] = buchberger(self.gens, order, self.field, check=check)
        return self._gb[order]

    def _set_groebner(self, order, basis):
        self._gb[order] = basis

    def member(self, f) -> bool:
        order = self.base_order()
        return not normal_form(f, self.groebner(order), order, self.field)

    def equals(self, other: "PolyIdeal") -> bool:
        if self.ring != other.ring or self.field != other.field:
            return False
        return self.groebner() == other.groebner()

    def is_zero(self) -> bool:
        return not self.gens


def intersect_poly(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """I ∩ J by eliminating w from w·I + (1-w)·J.

    The block-order basis elements free of w form a reduced Groebner basis of
    the intersection under degrevlex; it is cached on the result.
    """
    if I.ring != J.ring or I.field != J.field:
        raise ValueError("incompatible ideals")
    if I.is_zero() or J.is_zero():
        return PolyIdeal(I.ring, [], I.field)
    field = I.field
    one = field.one()
    lifted = []
    for f in I.gens:
        lifted.append({(1, *e): c for e, c in f.items()})
    for g in J.gens:
        h = {(0, *e): c for e, c in g.items()}
        for e, c in g.items():
            k = (1, *e)
            v = field.sub(h.get(k, field.zero()), c)
            if field.is_zero(v):
                h.pop(k, None)
            else:
                h[k] = v
        lifted.append(h)
    order = EliminationOrder(I.ring.dimension + 1)
    basis = buchberger(lifted, order, field)
    kept = [{e[1:]: c for e, c in g.items()} for g in basis
            if all(e[0] == 0 for e in g)]
    result = PolyIdeal(I.ring, kept, field)
    result._set_groebner(result.base_order(), kept)
    return result


def divide_exact(g, f, order, field):
    """Quotient g / f for g in (f); nonzero remainder is an internal error."""
    negkey = order.negkey
    lf = _leading(f, order)
    lc_f = f[lf]
    h = dict(g)
    heap = [(negkey(e), e) for e in h]
    heapq.heapify(heap)
    q = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = h.get(e)
        if c is None:
            continue
        if not all(a >= b for a, b in zip(e, lf)):
            raise ArithmeticError("inexact division in colon computation")
        shift = tuple(a - b for a, b in zip(e, lf))
        factor = field.div(c, lc_f)
        q[shift] = factor
        nfactor = field.neg(factor)
        for ef, cf in f.items():
            e2 = tuple(a + b for a, b in zip(ef, shift))
            old = h.get(e2)
            if old is None:
                v = field.mul(nfactor, cf)
                if not field.is_zero(v):
                    h[e2] = v
                    heapq.heappush(heap, (negkey(e2), e2))
            else:
                v = field.add(old, field.mul(nfactor, cf))
                if field.is_zero(v):
                    del h[e2]
                else:
                    h[e2] = v
    return q


def colon_poly(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """Ideal quotient I : J = ∩_f (I ∩ (f)) / f over the generators f of J.

    Generators of J already inside I contribute the unit ideal to the
    intersection and are skipped.
    """
    if J.is_zero():
        raise ZeroDivisionError("colon by zero ideal")
    field = I.field
    order = I.base_order()
    result = None
    for f in J.gens:
        if I.member(f):
            continue
        M = intersect_poly(I, PolyIdeal(I.ring, [f], field))
        quot = PolyIdeal(I.ring, [divide_exact(g, f, order, field) for g in M.gens],
                         field)
        result = quot if result is None else intersect_poly(result, quot)
    if result is None:
        result = PolyIdeal(I.ring, [{(0,) * I.ring.dimension: field.one()}], field)
    return result


def monomial_hull(L: PolyIdeal) -> MonomialIdeal:
    """Smallest monomial ideal containing L: generated by the monomial
    supports of the given generators (independent of the generating set,
    since every term of a combination is divisible by a support monomial)."""
    exps = set()
    for g in L.gens:
        exps.update(g.keys())
    return minimalize(L.ring, exps)


def monomial_part(L: PolyIdeal, witness: MonomialIdeal) -> MonomialIdeal:
    """Largest monomial ideal inside L, for zero-dimensional L.

    ``witness`` must be generated by d pure powers forming a regular sequence
    inside L; linkage through it turns the problem into colon computations:
    the result is witness : hull(witness : L).
    """
    ring = L.ring
    d = ring.dimension
    gens = witness.gens
    if len(gens) != d or any(sum(1 for x in g if x) != 1 for g in gens):
        raise ValueError("witness must be d pure powers")
    field = L.field
    for g in gens:
        if not L.member({g: field.one()}):
            raise ValueError("linkage sequence not inside ideal")
    W = PolyIdeal.from_monomial(witness, field)
    Q = colon_poly(W, L)
    hull = monomial_hull(Q)
    return witness.colon(hull)
