"""Closed-form cores and coefficient ideals in low dimension, used as
independent oracles against the general algorithms.

Dimension two: for I = mu (x^n, y^n, {x^{n-k_i} y^{k_i}}) the core is
mu (x^delta, y^delta)^{2n/delta - 1} with delta = gcd(k's, n).

Dimension three handles equigenerated ideals whose mixed generators involve
two variables each; writing a <= b <= c for the per-variable weight gcds
(made pairwise coprime by a flat rescale), the core for a = 1 is the ambient
ideal of the weighted piece S_{>= 3n-b-c} of the subring k[x, y^b, z^c].  A
weighted polynomial ring k[x_1^{a_1}, .., x_d^{a_d}] more generally has
core(S_{>= n}) = S_{>= dn - sum a_i + 1} whenever S_{>= n} is normal; the
hypothesis gates below only accept the cases where normality is a theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import HypothesisError, OracleDisagreementError
from .monomials import (MonomialIdeal, RingContext, maximal_ideal,
                        weighted_at_least)


@dataclass(frozen=True)
class Dim2Shape:
    mu: tuple          # common monomial factor
    n: int
    ks: tuple          # strictly increasing, 0 < k_i < n
    delta: int         # gcd(ks, n)
    ring: RingContext


@dataclass(frozen=True)
class Dim3Shape:
    n: int
    ks: tuple          # y-exponents of the x/y generators, after relabeling
    ls: tuple          # z-exponents of the x/z generators
    ms: tuple          # z-exponents of the y/z generators
    a: int
    b: int
    c: int             # per-variable gcds, a <= b <= c, pairwise coprime
    perm: tuple        # original index of each relabeled variable
    delta: int         # flat-rescale factor divided out of all exponents
    ring: RingContext


def parse_dim2(I: MonomialIdeal):
    """Recognize mu (x^n, y^n, {x^{n-k}y^k}); None when the shape fails."""
    if I.ring.dimension != 2 or I.is_zero() or I.is_unit():
        return None
    if not I.is_equigenerated():
        return None
    mu = tuple(min(g[i] for g in I.gens) for i in range(2))
    core_gens = [tuple(g[i] - mu[i] for i in range(2)) for g in I.gens]
    n = sum(core_gens[0])
    if n == 0:
        return None
    if (n, 0) not in core_gens or (0, n) not in core_gens:
        return None
    ks = sorted(g[1] for g in core_gens if 0 < g[1] < n)
    if len(ks) != len(core_gens) - 2:
        return None
    delta = gcd(n, *ks) if ks else n
    return Dim2Shape(mu, n, tuple(ks), delta, I.ring)


def shape_ideal_dim2(shape: Dim2Shape) -> MonomialIdeal:
    gens = [(shape.n, 0), (0, shape.n)] + [(shape.n - k, k) for k in shape.ks]
    mu = shape.mu
    return MonomialIdeal(shape.ring, [(g[0] + mu[0], g[1] + mu[1]) for g in gens])


def gcd_rescale(I: MonomialIdeal, delta: int) -> MonomialIdeal:
    """Divide every exponent entry by delta (flat base change to the
    subring of delta-th powers)."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    for g in I.gens:
        if any(x % delta for x in g):
            raise HypothesisError(f"exponent {g} not divisible by {delta}")
    return MonomialIdeal(I.ring, [tuple(x // delta for x in g) for g in I.gens])


def core_dim2(shape: Dim2Shape) -> MonomialIdeal:
    """mu (x^delta, y^delta)^{2n/delta - 1}."""
    R = shape.ring
    d_ = shape.delta
    base = MonomialIdeal(R, [(d_, 0), (0, d_)]).power(2 * shape.n // d_ - 1)
    return base.product(MonomialIdeal(R, [shape.mu]))


def fci_dim2(shape: Dim2Shape) -> MonomialIdeal:
    """First coefficient ideal m^n; the closed form is only stated for
    mu = 1 and delta = 1."""
    if any(shape.mu) or shape.delta != 1:
        raise HypothesisError("formula stated only for mu=1, delta=1")
    return maximal_ideal(shape.ring).power(shape.n)


def _subring_to_ambient(ring, weights, perm, sub: MonomialIdeal) -> MonomialIdeal:
    """Map u-exponents of k[x_{perm} weights] back to ambient exponents."""
    gens = []
    for e in sub.gens:
        amb = [0] * len(e)
        for pos, (w, val) in enumerate(zip(weights, e)):
            amb[perm[pos]] = w * val
        gens.append(tuple(amb))
    return MonomialIdeal(ring, gens)


def parse_dim3(I: MonomialIdeal):
    """Recognize (x^n, y^n, z^n, two-variable mixed generators), rescale by
    gcd(a,b,c), and relabel so the per-variable gcds ascend."""
    if I.ring.dimension != 3 or I.is_zero() or I.is_unit():
        return None
    if not I.is_equigenerated():
        return None
    gens = list(I.gens)
    n = sum(gens[0])
    pure = {}
    mixed = []
    for g in gens:
        support = [i for i, x in enumerate(g) if x]
        if len(support) == 1:
            pure[support[0]] = g[support[0]]
        elif len(support) == 2:
            mixed.append(g)
        else:
            return None
    if sorted(pure) != [0, 1, 2] or set(pure.values()) != {n}:
        return None

    def family(i, j):
        # generators x_i^{n-e} x_j^{e}: collect the x_j exponents
        return tuple(sorted(g[j] for g in mixed if g[i] and g[j]))

    ks, ls, ms = family(0, 1), family(0, 2), family(1, 2)
    if len(ks) + len(ls) + len(ms) != len(mixed):
        return None
    a = gcd(n, *ks, *ls) if (ks or ls) else n
    b = gcd(n, *ks, *ms) if (ks or ms) else n
    c = gcd(n, *ls, *ms) if (ls or ms) else n
    delta = gcd(a, gcd(b, c))
    if delta > 1:
        n //= delta
        ks = tuple(k // delta for k in ks)
        ls = tuple(l // delta for l in ls)
        ms = tuple(m // delta for m in ms)
        a, b, c = a // delta, b // delta, c // delta
    order = sorted(range(3), key=lambda i: (a, b, c)[i])
    perm = tuple(order)
    weights = tuple((a, b, c)[i] for i in order)
    # relabeling the variables permutes the three families accordingly:
    # family(i, j) is indexed by the unordered pair {i, j}
    fam = {frozenset((0, 1)): ks, frozenset((0, 2)): ls, frozenset((1, 2)): ms}

    def relabeled(i, j):
        pair = frozenset((perm[i], perm[j]))
        exps = fam[pair]
        # the family stores exponents of the second variable of the pair in
        # ORIGINAL labels; flip when the relabeling swaps the pair's roles
        if perm[i] < perm[j]:
            return exps
        return tuple(sorted(n - e for e in exps))

    return Dim3Shape(n, relabeled(0, 1), relabeled(0, 2), relabeled(1, 2),
                     weights[0], weights[1], weights[2], perm, delta, I.ring)


def shape_ideal_dim3(shape: Dim3Shape) -> MonomialIdeal:
    """The (rescaled, relabeled) ideal the shape describes, in original
    variables and original scale."""
    n = shape.n
    gens = [(n, 0, 0), (0, n, 0), (0, 0, n)]
    gens += [(n - k, k, 0) for k in shape.ks]
    gens += [(n - l, 0, l) for l in shape.ls]
    gens += [(0, n - m, m) for m in shape.ms]
    out = []
    for g in gens:
        amb = [0, 0, 0]
        for pos in range(3):
            amb[shape.perm[pos]] = g[pos] * shape.delta
        out.append(tuple(amb))
    return MonomialIdeal(shape.ring, out)


def _undo(shape: Dim3Shape, sub_ideal: MonomialIdeal, weights) -> MonomialIdeal:
    amb = _subring_to_ambient(shape.ring, weights, shape.perm, sub_ideal)
    if shape.delta > 1:
        amb = MonomialIdeal(shape.ring, [tuple(x * shape.delta for x in g)
                                         for g in amb.gens])
    return amb


def core_dim3(shape: Dim3Shape) -> MonomialIdeal:
    """Ambient ideal of S_{>= 3n-b-c} for the subring S = k[x, y^b, z^c].

    Only valid for a = 1: with a = 2 the subring-piece value can be a proper
    subideal of the core (e.g. n=30 with families (24), (20), (15), where
    S_{>=81} of k[x^2,y^3,z^5] falls strictly inside).
    """
    if shape.a != 1:
        raise HypothesisError(
            "closed form requires smallest variable gcd a = 1; for a > 1 the "
            "subring piece can be strictly smaller than the core - use the "
            "general algorithm")
    n, b, c = shape.n, shape.b, shape.c
    weights = (1, b, c)
    wring = RingContext(("u1", "u2", "u3"), shape.ring.field, weights)
    sub = weighted_at_least(wring, 3 * n - b - c)
    result = _undo(shape, sub, weights)
    if b == 1:
        q = 3 * n // c - 1
        alt = _coreab1_value(shape, q)
        if alt != result:
            raise OracleDisagreementError("dimension-3 closed forms disagree")
        if c == 1 and shape.delta == 1:
            # with a rescale the value is the dilated power, already covered
            m = maximal_ideal(shape.ring)
            if result != m.power(3 * n - 2):
                raise OracleDisagreementError("dimension-3 closed forms disagree")
    return result


def _coreab1_value(shape: Dim3Shape, q: int) -> MonomialIdeal:
    """(z^{qc}) + sum_i z^{ic} (x,y)^{(q-i)c-1} in relabeled coordinates."""
    c = shape.c
    gens = []

    def add(xy_power, z_power):
        for u in range(xy_power + 1):
            gens.append((u, xy_power - u, z_power))

    add(0, q * c)
    for i in range(q):
        add((q - i) * c - 1, i * c)
    out = []
    for g in gens:
        amb = [0, 0, 0]
        for pos in range(3):
            amb[shape.perm[pos]] = g[pos] * shape.delta
        out.append(tuple(amb))
    return MonomialIdeal(shape.ring, out)


def fci_dim3(shape: Dim3Shape) -> MonomialIdeal:
    """First coefficient ideal: the ambient ideal of S_{>= n} (a = 1)."""
    if shape.a != 1:
        raise HypothesisError("closed form requires smallest variable gcd a = 1")
    n, b, c = shape.n, shape.b, shape.c
    weights = (1, b, c)
    wring = RingContext(("u1", "u2", "u3"), shape.ring.field, weights)
    sub = weighted_at_least(wring, n)
    result = _undo(shape, sub, weights)
    if b == 1:
        base = maximal_two_var_power(shape, c)
        if base.power(n // c) != result:
            raise OracleDisagreementError("dimension-3 coefficient forms disagree")
    return result


def maximal_two_var_power(shape: Dim3Shape, c: int) -> MonomialIdeal:
    """((x,y)^c, z^c) in relabeled coordinates, mapped back."""
    gens = [(u, c - u, 0) for u in range(c + 1)] + [(0, 0, c)]
    out = []
    for g in gens:
        amb = [0, 0, 0]
        for pos in range(3):
            amb[shape.perm[pos]] = g[pos] * shape.delta
        out.append(tuple(amb))
    return MonomialIdeal(shape.ring, out)


@dataclass
class WeightedCoreResult:
    ideal: MonomialIdeal          # exponents in the subring generators u_i
    threshold: int                # the ideal is S_{>= threshold}
    gate: str                     # which hypothesis admitted the computation
    normality_unverified: bool = False


def weighted_core(ring: RingContext, n: int, probe_normality: int | None = None) -> WeightedCoreResult:
    """core(S_{>= n}) = S_{>= dn - sum a_i + 1} for weighted rings, gated by
    a proof of normality of S_{>= n}.

    Accepted gates: n/lcm(weights) >= d-1; or d = 3 with pairwise coprime
    weights.  A finite normality probe up to ``probe_normality`` may be
    requested instead, and is flagged as unverified beyond that bound.
    """
    if ring.weights is None:
        raise ValueError("ring has no weights")
    a = ring.weights
    d = len(a)
    L = lcm(*a) if d > 1 else a[0]
    if n % L:
        raise HypothesisError(f"n = {n} is not a multiple of lcm(weights) = {L}")
    threshold = d * n - sum(a) + 1
    gate = None
    if n // L >= d - 1:
        gate = "power-threshold"
    elif d == 3 and all(gcd(a[i], a[j]) == 1 for i in range(3) for j in range(i + 1, 3)):
        gate = "pairwise-coprime"
    unverified = False
    if gate is None and probe_normality is not None:
        from .newton import is_normal_up_to
        if is_normal_up_to(weighted_at_least(ring, n), probe_normality):
            gate = f"probed-normality<= {probe_normality}"
            unverified = True
    if gate is None:
        raise HypothesisError(
            "normality hypothesis not established for these weights; the "
            "closed-form value can then undershoot the true core (e.g. for "
            "weights (30,35,42) and n=210 the threshold-524 piece is a proper "
            "subideal) - compute the core with the general algorithm instead")
    return WeightedCoreResult(weighted_at_least(ring, threshold), threshold, gate,
                              unverified)


def decompose(t: int, n: int, ks, require_alpha_nonneg: bool = False):
    """Write t = alpha n + sum beta_i k_i with beta_i >= 0 and
    sum beta_i < n/delta, delta = gcd(ks, n); delta must divide t.

    Searches beta tuples in lexicographic order and returns the first hit,
    so the decomposition choice is stable across runs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ks = tuple(int(k) for k in ks)
    if any(k < 0 for k in ks):
        raise ValueError("ks must be nonnegative")
    delta = gcd(n, *ks) if ks else n
    if t % delta:
        raise HypothesisError(f"gcd {delta} does not divide t = {t}")
    bound = n // delta  # sum beta_i < n/delta

    def search(prefix, remaining_sum):
        idx = len(prefix)
        if idx == len(ks):
            rest = t - sum(b * k for b, k in zip(prefix, ks))
            if rest % n == 0:
                alpha = rest // n
                if alpha >= 0 or not require_alpha_nonneg:
                    return alpha, tuple(prefix)
            return None
        for b in range(remaining_sum + 1):
            hit = search(prefix + [b], remaining_sum - b)
            if hit is not None:
                return hit
        return None

    hit = search([], bound - 1)
    if hit is None:
        if require_alpha_nonneg:
            raise HypothesisError("t too small for a nonnegative decomposition")
        raise OracleDisagreementError("decomposition guaranteed to exist was not found")
    return hit
