"""Newton-polyhedron geometry for zero-dimensional monomial ideals.

The polyhedron NP(I) = conv(generators) + R^d_{>=0} is kept in V-description;
membership and strict-interior queries are exact rational linear programs
(dense two-phase simplex with Bland's rule, so termination is guaranteed and
every certificate is re-verified against the constraints before returning).

Integral closures and adjoints are lattice scans over the pure-power box.
Membership of a box is upward closed (the recession cone is the full
orthant), so points dominated by an already-found member are skipped; only
the staircase gap below the polyhedron and the minimal members themselves
ever reach the LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .monomials import MonomialIdeal, _antichain, _box_points

LE, GE, EQ = "<=", ">=", "="


@dataclass
class LpResult:
    status: str                 # "optimal" | "infeasible" | "unbounded"
    optimum: Fraction | None
    certificate: tuple | None   # values of the original variables


class LpError(Exception):
    pass


def lp_solve(num_vars, constraints, objective, maximize=True) -> LpResult:
    """Exact simplex over the rationals for  max/min c.x  s.t. rows, x >= 0.

    ``constraints`` is a list of (coefficients, relation, rhs) with relation
    one of "<=", ">=", "=".  Bland's rule throughout (entering: lowest
    eligible index; leaving: lowest basic index among minimal ratios), which
    rules out cycling.  The optimal vertex is plugged back into every
    constraint before it is returned.
    """
    c_obj = [Fraction(x) for x in objective]
    if not maximize:
        c_obj = [-x for x in c_obj]
    rows = []
    for coeffs, rel, rhs in constraints:
        coeffs = [Fraction(x) for x in coeffs]
        rhs = Fraction(rhs)
        if len(coeffs) != num_vars:
            raise LpError("constraint width mismatch")
        if rhs < 0:
            coeffs = [-x for x in coeffs]
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        rows.append((coeffs, rel, rhs))

    m = len(rows)
    n_slack = sum(1 for _, rel, _ in rows if rel != EQ)
    n_art = sum(1 for _, rel, _ in rows if rel != LE)
    n = num_vars + n_slack + n_art
    # tableau: m constraint rows, columns [vars | slacks | artificials | rhs]
    T = [[Fraction(0)] * (n + 1) for _ in range(m)]
    basis = [None] * m
    si = num_vars
    ai = num_vars + n_slack
    art_cols = []
    for i, (coeffs, rel, rhs) in enumerate(rows):
        for j, v in enumerate(coeffs):
            T[i][j] = v
        T[i][n] = rhs
        if rel == LE:
            T[i][si] = Fraction(1)
            basis[i] = si
            si += 1
        elif rel == GE:
            T[i][si] = Fraction(-1)
            si += 1
            T[i][ai] = Fraction(1)
            basis[i] = ai
            art_cols.append(ai)
            ai += 1
        else:
            T[i][ai] = Fraction(1)
            basis[i] = ai
            art_cols.append(ai)
            ai += 1

    def pivot(r, col):
        piv = T[r][col]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][col]:
                f = T[i][col]
                T[i] = [a - f * b for a, b in zip(T[i], T[r])]
        basis[r] = col

    def simplex(cost, allowed):
        """Maximize cost over allowed columns; returns False on unbounded."""
        while True:
            z = [Fraction(0)] * (n + 1)
            for i in range(m):
                cb = cost[basis[i]]
                if cb:
                    for j in range(n + 1):
                        if T[i][j]:
                            z[j] += cb * T[i][j]
            entering = None
            for j in range(n):
                if allowed[j] and cost[j] - z[j] > 0:
                    entering = j
                    break
            if entering is None:
                return True
            ratio, leave = None, None
            for i in range(m):
                if T[i][entering] > 0:
                    r = T[i][n] / T[i][entering]
                    if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                        ratio, leave = r, i
            if leave is None:
                return False
            pivot(leave, entering)

    allowed = [True] * n
    if art_cols:
        cost1 = [Fraction(0)] * n
        for j in art_cols:
            cost1[j] = Fraction(-1)
        simplex(cost1, allowed)  # bounded by construction (cost <= 0)
        infeas = sum(T[i][n] for i in range(m) if basis[i] in art_cols)
        if infeas > 0:
            return LpResult("infeasible", None, None)
        # drive residual artificial basics out (degenerate rows)
        for i in range(m):
            if basis[i] in art_cols:
                for j in range(num_vars + n_slack):
                    if T[i][j]:
                        pivot(i, j)
                        break
        for j in art_cols:
            allowed[j] = False

    cost2 = [Fraction(0)] * n
    for j in range(num_vars):
        cost2[j] = c_obj[j]
    if not simplex(cost2, allowed):
        return LpResult("unbounded", None, None)

    x = [Fraction(0)] * num_vars
    for i in range(m):
        if basis[i] < num_vars:
            x[basis[i]] = T[i][n]
    value = sum(c * v for c, v in zip(c_obj, x))
    _verify(x, rows)
    if not maximize:
        value = -value
    return LpResult("optimal", value, tuple(x))


def _verify(x, rows):
    for coeffs, rel, rhs in rows:
        lhs = sum(c * v for c, v in zip(coeffs, x))
        ok = lhs <= rhs if rel == LE else lhs >= rhs if rel == GE else lhs == rhs
        if not ok:
            raise LpError("simplex certificate failed re-verification")
    if any(v < 0 for v in x):
        raise LpError("simplex certificate failed re-verification")


def _np_constraints(gens, point):
    """Rows of the membership LP: lambda on the simplex, sum lambda_j v_j <= p."""
    n = len(gens)
    cons = [([Fraction(1)] * n, EQ, Fraction(1))]
    for i, pi in enumerate(point):
        cons.append(([Fraction(v[i]) for v in gens], LE, Fraction(pi)))
    return cons


def np_member(ideal: MonomialIdeal, point) -> bool:
    """point lies in NP(ideal) = conv(generators) + nonnegative orthant."""
    gens = ideal.gens
    d = ideal.ring.dimension
    if len(point) != d:
        raise ValueError("dimension mismatch")
    if not gens:
        return False
    res = lp_solve(len(gens), _np_constraints(gens, point), [0] * len(gens))
    return res.status == "optimal"


def np_interior(ideal: MonomialIdeal, point) -> bool:
    """point lies in the topological interior of NP(ideal).

    p is interior iff p - eps*(1,..,1) still lies in NP for some eps > 0:
    the recession cone is the full orthant, so a positive slack in every
    coordinate direction is exactly an interior ball.  eps is free and is
    split into a difference of nonnegatives; the LP is always feasible
    (eps << 0) and bounded above (eps <= min p_i), so an optimum exists.
    """
    gens = ideal.gens
    d = ideal.ring.dimension
    if len(point) != d:
        raise ValueError("dimension mismatch")
    if not gens:
        return False
    n = len(gens)
    cons = [([Fraction(1)] * n + [Fraction(0), Fraction(0)], EQ, Fraction(1))]
    for i, pi in enumerate(point):
        row = [Fraction(v[i]) for v in gens] + [Fraction(1), Fraction(-1)]
        cons.append((row, LE, Fraction(pi)))
    res = lp_solve(n + 2, cons, [0] * n + [1, -1])
    if res.status != "optimal":
        raise LpError(f"interior LP unexpectedly {res.status}")
    return res.optimum > 0


def _scan_minimal_members(bounds, is_member, seed_ideal=None):
    """Minimal lattice points of an upward-closed set inside prod [0, b_i].

    Points are visited in ascending total degree, so a point not dominated
    by a previously found member is itself minimal whenever it is a member.
    ``seed_ideal`` provides a cheap sufficient membership test (divisibility)
    that short-circuits the LP.
    """
    pts = _box_points(bounds)
    deg = pts.sum(axis=1)
    order = np.lexsort(tuple(pts[:, j] for j in range(pts.shape[1] - 1, -1, -1)) + (deg,))
    pts, deg = pts[order], deg[order]
    found = []
    found_arr = None
    bounds_idx = np.flatnonzero(np.diff(deg)) + 1
    for grp in np.split(pts, bounds_idx):
        if found_arr is not None and found_arr.shape[0]:
            keep = np.ones(grp.shape[0], dtype=bool)
            step = max(1, (1 << 24) // max(1, found_arr.shape[0]))
            for i0 in range(0, grp.shape[0], step):
                blk = grp[i0:i0 + step]
                dom = (found_arr[None, :, :] <= blk[:, None, :]).all(2).any(1)
                keep[i0:i0 + blk.shape[0]] = ~dom
            grp = grp[keep]
        if not grp.shape[0]:
            continue
        if seed_ideal is not None and not seed_ideal.is_zero():
            quick = seed_ideal.contains_membership_mask(grp)
        else:
            quick = np.zeros(grp.shape[0], dtype=bool)
        new = [row for row, q in zip(grp, quick) if q or is_member(tuple(int(x) for x in row))]
        if new:
            found.extend(tuple(int(x) for x in row) for row in new)
            found_arr = np.array(found, dtype=np.int64)
    return tuple(found)


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest integrally closed ideal containing the input: all lattice
    points of the Newton polyhedron, scanned inside the pure-power box."""
    n = ideal.pure_power_exponents()
    if ideal.is_unit():
        return ideal
    gens = _scan_minimal_members(n, lambda p: np_member(ideal, p), seed_ideal=ideal)
    return MonomialIdeal._from_antichain(ideal.ring, _antichain(
        np.array(gens, dtype=np.int64)))


def closure_of_power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """Integral closure of ideal**t without expanding the power:
    NP(I^t) = t * NP(I), so alpha is in the closure iff alpha/t in NP(I)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    n = ideal.pure_power_exponents()
    if ideal.is_unit():
        return ideal
    if max(n) * t >= (1 << 62):
        raise OverflowError("exponent overflow in closure of power")
    bracket = ideal.bracket_power(t)
    bounds = tuple(t * ni for ni in n)
    gens = _scan_minimal_members(
        bounds,
        lambda p: np_member(ideal, tuple(Fraction(x, t) for x in p)),
        seed_ideal=bracket)
    return MonomialIdeal._from_antichain(ideal.ring, _antichain(
        np.array(gens, dtype=np.int64)))


def adjoint(ideal: MonomialIdeal, c: int = 1) -> MonomialIdeal:
    """Adjoint (multiplier) ideal of ideal**c: exponents alpha with
    alpha + (1,..,1) in the interior of NP(I^c) = c * NP(I)."""
    if c < 1:
        raise ValueError("c must be >= 1")
    n = ideal.pure_power_exponents()
    if ideal.is_unit():
        return ideal
    if (max(n) + 1) * c >= (1 << 62):
        raise OverflowError("exponent overflow in adjoint")
    # alpha >= c*g for a generator g puts alpha+1 strictly inside from g
    bracket = ideal.bracket_power(c)
    bounds = tuple(c * ni for ni in n)

    def member(p):
        shifted = tuple(Fraction(x + 1, c) for x in p)
        return np_interior(ideal, shifted)

    gens = _scan_minimal_members(bounds, member, seed_ideal=bracket)
    return MonomialIdeal._from_antichain(ideal.ring, _antichain(
        np.array(gens, dtype=np.int64)))


def is_integrally_closed(ideal: MonomialIdeal) -> bool:
    return integral_closure(ideal) == ideal


def is_normal_up_to(ideal: MonomialIdeal, T: int) -> bool:
    """True iff ideal**t is integrally closed for 1 <= t <= T."""
    if T < 1:
        raise ValueError("T must be >= 1")
    power = ideal
    for t in range(1, T + 1):
        if t > 1:
            power = power.product(ideal)
        if closure_of_power(ideal, t) != power:
            return False
    return True
