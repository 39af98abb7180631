"""Tent-map dynamics: orbits, symbolic itineraries, derivatives, periodic
points and phase-space lap counts.

The family is x -> 1 - a*|x| on I_a = [1-a, 1] with turning point c = 0 and
slope a in [sqrt(2), 2].  The itinerary symbols attached to an orbit are

    sign      eps = -sgn(x)            in {+1, -1}
    weight    xi  = eps / (branch count) in {+1/2, -1/2, -1}
    indicator chi = 1 iff x < a-1       (half-open cell [1-a, a-1))

The weight changes value at the two breakpoints c = 0 and chat2 = a-1.  An
orbit position landing within the symbol guard of a breakpoint cannot be
classified robustly, so every position carries a margin and an accumulated
floating-point error bound; a symbol is *reliable* only when its margin
clears guard + error.  Exact breakpoint hits with a provably exact orbit
prefix (error bound identically zero, e.g. a = 2) are classified by the
one-sided convention xi(0) = +1/2, xi(chat2) = -1 and remain reliable: with
those values the weighted-sum identities that consume the symbols stay valid
at the hit.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from .dd import dd_tent_step, two_prod, two_sum
from .errors import (
    AmbiguousSymbols,
    BudgetExceeded,
    DomainError,
    ItineraryMismatch,
    ParameterOutOfRange,
)

SQRT2 = math.sqrt(2.0)
DEFAULT_GUARD = 1e-11
_EPS = 2.220446049250313e-16
_A_SLACK = 1e-15

STANDARD = "standard"
EXTENDED = "extended"
_TIERS = (STANDARD, EXTENDED)

# per-step additive error of one double-word tent step (relative 2^-104 level)
_DD_STEP_ERR = 3e-31
_MP_PREC_CAP = 4096


@dataclass(frozen=True)
class TentContext:
    """A tent-map parameter with its derived phase-space constants."""

    a: float
    c2: float
    chat2: float
    tier: str = STANDARD
    c: float = 0.0
    c1: float = 1.0

    @property
    def c3(self) -> float:
        return 1.0 - self.a * self.chat2

    @property
    def interval(self) -> tuple[float, float]:
        return self.c2, self.c1


def make_context(a: float, tier: str | None = None) -> TentContext:
    """Validate the slope and populate derived constants.

    The precision tier picks the default arithmetic for orbit evaluation;
    evaluators escalate past it on demand.  When `tier` is None the
    FAIRTENT_PRECISION environment variable (then "standard") applies.
    """
    a = float(a)
    if not (SQRT2 - _A_SLACK <= a <= 2.0 + _A_SLACK):
        raise ParameterOutOfRange(f"slope a={a!r} outside [sqrt(2), 2]")
    a = min(max(a, SQRT2), 2.0)
    if tier is None:
        tier = os.environ.get("FAIRTENT_PRECISION", STANDARD)
    if tier not in _TIERS:
        raise ParameterOutOfRange(f"unknown precision tier {tier!r}")
    return TentContext(a=a, c2=1.0 - a, chat2=a - 1.0, tier=tier)


def step(ctx: TentContext, x: float) -> float:
    """One application of the map; `x` must lie in I_a up to 1e-12 slack."""
    if x < ctx.c2 - 1e-12 or x > ctx.c1 + 1e-12:
        raise DomainError(f"x={x!r} outside [{ctx.c2}, {ctx.c1}]")
    x = min(max(x, ctx.c2), ctx.c1)
    return 1.0 - ctx.a * abs(x)


@dataclass(frozen=True)
class SymbolicOrbit:
    """Critical-orbit positions with per-step symbols and reliability data.

    positions[k] approximates c_k = f^k(0); index 0 is the turning point
    itself.  `reliable[k]` is False when the symbol at step k could differ
    from the true one given the accumulated error bound.  `ambiguous`
    reports any guard contact among steps 1..n, exact hits included.
    """

    a: float
    guard: float
    tier: str
    positions: np.ndarray
    signs: np.ndarray
    weights: np.ndarray
    indicators: np.ndarray
    margins: np.ndarray
    err_bounds: np.ndarray
    reliable: np.ndarray

    def __len__(self) -> int:
        return len(self.positions) - 1

    @property
    def guard_margin(self) -> float:
        return float(self.margins[1:].min()) if len(self) else math.inf

    @property
    def ambiguous(self) -> bool:
        m = self.margins[1:]
        return bool(np.any(m <= self.guard + self.err_bounds[1:]))

    @property
    def first_unreliable(self) -> int | None:
        bad = np.nonzero(~self.reliable[1:])[0]
        return int(bad[0]) + 1 if bad.size else None

    @property
    def reliable_horizon(self) -> int:
        """Largest n such that symbols 1..n are all reliable."""
        fu = self.first_unreliable
        return len(self) if fu is None else fu - 1


def _classify_scalar(x: float, chat2: float):
    """Return (sign, weight, indicator, margin) for one position."""
    margin = min(abs(x), abs(x - chat2))
    if x < 0.0:
        return 1, 0.5, 1, margin
    if x == 0.0:
        return 1, 0.5, 1, margin
    if x < chat2:
        return -1, -0.5, 1, margin
    # convention at the exact hit x == chat2 matches the x > chat2 side
    return -1, -1.0, 0, margin


def _finish_orbit(a, guard, tier, pos, err):
    sg = np.empty(len(pos), dtype=np.int8)
    wt = np.empty(len(pos))
    ind = np.empty(len(pos), dtype=np.uint8)
    mg = np.empty(len(pos))
    chat2 = a - 1.0
    for k, x in enumerate(pos):
        s, w, c, m = _classify_scalar(x, chat2)
        sg[k], wt[k], ind[k], mg[k] = s, w, c, m
    exact = (mg == 0.0) & (err == 0.0)
    rel = (mg > guard + err) | exact
    return SymbolicOrbit(
        a=a, guard=guard, tier=tier, positions=pos, signs=sg, weights=wt,
        indicators=ind, margins=mg, err_bounds=err, reliable=rel,
    )


def _orbit_standard(a: float, n: int, guard: float) -> SymbolicOrbit:
    pos = np.empty(n + 1)
    err = np.empty(n + 1)
    pos[0] = 0.0
    err[0] = 0.0
    x = 0.0
    e = 0.0
    for k in range(1, n + 1):
        p, e1 = two_prod(a, abs(x))
        x, e2 = two_sum(1.0, -p)
        e = a * e + abs(e1) + abs(e2)
        pos[k] = x
        err[k] = e
    return _finish_orbit(a, guard, STANDARD, pos, err)


def _orbit_dd(a: float, n: int, guard: float) -> SymbolicOrbit:
    pos = np.empty(n + 1)
    err = np.empty(n + 1)
    pos[0] = 0.0
    err[0] = 0.0
    hi, lo = 0.0, 0.0
    e = 0.0
    for k in range(1, n + 1):
        hi, lo = dd_tent_step(a, hi, lo)
        e = a * e + _DD_STEP_ERR
        pos[k] = hi + lo
        err[k] = e
    ob = _finish_orbit(a, guard, EXTENDED, pos, err)
    return ob


def _mp_precision(a: float, n: int) -> int:
    return min(_MP_PREC_CAP, max(128, int(n * math.log2(max(a, 1.1))) + 80))


def _orbit_mp(a: float, n: int, guard: float, prec: int | None = None) -> SymbolicOrbit:
    import mpmath as mp

    prec = prec or _mp_precision(a, n)
    pos = np.empty(n + 1)
    err = np.empty(n + 1)
    pos[0] = 0.0
    err[0] = 0.0
    inc = 3.0 * 2.0 ** (-prec)
    with mp.workprec(prec):
        am = mp.mpf(a)
        x = mp.mpf(0)
        e = 0.0
        for k in range(1, n + 1):
            x = 1 - am * abs(x)
            e = a * e + inc
            pos[k] = float(x)
            err[k] = e
    return _finish_orbit(a, guard, f"mp{prec}", pos, err)


def critical_orbit(ctx: TentContext, n: int, guard: float = DEFAULT_GUARD) -> SymbolicOrbit:
    """Critical orbit of length n with symbols, escalating precision until
    every symbol is reliable or the precision ladder is exhausted."""
    if n < 1:
        raise ValueError("orbit length must be >= 1")
    if guard <= 0.0:
        raise ValueError("guard must be positive")
    builders = [lambda: _orbit_standard(ctx.a, n, guard),
                lambda: _orbit_dd(ctx.a, n, guard),
                lambda: _orbit_mp(ctx.a, n, guard)]
    start = 0 if ctx.tier == STANDARD else 1
    ob = None
    for build in builders[start:]:
        ob = build()
        if ob.first_unreliable is None:
            return ob
    return ob


def gamma_count(orbit: SymbolicOrbit, n: int) -> int:
    """Number of steps 1..n whose position lies in [c2, chat2)."""
    if n < 0 or n > len(orbit):
        raise ValueError(f"n={n} outside orbit of length {len(orbit)}")
    if n == 0:
        return 0
    if not bool(orbit.reliable[1:n + 1].all()):
        bad = int(np.nonzero(~orbit.reliable[1:n + 1])[0][0]) + 1
        raise AmbiguousSymbols(f"symbol at step {bad} is guard-ambiguous")
    return int(orbit.indicators[1:n + 1].sum())


@dataclass(frozen=True)
class DerivativeTrace:
    """Orbit values c_k(a) together with parameter derivatives c_k'(a).

    The derivative recursion d_{k+1} = -|c_k| - a*sgn(c_k)*d_k is valid on
    any parameter interval where no c_k crosses the turning point;
    `undefined_from` flags the first step whose position sits within the
    guard of 0, after which the derivative is only formal.
    """

    a: float
    values: np.ndarray
    derivatives: np.ndarray
    undefined_from: int | None


def phi_with_derivative(a: float, n: int, guard: float = DEFAULT_GUARD) -> DerivativeTrace:
    if n < 2:
        raise ValueError("need n >= 2")
    vals = np.empty(n + 1)
    ders = np.empty(n + 1)
    vals[0], ders[0] = 0.0, 0.0
    vals[1], ders[1] = 1.0, 0.0
    undefined_from = None
    for k in range(1, n):
        x = vals[k]
        s = 1.0 if x > 0 else (-1.0 if x < 0 else 0.0)
        if abs(x) <= guard and k >= 1 and undefined_from is None:
            undefined_from = k + 1
        vals[k + 1] = 1.0 - a * abs(x)
        ders[k + 1] = -abs(x) - a * s * ders[k]
    return DerivativeTrace(a=a, values=vals, derivatives=ders,
                           undefined_from=undefined_from)


def periodic_point_q(ctx: TentContext, r: int, tol: float = 1e-9) -> float:
    """Orientation-reversing fixed point of the r-th iterate.

    q_r(a) = (1 + a + ... + a^(r-1)) / (1 + a^r).  For r >= 2 the defining
    itinerary f(q) < f^2(q) < ... < f^(r-1)(q) < 0 < chat2 < q is verified;
    failure signals that `a` lies outside the window where q_r exists.
    """
    if r < 1:
        raise ValueError("period must be >= 1")
    a = ctx.a
    num = sum(a ** k for k in range(r))
    q = num / (1.0 + a ** r)
    if r == 1:
        if not (ctx.c < q < ctx.chat2):
            raise ItineraryMismatch(f"q1={q} not in (0, {ctx.chat2})")
        if abs((1.0 - a * q) - q) > tol:
            raise ItineraryMismatch("q1 is not fixed by the map")
        return q
    if not (ctx.chat2 < q < ctx.c1):
        raise ItineraryMismatch(f"q{r}={q} not in ({ctx.chat2}, 1)")
    y = q
    prev = None
    for j in range(1, r):
        y = 1.0 - a * abs(y)
        if y >= ctx.c:
            raise ItineraryMismatch(f"iterate {j} of q{r} not below the turning point")
        if prev is not None and y <= prev:
            raise ItineraryMismatch(f"iterates of q{r} fail to increase at step {j}")
        prev = y
    y = 1.0 - a * abs(y)
    if abs(y - q) > tol:
        raise ItineraryMismatch(f"f^{r}(q) - q = {y - q:.3e} exceeds {tol}")
    return q


def periodic_cycle(ctx: TentContext, r: int, tol: float = 1e-9) -> np.ndarray:
    """The full cycle (q, f(q), ..., f^(r-1)(q)) of the verified q_r."""
    q = periodic_point_q(ctx, r, tol)
    cyc = np.empty(r)
    cyc[0] = q
    for j in range(1, r):
        cyc[j] = 1.0 - ctx.a * abs(cyc[j - 1])
    return cyc


def phase_lap_count(ctx: TentContext, n: int, cap: int = 10 ** 7) -> int:
    """Number of maximal monotone pieces of the n-th iterate on I_a.

    Counts interior preimages of the turning point under iterates 0..n-1,
    propagating each preimage layer through the two inverse branches
    x = +(1-y)/a (always present) and x = -(1-y)/a (present iff y >= c3).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 30:
        raise ValueError("n > 30 not supported (combinatorial blow-up)")
    a, c2, c3 = ctx.a, ctx.c2, ctx.c3
    edge_tol = 1e-12
    layers = [np.array([0.0])]
    total = 1
    for _ in range(n - 1):
        y = layers[-1]
        plus = (1.0 - y) / a
        minus = -plus[y >= c3 - edge_tol]
        nxt = np.concatenate([plus, minus])
        nxt = nxt[(nxt > c2 + edge_tol) & (nxt < 1.0 - edge_tol)]
        total += len(nxt)
        if total > cap:
            raise BudgetExceeded(f"preimage count exceeded cap {cap}")
        layers.append(nxt)
    pts = np.sort(np.concatenate(layers))
    if len(pts) == 0:
        return 1
    keep = np.empty(len(pts), dtype=bool)
    keep[0] = True
    keep[1:] = np.diff(pts) > edge_tol
    return int(keep.sum()) + 1
