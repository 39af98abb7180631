"""Fair entropy and the fair distribution, by two independent routes.

Route 1 (series): the normalized fair entropy H = F(c) satisfies

    H = sum_{n>=1} w_n  /  sum_{n>=1} w_n * chi_n,
    w_n = prod_{k=1}^{n-1} xi(c_k),   chi_n = 1_{[c2, chat2)}(c_n),

with weights read off the critical itinerary.  Consecutive weights lose a
factor 1/2 at least every two steps (a position above chat2 always maps
below chat2), so partial sums carry a certified geometric tail bound and the
evaluator returns an enclosure, escalating orbit precision as needed.

Route 2 (fixed point): the distribution F of the fair measure is the unique
fixed point with F(c1) = 1 of the affine operator

    (T F)(x) = (F(f x) - F(c3)) / 2            on [c2, c]
             = F(c1) - (F(f x) + F(c3)) / 2    on [c, chat2]
             = F(c1) - F(f x)                  on [chat2, c1]

iterated on a piecewise-linear grid.  H is then read off as F(c).  The two
routes share no code path and cross-validate each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import dd
from .core import (
    DEFAULT_GUARD,
    SQRT2,
    TentContext,
    _mp_precision,
    _orbit_dd,
    _orbit_mp,
    _orbit_standard,
)
from .errors import (
    AmbiguousOrbit,
    ConvergenceFailure,
    DomainError,
    NotInjective,
)

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class EntropyEnclosure:
    """An estimate of the normalized fair entropy H in [1/4, 1/2].

    `radius` bounds truncation plus rounding; `ambiguous` marks values whose
    certification was cut short by a guard-ambiguous itinerary symbol, in
    which case callers should fall back to the fixed-point oracle.
    """

    h_value: float
    radius: float
    terms_used: int
    method: str
    ambiguous: bool
    diagnostics: dict = field(default_factory=dict)

    @property
    def fair_entropy(self) -> float:
        """Metric entropy of the fair measure, 2 log2 * H."""
        return 2.0 * LOG2 * self.h_value

    def dimension(self, a: float) -> float:
        return self.fair_entropy / math.log(a)


@dataclass(frozen=True)
class PiecewiseLinearCDF:
    """Monotone piecewise-linear approximation of the fair distribution."""

    grid: np.ndarray
    values: np.ndarray

    def evaluate(self, x):
        return np.interp(x, self.grid, self.values)

    @property
    def mesh(self) -> float:
        return float(np.diff(self.grid).max())


# ----------------------------------------------------------------------
# series route
# ----------------------------------------------------------------------

_ORBIT_BUILDERS = (
    lambda a, n, guard: _orbit_standard(a, n, guard),
    lambda a, n, guard: _orbit_dd(a, n, guard),
    lambda a, n, guard: _orbit_mp(a, n, guard),
)


def _series_partial(orbit, tol, upto):
    """Walk reliable symbols accumulating numerator/denominator.

    Returns (status, h, radius, terms) with status in {"ok", "blocked",
    "more"}; "blocked" means an unreliable symbol was reached before the
    tail certified, "more" that the orbit ran out first.
    """
    w = orbit.weights
    chi = orbit.indicators
    rel = orbit.reliable
    num = 0.0
    den = 0.0
    p = 1.0
    for n in range(1, min(len(orbit), upto) + 1):
        if not rel[n]:
            h = num / den if den != 0.0 else math.nan
            return "blocked", h, math.inf, n - 1
        num += p
        den += p * chi[n]
        p *= w[n]
        tail = 4.0 * abs(p)
        den_low = abs(den) - tail
        if den_low > 0.25:
            radius = tail * (abs(den) + abs(num)) / (den_low * abs(den)) + 2e-15
            if radius <= tol:
                return "ok", num / den, radius, n
    h = num / den if den != 0.0 else math.nan
    return "more", h, math.inf, min(len(orbit), upto)


def fair_entropy_series(
    ctx: TentContext,
    tol: float = 1e-9,
    max_terms: int = 400,
    guard: float = DEFAULT_GUARD,
) -> EntropyEnclosure:
    """Normalized fair entropy from the itinerary series with a certified
    truncation radius.  Escalates precision automatically; if the critical
    orbit stays guard-ambiguous at every tier the result carries
    ambiguous=True and the fixed-point oracle should be used instead."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    start = 0 if ctx.tier == "standard" else 1
    last = None
    for builder in _ORBIT_BUILDERS[start:]:
        length = 96
        while True:
            orbit = builder(ctx.a, length, guard)
            status, h, radius, terms = _series_partial(orbit, tol, max_terms)
            if status == "ok":
                return EntropyEnclosure(
                    h_value=h, radius=radius, terms_used=terms,
                    method="series", ambiguous=False,
                    diagnostics={"tier": orbit.tier},
                )
            last = (orbit, h, radius, terms)
            if status == "blocked":
                break
            if length >= max_terms:
                raise ConvergenceFailure(
                    f"series did not certify tol={tol} within {max_terms} terms",
                    last_change=radius,
                )
            length = min(2 * length, max_terms)
    orbit, h, radius, terms = last
    return EntropyEnclosure(
        h_value=h, radius=radius, terms_used=terms, method="series",
        ambiguous=True, diagnostics={"tier": orbit.tier,
                                     "blocked_at": terms + 1},
    )


# ----------------------------------------------------------------------
# fixed-point route
# ----------------------------------------------------------------------

def make_cdf_grid(ctx: TentContext, grid_size: int) -> np.ndarray:
    """Uniform grid on I_a with nodes forced at c2, c, chat2, c3, c1 so the
    three operator branches never interpolate across a breakpoint."""
    if grid_size < 2 ** 10:
        raise ValueError("grid_size must be at least 2**10")
    base = np.linspace(ctx.c2, ctx.c1, grid_size + 1)
    forced = np.array([ctx.c2, ctx.c, ctx.chat2, ctx.c3, ctx.c1])
    return np.unique(np.concatenate([base, forced]))


def uniform_ramp(ctx: TentContext, grid: np.ndarray) -> PiecewiseLinearCDF:
    vals = (grid - ctx.c2) / (ctx.c1 - ctx.c2)
    return PiecewiseLinearCDF(grid=grid, values=vals)


def transfer_apply(ctx: TentContext, F: PiecewiseLinearCDF) -> PiecewiseLinearCDF:
    """One application of the distribution-transfer operator on the grid."""
    g, v = F.grid, F.values
    a = ctx.a
    fx = 1.0 - a * np.abs(g)
    Ffx = np.interp(fx, g, v)
    Fc3 = float(np.interp(ctx.c3, g, v))
    F1 = float(v[-1])
    out = np.where(
        g < 0.0,
        0.5 * (Ffx - Fc3),
        np.where(g < ctx.chat2, F1 - 0.5 * (Ffx + Fc3), F1 - Ffx),
    )
    out[0] = 0.0
    out[-1] = F1
    out = np.maximum.accumulate(np.clip(out, 0.0, 1.0))
    return PiecewiseLinearCDF(grid=g, values=out)


def fair_cdf_fixed_point(
    ctx: TentContext,
    grid_size: int = 2 ** 14,
    tol: float = 1e-10,
    max_iter: int = 10 ** 5,
) -> tuple[PiecewiseLinearCDF, EntropyEnclosure]:
    """Iterate the transfer operator from the uniform ramp until the sup-norm
    change drops below tol; read H off at the turning point.

    The plain iteration stalls when c3 sits on (or next to) chat2: the grid
    node there then feeds back through F -> 1 - F, an exact flip.  A stall
    detector switches to averaged iterates F <- (F + TF)/2, which has the
    same fixed points and damps the flip mode.
    """
    grid = make_cdf_grid(ctx, grid_size)
    F = uniform_ramp(ctx, grid)
    deltas: list[float] = []
    damped = False
    raw = math.inf
    for it in range(1, max_iter + 1):
        G = transfer_apply(ctx, F)
        raw = float(np.max(np.abs(G.values - F.values)))
        deltas.append(raw)
        if raw < tol:
            F = G
            break
        if not damped and it >= 50 and raw > 0.3 * deltas[it - 31]:
            damped = True
        if damped:
            F = PiecewiseLinearCDF(grid=grid, values=0.5 * (F.values + G.values))
        else:
            F = G
    else:
        raise ConvergenceFailure(
            f"fixed-point iteration stopped at change {raw:.3e} >= tol {tol}",
            last_change=raw,
        )
    rate = (deltas[-1] / deltas[-21]) ** (1.0 / 20.0) if len(deltas) > 21 else math.nan
    mesh = float(np.diff(grid).max())
    h = float(np.interp(ctx.c, grid, F.values))
    enclosure = EntropyEnclosure(
        h_value=h,
        radius=10.0 * max(tol, mesh),
        terms_used=len(deltas),
        method="phi_fixed_point",
        ambiguous=False,
        diagnostics={"empirical_rate": rate, "final_change": deltas[-1],
                     "damped": float(damped)},
    )
    return F, enclosure


def entropy_with_fallback(
    ctx: TentContext,
    tol: float = 1e-9,
    grid_size: int = 2 ** 14,
    phi_tol: float = 1e-10,
) -> EntropyEnclosure:
    """Series value when it certifies, else the fixed-point oracle."""
    enc = fair_entropy_series(ctx, tol)
    if not enc.ambiguous:
        return enc
    _, enc = fair_cdf_fixed_point(ctx, grid_size=grid_size, tol=phi_tol)
    return enc


# ----------------------------------------------------------------------
# pointwise distribution values
# ----------------------------------------------------------------------

def _cdf_walk(orbit, H, tol, h_radius):
    """Accumulate F(x) = -sum xi|_0^k + H sum xi|_0^k chi_k along an orbit.

    The exact remainder after n processed steps is xi|_0^n * F(f^n x), so
    |prefactor| <= tol - slack certifies.  Returns (status, value, steps).
    """
    w = orbit.weights
    chi = orbit.indicators
    rel = orbit.reliable
    s1 = 0.0
    s2 = 0.0
    p = 1.0
    slack = 5.0 * h_radius + 2e-15
    for k in range(len(orbit) + 1):
        if abs(p) + slack <= tol:
            return "ok", min(max(-s1 + H * s2, 0.0), 1.0), k
        if k == len(orbit):
            break
        if not rel[k]:
            return "blocked", math.nan, k
        s2 += p * chi[k]
        p *= w[k]
        s1 += p
    return "more", math.nan, len(orbit)


def fair_cdf_eval(
    ctx: TentContext,
    H: float,
    x: float,
    tol: float = 1e-9,
    guard: float = DEFAULT_GUARD,
    h_radius: float = 0.0,
) -> float:
    """Fair distribution value F(x) by expanding the orbit of x.

    `H` must come from either entropy route with radius at most tol/10
    (pass it as h_radius to fold it into the stopping rule).  Raises
    AmbiguousOrbit when the orbit of x hits the symbol guard before the
    prefactor certifies; grid interpolation is the fallback then.
    """
    if x < ctx.c2 - 1e-12 or x > ctx.c1 + 1e-12:
        raise DomainError(f"x={x!r} outside [{ctx.c2}, {ctx.c1}]")
    x = min(max(x, ctx.c2), ctx.c1)
    builders = (_orbit_standard_from, _orbit_dd_from, _orbit_mp_from)
    start = 0 if ctx.tier == "standard" else 1
    for builder in builders[start:]:
        length = 128
        while True:
            orbit = builder(ctx.a, x, length, guard)
            status, val, steps = _cdf_walk(orbit, H, tol, h_radius)
            if status == "ok":
                return val
            if status == "blocked":
                break
            if length >= 420:
                raise ConvergenceFailure("distribution series did not certify")
            length = min(2 * length, 420)
    raise AmbiguousOrbit(
        f"orbit of x={x} hits the symbol guard before certification"
    )


def _orbit_standard_from(a, x0, n, guard):
    from .core import _finish_orbit
    from .dd import two_prod, two_sum

    pos = np.empty(n + 1)
    err = np.empty(n + 1)
    pos[0], err[0] = x0, 0.0
    x, e = x0, 0.0
    for k in range(1, n + 1):
        p, e1 = two_prod(a, abs(x))
        x, e2 = two_sum(1.0, -p)
        e = a * e + abs(e1) + abs(e2)
        pos[k], err[k] = x, e
    return _finish_orbit(a, guard, "standard", pos, err)


def _orbit_dd_from(a, x0, n, guard):
    from .core import _DD_STEP_ERR, _finish_orbit

    pos = np.empty(n + 1)
    err = np.empty(n + 1)
    pos[0], err[0] = x0, 0.0
    hi, lo, e = x0, 0.0, 0.0
    for k in range(1, n + 1):
        hi, lo = dd.dd_tent_step(a, hi, lo)
        e = a * e + _DD_STEP_ERR
        pos[k], err[k] = hi + lo, e
    return _finish_orbit(a, guard, "extended", pos, err)


def _orbit_mp_from(a, x0, n, guard):
    import mpmath as mp

    from .core import _finish_orbit

    prec = _mp_precision(a, n)
    pos = np.empty(n + 1)
    err = np.empty(n + 1)
    pos[0], err[0] = x0, 0.0
    inc = 3.0 * 2.0 ** (-prec)
    with mp.workprec(prec):
        am = mp.mpf(a)
        x = mp.mpf(x0)
        e = 0.0
        for k in range(1, n + 1):
            x = 1 - am * abs(x)
            e = a * e + inc
            pos[k], err[k] = float(x), e
    return _finish_orbit(a, guard, f"mp{prec}", pos, err)


def fair_cdf_eval_batch(
    ctx: TentContext,
    H: float,
    xs: np.ndarray,
    tol: float = 1e-9,
    guard: float = DEFAULT_GUARD,
    h_radius: float = 0.0,
    max_steps: int = 220,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised F(x) over many points in double-word arithmetic.

    Elements whose orbit stays guard-ambiguous are retried one by one at
    adaptive precision; the returned mask marks entries that certified.
    """
    xs = np.asarray(xs, dtype=float)
    a, chat2 = ctx.a, ctx.chat2
    hi = xs.copy()
    lo = np.zeros_like(xs)
    err = np.zeros_like(xs)
    p = np.ones_like(xs)
    s1 = np.zeros_like(xs)
    s2 = np.zeros_like(xs)
    done = np.zeros(xs.shape, dtype=bool)
    bad = np.zeros(xs.shape, dtype=bool)
    slack = 5.0 * h_radius + 2e-15
    from .core import _DD_STEP_ERR

    for _ in range(max_steps):
        active = ~(done | bad)
        if not active.any():
            break
        newly = active & (np.abs(p) + slack <= tol)
        done |= newly
        active &= ~newly
        if not active.any():
            break
        x = hi + lo
        margin = np.minimum(np.abs(x), np.abs(x - chat2))
        exact = (margin == 0.0) & (err == 0.0)
        unreliable = active & (margin <= guard + err) & ~exact
        bad |= unreliable
        active &= ~unreliable
        w = np.where(x <= 0.0, 0.5, np.where(x < chat2, -0.5, -1.0))
        chi = np.where(x < chat2, 1.0, 0.0)
        s2 = np.where(active, s2 + p * chi, s2)
        p = np.where(active, p * w, p)
        s1 = np.where(active, s1 + p, s1)
        nhi, nlo = dd.dd_tent_step(a, hi, lo)
        hi = np.where(active, nhi, hi)
        lo = np.where(active, nlo, lo)
        err = np.where(active, a * err + _DD_STEP_ERR, err)
    done |= (np.abs(p) + slack <= tol) & ~bad
    vals = np.clip(-s1 + H * s2, 0.0, 1.0)
    ok = done.copy()
    for idx in np.nonzero(~ok)[0]:
        try:
            vals[idx] = fair_cdf_eval(ctx, H, float(xs[idx]), tol=tol,
                                      guard=guard, h_radius=h_radius)
            ok[idx] = True
        except (AmbiguousOrbit, ConvergenceFailure):
            vals[idx] = math.nan
    return vals, ok


# ----------------------------------------------------------------------
# measure queries and structural checks
# ----------------------------------------------------------------------

def measure_of_interval(
    ctx: TentContext,
    H: float,
    lo: float,
    hi: float,
    tol: float = 1e-9,
    h_radius: float = 0.0,
) -> float:
    """Fair-measure mass F(hi) - F(lo), clamped to be nonnegative."""
    if not (ctx.c2 - 1e-12 <= lo <= hi <= ctx.c1 + 1e-12):
        raise DomainError(f"[{lo}, {hi}] is not a subinterval of I_a")
    fh = fair_cdf_eval(ctx, H, hi, tol=tol, h_radius=h_radius)
    fl = fair_cdf_eval(ctx, H, lo, tol=tol, h_radius=h_radius)
    return max(fh - fl, 0.0)


@dataclass(frozen=True)
class CheckReport:
    lhs: float
    rhs: float
    tol: float
    passed: bool


def conformality_check(
    ctx: TentContext,
    H: float,
    lo: float,
    hi: float,
    tol: float = 1e-5,
) -> CheckReport:
    """Push-forward mass of an injectivity interval against its Jacobian
    weight: mu(f[lo,hi]) = 2 mu([lo,hi] inter [c2,chat2]) + mu([lo,hi] inter
    (chat2,c1])."""
    if lo < ctx.c < hi:
        raise NotInjective(f"[{lo}, {hi}] straddles the turning point")
    eval_tol = tol / 8.0
    y1, y2 = 1.0 - ctx.a * abs(lo), 1.0 - ctx.a * abs(hi)
    img_lo, img_hi = min(y1, y2), max(y1, y2)
    lhs = measure_of_interval(ctx, H, img_lo, img_hi, tol=eval_tol)
    rhs = 0.0
    dlo, dhi = max(lo, ctx.c2), min(hi, ctx.chat2)
    if dlo < dhi:
        rhs += 2.0 * measure_of_interval(ctx, H, dlo, dhi, tol=eval_tol)
    slo, shi = max(lo, ctx.chat2), min(hi, ctx.c1)
    if slo < shi:
        rhs += measure_of_interval(ctx, H, slo, shi, tol=eval_tol)
    return CheckReport(lhs=lhs, rhs=rhs, tol=tol, passed=abs(lhs - rhs) <= tol)


def invariance_check(
    ctx: TentContext,
    H: float,
    lo: float,
    hi: float,
    tol: float = 1e-5,
) -> CheckReport:
    """Mass of the preimage of [lo, hi] against the mass of [lo, hi]."""
    if not (ctx.c2 - 1e-12 <= lo <= hi <= ctx.c1 + 1e-12):
        raise DomainError(f"[{lo}, {hi}] is not a subinterval of I_a")
    eval_tol = tol / 8.0
    a = ctx.a
    u = (1.0 - hi) / a
    v = (1.0 - lo) / a
    rhs = measure_of_interval(ctx, H, lo, hi, tol=eval_tol)
    lhs = 0.0
    plo, phi_ = max(u, ctx.c2), min(v, ctx.c1)
    if plo < phi_:
        lhs += measure_of_interval(ctx, H, plo, phi_, tol=eval_tol)
    mlo, mhi = max(-v, ctx.c2), min(-u, ctx.c1)
    if mlo < mhi:
        lhs += measure_of_interval(ctx, H, mlo, mhi, tol=eval_tol)
    return CheckReport(lhs=lhs, rhs=rhs, tol=tol, passed=abs(lhs - rhs) <= tol)


# ----------------------------------------------------------------------
# absolutely continuous invariant probability
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AcipBudget:
    n_iter: int = 10 ** 7
    burn_in: int = 10 ** 4
    bins: int = 2 ** 14
    seed: int = 0


def _birkhoff_fraction_python(a, x, n, burn, lo, hi, c2, c1, seed):
    # ulp-scale dither keeps the orbit off the absorbing dyadic tree that a
    # plain float iteration falls into at a = 2 (one mantissa bit per step)
    state = np.uint64(seed * 2 + 1)
    mult = np.uint64(6364136223846793005)
    inc = np.uint64(1442695040888963407)
    scale = 2.0 ** -53
    cnt = 0
    for i in range(burn + n):
        state = state * mult + inc
        eta = (float(state >> np.uint64(11)) * scale - 0.5) * 2e-12
        x = 1.0 - a * abs(x) + eta
        if x < c2:
            x = c2
        elif x > c1:
            x = c1
        if i >= burn and lo <= x <= hi:
            cnt += 1
    return cnt / n


_birkhoff_jit = None


def _birkhoff_fraction(a, x, n, burn, lo, hi):
    global _birkhoff_jit
    if _birkhoff_jit is None:
        try:
            from numba import njit

            _birkhoff_jit = njit(cache=True)(_birkhoff_fraction_python)
        except ImportError:  # pragma: no cover
            _birkhoff_jit = _birkhoff_fraction_python
    return _birkhoff_jit(a, x, n, burn, lo, hi)


def ulam_matrix(ctx: TentContext, bins: int):
    """Row-stochastic Ulam matrix with transition mass computed exactly from
    the two linear branches (no sampling)."""
    from scipy import sparse

    a, c2, c1 = ctx.a, ctx.c2, ctx.c1
    edges = np.linspace(c2, c1, bins + 1)
    h = (c1 - c2) / bins
    starts = edges[:-1]
    ends = edges[1:]
    rows_all = []
    cols_all = []
    vals_all = []

    def add_pieces(u, v, src):
        keep = v > u
        u, v, src = u[keep], v[keep], src[keep]
        mid = 0.5 * (u + v)
        neg = mid < 0.0
        y1 = np.where(neg, 1.0 + a * u, 1.0 - a * v)
        y2 = np.where(neg, 1.0 + a * v, 1.0 - a * u)
        frac = (v - u) / h
        length = y2 - y1
        j0 = np.floor((y1 - c2) / h).astype(np.int64)
        j0 = np.clip(j0, 0, bins - 1)
        spread = int(math.ceil(a)) + 2
        for off in range(spread):
            cols = np.clip(j0 + off, 0, bins - 1)
            left = np.maximum(y1, edges[cols])
            right = np.minimum(y2, edges[cols + 1])
            ov = np.clip(right - left, 0.0, None)
            m = ov > 0.0
            rows_all.append(src[m])
            cols_all.append(cols[m])
            vals_all.append((ov[m] / length[m]) * frac[m])

    src = np.arange(bins, dtype=np.int64)
    straddle = (starts < 0.0) & (ends > 0.0)
    # one piece per monotone part of the bin; the cut at 0 splits straddlers
    add_pieces(starts, np.where(straddle, 0.0, ends), src)
    add_pieces(np.zeros(bins), np.where(straddle, ends, 0.0), src)
    rows = np.concatenate(rows_all)
    cols = np.concatenate(cols_all)
    vals = np.concatenate(vals_all)
    P = sparse.coo_matrix((vals, (rows, cols)), shape=(bins, bins)).tocsr()
    rowsum = np.asarray(P.sum(axis=1)).ravel()
    rowsum[rowsum == 0.0] = 1.0
    P = sparse.diags(1.0 / rowsum) @ P
    return P, edges


def ulam_stationary(ctx: TentContext, bins: int,
                    tol: float = 1e-13, max_iter: int = 20000) -> tuple[np.ndarray, np.ndarray]:
    P, edges = ulam_matrix(ctx, bins)
    PT = P.T.tocsr()
    v = np.full(bins, 1.0 / bins)
    for _ in range(max_iter):
        w = PT @ v
        w /= w.sum()
        if np.abs(w - v).sum() < tol:
            v = w
            break
        v = w
    return v, edges


def acip_interval_mass(
    ctx: TentContext,
    lo: float,
    hi: float,
    method: str = "birkhoff",
    budget: AcipBudget | None = None,
) -> float:
    """Estimate of the a.c.i.p. mass of [lo, hi].

    birkhoff: visit fraction of a single long, seeded random orbit after
    burn-in.  ulam: stationary vector of the exact-geometry bin chain,
    prorating bins that only partially overlap [lo, hi].
    """
    budget = budget or AcipBudget()
    lo = max(lo, ctx.c2)
    hi = min(hi, ctx.c1)
    if hi < lo:
        return 0.0
    if method == "birkhoff":
        rng = np.random.default_rng(budget.seed)
        x0 = float(rng.uniform(ctx.c2, ctx.c1))
        return float(_birkhoff_fraction(ctx.a, x0, budget.n_iter,
                                        budget.burn_in, lo, hi,
                                        ctx.c2, ctx.c1, budget.seed))
    if method == "ulam":
        v, edges = ulam_stationary(ctx, budget.bins)
        left = np.maximum(edges[:-1], lo)
        right = np.minimum(edges[1:], hi)
        ov = np.clip(right - left, 0.0, None)
        width = edges[1] - edges[0]
        return float(np.sum(v * ov / width))
    raise ValueError(f"unknown method {method!r}")


def variational_gap(ctx: TentContext, budget: AcipBudget | None = None,
                    method: str = "birkhoff") -> float:
    """nu_a([c2, chat2]) - log(a)/log(2); strictly positive away from a=2
    because the a.c.i.p. is not the fair measure."""
    mass = acip_interval_mass(ctx, ctx.c2, ctx.chat2, method=method, budget=budget)
    return mass - math.log(ctx.a) / LOG2


def hausdorff_dimension(ctx: TentContext, tol: float = 1e-9) -> float:
    """Dimension of the fair measure, 2 log2 * H / log a, from the best
    available entropy enclosure."""
    need = tol * math.log(ctx.a) / (2.0 * LOG2)
    enc = entropy_with_fallback(ctx, tol=max(min(need / 2.0, 1e-9), 1e-13))
    return enc.dimension(ctx.a)
