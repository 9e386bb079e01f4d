"""Synthetic-data lab: range-scaling exponent estimation and the
instantaneous-vs-daily liquidity regression study.

The exponent alpha is estimated by simulating price paths, measuring the
mean running range at a grid of session fractions, and fitting
log10(mean range) against log10(fraction) by least squares. The study
generates a universe of synthetic instruments spanning several decades of
liquidity, measures each one both ways (daily index averaged over days,
snapshot index averaged over one day) and regresses one on the other.

All randomness is driven by numpy bit generators keyed as
SeedSequence([seed, stream]); path chunks use a fixed chunk size so results
are independent of how work is scheduled.
"""

from __future__ import annotations

import datetime
import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import errors
from .measures import DailyBar, IntradayWindow, ScalingParams, lix_daily
from .orderbook import AdvContext, BookLevel, OrderBookSnapshot, lixi

_CHUNK_PATHS = 4096  # fixed so chunking never changes results


class WalkKind(enum.Enum):
    ARITHMETIC_RANDOM_WALK = "rw"
    GAUSSIAN_RETURNS = "gauss"
    STUDENT_T_RETURNS = "t"


@dataclass(frozen=True)
class PathModel:
    """Price-path generator settings.

    volatility_per_step is in price units for the arithmetic walk and in
    log-return units for the two return models. Zero volatility is admitted
    for degenerate fixtures (pure drift, or a flat path).
    """

    kind: WalkKind
    steps_per_day: int = 2000
    volatility_per_step: float = 0.01
    seed: int = 0
    dof: float | None = None
    drift_per_step: float = 0.0

    def __post_init__(self):
        if self.steps_per_day < 10:
            raise errors.InvalidParams(
                f"steps_per_day must be >= 10, got {self.steps_per_day}")
        if self.volatility_per_step < 0:
            raise errors.InvalidParams(
                f"volatility_per_step must be >= 0, got {self.volatility_per_step}")
        if self.kind is WalkKind.STUDENT_T_RETURNS:
            if self.dof is None or self.dof <= 2:
                raise errors.InvalidParams(
                    f"Student-t model needs dof > 2, got {self.dof}")
        if self.seed < 0:
            raise errors.InvalidParams(f"seed must be non-negative, got {self.seed}")


def _increments(model: PathModel, rng: np.random.Generator, shape) -> np.ndarray:
    if model.volatility_per_step == 0:
        z = np.zeros(shape)
    elif model.kind is WalkKind.STUDENT_T_RETURNS:
        z = rng.standard_t(model.dof, size=shape) * model.volatility_per_step
    else:
        z = rng.standard_normal(shape) * model.volatility_per_step
    return z + model.drift_per_step


def simulate_paths(model: PathModel, n_paths: int, seed: int | None = None,
                   start_price: float = 100.0, stream: int = 0) -> np.ndarray:
    """(n_paths, steps + 1) price paths including the starting price."""
    s = model.seed if seed is None else seed
    rng = np.random.default_rng(np.random.SeedSequence([s, stream]))
    inc = _increments(model, rng, (n_paths, model.steps_per_day))
    out = np.empty((n_paths, model.steps_per_day + 1))
    out[:, 0] = start_price
    if model.kind is WalkKind.ARITHMETIC_RANDOM_WALK:
        out[:, 1:] = start_price + np.cumsum(inc, axis=1)
    else:
        out[:, 1:] = start_price * np.exp(np.cumsum(inc, axis=1))
    return out


@dataclass(frozen=True)
class AlphaEstimate:
    alpha_hat: float
    stderr: float
    n_paths: int
    time_grid: tuple[float, ...]


def _ols(x: np.ndarray, y: np.ndarray):
    """Slope, intercept, R^2 and slope standard error of a simple OLS fit."""
    n = len(x)
    xbar, ybar = x.mean(), y.mean()
    sxx = float(np.sum((x - xbar) ** 2))
    if n < 2 or sxx == 0:
        raise errors.DegenerateRegression("need >= 2 distinct x values")
    slope = float(np.sum((x - xbar) * (y - ybar)) / sxx)
    intercept = ybar - slope * xbar
    resid = y - (intercept + slope * x)
    sse = float(np.sum(resid ** 2))
    syy = float(np.sum((y - ybar) ** 2))
    r_squared = 1.0 if syy == 0 else 1.0 - sse / syy
    stderr = math.sqrt(sse / (n - 2) / sxx) if n > 2 else 0.0
    return slope, float(intercept), min(max(r_squared, 0.0), 1.0), stderr


def estimate_alpha(model: PathModel, n_paths: int, time_grid) -> AlphaEstimate:
    """Fit the range-scaling exponent from the mean running range.

    For each grid fraction f the running high-low range over the first
    round(f * steps) steps (start price included) is averaged across paths;
    the slope of log10(mean range) on log10(f) is alpha_hat. Deterministic
    given (model.seed, n_paths, grid): paths are generated in fixed-size
    chunks with per-chunk seed streams.
    """
    grid = tuple(float(f) for f in time_grid)
    if len(set(grid)) != len(grid) or len(grid) < 2:
        raise errors.DegenerateGrid("time grid fractions must be distinct")
    if any(not (0 < f <= 1) for f in grid):
        raise errors.DegenerateGrid("time grid fractions must lie in (0, 1]")
    if n_paths < 1:
        raise errors.InvalidParams("n_paths must be positive")

    idx = np.array([max(1, round(f * model.steps_per_day)) for f in grid])
    sums = np.zeros(len(grid))
    done = 0
    chunk_index = 0
    while done < n_paths:
        m = min(_CHUNK_PATHS, n_paths - done)
        paths = simulate_paths(model, m, stream=chunk_index)
        hi = np.maximum.accumulate(paths, axis=1)
        lo = np.minimum.accumulate(paths, axis=1)
        sums += (hi[:, idx] - lo[:, idx]).sum(axis=0)
        done += m
        chunk_index += 1

    mean_range = sums / n_paths
    if np.any(mean_range <= 0):
        raise errors.ZeroRange("mean price range is zero on part of the grid; "
                               "the model produces no price movement there")
    x = np.log10(np.asarray(grid))
    y = np.log10(mean_range)
    slope, _, _, stderr = _ols(x, y)
    return AlphaEstimate(alpha_hat=slope, stderr=stderr,
                         n_paths=n_paths, time_grid=grid)


@dataclass(frozen=True)
class BookParams:
    """Snapshot generator settings for one synthetic instrument.

    Book depth is a fraction of daily volume; the target VWAP spread is the
    range expected over the book's turnover time, realized_range *
    sqrt(depth / ADV), so snapshot liquidity tracks the daily index by
    construction. Lognormal jitters provide scatter.
    """

    start_price: float = 100.0
    levels: int = 5
    depth_fraction: float = 0.02
    depth_jitter: float = 0.25
    spread_jitter: float = 0.15
    n_snapshots: int = 100
    n_windows: int = 100
    min_spread_fraction: float = 1e-6

    def __post_init__(self):
        if self.start_price <= 0 or self.levels < 1 or self.depth_fraction <= 0:
            raise errors.InvalidParams("invalid book parameters")
        if self.depth_jitter < 0 or self.spread_jitter < 0:
            raise errors.InvalidParams("jitters must be non-negative")
        if self.n_snapshots < 1 or self.n_windows < 1:
            raise errors.InvalidParams("need at least one snapshot and window")


def _snapshot_at(mid: float, total_depth: float, vwap_spread: float,
                 levels: int, timestamp: float) -> OrderBookSnapshot:
    # Level prices mid +/- (spread/2) * 2i/(k+1) with equal volumes give
    # side VWAPs exactly spread/2 away from mid and a strictly ordered book.
    per_level = total_depth / (2 * levels)
    half = vwap_spread / 2
    bids = tuple(BookLevel(mid - half * 2 * i / (levels + 1), per_level)
                 for i in range(1, levels + 1))
    asks = tuple(BookLevel(mid + half * 2 * i / (levels + 1), per_level)
                 for i in range(1, levels + 1))
    return OrderBookSnapshot(timestamp=timestamp, bids=bids, asks=asks)


def synth_session(model: PathModel, daily_volume: float, book_params: BookParams,
                  seed: int | None = None, instrument_id: str = "SYN",
                  day: datetime.date = datetime.date(2020, 1, 1),
                  session_length: float = 28800.0):
    """One simulated trading session.

    Returns (DailyBar, snapshots, windows): a price path summarized as a
    bar, book snapshots sampled uniformly through the day, and cumulative
    intraday windows with volume linear in elapsed time. Deterministic given
    the seed.
    """
    if daily_volume <= 0:
        raise errors.InvalidParams(f"daily_volume must be positive, got {daily_volume}")
    s = model.seed if seed is None else seed
    rng = np.random.default_rng(np.random.SeedSequence([s, 1]))
    prices = simulate_paths(model, 1, seed=s, start_price=book_params.start_price)[0]
    if prices.min() <= 0:
        raise errors.InvalidParams(
            "price path crossed zero; lower volatility or drift")
    steps = model.steps_per_day

    bar = DailyBar(instrument_id=instrument_id, date=day,
                   open=float(prices[0]), high=float(prices.max()),
                   low=float(prices.min()), close=float(prices[-1]),
                   volume=float(daily_volume))
    realized_range = bar.high - bar.low

    snapshots = []
    for k in range(1, book_params.n_snapshots + 1):
        step = max(1, round(k * steps / book_params.n_snapshots))
        t = step / steps * session_length
        mid = float(prices[step])
        depth = daily_volume * book_params.depth_fraction
        if book_params.depth_jitter > 0:
            depth *= math.exp(book_params.depth_jitter * rng.standard_normal())
        spread = max(realized_range, book_params.min_spread_fraction * mid) \
            * math.sqrt(depth / daily_volume)
        if book_params.spread_jitter > 0:
            spread *= math.exp(book_params.spread_jitter * rng.standard_normal())
        spread = min(spread, 1.8 * mid)  # keep deep bid levels positive
        snapshots.append(_snapshot_at(mid, depth, spread, book_params.levels, t))

    hi = np.maximum.accumulate(prices)
    lo = np.minimum.accumulate(prices)
    windows = []
    for k in range(1, book_params.n_windows + 1):
        step = max(2, round(k * steps / book_params.n_windows))
        frac = step / steps
        windows.append(IntradayWindow(
            elapsed=frac * session_length, session_length=session_length,
            cum_volume=daily_volume * frac, high_t=float(hi[step]),
            low_t=float(lo[step]), last_price=float(prices[step])))
    return bar, snapshots, windows


def exact_scaling_session(bar: DailyBar, alpha: float, fractions,
                          session_length: float = 28800.0):
    """Intraday windows satisfying the linear-volume and t^alpha-range
    assumptions exactly, anchored to the given full-day bar.

    The window range at fraction f is (high - low) * f^alpha placed around
    the close so the f = 1 window reproduces the bar; last price is the
    close throughout. Useful as an oracle for the time-scaling rule.
    """
    if bar.high <= bar.low:
        raise errors.ZeroRange("full-day bar has no range")
    full_range = bar.high - bar.low
    anchor = (bar.close - bar.low) / full_range
    windows = []
    for f in fractions:
        if not (0 < f <= 1):
            raise errors.DegenerateGrid(f"fraction {f} outside (0, 1]")
        rng_t = full_range * f ** alpha
        low_t = bar.close - anchor * rng_t
        windows.append(IntradayWindow(
            elapsed=f * session_length, session_length=session_length,
            cum_volume=bar.volume * f, high_t=low_t + rng_t,
            low_t=low_t, last_price=bar.close))
    return windows


@dataclass(frozen=True)
class InstrumentParams:
    instrument_id: str
    model: PathModel
    base_volume: float
    book: BookParams
    volume_jitter: float = 0.2

    def __post_init__(self):
        if self.base_volume <= 0:
            raise errors.InvalidParams("base_volume must be positive")
        if self.volume_jitter < 0:
            raise errors.InvalidParams("volume_jitter must be >= 0")


@dataclass(frozen=True)
class RegressionReport:
    slope: float
    intercept: float
    r_squared: float
    n_points: int
    n_dropped: int = 0

    def __post_init__(self):
        if not (0 <= self.r_squared <= 1):
            raise errors.InvalidParams(f"r_squared {self.r_squared} outside [0, 1]")


@dataclass(frozen=True)
class StudyPoint:
    instrument_id: str
    mean_lix: float
    mean_lixi: float


def default_universe(n_instruments: int = 50, lix_range=(5.0, 10.0),
                     start_price: float = 100.0, steps_per_day: int = 250,
                     daily_range_fraction: float = 0.02,
                     seed: int = 0) -> list[InstrumentParams]:
    """Instruments with target liquidity evenly spaced across lix_range.

    Daily volume is chosen so volume * price / expected_range hits the
    target: the expected daily range of a Gaussian-return path is about
    price * sigma_day * sqrt(8/pi).
    """
    if n_instruments < 1:
        raise errors.InvalidParams("need at least one instrument")
    lo, hi = lix_range
    sigma_day = daily_range_fraction / math.sqrt(8 / math.pi)
    universe = []
    for i in range(n_instruments):
        target = lo if n_instruments == 1 else lo + (hi - lo) * i / (n_instruments - 1)
        expected_range = start_price * daily_range_fraction
        volume = expected_range * 10 ** target / start_price
        model = PathModel(kind=WalkKind.GAUSSIAN_RETURNS,
                          steps_per_day=steps_per_day,
                          volatility_per_step=sigma_day / math.sqrt(steps_per_day),
                          seed=seed)
        universe.append(InstrumentParams(
            instrument_id=f"SYN{i:03d}", model=model, base_volume=volume,
            book=BookParams(start_price=start_price)))
    return universe


def lixi_vs_lix_study(universe, days: int, seed: int,
                      snapshots_per_day: int = 100):
    """Regress one-day mean snapshot liquidity on multi-day mean daily index.

    Both averages are arithmetic means of log-scale values: daily LIX over
    `days` simulated sessions, LIXI (alpha = 1/2, ADV from the same
    sessions) over `snapshots_per_day` uniform snapshots of the final day.
    Instruments whose every day errors out are dropped and counted.

    Returns (RegressionReport, [StudyPoint]).
    """
    if days < 1:
        raise errors.InvalidParams("days must be >= 1")
    universe = list(universe)
    points = []
    dropped = 0
    params = ScalingParams(0.5)
    for i, inst in enumerate(universe):
        inst_rng = np.random.default_rng(np.random.SeedSequence([seed, 2, i]))
        book = replace(inst.book, n_snapshots=snapshots_per_day, n_windows=1)
        lix_values = []
        last_day = None
        volumes = []
        for d in range(days):
            volume = inst.base_volume
            if inst.volume_jitter > 0:
                volume *= math.exp(inst.volume_jitter * inst_rng.standard_normal())
            day_seed = int(inst_rng.integers(0, 2 ** 62))
            try:
                bar, snaps, _ = synth_session(
                    inst.model, volume, book, seed=day_seed,
                    instrument_id=inst.instrument_id,
                    day=datetime.date(2020, 1, 1) + datetime.timedelta(days=d))
                lix_values.append(lix_daily(bar).value)
                volumes.append(volume)
                last_day = snaps
            except errors.LixError:
                continue
        if not lix_values or last_day is None:
            dropped += 1
            continue
        ctx = AdvContext(adv=sum(volumes) / len(volumes),
                         window_days=min(20, len(volumes)))
        lixi_values = []
        for snap in last_day:
            try:
                lixi_values.append(lixi(snap, ctx, params).value)
            except errors.LixError:
                continue
        if not lixi_values:
            dropped += 1
            continue
        points.append(StudyPoint(
            instrument_id=inst.instrument_id,
            mean_lix=sum(lix_values) / len(lix_values),
            mean_lixi=sum(lixi_values) / len(lixi_values)))

    if len(points) < 2:
        raise errors.DegenerateRegression(
            f"need >= 2 instruments with usable data, got {len(points)}")
    x = np.array([p.mean_lix for p in points])
    y = np.array([p.mean_lixi for p in points])
    slope, intercept, r_squared, _ = _ols(x, y)
    report = RegressionReport(slope=slope, intercept=intercept,
                              r_squared=r_squared, n_points=len(points),
                              n_dropped=dropped)
    return report, points
