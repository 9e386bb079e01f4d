"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import datetime
import functools
import math
import time

import numpy as np
import pytest

from lix import (AdvContext, BasketPosition, BasketSpec, BookLevel, DailyBar,
                 ExecutionPlan, MultiDayWindow, OrderBookSnapshot,
                 ScalingParams, amihud_illiq, basket_lix, basket_with_etf_lix,
                 cost_per_unit, cost_per_unit_value, cost_single_shot,
                 cost_sliced, hui_heubel, lix_daily, lix_intraday_raw, lixi,
                 lixi_decomposed, lixi_tau, time_scale_to_daily)
from lix.cli import main
from lix.simlab import (PathModel, WalkKind, default_universe, estimate_alpha,
                        exact_scaling_session, lixi_vs_lix_study)

import io as _io


def criterion(number, description):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL criterion {number}: {description}")
                raise
            print(f"PASS criterion {number}: {description}")
        return wrapper
    return deco


def random_book(rng):
    mid = rng.uniform(1.0, 1000.0)
    half = rng.uniform(1e-4, 0.3) * mid
    n_bid = rng.integers(1, 9)
    n_ask = rng.integers(1, 9)
    tick = half / 20
    bids = tuple(BookLevel(mid - half - i * tick, rng.uniform(1, 1e6))
                 for i in range(n_bid))
    asks = tuple(BookLevel(mid + half + i * tick, rng.uniform(1, 1e6))
                 for i in range(n_ask))
    return OrderBookSnapshot(timestamp=0.0, bids=bids, asks=asks)


@criterion(1, "LIXI decomposition identity over 1000 random books, <1e-12, <1s")
def test_criterion_1_decomposition_identity():
    rng = np.random.default_rng(1)
    start = time.perf_counter()
    for _ in range(1000):
        book = random_book(rng)
        ctx = AdvContext(rng.uniform(1, 1e9))
        d = lixi_decomposed(book, ctx)
        full = lixi(book, ctx, ScalingParams(0.5)).value
        assert abs(d.total - full) < 1e-12
    assert time.perf_counter() - start < 1.0


@criterion(2, "Appendix B basket suite (B.1 exact, B.2 <1e-12, B.3 floor)")
def test_criterion_2_appendix_b():
    # B.1: single instrument
    b1 = BasketSpec.build([BasketPosition("ONLY", 1.0, 7.0)])
    assert basket_lix(b1).value == 7.0

    # B.2: equal liquidity, any weight split
    for beta in (0.1, 0.25, 0.3, 0.5, 0.9):
        b2 = BasketSpec.build([BasketPosition("A", beta, 8.0),
                               BasketPosition("B", 1 - beta, 8.0)])
        assert abs(basket_lix(b2).value - 8.0) < 1e-12

    # B.3: equal weights, LIX1 << LIX2. The basket sits log10(1+10^(L1-L2))
    # under LIX1 + log10(2), so the 1e-12 floor needs a wide gap; the 0.3
    # floor holds from a few decades up.
    b3 = BasketSpec.build([BasketPosition("LOW", 0.5, 5.0),
                           BasketPosition("HIGH", 0.5, 19.0)])
    assert basket_lix(b3).value - 5.0 >= math.log10(2) - 1e-12
    moderate = BasketSpec.build([BasketPosition("LOW", 0.5, 5.0),
                                 BasketPosition("HIGH", 0.5, 9.0)])
    assert basket_lix(moderate).value > 5.0 + 0.3


@criterion(3, "alpha Monte Carlo: random walk in [0.48,0.52], drift = 1, <60s")
def test_criterion_3_alpha_monte_carlo():
    grid = [i / 10 for i in range(1, 11)]
    start = time.perf_counter()
    model = PathModel(kind=WalkKind.ARITHMETIC_RANDOM_WALK,
                      steps_per_day=4000, volatility_per_step=0.01, seed=1)
    est = estimate_alpha(model, 100_000, grid)
    elapsed = time.perf_counter() - start
    assert 0.48 <= est.alpha_hat <= 0.52, est
    assert est.stderr < 0.01, est
    assert elapsed < 60.0, elapsed

    drift = PathModel(kind=WalkKind.ARITHMETIC_RANDOM_WALK, steps_per_day=100,
                      volatility_per_step=0.0, drift_per_step=0.01, seed=0)
    d = estimate_alpha(drift, 1000, grid)
    assert abs(d.alpha_hat - 1.0) <= 1e-9


@criterion(4, "exact intraday scaling reproduces daily LIX, 100-pt grid, <1e-10")
def test_criterion_4_scaling_consistency():
    bar = DailyBar("T", datetime.date(2013, 11, 20), 50.2, 51.0, 50.0, 50.6,
                   10_000_000)
    daily = lix_daily(bar).value
    fractions = [k / 100 for k in range(1, 101)]
    for alpha in (0.5, 0.6):
        for w in exact_scaling_session(bar, alpha, fractions):
            scaled = time_scale_to_daily(lix_intraday_raw(w), w.elapsed,
                                         w.session_length, ScalingParams(alpha))
            assert abs(scaled.value - daily) < 1e-10


@criterion(5, "cost-algebra identities, 1e-12 relative, incl. basket costs")
def test_criterion_5_cost_identities():
    rng = np.random.default_rng(5)
    for _ in range(500):
        T = 28800.0
        plan = ExecutionPlan(shares=rng.uniform(1, 1e8),
                             price=rng.uniform(0.01, 1e4),
                             lix=rng.uniform(0, 12),
                             slice_interval=rng.uniform(1, T),
                             session_length=T,
                             alpha=rng.uniform(0.1, 1.0))
        single, sliced, unit = (cost_single_shot(plan), cost_sliced(plan),
                                cost_per_unit(plan))
        assert abs(single - plan.shares * sliced) <= 1e-12 * single
        assert abs(sliced - plan.shares * plan.price * unit) <= 1e-12 * sliced

    for _ in range(200):
        n = rng.integers(1, 9)
        betas = rng.uniform(0.01, 1.0, size=n)
        lixs = rng.uniform(2, 11, size=n)
        spec = BasketSpec.build([BasketPosition(f"I{i}", betas[i], lixs[i])
                                 for i in range(n)])
        t = rng.uniform(1, 28800.0)
        weighted = math.fsum(p.beta * cost_per_unit_value(p.lix, t, 28800.0)
                             for p in spec.positions)
        combined = cost_per_unit_value(basket_lix(spec).value, t, 28800.0)
        assert abs(combined - weighted) <= 1e-12 * weighted


@criterion(6, "synthetic LIXI-vs-LIX study: R^2 >= 0.90, slope in [0.9,1.1], "
              "universe spans ~[5,10], <120s")
def test_criterion_6_study():
    start = time.perf_counter()
    universe = default_universe(50, seed=7)
    report, points = lixi_vs_lix_study(universe, days=20, seed=7)
    elapsed = time.perf_counter() - start
    assert report.r_squared >= 0.90, report
    assert 0.9 <= report.slope <= 1.1, report
    assert elapsed < 120.0, elapsed
    xs = [p.mean_lix for p in points]
    assert min(xs) <= 5.3 and max(xs) >= 9.7, (min(xs), max(xs))


@criterion(7, "Appendix A pathologies: Amihud blind spot; Hui-Heubel split drop")
def test_criterion_7_classical_pathologies():
    def bar(day, close, high, low, volume=1e6, open_=None):
        return DailyBar("T", datetime.date(2020, 1, 1) + datetime.timedelta(days=day),
                        open_ if open_ is not None else close, high, low, close,
                        volume)

    # volatile round-trip day: no Amihud contribution, finite range index
    flat = MultiDayWindow((bar(0, 100, 101, 99), bar(1, 100, 110, 90)),
                          shares_outstanding=1e8)
    assert amihud_illiq(flat) == 0.0
    assert math.isfinite(lix_daily(flat.bars[1]).value)

    # n-for-1 split with a stale shares-outstanding figure: measure drops 1/n
    for n in (2, 3, 10):
        before = MultiDayWindow(tuple(bar(i, 100, 101, 99) for i in range(5)),
                                shares_outstanding=1e8)
        after = MultiDayWindow(tuple(bar(i, 100 / n, 101 / n, 99 / n,
                                         volume=1e6 * n) for i in range(5)),
                               shares_outstanding=1e8)
        ratio = hui_heubel(after) / hui_heubel(before)
        assert abs(ratio - 1.0 / n) <= 1e-9


@criterion(8, "invariance suite: currency rescaling, basket bounds and symmetry")
def test_criterion_8_invariances():
    rng = np.random.default_rng(8)
    for _ in range(200):
        k = rng.uniform(1e-3, 1e3)
        o, c = sorted(rng.uniform(50, 51, size=2))
        bar = DailyBar("T", datetime.date(2020, 1, 1), o, 51.0, 50.0, c, 1e6)
        scaled = DailyBar("T", datetime.date(2020, 1, 1), o * k, 51.0 * k,
                          50.0 * k, c * k, 1e6)
        assert abs(lix_daily(bar).value - lix_daily(scaled).value) < 1e-12

        book = random_book(rng)
        scaled_book = OrderBookSnapshot(
            0.0, tuple(BookLevel(l.price * k, l.volume) for l in book.bids),
            tuple(BookLevel(l.price * k, l.volume) for l in book.asks))
        assert abs(lixi_tau(book).value - lixi_tau(scaled_book).value) < 1e-12

        base_days = tuple(
            DailyBar("T", datetime.date(2020, 1, 1) + datetime.timedelta(days=i),
                     100.0, 101.0, 99.0, 100.0, 1e6) for i in range(5))
        scaled_days = tuple(
            DailyBar("T", b.date, b.open * k, b.high * k, b.low * k,
                     b.close * k, b.volume) for b in base_days)
        hh_a = hui_heubel(MultiDayWindow(base_days, shares_outstanding=1e8))
        hh_b = hui_heubel(MultiDayWindow(scaled_days, shares_outstanding=1e8))
        assert abs(hh_a - hh_b) <= 1e-12 * hh_a

    for _ in range(200):
        n = rng.integers(1, 9)
        positions = [BasketPosition(f"I{i}", rng.uniform(0.01, 1.0),
                                    rng.uniform(3, 11)) for i in range(n)]
        spec = BasketSpec.build(positions)
        vals = [p.lix for p in spec.positions]
        got = basket_lix(spec).value
        assert min(vals) - 1e-9 <= got <= max(vals) + 1e-9
        # permutation invariance (exact) and split-merge (1e-12)
        assert basket_lix(BasketSpec(tuple(reversed(spec.positions)))).value == got
        first = spec.positions[0]
        split = BasketSpec((BasketPosition("a", first.beta / 2, first.lix),
                            BasketPosition("b", first.beta / 2, first.lix))
                           + spec.positions[1:])
        assert abs(basket_lix(split).value - got) < 1e-12
        etf = rng.uniform(3, 11)
        combined = basket_with_etf_lix(BasketSpec(spec.positions, etf_lix=etf)).value
        assert combined >= max(got, etf)


def _malformed_bar_file(rng, path):
    """Write a bar CSV that is malformed by construction; return kind."""
    header = "date,open,high,low,close,volume"
    good = "2020-01-02,50,51,49,50,1000"
    kind = rng.integers(0, 8)
    if kind == 0:    # mangled header
        body = "dote,open,high,low,close,volume\n" + good
    elif kind == 1:  # wrong field count
        body = f"{header}\n2020-01-02,50,51,49\n"
    elif kind == 2:  # non-numeric field
        body = f"{header}\n2020-01-02,fifty,51,49,50,1000\n"
    elif kind == 3:  # non-finite field
        token = ["nan", "inf", "-inf"][rng.integers(0, 3)]
        body = f"{header}\n2020-01-02,50,{token},49,50,1000\n"
    elif kind == 4:  # bad date
        body = f"{header}\n02/01/2020,50,51,49,50,1000\n"
    elif kind == 5:  # duplicate date
        body = f"{header}\n{good}\n{good}\n"
    elif kind == 6:  # invariant violation: open below low
        body = f"{header}\n2020-01-02,48,51,49,50,1000\n"
    else:            # binary garbage
        raw = bytes(rng.integers(0, 256, size=64, dtype=np.uint8).tolist())
        path.write_bytes(raw)
        return
    path.write_text(body, encoding="utf-8")


@criterion(9, "I/O fuzzing: 10^4 malformed CSVs exit 2 with located errors, no NaN")
def test_criterion_9_io_robustness(tmp_path):
    rng = np.random.default_rng(9)
    path = tmp_path / "fuzz.csv"
    for _ in range(10_000):
        _malformed_bar_file(rng, path)
        out, err = _io.StringIO(), _io.StringIO()
        code = main(["lix", str(path)], out=out, err=err)
        assert code == 2, (code, path.read_bytes()[:120], err.getvalue())
        assert "nan" not in out.getvalue().lower()
        message = err.getvalue().lower()
        assert "error" in message
        assert "line" in message or "utf-8" in message, message
