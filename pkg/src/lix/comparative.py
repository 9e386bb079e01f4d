"""Classical volume-based liquidity measures for side-by-side comparison.

Hui-Heubel relates the five-day relative price range to turnover of the
float; Amihud's ILLIQ averages |daily return| per dollar traded. Both use
the dollar-volume proxy close * volume per day.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import errors
from .measures import DailyBar

HUI_HEUBEL_DAYS = 5  # fixed by the cited definition; not configurable


@dataclass(frozen=True)
class MultiDayWindow:
    """Consecutive daily bars for one instrument plus its share count."""

    bars: tuple[DailyBar, ...]
    shares_outstanding: float

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(self.bars))
        if not self.bars:
            raise errors.EmptyDataset("window has no bars")
        ids = {b.instrument_id for b in self.bars}
        if len(ids) > 1:
            raise errors.InvariantViolation(f"mixed instruments in window: {sorted(ids)}")
        for prev, cur in zip(self.bars, self.bars[1:]):
            if cur.date <= prev.date:
                raise errors.InvariantViolation(
                    f"dates not strictly increasing at {cur.date}")
        if not (math.isfinite(self.shares_outstanding) and self.shares_outstanding > 0):
            raise errors.InvalidParams(
                f"shares_outstanding must be positive, got {self.shares_outstanding}")


def hui_heubel(w: MultiDayWindow) -> float:
    """Hui-Heubel liquidity ratio over the trailing five days.

    ((P_high - P_low) / P_low) / ($V / (M * E(P))) with P_high/P_low the
    extreme daily high/low, $V the summed close * volume, E(P) the mean
    close. Depends on shares outstanding M, hence sensitive to stale M
    around stock splits.
    """
    if len(w.bars) < HUI_HEUBEL_DAYS:
        raise errors.InsufficientData(
            f"need {HUI_HEUBEL_DAYS} bars, got {len(w.bars)}")
    recent = w.bars[-HUI_HEUBEL_DAYS:]
    p_high = max(b.high for b in recent)
    p_low = min(b.low for b in recent)
    if p_high == p_low:
        raise errors.ZeroRange("no price range over the five-day window")
    dollar_volume = sum(b.close * b.volume for b in recent)
    if dollar_volume <= 0:
        raise errors.ZeroDollarVolume("zero dollar volume over the five-day window")
    mean_close = sum(b.close for b in recent) / len(recent)
    return ((p_high - p_low) / p_low) / (dollar_volume / (w.shares_outstanding * mean_close))


def amihud_illiq(w: MultiDayWindow) -> float:
    """Amihud illiquidity: mean over days of |simple return| / dollar volume.

    A volatile day whose close matches the previous close contributes zero,
    which is exactly the pathology the range-based index avoids.
    """
    if len(w.bars) < 2:
        raise errors.InsufficientData("need at least 2 bars for a return")
    total = 0.0
    n = 0
    for prev, cur in zip(w.bars, w.bars[1:]):
        dollar_volume = cur.close * cur.volume
        if dollar_volume <= 0:
            raise errors.ZeroDollarVolume(f"zero dollar volume on {cur.date}")
        r = cur.close / prev.close - 1.0
        total += abs(r) / dollar_volume
        n += 1
    return total / n
