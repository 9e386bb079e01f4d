import datetime

import pytest

from lix import BookLevel, DailyBar, OrderBookSnapshot


def make_bar(open=50.0, high=51.0, low=50.0, close=50.0, volume=10_000_000,
             instrument_id="TEST", day=datetime.date(2013, 11, 20)):
    return DailyBar(instrument_id=instrument_id, date=day, open=open,
                    high=high, low=low, close=close, volume=volume)


def make_book(bids, asks, timestamp=0.0):
    return OrderBookSnapshot(
        timestamp=timestamp,
        bids=tuple(BookLevel(p, v) for p, v in bids),
        asks=tuple(BookLevel(p, v) for p, v in asks))


@pytest.fixture
def reference_bar():
    # log10(10^7 * 50 / 1) = log10(5e8) = 8.69897...
    return make_bar()
