"""Liquidity algebra for baskets, ETFs and multi-venue instruments.

Basket liquidity is the index of a hypothetical single instrument whose
per-currency-unit transaction cost equals the money-weighted cost of trading
the basket: 10^-LIX_basket = sum_i beta_i * 10^-LIX_i. Non-logged liquidity
is additive across venues (shared price and range under no-arbitrage), which
also combines a basket leg with ETF-share liquidity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import errors
from .measures import LiquidityIndex, LixKind, as_lix_value

WEIGHT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BasketPosition:
    instrument_id: str
    beta: float
    lix: LiquidityIndex | float

    def __post_init__(self):
        if not (math.isfinite(self.beta) and self.beta > 0):
            raise errors.InvalidParams(
                f"weight for {self.instrument_id} must be positive, got {self.beta}")
        as_lix_value(self.lix)


@dataclass(frozen=True)
class BasketSpec:
    positions: tuple[BasketPosition, ...]
    etf_lix: LiquidityIndex | float | None = None

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        if not self.positions:
            raise errors.EmptyBasket("basket has no positions")
        total = math.fsum(p.beta for p in self.positions)
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise errors.UnnormalizedWeights(
                f"weights sum to {total}, expected 1; build with strict=False to normalize")
        if self.etf_lix is not None:
            as_lix_value(self.etf_lix)

    @classmethod
    def build(cls, positions, etf_lix=None, strict=False) -> "BasketSpec":
        """Construct a basket, normalizing weights unless strict.

        Strict mode rejects weight sums off by more than 1e-9; normalize mode
        divides every weight by the sum (real position files rarely sum to 1).
        """
        positions = tuple(positions)
        if not positions:
            raise errors.EmptyBasket("basket has no positions")
        total = math.fsum(p.beta for p in positions)
        if strict:
            if abs(total - 1.0) > WEIGHT_TOLERANCE:
                raise errors.UnnormalizedWeights(
                    f"weights sum to {total}, expected 1 within {WEIGHT_TOLERANCE}")
            return cls(positions, etf_lix)
        scaled = tuple(
            BasketPosition(p.instrument_id, p.beta / total, p.lix) for p in positions)
        return cls(scaled, etf_lix)


def _neg_log10_weighted_inverse(pairs) -> float:
    # -log10(sum beta * 10^-L), rescaled around the smallest L so user inputs
    # far outside [5, 10] cannot overflow 10^L. fsum makes the result exactly
    # permutation invariant.
    lmin = min(lv for _, lv in pairs)
    total = math.fsum(beta * 10.0 ** (lmin - lv) for beta, lv in pairs)
    return lmin - math.log10(total)


def _log10_sum_of_powers(values) -> float:
    # log10(sum 10^L) with the same rescaling, around the largest L.
    lmax = max(values)
    total = math.fsum(10.0 ** (lv - lmax) for lv in values)
    return lmax + math.log10(total)


def basket_lix(spec: BasketSpec) -> LiquidityIndex:
    """Money-weighted basket liquidity; ignores any ETF leg."""
    pairs = [(p.beta, as_lix_value(p.lix)) for p in spec.positions]
    return LiquidityIndex(_neg_log10_weighted_inverse(pairs), LixKind.BASKET)


def basket_with_etf_lix(spec: BasketSpec) -> LiquidityIndex:
    """Dual-nature ETF liquidity: basket leg plus ETF-share leg, additively."""
    if spec.etf_lix is None:
        raise errors.MissingEtfLeg("basket has no ETF-share liquidity leg")
    legs = (basket_lix(spec).value, as_lix_value(spec.etf_lix))
    return LiquidityIndex(_log10_sum_of_powers(legs), LixKind.BASKET_WITH_ETF)


def venue_combine(lix_values) -> LiquidityIndex:
    """Combine one instrument's liquidity across venues: log10(sum 10^L_i)."""
    values = [as_lix_value(v) for v in lix_values]
    if not values:
        raise errors.EmptyList("no liquidity values to combine")
    return LiquidityIndex(_log10_sum_of_powers(values), LixKind.COMBINED)
