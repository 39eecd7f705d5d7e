//! Constant-product pool algebra.
//!
//! A two-token pool holds reserves `(r_a, r_b)` with the product invariant
//! `r_a * r_b = L^2`; the spot price of token a in units of token b is the
//! reserve ratio `r_b / r_a = L^2 / r_a^2`, equivalently `r_a = L * P^(-1/2)`.
//! Swaps here are arbitrage moves that reprice the pool exactly onto an
//! exogenous target price while keeping `L` fixed; the fee `gamma * |Δr_a|`
//! is siphoned to an external accumulator rather than folded into reserves.

use crate::error::{ensure_positive, Error, Result};

/// Reserves and invariant of a two-token constant-product pool.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoolState {
    reserve_a: f64,
    reserve_b: f64,
    liquidity: f64,
}

impl PoolState {
    /// Builds a pool from raw reserves; the liquidity is derived as
    /// `sqrt(r_a * r_b)`.
    pub fn from_reserves(reserve_a: f64, reserve_b: f64) -> Result<Self> {
        ensure_positive("reserve_a", reserve_a)?;
        ensure_positive("reserve_b", reserve_b)?;
        Ok(Self {
            reserve_a,
            reserve_b,
            liquidity: (reserve_a * reserve_b).sqrt(),
        })
    }

    /// Builds a pool holding liquidity `L` priced at `price`; reserves are
    /// derived from `r_a = L * P^(-1/2)`, `r_b = L * P^(1/2)`.
    pub fn from_liquidity_price(liquidity: f64, price: f64) -> Result<Self> {
        ensure_positive("liquidity", liquidity)?;
        ensure_positive("price", price)?;
        let sqrt_price = price.sqrt();
        Ok(Self {
            reserve_a: liquidity / sqrt_price,
            reserve_b: liquidity * sqrt_price,
            liquidity,
        })
    }

    pub fn reserve_a(&self) -> f64 {
        self.reserve_a
    }

    pub fn reserve_b(&self) -> f64 {
        self.reserve_b
    }

    pub fn liquidity(&self) -> f64 {
        self.liquidity
    }

    /// Spot price of token a in token-b units: the reserve ratio.
    pub fn spot_price(&self) -> f64 {
        self.reserve_b / self.reserve_a
    }

    /// Relative deviation of `r_a * r_b` from `L^2`.
    pub fn invariant_defect(&self) -> f64 {
        let l2 = self.liquidity * self.liquidity;
        ((self.reserve_a * self.reserve_b) - l2).abs() / l2
    }
}

/// Swap fee fraction, strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeeParams {
    gamma: f64,
}

impl FeeParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma <= 0.0 || gamma >= 1.0 {
            return Err(Error::OutOfRange {
                name: "gamma",
                value: gamma,
                min: 0.0,
                max: 1.0,
            });
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Cumulative fees collected outside the pool, in token-a units.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FeeAccumulator {
    total: f64,
}

impl FeeAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a single swap's fee. Fees are absolute amounts, so the running
    /// total is non-decreasing by construction.
    pub fn accrue(&mut self, fee: f64) {
        debug_assert!(fee >= 0.0, "fee must be non-negative, got {fee}");
        self.total += fee;
    }

    pub fn total(&self) -> f64 {
        self.total
    }
}

/// Token-a reserve implied by liquidity and price: `L * P^(-1/2)`.
pub fn reserve_a_from_price(liquidity: f64, price: f64) -> Result<f64> {
    ensure_positive("liquidity", liquidity)?;
    ensure_positive("price", price)?;
    Ok(liquidity / price.sqrt())
}

/// Moves the pool to `target_price` with a single arbitrage swap and returns
/// the repriced pool together with the fee `gamma * |Δr_a|` (token a).
///
/// Reserves after the swap satisfy the invariant exactly; the fee is
/// accounted outside the pool. A target equal to the current spot price is
/// a no-trade: the pool is returned unchanged and the fee is exactly zero.
pub fn arbitrage_to_price(
    pool: &PoolState,
    target_price: f64,
    fees: &FeeParams,
) -> Result<(PoolState, f64)> {
    ensure_positive("target_price", target_price)?;
    if target_price == pool.spot_price() {
        return Ok((*pool, 0.0));
    }
    let next = PoolState::from_liquidity_price(pool.liquidity, target_price)?;
    let fee = fees.gamma * (next.reserve_a - pool.reserve_a).abs();
    Ok((next, fee))
}

/// Value shortfall of the pooled position versus holding the initial
/// reserves, in token-b units, after the price moves from `initial_price`
/// to `final_price`.
///
/// Pool value at `P` is `2 L sqrt(P)`; the hold benchmark keeps the initial
/// reserves `(L P_0^(-1/2), L P_0^(1/2))` and marks them at `P`. The
/// difference is non-negative and vanishes only at `P = P_0`.
pub fn impermanent_loss(initial_price: f64, final_price: f64, liquidity: f64) -> Result<f64> {
    ensure_positive("initial_price", initial_price)?;
    ensure_positive("final_price", final_price)?;
    ensure_positive("liquidity", liquidity)?;
    let sqrt_p0 = initial_price.sqrt();
    let pool_value = 2.0 * liquidity * final_price.sqrt();
    let hold_value = liquidity * sqrt_p0 + liquidity * final_price / sqrt_p0;
    let loss = hold_value - pool_value;
    // hold - pool = L (sqrt(P0) - sqrt(P))^2 / sqrt(P0) >= 0; clamp the
    // roundoff-scale negative the subtraction can leave at P ~= P0.
    Ok(loss.max(0.0))
}
