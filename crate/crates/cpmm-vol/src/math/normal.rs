//! Standard normal density and distribution function.
//!
//! The CDF is evaluated through the complementary error function so that
//! both tails keep full double precision; the regime analysis in the payoff
//! module leans on tail values like `norm_cdf(-8)`.

use std::f64::consts::PI;

use statrs::function::erf::erfc;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Density of the standard normal distribution.
#[inline]
pub fn norm_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Distribution function of the standard normal, `P(Z <= x)`.
#[inline]
pub fn norm_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / SQRT_2)
}
