//! Geometric Brownian price process: exact stepping, the lognormal
//! transition density, exact sampling, and a finite-difference residual
//! checker for the density's forward (Fokker-Planck) equation.
//!
//! Two drift conventions coexist because the closed-form payoff work
//! assumes a martingale price (`E[P_{t+dt} | P_t] = P_t`) while the
//! transition density used for ensemble averages is the driftless-log
//! solution (`E[log P_t] = log P_0`, i.e. price drift `sigma^2/2`). Both
//! are exact lognormal updates; they differ only in the log-drift.

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::standard_normal;

/// Which exact lognormal update the step uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DriftConvention {
    /// Log-drift `-sigma^2/2`: the conditional mean of the next price equals
    /// the current price.
    MartingalePrice,
    /// Zero log-drift: the conditional mean of the next log-price equals the
    /// current log-price. This matches the transition density below.
    DriftlessLog,
}

/// Drift/volatility of the price SDE `dP = mu P dt + sigma P dz` plus the
/// convention that fixes `mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GbmParams {
    /// Price drift implied by the convention: 0 for a martingale price,
    /// `sigma^2/2` for driftless logs.
    pub mu: f64,
    pub sigma: f64,
    pub drift_convention: DriftConvention,
}

impl GbmParams {
    pub fn new(sigma: f64, drift_convention: DriftConvention) -> Result<Self> {
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(Error::NonPositive {
                name: "sigma",
                value: sigma,
            });
        }
        let mu = match drift_convention {
            DriftConvention::MartingalePrice => 0.0,
            DriftConvention::DriftlessLog => 0.5 * sigma * sigma,
        };
        Ok(Self {
            mu,
            sigma,
            drift_convention,
        })
    }

    /// Per-unit-time drift of the log-price, `mu - sigma^2/2`.
    pub fn log_drift(&self) -> f64 {
        match self.drift_convention {
            DriftConvention::MartingalePrice => -0.5 * self.sigma * self.sigma,
            DriftConvention::DriftlessLog => 0.0,
        }
    }
}

/// One Wiener increment: `dz = epsilon * sqrt(dt)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepDraw {
    pub epsilon: f64,
    pub dt: f64,
}

impl StepDraw {
    pub fn new(epsilon: f64, dt: f64) -> Result<Self> {
        if !epsilon.is_finite() {
            return Err(Error::NotFinite {
                name: "epsilon",
                value: epsilon,
            });
        }
        crate::error::ensure_positive("dt", dt)?;
        Ok(Self { epsilon, dt })
    }
}

/// Point query of the transition density `p(P, t | P_0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityQuery {
    pub initial_price: f64,
    pub time: f64,
    pub price: f64,
}

impl DensityQuery {
    pub fn new(initial_price: f64, time: f64, price: f64) -> Result<Self> {
        crate::error::ensure_positive("initial_price", initial_price)?;
        crate::error::ensure_positive("time", time)?;
        crate::error::ensure_positive("price", price)?;
        Ok(Self {
            initial_price,
            time,
            price,
        })
    }
}

/// Advances a price by one exact lognormal step:
/// `P' = P exp(m dt + sigma sqrt(dt) epsilon)` with `m` fixed by the
/// convention in `params`.
pub fn gbm_step(price: f64, params: &GbmParams, draw: StepDraw) -> f64 {
    debug_assert!(price > 0.0, "price must be positive, got {price}");
    let exponent = params.log_drift() * draw.dt + params.sigma * draw.dt.sqrt() * draw.epsilon;
    price * exponent.exp()
}

/// Lognormal transition density
/// `p(P, t) = exp(-log^2(P/P_0) / (2 sigma^2 t)) / (P sigma sqrt(2 pi t))`.
///
/// This is the driftless-log marginal; it solves the forward equation with
/// drift coefficient `(sigma^2/2) P` and diffusion `sigma^2 P^2` (see
/// [`fokker_planck_residual`]). `sigma = 0` is rejected: the density
/// degenerates to a point mass the caller must special-case.
pub fn transition_density(query: &DensityQuery, sigma: f64) -> Result<f64> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::NonPositive {
            name: "sigma",
            value: sigma,
        });
    }
    let s2t = sigma * sigma * query.time;
    let log_ratio = (query.price / query.initial_price).ln();
    let norm = query.price * sigma * (2.0 * std::f64::consts::PI * query.time).sqrt();
    Ok((-log_ratio * log_ratio / (2.0 * s2t)).exp() / norm)
}

/// Exact draw from the transition density at time `time`:
/// `P_0 exp(sigma sqrt(t) Z)` with standard normal `Z`.
pub fn sample_price<R: Rng + ?Sized>(
    initial_price: f64,
    sigma: f64,
    time: f64,
    rng: &mut R,
) -> f64 {
    debug_assert!(initial_price > 0.0 && time > 0.0 && sigma >= 0.0);
    if sigma == 0.0 {
        return initial_price;
    }
    let z: f64 = standard_normal(rng);
    initial_price * (sigma * time.sqrt() * z).exp()
}

/// Evaluation lattice for [`fokker_planck_residual`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FpGrid {
    pub price_min: f64,
    pub price_max: f64,
    pub price_points: usize,
    pub time_min: f64,
    pub time_max: f64,
    pub time_points: usize,
    /// Central-difference step in both price and time.
    pub fd_step: f64,
}

impl FpGrid {
    pub fn new(
        price_range: (f64, f64),
        price_points: usize,
        time_range: (f64, f64),
        time_points: usize,
        fd_step: f64,
    ) -> Result<Self> {
        let (price_min, price_max) = price_range;
        let (time_min, time_max) = time_range;
        crate::error::ensure_positive("price_min", price_min)?;
        crate::error::ensure_positive("fd_step", fd_step)?;
        if price_max < price_min || time_max < time_min {
            return Err(Error::Config("grid bounds are reversed".into()));
        }
        if price_points < 2 || time_points < 2 {
            return Err(Error::Config("grid needs at least 2 points per axis".into()));
        }
        // Keep the stencil away from the t=0 singularity and the P=0 boundary.
        if time_min < 0.1 {
            return Err(Error::Config(format!(
                "grid must stay at t >= 0.1, got time_min = {time_min}"
            )));
        }
        if time_min - fd_step <= 0.0 || price_min - fd_step <= 0.0 {
            return Err(Error::Config(
                "finite-difference stencil crosses t = 0 or P = 0".into(),
            ));
        }
        Ok(Self {
            price_min,
            price_max,
            price_points,
            time_min,
            time_max,
            time_points,
            fd_step,
        })
    }
}

/// Max absolute residual of the transition density in the forward equation
/// `∂_t p = -∂_P[(sigma^2/2) P p] + (1/2) ∂_P^2[sigma^2 P^2 p]`,
/// by second-order central differences with step `grid.fd_step`.
pub fn fokker_planck_residual(sigma: f64, initial_price: f64, grid: &FpGrid) -> Result<f64> {
    crate::error::ensure_positive("sigma", sigma)?;
    crate::error::ensure_positive("initial_price", initial_price)?;
    let mu = 0.5 * sigma * sigma;
    let density = |price: f64, time: f64| -> Result<f64> {
        transition_density(&DensityQuery::new(initial_price, time, price)?, sigma)
    };
    let drift_flux = |price: f64, time: f64| -> Result<f64> {
        Ok(mu * price * density(price, time)?)
    };
    let diffusion_flux = |price: f64, time: f64| -> Result<f64> {
        Ok(sigma * sigma * price * price * density(price, time)?)
    };

    let h = grid.fd_step;
    let mut max_residual = 0.0f64;
    for i in 0..grid.price_points {
        let frac = i as f64 / (grid.price_points - 1) as f64;
        let price = grid.price_min + frac * (grid.price_max - grid.price_min);
        for j in 0..grid.time_points {
            let frac_t = j as f64 / (grid.time_points - 1) as f64;
            let time = grid.time_min + frac_t * (grid.time_max - grid.time_min);

            let dp_dt = (density(price, time + h)? - density(price, time - h)?) / (2.0 * h);
            let d_drift = (drift_flux(price + h, time)? - drift_flux(price - h, time)?) / (2.0 * h);
            let d2_diff = (diffusion_flux(price + h, time)? - 2.0 * diffusion_flux(price, time)?
                + diffusion_flux(price - h, time)?)
                / (h * h);
            let residual = dp_dt + d_drift - 0.5 * d2_diff;
            max_residual = max_residual.max(residual.abs());
        }
    }
    Ok(max_residual)
}
