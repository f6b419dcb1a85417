//! Least-squares fit of `y = beta0 + beta1 / x`.
//!
//! The model is linear in `u = 1/x`, so ordinary least squares on `u` gives
//! the exact optimum. The constrained variant fixes `beta0 = 0`, which is the
//! hyperbola `x * y = c` with `c = beta1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionFit {
    pub beta0: f64,
    pub beta1: f64,
    /// Centered `1 - SSE/SST` for the free fit; uncentered `1 - SSE/sum y^2`
    /// for the fit through the origin.
    pub r_squared: f64,
    pub residuals: Vec<f64>,
    pub n_points: usize,
    pub constrained: bool,
}

impl RegressionFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.beta0 + self.beta1 / x
    }
}

/// `points` are `(d_order, d_structure)` pairs.
pub fn fit_reciprocal(points: &[(f64, f64)], constrained: bool) -> Result<RegressionFit> {
    let need = if constrained { 1 } else { 2 };
    if points.len() < need {
        return Err(Error::TooFewObservations { need, got: points.len() });
    }
    if let Some(index) = points.iter().position(|&(x, _)| x == 0.0) {
        return Err(Error::ZeroRegressor { index });
    }
    if points.iter().any(|&(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::InvalidArgument("non-finite point".into()));
    }
    let n = points.len() as f64;
    let u: Vec<f64> = points.iter().map(|&(x, _)| 1.0 / x).collect();
    let y: Vec<f64> = points.iter().map(|&(_, y)| y).collect();

    let (beta0, beta1) = if constrained {
        let suy: f64 = u.iter().zip(&y).map(|(a, b)| a * b).sum();
        let suu: f64 = u.iter().map(|a| a * a).sum();
        (0.0, suy / suu)
    } else {
        let mu = u.iter().sum::<f64>() / n;
        let my = y.iter().sum::<f64>() / n;
        let suu: f64 = u.iter().map(|a| (a - mu).powi(2)).sum();
        if suu == 0.0 {
            return Err(Error::ZeroVariance);
        }
        let suy: f64 = u.iter().zip(&y).map(|(a, b)| (a - mu) * (b - my)).sum();
        let b1 = suy / suu;
        (my - b1 * mu, b1)
    };

    let residuals: Vec<f64> = u.iter().zip(&y).map(|(a, b)| b - (beta0 + beta1 * a)).collect();
    let sse: f64 = residuals.iter().map(|e| e * e).sum();
    let sst: f64 = if constrained {
        y.iter().map(|b| b * b).sum()
    } else {
        let my = y.iter().sum::<f64>() / n;
        y.iter().map(|b| (b - my).powi(2)).sum()
    };
    let r_squared = if sst > 0.0 {
        1.0 - sse / sst
    } else if sse == 0.0 {
        1.0
    } else {
        0.0
    };

    Ok(RegressionFit {
        beta0,
        beta1,
        r_squared,
        residuals,
        n_points: points.len(),
        constrained,
    })
}
