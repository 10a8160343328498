//! Global experiment parameters and their admissibility rules.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Regime selector: the construction of two distinct solutions needs
/// `1 <= alpha < 5/4`, while the strong well-posedness probes need
/// `alpha >= 5/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    NonUniqueness,
    WellPosedness,
}

/// Parameters shared by every pipeline.
///
/// `alpha` is the viscosity exponent of `(-Delta)^alpha`, `n_reg` the Sobolev
/// index N of the noise (an integer above 5/2), `kappa` the Hoelder exponent
/// used by the stopping time, `eps0` the small rate margin, `beta` the
/// amplification of the background ring, and `cnk` the calibrated map
/// constant C(N, kappa). `beta` and `cnk` are produced by calibration and are
/// optional until then.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub alpha: f64,
    pub n_reg: u32,
    pub kappa: f64,
    pub eps0: f64,
    #[serde(default)]
    pub beta: Option<f64>,
    #[serde(default)]
    pub cnk: Option<f64>,
}

#[derive(Debug, Error)]
pub enum ParamError {
    #[error("alpha = {0} outside [1, 5/4) required for the non-uniqueness regime")]
    AlphaNonUniq(f64),
    #[error("alpha = {0} below 5/4 required for the well-posedness regime")]
    AlphaWellPosed(f64),
    #[error("regularity index N = {0} must be at least 3 (N > 5/2)")]
    Regularity(u32),
    #[error("kappa = {0} outside (1/4, 1/2)")]
    Kappa(f64),
    #[error("eps0 = {0} must be positive")]
    Eps0(f64),
    #[error("rate margin 1 + kappa - 5/(4 alpha) - eps0 = {0} is not positive")]
    RateMargin(f64),
    #[error("beta = {0} must be positive")]
    Beta(f64),
    #[error("calibration constant C(N,kappa) = {0} must be positive")]
    Cnk(f64),
}

impl Default for Params {
    fn default() -> Self {
        Params {
            alpha: 1.0,
            n_reg: 3,
            kappa: 0.375,
            eps0: 1.0 / 16.0,
            beta: None,
            cnk: None,
        }
    }
}

impl Params {
    /// Rate of the noise profile decay, `1 + kappa - 5/(4 alpha)`.
    pub fn noise_rate(&self) -> f64 {
        1.0 + self.kappa - 5.0 / (4.0 * self.alpha)
    }

    /// The margin `1 + kappa - 5/(4 alpha) - eps0` that the stopping-time
    /// construction divides by.
    pub fn rate_margin(&self) -> f64 {
        self.noise_rate() - self.eps0
    }

    pub fn beta(&self) -> f64 {
        self.beta.expect("beta not calibrated")
    }

    pub fn cnk(&self) -> f64 {
        self.cnk.expect("C(N,kappa) not calibrated")
    }

    pub fn validate(&self, regime: Regime) -> Result<(), ParamError> {
        match regime {
            Regime::NonUniqueness => {
                if !(1.0..1.25).contains(&self.alpha) {
                    return Err(ParamError::AlphaNonUniq(self.alpha));
                }
            }
            Regime::WellPosedness => {
                if self.alpha < 1.25 {
                    return Err(ParamError::AlphaWellPosed(self.alpha));
                }
            }
        }
        if self.n_reg < 3 {
            return Err(ParamError::Regularity(self.n_reg));
        }
        if !(0.25..0.5).contains(&self.kappa) || self.kappa <= 0.25 {
            return Err(ParamError::Kappa(self.kappa));
        }
        if self.eps0 <= 0.0 {
            return Err(ParamError::Eps0(self.eps0));
        }
        if regime == Regime::NonUniqueness && self.rate_margin() <= 0.0 {
            return Err(ParamError::RateMargin(self.rate_margin()));
        }
        if let Some(b) = self.beta {
            if b <= 0.0 {
                return Err(ParamError::Beta(b));
            }
        }
        if let Some(c) = self.cnk {
            if c <= 0.0 {
                return Err(ParamError::Cnk(c));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_params_admissible() {
        let p = Params::default();
        p.validate(Regime::NonUniqueness).unwrap();
        assert!(p.rate_margin() > 0.0);
        assert!((p.noise_rate() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn regime_mismatch_rejected() {
        let mut p = Params::default();
        p.alpha = 1.3;
        assert!(p.validate(Regime::NonUniqueness).is_err());
        p.validate(Regime::WellPosedness).unwrap();
        p.alpha = 1.0;
        assert!(p.validate(Regime::WellPosedness).is_err());
    }

    #[test]
    fn rate_margin_guard() {
        let mut p = Params::default();
        p.eps0 = 0.2;
        assert!(matches!(
            p.validate(Regime::NonUniqueness),
            Err(ParamError::RateMargin(_))
        ));
    }
}
