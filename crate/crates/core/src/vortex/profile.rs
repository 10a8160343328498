//! Radial vorticity profiles: a two-parameter shielded-monopole family with
//! closed-form swirl velocity, plus smooth radial truncation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Shielded radial vorticity family
/// `omega(rho) = amp (1 - (s/2) x^s) exp(-x^s)`, `x = rho / width`.
///
/// The net circulation vanishes for every parameter choice, so the induced
/// swirl velocity has the closed form `V(rho) = (amp/2) rho exp(-x^s)` and
/// decays super-exponentially. Steepness `s` controls how sharp the
/// vorticity crossover is; sufficiently steep members are linearly unstable
/// to low azimuthal wavenumbers.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ProfileFamily {
    pub amp: f64,
    pub width: f64,
    pub steep: f64,
}

impl Default for ProfileFamily {
    fn default() -> Self {
        ProfileFamily {
            amp: 1.0,
            width: 1.0,
            steep: 3.0,
        }
    }
}

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("profile parameters do not decay: width = {0}, steep = {1}")]
    NonDecaying(f64, f64),
    #[error("truncation radius {0} below the core scale {1}")]
    TruncationBelowCore(f64, f64),
}

/// Smooth cutoff that equals 1 on `[0, r/2]` and 0 outside `[0, r]`.
fn bump(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp()
    }
}

fn bump_d(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp() / (t * t)
    }
}

/// `smoothstep(y)`: 1 for y <= 0, 0 for y >= 1, C-infinity in between.
pub fn smoothstep(y: f64) -> f64 {
    if y <= 0.0 {
        1.0
    } else if y >= 1.0 {
        0.0
    } else {
        let a = bump(1.0 - y);
        let b = bump(y);
        a / (a + b)
    }
}

pub fn smoothstep_d(y: f64) -> f64 {
    if y <= 0.0 || y >= 1.0 {
        0.0
    } else {
        let a = bump(1.0 - y);
        let b = bump(y);
        let ad = -bump_d(1.0 - y);
        let bd = bump_d(y);
        (ad * (a + b) - a * (ad + bd)) / ((a + b) * (a + b))
    }
}

/// A radial vorticity profile: the analytic family, an optional smooth
/// truncation at radius `cutoff`, and cached samples on a cell-centered grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadialProfile {
    pub family: ProfileFamily,
    /// Smooth cutoff radius; `None` for the untruncated profile.
    pub cutoff: Option<f64>,
    /// Sample points (cell-centered) and vorticity values on them.
    pub rho: Vec<f64>,
    pub omega: Vec<f64>,
}

impl RadialProfile {
    /// Build the profile and sample it on `n` cell-centered points of
    /// `(0, rho_max]`.
    pub fn build(family: ProfileFamily, n: usize, rho_max: f64) -> Result<Self, ProfileError> {
        if family.width <= 0.0 || family.steep < 1.0 {
            return Err(ProfileError::NonDecaying(family.width, family.steep));
        }
        let mut p = RadialProfile {
            family,
            cutoff: None,
            rho: Vec::new(),
            omega: Vec::new(),
        };
        p.resample(n, rho_max);
        Ok(p)
    }

    pub fn resample(&mut self, n: usize, rho_max: f64) {
        let d = rho_max / n as f64;
        self.rho = (0..n).map(|i| (i as f64 + 0.5) * d).collect();
        self.omega = self.rho.iter().map(|&r| self.omega_at(r)).collect();
    }

    fn phi(&self, rho: f64) -> f64 {
        match self.cutoff {
            None => 1.0,
            Some(r) => smoothstep((rho - 0.5 * r) / (0.5 * r)),
        }
    }

    fn phi_d(&self, rho: f64) -> f64 {
        match self.cutoff {
            None => 0.0,
            Some(r) => smoothstep_d((rho - 0.5 * r) / (0.5 * r)) / (0.5 * r),
        }
    }

    /// Untruncated vorticity of the analytic family.
    pub fn omega_family(&self, rho: f64) -> f64 {
        let f = &self.family;
        let x = rho / f.width;
        let xs = x.powf(f.steep);
        f.amp * (1.0 - 0.5 * f.steep * xs) * (-xs).exp()
    }

    /// Untruncated swirl velocity of the analytic family.
    pub fn v_family(&self, rho: f64) -> f64 {
        let f = &self.family;
        let x = rho / f.width;
        0.5 * f.amp * rho * (-x.powf(f.steep)).exp()
    }

    /// Swirl velocity including the truncation: `V_R = phi_R V`.
    pub fn v_at(&self, rho: f64) -> f64 {
        self.phi(rho) * self.v_family(rho)
    }

    /// Vorticity including the truncation:
    /// `curl(phi_R V e_theta) = phi_R omega + phi_R' V`.
    pub fn omega_at(&self, rho: f64) -> f64 {
        self.phi(rho) * self.omega_family(rho) + self.phi_d(rho) * self.v_family(rho)
    }

    /// Radial derivative of the (possibly truncated) vorticity, by a wide
    /// central difference on the analytic evaluator.
    pub fn omega_d_at(&self, rho: f64) -> f64 {
        let h = 1e-6 * self.family.width.max(rho);
        (self.omega_at(rho + h) - self.omega_at((rho - h).max(0.0))) / (2.0 * h)
    }

    /// Smoothly truncated copy: velocity multiplied by the radial cutoff that
    /// is 1 on `B_{R/2}` and supported in `B_R`.
    pub fn truncate(&self, r: f64) -> Result<RadialProfile, ProfileError> {
        let core = self.family.width;
        if r < 2.0 * core {
            return Err(ProfileError::TruncationBelowCore(r, core));
        }
        let mut out = self.clone();
        out.cutoff = Some(r);
        let (n, rho_max) = (self.rho.len(), *self.rho.last().unwrap() + 0.5 * self.rho[0]);
        out.resample(n, rho_max);
        Ok(out)
    }

    /// Dilated copy `u_l(x) = l^(1/3) u(x/l)`: the scale family along which
    /// the stretching part of the linearization decays like `l^(-2/3)`.
    pub fn dilate(&self, l: f64) -> RadialProfile {
        let mut out = self.clone();
        out.family.amp = self.family.amp * l.powf(1.0 / 3.0 - 1.0);
        out.family.width = self.family.width * l;
        out.cutoff = self.cutoff.map(|r| r * l);
        let (n, rho_max) = (self.rho.len(), *self.rho.last().unwrap() + 0.5 * self.rho[0]);
        out.resample(n, rho_max.max(4.0 * out.family.width));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn velocity_is_antiderivative_of_vorticity() {
        // omega = (1/rho) d(rho V)/drho must hold for the closed forms.
        let p = RadialProfile::build(ProfileFamily::default(), 512, 4.0).unwrap();
        for &rho in &[0.3, 0.7, 1.1, 1.9] {
            let h = 1e-6;
            let d = ((rho + h) * p.v_family(rho + h) - (rho - h) * p.v_family(rho - h)) / (2.0 * h);
            assert!(
                (d / rho - p.omega_family(rho)).abs() < 1e-7,
                "rho = {rho}"
            );
        }
    }

    #[test]
    fn default_profile_decays() {
        let p = RadialProfile::build(ProfileFamily::default(), 256, 4.0).unwrap();
        assert!(p.omega_at(0.0).is_finite());
        let peak = p
            .omega
            .iter()
            .map(|v| v.abs())
            .fold(0.0_f64, f64::max);
        assert!(p.omega_at(0.9 * 4.0).abs() <= 1e-8 * peak);
    }

    #[test]
    fn zero_amplitude_is_zero() {
        let fam = ProfileFamily {
            amp: 0.0,
            ..Default::default()
        };
        let p = RadialProfile::build(fam, 64, 4.0).unwrap();
        assert!(p.omega.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rescaling_is_exact() {
        let p = RadialProfile::build(ProfileFamily::default(), 128, 4.0).unwrap();
        let c = 1.7;
        let q = p.dilate(c);
        for &rho in &[0.4, 0.9, 1.6] {
            // omega_l(rho) = l^(1/3 - 1) omega(rho / l)
            let expect = c.powf(-2.0 / 3.0) * p.omega_family(rho / c);
            assert!((q.omega_family(rho) - expect).abs() < 1e-12);
            let vexpect = c.powf(1.0 / 3.0) * p.v_family(rho / c);
            assert!((q.v_family(rho) - vexpect).abs() < 1e-12);
        }
    }

    #[test]
    fn truncation_support_and_identity_region() {
        let p = RadialProfile::build(ProfileFamily::default(), 128, 6.0).unwrap();
        let t = p.truncate(3.0).unwrap();
        assert!((t.v_at(1.2) - p.v_family(1.2)).abs() < 1e-15); // inside B_{R/2}
        assert_eq!(t.v_at(3.1), 0.0);
        assert_eq!(t.omega_at(3.1), 0.0);
        assert!(p.truncate(1.0).is_err());
    }
}
