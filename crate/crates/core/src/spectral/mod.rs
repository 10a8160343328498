//! Periodic-box spectral calculus.
//!
//! Real fields live on a cube `[-L, L)^3` sampled on an `n^3` lattice and are
//! manipulated through their DFT coefficients. All linear operators used by
//! the similarity-variable equations (divergence-free projection, fractional
//! Laplacian, spectral derivatives, Sobolev norms) are Fourier multipliers
//! here; quadratic terms are formed pointwise in physical space under the 2/3
//! dealiasing rule.

mod fft;
mod field;
mod grid;

pub use fft::Fft3;
pub use field::{ScalarField, VectorField};
pub use grid::Grid3;

use num_complex::Complex64;

/// Zero every mode whose index along some axis exceeds the 2/3 cutoff.
/// Nyquist modes fall outside the cutoff and are removed as well.
pub fn dealias(grid: &Grid3, data: &mut [Complex64]) {
    let cut = grid.n / 3;
    for (i, v) in data.iter_mut().enumerate() {
        let (jx, jy, jz) = grid.mode_triplet(i);
        if jx.unsigned_abs() as usize > cut
            || jy.unsigned_abs() as usize > cut
            || jz.unsigned_abs() as usize > cut
        {
            *v = Complex64::new(0.0, 0.0);
        }
    }
}

/// Multiply spectral data by `i k_axis` (spectral derivative along one axis).
pub fn deriv_axis(grid: &Grid3, data: &mut [Complex64], axis: usize) {
    let n = grid.n;
    for (i, v) in data.iter_mut().enumerate() {
        let j = match axis {
            0 => i / (n * n),
            1 => (i / n) % n,
            _ => i % n,
        };
        let k = grid.wavenumber(j);
        *v *= Complex64::new(0.0, k);
    }
}

/// Apply the symbol `|k|^(2 alpha)` of the fractional Laplacian.
pub fn frac_laplacian(grid: &Grid3, data: &mut [Complex64], alpha: f64) {
    if alpha == 0.0 {
        return;
    }
    for (i, v) in data.iter_mut().enumerate() {
        let k2 = grid.k_squared(i);
        if k2 > 0.0 {
            *v *= k2.powf(alpha);
        } else {
            *v = Complex64::new(0.0, 0.0);
        }
    }
}

/// Project the three spectral components onto divergence-free fields,
/// `v - k (k.v)/|k|^2`. The zero mode is left untouched.
pub fn leray_project(grid: &Grid3, v: &mut [Vec<Complex64>; 3]) {
    let len = grid.len();
    for i in 0..len {
        let (kx, ky, kz) = grid.k_vec(i);
        let k2 = kx * kx + ky * ky + kz * kz;
        if k2 == 0.0 {
            continue;
        }
        let dot = v[0][i] * kx + v[1][i] * ky + v[2][i] * kz;
        let f = dot / k2;
        v[0][i] -= f * kx;
        v[1][i] -= f * ky;
        v[2][i] -= f * kz;
    }
}

/// Spectral divergence, returned as a new spectral array.
pub fn divergence(grid: &Grid3, v: &[Vec<Complex64>; 3]) -> Vec<Complex64> {
    let len = grid.len();
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for i in 0..len {
        let (kx, ky, kz) = grid.k_vec(i);
        out[i] = Complex64::new(0.0, 1.0) * (v[0][i] * kx + v[1][i] * ky + v[2][i] * kz);
    }
    out
}

/// Spectral curl of a vector field.
pub fn curl(grid: &Grid3, v: &[Vec<Complex64>; 3]) -> [Vec<Complex64>; 3] {
    let len = grid.len();
    let mut out = [
        vec![Complex64::new(0.0, 0.0); len],
        vec![Complex64::new(0.0, 0.0); len],
        vec![Complex64::new(0.0, 0.0); len],
    ];
    let iu = Complex64::new(0.0, 1.0);
    for i in 0..len {
        let (kx, ky, kz) = grid.k_vec(i);
        out[0][i] = iu * (v[2][i] * ky - v[1][i] * kz);
        out[1][i] = iu * (v[0][i] * kz - v[2][i] * kx);
        out[2][i] = iu * (v[1][i] * kx - v[0][i] * ky);
    }
    out
}

/// Discrete L2 inner product of two spectral scalars, `vol * sum f conj(g)`.
pub fn l2_inner(grid: &Grid3, f: &[Complex64], g: &[Complex64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..grid.len() {
        acc += (f[i] * g[i].conj()).re;
    }
    acc * grid.volume()
}

/// Sobolev norm of a spectral scalar: `(sum (1+|k|^2)^s |f|^2 vol)^(1/2)`;
/// with `homogeneous`, the weight is `|k|^(2s)` and the zero mode drops out.
pub fn sobolev_norm_scalar(grid: &Grid3, f: &[Complex64], s: f64, homogeneous: bool) -> f64 {
    let mut acc = 0.0;
    for i in 0..grid.len() {
        let k2 = grid.k_squared(i);
        let w = if homogeneous {
            if k2 == 0.0 {
                0.0
            } else {
                k2.powf(s)
            }
        } else {
            (1.0 + k2).powf(s)
        };
        acc += w * f[i].norm_sqr();
    }
    (acc * grid.volume()).sqrt()
}

/// Sobolev norm of a spectral vector field.
pub fn sobolev_norm(grid: &Grid3, v: &[Vec<Complex64>; 3], s: f64, homogeneous: bool) -> f64 {
    let mut acc = 0.0;
    for comp in v.iter() {
        let n = sobolev_norm_scalar(grid, comp, s, homogeneous);
        acc += n * n;
    }
    acc.sqrt()
}

/// L2 inner product of two spectral vector fields.
pub fn l2_inner_vec(grid: &Grid3, a: &[Vec<Complex64>; 3], b: &[Vec<Complex64>; 3]) -> f64 {
    (0..3).map(|c| l2_inner(grid, &a[c], &b[c])).sum()
}

pub fn l2_norm_vec(grid: &Grid3, a: &[Vec<Complex64>; 3]) -> f64 {
    l2_inner_vec(grid, a, a).max(0.0).sqrt()
}
