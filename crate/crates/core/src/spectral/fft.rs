use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Planned 3D complex FFT for one cube size.
///
/// Forward transforms carry the `1/n^3` normalization so that spectral data
/// are Fourier-series coefficients of the sampled field; inverse transforms
/// are unnormalized. Plans are shareable across threads; the per-call scratch
/// is allocated by the caller-side helper methods.
pub struct Fft3 {
    n: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl Fft3 {
    pub fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        Fft3 {
            n,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn apply_axis(&self, data: &mut [Complex64], plan: &Arc<dyn Fft<f64>>, axis: usize) {
        let n = self.n;
        debug_assert_eq!(data.len(), n * n * n);
        let mut line = vec![Complex64::new(0.0, 0.0); n];
        let mut scratch = vec![Complex64::new(0.0, 0.0); plan.get_inplace_scratch_len()];
        match axis {
            2 => {
                for row in data.chunks_exact_mut(n) {
                    plan.process_with_scratch(row, &mut scratch);
                }
            }
            1 => {
                for ix in 0..n {
                    for iz in 0..n {
                        let base = ix * n * n + iz;
                        for iy in 0..n {
                            line[iy] = data[base + iy * n];
                        }
                        plan.process_with_scratch(&mut line, &mut scratch);
                        for iy in 0..n {
                            data[base + iy * n] = line[iy];
                        }
                    }
                }
            }
            0 => {
                let nn = n * n;
                for iy in 0..n {
                    for iz in 0..n {
                        let base = iy * n + iz;
                        for ix in 0..n {
                            line[ix] = data[base + ix * nn];
                        }
                        plan.process_with_scratch(&mut line, &mut scratch);
                        for ix in 0..n {
                            data[base + ix * nn] = line[ix];
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
    }

    /// Physical -> spectral, normalized by `1/n^3`.
    pub fn forward(&self, data: &mut [Complex64]) {
        for axis in [2, 1, 0] {
            self.apply_axis(data, &self.fwd.clone(), axis);
        }
        let scale = 1.0 / (self.n * self.n * self.n) as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
    }

    /// Spectral -> physical.
    pub fn inverse(&self, data: &mut [Complex64]) {
        for axis in [2, 1, 0] {
            self.apply_axis(data, &self.inv.clone(), axis);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_plane_wave() {
        let n = 8;
        let fft = Fft3::new(n);
        let len = n * n * n;
        // f(x) = exp(i 2 pi (2 ix + iy) / n) should land on mode (2, 1, 0).
        let mut data = vec![Complex64::new(0.0, 0.0); len];
        for ix in 0..n {
            for iy in 0..n {
                for iz in 0..n {
                    let ph = 2.0 * std::f64::consts::PI * (2.0 * ix as f64 + iy as f64) / n as f64;
                    data[(ix * n + iy) * n + iz] = Complex64::new(ph.cos(), ph.sin());
                }
            }
        }
        let orig = data.clone();
        fft.forward(&mut data);
        for (i, v) in data.iter().enumerate() {
            let expect = if i == (2 * n + 1) * n { 1.0 } else { 0.0 };
            assert!((v.re - expect).abs() < 1e-12 && v.im.abs() < 1e-12, "mode {i}");
        }
        fft.inverse(&mut data);
        for i in 0..len {
            assert!((data[i] - orig[i]).norm() < 1e-12);
        }
    }
}
