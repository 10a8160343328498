use super::{dealias, Fft3, Grid3};
use num_complex::Complex64;

/// Scalar field stored by its DFT coefficients.
#[derive(Debug, Clone)]
pub struct ScalarField {
    pub grid: Grid3,
    pub c: Vec<Complex64>,
}

impl ScalarField {
    pub fn zeros(grid: Grid3) -> Self {
        ScalarField {
            grid,
            c: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    /// Sample a real function on the lattice and transform.
    pub fn from_fn(grid: Grid3, fft: &Fft3, f: impl Fn(f64, f64, f64) -> f64) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); grid.len()];
        for (i, v) in data.iter_mut().enumerate() {
            let (x, y, z) = grid.pos(i);
            *v = Complex64::new(f(x, y, z), 0.0);
        }
        fft.forward(&mut data);
        ScalarField { grid, c: data }
    }

    pub fn to_physical(&self, fft: &Fft3) -> Vec<f64> {
        let mut data = self.c.clone();
        fft.inverse(&mut data);
        data.into_iter().map(|v| v.re).collect()
    }
}

/// Vector field stored by the DFT coefficients of its three components.
#[derive(Debug, Clone)]
pub struct VectorField {
    pub grid: Grid3,
    pub c: [Vec<Complex64>; 3],
}

impl VectorField {
    pub fn zeros(grid: Grid3) -> Self {
        let z = vec![Complex64::new(0.0, 0.0); grid.len()];
        VectorField {
            grid,
            c: [z.clone(), z.clone(), z],
        }
    }

    pub fn from_fn(grid: Grid3, fft: &Fft3, f: impl Fn(f64, f64, f64) -> [f64; 3]) -> Self {
        let len = grid.len();
        let mut c = [
            vec![Complex64::new(0.0, 0.0); len],
            vec![Complex64::new(0.0, 0.0); len],
            vec![Complex64::new(0.0, 0.0); len],
        ];
        for i in 0..len {
            let (x, y, z) = grid.pos(i);
            let v = f(x, y, z);
            c[0][i] = Complex64::new(v[0], 0.0);
            c[1][i] = Complex64::new(v[1], 0.0);
            c[2][i] = Complex64::new(v[2], 0.0);
        }
        for comp in c.iter_mut() {
            fft.forward(comp);
        }
        VectorField { grid, c }
    }

    /// Physical samples of all three components.
    pub fn to_physical(&self, fft: &Fft3) -> [Vec<f64>; 3] {
        let mut out: [Vec<f64>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (dst, comp) in out.iter_mut().zip(self.c.iter()) {
            let mut data = comp.clone();
            fft.inverse(&mut data);
            *dst = data.into_iter().map(|v| v.re).collect();
        }
        out
    }

    pub fn dealias(&mut self) {
        for comp in self.c.iter_mut() {
            dealias(&self.grid, comp);
        }
    }

    pub fn scale(&mut self, s: f64) {
        for comp in self.c.iter_mut() {
            for v in comp.iter_mut() {
                *v *= s;
            }
        }
    }

    pub fn axpy(&mut self, a: f64, other: &VectorField) {
        for (dst, src) in self.c.iter_mut().zip(other.c.iter()) {
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                *d += a * s;
            }
        }
    }

    pub fn l2_norm(&self) -> f64 {
        super::l2_norm_vec(&self.grid, &self.c)
    }

    pub fn sobolev_norm(&self, s: f64, homogeneous: bool) -> f64 {
        super::sobolev_norm(&self.grid, &self.c, s, homogeneous)
    }
}
