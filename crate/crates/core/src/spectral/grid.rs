use serde::{Deserialize, Serialize};

/// Uniform periodic lattice on the cube `[-L, L)^3`.
///
/// `n` must be even. Row-major storage: `idx = (ix * n + iy) * n + iz`.
/// Wavenumbers are `pi * j / L` with the signed mode index `j` in
/// `[-n/2, n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid3 {
    pub n: usize,
    pub l: f64,
}

impl Grid3 {
    pub fn new(n: usize, l: f64) -> Self {
        assert!(n % 2 == 0, "points-per-axis must be even");
        assert!(l > 0.0, "box half-width must be positive");
        Grid3 { n, l }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        2.0 * self.l / self.n as f64
    }

    /// Cell volume.
    #[inline]
    pub fn dv(&self) -> f64 {
        let d = self.dx();
        d * d * d
    }

    /// Parseval volume factor `(2L)^3 / n^3 * n^3 / n^3`... the factor such
    /// that `int |f|^2 = volume() * sum_k |fhat_k|^2` with the normalized DFT.
    #[inline]
    pub fn volume(&self) -> f64 {
        let s = 2.0 * self.l;
        s * s * s
    }

    /// Physical coordinate of a 1D index.
    #[inline]
    pub fn coord(&self, i: usize) -> f64 {
        -self.l + i as f64 * self.dx()
    }

    /// Signed mode index for a 1D DFT index.
    #[inline]
    pub fn mode(&self, j: usize) -> i64 {
        if j < self.n / 2 {
            j as i64
        } else {
            j as i64 - self.n as i64
        }
    }

    /// Wavenumber for a 1D DFT index.
    #[inline]
    pub fn wavenumber(&self, j: usize) -> f64 {
        std::f64::consts::PI * self.mode(j) as f64 / self.l
    }

    #[inline]
    pub fn idx(&self, ix: usize, iy: usize, iz: usize) -> usize {
        (ix * self.n + iy) * self.n + iz
    }

    #[inline]
    pub fn split(&self, i: usize) -> (usize, usize, usize) {
        let n = self.n;
        (i / (n * n), (i / n) % n, i % n)
    }

    /// Signed mode triplet of a linear index.
    #[inline]
    pub fn mode_triplet(&self, i: usize) -> (i64, i64, i64) {
        let (ix, iy, iz) = self.split(i);
        (self.mode(ix), self.mode(iy), self.mode(iz))
    }

    /// Wavenumber vector of a linear index.
    #[inline]
    pub fn k_vec(&self, i: usize) -> (f64, f64, f64) {
        let (ix, iy, iz) = self.split(i);
        (
            self.wavenumber(ix),
            self.wavenumber(iy),
            self.wavenumber(iz),
        )
    }

    #[inline]
    pub fn k_squared(&self, i: usize) -> f64 {
        let (kx, ky, kz) = self.k_vec(i);
        kx * kx + ky * ky + kz * kz
    }

    /// Physical position of a linear index.
    #[inline]
    pub fn pos(&self, i: usize) -> (f64, f64, f64) {
        let (ix, iy, iz) = self.split(i);
        (self.coord(ix), self.coord(iy), self.coord(iz))
    }

    /// Largest wavenumber kept by the 2/3 dealiasing mask.
    pub fn k_max_dealiased(&self) -> f64 {
        std::f64::consts::PI * (self.n as f64 / 3.0).floor() / self.l
    }
}
