use ringlab_core::spectral::{Fft3, Grid3};
use num_complex::Complex64;
use std::time::Instant;

fn main() {
    for n in [16usize, 24, 32, 40, 48, 64, 96] {
        let fft = Fft3::new(n);
        let grid = Grid3::new(n, 6.0);
        let mut data = vec![Complex64::new(1.0, 0.0); grid.len()];
        // warmup
        fft.forward(&mut data);
        fft.inverse(&mut data);
        let reps = (200_000_000 / (n*n*n)).max(3).min(200);
        let t0 = Instant::now();
        for _ in 0..reps {
            fft.forward(&mut data);
        }
        let dt = t0.elapsed().as_secs_f64() / reps as f64;
        println!("n={n:3}  fft3 = {:.3} ms", dt * 1e3);
    }
}
