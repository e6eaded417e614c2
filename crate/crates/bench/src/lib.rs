//! Shared instance builders for the benchmark targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geocluster_core::Point;

pub fn seeded_points(n: usize, dim: usize, scale: f64, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Point::new((0..dim).map(|_| rng.gen::<f64>() * scale).collect()))
        .collect()
}
