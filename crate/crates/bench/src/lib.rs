//! Benchmark inputs shared by the criterion benches in `benches/`.

use tutte_core::verify::{random_instance, InstanceKind};
use tutte_core::Perspective;

/// Seeded random perspectives on `n` elements, one per seed in `0..count`.
pub fn perspectives(n: usize, count: u64) -> Vec<Perspective> {
    (0..count)
        .map(|seed| random_instance(seed, n, InstanceKind::Perspective).expect("n within the random cap"))
        .collect()
}

/// Seeded random identity perspectives (plain matroids) on `n` elements.
pub fn matroids(n: usize, count: u64) -> Vec<Perspective> {
    (0..count)
        .map(|seed| random_instance(seed, n, InstanceKind::Matroid).expect("n within the random cap"))
        .collect()
}
