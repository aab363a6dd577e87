//! Seeded random partitions for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::partition::{Colour, Partition};

pub const DEFAULT_SEED: u64 = 20_260_101;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_colours<R: Rng>(rng: &mut R, n: usize) -> Vec<Colour> {
    (0..n)
        .map(|_| {
            if rng.gen() {
                Colour::White
            } else {
                Colour::Black
            }
        })
        .collect()
}

/// Total point count uniform in `0..=max_points`, the split into rows
/// uniform, colours uniform, labels a random restricted growth string.
pub fn random_partition<R: Rng>(rng: &mut R, max_points: usize) -> Partition {
    let total = rng.gen_range(0..=max_points);
    let k = rng.gen_range(0..=total);
    let mut labels = Vec::with_capacity(total);
    let mut next = 0;
    for _ in 0..total {
        let x = rng.gen_range(0..=next);
        if x == next {
            next += 1;
        }
        labels.push(x);
    }
    let upper = random_colours(rng, k);
    let lower = random_colours(rng, total - k);
    Partition::new(upper, lower, &labels).expect("label count matches")
}

/// A random partition into pairs on an even number of points.
pub fn random_pair_partition<R: Rng>(rng: &mut R, max_points: usize) -> Partition {
    let total = 2 * rng.gen_range(0..=max_points / 2);
    let k = rng.gen_range(0..=total);
    let mut order: Vec<usize> = (0..total).collect();
    order.shuffle(rng);
    let mut labels = vec![0; total];
    for (b, pair) in order.chunks(2).enumerate() {
        labels[pair[0]] = b;
        labels[pair[1]] = b;
    }
    Partition::new(
        random_colours(rng, k),
        random_colours(rng, total - k),
        &labels,
    )
    .expect("label count matches")
}

pub fn random_corpus(seed: u64, count: usize, max_points: usize) -> Vec<Partition> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_partition(&mut r, max_points))
        .collect()
}

/// `count` random partitions satisfying `keep`, by rejection.
pub fn filtered_corpus<F>(seed: u64, count: usize, max_points: usize, keep: F) -> Vec<Partition>
where
    F: Fn(&Partition) -> bool,
{
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_partition(&mut r, max_points);
        if keep(&p) {
            out.push(p);
        }
    }
    out
}

pub fn pair_corpus(seed: u64, count: usize, max_points: usize) -> Vec<Partition> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_pair_partition(&mut r, max_points))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let a = random_corpus(7, 50, 6);
        assert_eq!(a, random_corpus(7, 50, 6));
        assert!(a.iter().all(|p| p.points() <= 6));
        assert!(a.iter().any(|p| p.points() == 6));
    }

    #[test]
    fn pairs_and_filters() {
        assert!(pair_corpus(1, 40, 6)
            .iter()
            .all(|p| p.block_sizes().iter().all(|&s| s == 2)));
        let even = filtered_corpus(2, 30, 6, Partition::has_even_blocks);
        assert_eq!(even.len(), 30);
        assert!(even.iter().all(Partition::has_even_blocks));
    }
}
