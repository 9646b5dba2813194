//! Seeded random classes for oracle suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use teachdim_core::{ConceptClass, ElementSet};

/// Seed used when none is given on the command line.
pub const DEFAULT_SEED: u64 = 7;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A class of `1..=max_concepts` concepts over a domain of size
/// `1..=max_domain`. Each class draws its own element density, so sparse
/// (often pairwise disjoint) and dense classes both occur.
pub fn random_class(rng: &mut impl Rng, max_concepts: usize, max_domain: u32) -> ConceptClass {
    let m = rng.gen_range(1..=max_domain.max(1));
    let k = rng.gen_range(1..=max_concepts.max(1));
    let density: f64 = rng.gen_range(0.05..0.65);
    let sets: Vec<ElementSet> = (0..k)
        .map(|_| (0..m).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    ConceptClass::with_domain(m, sets).expect("generated elements lie in the domain")
}

/// A random subset of `0..n` with between `min` and `max` members.
pub fn random_subset(rng: &mut impl Rng, n: usize, min: usize, max: usize) -> Vec<usize> {
    let size = rng.gen_range(min.min(n)..=max.min(n));
    let mut out = rand::seq::index::sample(rng, n, size).into_vec();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_classes() {
        let a: Vec<_> = (0..20).scan(rng(3), |r, _| Some(random_class(r, 5, 8))).collect();
        let b: Vec<_> = (0..20).scan(rng(3), |r, _| Some(random_class(r, 5, 8))).collect();
        assert_eq!(a, b);
        for c in &a {
            assert!(c.len() <= 5 && c.domain().size() <= 8);
        }
    }

    #[test]
    fn subsets_are_sorted_and_sized() {
        let mut r = rng(1);
        for _ in 0..50 {
            let s = random_subset(&mut r, 10, 2, 6);
            assert!((2..=6).contains(&s.len()));
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
