//! Seeded random multigraphs for cross-validation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    /// Chance that an added edge duplicates an existing one.
    pub parallel_prob: f64,
    pub seed: u64,
    pub connected: bool,
}

impl RandomSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if self.n == 0 || self.n > MAX_VERTICES {
            return bad(format!("n must be in 1..={MAX_VERTICES}"));
        }
        if self.n == 1 && self.m > 0 {
            return bad("a single vertex cannot carry loopless edges".into());
        }
        if self.connected && self.m + 1 < self.n {
            return bad(format!("a connected graph on {} vertices needs m >= {}", self.n, self.n - 1));
        }
        if !(0.0..=1.0).contains(&self.parallel_prob) {
            return bad("parallel probability must lie in [0, 1]".into());
        }
        Ok(())
    }
}

/// Uniform labelled tree from a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Builds a multigraph with exactly `n` vertices and `m` edges. When
/// connectivity is required a uniform spanning tree is laid down first.
/// Each further edge repeats an existing edge with probability
/// `parallel_prob`, otherwise joins a uniform vertex pair. Edge order is
/// shuffled so the skeleton does not occupy the low indices.
pub fn random_multigraph(spec: &RandomSpec) -> Result<Multigraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let mut edges = if spec.connected { random_tree(n, &mut rng) } else { Vec::new() };
    while edges.len() < spec.m {
        if !edges.is_empty() && rng.gen_bool(spec.parallel_prob) {
            let e = edges[rng.gen_range(0..edges.len())];
            edges.push(e);
        } else {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            edges.push((a, b));
        }
    }
    edges.shuffle(&mut rng);
    Multigraph::new(n, edges)
}

/// A reproducible family of connected multigraphs with `n` drawn from
/// `min_n..=max_n` and `m` from `n - 1..=max_m` per trial (`m = 0` when
/// `n = 1`). Trial `i` is
/// generated from `seed + i`.
pub fn connected_suite(
    seed: u64,
    count: usize,
    min_n: usize,
    max_n: usize,
    max_m: usize,
    parallel_prob: f64,
) -> Result<Vec<(RandomSpec, Multigraph)>> {
    (0..count as u64)
        .map(|i| {
            let trial_seed = seed.wrapping_add(i);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed ^ 0x5eed_5eed_5eed_5eed);
            let n = rng.gen_range(min_n..=max_n);
            let lo = n - 1;
            let m = if n == 1 { 0 } else { rng.gen_range(lo..=max_m.max(lo)) };
            let spec = RandomSpec { n, m, parallel_prob, seed: trial_seed, connected: true };
            random_multigraph(&spec).map(|g| (spec, g))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn honours_size_and_connectivity() {
        for seed in 0..200 {
            let spec = RandomSpec { n: 7, m: 12, parallel_prob: 0.3, seed, connected: true };
            let g = random_multigraph(&spec).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (7, 12));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let spec = RandomSpec { n: 9, m: 15, parallel_prob: 0.5, seed: 42, connected: false };
        assert_eq!(random_multigraph(&spec).unwrap(), random_multigraph(&spec).unwrap());
        let other = RandomSpec { seed: 43, ..spec };
        assert_ne!(random_multigraph(&spec).unwrap(), random_multigraph(&other).unwrap());
    }

    #[test]
    fn parallel_edges_appear() {
        let spec = RandomSpec { n: 6, m: 14, parallel_prob: 0.9, seed: 1, connected: true };
        let g = random_multigraph(&spec).unwrap();
        assert!((0..6).any(|a| (0..6).any(|b| a != b && g.multiplicity(a, b) > 1)));
    }

    #[test]
    fn rejects_bad_specs() {
        let base = RandomSpec { n: 5, m: 3, parallel_prob: 0.3, seed: 0, connected: true };
        assert!(random_multigraph(&base).is_err());
        assert!(random_multigraph(&RandomSpec { n: 1, m: 1, ..base }).is_err());
        assert!(random_multigraph(&RandomSpec { m: 6, parallel_prob: 1.5, ..base }).is_err());
        assert!(random_multigraph(&RandomSpec { n: 1, m: 0, ..base }).is_ok());
    }

    #[test]
    fn prufer_trees_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..20 {
            let t = random_tree(n, &mut rng);
            let g = Multigraph::new(n, t).unwrap();
            assert_eq!(g.edge_count(), n - 1);
            assert!(g.is_connected());
        }
    }
}
