//! Inputs shared by the benchmarks in `benches/`.

use degtree::{generate_family, random_multigraph, FamilySpec, Multigraph, RandomSpec};

/// Wheels and double-spoked wheels with rims of the given sizes.
pub fn wheels(rims: &[usize]) -> Vec<(String, Multigraph)> {
    rims.iter()
        .flat_map(|&r| [FamilySpec::Wheel(r), FamilySpec::MultiWheel(r)])
        .map(|spec| (spec.to_string(), generate_family(&spec).expect("valid family")))
        .collect()
}

/// A fixed connected multigraph with parallel edges.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Multigraph {
    random_multigraph(&RandomSpec { n, m, parallel_prob: 0.3, seed, connected: true }).expect("valid spec")
}
