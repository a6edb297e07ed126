#![allow(dead_code)]

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vat_core::generators::{self, FamilySpec};
use vat_core::Graph;

/// Connected Erdős–Rényi samples, to cover irregular graphs.
pub fn random_connected(count: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.random_range(n_range.clone());
        let p: f64 = rng.random_range(0.2..0.7);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.n() >= 2 && g.is_connected() {
            out.push((format!("gnp:{}", out.len()), g));
        }
    }
    out
}

/// Corpus graphs with at most `max_n` vertices: named families,
/// exhaustive regular graphs up to six vertices, seeded random regular
/// graphs, and connected random graphs.
pub fn small_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = generators::named_families()
        .into_iter()
        .map(|s| (s.to_string(), s.build().unwrap()))
        .collect();
    out.extend(generators::exhaustive_regular(6).unwrap().into_iter().map(|(s, g)| (s.to_string(), g)));
    out.extend(generators::random_samples(100).unwrap().into_iter().map(|(s, g)| (s.to_string(), g)));
    for seed in 0..20u64 {
        let spec = FamilySpec::RandomRegular { n: 10, d: 3, seed };
        let g = spec.build().unwrap();
        if g.is_connected() {
            out.push((spec.to_string(), g));
        }
    }
    out.extend(random_connected(60, 3..=max_n, 11));
    out.retain(|(_, g)| g.n() <= max_n);
    out
}
