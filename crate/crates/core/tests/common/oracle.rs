//! Naive reference implementations used only by tests. No pruning, no
//! bit-parallel tricks, no shared code with the engines under test: every
//! subset gets a fresh breadth-first component search over plain vectors.

#![allow(dead_code)]

use std::collections::VecDeque;

use vat_core::Graph;

/// Reduced `(num, den)`.
pub type Ratio = (u64, u64);

fn reduce((a, b): Ratio) -> Ratio {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    (a / x, b / x)
}

fn less(l: Ratio, r: Ratio) -> bool {
    (l.0 as u128) * (r.1 as u128) < (r.0 as u128) * (l.1 as u128)
}

fn members(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Sizes of the components of `V - removed`, in discovery order from the
/// smallest unvisited vertex, each paired with its member list.
pub fn remainder_components(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut q = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = q.pop_front() {
            comp.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Largest remaining component, ties to the one found first (smallest id).
pub fn largest_remaining(g: &Graph, removed: &[bool]) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for c in remainder_components(g, removed) {
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

/// Exact VAT with the lowest-encoded minimizing set.
pub fn vat(g: &Graph) -> (Ratio, Vec<usize>) {
    let n = g.n();
    let mut best: Option<(Ratio, u64)> = None;
    for mask in 1..(1u64 << n) - 1 {
        let s = members(n, mask);
        let k = s.iter().filter(|&&b| b).count() as u64;
        let c = largest_remaining(g, &s).len() as u64;
        let value = reduce((k, n as u64 - k - c + 1));
        if best.is_none_or(|(b, _)| less(value, b)) {
            best = Some((value, mask));
        }
    }
    let (v, mask) = best.unwrap();
    (v, (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// Exact conductance with the lowest-encoded minimizing set.
pub fn conductance(g: &Graph) -> (Ratio, Vec<usize>) {
    let n = g.n();
    let total: usize = (0..n).map(|v| g.neighbors(v).len()).sum();
    let mut best: Option<(Ratio, u64)> = None;
    for mask in 1..1u64 << n {
        let s = members(n, mask);
        let vol: usize = (0..n).filter(|&v| s[v]).map(|v| g.neighbors(v).len()).sum();
        if 2 * vol > total {
            continue;
        }
        let cut = (0..n)
            .filter(|&u| s[u])
            .flat_map(|u| g.neighbors(u).iter().filter(|&&v| !s[v]))
            .count();
        let value = reduce((cut as u64, vol as u64));
        if best.is_none_or(|(b, _)| less(value, b)) {
            best = Some((value, mask));
        }
    }
    let (v, mask) = best.unwrap();
    (v, (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// Real-valued (α,β)-weighted VAT minimum.
pub fn weighted_vat(g: &Graph, alpha: f64, beta: f64) -> (f64, Vec<usize>) {
    let n = g.n();
    let (c, v) = (g.costs(), g.values());
    let mut best: Option<(f64, u64)> = None;
    for mask in 1..(1u64 << n) - 1 {
        let s = members(n, mask);
        let cmax = largest_remaining(g, &s);
        let cost: f64 = (0..n).filter(|&x| s[x]).map(|x| c[x]).sum();
        let lost: f64 = (0..n).filter(|&x| !s[x] && !cmax.contains(&x)).map(|x| v[x]).sum();
        let value = (alpha * cost + beta) / (1.0 + lost);
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, mask));
        }
    }
    let (val, mask) = best.unwrap();
    (val, (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}
