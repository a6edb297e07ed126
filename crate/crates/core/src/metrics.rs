//! Exact vertex attack tolerance and conductance by subset enumeration.
//!
//! Subsets are encoded as integers (bit `i` = vertex `i`). Every
//! minimization breaks ties toward the smallest encoding, and the subset
//! range is split into fixed chunks whose local minima are reduced with
//! the same total order, so value and witness do not depend on scheduling.
//!
//! The set-conductance argmin is taken over `Φ_S`, with `Vol(S) = Vol(V)/2`
//! admissible.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_LIMIT: usize = 20;
/// Width of the subset encoding.
pub const HARD_LIMIT: usize = 64;

/// Controls exhaustive enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Enumeration {
    /// Largest vertex count accepted; clamped to [`HARD_LIMIT`].
    pub limit: usize,
    pub parallel: bool,
    /// Each work unit covers `2^chunk_bits` consecutive subsets.
    pub chunk_bits: u32,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration { limit: DEFAULT_LIMIT, parallel: true, chunk_bits: 16 }
    }
}

impl Enumeration {
    pub fn with_limit(limit: usize) -> Self {
        Enumeration { limit, ..Default::default() }
    }

    pub fn sequential(self) -> Self {
        Enumeration { parallel: false, ..self }
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        admit_small(g)?;
        let limit = self.limit.min(HARD_LIMIT);
        if g.n() > limit {
            return Err(Error::TooLarge { n: g.n(), limit });
        }
        Ok(())
    }

    /// Applies `scan` to each chunk of `first..=last` and reduces the local
    /// results with `pick`.
    fn reduce<T, F, P>(&self, first: u64, last: u64, scan: F, pick: P) -> Option<T>
    where
        T: Send,
        F: Fn(u64, u64) -> Option<T> + Sync,
        P: Fn(T, T) -> T + Sync + Send,
    {
        if first > last {
            return None;
        }
        let bits = self.chunk_bits.min(63);
        let chunks = ((last - first) >> bits) + 1;
        let run = |c: u64| {
            let lo = first + (c << bits);
            let hi = lo.saturating_add((1u64 << bits) - 1).min(last);
            scan(lo, hi)
        };
        if self.parallel && chunks > 1 {
            (0..chunks).into_par_iter().filter_map(run).reduce_with(pick)
        } else {
            (0..chunks).filter_map(run).reduce(pick)
        }
    }
}

fn admit_small(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    Ok(())
}

fn check_set(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::SetWidth { expected: g.n(), got: s.universe() });
    }
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Vat,
    Conductance,
    AlphaBetaVat,
    WeightedVat,
}

/// An exact metric value together with the lowest-encoded set achieving it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricResult {
    pub metric: Metric,
    pub value: Fraction,
    pub witness: VertexSet,
}

/// Result of a (possibly real-weighted) VAT generalization.
///
/// `exact` is present whenever α, β and all weights are integers, in which
/// case `value` is its decimal image.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightedValue {
    pub metric: Metric,
    pub value: f64,
    pub exact: Option<Fraction>,
    pub witness: VertexSet,
    pub alpha: f64,
    pub beta: f64,
}

/// `|S| / (|V - S - C_max(V - S)| + 1)`.
pub fn set_vat(g: &Graph, s: &VertexSet) -> Result<Fraction> {
    admit_small(g)?;
    check_set(g, s)?;
    if s.is_full() {
        return Err(Error::FullSet);
    }
    let c = g.largest_component(s)?.count();
    let k = s.count();
    Ok(Fraction::new(k as u64, (g.n() - k - c + 1) as u64))
}

/// `|Cut(S, V - S)| / Vol(S)` for `Vol(S) <= Vol(V)/2`.
pub fn set_conductance(g: &Graph, s: &VertexSet) -> Result<Fraction> {
    admit_small(g)?;
    check_set(g, s)?;
    let vol = g.volume(s);
    if vol > g.m() {
        return Err(Error::VolumeTooLarge);
    }
    Ok(Fraction::new(g.cut_size(s) as u64, vol as u64))
}

/// Largest component of the remainder after deleting a subset, found with
/// a disjoint-set forest rebuilt for each subset.
struct Remainder {
    n: usize,
    edges: Vec<(u8, u8)>,
}

struct Forest {
    parent: [u8; 64],
    size: [u8; 64],
}

impl Forest {
    fn new() -> Self {
        Forest { parent: [0; 64], size: [0; 64] }
    }

    fn find(&mut self, mut v: u8) -> u8 {
        while self.parent[v as usize] != v {
            let p = self.parent[v as usize];
            self.parent[v as usize] = self.parent[p as usize];
            v = p;
        }
        v
    }

    fn union(&mut self, a: u8, b: u8) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }
}

impl Remainder {
    fn new(g: &Graph) -> Self {
        let edges = g.edges().map(|(u, v)| (u as u8, v as u8)).collect();
        Remainder { n: g.n(), edges }
    }

    /// Root and size of the largest component of `V - removed`, ties to
    /// the component with the smallest vertex. `removed` must not be full.
    fn largest(&self, removed: u64, f: &mut Forest) -> (u8, u64) {
        for v in 0..self.n {
            if removed >> v & 1 == 0 {
                f.parent[v] = v as u8;
                f.size[v] = 1;
            }
        }
        for &(u, v) in &self.edges {
            if (removed >> u | removed >> v) & 1 == 0 {
                f.union(u, v);
            }
        }
        let mut best = (0u8, 0u64);
        for v in 0..self.n {
            if removed >> v & 1 == 0 {
                let r = f.find(v as u8);
                let size = f.size[r as usize] as u64;
                if size > best.1 {
                    best = (r, size);
                }
            }
        }
        best
    }

    fn largest_mask(&self, removed: u64, f: &mut Forest) -> u64 {
        let (root, _) = self.largest(removed, f);
        (0..self.n)
            .filter(|&v| removed >> v & 1 == 0 && f.find(v as u8) == root)
            .fold(0, |m, v| m | 1 << v)
    }
}

fn pick_exact(a: (Fraction, u64), b: (Fraction, u64)) -> (Fraction, u64) {
    if (b.0, b.1) < (a.0, a.1) {
        b
    } else {
        a
    }
}

/// Exact VAT: minimum of [`set_vat`] over nonempty proper subsets.
pub fn vat_exact(g: &Graph) -> Result<MetricResult> {
    vat_exact_with(g, &Enumeration::default())
}

pub fn vat_exact_with(g: &Graph, opts: &Enumeration) -> Result<MetricResult> {
    opts.admit(g)?;
    let n = g.n() as u64;
    let rem = Remainder::new(g);
    let scan = |lo: u64, hi: u64| {
        let mut forest = Forest::new();
        let mut best: Option<(Fraction, u64)> = None;
        for mask in lo..=hi {
            let k = mask.count_ones() as u64;
            // The denominator never exceeds n - 1, so |S|/n bounds τ_S strictly from below.
            if let Some((b, _)) = best {
                if k * b.denom() >= n * b.numer() {
                    continue;
                }
            }
            let (_, c) = rem.largest(mask, &mut forest);
            let value = Fraction::new(k, n - k - c + 1);
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, mask));
            }
        }
        best
    };
    let (value, mask) = opts
        .reduce(1, full_mask(g.n()) - 1, scan, pick_exact)
        .expect("n >= 2 leaves a nonempty proper subset");
    Ok(MetricResult { metric: Metric::Vat, value, witness: VertexSet::from_mask(g.n(), mask) })
}

fn small_int(x: f64) -> Option<u64> {
    (x >= 0.0 && x.fract() == 0.0 && x <= (1u64 << 20) as f64).then_some(x as u64)
}

fn check_alpha_beta(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::BadParameter(format!("alpha must be positive, got {alpha}")));
    }
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::BadParameter(format!("beta must be nonnegative, got {beta}")));
    }
    Ok(())
}

fn mask_sum<T: Copy + std::iter::Sum<T>>(w: &[T], mask: u64) -> T {
    (0..w.len()).filter(|&v| mask >> v & 1 == 1).map(|v| w[v]).sum()
}

/// `min_S (α Σ_S c + β) / (1 + Σ_V v - Σ_{S ∪ C_max} v)` with the given weights.
fn generic_vat(
    g: &Graph,
    alpha: f64,
    beta: f64,
    costs: &[f64],
    values: &[f64],
    metric: Metric,
    opts: &Enumeration,
) -> Result<WeightedValue> {
    check_alpha_beta(alpha, beta)?;
    opts.admit(g)?;
    let n = g.n();
    let rem = Remainder::new(g);
    let last = full_mask(n) - 1;
    let ints = |w: &[f64]| w.iter().map(|&x| small_int(x)).collect::<Option<Vec<u64>>>();
    let integral = (small_int(alpha), small_int(beta), ints(costs), ints(values));

    if let (Some(a), Some(b), Some(c), Some(v)) = integral {
        let scan = |lo: u64, hi: u64| {
            let mut forest = Forest::new();
            let mut best: Option<(Fraction, u64)> = None;
            for mask in lo..=hi {
                let cmax = rem.largest_mask(mask, &mut forest);
                let others = full_mask(n) & !mask & !cmax;
                let value = Fraction::new(a * mask_sum(&c, mask) + b, 1 + mask_sum(&v, others));
                if best.is_none_or(|(bv, _)| value < bv) {
                    best = Some((value, mask));
                }
            }
            best
        };
        let (value, mask) = opts.reduce(1, last, scan, pick_exact).expect("nonempty range");
        return Ok(WeightedValue {
            metric,
            value: value.to_f64(),
            exact: Some(value),
            witness: VertexSet::from_mask(n, mask),
            alpha,
            beta,
        });
    }

    let scan = |lo: u64, hi: u64| {
        let mut forest = Forest::new();
        let mut best: Option<(f64, u64)> = None;
        for mask in lo..=hi {
            let cmax = rem.largest_mask(mask, &mut forest);
            let others = full_mask(n) & !mask & !cmax;
            let value = (alpha * mask_sum(costs, mask) + beta) / (1.0 + mask_sum(values, others));
            if best.is_none_or(|(bv, _)| value < bv) {
                best = Some((value, mask));
            }
        }
        best
    };
    let pick = |a: (f64, u64), b: (f64, u64)| {
        if b.0.total_cmp(&a.0).then(b.1.cmp(&a.1)).is_lt() {
            b
        } else {
            a
        }
    };
    let (value, mask) = opts.reduce(1, last, scan, pick).expect("nonempty range");
    Ok(WeightedValue { metric, value, exact: None, witness: VertexSet::from_mask(n, mask), alpha, beta })
}

/// (α,β)-VAT: `min_S (α|S| + β) / (|V - S - C_max(V - S)| + 1)`. Vertex
/// weights of `g` are ignored.
pub fn alpha_beta_vat_exact(g: &Graph, alpha: f64, beta: f64) -> Result<WeightedValue> {
    alpha_beta_vat_exact_with(g, alpha, beta, &Enumeration::default())
}

pub fn alpha_beta_vat_exact_with(g: &Graph, alpha: f64, beta: f64, opts: &Enumeration) -> Result<WeightedValue> {
    let ones = vec![1.0; g.n()];
    generic_vat(g, alpha, beta, &ones, &ones, Metric::AlphaBetaVat, opts)
}

/// Cost-value weighted VAT using the graph's vertex weights.
pub fn weighted_vat_exact(g: &Graph) -> Result<WeightedValue> {
    weighted_vat_exact_with(g, &Enumeration::default())
}

pub fn weighted_vat_exact_with(g: &Graph, opts: &Enumeration) -> Result<WeightedValue> {
    generic_vat(g, 1.0, 0.0, g.costs(), g.values(), Metric::WeightedVat, opts)
}

/// (α,β)-VAT of a cost-value weighted graph.
pub fn alpha_beta_weighted_vat_exact(g: &Graph, alpha: f64, beta: f64) -> Result<WeightedValue> {
    alpha_beta_weighted_vat_exact_with(g, alpha, beta, &Enumeration::default())
}

pub fn alpha_beta_weighted_vat_exact_with(
    g: &Graph,
    alpha: f64,
    beta: f64,
    opts: &Enumeration,
) -> Result<WeightedValue> {
    generic_vat(g, alpha, beta, g.costs(), g.values(), Metric::WeightedVat, opts)
}

/// Subsets visited in reflected Gray-code order with cut and volume
/// maintained incrementally.
struct GrayScan<'a> {
    adj: &'a [u64],
    deg: &'a [u64],
    half_volume: u64,
}

impl GrayScan<'_> {
    /// Calls `visit(set, cut, vol)` on every admissible set with Gray index in `lo..=hi`.
    fn run(&self, lo: u64, hi: u64, mut visit: impl FnMut(u64, u64, u64)) {
        let mut s = lo ^ (lo >> 1);
        let mut vol: u64 = (0..self.adj.len()).filter(|&v| s >> v & 1 == 1).map(|v| self.deg[v]).sum();
        let mut cut: u64 = (0..self.adj.len())
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (self.adj[v] & !s).count_ones() as u64)
            .sum();
        let mut i = lo;
        loop {
            if s != 0 && vol <= self.half_volume {
                visit(s, cut, vol);
            }
            if i == hi {
                break;
            }
            i += 1;
            let v = i.trailing_zeros() as usize;
            let bit = 1u64 << v;
            if s & bit == 0 {
                cut = cut + self.deg[v] - 2 * (self.adj[v] & s).count_ones() as u64;
                vol += self.deg[v];
                s |= bit;
            } else {
                s &= !bit;
                cut = cut + 2 * (self.adj[v] & s).count_ones() as u64 - self.deg[v];
                vol -= self.deg[v];
            }
        }
    }
}

/// Exact conductance: minimum of [`set_conductance`] over nonempty sets
/// with at most half the volume.
pub fn conductance_exact(g: &Graph) -> Result<MetricResult> {
    conductance_exact_with(g, &Enumeration::default())
}

pub fn conductance_exact_with(g: &Graph, opts: &Enumeration) -> Result<MetricResult> {
    opts.admit(g)?;
    let adj = g.adjacency_masks().expect("n <= 64 after admit");
    let deg: Vec<u64> = adj.iter().map(|a| a.count_ones() as u64).collect();
    let gray = GrayScan { adj: &adj, deg: &deg, half_volume: g.m() as u64 };
    let scan = |lo: u64, hi: u64| {
        let mut best: Option<(u64, u64, u64)> = None;
        gray.run(lo, hi, |s, cut, vol| {
            let better = match best {
                None => true,
                Some((bc, bv, bs)) => {
                    let (l, r) = (cut as u128 * bv as u128, bc as u128 * vol as u128);
                    l < r || (l == r && s < bs)
                }
            };
            if better {
                best = Some((cut, vol, s));
            }
        });
        best.map(|(c, v, s)| (Fraction::new(c, v), s))
    };
    let (value, mask) = opts
        .reduce(1, full_mask(g.n()), scan, pick_exact)
        .expect("a single vertex always has at most half the volume");
    Ok(MetricResult { metric: Metric::Conductance, value, witness: VertexSet::from_mask(g.n(), mask) })
}

/// Every set achieving the exact conductance, in ascending encoding order.
pub fn conductance_minimizers(g: &Graph, opts: &Enumeration) -> Result<(Fraction, Vec<VertexSet>)> {
    let phi = conductance_exact_with(g, opts)?;
    let adj = g.adjacency_masks().expect("admitted");
    let deg: Vec<u64> = adj.iter().map(|a| a.count_ones() as u64).collect();
    let gray = GrayScan { adj: &adj, deg: &deg, half_volume: g.m() as u64 };
    let (num, den) = (phi.value.numer() as u128, phi.value.denom() as u128);
    let mut masks = Vec::new();
    gray.run(1, full_mask(g.n()), |s, cut, vol| {
        if cut as u128 * den == num * vol as u128 {
            masks.push(s);
        }
    });
    masks.sort_unstable();
    let sets = masks.into_iter().map(|m| VertexSet::from_mask(g.n(), m)).collect();
    Ok((phi.value, sets))
}

/// Splits `V - S` for the VAT witness `S` into the largest component `T`
/// and the remaining components `C_1..C_q`.
pub fn vat_witness_components(g: &Graph, result: &MetricResult) -> (VertexSet, Vec<VertexSet>) {
    let mut comps = g.components(&result.witness).into_iter();
    let t = comps.next().unwrap_or_else(|| VertexSet::empty(g.n()));
    (t, comps.collect())
}
