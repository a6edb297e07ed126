//! Graph families used to exercise the metrics and the theorem checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const PAIRING_ATTEMPTS: usize = 10_000;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Complete graph `K_n`, `n >= 2`.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad(format!("complete graph needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves < 2 {
        return Err(bad(format!("star needs at least 2 leaves, got {leaves}")));
    }
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges)
}

/// Path on `n >= 2` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad(format!("path needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// The `k`-dimensional hypercube, `1 <= k <= 6`.
pub fn hypercube(k: usize) -> Result<Graph> {
    if !(1..=6).contains(&k) {
        return Err(bad(format!("hypercube dimension must be in 1..=6, got {k}")));
    }
    let n = 1usize << k;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..k).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v))
        .collect();
    Graph::new(n, &edges)
}

/// `K_{d,d}` with parts `0..d` and `d..2d`.
pub fn complete_bipartite(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(bad("complete bipartite needs d >= 1"));
    }
    let edges: Vec<_> = (0..d).flat_map(|u| (d..2 * d).map(move |v| (u, v))).collect();
    Graph::new(2 * d, &edges)
}

/// Circulant graph: `i ~ i + o (mod n)` for every offset `o`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(bad(format!("circulant needs n >= 3, got {n}")));
    }
    if offsets.is_empty() {
        return Err(bad("circulant needs at least one offset"));
    }
    let mut seen = BTreeSet::new();
    for &o in offsets {
        if o < 1 || o > n / 2 {
            return Err(bad(format!("offset {o} outside 1..={}", n / 2)));
        }
        if !seen.insert(o) {
            return Err(bad(format!("offset {o} repeated")));
        }
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &o in offsets {
            let j = (i + o) % n;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    Graph::new(n, &edges.into_iter().collect::<Vec<_>>())
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("petersen edge list is simple")
}

/// Samples a simple `d`-regular graph from the pairing model.
///
/// Stubs are shuffled with Fisher–Yates driven by ChaCha8 seeded from
/// `seed`, then paired consecutively. A pairing with a loop or a repeated
/// edge is discarded and the next attempt uses `seed + 1` (wrapping).
/// Connectivity is not guaranteed.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d < 1 || d >= n {
        return Err(bad(format!("random regular needs 1 <= d < n, got n={n} d={d}")));
    }
    if (n * d) % 2 == 1 {
        return Err(bad(format!("n*d must be even, got n={n} d={d}")));
    }
    let mut seed = seed;
    let mut stubs = vec![0usize; n * d];
    for _ in 0..PAIRING_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (i, s) in stubs.iter_mut().enumerate() {
            *s = i / d;
        }
        for i in (1..stubs.len()).rev() {
            let j = rng.random_range(0..=i);
            stubs.swap(i, j);
        }
        let mut edges = BTreeSet::new();
        let simple = stubs.chunks_exact(2).all(|p| {
            let (u, v) = (p[0].min(p[1]), p[0].max(p[1]));
            u != v && edges.insert((u, v))
        });
        if simple {
            return Graph::new(n, &edges.into_iter().collect::<Vec<_>>());
        }
        seed = seed.wrapping_add(1);
    }
    Err(Error::RetryLimitExceeded(PAIRING_ATTEMPTS))
}

/// All labeled connected `d`-regular graphs on `n <= 8` vertices.
///
/// Edge subsets of `K_n` are visited as increasing integers (bit `k` is
/// the `k`-th pair in lexicographic order); only subsets with exactly
/// `n*d/2` edges are generated.
pub fn enumerate_small_regular(n: usize, d: usize) -> Result<SmallRegular> {
    if !(2..=8).contains(&n) {
        return Err(bad(format!("exhaustive enumeration needs 2 <= n <= 8, got {n}")));
    }
    if d < 1 || d >= n || (n * d) % 2 == 1 {
        return Err(bad(format!("no {d}-regular graphs on {n} vertices")));
    }
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut incident = vec![0u64; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        incident[u] |= 1 << k;
        incident[v] |= 1 << k;
    }
    let k = n * d / 2;
    Ok(SmallRegular {
        n,
        d,
        end: 1u64 << pairs.len(),
        pairs,
        incident,
        next: Some((1u64 << k) - 1),
    })
}

pub struct SmallRegular {
    n: usize,
    d: usize,
    pairs: Vec<(usize, usize)>,
    incident: Vec<u64>,
    end: u64,
    next: Option<u64>,
}

impl SmallRegular {
    fn accepts(&self, subset: u64) -> bool {
        if self.incident.iter().any(|&m| (m & subset).count_ones() as usize != self.d) {
            return false;
        }
        let mut adj = vec![0u64; self.n];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if subset >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let mut reached = 1u64;
        loop {
            let grown = (0..self.n)
                .filter(|&v| reached >> v & 1 == 1)
                .fold(reached, |acc, v| acc | adj[v]);
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached.count_ones() as usize == self.n
    }
}

// Next integer with the same popcount (Gosper's hack).
fn next_combination(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

impl Iterator for SmallRegular {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(subset) = self.next.filter(|&s| s < self.end) {
            self.next = next_combination(subset);
            if self.accepts(subset) {
                let edges: Vec<_> = self
                    .pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| subset >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                return Some(Graph::new(self.n, &edges).expect("subset of K_n is simple"));
            }
        }
        self.next = None;
        None
    }
}

/// A named graph family instance with a canonical string form such as
/// `cycle:6`, `circulant:8,1+4` or `random_regular:20,3,seed=42`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Path(usize),
    Hypercube(usize),
    CompleteBipartite(usize),
    Circulant { n: usize, offsets: Vec<usize> },
    RandomRegular { n: usize, d: usize, seed: u64 },
    Petersen,
    /// The `index`-th graph (0-based) of [`enumerate_small_regular`].
    Exhaustive { n: usize, d: usize, index: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Star(l) => star(*l),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Hypercube(k) => hypercube(*k),
            FamilySpec::CompleteBipartite(d) => complete_bipartite(*d),
            FamilySpec::Circulant { n, offsets } => circulant(*n, offsets),
            FamilySpec::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Exhaustive { n, d, index } => enumerate_small_regular(*n, *d)?
                .nth(*index)
                .ok_or_else(|| bad(format!("index {index} out of range for n={n} d={d}"))),
        }
    }

    /// Family name as used before the colon.
    pub fn family(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::Path(_) => "path",
            FamilySpec::Hypercube(_) => "hypercube",
            FamilySpec::CompleteBipartite(_) => "complete_bipartite",
            FamilySpec::Circulant { .. } => "circulant",
            FamilySpec::RandomRegular { .. } => "random_regular",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Exhaustive { .. } => "exhaustive",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family();
        match self {
            FamilySpec::Cycle(x)
            | FamilySpec::Complete(x)
            | FamilySpec::Star(x)
            | FamilySpec::Path(x)
            | FamilySpec::Hypercube(x)
            | FamilySpec::CompleteBipartite(x) => write!(f, "{name}:{x}"),
            FamilySpec::Circulant { n, offsets } => {
                let offs: Vec<String> = offsets.iter().map(usize::to_string).collect();
                write!(f, "{name}:{n},{}", offs.join("+"))
            }
            FamilySpec::RandomRegular { n, d, seed } => write!(f, "{name}:{n},{d},seed={seed}"),
            FamilySpec::Petersen => write!(f, "{name}"),
            FamilySpec::Exhaustive { n, d, index } => write!(f, "{name}:{n},{d},index={index}"),
        }
    }
}

fn parse_num<T: FromStr>(tok: &str) -> Result<T> {
    tok.trim().parse().map_err(|_| bad(format!("expected an integer, got {tok:?}")))
}

fn keyed<T: FromStr>(tok: &str, key: &str) -> Result<T> {
    let tok = tok.trim();
    parse_num(tok.strip_prefix(key).and_then(|t| t.strip_prefix('=')).unwrap_or(tok))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if rest.is_empty() { Vec::new() } else { rest.split(',').collect() };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(format!("{name} takes {k} parameter(s), got {}", args.len())))
            }
        };
        let one = || -> Result<usize> {
            arity(1)?;
            parse_num(args[0])
        };
        Ok(match name {
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "star" => FamilySpec::Star(one()?),
            "path" => FamilySpec::Path(one()?),
            "hypercube" => FamilySpec::Hypercube(one()?),
            "complete_bipartite" => FamilySpec::CompleteBipartite(one()?),
            "circulant" => {
                arity(2)?;
                let offsets = args[1].split('+').map(parse_num).collect::<Result<_>>()?;
                FamilySpec::Circulant { n: parse_num(args[0])?, offsets }
            }
            "random_regular" => {
                if !(2..=3).contains(&args.len()) {
                    return Err(bad("random_regular takes n,d[,seed=S]"));
                }
                let seed = args.get(2).map(|t| keyed(t, "seed")).transpose()?.unwrap_or(0);
                FamilySpec::RandomRegular { n: parse_num(args[0])?, d: parse_num(args[1])?, seed }
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            "exhaustive" => {
                arity(3)?;
                FamilySpec::Exhaustive {
                    n: parse_num(args[0])?,
                    d: parse_num(args[1])?,
                    index: keyed(args[2], "index")?,
                }
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        })
    }
}

/// Named families at desk scale: regular families up to 16 vertices plus
/// small stars and paths as irregular controls.
pub fn named_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    out.extend((3..=16).map(FamilySpec::Cycle));
    out.extend((2..=16).map(FamilySpec::Complete));
    out.extend((1..=4).map(FamilySpec::Hypercube));
    out.extend((1..=8).map(FamilySpec::CompleteBipartite));
    for n in 5..=16usize {
        let mut sets = vec![vec![1, 2]];
        if n >= 6 {
            sets.push(vec![1, 3]);
        }
        if n % 2 == 0 && n / 2 > 2 {
            sets.push(vec![1, n / 2]);
        }
        if n >= 8 {
            sets.push(vec![1, 2, 4]);
        }
        out.extend(sets.into_iter().map(|offsets| FamilySpec::Circulant { n, offsets }));
    }
    out.push(FamilySpec::Petersen);
    out.extend((2..=8).map(FamilySpec::Star));
    out.extend((2..=8).map(FamilySpec::Path));
    out
}

/// `count` connected random regular graphs with `6 <= n <= 18` and
/// `d` in 3..=5. A disconnected draw is replaced by the draw at
/// `seed + 1000`.
pub fn random_samples(count: usize) -> Result<Vec<(FamilySpec, Graph)>> {
    (0..count)
        .map(|k| {
            let mut n = 6 + k % 13;
            let d = 3 + (k / 13) % 3;
            if (n * d) % 2 == 1 {
                n = if n < 18 { n + 1 } else { n - 1 };
            }
            let mut seed = k as u64;
            loop {
                let g = random_regular(n, d, seed)?;
                if g.is_connected() {
                    return Ok((FamilySpec::RandomRegular { n, d, seed }, g));
                }
                seed += 1000;
            }
        })
        .collect()
}

/// Every connected labeled regular graph with `2 <= n <= max_n`.
pub fn exhaustive_regular(max_n: usize) -> Result<Vec<(FamilySpec, Graph)>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in (1..n).filter(|d| (n * d) % 2 == 0) {
            for (index, g) in enumerate_small_regular(n, d)?.enumerate() {
                out.push((FamilySpec::Exhaustive { n, d, index }, g));
            }
        }
    }
    Ok(out)
}

/// Named families, exhaustive regular graphs up to `exhaustive_max_n`
/// vertices, and `random` seeded samples, in that order.
pub fn standard_corpus(exhaustive_max_n: usize, random: usize) -> Result<Vec<(FamilySpec, Graph)>> {
    let mut out = named_families()
        .into_iter()
        .map(|spec| spec.build().map(|g| (spec, g)))
        .collect::<Result<Vec<_>>>()?;
    out.extend(exhaustive_regular(exhaustive_max_n)?);
    out.extend(random_samples(random)?);
    Ok(out)
}
