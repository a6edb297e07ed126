//! Spectrum of the normalized adjacency matrix.
//!
//! The random-walk matrix `A = D^{-1} M` is not symmetric for irregular
//! graphs, so eigenvalues are computed from `N = D^{-1/2} M D^{-1/2}`,
//! which is similar to `A` and therefore has the same spectrum. On
//! `d`-regular graphs `N = A` entrywise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

/// Dense row-major square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] = x;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data.chunks_exact(self.n).map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

fn admit(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    Ok(())
}

/// Symmetrically normalized adjacency `N_{uv} = 1/sqrt(d_u d_v)` on edges.
pub fn normalized_adjacency(g: &Graph) -> Result<DenseMatrix> {
    admit(g)?;
    let mut m = DenseMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        let w = 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        m.set(u, v, w);
        m.set(v, u, w);
    }
    Ok(m)
}

/// Row-normalized (random-walk) adjacency `A_{uv} = 1/d_u` on edges.
pub fn random_walk_matrix(g: &Graph) -> Result<DenseMatrix> {
    admit(g)?;
    let mut m = DenseMatrix::zeros(g.n());
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            m.set(u, v, 1.0 / g.degree(u) as f64);
        }
    }
    Ok(m)
}

/// Eigenvalues in descending order with matching unit eigenvectors.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    /// Off-diagonal Frobenius norm at termination.
    pub off_norm: f64,
    pub sweeps: usize,
}

/// Cyclic Jacobi rotations until the off-diagonal norm drops below `tol`.
pub fn jacobi_eigen(matrix: &DenseMatrix, tol: f64) -> Result<Eigen> {
    let n = matrix.n;
    let mut a = matrix.clone();
    let mut v = DenseMatrix::zeros(n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let mut sweeps = 0;
    let mut off = a.off_diagonal_norm();
    while off >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // columns p, q of A and V
                for k in 0..n {
                    let (akp, akq) = (a.get(k, p), a.get(k, q));
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                    let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
                // rows p, q of A
                let (rp, rq) = (p * n, q * n);
                for k in 0..n {
                    let (apk, aqk) = (a.data[rp + k], a.data[rq + k]);
                    a.data[rp + k] = c * apk - s * aqk;
                    a.data[rq + k] = s * apk + c * aqk;
                }
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
            }
        }
        off = a.off_diagonal_norm();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)).then(i.cmp(&j)));
    let values = order.iter().map(|&k| a.get(k, k)).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|i| v.get(i, k)).collect()).collect();
    Ok(Eigen { values, vectors, off_norm: off, sweeps })
}

/// Second largest eigenvalue of the normalized adjacency matrix.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    pub lambda2: f64,
    /// `1 - lambda2`.
    pub gap: f64,
    /// `||N x - λ₂ x||` for the reported eigenvector.
    pub residual: f64,
    pub n: usize,
    /// Full spectrum, descending.
    #[serde(skip)]
    pub eigenvalues: Vec<f64>,
    /// Unit eigenvector of `N` for `lambda2`; its first entry with
    /// magnitude above 1e-12 is positive.
    #[serde(skip)]
    pub eigenvector: Vec<f64>,
}

pub fn lambda2(g: &Graph) -> Result<SpectralResult> {
    lambda2_with(g, DEFAULT_TOL)
}

pub fn lambda2_with(g: &Graph, tol: f64) -> Result<SpectralResult> {
    let m = normalized_adjacency(g)?;
    let eig = jacobi_eigen(&m, tol)?;
    let lambda2 = eig.values[1];
    let mut x = eig.vectors[1].clone();
    if x.iter().find(|e| e.abs() > 1e-12).is_some_and(|&e| e < 0.0) {
        x.iter_mut().for_each(|e| *e = -*e);
    }
    let nx = m.mul_vec(&x);
    let residual = nx.iter().zip(&x).map(|(a, b)| (a - lambda2 * b).powi(2)).sum::<f64>().sqrt();
    Ok(SpectralResult {
        lambda2,
        gap: 1.0 - lambda2,
        residual,
        n: g.n(),
        eigenvalues: eig.values,
        eigenvector: x,
    })
}

pub fn spectral_gap(g: &Graph) -> Result<f64> {
    Ok(lambda2(g)?.gap)
}

/// Best threshold cut along the λ₂ eigenvector. An upper bound on the
/// exact conductance; this is a heuristic, not an approximation guarantee.
#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub value: Fraction,
    pub witness: VertexSet,
}

/// Orders vertices by `x_u / sqrt(d_u)` (ties by id) and scores every
/// threshold split by the conductance of its lower-volume side.
pub fn sweep_conductance(g: &Graph) -> Result<SweepResult> {
    let spec = lambda2(g)?;
    Ok(sweep_from_vector(g, &spec.eigenvector))
}

pub fn sweep_from_vector(g: &Graph, x: &[f64]) -> SweepResult {
    let n = g.n();
    let score: Vec<f64> = (0..n).map(|u| x[u] / (g.degree(u) as f64).sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| score[a].total_cmp(&score[b]).then(a.cmp(&b)));
    let total = 2 * g.m();
    let mut in_prefix = vec![false; n];
    let (mut cut, mut vol) = (0usize, 0usize);
    let mut best: Option<(Fraction, usize, bool)> = None;
    for (k, &v) in order.iter().enumerate().take(n - 1) {
        let inside = g.neighbors(v).iter().filter(|&&w| in_prefix[w]).count();
        cut = cut + g.degree(v) - 2 * inside;
        vol += g.degree(v);
        in_prefix[v] = true;
        let prefix_small = 2 * vol <= total;
        let side = if prefix_small { vol } else { total - vol };
        let value = Fraction::new(cut as u64, side as u64);
        if best.is_none_or(|(b, _, _)| value < b) {
            best = Some((value, k, prefix_small));
        }
    }
    let (value, k, prefix_small) = best.expect("n >= 2 gives at least one split");
    let prefix = VertexSet::from_ids(n, order[..=k].iter().copied());
    let witness = if prefix_small { prefix } else { prefix.complement() };
    SweepResult { value, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hypercube, petersen, random_regular, star};

    const EPS: f64 = 1e-9;

    #[test]
    fn normalized_adjacency_examples() {
        let m = normalized_adjacency(&complete(2).unwrap()).unwrap();
        assert_eq!(m, DenseMatrix { n: 2, data: vec![0.0, 1.0, 1.0, 0.0] });
        let c4 = normalized_adjacency(&cycle(4).unwrap()).unwrap();
        assert_eq!(c4.get(0, 1), 0.5);
        assert_eq!(c4.get(0, 2), 0.0);
        assert_eq!(c4.get(3, 0), 0.5);
        let s2 = normalized_adjacency(&star(2).unwrap()).unwrap();
        assert!((s2.get(0, 1) - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(s2.get(1, 2), 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(lambda2(&split).unwrap_err(), Error::DisconnectedInput);
        let isolated = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(normalized_adjacency(&isolated).unwrap_err(), Error::IsolatedVertex(2));
        assert_eq!(lambda2(&Graph::new(1, &[]).unwrap()).unwrap_err(), Error::TrivialGraph);
    }

    #[test]
    fn lambda2_examples() {
        assert!((lambda2(&complete(2).unwrap()).unwrap().lambda2 + 1.0).abs() < EPS);
        assert!((lambda2(&complete(4).unwrap()).unwrap().lambda2 + 1.0 / 3.0).abs() < EPS);
        assert!((lambda2(&cycle(6).unwrap()).unwrap().lambda2 - 0.5).abs() < EPS);
        assert!((lambda2(&petersen()).unwrap().lambda2 - 1.0 / 3.0).abs() < EPS);
    }

    #[test]
    fn gap_examples() {
        assert!((spectral_gap(&complete(2).unwrap()).unwrap() - 2.0).abs() < EPS);
        assert!((spectral_gap(&cycle(6).unwrap()).unwrap() - 0.5).abs() < EPS);
        assert!((spectral_gap(&petersen()).unwrap() - 2.0 / 3.0).abs() < EPS);
    }

    #[test]
    fn cycle_spectrum_matches_cosines() {
        for n in 3..=12 {
            let spec = lambda2(&cycle(n).unwrap()).unwrap();
            let mut expected: Vec<f64> =
                (0..n).map(|k| (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos()).collect();
            expected.sort_by(|a, b| b.total_cmp(a));
            for (a, b) in spec.eigenvalues.iter().zip(&expected) {
                assert!((a - b).abs() < EPS, "C{n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn residual_and_sign_convention() {
        for g in [petersen(), hypercube(4).unwrap(), star(6).unwrap(), random_regular(30, 3, 1).unwrap()] {
            if !g.is_connected() {
                continue;
            }
            let s = lambda2(&g).unwrap();
            assert!(s.residual < 1e-8);
            let first = s.eigenvector.iter().find(|e| e.abs() > 1e-12).unwrap();
            assert!(*first > 0.0);
            assert!((s.eigenvalues[0] - 1.0).abs() < EPS);
            assert!(s.eigenvalues[1] < 1.0 - EPS);
        }
    }

    #[test]
    fn star_spectrum_agrees_with_random_walk_matrix() {
        // Star K_{1,k}: random-walk spectrum is {1, 0 (k-1 times), -1}.
        for k in 2..=6 {
            let g = star(k).unwrap();
            let eig = jacobi_eigen(&normalized_adjacency(&g).unwrap(), DEFAULT_TOL).unwrap();
            let a = random_walk_matrix(&g).unwrap();
            assert!((eig.values[0] - 1.0).abs() < EPS);
            assert!((eig.values[k] + 1.0).abs() < EPS);
            assert!(eig.values[1..k].iter().all(|x| x.abs() < EPS));
            // each N-eigenvector maps to an A-eigenvector via D^{-1/2}
            for (lam, vec) in eig.values.iter().zip(&eig.vectors) {
                let y: Vec<f64> = (0..=k).map(|u| vec[u] / (g.degree(u) as f64).sqrt()).collect();
                let ay = a.mul_vec(&y);
                for (l, r) in ay.iter().zip(&y) {
                    assert!((l - lam * r).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn regular_normalizations_coincide() {
        for g in [cycle(7).unwrap(), petersen(), hypercube(3).unwrap()] {
            assert_eq!(normalized_adjacency(&g).unwrap(), random_walk_matrix(&g).unwrap());
        }
    }

    #[test]
    fn sweep_examples() {
        let c6 = sweep_conductance(&cycle(6).unwrap()).unwrap();
        assert_eq!(c6.value, Fraction::new(1, 3));
        assert_eq!(c6.witness.count(), 3);
        assert!(cycle(6).unwrap().induces_connected(&c6.witness));
        let k4 = sweep_conductance(&complete(4).unwrap()).unwrap();
        assert_eq!((k4.value, k4.witness.count()), (Fraction::new(2, 3), 2));
    }

    #[test]
    fn sweep_on_random_regular_respects_cheeger() {
        let g = random_regular(100, 3, 7).unwrap();
        assert!(g.is_connected());
        let gap = spectral_gap(&g).unwrap();
        let sweep = sweep_conductance(&g).unwrap();
        let v = sweep.value.to_f64();
        assert!(v > 0.0 && v <= 1.0);
        assert!(v >= gap / 2.0 - EPS);
        assert!(2 * g.volume(&sweep.witness) <= 2 * g.m());
        assert_eq!(Fraction::new(g.cut_size(&sweep.witness) as u64, g.volume(&sweep.witness) as u64), sweep.value);
    }
}
