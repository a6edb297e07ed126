//! Immutable simple undirected graphs with optional vertex weights.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph on vertices `0..n`.
///
/// Every vertex carries an attack cost and a disconnection value. Both
/// default to 1; when only one list is supplied it is used for both.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
    costs: Vec<f64>,
    values: Vec<f64>,
}

fn check_weights(n: usize, w: &[f64]) -> Result<()> {
    if w.len() != n {
        return Err(Error::WeightLength { expected: n, got: w.len() });
    }
    match w.iter().position(|&x| !(x > 0.0 && x.is_finite())) {
        Some(v) => Err(Error::NonPositiveWeight(v)),
        None => Ok(()),
    }
}

impl Graph {
    /// Unweighted graph from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::with_weights(n, edges, None, None)
    }

    pub fn with_weights(
        n: usize,
        edges: &[(usize, usize)],
        costs: Option<Vec<f64>>,
        values: Option<Vec<f64>>,
    ) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::BadVertexId { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        if let Some(c) = &costs {
            check_weights(n, c)?;
        }
        if let Some(v) = &values {
            check_weights(n, v)?;
        }
        let (costs, values) = match (costs, values) {
            (Some(c), Some(v)) => (c, v),
            (Some(c), None) => (c.clone(), c),
            (None, Some(v)) => (v.clone(), v),
            (None, None) => (vec![1.0; n], vec![1.0; n]),
        };
        Ok(Graph { adjacency, m: edges.len(), costs, values })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn costs(&self) -> &[f64] {
        &self.costs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn has_unit_weights(&self) -> bool {
        self.costs.iter().chain(&self.values).all(|&w| w == 1.0)
    }

    /// Per-vertex neighbor bitmasks, available when `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| {
            self.adjacency
                .iter()
                .map(|nbrs| nbrs.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect()
        })
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_connected(&self) -> bool {
        self.components(&VertexSet::empty(self.n())).len() == 1
    }

    /// Connected components of the subgraph induced by `V - removed`,
    /// ordered by decreasing size and then by smallest member.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = removed.clone();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            seen.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &v in &self.adjacency[u] {
                    if !seen.contains(v) {
                        seen.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        // Discovery order is already by smallest member; the sort is stable.
        out.sort_by_key(|c| std::cmp::Reverse(c.count()));
        out
    }

    /// The largest component of `V - removed`; ties go to the component
    /// holding the smallest vertex id.
    pub fn largest_component(&self, removed: &VertexSet) -> Result<VertexSet> {
        self.components(removed).into_iter().next().ok_or(Error::EmptyRemainder)
    }

    pub fn volume(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree(v)).sum()
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn cut_size(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|u| self.adjacency[u].iter().filter(|&&v| !s.contains(v)).count())
            .sum()
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|nbrs| nbrs.len() == d).then_some(d)
    }

    /// Whether `s` is nonempty and induces a connected subgraph.
    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        !s.is_empty() && self.components(&s.complement()).len() == 1
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in ascending id
    /// order. Weights are carried over.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        let ids = keep.to_vec();
        let mut relabel = vec![usize::MAX; self.n()];
        for (new, &old) in ids.iter().enumerate() {
            relabel[old] = new;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (relabel[u], relabel[v]))
            .collect();
        let costs = ids.iter().map(|&v| self.costs[v]).collect();
        let values = ids.iter().map(|&v| self.values[v]).collect();
        Graph::with_weights(ids.len(), &edges, Some(costs), Some(values))
    }

    /// Restricts to the largest connected component; identity on
    /// connected graphs.
    pub fn restrict_to_largest_component(&self) -> Graph {
        if self.is_connected() {
            return self.clone();
        }
        let keep = self
            .largest_component(&VertexSet::empty(self.n()))
            .expect("n >= 1 guarantees a component");
        self.induced_subgraph(&keep).expect("induced subgraph of a valid graph is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn two_triangles() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied())
    }

    #[test]
    fn build_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_unit_weights());
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(3, &[(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(1, 0), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::BadVertexId { id: 3, n: 3 }));
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(
            Graph::with_weights(2, &[(0, 1)], Some(vec![1.0, 0.0]), None),
            Err(Error::NonPositiveWeight(1))
        );
        assert_eq!(
            Graph::with_weights(2, &[(0, 1)], None, Some(vec![1.0, f64::NAN])),
            Err(Error::NonPositiveWeight(1))
        );
        assert!(matches!(
            Graph::with_weights(2, &[(0, 1)], Some(vec![1.0]), None),
            Err(Error::WeightLength { .. })
        ));
    }

    #[test]
    fn weight_defaults() {
        let g = Graph::with_weights(2, &[(0, 1)], Some(vec![2.0, 3.0]), None).unwrap();
        assert_eq!(g.values(), &[2.0, 3.0]);
        let g = Graph::with_weights(2, &[(0, 1)], None, Some(vec![5.0, 1.0])).unwrap();
        assert_eq!(g.costs(), &[5.0, 1.0]);
        assert!(!g.has_unit_weights());
    }

    #[test]
    fn disconnected_graph_is_representable() {
        let g = two_triangles();
        assert_eq!(g.m(), 6);
        assert!(!g.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(2, &[(0, 1)]).unwrap().is_connected());
        assert!(cycle(6).is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn components_examples() {
        let c = cycle(6).components(&set(6, &[0, 3]));
        assert_eq!(c.iter().map(VertexSet::to_vec).collect::<Vec<_>>(), vec![vec![1, 2], vec![4, 5]]);

        let c = star(5).components(&set(6, &[0]));
        assert_eq!(c.len(), 5);
        assert!(c.iter().all(|s| s.count() == 1));

        let c = complete(4).components(&set(4, &[0]));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].count(), 3);

        assert!(cycle(4).components(&VertexSet::full(4)).is_empty());
    }

    #[test]
    fn components_sorted_by_size_then_min_id() {
        // 0-1 | 2-3-4 | 5
        let g = Graph::new(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let c = g.components(&VertexSet::empty(6));
        let v: Vec<_> = c.iter().map(VertexSet::to_vec).collect();
        assert_eq!(v, vec![vec![2, 3, 4], vec![0, 1], vec![5]]);
    }

    #[test]
    fn largest_component_examples() {
        assert_eq!(cycle(6).largest_component(&set(6, &[0, 3])).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(star(5).largest_component(&set(6, &[0])).unwrap().to_vec(), vec![1]);
        assert!(cycle(5).largest_component(&VertexSet::empty(5)).unwrap().is_full());
        assert_eq!(cycle(3).largest_component(&VertexSet::full(3)), Err(Error::EmptyRemainder));
    }

    #[test]
    fn volume_examples() {
        assert_eq!(complete(4).volume(&set(4, &[1, 3])), 6);
        assert_eq!(cycle(6).volume(&set(6, &[0, 2, 4])), 6);
        assert_eq!(cycle(6).volume(&VertexSet::empty(6)), 0);
    }

    #[test]
    fn cut_examples() {
        assert_eq!(star(5).cut_size(&set(6, &[0])), 5);
        assert_eq!(cycle(6).cut_size(&set(6, &[0, 1, 2])), 2);
        assert_eq!(cycle(6).cut_size(&VertexSet::full(6)), 0);
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(cycle(6).regularity(), Some(2));
        assert_eq!(star(5).regularity(), None);
        assert_eq!(complete(4).regularity(), Some(3));
    }

    #[test]
    fn restrict_examples() {
        let r = two_triangles().restrict_to_largest_component();
        assert_eq!((r.n(), r.m()), (3, 3));

        assert_eq!(cycle(6).restrict_to_largest_component(), cycle(6));

        let mut edges: Vec<_> = complete(4).edges().map(|(u, v)| (u + 1, v + 1)).collect();
        edges.sort();
        let g = Graph::new(5, &edges).unwrap();
        assert_eq!(g.restrict_to_largest_component(), complete(4));
    }

    #[test]
    fn induced_connectivity() {
        let g = cycle(6);
        assert!(g.induces_connected(&set(6, &[0, 1, 2])));
        assert!(!g.induces_connected(&set(6, &[0, 2])));
        assert!(!g.induces_connected(&VertexSet::empty(6)));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                let edges: Vec<_> =
                    pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e).collect();
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    fn arb_graph_and_set() -> impl Strategy<Value = (Graph, VertexSet)> {
        arb_graph().prop_flat_map(|g| {
            let n = g.n();
            proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
                let s = VertexSet::from_ids(n, bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i));
                (g.clone(), s)
            })
        })
    }

    proptest! {
        #[test]
        fn cut_is_symmetric((g, s) in arb_graph_and_set()) {
            prop_assert_eq!(g.cut_size(&s), g.cut_size(&s.complement()));
        }

        #[test]
        fn volumes_sum_to_twice_edges((g, s) in arb_graph_and_set()) {
            prop_assert_eq!(g.volume(&s) + g.volume(&s.complement()), 2 * g.m());
            if let Some(d) = g.regularity() {
                prop_assert_eq!(g.volume(&s), d * s.count());
            }
        }

        #[test]
        fn components_partition_remainder((g, removed) in arb_graph_and_set()) {
            let comps = g.components(&removed);
            let mut union = VertexSet::empty(g.n());
            for (i, c) in comps.iter().enumerate() {
                prop_assert!(c.is_disjoint(&union));
                union = union.union(c);
                prop_assert!(g.induces_connected(c));
                // no edge leaves a component except into the removed set
                for u in c.iter() {
                    for &v in g.neighbors(u) {
                        prop_assert!(c.contains(v) || removed.contains(v));
                    }
                }
                if i > 0 {
                    prop_assert!(comps[i - 1].count() >= c.count());
                }
            }
            prop_assert_eq!(union, removed.complement());
        }

        #[test]
        fn single_component_iff_connected(g in arb_graph()) {
            prop_assert_eq!(g.components(&VertexSet::empty(g.n())).len() == 1, g.is_connected());
        }
    }
}
