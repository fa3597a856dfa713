//! Weighted simple graphs and the set operations everything else is built on.

mod cycle;
mod io;
mod shallow;
mod subdivision;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::{VertexId, VertexSet, Weight};

pub use cycle::{cycle_reduction_check, CycleCertificate};
pub use shallow::{shallow_quotient, ShallowQuotient};
pub use subdivision::{find_subdivision, SubdivisionWitness, DEFAULT_SUBDIVISION_BUDGET};

/// An undirected simple graph with exact non-negative vertex weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedGraph {
    adj: Vec<VertexSet>,
    weights: Vec<Weight>,
    edge_count: usize,
}

/// A graph derived from a host graph, with `ids[i]` the host id of local vertex `i`.
#[derive(Clone, Debug)]
pub struct Projection {
    pub graph: WeightedGraph,
    pub ids: Vec<VertexId>,
}

impl Projection {
    pub fn to_host(&self, local: &VertexSet, host_universe: usize) -> VertexSet {
        VertexSet::from_ids(host_universe, local.iter().map(|v| self.ids[v]))
    }

    /// Local ids of the host vertices in `host` that belong to the projection.
    pub fn from_host(&self, host: &VertexSet) -> VertexSet {
        VertexSet::from_ids(
            self.ids.len(),
            self.ids.iter().enumerate().filter(|(_, &h)| host.contains(h)).map(|(i, _)| i),
        )
    }

    pub fn local_of(&self, host: VertexId) -> Option<VertexId> {
        self.ids.iter().position(|&h| h == host)
    }
}

impl WeightedGraph {
    /// Edgeless graph with the given weights.
    pub fn new(weights: Vec<Weight>) -> Self {
        let n = weights.len();
        WeightedGraph {
            adj: vec![VertexSet::new(n); n],
            weights,
            edge_count: 0,
        }
    }

    pub fn from_edges(weights: Vec<Weight>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::new(weights);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Convenience constructor with integer weights.
    pub fn from_int_weights(weights: &[u64], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_edges(weights.iter().map(|&w| Weight::int(w)).collect(), edges)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(u, v, "loops are not allowed"));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidEdge(u, v, "duplicate edge"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn weight(&self, v: VertexId) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn set_weight(&mut self, v: VertexId, w: Weight) {
        self.weights[v] = w;
    }

    pub fn total_weight(&self) -> Weight {
        self.weights.iter().sum()
    }

    pub fn set_weight_of(&self, s: &VertexSet) -> Weight {
        s.iter().map(|v| self.weights[v]).sum()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.vertex_count())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Open neighborhood N(S): vertices outside `s` adjacent to `s`.
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn closed_set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.set_neighborhood(s).union(s)
    }

    pub fn positive_vertices(&self) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), self.vertices().filter(|&v| self.weights[v].is_positive()))
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub fn reachable_within(&self, start: &VertexSet, within: &VertexSet) -> VertexSet {
        let mut seen = start.intersection(within);
        let mut queue: VecDeque<VertexId> = seen.iter().collect();
        while let Some(u) = queue.pop_front() {
            for v in &self.adj[u] {
                if within.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Components of `G[s]`, each listed by ascending smallest member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reachable_within(&VertexSet::singleton(self.vertex_count(), v), s);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reachable_within(&VertexSet::singleton(self.vertex_count(), v), s).len() == s.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.all_vertices())
    }

    /// Heaviest component of `G[s]` (ties to the earliest listed) and its weight.
    pub fn heaviest_component(&self, s: &VertexSet) -> Option<(VertexSet, Weight)> {
        let mut best: Option<(VertexSet, Weight)> = None;
        for c in self.components(s) {
            let w = self.set_weight_of(&c);
            if best.as_ref().is_none_or(|(_, bw)| w > *bw) {
                best = Some((c, w));
            }
        }
        best
    }

    /// `w★(G[s])`: weight of `s` minus its heaviest component.
    pub fn w_star(&self, s: &VertexSet) -> Weight {
        match self.heaviest_component(s) {
            None => Weight::ZERO,
            Some((_, heaviest)) => self
                .set_weight_of(s)
                .checked_sub(heaviest)
                .expect("component weight bounded by total"),
        }
    }

    /// `w★(G ∖ s)`.
    pub fn w_star_without(&self, s: &VertexSet) -> Weight {
        self.w_star(&s.complement())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Pairwise distance at least 3, i.e. closed neighborhoods pairwise disjoint.
    pub fn is_sparse(&self, s: &VertexSet) -> bool {
        let mut covered = self.empty_set();
        for v in s {
            let closed = self.closed_neighborhood(v);
            if !closed.is_disjoint(&covered) {
                return false;
            }
            covered.union_with(&closed);
        }
        true
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest path from `from` to `to` whose interior stays inside `interior`.
    pub fn shortest_path_via(&self, from: VertexId, to: VertexId, interior: &VertexSet) -> Option<Vec<VertexId>> {
        if from == to {
            return Some(vec![from]);
        }
        let n = self.vertex_count();
        let mut prev = vec![usize::MAX; n];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for v in &self.adj[u] {
                if prev[v] != usize::MAX {
                    continue;
                }
                if v == to {
                    prev[v] = u;
                    let mut path = vec![to];
                    let mut x = u;
                    while x != from {
                        path.push(x);
                        x = prev[x];
                    }
                    path.push(from);
                    path.reverse();
                    return Some(path);
                }
                if interior.contains(v) {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Projection {
        let ids = s.to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let mut g = WeightedGraph::new(ids.iter().map(|&v| self.weights[v]).collect());
        for (i, &v) in ids.iter().enumerate() {
            for u in &self.adj[v] {
                let j = local[u];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j).expect("induced edge");
                }
            }
        }
        Projection { graph: g, ids }
    }

    /// The reduction of `G` to `s`: vertex set `s`, with `uv` an edge whenever some
    /// path of `G` joins them with all interior vertices outside `s`.
    pub fn reduction(&self, s: &VertexSet) -> Projection {
        let ids = s.to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let outside = s.complement();
        let mut g = WeightedGraph::new(ids.iter().map(|&v| self.weights[v]).collect());
        for (i, &u) in ids.iter().enumerate() {
            let start = self.adj[u].intersection(&outside);
            let region = self.reachable_within(&start, &outside);
            let mut touched = self.adj[u].intersection(s);
            for x in &region {
                touched.union_with(&self.adj[x].intersection(s));
            }
            touched.remove(u);
            for v in &touched {
                let j = local[v];
                if j > i {
                    g.add_edge(i, j).expect("reduction edge");
                }
            }
        }
        Projection { graph: g, ids }
    }

    /// Contracts a partition into non-empty, connected, disjoint blocks covering
    /// every vertex. Block `i` becomes vertex `i`, weighted by `weight_of`.
    pub fn quotient<F>(&self, blocks: &[VertexSet], weight_of: F) -> Result<WeightedGraph>
    where
        F: Fn(usize, &VertexSet) -> Weight,
    {
        let n = self.vertex_count();
        let mut owner = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.universe() != n {
                return Err(Error::InvalidPartition(format!("block {i} has the wrong universe")));
            }
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            if !self.is_connected_set(b) {
                return Err(Error::InvalidPartition(format!("block {i} is not connected")));
            }
            for v in b {
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} lies in blocks {} and {i}", owner[v])));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        let mut q = WeightedGraph::new(blocks.iter().enumerate().map(|(i, b)| weight_of(i, b)).collect());
        for (u, v) in self.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != b && !q.has_edge(a, b) {
                q.add_edge(a, b)?;
            }
        }
        Ok(q)
    }

    /// Same graph with weights outside `keep` reset to zero.
    pub fn with_weights_restricted_to(&self, keep: &VertexSet) -> WeightedGraph {
        let mut g = self.clone();
        for v in self.vertices() {
            if !keep.contains(v) {
                g.weights[v] = Weight::ZERO;
            }
        }
        g
    }

    pub fn scaled(&self, factor: Weight) -> WeightedGraph {
        let mut g = self.clone();
        for w in &mut g.weights {
            *w = *w * factor;
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Figure-style instance: 8 vertices, 5 of them selected.
    /// Ids: a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7; selected {a,b,c,d,e}.
    pub(crate) fn figure_reduction_graph() -> (WeightedGraph, VertexSet) {
        let edges = [(0, 1), (0, 5), (1, 2), (1, 7), (2, 5), (3, 5), (3, 6), (4, 6), (4, 7), (6, 7)];
        let g = WeightedGraph::from_int_weights(&[1; 8], &edges).unwrap();
        (g, VertexSet::from_ids(8, [0, 1, 2, 3, 4]))
    }

    fn path3() -> WeightedGraph {
        WeightedGraph::from_int_weights(&[1, 0, 1], &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_out_of_range() {
        let mut g = WeightedGraph::from_int_weights(&[0, 0], &[]).unwrap();
        assert!(g.add_edge(0, 0).is_err());
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(0, 2).is_err());
    }

    #[test]
    fn components_of_path_endpoints() {
        let g = path3();
        let comps = g.components(&VertexSet::from_ids(3, [0, 2]));
        assert_eq!(comps, vec![VertexSet::singleton(3, 0), VertexSet::singleton(3, 2)]);
        assert_eq!(g.components(&g.all_vertices()), vec![g.all_vertices()]);
        assert!(g.components(&g.empty_set()).is_empty());
    }

    #[test]
    fn w_star_examples() {
        // three components weighing 5, 3, 2
        let g = WeightedGraph::from_int_weights(&[5, 3, 2], &[]).unwrap();
        assert_eq!(g.w_star(&g.all_vertices()), Weight::int(5));
        let p = WeightedGraph::from_int_weights(&[3, 4], &[(0, 1)]).unwrap();
        assert_eq!(p.w_star(&p.all_vertices()), Weight::ZERO);
        assert_eq!(p.w_star(&p.empty_set()), Weight::ZERO);
    }

    #[test]
    fn reduction_of_figure_instance() {
        let (g, s) = figure_reduction_graph();
        let r = g.reduction(&s);
        assert_eq!(r.ids, vec![0, 1, 2, 3, 4]);
        let mut edges: Vec<_> = r.graph.edges().collect();
        edges.sort();
        // a-b a-c a-d b-c b-d b-e c-d d-e
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn reduction_identity_and_star() {
        let (g, _) = figure_reduction_graph();
        let r = g.reduction(&g.all_vertices());
        assert_eq!(r.graph, g);
        let star = WeightedGraph::from_int_weights(&[0, 1, 1, 1, 1], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = star.reduction(&VertexSet::from_ids(5, [1, 2, 3, 4]));
        assert_eq!(r.graph.edge_count(), 6);
    }

    #[test]
    fn quotient_examples() {
        let g = path3();
        let singletons: Vec<_> = (0..3).map(|v| VertexSet::singleton(3, v)).collect();
        let q = g.quotient(&singletons, |i, _| g.weight(i)).unwrap();
        assert_eq!(q, g);
        let q = g
            .quotient(&[VertexSet::from_ids(3, [0, 1]), VertexSet::singleton(3, 2)], |_, b| g.set_weight_of(b))
            .unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn quotient_rejects_bad_partitions() {
        let g = path3();
        let disconnected = [VertexSet::from_ids(3, [0, 2]), VertexSet::singleton(3, 1)];
        assert!(matches!(g.quotient(&disconnected, |_, _| Weight::ZERO), Err(Error::InvalidPartition(_))));
        let overlap = [VertexSet::from_ids(3, [0, 1]), VertexSet::from_ids(3, [1, 2])];
        assert!(g.quotient(&overlap, |_, _| Weight::ZERO).is_err());
        let missing = [VertexSet::from_ids(3, [0, 1])];
        assert!(g.quotient(&missing, |_, _| Weight::ZERO).is_err());
    }

    #[test]
    fn sparse_and_independent() {
        let g = path3();
        let adjacent = VertexSet::from_ids(3, [0, 1]);
        assert!(!g.is_sparse(&adjacent) && !g.is_independent(&adjacent));
        let star = WeightedGraph::from_int_weights(&[0, 1, 1], &[(0, 1), (0, 2)]).unwrap();
        let leaves = VertexSet::from_ids(3, [1, 2]);
        assert!(star.is_independent(&leaves));
        assert!(!star.is_sparse(&leaves));
    }

    #[test]
    fn restricted_weights() {
        let g = path3();
        let h = g.with_weights_restricted_to(&VertexSet::singleton(3, 2));
        assert_eq!(h.weights(), &[Weight::ZERO, Weight::ZERO, Weight::ONE]);
    }
}
