use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::{VertexId, VertexSet};

/// A cyclic sequence of distinct vertices. Lengths 1 and 2 are accepted as
/// degenerate cycles (a single vertex; two vertices joined by an edge).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCertificate {
    order: Vec<VertexId>,
}

impl CycleCertificate {
    pub fn new(order: Vec<VertexId>) -> Result<Self> {
        if order.is_empty() {
            return Err(Error::Precondition("a cycle needs at least one vertex".into()));
        }
        let mut sorted = order.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != order.len() {
            return Err(Error::Precondition("cycle vertices must be distinct".into()));
        }
        Ok(CycleCertificate { order })
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_ids(universe, self.order.iter().copied())
    }

    /// Consecutive pairs, including the closing pair; none for length 1 and a
    /// single pair for length 2.
    pub fn cyclic_pairs(&self) -> Vec<(VertexId, VertexId)> {
        match self.order.len() {
            1 => vec![],
            2 => vec![(self.order[0], self.order[1])],
            k => (0..k).map(|i| (self.order[i], self.order[(i + 1) % k])).collect(),
        }
    }

    /// Every consecutive pair is an edge of `g` (the cycle is a subgraph of `g`).
    pub fn is_cycle_in(&self, g: &WeightedGraph) -> bool {
        self.order.iter().all(|&v| v < g.vertex_count())
            && self.cyclic_pairs().iter().all(|&(u, v)| g.has_edge(u, v))
    }

    pub fn is_hamiltonian_in(&self, g: &WeightedGraph) -> bool {
        self.order.len() == g.vertex_count() && self.is_cycle_in(g)
    }

    /// The cycle itself as a weighted graph on the host's vertex ids, edges
    /// restricted to consecutive pairs. Vertices off the cycle stay isolated.
    pub fn as_graph(&self, host: &WeightedGraph) -> WeightedGraph {
        let mut h = WeightedGraph::new(host.weights().to_vec());
        for (u, v) in self.cyclic_pairs() {
            if !h.has_edge(u, v) {
                h.add_edge(u, v).expect("cycle edge");
            }
        }
        h
    }

    /// Checks that the reduction of `g` to this cycle's vertex set is exactly this cycle.
    pub fn certifies_reduction_of(&self, g: &WeightedGraph) -> bool {
        let s = self.vertex_set(g.vertex_count());
        match cycle_reduction_check(g, &s) {
            None => false,
            Some(found) => {
                let r = g.reduction(&s);
                let local = |h: VertexId| r.local_of(h).expect("member");
                let pairs = self.cyclic_pairs();
                pairs.len() == r.graph.edge_count() && pairs.iter().all(|&(u, v)| r.graph.has_edge(local(u), local(v)))
                    && found.len() == self.len()
            }
        }
    }
}

/// Returns a cyclic order of `s` when the reduction of `g` to `s` is a cycle
/// (with the degenerate conventions for one and two vertices).
pub fn cycle_reduction_check(g: &WeightedGraph, s: &VertexSet) -> Option<CycleCertificate> {
    let k = s.len();
    if k == 0 {
        return None;
    }
    let r = g.reduction(s);
    let rg = &r.graph;
    match k {
        1 => return Some(CycleCertificate { order: r.ids.clone() }),
        2 => {
            return rg.has_edge(0, 1).then(|| CycleCertificate { order: r.ids.clone() });
        }
        _ => {}
    }
    if rg.vertices().any(|v| rg.degree(v) != 2) || !rg.is_connected() {
        return None;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = rg.neighbors(cur).iter().find(|&x| x != prev).expect("degree two");
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), k);
    Some(CycleCertificate {
        order: order.into_iter().map(|v| r.ids[v]).collect(),
    })
}
