use crate::graph::WeightedGraph;
use crate::{VertexId, VertexSet, Weight};

/// A linear ordering of the vertices together with its measured arrangeability.
#[derive(Clone, Debug)]
pub struct OrderedGraph<'g> {
    graph: &'g WeightedGraph,
    pi: Vec<VertexId>,
    position: Vec<usize>,
    measured_p: usize,
}

impl<'g> OrderedGraph<'g> {
    /// Panics unless `pi` is a permutation of the vertex ids.
    pub fn new(graph: &'g WeightedGraph, pi: Vec<VertexId>) -> Self {
        let n = graph.vertex_count();
        assert_eq!(pi.len(), n, "ordering must list every vertex");
        let mut position = vec![usize::MAX; n];
        for (i, &v) in pi.iter().enumerate() {
            assert!(position[v] == usize::MAX, "vertex {v} listed twice");
            position[v] = i;
        }
        let mut og = OrderedGraph { graph, pi, position, measured_p: 0 };
        og.measured_p = graph.vertices().map(|v| og.back_of_forward(v).len()).max().unwrap_or(0);
        og
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn pi(&self) -> &[VertexId] {
        &self.pi
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    pub fn measured_p(&self) -> usize {
        self.measured_p
    }

    pub fn before(&self, v: VertexId) -> VertexSet {
        VertexSet::from_ids(self.graph.vertex_count(), self.pi[..self.position[v]].iter().copied())
    }

    pub fn after(&self, v: VertexId) -> VertexSet {
        VertexSet::from_ids(self.graph.vertex_count(), self.pi[self.position[v] + 1..].iter().copied())
    }

    /// `N^-(v)`
    pub fn back_neighbors(&self, v: VertexId) -> VertexSet {
        self.graph.neighbors(v).intersection(&self.before(v))
    }

    /// `N^+(v)`
    pub fn forward_neighbors(&self, v: VertexId) -> VertexSet {
        self.graph.neighbors(v).intersection(&self.after(v))
    }

    /// `N^-(S)`
    pub fn back_neighbors_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.graph.empty_set();
        for u in s {
            out.union_with(&self.back_neighbors(u));
        }
        out
    }

    /// `N^-(N^+(v)) ∩ π^-(v)`, the set measured by arrangeability.
    pub fn back_of_forward(&self, v: VertexId) -> VertexSet {
        self.back_neighbors_of_set(&self.forward_neighbors(v)).intersection(&self.before(v))
    }

    /// `N^-(N[v]) ∩ π^-(v)`, the vertices a distinguishing coloring must avoid.
    pub fn conflicts(&self, v: VertexId) -> VertexSet {
        self.back_neighbors_of_set(&self.graph.closed_neighborhood(v)).intersection(&self.before(v))
    }
}

/// Builds an ordering back to front: the vertex placed last among the remaining
/// ones is the one whose already placed neighbors see the fewest other remaining
/// vertices. That count is exactly the vertex's term in the arrangeability max.
/// Ties go to the fewest remaining neighbors, then the lowest degree, then the lowest id.
pub fn arrangeable_ordering(g: &WeightedGraph) -> OrderedGraph<'_> {
    let n = g.vertex_count();
    let mut remaining = g.all_vertices();
    let mut placed = g.empty_set();
    let mut reversed = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let mut best: Option<((usize, usize, usize), VertexId)> = None;
        for x in &remaining {
            let mut seen = g.empty_set();
            for y in &g.neighbors(x).intersection(&placed) {
                seen.union_with(g.neighbors(y));
            }
            seen.intersect_with(&remaining);
            seen.remove(x);
            let score = (seen.len(), g.neighbors(x).intersection(&remaining).len(), g.degree(x));
            if best.is_none_or(|(b, _)| score < b) {
                best = Some((score, x));
            }
        }
        let (_, x) = best.expect("remaining is non-empty");
        remaining.remove(x);
        placed.insert(x);
        reversed.push(x);
    }
    reversed.reverse();
    OrderedGraph::new(g, reversed)
}

/// Both bounds of the arrangeability observation with `p = measuredP`:
/// `|N^-(v)| <= p + 1` and `|N^-(N[v]) ∩ π^-(v)| <= p² + 4p + 2`.
pub fn observation_check(og: &OrderedGraph) -> bool {
    let p = og.measured_p();
    og.graph().vertices().all(|v| og.back_neighbors(v).len() <= p + 1 && og.conflicts(v).len() <= p * p + 4 * p + 2)
}

/// A greedy coloring along `π` separating every `v` from its conflict set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    pub fn class(&self, c: usize) -> VertexSet {
        VertexSet::from_ids(self.color.len(), (0..self.color.len()).filter(|&v| self.color[v] == c))
    }

    /// The class of maximum weight; lowest color index on ties.
    pub fn heaviest_class(&self, g: &WeightedGraph) -> VertexSet {
        let mut best: Option<(Weight, VertexSet)> = None;
        for c in 0..self.count {
            let class = self.class(c);
            let w = g.set_weight_of(&class);
            if best.as_ref().is_none_or(|(b, _)| w > *b) {
                best = Some((w, class));
            }
        }
        best.map(|(_, s)| s).unwrap_or_else(|| g.empty_set())
    }
}

pub fn distinguishing_coloring(og: &OrderedGraph) -> Coloring {
    let n = og.graph().vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut count = 0;
    for &v in og.pi() {
        let used: Vec<usize> = og.conflicts(v).iter().map(|u| color[u]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        color[v] = c;
        count = count.max(c + 1);
    }
    Coloring { color, count }
}

/// `I` satisfies: whenever `|N(v) ∩ I| >= 2`, all of `N(v) ∩ I` comes after `v`.
pub fn late_independent_property(og: &OrderedGraph, i: &VertexSet) -> bool {
    let g = og.graph();
    g.is_independent(i)
        && g.vertices().all(|v| {
            let seen = g.neighbors(v).intersection(i);
            seen.len() < 2 || seen.is_subset(&og.after(v))
        })
}
