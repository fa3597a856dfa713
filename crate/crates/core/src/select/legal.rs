use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::{VertexId, VertexSet, Weight};

/// An independent set `I`, a legal ordering `σ` of `V ∖ I`, and the derived
/// blocks `B_σ(v)`, representatives `u_σ(v)` and their set `U_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegalOrderingContext {
    independent: VertexSet,
    sigma: Vec<VertexId>,
    blocks: Vec<VertexSet>,
    u_choice: Vec<Option<VertexId>>,
    u_set: VertexSet,
    u_weight: Weight,
    residual: Weight,
}

/// Representative choice shared by every ordering: heaviest, then lowest id.
fn representative(g: &WeightedGraph, block: &VertexSet) -> Option<VertexId> {
    let mut best: Option<VertexId> = None;
    for u in block {
        if best.is_none_or(|b| g.weight(u) > g.weight(b)) {
            best = Some(u);
        }
    }
    best
}

/// Every vertex after the first is adjacent to an earlier one or to an
/// `I`-neighbor of an earlier one.
pub fn is_legal_ordering(g: &WeightedGraph, i: &VertexSet, sigma: &[VertexId]) -> bool {
    let mut reach = g.empty_set();
    for (k, &v) in sigma.iter().enumerate() {
        if k > 0 && !reach.contains(v) {
            return false;
        }
        reach.union_with(g.neighbors(v));
        for u in &g.neighbors(v).intersection(i) {
            reach.union_with(g.neighbors(u));
        }
    }
    true
}

impl LegalOrderingContext {
    /// Validates `I` and `σ` and computes the blocks.
    pub fn from_sigma(g: &WeightedGraph, i: &VertexSet, sigma: Vec<VertexId>) -> Result<Self> {
        if !g.is_independent(i) {
            return Err(Error::Precondition("I is not independent".into()));
        }
        let rest = i.complement();
        let listed = VertexSet::from_ids(g.vertex_count(), sigma.iter().copied());
        if listed != rest || sigma.len() != rest.len() {
            return Err(Error::Precondition("sigma must list every vertex outside I exactly once".into()));
        }
        if !is_legal_ordering(g, i, &sigma) {
            return Err(Error::Precondition("sigma is not a legal ordering".into()));
        }
        let n = g.vertex_count();
        let mut blocks = vec![VertexSet::new(n); n];
        let mut u_choice = vec![None; n];
        let mut u_set = VertexSet::new(n);
        let mut seen = VertexSet::new(n);
        for &v in &sigma {
            let b = g.neighbors(v).intersection(i).difference(&seen);
            seen.union_with(&b);
            if let Some(u) = representative(g, &b) {
                u_choice[v] = Some(u);
                u_set.insert(u);
            }
            blocks[v] = b;
        }
        let u_weight = g.set_weight_of(&u_set);
        let residual = g.set_weight_of(&i.difference(&u_set));
        Ok(LegalOrderingContext { independent: i.clone(), sigma, blocks, u_choice, u_set, u_weight, residual })
    }

    pub fn independent(&self) -> &VertexSet {
        &self.independent
    }

    pub fn sigma(&self) -> &[VertexId] {
        &self.sigma
    }

    /// `B_σ(v)`; empty for vertices of `I`.
    pub fn block(&self, v: VertexId) -> &VertexSet {
        &self.blocks[v]
    }

    /// `u_σ(v)`, defined when the block is non-empty.
    pub fn u_choice(&self, v: VertexId) -> Option<VertexId> {
        self.u_choice[v]
    }

    pub fn u_set(&self) -> &VertexSet {
        &self.u_set
    }

    pub fn u_weight(&self) -> Weight {
        self.u_weight
    }

    /// `w(I ∖ U_σ)`
    pub fn residual_weight(&self) -> Weight {
        self.residual
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.sigma.iter().position(|&x| x == v)
    }

    /// Non-empty blocks are disjoint and cover `I`.
    pub fn blocks_partition_independent(&self) -> bool {
        let mut union = VertexSet::new(self.independent.universe());
        for &v in &self.sigma {
            if union.intersects(&self.blocks[v]) {
                return false;
            }
            union.union_with(&self.blocks[v]);
        }
        union == self.independent
    }

    /// `V*_σ`: vertices outside `I` with at least two neighbors in `U_σ`.
    pub fn v_star_sigma(&self, g: &WeightedGraph) -> Vec<VertexId> {
        self.sigma.iter().copied().filter(|&v| g.neighbors(v).intersection(&self.u_set).len() >= 2).collect()
    }

    /// `q_σ^v`: the first vertex in `σ` whose block meets `N(v)`.
    pub fn q_of(&self, g: &WeightedGraph, v: VertexId) -> Option<VertexId> {
        self.sigma.iter().copied().find(|&x| g.neighbors(v).intersects(&self.blocks[x]))
    }

    /// `σ^v`: `v` moved to the first position after `q_σ^v`. `None` when `q`
    /// does not exist or does not precede `v`.
    pub fn moved(&self, g: &WeightedGraph, v: VertexId) -> Option<LegalOrderingContext> {
        let q = self.q_of(g, v)?;
        let (pq, pv) = (self.position(q)?, self.position(v)?);
        if pq >= pv {
            return None;
        }
        let mut sigma = self.sigma.clone();
        sigma.remove(pv);
        sigma.insert(pq + 1, v);
        let out = LegalOrderingContext::from_sigma(g, &self.independent, sigma).expect("moves preserve legality");
        Some(out)
    }

    /// `Y_σ^v = U_σ ∖ U_{σ^v}`
    pub fn y_set(&self, g: &WeightedGraph, v: VertexId) -> VertexSet {
        match self.moved(g, v) {
            Some(m) => self.u_set.difference(&m.u_set),
            None => VertexSet::new(self.u_set.universe()),
        }
    }

    /// `U*_σ = U_σ ∖ ⋃ Y_σ^v` over `v ∈ V*_σ`.
    pub fn u_star(&self, g: &WeightedGraph) -> VertexSet {
        let mut out = self.u_set.clone();
        for v in self.v_star_sigma(g) {
            out.difference_with(&self.y_set(g, v));
        }
        out
    }

    /// First `v ∈ V*_σ` (in `σ` order) whose move strictly lowers `w(U_σ)`.
    pub fn improving_move(&self, g: &WeightedGraph) -> Option<(VertexId, LegalOrderingContext)> {
        self.v_star_sigma(g)
            .into_iter()
            .filter_map(|v| self.moved(g, v).map(|m| (v, m)))
            .find(|(_, m)| m.u_weight < self.u_weight)
    }

    pub fn is_locally_optimal(&self, g: &WeightedGraph) -> bool {
        self.improving_move(g).is_none()
    }
}

/// Breadth-first growth from the lowest vertex outside `I`; a vertex is
/// discovered through a direct edge or through an `I`-neighbor.
pub fn build_legal_ordering(g: &WeightedGraph, i: &VertexSet) -> Result<LegalOrderingContext> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("legal orderings need at least two vertices".into()));
    }
    let rest = i.complement();
    let start = rest.first().ok_or_else(|| Error::Precondition("I covers every vertex".into()))?;
    let mut found = VertexSet::singleton(g.vertex_count(), start);
    let mut queue = std::collections::VecDeque::from([start]);
    let mut sigma = Vec::with_capacity(rest.len());
    while let Some(v) = queue.pop_front() {
        sigma.push(v);
        let mut reach = g.neighbors(v).clone();
        for u in &g.neighbors(v).intersection(i) {
            reach.union_with(g.neighbors(u));
        }
        reach.intersect_with(&rest);
        for x in &reach.difference(&found) {
            found.insert(x);
            queue.push_back(x);
        }
    }
    if sigma.len() != rest.len() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    LegalOrderingContext::from_sigma(g, i, sigma)
}

/// Applies improving moves until none is left; each one strictly lowers `w(U_σ)`.
pub fn improve_ordering(g: &WeightedGraph, ctx: LegalOrderingContext) -> LegalOrderingContext {
    let mut ctx = ctx;
    while let Some((_, next)) = ctx.improving_move(g) {
        ctx = next;
    }
    ctx
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: &[u64]) -> WeightedGraph {
        let mut w = vec![0];
        w.extend_from_slice(leaves);
        let edges: Vec<_> = (1..=leaves.len()).map(|i| (0, i)).collect();
        WeightedGraph::from_int_weights(&w, &edges).unwrap()
    }

    #[test]
    fn star_with_leaves_as_i() {
        let g = star(&[1, 3, 3, 2]);
        let i = VertexSet::from_ids(5, [1, 2, 3, 4]);
        let ctx = build_legal_ordering(&g, &i).unwrap();
        assert_eq!(ctx.sigma(), &[0]);
        assert_eq!(ctx.block(0), &i);
        assert_eq!(ctx.u_set().to_vec(), vec![2]);
        assert_eq!(ctx.residual_weight(), Weight::int(6));
        assert_eq!(improve_ordering(&g, ctx.clone()), ctx);
    }

    #[test]
    fn empty_independent_set() {
        let g = WeightedGraph::from_int_weights(&[1, 2, 3], &[(0, 1), (1, 2)]).unwrap();
        let ctx = build_legal_ordering(&g, &g.empty_set()).unwrap();
        assert_eq!(ctx.sigma(), &[0, 1, 2]);
        assert!(ctx.u_set().is_empty());
        assert!(is_legal_ordering(&g, &g.empty_set(), &[1, 0, 2]));
        assert!(!is_legal_ordering(&g, &g.empty_set(), &[0, 2, 1]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = WeightedGraph::from_int_weights(&[1, 2, 3], &[(0, 1), (1, 2)]).unwrap();
        assert!(LegalOrderingContext::from_sigma(&g, &VertexSet::from_ids(3, [0, 1]), vec![2]).is_err());
        assert!(LegalOrderingContext::from_sigma(&g, &VertexSet::from_ids(3, [1]), vec![0]).is_err());
        assert!(LegalOrderingContext::from_sigma(&g, &g.empty_set(), vec![0, 2, 1]).is_err());
    }

    // ids: u_1..u_9 are 0..8, the seven I vertices over them are 9..15
    fn figure() -> (WeightedGraph, VertexSet) {
        let (b1, b2, b3, b5, b6, b7, b8) = (9, 10, 11, 12, 13, 14, 15);
        let edges = [
            (0, b1), (0, b2), (0, 1), (1, b2),
            (2, b1), (2, b3), (2, 4),
            (3, b2), (3, b5), (3, 4), (4, 5),
            (5, b5), (5, b6), (5, b7), (5, 6), (5, 7),
            (6, b6), (6, b7), (7, b8), (7, 8), (8, b8),
        ];
        let g = WeightedGraph::from_int_weights(&[1; 16], &edges).unwrap();
        (g, VertexSet::from_ids(16, 9..16))
    }

    #[test]
    fn figure_blocks() {
        let (g, i) = figure();
        let ctx = LegalOrderingContext::from_sigma(&g, &i, (0..9).collect()).unwrap();
        let blocks: Vec<Vec<VertexId>> = (0..9).map(|v| ctx.block(v).to_vec()).collect();
        assert_eq!(
            blocks,
            vec![vec![9, 10], vec![], vec![11], vec![12], vec![], vec![13, 14], vec![], vec![15], vec![]]
        );
        assert!(ctx.blocks_partition_independent());
        assert_eq!(ctx.u_set().to_vec(), vec![9, 11, 12, 13, 15]);
    }

    #[test]
    fn moving_a_vertex_merges_blocks() {
        // x=0 sees a=3; y=1 sees b=4; v=2 sees a, b and its own c=5
        let edges = [(0, 1), (0, 3), (1, 4), (2, 3), (2, 4), (2, 5)];
        let g = WeightedGraph::from_int_weights(&[0, 0, 0, 1, 5, 1], &edges).unwrap();
        let i = VertexSet::from_ids(6, [3, 4, 5]);
        let ctx = LegalOrderingContext::from_sigma(&g, &i, vec![0, 1, 2]).unwrap();
        assert_eq!(ctx.u_weight(), Weight::int(7));
        assert_eq!(ctx.v_star_sigma(&g), vec![2]);
        let better = improve_ordering(&g, ctx.clone());
        assert_eq!(better.sigma(), &[0, 2, 1]);
        assert_eq!(better.u_set().to_vec(), vec![3, 4]);
        assert_eq!(ctx.y_set(&g, 2).to_vec(), vec![5]);
        assert!(better.is_locally_optimal(&g));
    }
}
