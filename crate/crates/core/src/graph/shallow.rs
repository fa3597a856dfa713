use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::{VertexId, VertexSet, Weight};

/// The 1-shallow minor obtained by contracting `N[v]` for every positive-weight
/// vertex `v` of a sparsely weighted graph. Every other vertex stays a singleton.
#[derive(Clone, Debug)]
pub struct ShallowQuotient {
    /// The contracted graph; block `i` is vertex `i`.
    pub graph: WeightedGraph,
    /// Host vertices of each block.
    pub blocks: Vec<VertexSet>,
    /// Positive-weight vertex whose closed neighborhood forms the block, if any.
    pub centers: Vec<Option<VertexId>>,
    /// Block index of every host vertex.
    pub block_of: Vec<usize>,
}

impl ShallowQuotient {
    /// Union of the host vertices of the given blocks.
    pub fn expand(&self, blocks: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.block_of.len());
        for b in blocks {
            out.union_with(&self.blocks[b]);
        }
        out
    }

    pub fn block_ids_of(&self, host: &VertexSet) -> VertexSet {
        VertexSet::from_ids(self.blocks.len(), host.iter().map(|v| self.block_of[v]))
    }
}

/// Builds `G^R`. Blocks are numbered by the smallest host vertex they contain.
pub fn shallow_quotient(g: &WeightedGraph) -> Result<ShallowQuotient> {
    let positive = g.positive_vertices();
    if !g.is_sparse(&positive) {
        return Err(Error::Precondition("positive-weight vertices are not pairwise at distance >= 3".into()));
    }
    let n = g.vertex_count();
    let mut center_of_vertex = vec![None; n];
    for c in &positive {
        for v in &g.closed_neighborhood(c) {
            center_of_vertex[v] = Some(c);
        }
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    let mut centers = Vec::new();
    for v in 0..n {
        if block_of[v] != usize::MAX {
            continue;
        }
        let (members, center) = match center_of_vertex[v] {
            Some(c) => (g.closed_neighborhood(c), Some(c)),
            None => (VertexSet::singleton(n, v), None),
        };
        for u in &members {
            block_of[u] = blocks.len();
        }
        blocks.push(members);
        centers.push(center);
    }
    let graph = g.quotient(&blocks, |i, _| centers[i].map_or(Weight::ZERO, |c| g.weight(c)))?;
    Ok(ShallowQuotient { graph, blocks, centers, block_of })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_weights_keep_the_graph() {
        let g = WeightedGraph::from_int_weights(&[0, 0, 0], &[(0, 1), (1, 2)]).unwrap();
        let q = shallow_quotient(&g).unwrap();
        assert_eq!(q.graph, g);
        assert!(q.centers.iter().all(Option::is_none));
    }

    #[test]
    fn weighted_star_center_collapses_everything() {
        let g = WeightedGraph::from_int_weights(&[1, 0, 0, 0], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let q = shallow_quotient(&g).unwrap();
        assert_eq!(q.graph.vertex_count(), 1);
        assert_eq!(q.graph.total_weight(), Weight::ONE);
        assert_eq!(q.centers, vec![Some(0)]);
    }

    #[test]
    fn rejects_non_sparse_positive_set() {
        let g = WeightedGraph::from_int_weights(&[1, 0, 1], &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(shallow_quotient(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn preserves_total_weight_and_maps_blocks() {
        // path 0-1-2-3-4-5-6 with weight on 1 and 5
        let edges: Vec<_> = (0..6).map(|i| (i, i + 1)).collect();
        let g = WeightedGraph::from_int_weights(&[0, 2, 0, 0, 0, 3, 0], &edges).unwrap();
        let q = shallow_quotient(&g).unwrap();
        assert_eq!(q.graph.total_weight(), g.total_weight());
        assert_eq!(q.graph.vertex_count(), 3);
        assert_eq!(q.block_of, vec![0, 0, 0, 1, 2, 2, 2]);
        assert_eq!(q.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(q.expand(&VertexSet::from_ids(3, [1, 2])).to_vec(), vec![3, 4, 5, 6]);
    }
}
