use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::{GameState, OptimalStrategy, Player, Strategy};
use crate::graph::{ShallowQuotient, WeightedGraph};
use crate::strategist::certified::{CertifiedStrategy, Provenance};
use crate::{VertexId, VertexSet, Weight};

/// Oracle continuation from `state`, certified at `½ w★(G ∖ T)`.
pub fn strat_comp(state: &GameState) -> Result<CertifiedStrategy> {
    let g = state.graph_arc();
    if g.vertex_count().is_multiple_of(2) {
        return Err(Error::Precondition("the vertex count must be odd".into()));
    }
    let taken = state.taken();
    if state.to_move() != Player::Alice {
        return Err(Error::Precondition("Alice must be to move".into()));
    }
    if !taken.is_empty() && !g.is_connected_set(taken) {
        return Err(Error::Precondition("taken set is not connected".into()));
    }
    Ok(CertifiedStrategy {
        strategy: Box::new(OptimalStrategy::for_graph(g)?),
        bound: g.w_star_without(taken).half(),
        constant: Weight::frac(1, 2),
        provenance: Provenance::Comp { taken: taken.clone() },
    })
}

/// Consume `S` while answering every Bob move next to a weighted vertex
/// outside `S` with that vertex; then continue with the oracle.
#[derive(Clone)]
struct CompR {
    graph: Arc<WeightedGraph>,
    s: VertexSet,
    /// Positive-weight vertices outside `S`.
    guarded: VertexSet,
    oracle: OptimalStrategy,
}

impl Strategy for CompR {
    fn name(&self) -> &str {
        "strat-comp-R"
    }

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId> {
        if state.is_fresh() {
            return Ok(self.s.first().expect("S is non-empty"));
        }
        let taken = state.taken();
        if self.s.is_subset(taken) {
            return self.oracle.choose_move(state);
        }
        if let Some(x) = state.last_move() {
            let reply = self.graph.neighbors(x).intersection(&self.guarded).difference(taken).first();
            if let Some(v) = reply {
                return Ok(v);
            }
        }
        match self.s.intersection(&state.legal_moves()).first() {
            Some(v) => Ok(v),
            None => self.oracle.choose_move(state),
        }
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// For a connected block set `S_R` of `G^R`: bound `½ w★(G^R ∖ S_R)`.
pub fn strat_comp_r(g: &Arc<WeightedGraph>, q: &ShallowQuotient, s_r: &VertexSet) -> Result<CertifiedStrategy> {
    if g.vertex_count().is_multiple_of(2) {
        return Err(Error::Precondition("the vertex count must be odd".into()));
    }
    if s_r.is_empty() || !q.graph.is_connected_set(s_r) {
        return Err(Error::Precondition("S_R must be non-empty and connected in the contracted graph".into()));
    }
    let s = q.expand(s_r);
    let guarded = g.positive_vertices().difference(&s);
    Ok(CertifiedStrategy {
        strategy: Box::new(CompR { graph: g.clone(), s: s.clone(), guarded, oracle: OptimalStrategy::for_graph(g)? }),
        bound: q.graph.w_star_without(s_r).half(),
        constant: Weight::frac(1, 2),
        provenance: Provenance::CompR { s },
    })
}
