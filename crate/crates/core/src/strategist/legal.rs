use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::{GameRecord, GameState, Player, Strategy};
use crate::graph::WeightedGraph;
use crate::select::LegalOrderingContext;
use crate::strategist::certified::{CertifiedStrategy, Provenance};
use crate::{VertexId, VertexSet, Weight};

/// Start with `σ[0]`; then the heaviest available vertex of `I`, or else the
/// first untaken vertex of `σ`.
#[derive(Clone)]
struct LegalGreedy {
    graph: Arc<WeightedGraph>,
    independent: VertexSet,
    sigma: Vec<VertexId>,
}

impl Strategy for LegalGreedy {
    fn name(&self) -> &str {
        "strat-legal"
    }

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId> {
        if state.is_fresh() {
            return Ok(self.sigma[0]);
        }
        let legal = state.legal_moves();
        let mut best: Option<VertexId> = None;
        for u in &legal.intersection(&self.independent) {
            if best.is_none_or(|b| self.graph.weight(u) > self.graph.weight(b)) {
                best = Some(u);
            }
        }
        if let Some(u) = best {
            return Ok(u);
        }
        let next = self.sigma.iter().copied().find(|&v| !state.taken().contains(v));
        match next {
            Some(v) if legal.contains(v) => Ok(v),
            Some(v) => Err(Error::Precondition(format!("next ordering vertex {v} is not available"))),
            None => Err(Error::Precondition("no legal move".into())),
        }
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Bound `½ w(I ∖ U_σ)`.
pub fn strat_legal(g: &Arc<WeightedGraph>, ctx: &LegalOrderingContext) -> Result<CertifiedStrategy> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("at least two vertices are needed".into()));
    }
    // revalidates independence and legality against this graph
    let ctx = LegalOrderingContext::from_sigma(g, ctx.independent(), ctx.sigma().to_vec())?;
    Ok(CertifiedStrategy {
        strategy: Box::new(LegalGreedy { graph: g.clone(), independent: ctx.independent().clone(), sigma: ctx.sigma().to_vec() }),
        bound: ctx.residual_weight().half(),
        constant: Weight::frac(1, 2),
        provenance: Provenance::Legal { ctx },
    })
}

/// Every Bob move taking `u ∈ I` is paid for by Alice's move `v` just before
/// it: `w(u) <= w(v)` when `v ∈ I`, otherwise `u ∈ B_σ(v)` and `w(u) <= w(u_σ(v))`.
pub fn check_charging(g: &WeightedGraph, ctx: &LegalOrderingContext, record: &GameRecord) -> std::result::Result<(), String> {
    let i = ctx.independent();
    for k in 1..record.moves.len() {
        let (player, u, _) = record.moves[k];
        if player != Player::Bob || !i.contains(u) {
            continue;
        }
        let v = record.moves[k - 1].1;
        let ok = if i.contains(v) {
            g.weight(u) <= g.weight(v)
        } else {
            ctx.block(v).contains(u) && ctx.u_choice(v).is_some_and(|r| g.weight(u) <= g.weight(r))
        };
        if !ok {
            return Err(format!("move {}: Bob took {u} after Alice took {v}", k + 1));
        }
    }
    Ok(())
}
