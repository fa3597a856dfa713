//! Exact minimax for game T on graphs with at most 128 vertices.
//!
//! Weights are scaled to integers by the common denominator; the memo maps a
//! taken mask to the total Alice still collects from there on. The player to
//! move is determined by the parity of the mask, so the mask alone is the key.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::game::state::{GameState, Player};
use crate::graph::WeightedGraph;
use crate::{VertexId, VertexSet, Weight};

pub const DEFAULT_STATE_BUDGET: usize = 1 << 22;
pub const MAX_SOLVER_VERTICES: usize = 128;

#[derive(Clone, Debug)]
pub struct Solver {
    graph: Arc<WeightedGraph>,
    adj: Vec<u128>,
    scaled: Vec<i64>,
    denom: i128,
    full: u128,
    memo: HashMap<u128, i64>,
    budget: usize,
}

impl Solver {
    pub fn new(graph: Arc<WeightedGraph>) -> Result<Self> {
        Self::with_budget(graph, DEFAULT_STATE_BUDGET)
    }

    pub fn with_budget(graph: Arc<WeightedGraph>, budget: usize) -> Result<Self> {
        let n = graph.vertex_count();
        if n > MAX_SOLVER_VERTICES {
            return Err(Error::TooLarge(n, MAX_SOLVER_VERTICES));
        }
        let denom = graph.weights().iter().fold(1i128, |acc, w| acc.lcm(&w.denom()));
        let scaled = graph
            .weights()
            .iter()
            .map(|w| i64::try_from(w.numer() * (denom / w.denom())).map_err(|_| Error::InvalidWeight(format!("{w} too large after scaling"))))
            .collect::<Result<Vec<_>>>()?;
        let adj = graph.vertices().map(|v| graph.neighbors(v).to_mask()).collect();
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        Ok(Solver { graph, adj, scaled, denom, full, memo: HashMap::new(), budget })
    }

    pub fn graph(&self) -> &Arc<WeightedGraph> {
        &self.graph
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn to_weight(&self, x: i64) -> Weight {
        Weight::new(x as i128, self.denom).expect("non-negative value")
    }

    fn moves(&self, mask: u128) -> u128 {
        if mask == 0 {
            return self.full;
        }
        let mut nb = 0u128;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            nb |= self.adj[v];
            m &= m - 1;
        }
        nb & !mask
    }

    fn future(&mut self, mask: u128) -> Result<i64> {
        if let Some(&v) = self.memo.get(&mask) {
            return Ok(v);
        }
        let mut moves = self.moves(mask);
        if moves == 0 {
            return Ok(0);
        }
        let alice = mask.count_ones().is_multiple_of(2);
        let mut best: Option<i64> = None;
        while moves != 0 {
            let v = moves.trailing_zeros() as usize;
            moves &= moves - 1;
            let rest = self.future(mask | (1u128 << v))?;
            let val = if alice { rest + self.scaled[v] } else { rest };
            best = Some(match best {
                None => val,
                Some(b) if alice => b.max(val),
                Some(b) => b.min(val),
            });
        }
        if self.memo.len() >= self.budget {
            return Err(Error::BudgetExceeded { what: "solver memo entries", budget: self.budget });
        }
        let best = best.expect("at least one move");
        self.memo.insert(mask, best);
        Ok(best)
    }

    /// Optimal outcome for Alice from the empty position.
    pub fn game_value(&mut self) -> Result<Weight> {
        let v = self.future(0)?;
        Ok(self.to_weight(v))
    }

    /// What Alice still collects from a position with the given taken set under optimal play.
    pub fn future_value(&mut self, taken: &VertexSet) -> Result<Weight> {
        let v = self.future(taken.to_mask())?;
        Ok(self.to_weight(v))
    }

    /// Alice's final total from this state: gains so far plus the optimal continuation.
    pub fn value_from(&mut self, state: &GameState) -> Result<Weight> {
        Ok(state.alice_gain() + self.future_value(state.taken())?)
    }

    /// Optimal move for whoever is to move (Alice maximizes her total, Bob minimizes it).
    /// Ties go to the lowest vertex id.
    pub fn best_move(&mut self, state: &GameState) -> Result<VertexId> {
        let mask = state.taken().to_mask();
        let alice = state.to_move() == Player::Alice;
        let mut moves = self.moves(mask);
        let mut best: Option<(i64, VertexId)> = None;
        while moves != 0 {
            let v = moves.trailing_zeros() as usize;
            moves &= moves - 1;
            let rest = self.future(mask | (1u128 << v))?;
            let val = if alice { rest + self.scaled[v] } else { rest };
            let better = match best {
                None => true,
                Some((b, _)) => (alice && val > b) || (!alice && val < b),
            };
            if better {
                best = Some((val, v));
            }
        }
        best.map(|(_, v)| v).ok_or_else(|| Error::Precondition("no legal move in a finished game".into()))
    }
}

/// Convenience wrapper: the exact game value with the default budget.
pub fn game_value(g: &WeightedGraph) -> Result<Weight> {
    Solver::new(Arc::new(g.clone()))?.game_value()
}
