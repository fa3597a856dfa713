use std::sync::{Arc, Mutex};

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::solver::Solver;
use crate::game::state::{GameState, Player};
use crate::graph::WeightedGraph;
use crate::{VertexId, Weight};

/// A move chooser for one side. Strategies may keep state between calls; the
/// full history is available from the state, so most of them do not need to.
pub trait Strategy {
    fn name(&self) -> &str;

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId>;

    /// Lower bound on Alice's final gain this strategy guarantees, when known.
    fn certified_bound(&self) -> Option<Weight> {
        None
    }

    fn clone_box(&self) -> Box<dyn Strategy>;
}

impl Clone for Box<dyn Strategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameRecord {
    pub moves: Vec<(Player, VertexId, Weight)>,
    pub alice_gain: Weight,
    pub bob_gain: Weight,
}

impl GameRecord {
    pub fn move_ids(&self) -> Vec<VertexId> {
        self.moves.iter().map(|&(_, v, _)| v).collect()
    }

    pub fn log_lines(&self) -> Vec<String> {
        self.moves
            .iter()
            .enumerate()
            .map(|(k, (p, v, w))| format!("move {} {} {} {}", k + 1, p, v, w))
            .collect()
    }
}

/// Plays a complete game. An illegal choice aborts with the log so far.
pub fn play(g: &Arc<WeightedGraph>, alice: &mut dyn Strategy, bob: &mut dyn Strategy) -> Result<GameRecord> {
    let mut state = GameState::new(g.clone());
    let mut moves = Vec::with_capacity(g.vertex_count());
    while !state.is_finished() {
        let mover = state.to_move();
        let v = match mover {
            Player::Alice => alice.choose_move(&state)?,
            Player::Bob => bob.choose_move(&state)?,
        };
        if !state.is_legal(v) {
            return Err(Error::IllegalMove { player: mover.name(), vertex: v, log: state.move_log() });
        }
        state = state.apply_move(v)?;
        moves.push((mover, v, g.weight(v)));
    }
    Ok(GameRecord { moves, alice_gain: state.alice_gain(), bob_gain: state.bob_gain() })
}

/// Alice's gain against the worst Bob, found by trying every Bob reply
/// (the strategy is forked at each branch). Exponential; small graphs only.
pub fn worst_case_gain(g: &Arc<WeightedGraph>, alice: &dyn Strategy) -> Result<Weight> {
    fn go(state: GameState, mut alice: Box<dyn Strategy>) -> Result<Weight> {
        if state.is_finished() {
            return Ok(state.alice_gain());
        }
        match state.to_move() {
            Player::Alice => {
                let v = alice.choose_move(&state)?;
                if !state.is_legal(v) {
                    return Err(Error::IllegalMove { player: "alice", vertex: v, log: state.move_log() });
                }
                go(state.apply_move(v)?, alice)
            }
            Player::Bob => {
                let mut worst: Option<Weight> = None;
                for v in &state.legal_moves() {
                    let w = go(state.apply_move(v)?, alice.clone_box())?;
                    worst = Some(worst.map_or(w, |x| x.min(w)));
                }
                Ok(worst.expect("unfinished game has a move"))
            }
        }
    }
    go(GameState::new(g.clone()), alice.clone_box())
}

/// Minimax play from the exact solver; the memo is shared between clones.
#[derive(Clone)]
pub struct OptimalStrategy {
    solver: Arc<Mutex<Solver>>,
    label: &'static str,
}

impl OptimalStrategy {
    pub fn new(solver: Arc<Mutex<Solver>>) -> Self {
        OptimalStrategy { solver, label: "optimal" }
    }

    pub fn for_graph(g: &Arc<WeightedGraph>) -> Result<Self> {
        Ok(Self::new(Arc::new(Mutex::new(Solver::new(g.clone())?))))
    }

    pub fn solver(&self) -> &Arc<Mutex<Solver>> {
        &self.solver
    }
}

impl Strategy for OptimalStrategy {
    fn name(&self) -> &str {
        self.label
    }

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId> {
        self.solver.lock().expect("solver lock").best_move(state)
    }

    fn certified_bound(&self) -> Option<Weight> {
        self.solver.lock().expect("solver lock").game_value().ok()
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Takes the heaviest available vertex, lowest id on ties.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyStrategy;

pub(crate) fn heaviest_of(state: &GameState, candidates: impl IntoIterator<Item = VertexId>) -> Option<VertexId> {
    let g = state.graph();
    let mut best: Option<VertexId> = None;
    for v in candidates {
        if best.is_none_or(|b| g.weight(v) > g.weight(b)) {
            best = Some(v);
        }
    }
    best
}

impl Strategy for GreedyStrategy {
    fn name(&self) -> &str {
        "greedy"
    }

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId> {
        heaviest_of(state, &state.legal_moves()).ok_or_else(|| Error::Precondition("no legal move".into()))
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(*self)
    }
}

/// Uniformly random legal moves from a seeded generator.
#[derive(Clone, Debug)]
pub struct RandomStrategy {
    rng: ChaCha8Rng,
}

impl RandomStrategy {
    pub fn new(seed: u64) -> Self {
        RandomStrategy { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Strategy for RandomStrategy {
    fn name(&self) -> &str {
        "random"
    }

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId> {
        state.legal_moves().iter().choose(&mut self.rng).ok_or_else(|| Error::Precondition("no legal move".into()))
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}
