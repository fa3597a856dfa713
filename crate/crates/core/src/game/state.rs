use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::{VertexId, VertexSet, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn name(self) -> &'static str {
        match self {
            Player::Alice => "alice",
            Player::Bob => "bob",
        }
    }

    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }

    /// Alice moves when an even number of vertices is taken.
    pub fn to_move_after(taken: usize) -> Player {
        if taken.is_multiple_of(2) {
            Player::Alice
        } else {
            Player::Bob
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A position of the game: the taken set (connected), both gains and the move history.
#[derive(Clone, Debug)]
pub struct GameState {
    graph: Arc<WeightedGraph>,
    taken: VertexSet,
    alice_gain: Weight,
    bob_gain: Weight,
    history: Vec<VertexId>,
}

impl GameState {
    pub fn new(graph: Arc<WeightedGraph>) -> Self {
        let taken = graph.empty_set();
        GameState { graph, taken, alice_gain: Weight::ZERO, bob_gain: Weight::ZERO, history: Vec::new() }
    }

    /// Replays a move sequence from the empty position.
    pub fn replay(graph: Arc<WeightedGraph>, moves: &[VertexId]) -> Result<Self> {
        let mut s = GameState::new(graph);
        for &v in moves {
            s = s.apply_move(v)?;
        }
        Ok(s)
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<WeightedGraph> {
        &self.graph
    }

    pub fn taken(&self) -> &VertexSet {
        &self.taken
    }

    pub fn history(&self) -> &[VertexId] {
        &self.history
    }

    pub fn last_move(&self) -> Option<VertexId> {
        self.history.last().copied()
    }

    pub fn gain(&self, p: Player) -> Weight {
        match p {
            Player::Alice => self.alice_gain,
            Player::Bob => self.bob_gain,
        }
    }

    pub fn alice_gain(&self) -> Weight {
        self.alice_gain
    }

    pub fn bob_gain(&self) -> Weight {
        self.bob_gain
    }

    pub fn to_move(&self) -> Player {
        Player::to_move_after(self.taken.len())
    }

    pub fn is_fresh(&self) -> bool {
        self.taken.is_empty()
    }

    pub fn legal_moves(&self) -> VertexSet {
        if self.taken.is_empty() {
            self.graph.all_vertices()
        } else {
            self.graph.set_neighborhood(&self.taken)
        }
    }

    pub fn is_legal(&self, v: VertexId) -> bool {
        v < self.graph.vertex_count() && !self.taken.contains(v) && (self.taken.is_empty() || self.graph.neighbors(v).intersects(&self.taken))
    }

    /// No legal move left; for connected graphs this means everything is taken.
    pub fn is_finished(&self) -> bool {
        self.legal_moves().is_empty()
    }

    pub fn apply_move(&self, v: VertexId) -> Result<GameState> {
        if !self.is_legal(v) {
            return Err(Error::IllegalMove { player: self.to_move().name(), vertex: v, log: self.move_log() });
        }
        let mut next = self.clone();
        let w = self.graph.weight(v);
        match self.to_move() {
            Player::Alice => next.alice_gain += w,
            Player::Bob => next.bob_gain += w,
        }
        next.taken.insert(v);
        next.history.push(v);
        Ok(next)
    }

    /// One `move <k> <player> <vertex> <weight>` line per move so far.
    pub fn move_log(&self) -> String {
        let mut out = String::new();
        for (k, &v) in self.history.iter().enumerate() {
            out.push_str(&format!("move {} {} {} {}\n", k + 1, Player::to_move_after(k), v, self.graph.weight(v)));
        }
        out
    }
}
