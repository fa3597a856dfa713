pub mod solver;
pub mod state;
pub mod strategy;

pub use solver::{game_value, Solver, DEFAULT_STATE_BUDGET};
pub use state::{GameState, Player};
pub use strategy::{play, worst_case_gain, GameRecord, GreedyStrategy, OptimalStrategy, RandomStrategy, Strategy};
