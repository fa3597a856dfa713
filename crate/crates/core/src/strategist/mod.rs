//! Alice's strategies with certified lower bounds on her gain.

pub mod certified;
pub mod comp;
pub mod cycle_r;
pub mod legal;
pub mod master;
pub mod sparse;

pub use certified::{CertifiedStrategy, CyclePlan, Provenance};
pub use comp::{strat_comp, strat_comp_r};
pub use cycle_r::{check_cycle_plan, strat_cycle_r};
pub use legal::{check_charging, strat_legal};
pub use master::master_strategy;
pub use sparse::{strat_sparse, DEFAULT_ESCALATION_CAP};
