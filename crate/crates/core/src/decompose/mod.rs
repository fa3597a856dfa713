pub mod constants;
pub mod dfs_cycle;
pub mod full;
pub mod hamil;
pub mod indsubdiv;
pub mod outcome;
pub mod two_paths;

pub use constants::{beta_nm, c_full, c_hamil1, c_hamil2, c_hamil_combined, c_nm, c_subdiv};
pub use dfs_cycle::{dfs_cycle, heaviest_outside};
pub use full::full_decomposition;
pub use hamil::{grow_blocks, hamil_grow, hamil_separator, GrowBlock};
pub use indsubdiv::{indsubdiv, neighborhood_residual, subdiv_decomposition};
pub use outcome::{OutcomeTag, StructuralOutcome};
pub use two_paths::oriented_two_paths;
