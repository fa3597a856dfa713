use std::sync::Arc;

use crate::decompose::c_subdiv;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::select::{sparse_or_legal, Branch};
use crate::strategist::certified::{CertifiedStrategy, Provenance};
use crate::strategist::legal::strat_legal;
use crate::strategist::sparse::strat_sparse;
use crate::Weight;

/// The full strategy for a connected graph with an odd vertex count.
///
/// A heavy sparse set `S` is played through [`strat_sparse`] on the graph with
/// every weight outside `S` reset to zero; a legal pair through [`strat_legal`].
/// The reported constant is `c' * min(c'', 1/2)` where `c'` comes from the
/// measured arrangeability and `c''` from the decomposition level used.
pub fn master_strategy(g: &Arc<WeightedGraph>, n: usize, cap: usize) -> Result<CertifiedStrategy> {
    if g.vertex_count().is_multiple_of(2) {
        return Err(Error::Precondition("the vertex count must be odd".into()));
    }
    let d = sparse_or_legal(g)?;
    let (inner, c2) = match &d.branch {
        Branch::SparseSet(s) => {
            let restricted = Arc::new(g.with_weights_restricted_to(s));
            let inner = strat_sparse(&restricted, n, cap)?;
            let c2 = inner.constant;
            (inner, c2)
        }
        Branch::LegalPair(ctx) => (strat_legal(g, ctx)?, c_subdiv(n.max(2))?.div_int(6)),
    };
    let constant = d.constant * c2.min(Weight::frac(1, 2));
    Ok(CertifiedStrategy {
        strategy: inner.strategy,
        bound: inner.bound,
        constant,
        provenance: Provenance::Master { dichotomy: d, inner: Box::new(inner.provenance) },
    })
}
