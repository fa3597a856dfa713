use std::sync::Arc;

use crate::decompose::{c_subdiv, subdiv_decomposition, OutcomeTag};
use crate::error::{Error, Result};
use crate::graph::{shallow_quotient, WeightedGraph};
use crate::strategist::certified::{CertifiedStrategy, Provenance};
use crate::strategist::comp::strat_comp_r;
use crate::strategist::cycle_r::strat_cycle_r;
use crate::{VertexSet, Weight};

pub const DEFAULT_ESCALATION_CAP: usize = 3;

/// For a connected, sparsely weighted graph with an odd vertex count.
///
/// Decomposes the contracted graph `G^R` for `K_{n'}` with `n'` running from
/// `n` (at least 2) up to `n + cap`, moving on whenever a subdivision surfaces.
/// A connected separator is played with [`strat_comp_r`], a cycle set with
/// [`strat_cycle_r`]. The heaviest single block, taken on the first move, is
/// always a candidate too; the larger bound wins.
pub fn strat_sparse(g: &Arc<WeightedGraph>, n: usize, cap: usize) -> Result<CertifiedStrategy> {
    if g.vertex_count().is_multiple_of(2) {
        return Err(Error::Precondition("the vertex count must be odd".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let q = shallow_quotient(g)?;
    let start = n.max(2);
    let mut witness = None;
    let mut found = None;
    for level in start..=start + cap {
        let out = subdiv_decomposition(&q.graph, level)?;
        if out.tag == OutcomeTag::SubdivisionWitness {
            witness = out.witness.clone();
            continue;
        }
        found = Some((level, out));
        break;
    }

    let heaviest = q.graph.vertices().fold(0, |b, v| if q.graph.weight(v) > q.graph.weight(b) { v } else { b });
    let single = strat_cycle_r(g, &q, &VertexSet::singleton(q.graph.vertex_count(), heaviest))?;

    let (level, outcome, chosen, constant) = match found {
        None => (start + cap, None, single, Weight::ZERO),
        Some((level, out)) => {
            let via = match out.tag {
                OutcomeTag::ConnectedSeparator => strat_comp_r(g, &q, &out.set)?,
                OutcomeTag::CycleSet => strat_cycle_r(g, &q, &out.set)?,
                other => unreachable!("decomposition returned {other}"),
            };
            let chosen = if single.bound > via.bound { single } else { via };
            (level, Some(out), chosen, c_subdiv(level)?.div_int(6))
        }
    };
    Ok(CertifiedStrategy {
        strategy: chosen.strategy,
        bound: chosen.bound,
        constant,
        provenance: Provenance::Sparse { level, outcome, witness, inner: Box::new(chosen.provenance) },
    })
}
