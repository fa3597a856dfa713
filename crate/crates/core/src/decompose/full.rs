//! Decomposition of an arbitrary connected weighted graph.

use crate::decompose::constants::{c_full, c_hamil_combined};
use crate::decompose::dfs_cycle::dfs_cycle;
use crate::decompose::hamil::{hamil_grow, hamil_separator};
use crate::decompose::outcome::{OutcomeTag, StructuralOutcome};
use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, WeightedGraph};
use crate::{VertexSet, Weight};

/// Pulls a set of the reduced graph back to `G`: everything reachable from it
/// without touching another vertex of the reduced graph.
fn lift(g: &WeightedGraph, reduced: &VertexSet, s: &VertexSet) -> VertexSet {
    let within = reduced.complement().union(s);
    g.reachable_within(s, &within)
}

/// A connected separator, a connected set with a heavy neighbourhood, or a
/// cycle-reduction set, each with `achieved >= w(G)/52`.
pub fn full_decomposition(g: &WeightedGraph) -> Result<StructuralOutcome> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected and non-empty".into()));
    }
    let n = g.vertex_count();
    let c = c_full();
    let total = g.total_weight();
    let h = dfs_cycle(g)?;
    let hv = h.vertex_set(n);
    let wh = g.set_weight_of(&hv);
    if wh <= Weight::frac(1, 2).saturating_sub(c) * total {
        let r = g.w_star_without(&hv);
        return Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, hv, r, c, total));
    }

    let red = g.reduction(&hv);
    let gp = &red.graph;
    let local_order = h.order().iter().map(|&v| red.local_of(v).expect("cycle vertex")).collect();
    let hp = CycleCertificate::new(local_order)?;
    let first = hamil_separator(gp, &hp)?;
    debug_assert!(first.meets_claim());
    let out = match first.tag {
        OutcomeTag::CycleSet => {
            let s = red.to_host(&first.set, n);
            let cycle = CycleCertificate::new(first.cycle.expect("cycle set").order().iter().map(|&v| red.ids[v]).collect())?;
            let achieved = g.set_weight_of(&s);
            StructuralOutcome::new(OutcomeTag::CycleSet, s, achieved, c, total).with_cycle(cycle)
        }
        OutcomeTag::ConnectedSeparator => {
            let grown = hamil_grow(gp, &hp, &first.set)?;
            let s = lift(g, &hv, &red.to_host(&grown.set, n));
            match grown.tag {
                OutcomeTag::NeighborhoodSet => {
                    let achieved = g.set_weight_of(&g.set_neighborhood(&s));
                    StructuralOutcome::new(OutcomeTag::NeighborhoodSet, s, achieved, c, total)
                }
                _ => {
                    let achieved = g.w_star_without(&s);
                    StructuralOutcome::new(OutcomeTag::ConnectedSeparator, s, achieved, c, total)
                }
            }
        }
        other => unreachable!("hamil_separator returned {other}"),
    };
    debug_assert!(c_hamil_combined() * gp.total_weight() > c * total || total.is_zero());
    Ok(out)
}
