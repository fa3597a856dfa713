//! The recursive forbidden-subdivision lemma and the resulting decomposition
//! of graphs without a `K_n` subdivision.

use crate::decompose::constants::{beta_nm, c_nm, c_subdiv, max_edges};
use crate::decompose::full::full_decomposition;
use crate::decompose::outcome::{OutcomeTag, StructuralOutcome};
use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, SubdivisionWitness, WeightedGraph};
use crate::{VertexSet, Weight};

/// `w(N(A) \ S) - max_C w(C ∩ N(A))` over the components `C` of `G \ S`.
pub fn neighborhood_residual(g: &WeightedGraph, a: &VertexSet, s: &VertexSet) -> Weight {
    let na = g.set_neighborhood(a);
    let outside = na.difference(s);
    let heaviest = g
        .components(&s.complement())
        .iter()
        .map(|c| g.set_weight_of(&c.intersection(&na)))
        .max()
        .unwrap_or(Weight::ZERO);
    g.set_weight_of(&outside).saturating_sub(heaviest)
}

/// For connected, non-empty, proper `A`: a connected `S ⊇ A` with a large
/// neighbourhood residual, a heavy vertex of `N(A)`, or a subdivision of some
/// `n`-vertex, `m`-edge pattern with branch vertices in `N(A)` avoiding `A`.
pub fn indsubdiv(g: &WeightedGraph, a: &VertexSet, n: usize, m: usize) -> Result<StructuralOutcome> {
    let c = c_nm(n, m)?;
    if a.is_empty() || a.len() == g.vertex_count() || !g.is_connected_set(a) {
        return Err(Error::Precondition("A must be connected, non-empty and proper".into()));
    }
    let na = g.set_neighborhood(a);
    let basis = g.set_weight_of(&na);
    let universe = g.vertex_count();
    let witness = |branch: Vec<usize>| {
        let set = VertexSet::from_ids(universe, branch.iter().copied());
        StructuralOutcome::new(OutcomeTag::SubdivisionWitness, set, Weight::ZERO, c, basis)
            .with_witness(SubdivisionWitness { branch, paths: Vec::new() })
    };
    if na.is_empty() {
        return Err(Error::Precondition("G must be connected".into()));
    }
    if n == 1 {
        return Ok(witness(vec![na.first().unwrap()]));
    }
    if m == 0 {
        if na.len() < n {
            let v = na.iter().fold(None, |best: Option<usize>, v| match best {
                Some(b) if g.weight(b) >= g.weight(v) => Some(b),
                _ => Some(v),
            });
            let v = v.unwrap();
            return Ok(StructuralOutcome::new(OutcomeTag::HeavyVertex, VertexSet::singleton(universe, v), g.weight(v), c, basis));
        }
        return Ok(witness(na.iter().take(n).collect()));
    }

    let separator = |s: VertexSet| {
        let r = neighborhood_residual(g, a, &s);
        StructuralOutcome::new(OutcomeTag::ConnectedSeparator, s, r, c, basis)
    };
    let heavy = g
        .components(&a.complement())
        .into_iter()
        .find(|comp| g.set_weight_of(&comp.intersection(&na)) > Weight::ONE.saturating_sub(c) * basis);
    let Some(comp) = heavy else {
        return Ok(separator(a.clone()));
    };
    let b = comp.intersection(&na);
    let wb = g.set_weight_of(&b);
    let beta = beta_nm(n, m)?;

    // BFS layers of the reduction of G[C] to B, from its lowest vertex
    let inner = g.induced_subgraph(&comp);
    let local_b = inner.from_host(&b);
    let red = inner.graph.reduction(&local_b);
    let dist = red.graph.distances_from(0);
    let depth = dist.iter().map(|d| d.expect("reduction of a connected graph is connected")).max().unwrap_or(0);
    let mut layers = vec![VertexSet::new(universe); depth + 1];
    for (local, d) in dist.iter().enumerate() {
        layers[d.unwrap()].insert(inner.ids[red.ids[local]]);
    }
    let lw: Vec<Weight> = layers.iter().map(|l| g.set_weight_of(l)).collect();
    let half = wb.half();
    let j = (0..=depth)
        .find(|&j| lw[..j].iter().sum::<Weight>() <= half && lw[j + 1..].iter().sum::<Weight>() <= half)
        .expect("a balanced layer exists");
    let bj = &layers[j];
    if lw[j] <= half.saturating_sub(beta * wb) {
        return Ok(separator(a.union(bj)));
    }

    let a2 = g.reachable_within(a, &bj.complement());
    let inner_out = indsubdiv(g, &a2, n, m - 1)?;
    Ok(match inner_out.tag {
        OutcomeTag::ConnectedSeparator => separator(inner_out.set),
        OutcomeTag::HeavyVertex => StructuralOutcome { constant: c, basis, ..inner_out },
        OutcomeTag::SubdivisionWitness => {
            let mut w = inner_out.witness.clone().expect("witness");
            let k = w.branch.len();
            let (i, jj) = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .find(|&(i, j)| !w.has_pattern_edge(i, j))
                .expect("pattern has a missing edge");
            let interior = a2.difference(a);
            let path = g
                .shortest_path_via(w.branch[i], w.branch[jj], &interior)
                .ok_or_else(|| Error::Precondition("no connecting path through the grown set".into()))?;
            w.paths.push((i, jj, path));
            w.paths.sort_by_key(|&(i, j, _)| (i, j));
            StructuralOutcome { constant: c, basis, ..inner_out }.with_witness(w)
        }
        other => unreachable!("indsubdiv returned {other}"),
    })
}

/// For connected `G` and `n >= 2`: a connected separator or a cycle-reduction
/// set with `achieved >= c_subdiv(n) * w(G)`, or a `K_n` subdivision witness.
pub fn subdiv_decomposition(g: &WeightedGraph, n: usize) -> Result<StructuralOutcome> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    let c = c_subdiv(n)?;
    let total = g.total_weight();
    let full = full_decomposition(g)?;
    let retag = |o: StructuralOutcome| StructuralOutcome { constant: c, basis: total, ..o };
    match full.tag {
        OutcomeTag::ConnectedSeparator | OutcomeTag::CycleSet => Ok(retag(full)),
        OutcomeTag::NeighborhoodSet => {
            let a = full.set;
            if a.len() == g.vertex_count() {
                let r = g.w_star_without(&a);
                return Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, a, r, c, total));
            }
            let inner = indsubdiv(g, &a, n, max_edges(n))?;
            Ok(match inner.tag {
                OutcomeTag::ConnectedSeparator => {
                    let r = g.w_star_without(&inner.set);
                    StructuralOutcome::new(OutcomeTag::ConnectedSeparator, inner.set, r, c, total)
                }
                OutcomeTag::HeavyVertex => {
                    let v = inner.set.first().unwrap();
                    StructuralOutcome::new(OutcomeTag::CycleSet, inner.set, g.weight(v), c, total).with_cycle(CycleCertificate::new(vec![v])?)
                }
                _ => retag(inner),
            })
        }
        other => unreachable!("full_decomposition returned {other}"),
    }
}
