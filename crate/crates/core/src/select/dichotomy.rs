use std::fmt;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::select::arrange::{arrangeable_ordering, distinguishing_coloring};
use crate::select::legal::{build_legal_ordering, improve_ordering, LegalOrderingContext};
use crate::{VertexId, VertexSet, Weight};

/// `1 / ((p²+4p+5)(p²+4p+3))`
pub fn c_dichotomy(p: usize) -> Weight {
    let a = (p * p + 4 * p + 5) as u64;
    let b = (p * p + 4 * p + 3) as u64;
    Weight::frac(1, a * b)
}

#[derive(Clone, Debug)]
pub enum Branch {
    SparseSet(VertexSet),
    LegalPair(LegalOrderingContext),
}

#[derive(Clone, Debug)]
pub struct Dichotomy {
    pub branch: Branch,
    /// `w(S)` for a sparse set, `w(I ∖ U_σ)` for a legal pair.
    pub weight: Weight,
    pub measured_p: usize,
    pub constant: Weight,
    pub total: Weight,
}

impl Dichotomy {
    pub fn branch_name(&self) -> &'static str {
        match self.branch {
            Branch::SparseSet(_) => "sparse",
            Branch::LegalPair(_) => "legal",
        }
    }

    /// `weight >= c_n w(G)` with the measured `p`.
    pub fn meets_claim(&self) -> bool {
        self.weight >= self.constant * self.total
    }

    pub fn report(&self) -> String {
        format!(
            "dichotomy branch={} weight={} measuredP={} cN={}",
            self.branch_name(),
            self.weight,
            self.measured_p,
            self.constant
        )
    }
}

impl fmt::Display for Dichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.report())
    }
}

/// Greedy coloring of `u` in which vertices at distance two conflict.
/// Vertices are colored by descending weight (lowest id on ties).
pub fn distance_two_coloring(g: &WeightedGraph, u: &VertexSet) -> Vec<VertexSet> {
    let mut order: Vec<VertexId> = u.to_vec();
    order.sort_by(|&a, &b| g.weight(b).cmp(&g.weight(a)).then(a.cmp(&b)));
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in order {
        let mut ball = g.empty_set();
        for x in g.neighbors(v) {
            ball.union_with(g.neighbors(x));
        }
        ball.union_with(g.neighbors(v));
        match classes.iter_mut().find(|c| !c.intersects(&ball)) {
            Some(c) => {
                c.insert(v);
            }
            None => classes.push(VertexSet::singleton(g.vertex_count(), v)),
        }
    }
    classes
}

/// Either a heavy sparse set or an independent set with a legal ordering
/// leaving much of `I` outside `U_σ`.
pub fn sparse_or_legal(g: &WeightedGraph) -> Result<Dichotomy> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be non-empty and connected".into()));
    }
    let total = g.total_weight();
    if n == 1 {
        let s = g.all_vertices();
        return Ok(Dichotomy { branch: Branch::SparseSet(s), weight: total, measured_p: 0, constant: c_dichotomy(0), total });
    }
    let og = arrangeable_ordering(g);
    let p = og.measured_p();
    let constant = c_dichotomy(p);
    let i = distinguishing_coloring(&og).heaviest_class(g);
    let ctx = improve_ordering(g, build_legal_ordering(g, &i)?);
    let residual = ctx.residual_weight();
    let threshold = g.set_weight_of(&i).div_int((p * p + 4 * p + 5) as u64);
    if residual >= threshold {
        return Ok(Dichotomy { branch: Branch::LegalPair(ctx), weight: residual, measured_p: p, constant, total });
    }
    let u_star = ctx.u_star(g);
    let best = distance_two_coloring(g, &u_star)
        .into_iter()
        .map(|c| (g.set_weight_of(&c), c))
        .fold(None::<(Weight, VertexSet)>, |acc, (w, c)| match acc {
            Some((bw, _)) if bw >= w => acc,
            _ => Some((w, c)),
        });
    let (weight, s) = best.unwrap_or_else(|| (Weight::ZERO, g.empty_set()));
    Ok(Dichotomy { branch: Branch::SparseSet(s), weight, measured_p: p, constant, total })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_star_goes_legal() {
        let g = WeightedGraph::from_int_weights(&[0, 1, 1, 1, 1], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let d = sparse_or_legal(&g).unwrap();
        assert_eq!(d.branch_name(), "legal");
        assert_eq!(d.weight, Weight::int(3));
        assert!(d.meets_claim());
        assert!(d.report().starts_with("dichotomy branch=legal weight=3/1 measuredP="));
    }

    #[test]
    fn single_vertex_is_sparse() {
        let g = WeightedGraph::from_int_weights(&[2], &[]).unwrap();
        let d = sparse_or_legal(&g).unwrap();
        assert_eq!(d.branch_name(), "sparse");
        assert_eq!(d.weight, Weight::int(2));
    }

    #[test]
    fn constant_formula() {
        assert_eq!(c_dichotomy(0), Weight::frac(1, 15));
        assert_eq!(c_dichotomy(1), Weight::frac(1, 80));
    }

    #[test]
    fn distance_two_classes_are_sparse() {
        let edges: Vec<_> = (0..7).map(|i| (i, i + 1)).collect();
        let g = WeightedGraph::from_int_weights(&[1, 5, 1, 2, 1, 3, 1, 4], &edges).unwrap();
        let classes = distance_two_coloring(&g, &g.all_vertices());
        for c in &classes {
            assert!(g.is_sparse(c));
        }
        assert_eq!(classes[0].first(), Some(1));
    }
}
