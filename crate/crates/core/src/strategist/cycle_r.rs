use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::strategy::heaviest_of;
use crate::game::{GameRecord, GameState, Player, Strategy};
use crate::graph::{cycle_reduction_check, ShallowQuotient, WeightedGraph};
use crate::strategist::certified::{CertifiedStrategy, CyclePlan, Provenance};
use crate::{VertexId, VertexSet, Weight};

/// The two rules: take a center whenever one is available (protected ones
/// first), and stay out of the neighborhood of untaken centers unless forced
/// (protected ones last).
#[derive(Clone)]
struct CycleRules {
    centers: VertexSet,
    protected: VertexSet,
    first: VertexId,
    /// With at most six centers only the first move matters.
    greedy_after_first: bool,
}

impl Strategy for CycleRules {
    fn name(&self) -> &str {
        "strat-cycle-R"
    }

    fn choose_move(&mut self, state: &GameState) -> Result<VertexId> {
        if state.is_fresh() {
            return Ok(self.first);
        }
        let g = state.graph();
        let legal = state.legal_moves();
        let none = || Error::Precondition("no legal move".into());
        if self.greedy_after_first {
            return heaviest_of(state, &legal).ok_or_else(none);
        }
        // a protected center Bob has just opened comes before any other center
        let open_centers = legal.intersection(&self.centers);
        if let Some(v) = heaviest_of(state, &open_centers.intersection(&self.protected)) {
            return Ok(v);
        }
        if let Some(v) = heaviest_of(state, &open_centers) {
            return Ok(v);
        }
        let open = self.centers.difference(state.taken());
        let near_open = g.set_neighborhood(&open);
        if let Some(v) = heaviest_of(state, &legal.difference(&near_open)) {
            return Ok(v);
        }
        let near_unprotected = g.set_neighborhood(&open.difference(&self.protected));
        if let Some(v) = heaviest_of(state, &legal.intersection(&near_unprotected)) {
            return Ok(v);
        }
        heaviest_of(state, &legal).ok_or_else(none)
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

fn heaviest_center(g: &WeightedGraph, centers: &[VertexId]) -> VertexId {
    let mut best = centers[0];
    for &v in &centers[1..] {
        if g.weight(v) > g.weight(best) {
            best = v;
        }
    }
    best
}

/// Sizes of the parts `A_i` and `A_{i,i+1}` around the centers `v_0..v_{n-1}`.
fn part_sizes(g: &WeightedGraph, centers: &[VertexId]) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = centers.len();
    let mut closed = g.empty_set();
    for &v in centers {
        closed.union_with(&g.closed_neighborhood(v));
    }
    let mut own: Vec<usize> = centers.iter().map(|&v| g.closed_neighborhood(v).len()).collect();
    let mut between = vec![0; n];
    for comp in g.components(&closed.complement()) {
        let touch = g.set_neighborhood(&comp);
        let hit: Vec<usize> = (0..n).filter(|&i| touch.intersects(g.neighbors(centers[i]))).collect();
        match hit[..] {
            [i] => own[i] += comp.len(),
            [i, j] if j == i + 1 => between[i] += comp.len(),
            [0, j] if j == n - 1 => between[n - 1] += comp.len(),
            _ => return Err(Error::Precondition("component outside the centers is not attached to one or two consecutive centers".into())),
        }
    }
    Ok((own, between))
}

/// For a block set `S_R` whose reduction in `G^R` is a cycle: bound at least
/// `w(S_R) / 6`. Must be played from the fresh position.
pub fn strat_cycle_r(g: &Arc<WeightedGraph>, q: &ShallowQuotient, s_r: &VertexSet) -> Result<CertifiedStrategy> {
    if g.vertex_count().is_multiple_of(2) {
        return Err(Error::Precondition("the vertex count must be odd".into()));
    }
    if cycle_reduction_check(&q.graph, s_r).is_none() {
        return Err(Error::Precondition("S_R does not reduce to a cycle".into()));
    }
    let positive = s_r.intersection(&q.graph.positive_vertices());
    let constant = Weight::frac(1, 6);
    let idle = |plan: CyclePlan| CertifiedStrategy {
        strategy: Box::new(CycleRules {
            centers: g.empty_set(),
            protected: g.empty_set(),
            first: 0,
            greedy_after_first: true,
        }),
        bound: Weight::ZERO,
        constant,
        provenance: Provenance::CycleR(plan),
    };
    if positive.is_empty() {
        return Ok(idle(CyclePlan { centers: vec![], claim: None, protected: g.empty_set(), first: None }));
    }
    let order = cycle_reduction_check(&q.graph, &positive)
        .ok_or_else(|| Error::Precondition("positive blocks of S_R do not reduce to a cycle".into()))?;
    let centers: Vec<VertexId> =
        order.order().iter().map(|&b| q.centers[b].expect("positive blocks have centers")).collect();
    let center_set = VertexSet::from_ids(g.vertex_count(), centers.iter().copied());
    let n = centers.len();

    if n <= 6 {
        let first = heaviest_center(g, &centers);
        let plan = CyclePlan { centers: centers.clone(), claim: None, protected: g.empty_set(), first: Some(first) };
        return Ok(CertifiedStrategy {
            strategy: Box::new(CycleRules {
                centers: center_set,
                protected: g.empty_set(),
                first,
                greedy_after_first: true,
            }),
            bound: g.weight(first),
            constant,
            provenance: Provenance::CycleR(plan),
        });
    }

    let (own, between) = part_sizes(g, &centers)?;
    let mut prefix = 0usize;
    let mut classes = [Vec::new(), Vec::new()];
    for i in 0..n {
        classes[prefix % 2].push(i);
        prefix += own[i] + between[i];
    }
    let weight_of = |idx: &[usize]| -> Weight { idx.iter().map(|&i| g.weight(centers[i])).sum() };
    let c = if weight_of(&classes[0]) >= weight_of(&classes[1]) { &classes[0] } else { &classes[1] };
    let s0c: Vec<usize> = c.iter().copied().filter(|&i| own[i] % 2 == 0).collect();
    let s1c: Vec<usize> = c.iter().copied().filter(|&i| own[i] % 2 == 1).collect();
    let b1 = weight_of(&s0c);
    let w1 = weight_of(&s1c);
    let b2 = w1.half();
    let ids = |idx: &[usize]| VertexSet::from_ids(g.vertex_count(), idx.iter().map(|&i| centers[i]));

    let (claim, protected, first, bound) = if b1 >= b2 {
        (1, ids(&s0c), centers[0], b1)
    } else {
        let mut acc = Weight::ZERO;
        let mut j = n - 1;
        for &i in &s1c {
            acc += g.weight(centers[i]);
            if acc >= b2 {
                j = i;
                break;
            }
        }
        (2, ids(&s1c), centers[j], b2)
    };
    let plan = CyclePlan { centers: centers.clone(), claim: Some(claim), protected: protected.clone(), first: Some(first) };
    Ok(CertifiedStrategy {
        strategy: Box::new(CycleRules { centers: center_set, protected, first, greedy_after_first: false }),
        bound,
        constant,
        provenance: Provenance::CycleR(plan),
    })
}

/// The per-game statement behind each sub-strategy, checked on a finished game.
/// Claim 1: Alice takes every protected center. Claim 2: she takes at least
/// half of their weight. Small case: her first move is the heaviest center.
pub fn check_cycle_plan(g: &WeightedGraph, plan: &CyclePlan, record: &GameRecord) -> std::result::Result<(), String> {
    let alice: VertexSet =
        VertexSet::from_ids(g.vertex_count(), record.moves.iter().filter(|m| m.0 == Player::Alice).map(|m| m.1));
    match plan.claim {
        None => match plan.first {
            None => Ok(()),
            Some(f) => {
                let heaviest = heaviest_center(g, &plan.centers);
                if record.moves.first().map(|m| m.1) == Some(f) && g.weight(f) == g.weight(heaviest) {
                    Ok(())
                } else {
                    Err("first move is not a heaviest center".into())
                }
            }
        },
        Some(1) => {
            if plan.protected.is_subset(&alice) {
                Ok(())
            } else {
                Err(format!("Bob took protected centers {:?}", plan.protected.difference(&alice).to_vec()))
            }
        }
        Some(_) => {
            let got = g.set_weight_of(&plan.protected.intersection(&alice));
            if got >= g.set_weight_of(&plan.protected).half() {
                Ok(())
            } else {
                Err(format!("Alice kept only {got} of the protected centers"))
            }
        }
    }
}
