use std::sync::{Arc, Mutex};

use clap::ValueEnum;
use rayon::prelude::*;
use sharegame_core::audit::{audit_dfs_cycle, audit_outcome, Claim};
use sharegame_core::decompose::{dfs_cycle, full_decomposition, hamil_grow, hamil_separator, indsubdiv, subdiv_decomposition};
use sharegame_core::game::{play, GameState, OptimalStrategy, RandomStrategy, Solver, Strategy};
use sharegame_core::generate::{random_connected, random_connected_subset, random_hamiltonian, random_ring_of_stars, Parity, RandomSpec};
use sharegame_core::graph::shallow_quotient;
use sharegame_core::select::{arrangeable_ordering, build_legal_ordering, distinguishing_coloring, improve_ordering, observation_check, sparse_or_legal};
use sharegame_core::strategist::{
    check_charging, check_cycle_plan, master_strategy, strat_comp, strat_comp_r, strat_cycle_r, strat_legal, strat_sparse,
    CertifiedStrategy, Provenance,
};
use sharegame_core::{VertexSet, Weight, WeightedGraph};

use crate::Cli;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    #[value(name = "struct-cycle")]
    StructCycle,
    #[value(name = "struct-hamil1")]
    StructHamil1,
    #[value(name = "struct-hamil2")]
    StructHamil2,
    #[value(name = "struct-indsubdiv")]
    StructIndsubdiv,
    #[value(name = "struct-full")]
    StructFull,
    #[value(name = "struct-subdiv")]
    StructSubdiv,
    #[value(name = "strat-comp")]
    StratComp,
    #[value(name = "strat-comp-R")]
    StratCompR,
    #[value(name = "strat-cycle-R")]
    StratCycleR,
    #[value(name = "strat-legal")]
    StratLegal,
    #[value(name = "strat-sparse")]
    StratSparse,
    #[value(name = "master")]
    Master,
    #[value(name = "observation")]
    Observation,
    #[value(name = "dichotomy")]
    Dichotomy,
}

impl Lemma {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_owned()
    }
}

pub struct Instance {
    pub seed: u64,
    pub pass: bool,
    pub detail: String,
}

impl Instance {
    pub fn line(&self, lemma: Lemma) -> String {
        let status = if self.pass { "pass" } else { "fail" };
        format!("instance lemma={} seed={} status={status} {}", lemma.name(), self.seed, self.detail)
    }
}

#[derive(Clone, Copy)]
struct Params {
    size: usize,
    n: usize,
    budget: usize,
    cap: usize,
}

type Check = Result<String, String>;

/// One instance per seed, checked in parallel; results come back in seed order.
pub fn run(lemma: Lemma, cli: &Cli) -> Vec<Instance> {
    let p = Params { size: cli.size.max(1), n: cli.n, budget: cli.budget, cap: cli.escalation_cap };
    (cli.seed..cli.seed + cli.seeds)
        .into_par_iter()
        .map(|seed| {
            let (pass, detail) = match check(lemma, p, seed) {
                Ok(d) => (true, d),
                Err(e) => (false, format!("error={e:?}")),
            };
            Instance { seed, pass, detail }
        })
        .collect()
}

fn graph(p: Params, seed: u64, parity: Parity, sparse: bool) -> Result<Arc<WeightedGraph>, String> {
    let mut spec = RandomSpec::new(p.size, seed).edge_prob([0.1, 0.25, 0.45][seed as usize % 3]).parity(parity);
    if sparse {
        spec = spec.zero_prob(0.0).sparse();
    }
    random_connected(&spec).map(Arc::new).map_err(|e| e.to_string())
}

fn oracle(g: &Arc<WeightedGraph>, p: Params) -> Result<OptimalStrategy, String> {
    let solver = Solver::with_budget(g.clone(), p.budget).map_err(|e| e.to_string())?;
    Ok(OptimalStrategy::new(Arc::new(Mutex::new(solver))))
}

/// Plays `c` against the optimal Bob and checks the realized gain against the bound.
fn certified(g: &Arc<WeightedGraph>, c: &CertifiedStrategy, p: Params) -> Result<(Weight, Vec<sharegame_core::game::GameRecord>), String> {
    let mut bob = oracle(g, p)?;
    let rec = play(g, &mut c.clone(), &mut bob).map_err(|e| e.to_string())?;
    if rec.alice_gain < c.bound {
        return Err(format!("gain {} below bound {}", rec.alice_gain, c.bound));
    }
    Ok((rec.alice_gain, vec![rec]))
}

fn audited(g: &WeightedGraph, out: sharegame_core::Result<sharegame_core::decompose::StructuralOutcome>, claim: Claim) -> Check {
    let out = out.map_err(|e| e.to_string())?;
    audit_outcome(g, &out, claim)?;
    Ok(format!("tag={} achieved={} constant={}", out.tag, out.achieved, out.constant))
}

fn check(lemma: Lemma, p: Params, seed: u64) -> Check {
    let e = |x: sharegame_core::Error| x.to_string();
    match lemma {
        Lemma::StructCycle => {
            let g = graph(p, seed, Parity::Any, false)?;
            let h = dfs_cycle(&g).map_err(e)?;
            audit_dfs_cycle(&g, &h)?;
            Ok(format!("vertices={} cycle={}", g.vertex_count(), h.order().len()))
        }
        Lemma::StructHamil1 => {
            let (g, h) = random_hamiltonian(p.size, [0.0, 0.1, 0.3][seed as usize % 3], seed).map_err(e)?;
            audited(&g, hamil_separator(&g, &h), Claim::HamilSeparator(&h))
        }
        Lemma::StructHamil2 => {
            let (g, h) = random_hamiltonian(p.size, [0.0, 0.1, 0.3][seed as usize % 3], seed).map_err(e)?;
            let a = random_connected_subset(&g, seed);
            audited(&g, hamil_grow(&g, &h, &a), Claim::HamilGrow(&h, &a))
        }
        Lemma::StructIndsubdiv => {
            let g = graph(p, seed, Parity::Any, false)?;
            let a = random_connected_subset(&g, seed);
            if a.len() == g.vertex_count() {
                return Ok("skipped=full-set".into());
            }
            let n = p.n.max(1);
            let m = seed as usize % (n * (n - 1) / 2 + 1);
            audited(&g, indsubdiv(&g, &a, n, m), Claim::IndSubdiv(&a, n, m))
        }
        Lemma::StructFull => {
            let g = graph(p, seed, Parity::Any, false)?;
            audited(&g, full_decomposition(&g), Claim::Full)
        }
        Lemma::StructSubdiv => {
            let g = graph(p, seed, Parity::Any, false)?;
            audited(&g, subdiv_decomposition(&g, p.n), Claim::Subdiv(p.n))
        }
        Lemma::StratComp => {
            let g = graph(p, seed, Parity::Odd, false)?;
            let mut state = GameState::new(g.clone());
            let steps = 2 * (seed as usize % (g.vertex_count() / 2 + 1));
            let mut walker = RandomStrategy::new(seed);
            for _ in 0..steps {
                let v = walker.choose_move(&state).map_err(e)?;
                state = state.apply_move(v).map_err(e)?;
            }
            let c = strat_comp(&state).map_err(e)?;
            let future = Solver::with_budget(g.clone(), p.budget).and_then(|mut s| s.future_value(state.taken())).map_err(e)?;
            if future < c.bound {
                return Err(format!("future {future} below bound {}", c.bound));
            }
            Ok(format!("taken={} bound={} future={future}", state.taken().len(), c.bound))
        }
        Lemma::StratCompR => {
            let g = graph(p, seed, Parity::Odd, true)?;
            let q = shallow_quotient(&g).map_err(e)?;
            let s_r = random_connected_subset(&q.graph, seed);
            let c = strat_comp_r(&g, &q, &s_r).map_err(e)?;
            let (gain, _) = certified(&g, &c, p)?;
            Ok(format!("blocks={} bound={} realized={gain}", s_r.len(), c.bound))
        }
        Lemma::StratCycleR => {
            let hubs = 1 + seed as usize % (p.size / 2).max(1);
            let (g, leaves) = random_ring_of_stars(hubs, p.size.max(2 * hubs), seed).map_err(e)?;
            let g = Arc::new(g);
            let q = shallow_quotient(&g).map_err(e)?;
            let s_r = q.block_ids_of(&VertexSet::from_ids(g.vertex_count(), 0..hubs));
            let c = strat_cycle_r(&g, &q, &s_r).map_err(e)?;
            let (gain, recs) = certified(&g, &c, p)?;
            let w: Weight = leaves.iter().map(|&v| g.weight(v)).sum();
            if gain.mul_int(6) < w {
                return Err(format!("gain {gain} below a sixth of {w}"));
            }
            if let Provenance::CycleR(plan) = &c.provenance {
                check_cycle_plan(&g, plan, &recs[0])?;
            }
            Ok(format!("hubs={hubs} bound={} realized={gain} weight={w}", c.bound))
        }
        Lemma::StratLegal => {
            let g = graph(Params { size: p.size.max(2), ..p }, seed, Parity::Any, false)?;
            let i = distinguishing_coloring(&arrangeable_ordering(&g)).heaviest_class(&g);
            let ctx = improve_ordering(&g, build_legal_ordering(&g, &i).map_err(e)?);
            let c = strat_legal(&g, &ctx).map_err(e)?;
            let (gain, recs) = certified(&g, &c, p)?;
            check_charging(&g, &ctx, &recs[0])?;
            Ok(format!("bound={} realized={gain}", c.bound))
        }
        Lemma::StratSparse => {
            let g = graph(p, seed, Parity::Odd, true)?;
            let c = strat_sparse(&g, p.n, p.cap).map_err(e)?;
            let floor = c.constant * g.total_weight();
            if c.bound < floor {
                return Err(format!("bound {} below {floor}", c.bound));
            }
            let (gain, _) = certified(&g, &c, p)?;
            Ok(format!("bound={} realized={gain} constant={}", c.bound, c.constant))
        }
        Lemma::Master => {
            let g = graph(p, seed, Parity::Odd, false)?;
            let c = master_strategy(&g, p.n, p.cap).map_err(e)?;
            let floor = c.constant * g.total_weight();
            if c.bound < floor {
                return Err(format!("bound {} below {floor}", c.bound));
            }
            let (gain, _) = certified(&g, &c, p)?;
            Ok(format!("via={} bound={} realized={gain} constant={}", c.provenance.leaf().lemma(), c.bound, c.constant))
        }
        Lemma::Observation => {
            let g = graph(p, seed, Parity::Any, false)?;
            let og = arrangeable_ordering(&g);
            if !observation_check(&og) {
                return Err("ordering bound violated".into());
            }
            Ok(format!("measuredP={}", og.measured_p()))
        }
        Lemma::Dichotomy => {
            let g = graph(p, seed, Parity::Any, false)?;
            let d = sparse_or_legal(&g).map_err(e)?;
            if !d.meets_claim() {
                return Err(format!("{d}"));
            }
            Ok(format!("branch={} weight={} measuredP={}", d.branch_name(), d.weight, d.measured_p))
        }
    }
}
