//! Acceptance criteria 1-10. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any failure.

use std::collections::VecDeque;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharegame_core::audit::{audit_dfs_cycle, audit_outcome, Claim};
use sharegame_core::decompose::{dfs_cycle, full_decomposition, hamil_grow, hamil_separator, indsubdiv, subdiv_decomposition};
use sharegame_core::game::{game_value, play, GameRecord, OptimalStrategy, Solver};
use sharegame_core::generate::{
    hedgehog, odd_construction, random_connected, random_ring_of_stars, subdivide_even, Parity, RandomSpec, Spine,
};
use sharegame_core::graph::{find_subdivision, shallow_quotient, DEFAULT_SUBDIVISION_BUDGET};
use sharegame_core::select::{arrangeable_ordering, build_legal_ordering, distinguishing_coloring, improve_ordering};
use sharegame_core::strategist::{check_charging, check_cycle_plan, master_strategy, strat_cycle_r, strat_legal, Provenance, DEFAULT_ESCALATION_CAP};
use sharegame_core::{CycleCertificate, VertexId, VertexSet, Weight, WeightedGraph};

struct Outcome {
    checked: usize,
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checked: 0, failures: Vec::new(), note: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }
}

// plain recomputations, independent of the library's graph routines

fn adjacency(g: &WeightedGraph) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Total weight of `inside` minus its heaviest component.
fn plain_w_star(g: &WeightedGraph, adj: &[Vec<VertexId>], inside: &[bool]) -> Weight {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut total = Weight::ZERO;
    let mut heaviest = Weight::ZERO;
    for s in 0..n {
        if !inside[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = Weight::ZERO;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            comp += g.weight(x);
            for &y in &adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        total += comp;
        heaviest = heaviest.max(comp);
    }
    total.saturating_sub(heaviest)
}

fn plain_connected(adj: &[Vec<VertexId>], inside: &[bool]) -> bool {
    let Some(s) = inside.iter().position(|&b| b) else { return true };
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if inside[y] && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..adj.len()).all(|v| !inside[v] || seen[v])
}

/// Positive-weight vertices pairwise at distance at least 3.
fn distance_three(g: &WeightedGraph, adj: &[Vec<VertexId>]) -> bool {
    let positive: Vec<VertexId> = g.vertices().filter(|&v| g.weight(v).is_positive()).collect();
    positive.iter().all(|&s| {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        positive.iter().all(|&t| t == s || dist[t] >= 3)
    })
}

fn oracle_vs_oracle(g: &Arc<WeightedGraph>) -> Result<(Weight, Weight), String> {
    let value = game_value(g).map_err(|e| e.to_string())?;
    let mut a = OptimalStrategy::for_graph(g).map_err(|e| e.to_string())?;
    let mut b = OptimalStrategy::for_graph(g).map_err(|e| e.to_string())?;
    let rec = play(g, &mut a, &mut b).map_err(|e| e.to_string())?;
    Ok((value, rec.alice_gain))
}

fn against_oracle(g: &Arc<WeightedGraph>, alice: &mut dyn sharegame_core::game::Strategy) -> Result<GameRecord, String> {
    let mut bob = OptimalStrategy::for_graph(g).map_err(|e| e.to_string())?;
    play(g, alice, &mut bob).map_err(|e| e.to_string())
}

// instance families shared between criteria

fn criterion_one_instance() -> Arc<WeightedGraph> {
    Arc::new(odd_construction(3).unwrap())
}

fn criterion_two_instances() -> Vec<(String, Arc<WeightedGraph>)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for spine in [Spine::Path, Spine::Star] {
            out.push((format!("G_{n} {spine:?}"), Arc::new(hedgehog(n, spine).unwrap())));
        }
    }
    out
}

/// Sparsely weighted graphs on at most 9 vertices with a zero-zero edge,
/// paired with that edge subdivided twice.
fn criterion_three_instances(count: usize) -> Vec<(u64, Arc<WeightedGraph>, Arc<WeightedGraph>)> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let size = 2 + (seed as usize % 8);
        let spec = RandomSpec::new(size, seed).edge_prob([0.1, 0.25, 0.45][seed as usize % 3]).zero_prob(0.1).sparse();
        let g = random_connected(&spec).unwrap();
        if !g.total_weight().is_positive() {
            continue;
        }
        let Some(e) = g.edges().find(|&(u, v)| g.weight(u).is_zero() && g.weight(v).is_zero()) else { continue };
        let h = subdivide_even(&g, &[(e, 2)]).unwrap();
        out.push((seed, Arc::new(g), Arc::new(h)));
    }
    out
}

fn c1() -> Outcome {
    let mut o = Outcome::new();
    let g = criterion_one_instance();
    let start = Instant::now();
    let value = Solver::new(g.clone()).and_then(|mut s| s.game_value());
    let elapsed = start.elapsed();
    match value {
        Ok(v) => o.check(v == Weight::ONE, || format!("H_3 value {v}")),
        Err(e) => o.fail(format!("solver: {e}")),
    }
    o.check(g.vertex_count() == 13 && g.total_weight() == Weight::int(3), || "H_3 shape".into());
    o.check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"));
    o.note = format!("H_3 solved in {} ms", elapsed.as_millis());
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    for (name, g) in criterion_two_instances() {
        match game_value(&g) {
            Ok(v) => o.check(v == Weight::ONE, || format!("{name}: value {v}")),
            Err(e) => o.fail(format!("{name}: {e}")),
        }
    }
    o.note = "n = 2..5, path and star spines".into();
    o
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    for (seed, g, h) in criterion_three_instances(60) {
        let adj = adjacency(&g);
        o.check(distance_three(&g, &adj), || format!("seed {seed}: hypothesis not met"));
        o.check(g.vertex_count() <= 9, || format!("seed {seed}: too large"));
        match (game_value(&g), game_value(&h)) {
            (Ok(a), Ok(b)) => o.check(a == b, || format!("seed {seed}: {a} before, {b} after")),
            (a, b) => o.fail(format!("seed {seed}: {a:?} {b:?}")),
        }
    }
    o.note = "60 graphs".into();
    o
}

fn c4() -> Outcome {
    let mut o = Outcome::new();
    let mut positions = 0;
    for seed in 0..220u64 {
        let size = [1, 3, 5, 7][seed as usize % 4];
        let spec = RandomSpec::new(size, seed).edge_prob([0.1, 0.3, 0.6][seed as usize % 3]).parity(Parity::Odd);
        let g = Arc::new(random_connected(&spec).unwrap());
        let n = g.vertex_count();
        let adj = adjacency(&g);
        let mut solver = Solver::new(g.clone()).unwrap();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            if !plain_connected(&adj, &inside) {
                continue;
            }
            let rest: Vec<bool> = inside.iter().map(|b| !b).collect();
            let bound = plain_w_star(&g, &adj, &rest).half();
            let t = VertexSet::from_ids(n, (0..n).filter(|&v| inside[v]));
            positions += 1;
            match solver.future_value(&t) {
                Ok(v) => o.check(v >= bound, || format!("seed {seed} T={:?}: {v} < {bound}", t.to_vec())),
                Err(e) => o.fail(format!("seed {seed}: {e}")),
            }
        }
    }
    o.note = format!("220 graphs, {positions} taken sets");
    o
}

fn random_connected_subset(g: &WeightedGraph, rng: &mut ChaCha8Rng) -> VertexSet {
    let n = g.vertex_count();
    let mut a = VertexSet::singleton(n, rng.gen_range(0..n));
    let target = rng.gen_range(1..=n);
    while a.len() < target {
        let frontier = g.set_neighborhood(&a).to_vec();
        if frontier.is_empty() {
            break;
        }
        a.insert(frontier[rng.gen_range(0..frontier.len())]);
    }
    a
}

/// A random Hamiltonian cycle on `0..n` plus random chords.
fn hamiltonian(seed: u64) -> (WeightedGraph, CycleCertificate) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=14);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut edges = Vec::new();
    if n >= 2 {
        for i in 0..n {
            let (a, b) = (order[i], order[(i + 1) % n]);
            let e = (a.min(b), a.max(b));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    let p = [0.0, 0.1, 0.3, 0.7][seed as usize % 4];
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let w: Vec<u64> = (0..n).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..=9) }).collect();
    (WeightedGraph::from_int_weights(&w, &edges).unwrap(), CycleCertificate::new(order).unwrap())
}

fn c5() -> Outcome {
    let mut o = Outcome::new();
    let audit = |o: &mut Outcome, label: String, r: Result<(), String>| o.check(r.is_ok(), || format!("{label}: {}", r.unwrap_err()));
    for seed in 0..600u64 {
        let size = 1 + (seed as usize % 14);
        let spec = RandomSpec::new(size, seed).edge_prob([0.05, 0.15, 0.3, 0.6][seed as usize % 4]).zero_prob(0.3);
        let g = random_connected(&spec).unwrap();
        match dfs_cycle(&g) {
            Ok(h) => audit(&mut o, format!("seed {seed} dfs-cycle"), audit_dfs_cycle(&g, &h)),
            Err(e) => o.fail(format!("seed {seed} dfs-cycle: {e}")),
        }
        match full_decomposition(&g) {
            Ok(out) => audit(&mut o, format!("seed {seed} full"), audit_outcome(&g, &out, Claim::Full)),
            Err(e) => o.fail(format!("seed {seed} full: {e}")),
        }
        for n in 2..=4 {
            match subdiv_decomposition(&g, n) {
                Ok(out) => audit(&mut o, format!("seed {seed} subdiv {n}"), audit_outcome(&g, &out, Claim::Subdiv(n))),
                Err(e) => o.fail(format!("seed {seed} subdiv {n}: {e}")),
            }
        }
    }
    for seed in 0..600u64 {
        let (g, h) = hamiltonian(seed);
        let n = g.vertex_count();
        match hamil_separator(&g, &h) {
            Ok(out) => audit(&mut o, format!("seed {seed} separator"), audit_outcome(&g, &out, Claim::HamilSeparator(&h))),
            Err(e) => o.fail(format!("seed {seed} separator: {e}")),
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let a = random_connected_subset(&g, &mut rng);
        match hamil_grow(&g, &h, &a) {
            Ok(out) => audit(&mut o, format!("seed {seed} grow"), audit_outcome(&g, &out, Claim::HamilGrow(&h, &a))),
            Err(e) => o.fail(format!("seed {seed} grow: {e}")),
        }
        if a.len() < n {
            for k in 1..=4 {
                for m in 0..=k * (k - 1) / 2 {
                    match indsubdiv(&g, &a, k, m) {
                        Ok(out) => audit(&mut o, format!("seed {seed} indsubdiv {k},{m}"), audit_outcome(&g, &out, Claim::IndSubdiv(&a, k, m))),
                        Err(e) => o.fail(format!("seed {seed} indsubdiv {k},{m}: {e}")),
                    }
                }
            }
        }
    }
    o.note = "600 random + 600 Hamiltonian graphs".into();
    o
}

fn c6() -> Outcome {
    let mut o = Outcome::new();
    let mut instances = 0;
    let mut seed = 0u64;
    let mut branches = [0usize; 2];
    let mut positive = 0;
    while instances < 220 {
        seed += 1;
        let size = [3, 5, 7, 9, 11][seed as usize % 5];
        let spec = RandomSpec::new(size, seed).edge_prob([0.05, 0.12, 0.2][seed as usize % 3]).zero_prob(0.3).parity(Parity::Odd);
        let g = Arc::new(random_connected(&spec).unwrap());
        if g.vertex_count() > 11 || !matches!(find_subdivision(&g, 4, DEFAULT_SUBDIVISION_BUDGET), Ok(None)) {
            continue;
        }
        instances += 1;
        let c = match master_strategy(&g, 4, DEFAULT_ESCALATION_CAP) {
            Ok(c) => c,
            Err(e) => {
                o.fail(format!("seed {seed}: {e}"));
                continue;
            }
        };
        if let Provenance::Master { dichotomy, .. } = &c.provenance {
            branches[usize::from(dichotomy.branch_name() != "sparse")] += 1;
        }
        let floor = c.constant * g.total_weight();
        positive += usize::from(c.constant.is_positive());
        o.check(c.bound >= floor, || format!("seed {seed}: bound {} below {floor}", c.bound));
        match against_oracle(&g, &mut c.clone()) {
            Ok(rec) => o.check(rec.alice_gain >= c.bound, || format!("seed {seed}: gain {} < bound {}", rec.alice_gain, c.bound)),
            Err(e) => o.fail(format!("seed {seed}: {e}")),
        }
    }
    o.note = format!(
        "{instances} graphs without a K_4 subdivision ({} sparse, {} legal, {positive} with a positive constant)",
        branches[0], branches[1]
    );
    o
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    for seed in 0..120u64 {
        let hubs = 1 + (seed as usize % 6);
        let (g, leaves) = random_ring_of_stars(hubs, 13, seed).unwrap();
        o.check(g.vertex_count() % 2 == 1 && g.vertex_count() <= 13, || format!("seed {seed}: bad size"));
        o.check(distance_three(&g, &adjacency(&g)), || format!("seed {seed}: weights not sparse"));
        let g = Arc::new(g);
        let q = shallow_quotient(&g).unwrap();
        let s_r = q.block_ids_of(&VertexSet::from_ids(g.vertex_count(), 0..hubs));
        let w_s: Weight = leaves.iter().map(|&v| g.weight(v)).sum();
        let c = match strat_cycle_r(&g, &q, &s_r) {
            Ok(c) => c,
            Err(e) => {
                o.fail(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let Provenance::CycleR(plan) = &c.provenance else { unreachable!() };
        match against_oracle(&g, &mut c.clone()) {
            Ok(rec) => {
                o.check(rec.alice_gain.mul_int(6) >= w_s, || format!("seed {seed}: gain {} vs w(S_R) {w_s}", rec.alice_gain));
                o.check(rec.alice_gain >= c.bound, || format!("seed {seed}: gain below bound {}", c.bound));
                let plan_ok = check_cycle_plan(&g, plan, &rec);
                o.check(plan_ok.is_ok(), || format!("seed {seed}: {}", plan_ok.unwrap_err()));
            }
            Err(e) => o.fail(format!("seed {seed}: {e}")),
        }
    }
    o.note = "120 rings with 1..6 hubs".into();
    o
}

/// Greedy maximal independent set over a seeded random order.
fn random_independent(g: &WeightedGraph, seed: u64) -> VertexSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = g.vertices().collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut i = g.empty_set();
    for v in order {
        if !g.neighbors(v).intersects(&i) && rng.gen_bool(0.8) {
            i.insert(v);
        }
    }
    i
}

fn c8() -> Outcome {
    let mut o = Outcome::new();
    let mut instances = 0;
    for seed in 0..160u64 {
        let size = 2 + (seed as usize % 10);
        let spec = RandomSpec::new(size, seed).edge_prob([0.05, 0.2, 0.4][seed as usize % 3]).zero_prob(0.2);
        let g = Arc::new(random_connected(&spec).unwrap());
        if g.vertex_count() < 2 {
            continue;
        }
        let i = if seed % 2 == 0 {
            distinguishing_coloring(&arrangeable_ordering(&g)).heaviest_class(&g)
        } else {
            random_independent(&g, seed)
        };
        if i.len() == g.vertex_count() {
            continue;
        }
        instances += 1;
        let ctx = match build_legal_ordering(&g, &i) {
            Ok(ctx) => improve_ordering(&g, ctx),
            Err(e) => {
                o.fail(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let c = strat_legal(&g, &ctx).unwrap();
        let bound = ctx.residual_weight().half();
        o.check(c.bound == bound, || format!("seed {seed}: bound mismatch"));
        match against_oracle(&g, &mut c.clone()) {
            Ok(rec) => {
                o.check(rec.alice_gain >= bound, || format!("seed {seed}: gain {} < {bound}", rec.alice_gain));
                let charged = check_charging(&g, &ctx, &rec);
                o.check(charged.is_ok(), || format!("seed {seed}: {}", charged.unwrap_err()));
            }
            Err(e) => o.fail(format!("seed {seed}: {e}")),
        }
    }
    o.note = format!("{instances} instances");
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    for seed in 0..500u64 {
        let size = 1 + (seed as usize % 14);
        let spec = RandomSpec::new(size, seed).edge_prob([0.1, 0.25, 0.5][seed as usize % 3]);
        let g = random_connected(&spec).unwrap();
        let og = arrangeable_ordering(&g);
        let adj = adjacency(&g);
        let pi = og.pi();
        let mut pos = vec![0; pi.len()];
        for (k, &v) in pi.iter().enumerate() {
            pos[v] = k;
        }
        let pos = &pos;
        let adj = &adj;
        let back = move |x: VertexId| adj[x].iter().copied().filter(move |&y| pos[y] < pos[x]);
        let p = g
            .vertices()
            .map(|v| {
                let mut s: Vec<VertexId> =
                    adj[v].iter().filter(|&&y| pos[y] > pos[v]).flat_map(|&y| back(y)).filter(|&x| pos[x] < pos[v]).collect();
                s.sort_unstable();
                s.dedup();
                s.len()
            })
            .max()
            .unwrap_or(0);
        o.check(p == og.measured_p(), || format!("seed {seed}: measuredP {} vs {p}", og.measured_p()));
        for v in g.vertices() {
            let b = back(v).count();
            let mut conflicts: Vec<VertexId> = std::iter::once(v)
                .chain(adj[v].iter().copied())
                .flat_map(|y| back(y))
                .filter(|&x| pos[x] < pos[v])
                .collect();
            conflicts.sort_unstable();
            conflicts.dedup();
            o.check(b <= p + 1, || format!("seed {seed} v={v}: {b} back neighbors, p={p}"));
            o.check(conflicts.len() <= p * p + 4 * p + 2, || format!("seed {seed} v={v}: {} conflicts, p={p}", conflicts.len()));
        }
    }
    o.note = "500 orderings".into();
    o
}

fn c10() -> Outcome {
    let mut o = Outcome::new();
    let mut all: Vec<(String, Arc<WeightedGraph>)> = vec![("H_3".into(), criterion_one_instance())];
    all.extend(criterion_two_instances());
    for (seed, g, h) in criterion_three_instances(60) {
        all.push((format!("seed {seed}"), g));
        all.push((format!("seed {seed} subdivided"), h));
    }
    let count = all.len();
    for (name, g) in all {
        match oracle_vs_oracle(&g) {
            Ok((value, gain)) => o.check(value == gain, || format!("{name}: value {value}, play {gain}")),
            Err(e) => o.fail(format!("{name}: {e}")),
        }
    }
    o.note = format!("{count} instances");
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("H_3 value", c1),
        ("hedgehog values", c2),
        ("even subdivision keeps the value", c3),
        ("strat-comp bound", c4),
        ("decomposer audits", c5),
        ("master strategy certification", c6),
        ("strat-cycle-R on rings of stars", c7),
        ("strat-legal and charging", c8),
        ("ordering bounds", c9),
        ("optimal self-play", c10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name}: {} checks, {} violations; {} [{:.1}s]",
            k + 1,
            o.checked,
            o.failures.len(),
            o.note,
            start.elapsed().as_secs_f64()
        );
        for f in o.failures.iter().take(5) {
            println!("    {f}");
        }
        if !o.failures.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
