mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::{Arc, Mutex};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sharegame_core::decompose::{dfs_cycle, full_decomposition, heaviest_outside, subdiv_decomposition};
use sharegame_core::game::{play, GreedyStrategy, OptimalStrategy, RandomStrategy, Solver, Strategy, DEFAULT_STATE_BUDGET};
use sharegame_core::generate::{
    hedgehog, odd_construction, random_connected, random_ring_of_stars, Parity, RandomSpec, Spine,
};
use sharegame_core::graph::{find_subdivision, DEFAULT_SUBDIVISION_BUDGET};
use sharegame_core::select::sparse_or_legal;
use sharegame_core::strategist::{master_strategy, Provenance, DEFAULT_ESCALATION_CAP};
use sharegame_core::WeightedGraph;

/// Graph sharing game toolkit: exact values, structural decompositions and
/// certified strategies.
#[derive(Parser, Debug)]
#[command(name = "sharegame", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Graph file in the `graph <V> <E>` text format.
    #[arg(long, global = true, env = "SHAREGAME_INPUT")]
    input: Option<PathBuf>,

    /// Forbidden clique size for decompositions and strategies.
    #[arg(long, global = true, env = "SHAREGAME_N", default_value_t = 4)]
    n: usize,

    #[arg(long, global = true, env = "SHAREGAME_SEED", default_value_t = 0)]
    seed: u64,

    /// Number of seeded instances for `verify`.
    #[arg(long, global = true, env = "SHAREGAME_SEEDS", default_value_t = 100)]
    seeds: u64,

    /// Instance size for `generate` and `verify`.
    #[arg(long, global = true, env = "SHAREGAME_SIZE", default_value_t = 9)]
    size: usize,

    /// Solver memo entries.
    #[arg(long, global = true, env = "SHAREGAME_BUDGET", default_value_t = DEFAULT_STATE_BUDGET)]
    budget: usize,

    /// Subdivision search nodes.
    #[arg(long, global = true, env = "SHAREGAME_SEARCH_BUDGET", default_value_t = DEFAULT_SUBDIVISION_BUDGET)]
    search_budget: usize,

    /// Extra clique sizes tried when a subdivision surfaces in the contracted graph.
    #[arg(long, global = true, env = "SHAREGAME_ESCALATION_CAP", default_value_t = DEFAULT_ESCALATION_CAP)]
    escalation_cap: usize,

    /// Write the report (or the generated graph) here instead of stdout.
    #[arg(long, global = true, env = "SHAREGAME_OUT")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Exact game value.
    Value,
    /// Play two strategies against each other and print the move log.
    Play {
        #[arg(long, value_enum, default_value_t = Player::Optimal)]
        alice: Player,
        #[arg(long, value_enum, default_value_t = Player::Optimal)]
        bob: Player,
    },
    /// Structural outcomes of the graph.
    Decompose,
    /// Master strategy against the optimal Bob.
    Certify,
    /// Write a graph from one of the built-in families.
    Generate {
        #[arg(long, value_enum, default_value_t = Family::Random)]
        family: Family,
        #[arg(long, value_enum, default_value_t = ParityArg::Any)]
        parity: ParityArg,
    },
    /// Run a property suite over seeded random instances.
    Verify {
        #[arg(value_enum)]
        lemma: verify::Lemma,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Player {
    Optimal,
    Greedy,
    Random,
    /// Alice only.
    Master,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    HedgehogPath,
    HedgehogStar,
    OddConstruction,
    Random,
    RingOfStars,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Any,
    Odd,
    Even,
}

fn load(cli: &Cli) -> Result<Arc<WeightedGraph>> {
    let path = cli.input.as_ref().context("--input is required for this verb")?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = WeightedGraph::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Arc::new(g))
}

fn oracle(g: &Arc<WeightedGraph>, budget: usize) -> Result<OptimalStrategy> {
    Ok(OptimalStrategy::new(Arc::new(Mutex::new(Solver::with_budget(g.clone(), budget)?))))
}

fn player(cli: &Cli, g: &Arc<WeightedGraph>, kind: Player, seed: u64) -> Result<Box<dyn Strategy>> {
    Ok(match kind {
        Player::Optimal => Box::new(oracle(g, cli.budget)?),
        Player::Greedy => Box::new(GreedyStrategy),
        Player::Random => Box::new(RandomStrategy::new(seed)),
        Player::Master => Box::new(master_strategy(g, cli.n, cli.escalation_cap)?),
    })
}

/// Report lines plus whether every check passed.
fn run(cli: &Cli) -> Result<(Vec<String>, bool)> {
    let mut lines = Vec::new();
    let mut ok = true;
    match &cli.verb {
        Verb::Value => {
            let g = load(cli)?;
            let v = Solver::with_budget(g, cli.budget)?.game_value()?;
            lines.push(format!("value {v}"));
        }
        Verb::Play { alice, bob } => {
            if matches!(bob, Player::Master) {
                bail!("the master strategy plays Alice only");
            }
            let g = load(cli)?;
            let mut a = player(cli, &g, *alice, cli.seed)?;
            let mut b = player(cli, &g, *bob, cli.seed ^ 0xb0b)?;
            let rec = play(&g, a.as_mut(), b.as_mut())?;
            lines.extend(rec.log_lines());
            lines.push(format!("result alice={} bob={}", rec.alice_gain, rec.bob_gain));
        }
        Verb::Decompose => {
            let g = load(cli)?;
            let h = dfs_cycle(&g)?;
            let ids: Vec<String> = h.order().iter().map(|v| v.to_string()).collect();
            lines.push(format!("cycle H={} heaviestOutside={}", ids.join(","), heaviest_outside(&g, &h)));
            lines.push(full_decomposition(&g)?.record());
            let out = subdiv_decomposition(&g, cli.n)?;
            lines.push(out.record());
            if let Some(w) = &out.witness {
                lines.push(format!("witness n={} branches={}", w.pattern_vertex_count(), join(&w.branch)));
            }
            match find_subdivision(&g, cli.n, cli.search_budget)? {
                Some(w) => lines.push(format!("subdivision n={} found=true branches={}", cli.n, join(&w.branch))),
                None => lines.push(format!("subdivision n={} found=false", cli.n)),
            }
            lines.push(sparse_or_legal(&g)?.report());
        }
        Verb::Certify => {
            let g = load(cli)?;
            let c = master_strategy(&g, cli.n, cli.escalation_cap)?;
            let mut bob = oracle(&g, cli.budget)?;
            let rec = play(&g, &mut c.clone(), &mut bob)?;
            if let Provenance::Master { dichotomy, .. } = &c.provenance {
                lines.push(dichotomy.report());
            }
            lines.push(c.report(rec.alice_gain));
            ok = c.bound <= rec.alice_gain;
            lines.push(format!("check name=bound-le-realized status={}", if ok { "pass" } else { "fail" }));
        }
        Verb::Generate { family, parity } => {
            let g = match family {
                Family::HedgehogPath => hedgehog(cli.n, Spine::Path)?,
                Family::HedgehogStar => hedgehog(cli.n, Spine::Star)?,
                Family::OddConstruction => odd_construction(cli.n)?,
                Family::Random => {
                    let parity = match parity {
                        ParityArg::Any => Parity::Any,
                        ParityArg::Odd => Parity::Odd,
                        ParityArg::Even => Parity::Even,
                    };
                    random_connected(&RandomSpec::new(cli.size, cli.seed).parity(parity))?
                }
                Family::RingOfStars => random_ring_of_stars(cli.n, cli.size, cli.seed)?.0,
            };
            lines.extend(g.to_text().lines().map(str::to_owned));
        }
        Verb::Verify { lemma } => {
            let report = verify::run(*lemma, cli);
            ok = report.iter().all(|r| r.pass);
            let passed = report.iter().filter(|r| r.pass).count();
            lines.extend(report.iter().map(|r| r.line(*lemma)));
            lines.push(format!(
                "summary lemma={} passed={passed} total={} status={}",
                lemma.name(),
                report.len(),
                if ok { "pass" } else { "fail" }
            ));
        }
    }
    Ok((lines, ok))
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((lines, ok)) => {
            let mut text = lines.join("\n");
            text.push('\n');
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                }
                None => print!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
