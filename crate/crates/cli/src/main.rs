//! `fnc`: batch front end for sparse Fourier network coordination.
//!
//! Exit status 0 on success, 1 on usage or input errors, 2 when a domain
//! contract is violated (frustration without `--hybrid`, size guards,
//! irreducible ambiguity).

mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use fourier_nc::analytics::{adversary_query_count, dihedral_gate_counts, gate_counts, maxcut_reduce, validation_suite};
use fourier_nc::fourier::{instance_spectra, p_min, spectrum_json};
use fourier_nc::model::{parse_instance, serialize_instance, Assignment, Domain, Graph, NetworkInstance};
use fourier_nc::rng::DEFAULT_SEED;
use fourier_nc::sampler::{coupon_threshold, convergence_experiment, harmonic_number, sample_modes};
use fourier_nc::solver::{brute_force_solve, end_to_end_solve, hybrid_solve, Solution};
use fourier_nc::symmetric::{
    crossovers, distinct_parts_coverage, dmpc_solve, ecc_experiment, fundamental_ineq_check, query_table,
    CharacterTable,
};

use table::{render, Format};

#[derive(Debug, Parser)]
#[command(name = "fnc", version, about = "Sparse Fourier network coordination: spectra, sampling, solving and resource tables")]
struct Cli {
    /// Table format for tabular reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Master seed for every random stream.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for Monte-Carlo stages; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance file and print a JSON run report.
    Solve {
        instance: PathBuf,
        /// Exact cutset enumeration instead of sampling; handles frustration.
        #[arg(long)]
        hybrid: bool,
        /// Compare the result with exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Draw raw measurements and tabulate outcome counts.
    Sample {
        instance: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Mean recovered-mode fraction against measurement count, as CSV.
    Converge {
        instance: PathBuf,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Largest measurement count; defaults to four coupon expectations.
        #[arg(long)]
        max_t: Option<usize>,
        /// Count zero-mode outcomes as measurements.
        #[arg(long)]
        raw: bool,
    },
    /// Gate counts against Grover search; without `--n`, the four complete-graph rows.
    Gates {
        #[arg(long)]
        n: Option<u64>,
        /// Edge count; defaults to the complete graph.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 2)]
        r: u64,
        #[arg(long = "C", default_value_t = 64)]
        cycle: u64,
        /// Add the dihedral per-repetition count.
        #[arg(long)]
        dihedral: bool,
        /// Add classical adversary and Grover query counts.
        #[arg(long)]
        adversary: bool,
    },
    /// Permutation-coordination query counts.
    SkTable {
        /// `a..b` (inclusive) or a comma list.
        #[arg(long, default_value = "3,5,7,10,15")]
        k: String,
        #[arg(long, default_value_t = 10)]
        m: u64,
        #[arg(long, default_value_t = 3)]
        r: u64,
    },
    /// Extremal-class experiment on random sparse class functions.
    Ecc {
        /// `a..b` (inclusive) or a comma list.
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Five-topology validation table at C = 32.
    Validate,
    /// Build the C = 2 instance whose optimum is a maximum cut.
    ReduceMaxcut {
        #[arg(long)]
        nodes: usize,
        /// Comma-separated `i-j` pairs.
        #[arg(long)]
        edges: String,
    },
    /// Per-edge Fourier coefficients of a cyclic instance as JSON.
    Spectrum { instance: PathBuf },
    /// Character table of S_k as integers.
    CharTable {
        #[arg(long)]
        k: usize,
    },
    /// Largest irrep dimension against the abelian index of S_k.
    Abelian {
        #[arg(long, default_value = "3..8")]
        k: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let contract = e.chain().filter_map(|c| c.downcast_ref::<fourier_nc::Error>()).any(|c| c.is_contract_violation());
            ExitCode::from(if contract { 2 } else { 1 })
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().context("thread pool")?;
    }
    let report = match &cli.command {
        Command::Solve { instance, hybrid, oracle } => solve(&load(instance)?, *hybrid, *oracle, cli.seed)?,
        Command::Sample { instance, samples } => sample(&load(instance)?, *samples, cli)?,
        Command::Converge { instance, trials, max_t, raw } => converge(&load(instance)?, *trials, *max_t, *raw, cli)?,
        Command::Gates { n, m, r, cycle, dihedral, adversary } => gates(*n, *m, *r, *cycle, *dihedral, *adversary, cli.format)?,
        Command::SkTable { k, m, r } => sk_table(&parse_ks(k)?, *m, *r, cli.format)?,
        Command::Ecc { k, r, trials } => ecc(&parse_ks(k)?, *r, *trials, cli.seed, cli.format)?,
        Command::Validate => render(&validation_suite(cli.seed)?, cli.format)?,
        Command::ReduceMaxcut { nodes, edges } => serialize_instance(&maxcut_reduce(&parse_graph(*nodes, edges)?)?) + "\n",
        Command::Spectrum { instance } => spectrum_json(&instance_spectra(&load(instance)?)?) + "\n",
        Command::CharTable { k } => char_table(*k, cli.format)?,
        Command::Abelian { k } => {
            let rows = parse_ks(k)?.into_iter().map(fundamental_ineq_check).collect::<fourier_nc::Result<Vec<_>>>()?;
            render(&rows, cli.format)?
        }
    };
    emit(cli.output.as_deref(), &report)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<NetworkInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

/// `a..b` inclusive, or `a,b,c`.
fn parse_ks(spec: &str) -> Result<Vec<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("bad integer `{s}` in `{spec}`"));
    let ks = match spec.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                bail!("empty range `{spec}`");
            }
            (a..=b).collect()
        }
        None => spec.split(',').map(parse).collect::<Result<Vec<_>>>()?,
    };
    Ok(ks)
}

fn parse_graph(nodes: usize, edges: &str) -> Result<Graph> {
    let pairs = edges
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (i, j) = pair.split_once('-').with_context(|| format!("edge `{pair}` is not `i-j`"))?;
            let (i, j): (usize, usize) = (i.trim().parse()?, j.trim().parse()?);
            Ok((i.min(j), i.max(j)))
        })
        .collect::<Result<Vec<(usize, usize)>>>()?;
    Ok(Graph::undirected(nodes, pairs)?)
}

fn assignment_json(a: &Assignment) -> Value {
    match a {
        Assignment::Cyclic(v) => json!(v),
        Assignment::Dihedral(v) => json!(v.iter().map(|g| json!([g.rotation, g.reflection])).collect::<Vec<_>>()),
        Assignment::Symmetric(v) => json!(v.iter().map(|p| p.images().to_vec()).collect::<Vec<_>>()),
    }
}

fn solve(instance: &NetworkInstance, hybrid: bool, oracle: bool, seed: u64) -> Result<String> {
    let exact = |sol: Solution, solver: &str| -> Result<Value> {
        let mut doc = json!({"solver": solver, "cost": sol.cost, "assignment": assignment_json(&sol.assignment)});
        if oracle {
            let best = brute_force_solve(instance).context("oracle")?;
            doc["optimal_cost"] = json!(best.cost);
            doc["optimal"] = json!((sol.cost - best.cost).abs() <= 1e-9 * (1.0 + best.cost.abs()));
        }
        Ok(doc)
    };
    let doc = match instance.domain() {
        Domain::Cyclic(_) if hybrid => exact(hybrid_solve(instance).context("hybrid solve")?, "hybrid")?,
        Domain::Cyclic(_) => {
            let (assignment, mut report) = end_to_end_solve(instance, seed).context("sampling solve")?;
            if oracle {
                report.check_optimal(instance).context("oracle")?;
            }
            let mut doc = serde_json::to_value(&report)?;
            doc["solver"] = json!("sampling");
            doc["assignment"] = assignment_json(&assignment);
            doc
        }
        Domain::Symmetric(_) if hybrid => exact(brute_force_solve(instance).context("exhaustive solve")?, "exhaustive")?,
        Domain::Symmetric(_) => exact(dmpc_solve(instance, None).context("class-minimiser solve")?, "class-minimiser")?,
        Domain::Dihedral(_) => exact(brute_force_solve(instance).context("exhaustive solve")?, "exhaustive")?,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

#[derive(Serialize)]
struct CountRow {
    edge: usize,
    k_i: usize,
    count: usize,
    fraction: f64,
}

fn sample(instance: &NetworkInstance, samples: usize, cli: &Cli) -> Result<String> {
    let batch = sample_modes(instance, samples, cli.seed)?;
    let rows: Vec<CountRow> = batch
        .counts
        .iter()
        .map(|(&(edge, k_i), &count)| CountRow { edge, k_i, count, fraction: count as f64 / batch.total as f64 })
        .collect();
    eprintln!("{} measurements, {} zero-mode outcomes, {} distinct modes", batch.total, batch.zero_count, batch.distinct_modes());
    render(&rows, cli.format)
}

fn converge(instance: &NetworkInstance, trials: usize, max_t: Option<usize>, raw: bool, cli: &Cli) -> Result<String> {
    let s = fourier_nc::fourier::global_modes(instance)?.len();
    if s == 0 {
        bail!("instance has no non-zero modes");
    }
    let max_t = max_t.unwrap_or_else(|| (4.0 * s as f64 * harmonic_number(s)).ceil().max(10.0) as usize);
    let curve = convergence_experiment(instance, max_t, trials, cli.seed, !raw)?;
    let crossing = curve.full_recovery_crossing().map_or("not reached".to_string(), |t| t.to_string());
    let mean = curve.mean_completion().map_or("n/a".to_string(), |m| format!("{m:.2}"));
    let summary = format!(
        "modes s = {s}, p_min = {:.4}, T* = s ln s = {:.2}, full-recovery crossing = {crossing}, mean completion = {mean}",
        p_min(instance)?,
        coupon_threshold(s),
    );
    // the curve owns stdout unless it goes to a file
    if cli.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(curve.to_csv())
}

#[derive(Serialize)]
struct DihedralRow {
    n: u64,
    m: u64,
    r: u64,
    #[serde(rename = "C")]
    cycle: u64,
    cyclic_per_repetition: String,
    dihedral_per_repetition: String,
}

#[derive(Serialize)]
struct AdversaryRow {
    n: u64,
    #[serde(rename = "C")]
    cycle: u64,
    classical_queries: String,
    grover_iterations: String,
}

fn gates(n: Option<u64>, m: Option<u64>, r: u64, cycle: u64, dihedral: bool, adversary: bool, format: Format) -> Result<String> {
    if r == 0 || cycle < 2 {
        bail!("need r ≥ 1 and C ≥ 2");
    }
    let configs: Vec<(u64, u64)> = match n {
        Some(0) => bail!("need n ≥ 1"),
        Some(n) => vec![(n, m.unwrap_or(n * (n - 1) / 2).max(1))],
        None => [10u64, 20, 50, 100].iter().map(|&n| (n, n * (n - 1) / 2)).collect(),
    };
    let reports: Vec<_> = configs.iter().map(|&(n, m)| gate_counts(n, m, r, cycle)).collect();
    let mut out = render(&reports.iter().map(|g| g.row()).collect::<Vec<_>>(), format)?;
    if dihedral {
        let rows: Vec<DihedralRow> = reports
            .iter()
            .map(|g| DihedralRow {
                n: g.n,
                m: g.m,
                r,
                cycle,
                cyclic_per_repetition: g.per_repetition.to_string(),
                dihedral_per_repetition: dihedral_gate_counts(g.n, g.m, r, cycle).to_string(),
            })
            .collect();
        out.push('\n');
        out += &render(&rows, format)?;
    }
    if adversary {
        let rows: Vec<AdversaryRow> = configs
            .iter()
            .map(|&(n, _)| {
                let a = adversary_query_count(n, cycle);
                AdversaryRow { n, cycle, classical_queries: a.classical.to_string(), grover_iterations: a.grover.to_string() }
            })
            .collect();
        out.push('\n');
        out += &render(&rows, format)?;
    }
    if format == Format::Text {
        out.push_str("\nspeedup divides the exact totals before rounding\n");
    }
    Ok(out)
}

fn sk_table(ks: &[usize], m: u64, r: u64, format: Format) -> Result<String> {
    let rows = query_table(ks, m, r)?;
    let mut out = render(&rows.iter().map(|q| q.printable()).collect::<Vec<_>>(), format)?;
    if format == Format::Text {
        for (a, b) in crossovers(&rows) {
            out.push_str(&format!("\ncrossover between k = {a} and k = {b}"));
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
struct EccRow {
    k: usize,
    r: usize,
    trials: usize,
    outside: usize,
    fraction_outside: f64,
    max_distinct_parts: usize,
    coverage_sqrt_k: f64,
}

fn ecc(ks: &[usize], r: usize, trials: usize, seed: u64, format: Format) -> Result<String> {
    let rows = ks
        .iter()
        .map(|&k| {
            let s = ecc_experiment(k, r, trials, seed)?;
            let threshold = (1..=k).find(|t| t * t >= k).unwrap_or(k);
            Ok(EccRow {
                k,
                r,
                trials,
                outside: s.outside,
                fraction_outside: s.fraction_outside,
                max_distinct_parts: s.max_distinct_parts,
                coverage_sqrt_k: distinct_parts_coverage(k, threshold)?,
            })
        })
        .collect::<fourier_nc::Result<Vec<_>>>()?;
    render(&rows, format)
}

fn char_table(k: usize, format: Format) -> Result<String> {
    let csv = CharacterTable::new(k)?.to_csv();
    match format {
        Format::Csv => Ok(csv),
        Format::Text => table::align(&csv),
    }
}
