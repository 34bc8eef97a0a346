use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use surjhom::cut::{are_factor_roots, enumerate_factor_cuts, find_factor_cut};
use surjhom::dichotomy::classify;
use surjhom::gadgets::{
    analyze_target, build_factorcut_case1, build_factorcut_case2, build_surjective_instance, expected_surjective_size,
    lift_target, GadgetInstance,
};
use surjhom::generate::random_connected_graph;
use surjhom::graph::{parse_graph, serialize_graph, Graph};
use surjhom::hom::{solve_with, HomVariant, SolveOptions, SolveOutcome};
use surjhom::verify::{run_suite, run_trial, Outcome, Suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "surjhom", version, about = "Workbench for surjective graph homomorphism problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a homomorphism variant from G to H.
    Solve(SolveArgs),
    /// Find an (i,j)-factor cut.
    Cut(CutArgs),
    /// Build a reduction instance.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Complexity verdict for surjective H-colouring.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run seeded property suites.
    Verify(VerifyArgs),
    /// Print a graph file in canonical form.
    Fmt { file: PathBuf },
    /// Print a seeded random connected graph.
    Gen {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantName {
    Hom,
    Surj,
    Comp,
    Retr,
    List,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    variant: VariantName,
    #[arg(short = 'G')]
    g: PathBuf,
    #[arg(short = 'H')]
    h: PathBuf,
    /// JSON object mapping G ids to arrays of H ids (1-based). Vertices
    /// without an entry may take any value.
    #[arg(long)]
    lists: Option<PathBuf>,
    /// JSON object mapping G ids to the H id they must keep (1-based).
    #[arg(long)]
    anchors: Option<PathBuf>,
    /// Write the witness here instead of stdout.
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Accept looped vertices in G; each must map to a looped vertex.
    #[arg(long)]
    allow_loops: bool,
}

#[derive(Args)]
struct CutArgs {
    #[arg(short = 'G')]
    g: PathBuf,
    #[arg(long, default_value_t = 1)]
    i: usize,
    #[arg(long, default_value_t = 1)]
    j: usize,
    /// Also report whether `s,t` are factor roots.
    #[arg(long, value_parser = parse_pair)]
    roots: Option<(usize, usize)>,
    /// Print every cut (small graphs only).
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Matching cut with roots to (i,j)-factor cut with roots.
    Factorcut {
        #[arg(short = 'G')]
        g: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_parser = parse_pair)]
        roots: (usize, usize),
        /// Output prefix; writes `<out>.graph` and `<out>.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Factor cut with roots to surjective H-colouring.
    Shc {
        #[arg(short = 'G')]
        g: PathBuf,
        #[arg(short = 'H')]
        h: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        roots: (usize, usize),
        /// Add reflexive twins to the target and grow the cliques to match.
        #[arg(long, value_parser = parse_pair0)]
        lift: Option<(usize, usize)>,
        /// Output prefix; writes `<out>.graph`, `<out>.json` and, with
        /// `--lift`, `<out>.target`.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma1, lemma2, implications, thm1, thm2, lemma4, lift, classifier or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Also write the reports as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Replay one trial from the seed printed next to a failure.
    #[arg(long, requires = "trial")]
    replay: Option<u64>,
    #[arg(long)]
    trial: Option<usize>,
}

/// `s,t` with 1-based ids, returned 0-based.
fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = parse_pair0(s)?;
    if a == 0 || b == 0 {
        return Err("vertex ids are 1-based".into());
    }
    Ok((a - 1, b - 1))
}

fn parse_pair0(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two comma-separated numbers")?;
    let a = a.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok((a, b))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_json(path: &Path) -> Result<BTreeMap<String, Value>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn vertex_key(key: &str, n: usize, what: &str) -> Result<usize> {
    let v: usize = key.parse().map_err(|_| anyhow!("{what}: key '{key}' is not a vertex id"))?;
    if v == 0 || v > n {
        bail!("{what}: vertex {v} out of range 1..={n}");
    }
    Ok(v - 1)
}

fn target_id(value: &Value, n: usize, what: &str) -> Result<usize> {
    let x = value.as_u64().ok_or_else(|| anyhow!("{what}: expected a vertex id, got {value}"))? as usize;
    if x == 0 || x > n {
        bail!("{what}: target vertex {x} out of range 1..={n}");
    }
    Ok(x - 1)
}

fn build_variant(args: &SolveArgs, g: &Graph, h: &Graph) -> Result<HomVariant> {
    if args.lists.is_some() && !matches!(args.variant, VariantName::List) {
        bail!("--lists only applies to --variant list");
    }
    if args.anchors.is_some() && !matches!(args.variant, VariantName::Retr) {
        bail!("--anchors only applies to --variant retr");
    }
    Ok(match args.variant {
        VariantName::Hom => HomVariant::Plain,
        VariantName::Surj => HomVariant::Surjective,
        VariantName::Comp => HomVariant::Compaction,
        VariantName::Retr => {
            let path = args.anchors.as_ref().ok_or_else(|| anyhow!("--variant retr needs --anchors"))?;
            let mut anchors = Vec::new();
            for (k, v) in read_json(path)? {
                anchors.push((vertex_key(&k, g.n(), "anchors")?, target_id(&v, h.n(), "anchors")?));
            }
            anchors.sort_unstable();
            HomVariant::Retraction { anchors }
        }
        VariantName::List => {
            let path = args.lists.as_ref().ok_or_else(|| anyhow!("--variant list needs --lists"))?;
            let mut lists: Vec<Vec<usize>> = vec![(0..h.n()).collect(); g.n()];
            for (k, v) in read_json(path)? {
                let u = vertex_key(&k, g.n(), "lists")?;
                let items = v.as_array().ok_or_else(|| anyhow!("lists: entry for {k} is not an array"))?;
                lists[u] = items.iter().map(|x| target_id(x, h.n(), "lists")).collect::<Result<_>>()?;
            }
            HomVariant::List { lists }
        }
    })
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let g = read_graph(&args.g)?;
    let h = read_graph(&args.h)?;
    let variant = build_variant(&args, &g, &h)?;
    let options = SolveOptions { allow_reflexive_input: args.allow_loops };
    match solve_with(&g, &h, &variant, &options)? {
        SolveOutcome::Found(f) => {
            println!("FOUND {}", variant.name());
            match &args.witness {
                Some(path) => fs::write(path, f.to_text()).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{}", f.to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        SolveOutcome::Infeasible(why) => {
            println!("NONE {}: {why}", variant.name());
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_cut(args: CutArgs) -> Result<ExitCode> {
    let g = read_graph(&args.g)?;
    if let Some((s, t)) = args.roots {
        let roots = are_factor_roots(&g, args.i, args.j, s, t)?;
        println!("ROOTS {} {} {}", s + 1, t + 1, if roots { "yes" } else { "no" });
    }
    if args.all {
        let cuts = enumerate_factor_cuts(&g, args.i, args.j)?;
        println!("CUTS {}", cuts.len());
        for c in &cuts {
            print!("{}", c.to_text());
        }
        return Ok(if cuts.is_empty() { ExitCode::from(1) } else { ExitCode::SUCCESS });
    }
    match find_factor_cut(&g, args.i, args.j)? {
        Some(c) => {
            println!("FOUND ({},{})-factor cut", args.i, args.j);
            print!("{}", c.to_text());
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("NONE");
            Ok(ExitCode::from(1))
        }
    }
}

fn write_instance(out: &Path, inst: &GadgetInstance) -> Result<()> {
    let graph_path = out.with_extension("graph");
    let json_path = out.with_extension("json");
    fs::write(&graph_path, serialize_graph(&inst.graph)).with_context(|| format!("writing {}", graph_path.display()))?;
    let sidecar = serde_json::to_string_pretty(&inst.sidecar_json())?;
    fs::write(&json_path, sidecar + "\n").with_context(|| format!("writing {}", json_path.display()))?;
    println!("wrote {} and {}", graph_path.display(), json_path.display());
    Ok(())
}

fn cmd_reduce(cmd: ReduceCommand) -> Result<ExitCode> {
    match cmd {
        ReduceCommand::Factorcut { g, i, j, roots: (s, t), out } => {
            let g = read_graph(&g)?;
            let inst = if i == 1 { build_factorcut_case1(&g, s, t, j)? } else { build_factorcut_case2(&g, s, t, i, j)? };
            let n = g.n();
            match i {
                1 if j == 1 => println!("case pass-through: n={n} vertices={}", inst.graph.n()),
                1 => {
                    let k = ((n - 1) * (j - 1)).max(1 + j);
                    println!("case 1: n={n} k=max((n-1)(j-1), 1+j)={k} vertices=n+k={}", inst.graph.n());
                }
                _ => {
                    let k = ((n - 1) * (j - 1)).max(i + j);
                    println!("case 2: n={n} k=max((n-1)(j-1), i+j)={k} vertices=n+2k={}", inst.graph.n());
                }
            }
            write_instance(&out, &inst)?;
        }
        ReduceCommand::Shc { g, h, roots: (s, t), lift, out } => {
            let g = read_graph(&g)?;
            let h = read_graph(&h)?;
            let ta = analyze_target(&h)?;
            let (i, j) = lift.unwrap_or((0, 0));
            let size = ta.omega + i.max(j);
            let inst = build_surjective_instance(&ta, &g, s, t, Some(size))?;
            println!(
                "ell={} omega={} r_p={} r_q={} clique_size={size} n={} m={} |V_H|={}",
                ta.ell,
                ta.omega,
                ta.r_p,
                ta.r_q,
                g.n(),
                g.edge_count(),
                h.n()
            );
            println!(
                "vertices={} formula=size*n+2(ell-1)*m+|V_H|-2={}",
                inst.graph.n(),
                expected_surjective_size(&ta, g.n(), g.edge_count(), size)
            );
            write_instance(&out, &inst)?;
            if lift.is_some() {
                let lifted = lift_target(&ta, i, j);
                let path = out.with_extension("target");
                fs::write(&path, serialize_graph(&lifted)).with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {} ({} vertices)", path.display(), lifted.n());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(files: Vec<PathBuf>) -> Result<ExitCode> {
    let batch = files.len() > 1;
    for path in files {
        let h = read_graph(&path)?;
        if batch {
            println!("FILE {}", path.display());
        }
        print!("{}", classify(&h).to_text());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>().map_err(|e| anyhow!(e))?]
    };
    if let Some(seed) = args.replay {
        let [suite] = suites[..] else { bail!("--replay needs a single --suite") };
        let index = args.trial.expect("clap enforces --trial");
        let (outcome, counters) = run_trial(suite, index, seed, args.max_n.unwrap_or(suite.default_max_n()));
        for (k, v) in counters {
            println!("counter {k}={v}");
        }
        return Ok(match outcome {
            Outcome::Pass => {
                println!("PASS");
                ExitCode::SUCCESS
            }
            Outcome::Skip(why) => {
                println!("SKIP {why}");
                ExitCode::SUCCESS
            }
            Outcome::Fail { message, instance } => {
                println!("FAIL {message}\n{instance}");
                ExitCode::from(1)
            }
        });
    }
    let mut reports = Vec::new();
    for suite in suites {
        let mut config = VerifyConfig::new(suite, args.seed);
        if let Some(t) = args.trials {
            config.trials = t;
        }
        if let Some(k) = args.max_n {
            config.max_n = k;
        }
        let report = run_suite(&config);
        print!("{}", report.to_text());
        reports.push(report);
    }
    if let Some(path) = args.json {
        fs::write(&path, serde_json::to_string_pretty(&reports)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if reports.iter().all(|r| r.ok()) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Cut(a) => cmd_cut(a),
        Command::Reduce(r) => cmd_reduce(r),
        Command::Classify { files } => cmd_classify(files),
        Command::Verify(a) => cmd_verify(a),
        Command::Fmt { file } => {
            print!("{}", serialize_graph(&read_graph(&file)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, p, seed } => {
            print!("{}", serialize_graph(&random_connected_graph(n, p, seed)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
