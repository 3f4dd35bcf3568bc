//! Command-line driver: family enumeration to level files, gluing runs,
//! one-vertex extension, circulant construction, membership checks and file
//! statistics.

use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ramsey::enumerate::{enumerate_family_with, FamilyLevel};
use ramsey::glue::{extend, glue_level};
use ramsey::graph6::{encode_g6, level_file_path, read_g6_file, write_g6_file};
use ramsey::{check_member, FamilySpec, SmallGraph};

#[derive(Parser)]
#[command(
    name = "ramsey",
    about = "Exhaustive searches over wheel/clique Ramsey graph families",
    version
)]
struct Cli {
    /// Cap on worker threads (default: RAMSEY_JOBS, else all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// C4-free graphs with independence number at most 4.
    C4k5,
    /// W5-free graphs with independence number at most 3.
    W5k4,
    /// W5-free graphs with independence number at most 4.
    W5k5,
}

impl FamilyArg {
    fn spec(self) -> FamilySpec {
        match self {
            FamilyArg::C4k5 => FamilySpec::C4_K5,
            FamilyArg::W5k4 => FamilySpec::W5_K4,
            FamilyArg::W5k5 => FamilySpec::W5_K5,
        }
    }

    fn file_stem(self) -> &'static str {
        match self {
            FamilyArg::C4k5 => "c4k5",
            FamilyArg::W5k4 => "w5k4",
            FamilyArg::W5k5 => "w5k5",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate a family level by level, writing one graph6 file per order.
    Enumerate(EnumerateArgs),
    /// Glue one cone level against one rest level.
    Glue(GlueArgs),
    /// All one-vertex extensions of the input graphs within a family.
    Extend(ExtendArgs),
    /// Build a circulant graph.
    Circulant(CirculantArgs),
    /// Check family membership of every graph in a file.
    Check(CheckArgs),
    /// Order/degree summary of a graph6 file.
    Stats(StatsArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    max_order: usize,
    /// Output directory for `<family>_<order>.g6` level files.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct GlueArgs {
    #[arg(long)]
    cone_order: usize,
    #[arg(long)]
    rest_order: usize,
    /// Directory holding `c4k5_<cone-order>.g6` and `w5k4_<rest-order>.g6`.
    #[arg(long = "in")]
    in_dir: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Re-assert minimum degree == cone order on every output.
    #[arg(long)]
    min_degree_exact: bool,
}

#[derive(Args)]
struct ExtendArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CirculantArgs {
    #[arg(long)]
    order: usize,
    /// Comma-separated circular distances, e.g. 1,5,8,12,13.
    #[arg(long, value_delimiter = ',')]
    distances: Vec<usize>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    family: FamilyArg,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| {
        std::env::var("RAMSEY_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(jobs) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Box<dyn Error>> {
    match cmd {
        Cmd::Enumerate(args) => run_enumerate(args),
        Cmd::Glue(args) => run_glue(args),
        Cmd::Extend(args) => run_extend(args),
        Cmd::Circulant(args) => run_circulant(args),
        Cmd::Check(args) => run_check(args),
        Cmd::Stats(args) => run_stats(args),
    }
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, Box<dyn Error>> {
    fs::create_dir_all(&args.out)?;
    let stem = args.family.file_stem();
    println!("family {stem}, levels 1..={}", args.max_order);
    println!("{:>4} {:>12}", "s", "graphs");
    let mut total = 0usize;
    let mut write_err = None;
    enumerate_family_with(args.family.spec(), args.max_order, |level: &FamilyLevel| {
        if level.order == 0 || write_err.is_some() {
            return;
        }
        let path = level_file_path(&args.out, stem, level.order);
        if let Err(e) = write_g6_file(&path, &level.graphs) {
            write_err = Some(e);
            return;
        }
        println!("{:>4} {:>12}", level.order, level.graphs.len());
        total += level.graphs.len();
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    println!("total {total}");
    Ok(ExitCode::SUCCESS)
}

fn run_glue(args: GlueArgs) -> Result<ExitCode, Box<dyn Error>> {
    let cone_path = level_file_path(&args.in_dir, "c4k5", args.cone_order);
    let rest_path = level_file_path(&args.in_dir, "w5k4", args.rest_order);
    let cones = read_g6_file(&cone_path)?;
    let rests = read_g6_file(&rest_path)?;
    let summary = glue_level(
        &cones,
        &rests,
        args.cone_order,
        args.rest_order,
        args.min_degree_exact,
    )?;
    fs::create_dir_all(&args.out)?;
    let order = 1 + args.cone_order + args.rest_order;
    let out_path = level_file_path(&args.out, "w5k5", order);
    write_g6_file(&out_path, &summary.classes)?;
    println!("{:>4} {:>12} {:>12} {:>12}", "s", "cones", "rests", "glued");
    println!(
        "{:>4} {:>12} {:>12} {:>12}",
        summary.cone_order,
        summary.cone_count,
        summary.rest_count,
        summary.classes.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn run_extend(args: ExtendArgs) -> Result<ExitCode, Box<dyn Error>> {
    let fam = args.family.spec();
    let inputs = read_g6_file(&args.input)?;
    for (i, g) in inputs.iter().enumerate() {
        if !check_member(g, fam) {
            return Err(format!(
                "input graph #{i} is not a {} member",
                args.family.file_stem()
            )
            .into());
        }
    }
    let store = ramsey::IsoStore::new();
    let mut classes: Vec<SmallGraph> = Vec::new();
    for g in &inputs {
        for ext in extend(g, fam) {
            if store.insert_if_new(&ext) {
                classes.push(ext);
            }
        }
    }
    classes.sort_by_key(ramsey::canonical_form);
    write_g6_file(&args.out, &classes)?;
    println!(
        "extended {} graph(s): {} extension class(es)",
        inputs.len(),
        classes.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn run_circulant(args: CirculantArgs) -> Result<ExitCode, Box<dyn Error>> {
    let g = SmallGraph::circulant(args.order, &args.distances)?;
    match &args.out {
        Some(path) => {
            write_g6_file(path, std::slice::from_ref(&g))?;
            println!(
                "circulant order {} distances {:?}: degree {}, written to {}",
                args.order,
                args.distances,
                g.degree(0),
                path.display()
            );
        }
        None => println!("{}", encode_g6(&g)),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(args: CheckArgs) -> Result<ExitCode, Box<dyn Error>> {
    let fam = args.family.spec();
    let graphs = read_g6_file(&args.input)?;
    let mut failures = 0usize;
    for (i, g) in graphs.iter().enumerate() {
        let ok = check_member(g, fam);
        println!(
            "graph {:>4} order {:>2}: {}",
            i,
            g.order(),
            if ok { "ok" } else { "FAIL" }
        );
        if !ok {
            failures += 1;
        }
    }
    println!(
        "checked {} graph(s) against {}: {} failure(s)",
        graphs.len(),
        args.family.file_stem(),
        failures
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_stats(args: StatsArgs) -> Result<ExitCode, Box<dyn Error>> {
    let graphs = read_g6_file(&args.input)?;
    println!("graphs: {}", graphs.len());
    if graphs.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    let mut by_order: Vec<(usize, usize)> = Vec::new();
    for g in &graphs {
        match by_order.iter_mut().find(|(o, _)| *o == g.order()) {
            Some((_, c)) => *c += 1,
            None => by_order.push((g.order(), 1)),
        }
    }
    by_order.sort_unstable();
    for (order, count) in &by_order {
        println!("order {order}: {count} graph(s)");
    }
    let min_deg = graphs.iter().map(|g| g.min_degree()).min().unwrap();
    let max_deg = graphs
        .iter()
        .map(|g| g.degree_sequence().last().copied().unwrap_or(0))
        .max()
        .unwrap();
    let all_regular = graphs.iter().all(|g| {
        let d = g.degree_sequence();
        d.first() == d.last()
    });
    println!(
        "degrees: {}..{}{}",
        min_deg,
        max_deg,
        if all_regular { " (regular)" } else { "" }
    );
    Ok(ExitCode::SUCCESS)
}
