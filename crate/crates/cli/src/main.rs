//! Command-line front end for the latconst library.
//!
//! Five subcommands: `bounds` prints the bound catalog for one constant at
//! one index, `verify` re-checks the numerical claims behind the bounds,
//! `figures` emits the deterministic CSV tables, `reduce` runs LLL or KZ
//! reduction on a basis file, and `empirical` samples random bases and
//! compares observed reduction ratios against the proved bounds.
//!
//! Exit codes: 0 when every requested check passed, 1 when a check failed
//! (a failed claim, a violated bound, an exceeded cap, a write failure),
//! 2 for invalid parameters or malformed input.

use clap::{Parser, Subcommand, ValueEnum};
use latconst::figures::{self, FigureTable};
use latconst::hermite::{self, BoundKind, BoundValue, LinearMethod};
use latconst::kzconst::{self, KzMethod};
use latconst::proofcheck::{self, ClaimReport, ClaimStatus};
use latconst::reduction::{self, ReductionResult, Unimodular};
use latconst::schnorr_rankin::{self, RankinMethod, SchnorrLowerMethod, SchnorrUpperMethod};
use latconst::specfun::PrecisionPolicy;
use latconst::Error;
use serde_json::json;
use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Parser)]
#[command(
    name = "latconst",
    version,
    about = "Bounds, claim verification, figure tables, and lattice reduction \
             for the Hermite, Korkine-Zolotareff, Schnorr, and Rankin constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Constant {
    Hermite,
    Kz,
    Schnorr,
    Rankin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceMethod {
    Lll,
    Kz,
}

#[derive(Subcommand)]
enum Command {
    /// Print every applicable bound for one constant at one index
    Bounds {
        /// Constant family to query
        #[arg(value_enum)]
        constant: Constant,
        /// Dimension index (synonym of --k; give exactly one)
        #[arg(long)]
        n: Option<u64>,
        /// Rank index (synonym of --n; give exactly one)
        #[arg(long)]
        k: Option<u64>,
        /// Restrict output to a single method id
        #[arg(long)]
        method: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-verify the numerical claims behind the bounds
    Verify {
        /// Working precision in bits (at least 64)
        #[arg(long, default_value_t = 96)]
        bits: u32,
        /// Only report claims whose id contains this substring
        #[arg(long)]
        filter: Option<String>,
        /// Also write the structured claim report to this path
        #[arg(long)]
        report: Option<String>,
        /// Worker threads for the claim suites; output order is fixed
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write one figure table as CSV
    Figures {
        /// Table id: fig1, fig2, fig3, fig4, or fig5
        #[arg(long)]
        id: String,
        /// Output path, or - for stdout
        #[arg(long)]
        out: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduce a basis file and report the shortest-vector ratio
    Reduce {
        /// Basis file (plain text or structured document), or - for stdin
        input: String,
        #[arg(long, value_enum, default_value_t = ReduceMethod::Kz)]
        method: ReduceMethod,
        /// Lovász parameter in (0.25, 1]; only meaningful with --method lll
        #[arg(long)]
        delta: Option<f64>,
        /// Where to write the reduced basis (default: INPUT.reduced)
        #[arg(long)]
        out_basis: Option<String>,
        /// Where to write the unimodular transform (default: INPUT.transform)
        #[arg(long)]
        out_transform: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sample random integer bases and test the proved ratio bounds
    Empirical {
        /// Basis rank, between 1 and 10
        #[arg(long)]
        rank: usize,
        /// Number of sampled bases
        #[arg(long)]
        trials: u64,
        /// Seed for the deterministic sample stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Entries are drawn uniformly from [-bound, bound]
        #[arg(long, default_value_t = reduction::DEFAULT_ENTRY_BOUND)]
        entry_bound: i64,
        /// Accepted for interface uniformity; the sample stream is defined
        /// sequentially, so the computation itself is single-threaded
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// A command failure: the process exit code plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

/// Invalid parameters or malformed input.
fn invalid(e: impl Display) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

/// A check or an output action failed.
fn failed(e: impl Display) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Bounds { constant, n, k, method, format } => {
            cmd_bounds(constant, n, k, method.as_deref(), format)
        }
        Command::Verify { bits, filter, report, jobs, format } => {
            cmd_verify(bits, filter.as_deref(), report.as_deref(), jobs, format)
        }
        Command::Figures { id, out, format } => cmd_figures(&id, &out, format),
        Command::Reduce { input, method, delta, out_basis, out_transform, format } => {
            cmd_reduce(&input, method, delta, out_basis.as_deref(), out_transform.as_deref(), format)
        }
        Command::Empirical { rank, trials, seed, entry_bound, jobs, format } => {
            cmd_empirical(rank, trials, seed, entry_bound, jobs, format)
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

type CmdResult = Result<u8, Failure>;

// ---------------------------------------------------------------- bounds --

fn kind_name(kind: &BoundKind) -> &'static str {
    match kind {
        BoundKind::Exact => "exact",
        BoundKind::Upper => "upper",
        BoundKind::Lower => "lower",
    }
}

/// The full applicable catalog for one constant at one index, exact entries
/// first, plus the selected best bounds (best upper, and best lower where
/// lower bounds exist).
fn bounds_catalog(
    constant: Constant,
    x: u64,
    method: Option<&str>,
) -> Result<(Vec<BoundValue>, Vec<BoundValue>), Failure> {
    // With an explicit method the single entry is evaluated strictly: a
    // validity error is reported instead of being skipped.
    if let Some(name) = method {
        let bv = single_bound(constant, x, name)?;
        return Ok((vec![bv], Vec::new()));
    }

    let mut all = Vec::new();
    let mut best = Vec::new();
    match constant {
        Constant::Hermite => {
            if let Some(bv) = hermite::exact_hermite(x) {
                all.push(bv);
            }
            if let Ok(bv) = hermite::blichfeldt_upper(x) {
                all.push(bv);
            }
            for m in LinearMethod::ALL {
                if let Ok(bv) = hermite::linear_upper(x, m) {
                    all.push(bv);
                }
            }
            best.push(hermite::best_upper(x).map_err(invalid)?);
        }
        Constant::Kz => {
            for m in KzMethod::ALL {
                if let Ok(bv) = kzconst::kz_upper(x, m) {
                    all.push(bv);
                }
            }
            best.push(kzconst::kz_best_upper(x).map_err(invalid)?);
        }
        Constant::Schnorr => {
            if let Some(bv) = schnorr_rankin::schnorr_small(x) {
                all.push(bv);
            }
            for m in SchnorrUpperMethod::ALL {
                if let Ok(bv) = schnorr_rankin::schnorr_upper(x, m) {
                    all.push(bv);
                }
            }
            for m in [SchnorrLowerMethod::Old, SchnorrLowerMethod::New] {
                if let Ok(bv) = schnorr_rankin::schnorr_lower(x, m) {
                    all.push(bv);
                }
            }
            best.push(schnorr_rankin::schnorr_best_upper(x).map_err(invalid)?);
            if let Some(bv) = best_by_ln(&all, BoundKind::Lower, false) {
                best.push(bv);
            }
        }
        Constant::Rankin => {
            for m in [
                RankinMethod::OldLower,
                RankinMethod::OldUpper,
                RankinMethod::NewLower,
                RankinMethod::NewUpper,
            ] {
                if let Ok(bv) = schnorr_rankin::rankin_bounds(x, m) {
                    all.push(bv);
                }
            }
            if let Ok(bv) = schnorr_rankin::rankin_upper_via_beta(x) {
                all.push(bv);
            }
            if let Some(bv) = best_by_ln(&all, BoundKind::Upper, true) {
                best.push(bv);
            }
            if let Some(bv) = best_by_ln(&all, BoundKind::Lower, false) {
                best.push(bv);
            }
        }
    }
    if all.is_empty() {
        return Err(invalid(format!("no bound is applicable at index {x}")));
    }
    Ok((all, best))
}

/// Tightest entry of one kind: smallest ln for uppers, largest for lowers.
fn best_by_ln(all: &[BoundValue], kind: BoundKind, smallest: bool) -> Option<BoundValue> {
    all.iter()
        .filter(|bv| bv.kind == kind)
        .cloned()
        .reduce(|a, b| {
            let a_wins = if smallest { a.ln_value <= b.ln_value } else { a.ln_value >= b.ln_value };
            if a_wins { a } else { b }
        })
}

fn single_bound(constant: Constant, x: u64, name: &str) -> Result<BoundValue, Failure> {
    let unknown = || invalid(format!("unknown method `{name}` for this constant"));
    match constant {
        Constant::Hermite => match name {
            "exact" => hermite::exact_hermite(x)
                .ok_or_else(|| invalid(format!("no exact value is known at n={x}"))),
            "blichfeldt" => hermite::blichfeldt_upper(x).map_err(invalid),
            _ => {
                let m = LinearMethod::ALL
                    .into_iter()
                    .find(|m| m.name() == name)
                    .ok_or_else(unknown)?;
                hermite::linear_upper(x, m).map_err(invalid)
            }
        },
        Constant::Kz => {
            let m = KzMethod::ALL.into_iter().find(|m| m.name() == name).ok_or_else(unknown)?;
            kzconst::kz_upper(x, m).map_err(invalid)
        }
        Constant::Schnorr => match name {
            "table" => schnorr_rankin::schnorr_small(x)
                .ok_or_else(|| invalid(format!("no tabulated value at k={x}"))),
            "old_lower" => schnorr_rankin::schnorr_lower(x, SchnorrLowerMethod::Old).map_err(invalid),
            "new_lower" => schnorr_rankin::schnorr_lower(x, SchnorrLowerMethod::New).map_err(invalid),
            _ => {
                let m = SchnorrUpperMethod::ALL
                    .into_iter()
                    .find(|m| m.name() == name)
                    .ok_or_else(unknown)?;
                schnorr_rankin::schnorr_upper(x, m).map_err(invalid)
            }
        },
        Constant::Rankin => match name {
            "via_beta" => schnorr_rankin::rankin_upper_via_beta(x).map_err(invalid),
            _ => {
                let m = [
                    RankinMethod::OldLower,
                    RankinMethod::OldUpper,
                    RankinMethod::NewLower,
                    RankinMethod::NewUpper,
                ]
                .into_iter()
                .find(|m| m.name() == name)
                .ok_or_else(unknown)?;
                schnorr_rankin::rankin_bounds(x, m).map_err(invalid)
            }
        },
    }
}

fn cmd_bounds(
    constant: Constant,
    n: Option<u64>,
    k: Option<u64>,
    method: Option<&str>,
    format: Format,
) -> CmdResult {
    let x = match (n, k) {
        (Some(v), None) | (None, Some(v)) => v,
        (None, None) => return Err(invalid("give the index with --n or --k")),
        (Some(_), Some(_)) => return Err(invalid("--n and --k are synonyms; give only one")),
    };
    let (all, best) = bounds_catalog(constant, x, method)?;
    // Rankin bounds grow doubly exponentially, so the log value is part of
    // the primary output there.
    let with_ln = constant == Constant::Rankin;
    match format {
        Format::Text => {
            for bv in &all {
                print_bound_line("", bv, with_ln);
            }
            for bv in &best {
                print_bound_line("best: ", bv, with_ln);
            }
        }
        Format::Csv => {
            println!("selection,method,kind,value,ln_value,valid_from,valid_to");
            for (selection, bv) in
                all.iter().map(|b| ("catalog", b)).chain(best.iter().map(|b| ("best", b)))
            {
                println!(
                    "{selection},{},{},{:.16e},{:.16e},{},{}",
                    bv.method,
                    kind_name(&bv.kind),
                    bv.value,
                    bv.ln_value,
                    bv.valid_from,
                    bv.valid_to.map_or(String::new(), |v| v.to_string()),
                );
            }
        }
        Format::Structured => {
            let doc = json!({
                "constant": constant_name(constant),
                "index": x,
                "bounds": all,
                "best": best,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(0)
}

fn constant_name(c: Constant) -> &'static str {
    match c {
        Constant::Hermite => "hermite",
        Constant::Kz => "kz",
        Constant::Schnorr => "schnorr",
        Constant::Rankin => "rankin",
    }
}

fn print_bound_line(prefix: &str, bv: &BoundValue, with_ln: bool) {
    if with_ln {
        println!("{prefix}{} {} value={} ln={}", bv.method, kind_name(&bv.kind), bv.value, bv.ln_value);
    } else {
        println!("{prefix}{} {} value={}", bv.method, kind_name(&bv.kind), bv.value);
    }
}

// ---------------------------------------------------------------- verify --

/// Runs the claim suites on `jobs` worker threads. The result is the same
/// ordered report list the library's serial runner produces: suites are
/// distributed over threads but reassembled in their registration order.
fn run_claims(policy: &PrecisionPolicy, jobs: usize) -> Vec<ClaimReport> {
    if jobs == 1 {
        return proofcheck::run_all(policy);
    }
    type Suite<'a> = Box<dyn Fn(&PrecisionPolicy) -> Vec<ClaimReport> + Send + Sync + 'a>;
    let suites: Vec<Suite> = vec![
        Box::new(proofcheck::check_phi_grid),
        Box::new(proofcheck::check_rho_at_310),
        Box::new(proofcheck::check_digamma_bound_grid),
        Box::new(|p| proofcheck::check_midpoint_lemma(p, &proofcheck::default_midpoint_suite())),
        Box::new(proofcheck::check_f_convexity),
        Box::new(|p| proofcheck::check_integral_lemma3(p, &proofcheck::default_integral_cases())),
        Box::new(proofcheck::check_theorem2_constants),
        Box::new(proofcheck::check_corollary1),
        Box::new(|p| proofcheck::check_zeta_lemma(p, 60)),
        Box::new(|p| proofcheck::check_gamma_lemma(p, 40)),
        Box::new(proofcheck::check_theorem3_rational),
    ];
    let slots: Vec<Mutex<Vec<ClaimReport>>> =
        suites.iter().map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(suites.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= suites.len() {
                    break;
                }
                let reports = suites[i](policy);
                *slots[i].lock().expect("no panics hold this lock") = reports;
            });
        }
    });
    slots
        .into_iter()
        .flat_map(|slot| slot.into_inner().expect("worker threads joined"))
        .collect()
}

fn cmd_verify(
    bits: u32,
    filter: Option<&str>,
    report_path: Option<&str>,
    jobs: usize,
    format: Format,
) -> CmdResult {
    if jobs == 0 {
        return Err(invalid("--jobs must be at least 1"));
    }
    let policy = PrecisionPolicy::highprec(bits).map_err(invalid)?;
    let reports = run_claims(&policy, jobs);
    let selected: Vec<&ClaimReport> = match filter {
        Some(f) => reports.iter().filter(|r| r.claim_id.contains(f)).collect(),
        None => reports.iter().collect(),
    };
    if selected.is_empty() {
        return Err(invalid(format!(
            "no claim id contains `{}`",
            filter.unwrap_or_default()
        )));
    }

    match format {
        Format::Text => {
            for r in &selected {
                println!(
                    "{}: {} margin={:.3e} required={:.3e} bits={}",
                    r.claim_id,
                    status_name(r.status),
                    r.computed_margin,
                    r.required_margin,
                    r.precision_bits,
                );
            }
            let passed = selected.iter().filter(|r| r.status == ClaimStatus::Pass).count();
            println!("{} claims, {} passed, {} failed", selected.len(), passed, selected.len() - passed);
        }
        Format::Csv => {
            println!("claim_id,status,computed_margin,required_margin,precision_bits");
            for r in &selected {
                println!(
                    "{},{},{:.16e},{:.16e},{}",
                    r.claim_id,
                    status_name(r.status),
                    r.computed_margin,
                    r.required_margin,
                    r.precision_bits,
                );
            }
        }
        Format::Structured => {
            println!("{}", serde_json::to_string_pretty(&selected).expect("serializable"));
        }
    }
    if let Some(path) = report_path {
        let doc = serde_json::to_string_pretty(&selected).expect("serializable");
        fs::write(path, doc).map_err(|e| failed(format!("cannot write {path}: {e}")))?;
    }
    if selected.iter().all(|r| r.status == ClaimStatus::Pass) {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn status_name(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Pass => "pass",
        ClaimStatus::Fail => "fail",
    }
}

// --------------------------------------------------------------- figures --

fn cmd_figures(id: &str, out: &str, format: Format) -> CmdResult {
    let table: FigureTable = id.parse().map_err(invalid)?;
    let csv = figures::render_csv(table);
    let rows = csv.lines().count() - 1;
    if out == "-" {
        // The CSV owns stdout; the row count goes to stderr.
        print!("{csv}");
        eprintln!("{rows} rows");
        return Ok(0);
    }
    fs::write(out, &csv).map_err(|e| failed(format!("cannot write {out}: {e}")))?;
    match format {
        Format::Text => println!("wrote {out}: {rows} rows"),
        Format::Csv => println!("figure,rows,out\n{},{rows},{out}", table.name()),
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "figure": table.name(),
                "rows": rows,
                "out": out,
            }))
            .expect("serializable")
        ),
    }
    Ok(0)
}

// ---------------------------------------------------------------- reduce --

fn render_transform(u: &Unimodular) -> String {
    let rows = u.to_rows();
    let mut out = format!("{} {}\n", rows.len(), rows.len());
    for row in rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn cmd_reduce(
    input: &str,
    method: ReduceMethod,
    delta: Option<f64>,
    out_basis: Option<&str>,
    out_transform: Option<&str>,
    format: Format,
) -> CmdResult {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| invalid(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| invalid(format!("cannot read {input}: {e}")))?
    };
    let basis = reduction::parse_basis(&text).map_err(invalid)?;

    let map_err = |e: Error| match e {
        Error::DimensionCap { .. } => failed(e),
        other => invalid(other),
    };
    let result: ReductionResult = match method {
        ReduceMethod::Lll => {
            reduction::lll(&basis, delta.unwrap_or(reduction::DEFAULT_DELTA)).map_err(map_err)?
        }
        ReduceMethod::Kz => {
            if delta.is_some() {
                return Err(invalid("--delta only applies to --method lll"));
            }
            reduction::kz_reduce(&basis).map_err(map_err)?
        }
    };

    let n = result.r.dim();
    let lambda = result.shortest_length;
    let r_nn = result.r.get(n - 1, n - 1).abs();
    let ratio = (lambda / r_nn).powi(2);
    // The proved ceiling for the reported ratio: the KZ constant for KZ
    // reduction, the Lovász-derived (delta - 1/4)^-(n-1) for LLL.
    let (bound_name, bound) = match method {
        ReduceMethod::Kz => (
            "kz constant upper bound",
            kzconst::kz_best_upper(n as u64).map_err(invalid)?.value,
        ),
        ReduceMethod::Lll => (
            "lll ratio upper bound",
            (1.0 / (delta.unwrap_or(reduction::DEFAULT_DELTA) - 0.25)).powi(n as i32 - 1),
        ),
    };
    let within = ratio <= bound * (1.0 + 1e-9);

    let mut written = Vec::new();
    let default_basis;
    let default_transform;
    let basis_path = match (out_basis, input) {
        (Some(p), _) => Some(p),
        (None, "-") => None,
        (None, _) => {
            default_basis = format!("{input}.reduced");
            Some(default_basis.as_str())
        }
    };
    let transform_path = match (out_transform, input) {
        (Some(p), _) => Some(p),
        (None, "-") => None,
        (None, _) => {
            default_transform = format!("{input}.transform");
            Some(default_transform.as_str())
        }
    };
    if let Some(path) = basis_path {
        fs::write(path, reduction::render_basis(&result.reduced_basis))
            .map_err(|e| failed(format!("cannot write {path}: {e}")))?;
        written.push(path.to_string());
    }
    if let Some(path) = transform_path {
        fs::write(path, render_transform(&result.transform))
            .map_err(|e| failed(format!("cannot write {path}: {e}")))?;
        written.push(path.to_string());
    }

    match format {
        Format::Text => {
            println!("rank {n}");
            println!("lambda = {lambda}");
            println!("r_nn = {r_nn}");
            println!("lambda^2 / r_nn^2 = {ratio}");
            println!("{bound_name} = {bound}");
            println!("within bound: {}", if within { "yes" } else { "no" });
            for path in &written {
                println!("wrote {path}");
            }
        }
        Format::Csv => {
            println!("quantity,value");
            println!("rank,{n}");
            println!("lambda,{lambda:.16e}");
            println!("r_nn,{r_nn:.16e}");
            println!("ratio,{ratio:.16e}");
            println!("bound,{bound:.16e}");
            println!("within_bound,{within}");
        }
        Format::Structured => {
            let doc = json!({
                "result": result,
                "lambda": lambda,
                "r_nn": r_nn,
                "ratio": ratio,
                "bound_name": bound_name,
                "bound": bound,
                "within_bound": within,
                "written": written,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    if within {
        Ok(0)
    } else {
        Ok(1)
    }
}

// ------------------------------------------------------------- empirical --

fn cmd_empirical(
    rank: usize,
    trials: u64,
    seed: u64,
    entry_bound: i64,
    jobs: usize,
    format: Format,
) -> CmdResult {
    if jobs == 0 {
        return Err(invalid("--jobs must be at least 1"));
    }
    let report =
        reduction::empirical_ratios_with(rank, trials, seed, entry_bound).map_err(invalid)?;
    match format {
        Format::Text => {
            println!(
                "rank {}, trials {}, seed {}, entry bound {}",
                report.rank, report.trials, report.seed, report.entry_bound
            );
            println!(
                "kz ratio: max = {}, mean = {}, bound = {}",
                report.max_kz_ratio, report.mean_kz_ratio, report.kz_ratio_bound
            );
            if let (Some(max_b), Some(mean_b), Some(bound_b)) =
                (report.max_beta_ratio, report.mean_beta_ratio, report.beta_ratio_bound)
            {
                println!("beta ratio: max = {max_b}, mean = {mean_b}, bound = {bound_b}");
            }
            println!("exceedances: {}", report.exceedances);
            if report.exceedances == 0 {
                println!("all samples within bounds");
            } else {
                println!("{} samples exceeded a proved bound", report.exceedances);
            }
        }
        Format::Csv => {
            println!(
                "rank,trials,seed,entry_bound,max_kz_ratio,mean_kz_ratio,kz_ratio_bound,\
                 max_beta_ratio,mean_beta_ratio,beta_ratio_bound,exceedances"
            );
            let opt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x:.16e}"));
            println!(
                "{},{},{},{},{:.16e},{:.16e},{:.16e},{},{},{},{}",
                report.rank,
                report.trials,
                report.seed,
                report.entry_bound,
                report.max_kz_ratio,
                report.mean_kz_ratio,
                report.kz_ratio_bound,
                opt(report.max_beta_ratio),
                opt(report.mean_beta_ratio),
                opt(report.beta_ratio_bound),
                report.exceedances,
            );
        }
        Format::Structured => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
    }
    if report.exceedances == 0 {
        Ok(0)
    } else {
        Ok(1)
    }
}
