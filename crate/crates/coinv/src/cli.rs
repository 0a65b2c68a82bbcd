//! Command-line front end: every computation in the crate behind a stable
//! subcommand grammar with JSON and plain-text output.
//!
//! Exit codes: 0 on success, 1 on a computation error (with a JSON error
//! object), 2 on a usage error.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::combinatorics::{Partition, QPolynomial, RPartition};
use crate::descent_monomials::{straighten_full, Monomial};
use crate::error::{Error, Result};
use crate::oracle::{CharacterTable, GradedQuotient};
use crate::points_ideal::{
    compute_t_ideal, compute_t_ideal_one_per_step, dn_elements, orbit, Point, QuadraticNumber,
    TIdealResult,
};
use crate::representations as reps;

/// Outcome of one invocation: process exit code, machine payload, and the
/// human rendering printed to stdout.
pub struct CommandResult {
    pub exit_code: i32,
    pub json: Value,
    pub human: String,
}

#[derive(Parser)]
#[command(
    name = "coinv",
    about = "Exact descent representations of generalized coinvariant algebras",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit the JSON payload instead of the plain-text rendering.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of one irreducible (or all of them) in a refined component.
    Mult(MultArgs),
    /// Frobenius image of a refined component, directly or via the ribbon product.
    Frob(FrobArgs),
    /// Graded multiplicity generating function of a shape.
    Gf(GfArgs),
    /// Expand a monomial over the descent basis.
    Straighten(StraightenArgs),
    /// Brute-force quotient computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Point-orbit top-degree ideals.
    #[command(subcommand)]
    Points(PointsCommand),
    /// Tableau counting utilities.
    #[command(subcommand)]
    Tableaux(TableauxCommand),
}

#[derive(Args)]
struct MultArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Exponent partition, comma-separated, largest part first.
    #[arg(long)]
    rho: String,
    /// Straight shape for r = 1.
    #[arg(long)]
    lambda: Option<String>,
    /// r-partition shape: semicolon-separated component partitions.
    #[arg(long)]
    lambda_bar: Option<String>,
    /// Tabulate every nonzero multiplicity.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct FrobArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    rho: String,
    /// Compute through the ribbon-product rewriting instead of tableau counts.
    #[arg(long)]
    ribbon: bool,
    /// Apply the omega involution to the result.
    #[arg(long)]
    omega: bool,
}

#[derive(Args)]
struct GfArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    lambda_bar: Option<String>,
}

#[derive(Args)]
struct StraightenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Monomial in the x1^a*x2^b form (zero exponents omitted).
    #[arg(long)]
    monomial: String,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Row-reduce the quotient and report dimensions and decompositions.
    Build(OracleBuildArgs),
    /// Sweep every graded component against the closed-form counts.
    Verify(OracleVerifyArgs),
}

#[derive(Args)]
struct OracleBuildArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long)]
    max_degree: Option<usize>,
}

#[derive(Args)]
struct OracleVerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
}

#[derive(Subcommand)]
enum PointsCommand {
    /// Compute the top-degree ideal data of a point-orbit union.
    Tideal(PointsTidealArgs),
}

#[derive(Args)]
struct PointsTidealArgs {
    /// JSON input file describing the orbit seeds.
    #[arg(long)]
    input: std::path::PathBuf,
    /// Use the literal one-null-vector-per-iteration loop.
    #[arg(long)]
    one_per_step: bool,
}

#[derive(Subcommand)]
enum TableauxCommand {
    /// Count standard Young tableaux with descents between two sets.
    Count(TableauxCountArgs),
}

#[derive(Args)]
struct TableauxCountArgs {
    #[arg(long)]
    shape: String,
    #[arg(long, default_value = "")]
    des_lo: String,
    #[arg(long, default_value = "")]
    des_hi: String,
}

/// Entry point used by the binary: parse, dispatch, render.
pub fn run(args: &[String]) -> CommandResult {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let is_help = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return CommandResult {
                exit_code: if is_help { 0 } else { 2 },
                json: json!({"error": err.to_string()}),
                human: err.to_string(),
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((json, human)) => CommandResult {
            exit_code: if json
                .get("mismatches")
                .map(|m| !m.as_array().unwrap().is_empty())
                == Some(true)
            {
                1
            } else {
                0
            },
            json,
            human,
        },
        Err(err) => CommandResult {
            exit_code: 1,
            json: json!({"error": err.to_string()}),
            human: format!("error: {err}"),
        },
    }
}

/// Render the chosen face of the result.
pub fn render(cli_args: &[String], result: &CommandResult) -> String {
    if cli_args.iter().any(|a| a == "--json") {
        serde_json::to_string_pretty(&result.json).expect("valid json")
    } else {
        result.human.clone()
    }
}

fn dispatch(command: &Command) -> Result<(Value, String)> {
    match command {
        Command::Mult(args) => mult(args),
        Command::Frob(args) => frob(args),
        Command::Gf(args) => gf(args),
        Command::Straighten(args) => straighten(args),
        Command::Oracle(OracleCommand::Build(args)) => oracle_build(args),
        Command::Oracle(OracleCommand::Verify(args)) => oracle_verify(args),
        Command::Points(PointsCommand::Tideal(args)) => points_tideal(args),
        Command::Tableaux(TableauxCommand::Count(args)) => tableaux_count(args),
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Vec<usize> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad partition entry `{t}`")))
        })
        .collect::<Result<_>>()?;
    Partition::new(parts)
}

fn parse_rpartition(s: &str, r: usize) -> Result<RPartition> {
    let components: Vec<Partition> = s.split(';').map(parse_partition).collect::<Result<_>>()?;
    if components.len() != r {
        return Err(Error::invalid(format!(
            "expected {r} semicolon-separated components, found {}",
            components.len()
        )));
    }
    RPartition::new(components)
}

fn parse_index_set(s: &str) -> Result<BTreeSet<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(BTreeSet::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad index `{t}`")))
        })
        .collect()
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn rpartition_json(p: &RPartition) -> Value {
    Value::Array(p.components().iter().map(partition_json).collect())
}

fn qpoly_json(q: &QPolynomial) -> Value {
    json!(q.coeffs())
}

fn rational_json(c: &BigRational) -> Value {
    if c.is_integer() {
        match i64::try_from(&c.to_integer()) {
            Ok(v) => json!(v),
            Err(_) => json!(c.to_string()),
        }
    } else {
        json!(c.to_string())
    }
}

fn mult(args: &MultArgs) -> Result<(Value, String)> {
    let rho = parse_partition(&args.rho)?;
    let (n, k, r) = (args.n, args.k, args.r);
    if args.all {
        if r == 1 {
            let table = reps::frob_rnk_rho(n, k, &rho)?;
            let entries: Vec<Value> = table
                .iter()
                .map(|(shape, m)| json!({"shape": partition_json(shape), "multiplicity": m}))
                .collect();
            let mut human = String::new();
            for (shape, m) in &table {
                writeln!(human, "{shape}  {m}").ok();
            }
            if table.is_empty() {
                human.push_str("zero module\n");
            }
            Ok((
                json!({"n": n, "k": k, "r": r, "rho": partition_json(&rho), "multiplicities": entries}),
                human,
            ))
        } else {
            let table = reps::frob_snk_rho(n, k, r, &rho)?;
            let entries: Vec<Value> = table
                .iter()
                .map(|(shape, m)| json!({"shape": rpartition_json(shape), "multiplicity": m}))
                .collect();
            let mut human = String::new();
            for (shape, m) in &table {
                writeln!(human, "{shape}  {m}").ok();
            }
            if table.is_empty() {
                human.push_str("zero module\n");
            }
            Ok((
                json!({"n": n, "k": k, "r": r, "rho": partition_json(&rho), "multiplicities": entries}),
                human,
            ))
        }
    } else if let Some(lambda) = &args.lambda {
        let lambda = parse_partition(lambda)?;
        let m = if r == 1 {
            reps::multiplicity_rnk(n, k, &rho, &lambda)?
        } else {
            return Err(Error::invalid("use --lambda-bar for r > 1"));
        };
        Ok((
            json!({"n": n, "k": k, "r": r, "rho": partition_json(&rho),
                   "lambda": partition_json(&lambda), "multiplicity": m}),
            format!("{m}\n"),
        ))
    } else if let Some(bar) = &args.lambda_bar {
        let shape = parse_rpartition(bar, r)?;
        let m = reps::multiplicity_snk(n, k, r, &rho, &shape)?;
        Ok((
            json!({"n": n, "k": k, "r": r, "rho": partition_json(&rho),
                   "lambda_bar": rpartition_json(&shape), "multiplicity": m}),
            format!("{m}\n"),
        ))
    } else {
        Err(Error::invalid("choose --lambda, --lambda-bar, or --all"))
    }
}

fn frob(args: &FrobArgs) -> Result<(Value, String)> {
    let rho = parse_partition(&args.rho)?;
    let (n, k) = (args.n, args.k);
    let expansion = if args.ribbon {
        reps::frob_ribbon_product(n, k, &rho)?
    } else {
        crate::symfunc::SchurExpansion::from_counts(&reps::frob_rnk_rho(n, k, &rho)?)
    };
    let expansion = if args.omega {
        expansion.omega()
    } else {
        expansion
    };
    let entries: Vec<Value> = expansion
        .terms()
        .iter()
        .map(|(shape, c)| json!({"shape": partition_json(shape), "coeff": rational_json(c)}))
        .collect();
    let mut human = String::new();
    for (shape, c) in expansion.terms() {
        writeln!(human, "{shape}  {c}").ok();
    }
    if expansion.is_zero() {
        human.push_str("zero module\n");
    }
    Ok((
        json!({"n": n, "k": k, "rho": partition_json(&rho), "ribbon": args.ribbon,
               "omega": args.omega, "terms": entries}),
        human,
    ))
}

fn gf(args: &GfArgs) -> Result<(Value, String)> {
    let (n, k, r) = (args.n, args.k, args.r);
    let (label, poly) = if let Some(lambda) = &args.lambda {
        let lambda = parse_partition(lambda)?;
        if r != 1 {
            return Err(Error::invalid("use --lambda-bar for r > 1"));
        }
        (
            json!({"lambda": partition_json(&lambda)}),
            reps::graded_mult_gf(n, k, &lambda)?,
        )
    } else if let Some(bar) = &args.lambda_bar {
        let shape = parse_rpartition(bar, r)?;
        (
            json!({"lambda_bar": rpartition_json(&shape)}),
            reps::graded_mult_gf_wreath(n, k, r, &shape)?,
        )
    } else {
        return Err(Error::invalid("choose --lambda or --lambda-bar"));
    };
    let mut payload = json!({"n": n, "k": k, "r": r, "gf": qpoly_json(&poly)});
    payload
        .as_object_mut()
        .unwrap()
        .extend(label.as_object().unwrap().clone());
    Ok((payload, format!("{poly}\n")))
}

fn straighten(args: &StraightenArgs) -> Result<(Value, String)> {
    let m = Monomial::parse(&args.monomial, args.n)?;
    let expansion = straighten_full(&m, args.k, args.r)?;
    let mut entries = Vec::new();
    let mut human = String::new();
    for (element, coeff) in &expansion {
        let g = element.colored_permutation();
        entries.push(json!({
            "word": g.word(),
            "colors": g.colors(),
            "r": g.r(),
            "i_seq": element.i_seq(),
            "nu": partition_json(element.nu()),
            "monomial": element.monomial().to_string(),
            "coeff": rational_json(coeff),
        }));
        writeln!(
            human,
            "{coeff} * [{}]  I={:?}  nu={}",
            element.monomial(),
            element.i_seq(),
            element.nu()
        )
        .ok();
    }
    Ok((
        json!({"n": args.n, "k": args.k, "r": args.r, "monomial": m.to_string(),
               "terms": entries}),
        human,
    ))
}

fn oracle_build(args: &OracleBuildArgs) -> Result<(Value, String)> {
    let (n, k, r) = (args.n, args.k, args.r);
    let q = GradedQuotient::build(n, k, r, args.max_degree)?;
    let table = CharacterTable::build(n, r)?;
    let mut components = Vec::new();
    for d in 0..q.slices().len() {
        for rho in crate::combinatorics::partitions_of(d) {
            let comp = q.refined_component(&rho)?;
            if comp.dim() == 0 {
                continue;
            }
            let decomp = q.decompose(&comp, &table)?;
            let mults: Vec<Value> = decomp
                .iter()
                .map(|(shape, m)| json!({"shape": rpartition_json(shape), "multiplicity": m}))
                .collect();
            components.push(json!({
                "rho": partition_json(&rho),
                "dim": comp.dim(),
                "multiplicities": mults,
            }));
        }
    }
    let hilbert = q.hilbert();
    let human = format!(
        "hilbert = {}\ntotal dimension = {}\ncomponents = {}\n",
        hilbert,
        q.total_dim(),
        components.len()
    );
    Ok((
        json!({"n": n, "k": k, "r": r, "hilbert": qpoly_json(&hilbert),
               "total_dim": q.total_dim(), "components": components}),
        human,
    ))
}

fn oracle_verify(args: &OracleVerifyArgs) -> Result<(Value, String)> {
    let report = crate::oracle::verify_multiplicity_rule(args.n, args.k, args.r)?;
    let human = if report.passed() {
        format!(
            "verified {} components: closed-form counts match the oracle\n",
            report.components_checked
        )
    } else {
        let mut s = String::new();
        for m in &report.mismatches {
            writeln!(s, "MISMATCH {m}").ok();
        }
        s
    };
    Ok((
        json!({"n": args.n, "k": args.k, "r": args.r,
               "components_checked": report.components_checked,
               "mismatches": report.mismatches}),
        human,
    ))
}

fn parse_rational_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<num_bigint::BigInt> {
        t.trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == num_bigint::BigInt::from(0) {
                return Err(Error::invalid("zero denominator"));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Parse the orbit-seeds input format: coordinates are `a + b*sqrt(d)` with
/// rational strings.
pub fn parse_points_input(text: &str) -> Result<(usize, u64, Vec<Point>)> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad JSON input: {e}")))?;
    let n = value["n"]
        .as_u64()
        .ok_or_else(|| Error::invalid("missing field `n`"))? as usize;
    let d = value["d"].as_u64().unwrap_or(0);
    let group = value["group"].as_str().unwrap_or("D");
    if group != "D" {
        return Err(Error::invalid(format!("unsupported group `{group}`")));
    }
    let seeds = value["orbit_seeds"]
        .as_array()
        .ok_or_else(|| Error::invalid("missing field `orbit_seeds`"))?;
    let mut out = Vec::new();
    for seed in seeds {
        let coords = seed
            .as_array()
            .ok_or_else(|| Error::invalid("seed must be an array of coordinates"))?;
        if coords.len() != n {
            return Err(Error::invalid(format!(
                "seed has {} coordinates, expected {n}",
                coords.len()
            )));
        }
        let mut point = Vec::new();
        for c in coords {
            let a = parse_rational_str(
                c["a"]
                    .as_str()
                    .ok_or_else(|| Error::invalid("coordinate field `a` must be a string"))?,
            )?;
            let b = match c.get("b") {
                Some(Value::String(s)) => parse_rational_str(s)?,
                None => BigRational::from_integer(0.into()),
                _ => return Err(Error::invalid("coordinate field `b` must be a string")),
            };
            use num_traits::Zero;
            if !b.is_zero() && d <= 1 {
                return Err(Error::invalid(
                    "coordinate has a radical part but `d` is 0 or 1",
                ));
            }
            point.push(QuadraticNumber::new(a, b, d));
        }
        out.push(Point::new(point)?);
    }
    Ok((n, d, out))
}

fn quadratic_json(c: &QuadraticNumber) -> Value {
    json!({
        "a": c.rational_part().to_string(),
        "b": c.radical_part().to_string(),
        "d": c.radicand(),
    })
}

fn tideal_json(result: &TIdealResult, points: usize) -> Value {
    let generators: Vec<Value> = result
        .generators
        .iter()
        .map(|g| {
            let terms: Vec<Value> = g
                .top_form
                .terms()
                .map(|(e, c)| json!({"exponents": e, "coeff": quadratic_json(c)}))
                .collect();
            json!({"lead": g.lead, "terms": terms})
        })
        .collect();
    json!({
        "n": result.nvars,
        "points": points,
        "hilbert": qpoly_json(&result.hilbert),
        "staircase": result.staircase,
        "generators": generators,
    })
}

fn points_tideal(args: &PointsTidealArgs) -> Result<(Value, String)> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", args.input.display())))?;
    let (n, _d, seeds) = parse_points_input(&text)?;
    let group = dn_elements(n)?;
    let mut pts = std::collections::BTreeSet::new();
    for seed in &seeds {
        pts.extend(orbit(&group, seed)?);
    }
    let points: Vec<Point> = pts.into_iter().collect();
    let result = if args.one_per_step {
        compute_t_ideal_one_per_step(&points)?
    } else {
        compute_t_ideal(&points)?
    };
    let human = format!(
        "points = {}\nhilbert = {}\nstaircase size = {}\ngenerators = {}\n",
        points.len(),
        result.hilbert,
        result.staircase.len(),
        result.generators.len()
    );
    Ok((tideal_json(&result, points.len()), human))
}

fn tableaux_count(args: &TableauxCountArgs) -> Result<(Value, String)> {
    let shape = parse_partition(&args.shape)?;
    let lo = parse_index_set(&args.des_lo)?;
    let hi_default: BTreeSet<usize> = (1..shape.size()).collect();
    let hi = if args.des_hi.trim().is_empty() {
        hi_default
    } else {
        parse_index_set(&args.des_hi)?
    };
    let count = crate::tableaux::count_syt_descents_between(&shape, &lo, &hi)?;
    Ok((
        json!({"shape": partition_json(&shape), "des_lo": lo.iter().collect::<Vec<_>>(),
               "des_hi": hi.iter().collect::<Vec<_>>(), "count": count}),
        format!("{count}\n"),
    ))
}
