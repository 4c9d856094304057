//! Command-line front end. Every command builds a JSON report; text output is
//! a rendering of that report.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::budget::{Budget, BUDGET_ENV};
use crate::dimdeg::{check_type, dims_guard, published_row, DimCheck};
use crate::error::{Error, Result};
use crate::grid::{
    count_sets, count_types, enumerate_minimal_threads, minimal_types, representative, CombType, GridParams, ZeroSet,
    MAX_ENUMERATION_K2,
};
use crate::groebner::{verify_decomposition, verify_gb, verify_ideal_minimality};
use crate::hypergraph::{build_hs, closure, edge_diff, edge_to_string, Hypergraph};
use crate::ideals::{
    build_f_empty, build_fjs, build_fs, build_hypergraph_ideal, build_ic, build_next_minors, params_json,
    IdealPresentation,
};
use crate::parametrize::{block_invariance, gl_invariance, param_check, Branch};
use crate::poly::TermOrder;
use crate::report::{envelope, Status};

#[derive(Parser, Debug)]
#[command(
    name = "ci-ideal-lab",
    version,
    about = "Exact checks for conditional-independence ideals with a hidden variable"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Resource caps: a bare number for all caps, or `pairs=N,reductions=N,nodes=N`.
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<String>,
    /// Worker threads for independent computations.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// Rows of the matrix; defaults to `t`.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub k1: usize,
    #[arg(long)]
    pub k2: usize,
    #[arg(long)]
    pub t: usize,
}

impl GridArgs {
    fn params(&self) -> Result<GridParams> {
        GridParams::new(self.d.unwrap_or(self.t), self.k1, self.k2, self.t)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealKind {
    /// The CI ideal.
    Ic,
    /// Natural generators of the empty-set component.
    Empty,
    /// Natural generators of the component of `--zeros`.
    Fs,
    /// The same without the zero variables (minimal nonempty sets).
    Fjs,
    /// `(t+1)`-minors of the matrix without zero columns.
    Next,
    /// Minors of the closed hypergraph of `--zeros`.
    Hypergraph,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Degrevlex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hypergraph of a zero set, its closure and the edges closure adds.
    Hypergraph {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "")]
        zeros: String,
        /// File with the expected closed hypergraph, one edge per line.
        #[arg(long)]
        expect: Option<std::path::PathBuf>,
    },
    /// Generator lists with their provenance.
    Generators {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = IdealKind::Ic)]
        ideal: IdealKind,
        #[arg(long, default_value = "")]
        zeros: String,
    },
    /// Buchberger's criterion on natural generators.
    GbVerify {
        #[command(flatten)]
        grid: GridArgs,
        /// Empty: the empty-set component; otherwise the generators without
        /// zero variables.
        #[arg(long, default_value = "")]
        zeros: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
    },
    /// Minimal types, their counts, and enumeration against the formulas.
    Minimal {
        #[command(flatten)]
        grid: GridArgs,
        /// Also list every minimal zero set.
        #[arg(long)]
        list: bool,
    },
    /// Decomposition of the CI ideal on a tiny instance.
    Decompose {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Containment-minimal components against the minimality predicate.
    MinimalityOracle {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Dimension formulas against initial ideals.
    Dims {
        #[command(flatten)]
        grid: GridArgs,
        /// Also count top-dimensional faces.
        #[arg(long)]
        degree: bool,
    },
    /// Image membership and Jacobian rank of a parametrization.
    ParamCheck {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        branch: Option<String>,
        /// `u,v`; omitted with the nonempty branch runs every minimal type.
        #[arg(long = "type")]
        comb_type: Option<String>,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Random instances for the fiber-symmetry checks.
        #[arg(long, default_value_t = 0)]
        symmetry: usize,
    },
    /// Census of minimal types: counts, dimensions and degrees.
    Table {
        #[command(flatten)]
        grid: GridArgs,
        /// Skip the face counts.
        #[arg(long)]
        no_degree: bool,
    },
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for unusable input.
pub const EXIT_USAGE: i32 = 3;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let budget = match cli.run.budget.as_deref() {
        Some(s) => match s.parse::<Budget>() {
            Ok(b) => b,
            Err(e) => return usage(e),
        },
        None => Budget::default(),
    };
    let (name, claim) = describe(&cli.command);
    let (status, params, witnesses, result) = match execute(&cli.command, &cli.run, &budget) {
        Ok(r) => r,
        Err(e) if e.is_budget() => {
            let params = grid_of(&cli.command).params().map_or(Value::Null, |p| params_json(&p));
            (Status::Budget, params, vec![json!(e.to_string())], Value::Null)
        }
        Err(e) => return usage(e),
    };
    let report = envelope(name, params, status, witnesses, json!({ "result": result }));
    let stdout = match cli.run.output {
        Output::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Output::Text => render_text(&report),
    };
    let stderr = match status {
        Status::Pass => String::new(),
        Status::Fail => format!("check failed: {claim}\n"),
        Status::Budget => format!("budget exhausted: {claim} left undecided\n"),
    };
    Outcome { code: status.exit_code(), stdout, stderr }
}

fn usage(e: Error) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn describe(c: &Command) -> (&'static str, &'static str) {
    match c {
        Command::Hypergraph { .. } => ("hypergraph", "the closed hypergraph matches the expected edges"),
        Command::Generators { .. } => ("generators", "the generators could be built"),
        Command::GbVerify { .. } => {
            ("gb-verify", "the natural generators form a Gröbner basis with squarefree leading terms")
        }
        Command::Minimal { .. } => ("minimal", "the counting formulas match enumeration of minimal sets"),
        Command::Decompose { .. } => ("decompose", "the radical of I_C is the intersection of the minimal components"),
        Command::MinimalityOracle { .. } => {
            ("minimality-oracle", "the containment-minimal components are exactly those of minimal zero sets")
        }
        Command::Dims { .. } => ("dims", "the dimension formulas match the initial ideals"),
        Command::ParamCheck { .. } => {
            ("param-check", "parametrized points lie on the variety and the Jacobian has the predicted rank")
        }
        Command::Table { .. } => ("table", "the census of minimal types matches the published table"),
    }
}

fn grid_of(c: &Command) -> &GridArgs {
    match c {
        Command::Hypergraph { grid, .. }
        | Command::Generators { grid, .. }
        | Command::GbVerify { grid, .. }
        | Command::Minimal { grid, .. }
        | Command::Decompose { grid }
        | Command::MinimalityOracle { grid }
        | Command::Dims { grid, .. }
        | Command::ParamCheck { grid, .. }
        | Command::Table { grid, .. } => grid,
    }
}

type Executed = (Status, Value, Vec<Value>, Value);

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn execute(c: &Command, run: &RunArgs, budget: &Budget) -> Result<Executed> {
    match c {
        Command::Hypergraph { grid, zeros, expect } => cmd_hypergraph(&grid.params()?, zeros, expect.as_deref()),
        Command::Generators { grid, ideal, zeros } => cmd_generators(&grid.params()?, *ideal, zeros),
        Command::GbVerify { grid, zeros, order } => cmd_gb_verify(&grid.params()?, zeros, *order, budget),
        Command::Minimal { grid, list } => cmd_minimal(&grid.params()?, *list, run.threads),
        Command::Decompose { grid } => {
            let p = grid.params()?;
            let r = verify_decomposition(&p, budget, run.threads)?;
            let mut w: Vec<Value> = r.radical_failures.iter().map(|f| json!(f)).collect();
            w.extend(r.components.iter().filter(|c| !c.contains_ic).map(|c| json!(c.zero_set)));
            Ok((r.status, params_json(&p), w, to_value(&r)))
        }
        Command::MinimalityOracle { grid } => {
            let p = grid.params()?;
            let r = verify_ideal_minimality(&p, budget, run.threads)?;
            let w = r.only_ideal_minimal.iter().chain(&r.only_predicate_minimal).map(|c| json!(c)).collect();
            Ok((r.status, params_json(&p), w, to_value(&r)))
        }
        Command::Dims { grid, degree } => cmd_dims(&grid.params()?, *degree, budget),
        Command::ParamCheck { grid, branch, comb_type, points, trials, symmetry } => {
            cmd_param_check(&grid.params()?, branch.as_deref(), comb_type.as_deref(), *points, *trials, *symmetry, run)
        }
        Command::Table { grid, no_degree } => cmd_table(&grid.params()?, !*no_degree, budget, run.threads),
    }
}

fn parse_zeros(p: &GridParams, zeros: &str) -> Result<ZeroSet> {
    ZeroSet::parse(*p, zeros)
}

fn cmd_hypergraph(p: &GridParams, zeros: &str, expect: Option<&std::path::Path>) -> Result<Executed> {
    let s = parse_zeros(p, zeros)?;
    let h = build_hs(&s);
    let hc = closure(&h);
    let (added, _) = edge_diff(&hc, &h);
    let edges = |hg: &Hypergraph| -> Vec<String> { hg.serialize().lines().map(str::to_string).collect() };
    let added: Vec<String> = {
        let mut v: Vec<String> = added.iter().map(|e| edge_to_string(e)).collect();
        v.sort();
        v
    };
    let mut result = json!({
        "zeros": format!("{{{s}}}"),
        "h_s": edges(&h),
        "closure_added": added,
        "closure_size": hc.len(),
    });
    let mut status = Status::Pass;
    let mut witnesses = Vec::new();
    if let Some(path) = expect {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let want = Hypergraph::parse(*p, &text)?;
        let (extra, missing) = edge_diff(&hc, &want);
        let list = |s: &std::collections::BTreeSet<Vec<crate::grid::GridPoint>>| -> Vec<String> {
            s.iter().map(|e| edge_to_string(e)).collect()
        };
        status = Status::from_bool(extra.is_empty() && missing.is_empty());
        witnesses.extend(list(&extra).into_iter().map(|e| json!({ "extra": e })));
        witnesses.extend(list(&missing).into_iter().map(|e| json!({ "missing": e })));
        result["expect"] = json!({ "extra": list(&extra), "missing": list(&missing) });
    }
    Ok((status, params_json(p), witnesses, result))
}

fn build_ideal(p: &GridParams, kind: IdealKind, zeros: &str) -> Result<IdealPresentation> {
    let s = parse_zeros(p, zeros)?;
    match kind {
        IdealKind::Ic => Ok(build_ic(p)),
        IdealKind::Empty => build_f_empty(p),
        IdealKind::Fs => build_fs(&s),
        IdealKind::Fjs => build_fjs(&s),
        IdealKind::Next => Ok(build_next_minors(&s)),
        IdealKind::Hypergraph => build_hypergraph_ideal(&closure(&build_hs(&s))),
    }
}

fn cmd_generators(p: &GridParams, kind: IdealKind, zeros: &str) -> Result<Executed> {
    let ideal = build_ideal(p, kind, zeros)?;
    let mut result = ideal.to_json();
    result["count"] = json!(ideal.len());
    Ok((Status::Pass, params_json(p), Vec::new(), result))
}

fn cmd_gb_verify(p: &GridParams, zeros: &str, order: OrderArg, budget: &Budget) -> Result<Executed> {
    let s = parse_zeros(p, zeros)?;
    let ideal = if s.is_empty() { build_f_empty(p)? } else { build_fjs(&s)? };
    let order = match order {
        OrderArg::Lex => TermOrder::Lex,
        OrderArg::Degrevlex => TermOrder::DegRevLex,
    };
    let v = verify_gb(&ideal.generators, order, budget)?;
    let ok = v.is_groebner && (order != TermOrder::Lex || v.all_leading_squarefree);
    let witnesses = v.failing_pairs.iter().map(|&(i, j)| json!([i, j])).collect();
    let mut result = to_value(&v);
    result["ideal"] = json!(ideal.name);
    result["generators"] = json!(ideal.len());
    result["order"] = json!(order);
    Ok((Status::from_bool(ok), params_json(p), witnesses, result))
}

fn cmd_minimal(p: &GridParams, list: bool, threads: usize) -> Result<Executed> {
    let types = minimal_types(p)?;
    let enumerated = if p.k2 <= MAX_ENUMERATION_K2 { Some(enumerate_minimal_threads(p, threads)?) } else { None };
    let mut ok = count_types(p)? == types.len() as u128;
    let mut rows = Vec::new();
    let mut witnesses = Vec::new();
    for &c in &types {
        let formula = count_sets(p, c)?;
        let found = enumerated.as_ref().map(|e| e.get(&c).map_or(0, Vec::len) as u128);
        let agree = found.is_none_or(|f| f == formula);
        if !agree {
            ok = false;
            witnesses.push(json!({ "type": [c.u, c.v], "formula": formula.to_string(), "enumerated": found }));
        }
        let mut row = json!({ "type": [c.u, c.v], "count": formula as u64, "enumerated": found.map(|f| f as u64), "agree": agree });
        if list {
            if let Some(sets) = enumerated.as_ref().and_then(|e| e.get(&c)) {
                row["sets"] = json!(sets.iter().map(|s| format!("{{{s}}}")).collect::<Vec<_>>());
            }
        }
        rows.push(row);
    }
    if let Some(e) = &enumerated {
        // sets outside the predicted types
        for c in e.keys().filter(|c| !types.contains(c)) {
            ok = false;
            witnesses.push(json!({ "unexpected_type": [c.u, c.v] }));
        }
    }
    let total: u128 = types.iter().map(|&c| count_sets(p, c)).sum::<Result<u128>>()?;
    let result = json!({
        "types": types.len(),
        "type_count_formula": count_types(p)? as u64,
        "total_sets": total.to_string(),
        "enumeration": if enumerated.is_some() { "exhaustive" } else { "skipped" },
        "rows": rows,
    });
    Ok((Status::from_bool(ok), params_json(p), witnesses, result))
}

fn cmd_dims(p: &GridParams, degree: bool, budget: &Budget) -> Result<Executed> {
    dims_guard(p)?;
    let mut status = Status::Pass;
    let mut rows = Vec::new();
    let mut witnesses = Vec::new();
    for c in minimal_types(p)? {
        match check_type(p, c, degree, budget) {
            Ok(r) => {
                let ok = r.agree && r.duality;
                if !ok {
                    witnesses.push(
                        json!({ "type": [c.u, c.v], "dim_formula": r.dim_formula, "dim_initial": r.dim_initial }),
                    );
                }
                status = status.and(Status::from_bool(ok));
                rows.push(to_value(&r));
            }
            Err(e) if e.is_budget() => {
                status = status.and(Status::Budget);
                rows.push(json!({ "type": [c.u, c.v], "status": "budget", "message": e.to_string() }));
            }
            Err(e) => return Err(e),
        }
    }
    Ok((status, params_json(p), witnesses, json!({ "rows": rows })))
}

fn cmd_param_check(
    p: &GridParams,
    branch: Option<&str>,
    comb_type: Option<&str>,
    points: usize,
    trials: usize,
    symmetry: usize,
    run: &RunArgs,
) -> Result<Executed> {
    let comb: Option<CombType> = comb_type.map(str::parse).transpose()?;
    let branch = match branch {
        Some(b) => b.parse()?,
        None if comb.is_some_and(|c| !c.is_empty_type()) => Branch::Nonempty,
        None => Branch::Empty,
    };
    let types: Vec<CombType> = match (branch, comb) {
        (_, Some(c)) => vec![c],
        (Branch::Empty, None) => vec![CombType::new(0, 0)],
        (Branch::Nonempty, None) => minimal_types(p)?.into_iter().filter(|c| !c.is_empty_type()).collect(),
    };
    let mut ok = true;
    let mut reports = Vec::new();
    let mut witnesses = Vec::new();
    for c in types {
        let r = param_check(branch, p, c, points, trials, run.seed, run.threads)?;
        if !r.agree {
            ok = false;
            witnesses.push(json!({ "type": [c.u, c.v], "max_rank": r.max_rank, "expected": r.expected, "first_failure": r.first_failure }));
        }
        let mut v = to_value(&r);
        if symmetry > 0 {
            let sym = match branch {
                Branch::Empty => gl_invariance(p, symmetry, run.seed)?,
                Branch::Nonempty => block_invariance(p, c, symmetry, run.seed)?,
            };
            if !sym.passed() {
                ok = false;
                witnesses.push(
                    json!({ "type": [c.u, c.v], "symmetry": sym.action, "held": sym.held, "instances": sym.instances }),
                );
            }
            v["symmetry"] = to_value(&sym);
        }
        reports.push(v);
    }
    Ok((Status::from_bool(ok), params_json(p), witnesses, json!({ "seed": run.seed, "reports": reports })))
}

fn cmd_table(p: &GridParams, degree: bool, budget: &Budget, threads: usize) -> Result<Executed> {
    dims_guard(p)?;
    let types = minimal_types(p)?;
    // cheapest face counts first
    let mut order: Vec<CombType> = types.clone();
    order.reverse();
    let mut rows: std::collections::BTreeMap<CombType, Result<DimCheck>> =
        crate::par::par_map(&order, threads, |&c| (c, check_type(p, c, degree, budget))).into_iter().collect();
    let mut status = Status::Pass;
    let mut out = Vec::new();
    let mut witnesses = Vec::new();
    for &c in &types {
        let r = rows.remove(&c).expect("every type checked");
        let count = count_sets(p, c)?;
        let mut row = json!({
            "type": [c.u, c.v],
            "representative": format!("{{{}}}", representative(c, p)?),
            "count": count as u64,
        });
        match r {
            Ok(d) => {
                row["dim_formula"] = json!(d.dim_formula);
                row["dim_initial"] = json!(d.dim_initial);
                row["degree"] = json!(d.degree_initial);
                let mut ok = d.agree && d.duality;
                if let Some((pc, pd, pdeg)) = published_row(p, c) {
                    let matches = pc == count && pd == d.dim_initial && d.degree_initial.is_none_or(|g| g == pdeg);
                    row["published"] = json!({ "count": pc as u64, "dim": pd, "degree": pdeg, "match": matches });
                    ok &= matches;
                }
                if !ok {
                    witnesses.push(json!({ "type": [c.u, c.v] }));
                }
                status = status.and(Status::from_bool(ok));
            }
            Err(e) if e.is_budget() => {
                row["status"] = json!("budget");
                status = status.and(Status::Budget);
            }
            Err(e) => return Err(e),
        }
        out.push(row);
    }
    Ok((status, params_json(p), witnesses, json!({ "rows": out })))
}

/// Indented `key: value` rendering of a report.
pub fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("-".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                Some(a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", "))
            }
            _ => None,
        }
    }
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match scalar(x) {
                        Some(s) => {
                            let _ = writeln!(out, "{pad}{k}: {s}");
                        }
                        None => {
                            let _ = writeln!(out, "{pad}{k}:");
                            walk(x, indent + 1, out);
                        }
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    match scalar(x) {
                        Some(s) => {
                            let _ = writeln!(out, "{pad}- {s}");
                        }
                        None => {
                            let _ = writeln!(out, "{pad}-");
                            walk(x, indent + 1, out);
                        }
                    }
                }
            }
            other => {
                let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
            }
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("ci-ideal-lab").chain(args.iter().copied()))
    }

    #[test]
    fn minimal_census() {
        let o = go(&["minimal", "--k1", "2", "--k2", "6", "--t", "4"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["schema"], "1");
        let counts: Vec<u64> =
            v["result"]["rows"].as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).collect();
        assert_eq!(counts, [1, 30, 120, 120, 90, 120, 20]);
    }

    #[test]
    fn usage_errors_are_distinct_from_failures() {
        assert_eq!(go(&["minimal", "--k2", "6"]).code, EXIT_USAGE);
        assert_eq!(go(&["minimal", "--k2", "1", "--t", "2"]).code, EXIT_USAGE);
        assert_eq!(go(&["--help"]).code, 0);
        assert_eq!(go(&["decompose", "--k2", "5", "--t", "2"]).code, EXIT_USAGE);
    }

    #[test]
    fn budget_exit_code() {
        let o = go(&["gb-verify", "--k2", "3", "--t", "3", "--budget", "2"]);
        assert_eq!(o.code, 2, "{o:?}");
        assert!(o.stderr.contains("budget"));
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!((v["status"].as_str(), v["params"]["k2"].as_u64()), (Some("budget"), Some(3)));
    }

    #[test]
    fn text_is_a_rendering() {
        let o = go(&["generators", "--k2", "2", "--t", "2", "--output", "text"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("schema: 1"));
        assert!(o.stdout.contains("x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1"));
    }

    #[test]
    fn runs_are_byte_identical() {
        let args = ["param-check", "--d", "3", "--k2", "3", "--t", "3", "--points", "5", "--seed", "4"];
        assert_eq!(go(&args), go(&args));
    }
}
