//! Argument parsing and dispatch for the `forestsym` binary.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use forestsym::forests::{assemble, c_coefficients, c_coefficients_vertical, explore_vertical, q_stirling_row};
use forestsym::graphs::{graph_of, natural_peo_valid};
use forestsym::oracles::{csf_oracle, llt_oracle, orientation_sum};
use forestsym::symfunc::{convert, rho_to_h};
use forestsym::verify::{run_check, Check, ModularTarget, VerifyOptions};
use forestsym::{Basis, Decoration, Error, Graph, HessenbergFunction, MonomialSym, Partition, QPoly, SymFunc, YBasis};

#[derive(Parser, Debug)]
#[command(name = "forestsym", version, about = "Increasing spanning forests, chromatic and LLT symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one object.
    #[command(subcommand)]
    Compute(Compute),
    /// Run an exhaustive check up to a size bound.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum Compute {
    /// Forest expansion X_y(m) with its coefficients c_λ(m).
    #[command(name = "X")]
    X {
        #[arg(long, value_parser = parse_m)]
        m: HessenbergFunction,
        #[arg(long, value_enum, default_value = "rho")]
        y: YArg,
        /// Decoration positions, e.g. "1,3".
        #[arg(long, value_parser = parse_positions)]
        decoration: Option<Positions>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Chromatic quasisymmetric function, by colorings.
    Csf {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Unicellular LLT polynomial, by colorings.
    Llt {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// ρ_n expanded in a basis.
    Rho {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "h")]
        basis: BasisArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// q-Stirling numbers s_q(n, k) for k = 0..=n.
    Stirling {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sum over acyclic orientations, in the e basis.
    OrientationSum {
        #[arg(long, value_parser = parse_m)]
        m: HessenbergFunction,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    #[arg(long, value_parser = parse_m)]
    m: Option<HessenbergFunction>,
    /// Explicit edge list, e.g. "edges:1-2,2-3".
    #[arg(long)]
    graph: Option<String>,
    /// Vertex count for --graph; defaults to the largest endpoint.
    #[arg(long, requires = "graph")]
    vertices: Option<usize>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = parse_check)]
    check: Check,
    #[arg(long)]
    max_n: Option<usize>,
    /// Modular law only: X_rho, X_qe, csf or llt. All four when omitted.
    #[arg(long, value_parser = parse_target)]
    target: Option<ModularTarget>,
    #[arg(long, value_enum, default_value = "text")]
    format: VerifyFormat,
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for the fault injector, which perturbs one coefficient by +1.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum YArg {
    Rho,
    Qe,
}

impl From<YArg> for YBasis {
    fn from(y: YArg) -> Self {
        match y {
            YArg::Rho => YBasis::Rho,
            YArg::Qe => YBasis::QE,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    P,
    E,
    H,
    Rho,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::P => Basis::P,
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::Rho => Basis::Rho,
        }
    }
}

#[derive(Clone, Debug)]
struct Positions(Vec<usize>);

fn parse_m(s: &str) -> Result<HessenbergFunction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_positions(s: &str) -> Result<Positions, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Positions(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad position {t:?}")))
        .collect::<Result<_, _>>()
        .map(Positions)
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_target(s: &str) -> Result<ModularTarget, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Input rejected after parsing; exit code 2.
struct Invalid(String);

impl From<Error> for Invalid {
    fn from(e: Error) -> Self {
        Invalid(e.to_string())
    }
}

/// Runs the CLI on `args` (program name first). Returns the exit code.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(c) => compute(c).map(|text| (text, 0)),
        Command::Verify(v) => verify(v),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn table(rows: impl IntoIterator<Item = (String, String)>) -> String {
    let rows: Vec<_> = rows.into_iter().collect();
    let width = rows.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
    rows.into_iter().map(|(a, b)| format!("{a:<width$}  {b}\n")).collect()
}

fn coefficient_rows<'a>(terms: impl IntoIterator<Item = (&'a Partition, &'a QPoly)>) -> Vec<(String, String)> {
    terms.into_iter().map(|(l, c)| (l.to_string(), c.to_string())).collect()
}

fn coefficients_json(c: &BTreeMap<Partition, QPoly>) -> Value {
    Value::Array(c.iter().map(|(l, v)| json!({ "partition": l.to_json(), "coeff": v.to_json() })).collect())
}

fn compute(c: Compute) -> Result<String, Invalid> {
    match c {
        Compute::X { m, y, decoration, out } => {
            let y = YBasis::from(y);
            let (coeffs, header, observed) = match decoration {
                Some(Positions(s)) => {
                    let d = Decoration::new(m.clone(), s)?;
                    let ex = explore_vertical(&d);
                    (c_coefficients_vertical(&d), d.to_json(), Some(ex))
                }
                None => (c_coefficients(&m), json!({ "m": m.to_json(), "S": [] }), None),
            };
            let x = assemble(m.n(), &coeffs, y);
            Ok(match out.format {
                Format::Json => {
                    let mut v = json!({
                        "input": header,
                        "y": y.name(),
                        "coefficients": coefficients_json(&coeffs),
                        "expansion": x.to_json(),
                    });
                    if let Some(ex) = observed {
                        v["positivity"] = json!({
                            "coefficients_outside_Nq": ex.not_in_nq.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
                        });
                    }
                    pretty(&v)
                }
                Format::Table => {
                    let mut s = table(coefficient_rows(&coeffs));
                    if let Some(ex) = observed {
                        let outside: Vec<String> = ex.not_in_nq.iter().map(|l| l.to_string()).collect();
                        s += &format!(
                            "outside N[q]: {}\n",
                            if outside.is_empty() { "none".to_string() } else { outside.join(" ") }
                        );
                    }
                    s
                }
            })
        }
        Compute::Csf { input, out } => {
            let g = graph_input(&input, true)?;
            Ok(render_monomial(&csf_oracle(&g), out.format))
        }
        Compute::Llt { input, out } => {
            let g = graph_input(&input, false)?;
            Ok(render_monomial(&llt_oracle(&g), out.format))
        }
        Compute::Rho { n, basis, out } => {
            if n == 0 {
                return Err(Invalid("--n must be at least 1".into()));
            }
            let rho = SymFunc::basis_unit(Basis::Rho, &Partition::single(n));
            let f = match Basis::from(basis) {
                Basis::Rho => rho,
                Basis::H => rho_to_h(&rho)?,
                b => convert(&rho_to_h(&rho)?, b)?,
            };
            Ok(render_sym(&f, out.format))
        }
        Compute::Stirling { n, out } => {
            let row = q_stirling_row(n);
            Ok(match out.format {
                Format::Json => pretty(&json!({
                    "n": n,
                    "values": row.iter().enumerate().map(|(k, s)| json!({ "k": k, "value": s.to_json() })).collect::<Vec<_>>(),
                })),
                Format::Table => table(row.iter().enumerate().map(|(k, s)| (k.to_string(), s.to_string()))),
            })
        }
        Compute::OrientationSum { m, out } => Ok(render_sym(&orientation_sum(&graph_of(&m)), out.format)),
    }
}

fn graph_input(input: &GraphInput, allow_edges: bool) -> Result<Graph, Invalid> {
    if let Some(m) = &input.m {
        return Ok(graph_of(m));
    }
    let spec = input.graph.as_deref().expect("clap enforces one input");
    if !allow_edges {
        return Err(Invalid("llt needs an indifference graph given by --m".into()));
    }
    let g = Graph::parse_edge_list(spec, input.vertices)?;
    if !natural_peo_valid(&g) {
        return Err(Invalid("vertex order 1..n is not a perfect elimination ordering".into()));
    }
    Ok(g)
}

fn render_sym(f: &SymFunc, format: Format) -> String {
    match format {
        Format::Json => pretty(&f.to_json()),
        Format::Table => table(
            f.terms()
                .iter()
                .map(|(l, c)| (format!("{}{}", f.basis(), l), c.to_string())),
        ),
    }
}

fn render_monomial(f: &MonomialSym, format: Format) -> String {
    match format {
        Format::Json => pretty(&f.to_json()),
        Format::Table => table(f.terms().iter().map(|(l, c)| (format!("m{l}"), c.to_string()))),
    }
}

fn verify(v: VerifyArgs) -> Result<(String, i32), Invalid> {
    if v.target.is_some() && v.check != Check::Modular {
        return Err(Invalid("--target applies only to the modular check".into()));
    }
    if v.jobs == Some(0) {
        return Err(Invalid("--jobs must be positive".into()));
    }
    let max_n = v.max_n.unwrap_or_else(|| v.check.default_max_n());
    if v.seed.is_some() && max_n == 0 {
        return Err(Invalid("fault injection needs --max-n of at least 1".into()));
    }
    let opts = VerifyOptions {
        jobs: v.jobs,
        fault_seed: v.seed,
    };
    let report = run_check(v.check, max_n, v.target, &opts)?;
    let text = match v.format {
        VerifyFormat::Json => pretty(&report.to_json()),
        VerifyFormat::Text => report.to_text(),
    };
    Ok((text, if report.passed() { 0 } else { 1 }))
}
