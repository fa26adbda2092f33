//! Exhaustive checks of the identities relating forests, colorings and
//! orientations, each run over every input up to a size bound.
//!
//! A check never stops at the first disagreement: every case runs, the first
//! three failures are kept in full, and the rest are counted.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffs::{q_integer, QPoly, Rational};
use crate::error::{Error, Result};
use crate::forests::{
    assemble, c_coefficients, c_coefficients_vertical, c_vertical_forest_sum, count_perms_leq, enumerate_forests,
    enumerate_perms_leq, explore_vertical, forest_from_permutation, forest_p_sum, forest_weight, q_minus_one,
    q_stirling_row, weight_product, wt_perm, X_complete_closed, X_complete_recursion, X_vertical, YBasis,
};
use crate::graphs::{
    enumerate_decorations, enumerate_hessenberg, enumerate_hessenberg_upto, graph_of, modular_triples,
    natural_peo_valid, Graph, HessenbergFunction, ModularTriple,
};
use crate::oracles::{chromatic_count, csf_oracle, llt_oracle, llt_vertical_oracle, orientation_sum};
use crate::partitions::{domino_weight_sum, enumerate_partitions, Partition};
use crate::symfunc::{
    convert, monomial_expand, omega, plethysm_qminus1, q_factorial_h, q_newton_determinant, rho_determinant,
    rho_n_alt, rho_n_via_hall_littlewood, rho_to_h, specialize_epsilon, Basis, MonomialSym, SymFunc,
};

/// Failures rendered in full; the rest are only counted.
pub const MAX_RENDERED_FAILURES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Thm1,
    Thm2,
    Modular,
    Plethystic,
    Orientations,
    Vertical,
    Remark,
    Identities,
    Complete,
    Stirling,
    Weights,
    Bijection,
    Chromatic,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Thm1,
        Check::Thm2,
        Check::Modular,
        Check::Plethystic,
        Check::Orientations,
        Check::Vertical,
        Check::Remark,
        Check::Identities,
        Check::Complete,
        Check::Stirling,
        Check::Weights,
        Check::Bijection,
        Check::Chromatic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Modular => "modular",
            Check::Plethystic => "plethystic",
            Check::Orientations => "orientations",
            Check::Vertical => "vertical",
            Check::Remark => "remark",
            Check::Identities => "identities",
            Check::Complete => "complete",
            Check::Stirling => "stirling",
            Check::Weights => "weights",
            Check::Bijection => "bijection",
            Check::Chromatic => "chromatic",
        }
    }

    /// Bounds that keep each default run to a few seconds.
    pub fn default_max_n(self) -> usize {
        match self {
            Check::Plethystic | Check::Remark => 6,
            Check::Thm1 | Check::Thm2 | Check::Bijection => 7,
            Check::Modular | Check::Orientations | Check::Vertical => 6,
            Check::Chromatic => 5,
            Check::Complete | Check::Weights => 7,
            Check::Identities | Check::Stirling => 8,
        }
    }

    /// Whether the check reads `c_λ(m)` and is therefore affected by fault injection.
    pub fn uses_coefficients(self) -> bool {
        matches!(
            self,
            Check::Thm1 | Check::Thm2 | Check::Modular | Check::Plethystic | Check::Orientations | Check::Remark
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// The function whose modular law is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModularTarget {
    XRho,
    XQe,
    Csf,
    Llt,
}

impl ModularTarget {
    pub const ALL: [ModularTarget; 4] = [ModularTarget::XRho, ModularTarget::XQe, ModularTarget::Csf, ModularTarget::Llt];

    pub fn name(self) -> &'static str {
        match self {
            ModularTarget::XRho => "X_rho",
            ModularTarget::XQe => "X_qe",
            ModularTarget::Csf => "csf",
            ModularTarget::Llt => "llt",
        }
    }

    fn comparison(self) -> &'static str {
        match self {
            ModularTarget::XRho | ModularTarget::XQe => "h",
            ModularTarget::Csf | ModularTarget::Llt => "m",
        }
    }
}

impl FromStr for ModularTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModularTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown modular target {s:?}; expected X_rho, X_qe, csf or llt")))
    }
}

/// A single `+1` added to one coefficient `c_λ(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub m: HessenbergFunction,
    pub lambda: Partition,
}

impl Fault {
    /// Picks `n ∈ [1, max_n]`, then `m` on `[n]`, then a partition with
    /// `c_λ(m) ≠ 0`, all from a generator seeded with `seed`.
    pub fn seeded(seed: u64, max_n: usize) -> Fault {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=max_n.max(1));
        let ms = enumerate_hessenberg(n);
        let m = ms[rng.gen_range(0..ms.len())].clone();
        let lams: Vec<Partition> = c_coefficients(&m).into_keys().collect();
        let lambda = lams[rng.gen_range(0..lams.len())].clone();
        Fault { m, lambda }
    }

    pub fn to_json(&self) -> Value {
        json!({ "m": self.m.to_json(), "partition": self.lambda.to_json(), "delta": 1 })
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Seed for the fault injector; `None` disables it.
    pub fault_seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub input: Value,
    pub left: Value,
    pub right: Value,
    pub detail: String,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({ "input": self.input, "detail": self.detail, "left": self.left, "right": self.right })
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: Check,
    pub bound: usize,
    pub target: Option<ModularTarget>,
    /// Basis in which both sides were compared.
    pub comparison: String,
    pub cases: usize,
    pub failure_count: usize,
    /// The first [`MAX_RENDERED_FAILURES`] failures, in case order.
    pub failures: Vec<Failure>,
    /// Neutral observations, e.g. tallies that are reported but not asserted.
    pub notes: BTreeMap<String, Value>,
    pub fault: Option<Fault>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Stable JSON; elapsed time is left out so identical runs render identically.
    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check.name(),
            "bound": self.bound,
            "target": self.target.map(ModularTarget::name),
            "comparison": self.comparison,
            "cases": self.cases,
            "passed": self.passed(),
            "failure_count": self.failure_count,
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "notes": self.notes,
            "fault": self.fault.as_ref().map(Fault::to_json),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} (max n {}{}): {} | {} cases, {} failures, compared in {} | {:.2?}\n",
            self.check,
            self.bound,
            self.target.map(|t| format!(", target {}", t.name())).unwrap_or_default(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.failure_count,
            self.comparison,
            self.elapsed,
        );
        if let Some(f) = &self.fault {
            s += &format!("  fault injected: {}\n", f.to_json());
        }
        for (k, v) in &self.notes {
            s += &format!("  {k}: {v}\n");
        }
        for f in &self.failures {
            s += &format!("  failure at {}: {}\n    left:  {}\n    right: {}\n", f.input, f.detail, f.left, f.right);
        }
        s
    }
}

/// What one case contributes to a report.
#[derive(Default)]
struct Outcome {
    failures: Vec<Failure>,
    tallies: BTreeMap<&'static str, u64>,
    samples: Vec<(&'static str, Value)>,
}

impl Outcome {
    fn fail(&mut self, input: &Value, detail: &str, left: Value, right: Value) {
        self.failures.push(Failure {
            input: input.clone(),
            left,
            right,
            detail: detail.to_string(),
        });
    }

    fn expect_eq<T: PartialEq>(&mut self, input: &Value, detail: &str, left: &T, right: &T, render: impl Fn(&T) -> Value) {
        if left != right {
            self.fail(input, detail, render(left), render(right));
        }
    }

    fn expect(&mut self, input: &Value, detail: &str, ok: bool, left: impl FnOnce() -> Value) {
        if !ok {
            self.fail(input, detail, left(), Value::Null);
        }
    }

    fn error(&mut self, input: &Value, detail: &str, e: &Error) {
        self.fail(input, detail, json!(e.to_string()), Value::Null);
    }

    fn tally(&mut self, key: &'static str, by: u64) {
        *self.tallies.entry(key).or_default() += by;
    }
}

/// Source of `c_λ(m)`, with the optional fault applied.
struct Coefficients {
    fault: Option<Fault>,
}

impl Coefficients {
    fn of(&self, m: &HessenbergFunction) -> BTreeMap<Partition, QPoly> {
        let mut c = c_coefficients(m);
        if let Some(f) = &self.fault {
            if &f.m == m {
                *c.entry(f.lambda.clone()).or_default() += &QPoly::one();
            }
        }
        c
    }

    fn x(&self, m: &HessenbergFunction, y: YBasis) -> SymFunc {
        assemble(m.n(), &self.of(m), y)
    }
}

struct Runner {
    pool: rayon::ThreadPool,
}

impl Runner {
    fn new(opts: &VerifyOptions) -> Result<Self> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = opts.jobs {
            b = b.num_threads(j.max(1));
        }
        let pool = b.build().map_err(|e| Error::Consistency(format!("thread pool: {e}")))?;
        Ok(Runner { pool })
    }

    /// Runs every case (in parallel, results kept in case order) and merges.
    fn run<T: Sync>(&self, cases: &[T], f: impl Fn(&T, &mut Outcome) + Sync) -> Merged {
        let outcomes: Vec<Outcome> = self.pool.install(|| {
            cases
                .par_iter()
                .map(|c| {
                    let mut o = Outcome::default();
                    f(c, &mut o);
                    o
                })
                .collect()
        });
        let mut merged = Merged {
            cases: cases.len(),
            ..Merged::default()
        };
        for o in outcomes {
            merged.absorb(o);
        }
        merged
    }
}

#[derive(Default)]
struct Merged {
    cases: usize,
    failure_count: usize,
    failures: Vec<Failure>,
    tallies: BTreeMap<&'static str, u64>,
    samples: BTreeMap<&'static str, Vec<Value>>,
}

impl Merged {
    fn absorb(&mut self, o: Outcome) {
        self.failure_count += o.failures.len();
        for f in o.failures {
            if self.failures.len() < MAX_RENDERED_FAILURES {
                self.failures.push(f);
            }
        }
        for (k, v) in o.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        for (k, v) in o.samples {
            let list = self.samples.entry(k).or_default();
            if list.len() < MAX_RENDERED_FAILURES {
                list.push(v);
            }
        }
    }

    fn extend(&mut self, other: Merged) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_RENDERED_FAILURES {
                self.failures.push(f);
            }
        }
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        for (k, vs) in other.samples {
            let list = self.samples.entry(k).or_default();
            for v in vs {
                if list.len() < MAX_RENDERED_FAILURES {
                    list.push(v);
                }
            }
        }
    }

    fn into_report(self, check: Check, bound: usize, target: Option<ModularTarget>, comparison: &str, fault: Option<Fault>, started: Instant) -> VerificationReport {
        let mut notes: BTreeMap<String, Value> = self.tallies.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        for (k, v) in self.samples {
            notes.insert(k.to_string(), Value::Array(v));
        }
        VerificationReport {
            check,
            bound,
            target,
            comparison: comparison.to_string(),
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            notes,
            fault,
            elapsed: started.elapsed(),
        }
    }
}

fn m_json(m: &HessenbergFunction) -> Value {
    json!({ "m": m.to_json() })
}

fn sym_json(f: &SymFunc) -> Value {
    f.to_json()
}

fn mono_json(f: &MonomialSym) -> Value {
    f.to_json()
}

fn poly_json(p: &QPoly) -> Value {
    p.to_json()
}

/// Runs `check` with the given bound. `target` only matters for the modular
/// law; `None` there runs all four targets.
pub fn run_check(check: Check, max_n: usize, target: Option<ModularTarget>, opts: &VerifyOptions) -> Result<VerificationReport> {
    match check {
        Check::Thm1 => verify_thm1(max_n, opts),
        Check::Thm2 => verify_thm2(max_n, opts),
        Check::Modular => match target {
            Some(t) => verify_modular(max_n, t, opts),
            None => verify_modular_all(max_n, opts),
        },
        Check::Plethystic => verify_plethystic(max_n, opts),
        Check::Orientations => verify_orientations(max_n, opts),
        Check::Vertical => verify_vertical(max_n, opts),
        Check::Remark => verify_e_coefficients(max_n, opts),
        Check::Identities => verify_identities(max_n, opts),
        Check::Complete => verify_complete(max_n, opts),
        Check::Stirling => verify_stirling(max_n, opts),
        Check::Weights => verify_weights(max_n, opts),
        Check::Bijection => verify_bijection(max_n, opts),
        Check::Chromatic => verify_chromatic(max_n, opts),
    }
}

fn setup(check: Check, max_n: usize, opts: &VerifyOptions) -> Result<(Runner, Coefficients, Instant)> {
    let started = Instant::now();
    let fault = match opts.fault_seed {
        Some(seed) if check.uses_coefficients() => Some(Fault::seeded(seed, max_n)),
        _ => None,
    };
    Ok((Runner::new(opts)?, Coefficients { fault }, started))
}

/// `ω(X_ρ(m))` equals the chromatic quasisymmetric function of `G_m`.
pub fn verify_thm1(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Thm1, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let input = m_json(m);
        let x = src.x(m, YBasis::Rho);
        let lhs = convert(&x, Basis::P).and_then(|p| omega(&p)).map(|w| monomial_expand(&w));
        match lhs {
            Ok(lhs) => o.expect_eq(&input, "omega(X_rho) vs csf", &lhs, &csf_oracle(&graph_of(m)), mono_json),
            Err(e) => o.error(&input, "conversion", &e),
        }
    });
    Ok(merged.into_report(Check::Thm1, max_n, None, "m", src.fault, started))
}

/// `X_qe(m)` equals the unicellular LLT polynomial of `G_m`, every `c_λ(m)` is
/// in `N[q]`, and the e-coefficients lie in `N[q]` after `q → q + 1`.
pub fn verify_thm2(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Thm2, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let input = m_json(m);
        let c = src.of(m);
        let x = assemble(m.n(), &c, YBasis::QE);
        o.expect_eq(&input, "X_qe vs LLT", &monomial_expand(&x), &llt_oracle(&graph_of(m)), mono_json);
        for (lam, v) in &c {
            o.expect(&input, "c_lambda not in N[q]", v.is_nonneg_integer_coeffs(), || {
                json!({ "partition": lam.to_json(), "coeff": v.to_json() })
            });
        }
        for (lam, v) in x.terms() {
            let shifted = v.shift_q_plus_one();
            o.expect(&input, "e-coefficient at q+1 not in N[q]", shifted.is_nonneg_integer_coeffs(), || {
                json!({ "partition": lam.to_json(), "coeff": shifted.to_json() })
            });
        }
    });
    Ok(merged.into_report(Check::Thm2, max_n, None, "m", src.fault, started))
}

fn modular_side(target: ModularTarget, src: &Coefficients, m: &HessenbergFunction) -> Result<Side> {
    Ok(match target {
        ModularTarget::XRho => Side::Sym(rho_to_h(&src.x(m, YBasis::Rho))?),
        ModularTarget::XQe => Side::Sym(convert(&src.x(m, YBasis::QE), Basis::H)?),
        ModularTarget::Csf => Side::Mono(csf_oracle(&graph_of(m))),
        ModularTarget::Llt => Side::Mono(llt_oracle(&graph_of(m))),
    })
}

#[derive(PartialEq)]
enum Side {
    Sym(SymFunc),
    Mono(MonomialSym),
}

impl Side {
    fn combine(a: &Side, ca: &QPoly, b: &Side, cb: &QPoly) -> Side {
        match (a, b) {
            (Side::Sym(a), Side::Sym(b)) => Side::Sym(&a.scale(ca) + &b.scale(cb)),
            (Side::Mono(a), Side::Mono(b)) => Side::Mono(a.scale(ca).add(&b.scale(cb))),
            _ => unreachable!("one target per run"),
        }
    }

    fn scale(&self, c: &QPoly) -> Side {
        match self {
            Side::Sym(a) => Side::Sym(a.scale(c)),
            Side::Mono(a) => Side::Mono(a.scale(c)),
        }
    }

    fn json(&self) -> Value {
        match self {
            Side::Sym(a) => a.to_json(),
            Side::Mono(a) => a.to_json(),
        }
    }
}

fn modular_cases(max_n: usize) -> Vec<ModularTriple> {
    (1..=max_n).flat_map(modular_triples).collect()
}

fn modular_run(runner: &Runner, src: &Coefficients, cases: &[ModularTriple], target: ModularTarget) -> Merged {
    let one_plus_q = QPoly::from_ints(&[1, 1]);
    runner.run(cases, |t, o| {
        let input = json!({ "target": target.name(), "triple": t.to_json() });
        let sides = (
            modular_side(target, src, &t.m0),
            modular_side(target, src, &t.m1),
            modular_side(target, src, &t.m2),
        );
        match sides {
            (Ok(f0), Ok(f1), Ok(f2)) => {
                let lhs = f1.scale(&one_plus_q);
                let rhs = Side::combine(&f0, &QPoly::q(), &f2, &QPoly::one());
                if lhs != rhs {
                    o.fail(&input, "(1+q) f(m1) vs q f(m0) + f(m2)", lhs.json(), rhs.json());
                }
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => o.error(&input, "conversion", &e),
        }
    })
}

/// `(1 + q) f(m1) = q f(m0) + f(m2)` on every modular triple with `n ≤ max_n`.
pub fn verify_modular(max_n: usize, target: ModularTarget, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Modular, max_n, opts)?;
    let cases = modular_cases(max_n);
    let merged = modular_run(&runner, &src, &cases, target);
    Ok(merged.into_report(Check::Modular, max_n, Some(target), target.comparison(), src.fault, started))
}

fn verify_modular_all(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Modular, max_n, opts)?;
    let cases = modular_cases(max_n);
    let mut merged = Merged::default();
    for t in ModularTarget::ALL {
        merged.extend(modular_run(&runner, &src, &cases, t));
    }
    Ok(merged.into_report(Check::Modular, max_n, None, "h (X targets), m (oracles)", src.fault, started))
}

/// `LLT(G)[(q−1)X] / (q−1)^n` equals the chromatic quasisymmetric function.
pub fn verify_plethystic(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Plethystic, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let input = m_json(m);
        let d = q_minus_one().pow(m.n());
        let lhs = convert(&src.x(m, YBasis::QE), Basis::P)
            .and_then(|p| plethysm_qminus1(&p))
            .and_then(|p| p.try_map_coeffs(|c| c.exact_divide(&d)));
        match lhs {
            Ok(lhs) => o.expect_eq(&input, "plethysm vs csf", &monomial_expand(&lhs), &csf_oracle(&graph_of(m)), mono_json),
            Err(e) => o.error(&input, "plethysm or exact division", &e),
        }
    });
    Ok(merged.into_report(Check::Plethystic, max_n, None, "m", src.fault, started))
}

/// `X_qe(m)` at `q + 1` equals the orientation sum of `G_m`.
pub fn verify_orientations(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Orientations, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let input = m_json(m);
        let lhs = src.x(m, YBasis::QE).map_coeffs(QPoly::shift_q_plus_one);
        o.expect_eq(&input, "X_qe(q+1) vs orientations", &lhs, &orientation_sum(&graph_of(m)), sym_json);
    });
    Ok(merged.into_report(Check::Orientations, max_n, None, "e", src.fault, started))
}

/// For every decorated `(m, S)`: recursion and inclusion–exclusion agree,
/// `X_qe(m, S) = (q−1)^{|S|} LLT(m, S)`, the forest-level sum reproduces
/// `c_λ(m, S)`, and `c_λ(m, S)` at `q + 1` is in `N[q]`. Whether `c_λ(m, S)`
/// itself is in `N[q]` is tallied, not asserted.
pub fn verify_vertical(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Vertical, max_n, opts)?;
    let cases: Vec<_> = enumerate_hessenberg_upto(max_n).iter().flat_map(enumerate_decorations).collect();
    let merged = runner.run(&cases, |d, o| {
        let input = d.to_json();
        let x = match X_vertical(d, YBasis::QE) {
            Ok(x) => x,
            Err(e) => return o.error(&input, "recursion vs inclusion-exclusion", &e),
        };
        match llt_vertical_oracle(d) {
            Ok(llt) => {
                let scaled = llt.scale(&q_minus_one().pow(d.set().len()));
                o.expect_eq(&input, "X_qe(m,S) vs (q-1)^|S| LLT(m,S)", &monomial_expand(&x), &scaled, mono_json);
            }
            Err(e) => o.error(&input, "vertical LLT recursion", &e),
        }
        let c = c_coefficients_vertical(d);
        o.expect_eq(&input, "forest-level sum vs inclusion-exclusion", &c_vertical_forest_sum(d), &c, |t| {
            json!(t.iter().map(|(l, v)| json!([l.to_json(), v.to_json()])).collect::<Vec<_>>())
        });
        for (lam, v) in &c {
            let shifted = v.shift_q_plus_one();
            o.expect(&input, "c_lambda(m,S) at q+1 not in N[q]", shifted.is_nonneg_integer_coeffs(), || {
                json!({ "partition": lam.to_json(), "coeff": shifted.to_json() })
            });
        }
        let ex = explore_vertical(d);
        o.tally("decorated_coefficients", c.len() as u64);
        o.tally("decorated_coefficients_outside_Nq", ex.not_in_nq.len() as u64);
        o.tally("forest_tally_matches_c_at_1", ex.tallies_match_at_one as u64);
        if !ex.not_in_nq.is_empty() {
            o.samples.push(("decorated_examples_outside_Nq", ex.to_json()));
        }
    });
    Ok(merged.into_report(Check::Vertical, max_n, None, "m", src.fault, started))
}

/// Domino-weight sum `w_{μλ}` for `λ` with distinct parts, as a sum over
/// ordered set partitions `(B_1, …, B_{ℓ(μ)})` of the parts of `λ` with block
/// sums `μ_k`. Each block contributes `(|B| − 1)! Σ_{j∈B} [λ_j]_q`; with
/// `literal` the factorial is dropped.
pub fn distinct_parts_weight(mu: &Partition, lambda: &Partition, literal: bool) -> QPoly {
    let parts = lambda.parts();
    let k = mu.len();
    let mut total = QPoly::zero();
    let mut assign = vec![0usize; parts.len()];
    fn rec(j: usize, parts: &[usize], mu: &[usize], assign: &mut [usize], literal: bool, total: &mut QPoly) {
        if j == parts.len() {
            let mut term = QPoly::one();
            for (b, &target) in mu.iter().enumerate() {
                let members: Vec<usize> = (0..parts.len()).filter(|&i| assign[i] == b).collect();
                if members.iter().map(|&i| parts[i]).sum::<usize>() != target {
                    return;
                }
                let mut block: QPoly = members.iter().map(|&i| q_integer(parts[i])).sum();
                if !literal {
                    let fact: u64 = (1..members.len() as u64).product();
                    block = block.scale(&Rational::from_integer(fact.into()));
                }
                term = &term * &block;
            }
            *total += &term;
            return;
        }
        for b in 0..mu.len() {
            assign[j] = b;
            rec(j + 1, parts, mu, assign, literal, total);
        }
    }
    if k > 0 {
        rec(0, parts, mu.parts(), &mut assign, literal, &mut total);
    }
    total
}

fn has_distinct_parts(lam: &Partition) -> bool {
    lam.parts().windows(2).all(|w| w[0] > w[1])
}

/// The e-coefficients `csf_λ = Σ_μ (−1)^{ℓ(λ)−ℓ(μ)} w_{μλ} c_μ` reproduce
/// `ω(X_ρ)` in the h basis; the closed forms for `(n)`, `(a, b)` and `(a, a)`
/// and the distinct-parts weight formula agree with the general one.
pub fn verify_e_coefficients(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, src, started) = setup(Check::Remark, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let input = m_json(m);
        let n = m.n();
        let c = src.of(m);
        let cf = |lam: &Partition| c.get(lam).cloned().unwrap_or_default();
        let mut via_dominoes = SymFunc::zero(n, Basis::H);
        let mut coeff = BTreeMap::new();
        for lam in enumerate_partitions(n) {
            let mut acc = QPoly::zero();
            for (mu, cm) in &c {
                let w = match domino_weight_sum(mu, &lam) {
                    Ok(w) => w,
                    Err(e) => return o.error(&input, "domino weights", &e),
                };
                let sign = if (lam.len() + mu.len()) % 2 == 1 { -QPoly::one() } else { QPoly::one() };
                acc += &(&(&w * cm) * &sign);
            }
            via_dominoes.add_term(lam.clone(), &acc);
            coeff.insert(lam, acc);
        }
        match rho_to_h(&assemble(n, &c, YBasis::Rho)) {
            Ok(x) => o.expect_eq(&input, "sum of csf_lambda h_lambda vs rho_to_h(X_rho)", &via_dominoes, &x, sym_json),
            Err(e) => o.error(&input, "conversion", &e),
        }
        if n == 0 {
            return;
        }
        let whole = Partition::single(n);
        let get = |lam: &Partition| coeff.get(lam).cloned().unwrap_or_default();
        o.expect_eq(&input, "csf_(n) = [n] c_(n)", &get(&whole), &(&q_integer(n) * &cf(&whole)), poly_json);
        for b in 1..=n / 2 {
            let a = n - b;
            let lam = Partition::new(vec![a, b]);
            let special = if a == b {
                &(&q_integer(a) * &q_integer(a)) * &cf(&lam) - &q_integer(a) * &cf(&whole)
            } else {
                &(&q_integer(a) * &q_integer(b)) * &cf(&lam) - &(&q_integer(a) + &q_integer(b)) * &cf(&whole)
            };
            o.expect_eq(&input, "two-part closed form", &get(&lam), &special, poly_json);
        }
    });
    // The distinct-parts formula depends only on n.
    let shapes: Vec<(Partition, Partition)> = (1..=max_n)
        .flat_map(|n| {
            let ps = enumerate_partitions(n);
            ps.iter()
                .filter(|l| has_distinct_parts(l))
                .flat_map(|l| ps.iter().map(move |mu| (mu.clone(), l.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut weights = runner.run(&shapes, |(mu, lam), o| {
        let input = json!({ "shape": mu.to_json(), "type": lam.to_json() });
        match domino_weight_sum(mu, lam) {
            Ok(w) => {
                o.expect_eq(&input, "distinct-parts weight formula", &distinct_parts_weight(mu, lam, false), &w, poly_json);
                if distinct_parts_weight(mu, lam, true) != w {
                    o.tally("literal_distinct_parts_formula_mismatches", 1);
                    o.samples.push(("literal_distinct_parts_formula_first_mismatches", input.clone()));
                }
            }
            Err(e) => o.error(&input, "domino weights", &e),
        }
    });
    weights.cases = 0;
    let mut merged = merged;
    merged.extend(weights);
    merged.tallies.entry("literal_distinct_parts_formula_mismatches").or_insert(0);
    Ok(merged.into_report(Check::Remark, max_n, None, "h", src.fault, started))
}

/// The ρ/h identities: `[n] h_n = Σ h_{n−j} ρ_j`, the two determinants, the
/// composition sum, the domino-tabloid expansion of `ρ_λ`, the
/// specializations at `q = 1` and `q = 0`, and the Newton expansion of `n! h_n`.
pub fn verify_identities(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, _src, started) = setup(Check::Identities, max_n, opts)?;
    #[derive(Clone)]
    enum Case {
        Degree(usize),
        Shape(Partition),
    }
    let mut cases: Vec<Case> = (1..=max_n).map(Case::Degree).collect();
    cases.extend((1..=max_n).flat_map(enumerate_partitions).map(Case::Shape));
    let merged = runner.run(&cases, |case, o| match case {
        Case::Degree(n) => identities_for_degree(*n, o),
        Case::Shape(lam) => identities_for_shape(lam, o),
    });
    Ok(merged.into_report(Check::Identities, max_n, None, "h", None, started))
}

fn identities_for_degree(n: usize, o: &mut Outcome) {
    let input = json!({ "n": n });
    let rho = |j: usize| SymFunc::basis_unit(Basis::Rho, &Partition::single(j));
    let h = |j: usize| SymFunc::basis_unit(Basis::H, &Partition::single(j));
    let rho_n_h = match rho_to_h(&rho(n)) {
        Ok(x) => x,
        Err(e) => return o.error(&input, "rho_to_h", &e),
    };
    let hl: Vec<SymFunc> = match (1..=n).map(rho_n_via_hall_littlewood).collect::<Result<_>>() {
        Ok(v) => v,
        Err(e) => return o.error(&input, "Hall-Littlewood route", &e),
    };
    o.expect_eq(&input, "Hall-Littlewood route vs recurrence", &hl[n - 1], &rho_n_h, sym_json);
    o.expect_eq(&input, "composition sum vs recurrence", &rho_n_alt(n), &rho_n_h, sym_json);

    // [n] h_n = Σ_j h_{n−j} ρ_j, with ρ_j taken from the Hall–Littlewood route.
    let mut rhs = SymFunc::zero(n, Basis::H);
    for j in 1..=n {
        let hj = if j == n { SymFunc::one(Basis::H) } else { h(n - j) };
        rhs = &rhs + &hj.multiply(&hl[j - 1]).expect("h basis");
    }
    o.expect_eq(&input, "[n] h_n = sum h_(n-j) rho_j", &h(n).scale(&q_integer(n)), &rhs, sym_json);

    if n <= 6 {
        match rho_to_h(&q_newton_determinant(n)) {
            Ok(d) => o.expect_eq(&input, "q-Newton determinant", &d, &q_factorial_h(n), sym_json),
            Err(e) => o.error(&input, "rho_to_h", &e),
        }
        let sign = if n % 2 == 1 { QPoly::one() } else { -QPoly::one() };
        o.expect_eq(&input, "h determinant = (-1)^(n-1) rho_n", &rho_determinant(n).scale(&sign), &rho_n_h, sym_json);
    }

    // n! h_n in p: coefficient of p_λ counts permutations of cycle type λ.
    if n <= 6 {
        let fact: u64 = (1..=n as u64).product();
        match convert(&h(n).scale_rational(&Rational::from_integer(fact.into())), Basis::P) {
            Ok(p) => {
                let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
                for s in enumerate_perms_leq(&HessenbergFunction::complete(n)) {
                    *counts.entry(s.cycle_type()).or_default() += 1;
                }
                let mut expected = SymFunc::zero(n, Basis::P);
                for (lam, k) in counts {
                    expected.add_term(lam, &QPoly::from_int(k));
                }
                o.expect_eq(&input, "n! h_n in power sums", &p, &expected, sym_json);
            }
            Err(e) => o.error(&input, "convert", &e),
        }
    }
}

fn identities_for_shape(lam: &Partition, o: &mut Outcome) {
    let input = json!({ "partition": lam.to_json() });
    let n = lam.size();
    let rho = SymFunc::basis_unit(Basis::Rho, lam);
    let in_h = match rho_to_h(&rho) {
        Ok(x) => x,
        Err(e) => return o.error(&input, "rho_to_h", &e),
    };
    let mut dominoes = SymFunc::zero(n, Basis::H);
    for mu in enumerate_partitions(n) {
        match domino_weight_sum(lam, &mu) {
            Ok(w) => {
                let sign = if (lam.len() + mu.len()) % 2 == 1 { -QPoly::one() } else { QPoly::one() };
                dominoes.add_term(mu, &(&w * &sign));
            }
            Err(e) => return o.error(&input, "domino weights", &e),
        }
    }
    o.expect_eq(&input, "rho_lambda via domino tabloids", &dominoes, &in_h, sym_json);

    match convert(&in_h, Basis::P) {
        Ok(p) => o.expect_eq(&input, "rho_lambda at q=1 is p_lambda", &p.eval_q(&Rational::one()), &SymFunc::basis_unit(Basis::P, lam), sym_json),
        Err(e) => o.error(&input, "convert", &e),
    }
    match convert(&in_h, Basis::E) {
        Ok(e) => {
            let sign = if (n - lam.len()) % 2 == 1 { -QPoly::one() } else { QPoly::one() };
            let expected = SymFunc::basis_unit(Basis::E, lam).scale(&sign);
            o.expect_eq(&input, "rho_lambda at q=0 is signed e_lambda", &e.eval_q(&Rational::zero()), &expected, sym_json);
        }
        Err(e) => o.error(&input, "convert", &e),
    }
}

/// Complete graphs: recursion, closed form and enumeration agree,
/// `X_ρ(K_n) = n!_q h_n`, and the LLT complete-graph recurrence holds.
pub fn verify_complete(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, _src, started) = setup(Check::Complete, max_n, opts)?;
    let cases: Vec<usize> = (0..=max_n).collect();
    let merged = runner.run(&cases, |&n, o| {
        let input = json!({ "n": n });
        let kn = HessenbergFunction::complete(n);
        for y in [YBasis::Rho, YBasis::QE] {
            let rec = X_complete_recursion(n, y);
            o.expect_eq(&input, "recursion vs closed form", &rec, &X_complete_closed(n, y), sym_json);
            o.expect_eq(&input, "recursion vs enumeration", &rec, &assemble(n, &c_coefficients(&kn), y), sym_json);
        }
        match rho_to_h(&X_complete_recursion(n, YBasis::Rho)) {
            Ok(x) => o.expect_eq(&input, "X_rho(K_n) = n!_q h_n", &x, &q_factorial_h(n), sym_json),
            Err(e) => o.error(&input, "rho_to_h", &e),
        }
        if (1..=6).contains(&n) {
            let mut rhs = MonomialSym::zero(n);
            for i in 1..=n {
                let scalar = (n - i + 1..n).fold(QPoly::one(), |a, j| &a * &q_integer(j));
                let yi = monomial_expand(&YBasis::QE.element(&Partition::single(i)));
                let prev = llt_oracle(&graph_of(&HessenbergFunction::complete(n - i)));
                rhs = rhs.add(&prev.mul(&yi).scale(&scalar));
            }
            o.expect_eq(&input, "LLT(K_n) recurrence", &llt_oracle(&graph_of(&kn)), &rhs, mono_json);
        }
    });
    Ok(merged.into_report(Check::Complete, max_n, None, "rho/e/h, m for LLT", None, started))
}

/// `Σ_{ℓ(λ)=k} c_λ(K_n) = s_q(n, k)`.
pub fn verify_stirling(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, _src, started) = setup(Check::Stirling, max_n, opts)?;
    let cases: Vec<usize> = (1..=max_n).collect();
    let merged = runner.run(&cases, |&n, o| {
        let c = c_coefficients(&HessenbergFunction::complete(n));
        let row = q_stirling_row(n);
        for (k, s) in row.iter().enumerate() {
            let sum: QPoly = c.iter().filter(|(l, _)| l.len() == k).map(|(_, v)| v.clone()).sum();
            o.expect_eq(&json!({ "n": n, "k": k }), "sum of c_lambda(K_n) vs s_q(n,k)", &sum, s, poly_json);
        }
    });
    Ok(merged.into_report(Check::Stirling, max_n, None, "Q[q]", None, started))
}

/// `Σ_{σ≤m} q^{wt_m(σ)} = Π (1 + [m(i) − i]_q)`.
pub fn verify_weights(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, _src, started) = setup(Check::Weights, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let sum: QPoly = c_coefficients(m).into_values().sum();
        o.expect_eq(&m_json(m), "weight sum vs product", &sum, &weight_product(m), poly_json);
    });
    Ok(merged.into_report(Check::Weights, max_n, None, "Q[q]", None, started))
}

/// The weighted permutation-to-forest map is a bijection onto the increasing
/// spanning forests of `G_m`, preserving weight and partition.
pub fn verify_bijection(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, _src, started) = setup(Check::Bijection, max_n, opts)?;
    let cases = enumerate_hessenberg_upto(max_n);
    let merged = runner.run(&cases, |m, o| {
        let input = m_json(m);
        let g = graph_of(m);
        let forests = enumerate_forests(&g);
        let perms = enumerate_perms_leq(m);
        let expected = count_perms_leq(m);
        o.expect_eq(&input, "permutation count", &(perms.len() as u64), &expected, |v| json!(v));
        o.expect_eq(&input, "forest count", &(forests.len() as u64), &expected, |v| json!(v));
        let mut image = std::collections::BTreeSet::new();
        for s in &perms {
            let sj = json!({ "m": m.to_json(), "sigma": s.word() });
            match forest_from_permutation(s, m) {
                Ok(f) => {
                    o.expect(&sj, "image is a forest of G_m", f.is_spanning_forest_of(&g), || f.to_json());
                    o.expect_eq(&sj, "weight", &forest_weight(&f, &g), &wt_perm(s, m), |v| json!(v));
                    o.expect_eq(&sj, "partition", &f.partition(), &s.cycle_type(), Partition::to_json);
                    o.expect(&sj, "injective", image.insert(f.clone()), || f.to_json());
                }
                Err(e) => o.error(&sj, "forest_from_permutation", &e),
            }
        }
        o.expect_eq(&input, "image size", &(image.len() as u64), &expected, |v| json!(v));
    });
    Ok(merged.into_report(Check::Bijection, max_n, None, "sets", None, started))
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).expect("valid edges")
        })
        .collect()
}

/// Checks the forest p-expansion and its ε-specialization against colorings on one graph.
pub fn chromatic_case(g: &Graph) -> std::result::Result<(), Failure> {
    let mut o = Outcome::default();
    chromatic_into(g, &mut o);
    match o.failures.into_iter().next() {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

fn chromatic_into(g: &Graph, o: &mut Outcome) {
    let input = json!({ "n": g.n(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() });
    let p = forest_p_sum(g);
    let at_one = csf_oracle(g).eval_q(&Rational::one());
    o.expect_eq(&input, "forest p-sum vs csf at q=1", &monomial_expand(&p), &at_one, mono_json);
    match specialize_epsilon(&p) {
        Ok(chi) => {
            for k in 1..=g.n() + 2 {
                let value = chi.eval(&Rational::from_integer((k as u64).into()), &Rational::one());
                let count = Rational::from_integer(chromatic_count(g, k).into());
                if value != count {
                    o.fail(&json!({ "graph": input, "x": k }), "epsilon vs chromatic count", json!(value.to_string()), json!(count.to_string()));
                }
            }
        }
        Err(e) => o.error(&input, "epsilon", &e),
    }
}

/// For every graph on `n ≤ max_n` vertices whose natural order is a perfect
/// elimination ordering: the signed forest p-sum equals the chromatic
/// symmetric function at `q = 1`, and its ε-image counts proper colorings.
/// Indifference graphs are also checked through `ω(X_ρ)`.
pub fn verify_chromatic(max_n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (runner, _src, started) = setup(Check::Chromatic, max_n, opts)?;
    let graphs: Vec<Graph> = (1..=max_n).flat_map(all_graphs).filter(natural_peo_valid).collect();
    let mut merged = runner.run(&graphs, chromatic_into);
    let ms = enumerate_hessenberg_upto(max_n);
    let indiff = runner.run(&ms, |m, o| {
        let input = m_json(m);
        let g = graph_of(m);
        let chi = rho_to_h(&X_complete_or_of(m))
            .and_then(|h| convert(&h, Basis::P))
            .and_then(|p| omega(&p))
            .and_then(|w| specialize_epsilon(&w.eval_q(&Rational::one())));
        match chi {
            Ok(chi) => {
                for k in 1..=m.n() + 2 {
                    let value = chi.eval(&Rational::from_integer((k as u64).into()), &Rational::one());
                    let count = Rational::from_integer(chromatic_count(&g, k).into());
                    if value != count {
                        o.fail(&json!({ "m": m.to_json(), "x": k }), "epsilon(omega X_rho) vs chromatic count", json!(value.to_string()), json!(count.to_string()));
                    }
                }
            }
            Err(e) => o.error(&input, "conversion", &e),
        }
    });
    merged.extend(indiff);
    Ok(merged.into_report(Check::Chromatic, max_n, None, "m at q=1, Q[x]", None, started))
}

#[allow(non_snake_case)]
fn X_complete_or_of(m: &HessenbergFunction) -> SymFunc {
    assemble(m.n(), &c_coefficients(m), YBasis::Rho)
}

/// `c_λ(K_n)` summed by length, `s_q(n, k)` and `n!_q` are all reachable from here;
/// this helper returns `Σ_k s_q(n, k)` which equals `Π_{j<n} (1 + [j]_q)`.
pub fn stirling_row_sum(n: usize) -> QPoly {
    q_stirling_row(n).into_iter().sum()
}
