mod parse;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hankelforge::families::{
    motzkin_lk_via_chebyshev, verify_closed_form, DetFamilyId, NamedFamily,
};
use hankelforge::hankel::{default_truncation, det_sequence};
use hankelforge::identities::{
    check_cigler_st, check_convolution_identity, check_main_theorem, lucas_l, IdentityReport,
    Instance, Outcome, Parity, QuadraticFamily,
};
use hankelforge::tau::{
    detect_periodicity, direct_dets, fixtures, iterate_tau, replay_trace, CanonicalEquation,
};
use hankelforge::{Error, Polynomial, PowerSeries, Rational};

use parse::{parse_coeffs, parse_rational_function, ParseError};

/// Exact shifted Hankel determinants of convolution powers.
#[derive(Parser)]
#[command(name = "hankelforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of F^K.
    Series {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'K', long, default_value_t = 1)]
        power: u32,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// D_{K,M}(n) = det(a_{K,i+j+M}) for n = 0..=n-max.
    Det {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'K', long, default_value_t = 1)]
        power: u32,
        #[arg(short = 'M', long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check an identity over a parameter grid; exits 1 on any failure.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Series order for `convolution`.
        #[arg(long, default_value_t = 30)]
        terms: usize,
        /// Random cases for `cigler-st`.
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Iterate the quadratic transformation and replay determinants.
    Tau {
        /// motzkin-cube, catalan, catalan-square or motzkin-g1
        #[arg(long, conflicts_with_all = ["a", "b", "c"])]
        fixture: Option<String>,
        /// Coefficient of F^2, as `num ; den`.
        #[arg(long, allow_hyphen_values = true, requires_all = ["b", "c"])]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires_all = ["a", "c"])]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires_all = ["a", "b"])]
        c: Option<String>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// catalan, motzkin or generalized_catalan (default motzkin)
    #[arg(long, conflicts_with_all = ["w", "u", "v"])]
    family: Option<String>,
    /// Custom family w + u F + v F^2 = 0; coefficients in ascending degree.
    #[arg(long, allow_hyphen_values = true, requires_all = ["u", "v"])]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "v")]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "u")]
    v: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Truncation order of the series, overriding the computed default.
    #[arg(long, env = "HANKELFORGE_PRECISION")]
    precision: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// main theorem grid on the Catalan family
    Cigler,
    /// main theorem grid on the Motzkin family
    Motzkin,
    /// main theorem grid on the selected family
    Theorem,
    /// shifted Hankel inversion on random polynomials
    CiglerSt,
    /// F^k v^k + w^k / F^k = L_k
    Convolution,
    /// closed forms of the Motzkin determinant sequences
    ClosedForms,
    /// Chebyshev form of the Motzkin L_k
    Chebyshev,
}

const EXIT_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_TRUNCATION: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TruncationExceeded { .. } | Error::IndeterminateValuation { .. } => {
                EXIT_TRUNCATION
            }
            Error::Inconsistent(_) => EXIT_FAILED,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Series {
            family,
            power,
            terms,
            output,
        } => {
            let fam = family.resolve()?;
            let terms = terms as usize;
            let f = fam.solve(output.precision.unwrap_or(terms))?;
            let f = f.pow(power);
            let values = (0..terms)
                .map(|n| f.coeff(n).cloned())
                .collect::<hankelforge::Result<Vec<_>>>()?;
            print!(
                "{}",
                render_values(output.format, "coeff", json!({ "K": power }), &values)
            );
            Ok(0)
        }
        Command::Det {
            family,
            power,
            shift,
            n_max,
            output,
        } => {
            let fam = family.resolve()?;
            let f = fam.solve(
                output
                    .precision
                    .unwrap_or_else(|| default_truncation(shift, n_max)),
            )?;
            let values = det_sequence(&f, power, shift, n_max)?;
            print!(
                "{}",
                render_values(
                    output.format,
                    "det",
                    json!({ "K": power, "M": shift }),
                    &values
                )
            );
            Ok(0)
        }
        Command::Verify {
            target,
            family,
            k_max,
            m_max,
            n_max,
            terms,
            cases,
            seed,
            format,
        } => {
            let reports = match target {
                Target::Cigler => {
                    theorem_grid(&NamedFamily::Catalan.quadratic(), k_max, m_max, n_max)?
                }
                Target::Motzkin => {
                    theorem_grid(&NamedFamily::Motzkin.quadratic(), k_max, m_max, n_max)?
                }
                Target::Theorem => theorem_grid(&family.resolve()?, k_max, m_max, n_max)?,
                Target::CiglerSt => cigler_st_suite(seed, cases, m_max as usize, n_max)?,
                Target::Convolution => {
                    let families = match family.given() {
                        true => vec![family.resolve()?],
                        false => NamedFamily::builtins()
                            .iter()
                            .map(NamedFamily::quadratic)
                            .collect(),
                    };
                    let mut out = Vec::new();
                    for fam in &families {
                        for k in 1..=k_max {
                            out.push(check_convolution_identity(fam, k, terms)?);
                        }
                    }
                    out
                }
                Target::ClosedForms => DetFamilyId::ALL
                    .iter()
                    .map(|&id| verify_closed_form(id, n_max))
                    .collect::<hankelforge::Result<_>>()?,
                Target::Chebyshev => vec![chebyshev_report(k_max)],
            };
            print!("{}", render_reports(format, target, &reports));
            Ok(if reports.iter().all(IdentityReport::holds) {
                0
            } else {
                EXIT_FAILED
            })
        }
        Command::Tau {
            fixture,
            a,
            b,
            c,
            steps,
            n_max,
            format,
        } => {
            let eq = match (a, b, c) {
                (Some(a), Some(b), Some(c)) => CanonicalEquation::canonicalize(
                    &parse_rational_function(&a).map_err(|e| labelled("--a", e))?,
                    &parse_rational_function(&b).map_err(|e| labelled("--b", e))?,
                    &parse_rational_function(&c).map_err(|e| labelled("--c", e))?,
                )?,
                _ => fixtures::by_name(fixture.as_deref().unwrap_or("motzkin-cube"))?,
            };
            run_tau(&eq, steps as usize, n_max, format)
        }
    }
}

fn labelled(flag: &str, e: ParseError) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: format!("{flag}: {e}"),
    }
}

impl FamilyArgs {
    fn given(&self) -> bool {
        self.family.is_some() || self.u.is_some()
    }

    fn resolve(&self) -> Result<QuadraticFamily, Failure> {
        if let (Some(u), Some(v)) = (&self.u, &self.v) {
            let w = match &self.w {
                Some(w) => parse_coeffs(w).map_err(|e| labelled("--w", e))?,
                None => Polynomial::one(),
            };
            let u = parse_coeffs(u).map_err(|e| labelled("--u", e))?;
            let v = parse_coeffs(v).map_err(|e| labelled("--v", e))?;
            return Ok(QuadraticFamily::new(w, u, v)?);
        }
        let named: NamedFamily = self.family.as_deref().unwrap_or("motzkin").parse()?;
        Ok(named.quadratic())
    }
}

fn theorem_grid(
    fam: &QuadraticFamily,
    k_max: u32,
    m_max: u32,
    n_max: usize,
) -> Result<Vec<IdentityReport>, Failure> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for m in 0..=m_max {
            for parity in [Parity::Even, Parity::Odd] {
                out.push(check_main_theorem(fam, k, m, parity, n_max)?);
            }
        }
    }
    Ok(out)
}

fn cigler_st_suite(
    seed: u64,
    cases: usize,
    m_max: usize,
    n_max: usize,
) -> Result<Vec<IdentityReport>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(cases);
    for _ in 0..cases {
        let degree = rng.gen_range(0..=6);
        let mut coeffs = vec![1];
        coeffs.extend((0..degree).map(|_| rng.gen_range(-5..=5)));
        let m = rng.gen_range(0..=m_max);
        let n = rng.gen_range(0..=n_max);
        let s = PowerSeries::from_polynomial(&Polynomial::from_ints(&coeffs), 2 * n + m + 1);
        let mut report = check_cigler_st(&s, m, n)?;
        report.claim = format!(
            "{} for s = {}",
            report.claim,
            Polynomial::from_ints(&coeffs)
        );
        out.push(report);
    }
    Ok(out)
}

fn chebyshev_report(k_max: u32) -> IdentityReport {
    let motzkin = NamedFamily::Motzkin.quadratic();
    let mut report = IdentityReport::new("L_k = 2(-x)^k T_k((x-1)/(2x)) for Motzkin");
    for k in 1..=k_max {
        let (lhs, rhs) = (lucas_l(&motzkin, k), motzkin_lk_via_chebyshev(k));
        let outcome = match (0..=lhs.degree().max(rhs.degree()).unwrap_or(0))
            .find(|&i| lhs.coeff(i) != rhs.coeff(i))
        {
            None => Outcome::Holds,
            Some(i) => Outcome::Fails {
                lhs: lhs.coeff(i),
                rhs: rhs.coeff(i),
            },
        };
        report.instances.push(Instance {
            params: vec![("k", k as i64)],
            outcome,
        });
    }
    report
}

fn render_values(format: Format, label: &str, header: Value, values: &[Rational]) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n}\t{v}");
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "n,{label}");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        Format::Json => {
            let mut doc = header;
            let list: Vec<Value> = values
                .iter()
                .enumerate()
                .map(|(n, v)| json!({ "n": n, label: v.to_string() }))
                .collect();
            doc["values"] = Value::Array(list);
            let _ = writeln!(out, "{doc}");
        }
    }
    out
}

fn outcome_parts(outcome: &Outcome) -> (&'static str, Option<String>, Option<String>) {
    match outcome {
        Outcome::Holds => ("holds", None, None),
        Outcome::Vacuous => ("vacuous", None, None),
        Outcome::Fails { lhs, rhs } => ("fails", Some(lhs.to_string()), Some(rhs.to_string())),
    }
}

fn params_text(instance: &Instance) -> String {
    instance
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_reports(format: Format, target: Target, reports: &[IdentityReport]) -> String {
    let total: usize = reports.iter().map(|r| r.instances.len()).sum();
    let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
    let name = target
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let mut out = String::new();
    match format {
        Format::Plain => {
            for report in reports {
                let _ = writeln!(out, "# {}", report.claim);
                for instance in &report.instances {
                    let tag = if instance.holds() { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{tag}\t{instance}");
                }
            }
            let _ = writeln!(out, "{name}: {total} instances, {failures} failures");
        }
        Format::Csv => {
            let _ = writeln!(out, "claim,params,outcome,lhs,rhs");
            for report in reports {
                for instance in &report.instances {
                    let (outcome, lhs, rhs) = outcome_parts(&instance.outcome);
                    let _ = writeln!(
                        out,
                        "\"{}\",{},{outcome},{},{}",
                        report.claim.replace('"', "\"\""),
                        params_text(instance),
                        lhs.unwrap_or_default(),
                        rhs.unwrap_or_default()
                    );
                }
            }
        }
        Format::Json => {
            let list: Vec<Value> = reports
                .iter()
                .map(|report| {
                    let instances: Vec<Value> = report
                        .instances
                        .iter()
                        .map(|instance| {
                            let params: serde_json::Map<String, Value> =
                                instance.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                            let (outcome, lhs, rhs) = outcome_parts(&instance.outcome);
                            json!({ "params": params, "outcome": outcome, "lhs": lhs, "rhs": rhs })
                        })
                        .collect();
                    json!({ "claim": report.claim, "holds": report.holds(), "instances": instances })
                })
                .collect();
            let doc = json!({ "target": name, "instances": total, "failures": failures, "reports": list });
            let _ = writeln!(out, "{doc}");
        }
    }
    out
}

fn run_tau(
    eq: &CanonicalEquation,
    steps: usize,
    n_max: usize,
    format: Format,
) -> Result<u8, Failure> {
    let trace = iterate_tau(eq, steps);
    let periodicity = if trace.is_empty() {
        None
    } else {
        detect_periodicity(&trace)
    };
    let replayed = replay_trace(&trace, n_max)?;
    let direct = direct_dets(eq, n_max)?;
    let matches = replayed == direct;

    let mut out = String::new();
    match format {
        Format::Plain => {
            let _ = writeln!(out, "start: {eq}");
            for (i, step) in trace.steps().iter().enumerate() {
                let _ = writeln!(out, "step {}: {}", i + 1, step.relation);
                let _ = writeln!(out, "  {}", step.equation);
            }
            if let Some(reason) = trace.stop_reason() {
                let _ = writeln!(out, "stopped after {} steps: {reason}", trace.len());
            }
            match &periodicity {
                Some(p) => {
                    let _ = writeln!(out, "periodicity: {p}");
                }
                None => {
                    let _ = writeln!(out, "periodicity: none found");
                }
            }
            let _ = writeln!(out, "n\treplay\tdirect");
            for (n, (r, d)) in replayed.iter().zip(&direct).enumerate() {
                let _ = writeln!(
                    out,
                    "{n}\t{r}\t{d}{}",
                    if r == d { "" } else { "\tMISMATCH" }
                );
            }
            let verdict = if matches { "matches" } else { "DOES NOT match" };
            let _ = writeln!(out, "replay {verdict} direct determinants for n <= {n_max}");
        }
        Format::Csv => {
            let _ = writeln!(out, "n,replay,direct");
            for (n, (r, d)) in replayed.iter().zip(&direct).enumerate() {
                let _ = writeln!(out, "{n},{r},{d}");
            }
        }
        Format::Json => {
            let steps: Vec<Value> = trace
                .steps()
                .iter()
                .map(|s| {
                    json!({
                        "case": s.relation.case.to_string(),
                        "offset": s.relation.offset,
                        "sign": s.relation.sign,
                        "scale": s.relation.scale_base.to_string(),
                        "equation": s.equation.to_string(),
                    })
                })
                .collect();
            let values: Vec<Value> = replayed
                .iter()
                .zip(&direct)
                .enumerate()
                .map(|(n, (r, d))| json!({ "n": n, "replay": r.to_string(), "direct": d.to_string() }))
                .collect();
            let doc = json!({
                "start": eq.to_string(),
                "steps": steps,
                "stop": trace.stop_reason(),
                "periodicity": periodicity.map(|p| p.to_string()),
                "values": values,
                "matches": matches,
            });
            let _ = writeln!(out, "{doc}");
        }
    }
    print!("{out}");
    Ok(if matches { 0 } else { EXIT_FAILED })
}
