use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use polymat::lab::{
    describe, regression_suite, run_harness, verify_equivalences, verify_squarefree, Harness,
    IdealSpace, LabReport,
};
use polymat::polymatroid::{
    detect_veronese, has_nonpure_exchange, has_strong_exchange, is_componentwise_polymatroidal,
    is_componentwise_veronese, is_matroidal, is_polymatroidal, ExchangeFailure, VeroneseParams,
};
use polymat::primes::{associated_primes, irreducible_decomposition};
use polymat::quotients::{
    check_lq_order, extend_lq_veronese, find_lq_order, revlex_lq, LqOutcome, RevlexConvention,
};
use polymat::resolution::{
    betti_table_with, has_linear_relations_with, has_linear_resolution_with,
    is_componentwise_linear_with,
};
use polymat::{Characteristic, CombineOp, Error, Limits, Monomial, MonomialIdeal, VarSubset};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

/// Exact computations with monomial ideals in x1..xn.
#[derive(Parser)]
#[command(name = "polymat", version)]
struct Cli {
    /// Number of variables.
    #[arg(short = 'n', long = "nvars", global = true)]
    nvars: Option<usize>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0, global = true)]
    ch: u64,
    /// Seed for sampled spaces.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on lcm-lattice size, witness search and enumeration size.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test a property of an ideal.
    Check {
        property: Property,
        ideal: String,
        /// Extra degrees above the largest generator degree for componentwise checks.
        #[arg(long, default_value_t = 0)]
        extra: u64,
    },
    /// I : J (J a monomial or an ideal).
    Colon {
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// I : u^infinity.
    Saturate {
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Set a set of variables to 1.
    Localize {
        ideal: String,
        #[command(flatten)]
        at: Localization,
    },
    Combine {
        op: Op,
        ideal: String,
        other: String,
    },
    Power {
        ideal: String,
        #[arg(short = 'k')]
        k: u32,
    },
    /// Ideal generated by the degree-j part of I.
    Component {
        ideal: String,
        #[arg(short = 'j')]
        j: u64,
    },
    /// Graded Betti table.
    Betti { ideal: String },
    /// Associated primes with witnesses.
    Ass { ideal: String },
    /// Irreducible decomposition.
    Irrdecomp { ideal: String },
    /// Linear quotients.
    Lq {
        #[command(subcommand)]
        cmd: LqCmd,
    },
    /// Linear-quotients extension between Veronese-type ideals, parameters as
    /// "d;a1,...,an".
    ExtendVeronese { from: String, to: String },
    /// Check the colon (or, with --squarefree, localization) characterizations on one ideal.
    Equiv {
        ideal: String,
        #[arg(long)]
        squarefree: bool,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Run a harness over a space of ideals in -n variables.
    Scan(ScanArgs),
    /// Run the regression suite.
    Suite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Polymatroidal,
    Matroidal,
    StrongExchange,
    NonpureExchange,
    CwPolymatroidal,
    CwVeronese,
    SingleDegree,
    LinearResolution,
    LinearRelations,
    CwLinear,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Sum,
    Product,
    Intersect,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Localization {
    /// Variables set to 1, e.g. "1,3".
    #[arg(long)]
    ones: Option<String>,
    /// Variables of the prime; the others are set to 1.
    #[arg(long)]
    prime: Option<String>,
}

#[derive(Subcommand)]
enum LqCmd {
    /// Check a given order of generators (listed in order).
    Check {
        order: String,
        /// Generators preceding the order.
        #[arg(long)]
        base: Option<String>,
    },
    /// Search for an order of the minimal generators.
    Find { ideal: String },
    /// Reverse-lexicographic order of a single-degree ideal.
    Revlex {
        ideal: String,
        #[arg(long)]
        increasing: bool,
    },
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum, default_value = "conjecture")]
    harness: HarnessArg,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    #[arg(long, default_value_t = 4)]
    max_gens: usize,
    /// Sample this many ideals instead of enumerating.
    #[arg(long)]
    samples: Option<usize>,
    /// All squarefree ideals.
    #[arg(long)]
    squarefree: bool,
    #[arg(long, default_value_t = 3)]
    kmax: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum HarnessArg {
    Conjecture,
    Equivalences,
    Squarefree,
    Properties,
}

struct Ctx {
    nvars: Option<usize>,
    ch: Characteristic,
    seed: u64,
    limits: Limits,
    json: bool,
}

/// Error or exit code of a command.
enum Fail {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

type Run = Result<u8, Fail>;

impl Ctx {
    fn nvars(&self) -> Result<usize, Fail> {
        self.nvars
            .ok_or_else(|| Fail::Usage("-n is required".into()))
    }

    fn ideal(&self, text: &str) -> Result<MonomialIdeal, Fail> {
        Ok(MonomialIdeal::parse(text, self.nvars()?)?)
    }

    /// A comma-separated list of monomials, order and repetitions kept.
    fn monomials(&self, text: &str) -> Result<Vec<Monomial>, Fail> {
        let n = self.nvars()?;
        text.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let i = MonomialIdeal::parse(t, n)?;
                Ok(i.gens()[0].clone())
            })
            .collect()
    }

    fn subset(&self, text: &str) -> Result<VarSubset, Fail> {
        let idx = text
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Fail::Usage(format!("bad variable list {text:?}: {e}")))?;
        Ok(VarSubset::from_one_based(&idx, self.nvars()?)?)
    }

    fn emit(&self, text: impl std::fmt::Display, value: impl Serialize) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("output serializes")
            );
        } else {
            println!("{text}");
        }
    }

    fn emit_ideal(&self, ideal: &MonomialIdeal) -> Run {
        self.emit(ideal, json!({ "ideal": ideal, "nvars": ideal.nvars() }));
        Ok(0)
    }
}

fn verdict(b: bool) -> u8 {
    if b {
        0
    } else {
        EXIT_FALSE
    }
}

fn parse_veronese(text: &str) -> Result<VeroneseParams, Fail> {
    let bad = || Fail::Usage(format!("expected \"d;a1,...,an\", got {text:?}"));
    let (d, caps) = text.split_once(';').ok_or_else(bad)?;
    let d = d
        .trim()
        .trim_start_matches('(')
        .parse()
        .map_err(|_| bad())?;
    let caps = caps
        .trim()
        .trim_end_matches(')')
        .split(',')
        .map(|a| a.trim().parse())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| bad())?;
    Ok(VeroneseParams::new(d, caps)?)
}

fn failure_text(f: &ExchangeFailure) -> String {
    match f {
        ExchangeFailure::MixedDegree { low, high } => {
            format!("generators {low} and {high} differ in degree")
        }
        ExchangeFailure::NotSquarefree { generator } => {
            format!("generator {generator} is not squarefree")
        }
        ExchangeFailure::Exchange { witness: w } => match w.j {
            Some(j) => format!("u = {}, v = {}, i = {}, j = {}", w.u, w.v, w.i + 1, j + 1),
            None => format!("u = {}, v = {}, i = {}: no j works", w.u, w.v, w.i + 1),
        },
    }
}

fn check(ctx: &Ctx, property: Property, ideal: &MonomialIdeal, extra: u64) -> Run {
    let mut failure: Option<ExchangeFailure> = None;
    let mut failing_degree: Option<u64> = None;
    let holds = match property {
        Property::Polymatroidal
        | Property::Matroidal
        | Property::StrongExchange
        | Property::NonpureExchange => {
            let c = match property {
                Property::Polymatroidal => is_polymatroidal(ideal)?,
                Property::Matroidal => is_matroidal(ideal)?,
                Property::StrongExchange => has_strong_exchange(ideal)?,
                _ => has_nonpure_exchange(ideal)?,
            };
            failure = c.failure;
            c.holds
        }
        Property::CwPolymatroidal | Property::CwVeronese => {
            let c = match property {
                Property::CwPolymatroidal => is_componentwise_polymatroidal(ideal, extra)?,
                _ => is_componentwise_veronese(ideal, extra)?,
            };
            failure = c.failure;
            failing_degree = c.failing_degree;
            c.holds
        }
        Property::SingleDegree => ideal.is_single_degree()?,
        Property::LinearResolution => has_linear_resolution_with(ideal, ctx.ch, &ctx.limits)?,
        Property::LinearRelations => has_linear_relations_with(ideal, ctx.ch, &ctx.limits)?,
        Property::CwLinear => {
            let c = is_componentwise_linear_with(ideal, ctx.ch, extra, &ctx.limits)?;
            failing_degree = c.failing_degree;
            c.holds
        }
    };
    let veronese = match property {
        Property::Polymatroidal if holds => detect_veronese(ideal)?,
        _ => None,
    };
    let name = property.to_possible_value().expect("no skipped variants");
    if ctx.json {
        let mut out = json!({ "property": name.get_name(), "ideal": ideal, "nvars": ideal.nvars(), "holds": holds });
        if let Some(f) = &failure {
            out["failure"] = json!(f);
        }
        if let Some(d) = failing_degree {
            out["failing_degree"] = json!(d);
        }
        if let Some(p) = &veronese {
            out["veronese"] = json!({ "degree": p.degree(), "caps": p.caps() });
        }
        ctx.emit("", out);
    } else {
        println!("{holds}");
        if let Some(f) = &failure {
            println!("witness: {}", failure_text(f));
        }
        if let Some(d) = failing_degree {
            println!("failing degree: {d}");
        }
        if let Some(p) = &veronese {
            println!("Veronese type {p}");
        }
    }
    Ok(verdict(holds))
}

fn lq_outcome(ctx: &Ctx, outcome: &LqOutcome) -> Run {
    let text = match outcome {
        LqOutcome::Certified(c) => {
            let mut s = String::from("linear quotients");
            for (g, step) in c.appended.iter().zip(&c.steps) {
                s.push_str(&format!("\n  {g}  colon generated by {step}"));
            }
            s
        }
        LqOutcome::Fails { position, colon } => {
            format!(
                "no linear quotients: colon at position {} is ({colon})",
                position + 1
            )
        }
    };
    ctx.emit(text, outcome);
    Ok(verdict(outcome.is_certified()))
}

/// Exit code for a lab report: violations first, then failures, budget skips,
/// counterexamples.
fn report_code(r: &LabReport) -> u8 {
    let s = &r.summary;
    if !s.violations.is_empty() {
        EXIT_VIOLATION
    } else if !s.failed.is_empty() || !s.counterexamples.is_empty() {
        EXIT_FALSE
    } else if !s.skipped.is_empty() {
        EXIT_BUDGET
    } else {
        0
    }
}

fn emit_report(ctx: &Ctx, r: &LabReport) -> Run {
    if ctx.json {
        println!("{}", r.to_json());
    } else {
        for it in &r.items {
            if it.status != polymat::lab::ItemStatus::Ok || r.items.len() <= 50 {
                println!("{}", describe(it));
            }
        }
        let counts: Vec<String> = r
            .summary
            .counts
            .iter()
            .filter(|(k, _)| !k.contains(':') && *k != "items")
            .map(|(k, v)| format!("{k}: {v}"))
            .collect();
        println!("{} items; {}", r.items.len(), counts.join(", "));
    }
    Ok(report_code(r))
}

fn run(cli: Cli) -> Run {
    let ch = Characteristic::new(cli.ch)?;
    let mut limits = Limits::default();
    if let Some(b) = cli.budget {
        limits.max_lattice = b;
        limits.max_witness_search = b;
        limits.max_enumeration = b;
    }
    let ctx = Ctx {
        nvars: cli.nvars,
        ch,
        seed: cli.seed.unwrap_or(0),
        limits,
        json: cli.json,
    };
    match cli.cmd {
        Cmd::Check {
            property,
            ideal,
            extra,
        } => check(&ctx, property, &ctx.ideal(&ideal)?, extra),
        Cmd::Colon { ideal, by } => {
            let i = ctx.ideal(&ideal)?;
            let j = ctx.ideal(&by)?;
            let c = match j.gens() {
                [u] => i.colon(u)?,
                _ => i.colon_ideal(&j)?,
            };
            ctx.emit_ideal(&c)
        }
        Cmd::Saturate { ideal, by } => {
            let i = ctx.ideal(&ideal)?;
            let u = match ctx.monomials(&by)?.as_slice() {
                [u] => u.clone(),
                _ => return Err(Fail::Usage("--by takes a single monomial".into())),
            };
            ctx.emit_ideal(&i.saturate(&u)?)
        }
        Cmd::Localize { ideal, at } => {
            let i = ctx.ideal(&ideal)?;
            let ones = match (at.ones, at.prime) {
                (Some(o), None) => ctx.subset(&o)?,
                (None, Some(p)) => ctx.subset(&p)?.complement(i.nvars()),
                _ => return Err(Fail::Usage("give exactly one of --ones and --prime".into())),
            };
            ctx.emit_ideal(&i.localize(&ones)?)
        }
        Cmd::Combine { op, ideal, other } => {
            let op = match op {
                Op::Sum => CombineOp::Sum,
                Op::Product => CombineOp::Product,
                Op::Intersect => CombineOp::Intersect,
            };
            ctx.emit_ideal(&ctx.ideal(&ideal)?.combine(op, &ctx.ideal(&other)?)?)
        }
        Cmd::Power { ideal, k } => ctx.emit_ideal(&ctx.ideal(&ideal)?.power(k)?),
        Cmd::Component { ideal, j } => ctx.emit_ideal(&ctx.ideal(&ideal)?.component(j)?),
        Cmd::Betti { ideal } => {
            let i = ctx.ideal(&ideal)?;
            let t = betti_table_with(&i, ctx.ch, &ctx.limits)?;
            ctx.emit(
                &t,
                json!({
                    "ideal": i,
                    "char": ctx.ch.value(),
                    "betti": t,
                    "projective_dimension": t.projective_dimension(),
                    "regularity": t.regularity(),
                }),
            );
            Ok(0)
        }
        Cmd::Ass { ideal } => {
            let i = ctx.ideal(&ideal)?;
            let a = associated_primes(&i, &ctx.limits)?;
            let mut text = String::new();
            for p in &a.primes {
                let tag = if a.minimal.contains(&p.prime) {
                    "minimal"
                } else {
                    "embedded"
                };
                text.push_str(&format!("{}  witness {}  {tag}\n", p.prime, p.witness));
            }
            text.push_str(&format!("height {}", a.height));
            ctx.emit(text, &a);
            Ok(0)
        }
        Cmd::Irrdecomp { ideal } => {
            let i = ctx.ideal(&ideal)?;
            let comps = irreducible_decomposition(&i)?;
            let text: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
            ctx.emit(text.join(" ∩ "), json!({ "ideal": i, "components": comps }));
            Ok(0)
        }
        Cmd::Lq { cmd } => match cmd {
            LqCmd::Check { order, base } => {
                let base = match base {
                    Some(b) => ctx.ideal(&b)?,
                    None => MonomialIdeal::zero(ctx.nvars()?),
                };
                lq_outcome(&ctx, &check_lq_order(&base, &ctx.monomials(&order)?)?)
            }
            LqCmd::Find { ideal } => {
                let i = ctx.ideal(&ideal)?;
                let base = MonomialIdeal::zero(i.nvars());
                match find_lq_order(&base, i.gens(), &ctx.limits)? {
                    Some(c) => lq_outcome(&ctx, &LqOutcome::Certified(c)),
                    None => {
                        ctx.emit(
                            "no order has linear quotients",
                            json!({ "outcome": "none", "ideal": i }),
                        );
                        Ok(EXIT_FALSE)
                    }
                }
            }
            LqCmd::Revlex { ideal, increasing } => {
                let conv = if increasing {
                    RevlexConvention::Increasing
                } else {
                    RevlexConvention::Decreasing
                };
                lq_outcome(&ctx, &revlex_lq(&ctx.ideal(&ideal)?, conv)?)
            }
        },
        Cmd::ExtendVeronese { from, to } => {
            let c = extend_lq_veronese(&parse_veronese(&from)?, &parse_veronese(&to)?)?;
            lq_outcome(&ctx, &LqOutcome::Certified(c))
        }
        Cmd::Equiv {
            ideal,
            squarefree,
            kmax,
        } => {
            let i = ctx.ideal(&ideal)?;
            if squarefree {
                let r = verify_squarefree(&i, kmax, ctx.ch, &ctx.limits)?;
                let text = format!("{:?}", r.verdicts());
                ctx.emit(text, &r);
                Ok(if r.is_violation() { EXIT_VIOLATION } else { 0 })
            } else {
                let r = verify_equivalences(&i, ctx.ch, &ctx.limits)?;
                let names = [
                    "polymatroidal",
                    "colons polymatroidal",
                    "colons revlex lq",
                    "colons linear",
                    "colons single degree",
                ];
                let text: Vec<String> = names
                    .iter()
                    .zip(r.verdicts())
                    .map(|(n, v)| format!("{n}: {v}"))
                    .collect();
                ctx.emit(text.join("\n"), &r);
                Ok(if r.is_violation() { EXIT_VIOLATION } else { 0 })
            }
        }
        Cmd::Scan(a) => {
            let n = ctx.nvars()?;
            let space = if a.squarefree {
                IdealSpace::squarefree(n)
            } else if let Some(count) = a.samples {
                IdealSpace::sampled(n, a.max_degree, a.max_gens, count, ctx.seed)
            } else {
                IdealSpace::exhaustive(n, a.max_degree, a.max_gens)
            };
            let harness = match a.harness {
                HarnessArg::Conjecture => Harness::Conjecture,
                HarnessArg::Equivalences => Harness::Equivalences,
                HarnessArg::Squarefree => Harness::Squarefree { kmax: a.kmax },
                HarnessArg::Properties => Harness::Properties,
            };
            emit_report(&ctx, &run_harness(harness, &[space], ctx.ch, &ctx.limits)?)
        }
        Cmd::Suite => emit_report(&ctx, &regression_suite(ctx.ch, &ctx.limits)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Fail::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget { .. } => EXIT_BUDGET,
                Error::TheoremViolation(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            })
        }
    }
}
