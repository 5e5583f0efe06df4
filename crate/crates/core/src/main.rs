use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use affcodes::codes::{
    dual_min_distance, projective_classes, weight_distribution_brute, weight_distribution_closed_for,
    weight_distribution_moments, EnumOptions, LinearCode, WeightDistribution,
};
use affcodes::designs::{dual_support_design, min_weight_design_probe, support_design, TCheck};
use affcodes::gf::{Elem, FieldCtx};
use affcodes::lrc::{exact_distance, lrc_profile};
use affcodes::report::{lrc_checks, Check, CodeSummary, DesignSummary, RunReport};
use affcodes::reproduce::{root_count_replay, root_replay_check, run_suite, Suite, SuiteOptions};
use affcodes::Error;

/// Brute force over more projective classes than this needs --exhaustive in `weights`.
const EXHAUSTIVE_GATE: u128 = 1 << 26;

#[derive(Parser)]
#[command(name = "affcodes", version, about = "Few-weight affine-invariant and unit-circle codes")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "AFFCODES_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Extended primitive cyclic code of length q.
    Ext,
    /// Punctured cyclic code of length q - 1.
    Punctured,
    /// Unit-circle code of length q + 1 over GF(q^2).
    Circle,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(short, long)]
    p: u32,
    #[arg(short, long)]
    m: u32,
    /// Largest Frobenius power (extended and punctured families).
    #[arg(long = "h")]
    h: Option<u32>,
    /// Frobenius exponent (circle family).
    #[arg(long = "s")]
    s: Option<u32>,
}

impl CodeArgs {
    fn build(&self) -> Result<LinearCode, Error> {
        let need = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required for this family")))
        };
        match self.family {
            FamilyArg::Ext => LinearCode::extended(self.p, self.m, need(self.h, "h")?),
            FamilyArg::Punctured => LinearCode::punctured_cyclic(self.p, self.m, need(self.h, "h")?),
            FamilyArg::Circle => LinearCode::circle(self.p, self.m, need(self.s, "s")?),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Closed,
    Moments,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Table1,
    Examples,
    Enumerators,
    Designs,
    Lrc,
    Conjecture,
    Properties,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and print its parameters and generator matrix.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Weight distribution by enumeration, closed form or power moments.
    Weights {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Allow long enumerations.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Verify the support design of one weight of the code or its dual.
    Designs {
        #[command(flatten)]
        code: CodeArgs,
        /// Codeword weight; defaults to the minimum weight.
        #[arg(long)]
        weight: Option<u32>,
        /// Use the dual code's supports.
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Include the block list in JSON output.
        #[arg(long)]
        blocks: bool,
    },
    /// Locality and optimality of the code and its dual.
    Lrc {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Run a named reproduction suite.
    Reproduce {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Include the long full enumeration at q = 25.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check whether the minimum-weight supports of a binary extended code form a 3-design.
    ProbeConjecture {
        #[arg(short, long, default_value_t = 2)]
        p: u32,
        #[arg(short, long)]
        m: u32,
        #[arg(long = "h")]
        h: u32,
    },
    /// Root count of an affine polynomial, or replay of the reference cases.
    Rootcount {
        #[arg(short, long, required_unless_present = "replay")]
        p: Option<u32>,
        #[arg(short, long, required_unless_present = "replay")]
        m: Option<u32>,
        /// Linear coefficients as generator exponents, x^(p^0) first; "-" for a zero coefficient.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "replay")]
        coeffs: Vec<String>,
        /// Constant term as a generator exponent or "-".
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        constant: String,
        #[arg(long)]
        replay: bool,
    },
}

/// Failure classes mapped to exit codes 2 and 4.
enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationBound { .. } | Error::FieldTooLarge { .. } => Failure::Resource(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn element(f: &FieldCtx, s: &str) -> Result<Elem, Failure> {
    if s.trim() == "-" {
        return Ok(Elem::ZERO);
    }
    let e: i64 = s.trim().parse().map_err(|_| Failure::Usage(format!("bad exponent {s:?}")))?;
    Ok(f.alpha_pow(e))
}

fn describe(code: &LinearCode, rep: &mut RunReport) {
    rep.field = Some(code.field().spec().clone());
    rep.code = Some(CodeSummary::of(code));
}

fn run(cli: &Cli, rep: &mut RunReport) -> Result<(), Failure> {
    let opts = EnumOptions::with_workers(cli.workers);
    match &cli.command {
        Command::Construct { code } => {
            let c = code.build()?;
            describe(&c, rep);
            rep.generator = Some(c.export());
            if let Ok(d) = exact_distance(&c, &opts) {
                rep.code.as_mut().expect("set").d = Some(d);
            }
        }
        Command::Weights { code, method, exhaustive } => {
            let c = code.build()?;
            describe(&c, rep);
            let mut dists: Vec<WeightDistribution> = Vec::new();
            if matches!(method, Method::Brute | Method::All) {
                let classes = projective_classes(c.alphabet_size(), c.k());
                if classes > EXHAUSTIVE_GATE && !exhaustive {
                    return Err(Failure::Resource(format!(
                        "{classes} projective classes; pass --exhaustive to enumerate"
                    )));
                }
                dists.push(weight_distribution_brute(&c, &opts)?);
            }
            if matches!(method, Method::Closed | Method::All) {
                match weight_distribution_closed_for(c.family()) {
                    Ok(d) => dists.push(d),
                    Err(e) if *method == Method::All => rep.notes.push(format!("closed form skipped: {e}")),
                    Err(e) => return Err(e.into()),
                }
            }
            if matches!(method, Method::Moments | Method::All) {
                match weight_distribution_moments(&c, &opts) {
                    Ok(d) => dists.push(d),
                    Err(e) if *method == Method::All => rep.notes.push(format!("moment solve skipped: {e}")),
                    Err(e) => return Err(e.into()),
                }
            }
            if let Some(first) = dists.first() {
                rep.code.as_mut().expect("set").d = first.min_distance();
                for other in &dists[1..] {
                    rep.checks.push(Check::new(
                        "weights/agree",
                        first.enumerator_string(),
                        other.enumerator_string(),
                        first.same_counts(other),
                    ));
                }
            }
            rep.weights = dists;
        }
        Command::Designs { code, weight, dual, t, blocks } => {
            let c = code.build()?;
            describe(&c, rep);
            let design = if *dual {
                let w = match weight {
                    Some(w) => *w,
                    None => dual_min_distance(&c, 5, &opts)?
                        .ok_or_else(|| Failure::Resource("dual distance exceeds the search range".into()))?,
                };
                (format!("dual/w{w}"), dual_support_design(&c, w, *t, &opts)?)
            } else {
                let w = match weight {
                    Some(w) => *w,
                    None => exact_distance(&c, &opts)?,
                };
                (format!("code/w{w}"), support_design(&c, w, *t, &opts)?)
            };
            let summary = DesignSummary::of(design.0, &design.1, *blocks);
            rep.checks.push(Check::new(
                format!("design/{}", summary.label),
                format!("{}-design", t),
                summary.verdict(),
                summary.verified,
            ));
            rep.designs.push(summary);
        }
        Command::Lrc { code } => {
            let c = code.build()?;
            describe(&c, rep);
            let analysis = lrc_profile(&c, &opts)?;
            let summary = rep.code.as_mut().expect("set");
            summary.d = Some(analysis.code.d as u32);
            summary.d_perp = Some(analysis.dual.d as u32);
            rep.checks.extend(lrc_checks("lrc", &analysis));
            rep.lrc = Some(analysis);
        }
        Command::Reproduce { suite, exhaustive } => {
            let o = SuiteOptions { enumeration: opts, seed: cli.seed, exhaustive: *exhaustive, ..Default::default() };
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Table1 => vec![Suite::Table1],
                SuiteArg::Examples => vec![Suite::Examples],
                SuiteArg::Enumerators => vec![Suite::Enumerators],
                SuiteArg::Designs => vec![Suite::Designs],
                SuiteArg::Lrc => vec![Suite::Lrc],
                SuiteArg::Conjecture => vec![Suite::Conjecture],
                SuiteArg::Properties => vec![Suite::Properties],
            };
            for s in suites {
                run_suite(s, &o, rep)?;
            }
        }
        Command::ProbeConjecture { p, m, h } => {
            let r = min_weight_design_probe(*p, *m, *h, &opts)?;
            let verdict = match &r.check {
                TCheck::Holds { lambda } => format!("3-({},{},{lambda}) holds over {} blocks", r.n, r.min_weight, r.blocks),
                TCheck::Fails { subset, count, expected } => {
                    format!("not a 3-design: triple {subset:?} lies in {count} blocks, the first triple in {expected}")
                }
            };
            rep.checks.push(Check::noted(format!("probe/p{p}-m{m}-h{h}"), "minimum-weight supports form a 3-design", verdict));
        }
        Command::Rootcount { p, m, coeffs, constant, replay } => {
            if *replay {
                for (i, r) in root_count_replay()?.iter().enumerate() {
                    rep.checks.push(root_replay_check(i, r));
                }
            } else {
                let (p, m) = (p.expect("required"), m.expect("required"));
                let f = Arc::new(FieldCtx::conway(p, m)?);
                rep.field = Some(f.spec().clone());
                let lin = coeffs.iter().map(|s| element(&f, s)).collect::<Result<Vec<_>, _>>()?;
                let c = element(&f, constant)?;
                let g = affcodes::linearized::AffinePoly::new(&f, c, lin)?;
                let kernel = affcodes::linearized::affine_root_count(&g)?;
                let brute = affcodes::linearized::brute_root_count(&g);
                rep.checks.push(Check::new("rootcount/kernel-vs-evaluation", kernel.to_string(), brute.to_string(), kernel == brute));
                rep.notes.push(format!("{kernel} roots in GF({p}^{m})"));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut rep = RunReport::new(std::env::args().collect());
    let start = Instant::now();
    let outcome = run(&cli, &mut rep);
    if cli.timing {
        rep.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let code = match outcome {
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(4);
        }
        Ok(()) if rep.passed() => 0,
        Ok(()) => {
            for c in rep.failures() {
                eprintln!("claim mismatch: {} (expected {}, computed {})", c.id, c.claim, c.computed);
            }
            3
        }
    };
    let out = match cli.format {
        Format::Json => rep.to_json() + "\n",
        Format::Csv => rep.to_csv(),
        Format::Text => rep.to_text(),
    };
    print!("{out}");
    ExitCode::from(code)
}
