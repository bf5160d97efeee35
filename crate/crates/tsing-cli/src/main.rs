//! Command-line frontend: every library operation behind a subcommand, with
//! text, JSON and markdown output.
//!
//! JSON output wraps every result in a stable envelope
//! `{command, inputs, result, citations}`; the citation strings anchor each
//! computation to the classification argument it reproduces. Exit codes:
//! 0 on success, 2 on argument or domain errors, 1 on internal invariant
//! failures (never expected).

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};

use tsing::census::{self, Verdict};
use tsing::hilbert;
use tsing::hirzebruch::{self, FnClass, ModuliCase};
use tsing::hj::{self, StringClass, TString};
use tsing::lattice;

#[derive(Parser)]
#[command(
    name = "tsing",
    version,
    about = "Exact arithmetic for T-singular I-surfaces",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to FILE instead of stdout. For `census` a directory may
    /// be given; it receives census.json (and census.md / census.txt for the
    /// other formats).
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Hirzebruch-Jung continued fractions.
    #[command(subcommand)]
    Hj(HjCmd),
    /// T-string enumeration.
    #[command(subcommand)]
    Tstring(TstringCmd),
    /// Discrepancies, Cartier index and K² bookkeeping of a chain.
    Discrepancy {
        /// Chain entries b_1 b_2 ... (all >= 2).
        #[arg(required = true)]
        entries: Vec<i64>,
    },
    /// Plurigenus of a T-singular surface via the log-terminal formula.
    Plurigenus {
        /// Chain entries b_1 b_2 ... (all >= 2).
        #[arg(required = true)]
        entries: Vec<i64>,
        /// Pluricanonical degree (>= 2).
        #[arg(short, long)]
        m: i64,
        /// Holomorphic Euler characteristic of the contracted surface.
        #[arg(long, default_value_t = 3)]
        chi: i64,
        /// K² of the contracted surface (rational, e.g. 1 or 7/2).
        #[arg(long, default_value = "1", value_parser = parse_rational)]
        k2: Rational64,
    },
    /// Riemann-Roch on a normal surface: χ(L) = χ(O) + (L² - K·L)/2.
    Rr {
        #[arg(long)]
        chi: i64,
        /// L² (rational).
        #[arg(long, value_parser = parse_rational)]
        l2: Rational64,
        /// K·L (rational).
        #[arg(long, value_parser = parse_rational)]
        kl: Rational64,
    },
    /// Hilbert series of a weighted complete intersection.
    Hilbert(HilbertArgs),
    /// Intersection theory on Hirzebruch surfaces.
    #[command(name = "fn", subcommand)]
    Fn(FnCmd),
    /// The classification engine: candidate records and the two tables.
    Census {
        /// Largest d of the index-2 seeds to enumerate.
        #[arg(long, default_value_t = 32)]
        dmax: i64,
    },
    /// Cross-module verification of an admitted construction.
    Verify {
        /// `all`, or a singularity given as `N,Q` (e.g. 18,5).
        target: String,
    },
}

#[derive(Subcommand)]
enum HjCmd {
    /// Expand N/Q into [b_1,...,b_r].
    Expand { n: i64, q: i64 },
    /// Evaluate a chain back to N/Q.
    Eval {
        #[arg(required = true)]
        entries: Vec<i64>,
    },
    /// Classify a chain: rational double point, T-string, or neither.
    Classify {
        #[arg(required = true)]
        entries: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum TstringCmd {
    /// All T-strings at the given iteration level with d <= dmax.
    Generate {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        dmax: i64,
    },
}

#[derive(Args)]
struct HilbertArgs {
    /// Generator weights, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    weights: Vec<i64>,
    /// Relation degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    relations: Vec<i64>,
    /// Print the coefficient of t^M.
    #[arg(long, value_name = "M")]
    coeff: Option<i64>,
    /// Print all coefficients up to t^M.
    #[arg(long, value_name = "M")]
    coeffs_up_to: Option<i64>,
    /// Compare with a second series (generator weights of the other side).
    #[arg(long, value_delimiter = ',', value_name = "W")]
    equal_weights: Option<Vec<i64>>,
    /// Relation degrees of the second series.
    #[arg(long, value_delimiter = ',', value_name = "R")]
    equal_relations: Option<Vec<i64>>,
    /// Check the coefficients against χ + m(m-1)/2·K², given as CHI,K2,MMAX.
    #[arg(long, value_name = "CHI,K2,MMAX")]
    check_plurigenera: Option<String>,
}

#[derive(Subcommand)]
enum FnCmd {
    /// Pairing of two classes (classes given as x,y meaning xσ0 + yΓ).
    Intersection {
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_pair)]
        class: (i64, i64),
        #[arg(long, value_parser = parse_pair)]
        with: (i64, i64),
    },
    /// Dimension of the space of global sections.
    H0 {
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_pair)]
        class: (i64, i64),
    },
    /// Arithmetic genus of a class.
    Genus {
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_pair)]
        class: (i64, i64),
    },
    /// Largest branch-point parameter d the class can carry.
    Dbound {
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_pair)]
        class: (i64, i64),
    },
    /// Decompositions of a branch class into two effective pieces.
    Splittings {
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_pair)]
        class: (i64, i64),
    },
    /// Invariants of the double cover branched on the class.
    Cover {
        #[arg(long)]
        n: i64,
        #[arg(long, value_parser = parse_pair)]
        branch: (i64, i64),
    },
    /// The canonical class of F_n.
    Canonical {
        #[arg(long)]
        n: i64,
    },
    /// Dimension of the automorphism group of F_n.
    Autdim {
        #[arg(long)]
        n: i64,
    },
    /// Moduli count of a branch-divisor family (generic-1..3, r1, r2, r3).
    Moduli {
        #[arg(long)]
        case: String,
    },
}

/// One computed answer, ready for all three output formats.
struct Output {
    command: &'static str,
    inputs: Value,
    result: Value,
    citations: &'static [&'static str],
    text: String,
    markdown: Option<String>,
}

impl Output {
    fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "citations": self.citations,
        })
    }

    fn rendered(&self, format: Format) -> String {
        match format {
            Format::Text => ensure_newline(&self.text),
            Format::Md => ensure_newline(self.markdown.as_deref().unwrap_or(&self.text)),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.envelope()).expect("serializable envelope");
                s.push('\n');
                s
            }
        }
    }
}

fn ensure_newline(s: &str) -> String {
    if s.ends_with('\n') {
        s.to_string()
    } else {
        format!("{s}\n")
    }
}

enum CliError {
    Domain(String),
    Internal(String),
    Io(String),
}

impl From<tsing::Error> for CliError {
    fn from(e: tsing::Error) -> Self {
        match e {
            tsing::Error::Domain(msg) => CliError::Domain(msg),
            tsing::Error::Overflow => CliError::Domain(e.to_string()),
            tsing::Error::Internal(msg) => CliError::Internal(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let output = dispatch(&cli.command)?;
    let rendered = output.rendered(cli.format);
    match &cli.out {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) if path.is_dir() => {
            if output.command != "census" {
                return Err(CliError::Domain(format!(
                    "--out {} is a directory; only `census` writes into directories",
                    path.display()
                )));
            }
            write_file(&path.join("census.json"), &output.rendered(Format::Json))?;
            match cli.format {
                Format::Json => {}
                Format::Text => write_file(&path.join("census.txt"), &rendered)?,
                Format::Md => write_file(&path.join("census.md"), &rendered)?,
            }
            Ok(())
        }
        Some(path) => write_file(path, &rendered),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Hj(hj_cmd) => run_hj(hj_cmd),
        Command::Tstring(TstringCmd::Generate { level, dmax }) => run_generate(*level, *dmax),
        Command::Discrepancy { entries } => run_discrepancy(entries),
        Command::Plurigenus {
            entries,
            m,
            chi,
            k2,
        } => run_plurigenus(entries, *m, *chi, *k2),
        Command::Rr { chi, l2, kl } => run_rr(*chi, *l2, *kl),
        Command::Hilbert(args) => run_hilbert(args),
        Command::Fn(fn_cmd) => run_fn(fn_cmd),
        Command::Census { dmax } => run_census(*dmax),
        Command::Verify { target } => run_verify(target),
    }
}

fn parse_rational(s: &str) -> Result<Rational64, String> {
    let parse_int = |t: &str| t.trim().parse::<i64>().map_err(|e| e.to_string());
    match s.split_once('/') {
        None => Ok(Rational64::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == 0 {
                return Err("denominator must be nonzero".to_string());
            }
            Ok(Rational64::new(parse_int(num)?, den))
        }
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| "expected two integers separated by a comma".to_string())?;
    Ok((
        x.trim().parse::<i64>().map_err(|e| e.to_string())?,
        y.trim().parse::<i64>().map_err(|e| e.to_string())?,
    ))
}

fn new_tstring(entries: &[i64]) -> Result<TString, CliError> {
    Ok(TString::new(entries.to_vec())?)
}

fn run_hj(cmd: &HjCmd) -> Result<Output, CliError> {
    match cmd {
        HjCmd::Expand { n, q } => {
            let s = hj::expand(*n, *q)?;
            Ok(Output {
                command: "hj expand",
                inputs: json!({ "n": n, "q": q }),
                result: json!({ "tstring": render::tstring(&s), "display": s.to_string() }),
                citations: &["§2.2"],
                text: s.to_string(),
                markdown: None,
            })
        }
        HjCmd::Eval { entries } => {
            let s = new_tstring(entries)?;
            let (n, q) = hj::evaluate(&s)?;
            Ok(Output {
                command: "hj eval",
                inputs: json!({ "entries": entries }),
                result: json!({ "n": n, "q": q }),
                citations: &[],
                text: format!("{n}/{q}"),
                markdown: None,
            })
        }
        HjCmd::Classify { entries } => {
            let s = new_tstring(entries)?;
            let class = hj::classify_string(&s)?;
            let (text, result) = match class {
                StringClass::RationalDoublePoint => (
                    "rational double point".to_string(),
                    json!({ "class": "rational-double-point" }),
                ),
                StringClass::NonCanonicalT(qt) => (
                    format!("T-singularity d={} n={} a={}", qt.d(), qt.n(), qt.a()),
                    json!({ "class": "t-singularity", "type": render::quotient(&qt) }),
                ),
                StringClass::NotT => ("not a T-string".to_string(), json!({ "class": "not-t" })),
            };
            Ok(Output {
                command: "hj classify",
                inputs: json!({ "entries": entries }),
                result,
                citations: &["§2.2"],
                text,
                markdown: None,
            })
        }
    }
}

fn run_generate(level: u32, dmax: i64) -> Result<Output, CliError> {
    let strings = hj::generate(level, dmax)?;
    let text = strings
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output {
        command: "tstring generate",
        inputs: json!({ "level": level, "dmax": dmax }),
        result: json!({
            "count": strings.len(),
            "strings": strings.iter().map(render::tstring).collect::<Vec<_>>(),
        }),
        citations: &["§2.2"],
        text,
        markdown: None,
    })
}

fn run_discrepancy(entries: &[i64]) -> Result<Output, CliError> {
    let s = new_tstring(entries)?;
    let class = hj::classify_string(&s)?;
    // For a T-string the I-surface bookkeeping pins K² of the resolution via
    // Lee's formula with K²_X = 1; for other chains only the discrepancies
    // and the index are reported.
    let (k_self, quotient) = match class {
        StringClass::NonCanonicalT(qt) => {
            let k2res = lattice::k2_resolution(Rational64::from_integer(1), s.len(), qt.d());
            (Some(*k2res.numer()), Some(qt))
        }
        _ => (None, None),
    };
    let cfg = lattice::chain_config(&s, 3, k_self.unwrap_or(0));
    let delta = lattice::discrepancies(&cfg)?;
    let index = lattice::cartier_index(&delta);
    let kx2 = k_self
        .map(|_| lattice::kx_squared(&cfg, &delta))
        .transpose()?;

    let mut text = format!("discrepancies: {delta}\ncartier index: {index}");
    if let Some(qt) = quotient {
        text.push_str(&format!("\nquotient: {qt}"));
    }
    if let Some(k) = k_self {
        text.push_str(&format!("\nK² resolution: {k}"));
    }
    if let Some(k) = &kx2 {
        text.push_str(&format!("\nK²_X: {k}"));
    }
    Ok(Output {
        command: "discrepancy",
        inputs: json!({ "entries": entries }),
        result: json!({
            "discrepancies": render::qdivisor(&delta),
            "cartier_index": index,
            "type": quotient.as_ref().map(render::quotient),
            "k2_resolution": k_self,
            "kx_squared": kx2.as_ref().map(render::rational),
        }),
        citations: &["§2.1", "§2.2"],
        text,
        markdown: None,
    })
}

fn run_plurigenus(entries: &[i64], m: i64, chi: i64, k2: Rational64) -> Result<Output, CliError> {
    let s = new_tstring(entries)?;
    let cfg = lattice::chain_config(&s, chi, 0);
    let delta = lattice::discrepancies(&cfg)?;
    let correction = lattice::correction_term(&cfg, &delta, m)?;
    let value = lattice::plurigenus(chi, k2, &cfg, &delta, m)?;
    Ok(Output {
        command: "plurigenus",
        inputs: json!({
            "entries": entries,
            "m": m,
            "chi": chi,
            "k2": render::rational(&k2),
        }),
        result: json!({
            "plurigenus": render::rational(&value),
            "correction": render::rational(&correction),
        }),
        citations: &["§2.1"],
        text: format!("h⁰({m}K) = {value}\ncorrection term: {correction}"),
        markdown: None,
    })
}

fn run_rr(chi: i64, l2: Rational64, kl: Rational64) -> Result<Output, CliError> {
    let value = lattice::riemann_roch(chi, l2, kl);
    Ok(Output {
        command: "rr",
        inputs: json!({
            "chi": chi,
            "l2": render::rational(&l2),
            "kl": render::rational(&kl),
        }),
        result: json!({ "chi_l": render::rational(&value) }),
        citations: &["§2.1"],
        text: format!("χ(L) = {value}"),
        markdown: None,
    })
}

fn run_hilbert(args: &HilbertArgs) -> Result<Output, CliError> {
    let h = hilbert::series(&args.weights, &args.relations)?;
    let inputs = json!({
        "weights": args.weights,
        "relations": args.relations,
        "coeff": args.coeff,
        "coeffs_up_to": args.coeffs_up_to,
        "equal_weights": args.equal_weights,
        "equal_relations": args.equal_relations,
        "check_plurigenera": args.check_plurigenera,
    });

    if let Some(m) = args.coeff {
        let c = h.coefficient(m)?;
        return Ok(Output {
            command: "hilbert",
            inputs,
            result: json!({ "coefficient": c, "order": m }),
            citations: &["Prop. can-ring"],
            text: c.to_string(),
            markdown: None,
        });
    }
    if let Some(m) = args.coeffs_up_to {
        let cs = h.coefficients_up_to(m)?;
        return Ok(Output {
            command: "hilbert",
            inputs,
            result: json!({ "coefficients": cs }),
            citations: &["Prop. can-ring"],
            text: cs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
            markdown: None,
        });
    }
    if let Some(w2) = &args.equal_weights {
        let r2 = args.equal_relations.clone().unwrap_or_default();
        let other = hilbert::series(w2, &r2)?;
        let eq = h.equal(&other)?;
        return Ok(Output {
            command: "hilbert",
            inputs,
            result: json!({
                "equal": eq,
                "lhs": render::hilbert_series(&h),
                "rhs": render::hilbert_series(&other),
            }),
            citations: &["Prop. can-ring", "Cor. index-3-smoothable"],
            text: eq.to_string(),
            markdown: None,
        });
    }
    if let Some(spec) = &args.check_plurigenera {
        let parts: Vec<i64> = spec
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Domain(format!("bad --check-plurigenera: {e}")))?;
        let [chi, k2, m_max] = parts[..] else {
            return Err(CliError::Domain(
                "--check-plurigenera expects CHI,K2,MMAX".to_string(),
            ));
        };
        let ok = h.matches_plurigenera(chi, k2, m_max)?;
        return Ok(Output {
            command: "hilbert",
            inputs,
            result: json!({ "matches_plurigenera": ok }),
            citations: &["Prop. can-ring"],
            text: ok.to_string(),
            markdown: None,
        });
    }
    let coeffs = h.coefficients_up_to(10)?;
    Ok(Output {
        command: "hilbert",
        inputs,
        result: json!({
            "series": render::hilbert_series(&h),
            "coefficients_up_to_10": coeffs,
        }),
        citations: &["Prop. can-ring"],
        text: format!(
            "{h}\ncoefficients 0..10: {}",
            coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        markdown: None,
    })
}

fn class_on(n: i64, pair: (i64, i64)) -> Result<FnClass, CliError> {
    Ok(FnClass::in_section_basis(n, pair.0, pair.1)?)
}

fn run_fn(cmd: &FnCmd) -> Result<Output, CliError> {
    match cmd {
        FnCmd::Intersection { n, class, with } => {
            let c1 = class_on(*n, *class)?;
            let c2 = class_on(*n, *with)?;
            let v = hirzebruch::intersect(&c1, &c2)?;
            Ok(Output {
                command: "fn intersection",
                inputs: json!({
                    "n": n,
                    "class": render::fn_class(&c1),
                    "with": render::fn_class(&c2),
                }),
                result: json!({ "value": v }),
                citations: &[],
                text: v.to_string(),
                markdown: None,
            })
        }
        FnCmd::H0 { n, class } => {
            let c = class_on(*n, *class)?;
            let v = hirzebruch::h0(&c);
            Ok(Output {
                command: "fn h0",
                inputs: json!({ "n": n, "class": render::fn_class(&c) }),
                result: json!({ "h0": v, "projective_dimension": v - 1 }),
                citations: &["Remark moduli-n=3"],
                text: v.to_string(),
                markdown: None,
            })
        }
        FnCmd::Genus { n, class } => {
            let c = class_on(*n, *class)?;
            let v = hirzebruch::arithmetic_genus(&c);
            Ok(Output {
                command: "fn genus",
                inputs: json!({ "n": n, "class": render::fn_class(&c) }),
                result: json!({ "arithmetic_genus": v }),
                citations: &["Prop. D"],
                text: v.to_string(),
                markdown: None,
            })
        }
        FnCmd::Dbound { n, class } => {
            let c = class_on(*n, *class)?;
            let v = hirzebruch::d_bound(&c);
            Ok(Output {
                command: "fn dbound",
                inputs: json!({ "n": n, "class": render::fn_class(&c) }),
                result: json!({ "d_bound": v }),
                citations: &["Prop. D(i)"],
                text: v.to_string(),
                markdown: None,
            })
        }
        FnCmd::Splittings { n, class } => {
            let c = class_on(*n, *class)?;
            let splittings = hirzebruch::enumerate_splittings(&c);
            let text = if splittings.is_empty() {
                "no admissible splittings".to_string()
            } else {
                splittings
                    .iter()
                    .map(|s| format!("D1 = {}, D2 = {}, m = {}, d = {}", s.d1, s.d2, s.m, s.d))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let md_rows: Vec<Vec<String>> = splittings
                .iter()
                .map(|s| {
                    vec![
                        s.d1.to_string(),
                        s.d2.to_string(),
                        s.m.to_string(),
                        s.d.to_string(),
                    ]
                })
                .collect();
            Ok(Output {
                command: "fn splittings",
                inputs: json!({ "n": n, "class": render::fn_class(&c) }),
                result: json!({
                    "splittings": splittings.iter().map(render::splitting).collect::<Vec<_>>(),
                }),
                citations: &["Prop. D"],
                text,
                markdown: Some(render::md_table(&["D1", "D2", "m", "d"], &md_rows)),
            })
        }
        FnCmd::Cover { n, branch } => {
            let c = class_on(*n, *branch)?;
            let inv = hirzebruch::double_cover(&c)?;
            Ok(Output {
                command: "fn cover",
                inputs: json!({ "n": n, "branch": render::fn_class(&c) }),
                result: render::cover(&inv),
                citations: &["Lemma elliptic-3"],
                text: format!(
                    "χ = {}, K² = {}, p_g = {}, q = {}",
                    inv.chi, inv.k_self, inv.p_g, inv.q
                ),
                markdown: None,
            })
        }
        FnCmd::Canonical { n } => {
            let k = hirzebruch::canonical_class(*n)?;
            Ok(Output {
                command: "fn canonical",
                inputs: json!({ "n": n }),
                result: json!({ "class": render::fn_class(&k), "square": k.square() }),
                citations: &[],
                text: format!("K = {k}, K² = {}", k.square()),
                markdown: None,
            })
        }
        FnCmd::Autdim { n } => {
            let v = hirzebruch::aut_dim(*n)?;
            Ok(Output {
                command: "fn autdim",
                inputs: json!({ "n": n }),
                result: json!({ "aut_dim": v }),
                citations: &["Prop. D"],
                text: v.to_string(),
                markdown: None,
            })
        }
        FnCmd::Moduli { case } => {
            let parsed = match case.as_str() {
                "generic-1" => ModuliCase::Generic { d: 1 },
                "generic-2" => ModuliCase::Generic { d: 2 },
                "generic-3" => ModuliCase::Generic { d: 3 },
                "r1" => ModuliCase::R1,
                "r2" => ModuliCase::R2,
                "r3" => ModuliCase::R3,
                other => {
                    return Err(CliError::Domain(format!(
                        "unknown case {other}; expected generic-1..3, r1, r2 or r3"
                    )))
                }
            };
            let v = hirzebruch::moduli_count(parsed)?;
            Ok(Output {
                command: "fn moduli",
                inputs: json!({ "case": case }),
                result: json!({ "moduli": v }),
                citations: &["Prop. D(ii)", "Prop. D(iii)"],
                text: v.to_string(),
                markdown: None,
            })
        }
    }
}

fn run_census(dmax: i64) -> Result<Output, CliError> {
    let theorem = census::main_theorem_table()?;
    let lemma = census::lemma_table();
    let mut records = Vec::new();
    for level in 0..=2u32 {
        records.extend(census::apply_filters(census::enumerate_candidates(
            level, dmax,
        )?));
    }

    let theorem_rows: Vec<Vec<String>> = theorem
        .iter()
        .map(|rec| {
            vec![
                rec.cartier_index.to_string(),
                render::singularity_label(rec),
                render::construction_label(rec),
            ]
        })
        .collect();
    let lemma_rows: Vec<Vec<String>> = lemma
        .iter()
        .map(|row| {
            vec![
                row.r_minus_d.to_string(),
                row.cartier_index.to_string(),
                row.k2_resolution.to_string(),
                row.singularity.clone(),
                row.strings.clone(),
            ]
        })
        .collect();

    let mut text = String::new();
    text.push_str("Classification (Cartier index | T-singularity | Construction):\n");
    for row in &theorem_rows {
        text.push_str(&format!("  {:<3} {:<24} {}\n", row[0], row[1], row[2]));
    }
    text.push_str("\nCase table (r-d | n | K² resolution | T-singularity | T-string):\n");
    for row in &lemma_rows {
        text.push_str(&format!(
            "  {:<3} {:<3} {:<4} {:<16} {}\n",
            row[0], row[1], row[2], row[3], row[4]
        ));
    }
    text.push_str(&format!("\nCandidates (dmax = {dmax}):\n"));
    for rec in &records {
        text.push_str(&format!(
            "  {:<12} {:<16} {}\n",
            rec.quotient.to_string(),
            rec.tstring.to_string(),
            render::verdict_line(rec)
        ));
    }
    text.push_str(
        "\nCited constraints: r-d <= 2 and the level-2 uniqueness are Rana-Urzúa, Thms. 1.1 and 3.2.\n",
    );

    let mut markdown = String::new();
    markdown.push_str("## Classification\n\n");
    markdown.push_str(&render::md_table(
        &["Cartier index", "T-singularity", "Construction"],
        &theorem_rows,
    ));
    markdown.push_str("\n## Case table\n\n");
    markdown.push_str(&render::md_table(
        &["r-d", "n", "K² resolution", "T-singularity", "T-string"],
        &lemma_rows,
    ));
    markdown.push_str("\n## Candidates\n\n");
    let candidate_rows: Vec<Vec<String>> = records
        .iter()
        .map(|rec| {
            vec![
                rec.quotient.to_string(),
                rec.tstring.to_string(),
                render::verdict_line(rec),
            ]
        })
        .collect();
    markdown.push_str(&render::md_table(
        &["Type", "T-string", "Verdict"],
        &candidate_rows,
    ));

    Ok(Output {
        command: "census",
        inputs: json!({ "dmax": dmax }),
        result: json!({
            "theorem_table": theorem.iter().map(render::record).collect::<Vec<_>>(),
            "lemma_table": lemma.iter().map(render::lemma_row).collect::<Vec<_>>(),
            "records": records.iter().map(render::record).collect::<Vec<_>>(),
            "cited_constraints": [
                "r - d <= 2 (Rana-Urzúa, Thm. 1.1)",
                "at r - d = 2 only 1/25(1,14) survives (Rana-Urzúa, Thm. 3.2)",
            ],
        }),
        citations: &["Theorem 1.1", "Cor. 1.2", "§4 Lemma", "Prop. D"],
        text,
        markdown: Some(markdown),
    })
}

fn run_verify(target: &str) -> Result<Output, CliError> {
    let records = if target == "all" {
        census::main_theorem_table()?
    } else {
        let (n, q) = parse_pair(target).map_err(CliError::Domain)?;
        vec![find_admitted(n, q)?]
    };
    let reports: Vec<_> = records
        .iter()
        .map(census::verify_construction)
        .collect::<Result<_, _>>()?;

    let all = reports.iter().all(|r| r.all_passed());
    let mut text = reports
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    text.push_str(&format!(
        "\noverall: {}",
        if all { "all checks passed" } else { "FAILURES" }
    ));
    Ok(Output {
        command: "verify",
        inputs: json!({ "target": target }),
        result: json!({
            "reports": reports.iter().map(render::report).collect::<Vec<_>>(),
            "all_passed": all,
        }),
        citations: &["Example n=2", "Example (b)", "Example (c)"],
        text,
        markdown: None,
    })
}

/// Locate the admitted census record for the singularity `1/N(1,Q)`.
fn find_admitted(n: i64, q: i64) -> Result<census::CensusRecord, CliError> {
    let s = hj::expand(n, q)?;
    let StringClass::NonCanonicalT(qt) = hj::classify_string(&s)? else {
        return Err(CliError::Domain(format!(
            "1/{n}(1,{q}) is not a non-canonical T-singularity"
        )));
    };
    let level = s.len() as i64 - qt.d();
    if !(0..=2).contains(&level) {
        return Err(CliError::Domain(format!(
            "1/{n}(1,{q}) has r - d = {level}; no I-surface carries it (r - d <= 2)"
        )));
    }
    let records = census::apply_filters(census::enumerate_candidates(level as u32, qt.d())?);
    let rec = records
        .into_iter()
        .find(|r| {
            r.quotient.d() == qt.d()
                && r.quotient.n() == qt.n()
                && (r.quotient.a() == qt.a() || r.quotient.a() == qt.n() - qt.a())
        })
        .ok_or_else(|| CliError::Internal(format!("no census record for 1/{n}(1,{q})")))?;
    match &rec.verdict {
        Verdict::Admitted { .. } => Ok(rec),
        Verdict::Excluded { reason, citation } => Err(CliError::Domain(format!(
            "1/{n}(1,{q}) is excluded: {reason} ({citation})"
        ))),
        _ => Err(CliError::Internal("unresolved census verdict".to_string())),
    }
}
