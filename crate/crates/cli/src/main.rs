//! Command-line surface: denominators, pole quivers, folding verification,
//! commuting-family identity suites, convolution/R-matrix reports, and
//! class-ring arithmetic, with machine-readable output.

use std::fmt::Display;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qschur::denom::{denom_zeros, factored_string, AlgebraTag, Family};
use qschur::exact::SpectralParam;
use qschur::klr::{CompositionReport, ShuffleModule, WordPolicy};
use qschur::klr::rmatrix::yang_baxter_holds;
use qschur::ktheory::{
    canonicalize_class, decompose_two_segment_product, dim_class, hom_fusion_check,
};
use qschur::quiver::{build_s0_window, check_pi2_isomorphism};
use qschur::rseries::{run_suite, PsiDefinition};
use qschur::segments::{Multisegment, Segment};

#[derive(Parser)]
#[command(name = "qschur", version, about = "Exact computations for type-A quantum affine R-matrix denominators, quiver Hecke segment calculus, and class rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A1", alias = "a1")]
    A1,
    #[value(name = "A2", alias = "a2")]
    A2,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A1 => Family::A1,
            FamilyArg::A2 => Family::A2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum PsiDefArg {
    /// Definition through the rational function g.
    G,
    /// The displayed product form.
    Product,
}

/// Segment endpoints "a,b".
fn parse_seg(s: &str) -> Result<Segment, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a,b — got {s}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b + 1 {
        return Err(format!("empty segment ({a},{b})"));
    }
    Ok(Segment::new(a, b))
}

/// Inclusive integer range "a..b" (or a single integer).
fn parse_range(s: &str) -> Result<(i64, i64), String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|e| format!("{e}"))?;
        let b: i64 = b.trim().parse().map_err(|e| format!("{e}"))?;
        if a > b {
            return Err(format!("empty range {s}"));
        }
        Ok((a, b))
    } else {
        let a: i64 = s.trim().parse().map_err(|e| format!("{e}"))?;
        Ok((a, a))
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Denominator of the normalized R-matrix between two fundamental
    /// representations.
    Denom {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long = "N")]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Pole quiver on the standard parameter window.
    Quiver {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long = "N")]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        pmin: i64,
        #[arg(long, allow_negative_numbers = true)]
        pmax: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify that the folding map is a pole-quiver isomorphism.
    Pi2Verify {
        /// One value of N, or an inclusive range "a..b".
        #[arg(long = "N", value_parser = parse_range)]
        n: (i64, i64),
        #[arg(long, allow_negative_numbers = true)]
        pmin: i64,
        #[arg(long, allow_negative_numbers = true)]
        pmax: i64,
        #[arg(long)]
        fail_fast: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the commuting-family identity suite.
    VerifyRseries {
        /// One value of N, or an inclusive range "a..b".
        #[arg(long = "N", value_parser = parse_range)]
        n: (i64, i64),
        #[arg(long, value_enum, default_value = "g")]
        psi_def: PsiDefArg,
        #[arg(long)]
        fail_fast: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Quiver Hecke convolution modules and R-matrices.
    Klr {
        #[command(subcommand)]
        command: KlrCommand,
    },
    /// Class arithmetic in the localized category at q = 1.
    Ktheory {
        #[command(subcommand)]
        command: KtheoryCommand,
    },
}

#[derive(Subcommand)]
enum KlrCommand {
    /// Graded dimension data of a convolution of segment modules.
    Compose {
        /// Segment "a,b"; repeat for each factor, in order.
        #[arg(long, value_parser = parse_seg, allow_hyphen_values = true, required = true)]
        seg: Vec<Segment>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Renormalized R-matrix report for an ordered pair of segments.
    Rmatrix {
        /// Segment "a,b"; exactly two.
        #[arg(long, value_parser = parse_seg, allow_hyphen_values = true, num_args = 1, required = true)]
        seg: Vec<Segment>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the hexagon identity on a triple of segments.
    Yangbaxter {
        /// Segment "a,b"; exactly three.
        #[arg(long, value_parser = parse_seg, allow_hyphen_values = true, num_args = 1, required = true)]
        seg: Vec<Segment>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum KtheoryCommand {
    /// Canonical simple class of a multisegment.
    Canonicalize {
        #[arg(long = "N")]
        n: i64,
        #[arg(long, value_parser = parse_seg, allow_hyphen_values = true, required = true)]
        seg: Vec<Segment>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decompose a product of two segment classes at q = 1.
    Decompose {
        #[arg(long = "N")]
        n: i64,
        /// Segment "a,b"; exactly two.
        #[arg(long, value_parser = parse_seg, allow_hyphen_values = true, num_args = 1, required = true)]
        seg: Vec<Segment>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dimension of the image of a simple class (both functors agree).
    Dim {
        #[arg(long = "N")]
        n: i64,
        #[arg(long, value_parser = parse_seg, allow_hyphen_values = true, required = true)]
        seg: Vec<Segment>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Test the two fusion-parameter conditions on a triple of labels;
    /// spectral parameters are exponents p of (-q)^p.
    FusionCheck {
        #[arg(long = "N")]
        n: i64,
        #[arg(long)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        x: i64,
        #[arg(long)]
        j: i64,
        #[arg(long, allow_negative_numbers = true)]
        y: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        z: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

enum CliError {
    /// Invalid arguments (exit 2).
    Usage(String),
    /// A verification failed or a computation reported an error (exit 1).
    Failed(String),
}

impl From<qschur::Error> for CliError {
    fn from(e: qschur::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn emit(output: &OutputArgs, s: String) -> Result<(), CliError> {
    match &output.out {
        None => {
            print!("{s}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, s).map_err(|e| CliError::Failed(format!("write {path}: {e}")))
        }
    }
}

fn text_or_json<T: Serialize, D: Display>(
    output: &OutputArgs,
    value: &T,
    text: impl FnOnce() -> D,
) -> Result<(), CliError> {
    match output.format {
        Format::Text => emit(output, format!("{}\n", text())),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            emit(output, s)
        }
        _ => Err(CliError::Usage("format not supported here".into())),
    }
}

#[derive(Serialize)]
struct DenomOut {
    family: Family,
    n: i64,
    k: i64,
    l: i64,
    zeros: Vec<SpectralParam>,
    factored: String,
}

#[derive(Serialize)]
struct ComposeOut {
    segments: Vec<Segment>,
    dim: usize,
    graded_dim: qschur::exact::LaurentQ,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Denom {
            family,
            n,
            k,
            l,
            output,
        } => {
            let tag = AlgebraTag::new(family.into(), n).map_err(|e| CliError::Usage(e.to_string()))?;
            let zeros = denom_zeros(&tag, k, l).map_err(|e| CliError::Usage(e.to_string()))?;
            let factored = factored_string(&zeros);
            let out = DenomOut {
                family: family.into(),
                n,
                k,
                l,
                zeros,
                factored,
            };
            match output.format {
                Format::Csv => {
                    let mut s = String::from("sign,exponent\n");
                    for z in &out.zeros {
                        s.push_str(&format!("{},{}\n", z.sign, z.exponent));
                    }
                    emit(&output, s)
                }
                _ => text_or_json(&output, &out, || out.factored.clone()),
            }
        }
        Command::Quiver {
            family,
            n,
            pmin,
            pmax,
            output,
        } => {
            let tag = AlgebraTag::new(family.into(), n).map_err(|e| CliError::Usage(e.to_string()))?;
            let w = build_s0_window(&tag, pmin, pmax)?;
            match output.format {
                Format::Dot => emit(&output, w.to_dot()),
                Format::Csv => {
                    let mut s = String::from("source,target,multiplicity\n");
                    for ((a, b), m) in &w.arrows {
                        s.push_str(&format!(
                            "{},{},{m}\n",
                            w.vertices[*a].label(),
                            w.vertices[*b].label()
                        ));
                    }
                    emit(&output, s)
                }
                _ => text_or_json(&output, &w, || {
                    let mut s = format!("{} vertices", w.vertices.len());
                    for ((a, b), m) in &w.arrows {
                        s.push_str(&format!(
                            "\n{} -> {} ({m})",
                            w.vertices[*a].label(),
                            w.vertices[*b].label()
                        ));
                    }
                    s
                }),
            }
        }
        Command::Pi2Verify {
            n: (n0, n1),
            pmin,
            pmax,
            fail_fast,
            output,
        } => {
            let mut reports = Vec::new();
            let mut ok = true;
            for n in n0..=n1 {
                let r = check_pi2_isomorphism(n, pmin, pmax)?;
                ok &= r.pass();
                reports.push(r);
                if fail_fast && !ok {
                    break;
                }
            }
            text_or_json(&output, &reports, || {
                reports
                    .iter()
                    .map(|r| {
                        format!(
                            "N={}: {} ({} vertices, {} pairs)",
                            r.n,
                            if r.pass() { "pass" } else { "FAIL" },
                            r.vertices_checked,
                            r.pairs_checked
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Failed("folding verification failed".into()))
            }
        }
        Command::VerifyRseries {
            n: (n0, n1),
            psi_def,
            fail_fast,
            output,
        } => {
            let def = match psi_def {
                PsiDefArg::G => PsiDefinition::ViaG,
                PsiDefArg::Product => PsiDefinition::DisplayedProduct,
            };
            let mut reports = Vec::new();
            let mut ok = true;
            for n in n0..=n1 {
                let r = run_suite(n, def);
                ok &= r.pass();
                reports.push(r);
                if fail_fast && !ok {
                    break;
                }
            }
            text_or_json(&output, &reports, || {
                reports
                    .iter()
                    .map(|r| {
                        let fails = r.failures().count();
                        format!(
                            "N={}: {} ({}/{} identities pass)",
                            r.n,
                            if r.pass() { "pass" } else { "FAIL" },
                            r.items.len() - fails,
                            r.items.len()
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Failed("identity suite failed".into()))
            }
        }
        Command::Klr { command } => run_klr(command),
        Command::Ktheory { command } => run_ktheory(command),
    }
}

fn run_klr(command: KlrCommand) -> Result<(), CliError> {
    match command {
        KlrCommand::Compose { seg, output } => {
            let total: i64 = seg.iter().map(Segment::len).sum();
            if total > 8 {
                return Err(CliError::Usage("total size capped at 8".into()));
            }
            let m: ShuffleModule<qschur::exact::Rat> = ShuffleModule::new(
                &seg,
                vec![qschur::exact::ring::Coeff::zero(); seg.len()],
                WordPolicy::MinDescent,
            );
            let out = ComposeOut {
                segments: seg,
                dim: m.dim(),
                graded_dim: m.graded_dim(),
            };
            text_or_json(&output, &out, || {
                format!("dim {} graded {}", out.dim, out.graded_dim)
            })
        }
        KlrCommand::Rmatrix { seg, output } => {
            let [l, r] = seg[..] else {
                return Err(CliError::Usage("need exactly two --seg".into()));
            };
            if l.len() + r.len() > 7 {
                return Err(CliError::Usage("total size capped at 7".into()));
            }
            let rep = CompositionReport::compute(l, r, WordPolicy::MinDescent);
            text_or_json(&output, &rep, || {
                format!(
                    "s={} lambda={} iso={} ker={} coker={}",
                    rep.s, rep.lambda, rep.is_isomorphism, rep.ker_gdim, rep.coker_gdim
                )
            })
        }
        KlrCommand::Yangbaxter { seg, output } => {
            let [s1, s2, s3] = seg[..] else {
                return Err(CliError::Usage("need exactly three --seg".into()));
            };
            if s1.len() + s2.len() + s3.len() > 6 {
                return Err(CliError::Usage("total size capped at 6".into()));
            }
            let holds = yang_baxter_holds(s1, s2, s3, WordPolicy::MinDescent);
            text_or_json(
                &output,
                &serde_json::json!({ "segments": [s1, s2, s3], "holds": holds }),
                || if holds { "pass" } else { "FAIL" },
            )?;
            if holds {
                Ok(())
            } else {
                Err(CliError::Failed("hexagon identity failed".into()))
            }
        }
    }
}

fn run_ktheory(command: KtheoryCommand) -> Result<(), CliError> {
    match command {
        KtheoryCommand::Canonicalize { n, seg, output } => {
            if n < 2 {
                return Err(CliError::Usage("need N >= 2".into()));
            }
            let c = canonicalize_class(&Multisegment::new(seg), n);
            text_or_json(&output, &c, || c.to_string())
        }
        KtheoryCommand::Decompose { n, seg, output } => {
            let [s1, s2] = seg[..] else {
                return Err(CliError::Usage("need exactly two --seg".into()));
            };
            let d = decompose_two_segment_product(s1, s2, n)?;
            text_or_json(&output, &d, || {
                d.iter()
                    .map(|(c, m)| format!("{m} * {c}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            })
        }
        KtheoryCommand::Dim { n, seg, output } => {
            if n < 2 {
                return Err(CliError::Usage("need N >= 2".into()));
            }
            let c = canonicalize_class(&Multisegment::new(seg), n);
            let d = dim_class(Family::A1, &c)?;
            debug_assert_eq!(d, dim_class(Family::A2, &c)?);
            text_or_json(
                &output,
                &serde_json::json!({ "class": c, "dim": d }),
                || d,
            )
        }
        KtheoryCommand::FusionCheck {
            n,
            i,
            x,
            j,
            y,
            k,
            z,
            output,
        } => {
            for t in [i, j, k] {
                if t < 1 || t > n - 1 {
                    return Err(CliError::Usage(format!("label {t} outside 1..={}", n - 1)));
                }
            }
            let c = hom_fusion_check(
                i,
                SpectralParam::neg_q_pow(x),
                j,
                SpectralParam::neg_q_pow(y),
                k,
                SpectralParam::neg_q_pow(z),
                n,
            );
            text_or_json(&output, &c, || format!("{c:?}"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
