use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use immaculate::hecke::{straighten_from_bottom, straighten_to_top};
use immaculate::poset::{build_poset, export_dot, set_subposet, HeckePoset, Highlight};
use immaculate::qsym::{char_of, char_tableaux, gf_fillings};
use immaculate::shapes::{parse_composition, Composition, SkewShape};
use immaculate::tableaux::{generate_nset, generate_set, generate_sit, DescentKind, FillingFamily, Tableau};
use immaculate::verify::{
    branching_check, branching_check_set, enumeration_checks, eight_family_checks, module_checks, poset_checks,
    product_checks, relation_checks, run_suite, schur_checks, Failure, Suite,
};
use immaculate::qsym::two_alphabet_check;

/// Skew standard immaculate tableaux, their 0-Hecke actions, posets and
/// quasisymmetric characteristics.
///
/// Compositions are comma-separated positive integers, e.g. `--outer 4,2,4`;
/// rows are listed bottom row first. Omit `--inner` for a straight shape.
///
/// Generator words are printed as `pi_3 pi_1 pi_2` (rightmost acts first)
/// and serialized to JSON as arrays in application order, so the same word
/// is `[2, 1, 3]`.
///
/// Exit status: 0 on success, 1 when a verification check fails (the JSON
/// report is still printed), 2 on a usage error.
#[derive(Parser)]
#[command(name = "immaculate", version, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard immaculate tableaux of a shape in canonical order.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        output: Output,
    },
    /// The Hecke poset of a shape (covers are rdI swaps).
    ///
    /// With --format dot, --set/--nset highlight those tableaux; with json or
    /// text they restrict to the induced subposet.
    Poset {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        output: Output,
    },
    /// F-expansion of the module characteristic.
    Char {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "rdi")]
        kind: DescentKind,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        output: Output,
    },
    /// Generating polynomial of the filling family attached to a kind.
    Gf {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "rdi")]
        kind: DescentKind,
        /// Use the extended (all columns) family.
        #[arg(long)]
        set: bool,
        /// Number of variables; defaults to the shape size.
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Run verification suites on one shape or exhaustively.
    ///
    /// With --outer the per-shape checks of the chosen suite (or every suite)
    /// run on that shape. Without it the suite runs over all shapes of size at
    /// most --maxn; --all runs every suite.
    Verify {
        #[arg(long, value_parser = composition)]
        outer: Option<Composition>,
        #[arg(long, value_parser = composition, requires = "outer")]
        inner: Option<Composition>,
        #[arg(long, value_parser = suite)]
        suite: Option<Suite>,
        /// Restrict branching checks to one kind.
        #[arg(long)]
        kind: Option<DescentKind>,
        /// Branching threshold; all 1..=n when omitted.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, conflicts_with_all = ["outer", "suite"])]
        all: bool,
        #[arg(long, default_value_t = 6)]
        maxn: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Generator word carrying a special tableau to the given one.
    ///
    /// `bottom` gives the word w with π_w(S⁰) = T under rdI; `top` gives the
    /// word with π_w(S^row) = T under dI.
    Straighten {
        /// The tableau as JSON: {"outer":[..],"inner":[..],"rows":[[..],..]}.
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value_t = Direction::Bottom)]
        direction: Direction,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long, value_parser = composition)]
    outer: Composition,
    #[arg(long, value_parser = composition)]
    inner: Option<Composition>,
}

impl ShapeArgs {
    fn shape(&self) -> Result<SkewShape> {
        let inner = self.inner.clone().unwrap_or_else(Composition::empty);
        Ok(SkewShape::new(self.outer.clone(), inner)?)
    }
}

#[derive(Args)]
struct Filter {
    /// Extended tableaux (all columns increase).
    #[arg(long, conflicts_with = "nset")]
    set: bool,
    /// Tableaux that are not extended.
    #[arg(long)]
    nset: bool,
}

impl Filter {
    fn highlight(&self) -> Option<Highlight> {
        match (self.set, self.nset) {
            (true, _) => Some(Highlight::Set),
            (_, true) => Some(Highlight::Nset),
            _ => None,
        }
    }

    fn basis(&self, shape: &SkewShape) -> Vec<Tableau> {
        match self.highlight() {
            Some(Highlight::Set) => generate_set(shape),
            Some(Highlight::Nset) => generate_nset(shape),
            None => generate_sit(shape),
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Bottom,
    Top,
}

fn composition(s: &str) -> Result<Composition, String> {
    parse_composition(s).map_err(|e| e.to_string())
}

fn suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite; expected one of {}", names.join(", "))
    })
}

/// Errors that are the caller's fault rather than a failed check.
struct Usage(anyhow::Error);

macro_rules! pretty {
    ($v:expr) => {
        serde_json::to_string_pretty(&$v).map(|s| s + "\n").map_err(|e| Usage(e.into()))?
    };
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        bail!("--format dot is only available for `poset`");
    }
    Ok(())
}

fn poset_text(p: &HeckePoset) -> String {
    let mut out = String::new();
    let top = p.ranks().iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        let words: Vec<String> = p
            .nodes()
            .iter()
            .zip(p.ranks())
            .filter(|&(_, &k)| k == r)
            .map(|(t, _)| format!("{:?}", t.reading_word()))
            .collect();
        out += &format!("rank {r}: {}\n", words.join(" "));
    }
    for &(a, b, i) in p.covers() {
        out += &format!("{:?} -pi_{i}-> {:?}\n", p.nodes()[a].reading_word(), p.nodes()[b].reading_word());
    }
    out
}

struct Check {
    name: &'static str,
    failures: Vec<Failure>,
}

fn shape_checks(shape: &SkewShape, suite: Suite, kind: Option<DescentKind>, m: Option<usize>) -> Result<Check> {
    let straight = |what: &str| -> Result<Composition> {
        if !shape.is_straight() {
            bail!("suite {what} needs a straight shape (no --inner)");
        }
        Ok(shape.outer().clone())
    };
    let kinds: Vec<DescentKind> = kind.map_or(DescentKind::ALL.to_vec(), |k| vec![k]);
    let failures = match suite {
        Suite::Poset => poset_checks(shape),
        Suite::Relations => relation_checks(shape),
        Suite::EightFamilies => eight_family_checks(shape),
        Suite::Corollaries => {
            let mut f = Vec::new();
            if shape.is_straight() && shape.outer().is_partition() {
                f.extend(schur_checks(shape.outer()));
            }
            if shape.outer().len() == shape.inner().len() {
                f.extend(product_checks(shape));
            }
            f
        }
        Suite::TwoAlphabet => {
            let alpha = straight(suite.name())?;
            let n = alpha.size();
            let mut f = Vec::new();
            for k in kinds.into_iter().filter(|k| matches!(k, DescentKind::Di | DescentKind::Rdi)) {
                if !two_alphabet_check(&alpha, k, n, n)? {
                    f.push(Failure::new("two-alphabet identity", shape).kind(k));
                }
            }
            f
        }
        Suite::Branching | Suite::BranchingSet => {
            let alpha = straight(suite.name())?;
            let n = alpha.size();
            let ms: Vec<usize> = match m {
                Some(m) if m > n => bail!("--m {m} exceeds |α| = {n}"),
                Some(m) => vec![m],
                None => (1..=n).collect(),
            };
            let mut f = Vec::new();
            for &m in &ms {
                for &k in &kinds {
                    let r = if suite == Suite::Branching {
                        branching_check(&alpha, m, k)?
                    } else {
                        branching_check_set(&alpha, m, k)?
                    };
                    f.extend(r.failures);
                }
            }
            f
        }
        Suite::Module => module_checks(shape),
        Suite::Enumeration => enumeration_checks(shape),
    };
    Ok(Check { name: suite.name(), failures })
}

/// Returns the rendered output and whether every check passed.
fn run(command: Command) -> Result<(String, Option<PathBuf>, bool), Usage> {
    let usage = Usage;
    match command {
        Command::Enumerate { shape, filter, output } => {
            let s = shape.shape().map_err(usage)?;
            no_dot(output.format).map_err(usage)?;
            let basis = filter.basis(&s);
            let text = match output.format {
                Format::Text => basis.iter().map(|t| format!("{t}\n")).collect::<Vec<_>>().join("\n"),
                _ => pretty!(basis),
            };
            Ok((text, output.out, true))
        }
        Command::Poset { shape, filter, output } => {
            let s = shape.shape().map_err(usage)?;
            let full = build_poset(&s);
            let text = match output.format {
                Format::Dot => export_dot(&full, filter.highlight()),
                format => {
                    let p = match filter.highlight() {
                        Some(Highlight::Set) => set_subposet(&full),
                        Some(Highlight::Nset) => full.induced(|t| !t.is_set()),
                        None => full,
                    };
                    if format == Format::Text {
                        poset_text(&p)
                    } else {
                        pretty!(p.to_json())
                    }
                }
            };
            Ok((text, output.out, true))
        }
        Command::Char { shape, kind, filter, output } => {
            let s = shape.shape().map_err(usage)?;
            no_dot(output.format).map_err(usage)?;
            let f = match filter.highlight() {
                Some(Highlight::Set) => char_tableaux(&s, kind, true),
                Some(Highlight::Nset) => char_of(&generate_nset(&s), s.size(), kind),
                None => char_tableaux(&s, kind, false),
            };
            let text = match output.format {
                Format::Text => format!("{f}\n"),
                _ => pretty!(f),
            };
            Ok((text, output.out, true))
        }
        Command::Gf { shape, kind, set, vars, output } => {
            let s = shape.shape().map_err(usage)?;
            no_dot(output.format).map_err(usage)?;
            let p = gf_fillings(&s, FillingFamily::for_kind(kind, set), vars.unwrap_or(s.size()));
            let text = match output.format {
                Format::Text => format!("{p}\n"),
                _ => pretty!(p),
            };
            Ok((text, output.out, true))
        }
        Command::Straighten { tableau, direction, output } => {
            no_dot(output.format).map_err(usage)?;
            let t: Tableau = serde_json::from_str(&tableau).context("--tableau").map_err(usage)?;
            let w = match direction {
                Direction::Bottom => straighten_from_bottom(&t),
                Direction::Top => straighten_to_top(&t),
            }
            .map_err(|e| usage(e.into()))?;
            let text = match output.format {
                Format::Text => format!("{w}\n"),
                _ => pretty!(json!({ "word": w, "display": w.to_string() })),
            };
            Ok((text, output.out, true))
        }
        Command::Verify { outer, inner, suite, kind, m, all, maxn, output } => {
            no_dot(output.format).map_err(usage)?;
            let (report, passed): (Value, bool) = match outer {
                Some(outer) => {
                    let s = ShapeArgs { outer, inner }.shape().map_err(usage)?;
                    let suites = suite.map_or(Suite::ALL.to_vec(), |x| vec![x]);
                    let mut checks = Vec::new();
                    for x in suites {
                        // suites that need a straight shape are skipped on skew
                        // shapes unless asked for explicitly
                        let needs_straight =
                            matches!(x, Suite::TwoAlphabet | Suite::Branching | Suite::BranchingSet);
                        if suite.is_none() && needs_straight && !s.is_straight() {
                            continue;
                        }
                        checks.push(shape_checks(&s, x, kind, m).map_err(usage)?);
                    }
                    let passed = checks.iter().all(|c| c.failures.is_empty());
                    let checks: Vec<Value> = checks
                        .into_iter()
                        .map(|c| json!({ "suite": c.name, "passed": c.failures.is_empty(), "failures": c.failures }))
                        .collect();
                    (json!({ "shape": s.to_string(), "passed": passed, "checks": checks }), passed)
                }
                None => {
                    if m.is_some() || kind.is_some() {
                        return Err(usage(anyhow::anyhow!("--m and --kind apply to a single shape (--outer)")));
                    }
                    let suites = match (all, suite) {
                        (true, _) => Suite::ALL.to_vec(),
                        (false, Some(x)) => vec![x],
                        (false, None) => return Err(usage(anyhow::anyhow!("give --outer, --suite or --all"))),
                    };
                    let reports: Vec<_> = suites.into_iter().map(|x| run_suite(x, maxn)).collect();
                    let passed = reports.iter().all(|r| r.passed);
                    (json!({ "max_n": maxn, "passed": passed, "suites": reports }), passed)
                }
            };
            let text = match output.format {
                Format::Text => {
                    let mut t = String::new();
                    for c in report.get("checks").or(report.get("suites")).and_then(Value::as_array).into_iter().flatten() {
                        let ok = c["passed"].as_bool().unwrap_or(false);
                        t += &format!("{}: {}\n", c["suite"].as_str().unwrap_or("?"), if ok { "PASS" } else { "FAIL" });
                    }
                    t
                }
                _ => pretty!(report),
            };
            Ok((text, output.out, passed))
        }
    }
}

fn emit(text: &str, path: Option<PathBuf>) -> Result<()> {
    match path {
        Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, path, passed)) => {
            if let Err(e) = emit(&text, path) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
