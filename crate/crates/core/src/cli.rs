//! The `hfst` command line.
//!
//! Exit codes: 0 success, 1 invalid input or unmet precondition, 2 parse
//! failure (including unreadable files and bad arguments), 3 internal
//! consistency failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::curves::{curve_to_typed, is_longitude_power, line_class};
use crate::format::{parse_document, Document};
use crate::hfst::{filling_dims, is_hfst, HfstError, HfstInput};
use crate::pairing::{box_tensor, homology_dim, mor_pairing, ChainComplex};
use crate::seifert::{classify, normalize};
use crate::structures::{builtin, check_ainfty, check_typed, is_bounded, Builtin, Pairable, Ring, TypeD};

#[derive(Parser, Debug)]
#[command(
    name = "hfst",
    version,
    about = "Bordered Floer pairings and HFST detection over the torus algebra",
    after_help = "All inputs must be framed by the rational longitude: λ is the horizontal \
                  direction (slope 0, the letter `l`), μ the vertical one (slope ∞, `m`). \
                  FILE arguments may also be `builtin:NAME`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a file and check that it is a valid object.
    Validate { file: String },
    /// Pair an A∞-module with a type D structure (or two type D structures with --mor).
    Pair {
        first: String,
        second: String,
        /// Require Laurent coefficients and compute over F₂(t).
        #[arg(long, conflicts_with = "untwisted")]
        twisted: bool,
        /// Set t = 1 and compute over F₂.
        #[arg(long)]
        untwisted: bool,
        /// Morphism complex of two type D structures.
        #[arg(long)]
        mor: bool,
        /// Print the chain complex.
        #[arg(long)]
        dump: bool,
    },
    /// Decide whether a λ-framed curve or type D structure is an HFST.
    IsHfst {
        file: String,
        /// Fillings μ + kλ are sampled for |k| ≤ K (default: generators + 2).
        #[arg(long)]
        window: Option<usize>,
    },
    /// Dimensions of the fillings μ + kλ.
    Fillings {
        file: String,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Classify a Seifert fibered rational homology solid torus.
    Seifert { file: String },
    /// Print a built-in object.
    Builtin { name: String },
}

struct Failure {
    code: i32,
    msg: String,
    /// Partial report still written to standard output.
    report: String,
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
        report: String::new(),
    }
}

fn invalid(file: &str, report: String, lines: Vec<String>) -> Failure {
    Failure {
        code: 1,
        msg: format!("{file}: invalid input\n{}", lines.join("\n")),
        report: format!("{report}valid: false\n"),
    }
}

fn load(arg: &str) -> Result<Document, Failure> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return match builtin(name).map_err(|e| fail(2, e.to_string()))? {
            Builtin::Module(m) => Ok(Document::AInfty(m)),
            Builtin::TypeD(p) => Ok(Document::TypeD(p)),
        };
    }
    let text = std::fs::read_to_string(arg).map_err(|e| fail(2, format!("{arg}: {e}")))?;
    parse_document(&text).map_err(|e| fail(2, format!("{arg}:{}:{}: {}", e.line, e.col, e.msg)))
}

fn as_typed(doc: Document, arg: &str) -> Result<TypeD, Failure> {
    match doc {
        Document::TypeD(p) => {
            check_typed(&p).map_err(|e| fail(1, format!("{arg}: {e}")))?;
            Ok(p)
        }
        Document::Curve(c) => curve_to_typed(&c).map_err(|e| fail(1, format!("{arg}: {e}"))),
        other => Err(fail(
            1,
            format!("{arg}: expected a type D structure or curve, found {}", other.kind().name()),
        )),
    }
}

fn as_hfst_input(doc: Document, arg: &str) -> Result<HfstInput, Failure> {
    match doc {
        Document::Curve(c) => Ok(HfstInput::Curve(c)),
        other => Ok(HfstInput::TypeD(as_typed(other, arg)?)),
    }
}

fn hfst_failure(e: HfstError) -> Failure {
    match e {
        HfstError::Inconsistent(_) => fail(3, e.to_string()),
        _ => fail(1, e.to_string()),
    }
}

fn validate(file: &str) -> Result<String, Failure> {
    let doc = load(file)?;
    let mut out = format!("kind: {}\n", doc.kind().name());
    match &doc {
        Document::TypeD(p) => {
            if let Err(report) = check_typed(p) {
                let lines = report.0.iter().map(|v| format!("violation: {v}")).collect();
                return Err(invalid(file, out, lines));
            }
            let cert = is_bounded(Pairable::TypeD(p)).expect("checked");
            out += &format!(
                "valid: true\ngenerators: {}\narrows: {}\nbounded: {}\n",
                p.len(),
                p.arrow_count(),
                cert.is_bounded()
            );
        }
        Document::AInfty(m) => {
            if let Err(report) = check_ainfty(m) {
                let lines = report.0.iter().map(|v| format!("violation: {v}")).collect();
                return Err(invalid(file, out, lines));
            }
            out += &format!(
                "valid: true\nring: {}\ngenerators: {}\nactions: {}\nbounded: {}\n",
                m.ring().name(),
                m.len(),
                m.action_count(),
                !m.declared_unbounded()
            );
        }
        Document::Curve(c) => {
            out += &format!("valid: true\ncomponents: {}\n", c.len());
            for (i, x) in c.components().iter().enumerate() {
                let class = match (is_longitude_power(x), line_class(x)) {
                    (Some(j), _) => format!("longitude^{j}"),
                    (None, Some((s, j))) => format!("line {s} x{j}"),
                    (None, None) => "unsupported".to_string(),
                };
                out += &format!("component {}: {x} ({class})\n", i + 1);
            }
        }
        Document::Seifert(s) => {
            let n = normalize(s);
            let cones: Vec<String> = n.cones.iter().map(ToString::to_string).collect();
            out += &format!(
                "valid: true\nbase: {}\nexceptional: {}\neuler: {}\n",
                n.base.name(),
                cones.join(","),
                n.e
            );
        }
    }
    Ok(out)
}

fn report(c: &ChainComplex, dump: bool) -> Result<String, Failure> {
    let dim = homology_dim(c).map_err(|e| fail(3, e.to_string()))?;
    let mut out = format!("field: {}\nbasis_size: {}\ndimension: {dim}\n", c.field().name(), c.len());
    if dump {
        out += &c.dump();
    }
    Ok(out)
}

fn pair(first: &str, second: &str, twisted: bool, untwisted: bool, mor: bool, dump: bool) -> Result<String, Failure> {
    let a = load(first)?;
    let b = as_typed(load(second)?, second)?;
    if mor {
        if twisted || untwisted {
            return Err(fail(1, "--twisted and --untwisted do not apply to morphism complexes"));
        }
        let a = as_typed(a, first)?;
        return report(&mor_pairing(&a, &b).map_err(|e| fail(1, e.to_string()))?, dump);
    }
    let Document::AInfty(mut m) = a else {
        return Err(fail(1, format!("{first}: expected an A-infinity module, found {}", a.kind().name())));
    };
    if twisted && m.ring() != Ring::Laurent {
        return Err(fail(1, format!("{first}: --twisted needs a module with Laurent coefficients")));
    }
    if untwisted {
        m = m.specialize_at_one();
    }
    report(&box_tensor(&m, &b).map_err(|e| fail(1, e.to_string()))?, dump)
}

fn execute(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Validate { file } => validate(&file),
        Command::Pair {
            first,
            second,
            twisted,
            untwisted,
            mor,
            dump,
        } => pair(&first, &second, twisted, untwisted, mor, dump),
        Command::IsHfst { file, window } => {
            let input = as_hfst_input(load(&file)?, &file)?;
            Ok(is_hfst(&input, window).map_err(hfst_failure)?.to_string())
        }
        Command::Fillings { file, window } => {
            let input = as_hfst_input(load(&file)?, &file)?;
            let window = window.unwrap_or(match &input {
                HfstInput::Curve(c) => curve_to_typed(c).map_err(|e| fail(1, e.to_string()))?.len() + 2,
                HfstInput::TypeD(p) => p.len() + 2,
            });
            let dims = filling_dims(&input, window).map_err(hfst_failure)?;
            let constant = dims.windows(2).all(|w| w[0].1 == w[1].1);
            let mut out = format!("window: {window}\nconstant: {constant}\n");
            for (k, d) in dims {
                out += &format!("filling {k}: {d}\n");
            }
            Ok(out)
        }
        Command::Seifert { file } => match load(&file)? {
            Document::Seifert(s) => Ok(classify(&s).to_string()),
            other => Err(fail(1, format!("{file}: expected Seifert data, found {}", other.kind().name()))),
        },
        Command::Builtin { name } => match builtin(&name).map_err(|e| fail(2, e.to_string()))? {
            Builtin::Module(m) => Ok(Document::AInfty(m).to_string()),
            Builtin::TypeD(p) => Ok(Document::TypeD(p).to_string()),
        },
    }
}

/// Runs the command line, writing results to `out` and diagnostics to
/// `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(if code == 0 { out as &mut dyn Write } else { err as &mut dyn Write }, "{e}");
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = out.write_all(f.report.as_bytes());
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}
