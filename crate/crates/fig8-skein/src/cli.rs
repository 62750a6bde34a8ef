//! The `fig8` command line. The binary only calls [`main_with_args`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::aideal;
use crate::coeff::RatFunc;
use crate::diagram::{self, builtin, PdCode};
use crate::kappa::{self, Convention};
use crate::peripheral::{build_transcribed, derive_generators, GeneratorSet, Transcription};
use crate::report::{RunReport, REPORT_SCHEMA_VERSION};
use crate::suite::{self, SuiteOptions, DEFAULT_SEED};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fig8", version, about = "Exact skein computations for the figure-eight knot")]
pub struct Cli {
    /// Also write the JSON result to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Seed for the randomized law checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Format of standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Re-derived by linear algebra.
    Derived,
    /// As written in the built-in transcription.
    Written,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Knot {
    Fig8,
    Fig8Alt,
    Trefoil,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    General,
    Specialized,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::General => Convention::General,
            ConventionArg::Specialized => Convention::Specialized,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full verification suite.
    Verify {
        /// JSON object overriding fields of the transcription (g1..g4, xy, xz, y, z).
        #[arg(long, value_name = "PATH")]
        transcription: Option<PathBuf>,
        /// Largest n for the colored bracket relations.
        #[arg(long, default_value_t = 10)]
        kappa_max_n: u32,
    },
    /// Print the peripheral ideal generators and preimages.
    Generators {
        #[arg(long, value_enum, default_value_t = Source::Derived)]
        source: Source,
    },
    /// Print the A-ideal generators and the diff against the published ones.
    Aideal {
        /// Write every discrepancy to this JSON file.
        #[arg(long, value_name = "PATH")]
        erratum: Option<PathBuf>,
    },
    /// Solve the colored bracket recursion.
    Kappa {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::General)]
        convention: ConventionArg,
        /// Compare kappa_1, kappa_2 with the diagram state sums.
        #[arg(long)]
        check_oracle: bool,
    },
    /// State-sum brackets of a planar diagram.
    Oracle {
        /// PD code file (`X a b c d` lines); overrides --knot.
        #[arg(long, value_name = "PATH")]
        pd: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Knot::Fig8)]
        knot: Knot,
        /// Cable index.
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Print the bracket of the n-cable instead of the framing-corrected kappa_n.
        #[arg(long)]
        bracket: bool,
    },
}

/// Bad input that is not a clap parse error; exits with [`EXIT_USAGE`].
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("bad transcription {path}: {msg}")]
    Transcription { path: PathBuf, msg: String },
    #[error(transparent)]
    Diagram(#[from] diagram::DiagramError),
    #[error("{0}")]
    Other(String),
}

/// The result of a subcommand in all three renderings.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub pass: bool,
    pub json: Value,
    pub text: String,
    pub latex: String,
}

impl Outcome {
    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json") + "\n",
            Format::Latex => self.latex.clone(),
        }
    }
}

/// Parses, runs and prints; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if let Some(path) = &cli.json {
                let body = serde_json::to_string_pretty(&out.json).expect("json") + "\n";
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("fig8: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            if out.pass {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("fig8: {e}");
            EXIT_USAGE
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify { transcription, kappa_max_n } => {
            let transcription = match transcription {
                Some(p) => load_transcription(p)?,
                None => Transcription::default(),
            };
            if *kappa_max_n < 2 {
                return Err(CliError::Other(format!("--kappa-max-n must be at least 2, got {kappa_max_n}")));
            }
            let opts = SuiteOptions { seed: cli.seed, transcription, kappa_max_n: *kappa_max_n, ..Default::default() };
            Ok(verify_outcome(&suite::run(&opts)))
        }
        Command::Generators { source } => generators(*source),
        Command::Aideal { erratum } => aideal_cmd(erratum.as_deref()),
        Command::Kappa { max_n, convention, check_oracle } => kappa_cmd(*max_n, (*convention).into(), *check_oracle),
        Command::Oracle { pd, knot, n, bracket } => {
            let d = match pd {
                Some(p) => read(p)?.parse::<PdCode>()?,
                None => builtin_diagram(*knot),
            };
            oracle_cmd(&d, *n, *bracket)
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_transcription(path: &Path) -> Result<Transcription, CliError> {
    let t: Transcription = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Transcription { path: path.to_owned(), msg: e.to_string() })?;
    t.build().map_err(|e| CliError::Transcription { path: path.to_owned(), msg: e.to_string() })?;
    Ok(t)
}

fn builtin_diagram(k: Knot) -> PdCode {
    let src = match k {
        Knot::Fig8 => builtin::FIG8,
        Knot::Fig8Alt => builtin::FIG8_ALT,
        Knot::Trefoil => builtin::TREFOIL,
    };
    src.parse().expect("built-in diagram parses")
}

/// Math-mode rendering of the plain-text expression syntax.
pub fn latex_math(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '^' => {
                let mut exp = String::new();
                if chars.peek() == Some(&'-') {
                    exp.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                write!(out, "^{{{exp}}}").unwrap();
            }
            '*' => out.push_str("\\,"),
            '[' => out.push_str("\\left("),
            ']' => out.push_str("\\right)"),
            _ => out.push(c),
        }
    }
    out
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}").replace('_', "\\_").replace('^', "\\^{}").replace('&', "\\&").replace('%', "\\%")
}

fn align(rows: &[(String, String)]) -> String {
    let mut out = String::from("\\begin{align*}\n");
    for (i, (lhs, rhs)) in rows.iter().enumerate() {
        let end = if i + 1 < rows.len() { " \\\\" } else { "" };
        writeln!(out, "{lhs} &= {}{end}", latex_math(rhs)).unwrap();
    }
    out.push_str("\\end{align*}\n");
    out
}

fn verify_outcome(r: &RunReport) -> Outcome {
    let mut latex = String::from("\\begin{tabular}{ll}\n");
    for c in &r.checks {
        writeln!(latex, "{} & {} \\\\", c.status_word(), latex_escape(&c.name)).unwrap();
    }
    latex.push_str("\\end{tabular}\n");
    Outcome { pass: r.pass, json: serde_json::to_value(r).expect("json"), text: r.to_string(), latex }
}

fn generator_rows(gs: &GeneratorSet) -> Vec<(&'static str, String)> {
    let mut rows: Vec<_> = gs.generators().iter().map(|(n, g)| (*n, g.to_string())).collect();
    rows.extend(gs.preimages().iter().map(|(n, g, _)| (*n, g.to_string())));
    rows
}

fn generators(source: Source) -> Result<Outcome, CliError> {
    let gs = match source {
        Source::Derived => derive_generators().map_err(|e| CliError::Other(e.to_string()))?,
        Source::Written => build_transcribed(),
    };
    let rows = generator_rows(&gs);
    let label = |n: &str| match n {
        "xY" | "xZ" | "Y" | "Z" => format!("\\Phi^{{-1}}({n})"),
        g => format!("g_{}", &g[1..]),
    };
    let mut text = String::new();
    for (n, v) in &rows {
        writeln!(text, "{n} = {v}").unwrap();
    }
    let elements: serde_json::Map<String, Value> = rows.iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
    let json = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "source": match source { Source::Derived => "derived", Source::Written => "written" },
        "elements": elements,
    });
    let latex = align(&rows.iter().map(|(n, v)| (label(n), v.clone())).collect::<Vec<_>>());
    Ok(Outcome { pass: true, json, text, latex })
}

fn aideal_cmd(erratum: Option<&Path>) -> Result<Outcome, CliError> {
    let gs = derive_generators().map_err(|e| CliError::Other(e.to_string()))?;
    let ag = aideal::build_aideal(&gs);
    let checks = suite::check_aideal(&gs);
    let pass = checks.iter().all(|c| c.pass || c.diagnostic);
    let printed = aideal::build_printed(&gs).map_err(|e| CliError::Other(e.to_string()))?;
    let diffs = aideal::diff_printed(&gs, &ag, &printed);
    if let Some(path) = erratum {
        let body = serde_json::to_string_pretty(&aideal::erratum_json(&diffs)).expect("json") + "\n";
        std::fs::write(path, body).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    }
    let mut text = String::new();
    for (i, g) in ag.gens.iter().enumerate() {
        let (a, b) = ag.multipliers[i];
        writeln!(text, "g{} (left multiplier l^{a} m^{b}) = {g}", i + 1).unwrap();
    }
    for c in &checks {
        writeln!(text, "{} {}", c.status_word(), c.name).unwrap();
    }
    for d in &diffs {
        writeln!(text, "{d}").unwrap();
    }
    let gens: Vec<Value> = ag
        .gens
        .iter()
        .zip(ag.multipliers)
        .enumerate()
        .map(|(i, (g, m))| json!({ "name": format!("g{}", i + 1), "multiplier": m, "element": g.to_string() }))
        .collect();
    let json = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "pass": pass,
        "generators": gens,
        "checks": checks,
        "diff": diffs,
    });
    let rows: Vec<_> = ag.gens.iter().enumerate().map(|(i, g)| (format!("A_{}", i + 1), g.to_string())).collect();
    Ok(Outcome { pass, json, text, latex: align(&rows) })
}

fn kappa_cmd(max_n: u32, conv: Convention, check_oracle: bool) -> Result<Outcome, CliError> {
    let gs = derive_generators().map_err(|e| CliError::Other(e.to_string()))?;
    let series = kappa::solve_kappa(&gs, max_n, conv);
    let mut text = String::new();
    let mut pass = true;
    let mut json = json!({ "schema_version": REPORT_SCHEMA_VERSION, "convention": conv });
    match &series {
        Ok(s) => {
            for (n, v) in s.values.iter().enumerate() {
                writeln!(text, "kappa_{n} = {v}").unwrap();
            }
            json["kappa"] = s.values.iter().map(|v| json!(v.to_string())).collect();
            json["laurent"] = json!(s.all_laurent());
            json["symmetric"] = json!(s.all_symmetric());
        }
        Err(e) => {
            pass = false;
            writeln!(text, "FAIL {e}").unwrap();
            json["error"] = json!(e.to_string());
        }
    }
    if check_oracle {
        let d = builtin_diagram(Knot::Fig8);
        let k1 = RatFunc::from(diagram::oracle_kappa(&d, 1)?);
        let k2 = RatFunc::from(diagram::oracle_kappa(&d, 2)?);
        let ok = series.as_ref().is_ok_and(|s| s.values[1] == k1 && s.values[2] == k2);
        pass &= ok;
        writeln!(text, "{} oracle kappa_1 = {k1}; kappa_2 = {k2}", if ok { "PASS" } else { "FAIL" }).unwrap();
        json["oracle"] = json!({ "kappa_1": k1.to_string(), "kappa_2": k2.to_string(), "agree": ok });
    }
    json["pass"] = json!(pass);
    let latex = match &series {
        Ok(s) => align(&s.values.iter().enumerate().map(|(n, v)| (format!("\\kappa_{{{n}}}"), v.to_string())).collect::<Vec<_>>()),
        Err(e) => format!("% {e}\n"),
    };
    Ok(Outcome { pass, json, text, latex })
}

fn oracle_cmd(d: &PdCode, n: u32, bracket: bool) -> Result<Outcome, CliError> {
    let (label, value) = if bracket {
        (format!("bracket of the {n}-cable"), diagram::bracket(&d.cable(n)?)?)
    } else {
        (format!("kappa_{n}"), diagram::oracle_kappa(d, n)?)
    };
    let json = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "crossings": d.len(),
        "writhe": d.writhe()?,
        "n": n,
        "quantity": if bracket { "bracket" } else { "kappa" },
        "value": value.to_string(),
    });
    let lhs = if bracket { format!("\\langle D^{{({n})}} \\rangle") } else { format!("\\kappa_{{{n}}}") };
    Ok(Outcome {
        pass: true,
        json,
        text: format!("{label} = {value}\n"),
        latex: align(&[(lhs, value.to_string())]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_exponents() {
        assert_eq!(latex_math("[-t^-6 + 2*t] * (2,3)"), "\\left(-t^{-6} + 2\\,t\\right) \\, (2,3)");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["fig8", "nonsense"]), EXIT_USAGE);
        assert_eq!(main_with_args(["fig8", "kappa", "--format", "yaml"]), EXIT_USAGE);
        assert_eq!(main_with_args(["fig8", "--help"]), EXIT_PASS);
    }
}
