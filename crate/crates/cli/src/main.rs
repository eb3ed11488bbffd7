//! `euler-chow`: compute, expand, compare and verify Euler-Chow series.
//!
//! Exit status: 0 success, 1 verification failure or differing series,
//! 2 usage or file-format error, 3 unsupported request.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use euler_chow::catalog::{CatalogError, GeneratorName};
use euler_chow::io::{
    coefficient_table, default_variables, monomial, parse_rational, parse_series, rational_text,
    write_rational, write_series, IoError,
};
use euler_chow::schubert::SchubertSymbol;
use euler_chow::verify::{run_suite, Config, Suite};
use euler_chow::{euler_chow, GradedMonoid, Method, SeriesError, Variety};

const DEFAULT_DEGREE: u64 = 10;

#[derive(Parser)]
#[command(
    name = "euler-chow",
    version,
    about = "Euler-Chow series of projective varieties"
)]
struct Cli {
    /// Render Schubert labels as `<1;0,1>^2` instead of `⟨1;0,1⟩^2`.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute E_p of a catalog variety.
    Series {
        /// Pn(n), PnxP1(n), ProjClosure(n=N,d=D), Hirzebruch(d), BlowupPn(n),
        /// Flag012, G(1,3) or Macdonald(chi).
        variety: String,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// auto runs the pipeline and checks it against the closed form when
        /// a pipeline exists.
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run acceptance criteria.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        seed: Option<u64>,
        /// Random cases per randomised property.
        #[arg(long)]
        cases: Option<usize>,
    },
    /// Compare two series files coefficientwise.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Defaults to the smaller of the two file bounds.
        #[arg(long)]
        degree: Option<u64>,
    },
    /// Expand a rational closed-form file.
    Expand {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Rational,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// A message for stderr and the exit status that goes with it.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

const VERIFY_FAILED: u8 = 1;
const USAGE: u8 = 2;
const UNSUPPORTED: u8 = 3;

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        let code = match &e {
            CatalogError::Verification { .. } => VERIFY_FAILED,
            CatalogError::UnknownDescriptor(_) | CatalogError::NonPositiveChi(_) => USAGE,
            CatalogError::OutOfRange(_) | CatalogError::NoPipeline { .. } => UNSUPPORTED,
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::new(USAGE, e.to_string())
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Self {
        Failure::new(USAGE, e.to_string())
    }
}

fn unicode_terminal() -> bool {
    ["LC_ALL", "LC_CTYPE", "LANG"]
        .iter()
        .filter_map(|k| std::env::var(k).ok())
        .find(|v| !v.is_empty())
        .map(|v| {
            let v = v.to_ascii_lowercase();
            v.contains("utf-8") || v.contains("utf8")
        })
        .unwrap_or(false)
}

struct Style {
    ascii: bool,
}

impl Style {
    fn label(&self, label: &str) -> String {
        match label.parse::<SchubertSymbol>() {
            Ok(sym) if self.ascii => sym.ascii_label(),
            _ => label.to_string(),
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(USAGE, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(USAGE, format!("cannot read {}: {e}", path.display())))
}

fn method_name(verified: bool, method: Method) -> &'static str {
    match (verified, method) {
        (true, _) => "pipeline, checked against the closed form",
        (false, Method::Pipeline) => "pipeline",
        _ => "closed form",
    }
}

fn run_series(
    variety: &str,
    p: u32,
    degree: u64,
    format: Format,
    method: Method,
    output: Option<&Path>,
    style: &Style,
) -> Result<(), Failure> {
    let v: Variety = variety.parse()?;
    let result = euler_chow(v, p, degree, method)?;
    let variables: Vec<String> = result
        .generator_dictionary
        .iter()
        .map(|g| g.variable.clone())
        .collect();
    match format {
        Format::Json => emit(&write_series(&result.series), output),
        Format::Rational => {
            let closed = result.closed_form.as_ref().ok_or_else(|| {
                Failure::new(
                    UNSUPPORTED,
                    format!("no closed form is produced for {v} with --method pipeline"),
                )
            })?;
            println!("{}", rational_text(closed, &variables));
            if let Some(path) = output {
                emit(&write_rational(closed), Some(path))?;
            }
            Ok(())
        }
        Format::Text => {
            let mut text = format!("# E_{p}({v}) to total degree {degree}\n");
            text.push_str(&format!(
                "# method: {}\n",
                method_name(result.verified, method)
            ));
            if let Some(closed) = &result.closed_form {
                text.push_str(&format!(
                    "# closed form: {}\n",
                    rational_text(closed, &variables)
                ));
            }
            for GeneratorName { label, variable } in &result.generator_dictionary {
                text.push_str(&format!("# {variable} = {}\n", style.label(label)));
            }
            text.push_str(&coefficient_table(&result.series, &variables));
            emit(&text, output)
        }
    }
}

fn run_verify(suite: Suite, seed: Option<u64>, cases: Option<usize>) -> Result<(), Failure> {
    let mut config = Config::default();
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(cases) = cases {
        config.cases = cases;
    }
    let reports = run_suite(suite, &config);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        println!("all {} criteria passed", reports.len());
        Ok(())
    } else {
        Err(Failure::new(
            VERIFY_FAILED,
            format!("{failed} of {} criteria failed", reports.len()),
        ))
    }
}

/// Variable names for a file's monoid: the labels themselves when they are
/// plain identifiers, otherwise `t`, `t0`, `t1`, ….
fn file_variables(monoid: &GradedMonoid, style: &Style) -> Vec<String> {
    let plain = monoid
        .labels()
        .all(|l| !l.is_empty() && l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'));
    if plain {
        monoid.labels().map(String::from).collect()
    } else if monoid.labels().all(|l| l.parse::<SchubertSymbol>().is_ok()) {
        monoid
            .labels()
            .map(|l| format!("[{}]", style.label(l)))
            .collect()
    } else {
        default_variables(monoid)
    }
}

fn run_compare(a: &Path, b: &Path, degree: Option<u64>, style: &Style) -> Result<(), Failure> {
    let fa = parse_series(&read(a)?)
        .map_err(|e| Failure::new(USAGE, format!("{}: {e}", a.display())))?;
    let fb = parse_series(&read(b)?)
        .map_err(|e| Failure::new(USAGE, format!("{}: {e}", b.display())))?;
    let degree = degree.unwrap_or_else(|| fa.bound().min(fb.bound()));
    match fa.first_difference(&fb, degree)? {
        None => {
            println!("equal up to total degree {degree}");
            Ok(())
        }
        Some(d) => {
            let vars = file_variables(fa.monoid(), style);
            Err(Failure::new(
                VERIFY_FAILED,
                format!(
                    "first difference at {} (exponents {}): {} vs {}",
                    monomial(&d.element, &vars),
                    d.element,
                    d.left,
                    d.right
                ),
            ))
        }
    }
}

fn run_expand(
    file: &Path,
    degree: u64,
    format: Format,
    output: Option<&Path>,
    style: &Style,
) -> Result<(), Failure> {
    let r = parse_rational(&read(file)?)
        .map_err(|e| Failure::new(USAGE, format!("{}: {e}", file.display())))?;
    let vars = file_variables(r.monoid(), style);
    match format {
        Format::Json => emit(&write_series(&r.expand(degree)), output),
        Format::Rational => emit(&format!("{}\n", rational_text(&r, &vars)), output),
        Format::Text => {
            let mut text = format!("# {} to total degree {degree}\n", rational_text(&r, &vars));
            text.push_str(&coefficient_table(&r.expand(degree), &vars));
            emit(&text, output)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style {
        ascii: cli.ascii || !unicode_terminal(),
    };
    let outcome = match cli.command {
        Command::Series {
            variety,
            p,
            degree,
            format,
            method,
            output,
        } => run_series(
            &variety,
            p,
            degree,
            format,
            method,
            output.as_deref(),
            &style,
        ),
        Command::Verify { suite, seed, cases } => run_verify(suite, seed, cases),
        Command::Compare { a, b, degree } => run_compare(&a, &b, degree, &style),
        Command::Expand {
            file,
            degree,
            format,
            output,
        } => run_expand(&file, degree, format, output.as_deref(), &style),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
