//! Command-line front end.

mod file;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use file::{parse_algebra_file, unparse};
pub use report::{emit_report, Format, Report, Summary};

use crate::catalog::{self, Check, Params, Status, VerifyOptions};
use crate::center::{associated_graded, center_basis_with, commutator, is_central, is_quasi_commutative, CenterOptions, Centrality, DEFAULT_MONOMIAL_CAP};
use crate::coeff::Field;
use crate::engine::Presentation;
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Debug, Parser)]
#[command(name = "skewpbw", version, about = "Normal forms and centers of skew PBW extensions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Run center and verification work on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    /// Largest number of monomials a center computation may use.
    #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP, global = true)]
    pub max_monomials: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the algebra comes from: a file, or a catalog entry.
#[derive(Debug, Args)]
pub struct Source {
    /// Catalog id instead of a file.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Catalog parameter override, `name=value`; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
    /// Coefficient field for a catalog entry: Q, Q(p) or Cyclo(n).
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the PBW normal form of an expression.
    Normalize {
        #[command(flatten)]
        source: Source,
        /// `[FILE] EXPR`
        #[arg(required = true, num_args = 1..=2)]
        args: Vec<String>,
    },
    /// Print `f g - g f`.
    Commutator {
        #[command(flatten)]
        source: Source,
        /// `[FILE] F G`
        #[arg(required = true, num_args = 2..=3)]
        args: Vec<String>,
    },
    /// Test whether an expression commutes with every generator.
    Central {
        #[command(flatten)]
        source: Source,
        /// `[FILE] EXPR`
        #[arg(required = true, num_args = 1..=2)]
        args: Vec<String>,
    },
    /// Basis of the center up to a degree bound.
    Center {
        #[command(flatten)]
        source: Source,
        file: Option<PathBuf>,
        #[arg(long, short = 'd')]
        max_degree: u32,
    },
    /// Print the associated graded algebra.
    Graded {
        #[command(flatten)]
        source: Source,
        file: Option<PathBuf>,
    },
    /// Check catalog facts, lemma identities and cancellation claims.
    Verify {
        #[arg(long, conflicts_with = "all")]
        algebra: Option<String>,
        #[arg(long)]
        all: bool,
        /// Degree used for triviality and cancellation checks.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Random triples per associativity check.
        #[arg(long, default_value_t = 20)]
        triples: usize,
    },
    /// List catalog algebras.
    List,
}

struct Loaded {
    pres: Presentation,
    name: String,
}

fn load(source: &Source, file: Option<&str>) -> Result<Loaded> {
    match (&source.algebra, file) {
        (Some(_), Some(f)) => Err(Error::BadArgument(format!("give either --algebra or a file, not both (`{f}`)"))),
        (Some(id), None) => {
            let entry = catalog::entry(id)?;
            let field = match &source.field {
                Some(f) => f.parse::<Field>().map_err(Error::BadArgument)?,
                None => entry.default_field,
            };
            let mut params = Params::new(field);
            for kv in &source.params {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::BadArgument(format!("parameter `{kv}` is not of the form name=value")))?;
                params.set(k.trim(), v.trim());
            }
            Ok(Loaded { pres: catalog::build(id, &params)?, name: id.clone() })
        }
        (None, Some(f)) => {
            if source.field.is_some() || !source.params.is_empty() {
                return Err(Error::BadArgument("--field and --param apply to --algebra only".into()));
            }
            let text = std::fs::read_to_string(f).map_err(|e| Error::BadArgument(format!("cannot read `{f}`: {e}")))?;
            Ok(Loaded { pres: parse_algebra_file(&text)?, name: f.to_string() })
        }
        (None, None) => Err(Error::BadArgument("an algebra file or --algebra is required".into())),
    }
}

/// Splits `[FILE] EXPR...` given how many expressions the command takes.
fn split_args<'a>(source: &Source, args: &'a [String], exprs: usize) -> Result<(Option<&'a str>, &'a [String])> {
    let has_file = source.algebra.is_none();
    let want = exprs + usize::from(has_file);
    if args.len() != want {
        let shape = if has_file { "a file and" } else { "with --algebra," };
        return Err(Error::BadArgument(format!("expected {shape} {exprs} expression(s), got {} argument(s)", args.len())));
    }
    Ok(if has_file { (Some(args[0].as_str()), &args[1..]) } else { (None, args) })
}

fn fail(name: &str, expected: &str, actual: String) -> Check {
    Check { name: name.into(), status: Status::Fail, expected: expected.into(), actual }
}

fn begin(command: &str, loaded: &Loaded) -> Report {
    let mut r = Report::new(command);
    r.algebra = Some(loaded.name.clone());
    r.field = Some(loaded.pres.field().to_string());
    r
}

fn execute(cli: &Cli) -> Result<Report> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match &cli.command {
        Command::Normalize { source, args } => {
            let (file, exprs) = split_args(source, args, 1)?;
            let l = load(source, file)?;
            let mut r = begin("normalize", &l);
            let f = l.pres.parse(&exprs[0])?;
            r.record("normal_form", l.pres.show(&f));
            Ok(r)
        }
        Command::Commutator { source, args } => {
            let (file, exprs) = split_args(source, args, 2)?;
            let l = load(source, file)?;
            let mut r = begin("commutator", &l);
            let (f, g) = (l.pres.parse(&exprs[0])?, l.pres.parse(&exprs[1])?);
            r.record("commutator", l.pres.show(&commutator(&l.pres, &f, &g)?));
            Ok(r)
        }
        Command::Central { source, args } => {
            let (file, exprs) = split_args(source, args, 1)?;
            let l = load(source, file)?;
            let mut r = begin("central", &l);
            let f = l.pres.parse(&exprs[0])?;
            match is_central(&l.pres, &f)? {
                Centrality::Central => r.record("central", "true"),
                Centrality::NotCentral(w) => r.push(fail(
                    "central",
                    "true",
                    format!("false; witness {} with [{0}, f] = {}", l.pres.name(w.generator), l.pres.show(&w.commutator)),
                )),
            }
            Ok(r)
        }
        Command::Center { source, file, max_degree } => {
            let l = load(source, file.as_ref().and_then(|f| f.to_str()))?;
            let mut r = begin("center", &l);
            let opts = CenterOptions { exec, max_monomials: cli.max_monomials };
            let cb = center_basis_with(&l.pres, *max_degree, &opts)?;
            for (k, b) in cb.basis.iter().enumerate() {
                r.record(format!("center/D{max_degree}/basis[{k}]"), l.pres.show(b));
            }
            Ok(r)
        }
        Command::Graded { source, file } => {
            let l = load(source, file.as_ref().and_then(|f| f.to_str()))?;
            let mut r = begin("graded", &l);
            let gr = associated_graded(&l.pres);
            r.record("graded", unparse(&gr));
            let quasi = is_quasi_commutative(&gr) && gr.validate().is_ok();
            r.push(Check {
                name: "quasi_commutative".into(),
                status: if quasi { Status::Pass } else { Status::Fail },
                expected: "true".into(),
                actual: quasi.to_string(),
            });
            Ok(r)
        }
        Command::Verify { algebra, all, max_degree, triples } => {
            let entries: Vec<_> = match (algebra, all) {
                (Some(id), _) => vec![catalog::entry(id)?],
                (None, true) => catalog::catalog().iter().collect(),
                (None, false) => return Err(Error::BadArgument("verify needs --algebra ID or --all".into())),
            };
            let opts = VerifyOptions {
                max_degree: *max_degree,
                exec,
                max_monomials: cli.max_monomials,
                associativity_triples: *triples,
                ..VerifyOptions::default()
            };
            let mut r = Report::new("verify");
            r.algebra = Some(algebra.clone().unwrap_or_else(|| "all".into()));
            for c in catalog::verify_entries(&entries, &opts) {
                r.push(c);
            }
            Ok(r)
        }
        Command::List => {
            let mut r = Report::new("list");
            for (id, sig, desc) in catalog::list_algebras() {
                r.record(id, format!("{sig}  {desc}"));
            }
            Ok(r)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Normalize { .. } => "normalize",
        Command::Commutator { .. } => "commutator",
        Command::Central { .. } => "central",
        Command::Center { .. } => "center",
        Command::Graded { .. } => "graded",
        Command::Verify { .. } => "verify",
        Command::List => "list",
    }
}

/// Runs a parsed command. Errors become a single failing `error` record.
pub fn run_cli(cli: &Cli) -> (Report, i32) {
    match execute(cli) {
        Ok(r) => {
            let code = if r.all_passed() { 0 } else { 1 };
            (r, code)
        }
        Err(e) => {
            let mut r = Report::new(command_name(&cli.command));
            r.push(fail("error", "", e.to_string()));
            (r, e.exit_code())
        }
    }
}

/// Parses `argv` (program name first) and runs it. Usage errors map to exit 2.
pub fn run_command<I, T>(argv: I) -> (Report, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run_cli(&cli),
        Err(e) => {
            let mut r = Report::new("usage");
            r.push(fail("error", "", e.to_string()));
            (r, 2)
        }
    }
}

/// Entry point used by the binary: prints the report and returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let (report, code) = run_cli(&cli);
    let text = emit_report(&report, cli.format);
    if code == 0 || code == 1 {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    code
}
