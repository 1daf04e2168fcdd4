//! The `secdom` command line: classify graphs, solve exactly, run the
//! constructions, verify bounds, write the bench table and generate graphs.
//!
//! Exit codes: 0 on success, 1 when a bound or certificate check fails,
//! 2 on usage, parse or class-membership errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use secdom::construct::{construct_for_class, ConstructionClass, Options};
use secdom::domination::{max_independent_set, min_dominating_set, min_secure_dominating_set};
use secdom::format::{emit_graph, GraphDocument, GraphFormat};
use secdom::generators::{
    default_attempt_budget, BasicFamily, GeneratorSpec, RandomClassSpec, TwinKind,
};
use secdom::harness::{bench_rows, verify_bounds, write_bench_csv, VerifyConfig};
use secdom::recognition::{classify, PatternKind};
use secdom::{Error, Graph};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "secdom", version, about = "Secure domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one line per recognised graph class.
    Classify {
        /// Graph file (graph6 or edge list); `-` reads standard input.
        file: PathBuf,
    },
    /// Compute an exact parameter with a witness set.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: Parameter,
    },
    /// Run a class construction and certify the result.
    Construct {
        file: PathBuf,
        #[arg(long)]
        class: String,
        /// Skip the class-membership check (certification still runs).
        #[arg(long)]
        skip_validation: bool,
        /// Print every augmentation step of the P5-free procedure.
        #[arg(long)]
        trace: bool,
    },
    /// Check a class bound on every labeled graph up to `--nmax` vertices
    /// plus seeded random members.
    VerifyBounds {
        #[arg(long)]
        class: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Largest sampled graph.
        #[arg(long, default_value_t = secdom::harness::VERIFY_EXACT_MAX_N)]
        sample_nmax: usize,
    },
    /// Write the bench table over the tight families as CSV.
    Bench {
        /// Output path; `-` writes to standard output.
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit a generated graph.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count (path, cycle, star, complete, random).
        #[arg(long)]
        n: Option<usize>,
        /// Number of 5-cycles (disjoint-c5).
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated part sizes (multipartite, buoy, expansion).
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Edge probability (random).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Comma-separated forbidden induced patterns (random), e.g. P5,C3.
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
        /// Require a connected graph (random).
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Parameter {
    Alpha,
    Gamma,
    GammaS,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    DisjointC5,
    Multipartite,
    Buoy,
    Expansion,
    Random,
    RandomBlowup,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
}

impl From<OutputFormat> for GraphFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Graph6 => GraphFormat::Graph6,
            OutputFormat::EdgeList => GraphFormat::EdgeList,
        }
    }
}

/// A command outcome: an error message with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Certification { .. } | Error::Structure(_) => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // a closed pipe (`| head`) just means the reader has seen enough
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
    };
    Ok(GraphDocument::sniff(&text).parse()?)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Classify { file } => {
            let g = read_graph(&file)?;
            for (class, member) in classify(&g).flags {
                writeln!(out, "{class}: {member}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Solve { file, what } => {
            let g = read_graph(&file)?;
            let (name, set) = match what {
                Parameter::Alpha => ("alpha", max_independent_set(&g)?),
                Parameter::Gamma => ("gamma", min_dominating_set(&g)?),
                Parameter::GammaS => ("gamma-s", min_secure_dominating_set(&g)?.0),
            };
            writeln!(out, "{name}: {}", set.len())?;
            writeln!(out, "witness: {set}")?;
            Ok(EXIT_OK)
        }
        Command::Construct {
            file,
            class,
            skip_validation,
            trace,
        } => {
            let g = read_graph(&file)?;
            let class: ConstructionClass = class.parse()?;
            let opts = Options {
                validate: !skip_validation,
            };
            let r = construct_for_class(&g, class, opts)?;
            writeln!(out, "class: {class}")?;
            writeln!(out, "set: {}", r.set)?;
            writeln!(out, "size: {}", r.size())?;
            writeln!(out, "bound: {}", r.bound)?;
            writeln!(out, "within_bound: {}", r.within_bound())?;
            let verified = r.certificate.verify(&g).is_ok();
            writeln!(out, "certificate: {}", if verified { "verified" } else { "rejected" })?;
            if trace {
                match &r.trace {
                    Some(t) => {
                        writeln!(out, "initial: {}", t.initial)?;
                        for s in &t.steps {
                            writeln!(
                                out,
                                "step: i={} v={} u={} x={} size_s={} size_a={}->{}",
                                s.threshold, s.v, s.u, s.x, s.size_s_after, s.size_a_before, s.size_a_after
                            )?;
                        }
                    }
                    None => writeln!(out, "trace: not recorded for this class")?,
                }
            }
            Ok(if verified && r.within_bound() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::VerifyBounds {
            class,
            nmax,
            seed,
            samples,
            sample_nmax,
        } => {
            let class: ConstructionClass = class.parse()?;
            let cfg = VerifyConfig {
                seed,
                samples,
                sample_nmax,
                ..VerifyConfig::new(class, nmax)
            };
            let report = verify_bounds(&cfg)?;
            writeln!(out, "class: {class}")?;
            writeln!(out, "exhaustive: {}", report.exhaustive_checked)?;
            writeln!(
                out,
                "sampled: {} (draws without a sample: {})",
                report.sampled_checked, report.sampled_absent
            )?;
            writeln!(out, "violations: {}", report.violations.len())?;
            for v in &report.violations {
                writeln!(out, "  {v}")?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Bench { out: path } => {
            let rows = bench_rows()?;
            if path.as_os_str() == "-" {
                write_bench_csv(&rows, &mut *out)?;
            } else {
                let file = fs::File::create(&path)
                    .map_err(|e| usage(format!("cannot create {}: {e}", path.display())))?;
                write_bench_csv(&rows, io::BufWriter::new(file))?;
                writeln!(out, "wrote {} rows to {}", rows.len(), path.display())?;
            }
            Ok(if rows.iter().all(|r| r.within_bound) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Generate {
            family,
            n,
            k,
            sizes,
            p,
            forbid,
            connected,
            seed,
            format,
        } => {
            let spec = generator_spec(family, n, k, sizes, p, &forbid, connected, seed)?;
            let g = spec
                .generate()?
                .ok_or_else(|| usage("no graph found within the attempt budget"))?;
            let doc = emit_graph(&g, format.into());
            out.write_all(doc.payload.as_bytes())?;
            if !doc.payload.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generator_spec(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    sizes: Vec<usize>,
    p: f64,
    forbid: &[String],
    connected: bool,
    seed: u64,
) -> Result<GeneratorSpec, Failure> {
    let need_n = || n.ok_or_else(|| usage("--n is required for this family"));
    let five = |sizes: Vec<usize>| -> Result<[usize; 5], Failure> {
        sizes
            .try_into()
            .map_err(|_| usage("--sizes needs exactly five values"))
    };
    let basic = |family| -> Result<GeneratorSpec, Failure> {
        Ok(GeneratorSpec::Basic { family, n: need_n()? })
    };
    let random = || -> Result<RandomClassSpec, Failure> {
        let forbidden = forbid
            .iter()
            .map(|s| s.parse::<PatternKind>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RandomClassSpec::new(need_n()?, p, &forbidden, seed)
            .connected(connected)
            .budget(default_attempt_budget()))
    };
    Ok(match family {
        Family::Path => basic(BasicFamily::Path)?,
        Family::Cycle => basic(BasicFamily::Cycle)?,
        Family::Star => basic(BasicFamily::Star)?,
        Family::Complete => basic(BasicFamily::Complete)?,
        Family::DisjointC5 => GeneratorSpec::DisjointC5 {
            k: k.ok_or_else(|| usage("--k is required for disjoint-c5"))?,
        },
        Family::Multipartite => GeneratorSpec::CompleteMultipartite { sizes },
        Family::Buoy => GeneratorSpec::CompleteBuoy { sizes: five(sizes)? },
        Family::Expansion => GeneratorSpec::CycleExpansion { sizes: five(sizes)? },
        Family::Random => GeneratorSpec::Random(random()?),
        Family::RandomBlowup => GeneratorSpec::RandomBlowup {
            spec: random()?,
            kind: TwinKind::False,
            max_template: secdom::harness::BLOWUP_MAX_TEMPLATE,
        },
    })
}
