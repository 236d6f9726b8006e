//! The `quandles` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input or a negative answer (`verify`
//! on a non-quandle, `iso` on non-isomorphic inputs), 2 usage errors, 3 an
//! enumeration that hit its resource cap.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::{
    are_isomorphic, automorphism_group, canonical_form, determinant, enumerate, parse_matrix,
    verify_quandle, ConstructorSpec, Emit, EnumerationOptions, EnumerationOutput, Error,
    QuandleMatrix, Strategy,
};

#[derive(Debug, Parser)]
#[command(
    name = "quandles",
    version,
    about = "Finite quandles as operation matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Inputs are matrix files, `-` for standard input, or constructor specs
/// such as `dihedral:5`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Check the quandle conditions and report the first failures
    Verify { input: String },
    /// Structural properties: trace, latin, connected, orbits, Aut(Q), N_p
    Props { input: String },
    /// Find the least relabeling taking the first quandle to the second
    Iso { first: String, second: String },
    /// Automorphism group with all elements in cycle notation
    Aut { input: String },
    /// Canonical representative of the isomorphism class
    Canon { input: String },
    /// Number of standard-form matrices isomorphic to the input
    Np { input: String },
    /// Matrix of the dual quandle
    Dual { input: String },
    /// Integer determinant of the matrix
    Det { input: String },
    /// Build a quandle: trivial:<n>, dihedral:<n>, alexander:<m>:<coeffs>,
    /// conj:<degree>:<elements>[:<exponent>]
    Make { spec: String },
    /// Enumerate every quandle of order n up to isomorphism
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    n: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::Backtracking)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Print every standard-form matrix instead of the class report
    #[arg(long)]
    all: bool,
    /// Line-oriented records instead of the table
    #[arg(long)]
    machine: bool,
    #[arg(long, default_value_t = crate::enumeration::DEFAULT_MAX_PLACEMENTS)]
    max_placements: u64,
    /// Wall-clock limit in seconds
    #[arg(long)]
    time_limit: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Naive,
    Backtracking,
}

enum Failure {
    Input(String),
    Answer(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { .. } => Failure::Cap(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_raw(&mut self, input: &str) -> Result<QuandleMatrix, Failure> {
        let text = if input == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        } else if Path::new(input).exists() || !input.contains(':') {
            std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("{input}: {e}")))?
        } else {
            return Ok(input.parse::<ConstructorSpec>()?.build()?);
        };
        parse_matrix(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))
    }

    fn read(&mut self, input: &str) -> Result<QuandleMatrix, Failure> {
        let raw = self.read_raw(input)?;
        raw.validated().map_err(|e| match e {
            Error::NotAQuandle(report) => {
                Failure::Input(format!("{input}: not a quandle matrix: {report}"))
            }
            e => e.into(),
        })
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<String, Failure> {
    let mut text = String::new();
    match command {
        Command::Verify { input } => {
            let report = verify_quandle(&io.read_raw(&input)?);
            if !report.is_valid() {
                let lines: Vec<String> = report.failures().iter().map(|f| f.to_string()).collect();
                return Err(Failure::Answer(format!("invalid\n{}", lines.join("\n"))));
            }
            text.push_str("valid\n");
        }
        Command::Props { input } => {
            let m = io.read(&input)?;
            let aut = automorphism_group(&m);
            let orbits: Vec<String> = m
                .orbits()
                .iter()
                .map(|b| {
                    let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                    format!("{{{}}}", items.join(", "))
                })
                .collect();
            text = format!(
                "n = {}\ntrace = {}\nlatin = {}\nconnected = {}\norbits = {}\naut order = {}\naut group = {}\nN_p = {}\n",
                m.order(),
                m.trace(),
                m.is_latin(),
                m.is_connected(),
                orbits.join(" "),
                aut.order(),
                aut.identify(),
                crate::perm::factorial(m.order()) / aut.order(),
            );
        }
        Command::Iso { first, second } => {
            let (a, b) = (io.read(&first)?, io.read(&second)?);
            match are_isomorphic(&a, &b) {
                Some(w) => text = format!("{w}\n"),
                None => return Err(Failure::Answer("not isomorphic".into())),
            }
        }
        Command::Aut { input } => {
            let aut = automorphism_group(&io.read(&input)?);
            text = format!("order {}\ngroup {}\n", aut.order(), aut.identify());
            for p in aut.elements() {
                text.push_str(&format!("{p}\n"));
            }
        }
        Command::Canon { input } => text = canonical_form(&io.read(&input)?).to_string(),
        Command::Np { input } => text = format!("{}\n", crate::np_count(&io.read(&input)?)),
        Command::Dual { input } => text = io.read(&input)?.dual().to_string(),
        Command::Det { input } => text = format!("{}\n", determinant(&io.read(&input)?)?),
        Command::Make { spec } => {
            let m = spec.parse::<ConstructorSpec>()?.build()?;
            text = m.validated()?.to_string();
        }
        Command::Enumerate(args) => {
            let opts = EnumerationOptions {
                strategy: match args.strategy {
                    StrategyArg::Naive => Strategy::Naive,
                    StrategyArg::Backtracking => Strategy::Backtracking,
                },
                jobs: args.jobs as usize,
                emit: if args.all {
                    Emit::AllMatrices
                } else {
                    Emit::Classes
                },
                max_placements: args.max_placements,
                time_limit: args
                    .time_limit
                    .map(|s| Duration::try_from_secs_f64(s).unwrap_or(Duration::MAX)),
            };
            match enumerate(args.n, &opts)? {
                EnumerationOutput::Classes(report) if args.machine => text = report.to_machine(),
                EnumerationOutput::Classes(report) => text = report.to_table(),
                EnumerationOutput::Matrices(all) => {
                    for (k, m) in all.iter().enumerate() {
                        if args.machine {
                            text.push_str(&m.to_machine_line());
                            text.push('\n');
                        } else {
                            if k > 0 {
                                text.push('\n');
                            }
                            text.push_str(&m.to_string());
                        }
                    }
                }
            }
        }
    }
    Ok(text)
}

/// Parses `args` (including the program name) and runs one subcommand,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match execute(cli.command, &mut io) {
        Ok(text) => {
            let _ = io.out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Answer(msg)) => {
            let _ = writeln!(io.out, "{msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["quandles"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn make_and_verify_through_stdin() {
        let (code, out, _) = run_capture(&["make", "dihedral:3"], "");
        assert_eq!((code, out.as_str()), (0, "1 3 2\n3 2 1\n2 1 3\n"));
        let (code, out, _) = run_capture(&["verify", "-"], &out);
        assert_eq!((code, out.as_str()), (0, "valid\n"));
    }

    #[test]
    fn verify_reports_failures() {
        let (code, out, _) = run_capture(&["verify", "-"], "1 2 3\n3 1 2\n2 3 1\n");
        assert_eq!(code, 1);
        assert!(out.starts_with("invalid\ndiagonal:"), "{out}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&[], "").0, 2);
        assert_eq!(run_capture(&["bogus"], "").0, 2);
        assert_eq!(run_capture(&["enumerate", "x"], "").0, 2);
        assert_eq!(run_capture(&["enumerate", "3", "--jobs", "0"], "").0, 2);
    }

    #[test]
    fn invalid_input_exits_one() {
        let (code, _, err) = run_capture(&["props", "-"], "1 1\n1 2\n");
        assert_eq!(code, 1);
        assert!(err.contains("column"), "{err}");
        let (code, _, err) = run_capture(&["canon", "-"], "1 2\n2");
        assert_eq!(code, 1);
        assert!(err.contains("line 2"), "{err}");
        assert_eq!(run_capture(&["np", "/nonexistent/file"], "").0, 1);
    }

    #[test]
    fn resource_cap_exits_three() {
        let (code, _, err) = run_capture(
            &[
                "enumerate",
                "5",
                "--strategy",
                "naive",
                "--max-placements",
                "100",
            ],
            "",
        );
        assert_eq!(code, 3);
        assert!(err.contains("aborted"), "{err}");
    }

    #[test]
    fn props_of_fig1_third() {
        let (code, out, _) = run_capture(&["props", "-"], "1 1 1\n3 2 2\n2 3 3\n");
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "n = 3\ntrace = 6\nlatin = false\nconnected = false\norbits = {1} {2, 3}\naut order = 2\naut group = Z_2\nN_p = 3\n"
        );
    }

    #[test]
    fn aut_lists_elements() {
        let (code, out, _) = run_capture(&["aut", "trivial:3"], "");
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "order 6\ngroup S_3\n()\n(2 3)\n(1 2)\n(1 2 3)\n(1 3 2)\n(1 3)\n"
        );
    }

    #[test]
    fn iso_negative_answer() {
        let (code, out, _) = run_capture(&["iso", "trivial:3", "dihedral:3"], "");
        assert_eq!((code, out.as_str()), (1, "not isomorphic\n"));
    }

    #[test]
    fn other_subcommands() {
        assert_eq!(run_capture(&["np", "trivial:4"], "").1, "1\n");
        assert_eq!(run_capture(&["det", "dihedral:3"], "").1, "-18\n");
        assert_eq!(
            run_capture(&["dual", "dihedral:3"], "").1,
            "1 3 2\n3 2 1\n2 1 3\n"
        );
        let (_, canon, _) = run_capture(&["canon", "alexander:3:1,1"], "");
        let (_, again, _) = run_capture(&["canon", "-"], &canon);
        assert_eq!(canon, again);
        let (code, out, _) = run_capture(&["enumerate", "2", "--all", "--machine"], "");
        assert_eq!((code, out.as_str()), (0, "1,1,2,2\n"));
    }
}
