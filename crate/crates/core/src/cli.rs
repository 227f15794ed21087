//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a negative answer (not an MOP, not in general
//! position, a failed claim), 2 bad usage or unreadable input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::census::{self, CensusOptions};
use crate::edgelist;
use crate::families::{self, FamilyInstance, Seam};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::mop::{mop_stats, recognize};
use crate::solve::{Solver, SolverConfig, DEFAULT_SEED};
use crate::verify::{is_gp_characterized, is_gp_naive};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mopgp",
    version,
    about = "General position sets in maximal outerplanar graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Edge-list file, `-` for standard input
    file: PathBuf,
    /// Read `u v` lines with arbitrary vertex labels and no count line
    #[arg(long)]
    labeled: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact gp-number and a maximum general position set
    Gp {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Permit orders above the default search cap
        #[arg(long)]
        allow_large: bool,
    },
    /// Test whether a vertex set is in general position
    Verify {
        #[command(flatten)]
        input: Input,
        /// Vertex ids (or labels with --labeled), separated by spaces or commas
        #[arg(required = true, num_args = 1..)]
        ids: Vec<String>,
    },
    /// Decide whether the graph is maximal outerplanar
    Recognize {
        #[command(flatten)]
        input: Input,
    },
    /// Emit a family instance as an edge list
    Generate {
        /// fan, quasi_fan, double_fan, straight_linear_2tree, sunflower, gsf,
        /// complete, path or cycle
        family: String,
        /// Numeric parameters, in the family's order
        #[arg(num_args = 1..)]
        params: Vec<usize>,
        /// Base chords for gsf, e.g. `0-2,2-4`
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every MOP of order n as CSV
    Census {
        n: usize,
        /// Keep one record per isomorphism class
        #[arg(long)]
        dedupe: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check all structural claims over orders n_min..=n_max
    Check {
        n_min: usize,
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure that maps to an exit code, with its message.
struct Failure(i32, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

type Outcome = Result<i32, Failure>;

/// Runs the tool on `args` (program name first) with the given streams and
/// returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Gp {
            input,
            seed,
            allow_large,
        } => cmd_gp(&input, seed, allow_large, stdin, stdout),
        Command::Verify { input, ids } => cmd_verify(&input, &ids, stdin, stdout),
        Command::Recognize { input } => cmd_recognize(&input, stdin, stdout),
        Command::Generate {
            family,
            params,
            base,
            out,
        } => {
            let inst = build_family(&family, &params, base.as_deref())?;
            let text = edgelist::write(&inst.graph, &inst.header());
            emit(out.as_ref(), text.as_bytes(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Census {
            n,
            dedupe,
            jobs,
            seed,
            out,
        } => {
            let opts = CensusOptions { dedupe, jobs, seed };
            let records = census::run_census(n, &opts).map_err(usage)?;
            let mut buf = Vec::new();
            census::write_csv(&records, &mut buf).map_err(usage)?;
            emit(out.as_ref(), &buf, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Check {
            n_min,
            n_max,
            jobs,
            seed,
            out,
        } => {
            let opts = CensusOptions {
                dedupe: false,
                jobs,
                seed,
            };
            let reports = census::verify_paper_claims(n_min, n_max, &opts).map_err(usage)?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_string());
                text.push('\n');
            }
            emit(out.as_ref(), text.as_bytes(), stdout)?;
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}

fn emit(out: Option<&PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => stdout.write_all(bytes).map_err(usage),
    }
}

/// Graph plus display labels (ids as strings for the numeric format).
fn load(input: &Input, stdin: &mut dyn Read) -> Result<(Graph, Vec<String>), Failure> {
    let mut text = String::new();
    if input.file.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map_err(usage)?;
    } else {
        text = fs::read_to_string(&input.file)
            .map_err(|e| usage(format!("{}: {e}", input.file.display())))?;
    }
    if input.labeled {
        edgelist::parse_labeled(&text).map_err(usage)
    } else {
        let g = edgelist::parse(&text).map_err(usage)?;
        let labels = g.vertices().map(|v| v.to_string()).collect();
        Ok((g, labels))
    }
}

fn connected(g: &Graph) -> Result<DistanceMatrix, Failure> {
    let dm = DistanceMatrix::new(g).map_err(usage)?;
    if let Some(v) = (1..g.order()).find(|&v| dm.get(0, v).is_none()) {
        return Err(usage(format!(
            "graph is disconnected (no path from 0 to {v})"
        )));
    }
    Ok(dm)
}

fn names(labels: &[String], set: &[Vertex]) -> String {
    set.iter()
        .map(|&v| labels[v].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_gp(
    input: &Input,
    seed: u64,
    allow_large: bool,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Outcome {
    let (g, labels) = load(input, stdin)?;
    connected(&g)?;
    let solver = Solver::new(SolverConfig {
        seed,
        allow_over_cap: allow_large,
        ..SolverConfig::default()
    });
    let cert = recognize(&g).ok();
    let res = solver.solve(&g, cert.as_ref()).map_err(usage)?;
    writeln!(stdout, "gp={}", res.value).map_err(usage)?;
    writeln!(stdout, "witness={}", names(&labels, &res.witness)).map_err(usage)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    input: &Input,
    ids: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Outcome {
    let (g, labels) = load(input, stdin)?;
    let dm = connected(&g)?;
    let mut set = Vec::new();
    for tok in ids
        .iter()
        .flat_map(|s| s.split(','))
        .filter(|t| !t.is_empty())
    {
        let v = if input.labeled {
            labels.iter().position(|l| l == tok)
        } else {
            tok.parse().ok().filter(|&v: &usize| v < g.order())
        };
        set.push(v.ok_or_else(|| usage(format!("unknown vertex {tok:?}")))?);
    }
    let naive = is_gp_naive(&g, &dm, &set).map_err(usage)?;
    let structural = is_gp_characterized(&g, &dm, &set).map_err(usage)?;
    assert_eq!(
        naive.is_gp, structural.is_gp,
        "verifiers disagree on {set:?}; this is a bug"
    );
    if structural.is_gp {
        let blocks: Vec<String> = structural
            .clique_partition
            .unwrap_or_default()
            .iter()
            .map(|b| format!("{{{}}}", names(&labels, b)))
            .collect();
        writeln!(stdout, "yes").map_err(usage)?;
        writeln!(stdout, "blocks: {}", blocks.join(" ")).map_err(usage)?;
        Ok(EXIT_OK)
    } else {
        let (a, b, c) = naive.violation.expect("negative verdict has a triple");
        writeln!(stdout, "no").map_err(usage)?;
        writeln!(stdout, "triple: {}", names(&labels, &[a, b, c])).map_err(usage)?;
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_recognize(input: &Input, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome {
    let (g, _) = load(input, stdin)?;
    match recognize(&g) {
        Ok(cert) => {
            let s = mop_stats(&g, &cert);
            writeln!(stdout, "mop: yes").map_err(usage)?;
            writeln!(stdout, "{cert}").map_err(usage)?;
            writeln!(
                stdout,
                "internal_triangles={} two_vertices={} max_degree={} striped={}",
                s.internal_triangles, s.two_vertices, s.max_degree, s.striped
            )
            .map_err(usage)?;
            writeln!(stdout, "canonical_key={}", cert.canonical_key()).map_err(usage)?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(stdout, "mop: no").map_err(usage)?;
            writeln!(stdout, "reason: {e}").map_err(usage)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn parse_chords(text: &str) -> Result<Vec<(Vertex, Vertex)>, Failure> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair
                .trim()
                .split_once('-')
                .ok_or_else(|| usage(format!("chord {pair:?} is not of the form a-b")))?;
            let a = a
                .parse()
                .map_err(|_| usage(format!("bad chord {pair:?}")))?;
            let b = b
                .parse()
                .map_err(|_| usage(format!("bad chord {pair:?}")))?;
            Ok((a, b))
        })
        .collect()
}

fn build_family(
    name: &str,
    params: &[usize],
    base: Option<&str>,
) -> Result<FamilyInstance, Failure> {
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(usage(format!(
                "{name} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    if base.is_some() && name != "gsf" {
        return Err(usage("--base only applies to gsf"));
    }
    let inst = match name {
        "fan" => want(1).and_then(|_| families::fan(params[0]).map_err(usage)),
        "quasi_fan" => {
            want(2).and_then(|_| families::quasi_fan(params[0], params[1]).map_err(usage))
        }
        "double_fan" => want(4).and_then(|_| {
            let variant = u8::try_from(params[3]).map_err(|_| usage("variant must be 1 or 2"))?;
            let seam = Seam::from_variant(variant).map_err(usage)?;
            families::double_fan(params[0], params[1], params[2], seam).map_err(usage)
        }),
        "straight_linear_2tree" => {
            want(1).and_then(|_| families::straight_linear_2tree(params[0]).map_err(usage))
        }
        "sunflower" => want(1).and_then(|_| families::sunflower(params[0]).map_err(usage)),
        "gsf" => want(1).and_then(|_| {
            let chords = base.map(parse_chords).transpose()?;
            families::generalized_sunflower(params[0], chords.as_deref()).map_err(usage)
        }),
        "complete" => want(1).and_then(|_| families::complete(params[0]).map_err(usage)),
        "path" => want(1).and_then(|_| families::path(params[0]).map_err(usage)),
        "cycle" => want(1).and_then(|_| families::cycle(params[0]).map_err(usage)),
        other => Err(usage(format!("unknown family {other:?}"))),
    }?;
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mopgp").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gp_from_stdin() {
        let fan9 = edgelist::write(&families::fan(9).unwrap().graph, &[]);
        let (code, out, _) = run_str(&["gp", "-"], &fan9);
        assert_eq!(code, 0);
        assert_eq!(out, "gp=6\nwitness=1,2,4,5,7,8\n");
        let (code, out, _) = run_str(&["gp", "-"], "6\n0 1\n1 2\n2 3\n3 4\n4 5\n");
        assert_eq!((code, out.lines().next().unwrap()), (0, "gp=2"));
        let (code, _, err) = run_str(&["gp", "-"], "4\n0 1\n2 3\n");
        assert_eq!(code, 2);
        assert!(err.contains("disconnected"));
    }

    #[test]
    fn verify_answers() {
        // the path 1-2-3-4 with labels
        let p4 = "1 2\n2 3\n3 4\n";
        let (code, out, _) = run_str(&["verify", "--labeled", "-", "1,2,4"], p4);
        assert_eq!((code, out.as_str()), (1, "no\ntriple: 1,2,4\n"));
        let k5 = edgelist::write(&families::complete(5).unwrap().graph, &[]);
        let (code, out, _) = run_str(&["verify", "-", "0", "1", "2", "3", "4"], &k5);
        assert_eq!((code, out.as_str()), (0, "yes\nblocks: {0,1,2,3,4}\n"));
        let (code, _, _) = run_str(&["verify", "-", "0,9"], &k5);
        assert_eq!(code, 2);
    }

    #[test]
    fn generate_and_recognize() {
        let (code, text, _) = run_str(&["generate", "gsf", "8"], "");
        assert_eq!(code, 0);
        assert!(text.starts_with("# label: gsf\n"));
        assert_eq!(edgelist::parse(&text).unwrap().order(), 8);
        let (code, out, _) = run_str(&["recognize", "-"], &text);
        assert_eq!(code, 0);
        assert!(out.starts_with("mop: yes\n"));
        let (code, text, _) = run_str(&["generate", "sunflower", "4"], "");
        assert_eq!(code, 0);
        let (code, out, _) = run_str(&["recognize", "-"], &text);
        assert_eq!((code, out.lines().next().unwrap()), (1, "mop: no"));
        assert_eq!(run_str(&["generate", "fan", "2"], "").0, 2);
        assert_eq!(run_str(&["generate", "fan", "5", "6"], "").0, 2);
        assert_eq!(run_str(&["generate", "wheel", "5"], "").0, 2);
        assert_eq!(
            run_str(&["generate", "gsf", "8", "--base", "0-2,1-3"], "").0,
            2
        );
        assert_eq!(run_str(&["generate", "gsf", "8", "--base", "1-3"], "").0, 0);
    }

    #[test]
    fn census_and_usage_errors() {
        let (code, out, _) = run_str(&["census", "6", "--dedupe"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
        assert_eq!(run_str(&["census", "20"], "").0, 2);
        assert_eq!(run_str(&["census", "6", "--jobs", "0"], "").0, 2);
        assert_eq!(run_str(&["bogus"], "").0, 2);
        assert_eq!(run_str(&["--help"], "").0, 0);
    }
}
