use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fpf_core::fps::MuLabel;
use fpf_core::pipeline::{
    cmd_characters, cmd_decompose, cmd_enumerate, cmd_verify, render_characters, render_components,
    render_enumerate, Options, SCHEMA_VERSION,
};
use fpf_core::Error;

#[derive(Parser)]
#[command(name = "fpfdecomp", version, about = "Decompose k Ξ_{2n} over GF(2) and verify its classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Half the degree: the module is k Ξ_{2n}.
    #[arg(long)]
    n: usize,
    /// Also write the report as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Bits of 2-adic precision for lifted characters.
    #[arg(long, default_value_t = 16)]
    precision: u32,
    /// Cap on the number of elements of any enumerated group.
    #[arg(long, default_value_t = fpf_core::perm::DEFAULT_CLOSURE_CAP)]
    max_elements: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the labels μ with their fixed point sets and vertices.
    Enumerate(Common),
    /// Decompose k Ξ_{2n} and attach characters, labels and Brauer data.
    Decompose(Common),
    /// Print the characters φ_μ.
    Characters {
        #[command(flatten)]
        common: Common,
        /// A single label as the composition "4t,2s".
        #[arg(long)]
        mu: Option<String>,
    },
    /// Run every check for one n.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Only run the character and fixed-point-set checks.
        #[arg(long)]
        skip_decompose: bool,
    },
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: u32,
    n: usize,
    #[serde(flatten)]
    body: T,
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, n: usize, body: T) -> Result<(), String> {
    let Some(path) = path else { return Ok(()) };
    let text = serde_json::to_string_pretty(&Envelope {
        schema: SCHEMA_VERSION,
        n,
        body,
    })
    .map_err(|e| e.to_string())?;
    std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_mu(text: &str) -> Result<MuLabel, Error> {
    let cleaned = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = cleaned
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("label {text:?} should look like 4,2")))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number in {text:?}")));
    MuLabel::from_composition(num(a)?, num(b)?)
}

fn options(c: &Common, skip_decompose: bool) -> Options {
    Options {
        precision: c.precision,
        skip_decompose,
        max_elements: c.max_elements,
    }
}

#[derive(Serialize)]
struct Rows<T> {
    rows: T,
}

/// Failures carry their exit code: 1 for a failed verification, 2 for usage and limits.
fn run(cli: Cli) -> Result<bool, (u8, String)> {
    let err = |e: Error| match e {
        Error::Verification(_) | Error::NotIdempotent => (1, e.to_string()),
        _ => (2, e.to_string()),
    };
    let io = |m: String| (2, m);
    match cli.command {
        Command::Enumerate(c) => {
            let rows = cmd_enumerate(c.n).map_err(err)?;
            print!("{}", render_enumerate(c.n, &rows));
            write_json(&c.json, c.n, Rows { rows }).map_err(io)?;
            Ok(true)
        }
        Command::Decompose(c) => {
            let out = cmd_decompose(c.n, &options(&c, false)).map_err(err)?;
            print!("{}", render_components(c.n, &out.rows));
            for m in &out.mismatches {
                println!("MISMATCH {m}");
            }
            let ok = out.mismatches.is_empty();
            write_json(&c.json, c.n, Rows { rows: &out.rows }).map_err(io)?;
            Ok(ok)
        }
        Command::Characters { common: c, mu } => {
            let mu = mu.as_deref().map(parse_mu).transpose().map_err(err)?;
            let report = cmd_characters(c.n, mu.as_ref()).map_err(err)?;
            print!("{}", render_characters(&report));
            let ok = report.sum_matches != Some(false);
            write_json(&c.json, c.n, &report).map_err(io)?;
            Ok(ok)
        }
        Command::Verify { common: c, skip_decompose } => {
            let report = cmd_verify(c.n, &options(&c, skip_decompose)).map_err(err)?;
            print!("{}", report.render());
            for (stage, secs) in &report.timings {
                eprintln!("{stage}: {secs:.2}s");
            }
            if let Some(path) = &c.json {
                std::fs::write(path, report.to_json() + "\n").map_err(|e| (2, format!("{}: {e}", path.display())))?;
            }
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
