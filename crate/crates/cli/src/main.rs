use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pipedream_core::bijections::{
    huang_bump, huang_bump_traced, little_bump, little_bump_traced, ls_recording, phi, phi_inverse, phi_inverse_pd,
    pop_nabla,
};
use pipedream_core::bpd::{enumerate_bpd, gamma};
use pipedream_core::insertion::eg_pq;
use pipedream_core::pipedream::enumerate_pd;
use pipedream_core::schubert::{flagged_schur, schubert_bpd, schubert_pd};
use pipedream_core::tableau::{enumerate_flagged, jdt};
use pipedream_core::verify::{verify, Theorem};
use pipedream_core::{Flag, Partition, Permutation};

mod object;

use object::{parse_stream, Object};

#[derive(Parser)]
#[command(name = "pipedream", version, about = "Pipe dreams, bumpless pipe dreams and the maps between them")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pd,
    Bpd,
    Ssyt,
    Redwords,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Nabla,
    Pop,
    Phi,
    PhiInv,
    Little,
    Huang,
    Ls,
    Gamma,
    Jdt,
    Eg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pd,
    Bpd,
    Flagged,
}

/// JSON input: inline, from a file, or from stdin when neither is given.
#[derive(clap::Args)]
struct Input {
    /// One or more JSON objects.
    #[arg(long, conflicts_with = "input")]
    json: Option<String>,
    /// File of JSON objects; `-` for stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> anyhow::Result<String> {
        Ok(match (&self.json, &self.input) {
            (Some(s), _) => s.clone(),
            (None, Some(p)) if p.as_os_str() != "-" => fs::read_to_string(p)?,
            _ => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a kind, one record per line, in a fixed order.
    Enumerate {
        #[arg(long)]
        object: Kind,
        #[arg(long)]
        perm: Option<Permutation>,
        /// Partition for `ssyt`, e.g. `2,1`.
        #[arg(long, value_delimiter = ',')]
        shape: Option<Vec<usize>>,
        /// Row bounds for `ssyt`, e.g. `2,3`.
        #[arg(long, value_delimiter = ',')]
        flag: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply one operation to each input object.
    Map {
        #[arg(long)]
        op: Op,
        /// Transposition `i,j` for `little` and `huang`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        pair: Option<Vec<usize>>,
        /// Permutation for `gamma`; defaults to the input's own.
        #[arg(long)]
        perm: Option<Permutation>,
        /// Include the step-by-step trace of a bump.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        input: Input,
    },
    /// Check a theorem on every permutation of S_n and print a JSON report.
    ///
    /// Exits 1 when a counterexample is found. `n` is capped by
    /// PIPEDREAM_MAX_N (default 7).
    Verify {
        /// Theorem id, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
    },
    /// Draw objects as text or TikZ.
    Render {
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[command(flatten)]
        input: Input,
    },
    /// Print a Schubert polynomial.
    Schubert {
        #[arg(long)]
        perm: Permutation,
        #[arg(long, value_enum, default_value = "pd")]
        method: Method,
        /// `ascii` prints the polynomial as text.
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

/// Failures the CLI reports; each maps to an exit code.
enum Failure {
    Usage(String),
    Verification,
}

impl From<pipedream_core::Error> for Failure {
    fn from(e: pipedream_core::Error) -> Self {
        Failure::Usage(format!("error[{}]: {e}", e.code()))
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("error: {e:#}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("error: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(format!("error: {}", msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let written = match &cli.out {
        Some(path) => fs::write(path, &out),
        None => io::stdout().write_all(out.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Enumerate { object, perm, shape, flag, format } => enumerate(object, perm, shape, flag, format, out),
        Command::Map { op, pair, perm, trace, format, input } => {
            let pair = match pair.as_deref() {
                None => None,
                Some(&[i, j]) => Some((i, j)),
                Some(_) => return Err(usage("--pair takes exactly two values, as in 2,4")),
            };
            for obj in parse_stream(&input.read()?)? {
                let (result, steps) = apply(op, obj, pair, perm.as_ref(), trace)?;
                emit(&result, steps, format, out)?;
            }
            Ok(())
        }
        Command::Verify { theorem, n } => {
            let theorems = if theorem == "all" { Theorem::ALL.to_vec() } else { vec![theorem.parse::<Theorem>()?] };
            let mut pass = true;
            for t in theorems {
                let report = verify(t, n)?;
                pass &= report.pass;
                out.push_str(&serde_json::to_string(&report).map_err(anyhow::Error::from)?);
                out.push('\n');
            }
            if pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Render { format, input } => {
            for obj in parse_stream(&input.read()?)? {
                emit(&obj, None, format, out)?;
            }
            Ok(())
        }
        Command::Schubert { perm, method, format } => {
            let poly = match method {
                Method::Pd => schubert_pd(&perm),
                Method::Bpd => schubert_bpd(&perm),
                Method::Flagged => flagged_schur(&perm)?,
            };
            match format {
                Format::Ascii => out.push_str(&format!("{poly}\n")),
                _ => emit(&Object::Poly(poly), None, format, out)?,
            }
            Ok(())
        }
    }
}

fn enumerate(
    kind: Kind,
    perm: Option<Permutation>,
    shape: Option<Vec<usize>>,
    flag: Option<Vec<usize>>,
    format: Format,
    out: &mut String,
) -> Result<(), Failure> {
    let need_perm = || perm.clone().ok_or_else(|| usage("--perm is required for this object"));
    let mut objects: Vec<Object> = match kind {
        Kind::Pd => enumerate_pd(&need_perm()?).into_iter().map(Object::Pd).collect(),
        Kind::Bpd => enumerate_bpd(&need_perm()?).into_iter().map(Object::Bpd).collect(),
        Kind::Redwords => need_perm()?.reduced_words().into_iter().map(Object::Word).collect(),
        Kind::Ssyt => {
            let (shape, flag) = match (shape, flag, &perm) {
                (Some(s), Some(f), _) => (Partition::new(s)?, Flag::new(f)),
                (None, None, Some(w)) => (w.shape(), w.flag()?),
                _ => return Err(usage("ssyt needs --shape and --flag, or a vexillary --perm")),
            };
            enumerate_flagged(&shape, &flag)?.into_iter().map(Object::Tableau).collect()
        }
    };
    objects.sort_by_cached_key(|o| o.to_json().to_string());
    for obj in &objects {
        emit(obj, None, format, out)?;
    }
    Ok(())
}

fn need_pair(pair: Option<(usize, usize)>) -> Result<(usize, usize), Failure> {
    pair.ok_or_else(|| usage("--pair i,j is required for this operation"))
}

fn apply(
    op: Op,
    obj: Object,
    pair: Option<(usize, usize)>,
    perm: Option<&Permutation>,
    trace: bool,
) -> Result<(Object, Option<Value>), Failure> {
    let wrong = |what: &str| usage(format!("this operation takes {what}, got {}", obj.kind()));
    if trace && !matches!(op, Op::Little | Op::Huang) {
        return Err(usage("--trace applies to little and huang only"));
    }
    let to_value = |t: &pipedream_core::BumpTrace| serde_json::to_value(t).expect("traces serialize");
    let result = match (op, &obj) {
        (Op::Nabla, Object::Bpd(b)) => Object::Bpd(pop_nabla(b)?.next),
        (Op::Pop, Object::Bpd(b)) => Object::Pop(pop_nabla(b)?),
        (Op::Phi, Object::Bpd(b)) => Object::Biword(phi(b)?),
        (Op::PhiInv, Object::Biword(c)) => Object::Bpd(phi_inverse(c)?),
        (Op::PhiInv, Object::Pd(p)) => Object::Bpd(phi_inverse_pd(p)?),
        (Op::Little, Object::Biword(c)) => {
            let (i, j) = need_pair(pair)?;
            if trace {
                let (c, t) = little_bump_traced(c, i, j)?;
                return Ok((Object::Biword(c), Some(to_value(&t))));
            }
            Object::Biword(little_bump(c, i, j)?)
        }
        (Op::Huang, Object::Bpd(b)) => {
            let (i, j) = need_pair(pair)?;
            if trace {
                let (b, t) = huang_bump_traced(b, i, j)?;
                return Ok((Object::Bpd(b), Some(to_value(&t))));
            }
            Object::Bpd(huang_bump(b, i, j)?)
        }
        (Op::Ls, Object::Bpd(b)) => Object::Ls(ls_recording(b)?),
        (Op::Gamma, Object::Bpd(b)) => {
            let v = perm.cloned().unwrap_or_else(|| b.permutation());
            Object::Tableau(gamma(b, &v)?)
        }
        (Op::Jdt, Object::Tableau(t)) => Object::Tableau(jdt(t)?),
        (Op::Eg, Object::Biword(c)) => Object::Insertion(eg_pq(c)?),
        (Op::Eg, Object::Pd(p)) => Object::Insertion(eg_pq(&p.to_biword())?),
        (Op::Nabla | Op::Pop | Op::Phi | Op::Huang | Op::Ls | Op::Gamma, _) => {
            return Err(wrong("a bumpless pipe dream"))
        }
        (Op::PhiInv | Op::Eg, _) => return Err(wrong("a biword or pipe dream")),
        (Op::Little, _) => return Err(wrong("a biword")),
        (Op::Jdt, _) => return Err(wrong("a tableau")),
    };
    Ok((result, None))
}

fn emit(obj: &Object, trace: Option<Value>, format: Format, out: &mut String) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let value = match trace {
                Some(t) => json!({ "result": obj.to_json(), "trace": t }),
                None => obj.to_json(),
            };
            out.push_str(&value.to_string());
            out.push('\n');
        }
        Format::Ascii => {
            out.push_str(&obj.ascii());
            if let Some(t) = trace {
                out.push_str(&format!("{t}\n"));
            }
            out.push('\n');
        }
        Format::Tikz => {
            let picture = obj.tikz().ok_or_else(|| usage(format!("a {} has no TikZ form", obj.kind())))?;
            out.push_str(&picture);
            if trace.is_some() {
                return Err(usage("--trace needs json or ascii output"));
            }
        }
    }
    Ok(())
}
