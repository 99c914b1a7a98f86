//! Command-line front end for `tutte-core`.
//!
//! [`run`] takes the full argument vector and returns the exit code and the
//! text destined for stdout and stderr, so the binary is a thin wrapper and
//! every command can be tested in-process.

pub mod document;
pub mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use tutte_core::tutte::{self, DerivativeVariant, Family};
use tutte_core::verify::{self, InstanceKind, Selection, VerificationReport};
use tutte_core::{GroundSet, Perspective, Polynomial, Subset};

pub use document::{parse, InputDocument, Kind, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mtutte", version, about = "Exact Tutte polynomials of matroids and matroid perspectives")]
struct Cli {
    /// Emit a JSON document {command, input, result}
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file (matroid, graph, perspective or major)
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tutte polynomial (3-variable for perspectives)
    Tutte(Input),
    /// Generating function of the (p, q) partial derivative
    Derive {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'p', default_value_t = 0)]
        p: usize,
        #[arg(short = 'q', default_value_t = 0)]
        q: usize,
        #[arg(long, default_value = "cr-nl")]
        variant: DerivativeVariant,
        /// Derivative of t(x, x, z) of order p instead
        #[arg(long, conflicts_with = "q")]
        diagonal: bool,
    },
    /// Per-subset summands of an expansion family and their total
    Expand {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        family: Family,
    },
    /// Dawson partition: witness, bottom and top of every interval
    Partition(Input),
    /// Five-variable activity expansion
    Fivevar(Input),
    /// Run the verification harness
    Verify {
        /// Input file; optional when --random is given
        file: Option<PathBuf>,
        /// `all` or a comma-separated list of check names
        #[arg(long, default_value = "all")]
        checks: String,
        /// First seed for --random
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also verify N seeded random instances
        #[arg(long, value_name = "N")]
        random: Option<u64>,
        /// Skip input validation so invalid inputs reach the checks
        #[arg(long)]
        unchecked: bool,
    },
    /// Table reproduction as CSV
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

struct Loaded {
    path: String,
    doc: InputDocument,
    p: Perspective,
}

fn load(path: &std::path::Path) -> Result<Loaded, Outcome> {
    load_with(path, true)
}

fn load_with(path: &std::path::Path, checked: bool) -> Result<Loaded, Outcome> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::error(EXIT_INPUT, format!("{shown}: {e}")))?;
    let doc = parse(&text).map_err(|e| Outcome::error(EXIT_INPUT, format!("{shown}: {e}")))?;
    let built = if checked {
        doc.perspective()
    } else {
        doc.perspective_unchecked()
    };
    let p = built
        .map_err(|e| Outcome::error(EXIT_INPUT, format!("{shown}: invalid {}: {e}", doc.kind())))?;
    Ok(Loaded { path: shown, doc, p })
}

fn input_json(l: &Loaded) -> Value {
    json!({
        "path": l.path,
        "kind": l.doc.kind().name(),
        "elements": l.doc.elements(),
    })
}

fn set_json(g: &GroundSet, s: Subset) -> Value {
    json!(s.iter().map(|i| g.label(i)).collect::<Vec<_>>())
}

/// Command output in both renderings.
struct Rendered {
    text: String,
    result: Value,
}

fn polynomial(p: &Polynomial) -> Rendered {
    Rendered {
        text: format!("{p}\n"),
        result: json!({ "polynomial": p.to_string() }),
    }
}

fn summand_listing(g: &GroundSet, summands: &[tutte_core::ExpansionSummand], total: &Polynomial) -> Rendered {
    let mut text = String::new();
    for s in summands {
        text.push_str(&format!("{}: {}\n", g.format(s.subset), s.monomial));
    }
    text.push_str(&format!("total: {total}\n"));
    let rows: Vec<Value> = summands
        .iter()
        .map(|s| json!({ "subset": set_json(g, s.subset), "summand": s.monomial.to_string() }))
        .collect();
    Rendered {
        text,
        result: json!({ "summands": rows, "total": total.to_string() }),
    }
}

fn report_json(r: &VerificationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "instance": c.instance, "passed": c.passed, "detail": c.detail }))
        .collect();
    json!({ "passed": r.passed(), "checks": checks })
}

fn finish(json_mode: bool, command: &str, input: Value, rendered: Rendered, code: i32) -> Outcome {
    let stdout = if json_mode {
        let doc = json!({ "command": command, "input": input, "result": rendered.result });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
    } else {
        rendered.text
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn simple(json_mode: bool, command: &str, input: &Input, f: impl FnOnce(&Loaded) -> Rendered) -> Outcome {
    match load(&input.file) {
        Ok(l) => {
            let rendered = f(&l);
            finish(json_mode, command, input_json(&l), rendered, EXIT_OK)
        }
        Err(o) => o,
    }
}

struct VerifyArgs {
    file: Option<PathBuf>,
    checks: String,
    seed: u64,
    random: Option<u64>,
    unchecked: bool,
}

fn verify_command(json_mode: bool, args: VerifyArgs) -> Outcome {
    let VerifyArgs {
        file,
        checks,
        seed,
        random,
        unchecked,
    } = args;
    let selection = match Selection::parse(&checks) {
        Ok(s) => s,
        Err(e) => return Outcome::error(EXIT_INPUT, e),
    };
    if file.is_none() && random.is_none() {
        return Outcome::error(EXIT_INPUT, "verify needs an input file or --random N");
    }
    let mut report = VerificationReport::default();
    let mut input = json!({});
    // random instances mirror the file: same size (capped) and kind
    let mut size = verify::RANDOM_CAP.min(8);
    let mut kind = InstanceKind::Perspective;
    if let Some(path) = &file {
        let l = match load_with(path, !unchecked) {
            Ok(l) => l,
            Err(o) => return o,
        };
        match verify::run_checks(&l.p, &l.path, &selection) {
            Ok(r) => report.merge(r),
            Err(e) => return Outcome::error(EXIT_INPUT, e),
        }
        size = l.p.len().clamp(1, verify::RANDOM_CAP);
        if l.doc.is_matroid() {
            kind = InstanceKind::Matroid;
        }
        input = input_json(&l);
        input["unchecked"] = json!(unchecked);
    }
    if let Some(n) = random {
        for s in seed..seed.saturating_add(n) {
            let p = match verify::random_instance(s, size, kind) {
                Ok(p) => p,
                Err(e) => return Outcome::error(EXIT_INPUT, e),
            };
            let name = format!("random {} seed={s} n={size}", kind.name());
            match verify::run_checks(&p, &name, &selection) {
                Ok(r) => report.merge(r),
                Err(e) => return Outcome::error(EXIT_INPUT, e),
            }
        }
        input["random"] = json!({ "seed": seed, "count": n, "size": size, "kind": kind.name() });
    }
    let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY };
    let rendered = Rendered {
        text: format!("{report}\n"),
        result: report_json(&report),
    };
    let mut out = finish(json_mode, "verify", input, rendered, code);
    if code != EXIT_OK {
        let failed = report.failures().count();
        out.stderr = format!("error: {failed} check(s) failed\n");
    }
    out
}

/// Run one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    let json_mode = cli.json;
    match cli.command {
        Command::Tutte(input) => simple(json_mode, "tutte", &input, |l| {
            polynomial(&tutte::tutte_corank_nullity(&l.p))
        }),
        Command::Derive {
            input,
            p,
            q,
            variant,
            diagonal,
        } => simple(json_mode, "derive", &input, |l| {
            let gf = if diagonal {
                tutte::diagonal_derivative_gf(&l.p, p)
            } else {
                tutte::derivative_gf(&l.p, p, q, variant)
            };
            let mut r = polynomial(&gf);
            r.result["p"] = json!(p);
            r.result["q"] = json!(if diagonal { None } else { Some(q) });
            r.result["variant"] = json!(if diagonal { "diagonal" } else { variant.name() });
            r
        }),
        Command::Expand { input, family } => simple(json_mode, "expand", &input, |l| {
            let (summands, total) = tutte::expansion_family(&l.p, family);
            let mut r = summand_listing(l.p.ground(), &summands, &total);
            r.result["family"] = json!(family.name());
            r.result["symbol"] = json!(family.lead_symbol().label);
            r
        }),
        Command::Partition(input) => simple(json_mode, "partition", &input, |l| {
            let g = l.p.ground();
            let mut intervals = l.p.dawson_intervals();
            intervals.sort_by_key(|i| i.witness);
            let mut text = String::new();
            let mut rows = Vec::new();
            for i in &intervals {
                text.push_str(&format!(
                    "{}: [{}, {}]\n",
                    g.format(i.witness),
                    g.format(i.bottom),
                    g.format(i.top)
                ));
                rows.push(json!({
                    "witness": set_json(g, i.witness),
                    "bottom": set_json(g, i.bottom),
                    "top": set_json(g, i.top),
                    "size": i.size(),
                }));
            }
            Rendered {
                text,
                result: json!({ "intervals": rows }),
            }
        }),
        Command::Fivevar(input) => simple(json_mode, "fivevar", &input, |l| {
            let summands = tutte::five_var_summands(&l.p);
            let total = tutte::five_var(&l.p);
            summand_listing(l.p.ground(), &summands, &total)
        }),
        Command::Verify {
            file,
            checks,
            seed,
            random,
            unchecked,
        } => verify_command(
            json_mode,
            VerifyArgs {
                file,
                checks,
                seed,
                random,
                unchecked,
            },
        ),
        Command::Table { input, which } => simple(json_mode, "table", &input, |l| {
            let t = table::table(&l.p, which).expect("range-checked by clap");
            Rendered {
                text: t.to_csv(),
                result: json!({ "which": which, "header": t.header, "rows": t.rows }),
            }
        }),
    }
}
