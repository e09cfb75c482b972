use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use vaserstein::io::{self, envelope};
use vaserstein::polyring::parse_polynomial;
use vaserstein::quotient::RingExt;
use vaserstein::realize::{self, RealPoint};
use vaserstein::spheres::{self, AlphaMode, MapName};
use vaserstein::witt::{pfaffian, vaserstein_symbol, SkewMatrix};
use vaserstein::{suite, Error, Result};

#[derive(Parser)]
#[command(name = "vaserstein", version, about = "Unimodular rows, Vaserstein symbols and the Hopf map over presented Q-algebras")]
struct Cli {
    /// Emit versioned JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of a ring's relations.
    Gb { ring: PathBuf },
    /// Normal form of a polynomial in a ring.
    Nf { ring: PathBuf, poly: String },
    /// Certify a row, optionally then act on it by elementary moves.
    Certify {
        row: PathBuf,
        #[arg(long)]
        moves: Option<PathBuf>,
    },
    /// Vaserstein symbol of a row of length 3.
    Vsymbol { row: PathBuf },
    /// Pfaffian of an alternating matrix.
    Pfaffian { matrix: PathBuf },
    /// Apply one of f, g, H, h, alpha, alpha-symmetric.
    Map {
        #[arg(long)]
        name: String,
        /// A row file; a ring file for `h`.
        input: PathBuf,
        /// The unit used by `g`.
        #[arg(long, default_value = "-1")]
        alpha: String,
    },
    /// Run the symbolic identity battery.
    Verify,
    /// Numeric Hopf invariant of a map S^3 -> S^2.
    Hopf {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        v1: String,
        #[arg(long, allow_hyphen_values = true)]
        v2: String,
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
    /// Run the acceptance checks and print a TAP report.
    Suite,
}

/// Text and JSON renderings of one result, plus whether it counts as a pass.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, ok: true }
    }
}

fn join(v: &[impl ToString]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Gb { ring } => {
            let r = io::load_ring(ring)?;
            let gens: Vec<String> = r.gb().generators().iter().map(|g| g.to_text()).collect();
            Ok(Output::ok(gens.join("\n"), json!({ "basis": gens })))
        }
        Command::Nf { ring, poly } => {
            let r = io::load_ring(ring)?;
            let p = parse_polynomial(poly, r.vars())?;
            let nf = r.reduce(&p)?.to_text();
            Ok(Output::ok(nf.clone(), json!({ "normal_form": nf })))
        }
        Command::Certify { row, moves } => {
            let loaded = io::load_row(row)?;
            let mut certified = match loaded.certified() {
                Ok(r) => r,
                Err(Error::NotUnimodular) => {
                    return Ok(Output::ok(
                        "NOT-UNIMODULAR".into(),
                        json!({ "unimodular": false }),
                    ))
                }
                Err(e) => return Err(e),
            };
            if let Some(path) = moves {
                let text = std::fs::read_to_string(path)?;
                let word = io::parse_moves(&text, &loaded.ring, certified.len())?;
                certified = certified.apply_word(&word)?;
            }
            let mut j = io::row_to_json(&certified);
            j["unimodular"] = json!(true);
            Ok(Output::ok(
                format!(
                    "row: ({})\ncertificate: ({})",
                    join(certified.entries()),
                    join(certified.certificate())
                ),
                j,
            ))
        }
        Command::Vsymbol { row } => {
            let r = io::load_row(row)?.certified()?;
            let v = vaserstein_symbol(&r)?;
            Ok(Output::ok(
                format!("{}\nPf = {}", v.matrix, v.pfaffian),
                json!({
                    "matrix": io::matrix_to_json(v.matrix.matrix()),
                    "pfaffian": v.pfaffian.to_string(),
                }),
            ))
        }
        Command::Pfaffian { matrix } => {
            let m = SkewMatrix::new(io::load_matrix(matrix)?)?;
            let pf = pfaffian(&m).to_string();
            Ok(Output::ok(pf.clone(), json!({ "pfaffian": pf })))
        }
        Command::Map { name, input, alpha } => run_map(name.parse()?, input, alpha),
        Command::Verify => {
            let checks = spheres::identity_battery();
            let ok = checks.iter().all(|c| c.passed);
            let text = checks
                .iter()
                .map(|c| {
                    let s = if c.passed { "PASS" } else { "FAIL" };
                    format!("{s} {}: {}", c.name, c.detail)
                })
                .collect::<Vec<_>>()
                .join("\n");
            let j = checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect::<Vec<_>>();
            Ok(Output {
                text,
                json: json!({ "checks": j }),
                ok,
            })
        }
        Command::Hopf { map, v1, v2, grid } => {
            let m = io::load_map(map)?;
            let r = realize::hopf_invariant(&m, &RealPoint::parse(v1)?, &RealPoint::parse(v2)?, *grid)?;
            let j = json!({
                "linking": r.linking,
                "residual": r.residual,
                "integral": r.integral,
                "grid": r.grid,
            });
            Ok(Output::ok(
                format!("linking {} (L = {:.6}, residual {:.3e}, grid {})", r.linking, r.integral, r.residual, r.grid),
                j,
            ))
        }
        Command::Suite => {
            let reports = suite::run_all();
            let ok = reports.iter().all(|r| r.passed);
            Ok(Output {
                text: suite::tap(&reports).trim_end().to_string(),
                json: json!({ "criteria": reports }),
                ok,
            })
        }
    }
}

fn run_map(name: MapName, input: &Path, alpha: &str) -> Result<Output> {
    let row_output = |r: vaserstein::rows::UnimodularRow| {
        Output::ok(
            format!("image: ({})\ncertificate: ({})", join(r.entries()), join(r.certificate())),
            io::row_to_json(&r),
        )
    };
    let point_output = |p: Vec<vaserstein::quotient::RingElement>| {
        Output::ok(format!("image: ({})", join(&p)), json!({ "image": io::elements_to_json(&p) }))
    };
    match name {
        MapName::SmallH => Ok(row_output(spheres::map_h(&io::load_ring(input)?)?)),
        MapName::G => {
            let loaded = io::load_row(input)?;
            let a = loaded.ring.elem(alpha)?;
            Ok(point_output(spheres::map_g(&loaded.entries, &a)?))
        }
        MapName::F => Ok(point_output(spheres::map_f(&io::load_row(input)?.certified()?)?)),
        MapName::H => Ok(row_output(spheres::compose_h(&io::load_row(input)?.certified()?)?)),
        MapName::Alpha => Ok(row_output(spheres::map_alpha(
            &io::load_row(input)?.certified()?,
            AlphaMode::General,
        )?)),
        MapName::AlphaSymmetric => Ok(row_output(spheres::map_alpha(
            &io::load_row(input)?.certified()?,
            AlphaMode::Symmetric,
        )?)),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Gb { .. } => "gb",
        Command::Nf { .. } => "nf",
        Command::Certify { .. } => "certify",
        Command::Vsymbol { .. } => "vsymbol",
        Command::Pfaffian { .. } => "pfaffian",
        Command::Map { .. } => "map",
        Command::Verify => "verify",
        Command::Hopf { .. } => "hopf",
        Command::Suite => "suite",
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) => 3,
        e if e.is_input_error() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let mut j = envelope(name, out.json);
                j["ok"] = json!(out.ok);
                println!("{}", serde_json::to_string_pretty(&j).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let j = envelope(name, json!({ "ok": false, "error": e.to_string(), "exit": code }));
                println!("{}", serde_json::to_string_pretty(&j).expect("serializable"));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
