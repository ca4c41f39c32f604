//! `postchar`: exact invariants of postulation characters from the
//! command line. Every subcommand emits a versioned report (`"schema": 1`)
//! as JSON, an aligned table, or TSV.
//!
//! Exit codes: 0 success, 1 failed self-check, 2 validation failure,
//! 3 resource/genericity/catalog failure, 64 usage error.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use output::{render, Format};
use postchar::biliaison;
use postchar::charcalc::{self, Ambient, Character};
use postchar::error::{Error, ErrorKind};
use postchar::geometry::{self, Catalog};
use postchar::pfaffian::{self, SkewMatrix};
use postchar::resolution::{self, BettiDataAg, BettiDataCodim2};
use postchar::selftest;

const USAGE_EXIT: u8 = 64;

#[derive(Parser)]
#[command(
    name = "postchar",
    version,
    about = "Exact calculus on postulation characters of ACM and arithmetically Gorenstein subschemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Seed for randomized constructions (flag wins over the environment).
    #[arg(long, global = true, env = "POSTCHAR_SEED")]
    seed: Option<u64>,

    /// Path to a surface catalog JSON file replacing the built-in one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
}

/// Character input: inline text (`-1,-1,-1,6,-1,-1,-1`) or a JSON file
/// (`{"gamma": [...]}`). Inline wins when both are given.
#[derive(Args)]
struct CharArg {
    /// Character values, comma- or space-separated, indexed from 0.
    #[arg(short = 'c', long = "character", allow_hyphen_values = true)]
    character: Option<String>,

    /// JSON file holding the character.
    #[arg(long = "char-file")]
    char_file: Option<PathBuf>,
}

impl CharArg {
    fn resolve(&self, ambient: Ambient) -> Result<Character, Error> {
        if let Some(text) = &self.character {
            return Character::parse(text, ambient);
        }
        if let Some(path) = &self.char_file {
            let text = std::fs::read_to_string(path).map_err(|e| Error::ParseCharacter {
                input: format!("{}: {e}", path.display()),
            })?;
            let c: Character =
                serde_json::from_str(&text).map_err(|e| Error::ParseCharacter {
                    input: format!("{}: {e}", path.display()),
                })?;
            return Ok(c.retag(ambient));
        }
        Err(Error::ParseCharacter {
            input: "no character given (use -c or --char-file)".into(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check admissibility, positivity, connectedness, and (optionally)
    /// the arithmetically Gorenstein conditions.
    Validate {
        #[command(flatten)]
        character: CharArg,
        /// Also require symmetry and a positive admissible first half.
        #[arg(long)]
        ag: bool,
        /// Ambient projective dimension (3 or 4).
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(3..=4))]
        ambient: u8,
    },
    /// Degree, genus and structural invariants of a curve character.
    Invariants {
        #[command(flatten)]
        character: CharArg,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(3..=4))]
        ambient: u8,
    },
    /// Threshold flags for realizing the curve as mH - K on a surface.
    Classify {
        #[command(flatten)]
        character: CharArg,
    },
    /// One biliaison descent step (plane curves step inside their plane).
    Descend {
        #[command(flatten)]
        character: CharArg,
    },
    /// Full descent chain down to the line.
    Chain {
        #[command(flatten)]
        character: CharArg,
    },
    /// Invert a descent step for a chosen target s.
    Ascend {
        #[command(flatten)]
        character: CharArg,
        /// Least generator degree of the ascended character.
        #[arg(long)]
        s_target: usize,
    },
    /// Enumerate characters in canonical order.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Catalog surfaces and mH - K computations on them.
    #[command(subcommand)]
    Surfaces(SurfacesCmd),
    /// Resolution degree data validated against characters.
    #[command(subcommand)]
    Betti(BettiCmd),
    /// Skew matrices of forms and their Pfaffian ideals.
    #[command(subcommand)]
    Pfaffian(PfaffianCmd),
    /// Run the complete golden check suite.
    Selftest,
}

#[derive(Subcommand)]
enum EnumerateCmd {
    /// All AG curve characters in P^4 with q up to the bound.
    Ag {
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// All positive admissible P^3 characters with degree up to the bound.
    AcmP3 {
        #[arg(long, default_value_t = 10)]
        bound: i64,
        /// Keep only connected characters (integral curves).
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Subcommand)]
enum SurfacesCmd {
    /// List the catalog.
    List,
    /// Curve data for |mH - K| on a catalog surface.
    Mhk {
        #[arg(long)]
        surface: String,
        #[arg(short, long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Surface (degree, genus) pairs that could carry the curve as mH - K.
    Candidates {
        #[command(flatten)]
        character: CharArg,
        #[arg(long, default_value_t = 30)]
        bound: i64,
    },
    /// Dimension count of the mH - K family against the Hilbert scheme
    /// lower bound.
    Dimcount {
        #[command(flatten)]
        character: CharArg,
        #[arg(long)]
        surface: String,
    },
    /// Complete-intersection linkage arithmetic.
    Linkage {
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        #[arg(long)]
        surface: Option<String>,
    },
}

#[derive(Subcommand)]
enum BettiCmd {
    /// Check AG resolution degree data against a curve character.
    Validate {
        #[command(flatten)]
        character: CharArg,
        /// Inline JSON like {"c":7,"a":[3,3,3,3,3,3,3]} or a file path.
        #[arg(long)]
        betti: String,
    },
    /// All valid AG degree data for a character.
    Enumerate {
        #[command(flatten)]
        character: CharArg,
        #[arg(long, default_value_t = 15)]
        max_gens: usize,
    },
    /// Postulation table from resolution degree data.
    Phi {
        #[arg(long)]
        betti: String,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Check codimension-2 (Hilbert-Burch) degree data against a surface
    /// character.
    Codim2 {
        #[command(flatten)]
        character: CharArg,
        /// Generator degrees, comma-separated.
        #[arg(long)]
        gens: String,
        /// Syzygy degrees, comma-separated.
        #[arg(long)]
        rels: String,
    },
}

#[derive(Subcommand)]
enum PfaffianCmd {
    /// Draw a seeded random skew matrix for the degree data and verify
    /// its Pfaffian ideal against the predicted character.
    Random {
        #[arg(long)]
        betti: String,
        #[arg(long)]
        attempts: Option<u32>,
        /// Verification depth (largest degree checked).
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Verify a stored matrix against an expected character.
    Verify {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        character: CharArg,
        #[arg(long, default_value_t = 5)]
        bound: usize,
    },
    /// Graded dimensions of the Pfaffian ideal of a stored matrix.
    Hilbert {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 5)]
        bound: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as ClapKind;
            if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(USAGE_EXIT);
        }
    };

    let seed = cli.seed.unwrap_or(0);
    let catalog = match load_catalog(&cli.catalog) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };

    match run(cli.command, seed, &catalog) {
        Ok(Outcome { report, exit }) => {
            print!("{}", render(&report, cli.format));
            exit
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    let code = match e {
        Error::ParseCharacter { .. } | Error::InvalidBound { .. } => USAGE_EXIT,
        _ => match e.kind() {
            ErrorKind::Validation => 2,
            ErrorKind::Resource => 3,
        },
    };
    ExitCode::from(code)
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, Error> {
    match path {
        None => Ok(Catalog::builtin()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::CatalogFormat {
                detail: format!("{}: {e}", p.display()),
            })?;
            Catalog::from_json(&text)
        }
    }
}

struct Outcome {
    report: Value,
    exit: ExitCode,
}

fn ok(report: Value) -> Result<Outcome, Error> {
    Ok(Outcome {
        report,
        exit: ExitCode::SUCCESS,
    })
}

/// Wraps a payload into the versioned report envelope.
fn envelope(mut payload: Value) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("schema".into(), json!(1));
    if let Value::Object(map) = payload.take() {
        for (k, v) in map {
            obj.insert(k, v);
        }
    }
    Value::Object(obj)
}

fn to_value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn ambient_of(n: u8) -> Ambient {
    if n == 3 {
        Ambient::P3
    } else {
        Ambient::P4
    }
}

fn parse_betti(text: &str) -> Result<BettiDataAg, Error> {
    let body = if text.trim_start().starts_with('{') {
        text.to_string()
    } else {
        std::fs::read_to_string(text).map_err(|e| Error::BettiInvalid {
            detail: format!("{text}: {e}"),
        })?
    };
    let raw: BettiDataAg = serde_json::from_str(&body).map_err(|e| Error::BettiInvalid {
        detail: e.to_string(),
    })?;
    Ok(BettiDataAg::new(raw.c, raw.a))
}

fn parse_degrees(text: &str) -> Result<Vec<i64>, Error> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>().map_err(|_| Error::InvalidBound {
                detail: format!("bad degree list entry `{t}`"),
            })
        })
        .collect()
}

fn load_matrix(path: &PathBuf) -> Result<SkewMatrix, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::BettiInvalid {
        detail: format!("{}: {e}", path.display()),
    })?;
    let raw: SkewMatrix = serde_json::from_str(&text).map_err(|e| Error::BettiInvalid {
        detail: e.to_string(),
    })?;
    raw.revalidate()
}

fn find_surface<'a>(catalog: &'a Catalog, name: &str) -> Result<&'a geometry::SurfaceModel, Error> {
    catalog.surface(name).ok_or_else(|| Error::InvalidBound {
        detail: format!(
            "unknown surface `{name}` (available: {})",
            catalog
                .surfaces
                .iter()
                .map(|s| s.name.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    })
}

fn run(command: Command, seed: u64, catalog: &Catalog) -> Result<Outcome, Error> {
    match command {
        Command::Validate {
            character,
            ag,
            ambient,
        } => {
            let gamma = character.resolve(ambient_of(ambient))?;
            let admissible = gamma.validate_admissible()?;
            let mut payload = json!({
                "gamma": to_value(&gamma),
                "admissible": {"ok": true, "s": admissible.s},
                "positive": gamma.is_positive(),
                "connected": gamma.is_connected(),
            });
            if ag {
                let report = charcalc::validate_ag(&gamma)?;
                payload["ag"] = to_value(&report);
            }
            ok(envelope(payload))
        }
        Command::Invariants { character, ambient } => {
            let gamma = character.resolve(ambient_of(ambient))?;
            if ambient == 3 {
                let (degree, genus) = charcalc::degree_genus_p3(&gamma)?;
                ok(envelope(json!({
                    "gamma": to_value(&gamma),
                    "degree": degree,
                    "genus": genus,
                })))
            } else {
                let inv = charcalc::curve_invariants(&gamma)?;
                ok(envelope(to_value(&inv)))
            }
        }
        Command::Classify { character } => {
            let gamma = character.resolve(Ambient::P4)?;
            let report = geometry::classify_mhk(&gamma)?;
            ok(envelope(to_value(report)))
        }
        Command::Descend { character } => {
            let gamma = character.resolve(Ambient::P4)?;
            let (_, step) = if biliaison::plane_curve_degree(&gamma).is_some() {
                biliaison::plane_descend(&gamma)?
            } else {
                biliaison::descend(&gamma)?
            };
            ok(envelope(json!({"step": to_value(&step)})))
        }
        Command::Chain { character } => {
            let gamma = character.resolve(Ambient::P4)?;
            let chain = biliaison::descent_chain(&gamma)?;
            ok(envelope(json!({
                "steps": to_value(&chain.steps),
                "terminal": to_value(&chain.terminal),
                "total_drop": chain.total_drop(),
            })))
        }
        Command::Ascend {
            character,
            s_target,
        } => {
            let gamma = character.resolve(Ambient::P4)?;
            let up = biliaison::ascend(&gamma, s_target)?;
            ok(envelope(json!({
                "gamma": to_value(&gamma),
                "s_target": s_target,
                "ascended": to_value(&up),
            })))
        }
        Command::Enumerate(EnumerateCmd::Ag { bound }) => {
            let all = charcalc::enumerate_ag(bound);
            ok(envelope(json!({
                "q_max": bound,
                "count": all.len(),
                "characters": to_value(&all),
            })))
        }
        Command::Enumerate(EnumerateCmd::AcmP3 { bound, connected }) => {
            let all = charcalc::enumerate_acm_p3(bound, connected);
            let items: Vec<Value> = all
                .iter()
                .map(|(c, d, g)| json!({"gamma": to_value(c), "degree": d, "genus": g}))
                .collect();
            ok(envelope(json!({
                "d_max": bound,
                "connected_only": connected,
                "count": items.len(),
                "items": items,
            })))
        }
        Command::Surfaces(SurfacesCmd::List) => ok(envelope(json!({
            "surfaces": to_value(&catalog.surfaces),
        }))),
        Command::Surfaces(SurfacesCmd::Mhk { surface, m }) => {
            let surface = find_surface(catalog, &surface)?;
            let curve = geometry::mhk_curve(surface, m)?;
            ok(envelope(to_value(&curve)))
        }
        Command::Surfaces(SurfacesCmd::Candidates { character, bound }) => {
            let gamma = character.resolve(Ambient::P4)?;
            let found = geometry::mhk_surface_candidates(&gamma, bound)?;
            ok(envelope(json!({
                "gamma": to_value(&gamma),
                "d_max": bound,
                "candidates": to_value(&found),
            })))
        }
        Command::Surfaces(SurfacesCmd::Dimcount { character, surface }) => {
            let gamma = character.resolve(Ambient::P4)?;
            let surface = find_surface(catalog, &surface)?;
            let count = geometry::dimension_count(&gamma, surface, catalog)?;
            ok(envelope(to_value(&count)))
        }
        Command::Surfaces(SurfacesCmd::Linkage {
            alpha,
            beta,
            surface,
        }) => {
            let surface = surface
                .map(|name| find_surface(catalog, &name))
                .transpose()?;
            let link = geometry::ci_linkage(alpha, beta, surface)?;
            ok(envelope(to_value(&link)))
        }
        Command::Betti(BettiCmd::Validate { character, betti }) => {
            let gamma = character.resolve(Ambient::P4)?;
            let betti = parse_betti(&betti)?;
            let report = resolution::validate_betti_ag(&gamma, &betti)?;
            let valid = report.ok();
            let payload = json!({
                "gamma": to_value(&gamma),
                "betti": to_value(&betti),
                "valid": valid,
                "failures": report.failures,
            });
            Ok(Outcome {
                report: envelope(payload),
                exit: if valid { ExitCode::SUCCESS } else { ExitCode::from(2) },
            })
        }
        Command::Betti(BettiCmd::Enumerate {
            character,
            max_gens,
        }) => {
            let gamma = character.resolve(Ambient::P4)?;
            let found = resolution::enumerate_betti_ag(&gamma, max_gens)?;
            ok(envelope(json!({
                "gamma": to_value(&gamma),
                "max_gens": max_gens,
                "candidates": to_value(&found),
            })))
        }
        Command::Betti(BettiCmd::Phi { betti, bound }) => {
            let betti = parse_betti(&betti)?;
            let table = resolution::phi_from_betti_ag(&betti, bound)?;
            let gamma = resolution::gamma_from_betti_ag(&betti)?;
            ok(envelope(json!({
                "betti": to_value(&betti),
                "phi": table.phi,
                "hilbert_poly": to_value(table.hilbert_poly),
                "gamma": to_value(&gamma),
            })))
        }
        Command::Betti(BettiCmd::Codim2 {
            character,
            gens,
            rels,
        }) => {
            let gamma = character.resolve(Ambient::P3)?;
            let betti = BettiDataCodim2::new(parse_degrees(&gens)?, parse_degrees(&rels)?);
            let report = resolution::validate_betti_codim2(&gamma, &betti)?;
            let valid = report.ok();
            let payload = json!({
                "gamma": to_value(&gamma),
                "betti": to_value(&betti),
                "valid": valid,
                "failures": report.failures,
            });
            Ok(Outcome {
                report: envelope(payload),
                exit: if valid { ExitCode::SUCCESS } else { ExitCode::from(2) },
            })
        }
        Command::Pfaffian(PfaffianCmd::Random {
            betti,
            attempts,
            depth,
        }) => {
            let betti = parse_betti(&betti)?;
            let depth = depth.unwrap_or_else(|| ((betti.c - 1).max(0) as usize).min(5));
            let attempts = attempts.unwrap_or(pfaffian::DEFAULT_ATTEMPTS);
            let matrix = pfaffian::random_skew_with(&betti, seed, attempts, depth)?;
            let predicted = resolution::gamma_from_betti_ag(&betti)?;
            let report = pfaffian::verify_character(&matrix, &predicted, depth)?;
            let degrees: Vec<Value> = matrix
                .submaximal_pfaffians()?
                .iter()
                .map(|p| to_value(p.homogeneous_degree()))
                .collect();
            ok(envelope(json!({
                "seed": seed,
                "betti": to_value(&betti),
                "generator_degrees": degrees,
                "verify": to_value(&report),
                "matrix": to_value(&matrix),
            })))
        }
        Command::Pfaffian(PfaffianCmd::Verify {
            matrix,
            character,
            bound,
        }) => {
            let matrix = load_matrix(&matrix)?;
            let gamma = character.resolve(Ambient::P4)?;
            let report = pfaffian::verify_character(&matrix, &gamma, bound)?;
            let pass = report.pass;
            Ok(Outcome {
                report: envelope(json!({
                    "gamma": to_value(&gamma),
                    "verify": to_value(&report),
                })),
                exit: if pass { ExitCode::SUCCESS } else { ExitCode::from(2) },
            })
        }
        Command::Pfaffian(PfaffianCmd::Hilbert { matrix, bound }) => {
            let matrix = load_matrix(&matrix)?;
            let gens = matrix.submaximal_pfaffians()?;
            let hf = pfaffian::ideal_hilbert_function(&gens, bound)?;
            let phi: Vec<i64> = hf
                .iter()
                .enumerate()
                .map(|(n, &h)| ambient_dim_i64(n) - h as i64)
                .collect();
            ok(envelope(json!({
                "betti": to_value(&matrix.betti),
                "ideal_dims": hf,
                "phi": phi,
            })))
        }
        Command::Selftest => {
            let outcomes = selftest::run_all(catalog);
            let all_pass = outcomes.iter().all(|o| o.pass);
            let items: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "label": o.label,
                        "pass": o.pass,
                        "detail": o.detail,
                    })
                })
                .collect();
            Ok(Outcome {
                report: envelope(json!({
                    "pass": all_pass,
                    "items": items,
                })),
                exit: if all_pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            })
        }
    }
}

fn ambient_dim_i64(n: usize) -> i64 {
    let n = n as i64;
    (n + 1) * (n + 2) * (n + 3) * (n + 4) / 24
}
