use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use arcstrip::arcset::ArcSet;
use arcstrip::classify::{classify_report, heart, is_cotorsion, t_structure, tau_basis_of_crossers, TSide};
use arcstrip::interval::ExtBound;
use arcstrip::ng::ng_torsion_check;
use arcstrip::oracle::{self, Window};
use arcstrip::presentation::{parse_document, Document};
use arcstrip::render::{render_svg, RenderSpec};
use arcstrip::{Arc, Error};

#[derive(Parser)]
#[command(name = "arcstrip", about = "Arc sets in the infinite strip: Ptolemy diagrams, cotorsion pairs, t-structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Subcommand)]
enum Command {
    /// Classification report for a presentation.
    Check { file: PathBuf },
    /// The arcs crossing no member.
    Nc { file: PathBuf },
    /// Whether (X, Y) is a cotorsion pair; Y defaults to nc(X).
    Cotorsion { x_file: PathBuf, y_file: Option<PathBuf> },
    /// The t-structure with parameters p, q (integers or +inf / -inf).
    Tstructure {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// A finite tau-basis of the members crossing an arc.
    Basis {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        arc: String,
    },
    /// Brute-force cross-checks.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Infinity-gon arc sets.
    Ng {
        #[command(subcommand)]
        command: NgCommand,
    },
    /// Draw the members meeting a window as SVG.
    Render {
        file: PathBuf,
        #[arg(long, num_args = 2, allow_hyphen_values = true)]
        window: Vec<i64>,
        #[arg(short = 'o')]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compare the symbolic operations with the oracles on a window.
    Sweep {
        #[arg(long, num_args = 2, allow_hyphen_values = true)]
        window: Vec<i64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum NgCommand {
    /// Torsion-pair test for the ng families of a file.
    Check {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        base: String,
    },
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<ArcSet, Error> {
    parse_document(&read(path)?).map(|p| p.set)
}

fn parse_ext(s: &str) -> Result<ExtBound, Error> {
    match s {
        "+inf" | "inf" => Ok(ExtBound::PosInf),
        "-inf" => Ok(ExtBound::NegInf),
        _ => s.parse().map(ExtBound::Finite).map_err(|_| Error::Parse(format!("bad parameter `{s}`"))),
    }
}

fn print(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
}

fn verdict(holds: bool) -> u8 {
    if holds {
        0
    } else {
        1
    }
}

fn sweep(lo: i64, hi: i64, seed: u64) -> Result<u8, Error> {
    let w = Window::new(lo, hi)?;
    println!("seed {seed}");
    let arcs = oracle::window_arcs(w);
    let mut crossing_mismatch = 0;
    for u in &arcs {
        for v in &arcs {
            if arcstrip::crosses(u, v) != oracle::geom_crossing_oracle(u, v)? {
                crossing_mismatch += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ptolemy_mismatch = 0;
    let mut nc_mismatch = 0;
    for _ in 0..50 {
        let t = oracle::random_subset(&mut rng, w, 8);
        let set = ArcSet::from_arcs(&t);
        if set.is_ptolemy() != oracle::brute_is_ptolemy(&t)? {
            ptolemy_mismatch += 1;
        }
        let nc = set.nc();
        nc_mismatch += arcs.iter().filter(|v| nc.member(v) != oracle::member_nc_oracle(&set, v)).count();
    }
    print(json!({
        "window": [lo, hi],
        "seed": seed,
        "pairs": arcs.len() * arcs.len(),
        "crossing_mismatches": crossing_mismatch,
        "ptolemy_mismatches": ptolemy_mismatch,
        "nc_mismatches": nc_mismatch,
    }));
    if crossing_mismatch + ptolemy_mismatch + nc_mismatch > 0 {
        return Err(Error::Inconsistent("symbolic and brute-force results differ".into()));
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Check { file } => {
            let t = load(&file)?;
            print(serde_json::to_value(classify_report(&t)?).expect("reports serialize"));
            Ok(0)
        }
        Command::Nc { file } => {
            let t = load(&file)?;
            print(serde_json::to_value(Document::from_set(&t.nc())).expect("documents serialize"));
            Ok(0)
        }
        Command::Cotorsion { x_file, y_file } => {
            let x = load(&x_file)?;
            let y = match y_file {
                Some(f) => load(&f)?,
                None => x.nc(),
            };
            let holds = is_cotorsion(&x, &y)?;
            print(json!({ "cotorsion": holds, "y": Document::from_set(&y) }));
            Ok(verdict(holds))
        }
        Command::Tstructure { p, q, side } => {
            let side = match side {
                SideArg::One => TSide::Left,
                SideArg::Two => TSide::Right,
            };
            let (x, y) = t_structure(parse_ext(&p)?, parse_ext(&q)?, side)?;
            let h = heart(&x, &y)?;
            let heart_arcs: Option<Vec<String>> = h.arcs().map(|a| a.iter().map(ToString::to_string).collect());
            print(json!({
                "x": Document::from_set(&x),
                "y": Document::from_set(&y),
                "heart": heart_arcs,
            }));
            Ok(0)
        }
        Command::Basis { file, arc } => {
            let t = load(&file)?;
            let w: Arc = arc.parse()?;
            match tau_basis_of_crossers(&t, &w) {
                Ok(b) => {
                    print(json!({ "arc": w.to_string(), "basis": b.iter().map(ToString::to_string).collect::<Vec<_>>() }));
                    Ok(0)
                }
                Err(Error::Precondition(msg)) => {
                    print(json!({ "arc": w.to_string(), "basis": null, "reason": msg }));
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Oracle { command: OracleCommand::Sweep { window, seed } } => sweep(window[0], window[1], seed),
        Command::Ng { command: NgCommand::Check { file, base } } => {
            let p = parse_document(&read(&file)?)?;
            let u: Arc = base.parse()?;
            let holds = ng_torsion_check(&p.ng, &u)?;
            print(json!({ "torsion_pair": holds }));
            Ok(verdict(holds))
        }
        Command::Render { file, window, out } => {
            let t = load(&file)?;
            let svg = render_svg(&t, &RenderSpec::new(window[0], window[1]));
            std::fs::write(&out, svg).map_err(|e| Error::Parse(format!("{}: {e}", out.display())))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
