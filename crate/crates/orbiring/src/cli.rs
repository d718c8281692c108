//! Command-line front end. All verbs write deterministic output for fixed
//! flags (and seed), so goldens can be byte-compared.
//!
//! Exit codes: 0 success, 1 failed `check` property, 2 usage errors,
//! 3 domain errors (reported by name on the diagnostic stream).

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::comparator::{distinguish, rep_homotopy_equivalent};
use crate::error::Error;
use crate::inertial::{inertial_presentation, unit_product};
use crate::quotient::{
    conjectural_integral_algebra, cr_algebra, multivariable_presentation,
    multivariable_presentation_latex, FiniteGradedAlgebra,
};
use crate::suites::{run_suites, SweepConfig, SUITE_NAMES};
use crate::weights::{parse_weight_list, CircleWeightSystem, Mode};

pub const SEED_ENV_VAR: &str = "ORBIRING_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symplectic,
    Hyper,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Symplectic => Mode::Symplectic,
            ModeArg::Hyper => Mode::Hyper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

/// Newtype so clap treats a comma-separated weight list as one value.
#[derive(Debug, Clone)]
struct WeightList(Vec<i64>);

fn weights_arg(s: &str) -> Result<WeightList, String> {
    parse_weight_list(s).map(WeightList)
}

#[derive(Debug, Clone, Copy)]
struct SectorPair(u64, u64);

fn sector_pair_arg(s: &str) -> Result<SectorPair, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected g,h got `{s}`"));
    }
    let parse = |p: &str| p.trim().parse::<u64>().map_err(|_| format!("malformed sector `{p}`"));
    Ok(SectorPair(parse(parts[0])?, parse(parts[1])?))
}

#[derive(Debug, Args)]
struct SystemArgs {
    /// Comma-separated signed integer weights, e.g. 2,1,1
    #[arg(long, value_parser = weights_arg, allow_hyphen_values = true)]
    weights: WeightList,
    #[arg(long, value_enum, default_value = "symplectic")]
    mode: ModeArg,
    /// Sector-group order override (default: lcm of the nonzero weights)
    #[arg(long)]
    order: Option<u64>,
}

impl SystemArgs {
    fn build(&self) -> Result<CircleWeightSystem, Error> {
        match self.order {
            None => CircleWeightSystem::new(self.weights.0.clone(), self.mode.into()),
            Some(order) => {
                CircleWeightSystem::with_order(self.weights.0.clone(), self.mode.into(), order)
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "orbiring",
    about = "Exact inertial cohomology and Chen-Ruan cohomology of circle quotients",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sector subring of inertial cohomology: presentation or a single product
    Inertial {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Compute one sector-unit product, given as g,h
        #[arg(long, value_parser = sector_pair_arg)]
        product: Option<SectorPair>,
    },
    /// Chen-Ruan cohomology ring of the quotient
    Cr {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Conjectural integral model (tagged, excluded from verification)
        #[arg(long)]
        integral: bool,
    },
    /// Multivariable three-ideal presentation of the quotient ring
    Present {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Distinguish the quotient rings of two weight systems
    Compare {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long = "weights-b", value_parser = weights_arg, allow_hyphen_values = true)]
        weights_b: WeightList,
        #[arg(long = "mode-b", value_enum, default_value = "symplectic")]
        mode_b: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide representation homotopy of two diagonal circle representations
    RepHomotopy {
        #[arg(long, value_parser = weights_arg, allow_hyphen_values = true)]
        weights: WeightList,
        #[arg(long = "weights-b", value_parser = weights_arg, allow_hyphen_values = true)]
        weights_b: WeightList,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the randomized property suites
    Check {
        /// One of oracle, ring, combinatorics, homotopy, quotient, all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        /// RNG seed; falls back to the ORBIRING_SEED environment variable
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
        #[arg(long = "max-weight", default_value_t = 12)]
        max_weight: i64,
    },
}

/// Parse `argv` (including the program name) and run; output goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
pub fn run<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            3
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32, Failure> {
    match cli.command {
        Command::Inertial { system, format, product } => {
            let ws = system.build()?;
            match product {
                Some(SectorPair(g, h)) => {
                    let p = unit_product(&ws, g, h);
                    match format {
                        Format::Text => writeln!(out, "{p}").unwrap(),
                        Format::Json => writeln!(
                            out,
                            "{}",
                            serde_json::json!({
                                "target": p.target,
                                "coefficient": p.coefficient.to_string(),
                                "u_exponent": p.u_exponent,
                            })
                        )
                        .unwrap(),
                        Format::Latex => {
                            writeln!(out, "{}", crate::inertial::latex_monomial(&p)).unwrap()
                        }
                    }
                }
                None => {
                    let presentation = inertial_presentation(&ws)?;
                    match format {
                        Format::Text => write!(out, "{}", presentation.to_text()).unwrap(),
                        Format::Json => writeln!(out, "{}", presentation.to_json()).unwrap(),
                        Format::Latex => write!(out, "{}", presentation.to_latex()).unwrap(),
                    }
                }
            }
            Ok(0)
        }
        Command::Cr { system, format, integral } => {
            let ws = system.build()?;
            let algebra = if integral {
                conjectural_integral_algebra(&ws)?
            } else {
                cr_algebra(&ws)?
            };
            write_algebra(out, &algebra, format);
            Ok(0)
        }
        Command::Present { system, format } => {
            let ws = system.build()?;
            match format {
                Format::Text => write!(out, "{}", multivariable_presentation(&ws)?).unwrap(),
                Format::Latex => {
                    write!(out, "{}", multivariable_presentation_latex(&ws)?).unwrap()
                }
                Format::Json => {
                    // Structured form: the text lines of each ideal.
                    let text = multivariable_presentation(&ws)?;
                    let mut sections: Vec<Vec<&str>> = vec![Vec::new()];
                    for line in text.lines().skip(1) {
                        if line == "I:" || line == "J:" || line == "K:" {
                            sections.push(Vec::new());
                        } else {
                            sections.last_mut().unwrap().push(line);
                        }
                    }
                    writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "weights": ws.weights(),
                            "mode": ws.mode().to_string(),
                            "order": ws.order(),
                            "I": sections.get(1).cloned().unwrap_or_default(),
                            "J": sections.get(2).cloned().unwrap_or_default(),
                            "K": sections.get(3).cloned().unwrap_or_default(),
                        })
                    )
                    .unwrap();
                }
            }
            Ok(0)
        }
        Command::Compare { system, weights_b, mode_b, format } => {
            let a = cr_algebra(&system.build()?)?;
            let b = cr_algebra(&CircleWeightSystem::new(weights_b.0, mode_b.into())?)?;
            let result = distinguish(&a, &b);
            match format {
                Format::Json => writeln!(out, "{}", result.to_json()).unwrap(),
                _ => writeln!(out, "{}", result.to_text()).unwrap(),
            }
            Ok(0)
        }
        Command::RepHomotopy { weights, weights_b, format } => {
            let equivalent = rep_homotopy_equivalent(&weights.0, &weights_b.0);
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::json!({ "equivalent": equivalent })).unwrap()
                }
                _ => writeln!(out, "{equivalent}").unwrap(),
            }
            Ok(0)
        }
        Command::Check { suite, trials, seed, max_n, max_weight } => {
            let seed = match seed.or_else(|| {
                std::env::var(SEED_ENV_VAR).ok().and_then(|s| s.parse().ok())
            }) {
                Some(seed) => seed,
                None => {
                    return Err(Failure::Usage(format!(
                        "check requires --seed or the {SEED_ENV_VAR} environment variable"
                    )));
                }
            };
            if suite != "all" && !SUITE_NAMES.contains(&suite.as_str()) {
                return Err(Failure::Usage(format!(
                    "unknown suite `{suite}` (expected one of {} or all)",
                    SUITE_NAMES.join(", ")
                )));
            }
            let cfg = SweepConfig { trials, seed, max_n, max_weight };
            writeln!(
                out,
                "check suite={suite} trials={trials} seed={seed} max-n={max_n} max-weight={max_weight}"
            )
            .unwrap();
            match run_suites(&suite, &cfg) {
                Ok(outcomes) => {
                    for o in outcomes {
                        writeln!(out, "suite {}: ok ({} checks)", o.name, o.checks).unwrap();
                    }
                    writeln!(out, "all properties hold").unwrap();
                    Ok(0)
                }
                Err(counterexample) => {
                    writeln!(out, "FAIL {counterexample}").unwrap();
                    Ok(1)
                }
            }
        }
    }
}

fn write_algebra<W: Write>(out: &mut W, algebra: &FiniteGradedAlgebra, format: Format) {
    match format {
        Format::Text => write!(out, "{}", algebra.to_text()).unwrap(),
        Format::Json => writeln!(out, "{}", algebra.to_json_string()).unwrap(),
        Format::Latex => write!(out, "{}", algebra.to_latex()).unwrap(),
    }
}

/// Convenience wrapper for tests: run with string arguments (the program name
/// is supplied) and capture stdout/stderr.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["orbiring".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
