use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use derring::derivation::{der, der_r, inner_space, DerivationSpace};
use derring::group::{parse_group, FiniteGroup};
use derring::group_ring::GroupRing;
use derring::harness::{self, Caps, CheckId, Report, ScenarioConfig};
use derring::lie::{der_as_lie, inner_der_lie, FiniteLieRing};
use derring::ring::{parse_ring, FiniteRing};
use derring::solder::{check_solder_properties, enumerate_solders};
use derring::{Error, Result};

#[derive(Parser)]
#[command(name = "derring", version, about = "Derivations of finite rings and finite group rings")]
struct Cli {
    /// write the JSON output here
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// element enumeration cap
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure of a finite ring, e.g. `Zmod(6)`, `GF(2,2)`, `Mat(2, Zmod(3))`
    Ring { spec: String },
    /// Structure of a finite group, e.g. `S3`, `D4`, `C2xC4`
    Group { spec: String },
    /// Derivations of a ring, or of a group ring when `--group` is given
    Der {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        group: Option<String>,
        /// only derivations vanishing on the coefficient ring
        #[arg(long)]
        r_derivations: bool,
    },
    /// Series and verdicts of a Lie ring attached to a ring or group ring
    Lie {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value_t = LieObject::Ider)]
        object: LieObject,
    },
    /// Every solder of a small ring with its property report
    Solders {
        #[arg(long)]
        ring: String,
    },
    /// Run a scenario file
    Check { scenario: PathBuf },
    /// Run every check over the default family
    Scan {
        /// restrict to these check ids
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LieObject {
    /// the associated Lie ring `B^L`
    Assoc,
    /// all derivations
    Der,
    /// derivations vanishing on the coefficient ring
    DerR,
    /// inner derivations (`IDer_R R[G]` for a group ring)
    Ider,
}

enum Outcome {
    Info(Value, String),
    Report(Report),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Info(value, text)) => match emit(&cli, &value, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
        Ok(Outcome::Report(report)) => {
            let value = serde_json::to_value(&report).expect("report serializes");
            if let Err(e) = emit(&cli, &value, &report.to_text()) {
                return fail(e);
            }
            ExitCode::from(u8::from(report.has_failures()))
        }
        Err(e) => fail(e),
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn emit(cli: &Cli, value: &Value, text: &str) -> Result<()> {
    if let Some(path) = &cli.json {
        let body = serde_json::to_string_pretty(value).expect("value serializes");
        std::fs::write(path, body + "\n").map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    }
    if !cli.quiet {
        print!("{text}");
    }
    Ok(())
}

fn caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(c) = cli.cap {
        caps.enumeration = c;
    }
    caps
}

fn group_ring(ring: &str, group: &str, caps: &Caps) -> Result<GroupRing> {
    GroupRing::with_cap(&parse_ring(ring)?, &parse_group(group)?, caps.rank)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let caps = caps(cli);
    match &cli.command {
        Command::Ring { spec } => ring_info(&parse_ring(spec)?, caps.enumeration),
        Command::Group { spec } => Ok(group_info(&parse_group(spec)?)),
        Command::Der { ring, group, r_derivations } => {
            let (space, inner) = match group {
                Some(g) => {
                    let gr = group_ring(ring, g, &caps)?;
                    let space = if *r_derivations { der_r(&gr)? } else { der(&gr.carrier_arc())? };
                    (space, inner_space(&gr.carrier_arc()))
                }
                None if *r_derivations => {
                    return Err(Error::Config("--r-derivations needs --group".into()));
                }
                None => {
                    let r = Arc::new(parse_ring(ring)?);
                    (der(&r)?, inner_space(&r))
                }
            };
            Ok(der_info(&space, &inner, *r_derivations))
        }
        Command::Lie { ring, group, object } => {
            let lie = match (group, object) {
                (Some(g), LieObject::Ider) => inner_der_lie(&group_ring(ring, g, &caps)?)?.lie().clone(),
                (Some(g), LieObject::DerR) => der_as_lie(&der_r(&group_ring(ring, g, &caps)?)?)?.lie,
                (Some(g), LieObject::Der) => der_as_lie(&der(&group_ring(ring, g, &caps)?.carrier_arc())?)?.lie,
                (Some(g), LieObject::Assoc) => FiniteLieRing::from_associative(group_ring(ring, g, &caps)?.carrier()),
                (None, LieObject::DerR) => return Err(Error::Config("--object der-r needs --group".into())),
                (None, LieObject::Ider) => der_as_lie(&inner_space(&Arc::new(parse_ring(ring)?)))?.lie,
                (None, LieObject::Der) => der_as_lie(&der(&Arc::new(parse_ring(ring)?))?)?.lie,
                (None, LieObject::Assoc) => FiniteLieRing::from_associative(&parse_ring(ring)?),
            };
            Ok(lie_info(&lie))
        }
        Command::Solders { ring } => {
            let r = Arc::new(parse_ring(ring)?);
            let solders = enumerate_solders(&r, caps.solder)?;
            let mut entries = Vec::new();
            let mut text = format!("{}: {} solders\n", r.label(), solders.len());
            for h in &solders {
                let rep = check_solder_properties(h)?;
                text.push_str(&format!(
                    "  {:?}  central={} derivation={} violations={}\n",
                    h.values(),
                    rep.central,
                    rep.delta_is_derivation,
                    rep.violations.len()
                ));
                entries.push(json!({ "values": h.values(), "report": rep }));
            }
            Ok(Outcome::Info(json!({ "ring": r.label(), "count": solders.len(), "solders": entries }), text))
        }
        Command::Check { scenario } => {
            let text = std::fs::read_to_string(scenario)
                .map_err(|e| Error::Config(format!("{}: {e}", scenario.display())))?;
            let mut cfg = ScenarioConfig::from_json(&text)?;
            if cli.seed != 0 {
                cfg.seed = cli.seed;
            }
            if let Some(c) = cli.cap {
                cfg.caps.enumeration = c;
            }
            let report = harness::run_scenario(&cfg)?;
            if let (Some(out), None) = (&cfg.output, &cli.json) {
                std::fs::write(out, report.to_json() + "\n").map_err(|e| Error::Config(format!("{out}: {e}")))?;
            }
            Ok(Outcome::Report(report))
        }
        Command::Scan { checks, samples } => {
            let ids = if checks.is_empty() {
                harness::scan_checks()
            } else {
                checks.iter().map(|s| s.parse()).collect::<Result<Vec<CheckId>>>()?
            };
            Ok(Outcome::Report(harness::scan(cli.seed, &caps, *samples, &ids)?))
        }
    }
}

fn ring_info(r: &FiniteRing, cap: u64) -> Result<Outcome> {
    let arc = Arc::new(r.clone());
    let enumerated = |f: &dyn Fn() -> Result<Value>| f().unwrap_or(Value::Null);
    let value = json!({
        "ring": r.label(),
        "size": r.size(),
        "additive_orders": r.ambient().orders(),
        "characteristic": r.exponent(),
        "commutative": r.is_commutative(),
        "center_size": r.center().size(),
        "units": enumerated(&|| Ok(json!(r.units(cap)?.len()))),
        "idempotents": enumerated(&|| Ok(json!(r.idempotents(cap)?.len()))),
        "semiprime": enumerated(&|| Ok(json!(r.is_semiprime(cap)?))),
        "prime": enumerated(&|| Ok(json!(r.is_prime(cap)?))),
        "radical_size": enumerated(&|| Ok(json!(r.prime_radical(cap)?.radical.size()))),
        "der_size": enumerated(&|| Ok(json!(der(&arc)?.cardinality().to_string()))),
        "inner_der_size": inner_space(&arc).cardinality().to_string(),
    });
    Ok(Outcome::Info(value.clone(), table(&value)))
}

fn group_info(g: &FiniteGroup) -> Outcome {
    let value = json!({
        "group": g.label(),
        "order": g.order(),
        "exponent": g.exponent(),
        "primes": g.pi(),
        "abelian": g.is_abelian(),
        "center_order": g.center().order(),
        "derived_subgroup_order": g.derived_subgroup().order(),
        "conjugacy_classes": g.conjugacy_classes().len(),
        "nilpotency_class": g.nilpotency_class(),
        "derived_length": g.derived_length(),
        "upper_central_orders": g.upper_central_series().iter().map(|s| s.order()).collect::<Vec<_>>(),
    });
    Outcome::Info(value.clone(), table(&value))
}

fn der_info(space: &DerivationSpace, inner: &DerivationSpace, r_only: bool) -> Outcome {
    let inner_part = space.intersection(inner).map(|s| s.cardinality().to_string()).ok();
    let value = json!({
        "ring": space.ring().label(),
        "kind": if r_only { "R-derivations" } else { "derivations" },
        "size": space.cardinality().to_string(),
        "generators": space.generators().iter().map(|d| d.images().to_vec()).collect::<Vec<_>>(),
        "inner_size": inner_part,
        "closed_under_bracket": space.is_closed_under_bracket(),
    });
    let text = format!(
        "{} {}: {} (inner part {})\n",
        space.ring().label(),
        if r_only { "R-derivations" } else { "derivations" },
        space.cardinality(),
        inner_part.unwrap_or_else(|| "?".into())
    );
    Outcome::Info(value, text)
}

fn lie_info(l: &FiniteLieRing) -> Outcome {
    let sizes = |s: Vec<derring::Submodule>| s.iter().map(|m| m.cardinality().to_string()).collect::<Vec<_>>();
    let value = json!({
        "lie_ring": l.label(),
        "size": l.size(),
        "abelian": l.is_abelian(),
        "center_size": l.center().cardinality().to_string(),
        "lower_central_sizes": sizes(l.lower_central_series()),
        "derived_sizes": sizes(l.derived_series()),
        "nilpotent": l.is_nilpotent(),
        "nilpotency_class": l.nilpotency_class(),
        "solvable": l.is_solvable(),
        "derived_length": l.derived_length(),
    });
    Outcome::Info(value.clone(), table(&value))
}

fn table(v: &Value) -> String {
    let Value::Object(m) = v else { return format!("{v}\n") };
    let w = m.keys().map(String::len).max().unwrap_or(0);
    m.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}
