use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use wlgroups::constructors as cons;
use wlgroups::harness::{self, SuiteConfig};
use wlgroups::invariants as inv;
use wlgroups::pebble::{self, Chains, GameOptions, PebbleConfig};
use wlgroups::products;
use wlgroups::wl::{self, Version};
use wlgroups::{catalog, io, ColoredGroup, ElementSet, Error, Group, Result};

#[derive(Parser)]
#[command(name = "wlg", version, about = "Weisfeiler-Leman refinement on finite groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a group table from a named family.
    Make {
        /// cyclic N | dihedral N | quaternion | dicyclic N | symmetric M | alternating M |
        /// elementary P E | abelian N1,N2,.. | metacyclic M N R S | gl2 P | sl2 P |
        /// heisenberg P | catalog NAME | product NAME NAME
        family: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stable k-WL coloring of one group.
    Refine {
        #[command(flatten)]
        wl: WlArgs,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Joint refinement of two groups. Exit 0 when equivalent, 3 when distinguished.
    Compare {
        #[command(flatten)]
        wl: WlArgs,
        a: PathBuf,
        b: PathBuf,
    },
    /// Solve the bijective pebble game.
    Game {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        pebbles: usize,
        #[arg(long, default_value = "II")]
        version: Version,
        /// Starting configuration `g1,h1;g2,h2`.
        #[arg(long)]
        config: Option<String>,
        /// JSON `{"g": [[..], ..], "h": [[..], ..]}` of subgroup chains.
        #[arg(long)]
        chain: Option<PathBuf>,
    },
    /// Invariant profile as JSON.
    Invariants {
        file: PathBuf,
        #[arg(long, conflicts_with = "select")]
        all: bool,
        /// Comma list of center, derived, solvable, fitting, abelian, radical:pi=P,Q,..,
        /// socle, minimal_normal, factors, series, splitting, special.
        #[arg(long)]
        select: Option<String>,
    },
    /// Direct product structure as JSON.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        components: bool,
        #[arg(long)]
        factors: bool,
        #[arg(long)]
        filtration: bool,
    },
    /// Detectability and pair suites. Exit 0 all pass, 2 any failure, 4 infrastructure error.
    Suite {
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the pair suite.
        #[arg(long)]
        no_pairs: bool,
    },
}

#[derive(Args)]
struct WlArgs {
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value = "II")]
    version: Version,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Make { family, params, out } => {
            let cg = ColoredGroup::uniform(make(&family, &params)?);
            match out {
                Some(p) => io::write_group(&cg, p)?,
                None => print!("{}", io::to_mt_string(&cg)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Refine { wl, group, out } => {
            let cg = io::parse_group(&group)?;
            let c = wl::stable_coloring(&cg, wl.k, wl.version)?;
            let v = json!({
                "k": c.k,
                "version": c.version.to_string(),
                "rounds": c.rounds,
                "classCount": c.class_count,
                "elementColors": c.element_colors(),
            });
            emit(&v, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Compare { wl, a, b } => {
            let (g, h) = (io::parse_group(&a)?, io::parse_group(&b)?);
            let v = wl::joint_compare(&g, &h, wl.k, wl.version)?;
            let out = json!({
                "k": wl.k,
                "version": wl.version.to_string(),
                "rounds": v.rounds,
                "classCount": v.class_count,
                "verdict": if v.equivalent { "equivalent" } else { "distinguished" },
                "firstDistinguishingRound": v.first_distinguishing_round,
            });
            emit(&out, None)?;
            Ok(if v.equivalent { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
        Cmd::Game { a, b, pebbles, version, config, chain } => {
            let (g, h) = (io::parse_group(&a)?, io::parse_group(&b)?);
            let opts = GameOptions::default();
            let sol = match chain {
                Some(p) => {
                    let (cg, ch) = read_chains(&p, g.order(), h.order())?;
                    let chains = Chains::new(&g, &h, &cg, &ch)?;
                    pebble::solve_game_with_chains(&g, &h, pebbles, version, &chains, &opts)?
                }
                None => pebble::solve_game(&g, &h, pebbles, version, &opts)?,
            };
            let start = match config {
                Some(s) => parse_config(&s, pebbles, g.order(), h.order())?,
                None => PebbleConfig::empty(pebbles),
            };
            let winner = sol.winner(&start);
            let out = json!({
                "winner": format!("{winner:?}"),
                "states": sol.states(),
                "spoilerStates": sol.spoiler_states(),
                "sweeps": sol.sweeps,
                "spoilerMove": sol.spoiler_move(&start),
            });
            emit(&out, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Invariants { file, all, select } => {
            let g = io::parse_group(&file)?.group;
            let keys: Vec<String> = match (all, select) {
                (_, Some(s)) => split_select(&s),
                _ => ["center", "derived", "solvable", "fitting", "abelian", "socle", "minimal_normal", "factors", "series", "splitting", "special"]
                    .map(String::from)
                    .to_vec(),
            };
            let mut profile = serde_json::Map::new();
            profile.insert("order".into(), json!(g.order()));
            profile.insert("label".into(), json!(inv::GroupLabel::of(&g).key()));
            for key in keys {
                let (name, value) = invariant(&g, &key)?;
                profile.insert(name, value);
            }
            emit(&Value::Object(profile), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decompose { file, components, factors, filtration } => {
            let g = io::parse_group(&file)?.group;
            let all = !(components || factors || filtration);
            let mut out = serde_json::Map::new();
            out.insert("order".into(), json!(g.order()));
            let dec = products::direct_factorization(&g)?;
            if all || factors {
                let tables: Vec<Value> = dec
                    .factors
                    .iter()
                    .map(|f| -> Result<Value> {
                        let sub = g.as_group(f)?;
                        Ok(json!({
                            "elements": f.to_vec(),
                            "label": inv::GroupLabel::of(&sub.group).key(),
                            "table": sub.group.rows(),
                        }))
                    })
                    .collect::<Result<_>>()?;
                out.insert("factors".into(), Value::Array(tables));
                out.insert("decomposition".into(), to_value(&dec)?);
            }
            if all || components {
                let v = match products::nonabelian_components(&g) {
                    Ok(c) => to_value(&c)?,
                    Err(Error::AbelianInput) => Value::Null,
                    Err(e) => return Err(e),
                };
                out.insert("components".into(), v);
            }
            if all || filtration {
                out.insert("filtration".into(), to_value(&products::build_filtration(&g, &dec)?)?);
            }
            emit(&Value::Object(out), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Suite { dir, config, out, no_pairs } => Ok(suite(dir, config, out, no_pairs)),
    }
}

fn suite(dir: Option<PathBuf>, config: Option<PathBuf>, out: Option<PathBuf>, no_pairs: bool) -> ExitCode {
    let result = (|| -> Result<harness::SuiteReport> {
        let mut cfg = match config {
            Some(p) => SuiteConfig::from_json_file(p)?,
            None => SuiteConfig::default(),
        };
        if dir.is_some() {
            cfg.catalog_dir = dir;
        }
        if out.is_some() {
            cfg.output = out;
        }
        let records = harness::run_detectability_suite(&cfg)?;
        let pairs = if no_pairs { Vec::new() } else { harness::run_pair_suite(&cfg)? };
        let rep = harness::report(&records, &pairs);
        match &cfg.output {
            Some(p) => rep.write(p)?,
            None => println!("{}", rep.to_json()),
        }
        Ok(rep)
    })();
    match result {
        Ok(rep) => {
            for (row, r) in &rep.rows {
                eprintln!("{row:<28} pass {:>5}  fail {:>3}", r.pass, r.fail);
            }
            if rep.all_pass {
                ExitCode::SUCCESS
            } else {
                for f in rep.failures.iter().chain(&rep.pair_failures) {
                    eprintln!("FAIL {f}");
                }
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}

fn emit(v: &Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Error::Invalid(e.to_string()))?;
    match out {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Invalid(e.to_string()))
}

fn num(params: &[String], i: usize) -> Result<usize> {
    let s = params.get(i).ok_or_else(|| Error::Invalid(format!("missing parameter {}", i + 1)))?;
    s.parse().map_err(|_| Error::Invalid(format!("not a number: {s:?}")))
}

fn named(params: &[String], i: usize) -> Result<Group> {
    let name = params.get(i).ok_or_else(|| Error::Invalid("missing catalog name".into()))?;
    catalog::by_name(name).ok_or_else(|| Error::Invalid(format!("no catalog group named {name:?}")))
}

fn make(family: &str, p: &[String]) -> Result<Group> {
    Ok(match family {
        "cyclic" => cons::cyclic(num(p, 0)?),
        "dihedral" => cons::dihedral(num(p, 0)?)?,
        "quaternion" => cons::quaternion8(),
        "dicyclic" => cons::dicyclic(num(p, 0)?)?,
        "symmetric" => cons::symmetric(num(p, 0)?)?,
        "alternating" => cons::alternating(num(p, 0)?)?,
        "elementary" => cons::elementary_abelian(num(p, 0)?, num(p, 1)? as u32)?,
        "abelian" => {
            let orders = p
                .iter()
                .flat_map(|s| s.split(','))
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().parse().map_err(|_| Error::Invalid(format!("not a number: {s:?}"))))
                .collect::<Result<Vec<usize>>>()?;
            cons::abelian(&orders)?
        }
        "metacyclic" => cons::metacyclic(num(p, 0)?, num(p, 1)?, num(p, 2)?, num(p, 3)?)?,
        "gl2" => cons::gl2(num(p, 0)?)?,
        "sl2" => cons::sl2(num(p, 0)?)?,
        "heisenberg" => cons::heisenberg(num(p, 0)?)?,
        "catalog" => named(p, 0)?,
        "product" => cons::direct_product(&named(p, 0)?, &named(p, 1)?).group,
        other => return Err(Error::Invalid(format!("unknown family {other:?}"))),
    })
}

/// Splits `a,b,radical:pi=2,3,c` keeping the prime list with its key.
fn split_select(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match out.last_mut() {
            Some(last) if last.contains("pi=") && part.chars().all(|c| c.is_ascii_digit()) => {
                last.push(',');
                last.push_str(part);
            }
            _ => out.push(part.to_string()),
        }
    }
    out
}

fn set(s: &ElementSet) -> Value {
    json!(s.to_vec())
}

fn invariant(g: &Group, key: &str) -> Result<(String, Value)> {
    if let Some(primes) = key.strip_prefix("radical:pi=") {
        let pi = primes
            .split(',')
            .map(|p| p.parse::<usize>().map_err(|_| Error::Invalid(format!("bad prime {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        return Ok((key.to_string(), set(&inv::pi_radical(g, &pi))));
    }
    let v = match key {
        "center" => set(&g.center()),
        "derived" => set(&g.derived_subgroup()),
        "solvable" => set(&inv::solvable_radical(g)),
        "fitting" => set(&inv::fitting(g)),
        "abelian" => to_value(&inv::abelian_radical(g)?)?,
        "socle" => to_value(&inv::socle(g)?)?,
        "minimal_normal" => set(&inv::minimal_normal_elements(g)?),
        "factors" => to_value(&inv::composition_factors(g)?.multiset())?,
        "series" => json!({
            "derived": to_value(&inv::derived_series(g)?)?,
            "lower_central": to_value(&inv::lower_central(g)?)?,
            "upper_central": to_value(&inv::upper_central(g)?)?,
            "nilpotency_class": inv::nilpotency_class(g)?,
        }),
        "splitting" => set(&products::splitting_elements(g)?),
        "special" => to_value(&inv::classify_special(g)?)?,
        other => return Err(Error::Invalid(format!("unknown invariant {other:?}"))),
    };
    Ok((key.to_string(), v))
}

/// `g1,h1;g2,h2` with elements as table indices.
fn parse_config(s: &str, pebbles: usize, n: usize, m: usize) -> Result<PebbleConfig> {
    let mut gs = Vec::new();
    let mut hs = Vec::new();
    for pair in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = pair.split_once(',').ok_or_else(|| Error::Invalid(format!("expected g,h in {pair:?}")))?;
        let a: usize = a.trim().parse().map_err(|_| Error::Invalid(format!("bad element {a:?}")))?;
        let b: usize = b.trim().parse().map_err(|_| Error::Invalid(format!("bad element {b:?}")))?;
        if a >= n || b >= m {
            return Err(Error::Invalid(format!("element out of range in {pair:?}")));
        }
        gs.push(a);
        hs.push(b);
    }
    if gs.len() > pebbles {
        return Err(Error::Invalid(format!("{} pairs but {pebbles} pebbles", gs.len())));
    }
    Ok(PebbleConfig::from_tuples(&gs, &hs, pebbles))
}

#[derive(serde::Deserialize)]
struct ChainFile {
    g: Vec<Vec<usize>>,
    h: Vec<Vec<usize>>,
}

fn read_chains(path: &Path, n: usize, m: usize) -> Result<(Vec<ElementSet>, Vec<ElementSet>)> {
    let text = std::fs::read_to_string(path)?;
    let c: ChainFile = serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: e.to_string() })?;
    let conv = |levels: Vec<Vec<usize>>, size: usize| -> Result<Vec<ElementSet>> {
        levels
            .into_iter()
            .map(|l| {
                if l.iter().any(|&x| x >= size) {
                    return Err(Error::Invalid("chain element out of range".into()));
                }
                Ok(ElementSet::from_elements(size, l))
            })
            .collect()
    };
    Ok((conv(c.g, n)?, conv(c.h, m)?))
}
