mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use fishburn::bijections::{self, enumerate_dyck};
use fishburn::poset::{enumerate_posets, InducedPattern};
use fishburn::seqperm::{enumerate_ascent_sequences, enumerate_fishburn, parse_ints, transpose, WordPattern};
use fishburn::series::distribution_polynomial;
use fishburn::verify::{conjecture_report, run_suite, Catalog, Suite, VerifyReport};
use fishburn::{AscentSeq, DyckPath, Matching, Pattern, Poset};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "fishburn", version, about = "Enumerate, map and check Fishburn structures and their pattern-avoiding classes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Directory holding cached matching lists.
    #[arg(long, global = true, env = "FISHBURN_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or count the objects of one size.
    Enumerate {
        #[arg(long, value_enum)]
        structure: Structure,
        #[arg(long)]
        n: usize,
        /// Pattern to avoid: P1..P5, PIk:K or an arc list for matchings;
        /// 3+1 or N for posets; 101 or 0101 for ascent sequences; 3142 for
        /// permutations.
        #[arg(long)]
        avoid: Option<String>,
        /// Print only the number of objects (with --stats, their distributions).
        #[arg(long)]
        count: bool,
        /// Add statistic columns.
        #[arg(long)]
        stats: bool,
    },
    /// Apply a bijection or auxiliary map to one object.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long)]
        input: String,
        /// Chain length for phi and phi-inv.
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        /// A suite name or "all".
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: SuiteChoice,
        /// Largest size checked (defaults per suite).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Tabulate the three height-type polynomials and whether they agree.
    Conjecture {
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u8).range(0..=11))]
        max_n: u8,
    },
    /// Draw a matching, Dyck path or poset (JSON) as ASCII.
    Render {
        #[arg(long)]
        input: String,
        /// Input kind; guessed from the text when omitted.
        #[arg(long, value_enum)]
        structure: Option<RenderKind>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Structure {
    Matching,
    Poset,
    Ascent,
    FishburnPerm,
    Dyck,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Matching,
    Dyck,
    Poset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    Omega,
    Gamma,
    GammaInv,
    Theta,
    V,
    Phi,
    PhiInv,
    Psi,
    Upsilon,
    Lambda,
    Delta,
    Transpose,
}

#[derive(Clone)]
enum SuiteChoice {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    Suite::from_str(s).map(SuiteChoice::One).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite; expected all, {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Domain(fishburn::Error),
    Checks,
    Io(io::Error),
}

impl From<fishburn::Error> for Failure {
    fn from(e: fishburn::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { structure, n, ref avoid, count, stats } => {
            enumerate(&cli, structure, n, avoid.as_deref(), count, stats)
        }
        Command::Map { bijection, ref input, k } => map(cli.format, bijection, input, k),
        Command::Verify { ref suite, max_n } => verify(&cli, suite, max_n),
        Command::Conjecture { max_n } => conjecture(&cli, usize::from(max_n)),
        Command::Render { ref input, structure } => render(input, structure),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn catalog(cli: &Cli) -> Catalog {
    cli.cache_dir.as_ref().map_or_else(Catalog::new, Catalog::with_cache_dir)
}

/// One enumerated object: display text, machine form and statistics.
struct Row {
    text: String,
    value: Value,
    stats: Vec<(&'static str, usize)>,
}

fn usage<T: FromStr<Err = fishburn::Error>>(s: &str, what: &str) -> Result<T, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("invalid --avoid {s:?} for {what}")))
}

fn enumerate(cli: &Cli, structure: Structure, n: usize, avoid: Option<&str>, count: bool, stats: bool) -> Outcome {
    let rows: Vec<Row> = match structure {
        Structure::Matching => {
            let q: Option<Pattern> = avoid.map(|a| usage(a, "matchings")).transpose()?;
            catalog(cli)
                .matchings(n, q.as_ref())
                .iter()
                .map(|m| {
                    Ok(Row {
                        text: m.to_string(),
                        value: serde_json::from_str(&m.to_json()).expect("valid JSON"),
                        stats: vec![("cr", m.cr()), ("nr", m.nr()), ("mcr", m.mcr()?), ("fcr", m.fcr()), ("bl", m.bl())],
                    })
                })
                .collect::<Result<_, fishburn::Error>>()?
        }
        Structure::Poset => {
            let q: Option<InducedPattern> = avoid.map(|a| usage(a, "posets")).transpose()?;
            enumerate_posets(n, q)?
                .iter()
                .map(|p| {
                    let s = p.stats();
                    Row {
                        text: p.to_string(),
                        value: serde_json::from_str(&p.to_json()).expect("valid JSON"),
                        stats: vec![("mag", s.mag), ("min", s.min), ("h", s.h), ("w", s.w), ("smc", s.smc), ("ssd", s.ssd)],
                    }
                })
                .collect()
        }
        Structure::Ascent => {
            let q: Option<WordPattern> = avoid.map(|a| usage(a, "ascent sequences")).transpose()?;
            enumerate_ascent_sequences(n, q)
                .map(|a| {
                    let s = a.stats();
                    Row {
                        text: a.to_string(),
                        value: Value::String(a.to_string()),
                        stats: vec![("asc", a.asc()), ("zero", s.zero), ("lmax", s.lmax), ("rmin", s.rmin)],
                    }
                })
                .collect()
        }
        Structure::FishburnPerm => {
            let avoid3142 = match avoid {
                None => false,
                Some("3142") => true,
                Some(a) => return Err(Failure::Usage(format!("invalid --avoid {a:?} for permutations; only 3142"))),
            };
            enumerate_fishburn(n, avoid3142)?
                .map(|p| {
                    let s = p.stats();
                    Row {
                        text: p.to_string(),
                        value: Value::String(p.to_string()),
                        stats: vec![("lmax", s.lmax), ("rmin", s.rmin), ("idr", s.idr)],
                    }
                })
                .collect()
        }
        Structure::Dyck => {
            if let Some(a) = avoid {
                return Err(Failure::Usage(format!("--avoid {a:?} does not apply to Dyck paths")));
            }
            enumerate_dyck(n)
                .into_iter()
                .map(|d| Row { text: d.to_string(), value: Value::String(d.to_string()), stats: vec![("h", d.height())] })
                .collect()
        }
    };
    let structure_name = structure.to_possible_value().expect("named").get_name().to_string();
    let out = io::stdout();
    let mut out = out.lock();
    if count {
        return print_count(&mut out, cli.format, &structure_name, n, avoid, &rows, stats);
    }
    match cli.format {
        Format::Table => {
            let width = rows.iter().map(|r| r.text.chars().count()).max().unwrap_or(0);
            for r in &rows {
                if stats {
                    let cols: Vec<String> = r.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(out, "{:<width$}  {}", r.text, cols.join("  "))?;
                } else {
                    writeln!(out, "{}", r.text)?;
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["object"];
            if stats {
                header.extend(rows.first().map_or(vec![], |r| r.stats.iter().map(|s| s.0).collect()));
            }
            w.write_record(&header)?;
            for r in &rows {
                // posets have no text parser, so their CSV cell holds the JSON form
                let object = if structure == Structure::Poset { r.value.to_string() } else { r.text.clone() };
                let mut rec = vec![object];
                if stats {
                    rec.extend(r.stats.iter().map(|s| s.1.to_string()));
                }
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = Map::new();
                    obj.insert("object".into(), r.value.clone());
                    if stats {
                        for (k, v) in &r.stats {
                            obj.insert((*k).into(), json!(v));
                        }
                    }
                    Value::Object(obj)
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items).expect("serializable"))?;
        }
    }
    Ok(())
}

fn print_count(
    out: &mut impl Write,
    format: Format,
    structure: &str,
    n: usize,
    avoid: Option<&str>,
    rows: &[Row],
    stats: bool,
) -> Outcome {
    let dists: Vec<(&str, String)> = if stats {
        let names: Vec<&str> = rows.first().map_or(vec![], |r| r.stats.iter().map(|s| s.0).collect());
        names
            .iter()
            .enumerate()
            .map(|(i, &name)| {
                let d = distribution_polynomial(0, rows.iter().map(|r| (0, [r.stats[i].1 as u32, 0, 0])));
                (name, d.coeff(0).to_string())
            })
            .collect()
    } else {
        Vec::new()
    };
    match format {
        Format::Table => {
            writeln!(out, "{}", rows.len())?;
            for (name, d) in &dists {
                writeln!(out, "{name}: {d}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["structure", "n", "avoid", "count"])?;
            w.write_record([structure, &n.to_string(), avoid.unwrap_or(""), &rows.len().to_string()])?;
            w.flush()?;
        }
        Format::Json => {
            let mut obj = json!({ "structure": structure, "n": n, "avoid": avoid, "count": rows.len() });
            if stats {
                let d: Map<String, Value> = dists.into_iter().map(|(k, v)| (k.to_string(), Value::String(v))).collect();
                obj["distributions"] = Value::Object(d);
            }
            writeln!(out, "{obj}")?;
        }
    }
    Ok(())
}

fn read_matching(s: &str) -> fishburn::Result<Matching> {
    if s.trim_start().starts_with('{') {
        Matching::from_json(s)
    } else {
        s.parse()
    }
}

fn map(format: Format, bijection: Bijection, input: &str, k: usize) -> Outcome {
    let (text, value) = match bijection {
        Bijection::Omega => {
            let p = Poset::omega(&read_matching(input)?)?;
            (p.to_string(), serde_json::from_str(&p.to_json()).expect("valid JSON"))
        }
        Bijection::Gamma => matching_out(input.parse::<DyckPath>()?.gamma()),
        Bijection::GammaInv => plain(DyckPath::gamma_inverse(&read_matching(input)?)?),
        Bijection::Theta => matching_out(bijections::theta(&read_matching(input)?)?),
        Bijection::V => matching_out(bijections::v_map(&read_matching(input)?)?),
        Bijection::Phi => matching_out(bijections::phi(&read_matching(input)?, k)?),
        Bijection::PhiInv => matching_out(bijections::phi_inverse(&read_matching(input)?, k)?),
        Bijection::Psi => plain(bijections::psi_p2(&read_matching(input)?)?),
        Bijection::Upsilon => plain(bijections::upsilon_p2(&read_matching(input)?)?),
        Bijection::Lambda => plain(input.parse::<AscentSeq>()?.lambda()),
        Bijection::Delta => {
            let d = input.parse::<AscentSeq>()?.delta();
            plain(d.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        }
        Bijection::Transpose => plain(transpose(&parse_ints(input, "sequence")?)),
    };
    let name = bijection.to_possible_value().expect("named").get_name().to_string();
    let out = io::stdout();
    let mut out = out.lock();
    match format {
        Format::Table => writeln!(out, "{text}")?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["bijection", "input", "output"])?;
            w.write_record([name.as_str(), input, &text])?;
            w.flush()?;
        }
        Format::Json => writeln!(out, "{}", json!({ "bijection": name, "input": input, "output": value }))?,
    }
    Ok(())
}

fn plain(x: impl ToString) -> (String, Value) {
    let s = x.to_string();
    (s.clone(), Value::String(s))
}

fn matching_out(m: Matching) -> (String, Value) {
    (m.to_string(), serde_json::from_str(&m.to_json()).expect("valid JSON"))
}

fn verify(cli: &Cli, choice: &SuiteChoice, max_n: Option<usize>) -> Outcome {
    let suites: Vec<Suite> = match choice {
        SuiteChoice::All => Suite::ALL.to_vec(),
        SuiteChoice::One(s) => vec![*s],
    };
    let cache = cli.cache_dir.clone();
    // one worker per suite; each keeps its own enumeration catalog
    let reports: Vec<fishburn::Result<VerifyReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| {
                let cache = cache.clone();
                scope.spawn(move || {
                    let cat = cache.map_or_else(Catalog::new, Catalog::with_cache_dir);
                    run_suite(s, max_n.unwrap_or(s.default_max_n()), &cat)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    let reports = reports.into_iter().collect::<fishburn::Result<Vec<_>>>()?;
    let out = io::stdout();
    let mut out = out.lock();
    match cli.format {
        Format::Table => {
            for r in &reports {
                write!(out, "{r}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["suite", "check", "status", "n_min", "n_max", "detail", "wall_ms"])?;
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed { "pass" } else { "fail" };
                    w.write_record([
                        r.suite.as_str(),
                        &c.name,
                        status,
                        &c.n_range.0.to_string(),
                        &c.n_range.1.to_string(),
                        &c.detail,
                        &r.wall_ms.to_string(),
                    ])?;
                }
            }
            w.flush()?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("serializable"))?,
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn conjecture(cli: &Cli, max_n: usize) -> Outcome {
    let rows = conjecture_report(max_n, &catalog(cli))?;
    let out = io::stdout();
    let mut out = out.lock();
    match cli.format {
        Format::Table => {
            writeln!(out, "n  agree  nr over M_n(P1) | h over P_n(3+1) | h over D_n")?;
            for r in &rows {
                writeln!(out, "{:<2} {:<6} {} | {} | {}", r.n, r.agree, r.nr_p1, r.h_3plus1, r.h_dyck)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["n", "agree", "nr_p1", "h_3plus1", "h_dyck"])?;
            for r in &rows {
                w.write_record([&r.n.to_string(), &r.agree.to_string(), &r.nr_p1, &r.h_3plus1, &r.h_dyck])?;
            }
            w.flush()?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("serializable"))?,
    }
    Ok(())
}

fn render(input: &str, kind: Option<RenderKind>) -> Outcome {
    let t = input.trim();
    let kind = kind.unwrap_or_else(|| {
        if t.starts_with('{') {
            if t.contains("relations") {
                RenderKind::Poset
            } else {
                RenderKind::Matching
            }
        } else if !t.is_empty() && t.chars().all(|c| matches!(c, 'U' | 'D' | 'u' | 'd')) {
            RenderKind::Dyck
        } else {
            RenderKind::Matching
        }
    });
    let text = match kind {
        RenderKind::Matching => render::matching(&read_matching(t)?),
        RenderKind::Dyck => render::dyck(&t.parse()?),
        RenderKind::Poset => render::poset(&Poset::from_json(t)?),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}
