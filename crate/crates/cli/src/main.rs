use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use padyn::autos::format::MapDescription;
use padyn::autos::DEFAULT_MAX_DEGREE;
use padyn::autos::{
    check_iterate_locus, indeterminacy_locus, is_regular, is_special_henon, leading_map, AutoWord, Fiber,
};
use padyn::dynamics::{
    certify_rational_with, empirical_period_bound_with, enumerate_periodic_points_with,
    permutation_cycles_with, tower_violations, PeriodicPointRecord,
};
use padyn::padic::{FieldSpec, PadicElement};
use padyn::{sampling, Error};

#[derive(Parser, Debug)]
#[command(name = "padyn", version, about = "Periodic points of p-adic plane automorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Map description file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Ascending residue levels k, comma separated.
    #[arg(long, global = true, value_delimiter = ',', default_value = "1,2,3")]
    levels: Vec<u32>,
    /// Largest period or iterate considered.
    #[arg(long, global = true, default_value_t = 10)]
    nmax: u64,
    /// Working precision N, overriding the file.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Largest number of points enumerated at one level.
    #[arg(long, global = true, default_value_t = padyn::dynamics::DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for sampled property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
enum Command {
    /// Loci at infinity, regularity and speciality.
    Check,
    /// Cycle structure of the induced permutation at each level.
    Cycles,
    /// Certified periodic points of period at most --nmax.
    Periods,
    /// Empirical uniform period bound over --levels.
    Bound,
    /// Certify a period bound for a map with rational coefficients.
    Certify {
        /// Candidate primes, tried in order; defaults to the file's prime.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Seeded property checks.
    Selftest,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

/// Failure of a command: a library error or a result that maps to a
/// nonzero exit status.
enum Failure {
    Domain(Error),
    Io(String),
    Usage(String),
    NotStabilized(String),
    SelftestFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::NotStabilized => 4,
        Error::NoGoodPrime => 5,
        _ => 1,
    }
}

impl Cli {
    fn validate(&self) -> Result<(), Failure> {
        if self.levels.is_empty() || self.levels.windows(2).any(|w| w[0] >= w[1]) || self.levels[0] == 0 {
            return Err(Failure::Usage("--levels must be positive and strictly ascending".into()));
        }
        if self.budget == 0 {
            return Err(Failure::Usage("--budget must be positive".into()));
        }
        Ok(())
    }

    fn description(&self) -> Result<MapDescription, Failure> {
        let path = self.input.as_ref().ok_or_else(|| Failure::Usage("--input is required".into()))?;
        let text =
            std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        Ok(MapDescription::parse(&text)?)
    }

    fn word(&self, desc: &MapDescription) -> Result<AutoWord<PadicElement>, Failure> {
        Ok(desc.build(&desc.field_spec(self.precision)?)?)
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn locus_labels(w: &AutoWord<PadicElement>, fiber: Fiber) -> Value {
    match indeterminacy_locus(w, fiber) {
        Ok(z) => json!(z.labels()),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn cmd_check(cli: &Cli, w: &AutoWord<PadicElement>) -> Outcome {
    let mut report = serde_json::Map::new();
    report.insert("dimension".into(), json!(w.dimension()));
    if w.dimension() != 2 {
        report.insert("note".into(), json!("loci are computed for plane maps only"));
        return Ok(pretty(&report));
    }
    report.insert("degree".into(), json!(leading_map(w, DEFAULT_MAX_DEGREE)?.degree));
    let inv = w.inverse();
    for (key, fiber) in [("generic", Fiber::Generic), ("special", Fiber::Special)] {
        report.insert(
            format!("locus_{key}"),
            json!({ "map": locus_labels(w, fiber), "inverse": locus_labels(&inv, fiber) }),
        );
    }
    let regular = is_regular(w)?;
    report.insert("regular".into(), json!(regular));
    report.insert("special".into(), json!(is_special_henon(w)));
    let stable = if regular { json!(check_iterate_locus(w, cli.nmax as usize)?) } else { Value::Null };
    report.insert("iterate_locus_stable".into(), stable);
    report.insert("nmax".into(), json!(cli.nmax));
    Ok(pretty(&report))
}

fn cmd_cycles(cli: &Cli, w: &AutoWord<PadicElement>) -> Outcome {
    let structures = cli
        .levels
        .iter()
        .map(|&k| permutation_cycles_with(w, k, cli.budget))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match cli.format {
        Format::Json => pretty(&structures),
        Format::Csv if structures.len() == 1 => structures[0].to_csv(),
        Format::Csv => structures
            .iter()
            .map(|s| format!("# level {}\n{}", s.level, s.to_csv()))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn records_csv(records: &[PeriodicPointRecord], dim: usize) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = (0..dim)
        .map(|i| format!("x{i}"))
        .chain(["period", "certified", "nondegenerate", "residue_cycle_length"].map(String::from))
        .collect();
    out.write_record(&header).expect("in-memory writer");
    for r in records {
        let mut row: Vec<String> = r.point.iter().map(|c| c.to_string()).collect();
        row.extend([r.period.to_string(), r.certified.to_string(), r.nondegenerate.to_string()]);
        row.push(r.residue_cycle_length.to_string());
        out.write_record(&row).expect("in-memory writer");
    }
    String::from_utf8(out.into_inner().expect("in-memory writer")).expect("utf-8 fields")
}

fn cmd_periods(cli: &Cli, w: &AutoWord<PadicElement>) -> Outcome {
    let found = enumerate_periodic_points_with(w, cli.nmax, cli.budget)?;
    Ok(match cli.format {
        Format::Json => pretty(&found),
        Format::Csv => records_csv(&found.records, w.dimension()),
    })
}

fn cmd_bound(cli: &Cli, w: &AutoWord<PadicElement>) -> Outcome {
    let report = empirical_period_bound_with(w, &cli.levels, cli.budget)?;
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut out = String::from("level,certified_periods,max_lifted_period\n");
            for l in &report.per_level {
                let periods: Vec<String> = l.certified_periods.iter().map(u64::to_string).collect();
                out.push_str(&format!("{},{},{}\n", l.level, periods.join(" "), l.max_lifted_period));
            }
            out
        }
    };
    if report.stabilized {
        Ok(text)
    } else {
        Err(Failure::NotStabilized(text))
    }
}

fn cmd_certify(cli: &Cli, desc: &MapDescription, primes: &[u64]) -> Outcome {
    let primes = if primes.is_empty() { vec![desc.prime] } else { primes.to_vec() };
    let desc = MapDescription { precision: cli.precision.unwrap_or(desc.precision), ..desc.clone() };
    Ok(certify_rational_with(&desc, &primes, &cli.levels, cli.budget)?.to_json())
}

fn cmd_selftest(cli: &Cli, desc: Option<&MapDescription>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut lines = Vec::new();
    let mut ok = true;
    let mut record = |name: &str, pass: bool, detail: String| {
        ok &= pass;
        lines.push(format!("{} {name}: {detail}", if pass { "PASS" } else { "FAIL" }));
    };

    let spec = match desc {
        Some(d) => d.field_spec(cli.precision)?,
        None => FieldSpec::qp(3, cli.precision.unwrap_or(10))?,
    };
    let ring = padyn::padic::ResidueRing::working(&spec);
    let mut words: Vec<AutoWord<PadicElement>> =
        (0..10).map(|_| sampling::random_word(&ring, 3, 3, &mut rng)).collect();
    if let Some(d) = desc {
        words.insert(0, d.build(&spec)?);
    }
    let mut failures = 0;
    for w in &words {
        let (Ok(wr), Ok(ir)) = (w.specialize(&ring), w.inverse().specialize(&ring)) else { continue };
        for _ in 0..20 {
            let p: Vec<_> = sampling::random_point(&ring, w.dimension(), &mut rng)
                .iter()
                .map(|c| c.to_ring(&ring))
                .collect::<Result<_, _>>()?;
            if ir.apply(&wr.apply(&p)) != p {
                failures += 1;
            }
        }
    }
    record("inverse round trip", failures == 0, format!("{} words, {failures} failures", words.len()));

    let w = &words[0];
    let level = cli.levels[0];
    let cycles = permutation_cycles_with(w, level, cli.budget)?;
    let expected = (spec.residue_size() as u128).pow(level * w.dimension() as u32);
    record(
        "permutation totality",
        cycles.total_points() == expected,
        format!("level {level}: {} of {expected} points", cycles.total_points()),
    );
    let top = cli.levels.iter().copied().filter(|&k| k <= 3).max().unwrap_or(1).max(2);
    let violations = tower_violations(w, top, cli.budget)?;
    record("tower divisibility", violations == 0, format!("levels 1..{top}: {violations} violations"));

    let text = lines.join("\n") + "\n";
    if ok {
        Ok(text)
    } else {
        Err(Failure::SelftestFailed(text))
    }
}

fn run(cli: &Cli) -> Outcome {
    cli.validate()?;
    if matches!(cli.command, Command::Selftest) {
        let desc = match cli.input {
            Some(_) => Some(cli.description()?),
            None => None,
        };
        return cmd_selftest(cli, desc.as_ref());
    }
    let desc = cli.description()?;
    if let Command::Certify { primes } = &cli.command {
        return cmd_certify(cli, &desc, primes);
    }
    let w = cli.word(&desc)?;
    match cli.command {
        Command::Check => cmd_check(cli, &w),
        Command::Cycles => cmd_cycles(cli, &w),
        Command::Periods => cmd_periods(cli, &w),
        Command::Bound => cmd_bound(cli, &w),
        Command::Certify { .. } | Command::Selftest => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::NotStabilized(out)) => {
            print!("{out}");
            eprintln!("error: {}", Error::NotStabilized);
            ExitCode::from(4)
        }
        Err(Failure::SelftestFailed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
