use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rankvar::field::{FiniteField, Subfield};
use rankvar::gradedalg::{generic_point, Ideal};
use rankvar::homalg::{carlson_module, ext_dim_with, koszul_object, TrivialResolution};
use rankvar::module::{read_module, write_module, AnyModule, DescribeField};
use rankvar::pipoint::{chart_verdicts, cosupport_points, support_points, PiPoint, SupportReport};
use rankvar::verify::{run_suite, Suite, SuiteConfig};
use rankvar::{AlgebraSpec, CohClass, Field, GaloisField, HopfFlavor, LambdaModule, MonomialOrder, PolyRing, PrimeField, Resolution};

#[derive(Parser)]
#[command(name = "rankvar", version, about = "π-points, supports, Ext and generic points for modules over truncated polynomial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Override the Hopf flavor of the input (grouplike or primitive).
    #[arg(long, global = true)]
    flavor: Option<HopfFlavor>,
}

#[derive(Subcommand)]
enum Command {
    /// Jordan type of a module restricted along a π-point.
    Jordan {
        module: PathBuf,
        /// Polynomial in z1..zr, e.g. "z1 + z1*z2".
        pi_point: String,
        #[command(flatten)]
        common: Common,
    },
    /// Support points over a finite field, plus generic-chart verdicts.
    Support {
        module: PathBuf,
        /// Order of the enumeration field (defaults to the module's field).
        #[arg(long)]
        field: Option<u64>,
        /// Include chart verdicts (computed over rational functions).
        #[arg(long)]
        charts: bool,
        #[arg(long, default_value_t = 0)]
        twist: u32,
    },
    /// Cosupport points over a finite extension of a prime-field module.
    Cosupport {
        module: PathBuf,
        #[arg(long)]
        field: Option<u64>,
        #[arg(long, default_value_t = 0)]
        twist: u32,
    },
    /// The Carlson module of a class, written as a module file.
    Carlson {
        /// Polynomial in y1..yr.
        class: String,
        #[arg(long, default_value_t = 2)]
        field: u64,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The Koszul object M⫽(a_1..a_n), written as a module file.
    Koszul {
        module: PathBuf,
        #[arg(required = true)]
        classes: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// dim Ext^i(M, N) for i = 0..=bound, or a single degree.
    Ext {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 10)]
        ext_bound: usize,
    },
    /// Generic closed point of a graded prime given as an ideal file.
    GenericPoint {
        ideal: PathBuf,
        /// Prime or prime power of the base field.
        #[arg(long, default_value_t = 2)]
        field: u64,
        /// Number of variables (defaults to the largest yi in the file).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        twist: u32,
        #[arg(long, default_value_t = 10)]
        ext_bound: usize,
        /// Degrees of the enumeration fields over F_p, e.g. "1,2".
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        field: Vec<usize>,
        #[arg(long)]
        corpus_size: Option<usize>,
        #[arg(long)]
        pairs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

/// Exit 1: a checked property failed. Exit 2: bad input.
enum Outcome {
    Ok,
    PropertyFailure,
}

type CliResult = Result<Outcome, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::PropertyFailure) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path, flavor: Option<HopfFlavor>) -> Result<AnyModule, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let m = read_module(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(match (m, flavor) {
        (m, None) => m,
        (AnyModule::Prime(m), Some(f)) => AnyModule::Prime(m.with_flavor(f)),
        (AnyModule::Galois(m), Some(f)) => AnyModule::Galois(m.with_flavor(f)),
        (AnyModule::RatFunc(m), Some(f)) => AnyModule::RatFunc(m.with_flavor(f)),
    })
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

/// `q = p^d` as `(p, d)`.
fn prime_power(q: u64) -> Result<(u32, usize), String> {
    let bad = || format!("field order {q} is not a prime power");
    let p = (2..=q).find(|d| q % d == 0).ok_or_else(bad)?;
    let (mut n, mut d) = (q, 0);
    while n % p == 0 {
        n /= p;
        d += 1;
    }
    if n != 1 {
        return Err(bad());
    }
    Ok((p as u32, d))
}

fn galois(q: u64) -> Result<GaloisField, String> {
    let (p, d) = prime_power(q)?;
    GaloisField::new(p, d).map_err(|e| e.to_string())
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Jordan { module, pi_point, common } => {
            let line = match load(&module, common.flavor)? {
                AnyModule::Prime(m) => jordan(&m, &pi_point)?,
                AnyModule::Galois(m) => jordan(&m, &pi_point)?,
                AnyModule::RatFunc(m) => jordan(&m, &pi_point)?,
            };
            println!("{line}");
            Ok(Outcome::Ok)
        }
        Command::Support { module, field, charts, twist } => {
            let report = match load(&module, None)? {
                AnyModule::Prime(m) => {
                    let k = galois(field.unwrap_or(m.field().p() as u64))?;
                    support(&m, &k, charts, twist)?
                }
                AnyModule::Galois(m) => {
                    let k = galois(field.unwrap_or(m.field().order()))?;
                    support(&m, &k, charts, twist)?
                }
                AnyModule::RatFunc(_) => return Err("support needs a module over a finite field".into()),
            };
            print_json(&report);
            Ok(Outcome::Ok)
        }
        Command::Cosupport { module, field, twist } => {
            let AnyModule::Prime(m) = load(&module, None)? else {
                return Err("cosupport is computed for modules over a prime field".into());
            };
            let k = galois(field.unwrap_or(m.field().p() as u64))?;
            let points = cosupport_points(&m, &k, twist).map_err(|e| e.to_string())?;
            let support = support_points(&m, &k, twist).map_err(|e| e.to_string())?;
            print_json(&SupportReport::new(&k, twist, &support, Some(&points), Vec::new()));
            Ok(Outcome::Ok)
        }
        Command::Carlson { class, field, r, common } => {
            let flavor = common.flavor.unwrap_or(HopfFlavor::GroupLike);
            let (p, d) = prime_power(field)?;
            let out = if d == 1 {
                carlson(PrimeField::new(p).map_err(|e| e.to_string())?, r, flavor, &class)?
            } else {
                carlson(galois(field)?, r, flavor, &class)?
            };
            println!("{out}");
            Ok(Outcome::Ok)
        }
        Command::Koszul { module, classes, common } => {
            let out = match load(&module, common.flavor)? {
                AnyModule::Prime(m) => koszul(&m, &classes)?,
                AnyModule::Galois(m) => koszul(&m, &classes)?,
                AnyModule::RatFunc(m) => koszul(&m, &classes)?,
            };
            println!("{out}");
            Ok(Outcome::Ok)
        }
        Command::Ext { first, second, degree, ext_bound } => {
            let degrees: Vec<usize> = match degree {
                Some(i) => vec![i],
                None => (0..=ext_bound).collect(),
            };
            let dims = match (load(&first, None)?, load(&second, None)?) {
                (AnyModule::Prime(m), AnyModule::Prime(n)) => ext(&m, &n, &degrees)?,
                (AnyModule::Galois(m), AnyModule::Galois(n)) => ext(&m, &n, &degrees)?,
                (AnyModule::RatFunc(m), AnyModule::RatFunc(n)) => ext(&m, &n, &degrees)?,
                _ => return Err("both modules must be over the same field".into()),
            };
            print_json(&json!({ "schema": "v1", "degrees": degrees, "dims": dims }));
            Ok(Outcome::Ok)
        }
        Command::GenericPoint { ideal, field, vars } => {
            let text = fs::read_to_string(&ideal).map_err(|e| format!("{}: {e}", ideal.display()))?;
            let n = vars.unwrap_or_else(|| largest_variable(&text)).max(1);
            let (p, d) = prime_power(field)?;
            if d == 1 {
                generic(PrimeField::new(p).map_err(|e| e.to_string())?, n, &text)
            } else {
                generic(galois(field)?, n, &text)
            }
        }
        Command::Verify { suite, p, r, seed, twist, ext_bound, field, corpus_size, pairs, common } => {
            let suite: Suite = suite.parse().map_err(|e: rankvar::verify::VerifyError| e.to_string())?;
            let defaults = SuiteConfig::default();
            let cfg = SuiteConfig {
                p,
                r,
                flavor: common.flavor.unwrap_or(defaults.flavor),
                seed,
                corpus_size: corpus_size.unwrap_or(defaults.corpus_size),
                pair_count: pairs.unwrap_or(defaults.pair_count),
                max_dim: defaults.max_dim,
                field_degrees: field,
                ext_bound,
                twist,
            };
            let report = run_suite(suite, &cfg).map_err(|e| e.to_string())?;
            print_json(&report);
            eprintln!("{}: {} ({} cases)", suite, if report.passed { "PASS" } else { "FAIL" }, report.cases);
            Ok(if report.passed { Outcome::Ok } else { Outcome::PropertyFailure })
        }
    }
}

fn jordan<F: Field>(m: &LambdaModule<F>, alpha: &str) -> Result<String, String> {
    let alpha = PiPoint::parse(m.spec().clone(), alpha).map_err(|e| e.to_string())?;
    Ok(alpha.jordan_type(m).map_err(|e| e.to_string())?.to_string())
}

fn support<F>(m: &LambdaModule<F>, k: &GaloisField, charts: bool, twist: u32) -> Result<SupportReport, String>
where
    F: Subfield<GaloisField>,
{
    let points = support_points(m, k, twist).map_err(|e| e.to_string())?;
    let verdicts = if charts { chart_verdicts(m) } else { Vec::new() };
    Ok(SupportReport::new(k, twist, &points, None, verdicts))
}

fn carlson<F: DescribeField>(field: F, r: usize, flavor: HopfFlavor, class: &str) -> Result<String, String> {
    let spec = AlgebraSpec::new(field.clone(), r, flavor);
    let class = CohClass::parse(&field, r, class).map_err(|e| e.to_string())?;
    let tr = TrivialResolution::new(&spec);
    let l = carlson_module(&tr, &class).map_err(|e| e.to_string())?;
    Ok(write_module(&l))
}

fn koszul<F: DescribeField>(m: &LambdaModule<F>, classes: &[String]) -> Result<String, String> {
    let r = m.spec().r();
    let parsed = classes
        .iter()
        .map(|c| CohClass::parse(m.field(), r, c).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let tr = TrivialResolution::new(m.spec());
    let out = koszul_object(&tr, m, &parsed).map_err(|e| e.to_string())?;
    Ok(write_module(&out))
}

fn ext<F: Field>(m: &LambdaModule<F>, n: &LambdaModule<F>, degrees: &[usize]) -> Result<Vec<usize>, String> {
    let res = Resolution::new(m.clone());
    degrees
        .iter()
        .map(|&i| ext_dim_with(&res, n, i).map_err(|e| e.to_string()))
        .collect()
}

fn largest_variable(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'y' {
            let digits: String = text[i + 1..].chars().take_while(|c| c.is_ascii_digit()).collect();
            if let Ok(v) = digits.parse::<usize>() {
                best = best.max(v);
            }
            i += 1 + digits.len();
        } else {
            i += 1;
        }
    }
    best
}

fn generic<F: FiniteField>(field: F, n: usize, text: &str) -> CliResult {
    let ring = PolyRing::with_prefix(field, "y", n, MonomialOrder::GrevLex);
    let ideal = Ideal::parse(ring, text).map_err(|e| e.to_string())?;
    let gp = generic_point(&ideal).map_err(|e| e.to_string())?;
    let data = gp.data();
    print_json(&data);
    Ok(if data.verification.all() { Outcome::Ok } else { Outcome::PropertyFailure })
}
