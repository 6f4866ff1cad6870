//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

mod hygiene;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rankvar::verify::{run_suite, Suite, SuiteConfig, SuiteReport};
use rankvar::HopfFlavor;

const CONFIGS: [(u32, usize); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];
const HYGIENE_CASES: u32 = 1000;

struct Verdict {
    passed: bool,
    summary: String,
}

fn config(p: u32, r: usize) -> SuiteConfig {
    SuiteConfig { p, r, ..SuiteConfig::default() }
}

/// Runs one suite per configuration and folds the reports.
fn suites(suite: Suite, configs: impl IntoIterator<Item = SuiteConfig>) -> (bool, usize, Vec<String>) {
    let mut passed = true;
    let mut cases = 0;
    let mut problems = Vec::new();
    for cfg in configs {
        match run_suite(suite, &cfg) {
            Ok(SuiteReport { passed: ok, cases: n, failures, .. }) => {
                passed &= ok;
                cases += n;
                for f in failures.iter().take(2) {
                    problems.push(format!("p={} r={}: {}: {}", cfg.p, cfg.r, f.case, f.detail));
                }
            }
            Err(e) => {
                passed = false;
                problems.push(format!("p={} r={}: {e}", cfg.p, cfg.r));
            }
        }
    }
    (passed, cases, problems)
}

fn verdict(passed: bool, summary: String, problems: Vec<String>) -> Verdict {
    let summary = if problems.is_empty() { summary } else { format!("{summary}; {}", problems.join("; ")) };
    Verdict { passed, summary }
}

fn within(elapsed: Duration, budget_secs: u64) -> bool {
    elapsed <= Duration::from_secs(budget_secs)
}

fn dade_equivalence() -> Verdict {
    let start = Instant::now();
    let cfgs: Vec<_> = CONFIGS.iter().map(|&(p, r)| config(p, r)).collect();
    let modules: usize = cfgs.iter().map(|c| c.corpus_size).sum();
    let (ok, cases, problems) = suites(Suite::Dade, cfgs);
    let t = start.elapsed();
    let passed = ok && modules >= 200 && within(t, 60);
    verdict(passed, format!("{modules} corpus modules, {cases} checks, {:.1}s (budget 60s)", t.as_secs_f64()), problems)
}

fn pair_formula(suite: Suite, budget: Option<u64>) -> Verdict {
    let start = Instant::now();
    let cfgs: Vec<_> = CONFIGS.iter().map(|&(p, r)| config(p, r)).collect();
    let pairs: usize = cfgs.iter().map(|c| c.pair_count).sum();
    let (ok, cases, problems) = suites(suite, cfgs);
    let t = start.elapsed();
    let passed = ok && pairs >= 100 && budget.map_or(true, |b| within(t, b));
    let budget = budget.map(|b| format!(" (budget {b}s)")).unwrap_or_default();
    verdict(passed, format!("{pairs} pairs x 2 flavors, {cases} checks, {:.1}s{budget}", t.as_secs_f64()), problems)
}

fn hom_and_cosupport() -> Verdict {
    let hom = pair_formula(Suite::Hom, None);
    let start = Instant::now();
    let (ok, cases, problems) = suites(Suite::Cosupport, CONFIGS.iter().map(|&(p, r)| config(p, r)));
    let t = start.elapsed();
    verdict(
        hom.passed && ok,
        format!("hom: {}; cosupport over F_p and F_p^2: {cases} checks, {:.1}s", hom.summary, t.as_secs_f64()),
        problems,
    )
}

fn simple(suite: Suite, configs: Vec<SuiteConfig>, min_cases: usize, budget: Option<u64>) -> Verdict {
    let start = Instant::now();
    let (ok, cases, problems) = suites(suite, configs);
    let t = start.elapsed();
    let passed = ok && cases >= min_cases && budget.map_or(true, |b| within(t, b));
    let budget = budget.map(|b| format!(" (budget {b}s)")).unwrap_or_default();
    verdict(passed, format!("{cases} checks (need {min_cases}), {:.1}s{budget}", t.as_secs_f64()), problems)
}

fn hygiene_line() -> Verdict {
    let start = Instant::now();
    let checks: [(&str, fn(u32) -> hygiene::Outcome); 4] = [
        ("field axioms", hygiene::field_axioms),
        ("rank-nullity", hygiene::rank_nullity),
        ("d∘d = 0", hygiene::boundaries_square_to_zero),
        ("Buchberger criterion", hygiene::buchberger),
    ];
    let mut passed = true;
    let mut parts = Vec::new();
    let mut problems = Vec::new();
    for (name, check) in checks {
        match check(HYGIENE_CASES) {
            Ok(n) => {
                passed &= n >= HYGIENE_CASES as usize;
                parts.push(format!("{name} {n}"));
            }
            Err(e) => {
                passed = false;
                problems.push(format!("{name}: {e}"));
            }
        }
    }
    let t = start.elapsed();
    verdict(passed, format!("{}, {:.1}s", parts.join(", "), t.as_secs_f64()), problems)
}

fn main() -> ExitCode {
    let both_flavors = |p, r| {
        [HopfFlavor::GroupLike, HopfFlavor::Primitive].map(|flavor| SuiteConfig { flavor, ..config(p, r) })
    };
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("dade equivalence", Box::new(dade_equivalence)),
        ("tensor formula", Box::new(|| pair_formula(Suite::Tensor, Some(60)))),
        ("hom and cosupport", Box::new(hom_and_cosupport)),
        (
            "koszul support",
            Box::new(|| simple(Suite::Koszul, CONFIGS.iter().map(|&(p, r)| config(p, r)).collect(), 50, None)),
        ),
        (
            "carlson hypersurfaces",
            Box::new(|| simple(Suite::Carlson, CONFIGS.iter().flat_map(|&(p, r)| both_flavors(p, r)).collect(), 1, None)),
        ),
        (
            "pi-point equivalence",
            Box::new(|| simple(Suite::Equiv, CONFIGS.iter().map(|&(p, r)| config(p, r)).collect(), 1, None)),
        ),
        (
            "generic points",
            Box::new(|| simple(Suite::GenericPoints, vec![config(2, 2), config(3, 2)], 8, Some(120))),
        ),
        (
            "ext symmetry",
            Box::new(|| {
                let cfgs: Vec<_> = [(2, 2), (3, 2), (2, 3)].iter().map(|&(p, r)| config(p, r)).collect();
                let pairs: usize = cfgs.iter().map(|c| c.pair_count).sum();
                simple(Suite::ExtSymmetry, cfgs, pairs.max(50), None)
            }),
        ),
        ("residue model", Box::new(|| simple(Suite::ResidueModel, vec![config(2, 3)], 20, None))),
        ("numerical hygiene", Box::new(hygiene_line)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        if !v.passed {
            failed += 1;
        }
        println!("criterion {:>2} {:<22} {}  {}", i + 1, name, if v.passed { "PASS" } else { "FAIL" }, v.summary);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
