//! Named property suites over deterministic corpora. Each suite checks one
//! identity on many instances and dumps the first counterexamples it finds.

pub mod corpus;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::field::{Field, FieldError, FiniteField, GaloisField, PrimeField, RatFunc};
use crate::gradedalg::{generic_point, Ideal};
use crate::homalg::{carlson_module, ext_dim_with, koszul_object, CohClass, Resolution, TrivialResolution};
use crate::module::{write_module, AlgebraSpec, HopfFlavor, LambdaModule};
use crate::pipoint::{
    chart_verdicts, cosupport_points, dade_test, projective_points, support_points, support_points_over, PiError,
    PiPoint,
};
use crate::poly::{Monomial, MonomialOrder, PolyRing};

use corpus::{corpus, linear_classes, pairs, pencil_corpus, Sample};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{suite}` does not support {reason}")]
    Unsupported { suite: Suite, reason: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Pi(#[from] PiError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Dade,
    Tensor,
    Hom,
    Koszul,
    Carlson,
    Equiv,
    ExtSymmetry,
    GenericPoints,
    ResidueModel,
    Cosupport,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Dade,
        Suite::Tensor,
        Suite::Hom,
        Suite::Koszul,
        Suite::Carlson,
        Suite::Equiv,
        Suite::ExtSymmetry,
        Suite::GenericPoints,
        Suite::ResidueModel,
        Suite::Cosupport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dade => "dade",
            Suite::Tensor => "tensor",
            Suite::Hom => "hom",
            Suite::Koszul => "koszul",
            Suite::Carlson => "carlson",
            Suite::Equiv => "equiv",
            Suite::ExtSymmetry => "ext-symmetry",
            Suite::GenericPoints => "generic-points",
            Suite::ResidueModel => "residue-model",
            Suite::Cosupport => "cosupport",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub p: u32,
    pub r: usize,
    pub flavor: HopfFlavor,
    pub seed: u64,
    /// Modules in the single-module corpus.
    pub corpus_size: usize,
    /// Pairs for the two-module suites.
    pub pair_count: usize,
    pub max_dim: usize,
    /// Enumeration fields, as degrees over `F_p`.
    pub field_degrees: Vec<usize>,
    pub ext_bound: usize,
    pub twist: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            p: 2,
            r: 2,
            flavor: HopfFlavor::GroupLike,
            seed: 0,
            corpus_size: 60,
            pair_count: 50,
            max_dim: 16,
            field_degrees: vec![1, 2],
            ext_bound: 10,
            twist: 0,
        }
    }
}

impl SuiteConfig {
    pub fn spec(&self) -> Result<AlgebraSpec<PrimeField>, VerifyError> {
        Ok(AlgebraSpec::new(PrimeField::new(self.p)?, self.r, self.flavor))
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn fields(&self) -> Result<Vec<GaloisField>, VerifyError> {
        self.field_degrees.iter().map(|&d| Ok(GaloisField::new(self.p, d)?)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
    /// Module files of the offending instance.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: Suite,
    pub p: u32,
    pub r: usize,
    pub flavor: HopfFlavor,
    pub seed: u64,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
    /// Observations that are reported but do not decide the verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

const MAX_FAILURES: usize = 5;
const MIN_RESIDUE_POINTS: usize = 20;

struct Recorder {
    cases: usize,
    failures: Vec<Failure>,
    failed: usize,
    notes: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { cases: 0, failures: Vec::new(), failed: 0, notes: Vec::new() }
    }

    fn check<'m>(&mut self, ok: bool, case: impl FnOnce() -> (String, String, Vec<&'m LambdaModule<PrimeField>>)) {
        self.cases += 1;
        if ok {
            return;
        }
        self.failed += 1;
        if self.failures.len() < MAX_FAILURES {
            let (case, detail, modules) = case();
            let modules = modules
                .into_iter()
                .map(|m| serde_json::from_str(&write_module(m)).expect("writer emits JSON"))
                .collect();
            self.failures.push(Failure { case, detail, modules });
        }
    }

    fn check_plain(&mut self, ok: bool, case: impl FnOnce() -> (String, String)) {
        self.check(ok, || {
            let (c, d) = case();
            (c, d, Vec::new())
        })
    }

    fn finish(self, suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
        SuiteReport {
            schema: "v1".into(),
            suite,
            p: cfg.p,
            r: cfg.r,
            flavor: cfg.flavor,
            seed: cfg.seed,
            cases: self.cases,
            passed: self.failed == 0,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

type PointSet = BTreeSet<Vec<u64>>;

fn support_set<K: FiniteField>(m: &LambdaModule<PrimeField>, k: &K, twist: u32) -> PointSet
where
    PrimeField: crate::field::Subfield<K>,
{
    support_points(m, k, twist)
        .expect("same characteristic")
        .into_iter()
        .map(|pt| pt.0.iter().map(|c| k.index_of(c)).collect())
        .collect()
}

fn show(set: &PointSet) -> String {
    format!("{set:?}")
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    let spec = cfg.spec()?;
    let rec = match suite {
        Suite::Dade => dade(cfg, &spec)?,
        Suite::Tensor => tensor_or_hom(cfg, &spec, false)?,
        Suite::Hom => tensor_or_hom(cfg, &spec, true)?,
        Suite::Koszul => koszul(cfg, &spec)?,
        Suite::Carlson => carlson(cfg, &spec)?,
        Suite::Equiv => equiv(cfg, &spec)?,
        Suite::ExtSymmetry => ext_symmetry(cfg, &spec)?,
        Suite::GenericPoints => generic_points(cfg)?,
        Suite::ResidueModel => residue_model(cfg)?,
        Suite::Cosupport => cosupport(cfg, &spec)?,
    };
    Ok(rec.finish(suite, cfg))
}

fn main_corpus(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Vec<Sample> {
    corpus(spec, cfg.corpus_size, cfg.max_dim, &mut cfg.rng(1))
}

/// `dade_test` against the projective-cover oracle and against emptiness of
/// the sampled supports together with the chart verdicts. On the pencil
/// corpus only the first agreement is required: the sampled fields can miss
/// support points of higher degree, and such misses are reported as notes.
fn dade(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Result<Recorder, VerifyError> {
    let fields = cfg.fields()?;
    let mut rec = Recorder::new();
    let pencils = pencil_corpus(spec, cfg.corpus_size / 4, cfg.max_dim, &mut cfg.rng(8));
    let mut missed = Vec::new();
    for s in &pencils {
        let m = &s.module;
        let oracle = m.is_projective();
        let certified = dade_test(m);
        rec.check(oracle == certified, || {
            (s.label.clone(), format!("projective cover: {oracle}, dade: {certified}"), vec![m])
        });
        let sampled = fields.iter().all(|k| support_set(m, k, 0).is_empty()) && chart_verdicts(m).iter().all(|&v| v);
        if sampled != oracle {
            missed.push(s.label.clone());
        }
    }
    if !missed.is_empty() {
        rec.notes.push(format!(
            "{} of {} pencil modules have support only outside the sampled fields: {}",
            missed.len(),
            pencils.len(),
            missed.join(", ")
        ));
    }
    for s in main_corpus(cfg, spec) {
        let m = &s.module;
        let oracle = m.is_projective();
        let certified = dade_test(m);
        let sampled = fields.iter().all(|k| support_set(m, k, 0).is_empty()) && chart_verdicts(m).iter().all(|&v| v);
        rec.check(oracle == certified && certified == sampled, || {
            (
                s.label.clone(),
                format!("projective cover: {oracle}, dade: {certified}, sampled supports and charts: {sampled}"),
                vec![m],
            )
        });
    }
    Ok(rec)
}

fn tensor_or_hom(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>, hom: bool) -> Result<Recorder, VerifyError> {
    let fields = cfg.fields()?;
    let samples = main_corpus(cfg, spec);
    let mut rng = cfg.rng(if hom { 3 } else { 2 });
    let mut rec = Recorder::new();
    for (a, b) in pairs(&samples, cfg.pair_count, 8, &mut rng) {
        for flavor in [HopfFlavor::GroupLike, HopfFlavor::Primitive] {
            let (m, n) = (a.module.with_flavor(flavor), b.module.with_flavor(flavor));
            let combined = if hom { m.hom_module(&n) } else { m.tensor_product(&n) }.expect("same spec");
            for k in &fields {
                let lhs = support_set(&combined, k, cfg.twist);
                let sm = support_set(&m, k, cfg.twist);
                let sn = support_set(&n, k, cfg.twist);
                let rhs: PointSet = sm.intersection(&sn).cloned().collect();
                rec.check(lhs == rhs, || {
                    (
                        format!("({}, {}) {flavor} over {}", a.label, b.label, k.name()),
                        format!("combined {} vs intersection {}", show(&lhs), show(&rhs)),
                        vec![&a.module, &b.module],
                    )
                });
            }
        }
    }
    Ok(rec)
}

fn cosupport(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Result<Recorder, VerifyError> {
    let mut rec = Recorder::new();
    let fields = cfg.fields()?;
    for s in main_corpus(cfg, spec) {
        for k in &fields {
            let sup = support_points(&s.module, k, cfg.twist)?;
            let cosup = cosupport_points(&s.module, k, cfg.twist)?;
            rec.check(sup == cosup, || {
                (
                    format!("{} over {}", s.label, k.name()),
                    format!("support {} points, cosupport {} points", sup.len(), cosup.len()),
                    vec![&s.module],
                )
            });
        }
    }
    Ok(rec)
}

/// Random homogeneous class of the given polynomial degree.
fn random_class(rng: &mut ChaCha8Rng, spec: &AlgebraSpec<PrimeField>, degree: u32) -> CohClass<PrimeField> {
    let f = spec.field();
    let r = spec.r();
    let ring = CohClass::ring_for(f, r);
    let monomials: Vec<Vec<u32>> = exponent_vectors(r, degree);
    loop {
        let mut terms: Vec<(Monomial, u32)> = Vec::new();
        for e in &monomials {
            if rng.gen_bool(0.6) {
                terms.push((Monomial::from_exponents(e), rng.gen_range(1..f.p())));
            }
        }
        let poly = ring.from_terms(terms);
        if !poly.is_zero() {
            return CohClass::new(ring, poly).expect("homogeneous by construction");
        }
    }
}

fn exponent_vectors(r: usize, degree: u32) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![degree]];
    }
    (0..=degree)
        .flat_map(|a| {
            exponent_vectors(r - 1, degree - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

fn vanishes(class: &CohClass<PrimeField>, pt: &[u32]) -> bool {
    class.ring().field().is_zero(&class.ring().eval(class.poly(), pt))
}

/// `supp(M⫽ζ) = supp(M) ∩ V(ζ)` over prime-field points. Quadratic classes
/// are used when `p = 2` or `r = 2`, where the factor stays small.
fn koszul(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Result<Recorder, VerifyError> {
    let samples = main_corpus(cfg, spec);
    let small: Vec<&Sample> = samples.iter().filter(|s| s.module.dim() <= 6).collect();
    let tr = TrivialResolution::new(spec);
    let mut rng = cfg.rng(4);
    let degrees: Vec<u32> = if spec.p() == 2 || spec.r() == 2 { vec![1, 2] } else { vec![1] };
    let mut rec = Recorder::new();
    let mut factors: HashMap<String, LambdaModule<PrimeField>> = HashMap::new();
    for case in 0..cfg.pair_count {
        let s = small[case % small.len()];
        let degree = degrees[case % degrees.len()];
        let class = random_class(&mut rng, spec, degree);
        let key = class.format();
        if !factors.contains_key(&key) {
            let kz = koszul_object(&tr, &LambdaModule::trivial(spec), std::slice::from_ref(&class)).expect("nonzero");
            factors.insert(key.clone(), kz);
        }
        let m = &s.module;
        let obj = m.tensor_product(&factors[&key]).expect("same spec");
        let lhs: BTreeSet<Vec<u32>> = support_points_over(&obj, 0).into_iter().map(|p| p.0).collect();
        let rhs: BTreeSet<Vec<u32>> = support_points_over(m, 0)
            .into_iter()
            .filter(|p| vanishes(&class, &p.0))
            .map(|p| p.0)
            .collect();
        rec.check(lhs == rhs, || {
            (format!("{} // {}", s.label, key), format!("koszul {lhs:?} vs supp ∩ V {rhs:?}"), vec![m])
        });
    }
    Ok(rec)
}

/// `supp(L_ζ) = V(ζ)` over prime-field points for every linear `ζ`.
fn carlson(_cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Result<Recorder, VerifyError> {
    let tr = TrivialResolution::new(spec);
    let mut rec = Recorder::new();
    let all = projective_points(spec.field(), spec.r());
    for class in linear_classes(spec) {
        let l = carlson_module(&tr, &class).expect("nonzero class");
        let lhs: BTreeSet<Vec<u32>> = support_points_over(&l, 0).into_iter().map(|p| p.0).collect();
        let rhs: BTreeSet<Vec<u32>> = all.iter().filter(|p| vanishes(&class, &p.0)).map(|p| p.0.clone()).collect();
        rec.check(lhs == rhs, || {
            (format!("L_{{{}}}", class.format()), format!("support {lhs:?} vs zero set {rhs:?}"), vec![&l])
        });
    }
    Ok(rec)
}

/// Degree-two-and-higher tails and rescaling never change projectivity.
fn equiv(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Result<Recorder, VerifyError> {
    let f = *spec.field();
    let p = spec.p();
    let r = spec.r();
    let mut rng = cfg.rng(5);
    let higher: Vec<Vec<u32>> = spec.monomials().into_iter().filter(|e| e.iter().sum::<u32>() >= 2).collect();
    let mut rec = Recorder::new();
    for s in main_corpus(cfg, spec) {
        let m = s.module.with_flavor(cfg.flavor);
        for pt in projective_points(&f, r) {
            let base = PiPoint::linear(m.spec().clone(), &pt.0).expect("nonzero");
            let verdict = base.is_projective_at(&m).expect("same spec");
            let mut tail: Vec<(Vec<u32>, u32)> = Vec::new();
            for e in &higher {
                if rng.gen_bool(0.5) {
                    tail.push((e.clone(), rng.gen_range(1..p)));
                }
            }
            let tailed = base.with_terms(&tail).expect("linear part unchanged");
            let c = rng.gen_range(1..p);
            let scaled: Vec<u32> = pt.0.iter().map(|x| f.mul(x, &c)).collect();
            let scaled = PiPoint::linear(m.spec().clone(), &scaled).expect("nonzero");
            let ok = tailed.is_projective_at(&m).expect("same spec") == verdict
                && scaled.is_projective_at(&m).expect("same spec") == verdict
                && base.equivalent(&tailed).expect("same spec");
            rec.check(ok, || (format!("{} at {} + tail", s.label, tailed.format()), format!("linear verdict {verdict}"), vec![&s.module]));
        }
    }
    Ok(rec)
}

/// `Ext^i(M, N) = 0` for some `1 ≤ i ≤ bound` iff the supports are disjoint,
/// and then it vanishes throughout the range.
fn ext_symmetry(cfg: &SuiteConfig, spec: &AlgebraSpec<PrimeField>) -> Result<Recorder, VerifyError> {
    let fields = cfg.fields()?;
    let samples = main_corpus(cfg, spec);
    let mut pool: Vec<Sample> = samples.into_iter().filter(|s| s.module.dim() <= 6).collect();
    // Modules with small pairwise-disjoint supports.
    if spec.p() == 2 || spec.r() == 2 {
        let tr = TrivialResolution::new(spec);
        let classes = linear_classes(spec);
        for class in &classes {
            let kz = crate::homalg::koszul_factor(&tr, class).expect("nonzero");
            if kz.dim() <= 9 {
                pool.push(Sample { label: format!("koszul({})", class.format()), module: kz });
            }
        }
        // For r = 3 linear supports are lines, which always meet; add points.
        if spec.r() == 3 {
            for (a, b) in [(0, 1), (1, 2), (0, 2), (2, 3)] {
                let (ca, cb) = (&classes[a], &classes[b]);
                let obj = koszul_object(&tr, &LambdaModule::trivial(spec), &[ca.clone(), cb.clone()]).expect("nonzero");
                if obj.dim() <= 8 {
                    pool.push(Sample { label: format!("koszul({}, {})", ca.format(), cb.format()), module: obj });
                }
            }
        }
    }
    let mut rng = cfg.rng(6);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let structured: Vec<usize> = (0..pool.len()).filter(|&i| pool[i].label.starts_with("koszul")).collect();
    for (a, &i) in structured.iter().enumerate() {
        for &j in &structured[a..] {
            chosen.push((i, j));
        }
    }
    // Structured pairs fill at most half of the budget.
    chosen.shuffle(&mut rng);
    chosen.truncate(cfg.pair_count / 2);
    while chosen.len() < cfg.pair_count {
        chosen.push((rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len())));
    }
    let mut resolutions: HashMap<usize, Resolution<PrimeField>> = HashMap::new();
    let mut rec = Recorder::new();
    let (mut n_disjoint, mut n_projective) = (0, 0);
    for (i, j) in chosen {
        let (a, b) = (&pool[i], &pool[j]);
        let res = resolutions.entry(i).or_insert_with(|| Resolution::new(a.module.clone()));
        let dims: Vec<usize> = (1..=cfg.ext_bound)
            .map(|d| ext_dim_with(res, &b.module, d).expect("same spec"))
            .collect();
        let some_zero = dims.contains(&0);
        let all_zero = dims.iter().all(|&d| d == 0);
        let disjoint_points = fields.iter().all(|k| {
            let sa = support_set(&a.module, k, 0);
            let sb = support_set(&b.module, k, 0);
            sa.is_disjoint(&sb)
        });
        let tensor = a.module.tensor_product(&b.module).expect("same spec");
        let disjoint = disjoint_points && chart_verdicts(&tensor).iter().all(|&v| v);
        let ok = some_zero == disjoint && (!disjoint || all_zero);
        n_disjoint += disjoint as usize;
        n_projective += (a.module.is_projective() || b.module.is_projective()) as usize;
        rec.check(ok, || {
            (
                format!("Ext({}, {})", a.label, b.label),
                format!("ext dims 1..={}: {dims:?}, supports disjoint: {disjoint}", cfg.ext_bound),
                vec![&a.module, &b.module],
            )
        });
    }
    rec.notes.push(format!(
        "{n_disjoint} of {} pairs have disjoint supports ({n_projective} with a projective member)",
        rec.cases
    ));
    Ok(rec)
}

/// The bundled primes of `F_p[y1, y2, y3]`.
pub fn bundled_primes(p: u32) -> Result<Vec<Ideal<PrimeField>>, VerifyError> {
    let ring = PolyRing::with_prefix(PrimeField::new(p)?, "y", 3, MonomialOrder::GrevLex);
    let texts = ["", "y1", "y1\ny2", "y1*y3 - y2^2"];
    Ok(texts
        .iter()
        .map(|t| Ideal::parse(ring.clone(), t).expect("bundled ideals parse"))
        .collect())
}

fn generic_points(cfg: &SuiteConfig) -> Result<Recorder, VerifyError> {
    let mut rec = Recorder::new();
    for prime in bundled_primes(cfg.p)? {
        let name = format!("({})", prime.format().join(", "));
        match generic_point(&prime) {
            Ok(gp) => {
                let v = gp.verification;
                rec.check_plain(v.all(), || (name, format!("{v:?}, dimension {:?}", gp.dimension)));
            }
            Err(e) => rec.check_plain(false, || (name, e.to_string())),
        }
    }
    Ok(rec)
}

/// `κ = K⫽q` over the residue field of each bundled prime: not projective,
/// projective at sampled points off `V(q)`, and `q` of dimension one.
/// Only `p = 2`: for odd `p` the degree-two Koszul factors over three
/// variables have dimension 27 each and their tensor products are too large.
fn residue_model(cfg: &SuiteConfig) -> Result<Recorder, VerifyError> {
    if cfg.p != 2 {
        return Err(VerifyError::Unsupported { suite: Suite::ResidueModel, reason: format!("p = {}", cfg.p) });
    }
    let mut rng = cfg.rng(7);
    let mut rec = Recorder::new();
    let mut total_points = 0;
    for prime in bundled_primes(cfg.p)? {
        let name = format!("({})", prime.format().join(", "));
        let gp = match generic_point(&prime) {
            Ok(gp) => gp,
            Err(e) => {
                rec.check_plain(false, || (name, e.to_string()));
                continue;
            }
        };
        let k: RatFunc<PrimeField> = gp.field.clone();
        rec.check_plain(gp.dimension == Some(1), || (name.clone(), format!("dim q = {:?}", gp.dimension)));
        let spec = AlgebraSpec::new(k.clone(), 3, cfg.flavor);
        let tr = TrivialResolution::new(&spec);
        let ring = CohClass::ring_for(&k, 3);
        let classes: Vec<CohClass<RatFunc<PrimeField>>> = gp
            .q
            .gens()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| CohClass::new(ring.clone(), g.clone()).expect("generators of q are homogeneous"))
            .collect();
        let kappa = koszul_object(&tr, &LambdaModule::trivial(&spec), &classes).expect("nonzero classes");
        rec.check_plain(!kappa.is_projective(), || (name.clone(), format!("κ (dim {}) is projective", kappa.dim())));
        let mut sampled = 0;
        let mut tries = 0;
        while sampled < 8 && tries < 200 {
            tries += 1;
            let lambda: Vec<_> = (0..3)
                .map(|_| {
                    let c = k.from_int(rng.gen_range(0..cfg.p) as i64);
                    if k.nvars() > 0 && rng.gen_bool(0.5) {
                        let t = k.var(rng.gen_range(0..k.nvars()));
                        k.add(&c, &t)
                    } else {
                        c
                    }
                })
                .collect();
            if lambda.iter().all(|x| k.is_zero(x)) {
                continue;
            }
            let off = gp.q.gens().iter().any(|g| !k.is_zero(&ring.eval(g, &lambda)));
            if !off {
                continue;
            }
            sampled += 1;
            let alpha = PiPoint::linear(spec.clone(), &lambda).expect("nonzero");
            let ok = alpha.is_projective_at(&kappa).expect("same spec");
            rec.check_plain(ok, || (format!("{name} at {}", alpha.format()), "κ not projective off V(q)".into()));
        }
        rec.notes.push(format!("{name}: residue field {}, κ of dimension {}, {sampled} points off V(q)", k.name(), kappa.dim()));
        total_points += sampled;
    }
    rec.check_plain(total_points >= MIN_RESIDUE_POINTS, || {
        ("sampling".into(), format!("only {total_points} points off V(q), need {MIN_RESIDUE_POINTS}"))
    });
    Ok(rec)
}

pub fn run_by_name(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    run_suite(name.parse()?, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(p: u32, r: usize) -> SuiteConfig {
        SuiteConfig { p, r, corpus_size: 12, pair_count: 6, ext_bound: 4, ..SuiteConfig::default() }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("nope".parse::<Suite>(), Err(VerifyError::UnknownSuite("nope".into())));
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Dade, Suite::Tensor, Suite::Hom, Suite::Carlson, Suite::Equiv, Suite::Cosupport] {
            let report = run_suite(suite, &small(2, 2)).unwrap();
            assert!(report.passed, "{suite}: {:?}", report.failures);
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Equiv, &small(3, 2)).unwrap();
        let b = run_suite(Suite::Equiv, &small(3, 2)).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn exponent_vectors_count() {
        assert_eq!(exponent_vectors(3, 2).len(), 6);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let spec = small(3, 2).spec().unwrap();
        let c = random_class(&mut rng, &spec, 2);
        assert_eq!(c.poly_degree(), 2);
    }
}
