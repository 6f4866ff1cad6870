//! Deterministic test corpora of `Λ`-modules over a prime field.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, PrimeField};
use crate::homalg::{carlson_module, koszul_factor, syzygy, CohClass, TrivialResolution};
use crate::linalg::Matrix;
use crate::module::{AlgebraSpec, LambdaModule};

#[derive(Debug, Clone)]
pub struct Sample {
    pub label: String,
    pub module: LambdaModule<PrimeField>,
}

impl Sample {
    fn new(label: impl Into<String>, module: LambdaModule<PrimeField>) -> Self {
        Sample { label: label.into(), module }
    }
}

fn random_elem(rng: &mut ChaCha8Rng, f: &PrimeField) -> u32 {
    rng.gen_range(0..f.p())
}

fn random_nonzero(rng: &mut ChaCha8Rng, f: &PrimeField) -> u32 {
    rng.gen_range(1..f.p())
}

/// Random unit lower-triangular matrix times a random permutation-free
/// upper part: always invertible.
pub fn random_invertible(rng: &mut ChaCha8Rng, f: &PrimeField, n: usize) -> Matrix<PrimeField> {
    let mut lower = Matrix::identity(f, n);
    let mut upper = Matrix::identity(f, n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, random_elem(rng, f));
            upper.set(j, i, random_elem(rng, f));
        }
        upper.set(i, i, random_nonzero(rng, f));
    }
    lower.mul(&upper).expect("square")
}

/// `P Z_i P^{-1}` for a random invertible `P`.
pub fn conjugate(rng: &mut ChaCha8Rng, m: &LambdaModule<PrimeField>) -> LambdaModule<PrimeField> {
    let f = m.field();
    let p = random_invertible(rng, f, m.dim());
    let pinv = p.inverse().expect("invertible");
    let actions = m.actions().iter().map(|z| p.mul(z).unwrap().mul(&pinv).unwrap()).collect();
    LambdaModule::new(m.spec().clone(), actions).expect("conjugation preserves relations")
}

/// A nilpotent `P J P^{-1}` with Jordan blocks of size at most `p`, strictly
/// lower triangular since `J` is and `P` is unit lower triangular.
fn random_nilpotent(rng: &mut ChaCha8Rng, f: &PrimeField, n: usize, p: usize) -> Matrix<PrimeField> {
    let mut j = Matrix::zeros(f, n, n);
    let mut start = 0;
    while start < n {
        let size = rng.gen_range(1..=p.min(n - start));
        for i in 1..size {
            j.set(start + i, start + i - 1, f.one());
        }
        start += size;
    }
    let mut lower = Matrix::identity(f, n);
    for a in 0..n {
        for b in 0..a {
            if rng.gen_bool(0.5) {
                lower.set(a, b, random_elem(rng, f));
            }
        }
    }
    let inv = lower.inverse().expect("unit triangular");
    lower.mul(&j).unwrap().mul(&inv).unwrap()
}

/// Strictly lower-triangular matrices commuting with each of `zs`, as a list
/// of basis matrices.
fn lower_commutant(f: &PrimeField, n: usize, zs: &[Matrix<PrimeField>]) -> Vec<Matrix<PrimeField>> {
    let unknowns: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..a).map(move |b| (a, b))).collect();
    if unknowns.is_empty() {
        return Vec::new();
    }
    let mut system = Matrix::zeros(f, zs.len() * n * n, unknowns.len());
    for (k, z) in zs.iter().enumerate() {
        let base = k * n * n;
        for (col, &(a, b)) in unknowns.iter().enumerate() {
            // [Z, E_ab] = Z E_ab - E_ab Z
            for i in 0..n {
                let v = z.get(i, a);
                if !f.is_zero(v) {
                    let row = base + i * n + b;
                    system.set(row, col, f.add(system.get(row, col), v));
                }
                let w = z.get(b, i);
                if !f.is_zero(w) {
                    let row = base + a * n + i;
                    system.set(row, col, f.sub(system.get(row, col), w));
                }
            }
        }
    }
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|c| {
            let mut x = Matrix::zeros(f, n, n);
            for (row, &(a, b)) in unknowns.iter().enumerate() {
                x.set(a, b, kernel.get(row, c).clone());
            }
            x
        })
        .collect()
}

/// Commuting nilpotent tuple by rejection sampling: `Z_1` of random Jordan
/// type, then each further `Z_j` drawn from the strictly lower commutant of
/// the previous ones and rejected unless `Z_j^p = 0`.
pub fn random_module(rng: &mut ChaCha8Rng, spec: &AlgebraSpec<PrimeField>, n: usize) -> LambdaModule<PrimeField> {
    let f = spec.field();
    let p = spec.p();
    let mut zs = vec![random_nilpotent(rng, f, n, p as usize)];
    for _ in 1..spec.r() {
        let basis = lower_commutant(f, n, &zs);
        let mut chosen = Matrix::zeros(f, n, n);
        for _ in 0..24 {
            let mut x = Matrix::zeros(f, n, n);
            let terms = rng.gen_range(1..=3.min(basis.len().max(1)));
            for _ in 0..terms {
                if let Some(b) = basis.choose(rng) {
                    x = x.add(&b.scale(&random_nonzero(rng, f))).unwrap();
                }
            }
            if x.pow(p).unwrap().is_zero() {
                chosen = x;
                break;
            }
        }
        zs.push(chosen);
    }
    zs.shuffle(rng);
    LambdaModule::new(spec.clone(), zs).expect("commuting nilpotent by construction")
}

/// `Z_j = A ⊗ f_j(B)` for a full Jordan block `A`, a random `m x m` matrix
/// `B` and random polynomials `f_j`: non-projective exactly where
/// `det Σ λ_j f_j(B) = 0`.
pub fn random_pencil(rng: &mut ChaCha8Rng, spec: &AlgebraSpec<PrimeField>, m: usize) -> LambdaModule<PrimeField> {
    let f = spec.field();
    let p = spec.p() as usize;
    let mut a = Matrix::zeros(f, p, p);
    for i in 1..p {
        a.set(i, i - 1, f.one());
    }
    let mut b = Matrix::zeros(f, m, m);
    for i in 0..m {
        for j in 0..m {
            b.set(i, j, random_elem(rng, f));
        }
    }
    let mut powers = vec![Matrix::identity(f, m)];
    for k in 1..m {
        powers.push(powers[k - 1].mul(&b).unwrap());
    }
    let zs = (0..spec.r())
        .map(|_| {
            let mut g = Matrix::zeros(f, m, m);
            for pw in &powers {
                g = g.add(&pw.scale(&random_elem(rng, f))).unwrap();
            }
            a.kron(&g).unwrap()
        })
        .collect();
    LambdaModule::new(spec.clone(), zs).expect("commuting by construction")
}

/// A random extension `0 -> Λ -> E -> k -> 0`: the generator of `k` is sent
/// by `z_i` to `c_i ∈ Λ` subject to `z_i c_j = z_j c_i` and `z_i^{p-1} c_i = 0`.
/// Such extensions split, `Λ` being self-injective.
pub fn random_extension(rng: &mut ChaCha8Rng, spec: &AlgebraSpec<PrimeField>) -> LambdaModule<PrimeField> {
    let f = spec.field();
    let r = spec.r();
    let q = spec.algebra_dim();
    let free = LambdaModule::free(spec, 1);
    let ls = free.actions();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
    let mut system = Matrix::zeros(f, (pairs.len() + r) * q, r * q);
    let mut put = |row0: usize, col0: usize, m: &Matrix<PrimeField>, sign: bool| {
        for a in 0..q {
            for b in 0..q {
                let v = m.get(a, b);
                if !f.is_zero(v) {
                    let v = if sign { *v } else { f.neg(v) };
                    system.set(row0 + a, col0 + b, v);
                }
            }
        }
    };
    for (k, &(i, j)) in pairs.iter().enumerate() {
        put(k * q, j * q, &ls[i], true);
        put(k * q, i * q, &ls[j], false);
    }
    for i in 0..r {
        let power = ls[i].pow(spec.p() - 1).unwrap();
        put((pairs.len() + i) * q, i * q, &power, true);
    }
    let kernel = system.kernel_basis();
    let mut c = vec![0u32; r * q];
    for col in 0..kernel.cols() {
        let coeff = random_elem(rng, f);
        for (row, slot) in c.iter_mut().enumerate() {
            *slot = f.add(slot, &f.mul(&coeff, kernel.get(row, col)));
        }
    }
    let zs = (0..r)
        .map(|i| {
            let mut z = Matrix::zeros(f, q + 1, q + 1);
            for a in 0..q {
                for b in 0..q {
                    z.set(a, b, *ls[i].get(a, b));
                }
                z.set(a, q, c[i * q + a]);
            }
            z
        })
        .collect();
    LambdaModule::new(spec.clone(), zs).expect("cocycle conditions hold")
}

/// Monic irreducible quadratic over `F_p` as its companion matrix.
fn quadratic_companion(f: &PrimeField) -> Matrix<PrimeField> {
    let p = f.p();
    for a in 0..p {
        for b in 0..p {
            // x^2 + a x + b has no root
            if (0..p).all(|x| (x * x + a * x + b) % p != 0) {
                return Matrix::from_rows(f, vec![vec![0, f.neg(&b)], vec![1, f.neg(&a)]]).unwrap();
            }
        }
    }
    unreachable!("every prime field has an irreducible quadratic")
}

/// `Z_j = A ⊗ W^{j-1}` with `A` a full Jordan block and `W` the companion
/// of an irreducible quadratic: non-projective only where
/// `Σ λ_j w^{j-1} = 0`, which for `r = 2` has no rational solution.
pub fn quadratic_twist(spec: &AlgebraSpec<PrimeField>) -> LambdaModule<PrimeField> {
    let f = spec.field();
    let p = spec.p() as usize;
    let mut a = Matrix::zeros(f, p, p);
    for i in 1..p {
        a.set(i, i - 1, f.one());
    }
    let w = quadratic_companion(f);
    let mut power = Matrix::identity(f, 2);
    let mut zs = Vec::new();
    for _ in 0..spec.r() {
        zs.push(a.kron(&power).unwrap());
        power = power.mul(&w).unwrap();
    }
    LambdaModule::new(spec.clone(), zs).expect("commuting by construction")
}

/// Linear classes `Σ c_i y_i` with normalised coefficient vectors.
pub fn linear_classes(spec: &AlgebraSpec<PrimeField>) -> Vec<CohClass<PrimeField>> {
    let f = spec.field();
    let r = spec.r();
    let ring = CohClass::ring_for(f, r);
    crate::pipoint::projective_points(f, r)
        .into_iter()
        .map(|pt| {
            let terms = pt
                .0
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut e = vec![0u32; r];
                    e[i] = 1;
                    (crate::poly::Monomial::from_exponents(&e), *c)
                })
                .collect();
            CohClass::new(ring.clone(), ring.from_terms(terms)).expect("linear is homogeneous")
        })
        .collect()
}

/// Structured modules plus random ones, all of dimension at most `max_dim`.
pub fn corpus(spec: &AlgebraSpec<PrimeField>, size: usize, max_dim: usize, rng: &mut ChaCha8Rng) -> Vec<Sample> {
    let q = spec.algebra_dim();
    let k = LambdaModule::trivial(spec);
    let free = LambdaModule::free(spec, 1);
    let tr = TrivialResolution::new(spec);
    let mut out: Vec<Sample> = Vec::new();
    let push = |out: &mut Vec<Sample>, label: String, m: LambdaModule<PrimeField>| {
        if m.dim() > 0 && m.dim() <= max_dim && out.len() < size {
            out.push(Sample::new(label, m));
        }
    };

    push(&mut out, "k".into(), k.clone());
    push(&mut out, "k+k".into(), k.direct_sum(&k).unwrap());
    if q <= max_dim {
        push(&mut out, "free".into(), free.clone());
        push(&mut out, "free(conjugated)".into(), conjugate(rng, &free));
        push(&mut out, "free+k".into(), free.direct_sum(&k).unwrap());
    }
    if 2 * q <= max_dim {
        let two = LambdaModule::free(spec, 2);
        push(&mut out, "free^2(conjugated)".into(), conjugate(rng, &two));
    }
    if q - 1 <= max_dim {
        push(&mut out, "syz1(k)".into(), syzygy(&k, 1));
        push(&mut out, "syz-1(k)".into(), syzygy(&k, -1));
    }
    let twist = quadratic_twist(spec);
    push(&mut out, "quadratic-twist".into(), conjugate(rng, &twist));
    // For p odd and r = 3 these have dimension 27 or more: skip building them.
    if spec.p() == 2 || spec.r() == 2 {
        for class in linear_classes(spec) {
            let l = carlson_module(&tr, &class).expect("nonzero class");
            push(&mut out, format!("carlson({})", class.format()), l);
            let kz = koszul_factor(&tr, &class).expect("nonzero class");
            push(&mut out, format!("koszul({})", class.format()), kz);
        }
    }

    let mut pieces: Vec<Sample> = out.clone();
    let mut attempt = 0usize;
    while out.len() < size {
        attempt += 1;
        let choice = rng.gen_range(0..12);
        let p = spec.p() as usize;
        match choice {
            0..=3 => {
                let n = if rng.gen_bool(0.5) {
                    p * rng.gen_range(1..=max_dim / p)
                } else {
                    rng.gen_range(1..=max_dim)
                };
                let m = random_module(rng, spec, n);
                pieces.push(Sample::new(format!("random#{attempt}"), m.clone()));
                push(&mut out, format!("random#{attempt}(dim {n})"), m);
            }
            6 => {
                let a = pieces.choose(rng).unwrap().clone();
                let b = pieces.choose(rng).unwrap().clone();
                if a.module.dim() + b.module.dim() <= max_dim {
                    let m = a.module.direct_sum(&b.module).unwrap();
                    push(&mut out, format!("({})+({})", a.label, b.label), conjugate(rng, &m));
                }
            }
            7 => {
                let a = pieces.choose(rng).unwrap().clone();
                let b = pieces.choose(rng).unwrap().clone();
                if a.module.dim() * b.module.dim() <= max_dim {
                    let m = a.module.tensor_product(&b.module).unwrap();
                    push(&mut out, format!("({})*({})", a.label, b.label), m);
                }
            }
            8 => {
                let a = pieces.choose(rng).unwrap().clone();
                if a.module.dim() <= max_dim {
                    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                    let m = syzygy(&a.module, s);
                    push(&mut out, format!("syz{s}({})", a.label), m);
                }
            }
            4 | 5 => {
                let n = rng.gen_range(1..=max_dim / p) * p;
                let m = random_module(rng, spec, n);
                push(&mut out, format!("random#{attempt}(dim {n})"), m);
            }
            10 => {
                if q < max_dim {
                    let e = random_extension(rng, spec);
                    push(&mut out, format!("extension#{attempt}"), conjugate(rng, &e));
                }
            }
            _ => {
                // free summand glued to a random module
                let n = rng.gen_range(1..=max_dim.saturating_sub(q).max(1));
                let m = random_module(rng, spec, n);
                if q + n <= max_dim {
                    let s = free.direct_sum(&m).unwrap();
                    push(&mut out, format!("free+random#{attempt}"), conjugate(rng, &s));
                }
            }
        }
        if attempt > 100 * size {
            break;
        }
    }
    out
}

/// Pencil modules (see [`random_pencil`]) with some sums and syzygies. Their
/// supports often consist of points of degree three or more over `F_p`.
pub fn pencil_corpus(spec: &AlgebraSpec<PrimeField>, size: usize, max_dim: usize, rng: &mut ChaCha8Rng) -> Vec<Sample> {
    let p = spec.p() as usize;
    let mut out: Vec<Sample> = Vec::new();
    let mut attempt = 0;
    while out.len() < size && attempt < 100 * size {
        attempt += 1;
        let m = rng.gen_range(1..=max_dim / p);
        let raw = random_pencil(rng, spec, m);
        let pencil = conjugate(rng, &raw);
        let sample = match rng.gen_range(0..4) {
            0 if !out.is_empty() => {
                let other = out.choose(rng).unwrap().clone();
                if other.module.dim() + pencil.dim() > max_dim {
                    continue;
                }
                Sample::new(format!("pencil#{attempt}+({})", other.label), pencil.direct_sum(&other.module).unwrap())
            }
            1 => {
                let s = syzygy(&pencil, 1);
                if s.dim() > max_dim {
                    continue;
                }
                Sample::new(format!("syz1(pencil#{attempt})"), s)
            }
            _ => Sample::new(format!("pencil#{attempt}(dim {})", pencil.dim()), pencil),
        };
        out.push(sample);
    }
    out
}

/// Pairs drawn from `samples` whose members have dimension at most
/// `max_dim`, deterministic under `rng`.
pub fn pairs<'a>(samples: &'a [Sample], count: usize, max_dim: usize, rng: &mut ChaCha8Rng) -> Vec<(&'a Sample, &'a Sample)> {
    let small: Vec<&Sample> = samples.iter().filter(|s| s.module.dim() <= max_dim).collect();
    if small.is_empty() {
        return Vec::new();
    }
    (0..count)
        .map(|_| (*small.choose(rng).unwrap(), *small.choose(rng).unwrap()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::HopfFlavor;
    use rand::SeedableRng;

    #[test]
    fn random_modules_are_valid_and_deterministic() {
        let spec = AlgebraSpec::new(PrimeField::new(3).unwrap(), 3, HopfFlavor::GroupLike);
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 4, 9, 16] {
            let m = random_module(&mut a, &spec, n);
            assert!(m.validate().is_ok());
            assert_eq!(m, random_module(&mut b, &spec, n));
        }
    }

    #[test]
    fn commutant_is_correct() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let z = random_nilpotent(&mut rng, &f, 6, 2);
        for x in lower_commutant(&f, 6, &[z.clone()]) {
            assert_eq!(z.mul(&x).unwrap(), x.mul(&z).unwrap());
        }
    }

    #[test]
    fn twist_has_no_rational_support() {
        let spec = AlgebraSpec::new(PrimeField::new(3).unwrap(), 2, HopfFlavor::Primitive);
        let m = quadratic_twist(&spec);
        assert!(!m.is_projective());
        assert!(crate::pipoint::support_points_over(&m, 0).is_empty());
    }

    #[test]
    fn constructed_families_are_modules() {
        let spec = AlgebraSpec::new(PrimeField::new(3).unwrap(), 2, HopfFlavor::GroupLike);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = random_extension(&mut rng, &spec);
        assert_eq!(e.dim(), 10);
        assert!(e.validate().is_ok());
        // split: the free summand survives in the top
        assert_eq!(e.top_dim(), 2);
        let pencil = random_pencil(&mut rng, &spec, 4);
        assert!(pencil.validate().is_ok());
    }

    #[test]
    fn corpus_respects_bounds() {
        let spec = AlgebraSpec::new(PrimeField::new(2).unwrap(), 2, HopfFlavor::GroupLike);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let c = corpus(&spec, 40, 16, &mut rng);
        assert_eq!(c.len(), 40);
        assert!(c.iter().all(|s| s.module.dim() <= 16 && s.module.validate().is_ok()));
    }
}
