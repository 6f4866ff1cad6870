use std::fmt;
use std::sync::Arc;

use super::parse::{self, EvalTarget, ParseError};
use super::{is_prime, Field, FieldError, FiniteField};

const MAX_ORDER: u64 = 1 << 20;

/// `F_q = F_p[x]/(f)` for a monic irreducible `f` of degree `d`, `q = p^d <= 2^20`.
///
/// An element is encoded as the integer `sum c_i p^i` of its coefficient
/// vector in the power basis; multiplication goes through discrete log
/// tables built at construction.
#[derive(Clone)]
pub struct GaloisField {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    degree: usize,
    /// Monic, lowest coefficient first, length `degree + 1`.
    modulus: Vec<u32>,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaloisField(F_{}^{}, {})", self.inner.p, self.inner.degree, self.modulus_string())
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for GaloisField {}

// dense univariate helpers over F_p, lowest coefficient first

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn decode(mut n: u32, p: u32, d: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(d);
    for _ in 0..d {
        v.push(n % p);
        n /= p;
    }
    trim(v)
}

fn encode(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d <= 1 {
        return d == 1;
    }
    for k in 1..=d / 2 {
        let count = (p as u64).pow(k as u32);
        for low in 0..count {
            let mut g = decode(low as u32, p, k);
            g.resize(k, 0);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    /// `F_{p^d}` with the first monic irreducible polynomial of degree `d`
    /// in the order of the integer encoding of its lower coefficients
    /// (so `F_4 = F_2[x]/(x^2+x+1)` and `F_9 = F_3[x]/(x^2+1)`).
    pub fn new(p: u32, degree: usize) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if degree == 0 {
            return Err(FieldError::BadModulus);
        }
        Self::check_size(p, degree)?;
        let count = (p as u64).pow(degree as u32);
        for low in 0..count {
            let mut f = decode(low as u32, p, degree);
            f.resize(degree, 0);
            f.push(1);
            if is_irreducible(&f, p) {
                return Self::with_modulus(p, f);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn check_size(p: u32, degree: usize) -> Result<(), FieldError> {
        let too_large = (p as u64).checked_pow(degree as u32).map_or(true, |q| q > MAX_ORDER);
        if too_large {
            return Err(FieldError::TooLarge { p, degree });
        }
        Ok(())
    }

    /// `F_p[x]/(f)` for the given monic polynomial, lowest coefficient first.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        let modulus: Vec<u32> = modulus.into_iter().map(|c| c % p).collect();
        let modulus = trim(modulus);
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulus);
        }
        let degree = modulus.len() - 1;
        Self::check_size(p, degree)?;
        if !is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible(p));
        }
        let order = (p as u64).pow(degree as u32) as u32;
        let (exp, log) = Self::build_tables(p, &modulus, order);
        Ok(Self { inner: Arc::new(Inner { p, degree, modulus, order, exp, log }) })
    }

    /// Parse the defining polynomial from text such as `x^2+x+1`.
    pub fn from_modulus_str(p: u32, s: &str) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        let e = parse::parse_expr(s)?;
        let f = parse::eval(&DensePolys { p }, &e)?;
        Self::with_modulus(p, f)
    }

    fn build_tables(p: u32, modulus: &[u32], order: u32) -> (Vec<u32>, Vec<u32>) {
        let d = modulus.len() - 1;
        let n = order - 1;
        if n == 0 {
            unreachable!("fields have at least two elements");
        }
        for g in 1..order {
            let gv = decode(g, p, d);
            let mut exp = vec![0u32; n as usize];
            let mut cur = vec![1u32];
            let mut ok = true;
            for (k, slot) in exp.iter_mut().enumerate() {
                let c = encode(&cur, p);
                if k > 0 && c == 1 {
                    ok = false;
                    break;
                }
                *slot = c;
                cur = poly_rem(&poly_mul(&cur, &gv, p), modulus, p);
            }
            if ok {
                let mut log = vec![0u32; order as usize];
                for (k, &c) in exp.iter().enumerate() {
                    log[c as usize] = k as u32;
                }
                return (exp, log);
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn modulus_string(&self) -> String {
        format_dense(&self.inner.modulus, "x")
    }

    /// The class of `x`.
    pub fn generator(&self) -> u32 {
        if self.inner.degree == 1 {
            (self.inner.p - self.inner.modulus[0]) % self.inner.p
        } else {
            self.inner.p
        }
    }

    /// Coefficients of `a` in the power basis `1, x, .., x^(d-1)`.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut v = decode(a, self.inner.p, self.inner.degree);
        v.resize(self.inner.degree, 0);
        v
    }

    pub fn from_coefficients(&self, c: &[u32]) -> u32 {
        let reduced = poly_rem(c, &self.inner.modulus, self.inner.p);
        encode(&reduced, self.inner.p)
    }

    /// Evaluate a polynomial with coefficients in `F_p` (lowest first) at `a`.
    pub fn eval_prime_poly(&self, f: &[u32], a: &u32) -> u32 {
        f.iter().rev().fold(0, |acc, &c| {
            let prod = self.mul(&acc, a);
            self.add(&prod, &(c % self.inner.p))
        })
    }
}

fn format_dense(coeffs: &[u32], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Dense univariate polynomials over F_p in the variable `x`, for parsing moduli.
struct DensePolys {
    p: u32,
}

impl EvalTarget for DensePolys {
    type Value = Vec<u32>;

    fn constant(&self, n: i64) -> Vec<u32> {
        trim(vec![n.rem_euclid(self.p as i64) as u32])
    }

    fn symbol(&self, name: &str, position: usize) -> Result<Vec<u32>, FieldError> {
        if name == "x" {
            Ok(vec![0, 1])
        } else {
            Err(ParseError::new(format!("unknown symbol '{name}'"), position).into())
        }
    }

    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(v)
    }

    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        poly_mul(a, b, self.p)
    }

    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|&c| (self.p - c) % self.p).collect()
    }

    fn div(&self, a: &Vec<u32>, b: &Vec<u32>, position: usize) -> Result<Vec<u32>, FieldError> {
        if b.len() == 1 {
            let inv = inv_mod(b[0], self.p);
            Ok(trim(a.iter().map(|&c| (c as u64 * inv as u64 % self.p as u64) as u32).collect()))
        } else {
            Err(ParseError::new("can only divide by nonzero constants", position).into())
        }
    }
}

impl Field for GaloisField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.inner.p
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.inner.p as i64) as u32
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let p = self.inner.p;
        if p == 2 {
            return a ^ b;
        }
        let (mut x, mut y) = (*a, *b);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            let s = (x % p + y % p) % p;
            out += s * place;
            place *= p;
            x /= p;
            y /= p;
        }
        out
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &u32) -> u32 {
        let p = self.inner.p;
        if p == 2 {
            return *a;
        }
        let mut x = *a;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        out
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let n = self.inner.order - 1;
        let k = (self.inner.log[*a as usize] + self.inner.log[*b as usize]) % n;
        self.inner.exp[k as usize]
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let n = self.inner.order - 1;
        let k = (n - self.inner.log[*a as usize]) % n;
        Some(self.inner.exp[k as usize])
    }

    fn name(&self) -> String {
        if self.inner.degree == 1 {
            format!("F_{}", self.inner.p)
        } else {
            format!("F_{}[x]/({})", self.inner.order, self.modulus_string())
        }
    }

    fn format_elem(&self, a: &u32) -> String {
        format_dense(&decode(*a, self.inner.p, self.inner.degree), "x")
    }

    fn parse_elem(&self, s: &str) -> Result<u32, FieldError> {
        let e = parse::parse_expr(s)?;
        let g = self.generator();
        parse::eval_in_field(self, &e, &|name| (name == "x").then_some(g))
    }
}

impl FiniteField for GaloisField {
    fn order(&self) -> u64 {
        self.inner.order as u64
    }

    fn degree(&self) -> usize {
        self.inner.degree
    }

    fn element(&self, index: u64) -> u32 {
        index as u32
    }

    fn index_of(&self, a: &u32) -> u64 {
        *a as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_defining_relation() {
        let f4 = GaloisField::new(2, 2).unwrap();
        assert_eq!(f4.modulus_string(), "x^2+x+1");
        let x = f4.generator();
        let xx = f4.mul(&x, &x);
        assert_eq!(f4.format_elem(&xx), "x+1");
        assert_eq!(xx, f4.parse_elem("x+1").unwrap());
    }

    #[test]
    fn f9_default_modulus() {
        let f9 = GaloisField::new(3, 2).unwrap();
        assert_eq!(f9.modulus_string(), "x^2+1");
        let x = f9.generator();
        assert_eq!(f9.mul(&x, &x), f9.from_int(-1));
    }

    #[test]
    fn rejects_reducible_and_oversized() {
        assert_eq!(
            GaloisField::from_modulus_str(2, "x^2+1").unwrap_err(),
            FieldError::Reducible(2)
        );
        assert!(matches!(GaloisField::new(2, 21), Err(FieldError::TooLarge { .. })));
        assert!(GaloisField::new(2, 20).is_ok());
        assert!(matches!(GaloisField::from_modulus_str(3, "2*x^2+1"), Err(FieldError::BadModulus)));
    }

    #[test]
    fn degree_one_field_matches_prime_field() {
        let f = GaloisField::new(5, 1).unwrap();
        for a in 0..5u32 {
            for b in 0..5u32 {
                assert_eq!(f.mul(&a, &b), (a * b) % 5);
                assert_eq!(f.add(&a, &b), (a + b) % 5);
            }
        }
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        let f = GaloisField::new(3, 3).unwrap();
        for a in 1..f.order() {
            let a = f.element(a);
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
    }

    #[test]
    fn irreducibility_by_trial_division() {
        // x^4 + x + 1 is irreducible over F_2, x^4 + x^2 + 1 = (x^2+x+1)^2 is not
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }
}
