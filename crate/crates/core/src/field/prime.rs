use num_integer::Integer;

use super::{is_prime, parse, Field, FieldError, FiniteField};

/// The prime field `F_p`, elements stored as residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1
    }

    fn from_int(&self, n: i64) -> u32 {
        self.reduce(n)
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let g = (*a as i64).extended_gcd(&(self.p as i64));
        debug_assert_eq!(g.gcd, 1);
        Some(self.reduce(g.x))
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }

    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u32, FieldError> {
        let expr = parse::parse_expr(s)?;
        Ok(parse::eval_in_field(self, &expr, &|_| None)?)
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.p as u64
    }

    fn degree(&self) -> usize {
        1
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
    fn product_in_f5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.mul(&3, &4), 2);
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let b = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &b), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.div(&1, &0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(PrimeField::new(6), Err(FieldError::NotPrime(6)));
    }

    #[test]
    fn parses_expressions() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse_elem("3*4").unwrap(), 2);
        assert_eq!(f.parse_elem(" -(1 + 2)^2 ").unwrap(), 1);
        assert_eq!(f.parse_elem("2/3").unwrap(), 4);
        assert!(f.parse_elem("1/0").is_err());
    }
}
