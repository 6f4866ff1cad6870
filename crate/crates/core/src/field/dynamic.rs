//! Runtime-tagged fields and elements, used at the text and file boundary
//! where the field is only known after parsing.

use serde::{Deserialize, Serialize};

use super::{Field, FieldError, GaloisField, PrimeField, RatElem, RatFunc};

/// Field description as it appears in module files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Prime {
        p: u32,
    },
    Ext {
        p: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<String>,
    },
    Ratfunc {
        base: Box<FieldSpec>,
        vars: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Prime(PrimeField),
    Galois(GaloisField),
    RatFunc(RatFunc<GaloisField>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyElem {
    Small(u32),
    Rat(RatElem<u32>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldSpec {
    pub fn build(&self) -> Result<AnyField, FieldError> {
        Ok(match self {
            FieldSpec::Prime { p } => AnyField::Prime(PrimeField::new(*p)?),
            FieldSpec::Ext { p, degree, modulus } => AnyField::Galois(build_galois(*p, *degree, modulus.as_deref())?),
            FieldSpec::Ratfunc { base, vars } => {
                let base = match base.as_ref() {
                    FieldSpec::Prime { p } => GaloisField::new(*p, 1)?,
                    FieldSpec::Ext { p, degree, modulus } => build_galois(*p, *degree, modulus.as_deref())?,
                    FieldSpec::Ratfunc { .. } => {
                        return Err(FieldError::IncompatibleFields {
                            from: "nested rational function field".into(),
                            into: "ratfunc base".into(),
                        })
                    }
                };
                AnyField::RatFunc(RatFunc::with_names(base, vars.clone()))
            }
        })
    }

    pub fn of_prime(f: &PrimeField) -> Self {
        FieldSpec::Prime { p: f.p() }
    }

    pub fn of_galois(f: &GaloisField) -> Self {
        use super::FiniteField;
        FieldSpec::Ext { p: f.p(), degree: Some(f.degree()), modulus: Some(f.modulus_string()) }
    }

    pub fn of_ratfunc(f: &RatFunc<GaloisField>) -> Self {
        use super::FiniteField;
        let base = if f.base().degree() == 1 {
            FieldSpec::Prime { p: f.base().p() }
        } else {
            FieldSpec::of_galois(f.base())
        };
        FieldSpec::Ratfunc { base: Box::new(base), vars: f.poly_ring().names().to_vec() }
    }
}

fn build_galois(p: u32, degree: Option<usize>, modulus: Option<&str>) -> Result<GaloisField, FieldError> {
    use super::FiniteField;
    let f = match modulus {
        Some(m) => GaloisField::from_modulus_str(p, m)?,
        None => GaloisField::new(p, degree.unwrap_or(1))?,
    };
    if let Some(d) = degree {
        if f.degree() != d {
            return Err(FieldError::BadModulus);
        }
    }
    Ok(f)
}

impl AnyField {
    pub fn name(&self) -> String {
        match self {
            AnyField::Prime(f) => f.name(),
            AnyField::Galois(f) => f.name(),
            AnyField::RatFunc(f) => f.name(),
        }
    }

    pub fn parse(&self, s: &str) -> Result<FieldElem, FieldError> {
        let value = match self {
            AnyField::Prime(f) => AnyElem::Small(f.parse_elem(s)?),
            AnyField::Galois(f) => AnyElem::Small(f.parse_elem(s)?),
            AnyField::RatFunc(f) => AnyElem::Rat(f.parse_elem(s)?),
        };
        Ok(FieldElem { field: self.clone(), value })
    }
}

/// An element tagged with its parent field.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldElem {
    field: AnyField,
    value: AnyElem,
}

impl FieldElem {
    pub fn field(&self) -> &AnyField {
        &self.field
    }

    pub fn value(&self) -> &AnyElem {
        &self.value
    }

    /// Field operation with parent checking.
    pub fn arith(&self, other: &FieldElem, op: ArithOp) -> Result<FieldElem, FieldError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch);
        }
        fn run<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, op: ArithOp) -> Result<F::Elem, FieldError> {
            Ok(match op {
                ArithOp::Add => f.add(a, b),
                ArithOp::Sub => f.sub(a, b),
                ArithOp::Mul => f.mul(a, b),
                ArithOp::Div => f.div(a, b)?,
            })
        }
        let value = match (&self.field, &self.value, &other.value) {
            (AnyField::Prime(f), AnyElem::Small(a), AnyElem::Small(b)) => AnyElem::Small(run(f, a, b, op)?),
            (AnyField::Galois(f), AnyElem::Small(a), AnyElem::Small(b)) => AnyElem::Small(run(f, a, b, op)?),
            (AnyField::RatFunc(f), AnyElem::Rat(a), AnyElem::Rat(b)) => AnyElem::Rat(run(f, a, b, op)?),
            _ => return Err(FieldError::FieldMismatch),
        };
        Ok(FieldElem { field: self.field.clone(), value })
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            AnyElem::Small(a) => *a == 0,
            AnyElem::Rat(a) => a.numerator().is_zero(),
        }
    }

    pub fn format(&self) -> String {
        match (&self.field, &self.value) {
            (AnyField::Prime(f), AnyElem::Small(a)) => f.format_elem(a),
            (AnyField::Galois(f), AnyElem::Small(a)) => f.format_elem(a),
            (AnyField::RatFunc(f), AnyElem::Rat(a)) => f.format_elem(a),
            _ => unreachable!("element tag always matches its field"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(json: &str) -> AnyField {
        serde_json::from_str::<FieldSpec>(json).unwrap().build().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = field(r#"{"kind":"prime","p":5}"#);
        let r = f5.parse("3").unwrap().arith(&f5.parse("4").unwrap(), ArithOp::Mul).unwrap();
        assert_eq!(r.format(), "2");

        let f4 = field(r#"{"kind":"ext","p":2,"modulus":"x^2+x+1"}"#);
        let x = f4.parse("x").unwrap();
        assert_eq!(x.arith(&x, ArithOp::Mul).unwrap().format(), "x+1");

        let f2t = field(r#"{"kind":"ratfunc","base":{"kind":"prime","p":2},"vars":["t"]}"#);
        let a = f2t.parse("t/(t+1)").unwrap();
        let b = f2t.parse("1/(t+1)").unwrap();
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap().format(), "1");
    }

    #[test]
    fn errors() {
        let f5 = field(r#"{"kind":"prime","p":5}"#);
        let f7 = field(r#"{"kind":"prime","p":7}"#);
        let a = f5.parse("1").unwrap();
        let b = f7.parse("1").unwrap();
        assert_eq!(a.arith(&b, ArithOp::Add), Err(FieldError::FieldMismatch));
        let z = f5.parse("0").unwrap();
        assert_eq!(a.arith(&z, ArithOp::Div), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn spec_round_trip() {
        let spec = FieldSpec::Ext { p: 3, degree: Some(2), modulus: Some("x^2+1".into()) };
        let AnyField::Galois(g) = spec.build().unwrap() else { panic!() };
        assert_eq!(FieldSpec::of_galois(&g), spec);
    }
}
