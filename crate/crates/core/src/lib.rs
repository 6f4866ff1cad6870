//! Exact computations for modules over truncated polynomial algebras
//! `K[z_1..z_r]/(z_1^p..z_r^p)`: pi-points and Jordan types, supports and
//! cosupports, projectivity, syzygies and Ext, Carlson modules and Koszul
//! objects, together with the Gröbner-basis machinery behind generic
//! closed points of graded prime ideals.

pub mod field;
pub mod gradedalg;
pub mod homalg;
pub mod linalg;
pub mod module;
pub mod pipoint;
pub mod poly;
pub mod verify;

pub use field::{Field, FieldError, FiniteField, GaloisField, PrimeField, RatFunc};
pub use linalg::{LinAlgError, Matrix};
pub use module::{AlgebraSpec, HopfFlavor, LambdaModule, ModuleError};
pub use homalg::{CohClass, Resolution};
pub use poly::{Monomial, MonomialOrder, Poly, PolyRing};
