//! Exact support τ-tilting theory for finite-dimensional bound quiver algebras.

pub mod algebra;
pub mod error;
pub mod field;
pub mod format;
pub mod linalg;
pub mod modrep;
pub mod oracle;
pub mod tautilt;
pub mod twoterm;

pub use algebra::{parse_algebra, BoundQuiverAlgebra, QuiverSpec};
pub use error::{Error, Result};
pub use field::{Field, FieldChoice, Fp, Rational};
pub use linalg::Matrix;
pub use modrep::{RepMorphism, Representation};
pub use tautilt::{enumerate_sttilt, HasseGraph, Limits, TauRigidPair, TauTiltingPair};
pub use twoterm::TwoTermComplex;
