//! Exact combinatorics of quantum K-theory Pieri and Seidel products for the
//! classical cominuscule Grassmannians Gr(m,n), OG(n,2n) and LG(n,2n).
//!
//! Basis elements q^d O^mu are modeled as lower order ideals (quantum shapes)
//! in an infinite strip or cylinder poset.  Every Pieri coefficient is
//! computable by at least two independent routes (closed alternating sums,
//! recursions on the north-east arm, and signed tableau counts), and the
//! `verify` module cross-checks them exhaustively at small sizes.

pub mod coeffs;
pub mod error;
pub mod family;
pub mod ring;
pub mod seidel;
pub mod shape;
pub mod skew;
pub mod symplectic;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use family::Family;
pub use ring::QKClass;
pub use seidel::SeidelElement;
pub use shape::QuantumShape;
pub use skew::{Ambient, SkewShape};
pub use symplectic::{MatrixDiagram, SchubertSymbol};
pub use tableaux::{Tableau, TableauKind};
