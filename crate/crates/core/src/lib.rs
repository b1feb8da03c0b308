//! Exact evaluation of Chow forms (X-resultants) and X-discriminants as
//! torsions of twisted Koszul complexes of global sections.
//!
//! The pipeline: a projective variety is given by a monomial-style
//! parametrization plus ideal generators (`variety`), the resultant or
//! discriminant complex of a pencil is assembled over exact rationals
//! (`resultant`, `discriminant`), and its torsion — the alternating product
//! of minors of the boundary maps — is evaluated by exact linear algebra
//! (`torsion`, `linalg`). Degree bookkeeping and the symmetric-function
//! identities behind it live in `degrees`; classical Sylvester/Macaulay
//! resultants and binary discriminants (`oracles`) provide independent
//! ground truth for ratio tests (`verify`).

pub mod arith;
pub mod catalog;
pub mod degrees;
pub mod discriminant;
pub mod linalg;
pub mod oracles;
pub mod resultant;
pub mod torsion;
pub mod variety;
pub mod verify;

pub use arith::{MultiPoly, Rat, UniPoly};

pub use linalg::QMatrix;
