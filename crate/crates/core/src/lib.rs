//! Exact homological invariants of local rings of embedding codepth at most three.
//!
//! The crate has two independent computational lanes that are cross-checked
//! against each other:
//!
//! * closed rational forms for Poincare series `P^R_k(t)` and Bass series
//!   `I_R(t)` attached to a classification of the Koszul homology algebra
//!   (`classtable`, `powser`, `growth`),
//! * brute-force minimal resolutions, either over a finite graded-commutative
//!   algebra in DG mode or over a graded quotient ring in ring mode
//!   (`galg`, `resolve`, `koszul`).
//!
//! All arithmetic is exact: series coefficients are `BigInt`, field
//! coefficients are either rationals or elements of a prime field `F_p` with
//! `p` an odd prime below `2^31`.

pub mod classtable;
pub mod field;
pub mod galg;
pub mod growth;
pub mod koszul;
pub mod linalg;
pub mod powser;
pub mod report;
pub mod resolve;


pub use classtable::{AdmissibilityVerdict, ClassId, RingInvariants};
pub use field::{Field, FieldSpec, Fp, Rat};
pub use powser::{LaurentPoly, RationalSeries};
