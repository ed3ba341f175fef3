//! Exact invariants of curves on weighted projective planes and of normal
//! surface singularities.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`]: rationals, Smith normal form, fraction-free determinants,
//!   Hirzebruch-Jung continued fractions.
//! * [`quotientsing`]: cyclic quotient singularities `1/d(a,b)`.
//! * [`wproj`]: weight normalization, vertex singularities, Bezout, strata.
//! * [`poly`]: sparse polynomials over `Q(zeta3)`, Cremona and Kummer maps,
//!   the flex collinearity witness.
//! * [`plumbing`]: decorated resolution graphs and their determinants.
//! * [`leyomdin`]: superisolated and (weighted) Le-Yomdin determinant formulas.
//! * [`bpfamily`]: Brieskorn-Pham surfaces and a family of complete
//!   intersections in `C^4`.
//! * [`fpgroups`]: finitely presented groups and coset enumeration.
//! * [`cli`]: the `wpsing` command line.
//!
//! Run any example with `cargo run --example <name>`.

pub mod bpfamily;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod fpgroups;
pub mod leyomdin;
pub mod plumbing;
pub mod poly;
pub mod quotientsing;
pub mod wproj;

pub use error::{Error, Result};
pub use exactmath::Rational;
