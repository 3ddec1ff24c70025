//! Exact symbolic engine for S-polyregular functions of a quaternionic
//! variable.
//!
//! Functions are noncommutative polynomials in `q` and `qbar` with rational
//! quaternion constants ([`expr`]). Each is analysed one slice `C_I` at a time
//! ([`slice`]): restricted to an exact polynomial in the real coordinates of
//! `q = x + I y`, differentiated with the slice Cauchy-Riemann operator, and
//! decomposed. [`structure`] holds the closed forms for sandwich monomials
//! `q^n a q^m` and for dot products of slice regular polynomials; [`oracle`]
//! recomputes everything by literal differentiation and [`verify`] runs the
//! randomized cross-checks between the two.

pub mod cli;
pub mod error;
pub mod expr;
pub mod oracle;
pub mod quat;
pub mod slice;
pub mod structure;
pub mod verify;

pub use error::{Error, ParseError};
pub use expr::{eval_expr, expr_to_srpoly, parse_expr, parse_quaternion, print_expr, srpoly_to_expr, Expr, SRPoly};
pub use quat::{default_probes, ImagUnit, PerpSplit, ProbePair, Quaternion, Rational, SliceComplex};
pub use slice::{Level, QbarDecomp, SlicePoly, SplitPair};
