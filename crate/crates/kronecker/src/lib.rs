//! Exact computer algebra for certifying integer polynomials of odd prime
//! degree as not solvable by radicals, together with the supporting
//! machinery: exact rational polynomial arithmetic, Sturm-chain real-root
//! counting, factorization over the rationals and over number-field towers,
//! radical chains with conjugation-invariance transforms, and certified
//! complex embeddings.

pub mod ball;
pub mod dyadic;
pub mod error;
pub mod factorq;
pub mod gfp;
pub mod hensel;
pub mod parse;
pub mod poly;
pub mod roots;
pub mod sturm;
pub mod zpoly;

pub use error::{ArithError, SturmError};
pub use parse::{format_polynomial, parse_polynomial, ParseDiagnostic};
pub use poly::{Integer, Polynomial, Rational};
pub use sturm::{count_real_roots, count_real_roots_in, isolate_real_roots, Interval, SturmChain};
