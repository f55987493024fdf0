//! Exact computations with lattice diagram determinants: the alternants
//! `Delta_L`, the modules spanned by their partial derivatives, shift
//! operators built from symmetric functions of the derivatives, and explicit
//! bases of the Y-degree-zero parts.
//!
//! All arithmetic is over the rationals; nothing is approximated.

pub mod basis;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod harmonic;
pub mod poly;
pub mod rational;
pub mod span;

pub use diagram::{Canonical, Cell, LatticeDiagram, Partition};
pub use error::{Error, Result};
pub use poly::{Alphabet, Monomial, Polynomial, SymKind, Var};
pub use rational::Rational;
pub use span::SpanBasis;
