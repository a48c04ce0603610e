//! Zeros of para-orthogonal polynomials on the unit circle through the
//! `(c_n, d_n)` parametrization: positive chain sequences, enclosures for
//! the extreme zeros, support arcs and gap certificates.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod chainseq;
pub mod error;
pub mod families;
pub mod recurrence;
pub mod scaling;
pub mod transforms;

pub use bounds::{Arc, Enclosure, GapCertificate, GapVerdict, Method, RootPair, SupportArc, Violation};
pub use chainseq::{ChainKind, ChainRule, ChainSeq, Flavor, ParamSeq, ScalingSeq};
pub use error::{Error, Result, ScalingFailure};
pub use families::Family;
pub use num_complex::Complex64;
pub use recurrence::{ScaledValue, ZeroList};
pub use transforms::{CdParams, TauSeq, VerblunskySeq};
