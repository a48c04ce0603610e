//! Inputs shared by the benchmarks in `benches/`.

use popuc_core::chainseq::{make_scaling, ChainSeq, ScalingSeq};
use popuc_core::transforms::family_cd;
use popuc_core::{CdParams, Complex64, Family, VerblunskySeq};

/// The table family with `b = 1 + i` at degree `n`, with its default scaling.
pub fn lambda_eta(n: usize) -> (CdParams, ScalingSeq) {
    let f = Family::LambdaEta { lambda: 1.0, eta: 1.0 };
    let cd = family_cd(&f, n).expect("closed-form parameters");
    let q = popuc_core::scaling::default_scaling_for(&f, n).expect("default scaling");
    (cd, q)
}

/// Deterministic pseudo-random `(c, d, q)` of degree `n` (no RNG dependency needed).
pub fn scrambled(n: usize) -> (CdParams, ScalingSeq) {
    let u = |i: usize, salt: f64| ((i as f64 + 1.0) * salt).sin().abs();
    let c: Vec<f64> = (0..n).map(|i| 2.0 * u(i, 12.9898) - 1.0).collect();
    let k: Vec<f64> = (0..n).map(|i| 0.1 + 0.8 * u(i, 78.233)).collect();
    let q: Vec<f64> = (0..n - 1).map(|i| 0.5 + 0.5 * u(i, 37.719)).collect();
    let d: Vec<f64> = (0..n - 1).map(|i| q[i] * (1.0 - k[i]) * k[i + 1]).collect();
    let cd = CdParams::new(c, ChainSeq::finite(d).expect("chain sequence")).expect("cd");
    let q = make_scaling(cd.chain(), q).expect("scaling");
    (cd, q)
}

/// `α ≡ -1/2` up to index `n`.
pub fn geronimus_alpha(n: usize) -> VerblunskySeq {
    VerblunskySeq::finite(vec![Complex64::new(-0.5, 0.0); n + 1]).expect("inside the disk")
}
