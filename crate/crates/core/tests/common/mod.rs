#![allow(dead_code)]

use popuc_core::chainseq::{make_scaling, ChainSeq, ScalingSeq};
use popuc_core::CdParams;
use rand::Rng;

/// Random `(c, d, q)` with `d = q·d̂` for a generic chain sequence `d̂`, so
/// `q` is a valid scaling by construction.
pub fn random_instance<R: Rng>(rng: &mut R, n: usize) -> (CdParams, ScalingSeq) {
    let c: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
    let k: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..0.95)).collect();
    let q: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.05..=1.0)).collect();
    let d: Vec<f64> = (0..n - 1).map(|i| q[i] * (1.0 - k[i]) * k[i + 1]).collect();
    let d = ChainSeq::finite(d).unwrap();
    let cd = CdParams::new(c, d).unwrap();
    let q = make_scaling(cd.chain(), q).unwrap();
    (cd, q)
}

pub fn constant_cd(c: f64, d: f64, n: usize) -> CdParams {
    CdParams::new(vec![c; n], ChainSeq::constant(d, n - 1).unwrap()).unwrap()
}
