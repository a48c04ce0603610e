//! Constant scalings and the default scaling choices per family.

use std::f64::consts::PI;

use serde::Serialize;

use crate::chainseq::{self, ChainKind, ChainSeq, ScalingSeq, DEFAULT_HORIZON_CAP};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::recurrence::largest_zero_w;
use crate::transforms::CdParams;

/// Within this distance of the threshold a constant `q` is reported as boundary.
pub const BOUNDARY_TOL: f64 = 1e-12;

const ZERO_TOL: f64 = 1e-15;

fn symmetric_cd(d: &ChainSeq, n: usize) -> Result<CdParams> {
    if n < 2 {
        return Err(Error::InvalidInput("threshold needs N >= 2".into()));
    }
    let d = match d.kind() {
        ChainKind::Finite => d.prefix(n - 1)?,
        ChainKind::TruncatedInfinite => d.with_horizon((n - 1).max(2))?.prefix(n - 1)?,
    };
    CdParams::new(vec![0.0; n], d)
}

/// `x_{N,1}²`, the squared largest zero of `W_N` built with `c ≡ 0`.
///
/// A constant `q ∈ (0, 1]` is a scaling sequence for `d_2, ..., d_N` iff it
/// exceeds this value.
pub fn constant_scaling_threshold(d: &ChainSeq, n: usize) -> Result<f64> {
    let cd = symmetric_cd(d, n)?;
    let x = largest_zero_w(&cd, n, ZERO_TOL)?;
    Ok(x * x)
}

/// Limit of [`constant_scaling_threshold`] as `N → ∞`, by doubling the horizon
/// until two successive values agree to `tol`.
pub fn constant_scaling_threshold_infinite(d: &ChainSeq, tol: f64) -> Result<f64> {
    if d.kind() == ChainKind::Finite {
        return Err(Error::InvalidInput(
            "infinite threshold needs a rule-based chain sequence".into(),
        ));
    }
    let mut n = 16;
    let mut prev = constant_scaling_threshold(d, n)?;
    while n < DEFAULT_HORIZON_CAP {
        n *= 2;
        let cur = constant_scaling_threshold(d, n)?;
        if (cur - prev).abs() < tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NonConvergence {
        what: "constant scaling threshold",
        tol,
        horizon: n,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScalingVerdict {
    Valid,
    Invalid,
    /// `|q - threshold| <= BOUNDARY_TOL`; the exact answer is "invalid" but rounding decides.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub degree: usize,
    pub threshold: f64,
    pub q: Option<f64>,
    pub verdict: Option<ScalingVerdict>,
}

/// Threshold for `N` and, if `q` is given, whether the constant `q` is admissible.
pub fn classify_constant_scaling(d: &ChainSeq, n: usize, q: Option<f64>) -> Result<ThresholdReport> {
    let threshold = constant_scaling_threshold(d, n)?;
    let verdict = q.map(|q| {
        if !(q > 0.0 && q <= 1.0) {
            ScalingVerdict::Invalid
        } else if (q - threshold).abs() <= BOUNDARY_TOL {
            ScalingVerdict::Boundary
        } else if q > threshold {
            ScalingVerdict::Valid
        } else {
            ScalingVerdict::Invalid
        }
    });
    Ok(ThresholdReport {
        degree: n,
        threshold,
        q,
        verdict,
    })
}

/// `d^{(-1/2)}_{n+1} / cos²(π/(2N))`, `n = 1..N-1`: a finite chain sequence
/// that dominates `d^{(λ)}` for `-1/2 <= λ < 0`.
pub fn legendre_dominant(n: usize) -> Result<ChainSeq> {
    if n < 2 {
        return Err(Error::InvalidInput("dominating sequence needs N >= 2".into()));
    }
    let c = (PI / (2.0 * n as f64)).cos();
    let c2 = c * c;
    let v = (1..n)
        .map(|k| chainseq::ultraspherical_chain(-0.5, k).map(|d| d / c2))
        .collect::<Result<Vec<_>>>()?;
    ChainSeq::finite(v)
}

/// The family's chain sequence `d_2, ..., d_N` in closed form.
pub fn family_chain(family: &Family, n: usize) -> Result<ChainSeq> {
    let v = (1..n)
        .map(|k| family.d_closed(k))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NoDefaultScaling(format!("{} has no closed-form chain sequence", family.name())))?;
    ChainSeq::finite(v)
}

/// Default scaling `q_2, ..., q_N` for a family, validated against its chain sequence.
///
/// * Geronimus (rotated, or real `α`): `q ≡ 4d`.
/// * Lambda-eta with `λ >= 0`: `q = d / (1/(4cos²(π/(N+1))))`.
/// * Lambda-eta with `λ < 0`: `q = d / legendre_dominant(N)`.
/// * Alternating with `b1 = b2 = b`: `q ≡ 1 - b²`; with `b1 b2 > 0` and
///   `|b1|, |b2| >= 1/2`: `q = 4d`.
pub fn default_scaling_for(family: &Family, n: usize) -> Result<ScalingSeq> {
    family.validate()?;
    if n < 2 {
        return Err(Error::InvalidInput("scaling needs N >= 2".into()));
    }
    let none = |why: &str| Err(Error::NoDefaultScaling(format!("{}: {why}", family.name())));
    let q: Vec<f64> = match *family {
        Family::Geronimus { im, rotated, .. } => {
            if !rotated && im != 0.0 {
                return none("non-real α without rotation has non-constant parameters");
            }
            let d = family_chain(family, n)?;
            d.values().iter().map(|v| 4.0 * v).collect()
        }
        Family::LambdaEta { lambda, .. } => {
            let d = family_chain(family, n)?;
            if lambda >= 0.0 {
                let dhat = chainseq::ismail_li_constant(n)?;
                d.values().iter().map(|v| v / dhat).collect()
            } else {
                let dhat = legendre_dominant(n)?;
                d.values().iter().zip(dhat.values()).map(|(v, h)| v / h).collect()
            }
        }
        Family::Alternating { b1, b2, .. } => {
            let d = family_chain(family, n)?;
            if b1 == b2 {
                vec![1.0 - b1 * b1; n - 1]
            } else if b1 * b2 > 0.0 && b1.abs() >= 0.5 && b2.abs() >= 0.5 {
                d.values().iter().map(|v| 4.0 * v).collect()
            } else {
                return none("no standard dominating sequence for these b1, b2");
            }
        }
    };
    let d = family_chain(family, n)?;
    chainseq::make_scaling(&d, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_threshold_is_chebyshev() {
        for n in [2usize, 5, 17] {
            let d = ChainSeq::constant(0.25, n - 1).unwrap();
            let t = constant_scaling_threshold(&d, n).unwrap();
            let x = (PI / (n as f64 + 1.0)).cos();
            assert!((t - x * x).abs() < 1e-13, "{n}: {t}");
        }
    }

    #[test]
    fn two_term_threshold() {
        let d = ChainSeq::constant(0.2, 1).unwrap();
        assert!((constant_scaling_threshold(&d, 2).unwrap() - 0.2).abs() < 1e-14);
    }

    #[test]
    fn boundary_classification() {
        let d = ChainSeq::constant(0.25, 4).unwrap();
        let x = (PI / 6.0).cos();
        let r = classify_constant_scaling(&d, 5, Some(x * x)).unwrap();
        assert_eq!(r.verdict, Some(ScalingVerdict::Boundary));
        let r = classify_constant_scaling(&d, 5, Some(x * x + 1e-6)).unwrap();
        assert_eq!(r.verdict, Some(ScalingVerdict::Valid));
    }

    #[test]
    fn defaults_validate() {
        for f in [
            Family::LambdaEta { lambda: 1.0, eta: 0.5 },
            Family::LambdaEta {
                lambda: -0.25,
                eta: 0.5,
            },
            Family::LambdaEta { lambda: 0.0, eta: 0.5 },
            Family::Alternating {
                b1: 0.3,
                b2: 0.3,
                c: 1.0,
            },
            Family::Alternating {
                b1: 0.6,
                b2: 0.8,
                c: 1.0,
            },
            Family::Geronimus {
                re: 0.3,
                im: 0.4,
                rotated: true,
            },
        ] {
            for n in [2usize, 3, 10, 40] {
                default_scaling_for(&f, n).unwrap_or_else(|e| panic!("{f:?} N={n}: {e}"));
            }
        }
        assert!(default_scaling_for(
            &Family::Alternating {
                b1: 0.1,
                b2: 0.3,
                c: 1.0
            },
            5
        )
        .is_err());
    }
}
