//! The recurrences for `R_n` on the circle and `W_n` on `[-1, 1]`, and the zeros of `W_n`.

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::Arc;
use crate::error::{Error, Result};
use crate::transforms::CdParams;

pub const DEFAULT_XTOL: f64 = 1e-12;

const RESCALE_HI: f64 = 1e150;
const RESCALE_LO: f64 = 1e-150;

/// `mantissa * 2^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    pub mantissa: f64,
    pub exponent: i64,
}

impl ScaledValue {
    /// May overflow to infinity or underflow to zero.
    pub fn to_f64(self) -> f64 {
        let e = self.exponent.clamp(i32::MIN as i64, i32::MAX as i64) as i32;
        self.mantissa * 2f64.powi(e)
    }

    pub fn signum(self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// `log2 |value|`.
    pub fn log2_abs(self) -> f64 {
        self.mantissa.abs().log2() + self.exponent as f64
    }
}

/// Exponent `k` with `2^k <= |x| < 2^{k+1}`.
fn binary_exponent(x: f64) -> i32 {
    x.abs().log2().floor() as i32
}

/// Runs the `W` recurrence to degree `n` and hands each successive value
/// (with the running exponent) to `visit`.
fn run_w<F: FnMut(usize, f64, i64)>(cd: &CdParams, n: usize, x: f64, mut visit: F) {
    let s = (1.0 - x * x).max(0.0).sqrt();
    let (mut prev, mut cur, mut exp) = (0.0f64, 1.0f64, 0i64);
    visit(0, cur, exp);
    for k in 0..n {
        let d = if k == 0 { 0.0 } else { cd.d(k) };
        let next = (x - cd.c(k + 1) * s) * cur - d * prev;
        prev = cur;
        cur = next;
        let a = cur.abs();
        if a > RESCALE_HI || (a < RESCALE_LO && a > 0.0) {
            let e = binary_exponent(cur);
            let f = 2f64.powi(-e);
            cur *= f;
            prev *= f;
            exp += e as i64;
        }
        visit(k + 1, cur, exp);
    }
}

/// `W_n(x)` from `W_{-1} = 0`, `W_0 = 1`,
/// `W_{k+1}(x) = (x - c_{k+1}√(1-x²)) W_k(x) - d_{k+1} W_{k-1}(x)`.
pub fn eval_w(cd: &CdParams, n: usize, x: f64) -> Result<ScaledValue> {
    cd.require(n)?;
    check_x(x)?;
    let mut out = ScaledValue {
        mantissa: 1.0,
        exponent: 0,
    };
    run_w(cd, n, x, |k, v, e| {
        if k == n {
            out = ScaledValue {
                mantissa: v,
                exponent: e,
            }
        }
    });
    Ok(out)
}

fn check_x(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("x = {x} outside [-1, 1]")))
    }
}

/// Number of zeros of `W_n` in `(x, 1)`, read off as the sign changes of
/// `W_0(x), ..., W_n(x)`. A vanishing term takes the sign opposite to its predecessor.
pub fn count_zeros_above(cd: &CdParams, n: usize, x: f64) -> Result<usize> {
    cd.require(n)?;
    check_x(x)?;
    let mut changes = 0;
    let mut last = 1.0f64;
    run_w(cd, n, x, |k, v, _| {
        if k == 0 {
            return;
        }
        let s = if v == 0.0 { -last } else { v.signum() };
        if s != last {
            changes += 1;
        }
        last = s;
    });
    Ok(changes)
}

/// `R_n(z)` from `R_{-1} = 0`, `R_0 = 1`,
/// `R_{k+1}(z) = ((1 + ic_{k+1}) z + (1 - ic_{k+1})) R_k(z) - 4 d_{k+1} z R_{k-1}(z)`.
///
/// Evaluated in plain complex arithmetic; for large `n` the magnitude grows like `2^n`.
pub fn eval_r(cd: &CdParams, n: usize, z: Complex64) -> Result<Complex64> {
    cd.require(n)?;
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    for k in 0..n {
        let c = cd.c(k + 1);
        let d = if k == 0 { 0.0 } else { cd.d(k) };
        let next = (Complex64::new(1.0, c) * z + Complex64::new(1.0, -c)) * cur - 4.0 * d * z * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Zeros of `W_n` and their angles on the circle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroList {
    pub n: usize,
    /// `x_{n,1} > ... > x_{n,n}`.
    pub x: Vec<f64>,
    /// `θ_{n,j} = 2 arccos x_{n,j}`, increasing.
    pub theta: Vec<f64>,
}

impl ZeroList {
    fn from_x(n: usize, x: Vec<f64>) -> Self {
        let theta = x.iter().map(|v| 2.0 * v.clamp(-1.0, 1.0).acos()).collect();
        ZeroList { n, x, theta }
    }

    pub fn largest(&self) -> f64 {
        self.x[0]
    }

    pub fn smallest(&self) -> f64 {
        self.x[self.n - 1]
    }
}

/// All zeros of `W_N`, isolated by splitting `[-1, 1]` on the Sturm count
/// until each piece holds one zero, which is then bisected to width `xtol`.
pub fn zeros_w(cd: &CdParams, n: usize, xtol: f64) -> Result<ZeroList> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if !(xtol > 0.0) {
        return Err(Error::InvalidInput("xtol must be positive".into()));
    }
    cd.require(n)?;
    let mut zeros = Vec::with_capacity(n);
    // (lo, hi, zeros above lo, zeros above hi), upper pieces first
    let mut stack = vec![(
        -1.0,
        1.0,
        count_zeros_above(cd, n, -1.0)?,
        count_zeros_above(cd, n, 1.0)?,
    )];
    if stack[0].2 != n || stack[0].3 != 0 {
        return Err(Error::InvariantBreach(format!("W_{n} has zeros outside (-1, 1)")));
    }
    while let Some((lo, hi, above_lo, above_hi)) = stack.pop() {
        match above_lo - above_hi {
            0 => {}
            1 => zeros.push(bisect_count(cd, n, above_lo, lo, hi, xtol)?),
            k => {
                let mid = 0.5 * (lo + hi);
                if hi - lo <= xtol || mid <= lo || mid >= hi {
                    // a cluster narrower than the tolerance
                    zeros.extend(std::iter::repeat_n(mid, k));
                    continue;
                }
                let above_mid = count_zeros_above(cd, n, mid)?;
                stack.push((lo, mid, above_lo, above_mid));
                stack.push((mid, hi, above_mid, above_hi));
            }
        }
    }
    Ok(ZeroList::from_x(n, zeros))
}

/// The zero lists of `W_1, ..., W_N`.
///
/// The `j`-th zero of `W_n` is isolated by bisection on the Sturm count
/// "at least `j` zeros above `x`", starting from the interlacing bracket.
/// Zeros of consecutive levels can agree to nearly machine precision, so
/// an edge that lands on the wrong side is widened to the next edge.
pub fn zeros_w_levels(cd: &CdParams, n: usize, xtol: f64) -> Result<Vec<ZeroList>> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if !(xtol > 0.0) {
        return Err(Error::InvalidInput("xtol must be positive".into()));
    }
    cd.require(n)?;
    let mut levels: Vec<ZeroList> = Vec::with_capacity(n);
    let mut prev: Vec<f64> = Vec::new();
    for level in 1..=n {
        let mut edges = Vec::with_capacity(level + 1);
        edges.push(1.0);
        edges.extend_from_slice(&prev);
        edges.push(-1.0);
        let mut zeros: Vec<f64> = Vec::with_capacity(level);
        for j in 1..=level {
            let (mut hi_i, mut lo_i) = (j - 1, j);
            while lo_i < level && count_zeros_above(cd, level, edges[lo_i])? < j {
                lo_i += 1;
            }
            while hi_i > 0 && count_zeros_above(cd, level, edges[hi_i])? >= j {
                hi_i -= 1;
            }
            let x = bisect_count(cd, level, j, edges[lo_i], edges[hi_i], xtol)?;
            if let Some(&last) = zeros.last() {
                if x > last {
                    return Err(Error::InvariantBreach(format!(
                        "zeros of W_{level} out of order at j = {j}"
                    )));
                }
            }
            zeros.push(x);
        }
        levels.push(ZeroList::from_x(level, zeros.clone()));
        prev = zeros;
    }
    Ok(levels)
}

/// Point where the count of zeros above `x` drops below `j`.
fn bisect_count(cd: &CdParams, n: usize, j: usize, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64> {
    if count_zeros_above(cd, n, lo)? < j || count_zeros_above(cd, n, hi)? >= j {
        return Err(Error::InvariantBreach(format!(
            "W_{n}: no bracket for zero {j} on [{lo}, {hi}]; the interlacing brackets failed"
        )));
    }
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_zeros_above(cd, n, mid)? >= j {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Largest zero of `W_n`, by bisection on the sign-change count.
pub fn largest_zero_w(cd: &CdParams, n: usize, xtol: f64) -> Result<f64> {
    cd.require(n)?;
    let (mut lo, mut hi) = (-1.0f64, 1.0f64);
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_zeros_above(cd, n, mid)? >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Zeros of `R_N` as angles in `(0, 2π)`, with `|R_N(e^{iθ})| / 2^N` at each.
pub fn zeros_r(cd: &CdParams, n: usize, xtol: f64) -> Result<(ZeroList, Vec<f64>)> {
    let zl = zeros_w(cd, n, xtol)?;
    let scale = 2f64.powi(-(n.min(1000) as i32));
    let residuals = zl
        .theta
        .iter()
        .map(|t| eval_r(cd, n, Complex64::from_polar(1.0, *t)).map(|r| r.norm() * scale))
        .collect::<Result<Vec<_>>>()?;
    Ok((zl, residuals))
}

/// Number of zero angles inside `arc`.
pub fn count_zeros_in_arc(zl: &ZeroList, arc: &Arc) -> usize {
    zl.theta.iter().filter(|t| arc.contains(**t)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainseq::ChainSeq;
    use std::f64::consts::PI;

    fn chebyshev(n: usize) -> CdParams {
        CdParams::new(vec![0.0; n], ChainSeq::constant(0.25, n - 1).unwrap()).unwrap()
    }

    #[test]
    fn low_degrees() {
        let cd = chebyshev(4);
        assert_eq!(eval_w(&cd, 0, 0.3).unwrap().to_f64(), 1.0);
        assert_eq!(eval_w(&cd, 1, 0.3).unwrap().to_f64(), 0.3);
        let z = Complex64::new(0.2, -0.7);
        assert_eq!(eval_r(&cd, 0, z).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(eval_r(&cd, 1, z).unwrap(), z + 1.0);
    }

    #[test]
    fn chebyshev_zeros() {
        let cd = chebyshev(5);
        let zl = zeros_w(&cd, 5, 1e-14).unwrap();
        for (j, x) in zl.x.iter().enumerate() {
            assert!((x - ((j + 1) as f64 * PI / 6.0).cos()).abs() < 1e-13);
        }
        let cd = chebyshev(2);
        let zl = zeros_w(&cd, 2, 1e-14).unwrap();
        assert!((zl.theta[0] - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!((zl.theta[1] - 4.0 * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn scaled_values_do_not_overflow() {
        // d tiny makes W_n ~ x^n; at x = 1e-3 that underflows long before n = 2000
        let c = vec![0.0; 2000];
        let cd = CdParams::new(c, ChainSeq::finite(vec![1e-6; 1999]).unwrap()).unwrap();
        let w = eval_w(&cd, 2000, 1e-3).unwrap();
        assert!(w.mantissa != 0.0);
        assert!(w.log2_abs() < -10_000.0);
    }

    #[test]
    fn sturm_count_matches_zeros() {
        let cd = CdParams::new(
            vec![0.3, -0.2, 0.5, 0.1, -0.4, 0.0],
            ChainSeq::finite(vec![0.2, 0.15, 0.22, 0.1, 0.24]).unwrap(),
        )
        .unwrap();
        let zl = zeros_w(&cd, 6, 1e-13).unwrap();
        for k in 0..6 {
            let between = if k + 1 < 6 {
                0.5 * (zl.x[k] + zl.x[k + 1])
            } else {
                -0.999_999
            };
            assert_eq!(count_zeros_above(&cd, 6, between).unwrap(), k + 1);
        }
        assert!((largest_zero_w(&cd, 6, 1e-13).unwrap() - zl.x[0]).abs() < 1e-12);
    }

    #[test]
    fn arc_counting() {
        let cd = chebyshev(6);
        let zl = zeros_w(&cd, 6, 1e-13).unwrap();
        assert_eq!(count_zeros_in_arc(&zl, &Arc::closed(1.0, 1.0)), 0);
        assert_eq!(count_zeros_in_arc(&zl, &Arc::closed(0.0, 2.0 * PI)), 6);
        assert_eq!(count_zeros_in_arc(&zl, &Arc::closed(-0.5, 1.0)), 1);
    }
}
