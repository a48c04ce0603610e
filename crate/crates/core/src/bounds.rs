//! Enclosures for the extreme zeros of `W_N`, support arcs, and gap certificates.

use std::f64::consts::PI;

use serde::Serialize;

use crate::chainseq::{chain_failure, ScalingSeq, Terminal};
use crate::error::{Error, Result};
use crate::transforms::{self, CdParams, VerblunskySeq};

const TWO_PI: f64 = 2.0 * PI;

/// Arc `A(θ1, θ2)` (open) or `A[θ1, θ2]` (closed) traversed counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Arc {
    pub theta1: f64,
    pub theta2: f64,
    pub closed: bool,
}

impl Arc {
    pub fn closed(theta1: f64, theta2: f64) -> Self {
        Arc {
            theta1,
            theta2,
            closed: true,
        }
    }

    pub fn open(theta1: f64, theta2: f64) -> Self {
        Arc {
            theta1,
            theta2,
            closed: false,
        }
    }

    /// Checks `0 <= θ2 - θ1 <= 2π`.
    pub fn new(theta1: f64, theta2: f64, closed: bool) -> Result<Self> {
        let len = theta2 - theta1;
        if !(0.0..=TWO_PI).contains(&len) {
            return Err(Error::InvalidInput(format!(
                "arc [{theta1}, {theta2}] must satisfy 0 <= theta2 - theta1 <= 2π"
            )));
        }
        Ok(Arc { theta1, theta2, closed })
    }

    pub fn length(&self) -> f64 {
        self.theta2 - self.theta1
    }

    /// Shifts both endpoints by a multiple of `2π` so that `θ2 ∈ (0, 2π]`.
    pub fn normalized(&self) -> Arc {
        let shift = ((self.theta2 / TWO_PI).ceil() - 1.0) * TWO_PI;
        Arc {
            theta1: self.theta1 - shift,
            theta2: self.theta2 - shift,
            closed: self.closed,
        }
    }

    /// A degenerate arc (`θ1 = θ2`) is treated as empty.
    pub fn contains(&self, theta: f64) -> bool {
        let len = self.length();
        if len <= 0.0 {
            return false;
        }
        let off = (theta - self.theta1).rem_euclid(TWO_PI);
        if len >= TWO_PI {
            return self.closed || off > 0.0;
        }
        if self.closed {
            off <= len
        } else {
            off > 0.0 && off < len
        }
    }
}

/// Roots `u⁻ <= u⁺` of `(1 - q)u² - (a + b)u + (ab - q)`, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootPair {
    pub u_minus: f64,
    pub u_plus: f64,
}

/// Roots of `(1 - q)u² - (a + b)u + (ab - q) = 0` for `q ∈ [0, 1]`.
///
/// At `q = 1` the equation is linear; the missing root is `+∞` when
/// `a + b > 0`, `-∞` when `a + b < 0`, and both roots are infinite when `a + b = 0`.
pub fn quadratic_roots(a: f64, b: f64, q: f64) -> Result<RootPair> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidInput(format!("q = {q} outside [0, 1]")));
    }
    let s = a + b;
    let p = a * b - q;
    if q == 1.0 {
        return Ok(if s > 0.0 {
            RootPair {
                u_minus: p / s,
                u_plus: f64::INFINITY,
            }
        } else if s < 0.0 {
            RootPair {
                u_minus: f64::NEG_INFINITY,
                u_plus: p / s,
            }
        } else {
            RootPair {
                u_minus: f64::NEG_INFINITY,
                u_plus: f64::INFINITY,
            }
        });
    }
    let lead = 1.0 - q;
    // non-negative analytically; clamp rounding
    let disc = (s * s - 4.0 * lead * p).max(0.0).sqrt();
    let big = if s >= 0.0 {
        (s + disc) / (2.0 * lead)
    } else {
        (s - disc) / (2.0 * lead)
    };
    let small = if big == 0.0 { 0.0 } else { p / (lead * big) };
    Ok(RootPair {
        u_minus: big.min(small),
        u_plus: big.max(small),
    })
}

/// `u / √(1 + u²)`, with `±∞ ↦ ±1`.
pub fn cot_to_x(u: f64) -> f64 {
    if u.is_infinite() {
        u.signum()
    } else if u.abs() > 1.0 {
        u.signum() / (1.0 + 1.0 / (u * u)).sqrt()
    } else {
        u / (1.0 + u * u).sqrt()
    }
}

/// `x / √(1 - x²)`, with `±1 ↦ ±∞`.
pub fn x_to_cot(x: f64) -> f64 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    if s == 0.0 {
        x.signum() * f64::INFINITY
    } else {
        x / s
    }
}

/// `(w² - 1)/(w² + 1)` for `w >= 0`, with `∞ ↦ 1`.
fn half_angle_x(w: f64) -> f64 {
    if w.is_infinite() {
        1.0
    } else if w > 1.0 {
        let r = 1.0 / (w * w);
        (1.0 - r) / (1.0 + r)
    } else {
        (w * w - 1.0) / (w * w + 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Thm44,
    Thm46,
    Cor45,
    Cor47,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Thm44 => "thm44",
            Method::Thm46 => "thm46",
            Method::Cor45 => "cor45",
            Method::Cor47 => "cor47",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm44" => Ok(Method::Thm44),
            "thm46" => Ok(Method::Thm46),
            "cor45" => Ok(Method::Cor45),
            "cor47" => Ok(Method::Cor47),
            other => Err(Error::InvalidInput(format!("unknown method {other:?}"))),
        }
    }
}

/// The zeros of `W_N` lie in `(a, b)`; equivalently those of `R_N` lie in
/// `A(2 arccos b, 2 arccos a)`.
///
/// `argmin`/`argmax` are the indices `n` of the terms that attain the
/// extremes, the smallest such `n` on ties. They are `None` when the bound
/// is the trivial `±1` without any attaining term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Enclosure {
    pub degree: usize,
    pub a: f64,
    pub b: f64,
    pub argmin: Option<usize>,
    pub argmax: Option<usize>,
    pub method: Method,
}

impl Enclosure {
    pub fn arc(&self) -> Arc {
        Arc::open(
            2.0 * self.b.clamp(-1.0, 1.0).acos(),
            2.0 * self.a.clamp(-1.0, 1.0).acos(),
        )
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a < x && x < self.b
    }
}

fn check_degree(cd: &CdParams, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput("bounds need degree N >= 2".into()));
    }
    cd.require(n)
}

/// Running minimum/maximum with smallest-index tie breaking.
#[derive(Debug, Clone, Copy)]
struct Extremes {
    a: f64,
    b: f64,
    argmin: Option<usize>,
    argmax: Option<usize>,
}

impl Extremes {
    fn new() -> Self {
        Extremes {
            a: f64::INFINITY,
            b: f64::NEG_INFINITY,
            argmin: None,
            argmax: None,
        }
    }

    fn push(&mut self, n: usize, lo: f64, hi: f64) {
        if lo < self.a {
            self.a = lo;
            self.argmin = Some(n);
        }
        if hi > self.b {
            self.b = hi;
            self.argmax = Some(n);
        }
    }

    fn finish(self, degree: usize, method: Method) -> Result<Enclosure> {
        if !(self.a < self.b) || self.a < -1.0 || self.b > 1.0 {
            return Err(Error::InvariantBreach(format!(
                "enclosure ({}, {}) is not an interval inside [-1, 1]",
                self.a, self.b
            )));
        }
        Ok(Enclosure {
            degree,
            a: self.a,
            b: self.b,
            argmin: self.argmin,
            argmax: self.argmax,
            method,
        })
    }
}

/// `A_N = min u⁻_n/√(1 + (u⁻_n)²)` and `B_N = max u⁺_n/√(1 + (u⁺_n)²)` over
/// `2 <= n <= N`, where `u^±_n` are the roots for `(c_{n-1}, c_n, q_n)`.
pub fn enclosure_thm44(cd: &CdParams, q: &ScalingSeq, n: usize) -> Result<Enclosure> {
    check_degree(cd, n)?;
    q.validate_for(cd.chain(), n - 1)?;
    thm44_unchecked(cd, |k| q.get(k - 1), n, Method::Thm44)
}

fn thm44_unchecked<Q: Fn(usize) -> f64>(cd: &CdParams, q: Q, n: usize, method: Method) -> Result<Enclosure> {
    let mut ext = Extremes::new();
    for k in 2..=n {
        let r = quadratic_roots(cd.c(k - 1), cd.c(k), q(k))?;
        ext.push(k, cot_to_x(r.u_minus), cot_to_x(r.u_plus));
    }
    ext.finish(n, method)
}

/// The weaker enclosure built from `u_{1,n}` and `v_{1,n}`, `1 <= n <= N`, with
/// `q^{(1,N)}_n = max(q_n, q_{n+1})` in the interior.
pub fn enclosure_thm46(cd: &CdParams, q: &ScalingSeq, n: usize) -> Result<Enclosure> {
    check_degree(cd, n)?;
    q.validate_for(cd.chain(), n - 1)?;
    let qn = |k: usize| q.get(k - 1);
    let mut ext = Extremes::new();
    for k in 1..=n {
        let qq = if k == 1 {
            qn(2)
        } else if k == n {
            qn(n)
        } else {
            qn(k).max(qn(k + 1))
        };
        let c = cd.c(k);
        let root = (c * c + (1.0 - qq)).sqrt();
        let sq = qq.sqrt();
        let u = (c + root) / (1.0 + sq);
        let den = -c + root;
        let v = if den > 0.0 { (1.0 + sq) / den } else { f64::INFINITY };
        ext.push(k, half_angle_x(u), half_angle_x(v));
    }
    ext.finish(n, Method::Thm46)
}

/// `q ≡ 1` version of [`enclosure_thm44`]. One side is trivially `±1`; if
/// `c_n + c_{n+1}` does not keep a strict sign the result is `(-1, 1)`.
pub fn enclosure_cor45(cd: &CdParams, n: usize) -> Result<Enclosure> {
    check_degree(cd, n)?;
    let all_pos = (1..n).all(|k| cd.c(k) + cd.c(k + 1) > 0.0);
    let all_neg = (1..n).all(|k| cd.c(k) + cd.c(k + 1) < 0.0);
    if !(all_pos || all_neg) {
        return Ok(Enclosure {
            degree: n,
            a: -1.0,
            b: 1.0,
            argmin: None,
            argmax: None,
            method: Method::Cor45,
        });
    }
    let mut e = thm44_unchecked(cd, |_| 1.0, n, Method::Cor45)?;
    if all_pos {
        e.argmax = None;
    } else {
        e.argmin = None;
    }
    Ok(e)
}

/// `q ≡ 1` version of [`enclosure_thm46`]: `u_{1,n} = (c_n + |c_n|)/2`, `v_{1,n} = 2/(|c_n| - c_n)`.
pub fn enclosure_cor47(cd: &CdParams, n: usize) -> Result<Enclosure> {
    check_degree(cd, n)?;
    let mut ext = Extremes::new();
    for k in 1..=n {
        let c = cd.c(k);
        let u = 0.5 * (c + c.abs());
        let den = c.abs() - c;
        let v = if den > 0.0 { 2.0 / den } else { f64::INFINITY };
        ext.push(k, half_angle_x(u), half_angle_x(v));
    }
    ext.finish(n, Method::Cor47)
}

/// Dispatches on `method`; the corollaries ignore `q`.
pub fn enclosure(cd: &CdParams, q: &ScalingSeq, n: usize, method: Method) -> Result<Enclosure> {
    match method {
        Method::Thm44 => enclosure_thm44(cd, q, n),
        Method::Thm46 => enclosure_thm46(cd, q, n),
        Method::Cor45 => enclosure_cor45(cd, n),
        Method::Cor47 => enclosure_cor47(cd, n),
    }
}

/// `(x - c_n√(1-x²))(x - c_{n+1}√(1-x²))` with `n` 1-based.
fn h(cd: &CdParams, n: usize, x: f64) -> f64 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    (x - cd.c(n) * s) * (x - cd.c(n + 1) * s)
}

/// Exact criterion for the zeros of `W_N` to lie in `(a, b)`:
/// `a/√(1-a²) < c_1 < b/√(1-b²)` and `d_{n+1}/h_n(x)`, `n = 1..N-1`, is a
/// finite positive chain sequence at both `x = a` and `x = b`.
pub fn general_zero_bounds(cd: &CdParams, n: usize, a: f64, b: f64) -> Result<bool> {
    check_degree(cd, n)?;
    if !(-1.0 <= a && a < b && b <= 1.0) {
        return Err(Error::InvalidInput(format!("need -1 <= A < B <= 1, got ({a}, {b})")));
    }
    let c1 = cd.c(1);
    if !(x_to_cot(a) < c1 && c1 < x_to_cot(b)) {
        return Ok(false);
    }
    let chain_at = |x: f64| chain_failure((1..n).map(|k| cd.d(k) / h(cd, k, x)), Terminal::Closed).is_none();
    Ok(chain_at(a) && chain_at(b))
}

/// Two-interval enclosure: besides the conditions of [`general_zero_bounds`]
/// on `(A, B)`, the coefficients alternate around the window `[C, D]`,
/// `A' < c_{2n-ℓ} < C' < D' < c_{2n-1+ℓ} < B'` (primes denoting `x/√(1-x²)`)
/// for some `ℓ ∈ {0, 1}` and all `1 <= n <= N/2`. When this returns true
/// the zeros of every `W_n`, `n <= N`, avoid `[C, D]`.
pub fn two_interval_enclosure(cd: &CdParams, a: f64, b: f64, c: f64, d: f64, n: usize) -> Result<bool> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("degree {n} must be even")));
    }
    if !(a < c && c < d && d < b) {
        return Err(Error::InvalidInput("need A < C < D < B".into()));
    }
    if !general_zero_bounds(cd, n, a, b)? {
        return Ok(false);
    }
    let (ta, tb, tc, td) = (x_to_cot(a), x_to_cot(b), x_to_cot(c), x_to_cot(d));
    let holds = |l: usize| {
        (1..=n / 2).all(|k| {
            let low = cd.c(2 * k - l);
            let high = cd.c(2 * k - 1 + l);
            ta < low && low < tc && td < high && high < tb
        })
    };
    Ok(holds(0) || holds(1))
}

/// Support arc estimate at a finite horizon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupportArc {
    /// `A[2 arccos B_N, 2 arccos A_N]`.
    pub arc: Arc,
    pub enclosure: Enclosure,
    /// `|A_N - A_{N/2}|` and `|B_N - B_{N/2}|` both below the tolerance.
    pub stabilized: bool,
    pub delta: f64,
}

/// Closed arc containing every zero of `R_n`, `n <= N`, and, in the limit,
/// the support of `μ(0; ·)`. Reports whether the endpoints moved by less
/// than `tol` over the last doubling of the horizon.
pub fn support_arc(cd: &CdParams, q: &ScalingSeq, n_max: usize, method: Method, tol: f64) -> Result<SupportArc> {
    let e = enclosure(cd, q, n_max, method)?;
    let half = (n_max / 2).max(2);
    let prev = enclosure(cd, q, half, method)?;
    let delta = (e.a - prev.a).abs().max((e.b - prev.b).abs());
    let en = e.arc();
    Ok(SupportArc {
        arc: Arc::closed(en.theta1, en.theta2),
        enclosure: e,
        stabilized: delta < tol,
        delta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `cot((2π + ϑ1 - ϑ2)/2) < c_1` fails.
    FirstCoefficient,
    /// `𝔪_n` left `(0, 1)`.
    Parameter { n: usize },
    /// `x* - c_n √(1 - x*²)` vanished: the arc endpoint sits exactly on the boundary case.
    Degenerate { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GapVerdict {
    Violated(Violation),
    VerifiedTo { n: usize },
}

/// Outcome of testing whether `A(ϑ1, ϑ2)` misses the support of `μ`.
///
/// A violation is conclusive; `VerifiedTo` only covers the computed prefix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapCertificate {
    pub verdict: GapVerdict,
    /// `𝔪_1, 𝔪_2, ...` up to the horizon or the first failure.
    pub m: Vec<f64>,
    pub c1_condition: bool,
    pub x_star: f64,
    /// The arc after normalization to `ϑ2 ∈ (0, 2π]`.
    pub arc: Arc,
}

impl GapCertificate {
    pub fn is_verified(&self) -> bool {
        matches!(self.verdict, GapVerdict::VerifiedTo { .. })
    }
}

/// Tests the gap `A(ϑ1, ϑ2)` through the parameters of the measure rotated so
/// that `e^{iϑ2}` moves to `z = 1`: with `x* = cos((2π + ϑ1 - ϑ2)/2)`,
/// `𝔪_0 = 0` and `𝔪_n = 𝔡_{n+1}(x*)/(1 - 𝔪_{n-1})`, the arc is a gap iff
/// every `𝔪_n ∈ (0, 1)` and `cot((2π + ϑ1 - ϑ2)/2) < c_1` (rotated values).
pub fn gap_certificate(alpha: &VerblunskySeq, theta1: f64, theta2: f64, n: usize) -> Result<GapCertificate> {
    if !(theta2 > 0.0) {
        return Err(Error::InvalidInput(format!("theta2 = {theta2} must be positive")));
    }
    let arc = Arc::new(theta1, theta2, false)?;
    if arc.length() <= 0.0 {
        return Err(Error::InvalidInput("gap arc must be nonempty".into()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("horizon must be at least 1".into()));
    }
    let arc = arc.normalized();
    let coeffs = VerblunskySeq::Finite(alpha.take(n + 1)?);
    let cd = transforms::rotated_cd(&coeffs, arc.theta2)?;

    let phi = 0.5 * (TWO_PI + arc.theta1 - arc.theta2);
    let (x, s) = (phi.cos(), phi.sin());
    let f = |k: usize| x - cd.c(k) * s;
    let c1_condition = f(1) < 0.0;

    let mut m = Vec::with_capacity(n);
    let mut prev = 0.0;
    let mut failure = None;
    for k in 1..=n {
        let (fk, fk1) = (f(k), f(k + 1));
        if fk == 0.0 || fk1 == 0.0 {
            failure = Some(Violation::Degenerate {
                n: if fk == 0.0 { k } else { k + 1 },
            });
            break;
        }
        let mk = cd.d(k) / (fk * fk1) / (1.0 - prev);
        m.push(mk);
        if !(mk > 0.0 && mk < 1.0) {
            failure = Some(Violation::Parameter { n: k });
            break;
        }
        prev = mk;
    }
    let verdict = if !c1_condition {
        GapVerdict::Violated(Violation::FirstCoefficient)
    } else if let Some(v) = failure {
        GapVerdict::Violated(v)
    } else {
        GapVerdict::VerifiedTo { n }
    };
    Ok(GapCertificate {
        verdict,
        m,
        c1_condition,
        x_star: x,
        arc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainseq::{make_scaling, ChainSeq};

    fn cd_const(c: f64, d: f64, n: usize) -> CdParams {
        CdParams::new(vec![c; n], ChainSeq::constant(d, n - 1).unwrap()).unwrap()
    }

    #[test]
    fn roots() {
        let r = quadratic_roots(0.0, 0.0, 0.75).unwrap();
        assert!((r.u_minus + 3f64.sqrt()).abs() < 1e-14 && (r.u_plus - 3f64.sqrt()).abs() < 1e-14);
        let r = quadratic_roots(1.0, 2.0, 1.0).unwrap();
        assert_eq!((r.u_minus, r.u_plus), (1.0 / 3.0, f64::INFINITY));
        let r = quadratic_roots(-1.0, -2.0, 1.0).unwrap();
        assert_eq!((r.u_minus, r.u_plus), (f64::NEG_INFINITY, -1.0 / 3.0));
        let r = quadratic_roots(0.5, -0.5, 1.0).unwrap();
        assert_eq!((r.u_minus, r.u_plus), (f64::NEG_INFINITY, f64::INFINITY));
        let r = quadratic_roots(0.3, -0.7, 0.0).unwrap();
        assert!((r.u_minus + 0.7).abs() < 1e-15 && (r.u_plus - 0.3).abs() < 1e-15);
        assert!(quadratic_roots(0.0, 0.0, 1.5).is_err());
        // nearly cancelling a + b keeps the small root accurate
        let r = quadratic_roots(1e8, -1e8 + 1e-3, 0.5).unwrap();
        let resid = |u: f64| 0.5 * u * u - (1e-3) * u + (1e8 * (-1e8 + 1e-3) - 0.5);
        assert!(resid(r.u_minus).abs() / (1e16) < 1e-12 && resid(r.u_plus).abs() / 1e16 < 1e-12);
    }

    #[test]
    fn symmetric_thm44() {
        let cd = cd_const(0.0, 3.0 / 16.0, 12);
        let q = make_scaling(cd.chain(), vec![0.75; 11]).unwrap();
        let e = enclosure_thm44(&cd, &q, 12).unwrap();
        assert!((e.a + 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((e.b - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert_eq!((e.argmin, e.argmax), (Some(2), Some(2)));
        let arc = e.arc();
        assert!((arc.theta1 - PI / 3.0).abs() < 1e-13 && (arc.theta2 - 5.0 * PI / 3.0).abs() < 1e-13);
    }

    #[test]
    fn symmetric_thm46() {
        let cd = cd_const(0.0, 0.1, 8);
        let q = make_scaling(cd.chain(), vec![0.5; 7]).unwrap();
        let e = enclosure_thm46(&cd, &q, 8).unwrap();
        assert!((e.a + e.b).abs() < 1e-14);
        let u = 0.5f64.sqrt() / (1.0 + 0.5f64.sqrt());
        assert!((e.a - (u * u - 1.0) / (u * u + 1.0)).abs() < 1e-14);
    }

    #[test]
    fn cor45_cases() {
        let e = enclosure_cor45(&cd_const(1.0, 0.2, 6), 6).unwrap();
        assert_eq!((e.a, e.b), (0.0, 1.0));
        let cd = CdParams::new(vec![0.5, -0.7, 0.5, 0.2], ChainSeq::constant(0.2, 3).unwrap()).unwrap();
        let e = enclosure_cor45(&cd, 4).unwrap();
        assert_eq!((e.a, e.b), (-1.0, 1.0));
    }

    #[test]
    fn cor47_negative_c() {
        let cd = cd_const(-0.5, 0.2, 5);
        let e = enclosure_cor47(&cd, 5).unwrap();
        assert_eq!(e.a, -1.0);
        let v: f64 = 2.0;
        assert!((e.b - (v * v - 1.0) / (v * v + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn arc_membership() {
        let a = Arc::closed(-0.5, 0.5);
        assert!(a.contains(0.0) && a.contains(2.0 * PI - 0.2) && a.contains(0.5));
        assert!(!a.contains(1.0));
        let o = Arc::open(-0.5, 0.5);
        assert!(!o.contains(0.5) && o.contains(0.49));
        assert!(!Arc::closed(1.0, 1.0).contains(1.0));
        let n = Arc::open(5.0, 2.0 * PI + 1.0).normalized();
        assert!((n.theta2 - 1.0).abs() < 1e-15 && n.theta1 < 0.0);
        assert!(Arc::new(0.0, 7.0, true).is_err());
    }

    #[test]
    fn general_bounds_agree_with_enclosure() {
        let cd = cd_const(0.0, 3.0 / 16.0, 10);
        let x = 3f64.sqrt() / 2.0;
        assert!(general_zero_bounds(&cd, 10, -x, x).unwrap());
        assert!(!general_zero_bounds(&cd, 10, -0.5, 0.5).unwrap());
    }
}
