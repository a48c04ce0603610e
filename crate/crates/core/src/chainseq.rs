//! Positive chain sequences and their parameter sequences.
//!
//! A sequence `{d_{n+1}}` is a positive chain sequence when it factors as
//! `d_{n+1} = (1 - g_n) g_{n+1}` with `0 <= g_1 < 1` and `0 < g_n < 1` for
//! `n >= 2`. Terms are stored with the offset used throughout the crate:
//! `ChainSeq::get(n)` is `d_{n+1}` and `ParamSeq::get(n)` is `g_n`, both
//! 1-based.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result, ScalingFailure};

/// `M_1` below this value is treated as zero, i.e. a single-parameter sequence.
pub const SP_THRESHOLD: f64 = 1e-10;

/// Default convergence tolerance on `M_1` between successive horizons.
pub const DEFAULT_MAXIMAL_TOL: f64 = 1e-12;

/// Largest horizon explored when computing maximal parameters of an infinite rule.
pub const DEFAULT_HORIZON_CAP: usize = 1 << 20;

/// Generating rule of an infinite chain sequence. `term(n)` returns `d_{n+1}`.
#[derive(Clone)]
pub enum ChainRule {
    /// `d_{n+1} = value` for every `n`.
    Constant(f64),
    /// `d_{n+1} = values[(n - 1) % p]`.
    Periodic(Vec<f64>),
    /// Gegenbauer chain sequence `(1/4) n (n + 2λ + 1) / ((n + λ)(n + λ + 1))`.
    Ultraspherical(f64),
    /// Arbitrary rule. Maximal parameters are obtained numerically.
    Custom(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

impl ChainRule {
    pub fn custom<F>(f: F) -> Self
    where
        F: Fn(usize) -> f64 + Send + Sync + 'static,
    {
        ChainRule::Custom(Arc::new(f))
    }

    pub fn term(&self, n: usize) -> f64 {
        match self {
            ChainRule::Constant(v) => *v,
            ChainRule::Periodic(vals) => vals[(n - 1) % vals.len()],
            ChainRule::Ultraspherical(lambda) => ultraspherical_term(*lambda, n),
            ChainRule::Custom(f) => f(n),
        }
    }
}

impl fmt::Debug for ChainRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainRule::Constant(v) => write!(f, "Constant({v})"),
            ChainRule::Periodic(v) => write!(f, "Periodic({v:?})"),
            ChainRule::Ultraspherical(l) => write!(f, "Ultraspherical({l})"),
            ChainRule::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    Finite,
    TruncatedInfinite,
}

#[derive(Debug, Clone)]
enum Repr {
    Finite(Vec<f64>),
    Rule { rule: ChainRule, horizon: usize },
}

/// Candidate positive chain sequence `d_{n+1}`, `n = 1..=len()`.
///
/// Construction only checks positivity; whether the values actually form a
/// chain sequence is answered by [`minimal_params`].
#[derive(Debug, Clone)]
pub struct ChainSeq {
    repr: Repr,
}

impl ChainSeq {
    pub fn finite(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("chain sequence needs at least one term".into()));
        }
        if let Some(k) = values.iter().position(|v| !(*v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidInput(format!(
                "chain sequence term d_{} = {} is not positive",
                k + 2,
                values[k]
            )));
        }
        Ok(ChainSeq {
            repr: Repr::Finite(values),
        })
    }

    pub fn constant(value: f64, len: usize) -> Result<Self> {
        Self::finite(vec![value; len])
    }

    /// Infinite sequence given by `rule`, inspected up to `horizon` terms.
    pub fn rule(rule: ChainRule, horizon: usize) -> Result<Self> {
        if horizon < 2 {
            return Err(Error::InvalidInput("truncated-infinite horizon must be >= 2".into()));
        }
        if let ChainRule::Periodic(v) = &rule {
            if v.is_empty() {
                return Err(Error::InvalidInput("periodic rule needs a period".into()));
            }
        }
        if let ChainRule::Ultraspherical(lambda) = rule {
            if lambda < -0.5 {
                return Err(Error::InvalidInput(format!("ultraspherical parameter {lambda} < -1/2")));
            }
        }
        for n in 1..=horizon {
            let v = rule.term(n);
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "chain rule term d_{} = {v} is not positive",
                    n + 1
                )));
            }
        }
        Ok(ChainSeq {
            repr: Repr::Rule { rule, horizon },
        })
    }

    pub fn ultraspherical(lambda: f64, horizon: usize) -> Result<Self> {
        Self::rule(ChainRule::Ultraspherical(lambda), horizon)
    }

    pub fn kind(&self) -> ChainKind {
        match self.repr {
            Repr::Finite(_) => ChainKind::Finite,
            Repr::Rule { .. } => ChainKind::TruncatedInfinite,
        }
    }

    /// Number of stored terms, or the horizon for a rule.
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Finite(v) => v.len(),
            Repr::Rule { horizon, .. } => *horizon,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rule_ref(&self) -> Option<&ChainRule> {
        match &self.repr {
            Repr::Finite(_) => None,
            Repr::Rule { rule, .. } => Some(rule),
        }
    }

    /// `d_{n+1}`. Rules answer beyond the horizon; finite sequences panic.
    pub fn get(&self, n: usize) -> f64 {
        assert!(n >= 1, "chain sequence is indexed from n = 1");
        match &self.repr {
            Repr::Finite(v) => v[n - 1],
            Repr::Rule { rule, .. } => rule.term(n),
        }
    }

    pub fn term(&self, n: usize) -> Option<f64> {
        match &self.repr {
            Repr::Finite(v) => v.get(n.wrapping_sub(1)).copied(),
            Repr::Rule { rule, .. } => (n >= 1).then(|| rule.term(n)),
        }
    }

    /// The first `len()` terms.
    pub fn values(&self) -> Vec<f64> {
        (1..=self.len()).map(|n| self.get(n)).collect()
    }

    /// Finite prefix of `len` terms (a rule may be extended past its horizon).
    pub fn prefix(&self, len: usize) -> Result<ChainSeq> {
        match &self.repr {
            Repr::Finite(v) if len > v.len() => Err(Error::InsufficientCoefficients {
                needed: len,
                available: v.len(),
            }),
            _ => ChainSeq::finite((1..=len).map(|n| self.get(n)).collect()),
        }
    }

    /// Same sequence with a different horizon; finite sequences are truncated.
    pub fn with_horizon(&self, horizon: usize) -> Result<ChainSeq> {
        match &self.repr {
            Repr::Finite(_) => self.prefix(horizon),
            Repr::Rule { rule, .. } => ChainSeq::rule(rule.clone(), horizon),
        }
    }
}

/// Parameter sequence `g_n`, `n = 1..=len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSeq {
    values: Vec<f64>,
    flavor: Flavor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Minimal,
    Maximal,
    Generic,
}

impl ParamSeq {
    /// Checks `0 <= g_1 < 1`, `0 < g_n < 1` for interior `n` and `0 < g_last <= 1`.
    pub fn new(values: Vec<f64>, flavor: Flavor) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("empty parameter sequence".into()));
        }
        if !(values[0] >= 0.0 && values[0] < 1.0) {
            return Err(Error::InvalidInput(format!("g_1 = {} outside [0, 1)", values[0])));
        }
        let last = values.len() - 1;
        if let Some(k) = (1..values.len()).find(|&k| !admissible(values[k], k == last)) {
            return Err(Error::InvalidInput(format!(
                "g_{} = {} outside (0, 1)",
                k + 1,
                values[k]
            )));
        }
        if flavor == Flavor::Minimal && values[0] != 0.0 {
            return Err(Error::InvalidInput("minimal parameter sequence must start at 0".into()));
        }
        Ok(ParamSeq { values, flavor })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `g_n`, 1-based.
    pub fn get(&self, n: usize) -> f64 {
        self.values[n - 1]
    }

    /// `(1 - g_n) g_{n+1}` for `n = 1..len()`.
    pub fn chain_terms(&self) -> Vec<f64> {
        self.values.windows(2).map(|w| (1.0 - w[0]) * w[1]).collect()
    }
}

/// How the last parameter of a finite sequence is constrained.
///
/// A finite chain sequence may end on `g_{N+1} = 1`; this is what makes the
/// Ismail-Li constant attainable. Prefixes of infinite sequences must keep
/// every parameter inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    Open,
    Closed,
}

/// Slack allowed above 1 for a closed terminal parameter.
const TERMINAL_SLACK: f64 = 1e-10;

/// `g_{n+1} = d_{n+1} / (1 - g_n)` from `g_1 = start`, checking every new
/// parameter lies in `(0, 1)`. Returns all parameters, `start` included,
/// or the first `n` with `g_{n+1}` outside the allowed range.
pub fn forward_params<I>(start: f64, terms: I, terminal: Terminal) -> Result<Vec<f64>>
where
    I: IntoIterator<Item = f64>,
{
    let mut out = vec![start];
    let mut g = start;
    let mut it = terms.into_iter().enumerate().peekable();
    while let Some((k, d)) = it.next() {
        g = d / (1.0 - g);
        let last = it.peek().is_none();
        if !admissible(g, last && terminal == Terminal::Closed) {
            return Err(Error::NotChainSequence { index: k + 1 });
        }
        out.push(g.min(1.0));
    }
    Ok(out)
}

fn admissible(g: f64, closed: bool) -> bool {
    if closed {
        g > 0.0 && g <= 1.0 + TERMINAL_SLACK
    } else {
        g > 0.0 && g < 1.0
    }
}

/// First `n` at which the minimal parameter sequence leaves its range, if any.
/// Same recursion as [`forward_params`] without storing the parameters.
pub fn chain_failure<I>(terms: I, terminal: Terminal) -> Option<usize>
where
    I: IntoIterator<Item = f64>,
{
    let mut g = 0.0;
    let mut it = terms.into_iter().enumerate().peekable();
    while let Some((k, d)) = it.next() {
        g = d / (1.0 - g);
        let last = it.peek().is_none();
        if !admissible(g, last && terminal == Terminal::Closed) {
            return Some(k + 1);
        }
    }
    None
}

impl ChainSeq {
    fn terminal(&self) -> Terminal {
        match self.kind() {
            ChainKind::Finite => Terminal::Closed,
            ChainKind::TruncatedInfinite => Terminal::Open,
        }
    }
}

/// Minimal parameter sequence `g_1 = 0, ..., g_{N+1}` of the first `N = d.len()` terms.
pub fn minimal_params(d: &ChainSeq) -> Result<ParamSeq> {
    let g = forward_params(0.0, (1..=d.len()).map(|n| d.get(n)), d.terminal())?;
    Ok(ParamSeq {
        values: g,
        flavor: Flavor::Minimal,
    })
}

pub fn is_chain_sequence(d: &ChainSeq) -> bool {
    chain_failure((1..=d.len()).map(|n| d.get(n)), d.terminal()).is_none()
}

/// Maximal parameter sequence `M_1, ..., M_{N+1}` with `N = d.len()`.
///
/// Finite sequences use the backward recursion `M_{N+1} = 1`,
/// `M_n = 1 - d_{n+1} / M_{n+1}`. Named infinite rules are evaluated in
/// closed form. Custom rules repeat the backward recursion at doubling
/// horizons (up to [`DEFAULT_HORIZON_CAP`]) and accept the first estimate whose
/// change in `M_1`, either raw or after Aitken extrapolation across horizons,
/// falls below `tol`.
pub fn maximal_params(d: &ChainSeq, tol: f64) -> Result<ParamSeq> {
    maximal_params_capped(d, tol, DEFAULT_HORIZON_CAP)
}

pub fn maximal_params_capped(d: &ChainSeq, tol: f64, cap: usize) -> Result<ParamSeq> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    minimal_params(d)?;
    let n = d.len();
    let values = match &d.repr {
        Repr::Finite(v) => backward_from_one(|k| v[k - 1], n, n),
        Repr::Rule { rule, .. } => match rule {
            ChainRule::Constant(c) => periodic_maximal(std::slice::from_ref(c), n)?,
            ChainRule::Periodic(p) => periodic_maximal(p, n)?,
            ChainRule::Ultraspherical(lambda) => (1..=n + 1)
                .map(|k| {
                    let k = k as f64;
                    (k + 2.0 * lambda) / (2.0 * (k + lambda))
                })
                .collect(),
            ChainRule::Custom(f) => doubling_maximal(|k| f(k), n, tol, cap)?,
        },
    };
    finish_maximal(values)
}

fn finish_maximal(mut values: Vec<f64>) -> Result<ParamSeq> {
    // round-off can leave M_1 a hair below zero for single-parameter sequences
    if values[0] < 0.0 && values[0] > -SP_THRESHOLD {
        values[0] = 0.0;
    }
    ParamSeq::new(values, Flavor::Maximal).map_err(|e| Error::InvariantBreach(format!("maximal parameters: {e}")))
}

/// Backward recursion from `M_{horizon+1} = 1`, returning `M_1..=M_{keep+1}`.
fn backward_from_one<F: Fn(usize) -> f64>(term: F, horizon: usize, keep: usize) -> Vec<f64> {
    let mut out = vec![0.0; keep + 1];
    let mut m = 1.0;
    if horizon <= keep {
        out[horizon] = m;
    }
    for k in (1..=horizon).rev() {
        m = 1.0 - term(k) / m;
        if k <= keep + 1 {
            out[k - 1] = m;
        }
    }
    out
}

/// Maximal parameters of a periodic sequence: `M_1` is the larger fixed point
/// of one backward period, `M ↦ (M - d)/M` composed over the period.
fn periodic_maximal(period: &[f64], n: usize) -> Result<Vec<f64>> {
    let p = period.len();
    // 2x2 matrix of the Möbius map M_1 = T(M_{p+1}), built from the innermost step out
    let mut mat = [[1.0, 0.0], [0.0, 1.0]];
    for k in 1..=p {
        let step = [[1.0, -period[k - 1]], [1.0, 0.0]];
        mat = mul2(mat, step);
    }
    let [[a, b], [c, e]] = mat;
    // c M^2 + (e - a) M - b = 0
    let disc = (e - a) * (e - a) + 4.0 * b * c;
    if disc < -1e-14 {
        return Err(Error::NotChainSequence { index: p });
    }
    let root = (-(e - a) + disc.max(0.0).sqrt()) / (2.0 * c);
    let mut m1 = vec![root];
    // propagate forward within the period from the fixed point via the backward identity
    // M_{k+1} = d_{k+1}/(1 - M_k); this stays within one period so errors do not compound
    let mut m = root;
    for k in 1..p {
        m = period[k - 1] / (1.0 - m);
        m1.push(m);
    }
    Ok((0..=n).map(|k| m1[k % p]).collect())
}

fn mul2(x: [[f64; 2]; 2], y: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ],
        [
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ],
    ]
}

fn doubling_maximal<F: Fn(usize) -> f64>(term: F, n: usize, tol: f64, cap: usize) -> Result<Vec<f64>> {
    let mut horizon = (2 * n).max(32);
    let mut raw: Vec<Vec<f64>> = Vec::new();
    let mut aitken1: Vec<Vec<f64>> = Vec::new();
    let mut aitken2: Vec<Vec<f64>> = Vec::new();
    while horizon <= cap.max(2 * n) {
        let v = backward_from_one(&term, horizon, n);
        raw.push(v);
        let len = raw.len();
        if len >= 2 && (raw[len - 1][0] - raw[len - 2][0]).abs() < tol {
            return Ok(raw.pop().unwrap());
        }
        if len >= 3 {
            aitken1.push(aitken(&raw[len - 3], &raw[len - 2], &raw[len - 1]));
            let l1 = aitken1.len();
            if l1 >= 2 && (aitken1[l1 - 1][0] - aitken1[l1 - 2][0]).abs() < tol {
                return Ok(aitken1.pop().unwrap());
            }
            if l1 >= 3 {
                aitken2.push(aitken(&aitken1[l1 - 3], &aitken1[l1 - 2], &aitken1[l1 - 1]));
                let l2 = aitken2.len();
                if l2 >= 2 && (aitken2[l2 - 1][0] - aitken2[l2 - 2][0]).abs() < tol {
                    return Ok(aitken2.pop().unwrap());
                }
            }
        }
        horizon *= 2;
    }
    Err(Error::NonConvergence {
        what: "maximal parameter M_1",
        tol,
        horizon: horizon / 2,
    })
}

fn aitken(x0: &[f64], x1: &[f64], x2: &[f64]) -> Vec<f64> {
    x0.iter()
        .zip(x1)
        .zip(x2)
        .map(|((&a, &b), &c)| {
            let den = (c - b) - (b - a);
            if den.abs() <= 1e-300 || !den.is_finite() {
                c
            } else {
                c - (c - b) * (c - b) / den
            }
        })
        .collect()
}

/// Non-single-parameter test: `M_1 > SP_THRESHOLD`.
pub fn is_non_sp(d: &ChainSeq, tol: f64) -> Result<bool> {
    let m = maximal_params(d, tol)?;
    Ok(m.get(1) > SP_THRESHOLD)
}

/// Whether a given parameter sequence of `d` falls short of the maximal one,
/// `g_1 < M_1`. For the parameters obtained from Verblunsky coefficients this
/// is exactly the presence of a mass point at `z = 1`.
pub fn is_below_maximal(d: &ChainSeq, g: &ParamSeq, tol: f64) -> Result<bool> {
    let m = maximal_params(d, tol)?;
    Ok(m.get(1) - g.get(1) > SP_THRESHOLD)
}

/// Comparison test: `0 < d_{n+1} <= dhat_{n+1}` for every `n`.
pub fn comparison_test(d: &ChainSeq, dhat: &ChainSeq) -> Result<bool> {
    if d.len() != dhat.len() {
        return Err(Error::LengthMismatch {
            expected: dhat.len(),
            actual: d.len(),
        });
    }
    Ok((1..=d.len()).all(|n| {
        let x = d.get(n);
        x > 0.0 && x <= dhat.get(n)
    }))
}

/// Scaling sequence `q_{n+1}`, `n = 1..=len()`, validated against a chain sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingSeq {
    values: Vec<f64>,
}

impl ScalingSeq {
    /// `q ≡ 1`, a scaling sequence for every positive chain sequence.
    pub fn trivial(len: usize) -> Self {
        ScalingSeq { values: vec![1.0; len] }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `q_{n+1}`, `n >= 1`.
    pub fn get(&self, n: usize) -> f64 {
        self.values[n - 1]
    }

    /// Re-checks this sequence against `d` over `n = 1..=terms`.
    pub fn validate_for(&self, d: &ChainSeq, terms: usize) -> Result<()> {
        if self.len() < terms {
            return Err(Error::InsufficientCoefficients {
                needed: terms,
                available: self.len(),
            });
        }
        if d.len() < terms && d.kind() == ChainKind::Finite {
            return Err(Error::InsufficientCoefficients {
                needed: terms,
                available: d.len(),
            });
        }
        validate_scaling(d, &self.values[..terms])
    }
}

fn validate_scaling(d: &ChainSeq, q: &[f64]) -> Result<()> {
    if let Some(k) = q.iter().position(|x| !(*x > 0.0 && *x <= 1.0)) {
        return Err(Error::InvalidScaling {
            index: k + 1,
            reason: ScalingFailure::OutOfRange,
        });
    }
    if let Some(n) = chain_failure(q.iter().enumerate().map(|(k, qk)| d.get(k + 1) / qk), d.terminal()) {
        return Err(Error::InvalidScaling {
            index: n,
            reason: ScalingFailure::NotChain,
        });
    }
    Ok(())
}

/// Validates `q` as a scaling sequence for the first `q.len()` terms of `d`.
pub fn make_scaling(d: &ChainSeq, q: Vec<f64>) -> Result<ScalingSeq> {
    if q.is_empty() {
        return Err(Error::InvalidInput("empty scaling sequence".into()));
    }
    if d.kind() == ChainKind::Finite && q.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: d.len(),
            actual: q.len(),
        });
    }
    validate_scaling(d, &q)?;
    Ok(ScalingSeq { values: q })
}

fn ultraspherical_term(lambda: f64, n: usize) -> f64 {
    let n = n as f64;
    0.25 * n * (n + 2.0 * lambda + 1.0) / ((n + lambda) * (n + lambda + 1.0))
}

/// Gegenbauer chain-sequence term `d_{n+1}^{(λ)}`.
pub fn ultraspherical_chain(lambda: f64, n: usize) -> Result<f64> {
    if lambda < -0.5 || lambda.is_nan() {
        return Err(Error::InvalidInput(format!("ultraspherical parameter {lambda} < -1/2")));
    }
    if n == 0 {
        return Err(Error::InvalidInput("ultraspherical chain is indexed from n = 1".into()));
    }
    Ok(ultraspherical_term(lambda, n))
}

/// `1 / (4 cos²(π/(N+1)))`: the supremum of constant finite chain sequences with `N - 1` terms.
pub fn ismail_li_constant(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidInput("Ismail-Li constant needs N >= 2".into()));
    }
    let c = (std::f64::consts::PI / (n as f64 + 1.0)).cos();
    Ok(1.0 / (4.0 * c * c))
}
