//! Maps between Verblunsky coefficients and the `(c_n, d_{n+1})` parametrization.

use num_complex::Complex64;

use crate::chainseq::{self, ChainSeq, Flavor, ParamSeq};
use crate::error::{Error, Result};
use crate::families::Family;

/// Guard for `|1 - τα|`, which cannot vanish for coefficients inside the disk.
const DIVISION_GUARD: f64 = 1e-15;

/// Verblunsky coefficients `α_0, α_1, ...`, either listed or produced by a named family.
#[derive(Debug, Clone, PartialEq)]
pub enum VerblunskySeq {
    Finite(Vec<Complex64>),
    Family { family: Family, horizon: usize },
}

impl VerblunskySeq {
    pub fn finite(values: Vec<Complex64>) -> Result<Self> {
        if let Some(k) = values.iter().position(|a| !(a.norm() < 1.0)) {
            return Err(Error::OutsideDisk { index: k });
        }
        Ok(VerblunskySeq::Finite(values))
    }

    pub fn family(family: Family, horizon: usize) -> Result<Self> {
        family.validate()?;
        Ok(VerblunskySeq::Family { family, horizon })
    }

    pub fn len(&self) -> usize {
        match self {
            VerblunskySeq::Finite(v) => v.len(),
            VerblunskySeq::Family { horizon, .. } => *horizon,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn family_ref(&self) -> Option<&Family> {
        match self {
            VerblunskySeq::Finite(_) => None,
            VerblunskySeq::Family { family, .. } => Some(family),
        }
    }

    /// The first `len()` coefficients.
    pub fn values(&self) -> Vec<Complex64> {
        self.take(self.len()).expect("len() coefficients are always available")
    }

    /// The first `n` coefficients; families extend past their horizon.
    pub fn take(&self, n: usize) -> Result<Vec<Complex64>> {
        match self {
            VerblunskySeq::Finite(v) if n > v.len() => Err(Error::InsufficientCoefficients {
                needed: n,
                available: v.len(),
            }),
            VerblunskySeq::Finite(v) => Ok(v[..n].to_vec()),
            VerblunskySeq::Family { family, .. } => Ok(family.coefficients(n)),
        }
    }

    /// Same sequence with `α_n` replaced by `e^{i(n+1)ϑ} α_n`.
    pub fn rotated(&self, theta: f64) -> VerblunskySeq {
        VerblunskySeq::Finite(rotate(&self.values(), theta))
    }
}

fn rotate(alpha: &[Complex64], theta: f64) -> Vec<Complex64> {
    alpha
        .iter()
        .enumerate()
        .map(|(n, a)| a * Complex64::from_polar(1.0, (n as f64 + 1.0) * theta))
        .collect()
}

/// Unimodular sequence `τ_0, ..., τ_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TauSeq {
    values: Vec<Complex64>,
    rotation: Option<f64>,
}

impl TauSeq {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn rotation(&self) -> Option<f64> {
        self.rotation
    }

    /// `τ_n`, 0-based like the recursion.
    pub fn get(&self, n: usize) -> Complex64 {
        self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `τ_0 = 1`, `τ_n = (τ_{n-1} - conj α_{n-1}) / (1 - τ_{n-1} α_{n-1})`, or the
/// rotated recursion started at `τ_0 = e^{iϑ}`. Each step is renormalized.
pub fn tau_from_verblunsky(alpha: &VerblunskySeq, rotation: Option<f64>) -> Result<TauSeq> {
    tau_from_slice(&alpha.values(), rotation)
}

fn tau_from_slice(alpha: &[Complex64], rotation: Option<f64>) -> Result<TauSeq> {
    let mut values = Vec::with_capacity(alpha.len() + 1);
    let mut tau = match rotation {
        Some(t) => Complex64::from_polar(1.0, t),
        None => Complex64::new(1.0, 0.0),
    };
    values.push(tau);
    for (k, a) in alpha.iter().enumerate() {
        let ta = tau * a;
        let den = Complex64::new(1.0, 0.0) - ta;
        if den.norm() < DIVISION_GUARD {
            return Err(Error::Degenerate { index: k + 1 });
        }
        tau = match rotation {
            Some(t) => Complex64::from_polar(1.0, t) * tau * (Complex64::new(1.0, 0.0) - ta.conj()) / den,
            None => (tau - a.conj()) / den,
        };
        tau /= tau.norm();
        values.push(tau);
    }
    Ok(TauSeq { values, rotation })
}

/// The `(c, d)` parametrization with the parameter sequence and phases it came from.
///
/// With `N = len()`, holds `c_1..c_N`, `d_2..d_N` and `g_1..g_N`, enough to
/// run every recurrence up to degree `N`.
#[derive(Debug, Clone)]
pub struct CdParams {
    c: Vec<f64>,
    d: ChainSeq,
    g: ParamSeq,
    tau: TauSeq,
}

impl CdParams {
    /// Parametrization given directly. `d` must supply at least `c.len() - 1`
    /// terms and be a positive chain sequence; `g` is taken to be its
    /// minimal parameter sequence and `τ` follows from the phase identity
    /// `τ_n = τ_{n-1}(1 - ic_n)/(1 + ic_n)`.
    pub fn new(c: Vec<f64>, d: ChainSeq) -> Result<Self> {
        if c.len() < 2 {
            return Err(Error::InvalidInput("need at least c_1, c_2 and d_2".into()));
        }
        if let Some(k) = c.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!("c_{} is not finite", k + 1)));
        }
        let d = truncate_chain(&d, c.len() - 1)?;
        let g = chainseq::minimal_params(&d)?;
        let g = ParamSeq::new(g.values()[..c.len()].to_vec(), Flavor::Minimal)?;
        let tau = tau_from_c(&c);
        Ok(CdParams { c, d, g, tau })
    }

    /// Parametrization from `c_n` and a parameter sequence `g_n`, `n = 1..=N`,
    /// with `d_{n+1} = (1 - g_n) g_{n+1}`.
    pub fn from_params(c: Vec<f64>, g: ParamSeq) -> Result<Self> {
        if c.len() < 2 {
            return Err(Error::InvalidInput("need at least c_1, c_2 and d_2".into()));
        }
        if g.len() != c.len() {
            return Err(Error::LengthMismatch {
                expected: c.len(),
                actual: g.len(),
            });
        }
        let d = ChainSeq::finite(g.chain_terms())?;
        let tau = tau_from_c(&c);
        Ok(CdParams { c, d, g, tau })
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// `c_n`, 1-based.
    pub fn c(&self, n: usize) -> f64 {
        self.c[n - 1]
    }

    /// `d_{n+1}`, 1-based.
    pub fn d(&self, n: usize) -> f64 {
        self.d.get(n)
    }

    pub fn c_values(&self) -> &[f64] {
        &self.c
    }

    pub fn chain(&self) -> &ChainSeq {
        &self.d
    }

    pub fn params(&self) -> &ParamSeq {
        &self.g
    }

    pub fn tau(&self) -> &TauSeq {
        &self.tau
    }

    /// First `n` terms, for sweeps over the degree.
    pub fn prefix(&self, n: usize) -> Result<CdParams> {
        if n > self.len() {
            return Err(Error::InsufficientCoefficients {
                needed: n,
                available: self.len(),
            });
        }
        if n < 2 {
            return Err(Error::InvalidInput("need at least c_1, c_2 and d_2".into()));
        }
        let g = ParamSeq::new(self.g.values()[..n].to_vec(), self.g.flavor())?;
        let tau = TauSeq {
            values: self.tau.values[..=n].to_vec(),
            rotation: self.tau.rotation,
        };
        Ok(CdParams {
            c: self.c[..n].to_vec(),
            d: self.d.prefix(n - 1)?,
            g,
            tau,
        })
    }

    /// Checks that `degree` coefficients are present.
    pub fn require(&self, degree: usize) -> Result<()> {
        if degree > self.len() {
            Err(Error::InsufficientCoefficients {
                needed: degree,
                available: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

fn truncate_chain(d: &ChainSeq, len: usize) -> Result<ChainSeq> {
    match d.kind() {
        chainseq::ChainKind::TruncatedInfinite if d.len() >= len && len >= 2 => d.with_horizon(len),
        _ => d.prefix(len),
    }
}

fn tau_from_c(c: &[f64]) -> TauSeq {
    let mut values = Vec::with_capacity(c.len() + 1);
    let mut tau = Complex64::new(1.0, 0.0);
    values.push(tau);
    for &cn in c {
        tau *= Complex64::new(1.0, -cn) / Complex64::new(1.0, cn);
        tau /= tau.norm();
        values.push(tau);
    }
    TauSeq { values, rotation: None }
}

/// `c_n = -Im(τ_{n-1}α_{n-1}) / (1 - Re(τ_{n-1}α_{n-1}))`,
/// `g_n = |1 - τ_{n-1}α_{n-1}|² / (2(1 - Re(τ_{n-1}α_{n-1})))` and
/// `d_{n+1} = (1 - g_n) g_{n+1}`, for `n = 1..=alpha.len()`.
pub fn cd_from_verblunsky(alpha: &VerblunskySeq, rotation: Option<f64>) -> Result<CdParams> {
    cd_from_slice(&alpha.values(), rotation)
}

fn cd_from_slice(alpha: &[Complex64], rotation: Option<f64>) -> Result<CdParams> {
    if alpha.len() < 2 {
        return Err(Error::InvalidInput("need at least two Verblunsky coefficients".into()));
    }
    if let Some(k) = alpha.iter().position(|a| !(a.norm() < 1.0)) {
        return Err(Error::OutsideDisk { index: k });
    }
    let tau = tau_from_slice(alpha, rotation)?;
    let mut c = Vec::with_capacity(alpha.len());
    let mut g = Vec::with_capacity(alpha.len());
    for (k, a) in alpha.iter().enumerate() {
        let w = tau.get(k) * a;
        // 1 - Re w > 0 since |w| < 1
        let one_minus_re = 1.0 - w.re;
        c.push(-w.im / one_minus_re);
        g.push(0.5 * (Complex64::new(1.0, 0.0) - w).norm_sqr() / one_minus_re);
    }
    let d: Vec<f64> = g.windows(2).map(|w| (1.0 - w[0]) * w[1]).collect();
    let g =
        ParamSeq::new(g, Flavor::Generic).map_err(|e| Error::InvariantBreach(format!("parameter sequence: {e}")))?;
    let d = ChainSeq::finite(d).map_err(|e| Error::InvariantBreach(format!("chain sequence: {e}")))?;
    Ok(CdParams { c, d, g, tau })
}

/// `(c, d)` parameters of a named family, from its closed form when one is known.
///
/// The `τ` recursion is unstable whenever the measure has a mass point at
/// `z = 1`: the true orbit is then the repelling one, and rounding in `α`
/// grows geometrically with `n`. Closed forms avoid the issue entirely.
pub fn family_cd(family: &Family, n: usize) -> Result<CdParams> {
    family.validate()?;
    let closed: Option<(Vec<f64>, Vec<f64>)> = (1..=n)
        .map(|k| Some((family.c_closed(k)?, family.g_closed(k)?)))
        .collect::<Option<Vec<_>>>()
        .map(|pairs| pairs.into_iter().unzip());
    match closed {
        Some((c, g)) => CdParams::from_params(c, ParamSeq::new(g, Flavor::Generic)?),
        None => cd_from_verblunsky(&VerblunskySeq::family(*family, n)?, None),
    }
}

/// Parametrization of the rotated measure: `cd_from_verblunsky(alpha, Some(ϑ2))`.
pub fn rotated_cd(alpha: &VerblunskySeq, theta2: f64) -> Result<CdParams> {
    if !(theta2 > 0.0 && theta2 <= 2.0 * std::f64::consts::PI) {
        return Err(Error::InvalidInput(format!("rotation angle {theta2} outside (0, 2π]")));
    }
    cd_from_verblunsky(alpha, Some(theta2))
}

/// Recovers the Verblunsky coefficients of the measure `μ(t; ·)` whose mass at
/// `z = 1` is `t`.
///
/// The chain sequence is augmented by `d_1 = (1 - t) M_1`, with `M_1` the
/// first maximal parameter of `cd.chain()`, and its minimal parameters
/// `m_n` give `α_{n-1} = (1 - 2m_n - ic_n) / ((1 - ic_n) τ_{n-1})`.
pub fn verblunsky_from_cd(cd: &CdParams, t: f64, tol: f64) -> Result<VerblunskySeq> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::InvalidInput(format!("mass parameter t = {t} outside [0, 1)")));
    }
    if t == 0.0 && cd.chain().kind() == chainseq::ChainKind::Finite {
        // the maximal parameters of a finite sequence end at 1, i.e. |α_{N-1}| = 1
        return Err(Error::InvalidInput(
            "t = 0 needs an infinite chain sequence; a finite one puts the last coefficient on the circle".into(),
        ));
    }
    let maximal = chainseq::maximal_params(cd.chain(), tol)?;
    if maximal.get(1) <= chainseq::SP_THRESHOLD {
        return Err(Error::SingleParameter { t });
    }
    let m = mass_family_params(cd, &maximal, t)?;
    alpha_from_params(cd, &m)
}

/// Parameters `m_n^{(t)}`, `n = 1..=N`, of `d` started at `(1 - t) M_1`.
///
/// Iterating `m_{n+1} = d_{n+1}/(1 - m_n)` forward from a head close to `M_1`
/// amplifies rounding geometrically. Instead, `1 - m_n = u_n / u_{n-1}` where
/// `u` solves `u_{n+1} = u_n - d_{n+1} u_{n-1}`, and the solution for head
/// `(1 - t) M_1` is `t u^{min} + (1 - t) u^{max}`. Both pieces are positive,
/// so mixing them loses nothing.
fn mass_family_params(cd: &CdParams, maximal: &ParamSeq, t: f64) -> Result<Vec<f64>> {
    let n = cd.len();
    if t == 0.0 {
        return Ok(maximal.values()[..n].to_vec());
    }
    let minimal = chainseq::minimal_params(cd.chain())?;
    let mut out = Vec::with_capacity(n);
    // r_k = (1 - t) u^max_k / (t u^min_k)
    let mut r = (1.0 - t) / t;
    for k in 1..=n {
        let (mmin, mmax) = (minimal.get(k), maximal.get(k));
        let next = r * (1.0 - mmax) / (1.0 - mmin);
        let one_minus = (1.0 - mmin) * (1.0 + next) / (1.0 + r);
        out.push(1.0 - one_minus);
        r = next;
    }
    Ok(out)
}

fn alpha_from_params(cd: &CdParams, m: &[f64]) -> Result<VerblunskySeq> {
    let mut out = Vec::with_capacity(m.len());
    let mut tau = Complex64::new(1.0, 0.0);
    for (k, mk) in m.iter().enumerate() {
        let ck = cd.c(k + 1);
        let num = Complex64::new(1.0 - 2.0 * mk, -ck);
        let den = Complex64::new(1.0, -ck) * tau;
        out.push(num / den);
        tau *= Complex64::new(1.0, -ck) / Complex64::new(1.0, ck);
        tau /= tau.norm();
    }
    VerblunskySeq::finite(out).map_err(|e| match e {
        Error::OutsideDisk { index } => Error::InvariantBreach(format!("recovered alpha_{index} left the unit disk")),
        other => other,
    })
}

/// The `t` for which [`verblunsky_from_cd`] reproduces the measure that `cd`
/// was computed from: `t = 1 - g_1 / M_1`.
///
/// `M_1 - g_1` is usually far smaller than either term, so it is not formed
/// by subtraction. With `δ_n = M_n - g_n`, the identities
/// `M_n = 1 - d_{n+1}/M_{n+1}` and `g_n = 1 - d_{n+1}/g_{n+1}` give
/// `δ_n = d_{n+1} δ_{n+1} / (g_{n+1} M_{n+1})`, a product of positive terms.
pub fn mass_parameter(cd: &CdParams, tol: f64) -> Result<f64> {
    let maximal = chainseq::maximal_params(cd.chain(), tol)?;
    let g = cd.params();
    let n = cd.len();
    let m1 = maximal.get(1);
    if m1 <= 0.0 {
        return Ok(0.0);
    }
    let mut delta = maximal.get(n) - g.get(n);
    for k in (1..n).rev() {
        delta = cd.d(k) * delta / (g.get(k + 1) * maximal.get(k + 1));
    }
    Ok((delta / m1).clamp(0.0, 1.0 - f64::EPSILON))
}
