//! Named Verblunsky-coefficient generators with known closed forms.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::Arc;
use crate::chainseq::{ultraspherical_chain, ChainRule};
use crate::error::{Error, Result};

/// Infinite Verblunsky sequences used as test beds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// Constant `α_n = α`. With `rotated`, `α_n = w^{n+1} α` where
    /// `w = (1 + conj α)/(1 + α)`, which rotates the measure so that its
    /// `(c, d)` parameters become constant.
    Geronimus {
        re: f64,
        #[serde(default)]
        im: f64,
        #[serde(default)]
        rotated: bool,
    },
    /// `α_{2n} = (b1 + ic)/(1 + ic)`, `α_{2n+1} = (b2 - ic)/(1 + ic)`.
    Alternating { b1: f64, b2: f64, c: f64 },
    /// `α_{n-1} = -(b)_n / (conj(b) + 1)_n` with `b = λ + iη` (Pochhammer symbols).
    LambdaEta { lambda: f64, eta: f64 },
}

impl Family {
    pub fn geronimus(alpha: Complex64, rotated: bool) -> Self {
        Family::Geronimus {
            re: alpha.re,
            im: alpha.im,
            rotated,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Geronimus { .. } => "geronimus",
            Family::Alternating { .. } => "alternating",
            Family::LambdaEta { .. } => "lambda-eta",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Family::Geronimus { re, im, .. } => Complex64::new(re, im).norm() < 1.0,
            Family::Alternating { b1, b2, c } => b1.abs() < 1.0 && b2.abs() < 1.0 && c.is_finite(),
            Family::LambdaEta { lambda, eta } => lambda > -0.5 && eta.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{} parameters put the coefficients outside the unit disk",
                self.name()
            )))
        }
    }

    /// `α_0, ..., α_{len-1}`.
    pub fn coefficients(&self, len: usize) -> Vec<Complex64> {
        match *self {
            Family::Geronimus { re, im, rotated } => {
                let alpha = Complex64::new(re, im);
                if rotated {
                    let phase = geronimus_w(alpha).arg();
                    (0..len)
                        .map(|n| alpha * Complex64::from_polar(1.0, (n as f64 + 1.0) * phase))
                        .collect()
                } else {
                    vec![alpha; len]
                }
            }
            Family::Alternating { b1, b2, c } => {
                let den = Complex64::new(1.0, c);
                let even = Complex64::new(b1, c) / den;
                let odd = Complex64::new(b2, -c) / den;
                (0..len).map(|n| if n % 2 == 0 { even } else { odd }).collect()
            }
            Family::LambdaEta { lambda, eta } => {
                let b = Complex64::new(lambda, eta);
                let mut out = Vec::with_capacity(len);
                let mut a = -b / (b.conj() + 1.0);
                for n in 1..=len {
                    out.push(a);
                    // α_n = α_{n-1} (b + n) / (conj b + n + 1)
                    let n = n as f64;
                    a *= (b + n) / (b.conj() + n + 1.0);
                }
                out
            }
        }
    }

    /// Closed-form `c_n` of the unrotated parametrization, when known.
    pub fn c_closed(&self, n: usize) -> Option<f64> {
        match *self {
            Family::Geronimus { re, im, rotated } if rotated || im == 0.0 => Some(-im / (1.0 + re)),
            Family::Alternating { c, .. } => Some(if n.is_multiple_of(2) { c } else { -c }),
            Family::LambdaEta { lambda, eta } => Some(eta / (n as f64 + lambda)),
            Family::Geronimus { .. } => None,
        }
    }

    /// Closed-form `g_n` from the Verblunsky coefficients, when known.
    pub fn g_closed(&self, n: usize) -> Option<f64> {
        match *self {
            Family::Geronimus { re, im, rotated } if rotated || im == 0.0 => Some(geronimus_g(Complex64::new(re, im))),
            Family::Alternating { b1, b2, .. } => Some(if n % 2 == 1 { 0.5 * (1.0 - b1) } else { 0.5 * (1.0 - b2) }),
            // the maximal parameters of the Gegenbauer chain sequence
            Family::LambdaEta { lambda, .. } => {
                let n = n as f64;
                Some((n + 2.0 * lambda) / (2.0 * (n + lambda)))
            }
            Family::Geronimus { .. } => None,
        }
    }

    /// Generating rule of `d_{n+1}`, when known in closed form.
    pub fn chain_rule(&self) -> Option<ChainRule> {
        match *self {
            Family::Geronimus { re, im, rotated } if rotated || im == 0.0 => {
                let g = geronimus_g(Complex64::new(re, im));
                Some(ChainRule::Constant((1.0 - g) * g))
            }
            Family::Alternating { b1, b2, .. } => Some(ChainRule::Periodic(vec![
                0.25 * (1.0 + b1) * (1.0 - b2),
                0.25 * (1.0 + b2) * (1.0 - b1),
            ])),
            Family::LambdaEta { lambda, .. } => Some(ChainRule::Ultraspherical(lambda)),
            Family::Geronimus { .. } => None,
        }
    }

    /// `d_{n+1}` in closed form.
    pub fn d_closed(&self, n: usize) -> Option<f64> {
        match *self {
            Family::LambdaEta { lambda, .. } => ultraspherical_chain(lambda, n).ok(),
            _ => self.chain_rule().map(|r| r.term(n)),
        }
    }

    /// Known closed arc containing the absolutely continuous part of the measure.
    pub fn support_oracle(&self) -> Option<Arc> {
        match *self {
            Family::Geronimus { re, im, rotated } => {
                let alpha = Complex64::new(re, im);
                let theta = 2.0 * alpha.norm().asin();
                let shift = if rotated { geronimus_w(alpha).arg() } else { 0.0 };
                Some(Arc::closed(theta - shift, 2.0 * PI - theta - shift))
            }
            Family::Alternating { b1, b2, c } => {
                let t = alternating_theta_plus(b1, b2, c);
                Some(Arc::closed(t, 2.0 * PI - t))
            }
            Family::LambdaEta { .. } => None,
        }
    }
}

/// `w_α = (1 + conj α)/(1 + α)`.
pub fn geronimus_w(alpha: Complex64) -> Complex64 {
    (alpha.conj() + 1.0) / (alpha + 1.0)
}

/// Constant parameter `g = (1 - |α|²) / (2 (1 + Re α))` of the rotated Geronimus measure.
pub fn geronimus_g(alpha: Complex64) -> f64 {
    (1.0 - alpha.norm_sqr()) / (2.0 * (1.0 + alpha.re))
}

/// `ϑ⁺(b1, b2, c)`: the inner edge of the support of the alternating family.
pub fn alternating_theta_plus(b1: f64, b2: f64, c: f64) -> f64 {
    let root = ((1.0 - b1 * b1) * (1.0 - b2 * b2)).sqrt();
    ((c * c - b1 * b2 + root) / (c * c + 1.0)).clamp(-1.0, 1.0).acos()
}

/// `ϑ⁻(b1, b2, c)`: the outer edge of the first band of the alternating family.
pub fn alternating_theta_minus(b1: f64, b2: f64, c: f64) -> f64 {
    let root = ((1.0 - b1 * b1) * (1.0 - b2 * b2)).sqrt();
    ((c * c - b1 * b2 - root) / (c * c + 1.0)).clamp(-1.0, 1.0).acos()
}

/// `ϑ(c)` with `e^{iϑ(c)} = ((c² - 1) + 2ic)/(c² + 1)`, i.e. `2 arccot c` for `c > 0`.
pub fn alternating_theta(c: f64) -> f64 {
    let z = Complex64::new(c * c - 1.0, 2.0 * c) / (c * c + 1.0);
    z.arg().rem_euclid(2.0 * PI)
}
