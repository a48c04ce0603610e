//! Where the coefficients come from: an input file or a named family.

use std::path::Path;

use num_complex::Complex64;
use popuc_core::chainseq::ChainSeq;
use popuc_core::families::Family;
use popuc_core::transforms::{self, CdParams, VerblunskySeq};
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone)]
pub enum Source {
    Alpha(Vec<Complex64>),
    Family(Family),
    Cd { c: Vec<f64>, d: Vec<f64> },
}

/// Parsed input plus an optional custom scaling list.
#[derive(Debug, Clone)]
pub struct Input {
    pub source: Source,
    pub q: Option<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlphaFile {
    alpha: Vec<[f64; 2]>,
    #[serde(default)]
    q: Option<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CdFile {
    c: Vec<f64>,
    d: Vec<f64>,
    #[serde(default)]
    q: Option<Vec<f64>>,
}

impl Input {
    pub fn from_file(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        let mut value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| CliError::input("input must be a JSON object"))?;
        if obj.contains_key("alpha") {
            let f: AlphaFile = serde_json::from_value(value)?;
            let alpha = f.alpha.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
            return Ok(Input {
                source: Source::Alpha(alpha),
                q: f.q,
            });
        }
        if obj.contains_key("family") {
            let q = match obj.remove("q") {
                Some(v) => Some(serde_json::from_value(v)?),
                None => None,
            };
            let family: Family = serde_json::from_value(value)?;
            family.validate()?;
            return Ok(Input {
                source: Source::Family(family),
                q,
            });
        }
        if obj.contains_key("c") {
            let f: CdFile = serde_json::from_value(value)?;
            return Ok(Input {
                source: Source::Cd { c: f.c, d: f.d },
                q: f.q,
            });
        }
        Err(CliError::input(
            "input needs one of the keys \"alpha\", \"family\" or \"c\"",
        ))
    }

    /// `--family name --params k=v,...`.
    pub fn from_family(name: &str, params: Option<&str>) -> CliResult<Self> {
        let mut obj = parse_params(params.unwrap_or(""))?;
        obj.insert("family".into(), Value::String(name.into()));
        let family: Family =
            serde_json::from_value(Value::Object(obj)).map_err(|e| CliError::input(format!("family {name:?}: {e}")))?;
        family.validate()?;
        Ok(Input {
            source: Source::Family(family),
            q: None,
        })
    }
}

fn parse_params(s: &str) -> CliResult<Map<String, Value>> {
    let mut map = Map::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::input(format!("parameter {item:?} is not of the form key=value")))?;
        let value = if let Ok(x) = v.trim().parse::<f64>() {
            serde_json::Number::from_f64(x)
                .map(Value::Number)
                .ok_or_else(|| CliError::input(format!("parameter {k} is not finite")))?
        } else if let Ok(b) = v.trim().parse::<bool>() {
            Value::Bool(b)
        } else {
            return Err(CliError::input(format!("parameter {k}: cannot parse {v:?}")));
        };
        map.insert(k.trim().to_string(), value);
    }
    Ok(map)
}

impl Source {
    pub fn family(&self) -> Option<&Family> {
        match self {
            Source::Family(f) => Some(f),
            _ => None,
        }
    }

    /// Largest degree the source can serve, `None` if unbounded.
    pub fn max_degree(&self) -> Option<usize> {
        match self {
            Source::Alpha(a) => Some(a.len()),
            Source::Family(_) => None,
            Source::Cd { c, .. } => Some(c.len()),
        }
    }

    /// `(c, d)` parameters with `n` terms.
    pub fn cd(&self, n: usize) -> CliResult<CdParams> {
        if n < 2 {
            return Err(CliError::input("degree must be at least 2"));
        }
        Ok(match self {
            Source::Alpha(_) => transforms::cd_from_verblunsky(&self.alpha(n)?, None)?,
            Source::Family(f) => transforms::family_cd(f, n)?,
            Source::Cd { c, d } => {
                if c.len() < n {
                    return Err(popuc_core::Error::InsufficientCoefficients {
                        needed: n,
                        available: c.len(),
                    }
                    .into());
                }
                if d.len() < n - 1 {
                    return Err(popuc_core::Error::InsufficientCoefficients {
                        needed: n - 1,
                        available: d.len(),
                    }
                    .into());
                }
                CdParams::new(c[..n].to_vec(), ChainSeq::finite(d[..n - 1].to_vec())?)?
            }
        })
    }

    /// `α_0, ..., α_{n-1}`.
    pub fn alpha(&self, n: usize) -> CliResult<VerblunskySeq> {
        match self {
            Source::Alpha(a) => {
                let all = VerblunskySeq::finite(a.clone())?;
                Ok(VerblunskySeq::finite(all.take(n)?)?)
            }
            Source::Family(f) => Ok(VerblunskySeq::family(*f, n)?),
            Source::Cd { .. } => Err(CliError::input(
                "this command needs Verblunsky coefficients; (c, d) input is not accepted",
            )),
        }
    }
}
