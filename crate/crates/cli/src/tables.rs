//! The three extreme-zero tables for the `b = λ + iη` family.

use popuc_core::bounds::enclosure_thm44;
use popuc_core::families::Family;
use popuc_core::recurrence::{zeros_r, DEFAULT_XTOL};
use popuc_core::scaling::default_scaling_for;
use popuc_core::transforms::family_cd;
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const DEGREES: [usize; 4] = [10, 15, 30, 50];

pub fn family_for(which: u8) -> CliResult<Family> {
    let (lambda, eta) = match which {
        1 => (1.0, 1.0),
        2 => (10.0, 0.01),
        3 => (-0.25, 1.0),
        _ => return Err(CliError::input(format!("unknown table {which}; expected 1, 2 or 3"))),
    };
    Ok(Family::LambdaEta { lambda, eta })
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub n: usize,
    /// `2 arccos B_N`.
    pub theta_b: f64,
    pub argmax: Option<usize>,
    pub theta_first: f64,
    /// `2 arccos A_N`.
    pub theta_a: f64,
    pub argmin: Option<usize>,
    pub theta_last: f64,
}

pub fn row(family: &Family, n: usize) -> CliResult<Row> {
    let cd = family_cd(family, n)?;
    let q = default_scaling_for(family, n)?;
    let e = enclosure_thm44(&cd, &q, n)?;
    let (zeros, _) = zeros_r(&cd, n, DEFAULT_XTOL)?;
    let arc = e.arc();
    Ok(Row {
        n,
        theta_b: arc.theta1,
        argmax: e.argmax,
        theta_first: zeros.theta[0],
        theta_a: arc.theta2,
        argmin: e.argmin,
        theta_last: zeros.theta[n - 1],
    })
}

pub fn table(which: u8) -> CliResult<Vec<Row>> {
    let f = family_for(which)?;
    DEGREES.iter().map(|&n| row(&f, n)).collect()
}

/// Seven decimals, truncated toward zero as in the printed tables.
pub fn fixed7(x: f64) -> String {
    let s = format!("{:.10}", x);
    let dot = s.find('.').expect("fixed-point format has a dot");
    s[..dot + 8].to_string()
}

pub fn argext(i: Option<usize>, sign: char) -> String {
    match i {
        Some(n) => format!("u_{n}^({sign})"),
        None => String::new(),
    }
}

pub const COLUMNS: [&str; 7] = [
    "N",
    "two_arccos_B",
    "argmax",
    "theta_N_1",
    "two_arccos_A",
    "argmin",
    "theta_N_N",
];

pub fn csv_row(r: &Row, degrees: bool) -> Vec<String> {
    let f = |x: f64| fixed7(if degrees { x.to_degrees() } else { x });
    vec![
        r.n.to_string(),
        f(r.theta_b),
        argext(r.argmax, '+'),
        f(r.theta_first),
        f(r.theta_a),
        argext(r.argmin, '-'),
        f(r.theta_last),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation() {
        assert_eq!(fixed7(0.12345678), "0.1234567");
        assert_eq!(fixed7(5.0), "5.0000000");
    }
}
