//! One function per subcommand.

use num_complex::Complex64;
use popuc_core::bounds::{self, GapVerdict, Method, Violation};
use popuc_core::chainseq::{self, ChainSeq, ScalingSeq};
use popuc_core::recurrence;
use popuc_core::scaling;
use popuc_core::transforms::{self, CdParams};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::report::{angle, jnum, num, opt_index, Report};
use crate::source::{Input, Source};
use crate::tables;
use crate::{Command, DegreeArgs, ScalingArgs, SourceArgs};

pub fn dispatch(cmd: &Command) -> CliResult<Report> {
    match cmd {
        Command::Tables { which, out } => cmd_tables(*which, out.degrees),
        Command::Bounds {
            source,
            degrees,
            scaling,
            method,
            out,
        } => cmd_bounds(
            &load(source)?,
            &degree_list(degrees, None)?,
            scaling,
            *method,
            out.degrees,
        ),
        Command::Zeros {
            source,
            degrees,
            tol,
            out,
        } => cmd_zeros(&load(source)?, &degree_list(degrees, None)?, *tol, out.degrees),
        Command::SupportArc {
            source,
            degrees,
            scaling,
            method,
            tol,
            out,
        } => cmd_support_arc(
            &load(source)?,
            &degree_list(degrees, None)?,
            scaling,
            *method,
            *tol,
            out.degrees,
        ),
        Command::Gap {
            source,
            theta1,
            theta2,
            degrees,
            trace,
            out,
        } => cmd_gap(&load(source)?, *theta1, *theta2, single(degrees)?, *trace, out.degrees),
        Command::Transform {
            source,
            degrees,
            t,
            roundtrip,
            tol,
            out: _,
        } => {
            let input = load(source)?;
            let n = match degrees.n.or(degrees.n_list.as_ref().and_then(|v| v.last().copied())) {
                Some(n) => n,
                None => input
                    .source
                    .max_degree()
                    .ok_or_else(|| CliError::input("--n is required for family sources"))?,
            };
            cmd_transform(&input, n, *t, *roundtrip, *tol)
        }
        Command::ScalingThreshold {
            source,
            degrees,
            q,
            infinite,
            tol,
            out: _,
        } => {
            let input = load(source)?;
            if *infinite {
                cmd_threshold_infinite(&input, *q, *tol)
            } else {
                cmd_threshold(&input, &degree_list(degrees, None)?, *q)
            }
        }
    }
}

fn load(args: &SourceArgs) -> CliResult<Input> {
    match (&args.input, &args.family) {
        (Some(path), None) => Input::from_file(path),
        (None, Some(name)) => Input::from_family(name, args.params.as_deref()),
        _ => Err(CliError::input("exactly one of --input or --family is required")),
    }
}

fn degree_list(d: &DegreeArgs, default: Option<usize>) -> CliResult<Vec<usize>> {
    let list = match (&d.n, &d.n_list) {
        (Some(n), _) => vec![*n],
        (None, Some(v)) if !v.is_empty() => v.clone(),
        _ => match default {
            Some(n) => vec![n],
            None => return Err(CliError::input("--n or --n-list is required")),
        },
    };
    if let Some(bad) = list.iter().find(|&&n| n < 2) {
        return Err(CliError::input(format!("degree N = {bad} must be at least 2")));
    }
    Ok(list)
}

fn single(d: &DegreeArgs) -> CliResult<usize> {
    match (&d.n, &d.n_list) {
        (Some(n), _) => Ok(*n),
        (None, Some(v)) if v.len() == 1 => Ok(v[0]),
        _ => Err(CliError::input("this command takes a single --n")),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum QMode {
    Auto,
    Trivial,
    Constant(f64),
    IsmailLi,
    Legendre,
    FamilyDefault,
    Custom,
}

fn parse_q_mode(s: &str) -> CliResult<QMode> {
    Ok(match s {
        "auto" => QMode::Auto,
        "trivial" => QMode::Trivial,
        "ismail-li" => QMode::IsmailLi,
        "legendre" => QMode::Legendre,
        "family-default" => QMode::FamilyDefault,
        "custom" => QMode::Custom,
        other => {
            let v = other
                .strip_prefix("constant=")
                .or_else(|| other.strip_prefix("constant:"))
                .ok_or_else(|| CliError::input(format!("unknown --q-mode {other:?}")))?;
            QMode::Constant(
                v.parse()
                    .map_err(|_| CliError::input(format!("--q-mode constant value {v:?} is not a number")))?,
            )
        }
    })
}

fn read_q_file(path: &std::path::Path) -> CliResult<Vec<f64>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('[') {
        return Ok(serde_json::from_str(&text)?);
    }
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::input(format!("q file entry {t:?} is not a number")))
        })
        .collect()
}

/// Scaling `q_2, ..., q_N` for `cd` and the label of the mode that produced it.
struct Scaling {
    mode: QMode,
    custom: Option<Vec<f64>>,
}

impl Scaling {
    fn new(args: &ScalingArgs, input: &Input) -> CliResult<Self> {
        let mut mode = parse_q_mode(&args.q_mode)?;
        let custom = match &args.q_file {
            Some(p) => Some(read_q_file(p)?),
            None => input.q.clone(),
        };
        if mode == QMode::Auto {
            mode = if custom.is_some() {
                QMode::Custom
            } else if input.source.family().is_some() {
                QMode::FamilyDefault
            } else {
                QMode::Trivial
            };
        }
        if mode == QMode::Custom && custom.is_none() {
            return Err(CliError::input(
                "--q-mode custom needs --q-file or a \"q\" array in the input",
            ));
        }
        Ok(Scaling { mode, custom })
    }

    fn label(&self) -> String {
        match self.mode {
            QMode::Auto => "auto".into(),
            QMode::Trivial => "trivial".into(),
            QMode::Constant(v) => format!("constant={v}"),
            QMode::IsmailLi => "ismail-li".into(),
            QMode::Legendre => "legendre".into(),
            QMode::FamilyDefault => "family-default".into(),
            QMode::Custom => "custom".into(),
        }
    }

    fn build(&self, input: &Input, cd: &CdParams, n: usize) -> CliResult<ScalingSeq> {
        let d = cd.chain().prefix(n - 1)?;
        let quotient = |dhat: &[f64]| -> CliResult<ScalingSeq> {
            let q = d.values().iter().zip(dhat).map(|(a, b)| a / b).collect();
            Ok(chainseq::make_scaling(&d, q)?)
        };
        Ok(match self.mode {
            QMode::Trivial | QMode::Auto => ScalingSeq::trivial(n - 1),
            QMode::Constant(v) => chainseq::make_scaling(&d, vec![v; n - 1])?,
            QMode::IsmailLi => quotient(&vec![chainseq::ismail_li_constant(n)?; n - 1])?,
            QMode::Legendre => quotient(&scaling::legendre_dominant(n)?.values())?,
            QMode::FamilyDefault => {
                let f = input
                    .source
                    .family()
                    .ok_or_else(|| CliError::input("--q-mode family-default needs a named family"))?;
                scaling::default_scaling_for(f, n)?
            }
            QMode::Custom => {
                let q = self.custom.as_ref().expect("checked in Scaling::new");
                if q.len() < n - 1 {
                    return Err(popuc_core::Error::InsufficientCoefficients {
                        needed: n - 1,
                        available: q.len(),
                    }
                    .into());
                }
                chainseq::make_scaling(&d, q[..n - 1].to_vec())?
            }
        })
    }
}

fn cmd_tables(which: Option<u8>, degrees: bool) -> CliResult<Report> {
    let list: Vec<u8> = match which {
        Some(k) => vec![k],
        None => vec![1, 2, 3],
    };
    let mut cols: Vec<&str> = Vec::new();
    if which.is_none() {
        cols.push("table");
    }
    cols.extend(tables::COLUMNS);
    let mut json_tables = Vec::new();
    let mut report = Report::new(&cols, Value::Null);
    for k in list {
        let rows = tables::table(k)?;
        for r in &rows {
            let mut cells = tables::csv_row(r, degrees);
            if which.is_none() {
                cells.insert(0, k.to_string());
            }
            report.push(cells);
        }
        json_tables.push(json!({ "table": k, "family": tables::family_for(k)?, "rows": rows }));
    }
    report.json = if which.is_some() {
        json_tables.pop().unwrap()
    } else {
        Value::Array(json_tables)
    };
    Ok(report)
}

fn cmd_bounds(input: &Input, ns: &[usize], sc: &ScalingArgs, method: Method, degrees: bool) -> CliResult<Report> {
    let scaling = Scaling::new(sc, input)?;
    let mut report = Report::new(
        &[
            "N", "method", "A", "B", "theta1", "theta2", "argmin", "argmax", "q_mode",
        ],
        Value::Null,
    );
    let mut items = Vec::new();
    for &n in ns {
        let cd = input.source.cd(n)?;
        let q = scaling.build(input, &cd, n)?;
        let e = bounds::enclosure(&cd, &q, n, method)?;
        let arc = e.arc();
        report.push(vec![
            n.to_string(),
            method.name().into(),
            num(e.a),
            num(e.b),
            angle(arc.theta1, degrees),
            angle(arc.theta2, degrees),
            opt_index(e.argmin),
            opt_index(e.argmax),
            scaling.label(),
        ]);
        items.push(json!({
            "N": n,
            "method": method,
            "A": e.a,
            "B": e.b,
            "theta1": arc.theta1,
            "theta2": arc.theta2,
            "argmin": e.argmin,
            "argmax": e.argmax,
            "q_mode": scaling.label(),
            "q": q.values(),
        }));
    }
    report.json = Value::Array(items);
    Ok(report)
}

fn cmd_zeros(input: &Input, ns: &[usize], tol: f64, degrees: bool) -> CliResult<Report> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::input("--tol must be positive"));
    }
    let mut report = Report::new(&["N", "j", "x", "theta", "residual"], Value::Null);
    let mut items = Vec::new();
    for &n in ns {
        let cd = input.source.cd(n)?;
        let (z, res) = recurrence::zeros_r(&cd, n, tol)?;
        for (j, ((x, t), r)) in z.x.iter().zip(&z.theta).zip(&res).enumerate() {
            report.push(vec![
                n.to_string(),
                (j + 1).to_string(),
                num(*x),
                angle(*t, degrees),
                num(*r),
            ]);
        }
        items.push(json!({ "N": n, "x": z.x, "theta": z.theta, "residual": res }));
    }
    report.json = Value::Array(items);
    Ok(report)
}

fn cmd_support_arc(
    input: &Input,
    ns: &[usize],
    sc: &ScalingArgs,
    method: Method,
    tol: f64,
    degrees: bool,
) -> CliResult<Report> {
    let scaling = Scaling::new(sc, input)?;
    let mut report = Report::new(
        &["N", "method", "theta1", "theta2", "A", "B", "stabilized", "delta"],
        Value::Null,
    );
    let mut items = Vec::new();
    for &n in ns {
        let cd = input.source.cd(n)?;
        let q = scaling.build(input, &cd, n)?;
        let s = bounds::support_arc(&cd, &q, n, method, tol)?;
        report.push(vec![
            n.to_string(),
            method.name().into(),
            angle(s.arc.theta1, degrees),
            angle(s.arc.theta2, degrees),
            num(s.enclosure.a),
            num(s.enclosure.b),
            s.stabilized.to_string(),
            num(s.delta),
        ]);
        items.push(json!({
            "N": n,
            "method": method,
            "theta1": s.arc.theta1,
            "theta2": s.arc.theta2,
            "A": s.enclosure.a,
            "B": s.enclosure.b,
            "argmin": s.enclosure.argmin,
            "argmax": s.enclosure.argmax,
            "stabilized": s.stabilized,
            "delta": s.delta,
            "q_mode": scaling.label(),
        }));
    }
    report.json = Value::Array(items);
    Ok(report)
}

fn verdict_text(v: &GapVerdict) -> (String, String) {
    match v {
        GapVerdict::VerifiedTo { n } => ("verified".into(), n.to_string()),
        GapVerdict::Violated(Violation::FirstCoefficient) => ("violated-first-coefficient".into(), "1".into()),
        GapVerdict::Violated(Violation::Parameter { n }) => ("violated".into(), n.to_string()),
        GapVerdict::Violated(Violation::Degenerate { n }) => ("degenerate".into(), n.to_string()),
    }
}

fn cmd_gap(input: &Input, theta1: f64, theta2: f64, n: usize, trace: bool, degrees: bool) -> CliResult<Report> {
    if n < 1 {
        return Err(CliError::input("--n must be at least 1"));
    }
    let alpha = input.source.alpha(n + 1)?;
    let cert = bounds::gap_certificate(&alpha, theta1, theta2, n)?;
    let (verdict, index) = verdict_text(&cert.verdict);
    let mut report = if trace {
        let mut r = Report::new(&["n", "m"], Value::Null);
        for (k, m) in cert.m.iter().enumerate() {
            r.push(vec![(k + 1).to_string(), num(*m)]);
        }
        r
    } else {
        let mut r = Report::new(
            &["theta1", "theta2", "verdict", "n", "c1_condition", "x_star"],
            Value::Null,
        );
        r.push(vec![
            angle(cert.arc.theta1, degrees),
            angle(cert.arc.theta2, degrees),
            verdict.clone(),
            index.clone(),
            cert.c1_condition.to_string(),
            num(cert.x_star),
        ]);
        r
    };
    let mut j = json!({
        "theta1": cert.arc.theta1,
        "theta2": cert.arc.theta2,
        "verdict": verdict,
        "n": index.parse::<usize>().unwrap_or(0),
        "c1_condition": cert.c1_condition,
        "x_star": cert.x_star,
    });
    if trace {
        j["m"] = Value::Array(cert.m.iter().map(|m| jnum(*m)).collect());
    }
    report.json = j;
    Ok(report)
}

fn cd_rows(cd: &CdParams) -> Report {
    let n = cd.len();
    let mut report = Report::new(&["n", "c", "d_next", "g", "tau_re", "tau_im"], Value::Null);
    for k in 1..=n {
        let t = cd.tau().get(k);
        report.push(vec![
            k.to_string(),
            num(cd.c(k)),
            if k < n { num(cd.d(k)) } else { String::new() },
            num(cd.params().get(k)),
            num(t.re),
            num(t.im),
        ]);
    }
    report.json = json!({
        "c": cd.c_values(),
        "d": cd.chain().values(),
        "g": cd.params().values(),
        "tau": cd.tau().values().iter().map(|t| [t.re, t.im]).collect::<Vec<_>>(),
    });
    report
}

fn alpha_rows(alpha: &[Complex64], original: Option<&[Complex64]>) -> Report {
    let mut cols = vec!["k", "alpha_re", "alpha_im"];
    if original.is_some() {
        cols.push("residual");
    }
    let mut report = Report::new(&cols, Value::Null);
    for (k, a) in alpha.iter().enumerate() {
        let mut row = vec![k.to_string(), num(a.re), num(a.im)];
        if let Some(o) = original {
            row.push(num((a - o[k]).norm()));
        }
        report.push(row);
    }
    report
}

fn cmd_transform(input: &Input, n: usize, t: Option<f64>, roundtrip: bool, tol: f64) -> CliResult<Report> {
    match &input.source {
        Source::Cd { .. } => {
            if roundtrip {
                return Err(CliError::input("--roundtrip needs Verblunsky coefficients as input"));
            }
            let cd = input.source.cd(n)?;
            let t = t.unwrap_or(0.0);
            let alpha = transforms::verblunsky_from_cd(&cd, t, tol)?.values();
            let mut r = alpha_rows(&alpha, None);
            r.json = json!({ "t": t, "alpha": alpha.iter().map(|a| [a.re, a.im]).collect::<Vec<_>>() });
            Ok(r)
        }
        _ => {
            let cd = input.source.cd(n)?;
            if !roundtrip {
                return Ok(cd_rows(&cd));
            }
            let original = input.source.alpha(n)?.values();
            let t = match t {
                Some(t) => t,
                None => transforms::mass_parameter(&cd, tol)?,
            };
            let back = transforms::verblunsky_from_cd(&cd, t, tol)?.values();
            let residual = back
                .iter()
                .zip(&original)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            let mut r = alpha_rows(&back, Some(&original));
            r.json = json!({
                "t": t,
                "residual": residual,
                "alpha": back.iter().map(|a| [a.re, a.im]).collect::<Vec<_>>(),
            });
            Ok(r)
        }
    }
}

fn classify_cells(report: &mut Report, n: String, rep: &scaling::ThresholdReport) -> Value {
    let verdict = rep
        .verdict
        .map(|v| serde_json::to_value(v).expect("verdict serializes"));
    report.push(vec![
        n,
        num(rep.threshold),
        rep.q.map(num).unwrap_or_default(),
        verdict
            .as_ref()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
    ]);
    json!({ "threshold": rep.threshold, "q": rep.q, "verdict": verdict })
}

fn cmd_threshold(input: &Input, ns: &[usize], q: Option<f64>) -> CliResult<Report> {
    let mut report = Report::new(&["N", "threshold", "q", "verdict"], Value::Null);
    let mut items = Vec::new();
    for &n in ns {
        let cd = input.source.cd(n)?;
        let rep = scaling::classify_constant_scaling(cd.chain(), n, q)?;
        let mut j = classify_cells(&mut report, n.to_string(), &rep);
        j["N"] = json!(n);
        items.push(j);
    }
    report.json = Value::Array(items);
    Ok(report)
}

fn cmd_threshold_infinite(input: &Input, q: Option<f64>, tol: f64) -> CliResult<Report> {
    let rule = input
        .source
        .family()
        .and_then(|f| f.chain_rule())
        .ok_or_else(|| CliError::input("--infinite needs a named family with a closed-form chain sequence"))?;
    let d = ChainSeq::rule(rule, 16)?;
    let threshold = scaling::constant_scaling_threshold_infinite(&d, tol)?;
    // the infinite threshold is attained: q >= threshold is admissible
    let verdict = q.map(|q| {
        if !(q > 0.0 && q <= 1.0) {
            scaling::ScalingVerdict::Invalid
        } else if (q - threshold).abs() <= scaling::BOUNDARY_TOL {
            scaling::ScalingVerdict::Boundary
        } else if q > threshold {
            scaling::ScalingVerdict::Valid
        } else {
            scaling::ScalingVerdict::Invalid
        }
    });
    let rep = scaling::ThresholdReport {
        degree: 0,
        threshold,
        q,
        verdict,
    };
    let mut report = Report::new(&["N", "threshold", "q", "verdict"], Value::Null);
    let mut j = classify_cells(&mut report, "inf".into(), &rep);
    j["N"] = json!("inf");
    report.json = j;
    Ok(report)
}
