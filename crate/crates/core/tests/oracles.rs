//! Worked examples with known answers.

mod common;

use std::f64::consts::PI;

use common::constant_cd;
use popuc_core::bounds::*;
use popuc_core::chainseq::*;
use popuc_core::families::{alternating_theta_minus, alternating_theta_plus, Family};
use popuc_core::recurrence::*;
use popuc_core::scaling::*;
use popuc_core::transforms::*;
use popuc_core::{Complex64, Error};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn low_degree_polynomials() {
    let cd = constant_cd(0.0, 0.25, 4);
    assert_eq!(
        eval_r(&cd, 0, Complex64::new(0.3, 0.1)).unwrap(),
        Complex64::new(1.0, 0.0)
    );
    let z = Complex64::new(0.2, -0.7);
    assert!((eval_r(&cd, 1, z).unwrap() - (z + 1.0)).norm() < 1e-15);
    assert_eq!(eval_w(&cd, 1, 0.37).unwrap().to_f64(), 0.37);
}

#[test]
fn chebyshev_and_two_point_zeros() {
    let cd = constant_cd(0.0, 0.25, 5);
    let z = zeros_w(&cd, 5, 1e-14).unwrap();
    for (j, x) in z.x.iter().enumerate() {
        assert!(close(*x, ((j + 1) as f64 * PI / 6.0).cos(), 1e-13));
    }
    let (z, _) = zeros_r(&constant_cd(0.0, 0.25, 2), 2, 1e-14).unwrap();
    assert!(close(z.theta[0], 2.0 * PI / 3.0, 1e-12) && close(z.theta[1], 4.0 * PI / 3.0, 1e-12));
}

#[test]
fn table_zeros() {
    let cd = family_cd(&Family::LambdaEta { lambda: 1.0, eta: 1.0 }, 10).unwrap();
    let (z, _) = zeros_r(&cd, 10, DEFAULT_XTOL).unwrap();
    assert!(close(z.theta[0], 0.4972376, 1e-6) && close(z.theta[9], 5.1944808, 1e-6));
    let cd = family_cd(
        &Family::LambdaEta {
            lambda: 10.0,
            eta: 0.01,
        },
        50,
    )
    .unwrap();
    let (z, _) = zeros_r(&cd, 50, DEFAULT_XTOL).unwrap();
    assert!(close(z.theta[0], 0.4949570, 1e-6) && close(z.theta[49], 5.7874076, 1e-6));
    let cd = family_cd(
        &Family::LambdaEta {
            lambda: -0.25,
            eta: 1.0,
        },
        15,
    )
    .unwrap();
    let (z, _) = zeros_r(&cd, 15, DEFAULT_XTOL).unwrap();
    assert!(close(z.theta[0], 0.1358499, 1e-6) && close(z.theta[14], 5.5600926, 1e-6));
}

#[test]
fn table_enclosures() {
    let f = Family::LambdaEta { lambda: 1.0, eta: 1.0 };
    let e = enclosure_thm44(&family_cd(&f, 10).unwrap(), &default_scaling_for(&f, 10).unwrap(), 10).unwrap();
    let arc = e.arc();
    assert!(close(arc.theta1, 0.4639446, 1e-6) && close(arc.theta2, 5.4352508, 1e-6));
    assert_eq!((e.argmax, e.argmin), (Some(8), Some(10)));
    let f = Family::LambdaEta {
        lambda: 10.0,
        eta: 0.01,
    };
    let e = enclosure_thm44(&family_cd(&f, 30).unwrap(), &default_scaling_for(&f, 30).unwrap(), 30).unwrap();
    let arc = e.arc();
    assert!(close(arc.theta1, 0.5731032, 1e-6) && close(arc.theta2, 5.7090691, 1e-6));
    assert_eq!((e.argmax, e.argmin), (Some(30), Some(30)));
}

#[test]
fn arc_counting() {
    let (b, c) = (0.6, 0.5);
    let fam = Family::Alternating { b1: b, b2: b, c };
    let cd = family_cd(&fam, 20).unwrap();
    let (z, _) = zeros_r(&cd, 20, DEFAULT_XTOL).unwrap();
    let tm = alternating_theta_minus(b, b, c);
    assert!(count_zeros_in_arc(&z, &Arc::closed(tm, 2.0 * PI - tm)) <= 1);
    assert_eq!(count_zeros_in_arc(&z, &Arc::closed(1.0, 1.0)), 0);
    assert_eq!(count_zeros_in_arc(&z, &Arc::closed(0.0, 2.0 * PI)), 20);
    // the outer band edges enclose everything
    let tp = alternating_theta_plus(b, b, c);
    assert_eq!(count_zeros_in_arc(&z, &Arc::closed(tp, 2.0 * PI - tp)), 20);
}

#[test]
fn geronimus_gaps_hold_zero_free() {
    let alpha = Complex64::new(-0.5, 0.0);
    let cd = cd_from_verblunsky(
        &VerblunskySeq::family(Family::geronimus(alpha, false), 50).unwrap(),
        None,
    )
    .unwrap();
    let eps = 1e-6;
    let levels = zeros_w_levels(&cd, 50, DEFAULT_XTOL).unwrap();
    for zl in &levels {
        assert_eq!(count_zeros_in_arc(zl, &Arc::closed(0.0, PI / 3.0 - eps)), 0);
        assert_eq!(count_zeros_in_arc(zl, &Arc::closed(5.0 * PI / 3.0 + eps, 2.0 * PI)), 0);
    }
}

#[test]
fn quadratic_examples() {
    let r = quadratic_roots(0.0, 0.0, 0.75).unwrap();
    assert!(close(r.u_minus, -3f64.sqrt(), 1e-14) && close(r.u_plus, 3f64.sqrt(), 1e-14));
    let r = quadratic_roots(1.0, 2.0, 1.0).unwrap();
    assert_eq!((r.u_minus, r.u_plus), (1.0 / 3.0, f64::INFINITY));
    assert!(matches!(quadratic_roots(0.0, 0.0, -0.1), Err(Error::InvalidInput(_))));
}

#[test]
fn quadratic_matches_geronimus_cotangents() {
    let alpha = Complex64::new(0.3, 0.4);
    let fam = Family::geronimus(alpha, true);
    let c = fam.c_closed(1).unwrap();
    let d = fam.d_closed(1).unwrap();
    let r = quadratic_roots(c, c, 4.0 * d).unwrap();
    let arc = fam.support_oracle().unwrap();
    // u = cot(ϑ/2) at the arc endpoints
    assert!(close(r.u_plus, 1.0 / (arc.theta1 / 2.0).tan(), 1e-12));
    assert!(close(r.u_minus, 1.0 / (arc.theta2 / 2.0).tan(), 1e-12));
}

#[test]
fn symmetric_enclosure_is_geronimus_support() {
    let cd = constant_cd(0.0, 3.0 / 16.0, 30);
    let q = make_scaling(cd.chain(), vec![0.75; 29]).unwrap();
    let e = enclosure_thm44(&cd, &q, 30).unwrap();
    let a = e.arc();
    assert!(close(a.theta1, PI / 3.0, 1e-12) && close(a.theta2, 5.0 * PI / 3.0, 1e-12));
}

#[test]
fn thm46_symmetric_and_cor47() {
    let qb: f64 = 0.6;
    let cd = constant_cd(0.0, 0.1, 12);
    let q = make_scaling(cd.chain(), vec![qb; 11]).unwrap();
    let e = enclosure_thm46(&cd, &q, 12).unwrap();
    let u = (1.0 - qb).sqrt() / (1.0 + qb.sqrt());
    let v = 1.0 / u;
    assert!(close(e.a, (u * u - 1.0) / (u * u + 1.0), 1e-14));
    assert!(close(e.b, (v * v - 1.0) / (v * v + 1.0), 1e-14));
    assert!(close(e.a, -e.b, 1e-14));

    let cd = CdParams::new(vec![-0.4, -1.0, -2.5], ChainSeq::constant(0.2, 2).unwrap()).unwrap();
    let e = enclosure_cor47(&cd, 3).unwrap();
    assert_eq!(e.a, -1.0);
    let v: f64 = 1.0 / 0.4;
    assert!(close(e.b, (v * v - 1.0) / (v * v + 1.0), 1e-14));
    // agrees with the q ≡ 1 case of the general method
    let t = enclosure_thm46(&cd, &ScalingSeq::trivial(2), 3).unwrap();
    assert!(close(t.a, e.a, 1e-15) && close(t.b, e.b, 1e-15));
}

#[test]
fn cor45_examples() {
    let e = enclosure_cor45(&constant_cd(1.0, 0.2, 8), 8).unwrap();
    assert_eq!((e.a, e.b), (0.0, 1.0));
    let f = Family::LambdaEta { lambda: 1.0, eta: 1.0 };
    let e = enclosure_cor45(&family_cd(&f, 20).unwrap(), 20).unwrap();
    assert!(e.b == 1.0 && e.a > -1.0);
}

#[test]
fn support_arc_examples() {
    let alpha = Complex64::new(0.3, 0.4);
    let fam = Family::geronimus(alpha, true);
    let oracle = fam.support_oracle().unwrap();
    for n in [5usize, 40, 300] {
        let cd = family_cd(&fam, n).unwrap();
        let q = default_scaling_for(&fam, n).unwrap();
        let s = support_arc(&cd, &q, n, Method::Thm44, 1e-12).unwrap();
        assert!(close(s.arc.theta1, oracle.theta1, 1e-10) && close(s.arc.theta2, oracle.theta2, 1e-10));
        assert!(s.stabilized);
    }
    for (b, c) in [(0.3, 0.25), (0.6, 0.5)] {
        let fam = Family::Alternating { b1: b, b2: b, c };
        let cd = family_cd(&fam, 60).unwrap();
        let q = default_scaling_for(&fam, 60).unwrap();
        let s = support_arc(&cd, &q, 60, Method::Thm44, 1e-12).unwrap();
        let tp = alternating_theta_plus(b, b, c);
        assert!(close(s.arc.theta1, tp, 1e-9) && close(s.arc.theta2, 2.0 * PI - tp, 1e-9));
    }
    let cd = constant_cd(0.0, 0.25, 10);
    let s = support_arc(&cd, &ScalingSeq::trivial(9), 10, Method::Thm44, 1e-12).unwrap();
    assert_eq!((s.arc.theta1, s.arc.theta2), (0.0, 2.0 * PI));
}

#[test]
fn gap_examples() {
    let g = VerblunskySeq::family(Family::geronimus(Complex64::new(-0.5, 0.0), false), 20_001).unwrap();
    let c = gap_certificate(&g, 5.0 * PI / 3.0 + 0.01, 2.0 * PI + PI / 3.0 - 0.01, 10_000).unwrap();
    assert_eq!(c.verdict, GapVerdict::VerifiedTo { n: 10_000 });
    let c = gap_certificate(&g, 5.0 * PI / 3.0 + 0.01, 2.0 * PI + PI / 3.0 + 0.2, 10_000).unwrap();
    assert!(matches!(c.verdict, GapVerdict::Violated(Violation::Parameter { .. })));
    let zero = VerblunskySeq::finite(vec![Complex64::new(0.0, 0.0); 501]).unwrap();
    for (t1, t2) in [(0.1, 0.2), (1.0, 4.0), (-0.3, 0.3), (0.0, 2.0 * PI)] {
        assert!(
            !gap_certificate(&zero, t1, t2, 500).unwrap().is_verified(),
            "({t1}, {t2})"
        );
    }
    assert!(gap_certificate(&zero, 1.0, 0.5, 10).is_err());
}

#[test]
fn two_interval_examples() {
    let c = 0.5;
    let fam = Family::Alternating { b1: 0.6, b2: 0.6, c };
    let cd = family_cd(&fam, 20).unwrap();
    let s = |u: f64| u / (1.0 + u * u).sqrt();
    // windows strictly between -c and c in cotangent scale
    let (a, b) = (-1.0, 1.0);
    let (cc, dd) = (s(-c * 0.9), s(c * 0.9));
    assert!(two_interval_enclosure(&cd, a, b, cc, dd, 20).unwrap());
    let z = zeros_w(&cd, 20, DEFAULT_XTOL).unwrap();
    assert!(z.x.iter().all(|x| !(cc..=dd).contains(x)));
    let sym = constant_cd(0.0, 0.2, 10);
    assert!(!two_interval_enclosure(&sym, -1.0, 1.0, -0.1, 0.1, 10).unwrap());
}

#[test]
fn transform_examples() {
    let g = Family::geronimus(Complex64::new(0.3, 0.4), true);
    let cd = family_cd(&g, 10).unwrap();
    let a = Complex64::new(0.3, 0.4);
    let g = (1.0 - a.norm_sqr()) / (2.0 * (1.0 + a.re));
    for n in 1..10 {
        assert!(close(cd.c(n), -0.4 / 1.3, 1e-15));
        assert!(close(cd.d(n), g * (1.0 - g), 1e-15));
    }
    let le = family_cd(&Family::LambdaEta { lambda: 1.0, eta: 1.0 }, 30).unwrap();
    let numeric = cd_from_verblunsky(
        &VerblunskySeq::family(Family::LambdaEta { lambda: 1.0, eta: 1.0 }, 30).unwrap(),
        None,
    )
    .unwrap();
    for n in 1..30 {
        assert!(close(le.c(n), 1.0 / (n as f64 + 1.0), 1e-15));
        assert!(close(le.d(n), ultraspherical_chain(1.0, n).unwrap(), 1e-15));
        assert!(close(numeric.c(n), le.c(n), 1e-10));
        assert!(close(numeric.d(n), le.d(n), 1e-10));
    }
    let cheb = CdParams::new(vec![0.0; 8], ChainSeq::rule(ChainRule::Constant(0.25), 7).unwrap()).unwrap();
    let alpha = verblunsky_from_cd(&cheb, 0.0, 1e-12).unwrap().values();
    assert!(alpha.iter().all(|a| a.norm() < 1e-9));
}

#[test]
fn rotation_trivial_at_full_turn() {
    let a = VerblunskySeq::finite((0..12).map(|k| Complex64::from_polar(0.3, k as f64)).collect()).unwrap();
    let r = rotated_cd(&a, 2.0 * PI).unwrap();
    let p = cd_from_verblunsky(&a, None).unwrap();
    for n in 1..=12 {
        assert!(close(r.c(n), p.c(n), 1e-12));
    }
    assert!(rotated_cd(&a, 0.0).is_err());
}

#[test]
fn threshold_examples() {
    let d = ChainSeq::constant(0.25, 9).unwrap();
    let x = (PI / 11.0).cos();
    assert!(close(constant_scaling_threshold(&d, 10).unwrap(), x * x, 1e-13));

    let d = ChainSeq::ultraspherical(1.0, 9).unwrap().prefix(9).unwrap();
    let t = constant_scaling_threshold(&d, 10).unwrap();
    assert!(make_scaling(&d, vec![t * (1.0 + 1e-6); 9]).is_ok());
    assert!(make_scaling(&d, vec![t * (1.0 - 1e-6); 9]).is_err());

    assert!(close(
        constant_scaling_threshold_infinite(&ChainSeq::rule(ChainRule::Constant(3.0 / 16.0), 16).unwrap(), 1e-10)
            .unwrap(),
        0.75,
        1e-8
    ));
    assert!(close(
        constant_scaling_threshold_infinite(&ChainSeq::rule(ChainRule::Constant(0.25), 16).unwrap(), 1e-10).unwrap(),
        1.0,
        1e-4
    ));
    assert!(close(
        constant_scaling_threshold_infinite(&ChainSeq::ultraspherical(1.0, 16).unwrap(), 1e-10).unwrap(),
        1.0,
        1e-4
    ));
}

#[test]
fn legendre_examples() {
    let dom = legendre_dominant(10).unwrap();
    let c = (PI / 20.0).cos();
    assert!(close(dom.get(1), 1.0 / 3.0 / (c * c), 1e-15));
    let d = ChainSeq::ultraspherical(-0.25, 9).unwrap().prefix(9).unwrap();
    assert!(comparison_test(&d, &dom).unwrap());
    let q: Vec<f64> = d.values().iter().zip(dom.values()).map(|(a, b)| a / b).collect();
    assert!(make_scaling(&d, q).is_ok());
    // the Ismail-Li choice overshoots q ≤ 1 for negative λ
    let q2 = d.get(1) / ismail_li_constant(10).unwrap();
    assert!(close(q2, 1.0521448759, 1e-9));
}

#[test]
fn legendre_inequalities() {
    for n in 2..=100usize {
        let c = (PI / (2.0 * n as f64)).cos();
        let leg = ChainSeq::ultraspherical(-0.5, n).unwrap().prefix(n - 1).unwrap();
        let cd = CdParams::new(vec![0.0; n], leg.clone()).unwrap_or_else(|e| panic!("N={n}: {e}"));
        assert!(largest_zero_w(&cd, n, 1e-15).unwrap() < c);
        for lambda in [-0.4, -0.25, 0.0, 1.0, 5.0] {
            for k in 1..n {
                let a = ultraspherical_chain(lambda, k).unwrap();
                assert!(a < leg.get(k) && leg.get(k) < leg.get(k) / (c * c));
            }
        }
    }
}

#[test]
fn default_scalings() {
    let g = Family::geronimus(Complex64::new(0.3, 0.4), true);
    let q = default_scaling_for(&g, 10).unwrap();
    let a = Complex64::new(0.3, 0.4);
    let gg = (1.0 - a.norm_sqr()) / (2.0 * (1.0 + a.re));
    assert!(close(q.get(1), 4.0 * gg * (1.0 - gg), 1e-15));
    let le = Family::LambdaEta { lambda: 1.0, eta: 1.0 };
    let q = default_scaling_for(&le, 10).unwrap();
    let c2 = (PI / 11.0).cos().powi(2);
    assert!(close(q.get(1), 4.0 * c2 * (1.0 * 4.0) / (4.0 * 2.0 * 3.0), 1e-15));
    let alt = Family::Alternating {
        b1: 0.6,
        b2: 0.6,
        c: 0.5,
    };
    let q = default_scaling_for(&alt, 12).unwrap();
    assert!(q.values().iter().all(|v| close(*v, 0.64, 1e-15)));
    assert!(matches!(
        default_scaling_for(
            &Family::Alternating {
                b1: 0.2,
                b2: 0.7,
                c: 0.5
            },
            12
        ),
        Err(Error::NoDefaultScaling(_))
    ));
}
