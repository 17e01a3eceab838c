use std::f64::consts::{PI, SQRT_2};

use cgint_core::catalog::{
    arctan_classifier, family_closed_form, family_integral, list_identities, lookup, nearest_rational, verify,
    Evaluation, VerifyConfig,
};
use cgint_core::quadrature::{integrate_01_split, QuadratureConfig};
use cgint_core::sibp::{reduced_series_family, reduced_series_m1};
use cgint_core::specfun::constants::{GAMMA_1_8, GAMMA_3_8, GOLDEN_RATIO};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn ids_with(tag: &str) -> Vec<&'static str> {
    list_identities().iter().filter(|r| r.has_tag(tag)).map(|r| r.id).collect()
}

#[test]
fn catalog_shape() {
    assert_eq!(list_identities().len(), 32);
    let mut three = ids_with("threefold");
    three.sort_unstable();
    let mut expected = vec![
        "m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8", "wan-a", "wan-b", "z1", "z2", "z3", "z4", "wz1", "wz2",
        "wz3", "l1", "l2", "l3", "de1", "de2", "de3", "de4", "ex1", "ex2",
    ];
    expected.sort_unstable();
    assert_eq!(three, expected);
    assert_eq!(ids_with("twofold"), vec!["cg2", "ram1", "ram2", "k2mom", "dblsum", "logkk"]);
}

#[test]
fn lookups() {
    let m3 = lookup("m3").unwrap();
    let expected = PI * PI / 2.0 * (PI * PI / 20.0 + 1.5 * GOLDEN_RATIO.ln() - 5f64.sqrt() / 4.0);
    assert!(rel(m3.closed_form(), expected) < 1e-15);
    let wz2 = lookup("wz2").unwrap();
    let expected = GAMMA_1_8.powi(4) * GAMMA_3_8.powi(4) / (384.0 * SQRT_2 * PI * PI);
    assert!(rel(wz2.closed_form(), expected) < 1e-15);
    assert!(lookup("nosuch").is_err());
}

#[test]
fn every_entry_verifies() {
    for r in list_identities() {
        let v = verify(r.id, &VerifyConfig::default()).unwrap();
        let limit = match r.id {
            "z3" | "z4" | "wz3" => 1e-7,
            "dblsum" => 1e-3,
            _ => 1e-8,
        };
        assert_eq!(v.tolerance, limit, "{}", r.id);
        assert!(v.pass && v.rel_err <= limit, "{v:?}");
    }
}

#[test]
fn reference_values() {
    let v = verify("cg2", &VerifyConfig::default()).unwrap();
    assert!(rel(v.reference, PI.powi(3) / 4.0) < 1e-15 && v.pass);
    let v = verify("m1", &VerifyConfig::default()).unwrap();
    assert!(rel(v.reference, PI.powi(3) * (1.0 + 4.0 * 2f64.ln()) / 32.0) < 1e-15 && v.pass);
    let v = verify("dblsum", &VerifyConfig::default()).unwrap();
    // 14 zeta(3) / pi^2 = 1.70511360...
    assert!(rel(v.reference, 1.705_113_6) < 1e-7 && v.pass);
}

#[test]
fn family_consistency() {
    let cfg = QuadratureConfig::default();
    for alpha in [0.1, 0.25, 0.5, 0.75, 0.9, 1.0] {
        let r = family_integral(alpha, &cfg).unwrap();
        let closed = family_closed_form(alpha).unwrap();
        assert!(r.converged && rel(r.value, closed) <= 1e-8, "alpha = {alpha}: {r:?} vs {closed}");
    }
    let r = family_integral(0.75, &cfg).unwrap();
    assert!(rel(r.value, family_closed_form(0.75).unwrap()) <= 1e-9);
    let ex2 = PI * PI * (93.0 / 640.0 - 3.0 * 2f64.ln() / 32.0);
    assert!(rel(family_integral(32.0 / 81.0, &cfg).unwrap().value, 3.0 * ex2) <= 1e-9);
}

#[test]
fn family_at_one_is_m4() {
    let m4 = lookup("m4").unwrap();
    let Evaluation::Integral { integrand, closed_form } = m4.evaluation else {
        panic!("m4 is an integral");
    };
    let direct = integrate_01_split(integrand, &QuadratureConfig::default()).unwrap();
    let family = family_integral(1.0, &QuadratureConfig::default()).unwrap();
    assert!(rel(family.value, direct.value) < 1e-14);
    // specialization chain, an algebraic identity
    assert!(rel(family_closed_form(1.0).unwrap(), closed_form()) <= 1e-13);
}

#[test]
fn series_linkage() {
    let m1 = verify("m1", &VerifyConfig::default()).unwrap();
    let series = reduced_series_m1();
    assert!(rel(m1.computed, PI * PI / 2.0 * series.value) <= 1e-8);
    for alpha in [0.5, 0.75, 1.0] {
        let s = reduced_series_family(alpha).unwrap();
        let expected = 2.0 * SQRT_2 / (PI * PI) * family_closed_form(alpha).unwrap();
        assert!(s.converged && rel(s.value, expected) <= 1e-8, "alpha = {alpha}: {s:?}");
    }
}

#[test]
fn transforms_pointwise() {
    let tight = VerifyConfig {
        tolerance: Some(1e-9),
        ..Default::default()
    };
    for id in ["ram1", "ram2"] {
        let v = verify(id, &tight).unwrap();
        assert!(v.pass, "{v:?}");
    }
}

#[test]
fn de_form_sign() {
    let v = verify("de1", &VerifyConfig::default()).unwrap();
    assert!(v.reference < 0.0 && v.computed < 0.0);
}

#[test]
fn classifier() {
    assert!((arctan_classifier(-16.0 / 9.0).unwrap() - PI / 3.0).abs() <= 1e-12);
    for alpha in [-8.0, -48.0] {
        let r = nearest_rational(arctan_classifier(alpha).unwrap() / PI, 24, 1e-10);
        assert!(r.error <= 1e-10, "alpha = {alpha}: {r:?}");
    }
    let r = nearest_rational(arctan_classifier(-1.0 / 3.0).unwrap() / PI, 200, 1e-10);
    assert!(r.error > 1e-10, "{r:?}");
}
