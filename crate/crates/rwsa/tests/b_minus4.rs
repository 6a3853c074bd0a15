//! Regression of the engine's traced, parity-filtered order -4 symbol
//! against the transcribed closed-form fixture, plus the exact a_2 value.

use rwsa::oracle::{oracle_compare, parse_oracle};
use rwsa::parametrix::{expand, trace};
use rwsa::rational::rat;
use rwsa::residue::{heat_coefficient, parity_filter};

fn fixture() -> String {
    std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/b_minus4.txt"
    ))
    .expect("fixture present")
}

#[test]
fn filtered_trace_matches_fixture_at_random_points() {
    let exp = expand(1).unwrap();
    let tr = trace(&exp.orders[2]).unwrap();
    let filtered = parity_filter(&tr);
    assert!(filtered.max_imag_abs_is_zero());
    let oracle = parse_oracle(&fixture()).unwrap();
    let report = oracle_compare(&filtered, &oracle, 1, 25, 1e-10, 2024).unwrap();
    assert_eq!(report.exact_matches, 25, "agreement should be exact, not approximate");
    assert_eq!(report.max_rel_dev, 0.0);
}

#[test]
fn full_trace_is_real_before_filtering() {
    let exp = expand(1).unwrap();
    let tr = trace(&exp.orders[2]).unwrap();
    assert!(tr.max_imag_abs_is_zero());
}

#[test]
fn a2_exact_polynomial() {
    // a_2(t) = (alpha^2 alpha_2 + alpha alpha_1^2 - alpha)/4
    let h = heat_coefficient(1).unwrap();
    assert_eq!(h.pi_power, 0);
    assert_eq!(h.poly.len(), 3);
    assert_eq!(h.poly[&(1, vec![0, 0])], rat(-1, 4));
    assert_eq!(h.poly[&(1, vec![2, 0])], rat(1, 4));
    assert_eq!(h.poly[&(2, vec![0, 1])], rat(1, 4));
}
