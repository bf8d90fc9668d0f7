//! Randomized invariants over the parser and the descriptor arithmetic.

use proptest::prelude::*;

use linksing::{
    fractional_weights, from_bp, link_index, orlik_torsion, parse_polynomial, BPExponents, Int,
    LinkDescriptor,
};

fn weights_and_degree() -> impl Strategy<Value = (Vec<u64>, u64)> {
    // build the descriptor from exponents so d is always a common multiple
    proptest::collection::vec(2u64..12, 4).prop_map(|exps| {
        let d = exps.iter().fold(1u64, |acc, &a| num::integer::lcm(acc, a));
        let w = exps.iter().map(|&a| d / a).collect();
        (w, d)
    })
}

proptest! {
    #[test]
    fn render_parse_round_trip(exps in proptest::collection::vec(2u32..9, 3..5),
                               coeffs in proptest::collection::vec(-5i64..=5, 3..5)) {
        // synthesize a polynomial from the raw parts, render, re-parse
        let terms: Vec<String> = exps
            .iter()
            .zip(&coeffs)
            .filter(|(_, &c)| c != 0)
            .enumerate()
            .map(|(i, (e, c))| format!("{c}*z{i}^{e}"))
            .collect();
        prop_assume!(!terms.is_empty());
        let mut text = String::new();
        for t in &terms {
            if !text.is_empty() && !t.starts_with('-') {
                text.push('+');
            }
            text.push_str(t);
        }
        let f = parse_polynomial(&text).unwrap();
        let again = parse_polynomial(&f.render()).unwrap();
        prop_assert_eq!(f, again);
    }

    #[test]
    fn fractional_weights_scale_invariant((w, d) in weights_and_degree(), scale in 1u64..20) {
        let base = LinkDescriptor::new(
            w.iter().map(|&x| Int::from(x)).collect(),
            Int::from(d),
        ).unwrap();
        let scaled = LinkDescriptor::new(
            w.iter().map(|&x| Int::from(x * scale)).collect(),
            Int::from(d * scale),
        ).unwrap();
        prop_assert_eq!(fractional_weights(&base), fractional_weights(&scaled));
        prop_assert_eq!(
            orlik_torsion(&fractional_weights(&base)).unwrap(),
            orlik_torsion(&fractional_weights(&scaled)).unwrap()
        );
    }

    #[test]
    fn bp_index_sign_matches_exponent_sum(exps in proptest::collection::vec(2u64..25, 4)) {
        let bp = BPExponents::new(exps.iter().map(|&x| Int::from(x)).collect()).unwrap();
        let l = from_bp(&bp);
        let sum: f64 = exps.iter().map(|&a| 1.0 / a as f64).sum();
        let sign = link_index(&l).sign;
        match sign {
            linksing::LinkSign::Positive => prop_assert!(sum > 1.0),
            linksing::LinkSign::Null => prop_assert!((sum - 1.0).abs() < 1e-9),
            linksing::LinkSign::Negative => prop_assert!(sum < 1.0),
        }
    }
}
