//! Acceptance gate: one test per criterion, each printing a pass line.
//! Criterion 9 (scan output determinism) lives in the CLI crate's
//! integration tests since it exercises the binary.

use std::time::Instant;

use linksing::{
    bp_tuples_up_to, classify_link, cross_check, divisor_genus, eta_einstein_check, from_bp,
    fractional_weights, gk_coprime_check, infer_weights, klt_check, link_index,
    make_standard, orlik_torsion, parse_polynomial, positive_torsion_allowed,
    tables::{reproduce_table2, reproduce_table3, RowStatus},
    BPExponents, EtaEinstein, GkVerdict, Int, Lichnerowicz, LinkDescriptor, LinkSign,
    StandardKind,
};

fn bp(exps: &[u64]) -> BPExponents {
    BPExponents::new(exps.iter().map(|&x| Int::from(x)).collect()).unwrap()
}

fn link(weights: &[u64], degree: u64) -> LinkDescriptor {
    LinkDescriptor::new(
        weights.iter().map(|&x| Int::from(x)).collect(),
        Int::from(degree),
    )
    .unwrap()
}

#[test]
fn criterion_1_bp_family_table() {
    let rows = reproduce_table2(3).unwrap();
    assert_eq!(rows.len(), 36);
    for r in &rows {
        assert_eq!(r.status, RowStatus::Pass, "row {} {}", r.row, r.instance);
    }
    // spot values behind the PASS verdicts
    let r = classify_link(&from_bp(&bp(&[2, 3, 3, 18])), None, Some(&bp(&[2, 3, 3, 18]))).unwrap();
    assert_eq!(r.smale.render(), "4M_∞");
    assert_eq!(r.index.index, Int::from(4));
    assert_eq!(r.lichnerowicz, Lichnerowicz::Obstructed);
    let r = classify_link(&from_bp(&bp(&[2, 3, 5, 75])), None, Some(&bp(&[2, 3, 5, 75]))).unwrap();
    assert_eq!(r.smale.render(), "4M_2");
    assert_eq!(r.graph_route.torsion.to_string_canonical(), "(Z/2)^8");
    println!("criterion 1: PASS");
}

#[test]
fn criterion_2_weight_family_table() {
    let rows = reproduce_table3(3).unwrap();
    assert_eq!(rows.len(), 9);
    for r in &rows {
        if r.row == 2 && r.instance == "L((1,9,7,14),28)" {
            assert!(
                matches!(r.status, RowStatus::Flagged(_)),
                "the borderline instance must be FLAGGED, got {:?}",
                r.status
            );
        } else {
            assert_eq!(r.status, RowStatus::Pass, "row {} {}", r.row, r.instance);
        }
    }
    println!("criterion 2: PASS");
}

#[test]
fn criterion_3_and_4_route_equality_and_identities() {
    let start = Instant::now();
    let tuples = bp_tuples_up_to(12);
    assert!(tuples.len() >= 400, "only {} instances", tuples.len());
    for t in &tuples {
        let b = bp(t);
        // cross_check covers the two-route torsion equality (criterion 3)
        // and identities (a)-(d) (criterion 4)
        cross_check(&from_bp(&b)).unwrap_or_else(|e| panic!("{t:?}: {e}"));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "sweep took {elapsed:?}, budget is 60 s"
    );
    println!("criterion 3: PASS ({} instances in {elapsed:?})", tuples.len());
    println!("criterion 4: PASS");
}

#[test]
fn criterion_5_spot_values() {
    let kappa = |l: &LinkDescriptor| {
        linksing::build_graph(&fractional_weights(l)).unwrap().kappa
    };
    assert_eq!(kappa(&from_bp(&bp(&[2, 3, 3, 18]))), Int::from(4));
    assert_eq!(kappa(&link(&[2, 22, 17, 34], 68)), Int::from(3));
    assert_eq!(kappa(&from_bp(&bp(&[2, 2, 2, 5]))), Int::from(0));
    let g = |w: [u64; 3], d: u64| {
        divisor_genus(
            &[Int::from(w[0]), Int::from(w[1]), Int::from(w[2])],
            &Int::from(d),
        )
        .unwrap()
    };
    assert_eq!(g([25, 15, 1], 75), Int::from(4));
    assert_eq!(g([1, 1, 1], 3), Int::from(1));
    println!("criterion 5: PASS");
}

#[test]
fn criterion_6_metric_criteria() {
    let a = bp(&[2, 3, 7, 41]);
    assert_eq!(gk_coprime_check(&a), GkVerdict::ExtremalYes);
    assert!(klt_check(&a).verdict);
    let l = from_bp(&bp(&[2, 3, 7, 43]));
    assert_eq!(link_index(&l).sign, LinkSign::Negative);
    assert_eq!(
        eta_einstein_check(&l),
        EtaEinstein::ExistsByTransverseAubinYau
    );
    println!("criterion 6: PASS");
}

#[test]
fn criterion_7_positive_torsion_allowed() {
    // the invariants are symmetric in the exponents, so sorted tuples
    // cover all of them
    let mut checked = 0usize;
    for t in bp_tuples_up_to(20) {
        let b = bp(&t);
        let l = from_bp(&b);
        if link_index(&l).sign != LinkSign::Positive {
            continue;
        }
        let torsion = orlik_torsion(&fractional_weights(&l)).unwrap();
        assert!(
            positive_torsion_allowed(&torsion),
            "{t:?} has disallowed torsion {}",
            torsion.to_string_canonical()
        );
        checked += 1;
    }
    assert!(checked > 0);
    println!("criterion 7: PASS ({checked} positive links)");
}

#[test]
fn criterion_8_parser_and_inference() {
    // deterministic linear congruential stream, no external entropy
    let mut state: u64 = 0x243f6a8885a308d3;
    let mut next = |lo: u64, hi: u64| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        lo + (state >> 33) % (hi - lo + 1)
    };
    for _ in 0..100 {
        let t: Vec<u64> = (0..4).map(|_| next(2, 30)).collect();
        let b = bp(&t);
        let f = make_standard(StandardKind::BP, b.exponents()).unwrap();
        assert_eq!(infer_weights(&f).unwrap(), from_bp(&b), "{t:?}");
    }
    let f = parse_polynomial("z0^2+z0*z1^3+z1*z2^4").unwrap();
    let l = infer_weights(&f).unwrap();
    assert_eq!(l.weights(), &[Int::from(12), Int::from(4), Int::from(5)]);
    assert_eq!(l.degree(), &Int::from(24));
    println!("criterion 8: PASS");
}
