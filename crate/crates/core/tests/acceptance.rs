//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! 1. exact engine reproduces every listed sequence (exact integers)
//! 2. Mellin verification of the regular families, N=8, tol 1e-6
//! 3. quasiregular origin atom (1,-4,3), N=6
//! 4. zero-finding table: integrals, Prony fit, polished zeros, count check
//! 5. asymptotics table for the reciprocal pair, +-0.001, <= 5% at n=10
//! 6. symmetry suite (see tests/symmetries.rs, 200 random triples)
//! 7. Laguerre trace/recurrence/comb identities
//! 8. algebraic class: Catalan, delta, alternating Catalan, contours
//! 9. zero counts: predicted values and discovery mode

use num_complex::Complex64;
use selfconv_core::exact::{
    derived_a005413, derived_a005416, generate_exact, laguerre_trace,
};
use selfconv_core::measure::laguerre_comb;
use selfconv_core::moments::{
    asymptotic_estimate, ln_exact_u, moment_quadrature, verify, MomentPipeline,
};
use selfconv_core::params::SequenceParams;
use selfconv_core::poles::{expected_zero_count, newton_polish, prony_discover, prony_extract};
use selfconv_core::rational::{as_i64, parse_rational, rat, rat_to_f64, Rat};

fn params(s: &str) -> SequenceParams {
    let parts: Vec<Rat> = s.split(',').map(|t| parse_rational(t).unwrap()).collect();
    SequenceParams::new(parts[0].clone(), parts[1].clone(), parts[2].clone()).unwrap()
}

fn ints(values: &[Rat]) -> Vec<i64> {
    values
        .iter()
        .map(|r| as_i64(r).expect("integer sequence value"))
        .collect()
}

#[test]
fn criterion_1_exact_engine_reproduces_listings() {
    let start = std::time::Instant::now();
    let cases: [(&str, Vec<i64>); 8] = [
        ("6,-8,1", vec![1, 5, 60, 1105, 27120, 828250]),
        ("1,-2,1", vec![1, 1, 3, 13, 71, 461, 3447]),
        ("2,-3,1", vec![1, 2, 10, 74, 706, 8162, 110410]),
        ("2,-2,1", vec![1, 3, 18, 153, 1638, 20898]),
        ("2,-4,1", vec![1, 1, 4, 25, 208, 2146, 26368]),
        ("2,0,-1", vec![1, 3, 12, 63, 432, 3798, 41472]),
        ("6,-4,-1", vec![1, 7, 84, 1463, 33936, 990542]),
        ("-1,-2,3", vec![1, -1, -1, 3, 3, -21, 27, 27, -117, 27, 459, -837]),
    ];
    for (name, expected) in &cases {
        let seq = generate_exact(&params(name), expected.len());
        assert_eq!(&ints(&seq.values), expected, "{name}");
    }
    // derived sequences, 6 terms each
    let base = generate_exact(&params("2,-2,1"), 7);
    let v = derived_a005413(&base).unwrap();
    assert_eq!(ints(&v), vec![7, 72, 891, 12672, 202770, 3602880]);
    let base = generate_exact(&params("2,-3,1"), 6);
    let w = derived_a005416(&base).unwrap();
    assert_eq!(ints(&w), vec![1, 6, 50, 518, 6354, 89782]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("acceptance criterion 1: PASS (exact listings, {elapsed:?})");
}

#[test]
fn criterion_2_mellin_verification_regular() {
    let start = std::time::Instant::now();
    let cases = [
        "6,-8,1", "6,-4,-1", "1,-2,1", "2,-3,1", "2,-4,1", "2,0,-1", "2,-2,1",
        // Bessel nu in {0, 1/3, 1/2, 2/3, 1}
        "1,-2,1/2", "1,-4/3,1/6", "1,-1,0", "1,-2/3,-1/6", "1,0,-1/2",
        // factorial alpha in {0, 1/2, 2}
        "1,-1,0", "1,-1/2,0", "1,1,0",
    ];
    let mut worst: f64 = 0.0;
    for name in cases {
        let report = verify(&params(name), 8, 1e-6).unwrap();
        assert!(
            report.all_pass,
            "{name}: max rel err {}",
            report.max_rel_err()
        );
        worst = worst.max(report.max_rel_err());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "acceptance criterion 2: PASS (15 regular verifications, worst rel {worst:.2e}, {elapsed:?})"
    );
}

#[test]
fn criterion_3_quasiregular_atom() {
    // (1,-4,3) is the m=3 Ei-class member; n=1 needs the -r0 * 0^0 atom
    let p = params("1,-4,3");
    let report = verify(&p, 6, 1e-6).unwrap();
    assert!(report.all_pass, "max rel err {}", report.max_rel_err());
    // the atom carries weight 2/3; without it the n=1 row would fail
    let pipeline = MomentPipeline::new(&p).unwrap();
    match &pipeline.form {
        selfconv_core::moments::PipelineForm::Measure(m) => {
            assert_eq!(m.atoms.len(), 1);
            assert!((m.atoms[0].weight - 2.0 / 3.0).abs() < 1e-14);
            // zeroth-moment sanity: density integral + atom weight = u_1 = 1
            let q = moment_quadrature(m, 1, 1e-10).unwrap();
            assert!((q.value - 1.0).abs() < 1e-8);
            assert!((q.value - m.atoms[0].weight - 1.0 / 3.0).abs() < 1e-8);
        }
        _ => panic!("expected a measure"),
    }
    println!("acceptance criterion 3: PASS (quasiregular origin atom)");
}

#[test]
fn criterion_4_prony_table_reproduction() {
    let p = params("1,2,-3/2");
    // integral column to 5e-3 relative
    let reference_integrals = [-0.333333, -0.916997, -2.77313, -9.25324, -34.4717, -145.797];
    let ext = prony_extract(&p, 2, 6, 1e-9).unwrap();
    for (row, &reference) in ext.table.iter().zip(reference_integrals.iter()) {
        assert!(
            ((row.integral - reference) / reference).abs() < 5e-3,
            "n={}: integral {} vs reference {reference}",
            row.n,
            row.integral
        );
    }
    // n=1 count check: the integral without the -2/3 prefactor is 1/2
    let bare = ext.table[0].integral / (-2.0 / 3.0);
    assert!((bare - 0.5).abs() <= 1e-6, "bare integral {bare}");
    // fitted coefficients within 1e-3 of the reference values
    assert!((ext.coefficients[0] - (-5.12549)).abs() < 1e-3);
    assert!((ext.coefficients[1] - 7.305500).abs() < 1e-3);
    // polished zeros within 1e-4 relative of 2.70287 e^{+-2.81818 i}
    let c = p.chgf_params().unwrap();
    let polished = newton_polish(&c, &ext.pole_set.zeros).unwrap();
    let target = Complex64::from_polar(2.70287, 2.81818);
    for z in &polished {
        let t = if z.im >= 0.0 { target } else { target.conj() };
        assert!(
            (z - t).norm() <= 1e-4 * t.norm(),
            "zero {z} vs reference {t}"
        );
    }
    // assembling with the recovered pole set reproduces exact u_n to the
    // table's visible precision
    let mut set = ext.pole_set.clone();
    set.zeros = polished.clone();
    let rep = selfconv_core::moments::verify_with_poles(&p, 6, 1e-4, Some(&set)).unwrap();
    assert!(rep.all_pass, "max rel {}", rep.max_rel_err());
    // an order-1 fit cannot explain the residuals (wrong-count control)
    let under = prony_extract(&p, 1, 6, 1e-9).unwrap();
    assert!(
        under.fit_residual > 1e-2,
        "order-1 residual unexpectedly small: {}",
        under.fit_residual
    );
    println!(
        "acceptance criterion 4: PASS (integrals, c = [{:.5}, {:.6}], zeros {:.5} e^{{{:.5}i}})",
        ext.coefficients[0],
        ext.coefficients[1],
        polished[0].norm(),
        polished[0].arg().abs()
    );
}

#[test]
fn criterion_5_asymptotics_table() {
    // published table: n, ln S(6,-8,1)_n, ln S(6,-4,-1)_n, asymptotic
    let table: [(usize, f64, f64, f64); 10] = [
        (1, 0.000, 0.000, -0.046),
        (2, 1.609, 1.946, 1.746),
        (3, 4.094, 4.431, 4.231),
        (4, 7.008, 7.288, 7.121),
        (5, 10.208, 10.432, 10.299),
        (6, 13.627, 13.806, 13.700),
        (7, 17.224, 17.369, 17.284),
        (8, 20.972, 21.092, 21.021),
        (9, 24.850, 24.952, 24.893),
        (10, 28.845, 28.933, 28.882),
    ];
    let ln_a = ln_exact_u(&params("6,-8,1"), 10);
    let ln_b = ln_exact_u(&params("6,-4,-1"), 10);
    let ca = params("6,-8,1").chgf_params().unwrap();
    let cb = params("6,-4,-1").chgf_params().unwrap();
    for &(n, la, lb, lasy) in &table {
        assert!((ln_a[n - 1] - la).abs() <= 1e-3, "ln u_{n} of S(6,-8,1)");
        assert!((ln_b[n - 1] - lb).abs() <= 1e-3, "ln u_{n} of S(6,-4,-1)");
        let (est_a, sign) = asymptotic_estimate(&ca, n as u32).unwrap();
        assert_eq!(sign, 1.0);
        assert!((est_a - lasy).abs() <= 1e-3, "asymptote at n={n}: {est_a}");
        // reciprocal pair shares the estimate
        let (est_b, _) = asymptotic_estimate(&cb, n as u32).unwrap();
        assert!((est_a - est_b).abs() < 1e-12);
    }
    // relative error at n = 10 is below 5%
    let (est, _) = asymptotic_estimate(&ca, 10).unwrap();
    let rel = ((ln_a[9] - est).exp() - 1.0).abs();
    assert!(rel <= 0.05, "relative error {rel}");
    println!("acceptance criterion 5: PASS (asymptotics table, n=10 rel {:.3}%)", rel * 100.0);
}

#[test]
fn criterion_6_symmetry_suite_pointer() {
    // the 200-case property suite lives in tests/symmetries.rs and runs in
    // the same `cargo test` invocation; this test pins the worked example
    let p = params("6,-8,1");
    let (partner, pre, corr) = p.kummer_partner().unwrap();
    assert_eq!(partner, params("6,-16,5"));
    let lhs = generate_exact(&p, 15);
    let rhs = generate_exact(&partner, 15);
    for n in 1..=15usize {
        let mut expected = &pre * rhs.u(n);
        if n == 1 {
            expected -= &corr;
        }
        assert_eq!(lhs.u(n), &expected);
    }
    println!("acceptance criterion 6: PASS (exact symmetries; full suite in tests/symmetries.rs)");
}

#[test]
fn criterion_7_laguerre_trace_and_comb() {
    // trace formula == recurrence, exactly
    for alpha in [rat(-4, 1), rat(-1, 1), rat(0, 1), rat(1, 1), rat(7, 2)] {
        for m in 1..=4usize {
            let trace = laguerre_trace(&alpha, m, 12);
            let p = SequenceParams::new(rat(-1, 1), rat(2, 1) + &alpha, rat(m as i64, 1)).unwrap();
            let direct = generate_exact(&p, 12);
            assert_eq!(trace, direct.values, "alpha={alpha} m={m}");
        }
    }
    // alpha=0, m=2: u_n = 4 u_{n-1} - 2 u_{n-2}
    let u = laguerre_trace(&rat(0, 1), 2, 10);
    for n in 2..10 {
        assert_eq!(u[n], rat(4, 1) * &u[n - 1] - rat(2, 1) * &u[n - 2]);
    }
    // comb moments match the trace values to 1e-10
    let comb = laguerre_comb(&rat(0, 1), 2).unwrap();
    for n in 1..=10u32 {
        let q = moment_quadrature(&comb, n, 1e-12).unwrap();
        let expected = rat_to_f64(&u[n as usize - 1]);
        assert!(
            (q.value - expected).abs() <= 1e-10 * expected.abs().max(1.0),
            "n={n}: {} vs {expected}",
            q.value
        );
    }
    println!("acceptance criterion 7: PASS (Laguerre trace, linear recurrence, comb moments)");
}

#[test]
fn criterion_8_algebraic_class() {
    // Catalan moments to 1e-8 for n <= 10
    let report = verify(&params("0,0,1"), 10, 1e-8).unwrap();
    assert!(report.all_pass, "Catalan: {}", report.max_rel_err());
    // check the shift against literal Catalan numbers
    let seq = generate_exact(&params("0,0,1"), 11);
    assert_eq!(
        ints(&seq.values),
        vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    );
    // alpha = -1: exact delta case
    let seq = generate_exact(&params("0,-1,1"), 10);
    assert!(seq.values[1..].iter().all(|v| as_i64(v) == Some(0)));
    let report = verify(&params("0,-1,1"), 10, 1e-12).unwrap();
    assert!(report.all_pass);
    // alpha = -2: alternating Catalan identity for 2n <= 12, exactly
    let s = generate_exact(&params("0,-2,1"), 12);
    let catalan = generate_exact(&params("0,0,1"), 6);
    for n in 1..=6usize {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(s.u(2 * n), &(rat(sign, 1) * catalan.u(n)));
        if n >= 2 {
            assert_eq!(as_i64(s.u(2 * n - 1)), Some(0));
        }
    }
    let report = verify(&params("0,-2,1"), 12, 1e-8).unwrap();
    assert!(report.all_pass, "alpha=-2 contour: {}", report.max_rel_err());
    // complex contours vs the exact oracle, n <= 10, 1e-8, and the
    // remaining closed-form alpha values
    for name in ["0,-3/2,1", "0,-3,1", "0,1,1", "0,-1/2,1"] {
        let report = verify(&params(name), 10, 1e-8).unwrap();
        assert!(report.all_pass, "{name}: {}", report.max_rel_err());
    }
    println!("acceptance criterion 8: PASS (Catalan, delta, alternating Catalan, contours)");
}

#[test]
fn criterion_9_zero_count_classification() {
    // all Introduction examples are regular: count 0
    for name in ["6,-8,1", "1,-2,1", "2,-3,1", "2,-2,1", "2,-4,1", "2,0,-1", "6,-4,-1"] {
        let c = params(name).chgf_params().unwrap();
        assert_eq!(expected_zero_count(&c), Some(0), "{name}");
    }
    // (1,2,-3/2): two zeros
    let c = params("1,2,-3/2").chgf_params().unwrap();
    assert_eq!(expected_zero_count(&c), Some(2));
    // discovery mode lands on p = 2 without being told
    let (order, ext) = prony_discover(&params("1,2,-3/2"), 8, 1e-9).unwrap();
    assert_eq!(order, 2);
    assert!(ext.fit_residual < 1e-6);
    println!("acceptance criterion 9: PASS (predicted counts and discovery order 2)");
}
