mod common;

use dissrho::graph::{build_family, predicted_extremal};
use dissrho::reduced::{
    a_matrix, b2_matrix, b_matrix, case_table, case_winner, perron_residual, reconstruct_perron,
    reduced_perron, solve_rho_reduced, verify_case_poly, CasePolyEntry,
};
use dissrho::FamilySpec;

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn char_at(m: &[[f64; 3]; 3], lambda: f64) -> f64 {
    let mut s = *m;
    for (i, row) in s.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = if i == j { lambda - *x } else { -*x };
        }
    }
    det3(&s)
}

#[test]
fn cubic_example_by_newton() {
    let f = |t: f64| t * t * t - 4.0 * t - 2f64.sqrt();
    let df = |t: f64| 3.0 * t * t - 4.0;
    let mut t = 2.5;
    for _ in 0..50 {
        t -= f(t) / df(t);
    }
    let spec = FamilySpec::g(0, 0, 0, 2, 1, 2);
    let rho = solve_rho_reduced(&spec).unwrap();
    assert!((rho - t).abs() < 1e-3, "rho {rho}, cubic root {t}");
    let g = build_family(&spec).unwrap().graph;
    assert!((rho - common::dense_rho(&g)).abs() < 1e-9);
    assert!((rho - 2.1576).abs() < 1e-3);
}

#[test]
fn reduced_matches_dense_solver() {
    for spec in [
        FamilySpec::g(1, 0, 0, 5, 4, 5),
        FamilySpec::g(0, 1, 1, 3, 4, 3),
        FamilySpec::h(1, 0, 1, 3, 3, 4),
        FamilySpec::h(0, 0, 0, 4, 4, 4),
    ] {
        let rho = solve_rho_reduced(&spec).unwrap();
        let g = build_family(&spec).unwrap().graph;
        assert!((rho - common::dense_rho(&g)).abs() < 1e-9, "{spec:?}");
    }
}

#[test]
fn fixed_point_identity_holds_at_the_radius() {
    let spec = FamilySpec::g(1, 0, 0, 6, 5, 6);
    let rho = solve_rho_reduced(&spec).unwrap();
    let t = rho;
    let b = b_matrix(t, &spec).unwrap();
    // lambda_1(B(rho)) = rho (rho^2 - 1), checked against the cubic itself.
    assert!(char_at(&b, t * (t * t - 1.0)).abs() < 1e-6 * t.powi(3));
}

#[test]
fn b2_example() {
    assert_eq!(
        b2_matrix(2.0, &FamilySpec::h(0, 0, 0, 0, 1, 0)).unwrap(),
        [[2.0, 2.0, 1.0], [2.0, 4.0, 1.0], [1.0, 1.0, 2.0]]
    );
}

#[test]
fn a_matrix_determinant_example() {
    let a = a_matrix(1, 0, 0, -1, -2, -1, 2.0);
    assert_eq!(a, [[-0.5, 1.0, 0.0], [1.0, -2.0, 1.0], [0.0, 1.0, -2.0]]);
    assert!((char_at(&a, 1.0) - 9.0).abs() < 1e-12);
    let f1: f64 = 1.0 + (2.0 * 2.0 + 0.5) + 4.0 - 0.5;
    assert!((f1 - 9.0).abs() < 1e-12);
}

#[test]
fn case_table_matches_determinants() {
    let table = case_table();
    assert_eq!(table.len(), 33);
    for e in &table {
        let [a, b, c, m1, m2, m3] = e.params;
        for k in 0..40 {
            let t = 2.0 + 0.05 * k as f64;
            let lambda = -3.0 + 0.4 * k as f64;
            let direct = char_at(&a_matrix(a, b, c, m1, m2, m3, t), lambda);
            let cs: Vec<f64> = e.coeffs.iter().map(|f| f(t)).collect();
            let closed = ((cs[0] * lambda + cs[1]) * lambda + cs[2]) * lambda + cs[3];
            assert!(
                (direct - closed).abs() <= 1e-9 * direct.abs().max(1.0),
                "{}",
                e.label
            );
        }
        assert_eq!(
            verify_case_poly(e, 200).unwrap().status,
            "PASS",
            "{}",
            e.label
        );
    }
}

#[test]
fn corrupted_entry_fails() {
    let mut e: CasePolyEntry = case_table().remove(0);
    e.coeffs[3] = |t| 1.0 / t;
    let report = verify_case_poly(&e, 50).unwrap();
    assert_eq!(report.status, "FAIL");
    assert!(report.first_failure.is_some());
}

#[test]
fn case_winners_follow_the_pattern() {
    for n in 39..=90 {
        let out = case_winner(n).unwrap();
        assert_eq!(out.winner, predicted_extremal(n).unwrap(), "n = {n}");
        assert!(out.ties.is_empty());
    }
    assert_eq!(
        case_winner(42).unwrap().winner,
        FamilySpec::g(1, 0, 0, 6, 5, 6)
    );
    assert_eq!(
        case_winner(45).unwrap().winner,
        FamilySpec::g(0, 0, 0, 7, 5, 7)
    );
    assert!(case_winner(38).is_err());
}

#[test]
fn reconstructed_vector_is_perron() {
    let spec = FamilySpec::g(0, 0, 0, 2, 1, 2);
    let (rho, v) = reduced_perron(&spec).unwrap();
    let g = build_family(&spec).unwrap().graph;
    assert!(perron_residual(&g, rho, &v) <= 1e-8);
    assert!(v.iter().all(|&x| x > 0.0));
    assert!(reconstruct_perron(&spec, rho, [1.0, -1.0, 1.0]).is_err());
}
