//! Consistency checks that tie independent routes together across module
//! boundaries: generating functions against oracle Hilbert series, quotient
//! dimensions against group orders, and CLI JSON schemas.

use coinv::combinatorics::{partitions_of, Partition, QPolynomial, RPartition};
use coinv::oracle::GradedQuotient;
use coinv::representations as reps;

#[test]
fn graded_gf_hilbert_matches_oracle() {
    // weighting each shape's generating function by its tableau count must
    // reproduce the quotient's Hilbert series
    for n in 1..=5usize {
        for k in 1..=n {
            let q = GradedQuotient::build(n, k, 1, None).unwrap();
            let mut total = QPolynomial::zero();
            for lam in partitions_of(n) {
                let gf = reps::graded_mult_gf(n, k, &lam).unwrap();
                total += &gf.scale(reps::syt_count(&lam) as i64);
            }
            assert_eq!(total, q.hilbert(), "n={n} k={k}");
        }
    }
    for r in 1..=2usize {
        for n in 1..=3usize {
            for k in 1..=n {
                let q = GradedQuotient::build(n, k, r, None).unwrap();
                let mut total = QPolynomial::zero();
                for shape in RPartition::all_of(n, r) {
                    let gf = reps::graded_mult_gf_wreath(n, k, r, &shape).unwrap();
                    total += &gf.scale(reps::r_syt_count(&shape) as i64);
                }
                assert_eq!(total, q.hilbert(), "n={n} k={k} r={r}");
            }
        }
    }
}

#[test]
fn top_quotient_dimension_is_group_order() {
    for n in 1..=3usize {
        for r in 1..=3usize {
            let q = GradedQuotient::build(n, n, r, None).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(q.total_dim(), r.pow(n as u32) * fact, "n={n} r={r}");
        }
    }
}

#[test]
fn valid_rho_are_exactly_the_nonzero_components() {
    // the classification of exponent partitions agrees with the oracle's
    // notion of a nonzero refined component
    for (n, k, r) in [(4usize, 2usize, 1usize), (4, 3, 1), (3, 2, 2)] {
        let q = GradedQuotient::build(n, k, r, None).unwrap();
        for d in 0..q.slices().len() {
            for rho in partitions_of(d) {
                let dim = q.refined_component(&rho).unwrap().dim();
                let valid = rho
                    .classify(n, k, r)
                    .unwrap()
                    .is_exponent_of_descent_monomial;
                assert_eq!(dim > 0, valid, "n={n} k={k} r={r} rho={rho}");
            }
        }
    }
}

#[test]
fn cli_json_payloads_reparse() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["mult", "--n", "5", "--k", "3", "--rho", "2,1,1", "--all"],
        vec!["frob", "--n", "5", "--k", "3", "--rho", "2,1,1", "--ribbon"],
        vec!["gf", "--n", "4", "--k", "2", "--lambda", "2,1,1"],
        vec![
            "gf",
            "--n",
            "3",
            "--k",
            "2",
            "--r",
            "2",
            "--lambda-bar",
            "2;1",
        ],
        vec!["oracle", "build", "--n", "3", "--k", "2"],
        vec![
            "tableaux", "count", "--shape", "3,2", "--des-lo", "", "--des-hi", "1,3",
        ],
    ];
    for args in cases {
        let full: Vec<String> = std::iter::once("coinv".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let result = coinv::cli::run(&full);
        assert_eq!(result.exit_code, 0, "{args:?}");
        let text = serde_json::to_string(&result.json).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, result.json);
        assert!(!result.human.trim().is_empty());
    }
}

#[test]
fn frob_direct_and_ribbon_agree_through_cli() {
    let run = |extra: &[&str]| {
        let mut args = vec![
            "coinv".to_string(),
            "frob".into(),
            "--n".into(),
            "6".into(),
            "--k".into(),
            "4".into(),
            "--rho".into(),
            "3,2,2,1".into(),
        ];
        args.extend(extra.iter().map(|s| s.to_string()));
        coinv::cli::run(&args)
    };
    let direct = run(&[]);
    let ribbon = run(&["--ribbon"]);
    assert_eq!(direct.json["terms"], ribbon.json["terms"]);
    let omega_direct = run(&["--omega"]);
    // omega conjugates every shape in the table
    let shapes: Vec<Partition> = direct.json["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            Partition::new(
                t["shape"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_u64().unwrap() as usize)
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    let omega_shapes: Vec<Partition> = omega_direct.json["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            Partition::new(
                t["shape"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_u64().unwrap() as usize)
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    let conjugated: std::collections::BTreeSet<Partition> =
        shapes.iter().map(|s| s.conjugate()).collect();
    let omega_set: std::collections::BTreeSet<Partition> = omega_shapes.into_iter().collect();
    assert_eq!(conjugated, omega_set);
}

#[test]
fn cli_points_tideal_radical_family() {
    let input = r#"{"n": 3, "d": 10, "group": "D", "orbit_seeds": [
        [{"a":"1","b":"0"},{"a":"1","b":"0"},{"a":"2","b":"0"}],
        [{"a":"-1","b":"0"},{"a":"1","b":"0"},{"a":"2","b":"0"}],
        [{"a":"1","b":"0"},{"a":"0","b":"1/2"},{"a":"0","b":"1/2"}]
    ]}"#;
    let path = std::env::temp_dir().join("coinv_cross_check_orbits.json");
    std::fs::write(&path, input).unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec![
            "coinv".to_string(),
            "points".into(),
            "tideal".into(),
            "--input".into(),
            path.display().to_string(),
        ];
        args.extend(extra.iter().map(|s| s.to_string()));
        coinv::cli::run(&args)
    };
    let sweep = run(&[]);
    assert_eq!(sweep.exit_code, 0, "{}", sweep.human);
    assert_eq!(sweep.json["hilbert"], serde_json::json!([1, 3, 5, 7, 9, 11]));
    assert_eq!(sweep.json["points"], 36);
    let literal = run(&["--one-per-step"]);
    assert_eq!(literal.json["hilbert"], sweep.json["hilbert"]);
    assert_eq!(literal.json["staircase"], sweep.json["staircase"]);
    std::fs::remove_file(&path).ok();
    // a radical part with d = 0 is rejected rather than silently dropped
    let bad = r#"{"n": 1, "d": 0, "group": "D",
        "orbit_seeds": [[{"a":"0","b":"1"}]]}"#;
    assert!(coinv::cli::parse_points_input(bad).is_err());
}
