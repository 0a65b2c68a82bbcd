//! Top-degree ideals of reflection-group point orbits: take unions of D_3
//! orbits, compute the standard monomials of `C[x]/T(X)` by the null-space
//! sweep, and watch the graded structure depend on the orbit choice.
//!
//! Run with: `cargo run --release --example point_orbit_ideals`

use num_rational::BigRational;

use coinv::points_ideal::{
    compute_t_ideal, dn_elements, hilbert_by_evaluation_ranks, orbit, Point, QuadraticNumber,
};

fn rational_point(coords: &[i64]) -> Point {
    Point::new(
        coords
            .iter()
            .map(|&c| QuadraticNumber::from_integer(c))
            .collect(),
    )
    .unwrap()
}

fn sqrt_point(a: &[i64], b: &[(i64, i64)], d: u64) -> Point {
    Point::new(
        a.iter()
            .zip(b)
            .map(|(&ai, &(bn, bd))| {
                QuadraticNumber::new(
                    BigRational::from_integer(ai.into()),
                    BigRational::new(bn.into(), bd.into()),
                    d,
                )
            })
            .collect(),
    )
    .unwrap()
}

fn main() {
    let d3 = dn_elements(3).unwrap();
    let families: Vec<(&str, Vec<Point>)> = vec![
        (
            "(1,1,2), (-1,1,2), (1,2,2)",
            vec![
                rational_point(&[1, 1, 2]),
                rational_point(&[-1, 1, 2]),
                rational_point(&[1, 2, 2]),
            ],
        ),
        (
            "(1,1,2), (-1,1,2), (1,sqrt(5/2),sqrt(5/2))",
            vec![
                rational_point(&[1, 1, 2]),
                rational_point(&[-1, 1, 2]),
                sqrt_point(&[1, 0, 0], &[(0, 1), (1, 2), (1, 2)], 10),
            ],
        ),
        (
            "(1,1,2), (-1,1,2), (0,sqrt(3),sqrt(3))",
            vec![
                rational_point(&[1, 1, 2]),
                rational_point(&[-1, 1, 2]),
                sqrt_point(&[0, 0, 0], &[(0, 1), (1, 1), (1, 1)], 3),
            ],
        ),
    ];
    for (name, seeds) in families {
        let mut pts = std::collections::BTreeSet::new();
        for seed in &seeds {
            pts.extend(orbit(&d3, seed).unwrap());
        }
        let points: Vec<Point> = pts.into_iter().collect();
        let result = compute_t_ideal(&points).unwrap();
        println!("seeds {name}: {} points", points.len());
        println!("  hilbert   = {}", result.hilbert);
        println!(
            "  rank jump = {}",
            hilbert_by_evaluation_ranks(&points).unwrap()
        );
        println!(
            "  staircase = {} monomials, {} generators",
            result.staircase.len(),
            result.generators.len()
        );
        println!();
    }
}
