//! End-to-end acceptance checklist. Each test covers one numbered
//! criterion and prints a single pass/fail line; together they exercise
//! the whole pipeline on the three finite diagrams and both affine
//! truncations.

use num::bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tpqr_core::{
    betti_degree_solve, build_diagram, builtin_equivariant_formats, degree_of, delta_polynomial,
    det6, emit_cas_script, generator_set, gorenstein_sum, hilbert_numerator, linkage_dual,
    module_grading_from_system, orbit_poset, sigma_chain, transform_coordinates,
    verify_equivariant_format, weight_multiplicities, z_grading_dims, BettiSolution, Dialect,
    GradedFormat, SparsePoly, Variety, Weight, NUM_VARS,
};

fn fmt(rows: Vec<Vec<u32>>) -> GradedFormat {
    GradedFormat::new(rows).unwrap()
}

fn formats() -> [(&'static str, GradedFormat, GradedFormat, GradedFormat, (u32, u32, u32), u32); 3]
{
    [
        (
            "e6",
            fmt(vec![vec![0], vec![3, 3, 3, 3, 4], vec![5; 6], vec![7, 7]]),
            fmt(vec![vec![0], vec![3, 3, 3, 3, 4], vec![5; 6], vec![7, 7]]),
            fmt(vec![
                vec![0],
                vec![3, 3, 3, 3, 3, 3, 4],
                vec![5; 12],
                vec![6, 7, 7, 7, 7, 7, 7],
                vec![10],
            ]),
            (4, 3, 3),
            10,
        ),
        (
            "e7",
            fmt(vec![vec![0], vec![6, 6, 6, 6, 6, 7], vec![9; 7], vec![13, 13]]),
            fmt(vec![vec![0], vec![6, 6, 6, 6, 7], vec![10; 7], vec![13, 13, 13]]),
            fmt(vec![
                vec![0],
                vec![6, 6, 6, 6, 6, 6, 6, 7],
                vec![9, 9, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10, 10],
                vec![12, 13, 13, 13, 13, 13, 13, 13],
                vec![19],
            ]),
            (7, 6, 6),
            19,
        ),
        (
            "e8",
            fmt(vec![
                vec![0],
                vec![15, 15, 15, 15, 15, 15, 16],
                vec![21; 8],
                vec![31, 31],
            ]),
            fmt(vec![
                vec![0],
                vec![15, 15, 15, 15, 16],
                vec![25; 8],
                vec![31, 31, 31, 31],
            ]),
            fmt(vec![
                vec![0],
                vec![15, 15, 15, 15, 15, 15, 15, 15, 16],
                vec![21, 21, 21, 21, 21, 21, 21, 21, 25, 25, 25, 25, 25, 25, 25, 25],
                vec![30, 31, 31, 31, 31, 31, 31, 31, 31],
                vec![46],
            ]),
            (16, 15, 15),
            46,
        ),
    ]
}

fn report(criterion: &str, ok: bool) {
    println!(
        "criterion {criterion}: {}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed");
}

#[test]
fn criterion_01_hilbert_numerators() {
    let expected: [(&str, Vec<i64>, Vec<i64>, Vec<i64>); 3] = [
        (
            "e6",
            vec![1, 3, 6, 6, 2],
            vec![1, 3, 6, 6, 2],
            vec![1, 4, 10, 14, 10, 4, 1],
        ),
        (
            "e7",
            vec![1, 3, 6, 10, 15, 21, 23, 20, 12, 6, 2],
            vec![1, 3, 6, 10, 15, 21, 24, 23, 18, 9, 3],
            vec![1, 4, 10, 20, 35, 56, 77, 91, 91, 77, 56, 35, 20, 10, 4, 1],
        ),
        (
            "e8",
            vec![
                1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120, 130, 134, 132,
                124, 110, 90, 72, 56, 42, 30, 20, 12, 6, 2,
            ],
            vec![
                1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120, 132, 140, 144,
                144, 140, 132, 120, 104, 84, 60, 40, 24, 12, 4,
            ],
            vec![
                1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364, 455, 560, 680, 808, 936,
                1056, 1160, 1240, 1288, 1304, 1288, 1240, 1160, 1056, 936, 808, 680, 560,
                455, 364, 286, 220, 165, 120, 84, 56, 35, 20, 10, 4, 1,
            ],
        ),
    ];
    let mut ok = true;
    for ((_, f3, f3p, fsum, _, _), (_, n3, n3p, nsum)) in formats().iter().zip(&expected) {
        ok &= hilbert_numerator(f3, 3).unwrap().coeffs == *n3;
        ok &= hilbert_numerator(f3p, 3).unwrap().coeffs == *n3p;
        ok &= hilbert_numerator(fsum, 4).unwrap().coeffs == *nsum;
    }
    report("1 (Hilbert numerators)", ok);
}

#[test]
fn criterion_02_degrees() {
    let expected = [(18, 18, 44), (119, 133, 588), (1640, 1960, 20400)];
    let mut ok = true;
    for ((_, f3, f3p, fsum, _, _), (d3, d3p, ds)) in formats().iter().zip(&expected) {
        ok &= degree_of(f3, 3).unwrap() == *d3;
        ok &= degree_of(f3p, 3).unwrap() == *d3p;
        ok &= degree_of(fsum, 4).unwrap() == *ds;
    }
    report("2 (degrees)", ok);
}

#[test]
fn criterion_03_linkage() {
    let products = [36, 252, 3600];
    let mut ok = true;
    for ((_, f3, f3p, _, ci, _), prod) in formats().iter().zip(&products) {
        let linked = linkage_dual(f3, *ci).unwrap();
        ok &= linked == *f3p;
        ok &= linkage_dual(&linked, *ci).unwrap() == *f3;
        let additivity = degree_of(f3, 3).unwrap() + degree_of(f3p, 3).unwrap();
        ok &= additivity == *prod;
        ok &= (ci.0 * ci.1 * ci.2) as i64 == *prod;
    }
    report("3 (linkage)", ok);
}

#[test]
fn criterion_04_betti_solver() {
    let sol = betti_degree_solve(&[3, 3, 3, 3, 4], &[7, 7], 6, 3).unwrap();
    let ok = sol == BettiSolution::Unique(vec![5; 6]);
    report("4 (Betti solver tangency)", ok);
}

#[test]
fn criterion_05_gorenstein_sums() {
    let mut ok = true;
    for (_, f3, _, fsum, _, s) in formats().iter() {
        let sum = gorenstein_sum(f3, *s).unwrap();
        ok &= sum == *fsum;
        ok &= hilbert_numerator(&sum, 4).unwrap().is_palindromic();
    }
    report("5 (Gorenstein sums)", ok);
}

#[test]
fn criterion_06_poset_sizes_and_chains() {
    let mut ok = true;
    for ((q, r), size) in [((3usize, 3usize), 72), ((4, 3), 576), ((5, 3), 17280)] {
        let d = build_diagram(2, q, r).unwrap();
        let p = orbit_poset(&d, None).unwrap();
        ok &= p.len() == size;
        ok &= p.rank_sizes()[..4] == [1, 1, 1, 2];
    }
    for (q, r) in [(4usize, 4usize), (3, 6)] {
        let d = build_diagram(2, q, r).unwrap();
        let p = orbit_poset(&d, Some(3)).unwrap();
        ok &= p.rank_sizes() == vec![1, 1, 1, 2];
    }
    // Displayed sigma-chain matrices, entry for entry.
    let chains: [(usize, usize, [Vec<i64>; 5]); 3] = [
        (
            3,
            3,
            [
                vec![1, 0, 0, 0, 0, 0],
                vec![-1, 1, 0, 0, 0, 0],
                vec![0, -1, 1, 0, 1, 0],
                vec![0, 0, 1, 0, -1, 1],
                vec![0, 0, -1, 1, 1, 0],
            ],
        ),
        (
            4,
            3,
            [
                vec![1, 0, 0, 0, 0, 0, 0],
                vec![-1, 1, 0, 0, 0, 0, 0],
                vec![0, -1, 1, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0, -1, 1],
                vec![0, 0, -1, 1, 0, 1, 0],
            ],
        ),
        (
            5,
            3,
            [
                vec![1, 0, 0, 0, 0, 0, 0, 0],
                vec![-1, 1, 0, 0, 0, 0, 0, 0],
                vec![0, -1, 1, 0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0, 0, -1, 1],
                vec![0, 0, -1, 1, 0, 0, 1, 0],
            ],
        ),
    ];
    for (q, r, expected) in chains {
        let d = build_diagram(2, q, r).unwrap();
        let c = sigma_chain(&d).unwrap();
        ok &= [c.sigma0.0, c.sigma1.0, c.sigma2.0, c.sigma3.0, c.sigma3_prime.0] == expected;
    }
    report("6 (poset sizes and sigma chains)", ok);
}

#[test]
fn criterion_07_generator_weight_lists() {
    let mut ok = true;
    let cases: [(usize, usize, Variety, usize, usize); 6] = [
        (3, 3, Variety::Sigma3, 4, 5),
        (3, 3, Variety::Sigma3Prime, 4, 5),
        (4, 3, Variety::Sigma3, 5, 6),
        (4, 3, Variety::Sigma3Prime, 4, 5),
        (5, 3, Variety::Sigma3, 6, 7),
        (5, 3, Variety::Sigma3Prime, 4, 5),
    ];
    for (q, r, variety, bound, count) in cases {
        let d = build_diagram(2, q, r).unwrap();
        let p = orbit_poset(&d, None).unwrap();
        let id = p.variety_id(variety).unwrap();
        let gens = p.complement_filter(id, bound);
        ok &= gens.len() == count;
        // Every list starts with the sigma chain through sigma2.
        let chain = sigma_chain(&d).unwrap();
        for (k, w) in [chain.sigma0, chain.sigma1, chain.sigma2].iter().enumerate() {
            ok &= p.element(gens[k]).weight == *w;
        }
    }
    // E6 full expected lists (both varieties).
    let d = build_diagram(2, 3, 3).unwrap();
    let p = orbit_poset(&d, None).unwrap();
    let s3 = p.variety_id(Variety::Sigma3).unwrap();
    let ws: Vec<Vec<i64>> = p
        .complement_filter(s3, 4)
        .iter()
        .map(|&g| p.element(g).weight.0.clone())
        .collect();
    ok &= ws
        == vec![
            vec![1, 0, 0, 0, 0, 0],
            vec![-1, 1, 0, 0, 0, 0],
            vec![0, -1, 1, 0, 1, 0],
            vec![0, 0, -1, 1, 1, 0],
            vec![0, 0, 0, -1, 1, 0],
        ];
    let s3p = p.variety_id(Variety::Sigma3Prime).unwrap();
    let ws: Vec<Vec<i64>> = p
        .complement_filter(s3p, 4)
        .iter()
        .map(|&g| p.element(g).weight.0.clone())
        .collect();
    ok &= ws
        == vec![
            vec![1, 0, 0, 0, 0, 0],
            vec![-1, 1, 0, 0, 0, 0],
            vec![0, -1, 1, 0, 1, 0],
            vec![0, 0, 1, 0, -1, 1],
            vec![0, 0, 1, 0, 0, -1],
        ];
    report("7 (generator weight lists)", ok);
}

#[test]
fn criterion_08_coordinate_degrees() {
    let mut ok = true;
    let cases: [(usize, usize, Variety, usize, Vec<i64>); 5] = [
        (3, 3, Variety::Sigma3, 4, vec![3, 3, 3, 3, 4]),
        (4, 3, Variety::Sigma3, 5, vec![6, 6, 6, 6, 6, 7]),
        (4, 3, Variety::Sigma3Prime, 4, vec![6, 6, 6, 6, 7]),
        (5, 3, Variety::Sigma3, 6, vec![15, 15, 15, 15, 15, 15, 16]),
        (5, 3, Variety::Sigma3Prime, 4, vec![15, 15, 15, 15, 16]),
    ];
    for (q, r, variety, bound, expected) in cases {
        let d = build_diagram(2, q, r).unwrap();
        let p = orbit_poset(&d, None).unwrap();
        let id = p.variety_id(variety).unwrap();
        let mut degs: Vec<i64> = p
            .complement_filter(id, bound)
            .iter()
            .map(|&g| p.coordinate_degree(g).unwrap())
            .collect();
        degs.sort_unstable();
        ok &= degs == expected;
        ok &= p.coordinate_degree(p.top().unwrap()).unwrap() == 0;
    }
    report("8 (coordinate degrees)", ok);
}

#[test]
fn criterion_09_levi_symmetry() {
    let d = build_diagram(2, 3, 3).unwrap();
    let p = orbit_poset(&d, None).unwrap();
    let s3 = p.variety_id(Variety::Sigma3).unwrap();
    let s3p = p.variety_id(Variety::Sigma3Prime).unwrap();
    let ok = p.levi_symmetry(s3).unwrap().1 == vec![2, 4]
        && p.levi_symmetry(s3p).unwrap().1 == vec![4, 2]
        && p.levi_symmetry(0).unwrap().1 == vec![6];
    report("9 (Levi symmetry)", ok);
}

#[test]
fn criterion_10_gradings() {
    let mut ok = true;
    let tables: [(usize, usize, Vec<(i64, u64)>, u64, u64, usize); 3] = [
        (3, 3, vec![(-2, 1), (-1, 20), (0, 36), (1, 20), (2, 1)], 78, 21, 4),
        (4, 3, vec![(-2, 7), (-1, 35), (0, 49), (1, 35), (2, 7)], 133, 42, 7),
        (
            5,
            3,
            vec![(-3, 8), (-2, 28), (-1, 56), (0, 64), (1, 56), (2, 28), (3, 8)],
            248,
            92,
            16,
        ),
    ];
    for (q, r, dims, total, big, span) in tables {
        let d = build_diagram(2, q, r).unwrap();
        let x1 = d.x1_node().unwrap();
        let g = z_grading_dims(&d, x1).unwrap();
        ok &= g.dims == dims;
        ok &= g.total() == total;
        ok &= tpqr_core::big_cell_dimension(&d, x1).unwrap() == big;
        ok &= g.positive_part() == big;
        let lam = Weight::fundamental(&d, x1);
        let ws = weight_multiplicities(&d, &lam).unwrap();
        let mg = module_grading_from_system(&ws, x1).unwrap();
        ok &= mg.span() == span;
        if q > 3 {
            ok &= *mg.dim_bottom() == BigUint::from(1u32);
            ok &= *mg.dim_top() == BigUint::from(1u32);
        }
    }
    report("10 (gradings)", ok);
}

#[test]
fn criterion_11_schur_checks() {
    let mut ok = true;
    let mut errata = Vec::new();
    for ef in builtin_equivariant_formats() {
        let rep = verify_equivariant_format(&ef).unwrap();
        ok &= rep.ranks_ok;
        for tc in rep.twist_checks.iter().filter(|t| !t.ok) {
            errata.push((ef.name.clone(), tc.displayed_twist, tc.implied_twist));
        }
    }
    errata.sort();
    ok &= errata
        == vec![
            ("e8_sigma3".to_string(), 9, 21),
            ("e8_sigma3_prime".to_string(), 9, 25),
        ];
    report("11 (Schur equivariant checks)", ok);
}

#[test]
fn criterion_12_invariant() {
    let mut ok = true;
    let delta = delta_polynomial();
    ok &= delta.degree() == 4;
    let mut split = vec![0i64; NUM_VARS];
    split[0] = 1;
    split[NUM_VARS - 1] = 1;
    ok &= delta.eval(&split) != 0;
    let mut dec = vec![0i64; NUM_VARS];
    dec[3] = -2;
    ok &= delta.eval(&dec) == 0;
    // det^2 equivariance on 100 random integer matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    while checked < 100 {
        let mut g = [[0i64; 6]; 6];
        for row in &mut g {
            for entry in row {
                *entry = rng.gen_range(-2..=2);
            }
        }
        let det = det6(&g);
        if det == 0 {
            continue;
        }
        let coords: Vec<i64> = (0..NUM_VARS).map(|_| rng.gen_range(-3..=3)).collect();
        let moved = transform_coordinates(&g, &coords);
        ok &= delta.eval(&moved) == (det as i128) * (det as i128) * delta.eval(&coords);
        checked += 1;
    }
    // Euler identity.
    let mut euler = SparsePoly::constant(0);
    for v in 0..NUM_VARS {
        euler = euler + SparsePoly::var(v) * delta.partial(v);
    }
    ok &= euler == SparsePoly::constant(4) * delta;
    // Generator degree multisets.
    for variety in [Variety::Sigma3, Variety::Sigma3Prime] {
        let mut degs: Vec<usize> = generator_set(variety).iter().map(|g| g.degree()).collect();
        degs.sort_unstable();
        ok &= degs == vec![3, 3, 3, 3, 4];
    }
    // Emitted scripts match the goldens byte for byte.
    ok &= emit_cas_script(Dialect::Macaulay2, Variety::Sigma3)
        == include_str!("golden/sigma3.m2");
    ok &= emit_cas_script(Dialect::Macaulay2, Variety::Sigma3Prime)
        == include_str!("golden/sigma3_prime.m2");
    ok &= emit_cas_script(Dialect::Singular, Variety::Sigma3)
        == include_str!("golden/sigma3.sing");
    report("12 (quartic invariant)", ok);
}
