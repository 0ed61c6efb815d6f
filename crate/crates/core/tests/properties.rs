//! Property tests for the structural invariants that should hold far away
//! from the hand-checked fixtures.

use proptest::prelude::*;
use tpqr_core::{
    build_diagram, gorenstein_sum, hilbert_numerator, linkage_dual, orbit_poset, reflect,
    schur_dimension, GradedFormat, Partition, Weight,
};

fn fmt(rows: Vec<Vec<u32>>) -> GradedFormat {
    GradedFormat::new(rows).unwrap()
}

fn base_formats() -> Vec<(GradedFormat, (u32, u32, u32), u32)> {
    vec![
        (
            fmt(vec![vec![0], vec![3, 3, 3, 3, 4], vec![5; 6], vec![7, 7]]),
            (4, 3, 3),
            10,
        ),
        (
            fmt(vec![vec![0], vec![6, 6, 6, 6, 6, 7], vec![9; 7], vec![13, 13]]),
            (7, 6, 6),
            19,
        ),
        (
            fmt(vec![
                vec![0],
                vec![15, 15, 15, 15, 15, 15, 16],
                vec![21; 8],
                vec![31, 31],
            ]),
            (16, 15, 15),
            46,
        ),
    ]
}

proptest! {
    #[test]
    fn simple_reflection_is_an_involution(
        coords in prop::collection::vec(-6i64..=6, 6),
        node in 0usize..6,
    ) {
        let d = build_diagram(2, 3, 3).unwrap();
        let mu = Weight(coords);
        prop_assert_eq!(reflect(&d, &reflect(&d, &mu, node), node), mu.clone());
    }

    #[test]
    fn complement_filter_is_downward_closed(
        id in 0usize..72,
        bound in 0usize..8,
    ) {
        let d = build_diagram(2, 3, 3).unwrap();
        let poset = orbit_poset(&d, None).unwrap();
        let complement = poset.complement_filter(id, bound);
        for &tau in &complement {
            for low in 0..poset.len() {
                if poset.element(low).length <= bound && poset.bruhat_leq(low, tau) {
                    prop_assert!(
                        complement.contains(&low),
                        "{low} <= {tau} but only {tau} is in the complement"
                    );
                }
            }
        }
    }

    #[test]
    fn bruhat_is_a_partial_order_sample(
        a in 0usize..576,
        b in 0usize..576,
    ) {
        let d = build_diagram(2, 4, 3).unwrap();
        let poset = orbit_poset(&d, None).unwrap();
        let ab = poset.bruhat_leq(a, b);
        let ba = poset.bruhat_leq(b, a);
        if ab && ba {
            prop_assert_eq!(a, b);
        }
        if ab {
            prop_assert!(poset.element(a).length <= poset.element(b).length);
        }
    }

    #[test]
    fn gorenstein_numerators_are_palindromic(extra in 0u32..40) {
        for (f, _, s) in base_formats() {
            let sum = gorenstein_sum(&f, s + extra).unwrap();
            let n = hilbert_numerator(&sum, 4).unwrap();
            prop_assert!(n.is_palindromic(), "shift {} on {:?}", s + extra, f);
        }
    }

    #[test]
    fn linkage_ignores_ci_ordering_and_is_an_involution(perm in 0usize..6) {
        for (f, ci, _) in base_formats() {
            let (a, b, c) = ci;
            let orders = [
                (a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a),
            ];
            let reference = linkage_dual(&f, ci).unwrap();
            let linked = linkage_dual(&f, orders[perm]).unwrap();
            prop_assert_eq!(&linked, &reference);
            prop_assert_eq!(linkage_dual(&linked, orders[perm]).unwrap(), f);
        }
    }

    #[test]
    fn single_row_schur_dimension_is_binomial(k in 0u32..10, n in 1usize..8) {
        let lam = Partition::new(vec![k]).unwrap();
        // dim Sym^k(C^n) = C(n + k - 1, k)
        let mut expected: u128 = 1;
        for j in 0..k as u128 {
            expected = expected * (n as u128 + j) / (j + 1);
        }
        prop_assert_eq!(
            schur_dimension(&lam, n).unwrap(),
            num::BigUint::from(expected)
        );
    }

    #[test]
    fn numerator_reconstructs_k_polynomial(
        coeffs in prop::collection::vec(-5i64..=5, 1..8),
        codim in 0usize..4,
    ) {
        // Multiply an arbitrary polynomial by (1-t)^codim, then divide back.
        let mut poly = coeffs.clone();
        for _ in 0..codim {
            let mut next = vec![0i64; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            poly = next;
        }
        // Pack the product into a fake two-row format when the signs allow;
        // easier: drive the division through hilbert_numerator by building a
        // format whose K-polynomial equals the product, which only works for
        // 0/±1 patterns. Instead check the algebra directly on IntPoly.
        let p = tpqr_core::IntPoly::new(poly);
        let q = {
            // repeated synthetic division must recover the original
            let mut cur = p.clone();
            let mut ok = true;
            for _ in 0..codim {
                let mut acc = 0i64;
                let mut out = Vec::with_capacity(cur.coeffs.len());
                for &c in &cur.coeffs {
                    acc += c;
                    out.push(acc);
                }
                if out.pop().unwrap_or(0) != 0 {
                    ok = false;
                    break;
                }
                cur = tpqr_core::IntPoly::new(out);
            }
            prop_assert!(ok, "product of (1-t)^{codim} must divide back");
            cur
        };
        prop_assert_eq!(q, tpqr_core::IntPoly::new(coeffs));
    }
}
