//! Property tests for the algebraic invariants that hold exactly, plus the
//! floating-point group laws with explicit tolerances.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use arithyp::hyperbolic::{h3_act_components, sym_power, MoebiusMap, PointH3};
use arithyp::numfield::{ideal_counts, kronecker, make_quadratic, NumberField};
use arithyp::quatalg::{ramification_set, QuaternionAlgebra};

fn rq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rq(n, d))
}

fn quat_coords() -> impl Strategy<Value = [BigRational; 4]> {
    [
        small_rational(),
        small_rational(),
        small_rational(),
        small_rational(),
    ]
}

proptest! {
    #[test]
    fn quaternion_ring_axioms_exact(
        (a, b) in (-8i64..=8, -8i64..=8).prop_filter("nonzero", |&(a, b)| a != 0 && b != 0),
        u in quat_coords(),
        v in quat_coords(),
        w in quat_coords(),
    ) {
        let alg = QuaternionAlgebra::rational(a, b).unwrap();
        let u = alg.element_from_rationals(u);
        let v = alg.element_from_rationals(v);
        let w = alg.element_from_rationals(w);
        // associativity
        prop_assert_eq!(
            u.multiply(&v).unwrap().multiply(&w).unwrap(),
            u.multiply(&v.multiply(&w).unwrap()).unwrap()
        );
        // anti-involution
        prop_assert_eq!(
            u.multiply(&v).unwrap().conjugate(),
            v.conjugate().multiply(&u.conjugate()).unwrap()
        );
        // nrd multiplicative
        let lhs = u.multiply(&v).unwrap().reduced_norm();
        let rhs = alg.field().mul(&u.reduced_norm(), &v.reduced_norm());
        prop_assert_eq!(lhs, rhs);
        // embedding intertwines det with nrd
        let m = u.matrix_embedding();
        prop_assert!(m.det().im.is_zero());
        prop_assert_eq!(m.det().re, u.reduced_norm());
    }

    #[test]
    fn rational_ramification_sets_have_even_size(
        a in (-50i64..=50).prop_filter("nonzero", |&a| a != 0),
        b in (-50i64..=50).prop_filter("nonzero", |&b| b != 0),
    ) {
        let alg = QuaternionAlgebra::rational(a, b).unwrap();
        let s = ramification_set(&alg).unwrap();
        prop_assert_eq!(s.len() % 2, 0);
    }

    #[test]
    fn kronecker_is_multiplicative_in_the_argument(
        d in prop::sample::select(vec![-4i64, -8, -3, -7, -20, -11, 5, 13]),
        m in 1i64..=300,
        n in 1i64..=300,
    ) {
        // chi_D is a Dirichlet character for fundamental D
        prop_assert_eq!(kronecker(d, m * n), kronecker(d, m) * kronecker(d, n));
    }

    #[test]
    fn ideal_counts_are_multiplicative(
        d in prop::sample::select(vec![-1i64, -2, -5, -10, -13]),
        m in 1usize..=40,
        n in 1usize..=40,
    ) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        let field = NumberField::Quadratic(make_quadratic(d).unwrap());
        let seq = ideal_counts(&field, m * n);
        prop_assert_eq!(seq.a(m * n), seq.a(m) * seq.a(n));
    }

    #[test]
    fn moebius_action_group_law(
        coeffs in prop::collection::vec(-1.0f64..1.0, 12),
        x1 in -2.0f64..2.0,
        x2 in -2.0f64..2.0,
        y in 0.2f64..2.5,
    ) {
        let cx = |re: f64, im: f64| Complex64::new(re, im);
        let build = |c: &[f64]| {
            let a = cx(c[0] + 2.0, c[1]); // keep a away from zero
            let b = cx(c[2], c[3]);
            let cc = cx(c[4], c[5]);
            let d = (cx(1.0, 0.0) + b * cc) / a;
            MoebiusMap::new(a, b, cc, d).unwrap()
        };
        let g1 = build(&coeffs[..6]);
        let g2 = build(&coeffs[6..]);
        let z = PointH3::new(x1, x2, y).unwrap();
        let lhs = h3_act_components(&g1, &h3_act_components(&g2, &z));
        let rhs = h3_act_components(&g1.compose(&g2), &z);
        let scale = 1.0 + lhs.x.norm() + lhs.y.abs();
        prop_assert!((lhs.x - rhs.x).norm() + (lhs.y - rhs.y).abs() < 1e-11 * scale);
        prop_assert!(rhs.y > 0.0);
    }

    #[test]
    fn sym_power_functorial(
        entries in prop::collection::vec(-1.0f64..1.0, 16),
        k in 0u32..=4,
    ) {
        let cx = |i: usize| Complex64::new(entries[2 * i], entries[2 * i + 1]);
        let m = [[cx(0), cx(1)], [cx(2), cx(3)]];
        let n = [[cx(4), cx(5)], [cx(6), cx(7)]];
        let mn = [
            [m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]],
            [m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]],
        ];
        let lhs = sym_power(k, &mn);
        let rhs = sym_power(k, &m).mul(&sym_power(k, &n));
        prop_assert!(lhs.max_diff(&rhs) < 1e-10);
    }
}
