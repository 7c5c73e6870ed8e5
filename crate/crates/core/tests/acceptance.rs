//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the tolerance it enforced. Oracles here are independent of the library
//! code paths they check (quadrature for Bessel, Dirichlet's class number
//! formula by direct character summation, brute-force lattice scans).

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use arithyp::hyperbolic::{
    bessel_k, bessel_k_large, bessel_k_series, evaluate_cusp_expansion, h2_act, h2_distance,
    h3_act_components, h3_act_quaternion, h3_distance, multiplier_h3, sym_power, weight2_matrix,
    CuspExpansion, MoebiusMap, PointH2, PointH3,
};
use arithyp::lattices::{cuspidal_vanishing_known, eisenstein_dimension};
use arithyp::numfield::{class_number, kronecker, make_monogenic, make_quadratic, NumberField};
use arithyp::quatalg::{
    ramification_set, realize_ramification_set, Place, QuaternionAlgebra, RamificationSet,
};
use arithyp::zetavol::{arithmetic_covolume, bianchi_volume, DEFAULT_TERM_CAP};

fn pass(n: u32, what: &str) {
    println!("criterion {n:2}: PASS - {what}");
}

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random unimodular map with moderate entries: d is solved from the other
/// three so the determinant is one before normalization.
fn random_map(rng: &mut StdRng, real: bool) -> MoebiusMap {
    loop {
        let mut coeff = |scale: f64| {
            if real {
                cx(rng.gen_range(-scale..scale), 0.0)
            } else {
                cx(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
            }
        };
        let a = coeff(1.5);
        if a.norm() < 0.2 {
            continue;
        }
        let b = coeff(1.5);
        let c = coeff(1.5);
        let d = (cx(1.0, 0.0) + b * c) / a;
        if let Ok(m) = MoebiusMap::new(a, b, c, d) {
            return m;
        }
    }
}

fn random_h3(rng: &mut StdRng) -> PointH3 {
    PointH3::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(0.2..3.0),
    )
    .unwrap()
}

#[test]
fn criterion_01_bianchi_volume_table() {
    // Quoted reference values for vol(PSL2(O_d) \ H^3), d = 1, 2, 3, 7, 11.
    let table = [
        (-1i64, 0.305321),
        (-2, 1.003841),
        (-3, 0.169156),
        (-7, 0.888914),
        (-11, 1.165895),
    ];
    let mut results = Vec::new();
    for (d, expected) in table {
        let t0 = Instant::now();
        let v = bianchi_volume(d, 1e-6, DEFAULT_TERM_CAP).unwrap();
        let elapsed = t0.elapsed();
        println!(
            "  d = {d:3}: computed {:.7} vs quoted {expected:.6} \
             (|diff| = {:.2e}, {:.2}s)",
            v.value,
            (v.value - expected).abs(),
            elapsed.as_secs_f64()
        );
        assert!(
            elapsed.as_secs_f64() < 10.0,
            "d = {d} took {elapsed:?}, over the 10 s budget"
        );
        results.push((d, expected, v.value));
    }
    for (d, expected, got) in results {
        // NOTE: the quoted d = -11 entry (1.165895) is inconsistent with the
        // volume formula that produces the other four entries to six
        // decimals: |D|^{3/2} zeta_K(2) / (4 pi^2) = 0.9241 * 1.4961318
        // = 1.3826083 for D = -11, where zeta_K(2) here is confirmed by
        // three independent routes (Dirichlet series, Euler product,
        // zeta(2) L(2, chi) by direct character summation). The assertion
        // below keeps the quoted value and is expected to fail for d = -11;
        // it is retained deliberately rather than silently corrected.
        assert!(
            (got - expected).abs() < 1e-5,
            "d = {d}: computed {got:.7}, quoted table value {expected}; \
             the quoted entry disagrees with the volume formula \
             (independently confirmed value 1.3826083 for d = -11)"
        );
    }
    pass(
        1,
        "five Bianchi volumes within 1e-5 of the quoted table, each under 10 s",
    );
}

#[test]
fn criterion_02_weeks_manifold_covolume() {
    // the cubic field of discriminant -23, generated by a root of
    // x^3 - x - 1; the algebra (-2, theta - 2) ramifies exactly at the real
    // place and the norm-5 ideal
    let coeffs: Vec<BigInt> = [-1i64, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
    let cubic = make_monogenic(&coeffs).unwrap();
    assert_eq!(cubic.discriminant(), &BigInt::from(-23));
    let k = NumberField::Monogenic(cubic);
    let theta = k.element(vec![rq(0, 1), rq(1, 1), rq(0, 1)]).unwrap();
    let b = k.sub(&theta, &k.from_integer(2));
    let alg = QuaternionAlgebra::new(k.clone(), k.from_integer(-2), b).unwrap();

    let v = arithmetic_covolume(&alg, 1e-4, DEFAULT_TERM_CAP).unwrap();
    assert!(v.value > 0.0);
    assert_eq!(
        v.finite_norms,
        vec![5u128],
        "ramified norm-5 ideal expected"
    );
    assert_eq!(v.real_places, 1);

    const WEEKS: f64 = 0.9427073;
    let ratio = WEEKS / v.value;
    let m = ratio.round();
    assert!(
        (1.0..=12.0).contains(&m),
        "covering index {m} outside 1..=12 (volume {})",
        v.value
    );
    let residue = (ratio - m).abs() / m;
    assert!(
        residue < 1e-3,
        "relative residue {residue} too large (ratio {ratio})"
    );
    assert_eq!(m as i64, 3, "derived covering index");
    pass(
        2,
        "Weeks manifold volume = 3 x formula covolume, residue < 1e-3 (m = 3 reported)",
    );
}

#[test]
fn criterion_03_calegari_dunfield_ramification() {
    let k = NumberField::Quadratic(make_quadratic(-2).unwrap());
    let alg = QuaternionAlgebra::new(k.clone(), k.from_integer(-1), k.from_integer(-3)).unwrap();
    let s = ramification_set(&alg).unwrap();
    assert_eq!(s.len(), 2, "exactly two ramified places");
    assert_eq!(s.infinite_places().count(), 0, "no infinite places");
    let finite: Vec<_> = s.finite_places().collect();
    assert_eq!(finite.len(), 2);
    for place in finite {
        match place {
            Place::Finite(lp) => {
                assert_eq!(lp.p, 3);
                assert_eq!((lp.e, lp.f), (1, 1));
            }
            other => panic!("unexpected place {other:?}"),
        }
    }
    pass(
        3,
        "(-1,-3)/Q(sqrt -2) ramifies exactly at the two primes above 3",
    );
}

#[test]
fn criterion_04_parity_of_random_rational_algebras() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut checked = 0;
    while checked < 500 {
        let a = rng.gen_range(-50i64..=50);
        let b = rng.gen_range(-50i64..=50);
        if a == 0 || b == 0 {
            continue;
        }
        let alg = QuaternionAlgebra::rational(a, b).unwrap();
        let s = ramification_set(&alg).unwrap();
        assert!(
            s.len().is_multiple_of(2),
            "odd |S(D)| for (a, b) = ({a}, {b})"
        );
        checked += 1;
    }
    pass(4, "|S(D)| even for 500 random (a, b), |a|,|b| <= 50, exact");
}

#[test]
fn criterion_05_realization_round_trip() {
    let base = [
        Some(Place::RationalPrime { p: 2 }),
        Some(Place::RationalPrime { p: 3 }),
        Some(Place::RationalPrime { p: 5 }),
        Some(Place::RationalPrime { p: 7 }),
        Some(Place::RealEmbedding { index: 0 }),
    ];
    let mut tested = 0;
    for mask in 0u32..32 {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let places: Vec<Place> = (0..5)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| base[i].clone().unwrap())
            .collect();
        let target = RamificationSet::new(places);
        let (a, b) = realize_ramification_set(&target, 100)
            .unwrap_or_else(|e| panic!("no algebra found for mask {mask:05b}: {e}"));
        let alg = QuaternionAlgebra::rational(a, b).unwrap();
        assert_eq!(
            ramification_set(&alg).unwrap(),
            target,
            "round trip failed for mask {mask:05b} with (a, b) = ({a}, {b})"
        );
        tested += 1;
    }
    assert_eq!(tested, 16);
    pass(
        5,
        "realize -> ramify round trip exact on all 16 even subsets of {2,3,5,7,inf}",
    );
}

#[test]
fn criterion_06_geometry_invariants() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    // distance invariance, H3
    for _ in 0..1000 {
        let g = random_map(&mut rng, false);
        let p = random_h3(&mut rng);
        let q = random_h3(&mut rng);
        let d0 = h3_distance(&p, &q);
        let d1 = h3_distance(&h3_act_components(&g, &p), &h3_act_components(&g, &q));
        assert!(
            (d0 - d1).abs() <= 1e-9 * d0.max(1e-3),
            "H3 distance moved: {d0} vs {d1}"
        );
    }
    // distance invariance, H2 under real maps
    for _ in 0..1000 {
        let g = random_map(&mut rng, true);
        let p = PointH2::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.2..3.0)).unwrap();
        let q = PointH2::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.2..3.0)).unwrap();
        let d0 = h2_distance(&p, &q);
        let d1 = h2_distance(&h2_act(&g, &p), &h2_act(&g, &q));
        assert!(
            (d0 - d1).abs() <= 1e-9 * d0.max(1e-3),
            "H2 distance moved: {d0} vs {d1}"
        );
    }
    // component vs quaternion form, and the group action law
    for _ in 0..1000 {
        let g1 = random_map(&mut rng, false);
        let g2 = random_map(&mut rng, false);
        let z = random_h3(&mut rng);
        let w_c = h3_act_components(&g1, &z);
        let w_q = h3_act_quaternion(&g1, &z);
        let scale = 1.0 + w_c.x.norm() + w_c.y.abs();
        assert!(
            (w_c.x - w_q.x).norm() + (w_c.y - w_q.y).abs() <= 1e-12 * scale,
            "component vs quaternion mismatch"
        );
        let lhs = h3_act_components(&g1, &h3_act_components(&g2, &z));
        let rhs = h3_act_components(&g1.compose(&g2), &z);
        let scale = 1.0 + lhs.x.norm() + lhs.y.abs();
        assert!(
            (lhs.x - rhs.x).norm() + (lhs.y - rhs.y).abs() <= 1e-12 * scale,
            "associativity failed"
        );
        // +-gamma act identically
        let neg = MoebiusMap::new(-g1.a, -g1.b, -g1.c, -g1.d).unwrap();
        let w_n = h3_act_components(&neg, &z);
        assert!((w_c.x - w_n.x).norm() + (w_c.y - w_n.y).abs() <= 1e-13 * scale);
    }
    pass(
        6,
        "isometry invariance (1e-9 rel), component = quaternion action (1e-12), \
         group law (1e-12), on 1000 random maps each",
    );
}

#[test]
fn criterion_07_multiplier_cocycle_and_sym_powers() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    // cocycle J(g1 g2, z) = J(g1, g2 z) J(g2, z)
    for _ in 0..400 {
        let g1 = random_map(&mut rng, false);
        let g2 = random_map(&mut rng, false);
        let z = random_h3(&mut rng);
        let lhs = multiplier_h3(&g1.compose(&g2), &z);
        let jg2 = multiplier_h3(&g2, &z);
        let jg1 = multiplier_h3(&g1, &h3_act_components(&g2, &z));
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let rhs = jg1[i][0] * jg2[0][j] + jg1[i][1] * jg2[1][j];
                worst = worst.max((lhs[i][j] - rhs).norm());
            }
        }
        assert!(worst < 1e-12, "cocycle residual {worst}");
    }
    // sym(MN) = sym(M) sym(N) for k <= 4
    for _ in 0..200 {
        let m = [
            [
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ],
            [
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ],
        ];
        let n = [
            [
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ],
            [
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ],
        ];
        let mn = [
            [
                m[0][0] * n[0][0] + m[0][1] * n[1][0],
                m[0][0] * n[0][1] + m[0][1] * n[1][1],
            ],
            [
                m[1][0] * n[0][0] + m[1][1] * n[1][0],
                m[1][0] * n[0][1] + m[1][1] * n[1][1],
            ],
        ];
        for k in 0..=4u32 {
            let lhs = sym_power(k, &mn);
            let rhs = sym_power(k, &m).mul(&sym_power(k, &n));
            assert!(
                lhs.max_diff(&rhs) < 1e-10,
                "sym_power homomorphism, k = {k}"
            );
        }
    }
    // weight-2 matrix is an entrywise-constant multiple of sym2(J^{-1});
    // the constant is det J (exponent 1 in det J, measured not assumed)
    let mut max_spread: f64 = 0.0;
    let mut exponent_estimate = 0.0;
    for _ in 0..200 {
        let g = random_map(&mut rng, false);
        let z = random_h3(&mut rng);
        let w = weight2_matrix(&g, &z);
        let j = multiplier_h3(&g, &z);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let inv = [
            [j[1][1] / det, -j[0][1] / det],
            [-j[1][0] / det, j[0][0] / det],
        ];
        let sig = sym_power(2, &inv);
        let mut ratios: Vec<Complex64> = Vec::new();
        for i in 0..3 {
            for jj in 0..3 {
                if sig.at(i, jj).norm() > 1e-6 {
                    ratios.push(w.at(i, jj) / sig.at(i, jj));
                }
            }
        }
        let first = ratios[0];
        for r in &ratios {
            max_spread = max_spread.max((r - first).norm());
        }
        // the ratio should be det J itself
        assert!((first - det).norm() < 1e-10 * det.norm());
        exponent_estimate += first.norm().ln() / det.norm().ln();
    }
    assert!(max_spread < 1e-10, "ratio spread {max_spread}");
    let exponent = exponent_estimate / 200.0;
    assert!((exponent - 1.0).abs() < 1e-9);
    pass(
        7,
        "cocycle < 1e-12, sym-power homomorphism < 1e-10 (k <= 4), weight-2 = \
         (det J)^1 sym2(J^-1) with ratio spread < 1e-10",
    );
}

/// Quadrature oracle for K_0: trapezoid on the integral of
/// exp(-y cosh t) over t >= 0, independent of the series/Laplace branches.
fn k0_quadrature_oracle(y: f64) -> f64 {
    let h = 0.02;
    let t_max = (1.0 + 60.0 / y).acosh() + 1.0;
    let mut sum = 0.5 * (-y).exp();
    let mut t = h;
    while t < t_max {
        sum += (-y * t.cosh()).exp();
        t += h;
    }
    sum * h
}

#[test]
fn criterion_08_bessel_kernel() {
    // ODE residual: K'' + K'/y - (1 + nu^2/y^2) K = 0, central differences
    let h = 8e-5;
    for nu in [0u8, 1] {
        let mut y = 0.5;
        while y <= 10.0 {
            let km = bessel_k(nu, y - h).unwrap();
            let k0 = bessel_k(nu, y).unwrap();
            let kp = bessel_k(nu, y + h).unwrap();
            let d2 = (kp - 2.0 * k0 + km) / (h * h);
            let d1 = (kp - km) / (2.0 * h);
            let residual = d2 + d1 / y - (1.0 + (nu as f64).powi(2) / (y * y)) * k0;
            assert!(
                residual.abs() < 1e-6,
                "nu = {nu}, y = {y}: residual {residual}"
            );
            y += 0.125;
        }
    }
    // K_0(1) against the quadrature oracle
    let oracle = k0_quadrature_oracle(1.0);
    let lib = bessel_k(0, 1.0).unwrap();
    assert!(
        (lib - oracle).abs() < 1e-9,
        "K_0(1): library {lib} vs quadrature {oracle}"
    );
    // seam: the two branches agree across the overlap window
    for nu in [0u8, 1] {
        let mut y = 6.0;
        while y <= 10.0 {
            let s = bessel_k_series(nu, y);
            let l = bessel_k_large(nu, y);
            assert!(
                ((s - l) / s).abs() < 1e-9,
                "seam mismatch at nu = {nu}, y = {y}: {s:e} vs {l:e}"
            );
            y += 0.0625;
        }
    }
    pass(
        8,
        "Bessel ODE residual < 1e-6 on [0.5, 10], K_0(1) within 1e-9 of quadrature, \
         seam mismatch < 1e-9 on [6, 10]",
    );
}

#[test]
fn criterion_09_fourier_bessel_periodicity() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    for d in [-1i64, -2, -5, -11] {
        let field = make_quadratic(d).unwrap();
        for _ in 0..25 {
            // random finite support
            let mut coeffs = Vec::new();
            for _ in 0..rng.gen_range(1..6) {
                let alpha = loop {
                    let a = (rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3));
                    if a != (0, 0) {
                        break a;
                    }
                };
                coeffs.push((
                    alpha,
                    cx(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                ));
            }
            let expansion = CuspExpansion::new(field.clone(), coeffs).unwrap();
            // fundamental-domain sample point
            let z = PointH3::new(
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
                rng.gen_range(0.6..1.8),
            )
            .unwrap();
            let base = evaluate_cusp_expansion(&expansion, &z).unwrap().value;
            // all integral translations from a small window
            for m in -2i64..=2 {
                for n in -2i64..=2 {
                    if (m, n) == (0, 0) {
                        continue;
                    }
                    let omega = arithyp::hyperbolic::embed_integral(&field, (m, n));
                    let zs = PointH3 {
                        x: z.x + omega,
                        y: z.y,
                    };
                    let moved = evaluate_cusp_expansion(&expansion, &zs).unwrap().value;
                    for (b, w) in base.iter().zip(moved.iter()) {
                        assert!(
                            (b - w).norm() <= 1e-10 * (1.0 + b.norm()),
                            "d = {d}, omega = ({m}, {n})"
                        );
                    }
                }
            }
        }
    }
    pass(
        9,
        "cusp expansions invariant under all integral translations (1e-10), \
         random supports over four fields",
    );
}

/// Dirichlet class number formula by direct character summation:
/// h = w sqrt|D| L(1, chi) / (2 pi), rounded once the tail is certified
/// below half a unit.
fn class_number_oracle(d: i64) -> u64 {
    let field = make_quadratic(d).unwrap();
    let disc = field.discriminant();
    let w = match disc {
        -3 => 6.0,
        -4 => 4.0,
        _ => 2.0,
    };
    let period = disc.unsigned_abs();
    let mut partial = 0i64;
    let mut s_max = 0i64;
    for n in 1..=period {
        partial += kronecker(disc, n as i64) as i64;
        s_max = s_max.max(partial.abs());
    }
    // |tail after M| <= 2 S / M; require the h-error below 0.4
    let factor = w * (disc.unsigned_abs() as f64).sqrt() / (2.0 * std::f64::consts::PI);
    let m = ((2.0 * s_max as f64 * factor) / 0.4).ceil() as u64 + period;
    let mut l = 0.0f64;
    for n in 1..=m {
        let chi = kronecker(disc, n as i64);
        if chi != 0 {
            l += chi as f64 / n as f64;
        }
    }
    let h = factor * l;
    let rounded = h.round();
    assert!(
        (h - rounded).abs() < 0.45,
        "oracle could not certify h for d = {d}: {h}"
    );
    rounded as u64
}

#[test]
fn criterion_10_class_numbers_cusps_eisenstein() {
    for d in 3..=100i64 {
        let d = -d;
        if !arithyp::intpoly::is_squarefree_i64(d) {
            continue;
        }
        let h = class_number(&make_quadratic(d).unwrap()).unwrap();
        let oracle = class_number_oracle(d);
        assert_eq!(h, oracle, "class number mismatch at d = {d}");
    }
    assert_eq!(eisenstein_dimension(-1).unwrap(), 0);
    assert_eq!(eisenstein_dimension(-3).unwrap(), 0);
    let mut vanishing = 0;
    for d in 1..=1000i64 {
        if arithyp::intpoly::is_squarefree_i64(-d) && cuspidal_vanishing_known(-d).unwrap() {
            vanishing += 1;
        }
    }
    assert_eq!(vanishing, 14);
    assert!(!cuspidal_vanishing_known(-10).unwrap());
    pass(
        10,
        "class numbers match the Dirichlet-formula oracle exactly on 3 <= |d| <= 100; \
         Eisenstein dimensions 0 at d = -1, -3; vanishing list has exactly 14 fields",
    );
}

#[test]
fn criterion_11_exact_arithmetic_suite() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0011);
    let alg = QuaternionAlgebra::rational(-1, -1).unwrap();
    let algs = [
        QuaternionAlgebra::rational(-1, -1).unwrap(),
        QuaternionAlgebra::rational(2, -3).unwrap(),
        QuaternionAlgebra::rational(-5, 7).unwrap(),
    ];
    let _ = alg;
    let mut rand_elem = |alg: &QuaternionAlgebra| {
        let mut c = || rq(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
        alg.element_from_rationals([c(), c(), c(), c()])
    };
    for round in 0..1000 {
        let alg = &algs[round % algs.len()];
        let u = rand_elem(alg);
        let v = rand_elem(alg);
        let w = rand_elem(alg);
        // associativity and distributivity, exact
        let uv_w = u.multiply(&v).unwrap().multiply(&w).unwrap();
        let u_vw = u.multiply(&v.multiply(&w).unwrap()).unwrap();
        assert_eq!(uv_w, u_vw, "associativity");
        let lhs = u.multiply(&v.add(&w).unwrap()).unwrap();
        let rhs = u
            .multiply(&v)
            .unwrap()
            .add(&u.multiply(&w).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "distributivity");
        // anti-involution
        let lhs = u.multiply(&v).unwrap().conjugate();
        let rhs = v.conjugate().multiply(&u.conjugate()).unwrap();
        assert_eq!(lhs, rhs, "conj(uv) = conj(v) conj(u)");
        let u_conj_u = u.multiply(&u.conjugate()).unwrap();
        let nrd_elem = alg.element([
            u.reduced_norm(),
            alg.field().zero(),
            alg.field().zero(),
            alg.field().zero(),
        ]);
        assert_eq!(u_conj_u, nrd_elem, "u conj(u) = nrd(u)");
        // multiplicativity of nrd, linearity of trd
        let uv = u.multiply(&v).unwrap();
        assert_eq!(
            uv.reduced_norm(),
            alg.field().mul(&u.reduced_norm(), &v.reduced_norm()),
            "nrd multiplicative"
        );
        assert_eq!(
            u.add(&v).unwrap().reduced_trace(),
            alg.field().add(&u.reduced_trace(), &v.reduced_trace()),
            "trd additive"
        );
        // matrix embedding: homomorphism intertwining (det, tr) = (nrd, trd)
        let mu = u.matrix_embedding();
        let mv = v.matrix_embedding();
        assert_eq!(uv.matrix_embedding(), mu.mul(&mv), "embedding homomorphism");
        let det = mu.det();
        assert!(det.im.is_zero());
        assert_eq!(det.re, u.reduced_norm(), "det = nrd");
        let tr = mu.trace();
        assert!(tr.im.is_zero());
        assert_eq!(tr.re, u.reduced_trace(), "tr = trd");
    }
    pass(
        11,
        "ring axioms, anti-involution, nrd multiplicativity, and embedding \
         intertwining hold exactly on 1000 randomized rational quaternions",
    );
}
