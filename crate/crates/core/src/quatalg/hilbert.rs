//! Hilbert symbols: -1 when the local algebra is a skew-field, +1 when it
//! splits.
//!
//! Over Q every place is decided (sign criterion at infinity, tame formula
//! at odd p, the classical mod-8 criterion at 2). Over number fields the
//! real embeddings are decided by exact sign computation and the odd finite
//! places by the tame residue character; even finite places are out of
//! range here and are settled by parity inference in `ramification_set`.

use alloc::format;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::QuatError;
use crate::numfield::{kronecker, tame_symbol_at, NumberField};
use crate::quatalg::{Place, QuaternionAlgebra};

/// Hilbert symbol of the algebra at one place.
pub fn hilbert_symbol(alg: &QuaternionAlgebra, place: &Place) -> Result<i8, QuatError> {
    // A square entry splits the algebra everywhere.
    if alg.field().sqrt(alg.a()).is_some() || alg.field().sqrt(alg.b()).is_some() {
        return Ok(1);
    }
    match (alg.field(), place) {
        (NumberField::Rational, Place::RealEmbedding { index: 0 }) => {
            let a = alg.a().as_rational().expect("rational entry");
            let b = alg.b().as_rational().expect("rational entry");
            Ok(if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            })
        }
        (NumberField::Rational, Place::RationalPrime { p }) => {
            let a = alg.a().as_rational().expect("rational entry");
            let b = alg.b().as_rational().expect("rational entry");
            Ok(rational_symbol(a, b, *p))
        }
        (field, Place::RealEmbedding { index }) => {
            let r = field.signature().0;
            if *index >= r {
                return Err(QuatError::UnsupportedPlace(format!(
                    "real embedding {index} of a field with {r} real places"
                )));
            }
            let sa = field.real_embedding_signs(alg.a())[*index as usize];
            let sb = field.real_embedding_signs(alg.b())[*index as usize];
            Ok(if sa < 0 && sb < 0 { -1 } else { 1 })
        }
        (NumberField::Rational, Place::Finite(_)) => Err(QuatError::UnsupportedPlace(
            "number-field place used with a rational algebra".into(),
        )),
        (_, Place::RationalPrime { .. }) => Err(QuatError::UnsupportedPlace(
            "rational prime used with a number-field algebra".into(),
        )),
        (field, Place::Finite(lp)) => {
            if lp.p == 2 {
                return Err(QuatError::UnsupportedPlace(format!(
                    "even place over 2 of residue degree {} (wild; only parity \
                     inference applies)",
                    lp.f
                )));
            }
            tame_symbol_at(field, lp, alg.a(), alg.b()).map_err(QuatError::from)
        }
    }
}

/// v_p of a nonzero rational, and its unit part.
fn vp_rational(x: &BigRational, p: u64) -> (i64, BigRational) {
    let pb = BigInt::from(p);
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut v = 0i64;
    while (&num % &pb).is_zero() {
        num /= &pb;
        v += 1;
    }
    while (&den % &pb).is_zero() {
        den /= &pb;
        v -= 1;
    }
    (v, BigRational::new(num, den))
}

fn legendre_rational(u: &BigRational, p: u64) -> i8 {
    // (r/s | p) = (r | p)(s | p) for p-units r, s
    let pb = BigInt::from(p);
    let r = reduce_mod(u.numer(), &pb);
    let s = reduce_mod(u.denom(), &pb);
    kronecker(r, p as i64) * kronecker(s, p as i64)
}

fn reduce_mod(n: &BigInt, m: &BigInt) -> i64 {
    let mut r = n % m;
    if r.is_negative() {
        r += m;
    }
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0) as i64
}

/// Odd part of a rational mod 8 (numerator times inverse of denominator).
fn odd_rational_mod8(u: &BigRational) -> u64 {
    let eight = BigInt::from(8);
    let r = reduce_mod(u.numer(), &eight) as u64;
    let s = reduce_mod(u.denom(), &eight) as u64;
    // inverses mod 8 of odd residues are themselves
    (r * s) % 8
}

/// Hilbert symbol over Q_p for nonzero rationals.
pub fn rational_symbol(a: &BigRational, b: &BigRational, p: u64) -> i8 {
    let (alpha, u) = vp_rational(a, p);
    let (beta, w) = vp_rational(b, p);
    if p == 2 {
        // (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u)),
        // eps = (x-1)/2, omega = (x^2-1)/8 mod 2
        let eps = |x: u64| (x.wrapping_sub(1) / 2) % 2;
        let omega = |x: u64| u64::from(x == 3 || x == 5);
        let um = odd_rational_mod8(&u);
        let wm = odd_rational_mod8(&w);
        let exp = eps(um) * eps(wm)
            + (alpha.rem_euclid(2) as u64) * omega(wm)
            + (beta.rem_euclid(2) as u64) * omega(um);
        return if exp.is_multiple_of(2) { 1 } else { -1 };
    }
    // tame: (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha
    let mut s: i8 = 1;
    if alpha % 2 != 0 && beta % 2 != 0 && (p - 1) / 2 % 2 == 1 {
        s = -s;
    }
    if beta % 2 != 0 {
        s *= legendre_rational(&u, p);
    }
    if alpha % 2 != 0 {
        s *= legendre_rational(&w, p);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::make_quadratic;
    use alloc::vec::Vec;

    fn rq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn hamiltonians_ramify_at_two_and_infinity() {
        let h = QuaternionAlgebra::rational(-1, -1).unwrap();
        assert_eq!(
            hilbert_symbol(&h, &Place::RealEmbedding { index: 0 }).unwrap(),
            -1
        );
        assert_eq!(
            hilbert_symbol(&h, &Place::RationalPrime { p: 2 }).unwrap(),
            -1
        );
        for p in [3u64, 5, 7, 11, 13] {
            assert_eq!(
                hilbert_symbol(&h, &Place::RationalPrime { p }).unwrap(),
                1,
                "p = {p}"
            );
        }
    }

    #[test]
    fn split_algebra_is_plus_one_everywhere() {
        let m2 = QuaternionAlgebra::rational(1, 1).unwrap();
        assert_eq!(
            hilbert_symbol(&m2, &Place::RealEmbedding { index: 0 }).unwrap(),
            1
        );
        for p in [2u64, 3, 5, 7, 97] {
            assert_eq!(hilbert_symbol(&m2, &Place::RationalPrime { p }).unwrap(), 1);
        }
    }

    #[test]
    fn two_adic_symbol_against_mod8_search() {
        // brute force: z^2 = a x^2 + b y^2 has a 2-adically primitive
        // solution mod 8 iff the symbol is +1 (unit entries)
        let insoluble = |a: i64, b: i64| -> bool {
            for x in 0..8i64 {
                for y in 0..8i64 {
                    for z in 0..8i64 {
                        if x % 2 == 0 && y % 2 == 0 && z % 2 == 0 {
                            continue;
                        }
                        if (a * x * x + b * y * y - z * z).rem_euclid(8) == 0 {
                            return false;
                        }
                    }
                }
            }
            true
        };
        for (a, b) in [(-1i64, -1i64), (1, 1), (-1, 3), (3, 3), (-3, -3), (5, -1)] {
            let alg_symbol = rational_symbol(
                &BigRational::from_integer(BigInt::from(a)),
                &BigRational::from_integer(BigInt::from(b)),
                2,
            );
            let expected = if insoluble(a, b) { -1 } else { 1 };
            assert_eq!(alg_symbol, expected, "(a, b) = ({a}, {b})");
        }
    }

    #[test]
    fn tame_bilinearity_at_odd_place_over_quadratic_field() {
        // symbol(a, b*c) = symbol(a, b) * symbol(a, c) at a fixed odd place
        let k = NumberField::Quadratic(make_quadratic(-2).unwrap());
        let places = crate::numfield::places_above(&k, 3);
        let pl = Place::Finite(places[0].clone());
        let elems: Vec<_> = [
            (1i64, 1i64),
            (3, 1),
            (-1, 2),
            (2, -3),
            (5, 0),
            (-6, 1),
            (9, -2),
        ]
        .iter()
        .map(|&(u, v)| k.element(alloc::vec![rq(u, 1), rq(v, 1)]).unwrap())
        .collect();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let bc = k.mul(b, c);
                    if bc.is_zero() {
                        continue;
                    }
                    let alg_bc = QuaternionAlgebra::new(k.clone(), a.clone(), bc).unwrap();
                    let alg_b = QuaternionAlgebra::new(k.clone(), a.clone(), b.clone()).unwrap();
                    let alg_c = QuaternionAlgebra::new(k.clone(), a.clone(), c.clone()).unwrap();
                    // bypass the square shortcut by calling the tame symbol
                    // directly through hilbert_symbol's fallback: use plain
                    // tame symbols for all three
                    let lp = match &pl {
                        Place::Finite(lp) => lp,
                        _ => unreachable!(),
                    };
                    let s_bc = tame_symbol_at(&k, lp, alg_bc.a(), alg_bc.b()).unwrap();
                    let s_b = tame_symbol_at(&k, lp, alg_b.a(), alg_b.b()).unwrap();
                    let s_c = tame_symbol_at(&k, lp, alg_c.a(), alg_c.b()).unwrap();
                    assert_eq!(s_bc, s_b * s_c);
                }
            }
        }
    }
}
