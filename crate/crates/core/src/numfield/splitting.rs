//! Prime splitting and local computations at finite places.
//!
//! A finite place of a field K = Q[x]/(F) over the rational prime p is
//! identified with a monic irreducible factor of F mod p (valid at every p
//! because the construction guarantees the power basis is integral). On top
//! of that identification sit p-adic valuations, residue-field reductions,
//! and the tame Hilbert-symbol character at odd p: the factor is Hensel
//! lifted to Z/p^M and elements are reduced against the lift.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{FieldElement, NumberField};
use crate::error::FieldError;
use crate::intpoly::{self, IPoly};
use crate::modpoly::{self, PPoly};

/// Kronecker symbol (a | n).
pub fn kronecker(a: i64, n: i64) -> i8 {
    const TAB2: [i8; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    let (mut a, mut n) = (a, n);
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut v = 0u32;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    let mut k: i8 = if v.is_multiple_of(2) {
        1
    } else {
        TAB2[a.rem_euclid(8) as usize]
    };
    if n < 0 {
        n = -n;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        a = a.rem_euclid(n);
        if a == 0 {
            return if n == 1 { k } else { 0 };
        }
        let mut v = 0u32;
        while a % 2 == 0 {
            a /= 2;
            v += 1;
        }
        if v % 2 == 1 {
            k *= TAB2[(n % 8) as usize];
        }
        if a % 4 == 3 && n % 4 == 3 {
            k = -k;
        }
        core::mem::swap(&mut a, &mut n);
    }
}

/// A prime ideal above p, described by its ramification index and residue
/// degree; norm = p^f.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeIdeal {
    pub p: u64,
    pub e: u32,
    pub f: u32,
    pub norm: u128,
}

impl PrimeIdeal {
    fn new(p: u64, e: u32, f: u32) -> Self {
        PrimeIdeal {
            p,
            e,
            f,
            norm: num_traits::pow::pow(p as u128, f as usize),
        }
    }
}

/// Splitting of the rational prime p in the field, as (e, f) data.
///
/// Quadratic fields are decided by the Kronecker symbol of the discriminant;
/// monogenic fields by factoring the defining polynomial mod p.
pub fn splitting_type(field: &NumberField, p: u64) -> Vec<PrimeIdeal> {
    match field {
        NumberField::Rational => vec![PrimeIdeal::new(p, 1, 1)],
        NumberField::Quadratic(q) => match kronecker(q.discriminant(), p as i64) {
            1 => vec![PrimeIdeal::new(p, 1, 1), PrimeIdeal::new(p, 1, 1)],
            -1 => vec![PrimeIdeal::new(p, 1, 2)],
            _ => vec![PrimeIdeal::new(p, 2, 1)],
        },
        NumberField::Monogenic(m) => {
            let fp = modpoly::reduce_int_poly(m.min_poly(), p);
            modpoly::splitting_pattern(&fp, p)
                .into_iter()
                .map(|(e, f)| PrimeIdeal::new(p, e as u32, f as u32))
                .collect()
        }
    }
}

/// A finite place of a (quadratic or monogenic) field, identified by an
/// irreducible factor of the generator's minimal polynomial mod p.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LocalPlace {
    pub p: u64,
    pub e: u32,
    pub f: u32,
    /// Monic irreducible factor of the generator polynomial mod p.
    pub factor: PPoly,
}

impl LocalPlace {
    pub fn ideal(&self) -> PrimeIdeal {
        PrimeIdeal::new(self.p, self.e, self.f)
    }

    pub fn norm(&self) -> u128 {
        num_traits::pow::pow(self.p as u128, self.f as usize)
    }
}

/// All places of a quadratic or monogenic field over p, canonically ordered
/// (by factor degree, then coefficients).
pub fn places_above(field: &NumberField, p: u64) -> Vec<LocalPlace> {
    let fpoly = field
        .generator_min_poly()
        .expect("places_above needs a field of degree >= 2");
    let fp = modpoly::reduce_int_poly(&fpoly, p);
    let mut out: Vec<LocalPlace> = modpoly::factor(&fp, p)
        .into_iter()
        .map(|(g, e)| {
            let f = modpoly::degree(&g).unwrap() as u32;
            LocalPlace {
                p,
                e: e as u32,
                f,
                factor: g,
            }
        })
        .collect();
    out.sort();
    out
}

/// Short display labels for the places over one p, in canonical order:
/// a single place is `p<norm>`; two places of equal norm get `p<norm>` and
/// `p<norm>bar`; further ties are numbered.
pub fn place_labels(places: &[LocalPlace]) -> Vec<String> {
    let mut out = Vec::with_capacity(places.len());
    for (i, pl) in places.iter().enumerate() {
        let same_norm_before = places[..i].iter().filter(|q| q.norm() == pl.norm()).count();
        let total_same = places.iter().filter(|q| q.norm() == pl.norm()).count();
        let base = format!("p{}", pl.norm());
        let label = if total_same == 1 {
            base
        } else {
            match same_norm_before {
                0 => base,
                1 => format!("{base}bar"),
                k => format!("{base}_{}", k + 1),
            }
        };
        out.push(label);
    }
    out
}

fn vp_big(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    v
}

/// Element as (integer polynomial in the generator, positive denominator).
fn integralize(t: &FieldElement) -> (IPoly, BigInt) {
    let mut den = BigInt::one();
    for c in t.coords() {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let poly: IPoly = t
        .coords()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (intpoly::trim_i(poly), den)
}

/// Valuation of the integral element T(theta) at an unramified (e = 1)
/// place, via the Hensel-lifted factor.
fn unramified_integral_valuation(fpoly: &IPoly, place: &LocalPlace, tpoly: &IPoly) -> u32 {
    debug_assert_eq!(place.e, 1);
    if tpoly.is_empty() {
        panic!("valuation of zero");
    }
    let norm = intpoly::resultant_i(fpoly, tpoly);
    let bound = vp_big(&norm, place.p);
    let m_exp = bound + 2;
    let (g, _) = modpoly::hensel_lift_factor(fpoly, &place.factor, place.p, m_exp);
    let modulus = num_traits::pow::pow(BigInt::from(place.p), m_exp as usize);
    let r = modpoly::poly_rem_monic_m(tpoly, &g, &modulus);
    let mut v = u32::MAX;
    for c in &r {
        if !c.is_zero() {
            v = v.min(vp_big(c, place.p));
        }
    }
    debug_assert!(v < m_exp, "precision exhausted");
    v
}

/// Residue of a unit-at-place integral element divided by p^v, as an element
/// of F_{p^f} (a polynomial mod the place factor).
fn unramified_unit_residue(fpoly: &IPoly, place: &LocalPlace, tpoly: &IPoly, v: u32) -> PPoly {
    let m_exp = v + 2;
    let (g, _) = modpoly::hensel_lift_factor(fpoly, &place.factor, place.p, m_exp);
    let modulus = num_traits::pow::pow(BigInt::from(place.p), m_exp as usize);
    let r = modpoly::poly_rem_monic_m(tpoly, &g, &modulus);
    let scale = num_traits::pow::pow(BigInt::from(place.p), v as usize);
    let reduced: Vec<BigInt> = r.iter().map(|c| c / &scale).collect();
    modpoly::reduce_int_poly(&reduced, place.p)
}

/// Valuation of a nonzero field element at a place. Supports e = 1 at any p
/// and the tamely ramified e = 2, f = 1 case at odd p.
pub fn valuation_at(
    field: &NumberField,
    place: &LocalPlace,
    t: &FieldElement,
) -> Result<i64, FieldError> {
    if t.is_zero() {
        return Err(FieldError::BadElement("valuation of zero".into()));
    }
    let fpoly = field
        .generator_min_poly()
        .ok_or_else(|| FieldError::BadElement("rational field has no places here".into()))?;
    let (tpoly, den) = integralize(t);
    let vden = vp_big(&den, place.p) as i64;
    if place.e == 1 {
        let v = unramified_integral_valuation(&fpoly, place, &tpoly) as i64;
        return Ok(v - vden);
    }
    if place.e == 2 && place.f == 1 {
        // v here = v_p(N(T)) minus the contributions of the other places
        let norm = intpoly::resultant_i(&fpoly, &tpoly);
        let mut v = vp_big(&norm, place.p) as i64;
        for other in places_above(field, place.p) {
            if other == *place {
                continue;
            }
            if other.e != 1 {
                return Err(FieldError::UnsupportedLocal(format!(
                    "unexpected ramification pattern over {}",
                    place.p
                )));
            }
            let vw = unramified_integral_valuation(&fpoly, &other, &tpoly) as i64;
            v -= vw * other.f as i64;
        }
        return Ok(v - 2 * vden);
    }
    Err(FieldError::UnsupportedLocal(format!(
        "place over {} with e = {}, f = {}",
        place.p, place.e, place.f
    )))
}

fn legendre(a: i64, p: u64) -> i8 {
    kronecker(a, p as i64)
}

/// Quadratic residue character of a place-unit element, at an odd place.
fn unit_character(
    field: &NumberField,
    place: &LocalPlace,
    t: &FieldElement,
) -> Result<i8, FieldError> {
    let fpoly = field.generator_min_poly().expect("degree >= 2");
    let (tpoly, den) = integralize(t);
    let vden = vp_big(&den, place.p);
    let p = place.p;
    if place.e == 1 {
        let v = unramified_integral_valuation(&fpoly, place, &tpoly);
        debug_assert_eq!(
            v as i64 - vden as i64,
            0,
            "element must be a unit at the place"
        );
        let res = unramified_unit_residue(&fpoly, place, &tpoly, v);
        let chi_num = modpoly::quadratic_character(&res, &place.factor, p);
        // denominator unit part contributes its own character
        let den_unit = &den / num_traits::pow::pow(BigInt::from(p), vden as usize);
        let den_red = modpoly::reduce_int_poly(&[den_unit], p);
        let chi_den = modpoly::quadratic_character(&den_red, &place.factor, p);
        return Ok(chi_num * chi_den);
    }
    // tamely ramified e = 2, f = 1: normalize to a p-integral unit and read
    // the residue at the double root, correcting for the normalizers.
    let root = { p - place.factor[0] % p } % p;
    let mut u = t.clone();
    let mut corr: i8 = 1;
    for other in places_above(field, p) {
        if other == *place {
            continue;
        }
        let vw = valuation_at(field, &other, &u)?;
        if vw == 0 {
            continue;
        }
        // corrector: a lift of the other factor, adjusted to valuation 1
        let mut s = element_from_poly(field, &other.factor);
        if valuation_at(field, &other, &s)? > 1 {
            s = field.add(&s, &field.from_integer(p as i64));
        }
        debug_assert_eq!(valuation_at(field, &other, &s)?, 1);
        let s_pow = field
            .pow(&s, -vw)
            .ok_or_else(|| FieldError::BadElement("corrector not invertible".into()))?;
        u = field.mul(&u, &s_pow);
        // residue of the corrector at the ramified place: factor evaluated
        // at the double root
        let s_res = modpoly::eval(&other.factor, root, p) as i64;
        let chi_s = legendre(s_res, p);
        // chi(u) = chi(u * s^-vw) * chi(s)^vw
        corr *= if vw % 2 == 0 { 1 } else { chi_s };
    }
    // now u is integral at every place over p: coordinates are p-integral
    let (upoly, uden) = integralize(&u);
    if vp_big(&uden, p) != 0 {
        return Err(FieldError::UnsupportedLocal(format!(
            "element not p-integral after normalization at {}",
            p
        )));
    }
    let reduced = modpoly::reduce_int_poly(&upoly, p);
    let val = modpoly::eval(&reduced, root, p);
    let den_red = {
        let pb = BigInt::from(p);
        let mut r = &uden % &pb;
        if r.is_negative() {
            r += &pb;
        }
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    };
    let val_over_den = modpoly::mulm(val, modpoly::invm(den_red, p), p);
    if val_over_den == 0 {
        return Err(FieldError::UnsupportedLocal(
            "residue vanished; element was not a unit".into(),
        ));
    }
    Ok(legendre(val_over_den as i64, p) * corr)
}

fn element_from_poly(field: &NumberField, poly: &[u64]) -> FieldElement {
    let n = field.degree();
    let mut coords = vec![BigRational::zero(); n];
    for (i, &c) in poly.iter().enumerate() {
        if i < n {
            coords[i] = BigRational::from_integer(BigInt::from(c));
        }
    }
    field.element(coords).expect("length matches degree")
}

/// Tame Hilbert symbol of the algebra (a, b) at an odd finite place:
/// the residue character of (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}.
pub fn tame_symbol_at(
    field: &NumberField,
    place: &LocalPlace,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<i8, FieldError> {
    if place.p == 2 {
        return Err(FieldError::UnsupportedLocal(
            "tame symbol undefined at even places".into(),
        ));
    }
    let va = valuation_at(field, place, a)?;
    let vb = valuation_at(field, place, b)?;
    let mut expr = field.one();
    if (va * vb) % 2 != 0 {
        expr = field.neg(&expr);
    }
    let a_pow = field
        .pow(a, vb)
        .ok_or_else(|| FieldError::BadElement("a not invertible".into()))?;
    let b_pow = field
        .pow(b, -va)
        .ok_or_else(|| FieldError::BadElement("b not invertible".into()))?;
    expr = field.mul(&expr, &field.mul(&a_pow, &b_pow));
    debug_assert_eq!(valuation_at(field, place, &expr)?, 0);
    unit_character(field, place, &expr)
}
