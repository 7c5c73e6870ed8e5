//! Number fields and their exact element arithmetic.
//!
//! Three kinds of base field are supported: the rationals, quadratic fields
//! `Q(sqrt d)`, and monogenic fields `Q[x]/(f)` whose power basis is known to
//! give the full ring of integers (squarefree polynomial discriminant, or a
//! fundamental discriminant in degree 2). Elements are exact rational
//! coordinate vectors on the integral basis: {1} over Q, {1, w} with
//! w = (D + sqrt D)/2 over a quadratic field of discriminant D, and powers
//! of the generator for monogenic fields.

mod classno;
mod ideals;
mod splitting;

pub use classno::class_number;
pub use ideals::{ideal_counts, prime_power_ideal_count, IdealCountSequence};
pub use splitting::{
    kronecker, place_labels, places_above, splitting_type, tame_symbol_at, valuation_at,
    LocalPlace, PrimeIdeal,
};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::FieldError;
use crate::intpoly::{self, IPoly};

/// An imaginary or real quadratic field Q(sqrt d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticField {
    d: i64,
    disc: i64,
}

impl QuadraticField {
    /// The squarefree integer defining the field.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// Field discriminant: d when d = 1 mod 4, else 4d.
    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    /// (real places, complex places).
    pub fn signature(&self) -> (u32, u32) {
        if self.d < 0 {
            (0, 1)
        } else {
            (2, 0)
        }
    }

    pub fn is_imaginary(&self) -> bool {
        self.d < 0
    }

    /// Minimal polynomial of the integral generator w = (D + sqrt D)/2:
    /// x^2 - D x + (D^2 - D)/4.
    pub fn generator_min_poly(&self) -> IPoly {
        let d = BigInt::from(self.disc);
        let norm = (&d * &d - &d) / BigInt::from(4);
        vec![norm, -d, BigInt::one()]
    }
}

/// Constructs Q(sqrt d) for squarefree d different from 0 and 1.
pub fn make_quadratic(d: i64) -> Result<QuadraticField, FieldError> {
    if d == 0 || d == 1 {
        return Err(FieldError::ForbiddenD(d));
    }
    if !intpoly::is_squarefree_i64(d) {
        return Err(FieldError::NotSquarefree(d));
    }
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    Ok(QuadraticField { d, disc })
}

/// A field `Q[x]/(f)` with monic integral f whose power basis generates the
/// maximal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicField {
    min_poly: IPoly,
    disc: BigInt,
    signature: (u32, u32),
    /// Isolating intervals of the real roots, increasing.
    real_root_intervals: Vec<(BigRational, BigRational)>,
}

impl MonogenicField {
    pub fn min_poly(&self) -> &IPoly {
        &self.min_poly
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn signature(&self) -> (u32, u32) {
        self.signature
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }
}

/// Constructs a monogenic field from the coefficients of its defining
/// polynomial, constant term first.
///
/// The polynomial must be monic, irreducible over Q, and have squarefree
/// discriminant (for degree 2 a fundamental discriminant is enough); these
/// conditions make the power basis integral, so that factoring f mod p
/// reads off the splitting of p with no index correction.
pub fn make_monogenic(coeffs: &[BigInt]) -> Result<MonogenicField, FieldError> {
    let min_poly = intpoly::trim_i(coeffs.to_vec());
    let n = intpoly::degree_i(&min_poly).ok_or(FieldError::DegreeTooSmall)?;
    if n < 2 {
        return Err(FieldError::DegreeTooSmall);
    }
    if !min_poly[n].is_one() {
        return Err(FieldError::NotMonic);
    }
    if !intpoly::irreducible_over_q(&min_poly)? {
        return Err(FieldError::Reducible(format!(
            "degree {n} polynomial has a nontrivial factor"
        )));
    }
    let disc = intpoly::discriminant_monic(&min_poly);
    if disc.is_zero() {
        return Err(FieldError::ZeroDiscriminant);
    }
    if !intpoly::is_squarefree_big(&disc)? && !(n == 2 && is_fundamental_disc(&disc)) {
        return Err(FieldError::DiscriminantNotSquarefree(format!(
            "disc = {disc}"
        )));
    }
    let fq = intpoly::to_q(&min_poly);
    let real_root_intervals = intpoly::isolate_real_roots(&fq);
    let r = real_root_intervals.len() as u32;
    let s = (n as u32 - r) / 2;
    Ok(MonogenicField {
        min_poly,
        disc,
        signature: (r, s),
        real_root_intervals,
    })
}

fn is_fundamental_disc(disc: &BigInt) -> bool {
    let four = BigInt::from(4);
    if (disc % &four).is_zero() {
        let m = disc / &four;
        let r = mod4(&m);
        (r == 2 || r == 3) && intpoly::is_squarefree_big(&m).unwrap_or(false)
    } else {
        mod4(disc) == 1 && intpoly::is_squarefree_big(disc).unwrap_or(false)
    }
}

fn mod4(n: &BigInt) -> u8 {
    let mut r = n % BigInt::from(4);
    if r.is_negative() {
        r += BigInt::from(4);
    }
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0) as u8
}

/// A base field for quaternion algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumberField {
    Rational,
    Quadratic(QuadraticField),
    Monogenic(MonogenicField),
}

impl NumberField {
    pub fn degree(&self) -> usize {
        match self {
            NumberField::Rational => 1,
            NumberField::Quadratic(_) => 2,
            NumberField::Monogenic(m) => m.degree(),
        }
    }

    pub fn signature(&self) -> (u32, u32) {
        match self {
            NumberField::Rational => (1, 0),
            NumberField::Quadratic(q) => q.signature(),
            NumberField::Monogenic(m) => m.signature(),
        }
    }

    pub fn discriminant(&self) -> BigInt {
        match self {
            NumberField::Rational => BigInt::one(),
            NumberField::Quadratic(q) => BigInt::from(q.discriminant()),
            NumberField::Monogenic(m) => m.discriminant().clone(),
        }
    }

    /// Minimal polynomial of the integral basis generator; `None` over Q.
    pub fn generator_min_poly(&self) -> Option<IPoly> {
        match self {
            NumberField::Rational => None,
            NumberField::Quadratic(q) => Some(q.generator_min_poly()),
            NumberField::Monogenic(m) => Some(m.min_poly().clone()),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coords: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, r: BigRational) -> FieldElement {
        let mut coords = vec![BigRational::zero(); self.degree()];
        coords[0] = r;
        FieldElement { coords }
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Element from coordinates on the integral basis.
    pub fn element(&self, coords: Vec<BigRational>) -> Result<FieldElement, FieldError> {
        if coords.len() != self.degree() {
            return Err(FieldError::BadElement(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(FieldElement { coords })
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match self {
            NumberField::Rational => FieldElement {
                coords: vec![&a.coords[0] * &b.coords[0]],
            },
            NumberField::Quadratic(q) => {
                // w^2 = D w - (D^2 - D)/4
                let disc = BigRational::from_integer(BigInt::from(q.discriminant()));
                let wnorm = (&disc * &disc - &disc) / BigRational::from_integer(BigInt::from(4));
                let (u1, v1) = (&a.coords[0], &a.coords[1]);
                let (u2, v2) = (&b.coords[0], &b.coords[1]);
                let vv = v1 * v2;
                let c0 = u1 * u2 - &vv * &wnorm;
                let c1 = u1 * v2 + u2 * v1 + &vv * &disc;
                FieldElement {
                    coords: vec![c0, c1],
                }
            }
            NumberField::Monogenic(m) => {
                let prod = intpoly::mul_q(&a.coords, &b.coords);
                let fq = intpoly::to_q(m.min_poly());
                let (_, r) = intpoly::divmod_q(&prod, &fq);
                let mut coords = r;
                coords.resize(m.degree(), BigRational::zero());
                FieldElement { coords }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        match self {
            NumberField::Rational => Some(FieldElement {
                coords: vec![BigRational::one() / &a.coords[0]],
            }),
            NumberField::Quadratic(_) => {
                // a * conj(a) = N(a)
                let n = self.norm(a);
                let conj = self.quadratic_conj(a);
                let inv_n = BigRational::one() / n;
                Some(FieldElement {
                    coords: conj.coords.iter().map(|c| c * &inv_n).collect(),
                })
            }
            NumberField::Monogenic(m) => {
                let fq = intpoly::to_q(m.min_poly());
                let (d, _, t) = intpoly::ext_gcd_q(&fq, &a.coords);
                debug_assert_eq!(intpoly::degree_q(&d), Some(0));
                let (_, r) = intpoly::divmod_q(&t, &fq);
                let mut coords = r;
                coords.resize(m.degree(), BigRational::zero());
                Some(FieldElement { coords })
            }
        }
    }

    pub fn pow(&self, a: &FieldElement, k: i64) -> Option<FieldElement> {
        if k < 0 {
            let inv = self.inv(a)?;
            return self.pow(&inv, -k);
        }
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        Some(acc)
    }

    /// Galois conjugate in a quadratic field: w -> D - w.
    pub fn quadratic_conj(&self, a: &FieldElement) -> FieldElement {
        match self {
            NumberField::Quadratic(q) => {
                let disc = BigRational::from_integer(BigInt::from(q.discriminant()));
                let (u, v) = (&a.coords[0], &a.coords[1]);
                FieldElement {
                    coords: vec![u + v * &disc, -v.clone()],
                }
            }
            _ => a.clone(),
        }
    }

    /// Field norm down to Q.
    pub fn norm(&self, a: &FieldElement) -> BigRational {
        match self {
            NumberField::Rational => a.coords[0].clone(),
            NumberField::Quadratic(q) => {
                // N(u + v w) = u^2 + uvD + v^2 (D^2-D)/4
                let disc = BigRational::from_integer(BigInt::from(q.discriminant()));
                let wnorm = (&disc * &disc - &disc) / BigRational::from_integer(BigInt::from(4));
                let (u, v) = (&a.coords[0], &a.coords[1]);
                u * u + u * v * &disc + v * v * &wnorm
            }
            NumberField::Monogenic(m) => {
                // N(g(t)) = Res(f, G)/den^n for g = G/den with G integral
                let n = m.degree();
                let mut den = BigInt::one();
                for c in &a.coords {
                    den = num_integer::lcm(den, c.denom().clone());
                }
                let g_int: IPoly = a
                    .coords
                    .iter()
                    .map(|c| c.numer() * (&den / c.denom()))
                    .collect();
                let g_int = intpoly::trim_i(g_int);
                if g_int.is_empty() {
                    return BigRational::zero();
                }
                let res = intpoly::resultant_i(m.min_poly(), &g_int);
                BigRational::new(res, num_traits::pow::pow(den, n))
            }
        }
    }

    /// Field trace down to Q.
    pub fn trace(&self, a: &FieldElement) -> BigRational {
        match self {
            NumberField::Rational => a.coords[0].clone(),
            NumberField::Quadratic(q) => {
                let disc = BigRational::from_integer(BigInt::from(q.discriminant()));
                let (u, v) = (&a.coords[0], &a.coords[1]);
                u * BigRational::from_integer(BigInt::from(2)) + v * &disc
            }
            NumberField::Monogenic(m) => {
                let sums = power_sums(m.min_poly());
                a.coords
                    .iter()
                    .zip(&sums)
                    .map(|(c, s)| c * s)
                    .fold(BigRational::zero(), |acc, x| acc + x)
            }
        }
    }

    /// Signs of the element under each real embedding, in increasing order
    /// of the embedded generator. Empty when there are no real places.
    pub fn real_embedding_signs(&self, a: &FieldElement) -> Vec<i8> {
        match self {
            NumberField::Rational => vec![rational_sign(&a.coords[0])],
            NumberField::Quadratic(q) => {
                if q.d < 0 {
                    return vec![];
                }
                let disc = q.discriminant();
                // a = u + v w embeds to (2u + vD +- v sqrt D)/2
                let u2 = &a.coords[0] * BigRational::from_integer(BigInt::from(2));
                let big_a = &u2 + &a.coords[1] * BigRational::from_integer(BigInt::from(disc));
                let v = a.coords[1].clone();
                vec![
                    sign_a_plus_b_sqrt(&big_a, &(-v.clone()), disc),
                    sign_a_plus_b_sqrt(&big_a, &v, disc),
                ]
            }
            NumberField::Monogenic(m) => {
                let fq = intpoly::to_q(m.min_poly());
                m.real_root_intervals
                    .iter()
                    .map(|iv| intpoly::sign_at_root(&a.coords, &fq, iv))
                    .collect()
            }
        }
    }

    /// Attempts an exact square root.
    ///
    /// Complete over Q and quadratic fields, and for rational elements of
    /// odd-degree monogenic fields; for other monogenic elements `None`
    /// means "not found", not a proof of non-squareness.
    pub fn sqrt(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return Some(self.zero());
        }
        match self {
            NumberField::Rational => rational_sqrt(&a.coords[0]).map(|r| self.from_rational(r)),
            NumberField::Quadratic(q) => self.quadratic_sqrt(q, a),
            NumberField::Monogenic(m) => {
                if a.is_rational() && m.degree() % 2 == 1 {
                    rational_sqrt(&a.coords[0]).map(|r| self.from_rational(r))
                } else {
                    None
                }
            }
        }
    }

    fn quadratic_sqrt(&self, q: &QuadraticField, a: &FieldElement) -> Option<FieldElement> {
        let disc = BigRational::from_integer(BigInt::from(q.discriminant()));
        let two = BigRational::from_integer(BigInt::from(2));
        // write a = U + V sqrt(D)
        let big_u = &a.coords[0] + &a.coords[1] * &disc / &two;
        let big_v = &a.coords[1] / &two;
        if big_v.is_zero() {
            // rational element: square root is rational or rational * sqrt d
            if let Some(r) = rational_sqrt(&big_u) {
                return Some(self.from_rational(r));
            }
            let dd = BigRational::from_integer(BigInt::from(q.d));
            if let Some(t) = rational_sqrt(&(&big_u / &dd)) {
                // sqrt d on the {1, w} basis
                let sqrt_d = self.sqrt_d_coords(q);
                return Some(FieldElement {
                    coords: sqrt_d.coords.iter().map(|c| c * &t).collect(),
                });
            }
            return None;
        }
        // y = P + Q sqrt(D); P = V/(2Q), and s = Q^2 satisfies
        // D s^2 - U s + V^2/4... derived from P^2 + Q^2 D = U, 2PQ = V:
        // 4 D s^2 - 4 U s + V^2 = 0, s = (U +- sqrt(U^2 - D V^2)) / (2D)
        let norm = &big_u * &big_u - &disc * &big_v * &big_v;
        let w = rational_sqrt(&norm)?;
        for sign in [1i64, -1] {
            let num = &big_u + &w * BigRational::from_integer(BigInt::from(sign));
            let s = &num / (&two * &disc);
            if s.is_negative() || s.is_zero() {
                continue;
            }
            if let Some(qq) = rational_sqrt(&s) {
                let pp = &big_v / (&two * &qq);
                // back to the {1, w} basis: P + Q sqrt D = (P - Q D) + 2Q w
                let c1 = &qq * &two;
                let c0 = &pp - &qq * &disc;
                let cand = FieldElement {
                    coords: vec![c0, c1],
                };
                if self.mul(&cand, &cand) == *a {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Coordinates of sqrt(d) on the {1, w} basis.
    fn sqrt_d_coords(&self, q: &QuadraticField) -> FieldElement {
        // sqrt(D) = 2w - D; for D = 4d, sqrt(d) = sqrt(D)/2 = w - 2d
        if q.discriminant() == q.d {
            FieldElement {
                coords: vec![
                    BigRational::from_integer(BigInt::from(-q.d)),
                    BigRational::from_integer(BigInt::from(2)),
                ],
            }
        } else {
            FieldElement {
                coords: vec![
                    BigRational::from_integer(BigInt::from(-2 * q.d)),
                    BigRational::one(),
                ],
            }
        }
    }

    /// Human-readable element rendering matching the CLI grammar.
    pub fn format_element(&self, a: &FieldElement) -> String {
        match self {
            NumberField::Rational => format_rational(&a.coords[0]),
            _ => {
                let mut out = String::new();
                let mut first = true;
                for (i, c) in a.coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first && !c.is_negative() {
                        out.push('+');
                    }
                    first = false;
                    match i {
                        0 => out.push_str(&format_rational(c)),
                        1 => {
                            out.push_str(&format_rational(c));
                            out.push_str("*w");
                        }
                        _ => {
                            out.push_str(&format_rational(c));
                            out.push_str(&format!("*w^{i}"));
                        }
                    }
                }
                if first {
                    out.push('0');
                }
                out
            }
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Power sums p_k = sum of root^k of a monic polynomial, k < deg, via
/// Newton's identities.
fn power_sums(f: &IPoly) -> Vec<BigRational> {
    let n = f.len() - 1;
    // f = x^n + a_{n-1} x^{n-1} + ... + a_0
    let a = |i: usize| BigRational::from_integer(f[i].clone());
    let mut sums: Vec<BigRational> = Vec::with_capacity(n);
    sums.push(BigRational::from_integer(BigInt::from(n as i64)));
    for k in 1..n {
        // p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0
        let mut acc = a(n - k) * BigRational::from_integer(BigInt::from(k as i64));
        for i in 1..k {
            acc += a(n - i) * &sums[k - i];
        }
        sums.push(-acc);
    }
    sums
}

fn rational_sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of A + B sqrt(D) for rational A, B and positive non-square D.
fn sign_a_plus_b_sqrt(a: &BigRational, b: &BigRational, d: i64) -> i8 {
    let sa = rational_sign(a);
    let sb = rational_sign(b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb.max(sa);
    }
    // opposite signs: compare A^2 against B^2 D
    let lhs = a * a;
    let rhs = b * b * BigRational::from_integer(BigInt::from(d));
    match lhs.cmp(&rhs) {
        core::cmp::Ordering::Greater => sa,
        core::cmp::Ordering::Less => sb,
        core::cmp::Ordering::Equal => 0,
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// An element of a [`NumberField`], as exact rational coordinates on the
/// integral basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value when [`is_rational`](Self::is_rational) holds.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.coords[0])
    }
}
