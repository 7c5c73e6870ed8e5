//! Fourier-Bessel terms of weight-two expansions at a cusp.
//!
//! A term indexed by a nonzero integral element alpha of an imaginary
//! quadratic field K, with coefficient c, is
//!
//! ```text
//! c * y^2 * ( -i/2 K_1(t), K_0(t), i/2 K_1(t) ) * psi(alpha x / sqrt(D))
//! ```
//!
//! where t = 4 pi |alpha| y / sqrt(|D|) and psi(w) = exp(2 pi i (w + conj w)).
//! The i in the exponent makes psi a genuine unitary character of the cusp
//! lattice: 2 Re(alpha omega / sqrt(D)) is an integer for integral alpha and
//! omega, which is exactly the periodicity the expansion asserts.

use alloc::collections::BTreeMap;
use num_complex::Complex64;
// under cfg(test) std is linked and its inherent float methods shadow these
#[allow(unused_imports)]
use num_traits::Float;

use super::{bessel_k, PointH3};
use crate::error::GeomError;
use crate::numfield::QuadraticField;

/// Complex embedding of the integral element m + n w, with
/// w = (D + i sqrt|D|)/2 the upper-half-plane root.
pub fn embed_integral(field: &QuadraticField, alpha: (i64, i64)) -> Complex64 {
    let disc = field.discriminant() as f64;
    let (m, n) = (alpha.0 as f64, alpha.1 as f64);
    Complex64::new(m + n * disc / 2.0, n * (-disc).sqrt() / 2.0)
}

/// One term of the expansion, as a complex 3-vector.
pub fn fourier_bessel_term(
    field: &QuadraticField,
    alpha: (i64, i64),
    c: Complex64,
    z: &PointH3,
) -> Result<[Complex64; 3], GeomError> {
    if !field.is_imaginary() {
        return Err(GeomError::Field(
            crate::error::FieldError::NotImaginaryQuadratic,
        ));
    }
    if alpha == (0, 0) {
        return Err(GeomError::ZeroFourierIndex);
    }
    let disc = field.discriminant() as f64;
    let alpha_c = embed_integral(field, alpha);
    let t = 4.0 * core::f64::consts::PI * alpha_c.norm() * z.y / (-disc).sqrt();
    let k0 = bessel_k(0, t)?;
    let k1 = bessel_k(1, t)?;
    // psi(alpha x / sqrt(D)): sqrt(D) = i sqrt|D|, so
    // Re(alpha x / sqrt D) = Im(alpha x) / sqrt|D|
    let phase = 4.0 * core::f64::consts::PI * (alpha_c * z.x).im / (-disc).sqrt();
    let psi = Complex64::new(0.0, phase).exp();
    let scale = c * z.y * z.y * psi;
    let half_i = Complex64::new(0.0, 0.5);
    Ok([
        -half_i * k1 * scale,
        Complex64::new(k0, 0.0) * scale,
        half_i * k1 * scale,
    ])
}

/// A finite collection of Fourier-Bessel coefficients c(alpha), alpha != 0,
/// over an imaginary quadratic field.
#[derive(Clone, Debug)]
pub struct CuspExpansion {
    field: QuadraticField,
    coefficients: BTreeMap<(i64, i64), Complex64>,
}

impl CuspExpansion {
    pub fn new(
        field: QuadraticField,
        coefficients: impl IntoIterator<Item = ((i64, i64), Complex64)>,
    ) -> Result<Self, GeomError> {
        if !field.is_imaginary() {
            return Err(GeomError::Field(
                crate::error::FieldError::NotImaginaryQuadratic,
            ));
        }
        let mut map = BTreeMap::new();
        for (alpha, c) in coefficients {
            if alpha == (0, 0) {
                return Err(GeomError::ZeroFourierIndex);
            }
            map.insert(alpha, c);
        }
        Ok(CuspExpansion {
            field,
            coefficients: map,
        })
    }

    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    pub fn coefficients(&self) -> &BTreeMap<(i64, i64), Complex64> {
        &self.coefficients
    }
}

/// Value of a truncated expansion together with a crude tail hint.
#[derive(Clone, Copy, Debug)]
pub struct ExpansionValue {
    pub value: [Complex64; 3],
    /// Size estimate for the omitted tail: the Bessel weight of the nearest
    /// lattice point outside the support, scaled by the largest coefficient.
    /// A heuristic, not a certified bound.
    pub tail_hint: f64,
}

/// Sum of the expansion's terms at z.
pub fn evaluate_cusp_expansion(
    expansion: &CuspExpansion,
    z: &PointH3,
) -> Result<ExpansionValue, GeomError> {
    let mut value = [Complex64::new(0.0, 0.0); 3];
    for (&alpha, &c) in &expansion.coefficients {
        let term = fourier_bessel_term(&expansion.field, alpha, c, z)?;
        for (acc, t) in value.iter_mut().zip(term.iter()) {
            *acc += t;
        }
    }
    let tail_hint = if expansion.coefficients.is_empty() {
        0.0
    } else {
        let disc = expansion.field.discriminant() as f64;
        let c_max = expansion
            .coefficients
            .values()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        // nearest lattice point absent from the support
        let mut r_min = f64::INFINITY;
        let radius = expansion
            .coefficients
            .keys()
            .map(|&(m, n)| m.unsigned_abs().max(n.unsigned_abs()))
            .max()
            .unwrap_or(0) as i64
            + 1;
        for m in -radius..=radius {
            for n in -radius..=radius {
                if (m, n) == (0, 0) || expansion.coefficients.contains_key(&(m, n)) {
                    continue;
                }
                r_min = r_min.min(embed_integral(&expansion.field, (m, n)).norm());
            }
        }
        let t = 4.0 * core::f64::consts::PI * r_min * z.y / (-disc).sqrt();
        let k0 = bessel_k(0, t).unwrap_or(0.0);
        let k1 = bessel_k(1, t).unwrap_or(0.0);
        c_max * z.y * z.y * (k0 + k1)
    };
    Ok(ExpansionValue { value, tail_hint })
}
