//! Upper half-plane and upper half-space geometry: distances, the isometry
//! action in both its component and quaternion forms, multiplier systems,
//! symmetric powers, slash operators, Bessel kernels and Fourier-Bessel
//! terms.

mod bessel;
mod fourier;
mod multiplier;

pub use bessel::{bessel_k, bessel_k_large, bessel_k_series, BESSEL_SWITCHOVER};
pub use fourier::{
    embed_integral, evaluate_cusp_expansion, fourier_bessel_term, CuspExpansion, ExpansionValue,
};
pub use multiplier::{
    multiplier_h2, multiplier_h3, slash_h2, slash_h3, sym_power, weight2_matrix, ComplexMatrix,
};

use num_complex::Complex64;
// under cfg(test) std is linked and its inherent float methods shadow these
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::GeomError;
use crate::quatalg::quaternion_product_f64;

/// Point x + iy of the upper half-plane, y > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointH2 {
    pub x: f64,
    pub y: f64,
}

impl PointH2 {
    pub fn new(x: f64, y: f64) -> Result<Self, GeomError> {
        if y.is_nan() || y <= 0.0 {
            return Err(GeomError::NotInUpperHalf(y));
        }
        Ok(PointH2 { x, y })
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// Point (x, y) of upper half-space, x complex, y > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointH3 {
    pub x: Complex64,
    pub y: f64,
}

impl PointH3 {
    pub fn new(x1: f64, x2: f64, y: f64) -> Result<Self, GeomError> {
        if y.is_nan() || y <= 0.0 {
            return Err(GeomError::NotInUpperHalf(y));
        }
        Ok(PointH3 {
            x: Complex64::new(x1, x2),
            y,
        })
    }
}

/// A unimodular 2x2 complex matrix acting on hyperbolic space; inputs are
/// rescaled to determinant one on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MoebiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, GeomError> {
        let det = a * d - b * c;
        if det.norm() < 1e-300 {
            return Err(GeomError::SingularMatrix);
        }
        let s = det.sqrt();
        Ok(MoebiusMap {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        })
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self, GeomError> {
        MoebiusMap::new(
            Complex64::new(a, 0.0),
            Complex64::new(b, 0.0),
            Complex64::new(c, 0.0),
            Complex64::new(d, 0.0),
        )
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    /// Matrix product, renormalized.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
        .expect("product of unimodular maps is unimodular")
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn has_real_entries(&self, tol: f64) -> bool {
        self.a.im.abs() <= tol
            && self.b.im.abs() <= tol
            && self.c.im.abs() <= tol
            && self.d.im.abs() <= tol
    }
}

/// Hyperbolic distance in the upper half-plane:
/// cosh d = 1 + ((x-x')^2 + (y-y')^2) / (2yy').
pub fn h2_distance(p: &PointH2, q: &PointH2) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let c = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
    c.acosh()
}

/// Hyperbolic distance in upper half-space:
/// cosh d = 1 + (|x-x'|^2 + (y-y')^2) / (2yy').
pub fn h3_distance(p: &PointH3, q: &PointH3) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let c = 1.0 + (dx.norm_sqr() + dy * dy) / (2.0 * p.y * q.y);
    c.acosh()
}

/// Action of a real unimodular map on the upper half-plane, in the explicit
/// component form
/// Re = ((ax+b)(cx+d) + ac y^2) / ((cx+d)^2 + c^2 y^2), Im = y / (same).
pub fn h2_act(gamma: &MoebiusMap, z: &PointH2) -> PointH2 {
    let (a, b, c, d) = (gamma.a.re, gamma.b.re, gamma.c.re, gamma.d.re);
    let r = c * z.x + d;
    let den = r * r + c * c * z.y * z.y;
    PointH2 {
        x: ((a * z.x + b) * r + a * c * z.y * z.y) / den,
        y: z.y / den,
    }
}

/// Action on upper half-space in the explicit component form
/// ((ax+b) conj(cx+d) + a conj(c) y^2, y) / (|cx+d|^2 + |c|^2 y^2).
pub fn h3_act_components(gamma: &MoebiusMap, z: &PointH3) -> PointH3 {
    let r = gamma.c * z.x + gamma.d;
    let den = r.norm_sqr() + gamma.c.norm_sqr() * z.y * z.y;
    let num = (gamma.a * z.x + gamma.b) * r.conj() + gamma.a * gamma.c.conj() * z.y * z.y;
    PointH3 {
        x: num / den,
        y: z.y / den,
    }
}

/// The same action computed inside the Hamiltonians: z = x + y j and
/// gamma z = (az + b)(cz + d)^{-1}, the inverse taken in the skew-field.
pub fn h3_act_quaternion(gamma: &MoebiusMap, z: &PointH3) -> PointH3 {
    let zq = [z.x.re, z.x.im, z.y, 0.0];
    let cq = [gamma.c.re, gamma.c.im, 0.0, 0.0];
    let aq = [gamma.a.re, gamma.a.im, 0.0, 0.0];
    let mul = |u: &[f64; 4], v: &[f64; 4]| quaternion_product_f64(-1.0, -1.0, u, v);
    let az = mul(&aq, &zq);
    let num = [az[0] + gamma.b.re, az[1] + gamma.b.im, az[2], az[3]];
    let cz = mul(&cq, &zq);
    let den = [cz[0] + gamma.d.re, cz[1] + gamma.d.im, cz[2], cz[3]];
    // inverse in H: conj / nrd, with nrd the sum of squares for (-1, -1)
    let nrd = den.iter().map(|t| t * t).sum::<f64>();
    let den_inv = [den[0] / nrd, -den[1] / nrd, -den[2] / nrd, -den[3] / nrd];
    let w = mul(&num, &den_inv);
    debug_assert!(w[3].abs() < 1e-9 * (1.0 + w.iter().map(|t| t.abs()).fold(0.0, f64::max)));
    PointH3 {
        x: Complex64::new(w[0], w[1]),
        y: w[2],
    }
}

/// Embedding of the Hamiltonians into 2x2 complex matrices:
/// x + y j -> (x, -y; conj(y), conj(x)) for complex x, y.
pub fn hamilton_embed(q: &[f64; 4]) -> [[Complex64; 2]; 2] {
    let x = Complex64::new(q[0], q[1]);
    let y = Complex64::new(q[2], q[3]);
    [[x, -y], [y.conj(), x.conj()]]
}
