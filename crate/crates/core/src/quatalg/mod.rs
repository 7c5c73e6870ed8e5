//! Quaternion algebras (a, b / K): exact arithmetic, reduced norm and
//! trace, matrix embeddings, Hilbert symbols and ramification sets.

mod embedding;
mod hilbert;
mod places;
mod ramify;

pub use embedding::{ExtElem, Mat2Ext};
pub use hilbert::hilbert_symbol;
pub use places::{place_label, Place, RamificationSet};
pub use ramify::{
    discriminant_ideal, is_division, ramification_set, realize_ramification_set, DiscriminantIdeal,
    DEFAULT_SEARCH_BOUND,
};

use num_rational::BigRational;

use crate::error::QuatError;
use crate::numfield::{FieldElement, NumberField};

/// The algebra K + Ki + Kj + Kij with i^2 = a, j^2 = b, ij = -ji.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    field: NumberField,
    a: FieldElement,
    b: FieldElement,
}

impl QuaternionAlgebra {
    pub fn new(field: NumberField, a: FieldElement, b: FieldElement) -> Result<Self, QuatError> {
        if a.is_zero() || b.is_zero() {
            return Err(QuatError::ZeroEntry);
        }
        Ok(QuaternionAlgebra { field, a, b })
    }

    /// Algebra over Q with integer entries.
    pub fn rational(a: i64, b: i64) -> Result<Self, QuatError> {
        let k = NumberField::Rational;
        let (ae, be) = (k.from_integer(a), k.from_integer(b));
        QuaternionAlgebra::new(k, ae, be)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn element(&self, coords: [FieldElement; 4]) -> QuaternionElement {
        QuaternionElement {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn element_from_rationals(&self, coords: [BigRational; 4]) -> QuaternionElement {
        let [c0, c1, c2, c3] = coords;
        self.element([
            self.field.from_rational(c0),
            self.field.from_rational(c1),
            self.field.from_rational(c2),
            self.field.from_rational(c3),
        ])
    }

    pub fn zero(&self) -> QuaternionElement {
        let z = self.field.zero();
        self.element([z.clone(), z.clone(), z.clone(), z])
    }

    pub fn one(&self) -> QuaternionElement {
        let z = self.field.zero();
        self.element([self.field.one(), z.clone(), z.clone(), z])
    }

    pub fn i(&self) -> QuaternionElement {
        let z = self.field.zero();
        self.element([z.clone(), self.field.one(), z.clone(), z])
    }

    pub fn j(&self) -> QuaternionElement {
        let z = self.field.zero();
        self.element([z.clone(), z.clone(), self.field.one(), z])
    }

    pub fn ij(&self) -> QuaternionElement {
        let z = self.field.zero();
        self.element([z.clone(), z.clone(), z, self.field.one()])
    }
}

/// Coordinates of u * v on the basis (1, i, j, ij) under i^2 = a, j^2 = b,
/// ij = -ji, generic over the coefficient ring. Shared by the exact algebra
/// and the floating-point Hamiltonians of the geometry kernel.
pub fn quaternion_product<T>(
    a: &T,
    b: &T,
    u: &[T; 4],
    v: &[T; 4],
    add: &dyn Fn(&T, &T) -> T,
    sub: &dyn Fn(&T, &T) -> T,
    mul: &dyn Fn(&T, &T) -> T,
) -> [T; 4] {
    let ab = mul(a, b);
    let c0 = sub(
        &add(
            &mul(&u[0], &v[0]),
            &add(&mul(a, &mul(&u[1], &v[1])), &mul(b, &mul(&u[2], &v[2]))),
        ),
        &mul(&ab, &mul(&u[3], &v[3])),
    );
    let c1 = add(
        &add(&mul(&u[0], &v[1]), &mul(&u[1], &v[0])),
        &sub(&mul(b, &mul(&u[3], &v[2])), &mul(b, &mul(&u[2], &v[3]))),
    );
    let c2 = add(
        &add(&mul(&u[0], &v[2]), &mul(&u[2], &v[0])),
        &sub(&mul(a, &mul(&u[1], &v[3])), &mul(a, &mul(&u[3], &v[1]))),
    );
    let c3 = add(
        &add(&mul(&u[0], &v[3]), &mul(&u[3], &v[0])),
        &sub(&mul(&u[1], &v[2]), &mul(&u[2], &v[1])),
    );
    [c0, c1, c2, c3]
}

/// Element of a quaternion algebra on the basis (1, i, j, ij).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionElement {
    algebra: QuaternionAlgebra,
    coords: [FieldElement; 4],
}

impl QuaternionElement {
    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.coords
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Bilinear product under i^2 = a, j^2 = b, ij = -ji.
    pub fn multiply(&self, other: &QuaternionElement) -> Result<QuaternionElement, QuatError> {
        if self.algebra != other.algebra {
            return Err(QuatError::MixedAlgebras);
        }
        let k = &self.algebra.field;
        let coords = quaternion_product(
            &self.algebra.a,
            &self.algebra.b,
            &self.coords,
            &other.coords,
            &|x, y| k.add(x, y),
            &|x, y| k.sub(x, y),
            &|x, y| k.mul(x, y),
        );
        Ok(self.algebra.element(coords))
    }

    pub fn add(&self, other: &QuaternionElement) -> Result<QuaternionElement, QuatError> {
        if self.algebra != other.algebra {
            return Err(QuatError::MixedAlgebras);
        }
        let k = &self.algebra.field;
        let c = &self.coords;
        let d = &other.coords;
        Ok(self.algebra.element([
            k.add(&c[0], &d[0]),
            k.add(&c[1], &d[1]),
            k.add(&c[2], &d[2]),
            k.add(&c[3], &d[3]),
        ]))
    }

    pub fn sub(&self, other: &QuaternionElement) -> Result<QuaternionElement, QuatError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuaternionElement {
        let k = &self.algebra.field;
        let c = &self.coords;
        self.algebra
            .element([k.neg(&c[0]), k.neg(&c[1]), k.neg(&c[2]), k.neg(&c[3])])
    }

    /// Quaternion conjugate: trd(u) - u.
    pub fn conjugate(&self) -> QuaternionElement {
        let k = &self.algebra.field;
        let c = &self.coords;
        self.algebra
            .element([c[0].clone(), k.neg(&c[1]), k.neg(&c[2]), k.neg(&c[3])])
    }

    /// nrd(u) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
    pub fn reduced_norm(&self) -> FieldElement {
        let k = &self.algebra.field;
        let (a, b) = (&self.algebra.a, &self.algebra.b);
        let c = &self.coords;
        let sq = |x: &FieldElement| k.mul(x, x);
        let mut n = sq(&c[0]);
        n = k.sub(&n, &k.mul(a, &sq(&c[1])));
        n = k.sub(&n, &k.mul(b, &sq(&c[2])));
        n = k.add(&n, &k.mul(&k.mul(a, b), &sq(&c[3])));
        n
    }

    /// trd(u) = 2 x0.
    pub fn reduced_trace(&self) -> FieldElement {
        let k = &self.algebra.field;
        k.add(&self.coords[0], &self.coords[0])
    }

    /// Image in M_2(K(sqrt a)); see [`QuaternionAlgebra`] docs on the
    /// degenerate square case.
    pub fn matrix_embedding(&self) -> Mat2Ext {
        embedding::matrix_embedding(self)
    }
}

/// Convenience: quaternion multiplication over plain f64 coordinates.
pub fn quaternion_product_f64(a: f64, b: f64, u: &[f64; 4], v: &[f64; 4]) -> [f64; 4] {
    quaternion_product(&a, &b, u, v, &|x, y| x + y, &|x, y| x - y, &|x, y| x * y)
}
