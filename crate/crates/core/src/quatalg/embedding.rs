//! The 2x2 matrix picture: D embeds into M_2(K(sqrt a)) by
//!
//! ```text
//! i |-> (s  0; 0 -s)    j |-> (0 1; b 0)    ij |-> (0 s; -bs 0)
//! ```
//!
//! with s = sqrt a. When a is already a square in K the same formulas are
//! used with s the actual base-field root, and every entry lands in K.

use crate::numfield::{FieldElement, NumberField};
use crate::quatalg::QuaternionElement;

/// Element re + im * s of K(sqrt a). When the embedding degenerates
/// (a square in K), im is identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElem {
    pub re: FieldElement,
    pub im: FieldElement,
}

impl ExtElem {
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// Row-major 2x2 matrix over K(sqrt a), tagged with the algebra data needed
/// to multiply its entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2Ext {
    pub entries: [[ExtElem; 2]; 2],
    field: NumberField,
    /// s^2; `None` once entries are known to live in the base field.
    ext_square: Option<FieldElement>,
}

impl Mat2Ext {
    fn ext_mul(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        let k = &self.field;
        match &self.ext_square {
            Some(a) => ExtElem {
                re: k.add(&k.mul(&x.re, &y.re), &k.mul(a, &k.mul(&x.im, &y.im))),
                im: k.add(&k.mul(&x.re, &y.im), &k.mul(&x.im, &y.re)),
            },
            None => ExtElem {
                re: k.mul(&x.re, &y.re),
                im: k.zero(),
            },
        }
    }

    fn ext_add(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        let k = &self.field;
        ExtElem {
            re: k.add(&x.re, &y.re),
            im: k.add(&x.im, &y.im),
        }
    }

    fn ext_sub(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        let k = &self.field;
        ExtElem {
            re: k.sub(&x.re, &y.re),
            im: k.sub(&x.im, &y.im),
        }
    }

    pub fn mul(&self, other: &Mat2Ext) -> Mat2Ext {
        debug_assert_eq!(self.ext_square, other.ext_square);
        let e = |i: usize, j: usize| -> ExtElem {
            self.ext_add(
                &self.ext_mul(&self.entries[i][0], &other.entries[0][j]),
                &self.ext_mul(&self.entries[i][1], &other.entries[1][j]),
            )
        };
        Mat2Ext {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            field: self.field.clone(),
            ext_square: self.ext_square.clone(),
        }
    }

    pub fn det(&self) -> ExtElem {
        self.ext_sub(
            &self.ext_mul(&self.entries[0][0], &self.entries[1][1]),
            &self.ext_mul(&self.entries[0][1], &self.entries[1][0]),
        )
    }

    pub fn trace(&self) -> ExtElem {
        self.ext_add(&self.entries[0][0], &self.entries[1][1])
    }

    pub fn is_identity(&self) -> bool {
        let one = self.field.one();
        self.entries[0][0].re == one
            && self.entries[1][1].re == one
            && self.entries[0][0].im.is_zero()
            && self.entries[1][1].im.is_zero()
            && self.entries[0][1].is_zero()
            && self.entries[1][0].is_zero()
    }
}

pub(super) fn matrix_embedding(u: &QuaternionElement) -> Mat2Ext {
    let alg = u.algebra();
    let k = alg.field().clone();
    let b = alg.b();
    let c = u.coords();
    // entries: (x0 + x1 s, x2 + x3 s; b(x2 - x3 s), x0 - x1 s)
    match k.sqrt(alg.a()) {
        Some(root) => {
            // a is a square: s is the base-field root and entries stay in K
            let z = k.zero();
            let e = |re: &FieldElement| ExtElem {
                re: re.clone(),
                im: z.clone(),
            };
            let x1s = k.mul(&c[1], &root);
            let x3s = k.mul(&c[3], &root);
            let m00 = k.add(&c[0], &x1s);
            let m01 = k.add(&c[2], &x3s);
            let m10 = k.mul(b, &k.sub(&c[2], &x3s));
            let m11 = k.sub(&c[0], &x1s);
            Mat2Ext {
                entries: [[e(&m00), e(&m01)], [e(&m10), e(&m11)]],
                field: k,
                ext_square: None,
            }
        }
        None => {
            let m00 = ExtElem {
                re: c[0].clone(),
                im: c[1].clone(),
            };
            let m01 = ExtElem {
                re: c[2].clone(),
                im: c[3].clone(),
            };
            let m10 = ExtElem {
                re: k.mul(b, &c[2]),
                im: k.neg(&k.mul(b, &c[3])),
            };
            let m11 = ExtElem {
                re: c[0].clone(),
                im: k.neg(&c[1]),
            };
            Mat2Ext {
                entries: [[m00, m01], [m10, m11]],
                field: k,
                ext_square: Some(alg.a().clone()),
            }
        }
    }
}
