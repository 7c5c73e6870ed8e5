//! Multiplier systems, symmetric powers and slash operators.
//!
//! The symmetric power sigma^k acts on binary forms of degree k; its matrix
//! here is taken on the basis C(k,i) X^(k-i) Y^i (decreasing degree in the
//! first variable). That scaling is the one under which the explicit
//! weight-two automorphy matrix equals det J times sigma^2(J^{-1}).

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use super::{h2_act, h3_act_components, MoebiusMap, PointH2, PointH3};

/// Scalar multiplier on the upper half-plane: J(gamma, z) = cz + d.
pub fn multiplier_h2(gamma: &MoebiusMap, z: &PointH2) -> Complex64 {
    gamma.c * z.as_complex() + gamma.d
}

/// Matrix multiplier on upper half-space:
/// J(gamma, z) = (cx+d, -cy; conj(c) y, conj(cx+d)).
pub fn multiplier_h3(gamma: &MoebiusMap, z: &PointH3) -> [[Complex64; 2]; 2] {
    let r = gamma.c * z.x + gamma.d;
    let s = gamma.c * z.y;
    [[r, -s], [s.conj(), r.conj()]]
}

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zero(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        debug_assert_eq!(self.n, other.n);
        let mut out = ComplexMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let s = self.at(i, k);
                if s.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..self.n {
                    *out.at_mut(i, j) += s * other.at(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j) * v[j]).sum())
            .collect()
    }

    /// Largest entrywise absolute difference.
    pub fn max_diff(&self, other: &ComplexMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Matrix of the k-th symmetric power of m on degree-k binary forms, basis
/// C(k,i) X^(k-i) Y^i. sigma^0 = (1), sigma^1 = m, and sigma^k(MN) =
/// sigma^k(M) sigma^k(N).
pub fn sym_power(k: u32, m: &[[Complex64; 2]; 2]) -> ComplexMatrix {
    let n = (k + 1) as usize;
    let (a, b, c, d) = (m[0][0], m[0][1], m[1][0], m[1][1]);
    let mut out = ComplexMatrix::zero(n);
    for j in 0..n {
        // column j: coefficients of (aX + cY)^(k-j) (bX + dY)^j
        let col = binom_product_coeffs(k as usize - j, a, c, j, b, d);
        for (i, coeff) in col.into_iter().enumerate() {
            // basis rescaling: entry *= C(k,j)/C(k,i)
            *out.at_mut(i, j) = coeff * (binomial(k, j as u32) / binomial(k, i as u32));
        }
    }
    out
}

/// Coefficients of (pX + qY)^r (sX + tY)^s_pow in the monomial basis
/// X^(n-i) Y^i.
fn binom_product_coeffs(
    r: usize,
    p: Complex64,
    q: Complex64,
    s_pow: usize,
    s: Complex64,
    t: Complex64,
) -> Vec<Complex64> {
    let expand = |deg: usize, u: Complex64, v: Complex64| -> Vec<Complex64> {
        // (uX + vY)^deg
        (0..=deg)
            .map(|i| {
                let mut acc = Complex64::new(binomial(deg as u32, i as u32), 0.0);
                for _ in 0..deg - i {
                    acc *= u;
                }
                for _ in 0..i {
                    acc *= v;
                }
                acc
            })
            .collect()
    };
    let f = expand(r, p, q);
    let g = expand(s_pow, s, t);
    let mut out = vec![Complex64::new(0.0, 0.0); r + s_pow + 1];
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a 2x2 complex matrix.
pub fn invert2(m: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    [
        [m[1][1] / det, -m[0][1] / det],
        [-m[1][0] / det, m[0][0] / det],
    ]
}

/// The explicit weight-two automorphy matrix at (gamma, z): with r = cx + d
/// and s = cy,
///
/// ```text
///       1      ( conj(r)^2        2 conj(r) s        s^2   )
/// ------------ ( -conj(r) conj(s) |r|^2 - |s|^2      r s   )
/// |r|^2 + |s|^2( conj(s)^2        -2 r conj(s)       r^2   )
/// ```
pub fn weight2_matrix(gamma: &MoebiusMap, z: &PointH3) -> ComplexMatrix {
    let r = gamma.c * z.x + gamma.d;
    let s = gamma.c * z.y;
    let n = r.norm_sqr() + s.norm_sqr();
    let rc = r.conj();
    let sc = s.conj();
    let mut m = ComplexMatrix::zero(3);
    let rows = [
        [rc * rc, 2.0 * rc * s, s * s],
        [
            -rc * sc,
            Complex64::new(r.norm_sqr() - s.norm_sqr(), 0.0),
            r * s,
        ],
        [sc * sc, -2.0 * r * sc, r * r],
    ];
    for (i, row) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            *m.at_mut(i, j) = entry / n;
        }
    }
    m
}

/// Weight-k slash operator on the upper half-plane:
/// (F |_k gamma)(z) = J(gamma, z)^{-k} F(gamma z).
pub fn slash_h2<F>(f: F, k: i32, gamma: MoebiusMap) -> impl Fn(&PointH2) -> Complex64
where
    F: Fn(&PointH2) -> Complex64,
{
    move |z| {
        let j = multiplier_h2(&gamma, z);
        j.powi(-k) * f(&h2_act(&gamma, z))
    }
}

/// Weight-k slash operator on upper half-space:
/// (F |_k gamma)(z) = sigma^k(J(gamma, z)^{-1}) F(gamma z).
pub fn slash_h3<F>(f: F, k: u32, gamma: MoebiusMap) -> impl Fn(&PointH3) -> Vec<Complex64>
where
    F: Fn(&PointH3) -> Vec<Complex64>,
{
    move |z| {
        let j = multiplier_h3(&gamma, z);
        let sig = sym_power(k, &invert2(&j));
        sig.mul_vec(&f(&h3_act_components(&gamma, z)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn multipliers_at_identity_and_translations() {
        let z = PointH3::new(0.3, -0.6, 1.4).unwrap();
        let id = MoebiusMap::identity();
        let j = multiplier_h3(&id, &z);
        assert_eq!(j[0][0], cx(1.0, 0.0));
        assert_eq!(j[0][1], cx(0.0, 0.0));
        let t = MoebiusMap::new(cx(1.0, 0.0), cx(0.5, 2.0), cx(0.0, 0.0), cx(1.0, 0.0)).unwrap();
        let j = multiplier_h3(&t, &z);
        assert_eq!(j[0][0], cx(1.0, 0.0));
        assert_eq!(j[1][0], cx(0.0, 0.0));
        let z2 = PointH2::new(0.7, 0.9).unwrap();
        assert_eq!(multiplier_h2(&MoebiusMap::identity(), &z2), cx(1.0, 0.0));
    }

    #[test]
    fn h3_multiplier_cocycle_and_determinant() {
        let g1 = MoebiusMap::new(cx(1.2, 0.3), cx(-0.4, 1.0), cx(0.5, -0.2), cx(1.0, 0.1)).unwrap();
        let g2 = MoebiusMap::new(cx(0.2, -1.3), cx(2.4, 0.0), cx(0.0, 0.7), cx(-1.0, 0.4)).unwrap();
        let z = PointH3::new(0.25, -1.5, 0.8).unwrap();
        // J(g1 g2, z) = J(g1, g2 z) J(g2, z)
        let lhs = multiplier_h3(&g1.compose(&g2), &z);
        let jg2 = multiplier_h3(&g2, &z);
        let jg1 = multiplier_h3(&g1, &h3_act_components(&g2, &z));
        for i in 0..2 {
            for j in 0..2 {
                let rhs = jg1[i][0] * jg2[0][j] + jg1[i][1] * jg2[1][j];
                assert!((lhs[i][j] - rhs).norm() < 1e-13);
            }
        }
        // det J = |cx+d|^2 + |c|^2 y^2
        let j = multiplier_h3(&g1, &z);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let r = g1.c * z.x + g1.d;
        let want = r.norm_sqr() + g1.c.norm_sqr() * z.y * z.y;
        assert!((det - cx(want, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn sym_power_degenerate_and_standard() {
        let m = [[cx(1.5, -0.5), cx(0.3, 0.2)], [cx(-1.0, 0.1), cx(0.4, 0.9)]];
        let s0 = sym_power(0, &m);
        assert_eq!(s0.size(), 1);
        assert!((s0.at(0, 0) - cx(1.0, 0.0)).norm() < 1e-15);
        let s1 = sym_power(1, &m);
        for (i, row) in m.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                assert!((s1.at(i, j) - entry).norm() < 1e-15);
            }
        }
        let id = sym_power(
            3,
            &[[cx(1.0, 0.0), cx(0.0, 0.0)], [cx(0.0, 0.0), cx(1.0, 0.0)]],
        );
        assert!(id.max_diff(&ComplexMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn sym_power_is_multiplicative() {
        let m = [[cx(1.1, 0.4), cx(-0.3, 0.8)], [cx(0.6, -0.2), cx(0.9, 0.5)]];
        let n = [[cx(-0.2, 1.0), cx(0.7, 0.1)], [cx(0.4, 0.4), cx(1.3, -0.6)]];
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
        for k in 0..=4 {
            let lhs = sym_power(k, &mn);
            let rhs = sym_power(k, &m).mul(&sym_power(k, &n));
            assert!(lhs.max_diff(&rhs) < 1e-10, "k = {k}");
        }
    }

    #[test]
    fn weight2_is_det_times_sym2_of_inverse_multiplier() {
        let g = MoebiusMap::new(cx(0.9, -0.7), cx(1.4, 0.3), cx(0.2, 0.6), cx(-0.8, 1.1)).unwrap();
        let z = PointH3::new(-0.4, 0.9, 1.7).unwrap();
        let w = weight2_matrix(&g, &z);
        let j = multiplier_h3(&g, &z);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let sig = sym_power(2, &invert2(&j)).scale(det);
        assert!(w.max_diff(&sig) < 1e-12);
        // identity and parabolic cases give the identity matrix
        let w_id = weight2_matrix(&MoebiusMap::identity(), &z);
        assert!(w_id.max_diff(&ComplexMatrix::identity(3)) < 1e-15);
        let t = MoebiusMap::new(cx(1.0, 0.0), cx(0.3, -2.0), cx(0.0, 0.0), cx(1.0, 0.0)).unwrap();
        let w_t = weight2_matrix(&t, &z);
        assert!(w_t.max_diff(&ComplexMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn slash_composition_h2() {
        // F a fixed smooth test function
        let f = |z: &PointH2| cx(z.x, z.y) * cx(z.x, -2.0 * z.y) + cx(0.3, 0.1);
        let g1 = MoebiusMap::from_real(2.0, 1.0, 1.0, 1.0).unwrap();
        let g2 = MoebiusMap::from_real(1.0, -1.0, 3.0, -2.0).unwrap();
        let z = PointH2::new(0.37, 0.82).unwrap();
        let k = 2;
        let lhs = slash_h2(slash_h2(f, k, g1), k, g2)(&z);
        let rhs = slash_h2(f, k, g1.compose(&g2))(&z);
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn slash_of_constant_under_translation() {
        // J = 1 for upper-triangular unipotent maps, so constants survive
        let f = |_: &PointH2| cx(1.0, 0.0);
        let t = MoebiusMap::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
        let z = PointH2::new(0.4, 1.3).unwrap();
        let v = slash_h2(f, 2, t)(&z);
        assert!((v - cx(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn slash_composition_h3() {
        let f =
            |z: &PointH3| alloc::vec![cx(z.x.re, z.y), cx(z.x.im, -z.y), cx(z.y, z.x.re * z.x.im),];
        let g1 = MoebiusMap::new(cx(1.0, 0.2), cx(0.0, -1.0), cx(0.5, 0.0), cx(1.0, 0.0)).unwrap();
        let g2 = MoebiusMap::new(cx(0.0, 1.0), cx(1.0, 1.0), cx(-1.0, 0.3), cx(0.4, 0.0)).unwrap();
        let z = PointH3::new(0.21, -0.77, 1.3).unwrap();
        let lhs = slash_h3(slash_h3(f, 2, g1), 2, g2)(&z);
        let rhs = slash_h3(f, 2, g1.compose(&g2))(&z);
        for (l, r) in lhs.iter().zip(rhs.iter()) {
            assert!((l - r).norm() < 1e-11);
        }
        // identity leaves F unchanged
        let lhs = slash_h3(f, 2, MoebiusMap::identity())(&z);
        for (l, r) in lhs.iter().zip(f(&z).iter()) {
            assert!((l - r).norm() < 1e-14);
        }
    }
}
