//! Exact univariate polynomial algebra over ZZ and QQ.
//!
//! Polynomials are coefficient vectors, constant term first. The module
//! carries everything the number-field layer needs done exactly: resultants
//! and discriminants (Bareiss fraction-free determinants), Sturm chains with
//! root counting and isolation, signs of polynomials at algebraic points,
//! and irreducibility over QQ (mod-p certificates with a Kronecker
//! divisor-interpolation search as the complete fallback).

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::FieldError;

pub type IPoly = Vec<BigInt>;
pub type QPoly = Vec<BigRational>;

pub fn trim_i(mut p: IPoly) -> IPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn trim_q(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree, with deg 0 for nonzero constants; `None` for the zero polynomial.
pub fn degree_q(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn degree_i(p: &IPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn to_q(p: &[BigInt]) -> QPoly {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

pub fn eval_i(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn eval_q(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative_i(p: &[BigInt]) -> IPoly {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

pub fn derivative_q(p: &[BigRational]) -> QPoly {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

pub fn add_q(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = BigRational::zero();
        if i < a.len() {
            c += &a[i];
        }
        if i < b.len() {
            c += &b[i];
        }
        out.push(c);
    }
    trim_q(out)
}

pub fn neg_q(a: &[BigRational]) -> QPoly {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn mul_q(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim_q(out)
}

pub fn mul_i(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim_i(out)
}

/// Euclidean division over QQ; `b` must be nonzero. Returns (quotient, remainder).
pub fn divmod_q(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = degree_q(&b.to_vec()).expect("division by zero polynomial");
    let mut rem: QPoly = trim_q(a.to_vec());
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree_q(&rem) {
        if dr < db {
            break;
        }
        let coeff = &rem[dr] / &lead;
        let shift = dr - db;
        quot[shift] = coeff.clone();
        for i in 0..=db {
            let t = &b[i] * &coeff;
            rem[i + shift] -= t;
        }
        rem = trim_q(rem);
    }
    (trim_q(quot), rem)
}

/// Division of an integer polynomial by a monic integer polynomial.
/// Returns `None` when the remainder is nonzero.
pub fn divide_exact_monic(a: &[BigInt], b: &[BigInt]) -> Option<IPoly> {
    let db = degree_i(&b.to_vec())?;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut rem = trim_i(a.to_vec());
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree_i(&rem) {
        if dr < db {
            return None;
        }
        let coeff = rem[dr].clone();
        let shift = dr - db;
        quot[shift] = coeff.clone();
        for i in 0..=db {
            let t = &b[i] * &coeff;
            rem[i + shift] -= t;
        }
        rem = trim_i(rem);
    }
    Some(trim_i(quot))
}

/// Scales a rational polynomial to coprime integer coefficients with the
/// scaling factor positive, so every sign is preserved.
fn normalize_signs(p: QPoly) -> QPoly {
    if p.is_empty() {
        return p;
    }
    let mut den_lcm = BigInt::one();
    for c in &p {
        den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = num_integer::gcd(g, c.clone());
    }
    if g.is_zero() {
        return vec![];
    }
    ints.iter()
        .map(|c| BigRational::from_integer(c / &g))
        .collect()
}

/// Sturm chain of `f` (which must be squarefree): f, f', then negated
/// remainders, each normalized by a positive rational.
pub fn sturm_chain(f: &[BigRational]) -> Vec<QPoly> {
    let mut chain = Vec::new();
    let f0 = normalize_signs(trim_q(f.to_vec()));
    if f0.is_empty() {
        return chain;
    }
    let f1 = normalize_signs(derivative_q(&f0));
    chain.push(f0);
    if f1.is_empty() {
        return chain;
    }
    chain.push(f1);
    loop {
        let n = chain.len();
        let (_, r) = divmod_q(&chain[n - 2], &chain[n - 1]);
        let r = normalize_signs(neg_q(&r));
        if r.is_empty() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign_q(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn variations_at(chain: &[QPoly], x: &BigRational) -> usize {
    count_variations(chain.iter().map(|p| sign_q(&eval_q(p, x))))
}

pub fn variations_at_neg_inf(chain: &[QPoly]) -> usize {
    count_variations(chain.iter().map(|p| match degree_q(p) {
        None => 0,
        Some(d) => {
            let s = sign_q(&p[d]);
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

pub fn variations_at_pos_inf(chain: &[QPoly]) -> usize {
    count_variations(chain.iter().map(|p| match degree_q(p) {
        None => 0,
        Some(d) => sign_q(&p[d]),
    }))
}

/// Number of distinct real roots of a squarefree rational polynomial.
pub fn count_real_roots(f: &[BigRational]) -> usize {
    let chain = sturm_chain(f);
    if chain.is_empty() {
        return 0;
    }
    variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain)
}

/// Roots of `f` in the half-open interval (a, b].
pub fn count_roots_in(chain: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    variations_at(chain, a) - variations_at(chain, b)
}

/// Cauchy bound: all real roots lie in (-M, M).
pub fn root_bound(f: &[BigRational]) -> BigRational {
    let d = degree_q(&f.to_vec()).expect("nonzero polynomial");
    let lead = f[d].abs();
    let mut m = BigRational::zero();
    for c in &f[..d] {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    m + BigRational::one()
}

/// Isolating intervals (lo, hi] for every real root of a squarefree `f`,
/// ordered increasingly; endpoints are never roots.
pub fn isolate_real_roots(f: &[BigRational]) -> Vec<(BigRational, BigRational)> {
    let chain = sturm_chain(f);
    if chain.is_empty() {
        return Vec::new();
    }
    let m = root_bound(f);
    let mut stack = vec![(-m.clone(), m.clone())];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots_in(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut mid = (&lo + &hi) / &two;
        // Midpoints that happen to be roots get nudged; a squarefree f has
        // finitely many, so a few retries always escape.
        let mut shrink = BigRational::new(BigInt::one(), BigInt::from(17));
        while eval_q(f, &mid).is_zero() {
            mid = &mid + (&hi - &lo) * &shrink;
            shrink = &shrink / &two;
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Sign of `g` at the unique root of `f` inside the isolating interval.
///
/// `f` must be irreducible of degree >= 2 and `g` must not vanish at the
/// root (guaranteed when g is nonzero of degree < deg f).
pub fn sign_at_root(
    g: &[BigRational],
    f: &[BigRational],
    interval: &(BigRational, BigRational),
) -> i8 {
    let g = trim_q(g.to_vec());
    if g.is_empty() {
        return 0;
    }
    if degree_q(&g) == Some(0) {
        return sign_q(&g[0]);
    }
    let g_chain = sturm_chain(&squarefree_part_q(&g));
    let f_chain = sturm_chain(f);
    let (mut lo, mut hi) = interval.clone();
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let lo_val = eval_q(&g, &lo);
        if !lo_val.is_zero()
            && !eval_q(&g, &hi).is_zero()
            && count_roots_in(&g_chain, &lo, &hi) == 0
        {
            return sign_q(&lo_val);
        }
        let mut mid = (&lo + &hi) / &two;
        while eval_q(f, &mid).is_zero() {
            // Rational root of an irreducible poly of degree >= 2: impossible,
            // but stay safe for callers that violated the contract.
            mid = (&mid + &hi) / &two;
        }
        if count_roots_in(&f_chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Removes repeated factors: f / gcd(f, f').
pub fn squarefree_part_q(f: &[BigRational]) -> QPoly {
    let d = derivative_q(f);
    if d.is_empty() {
        return trim_q(f.to_vec());
    }
    let g = gcd_q(f, &d);
    if degree_q(&g) == Some(0) {
        return trim_q(f.to_vec());
    }
    let (q, _) = divmod_q(f, &g);
    q
}

/// Monic gcd over QQ.
pub fn gcd_q(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut x = trim_q(a.to_vec());
    let mut y = trim_q(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divmod_q(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree_q(&x) {
        let lead = x[d].clone();
        for c in &mut x {
            *c = &*c / &lead;
        }
    }
    x
}

/// Extended gcd: returns (d, s, t) with s*a + t*b = d, d monic.
pub fn ext_gcd_q(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly, QPoly) {
    let mut r0 = trim_q(a.to_vec());
    let mut r1 = trim_q(b.to_vec());
    let mut s0: QPoly = vec![BigRational::one()];
    let mut s1: QPoly = vec![];
    let mut t0: QPoly = vec![];
    let mut t1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod_q(&r0, &r1);
        let s_new = add_q(&s0, &neg_q(&mul_q(&q, &s1)));
        let t_new = add_q(&t0, &neg_q(&mul_q(&q, &t1)));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_new;
        t0 = t1;
        t1 = t_new;
    }
    if let Some(d) = degree_q(&r0) {
        let lead = r0[d].clone();
        let inv = BigRational::one() / &lead;
        for c in &mut r0 {
            *c = &*c * &inv;
        }
        for c in &mut s0 {
            *c = &*c * &inv;
        }
        for c in &mut t0 {
            *c = &*c * &inv;
        }
    }
    (r0, s0, t0)
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant of two nonzero integer polynomials via the Sylvester matrix.
pub fn resultant_i(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let f = trim_i(f.to_vec());
    let g = trim_i(g.to_vec());
    let n = degree_i(&f).expect("resultant of zero polynomial");
    let m = degree_i(&g).expect("resultant of zero polynomial");
    if n == 0 {
        return num_traits::pow::pow(f[0].clone(), m);
    }
    if m == 0 {
        return num_traits::pow::pow(g[0].clone(), n);
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (k, c) in f.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in g.iter().rev().enumerate() {
            mat[m + row][row + k] = c.clone();
        }
    }
    det_bareiss(mat)
}

/// Discriminant of a monic integer polynomial.
pub fn discriminant_monic(f: &[BigInt]) -> BigInt {
    let n = degree_i(&f.to_vec()).expect("nonzero polynomial");
    assert!(f[n].is_one(), "polynomial must be monic");
    let res = resultant_i(f, &derivative_i(f));
    if (n * (n - 1) / 2).is_multiple_of(2) {
        res
    } else {
        -res
    }
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    // Values come from evaluating small polynomials at small points; plain
    // trial division is plenty.
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    loop {
        let dd = &d * &d;
        if dd > n {
            break;
        }
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> QPoly {
    let mut acc: QPoly = vec![];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term: QPoly = vec![yi.clone()];
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            // term *= (x - xj)/denom
            let factor = vec![-xj / &denom, BigRational::one() / &denom];
            term = mul_q(&term, &factor);
        }
        acc = add_q(&acc, &term);
    }
    acc
}

const KRONECKER_BUDGET: u64 = 2_000_000;

/// Irreducibility of a monic integer polynomial over QQ.
///
/// Cheap mod-p certificates first; when none of the small primes settles it,
/// a full Kronecker search over interpolated divisor candidates decides.
pub fn irreducible_over_q(f: &[BigInt]) -> Result<bool, FieldError> {
    let f = trim_i(f.to_vec());
    let n = degree_i(&f).ok_or(FieldError::DegreeTooSmall)?;
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    // Rational roots: candidates divide the constant term.
    if f[0].is_zero() {
        return Ok(false);
    }
    for d in divisors_of(&f[0]) {
        if eval_i(&f, &d).is_zero() || eval_i(&f, &(-d.clone())).is_zero() {
            return Ok(false);
        }
    }
    if n <= 3 {
        // Degrees 2 and 3 are reducible iff they have a rational root.
        return Ok(true);
    }
    // Mod-p certificate: irreducible mod p implies irreducible over QQ.
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
        let fp = crate::modpoly::reduce_int_poly(&f, p);
        if crate::modpoly::degree(&fp) == Some(n) && crate::modpoly::is_irreducible(&fp, p) {
            return Ok(true);
        }
    }
    // Kronecker: search for a monic integer factor of degree 2..=n/2.
    for m in 2..=n / 2 {
        // m+1 sample points with nonzero values.
        let mut samples: Vec<(BigInt, BigInt)> = Vec::new();
        let mut x = BigInt::zero();
        let mut step = 0i64;
        while samples.len() < m + 1 {
            let v = eval_i(&f, &x);
            if v.is_zero() {
                return Ok(false);
            }
            samples.push((x.clone(), v));
            step = if step >= 0 { -(step + 1) } else { -step };
            x = BigInt::from(step);
        }
        let divisor_lists: Vec<Vec<BigInt>> = samples
            .iter()
            .map(|(_, v)| {
                let mut ds = divisors_of(v);
                let negs: Vec<BigInt> = ds.iter().map(|d| -d.clone()).collect();
                ds.extend(negs);
                ds
            })
            .collect();
        let combos: u64 = divisor_lists
            .iter()
            .map(|l| l.len() as u64)
            .try_fold(1u64, u64::checked_mul)
            .unwrap_or(u64::MAX);
        if combos > KRONECKER_BUDGET {
            return Err(FieldError::CannotCertifyIrreducible);
        }
        let mut idx = vec![0usize; m + 1];
        'outer: loop {
            let pts: Vec<(BigRational, BigRational)> = (0..=m)
                .map(|k| {
                    (
                        BigRational::from_integer(samples[k].0.clone()),
                        BigRational::from_integer(divisor_lists[k][idx[k]].clone()),
                    )
                })
                .collect();
            let cand = lagrange_interpolate(&pts);
            if degree_q(&cand) == Some(m) {
                let monic = cand[m].is_one() || cand[m] == -BigRational::one();
                let integral = cand.iter().all(|c| c.denom().is_one());
                if monic && integral {
                    let mut ci: IPoly = cand.iter().map(|c| c.numer().clone()).collect();
                    if ci[m] == -BigInt::one() {
                        for c in &mut ci {
                            *c = -c.clone();
                        }
                    }
                    if divide_exact_monic(&f, &ci).is_some() {
                        return Ok(false);
                    }
                }
            }
            // advance multi-index
            for k in 0..=m {
                idx[k] += 1;
                if idx[k] < divisor_lists[k].len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    Ok(true)
}

/// Squarefree test for a nonzero integer by trial division.
pub fn is_squarefree_i64(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Squarefree test for a BigInt by trial division; intended for the modest
/// discriminants this crate meets. Gives up (returns Err) past the budget.
pub fn is_squarefree_big(n: &BigInt) -> Result<bool, FieldError> {
    let mut n = n.abs();
    if n.is_zero() {
        return Ok(false);
    }
    let mut p = BigInt::from(2);
    let budget = BigInt::from(10_000_000u64);
    while &p * &p <= n {
        if p > budget {
            return Err(FieldError::CannotCertifyIrreducible);
        }
        if (&n % &p).is_zero() {
            n = &n / &p;
            if (&n % &p).is_zero() {
                return Ok(false);
            }
        }
        p += 1;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ipoly(v: &[i64]) -> IPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn qpoly(v: &[i64]) -> QPoly {
        v.iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }

    #[test]
    fn discriminants_of_small_polys() {
        // x^2 + 1 -> -4, x^2 + x + 1 -> -3, x^2 + 2 -> -8
        assert_eq!(discriminant_monic(&ipoly(&[1, 0, 1])), BigInt::from(-4));
        assert_eq!(discriminant_monic(&ipoly(&[1, 1, 1])), BigInt::from(-3));
        assert_eq!(discriminant_monic(&ipoly(&[2, 0, 1])), BigInt::from(-8));
        // x^3 - x - 1 -> -23 (matches -4p^3 - 27q^2)
        assert_eq!(
            discriminant_monic(&ipoly(&[-1, -1, 0, 1])),
            BigInt::from(-23)
        );
        // x^3 - 2 -> -108
        assert_eq!(
            discriminant_monic(&ipoly(&[-2, 0, 0, 1])),
            BigInt::from(-108)
        );
    }

    #[test]
    fn sturm_counts_real_roots() {
        // x^3 - x - 1 has exactly one real root
        assert_eq!(count_real_roots(&qpoly(&[-1, -1, 0, 1])), 1);
        // x^2 + 1 has none
        assert_eq!(count_real_roots(&qpoly(&[1, 0, 1])), 0);
        // x^2 - 2 has two
        assert_eq!(count_real_roots(&qpoly(&[-2, 0, 1])), 2);
        // x^3 - 4x has three (squarefree)
        assert_eq!(count_real_roots(&qpoly(&[0, -4, 0, 1])), 3);
    }

    #[test]
    fn isolation_and_algebraic_signs() {
        // the real root of x^3 - x - 1 is ~1.3247
        let f = qpoly(&[-1, -1, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 1);
        // sign of (x - 2) at the root: negative; sign of (x - 1): positive
        assert_eq!(sign_at_root(&qpoly(&[-2, 1]), &f, &roots[0]), -1);
        assert_eq!(sign_at_root(&qpoly(&[-1, 1]), &f, &roots[0]), 1);
        // sign of x^2 - 2 at the root: 1.3247^2 = 1.7548 < 2 -> negative
        assert_eq!(sign_at_root(&qpoly(&[-2, 0, 1]), &f, &roots[0]), -1);
    }

    #[test]
    fn irreducibility_decisions() {
        assert!(irreducible_over_q(&ipoly(&[-1, -1, 0, 1])).unwrap());
        assert!(irreducible_over_q(&ipoly(&[1, 0, 1])).unwrap());
        assert!(irreducible_over_q(&ipoly(&[-2, 0, 0, 1])).unwrap());
        // (x^2+1)(x^2+2) = x^4 + 3x^2 + 2: reducible without rational roots
        assert!(!irreducible_over_q(&ipoly(&[2, 0, 3, 0, 1])).unwrap());
        // (x-1)(x+2) = x^2 + x - 2
        assert!(!irreducible_over_q(&ipoly(&[-2, 1, 1])).unwrap());
        // x^4 + 1 (factors mod every prime, irreducible over QQ)
        assert!(irreducible_over_q(&ipoly(&[1, 0, 0, 0, 1])).unwrap());
        // x^4 - 10x^2 + 1 (minimal poly of sqrt2 + sqrt3, also needs Kronecker)
        assert!(irreducible_over_q(&ipoly(&[1, 0, -10, 0, 1])).unwrap());
    }

    #[test]
    fn ext_gcd_gives_inverses() {
        // inverse of x modulo x^2 + 1 is -x
        let f = qpoly(&[1, 0, 1]);
        let g = qpoly(&[0, 1]);
        let (d, _s, t) = ext_gcd_q(&f, &g);
        assert_eq!(degree_q(&d), Some(0));
        // t * g = 1 mod f
        let prod = mul_q(&t, &g);
        let (_, r) = divmod_q(&prod, &f);
        assert_eq!(trim_q(r), qpoly(&[1]));
    }

    #[test]
    fn squarefree_integers() {
        assert!(is_squarefree_i64(-23));
        assert!(is_squarefree_i64(-1));
        assert!(!is_squarefree_i64(-108));
        assert!(!is_squarefree_i64(12));
        assert!(is_squarefree_i64(-10));
    }
}
