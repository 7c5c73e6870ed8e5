//! Polynomial arithmetic over F_p, small extension fields F_{p^f}, and
//! Hensel lifts of factorizations to Z/p^M.
//!
//! Everything here drives prime splitting: factoring a defining polynomial
//! mod p gives the shape of the places over p, the lifted factors give the
//! local embeddings used for valuations and residue characters.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial over F_p, constant term first, trimmed, coefficients in [0, p).
pub type PPoly = Vec<u64>;

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powm(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod p for prime p.
pub fn invm(a: u64, p: u64) -> u64 {
    powm(a, (p - 2) as u128, p)
}

/// Deterministic Miller-Rabin for u64 (the first twelve prime bases
/// suffice for the full range).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn trim(mut f: PPoly) -> PPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn reduce_int_poly(f: &[BigInt], p: u64) -> PPoly {
    let pb = BigInt::from(p);
    trim(
        f.iter()
            .map(|c| {
                let mut r = c % &pb;
                if r.is_negative() {
                    r += &pb;
                }
                // r fits in u64 by construction
                let (_, digits) = r.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect(),
    )
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            addm(x, y, p)
        })
        .collect();
    trim(out)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            subm(x, y, p)
        })
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(ca, cb, p), p);
        }
    }
    trim(out)
}

pub fn scale(a: &[u64], k: u64, p: u64) -> PPoly {
    trim(a.iter().map(|&c| mulm(c, k, p)).collect())
}

/// Makes a nonzero polynomial monic.
pub fn monic(f: &[u64], p: u64) -> PPoly {
    let d = degree(f).expect("monic of zero polynomial");
    scale(f, invm(f[d], p), p)
}

/// Remainder of a modulo b (b nonzero).
pub fn rem(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let db = degree(b).expect("division by zero polynomial");
    let inv_lead = invm(b[db], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mulm(r[dr], inv_lead, p);
        let shift = dr - db;
        for i in 0..=db {
            r[i + shift] = subm(r[i + shift], mulm(b[i], c, p), p);
        }
        r = trim(r);
    }
    r
}

/// Exact quotient a / b when b divides a.
pub fn div_exact(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let db = degree(b).expect("division by zero polynomial");
    let inv_lead = invm(b[db], p);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mulm(r[dr], inv_lead, p);
        let shift = dr - db;
        q[shift] = c;
        for i in 0..=db {
            r[i + shift] = subm(r[i + shift], mulm(b[i], c, p), p);
        }
        r = trim(r);
    }
    debug_assert!(r.is_empty(), "division was not exact");
    trim(q)
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        monic(&x, p)
    }
}

pub fn derivative(f: &[u64], p: u64) -> PPoly {
    if f.len() <= 1 {
        return vec![];
    }
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, (i as u64) % p, p))
            .collect(),
    )
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = addm(mulm(acc, x, p), c, p);
    }
    acc
}

/// base^exp mod (f, p) by square and multiply.
pub fn polypow_mod(base: &[u64], mut exp: u128, f: &[u64], p: u64) -> PPoly {
    let mut acc: PPoly = vec![1];
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), f, p);
        }
        b = rem(&mul(&b, &b, p), f, p);
        exp >>= 1;
    }
    acc
}

/// x^(p^k) mod (f, p) by iterated Frobenius.
pub fn frobenius_power(k: usize, f: &[u64], p: u64) -> PPoly {
    let mut h: PPoly = vec![0, 1];
    for _ in 0..k {
        h = polypow_mod(&h, p as u128, f, p);
    }
    h
}

/// Number of roots of f in F_p: deg gcd(x^p - x, f). Assumes f squarefree
/// when an exact count of simple roots is wanted.
pub fn count_roots(f: &[u64], p: u64) -> usize {
    let xp = polypow_mod(&[0, 1], p as u128, f, p);
    let diff = sub(&xp, &[0, 1], p);
    if diff.is_empty() {
        return degree(f).unwrap_or(0);
    }
    degree(&gcd(&diff, f, p)).unwrap_or(0)
}

/// Irreducibility test over F_p (Rabin).
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = match degree(f) {
        Some(0) | None => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    // x^{p^n} must equal x mod f
    let xpn = frobenius_power(n, f, p);
    if sub(&xpn, &[0, 1], p) != Vec::<u64>::new() {
        return false;
    }
    // for each prime divisor q of n: gcd(x^{p^{n/q}} - x, f) must be 1
    let mut m = n;
    let mut q = 2;
    let mut prime_divs = Vec::new();
    while q * q <= m {
        if m % q == 0 {
            prime_divs.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        prime_divs.push(m);
    }
    for q in prime_divs {
        let h = frobenius_power(n / q, f, p);
        let diff = sub(&h, &[0, 1], p);
        if degree(&gcd(&diff, f, p)).unwrap_or(0) > 0 {
            return false;
        }
    }
    true
}

/// p-th root of a polynomial in F_p[x^p] (Frobenius is the identity on F_p,
/// so coefficients pass through unchanged).
fn pth_root(f: &[u64], p: u64) -> PPoly {
    let d = degree(f).unwrap_or(0);
    let mut out = vec![0u64; d / (p as usize) + 1];
    for (i, &c) in f.iter().enumerate() {
        if c != 0 {
            debug_assert!(i % p as usize == 0);
            out[i / p as usize] = c;
        }
    }
    trim(out)
}

/// Squarefree decomposition in characteristic p:
/// returns pairs (g, m) with g squarefree monic and f = prod g^m up to a scalar.
pub fn squarefree_decomposition(f: &[u64], p: u64) -> Vec<(PPoly, usize)> {
    let mut out = Vec::new();
    let f = match degree(f) {
        Some(0) | None => return out,
        _ => monic(f, p),
    };
    let fp = derivative(&f, p);
    if fp.is_empty() {
        // f is a p-th power
        for (g, m) in squarefree_decomposition(&pth_root(&f, p), p) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = gcd(&f, &fp, p);
    let mut w = div_exact(&f, &c, p);
    let mut i = 1usize;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(&w, &c, p);
        let z = div_exact(&w, &y, p);
        if degree(&z).unwrap_or(0) > 0 {
            out.push((monic(&z, p), i));
        }
        c = div_exact(&c, &y, p);
        w = y;
        i += 1;
    }
    if degree(&c).unwrap_or(0) > 0 {
        // remaining multiplicities are divisible by p
        for (g, m) in squarefree_decomposition(&pth_root(&c, p), p) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Distinct-degree splitting of a squarefree monic f: pairs
/// (product of all irreducible factors of degree d, d).
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(PPoly, usize)> {
    let mut out = Vec::new();
    let mut f = monic(f, p);
    let mut h: PPoly = vec![0, 1];
    let mut d = 0usize;
    while let Some(df) = degree(&f) {
        if df == 0 {
            break;
        }
        d += 1;
        if 2 * d > df {
            out.push((f.clone(), df));
            break;
        }
        h = polypow_mod(&h, p as u128, &f, p);
        let g = gcd(&sub(&h, &[0, 1], p), &f, p);
        if degree(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            f = div_exact(&f, &g, p);
            h = rem(&h, &f, p);
        }
    }
    out
}

/// Splitting pattern of f mod p: the multiset of pairs (e, deg) over the
/// irreducible factors, e the multiplicity. Sorted by (deg, e).
pub fn splitting_pattern(f: &[u64], p: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(f, p) {
        for (prod, d) in distinct_degree(&g, p) {
            let count = degree(&prod).unwrap_or(0) / d;
            for _ in 0..count {
                out.push((e, d));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Deterministic xorshift PRNG for equal-degree splitting.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree monic product
/// of irreducibles all of degree d.
fn equal_degree_factor(f: &[u64], d: usize, p: u64, rng: &mut Rng) -> Vec<PPoly> {
    let n = degree(f).unwrap_or(0);
    if n == d {
        return vec![monic(f, p)];
    }
    loop {
        // random polynomial of degree < n
        let r: PPoly = trim((0..n).map(|_| rng.next() % p).collect());
        if degree(&r).is_none() {
            continue;
        }
        let s = if p == 2 {
            // trace map sum r^{2^i}, i < d
            let mut acc: PPoly = vec![];
            let mut t = rem(&r, f, p);
            for _ in 0..d {
                acc = add(&acc, &t, p);
                t = rem(&mul(&t, &t, p), f, p);
            }
            acc
        } else {
            let e = (num_traits::pow::pow(p as u128, d) - 1) / 2;
            let t = polypow_mod(&r, e, f, p);
            sub(&t, &[1], p)
        };
        if s.is_empty() {
            continue;
        }
        let g = gcd(&s, f, p);
        let dg = degree(&g).unwrap_or(0);
        if dg == 0 || dg == n {
            continue;
        }
        let h = div_exact(f, &g, p);
        let mut out = equal_degree_factor(&g, d, p, rng);
        out.extend(equal_degree_factor(&h, d, p, rng));
        return out;
    }
}

/// Full factorization into monic irreducibles with multiplicities,
/// deterministically ordered by (degree, coefficients).
pub fn factor(f: &[u64], p: u64) -> Vec<(PPoly, usize)> {
    let mut seed = 0x9e3779b97f4a7c15u64 ^ p.wrapping_mul(0x2545f4914f6cdd1d);
    for &c in f {
        seed = seed.rotate_left(7) ^ c.wrapping_mul(0x100000001b3);
    }
    let mut rng = Rng(seed | 1);
    let mut out: Vec<(PPoly, usize)> = Vec::new();
    for (g, e) in squarefree_decomposition(f, p) {
        for (prod, d) in distinct_degree(&g, p) {
            for irr in equal_degree_factor(&prod, d, p, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

// ---------------------------------------------------------------------------
// Arithmetic in F_{p^f} = F_p[x]/(g)
// ---------------------------------------------------------------------------

/// Quadratic character of a nonzero element t of F_{p^f} (p odd):
/// t^((p^f - 1)/2), returned as +1 or -1.
pub fn quadratic_character(t: &[u64], modulus: &[u64], p: u64) -> i8 {
    let f = degree(modulus).expect("nonzero modulus");
    let q = num_traits::pow::pow(p as u128, f);
    let r = polypow_mod(t, (q - 1) / 2, modulus, p);
    if r == [1] {
        1
    } else {
        debug_assert_eq!(r, vec![p - 1]);
        -1
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting to Z/p^M
// ---------------------------------------------------------------------------

fn mod_bigint(c: &BigInt, m: &BigInt) -> BigInt {
    let mut r = c % m;
    if r.is_negative() {
        r += m;
    }
    r
}

fn poly_mod_m(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = f.iter().map(|c| mod_bigint(c, m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

#[cfg(test)]
fn poly_mul_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
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
    poly_mod_m(&out, m)
}

/// Remainder modulo a monic polynomial, coefficients in Z/m.
pub fn poly_rem_monic_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = poly_mod_m(a, m);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone();
        let shift = dr - db;
        for i in 0..=db {
            let t = &b[i] * &c;
            r[i + shift] = mod_bigint(&(&r[i + shift] - t), m);
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
    }
    r
}

fn to_big(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Extended gcd over F_p: returns (a, b) with a*g + b*h = 1. Requires
/// gcd(g, h) = 1.
fn bezout_mod_p(g: &[u64], h: &[u64], p: u64) -> (PPoly, PPoly) {
    let mut r0 = trim(g.to_vec());
    let mut r1 = trim(h.to_vec());
    let mut a0: PPoly = vec![1];
    let mut a1: PPoly = vec![];
    let mut b0: PPoly = vec![];
    let mut b1: PPoly = vec![1];
    while !r1.is_empty() {
        // q, r of r0 / r1
        let db = degree(&r1).unwrap();
        let inv_lead = invm(r1[db], p);
        let mut r = r0.clone();
        let mut q: PPoly = vec![0; r.len().saturating_sub(db).max(1)];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = mulm(r[dr], inv_lead, p);
            q[dr - db] = c;
            let shift = dr - db;
            for i in 0..=db {
                r[i + shift] = subm(r[i + shift], mulm(r1[i], c, p), p);
            }
            r = trim(r);
        }
        let q = trim(q);
        let a_new = sub(&a0, &mul(&q, &a1, p), p);
        let b_new = sub(&b0, &mul(&q, &b1, p), p);
        r0 = r1;
        r1 = r;
        a0 = a1;
        a1 = a_new;
        b0 = b1;
        b1 = b_new;
    }
    let d = degree(&r0).unwrap();
    debug_assert_eq!(d, 0, "bezout requires coprime inputs");
    let inv = invm(r0[0], p);
    (scale(&a0, inv, p), scale(&b0, inv, p))
}

/// Lifts the factorization f = g0 * h0 (mod p), with g0 monic and coprime to
/// h0, to f = G * H (mod p^M). Returns (G, H) with G monic, G = g0 mod p.
pub fn hensel_lift_factor(
    f: &[BigInt],
    g0: &[u64],
    p: u64,
    exponent: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let fp = reduce_int_poly(f, p);
    let g0 = monic(g0, p);
    let h0 = div_exact(&fp, &g0, p);
    let (_, b) = bezout_mod_p(&g0, &h0, p);

    let mut modulus = BigInt::from(p);
    let target = num_traits::pow::pow(BigInt::from(p), exponent as usize);
    let mut g_lift = to_big(&g0);
    let mut h_lift = {
        // keep h's leading coefficient equal to f's (f monic in our uses)
        to_big(&h0)
    };
    let pb = BigInt::from(p);
    while modulus < target {
        let next = &modulus * &pb;
        // error e = (f - G*H)/modulus mod p
        let prod = {
            let mut out = vec![BigInt::zero(); g_lift.len() + h_lift.len() - 1];
            for (i, ca) in g_lift.iter().enumerate() {
                for (j, cb) in h_lift.iter().enumerate() {
                    out[i + j] += ca * cb;
                }
            }
            out
        };
        let n = f.len().max(prod.len());
        let e_int: Vec<BigInt> = (0..n)
            .map(|i| {
                let x = f.get(i).cloned().unwrap_or_else(BigInt::zero);
                let y = prod.get(i).cloned().unwrap_or_else(BigInt::zero);
                mod_bigint(&(x - y), &next)
            })
            .collect();
        let e_over: Vec<BigInt> = e_int.iter().map(|c| c / &modulus).collect();
        let e_p = reduce_int_poly(&e_over, p);
        // u = b*e mod g0 (deg u < deg g0), v = (e - h*u)/g0  -- over F_p
        let u = rem(&mul(&b, &e_p, p), &g0, p);
        let hu = mul(&h0, &u, p);
        let v = div_exact(&sub(&e_p, &hu, p), &g0, p);
        // G += modulus * u, H += modulus * v
        let add_scaled = |dst: &mut Vec<BigInt>, src: &PPoly| {
            if dst.len() < src.len() {
                dst.resize(src.len(), BigInt::zero());
            }
            for (i, &c) in src.iter().enumerate() {
                dst[i] += &modulus * BigInt::from(c);
            }
        };
        add_scaled(&mut g_lift, &u);
        add_scaled(&mut h_lift, &v);
        modulus = next;
        for c in &mut g_lift {
            *c = mod_bigint(c, &modulus);
        }
        for c in &mut h_lift {
            *c = mod_bigint(c, &modulus);
        }
        // restore exact monic leading coefficient on G
        let dg = g_lift.len() - 1;
        g_lift[dg] = BigInt::one();
    }
    (g_lift, h_lift)
}
