//! Counting ideals of bounded norm.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{splitting_type, NumberField};

/// Dirichlet-series coefficients of the Dedekind zeta function: entry n-1
/// holds a_n, the number of ideals of norm n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCountSequence {
    counts: Vec<u64>,
}

impl IdealCountSequence {
    pub fn bound(&self) -> usize {
        self.counts.len()
    }

    /// a_n for 1 <= n <= bound.
    pub fn a(&self, n: usize) -> u64 {
        self.counts[n - 1]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Number of ideals of norm p^k: compositions of k into the residue degrees
/// of the places over p.
pub fn prime_power_ideal_count(field: &NumberField, p: u64, k: u32) -> u64 {
    let degrees: Vec<u32> = splitting_type(field, p).iter().map(|pi| pi.f).collect();
    count_with_degrees(&degrees, k)
}

fn count_with_degrees(degrees: &[u32], k: u32) -> u64 {
    // dp[j] = number of ways to write j as an ordered choice of exponents
    let mut dp = vec![0u64; k as usize + 1];
    dp[0] = 1;
    for &f in degrees {
        let f = f as usize;
        for j in f..=k as usize {
            dp[j] += dp[j - f];
        }
    }
    dp[k as usize]
}

/// Ideal counts a_1..a_n, built multiplicatively from the local splitting
/// data via a smallest-prime-factor sieve.
pub fn ideal_counts(field: &NumberField, n: usize) -> IdealCountSequence {
    let mut counts = vec![0u64; n];
    if n == 0 {
        return IdealCountSequence { counts };
    }
    counts[0] = 1;
    if n == 1 {
        return IdealCountSequence { counts };
    }
    let spf = smallest_prime_factors(n);
    let mut degree_cache: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for m in 2..=n {
        let mut rest = m;
        let mut a = 1u64;
        while rest > 1 {
            let p = spf[rest] as usize;
            let mut k = 0u32;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            let degrees = degree_cache.entry(p as u64).or_insert_with(|| {
                splitting_type(field, p as u64)
                    .iter()
                    .map(|pi| pi.f)
                    .collect()
            });
            a *= count_with_degrees(degrees, k);
            if a == 0 {
                break;
            }
        }
        counts[m - 1] = a;
    }
    IdealCountSequence { counts }
}

fn smallest_prime_factors(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{make_monogenic, make_quadratic};
    use num_bigint::BigInt;

    #[test]
    fn gaussian_ideal_counts() {
        // 2 ramified (one ideal of norm 2), 3 inert, (2) has norm 4,
        // 5 splits (two ideals of norm 5)
        let k = NumberField::Quadratic(make_quadratic(-1).unwrap());
        let seq = ideal_counts(&k, 5);
        assert_eq!(seq.counts(), &[1, 1, 0, 1, 2]);
    }

    #[test]
    fn cubic_counts() {
        let f: Vec<BigInt> = [-1i64, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let k = NumberField::Monogenic(make_monogenic(&f).unwrap());
        let seq = ideal_counts(&k, 10);
        // 2 inert: a_2 = 0, smallest norm above 2 is 8
        assert_eq!(seq.a(2), 0);
        assert_eq!(seq.a(8), 1);
        // 5 = p5 * p25: one ideal of norm 5, norm 25 has p25 and p5^2
        assert_eq!(seq.a(5), 1);
    }

    #[test]
    fn multiplicativity() {
        let k = NumberField::Quadratic(make_quadratic(-5).unwrap());
        let n = 60;
        let seq = ideal_counts(&k, n);
        for m in 1..=n {
            for l in 1..=n {
                if m * l <= n && num_integer::gcd(m, l) == 1 {
                    assert_eq!(
                        seq.a(m * l),
                        seq.a(m) * seq.a(l),
                        "multiplicativity at {m} * {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn rational_counts_are_all_one() {
        let seq = ideal_counts(&NumberField::Rational, 20);
        assert!(seq.counts().iter().all(|&a| a == 1));
    }
}
