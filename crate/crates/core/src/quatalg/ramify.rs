//! Ramification sets, discriminant ideals, and realization of a prescribed
//! ramification set over Q.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::QuatError;
use crate::numfield::{place_labels, places_above, NumberField, PrimeIdeal};
use crate::quatalg::{hilbert_symbol, Place, QuaternionAlgebra, RamificationSet};

/// Rational primes dividing the numerator or denominator of x.
fn prime_support(x: &BigRational, out: &mut Vec<u64>) {
    for part in [x.numer().abs(), x.denom().clone()] {
        let mut n = part;
        let mut p = 2u64;
        while BigInt::from(p) * BigInt::from(p) <= n {
            let pb = BigInt::from(p);
            if (&n % &pb).is_zero() {
                out.push(p);
                while (&n % &pb).is_zero() {
                    n /= &pb;
                }
            }
            p += 1;
        }
        if n > BigInt::from(1) {
            // remainder is prime; it must fit u64 for place enumeration
            let (_, digits) = n.to_u64_digits();
            if digits.len() == 1 {
                out.push(digits[0]);
            } else {
                panic!("prime support exceeds u64");
            }
        }
    }
}

/// The set of places where the algebra is a skew-field.
///
/// All real embeddings are decided exactly; odd finite places over the
/// support of 2 N(a) N(b) by the tame character; the places over 2 are wild,
/// and when exactly one of them exists its symbol is inferred from the
/// evenness of the ramification set. With two or more even places the input
/// is rejected rather than guessed.
pub fn ramification_set(alg: &QuaternionAlgebra) -> Result<RamificationSet, QuatError> {
    // A square entry splits the algebra outright.
    if alg.field().sqrt(alg.a()).is_some() || alg.field().sqrt(alg.b()).is_some() {
        return Ok(RamificationSet::empty());
    }
    match alg.field() {
        NumberField::Rational => {
            let mut primes = alloc::vec![2u64];
            prime_support(alg.a().as_rational().unwrap(), &mut primes);
            prime_support(alg.b().as_rational().unwrap(), &mut primes);
            primes.sort_unstable();
            primes.dedup();
            let mut ramified = Vec::new();
            if hilbert_symbol(alg, &Place::RealEmbedding { index: 0 })? == -1 {
                ramified.push(Place::RealEmbedding { index: 0 });
            }
            for p in primes {
                if hilbert_symbol(alg, &Place::RationalPrime { p })? == -1 {
                    ramified.push(Place::RationalPrime { p });
                }
            }
            debug_assert!(ramified.len() % 2 == 0, "parity of S(D) violated over Q");
            Ok(RamificationSet::new(ramified))
        }
        field => {
            let mut primes = alloc::vec![2u64];
            prime_support(&field.norm(alg.a()), &mut primes);
            prime_support(&field.norm(alg.b()), &mut primes);
            primes.sort_unstable();
            primes.dedup();
            let mut ramified = Vec::new();
            let r = field.signature().0;
            for index in 0..r {
                if hilbert_symbol(alg, &Place::RealEmbedding { index })? == -1 {
                    ramified.push(Place::RealEmbedding { index });
                }
            }
            let mut undecided: Vec<Place> = Vec::new();
            for p in primes {
                for lp in places_above(field, p) {
                    if p == 2 {
                        undecided.push(Place::Finite(lp));
                        continue;
                    }
                    if hilbert_symbol(alg, &Place::Finite(lp.clone()))? == -1 {
                        ramified.push(Place::Finite(lp));
                    }
                }
            }
            match undecided.len() {
                0 => unreachable!("a number field always has a place over 2"),
                1 => {
                    // property (1): |S(D)| is even, so the last symbol is forced
                    if ramified.len() % 2 == 1 {
                        ramified.push(undecided.pop().unwrap());
                    }
                }
                _ => {
                    let names: Vec<String> = {
                        let places2 = places_above(field, 2);
                        let labels = place_labels(&places2);
                        undecided
                            .iter()
                            .map(|pl| match pl {
                                Place::Finite(lp) => places2
                                    .iter()
                                    .position(|s| s == lp)
                                    .map(|i| labels[i].clone())
                                    .unwrap_or_default(),
                                _ => String::new(),
                            })
                            .collect()
                    };
                    return Err(QuatError::UndecidableEvenPlaces(names.join(", ")));
                }
            }
            Ok(RamificationSet::new(ramified))
        }
    }
}

/// The finite part of the ramification set, with the product of the ideal
/// norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantIdeal {
    pub primes: Vec<PrimeIdeal>,
    pub norm_product: u128,
}

/// Product of the prime ideals at the finite ramified places.
pub fn discriminant_ideal(alg: &QuaternionAlgebra) -> Result<DiscriminantIdeal, QuatError> {
    let s = ramification_set(alg)?;
    let mut primes = Vec::new();
    let mut norm_product: u128 = 1;
    for place in s.finite_places() {
        let ideal = match place {
            Place::RationalPrime { p } => PrimeIdeal {
                p: *p,
                e: 1,
                f: 1,
                norm: *p as u128,
            },
            Place::Finite(lp) => lp.ideal(),
            Place::RealEmbedding { .. } => unreachable!(),
        };
        norm_product *= ideal.norm;
        primes.push(ideal);
    }
    Ok(DiscriminantIdeal {
        primes,
        norm_product,
    })
}

/// A quaternion algebra is a division algebra exactly when it ramifies
/// somewhere.
pub fn is_division(alg: &QuaternionAlgebra) -> Result<bool, QuatError> {
    Ok(!ramification_set(alg)?.is_empty())
}

pub const DEFAULT_SEARCH_BOUND: i64 = 100;

/// Finds integers (a, b) with ramification set exactly `target`, by bounded
/// search over |a|, |b| <= bound with round-trip verification. The target
/// may contain only the real place of Q and rational primes, and must have
/// even cardinality.
pub fn realize_ramification_set(
    target: &RamificationSet,
    bound: i64,
) -> Result<(i64, i64), QuatError> {
    if !target.len().is_multiple_of(2) {
        return Err(QuatError::BadPlaceSet(format!(
            "cardinality {} is odd",
            target.len()
        )));
    }
    for place in target.places() {
        match place {
            Place::RealEmbedding { index: 0 } | Place::RationalPrime { .. } => {}
            other => {
                return Err(QuatError::BadPlaceSet(format!(
                    "unsupported place {other:?} for an algebra over Q"
                )))
            }
        }
    }
    if target.is_empty() {
        return Ok((1, 1));
    }
    for m in 1..=bound {
        for a in search_values(m) {
            for b in search_values(m) {
                if a.abs().max(b.abs()) != m {
                    continue; // enumerated at a smaller radius already
                }
                let alg = QuaternionAlgebra::rational(a, b).expect("nonzero");
                if let Ok(s) = ramification_set(&alg) {
                    if s == *target {
                        return Ok((a, b));
                    }
                }
            }
        }
    }
    Err(QuatError::SearchExhausted { bound })
}

fn search_values(m: i64) -> impl Iterator<Item = i64> {
    (1..=m).flat_map(|v| [-v, v])
}
