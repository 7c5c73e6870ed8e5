//! Class numbers of imaginary quadratic fields by counting reduced
//! primitive binary quadratic forms.

use crate::error::FieldError;
use crate::numfield::QuadraticField;

/// Class number of an imaginary quadratic field: the number of reduced
/// primitive forms (a, b, c) with b^2 - 4ac = D, |b| <= a <= c, and b >= 0
/// whenever |b| = a or a = c.
pub fn class_number(field: &QuadraticField) -> Result<u64, FieldError> {
    if !field.is_imaginary() {
        return Err(FieldError::NotImaginaryQuadratic);
    }
    let disc = field.discriminant();
    let abs_d = disc.unsigned_abs();
    let mut count = 0u64;
    // |b| <= sqrt(|D|/3), b = D mod 2
    let mut b = (abs_d % 2) as i64;
    while (b * b) as u64 <= abs_d / 3 {
        let m = ((b * b) as u64 + abs_d) / 4; // = ac
        let mut a = 1u64;
        while a * a <= m {
            if m.is_multiple_of(a) {
                let c = m / a;
                if (a as i64) >= b && a <= c {
                    for bb in signed_values(b) {
                        // boundary convention: b >= 0 when |b| = a or a = c
                        if (bb < 0) && (bb.unsigned_abs() == a || a == c) {
                            continue;
                        }
                        if gcd3(a, bb.unsigned_abs(), c) == 1 {
                            count += 1;
                        }
                    }
                }
            }
            a += 1;
        }
        b += 2;
    }
    Ok(count)
}

fn signed_values(b: i64) -> impl Iterator<Item = i64> {
    let second = if b > 0 { Some(-b) } else { None };
    core::iter::once(b).chain(second)
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    num_integer::gcd(num_integer::gcd(a, b), c)
}
