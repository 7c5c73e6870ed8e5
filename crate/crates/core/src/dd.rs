//! Minimal double-double arithmetic.
//!
//! The ascending Bessel series cancels catastrophically towards the top of
//! its range (partial sums of size e^y collapsing to a value of size e^-y),
//! so its terms and accumulator are carried in an unevaluated sum of two
//! f64, giving roughly 31 significant digits.

// under cfg(test) std is linked and its inherent float methods shadow these
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> Dd {
        self.div(Dd::from_f64(x))
    }

    pub fn recip_u64(n: u64) -> Dd {
        Dd::ONE.div_f64(n as f64)
    }

    /// Parses a decimal literal of the form `[-]digits[.digits]`.
    ///
    /// Used for constants whose double-double split would otherwise have to
    /// be trusted blindly.
    pub fn parse(s: &str) -> Dd {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut value = Dd::ZERO;
        let mut frac_digits = 0u32;
        let mut seen_dot = false;
        for ch in body.chars() {
            if ch == '.' {
                seen_dot = true;
                continue;
            }
            let d = ch.to_digit(10).expect("decimal digit") as f64;
            value = value.mul_f64(10.0).add(Dd::from_f64(d));
            if seen_dot {
                frac_digits += 1;
            }
        }
        for _ in 0..frac_digits {
            value = value.div_f64(10.0);
        }
        if neg {
            value.neg()
        } else {
            value
        }
    }

    /// Natural logarithm for positive arguments.
    ///
    /// Range-reduces to [sqrt(1/2), sqrt(2)) and sums the atanh series of
    /// (m-1)/(m+1); about 25 terms reach the double-double noise floor.
    pub fn ln_positive(x: f64) -> Dd {
        debug_assert!(x > 0.0 && x.is_finite());
        let mut e = 0i32;
        let mut m = x;
        while m < core::f64::consts::FRAC_1_SQRT_2 {
            m *= 2.0;
            e -= 1;
        }
        while m >= core::f64::consts::SQRT_2 {
            m *= 0.5;
            e += 1;
        }
        let md = Dd::from_f64(m);
        let t = md.sub(Dd::ONE).div(md.add(Dd::ONE));
        let t2 = t.mul(t);
        let mut sum = Dd::ZERO;
        let mut pow = t;
        let mut k = 0u64;
        loop {
            let term = pow.div_f64((2 * k + 1) as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-36 * sum.hi.abs().max(1e-300) || k > 40 {
                break;
            }
            pow = pow.mul(t2);
            k += 1;
        }
        let ln_m = sum.mul_f64(2.0);
        ln2().mul_f64(e as f64).add(ln_m)
    }
}

/// ln 2 to double-double accuracy.
pub fn ln2() -> Dd {
    Dd::parse("0.69314718055994530941723212145817656807550013436026")
}

/// Euler-Mascheroni constant to double-double accuracy.
pub fn euler_gamma() -> Dd {
    Dd::parse("0.57721566490153286060651209008240243104215933593992")
}
