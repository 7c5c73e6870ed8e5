//! Modified Bessel functions of the second kind, K_0 and K_1.
//!
//! Two branches, switching at y = 8 and both valid on the overlap [6, 10]
//! used for cross-checking:
//!
//! * ascending series, carried in double-double arithmetic because the two
//!   log/harmonic pieces are of size e^y while the value is of size e^-y,
//!   an e^{2y} cancellation that plain f64 cannot survive past y ~ 5;
//! * the Laplace integral underlying the large-argument expansion,
//!   K_nu(y) = e^-y sqrt(2/y) * int_0^inf e^{-u^2} g_nu(u^2/(2y)) du with
//!   g_0 = (1+w)^{-1/2} and the K_1 analogue, evaluated by the trapezoid
//!   rule; the integrand is analytic in a strip of half-width sqrt(2y), so
//!   step 0.2 is already far below f64 noise for y >= 2. (A truncated
//!   power-series expansion of the same integral would hit its divergence
//!   floor of about e^{-2y} relative error, far above the target here.)

// under cfg(test) std is linked and its inherent float methods shadow these
#[allow(unused_imports)]
use num_traits::Float;

use crate::dd::{euler_gamma, Dd};
use crate::error::GeomError;

/// The documented series/large-argument switchover.
pub const BESSEL_SWITCHOVER: f64 = 8.0;

/// K_nu(y) for nu in {0, 1} and y > 0, relative accuracy comfortably below
/// 1e-10 across [1e-3, 50] and beyond until e^-y underflows.
pub fn bessel_k(nu: u8, y: f64) -> Result<f64, GeomError> {
    assert!(nu <= 1, "only orders 0 and 1 are provided");
    if !y.is_finite() || y <= 0.0 {
        return Err(GeomError::NonPositiveArgument(y));
    }
    if y <= BESSEL_SWITCHOVER {
        Ok(bessel_k_series(nu, y))
    } else {
        Ok(bessel_k_large(nu, y))
    }
}

/// Ascending-series branch (double-double internally). Accurate for
/// y in (0, 12]; used below the switchover and on the overlap window.
pub fn bessel_k_series(nu: u8, y: f64) -> f64 {
    let l = Dd::ln_positive(y / 2.0).add(euler_gamma());
    let yd = Dd::from_f64(y);
    let q = yd.mul(yd).div_f64(4.0); // y^2/4
    if nu == 0 {
        // sum_m (H_m - L) q^m / (m!)^2
        let mut term = Dd::ONE;
        let mut h = Dd::ZERO;
        let mut sum = h.sub(l);
        for m in 1..=120u64 {
            term = term.mul(q).div_f64((m * m) as f64);
            h = h.add(Dd::recip_u64(m));
            let t = h.sub(l).mul(term);
            sum = sum.add(t);
            if t.hi.abs() < 1e-40 * (1.0 + sum.hi.abs()) {
                break;
            }
        }
        sum.to_f64()
    } else {
        // 1/y + (y/2) sum_m (L - (H_m + H_{m+1})/2) q^m / (m! (m+1)!)
        let mut u = Dd::ONE;
        let mut hm = Dd::ZERO;
        let mut hm1 = Dd::ONE;
        let mut sum = Dd::ZERO;
        for m in 0..=120u64 {
            if m > 0 {
                u = u.mul(q).div_f64((m * (m + 1)) as f64);
                hm = hm.add(Dd::recip_u64(m));
                hm1 = hm1.add(Dd::recip_u64(m + 1));
            }
            let t = l.sub(hm.add(hm1).div_f64(2.0)).mul(u);
            sum = sum.add(t);
            if m > 0 && t.hi.abs() < 1e-40 * (1.0 + sum.hi.abs()) {
                break;
            }
        }
        let res = Dd::ONE.div(yd).add(yd.div_f64(2.0).mul(sum));
        res.to_f64()
    }
}

/// Large-argument branch: scaled Laplace integral by trapezoid rule.
/// Accurate for y >= 2; used above the switchover and on the overlap.
pub fn bessel_k_large(nu: u8, y: f64) -> f64 {
    if y > 700.0 {
        // e^-y underflows; the true value is below every denormal
        return 0.0;
    }
    let h = 0.2;
    let steps = (7.0 / h) as usize; // e^{-49} truncation
    let g = |u: f64| -> f64 {
        let w = 1.0 + u * u / (2.0 * y);
        if nu == 0 {
            (-u * u).exp() / w.sqrt()
        } else {
            (-u * u).exp() * u * u * w.sqrt()
        }
    };
    let mut sum = 0.5 * g(0.0);
    for k in 1..=steps {
        sum += g(k as f64 * h);
    }
    let integral = h * sum;
    let scale = if nu == 0 {
        (2.0 / y).sqrt()
    } else {
        2.0 * core::f64::consts::SQRT_2 / y.sqrt()
    };
    (-y).exp() * scale * integral
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // K_0(1) and K_1(1) to published precision
        assert!((bessel_k(0, 1.0).unwrap() - 0.4210244382407083).abs() < 1e-13);
        assert!((bessel_k(1, 1.0).unwrap() - 0.6019072301972346).abs() < 1e-13);
        // K_0(0.1) = 2.427069024702017..., K_1(0.1) = 9.853844780870606...
        assert!((bessel_k(0, 0.1).unwrap() - 2.427069024702017).abs() < 1e-12);
        assert!((bessel_k(1, 0.1).unwrap() - 9.853844780870606).abs() < 1e-11);
        // K_0(10) = 1.7780062316167652e-5, K_1(10) = 1.8648773453825585e-5
        assert!((bessel_k(0, 10.0).unwrap() / 1.7780062316167652e-5 - 1.0).abs() < 1e-11);
        assert!((bessel_k(1, 10.0).unwrap() / 1.8648773453825585e-5 - 1.0).abs() < 1e-11);
    }

    #[test]
    fn small_argument_limits() {
        // y K_1(y) -> 1 as y -> 0
        let y = 1e-4;
        assert!((y * bessel_k(1, y).unwrap() - 1.0).abs() < 1e-3);
        // K_0(y) ~ -ln(y/2) - gamma
        let y = 1e-6;
        let expect = -(y / 2.0f64).ln() - 0.577215664901533;
        assert!((bessel_k(0, y).unwrap() / expect - 1.0).abs() < 1e-9);
    }

    #[test]
    fn leading_asymptotics_at_ten() {
        // K_0(10) e^10 sqrt(20/pi) -> 1 within 2%
        let v = bessel_k(0, 10.0).unwrap();
        let scaled = v * 10f64.exp() * (20.0 / core::f64::consts::PI).sqrt();
        assert!((scaled - 1.0).abs() < 0.02, "scaled = {scaled}");
    }

    #[test]
    fn branch_agreement_on_overlap() {
        for nu in [0u8, 1] {
            let mut y = 6.0;
            while y <= 10.0 {
                let s = bessel_k_series(nu, y);
                let l = bessel_k_large(nu, y);
                assert!(
                    ((s - l) / s).abs() < 1e-11,
                    "nu = {nu}, y = {y}: series {s:e} vs large {l:e}"
                );
                y += 0.25;
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_k(0, 0.0).is_err());
        assert!(bessel_k(1, -3.0).is_err());
    }
}
