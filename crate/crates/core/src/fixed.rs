//! Binary fixed-point reals on top of `BigInt`: a value `v` with precision
//! `prec` stands for `v / 2^prec`.
//!
//! Used where double precision is too coarse: iterating `x -> x^2 - 2`
//! loses about two bits per step, and monomial-basis evaluation of
//! high-degree integer polynomials near their roots cancels catastrophically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    pub value: BigInt,
    pub prec: u32,
}

impl Fixed {
    pub fn from_int(n: &BigInt, prec: u32) -> Fixed {
        Fixed {
            value: n << prec,
            prec,
        }
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.prec, other.prec);
        Fixed {
            value: &self.value + &other.value,
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.prec, other.prec);
        Fixed {
            value: (&self.value * &other.value) >> self.prec,
            prec: self.prec,
        }
    }

    pub fn to_f64(&self) -> f64 {
        // keep 64 fractional bits so the BigInt -> f64 conversion never overflows
        let keep = 64u32.min(self.prec);
        let shifted: BigInt = &self.value >> (self.prec - keep);
        shifted.to_f64().unwrap_or(f64::NAN) / libm::exp2(keep as f64)
    }
}

/// `arctan(1/k) * 2^prec` by its alternating series.
fn arctan_inv(k: u64, prec: u32) -> BigInt {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = (BigInt::one() << prec) / &k;
    let mut sum = power.clone();
    let mut n = 1u64;
    loop {
        power /= &k2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * n + 1);
        if n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        n += 1;
    }
    sum
}

/// `pi * 2^prec` (Machin's formula), accurate to a few units in the last place.
pub fn pi(prec: u32) -> BigInt {
    let guard = 16;
    let p = prec + guard;
    let v = (arctan_inv(5, p) * 16) - (arctan_inv(239, p) * 4);
    v >> guard
}

/// `cos(pi * num / den)` with `prec` fractional bits.
pub fn cos_pi_ratio(num: i64, den: u64, prec: u32) -> Fixed {
    let guard = 32;
    let p = prec + guard;
    let two_den = 2 * den as i64;
    // reduce to t in [0, den], then to [0, den/2] with a sign
    let mut t = num.rem_euclid(two_den) as u64;
    if t > den {
        t = 2 * den - t;
    }
    let mut negate = false;
    if 2 * t > den {
        t = den - t;
        negate = true;
    }
    let theta = pi(p) * BigInt::from(t) / BigInt::from(den);
    let theta2 = (&theta * &theta) >> p;
    let one = BigInt::one() << p;
    let mut term = one.clone();
    let mut sum = one;
    let mut n = 1u64;
    loop {
        term = (&term * &theta2) >> p;
        term = term.div_floor(&BigInt::from((2 * n - 1) * (2 * n)));
        if term.is_zero() {
            break;
        }
        if n % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        n += 1;
    }
    if negate {
        sum = -sum;
    }
    Fixed {
        value: sum >> guard,
        prec,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = pi(200);
        let f = Fixed {
            value: p,
            prec: 200,
        };
        assert!((f.to_f64() - core::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn cosines_match_libm() {
        for den in [1u64, 3, 7, 17, 34, 65] {
            for num in -40i64..40 {
                let hp = cos_pi_ratio(num, den, 128).to_f64();
                let reference = libm::cos(core::f64::consts::PI * num as f64 / den as f64);
                assert!(
                    (hp - reference).abs() < 1e-14,
                    "{num}/{den}: {hp} vs {reference}"
                );
            }
        }
    }
}
