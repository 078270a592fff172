//! The IcoS system: iterating `R(2, x) = x^2 - 2` on `2cos(pi a/b)` gives
//! `2cos(pi a 2^k / b)`, which is kept exactly as a sign and a residue in
//! `RRS*(b)`.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{mul_mod, pow_mod};
use crate::coach::Sign;
use crate::error::Result;
use crate::fixed::{cos_pi_ratio, Fixed};
use crate::mds::{mds_cycle, mds_system};
use crate::residue::{fold, OddModulus};

/// `sign * 2cos(pi j / b)`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedResidue {
    pub sign: Sign,
    pub j: u64,
}

impl SignedResidue {
    pub fn value(self, b: u64) -> f64 {
        let c = 2.0 * libm::cos(core::f64::consts::PI * self.j as f64 / b as f64);
        self.sign.as_i64() as f64 * c
    }
}

impl fmt::Display for SignedResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "({s},{})", self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IcosCycle {
    pub b: u64,
    pub seed: u64,
    /// Entry `k - 1` stands for `R(a 2^k, rho(b))`, `k = 1..P`.
    pub entries: Vec<SignedResidue>,
}

impl IcosCycle {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn residues(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.j).collect()
    }
}

/// Sign of `cos(pi x / b)` for `x` in `[0, 2b)`: positive on
/// `(0, b/2)` and `(3b/2, 2b)`.
fn cos_sign(x: u64, b: u64) -> Sign {
    if 2 * x < b || 2 * x > 3 * b {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn icos_cycle(b: OddModulus, a: u64) -> Result<IcosCycle> {
    let period = mds_cycle(b, a)?.len();
    let bv = b.get();
    let entries = (1..=period as u64)
        .map(|k| {
            let x = mul_mod(a, pow_mod(2, k, 2 * bv), 2 * bv);
            SignedResidue {
                sign: cos_sign(x, bv),
                j: fold(x % bv, bv),
            }
        })
        .collect();
    Ok(IcosCycle {
        b: bv,
        seed: a,
        entries,
    })
}

/// One cycle per MDS seed.
pub fn icos_system(b: OddModulus) -> Vec<IcosCycle> {
    mds_system(b)
        .cycles
        .iter()
        .map(|c| icos_cycle(b, c.seed).expect("MDS seeds are valid"))
        .collect()
}

/// `sign * 2cos(pi j / b)` for each entry.
pub fn icos_numeric(cycle: &IcosCycle) -> Vec<f64> {
    cycle.entries.iter().map(|e| e.value(cycle.b)).collect()
}

/// Largest deviation between the iterates of `v -> v^2 - 2`, started at
/// `2cos(pi a/b)`, and the exact entries.
///
/// Each step roughly doubles the absolute error, so the iteration runs in
/// fixed point with `2P` bits beyond double precision; only the comparison
/// happens in `f64`.
pub fn icos_iteration_error(cycle: &IcosCycle) -> f64 {
    let p = cycle.len() as u32;
    let prec = 96 + 2 * p;
    let mut v = cos_pi_ratio(cycle.seed as i64, cycle.b, prec);
    v.value <<= 1;
    let two = Fixed::from_int(&2.into(), prec);
    let minus_two = Fixed {
        value: -two.value,
        prec,
    };
    let mut worst: f64 = 0.0;
    for exact in icos_numeric(cycle) {
        v = v.mul(&v).add(&minus_two);
        worst = worst.max(libm::fabs(v.to_f64() - exact));
    }
    worst
}

/// The same check in plain double precision; diverges once `P` is large.
pub fn icos_iteration_error_f64(cycle: &IcosCycle) -> f64 {
    let mut v = 2.0 * libm::cos(core::f64::consts::PI * cycle.seed as f64 / cycle.b as f64);
    let mut worst: f64 = 0.0;
    for exact in icos_numeric(cycle) {
        v = v * v - 2.0;
        worst = worst.max(libm::fabs(v - exact));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ob(b: u64) -> OddModulus {
        OddModulus::new(b).unwrap()
    }

    fn sr(plus: bool, j: u64) -> SignedResidue {
        SignedResidue {
            sign: if plus { Sign::Plus } else { Sign::Minus },
            j,
        }
    }

    #[test]
    fn seventeen() {
        let c = icos_cycle(ob(17), 1).unwrap();
        assert_eq!(
            c.entries,
            [sr(true, 2), sr(true, 4), sr(true, 8), sr(false, 1)]
        );
        let c = icos_cycle(ob(17), 3).unwrap();
        assert_eq!(
            c.entries,
            [sr(true, 6), sr(false, 5), sr(false, 7), sr(false, 3)]
        );
        let v = icos_numeric(&icos_cycle(ob(17), 1).unwrap());
        assert!((v[0] - 1.864944459).abs() < 1e-6);
        assert!((v[3] + 1.965946199).abs() < 1e-6);
    }

    #[test]
    fn three() {
        let c = icos_cycle(ob(3), 1).unwrap();
        assert_eq!(c.entries, [sr(false, 1)]);
        let v = icos_numeric(&c);
        assert!((v[0] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn iteration_matches() {
        for b in [17u64, 63, 127, 201] {
            for c in icos_system(ob(b)) {
                assert!(icos_iteration_error(&c) < 1e-9, "b = {b}");
            }
        }
    }

    #[test]
    fn double_precision_drifts() {
        let c = icos_cycle(ob(199), 1).unwrap();
        assert!(icos_iteration_error_f64(&c) > 1e-6);
        assert!(icos_iteration_error(&c) < 1e-12);
    }

    #[test]
    fn display() {
        assert_eq!(sr(false, 5).to_string(), "(-,5)");
    }
}
