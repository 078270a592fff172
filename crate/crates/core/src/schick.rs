//! Schick's signed cycles `q_j = b - 2|q_{j-1}|` and their unsigned
//! (Brändli–Bayne) form `q_j = |b - 2 q_{j-1}|`.
//!
//! The unsigned map permutes `RRSodd(b)`: for odd `q'` exactly one of
//! `(b - q')/2`, `(b + q')/2` is odd, which gives the inverse. Every seed
//! therefore lies on a cycle, and the cycles partition `RRSodd(b)`.

use alloc::vec::Vec;

use crate::arith::gcd;
use crate::coach::{next_uncovered, Sign};
use crate::error::{Error, Result};
use crate::residue::{rrs_odd, OddModulus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SbbCycle {
    pub b: u64,
    /// Starts at the seed `q_0`.
    pub elements: Vec<u64>,
}

impl SbbCycle {
    pub fn seed(&self) -> u64 {
        self.elements[0]
    }

    /// Period `pes(b)`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Builds a cycle from explicit elements, checking the recurrence and
    /// primitivity.
    pub fn from_elements(b: OddModulus, elements: Vec<u64>) -> Result<SbbCycle> {
        let bv = b.get();
        let malformed = |reason| Error::Malformed {
            what: "SBB cycle",
            reason,
        };
        if elements.is_empty() {
            return Err(malformed("empty cycle"));
        }
        check_seed(b, elements[0])?;
        let n = elements.len();
        for j in 0..n {
            if elements[(j + 1) % n] != unsigned_step(bv, elements[j]) {
                return Err(malformed("elements violate q_j = |b - 2 q_(j-1)|"));
            }
        }
        let expected = sbb_cycle(b, elements[0])?;
        if expected.len() != n {
            return Err(malformed("elements are not a primitive period"));
        }
        Ok(SbbCycle { b: bv, elements })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedCycle {
    pub b: u64,
    pub elements: Vec<i64>,
}

impl SignedCycle {
    /// Whether `q_0 = b - 2|q_{pes-1}|`, i.e. the seed sign agrees with the
    /// recurrence so the listed period repeats exactly.
    pub fn closes(&self) -> bool {
        let last = *self.elements.last().expect("non-empty");
        self.elements[0] == signed_step(self.b, last)
    }

    pub fn abs(&self) -> Vec<u64> {
        self.elements.iter().map(|q| q.unsigned_abs()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SbbSystem {
    pub b: u64,
    pub cycles: Vec<SbbCycle>,
    /// Cycle count `B(b)`.
    pub count: usize,
    /// Common period `pes(b)`.
    pub pes: usize,
}

#[inline]
fn unsigned_step(b: u64, q: u64) -> u64 {
    (b as i64 - 2 * q as i64).unsigned_abs()
}

#[inline]
fn signed_step(b: u64, q: i64) -> i64 {
    b as i64 - 2 * q.abs()
}

fn check_seed(b: OddModulus, q0: u64) -> Result<()> {
    let bv = b.get();
    let bad = |reason| Error::InvalidSeed {
        seed: q0,
        modulus: bv,
        reason,
    };
    if q0.is_multiple_of(2) {
        return Err(bad("seed must be odd"));
    }
    if q0 >= bv {
        return Err(bad("seed must be positive and below b"));
    }
    if gcd(q0, bv) != 1 {
        return Err(bad("seed must be coprime to b"));
    }
    Ok(())
}

pub fn sbb_cycle(b: OddModulus, q0: u64) -> Result<SbbCycle> {
    check_seed(b, q0)?;
    let bv = b.get();
    let mut elements = alloc::vec![q0];
    let mut q = unsigned_step(bv, q0);
    while q != q0 {
        elements.push(q);
        q = unsigned_step(bv, q);
    }
    Ok(SbbCycle { b: bv, elements })
}

/// Cycles seeded at 1, then at the smallest uncovered member of `RRSodd(b)`.
pub fn sbb_system(b: OddModulus) -> SbbSystem {
    let bv = b.get();
    let candidates = rrs_odd(b).elements;
    let mut covered = alloc::vec![false; bv as usize];
    let mut cycles = Vec::new();
    while let Some(seed) = next_uncovered(&candidates, &covered) {
        let cycle = sbb_cycle(b, seed).expect("members of RRSodd(b) are valid seeds");
        for &q in &cycle.elements {
            covered[q as usize] = true;
        }
        cycles.push(cycle);
    }
    SbbSystem {
        b: bv,
        count: cycles.len(),
        pes: cycles[0].len(),
        cycles,
    }
}

/// How the sign of a signed cycle's seed is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeedSignRule {
    /// First seed `(-1)^{(b+1)/2}`, later seeds
    /// `(-1)^{(b+1)/2} (-1)^{2 q_0 - 1}`, which is always the opposite sign.
    #[default]
    Literal,
    /// The sign for which the recurrence returns to the seed: `+` exactly
    /// when `b - q_0 = 2 (mod 4)`.
    Closing,
}

pub fn seed_sign(b: OddModulus, q0: u64, first: bool, rule: SeedSignRule) -> Sign {
    let bv = b.get();
    match rule {
        SeedSignRule::Literal => {
            let base = Sign::from_parity(bv.div_ceil(2));
            if first {
                base
            } else {
                // 2 q_0 - 1 is odd
                base.flip()
            }
        }
        SeedSignRule::Closing => {
            if (bv - q0) % 4 == 2 {
                Sign::Plus
            } else {
                Sign::Minus
            }
        }
    }
}

/// Signed cycles with the same seeds and order as [`sbb_system`], under the
/// literal seed-sign rule.
pub fn sbb_signed_system(b: OddModulus) -> Vec<SignedCycle> {
    sbb_signed_system_with(b, SeedSignRule::Literal)
}

pub fn sbb_signed_system_with(b: OddModulus, rule: SeedSignRule) -> Vec<SignedCycle> {
    let bv = b.get();
    let sys = sbb_system(b);
    sys.cycles
        .iter()
        .enumerate()
        .map(|(i, cycle)| {
            let q0 = cycle.seed();
            let mut q = seed_sign(b, q0, i == 0, rule).as_i64() * q0 as i64;
            let mut elements = Vec::with_capacity(cycle.len());
            for _ in 0..cycle.len() {
                elements.push(q);
                q = signed_step(bv, q);
            }
            SignedCycle { b: bv, elements }
        })
        .collect()
}

/// `SUM(SBB(b, i))`
pub fn cycle_sum(cycle: &SbbCycle) -> u64 {
    cycle.elements.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ob(b: u64) -> OddModulus {
        OddModulus::new(b).unwrap()
    }

    #[test]
    fn unsigned_cycles() {
        assert_eq!(sbb_cycle(ob(17), 1).unwrap().elements, [1, 15, 13, 9]);
        assert_eq!(sbb_cycle(ob(17), 3).unwrap().elements, [3, 11, 5, 7]);
        assert_eq!(
            sbb_cycle(ob(63), 5).unwrap().elements,
            [5, 53, 43, 23, 17, 29]
        );
        assert!(sbb_cycle(ob(63), 3).is_err());
        assert!(sbb_cycle(ob(63), 63).is_err());
        assert!(sbb_cycle(ob(63), 4).is_err());
    }

    #[test]
    fn systems() {
        let s = sbb_system(ob(65));
        assert_eq!((s.count, s.pes), (4, 6));
        let seeds: Vec<u64> = s.cycles.iter().map(SbbCycle::seed).collect();
        assert_eq!(seeds, [1, 3, 7, 11]);
        let s = sbb_system(ob(11));
        assert_eq!((s.count, s.pes), (1, 5));
        let s = sbb_system(ob(21));
        assert_eq!(s.pes, 6);
        assert_eq!(s.cycles[0].elements, [1, 19, 17, 13, 5, 11]);
    }

    #[test]
    fn signed_65() {
        let cycles = sbb_signed_system(ob(65));
        assert_eq!(cycles[0].elements, [-1, 63, -61, -57, -49, -33]);
        assert_eq!(cycles[1].elements, [3, 59, -53, -41, -17, 31]);
        assert_eq!(cycles[2].elements, [7, 51, -37, -9, 47, -29]);
        assert_eq!(cycles[3].elements, [11, 43, -21, 23, 19, 27]);
        assert!(cycles.iter().all(SignedCycle::closes));
    }

    #[test]
    fn signed_7() {
        let cycles = sbb_signed_system(ob(7));
        assert_eq!(cycles[0].elements, [1, 5, -3]);
    }

    #[test]
    fn literal_rule_can_fail_to_close() {
        // b = 31: the third seed is 5 = 1 (mod 4); the literal rule gives it
        // the sign opposite to the first seed, which the recurrence does not
        // reproduce.
        let literal = sbb_signed_system(ob(31));
        assert_eq!(literal[2].abs()[0], 5);
        assert!(!literal[2].closes());
        let closing = sbb_signed_system_with(ob(31), SeedSignRule::Closing);
        assert!(closing.iter().all(SignedCycle::closes));
        assert_eq!(literal[2].abs(), closing[2].abs());
    }

    #[test]
    fn sums() {
        assert_eq!(cycle_sum(&sbb_cycle(ob(7), 1).unwrap()), 9);
        assert_eq!(cycle_sum(&sbb_cycle(ob(17), 1).unwrap()), 38);
        assert_eq!(cycle_sum(&sbb_cycle(ob(3), 1).unwrap()), 1);
    }

    #[test]
    fn from_elements_validates() {
        assert!(SbbCycle::from_elements(ob(17), alloc::vec![3, 11, 5, 7]).is_ok());
        assert!(SbbCycle::from_elements(ob(17), alloc::vec![3, 11, 7, 5]).is_err());
        assert!(SbbCycle::from_elements(ob(17), alloc::vec![3, 11, 5, 7, 3, 11, 5, 7]).is_err());
    }
}
