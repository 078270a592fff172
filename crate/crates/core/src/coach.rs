//! Coaches: two-row symbols `[A, K]` closed under
//! `a_{j+1} = (b - a_j) / 2^{k_j}` with `k_j` the 2-adic valuation of
//! `b - a_j`, and the complete coach system of an odd modulus.

use alloc::vec::Vec;

use crate::arith::{gcd, pow_mod, two_adic_valuation};
use crate::error::{Error, Result};
use crate::residue::{rrs_star_odd, OddModulus};

/// `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(exponent: u64) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coach {
    pub b: u64,
    /// Upper row: odd residues below `b/2`.
    pub a: Vec<u64>,
    /// Lower row: 2-adic exponents.
    pub k: Vec<u32>,
}

impl Coach {
    /// Length `r` of the coach.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn seed(&self) -> u64 {
        self.a[0]
    }

    pub fn k_sum(&self) -> u64 {
        self.k.iter().map(|&k| k as u64).sum()
    }

    /// `(-1)^r`
    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.len() as u64)
    }

    /// Builds a coach from explicit rows, checking the defining recurrence,
    /// cyclic closure and primitivity.
    pub fn from_rows(b: OddModulus, a: Vec<u64>, k: Vec<u32>) -> Result<Coach> {
        let malformed = |reason| Error::Malformed {
            what: "coach",
            reason,
        };
        if a.is_empty() || a.len() != k.len() {
            return Err(malformed("rows must be non-empty and of equal length"));
        }
        let bv = b.get();
        for (j, (&aj, &kj)) in a.iter().zip(&k).enumerate() {
            if aj % 2 == 0 || 2 * aj >= bv || gcd(aj, bv) != 1 {
                return Err(malformed("upper row entry is not an odd unit below b/2"));
            }
            let diff = bv - aj;
            if two_adic_valuation(diff) != kj {
                return Err(malformed("lower row entry is not the 2-adic valuation"));
            }
            if diff >> kj != a[(j + 1) % a.len()] {
                return Err(malformed("rows violate the coach recurrence"));
            }
        }
        let coach = Coach { b: bv, a, k };
        if coach.primitive_len() != coach.len() {
            return Err(malformed("rows are not a primitive period"));
        }
        Ok(coach)
    }

    fn primitive_len(&self) -> usize {
        let r = self.a.len();
        (1..=r)
            .find(|&p| r.is_multiple_of(p) && (0..r).all(|j| self.a[j] == self.a[(j + p) % r]))
            .unwrap_or(r)
    }
}

fn check_seed(b: OddModulus, a1: u64) -> Result<()> {
    let bv = b.get();
    let bad = |reason| Error::InvalidSeed {
        seed: a1,
        modulus: bv,
        reason,
    };
    if a1.is_multiple_of(2) {
        return Err(bad("seed must be odd"));
    }
    if 2 * a1 >= bv {
        return Err(bad("seed must lie below b/2"));
    }
    if gcd(a1, bv) != 1 {
        return Err(bad("seed must be coprime to b"));
    }
    Ok(())
}

/// The coach with first upper-row entry `a1`.
pub fn coach(b: OddModulus, a1: u64) -> Result<Coach> {
    check_seed(b, a1)?;
    let bv = b.get();
    let mut a = Vec::new();
    let mut k = Vec::new();
    let mut cur = a1;
    loop {
        let diff = bv - cur;
        let kj = two_adic_valuation(diff);
        a.push(cur);
        k.push(kj);
        cur = diff >> kj;
        if cur == a1 {
            break;
        }
        // the map is a permutation of RRS*odd(b), so the orbit of a1 closes
        debug_assert!(a.len() as u64 <= b.phi_half());
    }
    Ok(Coach { b: bv, a, k })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoachSystem {
    pub b: u64,
    pub coaches: Vec<Coach>,
    /// Number of coaches, `c(b)`.
    pub c: usize,
    /// Common lower-row sum, the quasi-order `k(b)`.
    pub k: u64,
}

impl CoachSystem {
    pub fn r_tuple(&self) -> Vec<usize> {
        self.coaches.iter().map(Coach::len).collect()
    }
}

/// Smallest element of `candidates` not yet in `covered`; `covered` is
/// indexed by value.
pub(crate) fn next_uncovered(candidates: &[u64], covered: &[bool]) -> Option<u64> {
    candidates.iter().copied().find(|&x| !covered[x as usize])
}

/// The complete coach system: seeds 1, then repeatedly the smallest member
/// of `RRS*odd(b)` missing from all previous upper rows.
pub fn coach_system(b: OddModulus) -> CoachSystem {
    let bv = b.get();
    let candidates = rrs_star_odd(b).elements;
    let mut covered = alloc::vec![false; bv as usize];
    let mut coaches = Vec::new();
    while let Some(seed) = next_uncovered(&candidates, &covered) {
        let c = coach(b, seed).expect("members of RRS*odd(b) are valid seeds");
        for &x in &c.a {
            covered[x as usize] = true;
        }
        coaches.push(c);
    }
    let k = coaches[0].k_sum();
    CoachSystem {
        b: bv,
        c: coaches.len(),
        k,
        coaches,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuasiOrder {
    /// Least `k >= 1` with `2^k = +-1 (mod b)`.
    pub k: u64,
    /// Which of `+1`, `-1` is reached.
    pub sign: Sign,
}

pub fn quasi_order(b: OddModulus) -> QuasiOrder {
    let bv = b.get();
    let mut x = 1u64;
    let mut k = 0u64;
    loop {
        x = (2 * x) % bv;
        k += 1;
        if x == 1 {
            return QuasiOrder {
                k,
                sign: Sign::Plus,
            };
        }
        if x == bv - 1 {
            return QuasiOrder {
                k,
                sign: Sign::Minus,
            };
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoachTheoremReport {
    pub b: u64,
    pub c: u64,
    pub k: u64,
    /// `phi(b) / 2`, from the factorization of `b`.
    pub phi_half: u64,
    pub holds: bool,
}

/// Checks `c(b) * k(b) = phi(b) / 2`.
pub fn verify_coach_theorem(b: OddModulus) -> CoachTheoremReport {
    let sys = coach_system(b);
    let phi_half = b.phi_half();
    let c = sys.c as u64;
    CoachTheoremReport {
        b: b.get(),
        c,
        k: sys.k,
        phi_half,
        holds: c * sys.k == phi_half,
    }
}

/// Checks the quasi-order theorem for every coach of the system:
/// each lower-row sum is `k(b)` and `2^{k(b)} = (-1)^r (mod b)`.
pub fn quasi_order_theorem_holds(sys: &CoachSystem) -> bool {
    let b = sys.b;
    let two_k = pow_mod(2, sys.k, b);
    sys.coaches.iter().all(|c| {
        let expected = match c.sign() {
            Sign::Plus => 1 % b,
            Sign::Minus => b - 1,
        };
        c.k_sum() == sys.k && two_k == expected
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ob(b: u64) -> OddModulus {
        OddModulus::new(b).unwrap()
    }

    #[test]
    fn single_coaches() {
        let c = coach(ob(65), 3).unwrap();
        assert_eq!(c.a, [3, 31, 17]);
        assert_eq!(c.k, [1, 1, 4]);
        let c = coach(ob(63), 5).unwrap();
        assert_eq!(c.a, [5, 29, 17, 23]);
        assert_eq!(c.k, [1, 1, 1, 3]);
        let c = coach(ob(3), 1).unwrap();
        assert_eq!(c.a, [1]);
        assert_eq!(c.k, [1]);
    }

    #[test]
    fn invalid_seeds() {
        assert!(matches!(coach(ob(65), 2), Err(Error::InvalidSeed { .. })));
        assert!(matches!(coach(ob(65), 33), Err(Error::InvalidSeed { .. })));
        assert!(matches!(coach(ob(65), 5), Err(Error::InvalidSeed { .. })));
    }

    #[test]
    fn system_65() {
        let sys = coach_system(ob(65));
        assert_eq!(sys.c, 4);
        assert_eq!(sys.k, 6);
        assert_eq!(sys.r_tuple(), [1, 3, 3, 5]);
        assert_eq!(sys.coaches[2].a, [7, 29, 9]);
        assert_eq!(sys.coaches[3].k, [1, 1, 1, 1, 2]);
    }

    #[test]
    fn small_systems() {
        assert_eq!(coach_system(ob(17)).c, 2);
        let s3 = coach_system(ob(3));
        assert_eq!((s3.c, s3.k), (1, 1));
    }

    #[test]
    fn quasi_orders() {
        assert_eq!(
            quasi_order(ob(65)),
            QuasiOrder {
                k: 6,
                sign: Sign::Minus
            }
        );
        assert_eq!(
            quasi_order(ob(7)),
            QuasiOrder {
                k: 3,
                sign: Sign::Plus
            }
        );
        assert_eq!(
            quasi_order(ob(3)),
            QuasiOrder {
                k: 1,
                sign: Sign::Minus
            }
        );
    }

    #[test]
    fn coach_theorem_examples() {
        for (b, c, k) in [(65, 4, 6), (11, 1, 5), (9, 1, 3)] {
            let rep = verify_coach_theorem(ob(b));
            assert!(rep.holds);
            assert_eq!((rep.c, rep.k, rep.phi_half), (c, k, c * k));
        }
    }

    #[test]
    fn from_rows_rejects_broken_rows() {
        assert!(Coach::from_rows(ob(65), alloc::vec![3, 31, 17], alloc::vec![1, 1, 4]).is_ok());
        assert!(Coach::from_rows(ob(65), alloc::vec![3, 31, 17], alloc::vec![1, 2, 4]).is_err());
        assert!(Coach::from_rows(ob(65), alloc::vec![3, 31], alloc::vec![1, 1]).is_err());
        assert!(Coach::from_rows(
            ob(65),
            alloc::vec![3, 31, 17, 3, 31, 17],
            alloc::vec![1, 1, 4, 1, 1, 4]
        )
        .is_err());
    }
}
