//! Conversions between the three complete systems, applied cycle by cycle:
//!
//! * MDS -> coach: read the odd elements of an MDS cycle backwards (`U`)
//!   and count the backward index steps between them (`L`).
//! * coach -> MDS: reverse the coach into the modified coach symbol and
//!   expand it by inserting `ly_j - 1` doublings after each upper entry.
//! * MDS <-> SBB: `q_j = b - 2 c_{P-1+j}` and `c_j = (b - q_{j+1}) / 2`,
//!   with cyclic indices.

use alloc::vec::Vec;

use crate::coach::Coach;
use crate::error::{Error, Result};
use crate::mds::{mds_prime_variant, MdsCycle};
use crate::residue::OddModulus;
use crate::schick::SbbCycle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSkeleton {
    /// Odd elements of the MDS cycle, in cycle order. Ends with the seed.
    pub co: Vec<u64>,
    /// 1-based positions of `co` in the cycle.
    pub indices: Vec<usize>,
    /// Odd elements of `MDS'`: the seed followed by `co` without its last entry.
    pub co_prime: Vec<u64>,
    /// `l'_j = ind(co'_j) - ind(co'_{j-1})`, with the seed at index 0 and
    /// the final step ending at index `P`.
    pub l_prime: Vec<u32>,
}

impl OddSkeleton {
    /// `r*(b, i)`, the number of odd elements.
    pub fn r_star(&self) -> usize {
        self.co.len()
    }

    /// Checks `co'_j = b - 2^{l'_j} co'_{j-1}` for every `j`, cyclically
    /// (the final step returns to the seed).
    pub fn recurrence_holds(&self, b: u64) -> bool {
        let r = self.co_prime.len();
        (1..=r).all(|j| {
            let prev = self.co_prime[j - 1] as u128;
            let next = self.co_prime[j % r] as u128;
            prev << self.l_prime[j - 1] == b as u128 - next
        })
    }
}

pub fn odd_skeleton(cycle: &MdsCycle) -> OddSkeleton {
    let (indices, co): (Vec<usize>, Vec<u64>) = cycle
        .elements
        .iter()
        .enumerate()
        .filter(|(_, &c)| c % 2 == 1)
        .map(|(j, &c)| (j + 1, c))
        .unzip();
    let prime: Vec<(usize, u64)> = mds_prime_variant(cycle)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| c % 2 == 1)
        .collect();
    let co_prime: Vec<u64> = prime.iter().map(|&(_, c)| c).collect();
    let mut l_prime = Vec::with_capacity(prime.len());
    for j in 1..=prime.len() {
        let next = prime.get(j).map_or(cycle.len(), |&(i, _)| i);
        l_prime.push((next - prime[j - 1].0) as u32);
    }
    OddSkeleton {
        co,
        indices,
        co_prime,
        l_prime,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoachSymbolLists {
    /// `u_j = co_{r*-j+1}`
    pub u: Vec<u64>,
    /// `l_j = ind(u_j) - ind(u_{j+1})`, `ind(u_{r*+1}) = 0`
    pub l: Vec<u32>,
}

pub fn coach_symbol_lists(cycle: &MdsCycle) -> CoachSymbolLists {
    let sk = odd_skeleton(cycle);
    let u: Vec<u64> = sk.co.iter().rev().copied().collect();
    let ind: Vec<usize> = sk.indices.iter().rev().copied().collect();
    let l = (0..ind.len())
        .map(|j| (ind[j] - ind.get(j + 1).copied().unwrap_or(0)) as u32)
        .collect();
    CoachSymbolLists { u, l }
}

/// The coach `[U, L]` of an MDS cycle.
pub fn mds_to_coach(cycle: &MdsCycle) -> Result<Coach> {
    let lists = coach_symbol_lists(cycle);
    Coach::from_rows(OddModulus::new(cycle.b)?, lists.u, lists.l)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedCoachSymbol {
    /// `cy_j = a_{r+2-j}`, length `r + 1`, first and last entry `a_1`.
    pub cy: Vec<u64>,
    /// `ly_j = k_{r+1-j}`
    pub ly: Vec<u32>,
}

impl ModifiedCoachSymbol {
    pub fn from_coach(coach: &Coach) -> Self {
        let r = coach.len();
        let cy = (1..=r + 1).map(|j| coach.a[(r + 1 - j) % r]).collect();
        let ly = coach.k.iter().rev().copied().collect();
        ModifiedCoachSymbol { cy, ly }
    }

    /// `EMCSy`: `ly_j - 1` doublings of `cy_j` inserted after each `cy_j`,
    /// closed by `cy_{r+1}`. Length `k(b) + 1`.
    pub fn extend(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&cy, &ly) in self.cy.iter().zip(&self.ly) {
            for p in 0..ly {
                out.push(cy << p);
            }
        }
        out.push(*self.cy.last().expect("non-empty"));
        out
    }
}

/// `EMCSy(b, i)` without its first entry.
pub fn coach_to_mds(coach: &Coach) -> Result<MdsCycle> {
    let extended = ModifiedCoachSymbol::from_coach(coach).extend();
    MdsCycle::from_elements(OddModulus::new(coach.b)?, extended[1..].to_vec())
}

/// `q_j = b - 2 c_{P-1+j}` for `j = 0..P-1`.
pub fn mds_to_sbb(cycle: &MdsCycle) -> Result<SbbCycle> {
    let p = cycle.len();
    let b = cycle.b;
    // 1-based cyclic access, c_0 = c_P
    let c = |i: usize| cycle.elements[(i + p - 1) % p];
    let q: Vec<u64> = (0..p).map(|j| b - 2 * c(p - 1 + j)).collect();
    SbbCycle::from_elements(OddModulus::new(b)?, q)
}

/// `c_j = (b - q_{j+1}) / 2` for `j = 1..P`.
pub fn sbb_to_mds(cycle: &SbbCycle) -> Result<MdsCycle> {
    let p = cycle.len();
    let b = cycle.b;
    let mut c = Vec::with_capacity(p);
    for j in 1..=p {
        let q = cycle.elements[(j + 1) % p];
        if q > b || !(b - q).is_multiple_of(2) {
            return Err(Error::Malformed {
                what: "SBB cycle",
                reason: "b - q is not a non-negative even number",
            });
        }
        c.push((b - q) / 2);
    }
    MdsCycle::from_elements(OddModulus::new(b)?, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coach::coach;
    use crate::mds::mds_cycle;
    use crate::schick::sbb_cycle;

    fn ob(b: u64) -> OddModulus {
        OddModulus::new(b).unwrap()
    }

    #[test]
    fn skeletons() {
        let sk = odd_skeleton(&mds_cycle(ob(63), 5).unwrap());
        assert_eq!(sk.co_prime, [5, 23, 17, 29]);
        assert_eq!(sk.l_prime, [3, 1, 1, 1]);
        assert!(sk.recurrence_holds(63));

        let sk = odd_skeleton(&mds_cycle(ob(63), 11).unwrap());
        assert_eq!(sk.co, [19, 25, 13, 11]);
        assert_eq!(sk.indices, [2, 3, 4, 6]);

        let sk = odd_skeleton(&mds_cycle(ob(3), 1).unwrap());
        assert_eq!(sk.co, [1]);
        assert_eq!(sk.l_prime, [1]);
        assert!(sk.recurrence_holds(3));
    }

    #[test]
    fn u_and_l_lists() {
        let lists = coach_symbol_lists(&mds_cycle(ob(63), 11).unwrap());
        assert_eq!(lists.u, [11, 13, 25, 19]);
        assert_eq!(lists.l, [2, 1, 1, 2]);
    }

    #[test]
    fn to_coach() {
        let c = mds_to_coach(&mds_cycle(ob(63), 5).unwrap()).unwrap();
        assert_eq!(c.a, [5, 29, 17, 23]);
        assert_eq!(c.k, [1, 1, 1, 3]);
        assert_eq!(c, coach(ob(63), 5).unwrap());
        let c = mds_to_coach(&mds_cycle(ob(3), 1).unwrap()).unwrap();
        assert_eq!((c.a, c.k), (alloc::vec![1], alloc::vec![1]));
    }

    #[test]
    fn from_coach() {
        let c = coach(ob(63), 5).unwrap();
        let sym = ModifiedCoachSymbol::from_coach(&c);
        assert_eq!(sym.cy, [5, 23, 17, 29, 5]);
        assert_eq!(sym.ly, [3, 1, 1, 1]);
        assert_eq!(sym.extend(), [5, 10, 20, 23, 17, 29, 5]);
        assert_eq!(coach_to_mds(&c).unwrap().elements, [10, 20, 23, 17, 29, 5]);

        let c = coach(ob(65), 3).unwrap();
        assert_eq!(coach_to_mds(&c).unwrap().elements, [6, 12, 24, 17, 31, 3]);
        assert_eq!(
            coach_to_mds(&coach(ob(3), 1).unwrap()).unwrap().elements,
            [1]
        );
    }

    #[test]
    fn mds_and_sbb() {
        let q = mds_to_sbb(&mds_cycle(ob(63), 5).unwrap()).unwrap();
        assert_eq!(q.elements, [5, 53, 43, 23, 17, 29]);
        let q = mds_to_sbb(&mds_cycle(ob(17), 1).unwrap()).unwrap();
        assert_eq!(q.elements, [1, 15, 13, 9]);
        let q = mds_to_sbb(&mds_cycle(ob(3), 1).unwrap()).unwrap();
        assert_eq!(q.elements, [1]);

        let c = sbb_to_mds(&sbb_cycle(ob(63), 11).unwrap()).unwrap();
        assert_eq!(c.elements, [22, 19, 25, 13, 26, 11]);
        let c = sbb_to_mds(&sbb_cycle(ob(17), 3).unwrap()).unwrap();
        assert_eq!(c.elements, [6, 5, 7, 3]);
        let c = sbb_to_mds(&sbb_cycle(ob(3), 1).unwrap()).unwrap();
        assert_eq!(c.elements, [1]);
    }
}
