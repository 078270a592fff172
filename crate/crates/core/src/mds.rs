//! Modified modular doubling cycles: the primitive period of
//! `mod*(a 2^j, b)`, `j >= 1`, for odd seeds `a` in `RRS*odd(b)`.
//!
//! Three equivalent constructions are provided: the two-branch recurrence
//! (the default), the one-line form `c_j = (b - |b - 4 c_{j-1}|)/2`, and
//! direct folded powers of two.

use alloc::vec::Vec;

use crate::arith::{gcd, mul_mod, pow_mod};
use crate::coach::next_uncovered;
use crate::error::{Error, Result};
use crate::residue::{fold, rrs_star_odd, OddModulus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsCycle {
    pub b: u64,
    pub seed: u64,
    /// `c_1, ..., c_P`; the last element equals the seed.
    pub elements: Vec<u64>,
}

impl MdsCycle {
    /// Period `P(b)`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Builds a cycle from `c_1, ..., c_P`, checking the recurrence, the
    /// closing element and primitivity.
    pub fn from_elements(b: OddModulus, elements: Vec<u64>) -> Result<MdsCycle> {
        let malformed = |reason| Error::Malformed {
            what: "MDS cycle",
            reason,
        };
        let seed = *elements.last().ok_or(malformed("empty cycle"))?;
        let expected = mds_cycle(b, seed)?;
        if expected.elements != elements {
            return Err(malformed(
                "elements are not the doubling cycle of their last element",
            ));
        }
        Ok(expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsSystem {
    pub b: u64,
    pub cycles: Vec<MdsCycle>,
    /// Cycle count `c*(b)`.
    pub count: usize,
    /// Common period `P(b)`.
    pub period: usize,
}

fn check_seed(b: OddModulus, a: u64) -> Result<()> {
    let bv = b.get();
    let bad = |reason| Error::InvalidSeed {
        seed: a,
        modulus: bv,
        reason,
    };
    if a.is_multiple_of(2) {
        return Err(bad("seed must be odd"));
    }
    if 2 * a > bv {
        return Err(bad("seed must lie in RRS*(b)"));
    }
    if gcd(a, bv) != 1 {
        return Err(bad("seed must be coprime to b"));
    }
    Ok(())
}

/// Two-branch recurrence: double below `floor((b-1)/4)`, else `b - 2c`.
#[inline]
pub fn doubling_step(b: u64, c: u64) -> u64 {
    if c <= (b - 1) / 4 {
        2 * c
    } else {
        b - 2 * c
    }
}

/// `c_j = (b - |b - 4 c_{j-1}|) / 2`
#[inline]
pub fn one_line_step(b: u64, c: u64) -> u64 {
    let inner = (b as i64 - 4 * c as i64).unsigned_abs();
    (b - inner) / 2
}

/// The MDS cycle of `a`, by recurrence.
pub fn mds_cycle(b: OddModulus, a: u64) -> Result<MdsCycle> {
    check_seed(b, a)?;
    let bv = b.get();
    let mut elements = Vec::new();
    let mut c = a;
    loop {
        c = doubling_step(bv, c);
        elements.push(c);
        if c == a {
            break;
        }
    }
    Ok(MdsCycle {
        b: bv,
        seed: a,
        elements,
    })
}

/// The MDS cycle of `a` from `mod*(a 2^j, b)` computed by modular powers.
pub fn mds_cycle_direct(b: OddModulus, a: u64) -> Result<MdsCycle> {
    check_seed(b, a)?;
    let bv = b.get();
    let mut elements = Vec::new();
    for j in 1.. {
        let c = fold(mul_mod(a, pow_mod(2, j, bv), bv), bv);
        elements.push(c);
        if c == a {
            break;
        }
    }
    Ok(MdsCycle {
        b: bv,
        seed: a,
        elements,
    })
}

/// Cycles seeded at 1, then at the smallest uncovered member of
/// `RRS*odd(b)`.
pub fn mds_system(b: OddModulus) -> MdsSystem {
    let bv = b.get();
    let candidates = rrs_star_odd(b).elements;
    let mut covered = alloc::vec![false; bv as usize];
    let mut cycles = Vec::new();
    while let Some(seed) = next_uncovered(&candidates, &covered) {
        let cycle = mds_cycle(b, seed).expect("members of RRS*odd(b) are valid seeds");
        debug_assert_eq!(Ok(&cycle), mds_cycle_direct(b, seed).as_ref());
        for &c in &cycle.elements {
            covered[c as usize] = true;
        }
        cycles.push(cycle);
    }
    MdsSystem {
        b: bv,
        count: cycles.len(),
        period: cycles[0].len(),
        cycles,
    }
}

/// `MDS'(b, i)`: the seed followed by `c_1, ..., c_{P-1}`.
pub fn mds_prime_variant(cycle: &MdsCycle) -> Vec<u64> {
    let mut out = Vec::with_capacity(cycle.len());
    out.push(cycle.seed);
    out.extend_from_slice(&cycle.elements[..cycle.len() - 1]);
    out
}

/// Primitive period of the unfolded doubling sequence `mod(a 2^j, b)`,
/// `j >= 1`. Its length is the multiplicative order of 2 modulo `b`.
pub fn ds_cycle(b: OddModulus, a: u64) -> Result<Vec<u64>> {
    check_seed(b, a)?;
    let bv = b.get();
    let mut out = Vec::new();
    let mut x = a;
    loop {
        x = (2 * x) % bv;
        out.push(x);
        if x == a {
            break;
        }
    }
    Ok(out)
}
