//! Schick cycles for prime moduli: `pes(p) = order(4, p)`,
//! `2 order(4, p) = order(2, 3p)`, and the split of odd primes into those
//! with a single cycle (`B(p) = 1`) and those with several.

use alloc::vec::Vec;

use crate::arith::{gcd, is_prime, mul_mod, totient};
use crate::coach::quasi_order;
use crate::error::{Error, Result};
use crate::residue::{Modulus, OddModulus};

/// Multiplicative order of `a` modulo `m` (`m >= 2`, `gcd(a, m) = 1`).
pub fn mult_order(a: u64, m: Modulus) -> Result<u64> {
    let mv = m.get();
    if mv < 2 {
        return Err(Error::ModulusTooSmall { got: mv, min: 2 });
    }
    let base = a % mv;
    if gcd(base, mv) != 1 {
        return Err(Error::NotCoprime {
            value: a as i128,
            modulus: mv,
        });
    }
    let mut x = base;
    let mut e = 1;
    while x != 1 {
        x = mul_mod(x, base, mv);
        e += 1;
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeClassification {
    pub p: u64,
    pub pes: u64,
    /// Cycle count `B(p) = (p - 1) / (2 pes)`.
    pub cycles: u64,
    pub order4: u64,
    pub order2_3p: u64,
    pub single_cycle: bool,
}

pub fn classify_prime(p: u64) -> Result<PrimeClassification> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let b = OddModulus::new(p)?;
    let pes = quasi_order(b).k;
    let cycles = b.phi_half() / pes;
    let order4 = mult_order(4, Modulus::new(p)?)?;
    let order2_3p = mult_order(2, Modulus::new(3 * p)?)?;
    if p >= 5 {
        let consistent = 2 * order4 == order2_3p && pes == order4 && cycles == (p - 1) / order2_3p;
        if !consistent {
            return Err(Error::Malformed {
                what: "prime classification",
                reason: "order identities do not hold",
            });
        }
    }
    Ok(PrimeClassification {
        p,
        pes,
        cycles,
        order4,
        order2_3p,
        single_cycle: cycles == 1,
    })
}

/// Odd primes `p <= limit` with `B(p) >= 2`, ascending.
pub fn primes_with_multicycle(limit: u64) -> Vec<u64> {
    (5..=limit)
        .step_by(2)
        .filter(|&p| is_prime(p))
        .filter(|&p| !classify_prime(p).expect("odd prime").single_cycle)
        .collect()
}

/// The characterization quantified over all smaller odd primes: every odd
/// prime `q < p` has `phi(pq)/2 > order(2, pq)`. Quadratic in the number
/// of primes below `p`; meant for small `p`.
pub fn multicycle_by_all_smaller_primes(p: u64) -> Result<bool> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    for q in (3..p).step_by(2).filter(|&q| is_prime(q)) {
        let pq = p * q;
        let ord = mult_order(2, Modulus::new(pq)?)?;
        if totient(pq) / 2 <= ord {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(4, m(17)), Ok(4));
        assert_eq!(mult_order(2, m(51)), Ok(8));
        assert_eq!(mult_order(1, m(10)), Ok(1));
        assert!(mult_order(2, m(10)).is_err());
        assert!(mult_order(1, m(1)).is_err());
    }

    #[test]
    fn classification() {
        let c = classify_prime(17).unwrap();
        assert_eq!((c.order4, c.order2_3p, c.cycles), (4, 8, 2));
        assert!(!c.single_cycle);
        assert!(classify_prime(11).unwrap().single_cycle);
        assert_eq!(classify_prime(31).unwrap().cycles, 3);
        let three = classify_prime(3).unwrap();
        assert_eq!((three.pes, three.cycles), (1, 1));
        assert_eq!(classify_prime(9), Err(Error::NotOddPrime(9)));
        assert_eq!(classify_prime(2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn multicycle_lists() {
        let list = primes_with_multicycle(45);
        for p in [17, 31, 41, 43] {
            assert!(list.contains(&p));
        }
        for p in [3, 5, 7, 11, 13, 19, 23, 29, 37] {
            assert!(!list.contains(&p));
        }
        assert!(primes_with_multicycle(3).is_empty());
        assert!(!primes_with_multicycle(70).contains(&65));
    }
}
