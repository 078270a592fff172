//! Reduced residue systems, the folded congruence `mod*`, and the
//! multiplicative group `G*_n` of folded residue classes.
//!
//! `mod*(a, n)` identifies `a` with `-a` modulo `n`: it returns the
//! representative of `{a, -a} (mod n)` that lies in `[0, n/2]`. The set of
//! those representatives for the units modulo `n` is `RRS*(n)`, the first
//! half of the ordinary reduced residue system.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, rem_euclid, totient};
use crate::error::{Error, Result};

/// A positive modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ModulusTooSmall { got: 0, min: 1 });
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// An odd modulus `b = 2n + 1 >= 3`, the setting of every cycle system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddModulus(u64);

impl OddModulus {
    pub fn new(b: u64) -> Result<Self> {
        if b.is_multiple_of(2) {
            return Err(Error::EvenModulus(b));
        }
        if b < 3 {
            return Err(Error::ModulusTooSmall { got: b, min: 3 });
        }
        Ok(OddModulus(b))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Every odd `b >= 3` in `[lo, hi]`, ascending.
    pub fn range(lo: u64, hi: u64) -> impl Iterator<Item = OddModulus> {
        let start = if lo < 3 { 3 } else { lo | 1 };
        (start..=hi).step_by(2).map(OddModulus)
    }

    /// `phi(b) / 2`, the size of every complete cycle system for `b`.
    pub fn phi_half(self) -> u64 {
        totient(self.0) / 2
    }
}

impl From<OddModulus> for Modulus {
    fn from(b: OddModulus) -> Self {
        Modulus(b.0)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for OddModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueKind {
    /// `RRS(n)`
    Full,
    /// `RRS*(n)`
    Half,
    /// `RRSodd(b)`: odd units in `[1, b-2]`.
    OddFull,
    /// `RRS*odd(b)`
    OddHalf,
    /// `RRS*even(b)`
    EvenHalf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSet {
    pub n: u64,
    pub kind: ResidueKind,
    /// Ascending.
    pub elements: Vec<u64>,
}

impl ResidueSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// `sigma(n) = #RRS*(n)`: 1 for `n <= 2`, `phi(n)/2` otherwise.
pub fn sigma(n: Modulus) -> u64 {
    if n.0 <= 2 {
        1
    } else {
        totient(n.0) / 2
    }
}

pub fn rrs(n: Modulus) -> ResidueSet {
    let elements = if n.0 == 1 {
        alloc::vec![0]
    } else {
        (1..n.0).filter(|&k| gcd(k, n.0) == 1).collect()
    };
    ResidueSet {
        n: n.0,
        kind: ResidueKind::Full,
        elements,
    }
}

pub fn rrs_star(n: Modulus) -> ResidueSet {
    let mut elements = rrs(n).elements;
    elements.truncate(sigma(n) as usize);
    ResidueSet {
        n: n.0,
        kind: ResidueKind::Half,
        elements,
    }
}

pub fn rrs_odd(b: OddModulus) -> ResidueSet {
    let elements = (1..b.0 - 1)
        .step_by(2)
        .filter(|&k| gcd(k, b.0) == 1)
        .collect();
    ResidueSet {
        n: b.0,
        kind: ResidueKind::OddFull,
        elements,
    }
}

pub fn rrs_star_odd(b: OddModulus) -> ResidueSet {
    split_half(b, ResidueKind::OddHalf, 1)
}

pub fn rrs_star_even(b: OddModulus) -> ResidueSet {
    split_half(b, ResidueKind::EvenHalf, 0)
}

fn split_half(b: OddModulus, kind: ResidueKind, parity: u64) -> ResidueSet {
    let elements = rrs_star(b.into())
        .elements
        .into_iter()
        .filter(|k| k % 2 == parity)
        .collect();
    ResidueSet {
        n: b.0,
        kind,
        elements,
    }
}

fn require_coprime(a: i128, n: Modulus) -> Result<u64> {
    let r = rem_euclid(a, n.0);
    if n.0 > 1 && gcd(r, n.0) != 1 {
        return Err(Error::NotCoprime {
            value: a,
            modulus: n.0,
        });
    }
    Ok(r)
}

/// `mod*(a, n)`; defined only for `gcd(a, n) = 1`.
pub fn mod_star(a: i128, n: Modulus) -> Result<u64> {
    let r = require_coprime(a, n)?;
    Ok(fold(r, n.0))
}

/// Folds a residue `r` in `[0, n-1]` into `[0, n/2]`.
#[inline]
pub(crate) fn fold(r: u64, n: u64) -> u64 {
    if 2 * r <= n {
        r
    } else {
        n - r
    }
}

pub fn mod_star_mul(a: i128, b: i128, n: Modulus) -> Result<u64> {
    let ra = require_coprime(a, n)?;
    let rb = require_coprime(b, n)?;
    let prod = ((ra as u128 * rb as u128) % n.0 as u128) as u64;
    Ok(fold(prod, n.0))
}

/// Order of `a` in `G*_n`: least `k >= 1` with `mod*(a^k, n) = 1`.
pub fn mod_star_order(a: i128, n: Modulus) -> Result<u64> {
    let base = mod_star(a, n)?;
    if n.0 <= 2 {
        return Ok(1);
    }
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = fold(((x as u128 * base as u128) % n.0 as u128) as u64, n.0);
        k += 1;
    }
    Ok(k)
}

/// Element orders of `G*_n`, aligned with `RRS*(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GStarStructure {
    pub n: u64,
    pub elements: Vec<u64>,
    pub orders: Vec<u64>,
    pub sigma: u64,
    pub max_order: u64,
    /// Some element generates the whole group.
    pub cyclic: bool,
}

impl GStarStructure {
    /// `(order, multiplicity)` pairs in ascending order.
    pub fn order_multiset(&self) -> Vec<(u64, usize)> {
        let mut sorted = self.orders.clone();
        sorted.sort_unstable();
        let mut out: Vec<(u64, usize)> = Vec::new();
        for o in sorted {
            match out.last_mut() {
                Some((v, c)) if *v == o => *c += 1,
                _ => out.push((o, 1)),
            }
        }
        out
    }
}

pub fn gstar_structure(n: Modulus) -> GStarStructure {
    let elements = rrs_star(n).elements;
    let orders: Vec<u64> = elements
        .iter()
        .map(|&a| mod_star_order(a as i128, n).expect("RRS* elements are units"))
        .collect();
    let sigma = sigma(n);
    let max_order = orders.iter().copied().max().unwrap_or(1);
    GStarStructure {
        n: n.0,
        elements,
        orders,
        sigma,
        max_order,
        cyclic: max_order == sigma,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn ob(b: u64) -> OddModulus {
        OddModulus::new(b).unwrap()
    }

    #[test]
    fn reduced_residue_systems() {
        assert_eq!(rrs(m(4)).elements, [1, 3]);
        assert_eq!(rrs(m(1)).elements, [0]);
        assert_eq!(rrs(m(9)).elements, [1, 2, 4, 5, 7, 8]);
        assert_eq!(rrs_star(m(9)).elements, [1, 2, 4]);
        assert_eq!(rrs_star(m(4)).elements, [1]);
        assert_eq!(rrs_star(m(1)).elements, [0]);
        assert_eq!(rrs_star(m(2)).elements, [1]);
        assert_eq!(rrs_star(m(17)).elements, (1..=8).collect::<Vec<_>>());
        assert_eq!(rrs_odd(ob(17)).elements, [1, 3, 5, 7, 9, 11, 13, 15]);
        assert_eq!(rrs_odd(ob(9)).elements, [1, 5, 7]);
        assert_eq!(rrs_odd(ob(3)).elements, [1]);
        assert_eq!(rrs_star_odd(ob(33)).elements, [1, 5, 7, 13]);
    }

    #[test]
    fn odd_modulus_validation() {
        assert_eq!(OddModulus::new(8), Err(Error::EvenModulus(8)));
        assert_eq!(
            OddModulus::new(1),
            Err(Error::ModulusTooSmall { got: 1, min: 3 })
        );
        assert!(Modulus::new(0).is_err());
        let odds: Vec<u64> = OddModulus::range(0, 11).map(OddModulus::get).collect();
        assert_eq!(odds, [3, 5, 7, 9, 11]);
    }

    #[test]
    fn mod_star_examples() {
        assert_eq!(mod_star(17, m(9)), Ok(1));
        assert_eq!(mod_star(4, m(9)), Ok(4));
        assert_eq!(mod_star(5, m(9)), Ok(4));
        assert_eq!(mod_star(-8, m(9)), Ok(1));
        assert_eq!(mod_star(12345, m(1)), Ok(0));
        assert_eq!(
            mod_star(3, m(9)),
            Err(Error::NotCoprime {
                value: 3,
                modulus: 9
            })
        );
    }

    #[test]
    fn mod_star_products() {
        assert_eq!(mod_star_mul(2, 2, m(9)), Ok(4));
        assert_eq!(mod_star_mul(4, 4, m(9)), Ok(2));
        assert_eq!(mod_star_mul(8, 8, m(17)), Ok(4));
        assert!(mod_star_mul(2, 6, m(9)).is_err());
    }

    #[test]
    fn orders_in_gstar() {
        assert_eq!(mod_star_order(2, m(65)), Ok(6));
        assert_eq!(mod_star_order(3, m(65)), Ok(12));
        assert_eq!(mod_star_order(1, m(65)), Ok(1));
        assert_eq!(mod_star_order(1, m(9)), Ok(1));
    }

    #[test]
    fn gstar_65_is_not_cyclic() {
        let g = gstar_structure(m(65));
        assert_eq!(g.sigma, 24);
        assert_eq!(g.max_order, 12);
        assert!(!g.cyclic);
        let nine = gstar_structure(m(9));
        assert!(nine.cyclic);
        assert!(nine.orders.contains(&3));
        let three = gstar_structure(m(3));
        assert_eq!(three.orders, [1]);
        assert!(three.cyclic);
    }

    #[test]
    fn gstar_65_order_multiset() {
        // C4 x C3 x C2 = C12 x C2: order 12 needs a generator of the C12
        // factor (4 choices) paired with either element of C2.
        let g = gstar_structure(m(65));
        let ms = g.order_multiset();
        assert_eq!(ms.iter().map(|&(_, c)| c).sum::<usize>(), 24);
        assert!(ms.contains(&(12, 8)));
    }
}
