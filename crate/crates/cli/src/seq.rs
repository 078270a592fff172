//! Integer sequences in OEIS layout. Sequences over odd moduli are indexed
//! by `n` with `b = 2n + 1`, starting at `n = 1`; list sequences start at 1.

use std::fmt;
use std::str::FromStr;

use oddcycles_core::arith::gcd;
use oddcycles_core::residue::{rrs_star_even, rrs_star_odd};
use oddcycles_core::schick::cycle_sum;
use oddcycles_core::{coach_system, mds_system, quasi_order, sbb_cycle, OddModulus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Quasi-order `k(b) = pes(b) = P(b)`.
    Pes,
    /// Number of coaches `c(b) = B(b)`.
    CoachCount,
    /// `SUM(SBB(b, 1))`
    CycleSums,
    /// `gcd(SUM(SBB(b, 1)), 2b)`
    Gcd,
    /// The odd `b >= 3` with `B(b) >= 2`, in increasing order.
    Multicycle,
    /// `(-1)^r(b)`, the sign in `2^k(b) = +-1 (mod b)`.
    RSign,
    RrsStarOddCount,
    RrsStarEvenCount,
    /// Rows `MDS(3), MDS(5), ...` flattened.
    MdsTable,
}

impl SequenceId {
    pub const ALL: [SequenceId; 9] = [
        SequenceId::Pes,
        SequenceId::CoachCount,
        SequenceId::CycleSums,
        SequenceId::Gcd,
        SequenceId::Multicycle,
        SequenceId::RSign,
        SequenceId::RrsStarOddCount,
        SequenceId::RrsStarEvenCount,
        SequenceId::MdsTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Pes => "pes",
            SequenceId::CoachCount => "coach-count",
            SequenceId::CycleSums => "cycle-sums",
            SequenceId::Gcd => "gcd",
            SequenceId::Multicycle => "multicycle",
            SequenceId::RSign => "r-sign",
            SequenceId::RrsStarOddCount => "rrs-star-odd-count",
            SequenceId::RrsStarEvenCount => "rrs-star-even-count",
            SequenceId::MdsTable => "mds-table",
        }
    }

    pub fn alias(self) -> &'static str {
        match self {
            SequenceId::Pes => "A003558",
            SequenceId::CoachCount => "A135303",
            SequenceId::CycleSums => "A333848",
            SequenceId::Gcd => "A333849",
            SequenceId::Multicycle => "A333855",
            SequenceId::RSign => "A332433",
            SequenceId::RrsStarOddCount => "A332435",
            SequenceId::RrsStarEvenCount => "A332436",
            SequenceId::MdsTable => "A334430",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSequence(pub String);

impl fmt::Display for UnknownSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = SequenceId::ALL.iter().map(|s| s.name()).collect();
        write!(
            f,
            "unknown sequence '{}' (expected one of {})",
            self.0,
            names.join(", ")
        )
    }
}

impl std::error::Error for UnknownSequence {}

impl FromStr for SequenceId {
    type Err = UnknownSequence;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        let key = match key {
            "quasi-order" | "k" => "pes",
            "B" | "c" => "coach-count",
            other => other,
        };
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == key || id.alias().eq_ignore_ascii_case(key))
            .ok_or_else(|| UnknownSequence(s.to_string()))
    }
}

fn odd(n: u64) -> OddModulus {
    OddModulus::new(2 * n + 1).expect("2n + 1 >= 3")
}

fn per_modulus(count: usize, f: impl Fn(OddModulus) -> i64) -> Vec<(u64, i64)> {
    (1..=count as u64).map(|n| (n, f(odd(n)))).collect()
}

/// The first `count` terms as `(index, value)`.
pub fn terms(id: SequenceId, count: usize) -> Vec<(u64, i64)> {
    match id {
        SequenceId::Pes => per_modulus(count, |b| quasi_order(b).k as i64),
        SequenceId::CoachCount => per_modulus(count, |b| coach_system(b).c as i64),
        SequenceId::CycleSums => per_modulus(count, |b| {
            cycle_sum(&sbb_cycle(b, 1).expect("1 is a seed")) as i64
        }),
        SequenceId::Gcd => per_modulus(count, |b| {
            let sum = cycle_sum(&sbb_cycle(b, 1).expect("1 is a seed"));
            gcd(sum, 2 * b.get()) as i64
        }),
        SequenceId::RSign => per_modulus(count, |b| quasi_order(b).sign.as_i64()),
        SequenceId::RrsStarOddCount => per_modulus(count, |b| rrs_star_odd(b).len() as i64),
        SequenceId::RrsStarEvenCount => per_modulus(count, |b| rrs_star_even(b).len() as i64),
        SequenceId::Multicycle => (1..)
            .map(odd)
            .filter(|&b| coach_system(b).c >= 2)
            .take(count)
            .enumerate()
            .map(|(i, b)| (i as u64 + 1, b.get() as i64))
            .collect(),
        SequenceId::MdsTable => (1..)
            .flat_map(|n| {
                mds_system(odd(n))
                    .cycles
                    .into_iter()
                    .flat_map(|c| c.elements)
            })
            .take(count)
            .enumerate()
            .map(|(i, v)| (i as u64 + 1, v as i64))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(id: SequenceId, count: usize) -> Vec<i64> {
        terms(id, count).into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn parse_names_and_aliases() {
        assert_eq!("pes".parse(), Ok(SequenceId::Pes));
        assert_eq!("a135303".parse(), Ok(SequenceId::CoachCount));
        assert_eq!("A334430".parse(), Ok(SequenceId::MdsTable));
        assert!("nope".parse::<SequenceId>().is_err());
        for id in SequenceId::ALL {
            assert_eq!(id.name().parse(), Ok(id));
        }
    }

    #[test]
    fn pes_terms() {
        assert_eq!(values(SequenceId::Pes, 7), [1, 2, 3, 3, 5, 6, 4]);
        let t = terms(SequenceId::Pes, 8);
        assert_eq!(t[7], (8, 4));
    }

    #[test]
    fn coach_counts() {
        assert_eq!(terms(SequenceId::CoachCount, 32)[31], (32, 4));
    }

    #[test]
    fn sums_and_gcds() {
        assert_eq!(terms(SequenceId::CycleSums, 3)[2], (3, 9));
        assert_eq!(terms(SequenceId::Gcd, 3)[2], (3, 1));
    }

    #[test]
    fn lists() {
        assert_eq!(values(SequenceId::Multicycle, 3), [17, 31, 33]);
        assert_eq!(values(SequenceId::MdsTable, 6), [1, 2, 1, 2, 3, 1]);
    }

    #[test]
    fn counts_add_up() {
        let odd = values(SequenceId::RrsStarOddCount, 40);
        let even = values(SequenceId::RrsStarEvenCount, 40);
        for (n, (o, e)) in odd.iter().zip(&even).enumerate() {
            let b = 2 * n as u64 + 3;
            assert_eq!((o + e) as u64, oddcycles_core::arith::totient(b) / 2);
        }
    }
}
