//! Euler tours on the regular `2b`-gon: starting at vertex 0, follow the
//! diagonals of an unsigned Schick cycle repeatedly, counter-clockwise,
//! until a block of the cycle starts again at vertex 0.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::schick::{cycle_sum, SbbCycle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTour {
    pub b: u64,
    /// Diagonal steps, one block of the tour.
    pub steps: Vec<u64>,
    /// Vertex labels in `[0, 2b-1]`, starting at 0; `L` entries. The arc
    /// from the last label back to 0 closes the tour.
    pub labels: Vec<u64>,
    /// Number of cycle blocks `m`.
    pub blocks: u64,
}

impl EulerTour {
    /// Tour length `L`, also its number of arcs.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> u64 {
        2 * self.b
    }

    /// All `L` arcs, including the closing one.
    pub fn arcs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let n = self.labels.len();
        (0..n).map(move |t| (self.labels[t], self.labels[(t + 1) % n]))
    }

    /// No loops and no repeated arcs.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.arcs().all(|(u, v)| u != v && seen.insert((u, v)))
    }
}

/// `L = 2 b pes / gcd(SUM, 2b)`
pub fn tour_length(b: u64, cycle: &SbbCycle) -> u64 {
    let two_b = 2 * b;
    two_b * cycle.len() as u64 / gcd(cycle_sum(cycle), two_b)
}

/// `m = 2b / gcd(SUM, 2b)`
pub fn tour_blocks(b: u64, cycle: &SbbCycle) -> u64 {
    let two_b = 2 * b;
    two_b / gcd(cycle_sum(cycle), two_b)
}

/// Generates the tour by partial sums modulo `2b`, stopping at the first
/// block boundary that returns to vertex 0.
pub fn euler_tour(b: u64, cycle: &SbbCycle) -> EulerTour {
    let two_b = 2 * b;
    let mut labels = Vec::new();
    let mut pos = 0u64;
    let mut blocks = 0u64;
    loop {
        for &d in &cycle.elements {
            labels.push(pos);
            pos = (pos + d) % two_b;
        }
        blocks += 1;
        if pos == 0 {
            break;
        }
    }
    debug_assert_eq!(labels.len() as u64, tour_length(b, cycle));
    EulerTour {
        b,
        steps: cycle.elements.clone(),
        labels,
        blocks,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TourStats {
    /// `N(b)`
    pub distinct_nodes: usize,
    /// Occurrences of each visited vertex in the label list.
    pub visits: BTreeMap<u64, usize>,
    pub in_degree: BTreeMap<u64, usize>,
    pub out_degree: BTreeMap<u64, usize>,
    /// Every visited vertex has the same number of visits.
    pub regular: bool,
}

impl TourStats {
    /// `in + out` degree of a vertex (0 if unvisited).
    pub fn order(&self, v: u64) -> usize {
        self.in_degree.get(&v).copied().unwrap_or(0) + self.out_degree.get(&v).copied().unwrap_or(0)
    }
}

pub fn tour_stats(tour: &EulerTour) -> TourStats {
    let mut visits = BTreeMap::new();
    for &v in &tour.labels {
        *visits.entry(v).or_insert(0) += 1;
    }
    let mut in_degree = BTreeMap::new();
    let mut out_degree = BTreeMap::new();
    for (u, v) in tour.arcs() {
        *out_degree.entry(u).or_insert(0) += 1;
        *in_degree.entry(v).or_insert(0) += 1;
    }
    let mut counts = visits.values();
    let first = counts.next().copied();
    let regular = counts.all(|&c| Some(c) == first);
    TourStats {
        distinct_nodes: visits.len(),
        visits,
        in_degree,
        out_degree,
        regular,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::OddModulus;
    use crate::schick::{sbb_cycle, sbb_system};

    fn cycle(b: u64, q0: u64) -> SbbCycle {
        sbb_cycle(OddModulus::new(b).unwrap(), q0).unwrap()
    }

    const ET_7_1: [u64; 42] = [
        0, 1, 6, 9, 10, 1, 4, 5, 10, 13, 0, 5, 8, 9, 0, 3, 4, 9, 12, 13, 4, 7, 8, 13, 2, 3, 8, 11,
        12, 3, 6, 7, 12, 1, 2, 7, 10, 11, 2, 5, 6, 11,
    ];

    #[test]
    fn lengths() {
        assert_eq!(tour_length(7, &cycle(7, 1)), 42);
        assert_eq!(tour_length(17, &cycle(17, 1)), 68);
        assert_eq!(tour_length(17, &cycle(17, 3)), 68);
        assert_eq!(tour_length(21, &cycle(21, 1)), 42);
        assert_eq!(tour_length(3, &cycle(3, 1)), 6);
    }

    #[test]
    fn tour_7() {
        let t = euler_tour(7, &cycle(7, 1));
        assert_eq!(t.labels, ET_7_1);
        assert_eq!(t.blocks, 14);
        assert!(t.is_simple());
        let s = tour_stats(&t);
        assert_eq!(s.distinct_nodes, 14);
        assert!(s.visits.values().all(|&v| v == 3));
        assert!(s.regular);
        assert_eq!(s.order(0), 6);
    }

    #[test]
    fn tour_17_visits_every_vertex_twice() {
        for q0 in [1, 3] {
            let t = euler_tour(17, &cycle(17, q0));
            let s = tour_stats(&t);
            assert_eq!(s.distinct_nodes, 34);
            assert!(s.visits.values().all(|&v| v == 2));
        }
    }

    #[test]
    fn tour_21_is_irregular() {
        let sys = sbb_system(OddModulus::new(21).unwrap());
        let t = euler_tour(21, &sys.cycles[0]);
        let s = tour_stats(&t);
        assert_eq!(s.distinct_nodes, 21);
        assert!(!s.regular);
        for &v in s.visits.keys() {
            assert!(v % 6 < 3, "vertex {v}");
            let expected = [2, 6, 4][(v % 6) as usize];
            assert_eq!(s.order(v), expected, "vertex {v}");
        }
    }

    #[test]
    fn tour_3() {
        let t = euler_tour(3, &cycle(3, 1));
        assert_eq!(t.labels, [0, 1, 2, 3, 4, 5]);
        assert_eq!(tour_stats(&t).distinct_nodes, 6);
    }
}
