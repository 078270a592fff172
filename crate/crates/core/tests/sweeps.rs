//! Exhaustive sweeps against brute-force oracles written independently of
//! the library code.

use std::collections::{BTreeSet, HashSet};

use oddcycles_core::algebra::{minimal_poly_c, p_star};
use oddcycles_core::coach::quasi_order;
use oddcycles_core::residue::gstar_structure;
use oddcycles_core::tour::tour_stats;
use oddcycles_core::{
    coach_system, euler_tour, icos_system, mds_system, sbb_system, Modulus, OddModulus, Sign,
};

fn odd_range(hi: u64) -> impl Iterator<Item = OddModulus> {
    (3..=hi).step_by(2).map(|b| OddModulus::new(b).unwrap())
}

fn naive_gcd(a: u64, b: u64) -> u64 {
    (1..=a.min(b))
        .rev()
        .find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d))
        .unwrap_or(a.max(b))
}

fn naive_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| naive_gcd(k, n) == 1).count() as u64
}

/// Least `k` with `2^k = +-1 (mod b)`, by repeated doubling of the pair.
fn oracle_quasi_order(b: u64) -> (u64, bool) {
    let mut x = 1u64;
    for k in 1..=b {
        x = x * 2 % b;
        if x == 1 {
            return (k, true);
        }
        if x == b - 1 {
            return (k, false);
        }
    }
    unreachable!()
}

#[test]
fn quasi_order_against_oracle() {
    for b in odd_range(999) {
        let q = quasi_order(b);
        let (k, plus) = oracle_quasi_order(b.get());
        assert_eq!(q.k, k, "b = {b}");
        assert_eq!(q.sign == Sign::Plus, plus, "b = {b}");
    }
    let spot: Vec<u64> = [7, 11, 17]
        .iter()
        .map(|&b| quasi_order(OddModulus::new(b).unwrap()).k)
        .collect();
    assert_eq!(spot, [3, 5, 4]);
}

#[test]
fn cycle_counts_against_totient() {
    for b in odd_range(601) {
        let half = naive_phi(b.get()) / 2;
        let (k, _) = oracle_quasi_order(b.get());
        assert_eq!(coach_system(b).c as u64, half / k, "b = {b}");
        assert_eq!(sbb_system(b).count as u64, half / k, "b = {b}");
        assert_eq!(mds_system(b).count as u64, half / k, "b = {b}");
    }
}

#[test]
fn mds_against_folded_powers() {
    for b in odd_range(401) {
        let bv = b.get() as i128;
        for c in mds_system(b).cycles {
            let mut power: i128 = 1;
            for (j, &x) in c.elements.iter().enumerate() {
                power = power * 2 % bv;
                let raw = c.seed as i128 * power % bv;
                let folded = raw.min(bv - raw) as u64;
                assert_eq!(x, folded, "b = {b}, seed {}, j = {}", c.seed, j + 1);
            }
        }
    }
}

/// Walks the tour arc by arc until a `(vertex, step index)` state repeats.
fn oracle_tour(b: u64, steps: &[u64]) -> Vec<u64> {
    let mut seen = HashSet::new();
    let mut labels = Vec::new();
    let (mut pos, mut i) = (0u64, 0usize);
    while seen.insert((pos, i)) {
        labels.push(pos);
        pos = (pos + steps[i]) % (2 * b);
        i = (i + 1) % steps.len();
    }
    labels
}

#[test]
fn tours_against_state_walk() {
    for b in odd_range(151) {
        for c in sbb_system(b).cycles {
            let t = euler_tour(b.get(), &c);
            assert_eq!(
                t.labels,
                oracle_tour(b.get(), &c.elements),
                "b = {b}, seed {}",
                c.seed()
            );
        }
    }
}

#[test]
fn tour_21_visits_a_third_of_the_vertices() {
    let sys = sbb_system(OddModulus::new(21).unwrap());
    let t = euler_tour(21, &sys.cycles[0]);
    let s = tour_stats(&t);
    assert_eq!(s.distinct_nodes, 21);
    let visited: BTreeSet<u64> = s.visits.keys().copied().collect();
    let expected: BTreeSet<u64> = (0..42).filter(|v| v % 6 < 3).collect();
    assert_eq!(visited, expected);
}

#[test]
fn icos_covers_each_residue_once() {
    for b in odd_range(301) {
        let mut seen = BTreeSet::new();
        for c in icos_system(b) {
            for j in c.residues() {
                assert!(seen.insert(j), "b = {b}: {j} repeated");
            }
        }
        let expected: BTreeSet<u64> = (1..=b.get() / 2)
            .filter(|&j| naive_gcd(j, b.get()) == 1)
            .collect();
        assert_eq!(seen, expected, "b = {b}");
    }
}

#[test]
fn gstar_orders_by_brute_force() {
    for n in [7u64, 15, 21, 65, 105] {
        let g = gstar_structure(Modulus::new(n).unwrap());
        for (&a, &ord) in g.elements.iter().zip(&g.orders) {
            let mut x = a;
            let mut k = 1;
            while x != 1 && x != n - 1 {
                x = x * a % n;
                k += 1;
            }
            assert_eq!(ord, k, "order of {a} mod* {n}");
        }
    }
    let g = gstar_structure(Modulus::new(65).unwrap());
    assert!(!g.cyclic);
    assert_eq!(g.max_order, 12);
}

#[test]
fn p_star_vanishes_at_its_roots() {
    for b in odd_range(31) {
        let bv = b.get();
        let rho = 2.0 * (std::f64::consts::PI / bv as f64).cos();
        let p = p_star(b);
        let to_f64 = |x: &num_bigint::BigInt| x.to_string().parse::<f64>().unwrap();
        let eval = |c: &[num_bigint::BigInt], t: f64, abs: bool| {
            c.iter().rev().fold(0.0, |acc, x| {
                let x = to_f64(x);
                acc * t + if abs { x.abs() } else { x }
            })
        };
        let coeffs: Vec<f64> = p
            .coeffs
            .iter()
            .map(|c| eval(&c.coeffs, rho, false))
            .collect();
        let bounds: Vec<f64> = p
            .coeffs
            .iter()
            .map(|c| eval(&c.coeffs, rho.abs(), true))
            .collect();
        for k in (1..=bv / 2).filter(|&k| naive_gcd(k, bv) == 1) {
            let x = 2.0 * (std::f64::consts::PI * k as f64 / bv as f64).cos();
            let value = coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
            let scale: f64 = bounds
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * x.abs() + c.abs());
            assert!(
                value.abs() < 1e-12 * scale.max(1.0),
                "P*({b}) at 2cos({k} pi/{b}) = {value}"
            );
        }
    }
}

#[test]
fn minimal_polynomial_degrees() {
    for n in 2..=120u64 {
        let expected = naive_phi(2 * n) / 2;
        assert_eq!(
            minimal_poly_c(Modulus::new(n).unwrap()).degree(),
            Some(expected as usize),
            "n = {n}"
        );
    }
}
