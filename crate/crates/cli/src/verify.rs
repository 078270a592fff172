//! Invariant sweeps and golden-data comparisons.

use std::collections::BTreeSet;
use std::fmt;

use oddcycles_core::algebra::{minimal_poly_c, mpr2, mpr2_product, p_star, PolyStyle};
use oddcycles_core::arith::{is_prime, totient};
use oddcycles_core::coach::{quasi_order_theorem_holds, verify_coach_theorem};
use oddcycles_core::equivalence::{
    coach_symbol_lists, coach_to_mds, mds_to_coach, mds_to_sbb, sbb_to_mds, ModifiedCoachSymbol,
};
use oddcycles_core::icos::icos_iteration_error;
use oddcycles_core::mds::{mds_cycle_direct, one_line_step};
use oddcycles_core::primes::{classify_prime, mult_order, primes_with_multicycle};
use oddcycles_core::residue::{
    gstar_structure, mod_star, mod_star_mul, rrs, rrs_odd, rrs_star, rrs_star_odd, sigma,
};
use oddcycles_core::schick::{sbb_signed_system, sbb_signed_system_with, SeedSignRule};
use oddcycles_core::tour::{tour_blocks, tour_length, tour_stats};
use oddcycles_core::{
    coach, coach_system, euler_tour, icos_cycle, icos_system, mds_cycle, mds_system, quasi_order,
    sbb_cycle, sbb_system, Modulus, OddModulus,
};

use crate::format::bracketed;
use crate::golden;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    Residue,
    Coach,
    Schick,
    Mds,
    Tour,
    Equivalence,
    Primes,
    Algebra,
    Icos,
    Table1,
    Table2,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Residue,
        Suite::Coach,
        Suite::Schick,
        Suite::Mds,
        Suite::Tour,
        Suite::Equivalence,
        Suite::Primes,
        Suite::Algebra,
        Suite::Icos,
        Suite::Table1,
        Suite::Table2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Residue => "residue",
            Suite::Coach => "coach",
            Suite::Schick => "schick",
            Suite::Mds => "mds",
            Suite::Tour => "tour",
            Suite::Equivalence => "equivalence",
            Suite::Primes => "primes",
            Suite::Algebra => "algebra",
            Suite::Icos => "icos",
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
        }
    }
}

const KEPT_MESSAGES: usize = 20;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    /// The first few failure descriptions.
    pub messages: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.messages.len() < KEPT_MESSAGES {
                self.messages.push(describe());
            }
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures += other.failures;
        let room = KEPT_MESSAGES.saturating_sub(self.messages.len());
        self.messages.extend(other.messages.into_iter().take(room));
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<12} {:>9} checks {:>6} failures",
            self.name, self.checks, self.failures
        )
    }
}

fn odd_moduli(max_b: u64) -> impl Iterator<Item = OddModulus> {
    OddModulus::range(3, max_b + 1)
}

/// Runs a suite with the ranges derived from `max_b`.
pub fn run(suite: Suite, max_b: u64) -> SuiteReport {
    match suite {
        Suite::Residue => residue_suite(max_b),
        Suite::Coach => coach_suite(max_b),
        Suite::Schick => schick_suite(max_b),
        Suite::Mds => mds_suite(max_b),
        Suite::Tour => tour_suite(max_b),
        Suite::Equivalence => equivalence_suite(max_b),
        Suite::Primes => primes_suite(max_b, max_b),
        Suite::Algebra => algebra_suite(max_b),
        Suite::Icos => icos_suite(max_b),
        Suite::Table1 => table1_suite(),
        Suite::Table2 => table2_suite(),
    }
}

/// `mod*` multiplicativity over `RRS(n)` and the group axioms of `G*_n`
/// for every `n <= max_n`, plus the structure of `G*_65`.
pub fn residue_suite(max_n: u64) -> SuiteReport {
    let mut r = SuiteReport::new("residue");
    for n in 1..=max_n {
        let m = Modulus::new(n).expect("n >= 1");
        let units = rrs(m).elements;
        let elems = rrs_star(m).elements;
        r.check(elems.len() as u64 == sigma(m), || {
            format!("#RRS*({n}) != sigma")
        });
        if n >= 3 {
            r.check(2 * sigma(m) == totient(n), || {
                format!("2 sigma({n}) != phi")
            });
        }
        for &a in &units {
            for &b in &units {
                let direct = mod_star((a as i128) * (b as i128), m);
                let folded = mod_star(
                    mod_star(a as i128, m).unwrap() as i128
                        * mod_star(b as i128, m).unwrap() as i128,
                    m,
                );
                r.check(direct.is_ok() && direct == folded, || {
                    format!("mod*({a}*{b}, {n}) is not multiplicative")
                });
            }
        }
        // multiplication table of G*_n indexed by position in RRS*(n)
        let mut index = vec![usize::MAX; n as usize + 1];
        for (i, &x) in elems.iter().enumerate() {
            index[x as usize] = i;
        }
        let s = elems.len();
        let mut table = vec![0usize; s * s];
        let mut closed = true;
        for i in 0..s {
            for j in 0..s {
                let p = mod_star_mul(elems[i] as i128, elems[j] as i128, m).unwrap();
                match index.get(p as usize) {
                    Some(&k) if k != usize::MAX => table[i * s + j] = k,
                    _ => closed = false,
                }
            }
        }
        r.check(closed, || format!("G*_{n} is not closed"));
        if !closed {
            continue;
        }
        let e = index[mod_star(1, m).unwrap() as usize];
        r.check(
            (0..s).all(|i| table[e * s + i] == i && table[i * s + e] == i),
            || format!("G*_{n}: identity fails"),
        );
        r.check(
            (0..s).all(|i| (0..s).any(|j| table[i * s + j] == e)),
            || format!("G*_{n}: an element has no inverse"),
        );
        r.check(
            (0..s).all(|i| (0..s).all(|j| table[i * s + j] == table[j * s + i])),
            || format!("G*_{n} is not commutative"),
        );
        let assoc = (0..s).all(|i| {
            (0..s).all(|j| {
                let ij = table[i * s + j];
                (0..s).all(|k| table[ij * s + k] == table[i * s + table[j * s + k]])
            })
        });
        r.check(assoc, || format!("G*_{n} is not associative"));
    }
    if max_n >= 65 {
        let g = gstar_structure(Modulus::new(65).unwrap());
        r.check(!g.cyclic && g.max_order == 12, || {
            format!("G*_65: cyclic = {}, max order {}", g.cyclic, g.max_order)
        });
    }
    r
}

/// The golden coach system of 65.
pub fn sigma65_check() -> SuiteReport {
    let mut r = SuiteReport::new("sigma65");
    let sys = coach_system(OddModulus::new(65).unwrap());
    let a: Vec<&[u64]> = sys.coaches.iter().map(|c| c.a.as_slice()).collect();
    let k: Vec<&[u32]> = sys.coaches.iter().map(|c| c.k.as_slice()).collect();
    r.check(a == golden::SIGMA_65_A, || format!("upper rows {a:?}"));
    r.check(k == golden::SIGMA_65_K, || format!("lower rows {k:?}"));
    r.check(sys.c == 4 && sys.k == 6, || {
        format!("c = {}, k = {}", sys.c, sys.k)
    });
    r.check(sys.r_tuple() == [1, 3, 3, 5], || {
        format!("r-tuple {:?}", sys.r_tuple())
    });
    r
}

pub fn coach_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("coach");
    for b in odd_moduli(max_b) {
        let report = verify_coach_theorem(b);
        r.check(report.holds, || format!("c*k != phi/2 at b = {b}"));
        let sys = coach_system(b);
        r.check(quasi_order_theorem_holds(&sys), || {
            format!("quasi-order theorem fails at b = {b}")
        });
        r.check(sys.k == quasi_order(b).k, || {
            format!("k({b}) differs from the quasi-order")
        });
        let mut seen = BTreeSet::new();
        let disjoint = sys
            .coaches
            .iter()
            .flat_map(|c| c.a.iter())
            .all(|&x| seen.insert(x));
        r.check(
            disjoint && seen.into_iter().eq(rrs_star_odd(b).elements),
            || format!("upper rows do not partition RRS*odd({b})"),
        );
    }
    if max_b >= 65 {
        r.merge(sigma65_check());
    }
    r
}

pub fn schick_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("schick");
    for b in odd_moduli(max_b) {
        let sys = sbb_system(b);
        let pes = quasi_order(b).k as usize;
        r.check((sys.count * sys.pes) as u64 == b.phi_half(), || {
            format!("B*pes != phi/2 at b = {b}")
        });
        r.check(sys.pes == pes, || {
            format!("pes({b}) differs from the quasi-order")
        });
        r.check(sys.cycles.iter().all(|c| c.len() == pes), || {
            format!("unequal periods at b = {b}")
        });
        let mut seen = BTreeSet::new();
        let disjoint = sys
            .cycles
            .iter()
            .flat_map(|c| c.elements.iter())
            .all(|&x| seen.insert(x));
        r.check(disjoint && seen.into_iter().eq(rrs_odd(b).elements), || {
            format!("cycles do not partition RRSodd({b})")
        });
        let closing = sbb_signed_system_with(b, SeedSignRule::Closing);
        let ok = closing
            .iter()
            .zip(&sys.cycles)
            .all(|(s, u)| s.closes() && s.abs() == u.elements);
        r.check(ok, || {
            format!("signed cycles disagree with unsigned ones at b = {b}")
        });
    }
    if max_b >= 65 {
        let signed = sbb_signed_system(OddModulus::new(65).unwrap());
        let got: Vec<Vec<i64>> = signed.into_iter().map(|c| c.elements).collect();
        r.check(got == golden::SBB_SIGNED_65.map(|c| c.to_vec()), || {
            format!("signed system of 65: {got:?}")
        });
    }
    r
}

pub fn mds_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("mds");
    for b in odd_moduli(max_b) {
        let sys = mds_system(b);
        let k = quasi_order(b).k as usize;
        let coaches = coach_system(b);
        r.check((sys.count * sys.period) as u64 == b.phi_half(), || {
            format!("c*P != phi/2 at b = {b}")
        });
        r.check(
            sys.period == k && coaches.k as usize == k && sbb_system(b).pes == k,
            || format!("P, k and pes differ at b = {b}"),
        );
        r.check(sys.count == coaches.c, || format!("c*({b}) != c({b})"));
        let mut seen = BTreeSet::new();
        for c in &sys.cycles {
            r.check(
                c.len() == sys.period && c.elements.last() == Some(&c.seed),
                || format!("cycle {} of {b} is not closed at its seed", c.seed),
            );
            r.check(mds_cycle_direct(b, c.seed).as_ref() == Ok(c), || {
                format!("direct powers disagree at ({b}, {})", c.seed)
            });
            let mut x = c.seed;
            let one_line = c.elements.iter().all(|&e| {
                x = one_line_step(b.get(), x);
                x == e
            });
            r.check(one_line, || {
                format!("one-line recurrence disagrees at ({b}, {})", c.seed)
            });
            for &e in &c.elements {
                r.check(seen.insert(e), || format!("{e} repeated in MDS({b})"));
            }
        }
        r.check(seen.into_iter().eq(rrs_star(b.into()).elements), || {
            format!("MDS({b}) does not cover RRS*")
        });
    }
    r
}

/// Theorem sweep: `c k = B pes = c* P = phi/2` and `P = k = pes`.
pub fn theorem_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("theorems");
    for b in odd_moduli(max_b) {
        let half = b.phi_half();
        let coaches = coach_system(b);
        let sbb = sbb_system(b);
        let mds = mds_system(b);
        r.check(coaches.c as u64 * coaches.k == half, || {
            format!("coach theorem fails at b = {b}")
        });
        r.check((sbb.count * sbb.pes) as u64 == half, || {
            format!("Schick's theorem fails at b = {b}")
        });
        r.check((mds.count * mds.period) as u64 == half, || {
            format!("c* P != phi/2 at b = {b}")
        });
        r.check(
            mds.period as u64 == coaches.k && coaches.k == sbb.pes as u64,
            || format!("P, k, pes differ at b = {b}"),
        );
    }
    r
}

pub fn et71_check() -> SuiteReport {
    let mut r = SuiteReport::new("et71");
    let t = euler_tour(7, &sbb_cycle(OddModulus::new(7).unwrap(), 1).unwrap());
    let s = tour_stats(&t);
    r.check(t.labels == golden::ET_7_1, || {
        format!("labels {:?}", t.labels)
    });
    r.check(t.len() == 42 && s.distinct_nodes == 14, || {
        format!("L = {}, N = {}", t.len(), s.distinct_nodes)
    });
    r.check(s.visits.values().all(|&v| v == 3), || {
        "visit counts differ from 3".into()
    });
    r
}

pub fn tour_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("tour");
    for b in odd_moduli(max_b) {
        let bv = b.get();
        for (i, c) in sbb_system(b).cycles.iter().enumerate() {
            let t = euler_tour(bv, c);
            r.check(t.len() as u64 == tour_length(bv, c), || {
                format!(
                    "ET({b},{}): L = {} but the formula gives {}",
                    i + 1,
                    t.len(),
                    tour_length(bv, c)
                )
            });
            r.check(t.blocks == tour_blocks(bv, c), || {
                format!("ET({b},{}): block count", i + 1)
            });
            r.check(t.is_simple(), || {
                format!("ET({b},{}) has a loop or a repeated arc", i + 1)
            });
            r.check(t.len().is_multiple_of(c.len()) && t.labels[0] == 0, || {
                format!("ET({b},{}) shape", i + 1)
            });
        }
    }
    if max_b >= 7 {
        r.merge(et71_check());
    }
    r
}

/// The worked examples for 63.
pub fn worked_63_check() -> SuiteReport {
    let mut r = SuiteReport::new("worked63");
    let b = OddModulus::new(63).unwrap();
    let ext = ModifiedCoachSymbol::from_coach(&coach(b, 5).unwrap()).extend();
    r.check(ext == [5, 10, 20, 23, 17, 29, 5], || {
        format!("EMCSy(63,2) = {ext:?}")
    });
    let q = mds_to_sbb(&mds_cycle(b, 5).unwrap()).unwrap();
    r.check(q.elements == [5, 53, 43, 23, 17, 29], || {
        format!("SBB(63,2) = {:?}", q.elements)
    });
    let c = mds_cycle(b, 11).unwrap();
    r.check(c.elements == [22, 19, 25, 13, 26, 11], || {
        format!("MDS(63,3) = {:?}", c.elements)
    });
    let lists = coach_symbol_lists(&c);
    r.check(
        lists.u == [11, 13, 25, 19] && lists.l == [2, 1, 1, 2],
        || format!("U/L = {:?}/{:?}", lists.u, lists.l),
    );
    r
}

pub fn equivalence_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("equivalence");
    for b in odd_moduli(max_b) {
        let coaches = coach_system(b);
        let sbb = sbb_system(b);
        let mut from_mds_coaches = BTreeSet::new();
        let mut from_mds_sbb = BTreeSet::new();
        for c in &mds_system(b).cycles {
            match mds_to_coach(c).and_then(|k| coach_to_mds(&k).map(|back| (k, back))) {
                Ok((k, back)) => {
                    r.check(&back == c, || {
                        format!("MDS -> coach -> MDS moves ({b}, {})", c.seed)
                    });
                    from_mds_coaches.insert(k.a);
                }
                Err(e) => r.check(false, || format!("MDS -> coach at ({b}, {}): {e}", c.seed)),
            }
            match mds_to_sbb(c).and_then(|q| sbb_to_mds(&q).map(|back| (q, back))) {
                Ok((q, back)) => {
                    r.check(&back == c, || {
                        format!("MDS -> SBB -> MDS moves ({b}, {})", c.seed)
                    });
                    let mut sorted = q.elements;
                    sorted.sort_unstable();
                    from_mds_sbb.insert(sorted);
                }
                Err(e) => r.check(false, || format!("MDS -> SBB at ({b}, {}): {e}", c.seed)),
            }
        }
        let direct_coaches: BTreeSet<Vec<u64>> =
            coaches.coaches.iter().map(|c| c.a.clone()).collect();
        r.check(direct_coaches == from_mds_coaches, || {
            format!("coach systems differ at b = {b}")
        });
        let direct_sbb: BTreeSet<Vec<u64>> = sbb
            .cycles
            .iter()
            .map(|c| {
                let mut v = c.elements.clone();
                v.sort_unstable();
                v
            })
            .collect();
        r.check(direct_sbb == from_mds_sbb, || {
            format!("Schick systems differ at b = {b}")
        });
        for q in &sbb.cycles {
            let ok = sbb_to_mds(q)
                .and_then(|c| mds_to_sbb(&c))
                .map(|back| &back == q);
            r.check(ok == Ok(true), || {
                format!("SBB -> MDS -> SBB moves ({b}, {})", q.seed())
            });
        }
        for k in &coaches.coaches {
            let ok = coach_to_mds(k)
                .and_then(|c| mds_to_coach(&c))
                .map(|back| &back == k);
            r.check(ok == Ok(true), || {
                format!("coach -> MDS -> coach moves ({b}, {})", k.seed())
            });
        }
    }
    if max_b >= 63 {
        r.merge(worked_63_check());
    }
    r
}

/// Order identities for primes `5 <= p < identity_limit`; `B(p)` against
/// the cycle construction for `p < construction_limit`; the classification
/// of the small primes.
pub fn primes_suite(identity_limit: u64, construction_limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("primes");
    for p in (5..identity_limit).step_by(2).filter(|&p| is_prime(p)) {
        let o4 = mult_order(4, Modulus::new(p).unwrap()).unwrap();
        let o23 = mult_order(2, Modulus::new(3 * p).unwrap()).unwrap();
        let pes = quasi_order(OddModulus::new(p).unwrap()).k;
        r.check(2 * o4 == o23, || {
            format!("2 order(4,{p}) != order(2,{})", 3 * p)
        });
        r.check(pes == o4, || format!("pes({p}) != order(4,{p})"));
        if p < construction_limit {
            let count = sbb_system(OddModulus::new(p).unwrap()).count as u64;
            r.check(count == (p - 1) / o23, || {
                format!("B({p}) = {count} != (p-1)/order(2,3p)")
            });
            let class = classify_prime(p);
            r.check(class.as_ref().is_ok_and(|c| c.cycles == count), || {
                format!("classification of {p}")
            });
        }
    }
    if identity_limit > 43 {
        let multi = primes_with_multicycle(43);
        r.check(multi == [17, 31, 41, 43], || {
            format!("multi-cycle primes up to 43: {multi:?}")
        });
        for p in [3, 5, 7, 11, 13, 19, 23, 29, 37] {
            let single = classify_prime(p).is_ok_and(|c| c.single_cycle);
            r.check(single, || format!("{p} should have a single cycle"));
        }
    }
    r
}

/// `P*(b)` against the published table.
pub fn table1_suite() -> SuiteReport {
    let mut r = SuiteReport::new("table1");
    for (b, expected) in golden::TABLE1 {
        let got = p_star(OddModulus::new(b).unwrap()).render(PolyStyle::Compact);
        r.check(got == expected, || format!("P*({b}) = {got}"));
    }
    r
}

/// `MDS(b)` against the published table, byte for byte.
pub fn table2_suite() -> SuiteReport {
    let mut r = SuiteReport::new("table2");
    for (b, expected) in golden::TABLE2 {
        let sys = mds_system(OddModulus::new(b).unwrap());
        let cycles: Vec<Vec<i64>> = sys
            .cycles
            .iter()
            .map(|c| c.elements.iter().map(|&x| x as i64).collect())
            .collect();
        let got = bracketed(&cycles);
        r.check(got == expected, || format!("MDS({b}) = {got}"));
    }
    r
}

pub fn psi65_check() -> SuiteReport {
    let mut r = SuiteReport::new("psi65");
    let p = mpr2(Modulus::new(65).unwrap());
    let got: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    let expected: Vec<String> = golden::PSI_RE_65.iter().map(|c| c.to_string()).collect();
    r.check(got == expected, || format!("MPR2(65) = {got:?}"));
    r
}

/// Both `MPR2` routes agree and `C(n)` vanishes at `2cos(pi/n)` for
/// `n <= max_n`; `Psi^re_65` matches the published coefficients.
pub fn algebra_suite(max_n: u64) -> SuiteReport {
    let mut r = SuiteReport::new("algebra");
    for n in 1..=max_n {
        let m = Modulus::new(n).unwrap();
        let folded = mpr2(m);
        let product = mpr2_product(m);
        r.check(product.as_ref() == Ok(&folded), || {
            format!("MPR2({n}) routes disagree")
        });
        let c = minimal_poly_c(m);
        let delta = if n == 1 { 1 } else { totient(2 * n) / 2 };
        r.check(c.is_monic() && c.degree() == Some(delta as usize), || {
            format!("C({n}) is not monic of degree phi(2n)/2")
        });
        let value = c.eval_at_2cos_pi(1, n);
        r.check(value.abs() < 1e-6, || {
            format!("|C({n}, rho({n}))| = {value:e}")
        });
    }
    r.merge(psi65_check());
    r
}

/// The signed entries of `IcoS(17)` and their decimals.
pub fn icos17_check() -> SuiteReport {
    let mut r = SuiteReport::new("icos17");
    let b = OddModulus::new(17).unwrap();
    let sys = icos_system(b);
    for (cycle, expected) in sys.iter().zip(golden::ICOS_17) {
        let got: Vec<(i8, u64)> = cycle
            .entries
            .iter()
            .map(|e| (e.sign.as_i64() as i8, e.j))
            .collect();
        r.check(got == expected, || {
            format!("IcoS(17, {}) = {got:?}", cycle.seed)
        });
    }
    r.check(sys.len() == 2, || format!("{} cycles for 17", sys.len()));
    let first = oddcycles_core::icos::icos_numeric(&sys[0]);
    for (v, e) in first.iter().zip(golden::ICOS_17_FINE) {
        r.check((v - e).abs() < 1e-6, || format!("{v} vs {e}"));
    }
    for (cycle, expected) in sys.iter().zip(golden::ICOS_17_TRUNCATED) {
        for (v, e) in oddcycles_core::icos::icos_numeric(cycle)
            .iter()
            .zip(expected)
        {
            // four printed digits, truncated
            let truncated = (v.abs() * 1e4).trunc() / 1e4 * v.signum();
            r.check((truncated - e).abs() < 1e-9, || {
                format!("{v} does not truncate to {e}")
            });
        }
    }
    r
}

pub fn icos_suite(max_b: u64) -> SuiteReport {
    let mut r = SuiteReport::new("icos");
    for b in odd_moduli(max_b) {
        let tolerance = if b.get() <= 201 { 1e-9 } else { 1e-6 };
        let mds = mds_system(b);
        let mut seen = BTreeSet::new();
        for c in &mds.cycles {
            let ic = icos_cycle(b, c.seed).expect("MDS seeds are valid");
            r.check(ic.residues() == c.elements, || {
                format!("IcoS({b}, {}) residues differ from MDS", c.seed)
            });
            for j in ic.residues() {
                seen.insert(j);
            }
            let err = icos_iteration_error(&ic);
            r.check(err < tolerance, || {
                format!("IcoS({b}, {}) iteration error {err:e}", c.seed)
            });
        }
        r.check(seen.into_iter().eq(rrs_star(b.into()).elements), || {
            format!("IcoS({b}) does not cover RRS*")
        });
    }
    if max_b >= 17 {
        r.merge(icos17_check());
    }
    r
}
