//! Serializable snapshots of complete cycle systems.

use std::collections::BTreeSet;

use oddcycles_core::residue::{rrs_odd, rrs_star, rrs_star_odd};
use oddcycles_core::schick::{sbb_signed_system, SignedCycle};
use oddcycles_core::{
    coach_system, icos_cycle, icos_system, mds_system, sbb_system, Coach, MdsCycle, OddModulus,
    SbbCycle,
};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SystemKind {
    Coach,
    Sbb,
    SbbSigned,
    Mds,
    Icos,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Meta {
    pub phi_half: u64,
    /// Lower coach rows, present for coach systems only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<Vec<u32>>>,
}

/// `cycles` holds upper rows for coaches, signed values for signed Schick
/// cycles, and `sign * residue` for IcoS entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub kind: SystemKind,
    pub b: u64,
    pub count: usize,
    pub period: usize,
    pub cycles: Vec<Vec<i64>>,
    pub meta: Meta,
}

fn unsigned(v: &[u64]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

pub fn system_doc(kind: SystemKind, b: OddModulus) -> SystemDoc {
    let mut exponents = None;
    let cycles: Vec<Vec<i64>> = match kind {
        SystemKind::Coach => {
            let sys = coach_system(b);
            exponents = Some(sys.coaches.iter().map(|c| c.k.clone()).collect());
            sys.coaches.iter().map(|c| unsigned(&c.a)).collect()
        }
        SystemKind::Sbb => sbb_system(b)
            .cycles
            .iter()
            .map(|c| unsigned(&c.elements))
            .collect(),
        SystemKind::SbbSigned => sbb_signed_system(b)
            .into_iter()
            .map(|c| c.elements)
            .collect(),
        SystemKind::Mds => mds_system(b)
            .cycles
            .iter()
            .map(|c| unsigned(&c.elements))
            .collect(),
        SystemKind::Icos => icos_system(b)
            .iter()
            .map(|c| {
                c.entries
                    .iter()
                    .map(|e| e.sign.as_i64() * e.j as i64)
                    .collect()
            })
            .collect(),
    };
    let period = match kind {
        SystemKind::Coach => exponents.as_ref().map_or(0, |k: &Vec<Vec<u32>>| {
            k[0].iter().map(|&x| x as usize).sum()
        }),
        _ => cycles[0].len(),
    };
    SystemDoc {
        kind,
        b: b.get(),
        count: cycles.len(),
        period,
        cycles,
        meta: Meta {
            phi_half: b.phi_half(),
            exponents,
        },
    }
}

fn malformed(reason: &'static str) -> Error {
    Error::Core(oddcycles_core::Error::Malformed {
        what: "system document",
        reason,
    })
}

fn to_unsigned(cycle: &[i64]) -> Result<Vec<u64>> {
    cycle
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| malformed("negative entry in an unsigned system")))
        .collect()
}

impl SystemDoc {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<SystemDoc> {
        Ok(serde_json::from_str(text)?)
    }

    /// Rebuilds every cycle through the core constructors and checks the
    /// counts and the covering property of the system.
    pub fn validate(&self) -> Result<()> {
        let b = OddModulus::new(self.b)?;
        if self.count != self.cycles.len() || self.cycles.is_empty() {
            return Err(malformed("count does not match the cycles"));
        }
        if self.meta.phi_half != b.phi_half() {
            return Err(malformed("phiHalf does not match b"));
        }
        let mut covered = BTreeSet::new();
        let mut insert_all = |xs: &[u64]| xs.iter().all(|&x| covered.insert(x));
        let disjoint = match self.kind {
            SystemKind::Coach => {
                let ks = self
                    .meta
                    .exponents
                    .as_ref()
                    .ok_or_else(|| malformed("coach system without exponents"))?;
                if ks.len() != self.cycles.len() {
                    return Err(malformed("row count mismatch"));
                }
                let mut ok = true;
                for (a, k) in self.cycles.iter().zip(ks) {
                    let coach = Coach::from_rows(b, to_unsigned(a)?, k.clone())?;
                    if coach.k_sum() as usize != self.period {
                        return Err(malformed("exponent sum differs from the period"));
                    }
                    ok &= insert_all(&coach.a);
                }
                ok && covered.iter().copied().eq(rrs_star_odd(b).elements)
            }
            SystemKind::Sbb => {
                let mut ok = true;
                for c in &self.cycles {
                    ok &= insert_all(&SbbCycle::from_elements(b, to_unsigned(c)?)?.elements);
                }
                ok && covered.iter().copied().eq(rrs_odd(b).elements)
            }
            SystemKind::SbbSigned => {
                let mut ok = true;
                for c in &self.cycles {
                    let signed = SignedCycle {
                        b: self.b,
                        elements: c.clone(),
                    };
                    ok &= insert_all(&SbbCycle::from_elements(b, signed.abs())?.elements);
                }
                ok && covered.iter().copied().eq(rrs_odd(b).elements)
            }
            SystemKind::Mds => {
                let mut ok = true;
                for c in &self.cycles {
                    ok &= insert_all(&MdsCycle::from_elements(b, to_unsigned(c)?)?.elements);
                }
                ok && covered.iter().copied().eq(rrs_star(b.into()).elements)
            }
            SystemKind::Icos => {
                let mut ok = true;
                for c in &self.cycles {
                    let seed = c
                        .last()
                        .ok_or_else(|| malformed("empty cycle"))?
                        .unsigned_abs();
                    let expected = icos_cycle(b, seed)?;
                    let values: Vec<i64> = expected
                        .entries
                        .iter()
                        .map(|e| e.sign.as_i64() * e.j as i64)
                        .collect();
                    if &values != c {
                        return Err(malformed("IcoS entries do not follow the iteration"));
                    }
                    ok &= insert_all(&expected.residues());
                }
                ok && covered.iter().copied().eq(rrs_star(b.into()).elements)
            }
        };
        if !disjoint {
            return Err(malformed("cycles do not partition the residue set"));
        }
        if self.kind != SystemKind::Coach && self.cycles.iter().any(|c| c.len() != self.period) {
            return Err(malformed("cycle lengths differ from the period"));
        }
        Ok(())
    }
}
