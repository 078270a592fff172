//! Odd-modulus doubling cycles: coaches, Schick cycles, modified modular
//! doubling cycles, Euler tours on the `2b`-gon, the IcoS iteration, and
//! the polynomials over `Z[2cos(pi/n)]` that tie them together.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod arith;
pub mod coach;
pub mod equivalence;
pub mod error;
pub mod fixed;
pub mod icos;
pub mod mds;
pub mod primes;
pub mod residue;
pub mod schick;
pub mod tour;

pub use coach::{coach, coach_system, quasi_order, Coach, CoachSystem, Sign};
pub use error::{Error, Result};
pub use icos::{icos_cycle, icos_system, IcosCycle, SignedResidue};
pub use mds::{mds_cycle, mds_system, MdsCycle, MdsSystem};
pub use residue::{mod_star, Modulus, OddModulus};
pub use schick::{sbb_cycle, sbb_system, SbbCycle, SbbSystem};
pub use tour::{euler_tour, EulerTour};
