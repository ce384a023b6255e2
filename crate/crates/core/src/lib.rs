//! Exact truncated p-adic arithmetic built around finite fields and their
//! deformations: digit-vector `Z/p^N`, Witt vectors over `F_q` with
//! Teichmüller and Frobenius lifts, Buium p-derivations, Morita's `Gamma_p`,
//! Teichmüller-valued character sums and reusable cocycle checkers.

pub mod buium;
pub mod charsum;
pub mod cohomo;
pub mod error;
pub mod exec;
pub mod gamma;
pub mod gfq;
pub mod pi_ring;
pub mod report;
pub mod rng;
pub mod suite;
pub mod witt;
pub mod zp;

pub use error::{Error, Result};
pub use exec::Execution;
pub use gfq::{FqElem, FqField};
pub use pi_ring::{PiRing, PiRingElem};
pub use report::Report;
pub use witt::{ZqElem, ZqRing};
pub use zp::PAdicInt;
