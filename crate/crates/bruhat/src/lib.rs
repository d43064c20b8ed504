//! Exact combinatorics of simply-laced Kac-Moody diagrams: Weyl group
//! enumeration, Bruhat cell tables of flag-manifold quotients, and a
//! bookkeeping layer for low-degree homotopy deductions.
//!
//! Everything is exact integer arithmetic; overflow is an error, never a
//! wrap. All enumeration is deterministic: levels are sorted by canonical
//! word, so repeated runs produce identical output byte for byte.

pub mod cli;
pub mod flag;
pub mod gcm;
pub mod homotopy;
mod matrix;
pub mod weyl;
