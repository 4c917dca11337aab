//! Brute-force Kazhdan–Lusztig computations for small finite groups, used
//! as an independent check on the stub machinery.

pub mod compare;
pub mod group;
pub mod kl;
pub mod poly;

pub use compare::{compare_with_cells, OracleDump, OracleReport};
pub use group::{enumerate_group, FiniteGroup, DEFAULT_BOUND};
pub use kl::{KlTable, OracleCells};
pub use poly::{HeckeElement, LaurentPoly};
