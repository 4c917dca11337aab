//! Kazhdan–Lusztig cells of a-value 2 in a(2)-finite Coxeter systems.
//!
//! Elements live in the geometric representation with exact arithmetic, so
//! finite, affine and indefinite systems are handled alike. The cells are
//! built from stubs and star operations ([`cells`]); [`oracle`] recomputes
//! them for small finite groups from the Kazhdan–Lusztig basis.
//!
//! ```
//! use a2cells::cells::A2Cells;
//!
//! let cells = A2Cells::from_descriptor("B:4").unwrap();
//! assert_eq!(cells.stubs().len(), 6);
//! assert_eq!(cells.len(), 56);
//! ```

pub mod cells;
pub mod cli;
pub mod element;
pub mod error;
pub mod heap;
pub mod oracle;
pub mod ring;
pub mod star;
pub mod system;
pub mod verify;

pub use cells::A2Cells;
pub use element::GroupElement;
pub use error::{Error, Result};
pub use system::{CoxeterSystem, TypeTag};
