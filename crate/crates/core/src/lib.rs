//! Exact enumeration of pattern-avoiding transversals of Young diagrams.
//!
//! ```
//! use shapewilf::bijections::psi;
//! use shapewilf::{count_avoiders, enumerate_avoiders, Pattern, YoungDiagram};
//!
//! let y: YoungDiagram = "5,5,5,5,4".parse()?;
//! let sigma: Pattern = "213".parse()?;
//! assert_eq!(count_avoiders(&y, &sigma), 37u32.into());
//! let target: Pattern = "123".parse()?;
//! for t in enumerate_avoiders(&y, &[sigma]) {
//!     assert!(psi(&t)?.image.avoids(&target));
//! }
//! # Ok::<(), shapewilf::Error>(())
//! ```

pub mod bijections;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod formulas;
pub mod pattern;
pub mod report;
pub mod search;
pub mod splitting;
pub mod transversal;
pub mod verify;

pub use diagram::{Anchor, Cell, CriticalPoint, GridPoint, Quadrant, SubboardKind, YoungDiagram};
pub use error::{Error, Result};
pub use pattern::Pattern;
pub use search::{count_avoiders, count_avoiders_all, enumerate_avoiders, Constraint};
pub use transversal::{PartialTransversal, Transversal};
