//! Exact path counts in the Euler graph and the Euler adic transformation.
//!
//! The Euler graph has vertices `(i,j)` with `j+1` parallel edges to
//! `(i+1,j)` and `i+1` parallel edges to `(i,j+1)`. This crate provides:
//!
//! - [`eulerian`]: generalized Eulerian numbers `A_{p,q}(i,j)` by recurrence
//!   and by closed-form alternating sums, with a permutation-descent oracle;
//! - [`ratio`]: exact ratios, monotonicity checks, directional limits and the
//!   convergence of `dim(P,Q)/dim(R,Q)`;
//! - [`path`]: concrete paths, their text form and exhaustive enumeration;
//! - [`good`]: labeled edges, good paths and a bitmask dynamic program;
//! - [`encoding`]: encoding sequences and the transport of good paths between
//!   bases of equal level;
//! - [`adic`]: the ordered incoming edges, successor map, orbits and the
//!   symmetric measure;
//! - [`cli`]: the command-line front end used by the `euler-adic` binary.
//!
//! All arithmetic is exact (`num-bigint` / `num-rational`).

pub mod adic;
pub mod budget;
pub mod cli;
pub mod encoding;
pub mod error;
pub mod eulerian;
pub mod good;
pub mod path;
pub mod ratio;
mod verify;

pub use adic::{RootPath, SymmetricMeasure};
pub use budget::Budget;
pub use encoding::{EncodingSequence, EncodingSymbol};
pub use error::{Error, Result};
pub use eulerian::{Count, CountTable, Offset, Vertex};
pub use good::{LabelScheme, LabelSet};
pub use path::{Direction, EulerPath, Step};
pub use ratio::{Exact, Ratio};
