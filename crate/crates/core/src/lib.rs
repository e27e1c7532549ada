//! Flag codes over finite fields: field and matrix arithmetic, subspace and
//! flag distances, an orbit-based construction of flag codes of full and
//! partial type, and exhaustive checks of their distance properties.

pub mod construct;
pub mod error;
pub mod field;
pub mod flags;
pub mod matgf;
pub mod subspace;

pub use construct::{ConstructionParams, Family, GeneratorSet, VerificationReport};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec, Poly};
pub use flags::{Flag, FlagCode, Label, TypeVector};
pub use matgf::{Block, Matrix, RowSlice};
pub use subspace::{CyclicGroup, Subspace, SubspaceCode};
