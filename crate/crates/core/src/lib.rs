pub mod error;
pub mod examples;
pub mod factorization;
pub mod formulas;
pub mod lacing;
pub mod perm;
pub mod pipes;
pub mod poly;
pub mod quiver;
pub mod verify;

pub use error::{Error, Result};
pub use lacing::{LacingDiagram, SeqPerm};
pub use perm::{PartialPermutation, Permutation};
pub use pipes::{CellSpace, PipeDream};
pub use poly::{Family, LaurentPoly, Monomial, VarId, WeightMode};
pub use quiver::{BipartiteQuiver, BlockLayout, OrbitData, Vertex};
