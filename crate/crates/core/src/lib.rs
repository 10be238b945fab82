//! Ad-nilpotent ideals of a Borel subalgebra, the affine Weyl group
//! elements and coweight lattice points attached to them, and the
//! discrete-series bookkeeping built on top.

pub mod character;
pub mod dseries;
pub mod error;
pub mod ideals;
pub mod lattice;
pub mod rootsys;
pub mod symmspace;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Family, Point, Root, RootSet, RootSystem, Q};
pub use weyl::{AffineRoot, ExtAffineElt, WeylElt};
