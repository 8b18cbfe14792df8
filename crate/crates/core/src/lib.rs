//! Finite Coxeter groups, their reflection arrangements, and the group
//! action on the cohomology of the complexified complement — all in
//! exact arithmetic.
//!
//! The crate builds root systems for every irreducible type, enumerates
//! the group as permutations of the roots, classifies involutions in
//! Richardson normal form, tests the geometric specialness condition,
//! and evaluates the induced-character formula for the standard and
//! twisted actions. Two independent oracles verify the formulas: traces
//! on the Orlik–Solomon algebra in its broken-circuit basis, and Euler
//! characteristics of fixed sets computed from Möbius functions of
//! subspace arrangements.

pub mod characters;
pub mod group;
pub mod involutions;
pub mod lefschetz;
pub mod os_algebra;
pub mod linalg;
pub mod poly;
pub mod rootsys;

pub mod scalar;
pub mod tables;

pub use characters::ClassFunction;
pub use group::{Elem, Group};
pub use involutions::{InvolutionClass, SpecialSet};
pub use lefschetz::SubspacePoset;
pub use os_algebra::{ArrangementMatroid, OSElement};
pub use poly::IntPoly;
pub use rootsys::{CoxeterType, Family, RootSystem};
pub use scalar::{Field, FieldKind, FieldRef, Scalar};
