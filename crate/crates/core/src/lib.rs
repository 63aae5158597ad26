//! Executable internal neighbourhood theory over finite distributive lattices.
//!
//! The crate is organised bottom-up:
//!
//! - [`order`]: finite bounded distributive lattices, filters and the frame of filters.
//! - [`subfib`]: image/preimage adjunctions between subobject lattices, filter transport,
//!   preimage-preserves-joins and Frobenius predicates.
//! - [`finset`]: finite sets and functions with their epi/mono factorization.
//! - [`finframe`]: finite frames as finite locales, sublocales and the natural topology.
//! - [`nbhd`]: preneighbourhoods, weak neighbourhoods, neighbourhoods and topologies, the
//!   three facets (neighbourhood, pseudo-frame set, Kuratowski interior), reflections,
//!   enumeration and induced substructures.
//! - [`fixtures`]: small named lattices and structures shared by tests and benches.
//! - [`morphisms`]: preneighbourhood morphisms, initial and quotient structures, regular and
//!   hereditary regular epimorphisms, pseudo-open maps.

pub mod error;
pub mod finframe;
pub mod finset;
pub mod fixtures;
pub mod morphisms;
pub mod nbhd;
pub mod order;
pub mod report;
pub mod subfib;

pub use error::{Error, Result};
pub use finframe::{FiniteFrame, LocalicMap, Sublocale, SublocaleLattice};
pub use finset::{FinFunction, FinSetObj};
pub use morphisms::{SpaceMorphism, Underlying};
pub use nbhd::{KuratowskiInterior, PreNbhd, PseudoFrameSet, StructureClass};
pub use order::{Elem, ElemSet, Filter, FilterLattice, FiniteLattice};
pub use report::{Report, Verdict};
pub use subfib::{MorphismData, PpjWitness, ValidationReport};
