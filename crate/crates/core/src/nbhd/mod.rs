//! Preneighbourhoods and their refinements on a finite distributive lattice.

mod enumerate;
mod facets;
mod induced;
mod reflect;
mod structure;

pub use enumerate::{
    enumerate_below, enumerate_kuratowski, enumerate_pfs, enumerate_structures,
    enumerate_structures_capped, largest_topology, DEFAULT_LATTICE_CAP,
};
pub use facets::{
    kuratowski_from, nbhd_from_kuratowski, nbhd_from_pfs, pfs_from, KuratowskiInterior,
    PseudoFrameSet,
};
pub use induced::induced_substructure;
pub use reflect::{
    inf_pre, reflect_nbhd, reflect_nbhd_by_enumeration, reflect_top, reflect_weak,
    reflect_weak_by_enumeration, sup_pre, Reflection,
};
pub use structure::{PreNbhd, StructureClass};
