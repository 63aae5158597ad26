//! Finite distributive lattices and their filters.

mod closure;
mod filter;
mod lattice;
mod set;

pub use closure::next_closure_all;
pub use filter::{filter_join, filter_meet, Filter, FilterLattice};
pub use lattice::FiniteLattice;
pub use set::{Elem, ElemSet, ElemSetIter, MAX_ELEMS};
