//! Small lattices, frames and structures used throughout tests, benches and examples.

use crate::finset::FinSetObj;
use crate::nbhd::PreNbhd;
use crate::order::{Filter, FiniteLattice};

/// `0 < 1`.
pub fn c2() -> FiniteLattice {
    FiniteLattice::chain(&["0", "1"]).expect("chain")
}

/// `0 < a < 1`.
pub fn c3() -> FiniteLattice {
    FiniteLattice::chain(&["0", "a", "1"]).expect("chain")
}

/// `0 < a, b < 1` with `a`, `b` incomparable.
pub fn b2() -> FiniteLattice {
    FiniteLattice::new(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    .expect("square")
}

/// Powerset of `{x, y, z}`.
pub fn b3() -> FiniteLattice {
    FinSetObj::new(&["x", "y", "z"])
        .and_then(|s| s.powerset_lattice())
        .expect("powerset")
}

/// `B2` with a new top adjoined: `0 < a, b < c < 1`. Distributive, not Boolean.
pub fn b2_plus_top() -> FiniteLattice {
    FiniteLattice::new(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")],
    )
    .expect("B2 plus top")
}

/// The product `C2 × C3`, six elements named by coordinates.
pub fn c2_times_c3() -> FiniteLattice {
    let names: Vec<String> = (0..2)
        .flat_map(|i| (0..3).map(move |j| format!("{i}{j}")))
        .collect();
    FiniteLattice::from_order(names, |p, q| p / 3 <= q / 3 && p % 3 <= q % 3).expect("product")
}

/// Every fixture lattice, small to large.
pub fn lattices() -> Vec<(&'static str, FiniteLattice)> {
    vec![
        ("C2", c2()),
        ("C3", c3()),
        ("B2", b2()),
        ("B2+1", b2_plus_top()),
        ("C2xC3", c2_times_c3()),
        ("B3", b3()),
    ]
}

/// On `C3`: `0 ↦ {a,1}`, `a ↦ {1}`, `1 ↦ {1}`. Not interpolative at `0`.
pub fn mu_bad() -> PreNbhd {
    PreNbhd::from_names(
        c3(),
        &[("0", vec!["a", "1"]), ("a", vec!["1"]), ("1", vec!["1"])],
    )
    .expect("valid preneighbourhood")
}

/// On `B2`: `m ↦ ↑(m ∨ a)`. Interpolative, but bottom is not open.
pub fn mu_c() -> PreNbhd {
    let l = b2();
    let a = l.elem("a").expect("a");
    let assign = l
        .elems()
        .map(|m| Filter::principal(&l, l.join(m, a)))
        .collect();
    PreNbhd::new(l, assign).expect("valid preneighbourhood")
}
