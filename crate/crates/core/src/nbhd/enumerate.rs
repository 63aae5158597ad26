use std::sync::Arc;

use super::facets::{kuratowski_violation, pfs_closure, KuratowskiInterior, PseudoFrameSet};
use super::structure::{PreNbhd, StructureClass};
use crate::error::{Error, Result};
use crate::order::{next_closure_all, Elem, FiniteLattice};

/// Default cap on lattice size for exhaustive enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 8;

fn check_cap(l: &FiniteLattice, cap: usize) -> Result<()> {
    if l.len() > cap {
        return Err(Error::TooLarge {
            what: "lattice",
            size: l.len(),
            cap,
        });
    }
    Ok(())
}

/// Every structure on `l` of at least the given class, in canonical order.
pub fn enumerate_structures(
    l: impl Into<Arc<FiniteLattice>>,
    class: StructureClass,
) -> Result<Vec<PreNbhd>> {
    enumerate_structures_capped(l, class, DEFAULT_LATTICE_CAP)
}

pub fn enumerate_structures_capped(
    l: impl Into<Arc<FiniteLattice>>,
    class: StructureClass,
    cap: usize,
) -> Result<Vec<PreNbhd>> {
    let l = l.into();
    check_cap(&l, cap)?;
    Ok(generator_maps(&l, None)
        .into_iter()
        .map(|g| PreNbhd::from_generators(l.clone(), &g))
        .filter(|mu| class == StructureClass::Pre || mu.is_at_least(class))
        .collect())
}

/// Every structure `ν <= μ` of at least the given class.
pub fn enumerate_below(mu: &PreNbhd, class: StructureClass, cap: usize) -> Result<Vec<PreNbhd>> {
    let l = mu.carrier_arc().clone();
    check_cap(&l, cap)?;
    let bound: Vec<Elem> = l.elems().map(|m| mu.generator(m)).collect();
    Ok(generator_maps(&l, Some(&bound))
        .into_iter()
        .map(|g| PreNbhd::from_generators(l.clone(), &g))
        .filter(|nu| class == StructureClass::Pre || nu.is_at_least(class))
        .collect())
}

/// Monotone inflationary self-maps, optionally with `g(m) >= bound(m)`.
///
/// A structure is determined by the generators of its (principal) filters, so this is a
/// complete parametrisation of preneighbourhoods.
fn generator_maps(l: &FiniteLattice, bound: Option<&[Elem]>) -> Vec<Vec<Elem>> {
    let order = linear_extension(l);
    let mut out = Vec::new();
    let mut g = vec![l.top(); l.len()];
    extend(l, &order, 0, bound, &mut g, &mut out);
    out.sort();
    out
}

fn extend(
    l: &FiniteLattice,
    order: &[Elem],
    depth: usize,
    bound: Option<&[Elem]>,
    g: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
) {
    let Some(&m) = order.get(depth) else {
        out.push(g.clone());
        return;
    };
    let mut floor = l
        .lower_covers(m)
        .iter()
        .fold(m, |acc, x| l.join(acc, g[x.index()]));
    if let Some(b) = bound {
        floor = l.join(floor, b[m.index()]);
    }
    for y in l.up_set(floor) {
        g[m.index()] = y;
        extend(l, order, depth + 1, bound, g, out);
    }
}

/// Elements sorted so that every element follows everything below it.
fn linear_extension(l: &FiniteLattice) -> Vec<Elem> {
    let mut v: Vec<Elem> = l.elems().collect();
    v.sort_by_key(|&m| (l.down_set(m).len(), m));
    v
}

/// Every pseudo-frame set on `l`, in lectic order.
pub fn enumerate_pfs(l: impl Into<Arc<FiniteLattice>>, cap: usize) -> Result<Vec<PseudoFrameSet>> {
    let l = l.into();
    check_cap(&l, cap)?;
    Ok(next_closure_all(l.len(), |s| pfs_closure(&l, s))
        .into_iter()
        .map(|s| PseudoFrameSet::new_unchecked(l.clone(), s))
        .collect())
}

/// Every Kuratowski interior on `l`, by scanning all deflationary self-maps.
pub fn enumerate_kuratowski(
    l: impl Into<Arc<FiniteLattice>>,
    cap: usize,
) -> Result<Vec<KuratowskiInterior>> {
    let l = l.into();
    check_cap(&l, cap)?;
    let choices: Vec<Vec<Elem>> = l.elems().map(|m| l.down_set(m).iter().collect()).collect();
    let mut out = Vec::new();
    let mut map = vec![l.top(); l.len()];
    scan(&l, &choices, 0, &mut map, &mut out);
    Ok(out
        .into_iter()
        .map(|map| KuratowskiInterior::new_unchecked(l.clone(), map))
        .collect())
}

fn scan(
    l: &FiniteLattice,
    choices: &[Vec<Elem>],
    i: usize,
    map: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
) {
    if i == choices.len() {
        if kuratowski_violation(l, map).is_none() {
            out.push(map.clone());
        }
        return;
    }
    for &y in &choices[i] {
        map[i] = y;
        scan(l, choices, i + 1, map, out);
    }
}

/// The largest internal topology, present exactly when `atleast` is one.
pub fn largest_topology(l: impl Into<Arc<FiniteLattice>>) -> Option<PreNbhd> {
    let top = PreNbhd::atleast(l);
    top.is_topology().then_some(top)
}
