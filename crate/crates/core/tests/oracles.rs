//! Structure counts checked against brute force that shares no code with the enumerators.

use std::sync::Arc;

use nbhd_core::fixtures;
use nbhd_core::nbhd::{enumerate_kuratowski, enumerate_pfs, enumerate_structures};
use nbhd_core::{FilterLattice, FinSetObj, FiniteLattice, PreNbhd, StructureClass};

/// Families of subsets of an n-point set containing both bounds and closed under binary
/// union and intersection.
fn topologies_on(n: usize) -> usize {
    let subsets = 1usize << n;
    let full = subsets - 1;
    (0u64..1 << subsets)
        .filter(|family| {
            let has = |s: usize| family >> s & 1 == 1;
            has(0)
                && has(full)
                && (0..subsets)
                    .all(|a| !has(a) || (0..subsets).all(|b| !has(b) || (has(a | b) && has(a & b))))
        })
        .count()
}

#[test]
fn topologies_on_small_sets() {
    assert_eq!(topologies_on(1), 1);
    assert_eq!(topologies_on(2), 4);
    assert_eq!(topologies_on(3), 29);
}

#[test]
fn neighbourhoods_on_powersets_count_topologies() {
    for n in 1..=3 {
        let pts: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let l = Arc::new(FinSetObj::new(&pts).unwrap().powerset_lattice().unwrap());
        let expected = topologies_on(n);
        assert_eq!(
            enumerate_structures(l.clone(), StructureClass::Nbhd)
                .unwrap()
                .len(),
            expected
        );
        assert_eq!(enumerate_pfs(l.clone(), 8).unwrap().len(), expected);
        assert_eq!(enumerate_kuratowski(l, 8).unwrap().len(), expected);
    }
}

/// Every assignment of filters to elements that is order-reversing and majorizing.
fn brute_force_pre(l: &Arc<FiniteLattice>) -> Vec<PreNbhd> {
    let filters = FilterLattice::new(l).filters().to_vec();
    let n = l.len();
    let k = filters.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let assign: Vec<_> = idx.iter().map(|&i| filters[i]).collect();
        if let Ok(mu) = PreNbhd::new(l.clone(), assign) {
            out.push(mu);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < k {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn class_counts_match_brute_force() {
    for (name, l) in fixtures::lattices() {
        if l.len() > 6 {
            continue;
        }
        let l = Arc::new(l);
        let all = brute_force_pre(&l);
        let pre = enumerate_structures(l.clone(), StructureClass::Pre).unwrap();
        assert_eq!(all.len(), pre.len(), "{name}");
        for mu in &all {
            assert!(pre.contains(mu), "{name}: {mu}");
        }
        let weak = all.iter().filter(|mu| mu.satisfies_seq_of_seq()).count();
        let nbhd = all
            .iter()
            .filter(|mu| mu.satisfies_seq_of_seq() && mu.preserves_all_joins_exhaustive())
            .count();
        assert_eq!(
            weak,
            enumerate_structures(l.clone(), StructureClass::Weak)
                .unwrap()
                .len(),
            "{name}"
        );
        assert_eq!(
            nbhd,
            enumerate_structures(l.clone(), StructureClass::Nbhd)
                .unwrap()
                .len(),
            "{name}"
        );
    }
}

#[test]
fn frozen_counts() {
    let count = |l: FiniteLattice, c| enumerate_structures(l, c).unwrap().len();
    assert_eq!(count(fixtures::c2(), StructureClass::Pre), 2);
    assert_eq!(count(fixtures::c3(), StructureClass::Pre), 5);
    assert_eq!(count(fixtures::b2(), StructureClass::Pre), 9);
    assert_eq!(count(fixtures::b2(), StructureClass::Weak), 7);
    assert_eq!(count(fixtures::b3(), StructureClass::Pre), 216);
    assert_eq!(count(fixtures::b3(), StructureClass::Weak), 61);
    assert_eq!(count(fixtures::b3(), StructureClass::Nbhd), 29);
    assert_eq!(count(fixtures::b3(), StructureClass::Topology), 29);
}
