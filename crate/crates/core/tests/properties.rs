use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use nbhd_core::finframe::{all_sublocales, FiniteFrame};
use nbhd_core::fixtures;
use nbhd_core::morphisms::{initial_structure, quotient_structure};
use nbhd_core::nbhd::{
    enumerate_structures, induced_substructure, inf_pre, kuratowski_from, nbhd_from_kuratowski,
    nbhd_from_pfs, pfs_from, reflect_nbhd, reflect_weak, sup_pre,
};
use nbhd_core::subfib::check_frobenius_equivalences;
use nbhd_core::{
    ElemSet, FinFunction, FinSetObj, FiniteLattice, PreNbhd, SpaceMorphism, StructureClass,
};

struct Pool {
    lattice: Arc<FiniteLattice>,
    pre: Vec<PreNbhd>,
}

fn pools() -> &'static [Pool] {
    static POOLS: OnceLock<Vec<Pool>> = OnceLock::new();
    POOLS.get_or_init(|| {
        fixtures::lattices()
            .into_iter()
            .map(|(_, l)| {
                let lattice = Arc::new(l);
                let pre = enumerate_structures(lattice.clone(), StructureClass::Pre).unwrap();
                Pool { lattice, pre }
            })
            .collect()
    })
}

/// A fixture lattice index and three structures on it.
fn triple() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0..pools().len()).prop_flat_map(|p| {
        let n = pools()[p].pre.len();
        (Just(p), 0..n, 0..n, 0..n)
    })
}

fn points(n: usize, prefix: &str) -> FinSetObj {
    let pts: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    FinSetObj::new(&pts).unwrap()
}

fn function() -> impl Strategy<Value = FinFunction> {
    (0usize..=3, 1usize..=3).prop_flat_map(|(m, n)| {
        prop::collection::vec(0..n, m)
            .prop_map(move |map| FinFunction::new(points(m, "x"), points(n, "y"), map).unwrap())
    })
}

fn surjection() -> impl Strategy<Value = FinFunction> {
    function().prop_filter("surjective", |f| f.is_surjective())
}

fn structure_on(l: Arc<FiniteLattice>, class: StructureClass) -> Vec<PreNbhd> {
    enumerate_structures(l, class).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn interpolation_tests_agree((p, i, _, _) in triple()) {
        let mu = &pools()[p].pre[i];
        prop_assert_eq!(mu.is_interpolative(), mu.satisfies_seq_of_seq());
    }

    #[test]
    fn weak_reflection_is_a_kernel((p, i, j, _) in triple()) {
        let pool = &pools()[p];
        let (mu, nu) = (&pool.pre[i], &pool.pre[j]);
        let r = reflect_weak(mu);
        prop_assert!(r.leq(mu));
        prop_assert!(r.is_weak());
        prop_assert_eq!(reflect_weak(&r), r.clone());
        if mu.leq(nu) {
            prop_assert!(r.leq(&reflect_weak(nu)));
        }
    }

    #[test]
    fn sup_and_inf_are_bounds((p, i, j, k) in triple()) {
        let pool = &pools()[p];
        let (a, b, c) = (&pool.pre[i], &pool.pre[j], &pool.pre[k]);
        let s = sup_pre(&pool.lattice, &[a.clone(), b.clone()]).unwrap();
        let m = inf_pre(&pool.lattice, &[a.clone(), b.clone()]).unwrap();
        prop_assert!(a.leq(&s) && b.leq(&s));
        prop_assert!(m.leq(a) && m.leq(b));
        if a.leq(c) && b.leq(c) {
            prop_assert!(s.leq(c));
        }
        if c.leq(a) && c.leq(b) {
            prop_assert!(c.leq(&m));
        }
        prop_assert!(PreNbhd::new(pool.lattice.clone(), s.filters().to_vec()).is_ok());
        prop_assert!(PreNbhd::new(pool.lattice.clone(), m.filters().to_vec()).is_ok());
        if a.is_weak() && b.is_weak() {
            prop_assert!(s.is_weak());
        }
    }

    #[test]
    fn facets_round_trip((p, i, _, _) in triple()) {
        let mu = &pools()[p].pre[i];
        if mu.is_neighbourhood() {
            let o = pfs_from(mu).unwrap();
            prop_assert_eq!(&nbhd_from_pfs(&o), mu);
            let k = kuratowski_from(mu).unwrap();
            prop_assert_eq!(&nbhd_from_kuratowski(&k), mu);
            prop_assert_eq!(k.fixed_points(), o.members());
            prop_assert!(mu.is_topology());
        } else {
            prop_assert!(pfs_from(mu).is_err());
            prop_assert!(kuratowski_from(mu).is_err());
        }
    }

    #[test]
    fn opens_facts((p, i, _, _) in triple()) {
        let mu = &pools()[p].pre[i];
        let l = mu.carrier();
        let o = mu.opens();
        prop_assert!(o.contains(l.top()));
        for x in o {
            for y in o {
                prop_assert!(o.contains(l.meet(x, y)));
            }
        }
        let alt: ElemSet = l.elems().filter(|&p| mu.filter(p).members() == l.up_set(p)).collect();
        prop_assert_eq!(o, alt);
        prop_assert_eq!(mu.opens_join_closed(), mu.interiors_are_open());
    }

    #[test]
    fn nbhd_reflection_is_a_neighbourhood((p, i, _, _) in triple()) {
        let mu = &pools()[p].pre[i];
        if mu.is_weak() {
            let r = reflect_nbhd(mu).unwrap();
            prop_assert!(r.structure.is_neighbourhood());
            prop_assert_eq!(r.below_input, r.structure.leq(mu));
        }
    }

    #[test]
    fn morphism_data_laws(f in function()) {
        let d = f.to_morphism_data().unwrap();
        prop_assert!(d.check().all_pass());
        prop_assert!(d.check_filter_galois());
        prop_assert!(d.is_ppj().is_some_and(|w| w.is_adjoint()));
        prop_assert!(d.is_frobenius());
        prop_assert!(check_frobenius_equivalences(&f).unwrap().all_pass());
        let (e, m) = f.epi_mono_factorize();
        prop_assert!(e.is_surjective() && m.is_injective());
        prop_assert_eq!(e.compose(&m).unwrap(), f);
    }

    #[test]
    fn quotients_are_hereditary_regular(f in surjection(), seed in any::<prop::sample::Index>()) {
        let lx = Arc::new(f.dom().powerset_lattice().unwrap());
        let all = structure_on(lx, StructureClass::Pre);
        let gamma = all[seed.index(all.len())].clone();
        let data = f.to_morphism_data().unwrap();
        let phi = quotient_structure(&data, &gamma).unwrap();
        let sm = SpaceMorphism::from_finset(f, gamma, phi).unwrap();
        prop_assert!(sm.is_prenbhd_morphism());
        prop_assert!(sm.regular_epi_report().unwrap().all_pass());
        prop_assert!(sm.heredity_report().unwrap().all_pass());
        prop_assert!(sm.is_pseudo_open());
    }

    #[test]
    fn transported_structures_keep_their_class(f in function(), seed in any::<prop::sample::Index>()) {
        let ly = Arc::new(f.cod().powerset_lattice().unwrap());
        let all = structure_on(ly, StructureClass::Pre);
        let phi = &all[seed.index(all.len())];
        let data = f.to_morphism_data().unwrap();
        let init = initial_structure(&data, phi).unwrap();
        prop_assert!(PreNbhd::new(init.carrier_arc().clone(), init.filters().to_vec()).is_ok());
        if phi.is_weak() {
            prop_assert!(init.is_weak());
        }
        if phi.is_neighbourhood() {
            prop_assert!(init.is_neighbourhood());
        }
    }

    #[test]
    fn induced_structures_keep_their_class(mask in 0u128..8, seed in any::<prop::sample::Index>()) {
        let x = points(3, "x");
        let l = Arc::new(x.powerset_lattice().unwrap());
        let all = structure_on(l, StructureClass::Pre);
        let gamma = &all[seed.index(all.len())];
        let induced = induced_substructure(&x.subset_embedding(mask).unwrap(), gamma).unwrap();
        prop_assert!(PreNbhd::new(induced.carrier_arc().clone(), induced.filters().to_vec()).is_ok());
        if gamma.is_weak() {
            prop_assert!(induced.is_weak());
        }
        if gamma.is_neighbourhood() {
            prop_assert!(induced.is_neighbourhood());
        }
    }

    #[test]
    fn sublocale_closure_is_a_closure(p in 0usize..5, bits in any::<u8>()) {
        let (_, l) = fixtures::lattices().swap_remove(p);
        let frame = FiniteFrame::new(l);
        let s = ElemSet::from_bits(bits as u128).intersection(frame.lattice().all());
        let c = frame.sublocale_closure(s);
        prop_assert!(s.is_subset(c));
        prop_assert!(frame.is_sublocale(c));
        prop_assert_eq!(frame.sublocale_closure(c), c);
        let subs = all_sublocales(&frame).unwrap();
        prop_assert!(subs.sublocales().iter().any(|t| t.members() == c));
    }
}
