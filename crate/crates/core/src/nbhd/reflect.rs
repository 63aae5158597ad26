use std::sync::Arc;

use super::enumerate::{enumerate_below, enumerate_structures_capped};
use super::facets::{nbhd_from_pfs, pfs_closure, PseudoFrameSet};
use super::structure::{PreNbhd, StructureClass};
use crate::error::{Error, Result};
use crate::order::{Filter, FiniteLattice};

fn ensure_carrier(carrier: &Arc<FiniteLattice>, list: &[PreNbhd]) -> Result<()> {
    if list
        .iter()
        .all(|mu| Arc::ptr_eq(mu.carrier_arc(), carrier) || mu.carrier() == &**carrier)
    {
        Ok(())
    } else {
        Err(Error::CarrierMismatch)
    }
}

/// Pointwise filter join. The empty join is the constant `{top}` structure.
pub fn sup_pre(carrier: &Arc<FiniteLattice>, list: &[PreNbhd]) -> Result<PreNbhd> {
    ensure_carrier(carrier, list)?;
    let l = &**carrier;
    let assign = l
        .elems()
        .map(|m| {
            list.iter()
                .fold(Filter::trivial(l), |acc, mu| acc.join(l, &mu.filter(m)))
        })
        .collect();
    Ok(PreNbhd::new_unchecked(carrier.clone(), assign))
}

/// Pointwise intersection. The empty meet is `atleast`.
pub fn inf_pre(carrier: &Arc<FiniteLattice>, list: &[PreNbhd]) -> Result<PreNbhd> {
    ensure_carrier(carrier, list)?;
    let l = &**carrier;
    let assign = l
        .elems()
        .map(|m| {
            list.iter()
                .fold(Filter::principal(l, m), |acc, mu| acc.meet(&mu.filter(m)))
        })
        .collect();
    Ok(PreNbhd::new_unchecked(carrier.clone(), assign))
}

/// One interpolation step: `m ↦ ⋃_{q ∈ μ(m)} μ(q)`.
fn interpolation_core(mu: &PreNbhd) -> PreNbhd {
    let l = mu.carrier();
    let assign = l
        .elems()
        .map(|m| Filter::from_members_unchecked(mu.interpolants(m)))
        .collect();
    PreNbhd::new_unchecked(mu.carrier_arc().clone(), assign)
}

/// The largest weak neighbourhood below `μ`, by iterating the interpolation core.
pub fn reflect_weak(mu: &PreNbhd) -> PreNbhd {
    let mut cur = mu.clone();
    loop {
        let next = interpolation_core(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The pointwise join of all weak structures below `μ`, found by enumeration.
pub fn reflect_weak_by_enumeration(mu: &PreNbhd, cap: usize) -> Result<PreNbhd> {
    let below = enumerate_below(mu, StructureClass::Weak, cap)?;
    sup_pre(mu.carrier_arc(), &below)
}

/// A neighbourhood reflection together with whether it actually lies below the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    pub structure: PreNbhd,
    /// `structure <= input`. When false, the neighbourhoods below the input have no
    /// largest member and `structure` is their least upper bound among neighbourhoods.
    pub below_input: bool,
}

/// Join, among neighbourhoods, of every neighbourhood below a weak `μ`.
///
/// A neighbourhood `ν` lies below `μ` exactly when its opens are `μ`-open, so the join is
/// rebuilt from the pseudo-frame set generated by the `μ`-opens. If bottom is not
/// `μ`-open no neighbourhood lies below `μ` and the result is `nabla`.
pub fn reflect_nbhd(mu: &PreNbhd) -> Result<Reflection> {
    require(mu, StructureClass::Weak)?;
    let l = mu.carrier();
    let opens = mu.opens();
    let structure = if opens.contains(l.bottom()) {
        let o = PseudoFrameSet::new_unchecked(mu.carrier_arc().clone(), pfs_closure(l, opens));
        nbhd_from_pfs(&o)
    } else {
        PreNbhd::nabla(mu.carrier_arc().clone())
    };
    let below_input = structure.leq(mu);
    Ok(Reflection {
        structure,
        below_input,
    })
}

/// The least neighbourhood above every neighbourhood below `μ`, found by enumeration.
pub fn reflect_nbhd_by_enumeration(mu: &PreNbhd, cap: usize) -> Result<PreNbhd> {
    require(mu, StructureClass::Weak)?;
    let below = enumerate_below(mu, StructureClass::Nbhd, cap)?;
    let carrier = mu.carrier_arc();
    let upper = enumerate_structures_capped(carrier.clone(), StructureClass::Nbhd, cap)?;
    upper
        .into_iter()
        .filter(|nu| below.iter().all(|b| b.leq(nu)))
        .reduce(|a, b| if a.leq(&b) { a } else { b })
        .ok_or(Error::WrongClass {
            found: "Weak",
            required: "Nbhd",
        })
}

/// The largest internal topology below a neighbourhood `μ`.
pub fn reflect_top(mu: &PreNbhd) -> Result<PreNbhd> {
    require(mu, StructureClass::Nbhd)?;
    if mu.is_topology() {
        return Ok(mu.clone());
    }
    let below = enumerate_below(mu, StructureClass::Topology, usize::MAX)?;
    below
        .iter()
        .find(|t| below.iter().all(|u| u.leq(t)))
        .cloned()
        .ok_or_else(|| Error::NotANeighbourhood("no largest topology below the input".into()))
}

fn require(mu: &PreNbhd, class: StructureClass) -> Result<()> {
    let found = mu.classify();
    if found < class {
        return Err(Error::WrongClass {
            found: found.name(),
            required: class.name(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nbhd::enumerate_structures;

    #[test]
    fn sup_and_inf_identities() {
        let mu = fixtures::mu_c();
        let c = mu.carrier_arc().clone();
        assert_eq!(
            sup_pre(&c, &[PreNbhd::constant_top(c.clone()), mu.clone()]).unwrap(),
            mu
        );
        assert_eq!(
            inf_pre(&c, &[PreNbhd::atleast(c.clone()), mu.clone()]).unwrap(),
            mu
        );
        assert_eq!(sup_pre(&c, &[]).unwrap(), PreNbhd::constant_top(c.clone()));
        assert_eq!(inf_pre(&c, &[]).unwrap(), PreNbhd::atleast(c.clone()));
    }

    #[test]
    fn nabla_is_bottom_only_for_whole_at_bottom() {
        let mu = fixtures::mu_c();
        let c = mu.carrier_arc().clone();
        let s = sup_pre(&c, &[PreNbhd::nabla(c.clone()), mu.clone()]).unwrap();
        assert_ne!(s, mu);
        let n = PreNbhd::atleast(c.clone());
        assert_eq!(
            sup_pre(&c, &[PreNbhd::nabla(c.clone()), n.clone()]).unwrap(),
            n
        );
    }

    #[test]
    fn carrier_mismatch() {
        let c = Arc::new(fixtures::c3());
        let err = sup_pre(&c, &[fixtures::mu_c()]).unwrap_err();
        assert_eq!(err, Error::CarrierMismatch);
    }

    #[test]
    fn sup_of_weak_pairs_is_weak() {
        let c = Arc::new(fixtures::b2());
        let weak = enumerate_structures(c.clone(), StructureClass::Weak).unwrap();
        for a in &weak {
            for b in &weak {
                assert!(sup_pre(&c, &[a.clone(), b.clone()]).unwrap().is_weak());
            }
        }
    }

    #[test]
    fn reflect_weak_of_mu_bad() {
        let mu = fixtures::mu_bad();
        let r = reflect_weak(&mu);
        assert_eq!(r.to_string(), "0 -> {1}; a -> {1}; 1 -> {1}");
        assert_eq!(r, reflect_weak_by_enumeration(&mu, 8).unwrap());
        assert_eq!(reflect_weak(&r), r);
    }

    #[test]
    fn reflect_nbhd_of_mu_c_is_nabla() {
        let mu = fixtures::mu_c();
        let r = reflect_nbhd(&mu).unwrap();
        assert_eq!(r.structure, PreNbhd::nabla(mu.carrier_arc().clone()));
        assert!(!r.below_input);
        assert_eq!(r.structure, reflect_nbhd_by_enumeration(&mu, 8).unwrap());
    }

    #[test]
    fn reflect_nbhd_without_maximum() {
        // Opens {∅, {x}, {y}, X}: meet-closed but {x,y} is missing.
        let b3 = Arc::new(fixtures::b3());
        let opens = b3.set_of(&["{}", "{x}", "{y}", "{x,y,z}"]).unwrap();
        let g: Vec<_> = b3
            .elems()
            .map(|m| b3.meet_all(opens.intersection(b3.up_set(m))))
            .collect();
        let mu = PreNbhd::from_generators(b3.clone(), &g);
        assert_eq!(mu.classify(), StructureClass::Weak);
        let r = reflect_nbhd(&mu).unwrap();
        assert!(!r.below_input);
        assert_eq!(r.structure, reflect_nbhd_by_enumeration(&mu, 8).unwrap());
    }

    #[test]
    fn reflections_fix_their_class() {
        for (_, l) in fixtures::lattices().into_iter().take(4) {
            let l = Arc::new(l);
            for nu in enumerate_structures(l.clone(), StructureClass::Nbhd).unwrap() {
                let r = reflect_nbhd(&nu).unwrap();
                assert!(r.below_input);
                assert_eq!(r.structure, nu);
                assert_eq!(reflect_top(&nu).unwrap(), nu);
            }
        }
    }

    #[test]
    fn wrong_class() {
        let err = reflect_nbhd(&fixtures::mu_bad()).unwrap_err();
        assert!(matches!(
            err,
            Error::WrongClass {
                found: "Pre",
                required: "Weak"
            }
        ));
        assert!(reflect_top(&fixtures::mu_c()).is_err());
    }
}
