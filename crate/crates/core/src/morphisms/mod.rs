//! Morphisms between structured spaces: the preneighbourhood-morphism condition, initial
//! and quotient structures, reflection factorizations, regular and hereditary regular
//! epimorphisms, and pseudo-open maps.

mod regepi;

use std::sync::Arc;

pub use regepi::check_heredity_implication_chain;

use crate::error::{Error, Result};
use crate::finframe::LocalicMap;
use crate::finset::{FinFunction, MAX_SET_SIZE};
use crate::nbhd::{reflect_nbhd, reflect_weak, PreNbhd, StructureClass};
use crate::order::{Elem, Filter};
use crate::report::Report;
use crate::subfib::MorphismData;

/// The base-category morphism behind a [`SpaceMorphism`], when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Underlying {
    Abstract,
    FinSet(FinFunction),
    Localic(LocalicMap),
}

/// `f : (X, γ) -> (Y, φ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMorphism {
    data: MorphismData,
    underlying: Underlying,
    src: PreNbhd,
    dst: PreNbhd,
}

impl SpaceMorphism {
    pub fn new(data: MorphismData, src: PreNbhd, dst: PreNbhd) -> Result<Self> {
        Self::with_underlying(data, Underlying::Abstract, src, dst)
    }

    pub fn from_finset(f: FinFunction, src: PreNbhd, dst: PreNbhd) -> Result<Self> {
        let data = f.to_morphism_data_capped(MAX_SET_SIZE)?;
        Self::with_underlying(data, Underlying::FinSet(f), src, dst)
    }

    pub fn from_localic(m: LocalicMap, cap: usize, src: PreNbhd, dst: PreNbhd) -> Result<Self> {
        let (_, _, data) = m.sublocale_data(cap)?;
        Self::with_underlying(data, Underlying::Localic(m), src, dst)
    }

    fn with_underlying(
        data: MorphismData,
        underlying: Underlying,
        src: PreNbhd,
        dst: PreNbhd,
    ) -> Result<Self> {
        if src.carrier() != data.dom() || dst.carrier() != data.cod() {
            return Err(Error::CarrierMismatch);
        }
        Ok(SpaceMorphism {
            data,
            underlying,
            src,
            dst,
        })
    }

    pub fn data(&self) -> &MorphismData {
        &self.data
    }

    pub fn underlying(&self) -> &Underlying {
        &self.underlying
    }

    pub fn src(&self) -> &PreNbhd {
        &self.src
    }

    pub fn dst(&self) -> &PreNbhd {
        &self.dst
    }

    /// Same underlying morphism, new source structure.
    pub fn with_src(&self, src: PreNbhd) -> Result<Self> {
        Self::with_underlying(
            self.data.clone(),
            self.underlying.clone(),
            src,
            self.dst.clone(),
        )
    }

    pub fn with_dst(&self, dst: PreNbhd) -> Result<Self> {
        Self::with_underlying(
            self.data.clone(),
            self.underlying.clone(),
            self.src.clone(),
            dst,
        )
    }

    fn finset(&self) -> Result<&FinFunction> {
        match &self.underlying {
            Underlying::FinSet(f) => Ok(f),
            _ => Err(Error::BackendRequired),
        }
    }

    /// `p ∈ φ(n) ⇒ f⁻¹p ∈ γ(f⁻¹n)` for every `n`.
    pub fn is_prenbhd_morphism(&self) -> bool {
        self.prenbhd_counterexample().is_none()
    }

    /// A pair `(n, p)` with `p ∈ φ(n)` but `f⁻¹p ∉ γ(f⁻¹n)`.
    pub fn prenbhd_counterexample(&self) -> Option<(Elem, Elem)> {
        prenbhd_counterexample(&self.data, &self.src, &self.dst)
    }

    /// The definitional test next to its three filter-transport reformulations.
    pub fn prenbhd_formulations(&self) -> Report {
        let (f, gamma, phi) = (&self.data, &self.src, &self.dst);
        let (d, c) = (f.dom(), f.cod());
        let inv = |b: &Filter| f.inverse_filter(b).expect("filter on the codomain");
        let fwd = |a: &Filter| f.forward_filter(a).expect("filter on the domain");
        let a = self
            .prenbhd_counterexample()
            .map(|(n, _)| c.name(n).to_owned());
        let b = c
            .elems()
            .find(|&n| !inv(&phi.filter(n)).is_subset(&gamma.filter(f.preimage(n))))
            .map(|n| c.name(n).to_owned());
        let cc = c
            .elems()
            .find(|&n| !phi.filter(n).is_subset(&fwd(&gamma.filter(f.preimage(n)))))
            .map(|n| c.name(n).to_owned());
        let dd = d
            .elems()
            .find(|&m| !inv(&phi.filter(f.image(m))).is_subset(&gamma.filter(m)))
            .map(|m| d.name(m).to_owned());
        let flags = [a.is_none(), b.is_none(), cc.is_none(), dd.is_none()];
        let mut r = Report::new("prenbhd-morphism");
        r.check_none("definition", a.map(|w| vec![w]));
        r.check_none("inverse-filter-below", b.map(|w| vec![w]));
        r.check_none("below-forward-filter", cc.map(|w| vec![w]));
        r.check_none("inverse-filter-along-image", dd.map(|w| vec![w]));
        r.check(
            "formulations-agree",
            flags.iter().all(|&x| x == flags[0]),
            flags.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        );
        r
    }

    /// `f : (X, reflect_weak γ) -> (Y, φ)`.
    pub fn weak_reflection_factor(&self) -> Result<SpaceMorphism> {
        require(&self.dst, StructureClass::Weak)?;
        self.require_morphism()?;
        let factor = self.with_src(reflect_weak(&self.src))?;
        factor.require_morphism()?;
        Ok(factor)
    }

    /// `f : (X, reflect_nbhd γ) -> (Y, φ)`, for a weak source, neighbourhood target and a
    /// preimage that preserves joins.
    pub fn nbhd_reflection_factor(&self) -> Result<SpaceMorphism> {
        require(&self.src, StructureClass::Weak)?;
        require(&self.dst, StructureClass::Nbhd)?;
        self.data.is_ppj().ok_or(Error::NoPpjWitness)?;
        self.require_morphism()?;
        let factor = self.with_src(reflect_nbhd(&self.src)?.structure)?;
        factor.require_morphism()?;
        Ok(factor)
    }

    fn require_morphism(&self) -> Result<()> {
        match self.prenbhd_counterexample() {
            None => Ok(()),
            Some((n, p)) => {
                let c = self.data.cod();
                Err(Error::NotAMorphism(format!(
                    "{} ∈ φ({}) but its preimage is not a neighbourhood",
                    c.name(p),
                    c.name(n)
                )))
            }
        }
    }

    /// `u ∈ γ(f⁻¹y) ⇒ f(u) ∈ φ(y)`.
    pub fn is_pseudo_open(&self) -> bool {
        self.pseudo_open_counterexample().is_none()
    }

    /// A pair `(y, u)` violating pseudo-openness.
    pub fn pseudo_open_counterexample(&self) -> Option<(Elem, Elem)> {
        let f = &self.data;
        f.cod().elems().find_map(|y| {
            self.src
                .filter(f.preimage(y))
                .members()
                .iter()
                .find(|&u| !self.dst.contains(y, f.image(u)))
                .map(|u| (y, u))
        })
    }
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

/// A pair `(n, p)` with `p ∈ φ(n)` and `f⁻¹p ∉ γ(f⁻¹n)`.
pub fn prenbhd_counterexample(
    f: &MorphismData,
    gamma: &PreNbhd,
    phi: &PreNbhd,
) -> Option<(Elem, Elem)> {
    f.cod().elems().find_map(|n| {
        phi.filter(n)
            .members()
            .iter()
            .find(|&p| !gamma.contains(f.preimage(n), f.preimage(p)))
            .map(|p| (n, p))
    })
}

/// `m ↦ inverse_filter(φ(f m))`: the least structure on the domain making `f` a morphism.
pub fn initial_structure(f: &MorphismData, phi: &PreNbhd) -> Result<PreNbhd> {
    if phi.carrier() != f.cod() {
        return Err(Error::CarrierMismatch);
    }
    let assign = f
        .dom()
        .elems()
        .map(|m| f.inverse_filter(&phi.filter(f.image(m))))
        .collect::<Result<_>>()?;
    Ok(PreNbhd::new_unchecked(Arc::new(f.dom().clone()), assign))
}

/// `y ↦ {v : y <= v, f⁻¹v ∈ γ(f⁻¹y)}`: the greatest structure on the codomain making
/// `f` a morphism.
pub fn quotient_structure(f: &MorphismData, gamma: &PreNbhd) -> Result<PreNbhd> {
    if gamma.carrier() != f.dom() {
        return Err(Error::CarrierMismatch);
    }
    let c = f.cod();
    let assign = c
        .elems()
        .map(|y| {
            let pre = gamma.filter(f.preimage(y));
            let members = c
                .up_set(y)
                .iter()
                .filter(|&v| pre.contains(f.preimage(v)))
                .collect();
            Filter::from_members_unchecked(members)
        })
        .collect();
    Ok(PreNbhd::new_unchecked(Arc::new(c.clone()), assign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::FinSetObj;
    use crate::fixtures;
    use crate::nbhd::{enumerate_structures, induced_substructure};

    fn set(points: &[&str]) -> FinSetObj {
        FinSetObj::new(points).unwrap()
    }

    fn powerset(x: &FinSetObj) -> Arc<crate::FiniteLattice> {
        Arc::new(x.powerset_lattice().unwrap())
    }

    fn xyz_to_uv() -> FinFunction {
        FinFunction::from_names(
            set(&["x", "y", "z"]),
            set(&["u", "v"]),
            &[("x", "u"), ("y", "u"), ("z", "v")],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_a_morphism() {
        let l = fixtures::b2();
        for mu in enumerate_structures(l.clone(), StructureClass::Pre).unwrap() {
            let sm = SpaceMorphism::new(MorphismData::identity(&l), mu.clone(), mu).unwrap();
            assert!(sm.is_prenbhd_morphism());
            assert!(sm.is_pseudo_open());
        }
    }

    #[test]
    fn atleast_to_nabla_and_back() {
        let f = xyz_to_uv();
        let (lx, ly) = (powerset(f.dom()), powerset(f.cod()));
        let sm = SpaceMorphism::from_finset(
            f.clone(),
            PreNbhd::atleast(lx.clone()),
            PreNbhd::nabla(ly.clone()),
        )
        .unwrap();
        assert!(sm.is_prenbhd_morphism());
        let sm = SpaceMorphism::from_finset(f, PreNbhd::nabla(lx), PreNbhd::atleast(ly)).unwrap();
        assert!(!sm.is_prenbhd_morphism());
        let r = sm.prenbhd_formulations();
        assert!(r.verdict("formulations-agree").unwrap().pass);
        assert!(!r.verdict("definition").unwrap().pass);
    }

    #[test]
    fn formulations_agree_exhaustively() {
        let f = xyz_to_uv();
        let (lx, ly) = (powerset(f.dom()), powerset(f.cod()));
        let src = enumerate_structures(lx, StructureClass::Pre).unwrap();
        let dst = enumerate_structures(ly, StructureClass::Pre).unwrap();
        for g in src.iter().step_by(7) {
            for p in &dst {
                let sm = SpaceMorphism::from_finset(f.clone(), g.clone(), p.clone()).unwrap();
                assert!(
                    sm.prenbhd_formulations()
                        .verdict("formulations-agree")
                        .unwrap()
                        .pass
                );
            }
        }
    }

    #[test]
    fn initial_and_quotient_are_extremal() {
        let f = xyz_to_uv();
        let data = f.to_morphism_data().unwrap();
        let (lx, ly) = (powerset(f.dom()), powerset(f.cod()));
        let src = enumerate_structures(lx, StructureClass::Pre).unwrap();
        let dst = enumerate_structures(ly, StructureClass::Pre).unwrap();
        for phi in &dst {
            let init = initial_structure(&data, phi).unwrap();
            for g in &src {
                let ok = prenbhd_counterexample(&data, g, phi).is_none();
                assert_eq!(ok, init.leq(g));
            }
        }
        for g in src.iter().step_by(5) {
            let q = quotient_structure(&data, g).unwrap();
            for phi in &dst {
                let ok = prenbhd_counterexample(&data, g, phi).is_none();
                assert_eq!(ok, phi.leq(&q));
            }
        }
    }

    #[test]
    fn initial_along_inclusion_is_induced() {
        let x = set(&["x", "y", "z"]);
        let mask = x.mask_of(&["x", "z"]).unwrap();
        let inc = FinFunction::inclusion(&x, mask).to_morphism_data().unwrap();
        let emb = x.subset_embedding(mask).unwrap();
        for g in enumerate_structures(powerset(&x), StructureClass::Pre).unwrap() {
            assert_eq!(
                initial_structure(&inc, &g).unwrap(),
                induced_substructure(&emb, &g).unwrap()
            );
        }
    }

    #[test]
    fn identity_quotient_and_constant_quotient() {
        let l = fixtures::c3();
        let id = MorphismData::identity(&l);
        let mu = fixtures::mu_bad();
        assert_eq!(quotient_structure(&id, &mu).unwrap(), mu);
        assert_eq!(initial_structure(&id, &mu).unwrap(), mu);
        let f = FinFunction::from_names(set(&["x", "y"]), set(&["u"]), &[("x", "u"), ("y", "u")])
            .unwrap();
        let data = f.to_morphism_data().unwrap();
        let q = quotient_structure(&data, &PreNbhd::atleast(powerset(f.dom()))).unwrap();
        assert_eq!(q, PreNbhd::atleast(powerset(f.cod())));
    }

    #[test]
    fn reflection_factors() {
        let mu = fixtures::mu_bad();
        let l = mu.carrier().clone();
        let target = PreNbhd::nabla(l.clone());
        let sm = SpaceMorphism::new(MorphismData::identity(&l), mu.clone(), target.clone());
        // mu_bad(0) lacks 0, so the identity into nabla is not a morphism.
        assert!(sm.unwrap().weak_reflection_factor().is_err());
        let into_pre =
            SpaceMorphism::new(MorphismData::identity(&l), mu.clone(), mu.clone()).unwrap();
        let w = into_pre.weak_reflection_factor().unwrap_err();
        assert!(matches!(w, Error::WrongClass { .. }));
        let weak = reflect_weak(&mu);
        let sm = SpaceMorphism::new(MorphismData::identity(&l), mu, weak.clone()).unwrap();
        assert_eq!(sm.weak_reflection_factor().unwrap().src(), &weak);

        let mc = fixtures::mu_c();
        let b2 = mc.carrier().clone();
        let sm = SpaceMorphism::new(
            MorphismData::identity(&b2),
            mc.clone(),
            PreNbhd::nabla(b2.clone()),
        )
        .unwrap();
        assert!(matches!(
            sm.nbhd_reflection_factor(),
            Err(Error::NotAMorphism(_))
        ));
    }

    #[test]
    fn nbhd_factor_requires_ppj() {
        let b2 = fixtures::b2();
        let c3 = fixtures::c3();
        let collapse = MorphismData::from_names(
            c3.clone(),
            b2.clone(),
            &[("0", "0"), ("a", "1"), ("1", "1")],
            &[("0", "0"), ("a", "0"), ("b", "0"), ("1", "1")],
        )
        .unwrap();
        let sm = SpaceMorphism::new(collapse, PreNbhd::atleast(c3), PreNbhd::nabla(b2)).unwrap();
        assert_eq!(
            sm.nbhd_reflection_factor().unwrap_err(),
            Error::NoPpjWitness
        );
    }
}
