use super::{quotient_structure, require, SpaceMorphism, Underlying};
use crate::error::{Error, Result};
use crate::finset::{FinFunction, Mask, MAX_SET_SIZE};
use crate::nbhd::{enumerate_structures_capped, induced_substructure, StructureClass};
use crate::report::Report;

impl SpaceMorphism {
    fn base_regular_epi(&self) -> Result<bool> {
        match &self.underlying {
            Underlying::FinSet(f) => Ok(f.is_regular_epi()),
            _ => Err(Error::BackendRequired),
        }
    }

    /// Base regular epi, codomain structure equal to the quotient structure, and, when the
    /// map is stably in `E`, the simple description `u ∈ φ(y) ⇔ f⁻¹u ∈ γ(f⁻¹y)`.
    pub fn regular_epi_report(&self) -> Result<Report> {
        let f = self.finset()?;
        let data = &self.data;
        let c = data.cod();
        let mut r = Report::new("regular-epi");
        r.check_none(
            "base-regular-epi",
            (!f.is_regular_epi()).then(|| vec!["not surjective".to_owned()]),
        );
        let q = quotient_structure(data, &self.src)?;
        let differs = c.elems().find_map(|y| {
            self.dst
                .filter(y)
                .members()
                .union(q.filter(y).members())
                .difference(
                    self.dst
                        .filter(y)
                        .members()
                        .intersection(q.filter(y).members()),
                )
                .iter()
                .next()
                .map(|u| vec![c.name(y).to_owned(), c.name(u).to_owned()])
        });
        r.check_none("equals-quotient", differs);
        if f.is_in_e_stably() {
            let simple = c.elems().find_map(|y| {
                c.elems()
                    .find(|&u| {
                        self.dst.contains(y, u)
                            != self.src.contains(data.preimage(y), data.preimage(u))
                    })
                    .map(|u| vec![c.name(y).to_owned(), c.name(u).to_owned()])
            });
            r.check_none("simple-description", simple);
        }
        Ok(r)
    }

    /// Regular epimorphism of preneighbourhood spaces over finite sets.
    pub fn is_regular_epi_pnhd(&self) -> Result<bool> {
        let r = self.regular_epi_report()?;
        Ok(r.passed("base-regular-epi") && r.passed("equals-quotient"))
    }

    /// Regular epimorphism between neighbourhood spaces: regular in the base, preimage
    /// preserving joins, and the quotient equation.
    pub fn is_regular_epi_nhd(&self) -> Result<bool> {
        require(&self.src, StructureClass::Nbhd)?;
        require(&self.dst, StructureClass::Nbhd)?;
        self.data.is_ppj().ok_or(Error::NoPpjWitness)?;
        let base = self.base_regular_epi()?;
        Ok(base && quotient_structure(&self.data, &self.src)? == self.dst)
    }

    /// First codomain subset whose restriction, with induced structures on both ends, is
    /// not a regular epimorphism.
    fn heredity_definitional_witness(&self) -> Result<Option<Mask>> {
        let f = self.finset()?;
        for t in 0..=f.cod().full_mask() {
            let rest = f.restriction_mask(t)?;
            let gamma_t = induced_substructure(&rest.dom_embed, &self.src)?;
            let phi_t = induced_substructure(&rest.cod_embed, &self.dst)?;
            let sm = SpaceMorphism::from_finset(f.restrict_along_mask(t), gamma_t, phi_t)?;
            if !sm.is_regular_epi_pnhd()? {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// Morphism, every restriction regular, and for `u, v <= t`:
    /// `(∃p ∈ γ(f⁻¹u))(f(f⁻¹t ∧ p) <= v) ⇒ (∃q ∈ φ(u))(t ∧ q <= v)`.
    fn heredity_formula_witness(&self) -> Result<Option<String>> {
        let f = self.finset()?;
        if let Some((n, p)) = self.prenbhd_counterexample() {
            let c = self.data.cod();
            return Ok(Some(format!(
                "not a morphism at ({}, {})",
                c.name(n),
                c.name(p)
            )));
        }
        if let Some(t) = f.unstable_witness() {
            return Ok(Some(format!(
                "restriction to {} is not regular",
                f.cod().subset_name(t)
            )));
        }
        let (d, c) = (self.data.dom(), self.data.cod());
        let data = &self.data;
        for t in c.elems() {
            let ft = data.preimage(t);
            for u in c.down_set(t) {
                let hyp_set: Vec<_> = self
                    .src
                    .filter(data.preimage(u))
                    .members()
                    .iter()
                    .map(|p| data.image(d.meet(ft, p)))
                    .collect();
                for v in c.down_set(t) {
                    let hyp = hyp_set.iter().any(|&img| c.leq(img, v));
                    let con = self
                        .dst
                        .filter(u)
                        .members()
                        .iter()
                        .any(|q| c.leq(c.meet(t, q), v));
                    if hyp && !con {
                        return Ok(Some(format!(
                            "t={}, u={}, v={}",
                            c.name(t),
                            c.name(u),
                            c.name(v)
                        )));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Both computations of hereditariness and whether they agree.
    pub fn heredity_report(&self) -> Result<Report> {
        let f = self.finset()?;
        let def = self.heredity_definitional_witness()?;
        let formula = self.heredity_formula_witness()?;
        let mut r = Report::new("hereditary-regular-epi");
        let (a, b) = (def.is_none(), formula.is_none());
        r.check_none("definitional", def.map(|t| vec![f.cod().subset_name(t)]));
        r.check_none("formula", formula.map(|w| vec![w]));
        r.check(
            "computations-agree",
            a == b,
            vec![format!("definitional={a}"), format!("formula={b}")],
        );
        Ok(r)
    }

    pub fn is_hereditary_regular_epi(&self) -> Result<bool> {
        Ok(self.heredity_definitional_witness()?.is_none())
    }

    /// Three implications relating hereditary regular epimorphisms of neighbourhood spaces
    /// to regular epimorphisms of preneighbourhood spaces, Frobenius maps and pseudo-open
    /// maps. A false premise passes vacuously; the premises are listed as witnesses.
    pub fn neighbourhood_heredity_checks(&self) -> Result<Report> {
        let f = self.finset()?;
        require(&self.src, StructureClass::Nbhd)?;
        require(&self.dst, StructureClass::Nbhd)?;
        let restrictions: Vec<FinFunction> = (0..=f.cod().full_mask())
            .map(|t| f.restrict_along_mask(t))
            .collect();
        let fp_regular = restrictions.iter().all(FinFunction::is_regular_epi);
        let fp_in_e = restrictions.iter().all(FinFunction::is_surjective);
        let hereditary = self.is_hereditary_regular_epi()?;
        let regepi = self.is_regular_epi_pnhd()?;
        let frobenius = self.data.is_frobenius();
        let base = f.is_regular_epi();
        let morphism = self.is_prenbhd_morphism();
        let pseudo_open = self.is_pseudo_open();
        let flag = |name: &str, v: bool| format!("{name}={v}");

        let mut r = Report::new("neighbourhood-heredity");
        r.check(
            "hereditary implies regular with regular restrictions",
            !hereditary || (regepi && fp_regular),
            vec![
                flag("hereditary", hereditary),
                flag("regular", regepi),
                flag("restrictions-regular", fp_regular),
            ],
        );
        r.check(
            "frobenius and regular restrictions imply hereditary",
            !(frobenius && fp_regular && regepi) || hereditary,
            vec![
                flag("frobenius", frobenius),
                flag("restrictions-regular", fp_regular),
                flag("regular", regepi),
                flag("hereditary", hereditary),
            ],
        );
        r.check(
            "regular iff pseudo-open",
            !(base && fp_in_e && morphism) || regepi == pseudo_open,
            vec![
                flag("base-regular", base),
                flag("restrictions-in-E", fp_in_e),
                flag("regular", regepi),
                flag("pseudo-open", pseudo_open),
            ],
        );
        Ok(r)
    }
}

/// Evaluate the chain of conditions on a family of finite-set maps:
///
/// - (a) surjections are stable under pullback along the family,
/// - (b) restrictions of surjections to codomain subsets are surjective,
/// - (c) every map is Frobenius,
/// - (d) every surjection is Frobenius,
/// - (e) every regular epimorphism is Frobenius,
/// - (f) every regular epimorphism of preneighbourhood spaces is hereditary, tried on
///   every source structure within `lattice_cap` and the quotient structure.
///
/// and the implications a ⇒ b, b ⇔ c, c ⇒ d, d ⇒ e, e ⇒ f.
pub fn check_heredity_implication_chain(
    maps: &[FinFunction],
    lattice_cap: usize,
) -> Result<Report> {
    let surjections: Vec<&FinFunction> = maps.iter().filter(|f| f.is_surjective()).collect();
    let mut r = Report::new("heredity-chain");

    let mut a = None;
    'a: for f in &surjections {
        for g in maps.iter().filter(|g| g.cod() == f.cod()) {
            let (_, _, along) = f.pullback(g)?;
            if !along.is_surjective() {
                a = Some(vec![format!("{f:?}"), format!("{g:?}")]);
                break 'a;
            }
        }
    }
    let b = surjections
        .iter()
        .find_map(|f| f.unstable_witness().map(|t| vec![f.cod().subset_name(t)]));
    let frob = |f: &FinFunction| -> Result<bool> {
        Ok(f.to_morphism_data_capped(MAX_SET_SIZE)?.is_frobenius())
    };
    let mut c = None;
    for (i, f) in maps.iter().enumerate() {
        if !frob(f)? {
            c = Some(vec![format!("map {i}")]);
            break;
        }
    }
    let mut d = None;
    for (i, f) in surjections.iter().enumerate() {
        if !frob(f)? {
            d = Some(vec![format!("surjection {i}")]);
            break;
        }
    }
    let mut e = None;
    for (i, f) in maps.iter().enumerate().filter(|(_, f)| f.is_regular_epi()) {
        if !frob(f)? {
            e = Some(vec![format!("map {i}")]);
            break;
        }
    }
    let mut fw = None;
    let mut structures = 0;
    let mut skipped = 0;
    'f: for f in maps.iter().filter(|f| f.is_regular_epi()) {
        let data = f.to_morphism_data_capped(MAX_SET_SIZE)?;
        let src =
            match enumerate_structures_capped(data.dom().clone(), StructureClass::Pre, lattice_cap)
            {
                Ok(s) => s,
                Err(Error::TooLarge { .. }) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
        for gamma in src {
            let phi = quotient_structure(&data, &gamma)?;
            let sm = SpaceMorphism::from_finset(f.clone(), gamma, phi)?;
            structures += 1;
            let h = sm.heredity_report()?;
            if !h.all_pass() {
                fw = Some(vec![format!("{f:?}"), format!("{}", sm.src())]);
                break 'f;
            }
        }
    }
    let holds = [
        a.is_none(),
        b.is_none(),
        c.is_none(),
        d.is_none(),
        e.is_none(),
        fw.is_none(),
    ];
    r.check_none("(a) surjections pullback-stable", a);
    r.check_none("(b) restrictions of surjections surjective", b);
    r.check_none("(c) every map Frobenius", c);
    r.check_none("(d) surjections Frobenius", d);
    r.check_none("(e) regular epis Frobenius", e);
    r.check_none("(f) regular epis of preneighbourhood spaces hereditary", fw);
    let [ha, hb, hc, hd, he, hf] = holds;
    r.check("a => b", !ha || hb, Vec::new());
    r.check("b <=> c", hb == hc, Vec::new());
    r.check("c => d", !hc || hd, Vec::new());
    r.check("d => e", !hd || he, Vec::new());
    r.check("e => f", !he || hf, Vec::new());
    r.count("maps", maps.len());
    r.count("surjections", surjections.len());
    r.count("structures", structures);
    r.count("skipped-over-cap", skipped);
    Ok(r)
}
