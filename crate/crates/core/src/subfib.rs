//! A morphism seen through its subobject lattices: the adjoint pair image ⊣ preimage,
//! filter transport, the preimage-preserves-joins property and Frobenius predicates.

use crate::error::{Error, Result};
use crate::order::{Elem, ElemSet, Filter, FilterLattice, FiniteLattice};
use crate::report::Report;

/// Checks of [`MorphismData::check`], one verdict per law.
pub type ValidationReport = Report;

/// An image/preimage pair between two finite distributive lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismData {
    dom: FiniteLattice,
    cod: FiniteLattice,
    image: Vec<Elem>,
    preimage: Vec<Elem>,
}

impl MorphismData {
    /// Assemble without validating the laws. Map lengths and ranges are still checked.
    pub fn new_unchecked(
        dom: FiniteLattice,
        cod: FiniteLattice,
        image: Vec<Elem>,
        preimage: Vec<Elem>,
    ) -> Result<Self> {
        if image.len() != dom.len() || image.iter().any(|e| e.index() >= cod.len()) {
            return Err(Error::InvalidMorphism(
                "image is not a total map dom -> cod".into(),
            ));
        }
        if preimage.len() != cod.len() || preimage.iter().any(|e| e.index() >= dom.len()) {
            return Err(Error::InvalidMorphism(
                "preimage is not a total map cod -> dom".into(),
            ));
        }
        Ok(MorphismData {
            dom,
            cod,
            image,
            preimage,
        })
    }

    /// Assemble and require every law of [`Self::check`].
    pub fn new(
        dom: FiniteLattice,
        cod: FiniteLattice,
        image: Vec<Elem>,
        preimage: Vec<Elem>,
    ) -> Result<Self> {
        let data = Self::new_unchecked(dom, cod, image, preimage)?;
        let report = data.check();
        let failure = report.failures().next().map(|v| {
            Error::InvalidMorphism(format!("{} fails at {}", v.check, v.witness.join(", ")))
        });
        match failure {
            None => Ok(data),
            Some(e) => Err(e),
        }
    }

    /// Build from name tables. Every element of each lattice must appear exactly once as a key.
    pub fn from_names<S: AsRef<str>>(
        dom: FiniteLattice,
        cod: FiniteLattice,
        image: &[(S, S)],
        preimage: &[(S, S)],
    ) -> Result<Self> {
        let image = table(&dom, &cod, image, "image")?;
        let preimage = table(&cod, &dom, preimage, "preimage")?;
        Self::new(dom, cod, image, preimage)
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        let id: Vec<Elem> = l.elems().collect();
        MorphismData {
            dom: l.clone(),
            cod: l.clone(),
            image: id.clone(),
            preimage: id,
        }
    }

    pub fn dom(&self) -> &FiniteLattice {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteLattice {
        &self.cod
    }

    pub fn image(&self, x: Elem) -> Elem {
        self.image[x.index()]
    }

    pub fn preimage(&self, y: Elem) -> Elem {
        self.preimage[y.index()]
    }

    pub fn image_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|x| self.image(x)).collect()
    }

    pub fn preimage_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|y| self.preimage(y)).collect()
    }

    /// Monotonicity, the adjunction and its standard consequences, each with a witness.
    pub fn check(&self) -> ValidationReport {
        let (d, c) = (&self.dom, &self.cod);
        let dn = |x: Elem| d.name(x).to_owned();
        let cn = |y: Elem| c.name(y).to_owned();
        let mut r = Report::new("check-morphism-data");

        let mono_img =
            pairs(d).find(|&(x, x2)| d.leq(x, x2) && !c.leq(self.image(x), self.image(x2)));
        r.check_none(
            "image-monotone",
            mono_img.map(|(x, x2)| vec![dn(x), dn(x2)]),
        );
        let mono_pre =
            pairs(c).find(|&(y, y2)| c.leq(y, y2) && !d.leq(self.preimage(y), self.preimage(y2)));
        r.check_none(
            "preimage-monotone",
            mono_pre.map(|(y, y2)| vec![cn(y), cn(y2)]),
        );

        let adj = d.elems().find_map(|m| {
            c.elems()
                .find(|&n| c.leq(self.image(m), n) != d.leq(m, self.preimage(n)))
                .map(|n| vec![dn(m), cn(n)])
        });
        r.check_none("adjunction", adj);

        let unit = d.elems().find(|&m| !d.leq(m, self.preimage(self.image(m))));
        r.check_none("unit", unit.map(|m| vec![dn(m)]));
        let counit = c.elems().find(|&n| !c.leq(self.image(self.preimage(n)), n));
        r.check_none("counit", counit.map(|n| vec![cn(n)]));

        let top_ok = self.preimage(c.top()) == d.top();
        r.check("preimage-top", top_ok, vec![dn(self.preimage(c.top()))]);
        let bot_ok = self.image(d.bottom()) == c.bottom();
        r.check("image-bottom", bot_ok, vec![cn(self.image(d.bottom()))]);

        let joins = pairs(d)
            .find(|&(x, y)| self.image(d.join(x, y)) != c.join(self.image(x), self.image(y)));
        r.check_none(
            "image-preserves-joins",
            joins.map(|(x, y)| vec![dn(x), dn(y)]),
        );
        let meets = pairs(c).find(|&(x, y)| {
            self.preimage(c.meet(x, y)) != d.meet(self.preimage(x), self.preimage(y))
        });
        r.check_none(
            "preimage-preserves-meets",
            meets.map(|(x, y)| vec![cn(x), cn(y)]),
        );
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_pass()
    }

    /// `g ∘ self`: image composes forwards, preimage backwards.
    pub fn compose(&self, g: &MorphismData) -> Result<MorphismData> {
        if self.cod != g.dom {
            return Err(Error::CarrierMismatch);
        }
        Ok(MorphismData {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            image: self.image.iter().map(|&y| g.image(y)).collect(),
            preimage: g.preimage.iter().map(|&y| self.preimage(y)).collect(),
        })
    }

    /// A subset `G` of the codomain with `preimage(⋁G) != ⋁ preimage[G]`, if any.
    ///
    /// Finite joins are iterated binary joins, so the search covers the empty join and
    /// pairs.
    pub fn ppj_counterexample(&self) -> Option<ElemSet> {
        let (d, c) = (&self.dom, &self.cod);
        if self.preimage(c.bottom()) != d.bottom() {
            return Some(ElemSet::EMPTY);
        }
        pairs(c)
            .find(|&(x, y)| {
                self.preimage(c.join(x, y)) != d.join(self.preimage(x), self.preimage(y))
            })
            .map(|(x, y)| ElemSet::singleton(x).with(y))
    }

    /// The right adjoint of preimage, when preimage preserves all joins.
    pub fn is_ppj(&self) -> Option<PpjWitness> {
        if self.ppj_counterexample().is_some() {
            return None;
        }
        let (d, c) = (&self.dom, &self.cod);
        let right_adjoint = d
            .elems()
            .map(|x| c.join_all(c.elems().filter(|&y| d.leq(self.preimage(y), x))))
            .collect();
        Some(PpjWitness {
            morphism: self.clone(),
            right_adjoint,
        })
    }

    /// `{y : preimage(y) ∈ A}` for a filter `A` on the domain.
    pub fn forward_filter(&self, a: &Filter) -> Result<Filter> {
        ensure_on(&self.dom, a)?;
        let members = self
            .cod
            .elems()
            .filter(|&y| a.contains(self.preimage(y)))
            .collect();
        Ok(Filter::new(&self.cod, members).expect("forward transport of a filter is a filter"))
    }

    /// Up-closure of `preimage[B]` for a filter `B` on the codomain.
    pub fn inverse_filter(&self, b: &Filter) -> Result<Filter> {
        ensure_on(&self.cod, b)?;
        let members = self.dom.up_closure(self.preimage_set(b.members()));
        Ok(Filter::new(&self.dom, members).expect("inverse transport of a filter is a filter"))
    }

    /// A pair `(A, B)` where `inverse_filter(B) ⊆ A` and `B ⊆ forward_filter(A)` disagree.
    pub fn filter_galois_counterexample(&self) -> Option<(Filter, Filter)> {
        let fd = FilterLattice::new(&self.dom);
        let fc = FilterLattice::new(&self.cod);
        for a in fd.filters() {
            let fwd = self.forward_filter(a).expect("carrier checked");
            for b in fc.filters() {
                let inv = self.inverse_filter(b).expect("carrier checked");
                if inv.is_subset(a) != b.is_subset(&fwd) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    pub fn check_filter_galois(&self) -> bool {
        self.filter_galois_counterexample().is_none()
    }

    /// Witness that image fails to preserve top or some binary meet.
    pub fn image_meet_counterexample(&self) -> Option<Vec<Elem>> {
        let (d, c) = (&self.dom, &self.cod);
        if self.image(d.top()) != c.top() {
            return Some(Vec::new());
        }
        pairs(d)
            .find(|&(x, y)| self.image(d.meet(x, y)) != c.meet(self.image(x), self.image(y)))
            .map(|(x, y)| vec![x, y])
    }

    /// `{x : image(x) ∈ B}`, the right adjoint of forward transport. Requires image to
    /// preserve finite meets.
    pub fn big_image_filter(&self, b: &Filter) -> Result<Filter> {
        ensure_on(&self.cod, b)?;
        if let Some(w) = self.image_meet_counterexample() {
            let shown = if w.is_empty() {
                format!(
                    "image of top is {}",
                    self.cod.name(self.image(self.dom.top()))
                )
            } else {
                format!("at {} and {}", self.dom.name(w[0]), self.dom.name(w[1]))
            };
            return Err(Error::ImageNotMeetPreserving(shown));
        }
        let members = self
            .dom
            .elems()
            .filter(|&x| b.contains(self.image(x)))
            .collect();
        Ok(Filter::new(&self.dom, members).expect("meet-preserving pullback of a filter"))
    }

    /// A pair `(x, y)` with `image(preimage(y) ∧ x) != y ∧ image(x)`.
    pub fn frobenius_counterexample(&self) -> Option<(Elem, Elem)> {
        let (d, c) = (&self.dom, &self.cod);
        d.elems().find_map(|x| {
            c.elems()
                .find(|&y| self.image(d.meet(self.preimage(y), x)) != c.meet(y, self.image(x)))
                .map(|y| (x, y))
        })
    }

    pub fn is_frobenius(&self) -> bool {
        self.frobenius_counterexample().is_none()
    }
}

/// Preimage preserves all joins; carries its right adjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpjWitness {
    morphism: MorphismData,
    right_adjoint: Vec<Elem>,
}

impl PpjWitness {
    pub fn morphism(&self) -> &MorphismData {
        &self.morphism
    }

    /// `⋁{y : preimage(y) <= x}`.
    pub fn right_adjoint(&self, x: Elem) -> Elem {
        self.right_adjoint[x.index()]
    }

    /// `preimage(y) <= x ⇔ y <= right_adjoint(x)` for all `x, y`.
    pub fn is_adjoint(&self) -> bool {
        let (d, c) = (self.morphism.dom(), self.morphism.cod());
        d.elems().all(|x| {
            c.elems()
                .all(|y| d.leq(self.morphism.preimage(y), x) == c.leq(y, self.right_adjoint(x)))
        })
    }

    /// Up-closure of `right_adjoint[A]`, the left adjoint of inverse transport.
    pub fn inv_filter_left_adjoint(&self, a: &Filter) -> Result<Filter> {
        let (d, c) = (self.morphism.dom(), self.morphism.cod());
        ensure_on(d, a)?;
        let image: ElemSet = a.members().iter().map(|x| self.right_adjoint(x)).collect();
        Ok(Filter::new(c, c.up_closure(image))
            .expect("transport of a filter along a meet-preserving map"))
    }
}

/// A subobject `P` of `X` presented by an order embedding `Sub(P) -> Sub(X)`.
///
/// The embedding is the image map along the mono; pulling back along it sends `x` to the
/// element of `Sub(P)` whose embedding is `x ∧ P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubobjectEmbedding {
    sub: FiniteLattice,
    ambient: FiniteLattice,
    embed: Vec<Elem>,
    pullback: Vec<Elem>,
}

impl SubobjectEmbedding {
    /// Validate `embed` as a lattice embedding of `sub` onto the down-set of its top.
    pub fn new(sub: FiniteLattice, ambient: FiniteLattice, embed: Vec<Elem>) -> Result<Self> {
        if embed.len() != sub.len() || embed.iter().any(|e| e.index() >= ambient.len()) {
            return Err(Error::InvalidMorphism(
                "embedding is not a total map".into(),
            ));
        }
        let p = embed[sub.top().index()];
        let range: ElemSet = embed.iter().copied().collect();
        if range != ambient.down_set(p) || range.len() != sub.len() {
            return Err(Error::InvalidMorphism(
                "embedding must be a bijection onto the down-set of the subobject".into(),
            ));
        }
        let order_ok = pairs(&sub)
            .all(|(x, y)| sub.leq(x, y) == ambient.leq(embed[x.index()], embed[y.index()]));
        if !order_ok {
            return Err(Error::InvalidMorphism(
                "embedding is not an order embedding".into(),
            ));
        }
        let mut pullback = vec![sub.bottom(); ambient.len()];
        for x in ambient.elems() {
            let target = ambient.meet(x, p);
            pullback[x.index()] = sub
                .elems()
                .find(|q| embed[q.index()] == target)
                .expect("range is the down-set of p");
        }
        Ok(SubobjectEmbedding {
            sub,
            ambient,
            embed,
            pullback,
        })
    }

    /// `Sub(P) = ↓p` with names inherited from the ambient lattice.
    pub fn down_set(ambient: &FiniteLattice, p: Elem) -> Result<Self> {
        let members = ambient.down_set(p);
        let sub = ambient.induced(members)?;
        let embed = members.iter().collect();
        Self::new(sub, ambient.clone(), embed)
    }

    pub fn sub(&self) -> &FiniteLattice {
        &self.sub
    }

    pub fn ambient(&self) -> &FiniteLattice {
        &self.ambient
    }

    /// The subobject `p` itself, as an element of the ambient lattice.
    pub fn subobject(&self) -> Elem {
        self.embed(self.sub.top())
    }

    /// `p ∘ u`.
    pub fn embed(&self, u: Elem) -> Elem {
        self.embed[u.index()]
    }

    /// Pullback of `x` along the embedding.
    pub fn pull(&self, x: Elem) -> Elem {
        self.pullback[x.index()]
    }

    /// The inclusion as morphism data `Sub(P) -> Sub(X)`.
    pub fn to_morphism_data(&self) -> MorphismData {
        MorphismData {
            dom: self.sub.clone(),
            cod: self.ambient.clone(),
            image: self.embed.clone(),
            preimage: self.pullback.clone(),
        }
    }
}

/// The restriction `f_t : f⁻¹T -> T` of a morphism to a subobject `t` of its codomain.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub data: MorphismData,
    /// `Sub(f⁻¹T) -> Sub(X)`.
    pub dom_embed: SubobjectEmbedding,
    /// `Sub(T) -> Sub(Y)`.
    pub cod_embed: SubobjectEmbedding,
}

/// A morphism in a concrete base category that can restrict itself along subobjects of
/// its codomain and decide membership in the factorization class `E`.
pub trait RestrictionBackend {
    fn morphism_data(&self) -> Result<MorphismData>;

    /// `f_t`, computed in the base category.
    fn restriction(&self, _t: Elem) -> Result<Restriction> {
        Err(Error::BackendLacksRestrictions)
    }

    /// Whether the comparison `P ∧ f⁻¹T -> T ∧ f(P)` lies in `E`.
    fn comparison_in_e(&self, _t: Elem, _p: Elem) -> Result<bool> {
        Err(Error::BackendLacksRestrictions)
    }
}

impl RestrictionBackend for MorphismData {
    fn morphism_data(&self) -> Result<MorphismData> {
        Ok(self.clone())
    }
}

/// `f_t` computed inside the subobject lattices: `Sub(f⁻¹T) = ↓f⁻¹t` and `Sub(T) = ↓t`.
pub fn lattice_restriction(f: &MorphismData, t: Elem) -> Result<Restriction> {
    let dom_embed = SubobjectEmbedding::down_set(f.dom(), f.preimage(t))?;
    let cod_embed = SubobjectEmbedding::down_set(f.cod(), t)?;
    let image = dom_embed
        .sub()
        .elems()
        .map(|u| cod_embed.pull(f.image(dom_embed.embed(u))))
        .collect();
    let preimage = cod_embed
        .sub()
        .elems()
        .map(|v| dom_embed.pull(f.preimage(cod_embed.embed(v))))
        .collect();
    let data = MorphismData::new_unchecked(
        dom_embed.sub().clone(),
        cod_embed.sub().clone(),
        image,
        preimage,
    )?;
    Ok(Restriction {
        data,
        dom_embed,
        cod_embed,
    })
}

/// Evaluate the three equivalent Frobenius conditions: the lattice identity, the
/// Beck–Chevalley square for every restriction, and `E`-membership of every comparison
/// map. A disagreement between the three is reported as its own failed check.
pub fn check_frobenius_equivalences<B: RestrictionBackend + ?Sized>(backend: &B) -> Result<Report> {
    let f = backend.morphism_data()?;
    let (d, c) = (f.dom(), f.cod());
    let mut r = Report::new("frobenius-equivalences");

    let a = f.frobenius_counterexample();
    r.check_none(
        "frobenius",
        a.map(|(x, y)| vec![d.name(x).to_owned(), c.name(y).to_owned()]),
    );

    let mut b_witness = None;
    'outer: for t in c.elems() {
        let rest = backend.restriction(t)?;
        for p in d.elems() {
            let q = rest.dom_embed.pull(p);
            let lhs = rest.cod_embed.embed(rest.data.image(q));
            let rhs = c.meet(f.image(p), t);
            if lhs != rhs {
                b_witness = Some(vec![c.name(t).to_owned(), d.name(p).to_owned()]);
                break 'outer;
            }
        }
    }
    let b_holds = b_witness.is_none();
    r.check_none("beck-chevalley", b_witness);

    let mut c_witness = None;
    'outer2: for t in c.elems() {
        for p in d.elems() {
            if !backend.comparison_in_e(t, p)? {
                c_witness = Some(vec![c.name(t).to_owned(), d.name(p).to_owned()]);
                break 'outer2;
            }
        }
    }
    let c_holds = c_witness.is_none();
    r.check_none("comparison-in-E", c_witness);

    let a_holds = a.is_none();
    let agree = a_holds == b_holds && b_holds == c_holds;
    r.check(
        "conditions-agree",
        agree,
        vec![
            format!("a={a_holds}"),
            format!("b={b_holds}"),
            format!("c={c_holds}"),
        ],
    );
    Ok(r)
}

fn ensure_on(l: &FiniteLattice, f: &Filter) -> Result<()> {
    let m = f.members();
    if m.is_subset(l.all()) && m.contains(l.top()) && l.is_up_closed(m) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch)
    }
}

fn pairs(l: &FiniteLattice) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    l.elems().flat_map(move |x| l.elems().map(move |y| (x, y)))
}

fn table<S: AsRef<str>>(
    from: &FiniteLattice,
    to: &FiniteLattice,
    entries: &[(S, S)],
    what: &str,
) -> Result<Vec<Elem>> {
    let mut out: Vec<Option<Elem>> = vec![None; from.len()];
    for (k, v) in entries {
        let k = from.elem(k.as_ref())?;
        let v = to.elem(v.as_ref())?;
        if out[k.index()].replace(v).is_some() {
            return Err(Error::InvalidMorphism(format!(
                "{what} assigns {} twice",
                from.name(k)
            )));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::InvalidMorphism(format!("{what} misses {}", from.names()[i])))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> FiniteLattice {
        FiniteLattice::chain(&["0", "1"]).unwrap()
    }

    fn c3() -> FiniteLattice {
        FiniteLattice::chain(&["0", "a", "1"]).unwrap()
    }

    fn b2() -> FiniteLattice {
        FiniteLattice::new(
            &["0", "x", "y", "1"],
            &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .unwrap()
    }

    /// Meet-preserving `preimage : B2 -> C3` whose join-preservation fails at `{x, y}`.
    fn collapse() -> MorphismData {
        MorphismData::from_names(
            c3(),
            b2(),
            &[("0", "0"), ("a", "1"), ("1", "1")],
            &[("0", "0"), ("x", "0"), ("y", "0"), ("1", "1")],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_valid_and_ppj() {
        let id = MorphismData::identity(&b2());
        assert!(id.check().all_pass());
        let w = id.is_ppj().unwrap();
        assert!(id.dom().elems().all(|x| w.right_adjoint(x) == x));
        assert!(id.check_filter_galois());
        assert!(id.is_frobenius());
    }

    #[test]
    fn constant_top_fails_adjunction_at_bottoms() {
        let l = c2();
        let top = l.top();
        let bad =
            MorphismData::new_unchecked(l.clone(), l.clone(), vec![top; 2], vec![top; 2]).unwrap();
        let report = bad.check();
        let adj = report.verdict("adjunction").unwrap();
        assert!(!adj.pass);
        assert_eq!(adj.witness, ["0", "0"]);
        assert!(MorphismData::new(l.clone(), l, vec![top; 2], vec![top; 2]).is_err());
    }

    #[test]
    fn collapse_is_valid_but_not_ppj_nor_frobenius() {
        let f = collapse();
        assert!(f.check().all_pass());
        assert!(f.is_ppj().is_none());
        let g = f.ppj_counterexample().unwrap();
        assert_eq!(f.cod().format_set(g), "{x,y}");
        let (x, y) = f.frobenius_counterexample().unwrap();
        assert_eq!((f.dom().name(x), f.cod().name(y)), ("a", "x"));
        assert!(f.check_filter_galois());
    }

    #[test]
    fn principal_filters_are_transported() {
        let f = collapse();
        for y in f.cod().elems() {
            let b = Filter::principal(f.cod(), y);
            assert_eq!(
                f.inverse_filter(&b).unwrap(),
                Filter::principal(f.dom(), f.preimage(y))
            );
        }
        for x in f.dom().elems() {
            let a = Filter::principal(f.dom(), x);
            assert_eq!(
                f.forward_filter(&a).unwrap(),
                Filter::principal(f.cod(), f.image(x))
            );
        }
    }

    #[test]
    fn big_image_filter_needs_meet_preservation() {
        let f = MorphismData::from_names(
            b2(),
            c2(),
            &[("0", "0"), ("x", "1"), ("y", "1"), ("1", "1")],
            &[("0", "0"), ("1", "1")],
        )
        .unwrap();
        assert!(matches!(
            f.big_image_filter(&Filter::trivial(f.cod())),
            Err(Error::ImageNotMeetPreserving(_))
        ));
        let id = MorphismData::identity(&c3());
        let a = id.dom().elem("a").unwrap();
        let up = Filter::principal(id.dom(), a);
        assert_eq!(id.big_image_filter(&up).unwrap(), up);
    }

    #[test]
    fn composition_with_identity() {
        let f = collapse();
        let left = MorphismData::identity(f.dom()).compose(&f).unwrap();
        let right = f.compose(&MorphismData::identity(f.cod())).unwrap();
        assert_eq!(left, f);
        assert_eq!(right, f);
        assert_eq!(f.compose(&f), Err(Error::CarrierMismatch));
    }

    #[test]
    fn down_set_embedding() {
        let l = b2();
        let x = l.elem("x").unwrap();
        let e = SubobjectEmbedding::down_set(&l, x).unwrap();
        assert_eq!(e.sub().names(), ["0", "x"]);
        assert_eq!(e.subobject(), x);
        assert_eq!(e.sub().name(e.pull(l.elem("y").unwrap())), "0");
        assert!(e.to_morphism_data().check().all_pass());
    }

    #[test]
    fn bare_data_lacks_restrictions() {
        let id = MorphismData::identity(&c2());
        assert_eq!(
            check_frobenius_equivalences(&id).unwrap_err(),
            Error::BackendLacksRestrictions
        );
    }
}
