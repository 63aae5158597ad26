//! Finite frames read as finite locales: sublocales, open sublocales, localic maps and
//! the natural topology on the lattice of sublocales.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::morphisms::prenbhd_counterexample;
use crate::nbhd::PreNbhd;
use crate::order::{next_closure_all, Elem, ElemSet, Filter, FiniteLattice};
use crate::report::Report;
use crate::subfib::{lattice_restriction, MorphismData, Restriction, RestrictionBackend};

/// Default cap on frame size when building sublocale lattices.
pub const DEFAULT_FRAME_CAP: usize = 8;

/// A finite distributive lattice with its Heyting implication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFrame {
    lattice: Arc<FiniteLattice>,
    imp: Vec<Vec<Elem>>,
}

impl FiniteFrame {
    pub fn new(lattice: impl Into<Arc<FiniteLattice>>) -> Self {
        let lattice = lattice.into();
        let imp = heyting_table(&lattice);
        FiniteFrame { lattice, imp }
    }

    /// Accept a precomputed implication table after checking `x ∧ a <= b ⇔ x <= a → b`.
    pub fn with_implication(
        lattice: impl Into<Arc<FiniteLattice>>,
        imp: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let lattice = lattice.into();
        let l = &*lattice;
        let n = l.len();
        if imp.len() != n
            || imp
                .iter()
                .any(|row| row.len() != n || row.iter().any(|e| e.index() >= n))
        {
            return Err(Error::InvalidImplication(format!(
                "table must be {n} x {n}"
            )));
        }
        for a in l.elems() {
            for b in l.elems() {
                let ab = imp[a.index()][b.index()];
                if let Some(x) = l.elems().find(|&x| l.leq(l.meet(x, a), b) != l.leq(x, ab)) {
                    return Err(Error::InvalidImplication(format!(
                        "{} -> {} = {} fails at {}",
                        l.name(a),
                        l.name(b),
                        l.name(ab),
                        l.name(x)
                    )));
                }
            }
        }
        Ok(FiniteFrame { lattice, imp })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    /// `a → b`.
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a.index()][b.index()]
    }

    /// Whether `s` contains top and is closed under binary meets and every `a → -`.
    pub fn is_sublocale(&self, s: ElemSet) -> bool {
        self.sublocale_violation(s).is_none()
    }

    fn sublocale_violation(&self, s: ElemSet) -> Option<String> {
        let l = &*self.lattice;
        if !s.is_subset(l.all()) {
            return Some("contains elements outside the frame".into());
        }
        if !s.contains(l.top()) {
            return Some(format!("top {} is missing", l.name(l.top())));
        }
        for x in s {
            for y in s {
                if !s.contains(l.meet(x, y)) {
                    return Some(format!(
                        "meet of {} and {} is missing",
                        l.name(x),
                        l.name(y)
                    ));
                }
            }
            for a in l.elems() {
                if !s.contains(self.imp(a, x)) {
                    return Some(format!("{} -> {} is missing", l.name(a), l.name(x)));
                }
            }
        }
        None
    }

    /// The smallest sublocale containing `s`.
    pub fn sublocale_closure(&self, s: ElemSet) -> ElemSet {
        let l = &*self.lattice;
        let mut cur = s.with(l.top());
        loop {
            let mut next = cur;
            for x in cur {
                for y in cur {
                    next.insert(l.meet(x, y));
                }
                for a in l.elems() {
                    next.insert(self.imp(a, x));
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `𝔬(a) = {a → b : b}`.
    pub fn open_sublocale(&self, a: Elem) -> Sublocale {
        let members = self.lattice.elems().map(|b| self.imp(a, b)).collect();
        Sublocale { members }
    }

    pub fn whole(&self) -> Sublocale {
        Sublocale {
            members: self.lattice.all(),
        }
    }

    /// The bottom sublocale `{top}`.
    pub fn trivial_sublocale(&self) -> Sublocale {
        Sublocale {
            members: ElemSet::singleton(self.lattice.top()),
        }
    }
}

fn heyting_table(l: &FiniteLattice) -> Vec<Vec<Elem>> {
    l.elems()
        .map(|a| {
            l.elems()
                .map(|b| l.join_all(l.elems().filter(|&c| l.leq(l.meet(c, a), b))))
                .collect()
        })
        .collect()
}

/// A sublocale, given extensionally by its members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sublocale {
    members: ElemSet,
}

impl Sublocale {
    pub fn new(frame: &FiniteFrame, members: ElemSet) -> Result<Self> {
        match frame.sublocale_violation(members) {
            None => Ok(Sublocale { members }),
            Some(reason) => Err(Error::NotASublocale(format!(
                "{}: {reason}",
                frame.lattice.format_set(members)
            ))),
        }
    }

    pub fn from_names<S: AsRef<str>>(frame: &FiniteFrame, names: &[S]) -> Result<Self> {
        Self::new(frame, frame.lattice.set_of(names)?)
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn display(&self, frame: &FiniteFrame) -> String {
        frame.lattice.format_set(self.members)
    }
}

/// Every sublocale of a frame, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct SublocaleLattice {
    frame: FiniteFrame,
    sublocales: Vec<Sublocale>,
    lattice: Arc<FiniteLattice>,
}

pub fn all_sublocales(frame: &FiniteFrame) -> Result<SublocaleLattice> {
    all_sublocales_capped(frame, DEFAULT_FRAME_CAP)
}

pub fn all_sublocales_capped(frame: &FiniteFrame, cap: usize) -> Result<SublocaleLattice> {
    if frame.len() > cap {
        return Err(Error::TooLarge {
            what: "frame",
            size: frame.len(),
            cap,
        });
    }
    let mut sublocales: Vec<Sublocale> =
        next_closure_all(frame.len(), |s| frame.sublocale_closure(s))
            .into_iter()
            .map(|members| Sublocale { members })
            .collect();
    sublocales.sort_by_key(|s| (s.members.len(), s.members));
    let names = sublocales.iter().map(|s| s.display(frame)).collect();
    let lattice = FiniteLattice::from_order(names, |i, j| {
        sublocales[i].members.is_subset(sublocales[j].members)
    })?;
    Ok(SublocaleLattice {
        frame: frame.clone(),
        sublocales,
        lattice: Arc::new(lattice),
    })
}

impl SublocaleLattice {
    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.sublocales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sublocales.is_empty()
    }

    pub fn sublocales(&self) -> &[Sublocale] {
        &self.sublocales
    }

    pub fn sublocale(&self, e: Elem) -> Sublocale {
        self.sublocales[e.index()]
    }

    pub fn position(&self, s: &Sublocale) -> Result<Elem> {
        let i = self
            .sublocales
            .iter()
            .position(|t| t == s)
            .ok_or(Error::CarrierMismatch)?;
        self.lattice.elem_at(i)
    }

    /// Smallest sublocale containing both.
    pub fn join(&self, s: &Sublocale, t: &Sublocale) -> Sublocale {
        Sublocale {
            members: self.frame.sublocale_closure(s.members.union(t.members)),
        }
    }

    pub fn meet(&self, s: &Sublocale, t: &Sublocale) -> Sublocale {
        Sublocale {
            members: s.members.intersection(t.members),
        }
    }

    /// `a ↦ 𝔬(a)` as elements of the sublocale lattice.
    pub fn open_map(&self) -> Vec<Elem> {
        self.frame
            .lattice
            .elems()
            .map(|a| {
                self.position(&self.frame.open_sublocale(a))
                    .expect("open sublocales are sublocales")
            })
            .collect()
    }

    pub fn opens(&self) -> ElemSet {
        self.open_map().into_iter().collect()
    }

    /// Lattice join and meet agree with the extensional ones, and the coframe law holds.
    pub fn check(&self) -> Report {
        let l = &*self.lattice;
        let mut r = Report::new("sublocale-lattice");
        let mut bad_join = None;
        let mut bad_meet = None;
        for x in l.elems() {
            for y in l.elems() {
                let (s, t) = (self.sublocale(x), self.sublocale(y));
                if self.sublocale(l.join(x, y)) != self.join(&s, &t) && bad_join.is_none() {
                    bad_join = Some(vec![l.name(x).to_owned(), l.name(y).to_owned()]);
                }
                if self.sublocale(l.meet(x, y)) != self.meet(&s, &t) && bad_meet.is_none() {
                    bad_meet = Some(vec![l.name(x).to_owned(), l.name(y).to_owned()]);
                }
            }
        }
        r.check_none("join-is-closure-of-union", bad_join);
        r.check_none("meet-is-intersection", bad_meet);
        r.check("coframe", l.is_coframe(), Vec::<String>::new());
        r
    }
}

/// `o(S) = {T : ∃a, S ⊆ 𝔬(a) ⊆ T}` on the lattice of sublocales.
pub fn natural_topology(subs: &SublocaleLattice) -> PreNbhd {
    let l = &*subs.lattice;
    let opens = subs.opens();
    let assign = l
        .elems()
        .map(|s| {
            let members = opens
                .intersection(l.up_set(s))
                .iter()
                .fold(ElemSet::EMPTY, |acc, o| acc.union(l.up_set(o)));
            Filter::from_members_unchecked(members)
        })
        .collect();
    PreNbhd::new_unchecked(subs.lattice.clone(), assign)
}

/// A localic map `X -> Y`, stored as its frame homomorphism `h = f* : Y -> X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalicMap {
    src: FiniteFrame,
    dst: FiniteFrame,
    hom: Vec<Elem>,
}

impl LocalicMap {
    /// `hom[y]` is `f*(y)`, an element of `src`.
    pub fn new(src: FiniteFrame, dst: FiniteFrame, hom: Vec<Elem>) -> Result<Self> {
        if let Some(reason) = frame_hom_violation(&dst, &src, &hom) {
            return Err(Error::NotAFrameHom(reason));
        }
        Ok(LocalicMap { src, dst, hom })
    }

    /// Build from `(element of dst, element of src)` name pairs describing `f*`.
    pub fn from_names<S: AsRef<str>>(
        src: FiniteFrame,
        dst: FiniteFrame,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let mut hom = vec![None; dst.len()];
        for (y, x) in pairs {
            let y = dst.lattice.elem(y.as_ref())?;
            let x = src.lattice.elem(x.as_ref())?;
            if hom[y.index()].replace(x).is_some() {
                return Err(Error::NotAFrameHom(format!(
                    "{} assigned twice",
                    dst.lattice.name(y)
                )));
            }
        }
        let hom = hom
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                x.ok_or_else(|| {
                    Error::NotAFrameHom(format!("{} unassigned", dst.lattice.names()[i]))
                })
            })
            .collect::<Result<_>>()?;
        Self::new(src, dst, hom)
    }

    pub fn identity(frame: &FiniteFrame) -> Self {
        LocalicMap {
            src: frame.clone(),
            dst: frame.clone(),
            hom: frame.lattice.elems().collect(),
        }
    }

    pub fn src(&self) -> &FiniteFrame {
        &self.src
    }

    pub fn dst(&self) -> &FiniteFrame {
        &self.dst
    }

    /// `f*(y)`.
    pub fn frame_hom(&self, y: Elem) -> Elem {
        self.hom[y.index()]
    }

    /// The localic direction `f_*(x) = ⋁{y : f*(y) <= x}`, right adjoint to `f*`.
    pub fn direct(&self, x: Elem) -> Elem {
        let (lx, ly) = (&*self.src.lattice, &*self.dst.lattice);
        ly.join_all(ly.elems().filter(|&y| lx.leq(self.hom[y.index()], x)))
    }

    /// `g ∘ self` for `g : Y -> Z`.
    pub fn compose(&self, g: &LocalicMap) -> Result<LocalicMap> {
        if self.dst != g.src {
            return Err(Error::CarrierMismatch);
        }
        let hom = g.hom.iter().map(|&y| self.hom[y.index()]).collect();
        Ok(LocalicMap {
            src: self.src.clone(),
            dst: g.dst.clone(),
            hom,
        })
    }

    /// The largest sublocale of `X` inside `f_*⁻¹[S]`.
    pub fn localic_preimage(&self, s: &Sublocale) -> Result<Sublocale> {
        if !self.dst.is_sublocale(s.members) {
            return Err(Error::CarrierMismatch);
        }
        let lx = &*self.src.lattice;
        let members = lx
            .elems()
            .filter(|&x| {
                lx.elems()
                    .all(|a| s.contains(self.direct(self.src.imp(a, x))))
            })
            .collect();
        Ok(Sublocale { members })
    }

    /// The smallest sublocale of `Y` containing `f_*[S]`.
    pub fn localic_image(&self, s: &Sublocale) -> Result<Sublocale> {
        if !self.src.is_sublocale(s.members) {
            return Err(Error::CarrierMismatch);
        }
        let direct = s.members.iter().map(|x| self.direct(x)).collect();
        Ok(Sublocale {
            members: self.dst.sublocale_closure(direct),
        })
    }

    /// Image and preimage between the sublocale lattices.
    pub fn to_morphism_data(
        &self,
        sx: &SublocaleLattice,
        sy: &SublocaleLattice,
    ) -> Result<MorphismData> {
        if sx.frame != self.src || sy.frame != self.dst {
            return Err(Error::CarrierMismatch);
        }
        let image = sx
            .sublocales
            .iter()
            .map(|s| sy.position(&self.localic_image(s)?))
            .collect::<Result<_>>()?;
        let preimage = sy
            .sublocales
            .iter()
            .map(|s| sx.position(&self.localic_preimage(s)?))
            .collect::<Result<_>>()?;
        MorphismData::new_unchecked(sx.lattice().clone(), sy.lattice().clone(), image, preimage)
    }

    /// Sublocale lattices of both ends and the morphism data between them.
    pub fn sublocale_data(
        &self,
        cap: usize,
    ) -> Result<(SublocaleLattice, SublocaleLattice, MorphismData)> {
        let sx = all_sublocales_capped(&self.src, cap)?;
        let sy = all_sublocales_capped(&self.dst, cap)?;
        let data = self.to_morphism_data(&sx, &sy)?;
        Ok((sx, sy, data))
    }
}

impl RestrictionBackend for LocalicMap {
    fn morphism_data(&self) -> Result<MorphismData> {
        self.sublocale_data(DEFAULT_FRAME_CAP).map(|(_, _, d)| d)
    }

    fn restriction(&self, t: Elem) -> Result<Restriction> {
        lattice_restriction(&self.morphism_data()?, t)
    }

    /// The comparison is an epimorphism of locales exactly when the images agree.
    fn comparison_in_e(&self, t: Elem, p: Elem) -> Result<bool> {
        let f = self.morphism_data()?;
        let c = f.cod();
        Ok(f.image(f.dom().meet(p, f.preimage(t))) == c.meet(t, f.image(p)))
    }
}

fn frame_hom_violation(from: &FiniteFrame, to: &FiniteFrame, h: &[Elem]) -> Option<String> {
    let (ly, lx) = (&*from.lattice, &*to.lattice);
    if h.len() != ly.len() || h.iter().any(|e| e.index() >= lx.len()) {
        return Some("not a total map".into());
    }
    let at = |y: Elem| h[y.index()];
    if at(ly.top()) != lx.top() {
        return Some("top is not preserved".into());
    }
    if at(ly.bottom()) != lx.bottom() {
        return Some("bottom is not preserved".into());
    }
    for a in ly.elems() {
        for b in ly.elems().filter(|b| b > &a) {
            if at(ly.meet(a, b)) != lx.meet(at(a), at(b)) {
                return Some(format!(
                    "meet of {} and {} is not preserved",
                    ly.name(a),
                    ly.name(b)
                ));
            }
            if at(ly.join(a, b)) != lx.join(at(a), at(b)) {
                return Some(format!(
                    "join of {} and {} is not preserved",
                    ly.name(a),
                    ly.name(b)
                ));
            }
        }
    }
    None
}

/// Every localic map `x -> y`, by backtracking over frame homomorphisms `y -> x`.
pub fn enumerate_localic_maps(x: &FiniteFrame, y: &FiniteFrame) -> Vec<LocalicMap> {
    let ly = &*y.lattice;
    let mut order: Vec<Elem> = ly.elems().collect();
    order.sort_by_key(|&e| (ly.down_set(e).len(), e));
    let mut out = Vec::new();
    let mut h: Vec<Option<Elem>> = vec![None; ly.len()];
    homs(x, y, &order, 0, &mut h, &mut out);
    out
}

fn homs(
    x: &FiniteFrame,
    y: &FiniteFrame,
    order: &[Elem],
    depth: usize,
    h: &mut Vec<Option<Elem>>,
    out: &mut Vec<LocalicMap>,
) {
    let (lx, ly) = (&*x.lattice, &*y.lattice);
    let Some(&e) = order.get(depth) else {
        let hom: Vec<Elem> = h.iter().map(|v| v.expect("assigned")).collect();
        if frame_hom_violation(y, x, &hom).is_none() {
            out.push(LocalicMap {
                src: x.clone(),
                dst: y.clone(),
                hom,
            });
        }
        return;
    };
    for v in lx.elems() {
        let consistent = h.iter().enumerate().all(|(i, w)| {
            let Some(w) = *w else { return true };
            let o = ly.elem_at(i).expect("index in range");
            let ok_meet = h[ly.meet(e, o).index()].is_none_or(|m| m == lx.meet(v, w));
            let ok_join = h[ly.join(e, o).index()].is_none_or(|j| j == lx.join(v, w));
            ok_meet && ok_join && (!ly.leq(o, e) || lx.leq(w, v))
        });
        if consistent {
            h[e.index()] = Some(v);
            homs(x, y, order, depth + 1, h, out);
            h[e.index()] = None;
        }
    }
}

/// Every supplied localic map is a preneighbourhood morphism between natural topologies,
/// and composites are sent to composites.
pub fn check_right_inverse(maps: &[LocalicMap], cap: usize) -> Result<Report> {
    let mut r = Report::new("right-inverse");
    let mut data = Vec::with_capacity(maps.len());
    for (i, m) in maps.iter().enumerate() {
        let (sx, sy, d) = m.sublocale_data(cap)?;
        let (gx, gy) = (natural_topology(&sx), natural_topology(&sy));
        let witness = prenbhd_counterexample(&d, &gx, &gy)
            .map(|(n, p)| vec![d.cod().name(n).to_owned(), d.cod().name(p).to_owned()]);
        r.check_none(format!("map {i}: morphism of natural topologies"), witness);
        data.push(d);
    }
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            if f.dst != g.src {
                continue;
            }
            let gf = f.compose(g)?;
            let (_, _, composite) = gf.sublocale_data(cap)?;
            let pass = data[i].compose(&data[j]).is_ok_and(|d| d == composite);
            r.check(
                format!("maps {j} after {i}: functorial"),
                pass,
                vec![format!("{i}"), format!("{j}")],
            );
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nbhd::StructureClass;

    fn frame(l: FiniteLattice) -> FiniteFrame {
        FiniteFrame::new(l)
    }

    #[test]
    fn sublocale_counts() {
        assert_eq!(all_sublocales(&frame(fixtures::c2())).unwrap().len(), 2);
        assert_eq!(all_sublocales(&frame(fixtures::c3())).unwrap().len(), 4);
        assert_eq!(all_sublocales(&frame(fixtures::b2())).unwrap().len(), 4);
    }

    #[test]
    fn sublocale_counts_match_brute_force() {
        for (_, l) in fixtures::lattices() {
            let f = frame(l);
            let brute = (0u128..1 << f.len())
                .filter(|&bits| f.is_sublocale(ElemSet::from_bits(bits)))
                .count();
            let subs = all_sublocales(&f).unwrap();
            assert_eq!(subs.len(), brute);
            assert!(subs.check().all_pass());
        }
    }

    #[test]
    fn open_sublocales_on_c3() {
        let f = frame(fixtures::c3());
        let l = f.lattice();
        let a = l.elem("a").unwrap();
        assert_eq!(f.open_sublocale(a).display(&f), "{0,1}");
        assert_eq!(f.open_sublocale(l.top()), f.whole());
        assert_eq!(f.open_sublocale(l.bottom()), f.trivial_sublocale());
    }

    #[test]
    fn implication_validation() {
        let l = fixtures::c3();
        let good = FiniteFrame::new(l.clone());
        assert!(FiniteFrame::with_implication(l.clone(), good.imp.clone()).is_ok());
        let mut bad = good.imp.clone();
        bad[0][0] = l.bottom();
        assert!(matches!(
            FiniteFrame::with_implication(l, bad),
            Err(Error::InvalidImplication(_))
        ));
    }

    #[test]
    fn natural_topology_is_topology_with_opens_iso_frame() {
        for (_, l) in fixtures::lattices().into_iter().take(5) {
            let f = frame(l);
            let subs = all_sublocales(&f).unwrap();
            let o = natural_topology(&subs);
            assert_eq!(o.classify(), StructureClass::Topology);
            assert_eq!(o.opens(), subs.opens());
            let open = subs.open_map();
            let fl = f.lattice();
            for a in fl.elems() {
                for b in fl.elems() {
                    assert_eq!(
                        fl.leq(a, b),
                        subs.lattice().leq(open[a.index()], open[b.index()])
                    );
                }
            }
        }
    }

    #[test]
    fn natural_topology_extremes() {
        let f = frame(fixtures::c3());
        let subs = all_sublocales(&f).unwrap();
        let o = natural_topology(&subs);
        let l = subs.lattice();
        assert_eq!(o.filter(l.bottom()).members(), l.all());
        assert_eq!(o.filter(l.top()).members(), ElemSet::singleton(l.top()));
        let oa = subs
            .position(&f.open_sublocale(f.lattice().elem("a").unwrap()))
            .unwrap();
        assert_eq!(o.filter(oa).members(), l.up_set(oa));
    }

    #[test]
    fn frame_homs_and_localic_maps() {
        let c2 = frame(fixtures::c2());
        let c3 = frame(fixtures::c3());
        let b2 = frame(fixtures::b2());
        assert_eq!(enumerate_localic_maps(&c2, &c2).len(), 1);
        // Frame homs C3 -> C2: a goes to 0 or 1.
        assert_eq!(enumerate_localic_maps(&c2, &c3).len(), 2);
        // Frame homs B2 -> B2: identity, swap and the two projections.
        let maps = enumerate_localic_maps(&b2, &b2);
        assert_eq!(maps.len(), 4);
        assert!(LocalicMap::from_names(
            c2.clone(),
            c3.clone(),
            &[("0", "0"), ("a", "0"), ("1", "0")]
        )
        .is_err());
    }

    #[test]
    fn preimage_of_open_is_open_of_pullback() {
        let x = frame(fixtures::b2());
        let y = frame(fixtures::c3());
        for m in enumerate_localic_maps(&x, &y) {
            for b in y.lattice().elems() {
                let pre = m.localic_preimage(&y.open_sublocale(b)).unwrap();
                assert_eq!(pre, x.open_sublocale(m.frame_hom(b)));
            }
            let (_, _, d) = m.sublocale_data(8).unwrap();
            assert!(d.check().all_pass(), "{}", d.check());
        }
    }

    #[test]
    fn right_inverse_on_small_frames() {
        let frames: Vec<FiniteFrame> = [fixtures::c2(), fixtures::c3(), fixtures::b2()]
            .into_iter()
            .map(frame)
            .collect();
        let mut maps = Vec::new();
        for x in &frames {
            for y in &frames {
                maps.extend(enumerate_localic_maps(x, y));
            }
        }
        let r = check_right_inverse(&maps, 8).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn identity_preimage_and_image() {
        let f = frame(fixtures::b2());
        let id = LocalicMap::identity(&f);
        let subs = all_sublocales(&f).unwrap();
        for s in subs.sublocales() {
            assert_eq!(id.localic_preimage(s).unwrap(), *s);
            assert_eq!(id.localic_image(s).unwrap(), *s);
        }
    }
}
