use std::fmt;
use std::sync::Arc;

use super::structure::{PreNbhd, StructureClass};
use crate::error::{Error, Result};
use crate::order::{Elem, ElemSet, Filter, FiniteLattice};

/// A subset closed under finite meets and all joins, so containing top and bottom.
#[derive(Clone)]
pub struct PseudoFrameSet {
    carrier: Arc<FiniteLattice>,
    members: ElemSet,
}

impl PseudoFrameSet {
    pub fn new(carrier: impl Into<Arc<FiniteLattice>>, members: ElemSet) -> Result<Self> {
        let carrier = carrier.into();
        let l = &*carrier;
        if !members.is_subset(l.all()) {
            return Err(Error::CarrierMismatch);
        }
        let fail = |what: String| {
            Err(Error::NotAPseudoFrameSet(format!(
                "{}: {what}",
                l.format_set(members)
            )))
        };
        if !members.contains(l.top()) {
            return fail(format!("top {} is missing", l.name(l.top())));
        }
        if !members.contains(l.bottom()) {
            return fail(format!("bottom {} is missing", l.name(l.bottom())));
        }
        for x in members {
            for y in members.iter().filter(|y| y > &x) {
                if !members.contains(l.meet(x, y)) {
                    return fail(format!(
                        "meet of {} and {} is missing",
                        l.name(x),
                        l.name(y)
                    ));
                }
                if !members.contains(l.join(x, y)) {
                    return fail(format!(
                        "join of {} and {} is missing",
                        l.name(x),
                        l.name(y)
                    ));
                }
            }
        }
        Ok(PseudoFrameSet { carrier, members })
    }

    pub fn from_names<S: AsRef<str>>(
        carrier: impl Into<Arc<FiniteLattice>>,
        names: &[S],
    ) -> Result<Self> {
        let carrier = carrier.into();
        let members = carrier.set_of(names)?;
        Self::new(carrier, members)
    }

    /// The smallest pseudo-frame set containing `s`.
    pub fn closure(carrier: impl Into<Arc<FiniteLattice>>, s: ElemSet) -> Self {
        let carrier = carrier.into();
        let members = pfs_closure(&carrier, s);
        PseudoFrameSet { carrier, members }
    }

    pub(crate) fn new_unchecked(carrier: Arc<FiniteLattice>, members: ElemSet) -> Self {
        PseudoFrameSet { carrier, members }
    }

    pub fn carrier(&self) -> &FiniteLattice {
        &self.carrier
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }
}

impl PartialEq for PseudoFrameSet {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.carrier, &other.carrier) || *self.carrier == *other.carrier)
            && self.members == other.members
    }
}

impl Eq for PseudoFrameSet {}

impl fmt::Debug for PseudoFrameSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.carrier.format_set(self.members))
    }
}

/// Close under binary meets and joins, adding top and bottom.
pub(crate) fn pfs_closure(l: &FiniteLattice, s: ElemSet) -> ElemSet {
    let mut closed = s.with(l.top()).with(l.bottom());
    loop {
        let mut next = closed;
        for x in closed {
            for y in closed.iter().filter(|y| y > &x) {
                next.insert(l.meet(x, y));
                next.insert(l.join(x, y));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// A self-map `i` with `i(top) = top`, `i(m) <= m`, `i ∘ i = i` and
/// `i(m ∧ n) = i(m) ∧ i(n)`.
#[derive(Clone)]
pub struct KuratowskiInterior {
    carrier: Arc<FiniteLattice>,
    map: Vec<Elem>,
}

impl KuratowskiInterior {
    pub fn new(carrier: impl Into<Arc<FiniteLattice>>, map: Vec<Elem>) -> Result<Self> {
        let carrier = carrier.into();
        let l = &*carrier;
        if map.len() != l.len() || map.iter().any(|e| e.index() >= l.len()) {
            return Err(Error::NotKuratowski("not a total self-map".into()));
        }
        if let Some(reason) = kuratowski_violation(l, &map) {
            return Err(Error::NotKuratowski(reason));
        }
        Ok(KuratowskiInterior { carrier, map })
    }

    pub fn from_names<S: AsRef<str>>(
        carrier: impl Into<Arc<FiniteLattice>>,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let carrier = carrier.into();
        let mut map = vec![None; carrier.len()];
        for (k, v) in pairs {
            let k = carrier.elem(k.as_ref())?;
            let v = carrier.elem(v.as_ref())?;
            if map[k.index()].replace(v).is_some() {
                return Err(Error::NotKuratowski(format!(
                    "{} assigned twice",
                    carrier.name(k)
                )));
            }
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::NotKuratowski(format!("{} unassigned", carrier.names()[i])))
            })
            .collect::<Result<_>>()?;
        Self::new(carrier, map)
    }

    pub fn identity(carrier: impl Into<Arc<FiniteLattice>>) -> Self {
        let carrier = carrier.into();
        let map = carrier.elems().collect();
        KuratowskiInterior { carrier, map }
    }

    pub(crate) fn new_unchecked(carrier: Arc<FiniteLattice>, map: Vec<Elem>) -> Self {
        KuratowskiInterior { carrier, map }
    }

    pub fn carrier(&self) -> &FiniteLattice {
        &self.carrier
    }

    pub fn apply(&self, m: Elem) -> Elem {
        self.map[m.index()]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn fixed_points(&self) -> ElemSet {
        self.carrier
            .elems()
            .filter(|&m| self.apply(m) == m)
            .collect()
    }

    pub fn table(&self) -> Vec<(String, String)> {
        let l = &*self.carrier;
        l.elems()
            .map(|m| (l.name(m).to_owned(), l.name(self.apply(m)).to_owned()))
            .collect()
    }
}

impl PartialEq for KuratowskiInterior {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.carrier, &other.carrier) || *self.carrier == *other.carrier)
            && self.map == other.map
    }
}

impl Eq for KuratowskiInterior {}

impl fmt::Debug for KuratowskiInterior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.table()).finish()
    }
}

/// The first failed axiom, described with concrete elements.
pub(crate) fn kuratowski_violation(l: &FiniteLattice, i: &[Elem]) -> Option<String> {
    let at = |m: Elem| i[m.index()];
    if at(l.top()) != l.top() {
        return Some(format!(
            "i({}) = {} is not top",
            l.name(l.top()),
            l.name(at(l.top()))
        ));
    }
    if let Some(m) = l.elems().find(|&m| !l.leq(at(m), m)) {
        return Some(format!(
            "i({}) = {} is not below it",
            l.name(m),
            l.name(at(m))
        ));
    }
    if let Some(m) = l.elems().find(|&m| at(at(m)) != at(m)) {
        return Some(format!("not idempotent at {}", l.name(m)));
    }
    for m in l.elems() {
        for n in l.elems().filter(|n| n > &m) {
            if at(l.meet(m, n)) != l.meet(at(m), at(n)) {
                return Some(format!(
                    "meet of {} and {} is not preserved",
                    l.name(m),
                    l.name(n)
                ));
            }
        }
    }
    None
}

/// `μ(m) = ⋃{↑q : m <= q ∈ O}`.
pub fn nbhd_from_pfs(o: &PseudoFrameSet) -> PreNbhd {
    let l = &*o.carrier;
    let assign = l
        .elems()
        .map(|m| {
            let members = o
                .members
                .intersection(l.up_set(m))
                .iter()
                .fold(ElemSet::EMPTY, |acc, q| acc.union(l.up_set(q)));
            Filter::from_members_unchecked(members)
        })
        .collect();
    PreNbhd::new_unchecked(o.carrier.clone(), assign)
}

/// `μ(m) = {p : m <= i(p)}`.
pub fn nbhd_from_kuratowski(k: &KuratowskiInterior) -> PreNbhd {
    let l = &*k.carrier;
    let assign = l
        .elems()
        .map(|m| {
            Filter::from_members_unchecked(l.elems().filter(|&p| l.leq(m, k.apply(p))).collect())
        })
        .collect();
    PreNbhd::new_unchecked(k.carrier.clone(), assign)
}

/// The interior operator of a neighbourhood.
pub fn kuratowski_from(mu: &PreNbhd) -> Result<KuratowskiInterior> {
    require_nbhd(mu)?;
    let map = mu.interior_map();
    if let Some(reason) = kuratowski_violation(mu.carrier(), &map) {
        return Err(Error::NotANeighbourhood(reason));
    }
    Ok(KuratowskiInterior::new_unchecked(
        mu.carrier_arc().clone(),
        map,
    ))
}

/// The open elements of a neighbourhood.
pub fn pfs_from(mu: &PreNbhd) -> Result<PseudoFrameSet> {
    require_nbhd(mu)?;
    PseudoFrameSet::new(mu.carrier_arc().clone(), mu.opens())
        .map_err(|e| Error::NotANeighbourhood(e.to_string()))
}

fn require_nbhd(mu: &PreNbhd) -> Result<()> {
    match mu.classify_with_witness() {
        (c, _) if c >= StructureClass::Nbhd => Ok(()),
        (_, w) => Err(Error::NotANeighbourhood(w.unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_pfs_give_nabla_and_atleast() {
        let b2 = Arc::new(fixtures::b2());
        let small = PseudoFrameSet::new(b2.clone(), ElemSet::singleton(b2.bottom()).with(b2.top()))
            .unwrap();
        assert_eq!(nbhd_from_pfs(&small), PreNbhd::nabla(b2.clone()));
        let full = PseudoFrameSet::new(b2.clone(), b2.all()).unwrap();
        assert_eq!(nbhd_from_pfs(&full), PreNbhd::atleast(b2));
    }

    #[test]
    fn pfs_0b1_on_b2() {
        let b2 = fixtures::b2();
        let o = PseudoFrameSet::from_names(b2.clone(), &["0", "b", "1"]).unwrap();
        let mu = nbhd_from_pfs(&o);
        let a = b2.elem("a").unwrap();
        assert_eq!(mu.filter(a).display(&b2), "{1}");
        assert_eq!(b2.name(mu.interior(a)), "0");
        assert_eq!(mu.classify(), StructureClass::Topology);
        assert_eq!(pfs_from(&mu).unwrap(), o);
    }

    #[test]
    fn kuratowski_round_trip() {
        let b2 = fixtures::b2();
        let k = KuratowskiInterior::from_names(
            b2.clone(),
            &[("0", "0"), ("a", "0"), ("b", "b"), ("1", "1")],
        )
        .unwrap();
        let mu = nbhd_from_kuratowski(&k);
        assert_eq!(mu.filter(b2.elem("a").unwrap()).display(&b2), "{1}");
        assert_eq!(kuratowski_from(&mu).unwrap(), k);
        let id = KuratowskiInterior::identity(b2.clone());
        assert_eq!(nbhd_from_kuratowski(&id), PreNbhd::atleast(b2));
    }

    #[test]
    fn invalid_facets_are_rejected() {
        let b2 = fixtures::b2();
        assert!(matches!(
            PseudoFrameSet::from_names(b2.clone(), &["0", "a", "b", "1"].as_slice()[1..]),
            Err(Error::NotAPseudoFrameSet(_))
        ));
        assert!(matches!(
            KuratowskiInterior::from_names(
                b2.clone(),
                &[("0", "0"), ("a", "a"), ("b", "b"), ("1", "a")]
            ),
            Err(Error::NotKuratowski(_))
        ));
        assert!(matches!(
            kuratowski_from(&fixtures::mu_bad()),
            Err(Error::NotANeighbourhood(_))
        ));
        assert!(matches!(
            pfs_from(&fixtures::mu_c()),
            Err(Error::NotANeighbourhood(_))
        ));
    }

    #[test]
    fn closure_adds_joins() {
        let b3 = fixtures::b3();
        let s = b3.set_of(&["{x}", "{y}"]).unwrap();
        let o = PseudoFrameSet::closure(b3.clone(), s);
        assert_eq!(b3.format_set(o.members()), "{{},{x},{y},{x,y},{x,y,z}}");
    }
}
