use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::{Elem, ElemSet, Filter, FiniteLattice};

/// Strength of a preneighbourhood, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureClass {
    Pre,
    Weak,
    Nbhd,
    Topology,
}

impl StructureClass {
    pub const ALL: [StructureClass; 4] = [
        StructureClass::Pre,
        StructureClass::Weak,
        StructureClass::Nbhd,
        StructureClass::Topology,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureClass::Pre => "Pre",
            StructureClass::Weak => "Weak",
            StructureClass::Nbhd => "Nbhd",
            StructureClass::Topology => "Topology",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        StructureClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An order-reversing assignment of filters `μ(m)` whose members all lie above `m`.
#[derive(Clone)]
pub struct PreNbhd {
    carrier: Arc<FiniteLattice>,
    assign: Vec<Filter>,
}

impl PreNbhd {
    pub fn new(carrier: impl Into<Arc<FiniteLattice>>, assign: Vec<Filter>) -> Result<Self> {
        let carrier = carrier.into();
        let l = &*carrier;
        if assign.len() != l.len() {
            return Err(Error::InvalidStructure(format!(
                "{} filters for {} elements",
                assign.len(),
                l.len()
            )));
        }
        for (m, f) in l.elems().zip(&assign) {
            Filter::new(l, f.members())
                .map_err(|e| Error::InvalidStructure(format!("value at {}: {e}", l.name(m))))?;
            if !f.members().is_subset(l.up_set(m)) {
                let p = f
                    .members()
                    .difference(l.up_set(m))
                    .iter()
                    .next()
                    .expect("nonempty");
                return Err(Error::InvalidStructure(format!(
                    "{} is a neighbourhood of {} but not above it",
                    l.name(p),
                    l.name(m)
                )));
            }
        }
        for m in l.elems() {
            for m2 in l.up_set(m) {
                if !assign[m2.index()].is_subset(&assign[m.index()]) {
                    return Err(Error::InvalidStructure(format!(
                        "not order-reversing: {} <= {}",
                        l.name(m),
                        l.name(m2)
                    )));
                }
            }
        }
        Ok(PreNbhd { carrier, assign })
    }

    /// Build from `(element, neighbourhood names)` rows covering every element once.
    pub fn from_names<S: AsRef<str>>(
        carrier: impl Into<Arc<FiniteLattice>>,
        rows: &[(S, Vec<S>)],
    ) -> Result<Self> {
        let carrier = carrier.into();
        let mut assign = vec![None; carrier.len()];
        for (m, members) in rows {
            let m = carrier.elem(m.as_ref())?;
            let set = carrier.set_of(members)?;
            if assign[m.index()]
                .replace(Filter::from_members_unchecked(set))
                .is_some()
            {
                return Err(Error::InvalidStructure(format!(
                    "{} assigned twice",
                    carrier.name(m)
                )));
            }
        }
        let assign = assign
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                f.ok_or_else(|| {
                    Error::InvalidStructure(format!("{} unassigned", carrier.names()[i]))
                })
            })
            .collect::<Result<_>>()?;
        Self::new(carrier, assign)
    }

    pub(crate) fn new_unchecked(carrier: Arc<FiniteLattice>, assign: Vec<Filter>) -> Self {
        PreNbhd { carrier, assign }
    }

    /// `μ(m) = ↑g(m)` for a monotone inflationary `g`.
    pub(crate) fn from_generators(carrier: Arc<FiniteLattice>, g: &[Elem]) -> Self {
        let assign = g.iter().map(|&x| Filter::principal(&carrier, x)).collect();
        PreNbhd { carrier, assign }
    }

    /// Bottom gets every element; all other elements get `{top}`.
    pub fn nabla(carrier: impl Into<Arc<FiniteLattice>>) -> Self {
        let carrier = carrier.into();
        let l = &*carrier;
        let assign = l
            .elems()
            .map(|m| {
                if m == l.bottom() {
                    Filter::whole(l)
                } else {
                    Filter::trivial(l)
                }
            })
            .collect();
        PreNbhd { carrier, assign }
    }

    /// `m ↦ ↑m`, the largest preneighbourhood.
    pub fn atleast(carrier: impl Into<Arc<FiniteLattice>>) -> Self {
        let carrier = carrier.into();
        let assign = carrier
            .elems()
            .map(|m| Filter::principal(&carrier, m))
            .collect();
        PreNbhd { carrier, assign }
    }

    /// `m ↦ {top}`, the smallest preneighbourhood.
    pub fn constant_top(carrier: impl Into<Arc<FiniteLattice>>) -> Self {
        let carrier = carrier.into();
        let assign = vec![Filter::trivial(&carrier); carrier.len()];
        PreNbhd { carrier, assign }
    }

    pub fn carrier(&self) -> &FiniteLattice {
        &self.carrier
    }

    pub fn carrier_arc(&self) -> &Arc<FiniteLattice> {
        &self.carrier
    }

    pub fn same_carrier(&self, other: &PreNbhd) -> bool {
        Arc::ptr_eq(&self.carrier, &other.carrier) || *self.carrier == *other.carrier
    }

    pub fn filter(&self, m: Elem) -> Filter {
        self.assign[m.index()]
    }

    pub fn filters(&self) -> &[Filter] {
        &self.assign
    }

    /// Whether `p ∈ μ(m)`.
    pub fn contains(&self, m: Elem, p: Elem) -> bool {
        self.assign[m.index()].contains(p)
    }

    /// The least element of `μ(m)`.
    pub fn generator(&self, m: Elem) -> Elem {
        self.assign[m.index()].generator(&self.carrier)
    }

    /// Pointwise inclusion `μ(m) ⊆ ν(m)`.
    pub fn leq(&self, other: &PreNbhd) -> bool {
        self.assign
            .iter()
            .zip(&other.assign)
            .all(|(a, b)| a.is_subset(b))
    }

    /// `{p : ∃q ∈ μ(m), p ∈ μ(q)}`.
    pub fn interpolants(&self, m: Elem) -> ElemSet {
        self.assign[m.index()]
            .members()
            .iter()
            .fold(ElemSet::EMPTY, |acc, q| {
                acc.union(self.assign[q.index()].members())
            })
    }

    /// A pair `(m, p)` with `p ∈ μ(m)` admitting no interpolating `q`.
    pub fn interpolation_counterexample(&self) -> Option<(Elem, Elem)> {
        self.carrier.elems().find_map(|m| {
            self.assign[m.index()]
                .members()
                .difference(self.interpolants(m))
                .iter()
                .next()
                .map(|p| (m, p))
        })
    }

    pub fn is_interpolative(&self) -> bool {
        self.carrier
            .elems()
            .all(|m| self.interpolants(m) == self.assign[m.index()].members())
    }

    /// `μ(m) ⊆ ⋃_{p ∈ μ(m)} ⋂_{x <= p} μ(x)` for every `m`, evaluated literally.
    pub fn satisfies_seq_of_seq(&self) -> bool {
        let l = &*self.carrier;
        l.elems().all(|m| {
            let mu_m = self.assign[m.index()].members();
            let covered = mu_m.iter().fold(ElemSet::EMPTY, |acc, p| {
                let below = l.down_set(p).iter().fold(l.all(), |meet, x| {
                    meet.intersection(self.assign[x.index()].members())
                });
                acc.union(below)
            });
            mu_m.is_subset(covered)
        })
    }

    /// A subset `G` with `μ(⋁G) != ⋂ μ[G]`, searched over the empty set and pairs.
    pub fn join_counterexample(&self) -> Option<ElemSet> {
        let l = &*self.carrier;
        if self.assign[l.bottom().index()] != Filter::whole(l) {
            return Some(ElemSet::EMPTY);
        }
        l.elems().find_map(|x| {
            l.elems()
                .filter(|y| y > &x)
                .find(|&y| self.filter(l.join(x, y)) != self.filter(x).meet(&self.filter(y)))
                .map(|y| ElemSet::singleton(x).with(y))
        })
    }

    /// Meet preservation over every subset of the carrier. Exponential; intended as an
    /// oracle on small lattices.
    pub fn preserves_all_joins_exhaustive(&self) -> bool {
        let l = &*self.carrier;
        assert!(
            l.len() <= 20,
            "exhaustive join scan is limited to 20 elements"
        );
        (0u32..1 << l.len()).all(|bits| {
            let g = ElemSet::from_bits(bits as u128);
            let meet = g.iter().fold(l.all(), |acc, x| {
                acc.intersection(self.assign[x.index()].members())
            });
            self.filter(l.join_all(g)).members() == meet
        })
    }

    /// `{p : p ∈ μ(p)}`.
    pub fn opens(&self) -> ElemSet {
        self.carrier
            .elems()
            .filter(|&p| self.contains(p, p))
            .collect()
    }

    /// Join of the opens below `m`.
    pub fn interior(&self, m: Elem) -> Elem {
        let l = &*self.carrier;
        l.join_all(self.opens().intersection(l.down_set(m)))
    }

    pub fn interior_map(&self) -> Vec<Elem> {
        let l = &*self.carrier;
        let opens = self.opens();
        l.elems()
            .map(|m| l.join_all(opens.intersection(l.down_set(m))))
            .collect()
    }

    /// Whether the opens are closed under all joins (including the empty join).
    pub fn opens_join_closed(&self) -> bool {
        let l = &*self.carrier;
        let o = self.opens();
        o.contains(l.bottom()) && o.iter().all(|x| o.iter().all(|y| o.contains(l.join(x, y))))
    }

    /// Whether every interior is open.
    pub fn interiors_are_open(&self) -> bool {
        let o = self.opens();
        self.interior_map().iter().all(|&i| o.contains(i))
    }

    /// The opens form a frame under the order induced from the carrier.
    pub fn opens_form_frame(&self) -> bool {
        let l = &*self.carrier;
        let o = self.opens();
        match l.induced(o) {
            Ok(sub) => sub.is_frame(),
            Err(_) => false,
        }
    }

    /// The strongest class this structure belongs to.
    pub fn classify(&self) -> StructureClass {
        if !self.is_interpolative() {
            StructureClass::Pre
        } else if self.join_counterexample().is_some() {
            StructureClass::Weak
        } else if !self.opens_form_frame() {
            StructureClass::Nbhd
        } else {
            StructureClass::Topology
        }
    }

    /// Classification together with the reason the next class up fails.
    pub fn classify_with_witness(&self) -> (StructureClass, Option<String>) {
        let l = &*self.carrier;
        if let Some((m, p)) = self.interpolation_counterexample() {
            let w = format!(
                "interpolation fails: {} ∈ μ({}) has no q",
                l.name(p),
                l.name(m)
            );
            return (StructureClass::Pre, Some(w));
        }
        if let Some(g) = self.join_counterexample() {
            let w = if g.is_empty() {
                format!(
                    "empty join: μ({}) = {} is not the whole lattice",
                    l.name(l.bottom()),
                    self.filter(l.bottom()).display(l)
                )
            } else {
                format!(
                    "join of {} is not sent to the intersection",
                    l.format_set(g)
                )
            };
            return (StructureClass::Weak, Some(w));
        }
        if !self.opens_form_frame() {
            let w = format!("opens {} do not form a frame", l.format_set(self.opens()));
            return (StructureClass::Nbhd, Some(w));
        }
        (StructureClass::Topology, None)
    }

    pub fn is_at_least(&self, class: StructureClass) -> bool {
        self.classify() >= class
    }

    pub fn is_weak(&self) -> bool {
        self.is_interpolative()
    }

    pub fn is_neighbourhood(&self) -> bool {
        self.is_interpolative() && self.join_counterexample().is_none()
    }

    pub fn is_topology(&self) -> bool {
        self.classify() == StructureClass::Topology
    }

    /// Rows `(m, μ(m))` by name, in carrier order.
    pub fn table(&self) -> Vec<(String, Vec<String>)> {
        let l = &*self.carrier;
        l.elems()
            .map(|m| (l.name(m).to_owned(), l.names_of(self.filter(m).members())))
            .collect()
    }
}

impl PartialEq for PreNbhd {
    fn eq(&self, other: &Self) -> bool {
        self.same_carrier(other) && self.assign == other.assign
    }
}

impl Eq for PreNbhd {}

impl fmt::Debug for PreNbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &*self.carrier;
        let mut m = f.debug_map();
        for e in l.elems() {
            m.entry(&l.name(e), &self.filter(e).display(l));
        }
        m.finish()
    }
}

impl fmt::Display for PreNbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &*self.carrier;
        for (i, e) in l.elems().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} -> {}", l.name(e), self.filter(e).display(l))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn nabla_on_c3() {
        let c3 = fixtures::c3();
        let n = PreNbhd::nabla(c3.clone());
        let shown: Vec<String> = c3.elems().map(|m| n.filter(m).display(&c3)).collect();
        assert_eq!(shown, ["{0,a,1}", "{1}", "{1}"]);
        assert_eq!(n.classify(), StructureClass::Topology);
        assert_eq!(c3.format_set(n.opens()), "{0,1}");
    }

    #[test]
    fn atleast_is_open_everywhere() {
        let b2 = fixtures::b2();
        let a = PreNbhd::atleast(b2.clone());
        assert_eq!(a.opens(), b2.all());
        assert!(b2.elems().all(|m| a.interior(m) == m));
        assert_eq!(a.filter(b2.elem("a").unwrap()).display(&b2), "{a,1}");
    }

    #[test]
    fn mu_bad_is_only_pre() {
        let mu = fixtures::mu_bad();
        assert_eq!(mu.classify(), StructureClass::Pre);
        assert!(!mu.is_interpolative());
        assert!(!mu.satisfies_seq_of_seq());
        let (m, p) = mu.interpolation_counterexample().unwrap();
        assert_eq!((mu.carrier().name(m), mu.carrier().name(p)), ("0", "a"));
    }

    #[test]
    fn mu_c_is_weak_not_nbhd() {
        let mu = fixtures::mu_c();
        let (class, witness) = mu.classify_with_witness();
        assert_eq!(class, StructureClass::Weak);
        assert!(witness.unwrap().starts_with("empty join"));
        assert_eq!(mu.join_counterexample(), Some(ElemSet::EMPTY));
        assert_eq!(mu.carrier().format_set(mu.opens()), "{a,1}");
    }

    #[test]
    fn validation() {
        let c3 = fixtures::c3();
        let err = PreNbhd::from_names(
            c3.clone(),
            &[
                ("0", vec!["1"]),
                ("a", vec!["0", "a", "1"]),
                ("1", vec!["1"]),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidStructure(_)));
        let err = PreNbhd::from_names(
            c3.clone(),
            &[("0", vec!["1"]), ("a", vec!["a", "1"]), ("1", vec!["1"])],
        )
        .unwrap_err();
        assert!(err.to_string().contains("order-reversing"));
    }

    #[test]
    fn class_names_round_trip() {
        for c in StructureClass::ALL {
            assert_eq!(StructureClass::parse(c.name()), Some(c));
        }
        assert!(StructureClass::Pre < StructureClass::Topology);
    }
}
