use super::closure::next_closure_all;
use super::lattice::FiniteLattice;
use super::set::{Elem, ElemSet};
use crate::error::{Error, Result};

/// An up-closed subset of a lattice that is closed under finite meets and contains top.
///
/// A filter does not hold a reference to its lattice; every operation takes the
/// lattice explicitly, and the validating constructor checks membership against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    members: ElemSet,
}

impl Filter {
    /// Validate `members` as a filter on `l`.
    pub fn new(l: &FiniteLattice, members: ElemSet) -> Result<Self> {
        let reject = |reason: String| Error::NotAFilter {
            set: l.format_set(members.intersection(l.all())),
            reason,
        };
        if !members.is_subset(l.all()) {
            return Err(Error::CarrierMismatch);
        }
        if !members.contains(l.top()) {
            return Err(reject(format!("top {} is missing", l.name(l.top()))));
        }
        for x in members {
            if let Some(u) = l.up_set(x).difference(members).iter().next() {
                return Err(reject(format!(
                    "not up-closed: {} <= {}",
                    l.name(x),
                    l.name(u)
                )));
            }
            for y in members.iter().filter(|y| y > &x) {
                let m = l.meet(x, y);
                if !members.contains(m) {
                    return Err(reject(format!(
                        "meet of {} and {} is {}",
                        l.name(x),
                        l.name(y),
                        l.name(m)
                    )));
                }
            }
        }
        Ok(Filter { members })
    }

    /// Validate a filter given by element names.
    pub fn from_names<S: AsRef<str>>(l: &FiniteLattice, names: &[S]) -> Result<Self> {
        Filter::new(l, l.set_of(names)?)
    }

    /// Trusted constructor for sets known to be filters.
    pub(crate) fn from_members_unchecked(members: ElemSet) -> Self {
        Filter { members }
    }

    /// `↑x`.
    pub fn principal(l: &FiniteLattice, x: Elem) -> Self {
        Filter {
            members: l.up_set(x),
        }
    }

    /// The whole lattice, `↑bottom`.
    pub fn whole(l: &FiniteLattice) -> Self {
        Filter::principal(l, l.bottom())
    }

    /// `{top}`, the smallest filter.
    pub fn trivial(l: &FiniteLattice) -> Self {
        Filter::principal(l, l.top())
    }

    /// Smallest filter containing `s`: close under binary meets, add top, then up-close.
    pub fn generated(l: &FiniteLattice, s: ElemSet) -> Self {
        let mut closed = s.with(l.top());
        loop {
            let mut next = closed;
            for x in closed {
                for y in closed.iter().filter(|y| y > &x) {
                    next.insert(l.meet(x, y));
                }
            }
            if next == closed {
                break;
            }
            closed = next;
        }
        Filter {
            members: l.up_closure(closed),
        }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.is_subset(other.members)
    }

    /// Intersection of filters.
    pub fn meet(&self, other: &Filter) -> Filter {
        Filter {
            members: self.members.intersection(other.members),
        }
    }

    /// Filter generated by the union.
    pub fn join(&self, l: &FiniteLattice, other: &Filter) -> Filter {
        Filter::generated(l, self.members.union(other.members))
    }

    /// The meet of all members. On a finite lattice every filter is `↑generator`.
    pub fn generator(&self, l: &FiniteLattice) -> Elem {
        l.meet_all(self.members)
    }

    pub fn is_principal(&self, l: &FiniteLattice) -> bool {
        l.elems().any(|x| l.up_set(x) == self.members)
    }

    pub fn display(&self, l: &FiniteLattice) -> String {
        l.format_set(self.members)
    }
}

/// Validating binary filter join on a named carrier. Both operands must lie in `l`.
pub fn filter_join(l: &FiniteLattice, f: &Filter, g: &Filter) -> Result<Filter> {
    check_carrier(l, f)?;
    check_carrier(l, g)?;
    Ok(f.join(l, g))
}

pub fn filter_meet(l: &FiniteLattice, f: &Filter, g: &Filter) -> Result<Filter> {
    check_carrier(l, f)?;
    check_carrier(l, g)?;
    Ok(f.meet(g))
}

fn check_carrier(l: &FiniteLattice, f: &Filter) -> Result<()> {
    if f.members.is_subset(l.all()) && f.members.contains(l.top()) && l.is_up_closed(f.members) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch)
    }
}

/// Every filter on a lattice, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct FilterLattice {
    carrier: FiniteLattice,
    filters: Vec<Filter>,
    order: FiniteLattice,
}

impl FilterLattice {
    /// Enumerate the filters of `l` in lectic order of their member sets and build the
    /// inclusion lattice on them. Element `k` of [`Self::lattice`] is `filters()[k]`.
    pub fn new(l: &FiniteLattice) -> Self {
        let filters: Vec<Filter> = next_closure_all(l.len(), |s| Filter::generated(l, s).members)
            .into_iter()
            .map(Filter::from_members_unchecked)
            .collect();
        let names = filters.iter().map(|f| f.display(l)).collect();
        let order = FiniteLattice::from_order(names, |i, j| filters[i].is_subset(&filters[j]))
            .expect("filters of a distributive lattice form a distributive lattice");
        FilterLattice {
            carrier: l.clone(),
            filters,
            order,
        }
    }

    pub fn carrier(&self) -> &FiniteLattice {
        &self.carrier
    }

    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    /// The filters as elements of a lattice under inclusion.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.order
    }

    pub fn filter(&self, e: Elem) -> Filter {
        self.filters[e.index()]
    }

    pub fn position(&self, f: &Filter) -> Option<Elem> {
        self.filters
            .iter()
            .position(|g| g == f)
            .map(|i| self.order.elem_at(i).expect("index in range"))
    }

    /// Compact elements. Every filter of a finite lattice is compact: a cover of `F` by
    /// a family of filters is itself finite.
    pub fn compact_elements(&self) -> Vec<Filter> {
        self.filters.clone()
    }

    pub fn principal_filters(&self) -> Vec<Filter> {
        self.filters
            .iter()
            .filter(|f| f.is_principal(&self.carrier))
            .copied()
            .collect()
    }

    /// Frame law on the inclusion order, with compacts closed under finite meets and
    /// every filter a join of compacts.
    pub fn is_coherent_frame(&self) -> bool {
        let l = &self.order;
        let compact: ElemSet = self
            .compact_elements()
            .iter()
            .filter_map(|f| self.position(f))
            .collect();
        let meets_closed = compact.contains(l.top())
            && compact
                .iter()
                .all(|x| compact.iter().all(|y| compact.contains(l.meet(x, y))));
        let algebraic = l
            .elems()
            .all(|x| l.join_all(l.down_set(x).intersection(compact)) == x);
        l.is_frame() && meets_closed && algebraic
    }
}
