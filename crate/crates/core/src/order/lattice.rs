use std::collections::HashMap;
use std::fmt;

use super::set::{Elem, ElemSet, MAX_ELEMS};
use crate::error::{Error, MissingBound, Result};

/// A finite bounded distributive lattice given by an explicit order matrix.
///
/// Meets and joins of every pair are precomputed at construction, so every later
/// lattice operation is a table lookup. Construction rejects relations that are not
/// partial orders, posets lacking some binary meet or join, and non-distributive
/// lattices.
#[derive(Clone)]
pub struct FiniteLattice {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl FiniteLattice {
    /// Build from element identifiers and generating `lo <= hi` pairs. The relation is
    /// closed reflexively and transitively.
    pub fn new<S: AsRef<str>>(elements: &[S], leq: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_names(&names)?;
        let mut rel = vec![ElemSet::EMPTY; names.len()];
        for (lo, hi) in leq {
            let lo = lookup(&index, lo.as_ref())?;
            let hi = lookup(&index, hi.as_ref())?;
            rel[lo.0].insert(hi);
        }
        Self::from_relation(names, index, rel)
    }

    /// Build from identifiers and an order predicate on indices.
    pub fn from_order<F>(names: Vec<String>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let index = index_names(&names)?;
        let n = names.len();
        let rel = (0..n)
            .map(|i| (0..n).filter(|&j| leq(i, j)).map(Elem).collect())
            .collect();
        Self::from_relation(names, index, rel)
    }

    /// The chain `names[0] < names[1] < ...`.
    pub fn chain<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::from_order(
            names.iter().map(|s| s.as_ref().to_owned()).collect(),
            |i, j| i <= j,
        )
    }

    fn from_relation(
        names: Vec<String>,
        index: HashMap<String, Elem>,
        mut up: Vec<ElemSet>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        if n > MAX_ELEMS {
            return Err(Error::TooLarge {
                what: "lattice",
                size: n,
                cap: MAX_ELEMS,
            });
        }
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(Elem(i));
        }
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(Elem(k)) {
                    *row = row.union(row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter().filter(|j| j.0 > i) {
                if up[j.0].contains(Elem(i)) {
                    return Err(Error::NotAPoset(names[i].clone(), names[j.0].clone()));
                }
            }
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j.0].insert(Elem(i));
            }
        }

        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for x in 0..n {
            for y in x..n {
                let m = greatest(&down, down[x].intersection(down[y])).ok_or_else(|| {
                    Error::NotALattice {
                        kind: MissingBound::Meet,
                        lhs: names[x].clone(),
                        rhs: names[y].clone(),
                    }
                })?;
                let j =
                    least(&up, up[x].intersection(up[y])).ok_or_else(|| Error::NotALattice {
                        kind: MissingBound::Join,
                        lhs: names[x].clone(),
                        rhs: names[y].clone(),
                    })?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let all = ElemSet::full(n);
        let bottom = greatest(&down, down.iter().fold(all, |acc, d| acc.intersection(*d)))
            .expect("a finite lattice has a bottom");
        let top = least(&up, up.iter().fold(all, |acc, u| acc.intersection(*u)))
            .expect("a finite lattice has a top");

        let lattice = FiniteLattice {
            names,
            index,
            up,
            down,
            meet,
            join,
            bottom,
            top,
        };
        if let Some((x, y, z)) = lattice.distributivity_witness() {
            return Err(Error::NotDistributive(
                lattice.name(x).to_owned(),
                lattice.name(y).to_owned(),
                lattice.name(z).to_owned(),
            ));
        }
        Ok(lattice)
    }

    /// First triple, in index order, with `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
    fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.len();
        for x in self.elems() {
            for y in self.elems() {
                for z in (y.0..n).map(Elem) {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elems(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.names.len()).map(Elem)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        lookup(&self.index, name)
    }

    pub fn elem_at(&self, index: usize) -> Result<Elem> {
        if index < self.len() {
            Ok(Elem(index))
        } else {
            Err(Error::ForeignElement(format!("#{index}")))
        }
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet> {
        names.iter().map(|s| self.elem(s.as_ref())).collect()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x.0].contains(y)
    }

    /// `{u : x <= u}`.
    pub fn up_set(&self, x: Elem) -> ElemSet {
        self.up[x.0]
    }

    /// `{u : u <= x}`.
    pub fn down_set(&self, x: Elem) -> ElemSet {
        self.down[x.0]
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x.0 * self.len() + y.0]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x.0 * self.len() + y.0]
    }

    /// Greatest lower bound; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Least upper bound; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Up-closure of a set.
    pub fn up_closure(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .fold(ElemSet::EMPTY, |acc, x| acc.union(self.up[x.0]))
    }

    pub fn down_closure(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .fold(ElemSet::EMPTY, |acc, x| acc.union(self.down[x.0]))
    }

    pub fn is_up_closed(&self, s: ElemSet) -> bool {
        self.up_closure(s) == s
    }

    /// Minimal elements of a set.
    pub fn minimal(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .filter(|&x| self.down[x.0].intersection(s) == ElemSet::singleton(x))
            .collect()
    }

    /// Lower covers of `x`.
    pub fn lower_covers(&self, x: Elem) -> ElemSet {
        let strict = self.down[x.0].difference(ElemSet::singleton(x));
        strict
            .iter()
            .filter(|&y| self.up[y.0].intersection(strict) == ElemSet::singleton(y))
            .collect()
    }

    /// Upper covers of `x`.
    pub fn upper_covers(&self, x: Elem) -> ElemSet {
        let strict = self.up[x.0].difference(ElemSet::singleton(x));
        strict
            .iter()
            .filter(|&y| self.down[y.0].intersection(strict) == ElemSet::singleton(y))
            .collect()
    }

    /// Frame law `x ∧ ⋁S = ⋁{x ∧ s}`. For a finite lattice arbitrary joins are iterated
    /// binary joins, so the law reduces to binary distributivity.
    pub fn is_frame(&self) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                self.elems().all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// Coframe law `x ∨ ⋀S = ⋀{x ∨ s}`, reduced to its binary form as in [`Self::is_frame`].
    pub fn is_coframe(&self) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                self.elems().all(|z| {
                    self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), self.join(x, z))
                })
            })
        })
    }

    /// The poset induced on `members`, as a lattice in its own right. Fails when the
    /// induced order is not a distributive lattice. Names are inherited.
    pub fn induced(&self, members: ElemSet) -> Result<FiniteLattice> {
        let elems: Vec<Elem> = members.iter().collect();
        let names = elems.iter().map(|&e| self.name(e).to_owned()).collect();
        FiniteLattice::from_order(names, |i, j| self.leq(elems[i], elems[j]))
    }

    /// Render a subset as `{a,b}` in canonical order.
    pub fn format_set(&self, s: ElemSet) -> String {
        let mut out = String::from("{");
        for (k, e) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.name(e));
        }
        out.push('}');
        out
    }

    pub fn names_of(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|e| self.name(e).to_owned()).collect()
    }

    /// Every `lo <= hi` pair with `lo != hi`, in index order. Suitable for serialisation.
    pub fn order_pairs(&self) -> Vec<(String, String)> {
        let mut pairs = Vec::new();
        for x in self.elems() {
            for y in self.up[x.0].iter().filter(|&y| y != x) {
                pairs.push((self.name(x).to_owned(), self.name(y).to_owned()));
            }
        }
        pairs
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn cover_pairs(&self) -> Vec<(Elem, Elem)> {
        self.elems()
            .flat_map(|x| self.upper_covers(x).iter().map(move |y| (x, y)))
            .collect()
    }
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for FiniteLattice {}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("elements", &self.names)
            .field(
                "covers",
                &self
                    .cover_pairs()
                    .iter()
                    .map(|(a, b)| (self.name(*a), self.name(*b)))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, Elem>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), Elem(i)).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, Elem>, name: &str) -> Result<Elem> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::ForeignElement(name.to_owned()))
}

/// The element of `s` above every other element of `s`, if any (`down[g] ⊇ s`).
fn greatest(down: &[ElemSet], s: ElemSet) -> Option<Elem> {
    s.iter().find(|g| s.is_subset(down[g.0]))
}

fn least(up: &[ElemSet], s: ElemSet) -> Option<Elem> {
    s.iter().find(|l| s.is_subset(up[l.0]))
}
