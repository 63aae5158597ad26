use std::fmt;

/// Maximum number of elements a [`FiniteLattice`](super::FiniteLattice) may carry.
pub const MAX_ELEMS: usize = 128;

/// Index of an element inside one particular lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A subset of lattice elements, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMS);
        if n == MAX_ELEMS {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(e: Elem) -> Self {
        ElemSet(1u128 << e.0)
    }

    pub fn contains(self, e: Elem) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    pub fn insert(&mut self, e: Elem) {
        self.0 |= 1u128 << e.0;
    }

    pub fn remove(&mut self, e: Elem) {
        self.0 &= !(1u128 << e.0);
    }

    pub fn with(self, e: Elem) -> Self {
        ElemSet(self.0 | 1u128 << e.0)
    }

    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements with index strictly below `i`.
    pub fn below_index(self, i: usize) -> Self {
        if i >= MAX_ELEMS {
            self
        } else {
            ElemSet(self.0 & ((1u128 << i) - 1))
        }
    }

    pub fn iter(self) -> ElemSetIter {
        ElemSetIter(self.0)
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = Elem;
    type IntoIter = ElemSetIter;

    fn into_iter(self) -> ElemSetIter {
        self.iter()
    }
}

pub struct ElemSetIter(u128);

impl Iterator for ElemSetIter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(Elem(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElemSetIter {}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: ElemSet = [Elem(5), Elem(0), Elem(127), Elem(64)]
            .into_iter()
            .collect();
        let got: Vec<usize> = s.iter().map(Elem::index).collect();
        assert_eq!(got, vec![0, 5, 64, 127]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn full_sets() {
        assert_eq!(ElemSet::full(0), ElemSet::EMPTY);
        assert_eq!(ElemSet::full(3).len(), 3);
        assert_eq!(ElemSet::full(MAX_ELEMS).len(), MAX_ELEMS);
        assert_eq!(ElemSet::full(5).below_index(2), ElemSet::full(2));
    }
}
