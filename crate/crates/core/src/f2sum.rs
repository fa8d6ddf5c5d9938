use std::collections::BTreeSet;
use std::fmt;

/// A finite sum with coefficients in F_2, stored as the set of terms that
/// carry coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Sum<T: Ord> {
    terms: BTreeSet<T>,
}

impl<T: Ord> Default for F2Sum<T> {
    fn default() -> Self {
        Self {
            terms: BTreeSet::new(),
        }
    }
}

impl<T: Ord> F2Sum<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(term: T) -> Self {
        let mut s = Self::zero();
        s.toggle(term);
        s
    }

    /// Adds `term` with coefficient 1.
    pub fn toggle(&mut self, term: T) {
        if !self.terms.remove(&term) {
            self.terms.insert(term);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &T) -> bool {
        self.terms.contains(term)
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.terms.iter()
    }

    pub fn add_assign(&mut self, other: F2Sum<T>) {
        for t in other.terms {
            self.toggle(t);
        }
    }

    pub fn map<U: Ord>(&self, f: impl FnMut(&T) -> U) -> F2Sum<U> {
        self.terms.iter().map(f).collect()
    }
}

impl<T: Ord> FromIterator<T> for F2Sum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::zero();
        for t in iter {
            s.toggle(t);
        }
        s
    }
}

impl<T: Ord> Extend<T> for F2Sum<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for t in iter {
            self.toggle(t);
        }
    }
}

impl<T: Ord> IntoIterator for F2Sum<T> {
    type Item = T;
    type IntoIter = std::collections::btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a F2Sum<T> {
    type Item = &'a T;
    type IntoIter = std::collections::btree_set::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<T: Ord + fmt::Display> fmt::Display for F2Sum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
