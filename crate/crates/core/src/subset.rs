//! Ordered ground sets and bitmask subsets.
//!
//! Element `i` of a [`GroundSet`] (its position in declaration order) is bit
//! `i` of a [`Subset`]. Because the most significant differing bit decides
//! integer comparison, the derived `Ord` on `Subset` is exactly the
//! colexicographic order: `A < B` iff the largest element of `A Δ B` lies in
//! `B`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set the crate will build rank tables for.
pub const MAX_ELEMENTS: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set of an `n`-element ground.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        positions.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub const fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub const fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub const fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    /// Complement relative to an `n`-element ground set.
    pub const fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element position, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element position, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Element positions in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Submasks {
        Submasks {
            set: self.0,
            next: 0,
            done: false,
        }
    }

    /// Order by size, then lexicographically on the sorted element lists.
    /// This is the row order used by the activity tables.
    pub fn cmp_size_lex(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over element positions of a subset.
#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of all submasks of a mask.
#[derive(Clone, Debug)]
pub struct Submasks {
    set: u32,
    next: u32,
    done: bool,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let current = self.next;
        self.next = current.wrapping_sub(self.set) & self.set;
        self.done = self.next == 0;
        Some(Subset(current))
    }
}

/// Every subset of an `n`-element ground set, in colex order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..=Subset::full(n).0).map(Subset)
}

/// A linearly ordered ground set of labelled elements.
///
/// The declaration order is the order used by every activity definition;
/// labels are never re-sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                cap: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set labelled `1, 2, …, n`.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn contains_subset(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    /// Check that `s` only uses positions of this ground set.
    pub fn check(&self, s: Subset) -> Result<()> {
        if self.contains_subset(s) {
            Ok(())
        } else {
            Err(Error::ForeignElement(format!("{:?}", s)))
        }
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().try_fold(Subset::EMPTY, |acc, l| {
            let l = l.as_ref();
            self.position(l)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        })
    }

    /// Shorthand used heavily by fixtures: every character is one label.
    /// `"134"` is `{1,3,4}`; `""` is the empty set.
    pub fn compact(&self, chars: &str) -> Result<Subset> {
        self.subset(chars.chars().map(|c| c.to_string()))
    }

    /// Brace literal, e.g. `{1,3}`; `{}` for the empty set.
    pub fn format(&self, s: Subset) -> String {
        let inner: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Concatenated labels, e.g. `13`; `∅` for the empty set.
    pub fn format_compact(&self, s: Subset) -> String {
        if s.is_empty() {
            "∅".to_string()
        } else {
            s.iter().map(|i| self.label(i)).collect()
        }
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_of_0x55() {
        let got: Vec<u32> = Subset::from_bits(0x55).subsets().map(Subset::bits).collect();
        assert_eq!(got, [0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn ord_is_colex() {
        // {1,2} < {3}: the largest element of the symmetric difference is 3
        let a = Subset::from_positions([0, 1]);
        let b = Subset::from_positions([2]);
        assert!(a < b);
        // brute-force against the definition on a 4-element ground
        for x in all_subsets(4) {
            for y in all_subsets(4) {
                let d = x.symmetric_difference(y);
                let by_def = match d.max_element() {
                    None => Ordering::Equal,
                    Some(m) if y.contains(m) => Ordering::Less,
                    Some(_) => Ordering::Greater,
                };
                assert_eq!(x.cmp(&y), by_def);
            }
        }
    }

    #[test]
    fn size_lex_order() {
        let g = GroundSet::numbered(4).unwrap();
        let mut v: Vec<Subset> = all_subsets(4).collect();
        v.sort_by(Subset::cmp_size_lex);
        let names: Vec<String> = v.iter().map(|&s| g.format_compact(s)).collect();
        assert_eq!(
            names.join(" "),
            "∅ 1 2 3 4 12 13 14 23 24 34 123 124 134 234 1234"
        );
    }

    #[test]
    fn ground_set_errors() {
        assert_eq!(
            GroundSet::new(["1", "1"]).unwrap_err(),
            Error::DuplicateLabel("1".into())
        );
        let g = GroundSet::numbered(3).unwrap();
        assert_eq!(g.compact("4").unwrap_err(), Error::UnknownLabel("4".into()));
        assert!(g.check(Subset::singleton(3)).is_err());
        assert_eq!(g.format(g.compact("13").unwrap()), "{1,3}");
        assert_eq!(g.format(Subset::EMPTY), "{}");
        assert!(GroundSet::numbered(MAX_ELEMENTS + 1).is_err());
    }
}
