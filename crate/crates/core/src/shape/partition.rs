use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::MAX_BOXES;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions are equal
/// exactly when their part sequences are. The derived `Ord` is lexicographic
/// on the parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        let size = checked_size(&parts)?;
        if size > MAX_BOXES {
            return Err(Error::TooLarge(size));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(m)`, or the empty partition when `m = 0`.
    pub fn row(m: usize) -> Self {
        Partition::from_sorted(vec![m])
    }

    /// `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    /// `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Column lengths of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Whether the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_rectangle(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// The complement of `self` inside `(cols^rows)`, rotated by 180 degrees.
    pub fn complement_in_rectangle(&self, rows: usize, cols: usize) -> Result<Partition> {
        if !self.fits_in_rectangle(rows, cols) {
            return Err(Error::NotContained {
                inner: self.to_string(),
                outer: Partition::rectangle(rows, cols).to_string(),
            });
        }
        let parts = (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect();
        Ok(Partition::from_sorted(parts))
    }

    /// `counts[i]` is the number of parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.first()];
        for &p in &self.0 {
            counts[p - 1] += 1;
        }
        counts
    }

    /// The composition `a` with `delta(a) == self`, when one exists.
    ///
    /// That requires at least one part of every size from 1 up to the
    /// largest part.
    pub fn fat_staircase_composition(&self) -> Option<Composition> {
        let counts = self.multiplicities();
        if counts.is_empty() || counts.contains(&0) {
            return None;
        }
        Some(Composition(counts))
    }

    pub fn is_fat_staircase(&self) -> bool {
        !self.is_empty() && self.0.last() == Some(&1) && self.0.windows(2).all(|w| w[0] - w[1] <= 1)
    }
}

fn checked_size(parts: &[usize]) -> Result<usize> {
    parts
        .iter()
        .try_fold(0usize, |acc, &p| acc.checked_add(p))
        .ok_or(Error::TooLarge(usize::MAX))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
        })
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in partition {s:?}")));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotComposition(parts));
        }
        if checked_size(&parts)? > MAX_BOXES {
            return Err(Error::TooLarge(parts.iter().sum()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all_of(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_list(s)?).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A sequence of non-negative integers with trailing zeros dropped.
///
/// Tableau contents live here; a lattice tableau's content is always
/// weakly decreasing and converts to a [`Partition`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Entrywise sum, as vectors padded with zeros.
    pub fn add(&self, other: &WeakComposition) -> WeakComposition {
        let n = self.0.len().max(other.0.len());
        let parts = (0..n)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        WeakComposition::new(parts)
    }

    /// The `i`-th standard basis vector (1-based, as `e_i`).
    pub fn unit(i: usize) -> WeakComposition {
        assert!(i >= 1, "basis vectors are indexed from 1");
        let mut parts = vec![0; i];
        parts[i - 1] = 1;
        WeakComposition(parts)
    }

    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl PartialEq<Partition> for WeakComposition {
    fn eq(&self, other: &Partition) -> bool {
        self.0 == other.0
    }
}

impl From<Partition> for WeakComposition {
    fn from(p: Partition) -> Self {
        WeakComposition(p.0)
    }
}
