use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shape::Partition;

/// A finite integer combination of Schur functions, all of one degree.
///
/// Zero coefficients are never stored. Iteration and text output run in
/// reverse lexicographic order of the indexing partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    /// `s_p`.
    pub fn basis(p: Partition) -> Self {
        SchurExpansion {
            terms: BTreeMap::from([(p, 1)]),
        }
    }

    /// `s_empty`, the unit.
    pub fn one() -> Self {
        SchurExpansion::basis(Partition::empty())
    }

    /// Sums repeated partitions; rejects mixed degrees.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut out = SchurExpansion::zero();
        for (p, c) in terms {
            out.add_term(p, c)?;
        }
        Ok(out)
    }

    /// Builds from non-negative counts known to share one degree.
    pub(crate) fn from_counts(counts: BTreeMap<Partition, u64>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (p, c) in counts {
            if c > 0 {
                terms.insert(p, i64::try_from(c).map_err(|_| Error::Overflow)?);
            }
        }
        let out = SchurExpansion { terms };
        debug_assert!(out.check_homogeneous().is_ok());
        Ok(out)
    }

    fn check_homogeneous(&self) -> Result<()> {
        let mut sizes = self.terms.keys().map(Partition::size);
        if let Some(first) = sizes.next() {
            if let Some(other) = sizes.find(|&s| s != first) {
                return Err(Error::DegreeMismatch(first, other));
            }
        }
        Ok(())
    }

    /// Adds `c * s_p` in place.
    pub fn add_term(&mut self, p: Partition, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        if let Some(d) = self.degree() {
            if d != p.size() {
                return Err(Error::DegreeMismatch(d, p.size()));
            }
        }
        let slot = self.terms.entry(p).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    /// Common size of the indexing partitions; `None` for the zero expansion.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
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

    /// `[s_p] f`.
    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in reverse lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn add(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::zero();
        for (p, c) in self.terms() {
            out.add_term(p.clone(), c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// Bilinear extension of the product of Schur functions.
    pub fn multiply(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::zero();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                let ab = a.checked_mul(b).ok_or(Error::Overflow)?;
                for (r, c) in super::schur_product(p, q)?.terms() {
                    out.add_term(r.clone(), c.checked_mul(ab).ok_or(Error::Overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Every coefficient is non-negative (the zero expansion qualifies).
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// `c(f)` in the rectangle `(cols^rows)`: drop every `s_nu` with `nu` not
    /// inside the rectangle and send the rest to `s_{nu^c}`.
    pub fn truncated_complement(&self, rows: usize, cols: usize) -> SchurExpansion {
        let terms = self
            .terms
            .iter()
            .filter(|(nu, _)| nu.fits_in_rectangle(rows, cols))
            .map(|(nu, &c)| {
                let comp = nu
                    .complement_in_rectangle(rows, cols)
                    .expect("fits in the rectangle");
                (comp, c)
            })
            .collect();
        SchurExpansion { terms }
    }
}

/// `c*[p1] + c*[p2] + ...`, or `0` for the zero expansion.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let parts = p
                .parts()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "{c}*[{parts}]")?;
        }
        Ok(())
    }
}

impl FromStr for SchurExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SchurExpansion::zero());
        }
        let mut out = SchurExpansion::zero();
        for term in s.split(" + ") {
            let bad = || Error::Parse(format!("bad expansion term {term:?}"));
            let (c, p) = term.trim().split_once('*').ok_or_else(bad)?;
            let c: i64 = c.trim().parse().map_err(|_| bad())?;
            let p = p
                .trim()
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(bad)?;
            let p: Partition = if p.is_empty() { Partition::empty() } else { p.parse()? };
            out.add_term(p, c).map_err(|e| Error::Parse(e.to_string()))?;
        }
        Ok(out)
    }
}

struct Term<'a>(&'a Partition, i64);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 2)?;
        st.serialize_field("partition", self.0)?;
        st.serialize_field("coeff", &self.1)?;
        st.end()
    }
}

/// JSON array of `{"partition": [...], "coeff": n}`, same order as the text.
impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (p, c) in self.terms() {
            seq.serialize_element(&Term(p, c))?;
        }
        seq.end()
    }
}
