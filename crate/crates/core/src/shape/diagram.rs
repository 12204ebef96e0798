use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::fat::{delta, delta_rotated};
use super::partition::{Composition, Partition};
use super::MAX_BOXES;
use crate::error::{Error, Result};

/// A skew diagram `outer/inner`.
///
/// Empty rows at the top and bottom are dropped on construction; beyond that
/// equality is literal on the `(outer, inner)` pair, so two drawings of the
/// same box pattern at different horizontal offsets are different values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        let size = outer.size() - inner.size();
        if outer.size() > MAX_BOXES {
            return Err(Error::TooLarge(outer.size()));
        }
        if size == 0 {
            return Ok(SkewDiagram::default());
        }
        let mut o = outer.into_parts();
        let mut i = inner.into_parts();
        i.resize(o.len(), 0);
        let top = (0..o.len()).find(|&r| o[r] > i[r]).unwrap_or(0);
        let bottom = (0..o.len()).rev().find(|&r| o[r] > i[r]).unwrap_or(0);
        o.truncate(bottom + 1);
        i.truncate(bottom + 1);
        o.drain(..top);
        i.drain(..top);
        Ok(SkewDiagram {
            outer: Partition::from_sorted(o),
            inner: Partition::from_sorted(i),
        })
    }

    /// The Ferrers diagram of `p`.
    pub fn straight(p: Partition) -> Self {
        SkewDiagram {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn empty() -> Self {
        SkewDiagram::default()
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of rows, counting any empty rows strictly inside the diagram.
    pub fn height(&self) -> usize {
        self.outer.len()
    }

    /// `[start, end)` column span of row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    /// Leftmost occupied column.
    pub fn min_col(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        self.inner.part(self.height() - 1)
    }

    /// Number of distinct occupied columns.
    pub fn width(&self) -> usize {
        self.column_lengths().len()
    }

    /// Boxes in row-major order (top row first, left to right).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.height())
            .flat_map(|r| {
                let (a, b) = self.row_span(r);
                (a..b).map(move |c| (r, c))
            })
            .collect()
    }

    /// Lengths of the non-empty rows, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.height())
            .map(|r| self.outer.part(r) - self.inner.part(r))
            .filter(|&l| l > 0)
            .collect()
    }

    /// Lengths of the non-empty columns, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        (self.min_col()..self.outer.first())
            .map(|c| self.column_length(c))
            .filter(|&l| l > 0)
            .collect()
    }

    fn column_length(&self, c: usize) -> usize {
        (0..self.height())
            .filter(|&r| {
                let (a, b) = self.row_span(r);
                a <= c && c < b
            })
            .count()
    }

    pub fn first_column_length(&self) -> usize {
        self.column_lengths().first().copied().unwrap_or(0)
    }

    pub fn last_column_length(&self) -> usize {
        self.column_lengths().last().copied().unwrap_or(0)
    }

    /// Length of the bottom row of the drawn diagram.
    pub fn last_row_length(&self) -> usize {
        self.row_lengths().last().copied().unwrap_or(0)
    }

    /// Leftmost box of the bottom row.
    pub fn bottom_left(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        let r = self.height() - 1;
        Some((r, self.inner.part(r)))
    }

    /// Rightmost box of the top row.
    pub fn top_right(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        Some((0, self.outer.first() - 1))
    }

    /// Normalizes an arbitrary box set into a skew diagram whose topmost row
    /// and leftmost column are both 0.
    pub fn from_cells(cells: &[(i64, i64)]) -> Result<Self> {
        if cells.is_empty() {
            return Ok(SkewDiagram::empty());
        }
        let min_r = cells.iter().map(|c| c.0).min().unwrap();
        let min_c = cells.iter().map(|c| c.1).min().unwrap();
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(r, c) in cells {
            rows.entry((r - min_r) as usize)
                .or_default()
                .push((c - min_c) as usize);
        }
        let height = *rows.keys().next_back().unwrap() + 1;
        let mut spans = vec![None; height];
        for (r, mut cols) in rows {
            cols.sort_unstable();
            let len = cols.len();
            cols.dedup();
            if cols.len() != len {
                return Err(Error::NotSkew("a box is used twice".into()));
            }
            if cols[len - 1] - cols[0] + 1 != len {
                return Err(Error::NotSkew(format!("row {r} has a gap")));
            }
            spans[r] = Some((cols[0], cols[len - 1] + 1));
        }
        // An empty row strictly inside takes the end column of the row below.
        let mut outer = vec![0; height];
        let mut inner = vec![0; height];
        for r in (0..height).rev() {
            let (a, b) = spans[r].unwrap_or_else(|| (outer[r + 1], outer[r + 1]));
            inner[r] = a;
            outer[r] = b;
        }
        if outer.windows(2).any(|w| w[0] < w[1]) || inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSkew(format!(
                "row spans {:?} do not shift weakly left going down",
                inner.iter().zip(&outer).collect::<Vec<_>>()
            )));
        }
        SkewDiagram::new(Partition::new(outer)?, Partition::new(inner)?)
    }

    fn signed_cells(&self) -> Vec<(i64, i64)> {
        self.cells()
            .into_iter()
            .map(|(r, c)| (r as i64, c as i64))
            .collect()
    }

    /// The 180 degree rotation.
    pub fn rotate180(&self) -> SkewDiagram {
        if self.is_empty() {
            return SkewDiagram::empty();
        }
        let w = self.outer.first();
        let h = self.height();
        let outer = (0..h).map(|i| w - self.inner.part(h - 1 - i)).collect();
        let inner = (0..h).map(|i| w - self.outer.part(h - 1 - i)).collect();
        SkewDiagram::new(Partition::from_sorted(outer), Partition::from_sorted(inner))
            .expect("rotation of a skew diagram is a skew diagram")
    }

    /// Near-concatenation of depth `depth`: `self` goes to the lower left of
    /// `right`, its top-right box one step left of and `depth - 1` steps above
    /// the bottom-left box of `right`. Depth 0 is the direct sum.
    pub fn near_concat(&self, right: &SkewDiagram, depth: usize) -> Result<SkewDiagram> {
        let left_col = self.last_column_length();
        let right_col = right.first_column_length();
        if depth > left_col || depth > right_col {
            return Err(Error::Depth {
                depth,
                left: left_col,
                right: right_col,
            });
        }
        if self.is_empty() {
            return Ok(right.clone());
        }
        if right.is_empty() {
            return Ok(self.clone());
        }
        let (tr_r, tr_c) = self.top_right().unwrap();
        let (bl_r, bl_c) = right.bottom_left().unwrap();
        let target_r = bl_r as i64 - (depth as i64 - 1);
        let target_c = bl_c as i64 - 1;
        let dr = target_r - tr_r as i64;
        let dc = target_c - tr_c as i64;
        let mut cells = right.signed_cells();
        cells.extend(self.signed_cells().into_iter().map(|(r, c)| (r + dr, c + dc)));
        SkewDiagram::from_cells(&cells)
    }

    /// `self ⊕ right`: `self` strictly below and to the left of `right`.
    pub fn direct_sum(&self, right: &SkewDiagram) -> SkewDiagram {
        self.near_concat(right, 0)
            .expect("depth 0 is always feasible")
    }

    /// Connected under up/down/left/right steps. The empty diagram counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        (0..self.height()).all(|r| self.outer.part(r) > self.inner.part(r))
            && (1..self.height()).all(|r| self.inner.part(r - 1) < self.outer.part(r))
    }
}

impl From<Partition> for SkewDiagram {
    fn from(p: Partition) -> Self {
        SkewDiagram::straight(p)
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Accepts `outer/inner`, a bare `outer`, `^a,b,..` for the fat staircase
/// partition of a composition and `^^a,b,..` for its rotation.
impl FromStr for SkewDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("^^") {
            let alpha: Composition = rest.parse()?;
            return Ok(delta_rotated(&alpha));
        }
        if let Some(rest) = s.strip_prefix('^') {
            let alpha: Composition = rest.parse()?;
            return Ok(SkewDiagram::straight(delta(&alpha)));
        }
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o.parse::<Partition>()?, i.parse::<Partition>()?),
            None => (s.parse::<Partition>()?, Partition::empty()),
        };
        SkewDiagram::new(outer, inner).map_err(|e| Error::Parse(e.to_string()))
    }
}
