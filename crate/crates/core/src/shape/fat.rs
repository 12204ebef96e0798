//! Fat staircases and the staircase-with-foundation construction.

use std::collections::BTreeSet;

use serde::Serialize;

use super::diagram::SkewDiagram;
use super::partition::{Composition, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// The partition `delta(alpha)` itself.
    Lower,
    /// Its 180 degree rotation.
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FatStaircase {
    pub alpha: Composition,
    pub orientation: Orientation,
}

impl FatStaircase {
    pub fn lower(alpha: Composition) -> Self {
        FatStaircase {
            alpha,
            orientation: Orientation::Lower,
        }
    }

    pub fn upper(alpha: Composition) -> Self {
        FatStaircase {
            alpha,
            orientation: Orientation::Upper,
        }
    }

    pub fn diagram(&self) -> SkewDiagram {
        match self.orientation {
            Orientation::Lower => SkewDiagram::straight(delta(&self.alpha)),
            Orientation::Upper => delta_rotated(&self.alpha),
        }
    }
}

/// `(n^{a_n}, (n-1)^{a_{n-1}}, ..., 1^{a_1})` with `n = l(a)`.
///
/// Width is `l(a)` and length `|a|`; the empty composition gives the empty
/// partition.
pub fn delta(alpha: &Composition) -> Partition {
    let n = alpha.len();
    let parts = alpha
        .parts()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, &mult)| std::iter::repeat_n(i + 1, mult))
        .collect::<Vec<_>>();
    debug_assert_eq!(parts.first().copied().unwrap_or(0), n);
    Partition::from_sorted(parts)
}

/// The rotated fat staircase as `(n^{|a|}) / (n - r_1, n - r_2, ...)`, where
/// `r_1 <= r_2 <= ...` are the row lengths of `delta(a)` read bottom up.
pub fn delta_rotated(alpha: &Composition) -> SkewDiagram {
    let n = alpha.len();
    let rows = delta(alpha);
    let inner = rows.parts().iter().rev().map(|&r| n - r).collect();
    SkewDiagram::new(
        Partition::rectangle(alpha.size(), n),
        Partition::from_sorted(inner),
    )
    .expect("rotated fat staircase is a skew diagram")
}

/// The composition whose fat staircase is the complement of `delta(alpha)`
/// in the rectangle of `|alpha|` rows and `width` columns.
///
/// `width` must be `l(alpha)` (drop the last part, then reverse) or
/// `l(alpha) + 1` (reverse).
pub fn reverse_composition(alpha: &Composition, width: usize) -> Result<Composition> {
    let n = alpha.len();
    let parts = alpha.parts();
    let reversed: Vec<usize> = if width == n + 1 {
        parts.iter().rev().copied().collect()
    } else if width == n && n > 0 {
        parts[..n - 1].iter().rev().copied().collect()
    } else {
        return Err(Error::OutOfRange(format!(
            "rectangle width {width} for a composition of length {n} (expected {n} or {})",
            n + 1
        )));
    };
    Composition::new(reversed)
}

/// Values allowed in the first foundation row of a lattice filling of a
/// fat staircase with foundation shifted `k` boxes left.
///
/// `1` may repeat up to `k` times; every other value at most once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundationValues {
    pub values: BTreeSet<usize>,
    pub max_ones: usize,
}

impl FoundationValues {
    pub fn contains(&self, v: usize) -> bool {
        self.values.contains(&v)
    }

    /// How many times `v` may appear in that first row.
    pub fn max_multiplicity(&self, v: usize) -> usize {
        match (v, self.values.contains(&v)) {
            (_, false) => 0,
            (1, true) => self.max_ones,
            _ => 1,
        }
    }
}

/// `{1 + a_n + a_{n-1} + ... + a_{n+1-j} : j = 1..n}`, plus `1` when `k > 0`.
pub fn foundation_values(alpha: &Composition, k: usize) -> FoundationValues {
    let mut values: BTreeSet<usize> = alpha
        .parts()
        .iter()
        .rev()
        .scan(1, |acc, &a| {
            *acc += a;
            Some(*acc)
        })
        .collect();
    if k > 0 {
        values.insert(1);
    }
    FoundationValues {
        values,
        max_ones: k,
    }
}

/// Places `lambda/mu` directly below `top` so the first foundation row starts
/// one row below and `k` columns left of the bottom-left box of `top`.
///
/// The rows then overlap in `lambda_1 - mu_1 - k` positions, which must lie
/// between 0 and the length of the bottom row of `top`. An empty foundation
/// returns `top` unchanged.
pub fn with_foundation(
    lambda: &Partition,
    mu: &Partition,
    top: &SkewDiagram,
    k: usize,
) -> Result<SkewDiagram> {
    let foundation = SkewDiagram::new(lambda.clone(), mu.clone())?;
    if foundation.is_empty() {
        return Ok(top.clone());
    }
    if top.is_empty() {
        let cells: Vec<(i64, i64)> = foundation
            .cells()
            .into_iter()
            .map(|(r, c)| (r as i64, c as i64))
            .collect();
        return SkewDiagram::from_cells(&cells);
    }
    let overlap = lambda.first() as i64 - mu.first() as i64 - k as i64;
    let last_row = top.last_row_length();
    if overlap < 0 || overlap > last_row as i64 {
        return Err(Error::Overlap { overlap, last_row });
    }
    let (bl_r, bl_c) = top.bottom_left().expect("non-empty");
    let row0 = bl_r as i64 + 1;
    let col0 = bl_c as i64 - k as i64 - mu.first() as i64;
    let mut cells: Vec<(i64, i64)> = top
        .cells()
        .into_iter()
        .map(|(r, c)| (r as i64, c as i64))
        .collect();
    for r in 0..lambda.len() {
        for c in mu.part(r)..lambda.part(r) {
            cells.push((row0 + r as i64, col0 + c as i64));
        }
    }
    SkewDiagram::from_cells(&cells)
}
