use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{map_ordered, Execution};
use crate::shape::{delta, Composition, Partition, SkewDiagram};

use super::classify::classify_fat_sum;

/// Which corner is cut from `delta_alpha`: a row `(m)` or a column `(1^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cut {
    Row,
    Column,
}

impl Cut {
    pub fn inner(self, m: usize) -> Partition {
        match self {
            Cut::Row => Partition::row(m),
            Cut::Column => Partition::column(m),
        }
    }

    /// Legal `m` for this cut of `delta_alpha`.
    pub fn range(self, alpha: &Composition) -> std::ops::Range<usize> {
        match self {
            Cut::Row => 1..alpha.len(),
            Cut::Column => 1..alpha.size(),
        }
    }

    pub fn predicate(self, alpha: &Composition, m: usize) -> Result<bool> {
        match self {
            Cut::Row => rowcut_predicate(alpha, m),
            Cut::Column => colcut_predicate(alpha, m),
        }
    }
}

/// `delta_alpha/(m)` is a sum of fat staircases iff `alpha_j > 1` for every
/// `j < l(alpha)`; requires `1 <= m < l(alpha)`.
pub fn rowcut_predicate(alpha: &Composition, m: usize) -> Result<bool> {
    if !Cut::Row.range(alpha).contains(&m) {
        return Err(Error::OutOfRange(format!(
            "row cut m = {m} needs 1 <= m < {}",
            alpha.len()
        )));
    }
    let parts = alpha.parts();
    Ok(parts[..parts.len() - 1].iter().all(|&a| a > 1))
}

/// `delta_alpha/(1^m)` is a sum of fat staircases iff no `j < l(alpha)` has
/// `alpha_j <= m <= |alpha| - alpha_{j+1}`; requires `1 <= m < |alpha|`.
pub fn colcut_predicate(alpha: &Composition, m: usize) -> Result<bool> {
    if !Cut::Column.range(alpha).contains(&m) {
        return Err(Error::OutOfRange(format!(
            "column cut m = {m} needs 1 <= m < {}",
            alpha.size()
        )));
    }
    let n = alpha.size();
    Ok(!alpha
        .parts()
        .windows(2)
        .any(|w| w[0] <= m && m <= n - w[1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutInstance {
    pub cut: Cut,
    pub alpha: Composition,
    pub m: usize,
    pub predicate: bool,
    pub classified: bool,
}

impl CutInstance {
    pub fn agrees(&self) -> bool {
        self.predicate == self.classified
    }

    pub fn shape(&self) -> SkewDiagram {
        SkewDiagram::new(delta(&self.alpha), self.cut.inner(self.m)).expect("m in range")
    }
}

/// Predicate against classifier for every composition of size at most
/// `max_size` and every legal `m`, in order of `|alpha|`, then `alpha`
/// lexicographically, then `m`.
pub fn verify_cut(cut: Cut, max_size: usize, exec: Execution) -> Vec<CutInstance> {
    let cases: Vec<(Composition, usize)> = (1..=max_size)
        .flat_map(Composition::all_of)
        .flat_map(|alpha| cut.range(&alpha).map(move |m| (alpha.clone(), m)))
        .collect();
    map_ordered(cases, exec, |(alpha, m)| {
        let predicate = cut.predicate(&alpha, m).expect("m in range");
        let shape = SkewDiagram::new(delta(&alpha), cut.inner(m)).expect("m in range");
        CutInstance {
            cut,
            classified: classify_fat_sum(&shape).is_sum(),
            alpha,
            m,
            predicate,
        }
    })
}

/// Both cut theorems up to `max_size`.
pub fn verify_cut_theorems(max_size: usize, exec: Execution) -> Vec<CutInstance> {
    let mut out = verify_cut(Cut::Row, max_size, exec);
    out.extend(verify_cut(Cut::Column, max_size, exec));
    out
}
