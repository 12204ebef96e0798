use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::ring::SchurExpansion;
use crate::shape::{foundation_values, Composition, Partition, SkewDiagram};
use crate::tableau::{lattice_fillings, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    IsSum,
    NotSum,
}

/// Whether `s_D` is supported on fat staircases, with proof either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatSumCertificate {
    pub shape: SkewDiagram,
    pub verdict: Verdict,
    /// `alpha(nu) -> c^rho_{kappa, nu}`, ordered like the Schur expansion
    /// (reverse lexicographic in `nu`). Empty unless the verdict is a sum.
    pub decomposition: Vec<(Composition, i64)>,
    /// A lattice filling whose content is not a fat staircase.
    pub witness: Option<Tableau>,
}

impl FatSumCertificate {
    pub fn is_sum(&self) -> bool {
        self.verdict == Verdict::IsSum
    }

    /// `sum c s_{delta_alpha}`; equals `s_D` for a sum.
    pub fn expansion(&self) -> SchurExpansion {
        let terms = self
            .decomposition
            .iter()
            .map(|(alpha, c)| (crate::shape::delta(alpha), *c));
        SchurExpansion::from_terms(terms).expect("one degree, small coefficients")
    }
}

fn fat_content(t: &Tableau) -> Option<Partition> {
    let content = t
        .content()
        .to_partition()
        .expect("lattice fillings have partition content");
    content.is_fat_staircase().then_some(content)
}

/// Runs through every lattice filling, stopping at the first content that
/// is not a fat staircase.
fn scan(d: &SkewDiagram) -> FatSumCertificate {
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for t in lattice_fillings(d) {
        match fat_content(&t) {
            Some(nu) => *counts.entry(nu).or_insert(0) += 1,
            None => {
                return FatSumCertificate {
                    shape: d.clone(),
                    verdict: Verdict::NotSum,
                    decomposition: Vec::new(),
                    witness: Some(t),
                }
            }
        }
    }
    let decomposition = counts
        .into_iter()
        .rev()
        .map(|(nu, c)| (nu.fat_staircase_composition().expect("checked fat"), c))
        .collect();
    FatSumCertificate {
        shape: d.clone(),
        verdict: Verdict::IsSum,
        decomposition,
        witness: None,
    }
}

fn distinct(lengths: &[usize]) -> bool {
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Decides whether `d` is a sum of fat staircases.
///
/// Two equal column lengths rule out a sum immediately, so in that case
/// only a witness is searched for; otherwise the lattice fillings are
/// tallied until one has a non-fat content.
pub fn classify_fat_sum(d: &SkewDiagram) -> FatSumCertificate {
    if !distinct(&d.column_lengths()) {
        let witness = lattice_fillings(d).find(|t| fat_content(t).is_none());
        if let Some(witness) = witness {
            return FatSumCertificate {
                shape: d.clone(),
                verdict: Verdict::NotSum,
                decomposition: Vec::new(),
                witness: Some(witness),
            };
        }
    }
    scan(d)
}

/// [`classify_fat_sum`] without the column-length shortcut, so the verdict
/// comes from the fillings alone.
pub fn classify_fat_sum_unfiltered(d: &SkewDiagram) -> FatSumCertificate {
    scan(d)
}

/// A sum of fat staircases has pairwise distinct column lengths. Returns
/// whether `d` is consistent with that (checked without the shortcut).
pub fn distinct_columns_necessary(d: &SkewDiagram) -> bool {
    !classify_fat_sum_unfiltered(d).is_sum() || distinct(&d.column_lengths())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnVerdict {
    /// The base diagram is not a sum, so no column extension is.
    BaseNotSum,
    /// Some decomposition term has `l(c)+1` or `i+1` in its foundation set,
    /// so the extension is not a sum.
    Obstructed,
    /// No term is hit. This does not make the extension a sum.
    NecessaryConditionsPass,
}

/// Membership of `l(c)+1` and `i+1` in `R_{alpha,1}` for one term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermCheck {
    pub alpha: Composition,
    pub length_hit: bool,
    pub depth_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnAddition {
    pub base: FatSumCertificate,
    pub extension: SkewDiagram,
    pub verdict: ColumnVerdict,
    pub terms: Vec<TermCheck>,
}

/// What the base diagram says about attaching a column of length `c_len`
/// at depth `depth` on the given side (`c ⊙_i D` on the left, `D ⊙_i c` on
/// the right).
pub fn check_column_addition(
    d: &SkewDiagram,
    c_len: usize,
    depth: usize,
    side: Side,
) -> Result<ColumnAddition> {
    let column = SkewDiagram::straight(Partition::column(c_len));
    let extension = match side {
        Side::Left => column.near_concat(d, depth)?,
        Side::Right => d.near_concat(&column, depth)?,
    };
    let base = classify_fat_sum(d);
    if !base.is_sum() {
        return Ok(ColumnAddition {
            base,
            extension,
            verdict: ColumnVerdict::BaseNotSum,
            terms: Vec::new(),
        });
    }
    let terms: Vec<TermCheck> = base
        .decomposition
        .iter()
        .map(|(alpha, _)| {
            let r = foundation_values(alpha, 1);
            TermCheck {
                alpha: alpha.clone(),
                length_hit: r.contains(c_len + 1),
                // Only proper partial sums obstruct: at depth 0 (a column
                // beside a box is s_21 + s_111) and at depth |alpha| (a
                // 2-column beside a box at depth 1 is s_21) the filling used
                // to rule out a sum has fat content.
                depth_hit: 0 < depth && depth < alpha.size() && r.contains(depth + 1),
            }
        })
        .collect();
    let verdict = if terms.iter().any(|t| t.length_hit || t.depth_hit) {
        ColumnVerdict::Obstructed
    } else {
        ColumnVerdict::NecessaryConditionsPass
    };
    Ok(ColumnAddition {
        base,
        extension,
        verdict,
        terms,
    })
}
