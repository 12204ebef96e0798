//! Exhaustive checks of the theorems and identities over small instances.
//!
//! Every sweep builds its full instance list up front, evaluates the
//! instances through [`crate::exec`] and returns the outcomes in instance
//! order, so sequential and parallel runs produce identical reports.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{partitions_in_box, partitions_of, skew_diagrams_up_to, subpartitions};
use crate::error::{Error, Result};
use crate::exec::{map_ordered, Execution};
use crate::ring::{pieri_col, pieri_row, schur_product, skew_schur};
use crate::shape::{
    delta_rotated, foundation_values, with_foundation, Composition, Partition, SkewDiagram,
};
use crate::staircase::{
    check_column_addition, check_sum_of_diff, check_sum_of_fat_inequality,
    check_transpose_positivity, classify_fat_sum, classify_fat_sum_unfiltered, verify_cut,
    ColumnVerdict, Cut, Side,
};
use crate::tableau::{lattice_fillings, lr_coefficient, Tableau};

/// Result of one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub instance: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub outcomes: Vec<Outcome>,
    /// Instances generated but outside the statement's hypotheses.
    pub skipped: usize,
}

impl SweepReport {
    fn new(name: &str, outcomes: Vec<Option<Outcome>>) -> Self {
        let skipped = outcomes.iter().filter(|o| o.is_none()).count();
        SweepReport {
            name: name.to_string(),
            outcomes: outcomes.into_iter().flatten().collect(),
            skipped,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.ok)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn is_clean(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances, {} failures, {} skipped",
            self.name,
            self.outcomes.len(),
            self.failure_count(),
            self.skipped
        )
    }
}

fn outcome(instance: String, ok: bool, detail: impl Into<String>) -> Option<Outcome> {
    Some(Outcome {
        instance,
        ok,
        detail: detail.into(),
    })
}

/// The theorems exposed by the command-line `sweep`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Tttttt,
    Rowcut,
    Colcut,
    Sumoffat,
    Transpose,
    Sumofdiff,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Tttttt,
        Theorem::Rowcut,
        Theorem::Colcut,
        Theorem::Sumoffat,
        Theorem::Transpose,
        Theorem::Sumofdiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Tttttt => "tttttt",
            Theorem::Rowcut => "rowcut",
            Theorem::Colcut => "colcut",
            Theorem::Sumoffat => "sumoffat",
            Theorem::Transpose => "transpose",
            Theorem::Sumofdiff => "sumofdiff",
        }
    }

    /// Size bound used when none is given.
    pub fn default_max_size(self) -> usize {
        match self {
            Theorem::Tttttt => 10,
            Theorem::Rowcut => 7,
            Theorem::Colcut => 6,
            Theorem::Sumoffat => 8,
            Theorem::Transpose => 5,
            Theorem::Sumofdiff => 8,
        }
    }

    pub fn run(self, max_size: usize, exec: Execution) -> SweepReport {
        match self {
            Theorem::Tttttt => distinct_columns(max_size, exec),
            Theorem::Rowcut => cut_theorem(Cut::Row, max_size, exec),
            Theorem::Colcut => cut_theorem(Cut::Column, max_size, exec),
            Theorem::Sumoffat => sum_of_fat(max_size, 4, exec),
            Theorem::Transpose => transpose(max_size, 4, exec),
            Theorem::Sumofdiff => sum_of_diff(max_size, exec),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

/// A sum of fat staircases has distinct column lengths; every diagram with
/// at most `max_boxes` boxes, classified from its fillings alone.
pub fn distinct_columns(max_boxes: usize, exec: Execution) -> SweepReport {
    let outcomes = map_ordered(skew_diagrams_up_to(max_boxes), exec, |d| {
        let cert = classify_fat_sum_unfiltered(&d);
        let cols = d.column_lengths();
        let mut sorted = cols.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let distinct = sorted.len() == cols.len();
        let verdict = if cert.is_sum() { "is_sum" } else { "not_sum" };
        outcome(
            d.to_string(),
            !cert.is_sum() || distinct,
            format!("{verdict} columns={cols:?}"),
        )
    });
    SweepReport::new("tttttt", outcomes)
}

pub fn cut_theorem(cut: Cut, max_size: usize, exec: Execution) -> SweepReport {
    let name = match cut {
        Cut::Row => "rowcut",
        Cut::Column => "colcut",
    };
    let outcomes = verify_cut(cut, max_size, exec)
        .into_iter()
        .map(|inst| {
            outcome(
                format!("alpha={} m={}", inst.alpha, inst.m),
                inst.agrees(),
                format!("predicate={} classified={}", inst.predicate, inst.classified),
            )
        })
        .collect();
    SweepReport::new(name, outcomes)
}

/// Sums of fat staircases among all diagrams with at most `max_boxes` boxes.
fn sums_up_to(max_boxes: usize, exec: Execution) -> Vec<SkewDiagram> {
    let all = skew_diagrams_up_to(max_boxes);
    let verdicts = map_ordered(all.clone(), exec, |d| classify_fat_sum(&d).is_sum());
    all.into_iter()
        .zip(verdicts)
        .filter_map(|(d, s)| s.then_some(d))
        .collect()
}

/// Every straight-shape foundation `lambda` fits under `d` and all of its
/// fat staircase terms at offset `k`.
fn foundation_fits(lambda: &Partition, d: &SkewDiagram, k: usize) -> bool {
    if lambda.is_empty() {
        return true;
    }
    let overlap = lambda.first() as i64 - k as i64;
    if overlap < 0 || overlap > d.last_row_length() as i64 {
        return false;
    }
    let cert = classify_fat_sum(d);
    cert.decomposition
        .iter()
        .all(|(alpha, _)| overlap <= alpha.len() as i64)
}

/// `s_{S(lambda, D; k)} <=_s sum c s_{S(lambda, alpha(nu); k)}` for every
/// sum `D` with at most `max_boxes` boxes, `|lambda| <= max_lambda` and
/// `k` in `{0, 1, 2}`.
pub fn sum_of_fat(max_boxes: usize, max_lambda: usize, exec: Execution) -> SweepReport {
    let lambdas: Vec<Partition> = (0..=max_lambda).flat_map(partitions_of).collect();
    let mut cases = Vec::new();
    for d in sums_up_to(max_boxes, exec) {
        for lambda in &lambdas {
            for k in 0..=2 {
                cases.push((d.clone(), lambda.clone(), k));
            }
        }
    }
    let empty = Partition::empty();
    let outcomes = map_ordered(cases, exec, |(d, lambda, k)| {
        if !foundation_fits(&lambda, &d, k) {
            return None;
        }
        let instance = format!("D={d} lambda={lambda} k={k}");
        match check_sum_of_fat_inequality(&lambda, &empty, &d, k) {
            Ok(r) => outcome(instance, r.positive, format!("difference={}", r.difference)),
            Err(e) => outcome(instance, false, e.to_string()),
        }
    });
    SweepReport::new("sumoffat", outcomes)
}

/// `s_{S(lambda^t, alpha; k)} - s_{S(lambda, alpha; k)} >=_s 0` for single
/// rows `lambda_1 <= max_row`, `|alpha| <= max_alpha`, `k` in `{0, 1}`.
pub fn transpose(max_alpha: usize, max_row: usize, exec: Execution) -> SweepReport {
    let mut cases = Vec::new();
    for alpha in (1..=max_alpha).flat_map(Composition::all_of) {
        for row in 1..=max_row {
            for k in 0..=1 {
                cases.push((alpha.clone(), row, k));
            }
        }
    }
    let outcomes = map_ordered(cases, exec, |(alpha, row, k)| {
        if row > alpha.len() + k {
            return None;
        }
        let instance = format!("lambda={row} alpha={alpha} k={k}");
        match check_transpose_positivity(&Partition::row(row), &alpha, k) {
            Ok(r) => outcome(instance, r.positive, format!("difference={}", r.difference)),
            Err(e) => outcome(instance, false, e.to_string()),
        }
    });
    SweepReport::new("transpose", outcomes)
}

/// The layered difference inequality and the transposed identity for every
/// sum `D` with at most `max_boxes` boxes and every single row `lambda`
/// with `lambda_1 - 1` at most the last row of `D` and of each term.
pub fn sum_of_diff(max_boxes: usize, exec: Execution) -> SweepReport {
    let mut cases = Vec::new();
    for d in sums_up_to(max_boxes, exec) {
        for row in 1..=d.last_row_length() + 1 {
            cases.push((d.clone(), row));
        }
    }
    let outcomes = map_ordered(cases, exec, |(d, row)| {
        if !foundation_fits(&Partition::row(row), &d, 1) {
            return None;
        }
        let instance = format!("D={d} lambda={row}");
        match check_sum_of_diff(&Partition::row(row), &d) {
            Ok(r) => outcome(
                instance,
                r.holds(),
                format!(
                    "outer-middle={} middle={} identity={}",
                    r.outer_minus_middle, r.middle, r.transposed_identity
                ),
            ),
            Err(e) => outcome(instance, false, e.to_string()),
        }
    });
    SweepReport::new("sumofdiff", outcomes)
}

/// `s_D = s_{D rotated}` for every diagram with at most `max_boxes` boxes.
pub fn rotation(max_boxes: usize, exec: Execution) -> SweepReport {
    let outcomes = map_ordered(skew_diagrams_up_to(max_boxes), exec, |d| {
        let r = d.rotate180();
        outcome(format!("D={d}"), skew_schur(&d) == skew_schur(&r), format!("rotated={r}"))
    });
    SweepReport::new("rotate", outcomes)
}

/// `s_{D1 + D2} = s_{D1} s_{D2}` for `|D1| + |D2| <= max_boxes`.
pub fn direct_sum(max_boxes: usize, exec: Execution) -> SweepReport {
    let all = skew_diagrams_up_to(max_boxes.saturating_sub(1));
    let mut cases = Vec::new();
    for a in &all {
        for b in &all {
            if a.size() + b.size() <= max_boxes {
                cases.push((a.clone(), b.clone()));
            }
        }
    }
    let outcomes = map_ordered(cases, exec, |(a, b)| {
        let whole = skew_schur(&a.direct_sum(&b));
        let ok = skew_schur(&a)
            .multiply(&skew_schur(&b))
            .map(|prod| prod == whole)
            .unwrap_or(false);
        outcome(format!("D1={a} D2={b}"), ok, "")
    });
    SweepReport::new("disjprod", outcomes)
}

/// `s_{rho/kappa} = c(s_kappa s_{rho^c})` in every rectangle `(b^a)` with
/// `ab <= max_area`, for all `kappa ⊆ rho ⊆ (b^a)`.
pub fn rectangle_complement(max_area: usize, exec: Execution) -> SweepReport {
    let mut cases = Vec::new();
    for a in 1..=max_area {
        for b in 1..=max_area / a {
            for n in 0..=a * b {
                for rho in partitions_in_box(n, a, b) {
                    for kappa in subpartitions(&rho) {
                        cases.push((a, b, rho.clone(), kappa));
                    }
                }
            }
        }
    }
    let outcomes = map_ordered(cases, exec, |(a, b, rho, kappa)| {
        let direct = skew_schur(&SkewDiagram::new(rho.clone(), kappa.clone()).expect("kappa ⊆ rho"));
        let comp = rho.complement_in_rectangle(a, b).expect("rho fits");
        let ok = schur_product(&kappa, &comp)
            .map(|f| f.truncated_complement(a, b) == direct)
            .unwrap_or(false);
        outcome(format!("rect={b}^{a} rho={rho} kappa={kappa}"), ok, "")
    });
    SweepReport::new("rectcor", outcomes)
}

/// Pieri strips against LR products for `|lambda| + m <= max_size`.
pub fn pieri(max_size: usize, exec: Execution) -> SweepReport {
    let mut cases = Vec::new();
    for size in 0..=max_size {
        for lambda in partitions_of(size) {
            for m in 0..=max_size - size {
                cases.push((lambda.clone(), m));
            }
        }
    }
    let outcomes = map_ordered(cases, exec, |(lambda, m)| {
        let row = schur_product(&lambda, &Partition::row(m)).map(|f| f == pieri_row(&lambda, m));
        let col = schur_product(&lambda, &Partition::column(m)).map(|f| f == pieri_col(&lambda, m));
        outcome(
            format!("lambda={lambda} m={m}"),
            row == Ok(true) && col == Ok(true),
            "",
        )
    });
    SweepReport::new("pieri", outcomes)
}

/// `c^lambda_{mu,nu} = c^lambda_{nu,mu}` for all `|lambda| <= max_size`.
pub fn lr_symmetry(max_size: usize, exec: Execution) -> SweepReport {
    let mut cases = Vec::new();
    for size in 0..=max_size {
        for lambda in partitions_of(size) {
            for mu in subpartitions(&lambda) {
                for nu in partitions_of(size - mu.size()) {
                    if mu <= nu {
                        cases.push((lambda.clone(), mu.clone(), nu));
                    }
                }
            }
        }
    }
    let outcomes = map_ordered(cases, exec, |(lambda, mu, nu)| {
        let a = lr_coefficient(&lambda, &mu, &nu);
        let b = lr_coefficient(&lambda, &nu, &mu);
        outcome(format!("lambda={lambda} mu={mu} nu={nu}"), a == b, format!("{a} vs {b}"))
    });
    SweepReport::new("lr-symmetry", outcomes)
}

/// Two columns of distinct lengths `a` (left) and `b` (right), connected,
/// with at most `max_boxes` boxes, in every relative position.
fn two_column_diagrams(max_boxes: usize) -> Vec<SkewDiagram> {
    let mut out = Vec::new();
    for a in 1..max_boxes {
        for b in 1..=max_boxes - a {
            if a == b {
                continue;
            }
            // right column occupies rows [s, s + b) with 1 - b <= s <= min(0, a - b)
            let lo = 1 - b as i64;
            let hi = 0.min(a as i64 - b as i64);
            for s in lo..=hi {
                let mut cells: Vec<(i64, i64)> = (0..a as i64).map(|r| (r, 0)).collect();
                cells.extend((s..s + b as i64).map(|r| (r, 1)));
                out.push(SkewDiagram::from_cells(&cells).expect("two stacked columns"));
            }
        }
    }
    out
}

/// A connected two-column diagram with distinct column lengths is a sum.
pub fn two_column(max_boxes: usize, exec: Execution) -> SweepReport {
    let outcomes = map_ordered(two_column_diagrams(max_boxes), exec, |d| {
        let cert = classify_fat_sum(&d);
        outcome(format!("D={d}"), d.is_connected() && cert.is_sum(), "")
    });
    SweepReport::new("two-column", outcomes)
}

/// Contiguous column windows of `d` (the connected column deletions of a
/// connected diagram), excluding `d` itself.
fn column_windows(d: &SkewDiagram) -> Vec<SkewDiagram> {
    let cells = d.cells();
    let width = d.width();
    let left = d.min_col();
    let mut out = Vec::new();
    for a in 0..width {
        for b in a..width {
            if a == 0 && b == width - 1 {
                continue;
            }
            let kept: Vec<(i64, i64)> = cells
                .iter()
                .filter(|&&(_, c)| (left + a..=left + b).contains(&c))
                .map(|&(r, c)| (r as i64, c as i64))
                .collect();
            out.push(SkewDiagram::from_cells(&kept).expect("column window"));
        }
    }
    out
}

/// Removing columns from a connected sum leaves a sum.
pub fn column_deletion(max_boxes: usize, exec: Execution) -> SweepReport {
    let sums: Vec<SkewDiagram> = sums_up_to(max_boxes, exec)
        .into_iter()
        .filter(SkewDiagram::is_connected)
        .collect();
    let outcomes = map_ordered(sums, exec, |d| {
        let bad: Vec<String> = column_windows(&d)
            .into_iter()
            .filter(|w| w.is_connected() && !classify_fat_sum(w).is_sum())
            .map(|w| w.to_string())
            .collect();
        outcome(format!("D={d}"), bad.is_empty(), bad.join(" "))
    });
    SweepReport::new("issumcor", outcomes)
}

/// Adding a column to a non-sum never gives a sum, and an extension that is
/// a sum never trips the foundation-set obstruction.
pub fn column_addition(max_boxes: usize, exec: Execution) -> SweepReport {
    let mut cases = Vec::new();
    for d in skew_diagrams_up_to(max_boxes.saturating_sub(1)) {
        for len in 1..=max_boxes - d.size() {
            for side in [Side::Left, Side::Right] {
                let touching = match side {
                    Side::Left => d.first_column_length(),
                    Side::Right => d.last_column_length(),
                };
                for depth in 0..=len.min(touching) {
                    cases.push((d.clone(), len, depth, side));
                }
            }
        }
    }
    let outcomes = map_ordered(cases, exec, |(d, len, depth, side)| {
        let instance = format!("D={d} c={len} depth={depth} side={side:?}");
        let res = match check_column_addition(&d, len, depth, side) {
            Ok(res) => res,
            Err(e) => return outcome(instance, false, e.to_string()),
        };
        let extension_is_sum = classify_fat_sum(&res.extension).is_sum();
        let ok = match res.verdict {
            ColumnVerdict::BaseNotSum | ColumnVerdict::Obstructed => !extension_is_sum,
            ColumnVerdict::NecessaryConditionsPass => true,
        };
        outcome(instance, ok, format!("{:?} extension_is_sum={extension_is_sum}", res.verdict))
    });
    SweepReport::new("addonecol", outcomes)
}

/// Foundations `lambda/mu` with a non-empty first row under `Delta_alpha`,
/// for every offset with overlap in `[0, l(alpha)]`.
fn foundation_cases(max_alpha: usize, max_lambda: usize) -> Vec<(Composition, Partition, Partition, usize)> {
    let mut cases = Vec::new();
    for alpha in (1..=max_alpha).flat_map(Composition::all_of) {
        for lambda in (1..=max_lambda).flat_map(partitions_of) {
            for mu in subpartitions(&lambda) {
                if mu.first() == lambda.first() {
                    continue;
                }
                let width = lambda.first() - mu.first();
                for k in width.saturating_sub(alpha.len())..=width {
                    cases.push((alpha.clone(), lambda.clone(), mu.clone(), k));
                }
            }
        }
    }
    cases
}

/// First foundation row of every lattice filling of `S(lambda, mu, alpha; k)`
/// takes values in `R_{alpha,k}`, `1` at most `k` times, others at most once.
pub fn foundation_first_row(max_alpha: usize, max_lambda: usize, exec: Execution) -> SweepReport {
    let outcomes = map_ordered(foundation_cases(max_alpha, max_lambda), exec, |(alpha, lambda, mu, k)| {
        let instance = format!("alpha={alpha} lambda={lambda} mu={mu} k={k}");
        let shape = match with_foundation(&lambda, &mu, &delta_rotated(&alpha), k) {
            Ok(s) => s,
            Err(e) => return outcome(instance, false, e.to_string()),
        };
        let allowed = foundation_values(&alpha, k);
        let row = alpha.size();
        for t in lattice_fillings(&shape) {
            let first = t.rows()[row];
            let mut counts = std::collections::BTreeMap::new();
            for &v in first {
                *counts.entry(v).or_insert(0) += 1;
            }
            if counts.iter().any(|(&v, &n)| n > allowed.max_multiplicity(v)) {
                return outcome(instance, false, format!("filling {t}"));
            }
        }
        outcome(instance, true, "")
    });
    SweepReport::new("kfatfirstrow", outcomes)
}

/// Lattice fillings of `lambda/mu ⊕ Delta_alpha` with at most `k` ones in the
/// first foundation row stay lattice and semistandard on `S(lambda, mu, alpha; k)`.
pub fn foundation_join(max_alpha: usize, max_lambda: usize, exec: Execution) -> SweepReport {
    let outcomes = map_ordered(foundation_cases(max_alpha, max_lambda), exec, |(alpha, lambda, mu, k)| {
        let instance = format!("alpha={alpha} lambda={lambda} mu={mu} k={k}");
        let top = delta_rotated(&alpha);
        let shape = match with_foundation(&lambda, &mu, &top, k) {
            Ok(s) => s,
            Err(e) => return outcome(instance, false, e.to_string()),
        };
        let foundation = SkewDiagram::new(lambda, mu).expect("mu ⊆ lambda");
        let apart = foundation.direct_sum(&top);
        let row = alpha.size();
        let mut used = 0;
        for t in lattice_fillings(&apart) {
            if t.rows()[row].iter().filter(|&&v| v == 1).count() > k {
                continue;
            }
            used += 1;
            let shifted = Tableau::new(shape.clone(), t.entries().to_vec());
            if !shifted.is_semistandard() || !shifted.is_lattice() {
                return outcome(instance, false, format!("filling {t}"));
            }
        }
        outcome(instance, true, format!("{used} fillings"))
    });
    SweepReport::new("kfatjoin", outcomes)
}
