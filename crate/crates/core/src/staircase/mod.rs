//! Sums of fat staircases: classification, the cut theorems, column
//! extension obstructions and the Schur-positivity inequalities for fat
//! staircases with foundations.

mod classify;
mod cuts;
mod positivity;

pub use classify::{
    check_column_addition, classify_fat_sum, classify_fat_sum_unfiltered,
    distinct_columns_necessary, ColumnAddition, ColumnVerdict, FatSumCertificate, Side, TermCheck,
    Verdict,
};
pub use cuts::{
    colcut_predicate, rowcut_predicate, verify_cut, verify_cut_theorems, Cut, CutInstance,
};
pub use positivity::{
    check_rect_corollary, check_sum_of_diff, check_sum_of_fat_inequality,
    check_transpose_positivity, PositivityReport, RectCorollaryReport, SumOfDiffReport,
};
