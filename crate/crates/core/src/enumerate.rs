//! Exhaustive generators used by the theorem sweeps.

use crate::shape::{Partition, SkewDiagram};

/// Every skew diagram with exactly `n` boxes that has no empty rows and no
/// empty columns, drawn with its leftmost column at 0.
///
/// Any skew diagram with `n` boxes and no internal gaps appears exactly once.
pub fn skew_diagrams_of_size(n: usize) -> Vec<SkewDiagram> {
    // Rows are built bottom up as column spans [start, end).
    fn rec(left: usize, spans: &mut Vec<(usize, usize)>, out: &mut Vec<SkewDiagram>) {
        if left == 0 {
            let outer = spans.iter().rev().map(|s| s.1).collect();
            let inner = spans.iter().rev().map(|s| s.0).collect();
            out.push(
                SkewDiagram::new(Partition::from_sorted(outer), Partition::from_sorted(inner))
                    .expect("spans shift weakly right going up"),
            );
            return;
        }
        let &(pa, pb) = spans.last().expect("bottom row placed first");
        for a in pa..=pb {
            let min_b = pb.max(a + 1);
            for b in min_b..=a + left {
                spans.push((a, b));
                rec(left - (b - a), spans, out);
                spans.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![SkewDiagram::empty()];
    }
    for b in 1..=n {
        let mut spans = vec![(0, b)];
        rec(n - b, &mut spans, &mut out);
    }
    out
}

pub fn skew_diagrams_up_to(n: usize) -> Vec<SkewDiagram> {
    (1..=n).flat_map(skew_diagrams_of_size).collect()
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_in_box(n, usize::MAX, usize::MAX)
}

/// Partitions of `n` with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(n: usize, rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if cur.len() == rows {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, cols, rows, &mut Vec::new(), &mut out);
    out
}

/// All partitions inside `(cols^rows)`, any size.
pub fn subpartitions_of_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|n| partitions_in_box(n, rows, cols))
        .collect()
}

/// All partitions contained in `p`, any size.
pub fn subpartitions(p: &Partition) -> Vec<Partition> {
    fn rec(p: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == p.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for part in 0..=max.min(p.part(i)) {
            cur.push(part);
            rec(p, i + 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, 0, p.first(), &mut Vec::new(), &mut out);
    out
}
