//! Schur-basis arithmetic: skew expansions, products and Pieri strips.

mod expansion;

use std::collections::BTreeMap;

pub use expansion::SchurExpansion;

use crate::error::Result;
use crate::exec::{map_ordered, Execution};
use crate::shape::{Partition, SkewDiagram};
use crate::tableau::{lr_coefficient, LatticeSearch};

/// `s_D = sum_nu c^outer_{inner, nu} s_nu`, tallied from the lattice
/// fillings of `d` by content.
pub fn skew_schur(d: &SkewDiagram) -> SchurExpansion {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut search = LatticeSearch::new(d, None);
    while search.next_filling() {
        *counts.entry(search.content()).or_insert(0) += 1;
    }
    SchurExpansion::from_counts(counts).expect("lattice filling counts fit in i64")
}

/// `s_mu s_nu = sum_lambda c^lambda_{mu, nu} s_lambda`.
pub fn schur_product(mu: &Partition, nu: &Partition) -> Result<SchurExpansion> {
    schur_product_with(mu, nu, Execution::Auto)
}

/// [`schur_product`] with an explicit execution mode for the per-`lambda`
/// coefficient counts.
pub fn schur_product_with(
    mu: &Partition,
    nu: &Partition,
    exec: Execution,
) -> Result<SchurExpansion> {
    let candidates = product_support(mu, nu);
    let coeffs = map_ordered(candidates, exec, |lambda| {
        let c = lr_coefficient(&lambda, mu, nu);
        (lambda, c)
    });
    SchurExpansion::from_counts(coeffs.into_iter().collect())
}

/// Partitions that can carry a non-zero `c^lambda_{mu, nu}`: they contain
/// both factors, fit in the `(l(mu)+l(nu)) x (mu_1+nu_1)` box and are
/// dominated by `mu + nu`.
fn product_support(mu: &Partition, nu: &Partition) -> Vec<Partition> {
    let n = mu.size() + nu.size();
    let rows = mu.len() + nu.len();
    let cols = mu.first() + nu.first();
    let lower: Vec<usize> = (0..rows).map(|i| mu.part(i).max(nu.part(i))).collect();
    let mut suffix_lower = vec![0; rows + 1];
    for i in (0..rows).rev() {
        suffix_lower[i] = suffix_lower[i + 1] + lower[i];
    }
    let mut dominance = Vec::with_capacity(rows);
    let mut acc = 0;
    for i in 0..rows {
        acc += mu.part(i) + nu.part(i);
        dominance.push(acc);
    }

    struct Ctx<'a> {
        n: usize,
        rows: usize,
        lower: &'a [usize],
        suffix_lower: &'a [usize],
        dominance: &'a [usize],
        out: Vec<Partition>,
    }

    fn rec(ctx: &mut Ctx<'_>, i: usize, max: usize, sum: usize, cur: &mut Vec<usize>) {
        if sum == ctx.n {
            ctx.out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if i == ctx.rows {
            return;
        }
        let rest_rows = ctx.rows - i;
        for part in (ctx.lower[i]..=max).rev() {
            if part == 0 {
                break;
            }
            let s = sum + part;
            if s > ctx.dominance[i] || s + ctx.suffix_lower[i + 1] > ctx.n {
                continue;
            }
            if s + part * (rest_rows - 1) < ctx.n {
                break;
            }
            cur.push(part);
            rec(ctx, i + 1, part, s, cur);
            cur.pop();
        }
    }

    let mut ctx = Ctx {
        n,
        rows,
        lower: &lower,
        suffix_lower: &suffix_lower,
        dominance: &dominance,
        out: Vec::new(),
    };
    if n == 0 {
        return vec![Partition::empty()];
    }
    rec(&mut ctx, 0, cols, 0, &mut Vec::new());
    ctx.out
}

/// `s_lambda s_(m)`: every `lambda'` with `lambda'/lambda` an `m`-box
/// horizontal strip, coefficient 1.
pub fn pieri_row(lambda: &Partition, m: usize) -> SchurExpansion {
    fn rec(lambda: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&lambda.parts()[i.min(lambda.len())..]);
            out.push(Partition::from_sorted(parts));
            return;
        }
        if i > lambda.len() {
            return;
        }
        let base = lambda.part(i);
        let cap = if i == 0 { left } else { (lambda.part(i - 1) - base).min(left) };
        for add in 0..=cap {
            cur.push(base + add);
            rec(lambda, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, m, &mut Vec::new(), &mut out);
    SchurExpansion::from_counts(out.into_iter().map(|p| (p, 1)).collect())
        .expect("unit coefficients")
}

/// `s_lambda s_(1^m)`: every `lambda'` with `lambda'/lambda` an `m`-box
/// vertical strip, coefficient 1.
pub fn pieri_col(lambda: &Partition, m: usize) -> SchurExpansion {
    fn rec(lambda: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&lambda.parts()[i.min(lambda.len())..]);
            out.push(Partition::from_sorted(parts));
            return;
        }
        // below the last row every step must add a box
        let adds: &[usize] = if i < lambda.len() { &[0, 1] } else { &[1] };
        for &add in adds {
            let part = lambda.part(i) + add;
            if i > 0 && part > cur[i - 1] {
                continue;
            }
            cur.push(part);
            rec(lambda, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, m, &mut Vec::new(), &mut out);
    SchurExpansion::from_counts(out.into_iter().map(|p| (p, 1)).collect())
        .expect("unit coefficients")
}
