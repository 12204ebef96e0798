use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{schur_product, skew_schur, SchurExpansion};
use crate::shape::{delta_rotated, with_foundation, Composition, Partition, SkewDiagram};

use super::classify::{classify_fat_sum, FatSumCertificate};

/// `lhs <=_s rhs`, with `difference = rhs - lhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub lhs: SchurExpansion,
    pub rhs: SchurExpansion,
    pub difference: SchurExpansion,
    pub positive: bool,
}

impl PositivityReport {
    pub fn new(lhs: SchurExpansion, rhs: SchurExpansion) -> Result<Self> {
        let difference = rhs.sub(&lhs)?;
        Ok(PositivityReport {
            positive: difference.is_schur_positive(),
            lhs,
            rhs,
            difference,
        })
    }
}

fn require_sum(d: &SkewDiagram) -> Result<FatSumCertificate> {
    let cert = classify_fat_sum(d);
    if cert.is_sum() {
        Ok(cert)
    } else {
        Err(Error::NotFatSum(d.to_string()))
    }
}

/// `sum_nu c_nu s_{S(lambda, mu, Delta_{alpha(nu)}; k)}`.
fn staircase_side(
    lambda: &Partition,
    mu: &Partition,
    cert: &FatSumCertificate,
    k: usize,
) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::zero();
    for (alpha, c) in &cert.decomposition {
        let shape = with_foundation(lambda, mu, &delta_rotated(alpha), k)?;
        out = out.add(&skew_schur(&shape).scale(*c)?)?;
    }
    Ok(out)
}

/// `s_{S(lambda, mu, D; k)} <=_s sum_nu c_nu s_{S(lambda, mu, Delta_{alpha(nu)}; k)}`
/// for a sum of fat staircases `D`.
pub fn check_sum_of_fat_inequality(
    lambda: &Partition,
    mu: &Partition,
    d: &SkewDiagram,
    k: usize,
) -> Result<PositivityReport> {
    let cert = require_sum(d)?;
    let lhs = skew_schur(&with_foundation(lambda, mu, d, k)?);
    let rhs = staircase_side(lambda, mu, &cert, k)?;
    PositivityReport::new(lhs, rhs)
}

/// The same inequality with the left side computed as `c(s_theta s_{beta^c})`
/// in the rectangle `(beta_1^{l(beta)})`, where `beta/theta = S(lambda, mu, D; k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectCorollaryReport {
    pub positivity: PositivityReport,
    /// `s_{beta/theta}` computed directly from fillings.
    pub direct: SchurExpansion,
    pub complement_matches: bool,
}

pub fn check_rect_corollary(
    lambda: &Partition,
    mu: &Partition,
    d: &SkewDiagram,
    k: usize,
) -> Result<RectCorollaryReport> {
    let cert = require_sum(d)?;
    let shape = with_foundation(lambda, mu, d, k)?;
    let (beta, theta) = (shape.outer(), shape.inner());
    let (rows, cols) = (beta.len(), beta.first());
    let beta_c = beta.complement_in_rectangle(rows, cols)?;
    let lhs = schur_product(theta, &beta_c)?.truncated_complement(rows, cols);
    let direct = skew_schur(&shape);
    let rhs = staircase_side(lambda, mu, &cert, k)?;
    Ok(RectCorollaryReport {
        complement_matches: lhs == direct,
        positivity: PositivityReport::new(lhs, rhs)?,
        direct,
    })
}

fn single_row(lambda: &Partition) -> Result<()> {
    if lambda.len() != 1 {
        return Err(Error::Precondition(format!("{lambda} is not a single row")));
    }
    Ok(())
}

/// `s_{S(lambda, Delta_alpha; k)} <=_s s_{S(lambda^t, Delta_alpha; k)}` for a
/// single row `lambda`, `k <= 1` and `lambda_1 - k <= l(alpha)`.
pub fn check_transpose_positivity(
    lambda: &Partition,
    alpha: &Composition,
    k: usize,
) -> Result<PositivityReport> {
    single_row(lambda)?;
    if k > 1 {
        return Err(Error::Precondition(format!("k = {k} must be 0 or 1")));
    }
    if lambda.first() > alpha.len() + k {
        return Err(Error::Precondition(format!(
            "lambda_1 - k = {} exceeds l(alpha) = {}",
            lambda.first() - k,
            alpha.len()
        )));
    }
    let top = delta_rotated(alpha);
    let empty = Partition::empty();
    let lhs = skew_schur(&with_foundation(lambda, &empty, &top, k)?);
    let rhs = skew_schur(&with_foundation(&lambda.conjugate(), &empty, &top, k)?);
    PositivityReport::new(lhs, rhs)
}

/// The layered statement for a single row `lambda` below a sum `D` (offset 1):
///
/// `outer = s_{S(lambda^t, D)} - s_{S(lambda, D)}`,
/// `middle = sum_nu c_nu (s_{S(lambda^t, alpha(nu))} - s_{S(lambda, alpha(nu))})`,
/// with `outer >=_s middle >=_s 0` and the transposed side matching exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumOfDiffReport {
    pub decomposition: Vec<(Composition, i64)>,
    pub outer: SchurExpansion,
    pub middle: SchurExpansion,
    /// `outer - middle`.
    pub outer_minus_middle: SchurExpansion,
    /// `s_{S(lambda^t, D)} - sum_nu c_nu s_{S(lambda^t, alpha(nu))}`; zero when
    /// the identity holds.
    pub transposed_identity: SchurExpansion,
    pub first_positive: bool,
    pub second_positive: bool,
    pub identity_holds: bool,
}

impl SumOfDiffReport {
    pub fn holds(&self) -> bool {
        self.first_positive && self.second_positive && self.identity_holds
    }
}

pub fn check_sum_of_diff(lambda: &Partition, d: &SkewDiagram) -> Result<SumOfDiffReport> {
    single_row(lambda)?;
    let cert = require_sum(d)?;
    if lambda.first() > d.last_row_length() + 1 {
        return Err(Error::Precondition(format!(
            "lambda_1 - 1 = {} exceeds the last row of {d} ({})",
            lambda.first() - 1,
            d.last_row_length()
        )));
    }
    let empty = Partition::empty();
    let lambda_t = lambda.conjugate();
    let row_d = skew_schur(&with_foundation(lambda, &empty, d, 1)?);
    let col_d = skew_schur(&with_foundation(&lambda_t, &empty, d, 1)?);
    let row_fat = staircase_side(lambda, &empty, &cert, 1)?;
    let col_fat = staircase_side(&lambda_t, &empty, &cert, 1)?;

    let outer = col_d.sub(&row_d)?;
    let middle = col_fat.sub(&row_fat)?;
    let outer_minus_middle = outer.sub(&middle)?;
    let transposed_identity = col_d.sub(&col_fat)?;
    Ok(SumOfDiffReport {
        decomposition: cert.decomposition,
        first_positive: outer_minus_middle.is_schur_positive(),
        second_positive: middle.is_schur_positive(),
        identity_holds: transposed_identity.is_zero(),
        outer,
        middle,
        outer_minus_middle,
        transposed_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewDiagram {
        SkewDiagram::new(p(o), p(i)).unwrap()
    }

    fn sum(terms: &[&[usize]]) -> SchurExpansion {
        SchurExpansion::from_terms(terms.iter().map(|t| (p(t), 1))).unwrap()
    }

    #[test]
    fn worked_inequality() {
        let d = sk(&[2, 2, 2, 2, 1], &[1, 1]);
        let r = check_sum_of_fat_inequality(&p(&[2, 2]), &Partition::empty(), &d, 1).unwrap();
        assert_eq!(r.lhs.len(), 8);
        assert!(r.lhs.terms().all(|(_, c)| c == 1));
        assert_eq!(r.difference, sum(&[&[3, 3, 2, 2, 1], &[3, 3, 2, 1, 1, 1], &[3, 2, 2, 2, 1, 1]]));
        assert!(r.positive);
        assert_eq!(r.lhs.coefficient(&p(&[3, 3, 1, 1, 1, 1, 1])), 1);

        let rect = check_rect_corollary(&p(&[2, 2]), &Partition::empty(), &d, 1).unwrap();
        assert!(rect.complement_matches);
        assert_eq!(rect.positivity, r);
    }

    #[test]
    fn empty_foundation_is_equality() {
        let d = sk(&[2, 2, 2, 2, 1], &[1, 1]);
        let e = Partition::empty();
        let r = check_sum_of_fat_inequality(&e, &e, &d, 0).unwrap();
        assert!(r.difference.is_zero());
        assert_eq!(r.lhs, skew_schur(&d));
        let rect = check_rect_corollary(&e, &e, &d, 0).unwrap();
        assert!(rect.complement_matches && rect.positivity.difference.is_zero());
    }

    #[test]
    fn fat_staircase_itself_is_equality() {
        let d = delta_rotated(&c(&[2, 2]));
        let r = check_sum_of_fat_inequality(&p(&[2]), &Partition::empty(), &d, 0).unwrap();
        assert!(r.difference.is_zero());
    }

    #[test]
    fn inequality_needs_a_sum() {
        let e = Partition::empty();
        let err = check_sum_of_fat_inequality(&p(&[1]), &e, &sk(&[2, 2], &[]), 0).unwrap_err();
        assert!(matches!(err, Error::NotFatSum(_)));
    }

    #[test]
    fn transpose_examples() {
        let r = check_transpose_positivity(&p(&[1]), &c(&[2, 1]), 1).unwrap();
        assert!(r.difference.is_zero());
        for (lam, alpha, k) in [(p(&[3]), c(&[1, 1, 3, 1, 2, 1]), 0), (p(&[2]), c(&[2, 2]), 1)] {
            assert!(check_transpose_positivity(&lam, &alpha, k).unwrap().positive);
        }
        assert!(check_transpose_positivity(&p(&[2, 1]), &c(&[2]), 0).is_err());
        assert!(check_transpose_positivity(&p(&[2]), &c(&[2]), 2).is_err());
        assert!(check_transpose_positivity(&p(&[3]), &c(&[2]), 1).is_err());
    }

    #[test]
    fn sum_of_diff_example() {
        let d = sk(&[4, 3, 3, 3, 3, 3, 3], &[2, 2, 2, 1, 1]);
        let r = check_sum_of_diff(&p(&[3]), &d).unwrap();
        assert_eq!(
            r.outer_minus_middle,
            sum(&[&[5, 4, 3, 2, 1, 1, 1], &[5, 4, 2, 2, 2, 1, 1], &[5, 4, 2, 2, 1, 1, 1, 1]])
        );
        assert!(r.holds());
        assert!(r.transposed_identity.is_zero());
    }

    #[test]
    fn sum_of_diff_single_box_row() {
        let d = sk(&[2, 2, 2, 2, 1], &[1, 1]);
        let r = check_sum_of_diff(&p(&[1]), &d).unwrap();
        assert!(r.outer.is_zero() && r.middle.is_zero() && r.holds());
    }
}
