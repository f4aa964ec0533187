//! Small dense exact linear algebra: fraction-free determinants over any
//! [`Scalar`] ring with exact division, and Gauss–Jordan solves over ℚ.

use super::{Rational, Scalar};
use crate::error::{Result, SboError};

pub type Matrix<S> = Vec<Vec<S>>;

/// Bareiss fraction-free elimination. Every intermediate division is exact
/// by Sylvester's identity, so this works over ℚ[α] as well as over ℚ.
pub fn det_bareiss<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    let mut a: Matrix<S> = m.to_vec();
    let mut prev = S::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
            a[i][k] = S::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negated()
    } else {
        d
    }
}

/// Solves `a · x = b` exactly; `a` must be square and nonsingular.
pub fn solve(mut a: Matrix<Rational>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n {
        return Err(SboError::LengthMismatch {
            expected: n,
            got: b.len(),
        });
    }
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !Scalar::is_zero(&a[r][col]))
            .ok_or(SboError::Singular)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for v in &mut a[col][col..] {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || Scalar::is_zero(&a[r][col]) {
                continue;
            }
            let f = a[r][col].clone();
            let (pivot_row, row) = if r < col {
                let (lo, hi) = a.split_at_mut(col);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = a.split_at_mut(r);
                (&lo[col], &mut hi[0])
            };
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * p;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Ok(b)
}

pub fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Matrix<S> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = S::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc.add_assign_ref(&row[k].times(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn is_identity<S: Scalar>(m: &[Vec<S>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// Leading principal minors `det(m[..k][..k])` for `k = 1..=n`.
pub fn leading_minors<S: Scalar>(m: &[Vec<S>]) -> Vec<S> {
    (1..=m.len())
        .map(|k| {
            let block: Matrix<S> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            det_bareiss(&block)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ];
        assert_eq!(det_bareiss(&m), int(-2));
        assert_eq!(det_bareiss::<Rational>(&[]), int(1));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det_bareiss(&singular), int(0));
    }

    #[test]
    fn solve_small_system() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(a, vec![int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(s, vec![int(1), int(1)]), Err(SboError::Singular));
    }

    #[test]
    fn product_and_identity() {
        let a = vec![vec![int(1), int(2)], vec![int(0), int(1)]];
        let b = vec![vec![int(1), int(-2)], vec![int(0), int(1)]];
        assert!(is_identity(&mat_mul(&a, &b)));
        assert_eq!(leading_minors(&a), vec![int(1), int(1)]);
    }
}
