//! Small exact linear algebra over the integers and rationals.
//!
//! Matrices here are at most a few dozen rows, so everything is dense and
//! uses arbitrary precision throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Leading principal minors `det(A[..k, ..k])` for `k = 1..=n`.
///
/// Uses fraction-free (Bareiss) elimination without pivoting, in which the
/// k-th pivot is exactly the k-th leading minor. Elimination stops at the
/// first vanishing minor; the returned vector is then shorter than `n` and
/// its last entry is zero.
pub fn leading_principal_minors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&a[i][j] * &pivot - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}

/// Solves `A x = b` exactly. Returns `None` when `A` is singular.
pub fn solve(matrix: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "right-hand side length must match matrix");
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            row.iter()
                .map(|&x| q(x))
                .chain(std::iter::once(q(b)))
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        let inv = a[col][col].recip();
        for v in a[col][col..].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let pivot = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                *x -= &factor * p;
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}
