//! Integer Darboux reduction: factor a skew-symmetric unimodular matrix M
//! as M = Qᵀ Ω Q with Q integer unimodular and Ω the standard paired form
//! diag([[0,1],[−1,0]], …).
//!
//! The reduction applies simultaneous row/column operations (congruences by
//! elementary unimodular matrices), which preserve skewness and the
//! determinant. For each 2×2 block position: pick the smallest positive
//! entry of the trailing submatrix (ties by lowest row, then column), move
//! it to the top of the block by paired swaps, and clear the two block rows
//! by Euclidean division against it; a nonzero remainder yields a strictly
//! smaller positive entry, so the pivot descends to 1 — unimodularity says
//! the final pivot of every block is exactly 1. The accumulated congruence
//! C (with its inverse, tracked alongside) satisfies Cᵀ M C = Ω, so
//! Q = C⁻¹.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use crate::Error;

/// The standard paired symplectic form of (even) size n.
pub(super) fn standard_form(n: usize) -> IntMatrix {
    assert!(n.is_multiple_of(2), "paired form needs an even size");
    let mut omega = IntMatrix::zeros(n, n);
    for t in (0..n).step_by(2) {
        omega.set(t, t + 1, BigInt::one());
        omega.set(t + 1, t, BigInt::from(-1));
    }
    omega
}

/// Simultaneous swap of rows/cols a and b (congruence by a transposition).
fn swap(work: &mut IntMatrix, c: &mut IntMatrix, c_inv: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    work.swap_rows(a, b);
    work.swap_cols(a, b);
    c.swap_cols(a, b);
    c_inv.swap_rows(a, b);
}

/// Congruence by E = I + coef·E_{a,b}: adds coef × (row a) to row b and
/// coef × (col a) to col b of the working matrix; C picks up E on the
/// right, C⁻¹ picks up E⁻¹ on the left.
fn add(
    work: &mut IntMatrix,
    c: &mut IntMatrix,
    c_inv: &mut IntMatrix,
    a: usize,
    b: usize,
    coef: &BigInt,
) {
    assert_ne!(a, b);
    let n = work.rows();
    for j in 0..n {
        let v = work.get(b, j) + coef * work.get(a, j);
        work.set(b, j, v);
    }
    for i in 0..n {
        let v = work.get(i, b) + coef * work.get(i, a);
        work.set(i, b, v);
    }
    for i in 0..c.rows() {
        let v = c.get(i, b) + coef * c.get(i, a);
        c.set(i, b, v);
    }
    for j in 0..c_inv.cols() {
        let v = c_inv.get(a, j) - coef * c_inv.get(b, j);
        c_inv.set(a, j, v);
    }
}

/// Q with M = Qᵀ Ω Q, for skew-symmetric unimodular integer M.
///
/// Skew matrices have square determinants, so unimodular here means
/// det M = 1; anything else (including odd sizes, which force det 0) is
/// rejected as [`Error::NotUnimodular`].
pub fn darboux_factor(m: &IntMatrix) -> Result<IntMatrix, Error> {
    if !m.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let det = m.determinant();
    if !det.is_one() {
        return Err(Error::NotUnimodular(det));
    }
    let n = m.rows();
    let mut work = m.clone();
    let mut c = IntMatrix::identity(n);
    let mut c_inv = IntMatrix::identity(n);

    for t in (0..n).step_by(2) {
        loop {
            let mut pivot: Option<(usize, usize, BigInt)> = None;
            for i in t..n {
                for j in t..n {
                    if i == j {
                        continue;
                    }
                    let v = work.get(i, j);
                    if v.is_positive() && pivot.as_ref().is_none_or(|(_, _, p)| v < p) {
                        pivot = Some((i, j, v.clone()));
                    }
                }
            }
            let (i, j, _) = pivot.expect("skew unimodular matrix has no zero trailing block");
            swap(&mut work, &mut c, &mut c_inv, t, i);
            let j = if j == t { i } else { j };
            swap(&mut work, &mut c, &mut c_inv, t + 1, j);
            let p = work.get(t, t + 1).clone();
            assert!(p.is_positive(), "pivot moved with its sign intact");

            let mut clean = true;
            for col in t + 2..n {
                // work[t][col] += q·work[t][t+1] via the column t+1 op.
                let top = work.get(t, col).clone();
                if !top.is_zero() {
                    let q = top.div_floor(&p);
                    if !q.is_zero() {
                        add(&mut work, &mut c, &mut c_inv, t + 1, col, &-q);
                    }
                    if !work.get(t, col).is_zero() {
                        clean = false;
                    }
                }
                // work[t+1][col] += q·work[t+1][t] = −q·p via the column t op.
                let bottom = work.get(t + 1, col).clone();
                if !bottom.is_zero() {
                    let q = bottom.div_floor(&p);
                    if !q.is_zero() {
                        add(&mut work, &mut c, &mut c_inv, t, col, &q);
                    }
                    if !work.get(t + 1, col).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // Congruences preserve the determinant, which now factors as
                // p² times the trailing minor — p must be 1.
                assert!(p.is_one(), "block pivot of a unimodular form is 1");
                break;
            }
        }
    }
    debug_assert_eq!(work, standard_form(n));
    let q = c_inv;
    let omega = standard_form(n);
    assert_eq!(
        q.transpose().mul(&omega).mul(&q),
        *m,
        "Darboux factor must reproduce the input form"
    );
    Ok(q)
}
