//! Exact dense rank and determinant over rationals.

use crate::rat::Rat;

/// Rank by fraction-exact Gaussian elimination. Consumes the rows.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(sel) = (pivot_row..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = rows[pivot_row][col].recip();
        for j in col..n {
            if !rows[pivot_row][j].is_zero() {
                let v = &rows[pivot_row][j] * &inv;
                rows[pivot_row][j] = v;
            }
        }
        for i in (pivot_row + 1)..m {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..n {
                let t = &rows[pivot_row][j] * &factor;
                if !t.is_zero() {
                    rows[i][j] -= t;
                }
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix by elimination.
pub fn det(mut rows: Vec<Vec<Rat>>) -> Rat {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut result = Rat::one();
    for col in 0..n {
        let Some(sel) = (col..n).find(|&i| !rows[i][col].is_zero()) else {
            return Rat::zero();
        };
        if sel != col {
            rows.swap(col, sel);
            result = -result;
        }
        let pivot = rows[col][col].clone();
        result *= &pivot;
        let inv = pivot.recip();
        for i in (col + 1)..n {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] * &inv;
            for j in col..n {
                let t = &rows[col][j] * &factor;
                if !t.is_zero() {
                    rows[i][j] -= t;
                }
            }
        }
    }
    result
}
