//! Integer linear systems via column Hermite-style reduction.
//!
//! `A x = b` over `Z` is solved by reducing `A` to lower echelon form
//! `H = A U` with unimodular `U`, forward-substituting `H y = b`, and
//! returning `x = U y`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Lower echelon form `H = A·U` with the unimodular transform and pivot positions.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in increasing order.
    pub pivots: Vec<(usize, usize)>,
}

/// Column-reduces an `m × n` matrix given as rows.
pub fn column_echelon(a: &[Vec<BigInt>]) -> ColumnEchelon {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut h = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pc = 0;
    for r in 0..m {
        if pc == n {
            break;
        }
        for c in pc + 1..n {
            if h[r][c].is_zero() {
                continue;
            }
            let a_ = h[r][pc].clone();
            let b_ = h[r][c].clone();
            let egcd = a_.extended_gcd(&b_);
            let (g, s, t) = (egcd.gcd, egcd.x, egcd.y);
            let (p, q) = (-(&b_ / &g), &a_ / &g);
            // [col_pc, col_c] <- [s·col_pc + t·col_c, p·col_pc + q·col_c], determinant 1
            combine_columns(&mut h, pc, c, &s, &t, &p, &q);
            combine_columns(&mut u, pc, c, &s, &t, &p, &q);
        }
        if !h[r][pc].is_zero() {
            if h[r][pc].is_negative() {
                negate_column(&mut h, pc);
                negate_column(&mut u, pc);
            }
            pivots.push((r, pc));
            pc += 1;
        }
    }
    ColumnEchelon { h, u, pivots }
}

fn combine_columns(
    mat: &mut [Vec<BigInt>],
    i: usize,
    j: usize,
    s: &BigInt,
    t: &BigInt,
    p: &BigInt,
    q: &BigInt,
) {
    for row in mat.iter_mut() {
        let (x, y) = (row[i].clone(), row[j].clone());
        row[i] = s * &x + t * &y;
        row[j] = p * &x + q * &y;
    }
}

fn negate_column(mat: &mut [Vec<BigInt>], i: usize) {
    for row in mat.iter_mut() {
        row[i] = -std::mem::take(&mut row[i]);
    }
}

/// Some integer solution of `a·x = b`, or `None` if there is none.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.len(), b.len(), "row count of system and right-hand side differ");
    let n = a.first().map_or(0, Vec::len);
    let ech = column_echelon(a);
    let mut y = vec![BigInt::zero(); n];
    let mut next_pivot = ech.pivots.iter().peekable();
    for (r, row) in ech.h.iter().enumerate() {
        let mut rest = b[r].clone();
        for (c, yc) in y.iter().enumerate() {
            if !yc.is_zero() && !row[c].is_zero() {
                rest -= &row[c] * yc;
            }
        }
        match next_pivot.peek() {
            Some(&&(pr, pcol)) if pr == r => {
                let (q, rem) = rest.div_rem(&row[pcol]);
                if !rem.is_zero() {
                    return None;
                }
                y[pcol] = q;
                next_pivot.next();
            }
            _ => {
                if !rest.is_zero() {
                    return None;
                }
            }
        }
    }
    let x = ech
        .u
        .iter()
        .map(|urow| urow.iter().zip(&y).map(|(a, b)| a * b).sum())
        .collect();
    Some(x)
}
