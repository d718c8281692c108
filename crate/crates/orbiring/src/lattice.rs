//! Integer linear algebra: the kernel lattice of a single weight covector,
//! with a canonical Hermite-echelon basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A canonical Z-basis of `{x : sum_i weights[i] * x[i] = 0}`, as rows of
/// length `weights.len()`.
///
/// The basis is the Hermite normal form of the kernel lattice (positive
/// pivots, entries above each pivot reduced into `[0, pivot)`), with rows
/// sorted lexicographically, so it is unique.
pub fn kernel_basis(weights: &[i64]) -> Vec<Vec<BigInt>> {
    let n = weights.len();
    if n == 0 {
        return Vec::new();
    }
    // Column-reduce the weight covector to (g, 0, .., 0) while applying the
    // same unimodular operations to an identity matrix; the columns mapped to
    // zero span the kernel.
    let mut c: Vec<BigInt> = weights.iter().map(|&w| BigInt::from(w)).collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    // u is stored column-major: u[j] is the j-th column.
    for j in 1..n {
        while !c[j].is_zero() {
            if c[0].is_zero() {
                c.swap(0, j);
                u.swap(0, j);
                continue;
            }
            let q = c[j].div_floor(&c[0]);
            let new_cj = &c[j] - &q * &c[0];
            c[j] = new_cj;
            let pivot_col = u[0].clone();
            for (cell, p) in u[j].iter_mut().zip(&pivot_col) {
                *cell = &*cell - &q * p;
            }
            if !c[j].is_zero() {
                c.swap(0, j);
                u.swap(0, j);
            }
        }
    }
    let rows: Vec<Vec<BigInt>> = (0..n).filter(|&j| c[j].is_zero()).map(|j| u[j].clone()).collect();
    let mut rows = hermite_normal_form(rows);
    rows.sort();
    rows
}

/// Row-style Hermite normal form: pivots positive and strictly right-moving,
/// entries above each pivot reduced into `[0, pivot)`; zero rows dropped.
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            // Pick the row with the smallest nonzero magnitude in this column.
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if !rows[r][col].is_zero()
                    && best.is_none_or(|b| rows[r][col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                let pivot = rows[pivot_row].clone();
                for (cell, p) in rows[r].iter_mut().zip(&pivot) {
                    *cell = &*cell - &q * p;
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for cell in rows[pivot_row].iter_mut() {
                *cell = -cell.clone();
            }
        }
        for r in 0..pivot_row {
            let q = rows[r][col].div_floor(&rows[pivot_row][col]);
            if !q.is_zero() {
                let pivot = rows[pivot_row].clone();
                for (cell, p) in rows[r].iter_mut().zip(&pivot) {
                    *cell = &*cell - &q * p;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(row: &[BigInt], weights: &[i64]) -> BigInt {
        row.iter()
            .zip(weights)
            .map(|(r, &w)| r * BigInt::from(w))
            .sum()
    }

    #[test]
    fn kernel_examples() {
        let b = kernel_basis(&[2, 1, 1]);
        let expect = vec![
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(-1)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(-2)],
        ];
        assert_eq!(b, expect);

        assert_eq!(
            kernel_basis(&[1, 1]),
            vec![vec![BigInt::from(1), BigInt::from(-1)]]
        );
        assert_eq!(kernel_basis(&[1]), Vec::<Vec<BigInt>>::new());
        assert_eq!(kernel_basis(&[7]), Vec::<Vec<BigInt>>::new());
    }

    /// Exhaustive small-coefficient oracle: every short integer vector
    /// annihilating the weights must lie in the Z-span of the basis, and the
    /// basis itself must annihilate the weights.
    #[test]
    fn kernel_matches_exhaustive_search() {
        let cases: Vec<Vec<i64>> = vec![
            vec![2, 1, 1],
            vec![3, -2],
            vec![4, 6, 10],
            vec![1, 2, 3, 4],
            vec![0, 5, 0],
            vec![-2, 2],
        ];
        for weights in cases {
            let basis = kernel_basis(&weights);
            for row in &basis {
                assert_eq!(dot(row, &weights), BigInt::zero(), "weights {weights:?}");
            }
            let nonzero = weights.iter().any(|&w| w != 0);
            if nonzero {
                assert_eq!(basis.len(), weights.len() - 1);
            }
            // Span check: adjoining any short kernel vector must not grow the
            // lattice (same HNF).
            let n = weights.len();
            let mut vecs = vec![vec![0i64; n]];
            for _ in 0..n {
                vecs = vecs
                    .into_iter()
                    .flat_map(|v| {
                        (-3i64..=3).map(move |c| {
                            let mut v2 = v.clone();
                            v2.remove(0);
                            v2.push(c);
                            v2
                        })
                    })
                    .collect();
            }
            for v in vecs {
                let total: i64 = v.iter().zip(&weights).map(|(a, b)| a * b).sum();
                if total != 0 {
                    continue;
                }
                let mut rows = basis.clone();
                rows.push(v.iter().map(|&c| BigInt::from(c)).collect());
                let grown = hermite_normal_form(rows);
                let mut sorted = grown;
                sorted.sort();
                assert_eq!(sorted, basis, "vector {v:?} outside span for {weights:?}");
            }
        }
    }

    #[test]
    fn hnf_is_canonical() {
        // Two different bases of the same lattice reduce to the same HNF.
        let a = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(5)],
        ];
        let mut b = vec![
            vec![BigInt::from(3), BigInt::from(7), BigInt::from(11)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(5)],
        ];
        let h1 = hermite_normal_form(a);
        b.swap(0, 1);
        let h2 = hermite_normal_form(b);
        assert_eq!(h1, h2);
        for row in &h1 {
            let pivot = row.iter().find(|v| !v.is_zero()).unwrap();
            assert!(pivot.is_positive());
        }
    }
}
