//! Schur polynomials of Chern coefficients via the dual Jacobi-Trudi
//! (Giambelli) determinant.
//!
//! With c_0 = 1, c_k = 0 for k < 0 or beyond the stored length, the Schur
//! polynomial of a partition lambda is det(c_{lambda'_i - i + j}) over the
//! conjugate partition lambda'. When the c_k are the elementary symmetric
//! functions of a set of roots this equals the Schur symmetric function of
//! those roots, which is what the tests pin the convention to.

use crate::partitions::Partition;
use crate::poly::MultiPoly;

/// Entry c_k with the out-of-range conventions applied.
fn chern_entry(c: &[MultiPoly], k: i64) -> MultiPoly {
    if k < 0 {
        return MultiPoly::zero();
    }
    let k = k as usize;
    if k >= c.len() {
        return MultiPoly::zero();
    }
    c[k].clone()
}

/// Giambelli determinant for the partition `lambda` over the coefficient
/// sequence `c` (c[0] must be 1).
pub fn schur_of_chern(lambda: &Partition, c: &[MultiPoly]) -> MultiPoly {
    if lambda.is_empty() {
        return MultiPoly::one();
    }
    let conj = lambda.conjugate();
    let n = conj.len();
    let mat: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = conj.parts()[i] as i64 - i as i64 + j as i64;
                    chern_entry(c, k)
                })
                .collect()
        })
        .collect();
    determinant(&mat)
}

/// Determinant by cofactor expansion with memoization over column subsets.
/// Top-down so only reachable subsets are expanded; zero entries prune the
/// recursion, which matters for the staircase shape of Giambelli matrices.
pub fn determinant(mat: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = mat.len();
    if n == 0 {
        return MultiPoly::one();
    }
    assert!(n < 32, "matrix too large");
    let full: u32 = (1 << n) - 1;
    let mut memo: std::collections::HashMap<u32, MultiPoly> = std::collections::HashMap::new();
    det_masked(mat, n, full, &mut memo)
}

fn det_masked(
    mat: &[Vec<MultiPoly>],
    n: usize,
    mask: u32,
    memo: &mut std::collections::HashMap<u32, MultiPoly>,
) -> MultiPoly {
    if mask == 0 {
        return MultiPoly::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let row = n - mask.count_ones() as usize;
    let mut acc = MultiPoly::zero();
    let mut sign_positive = true;
    for col in 0..n {
        if mask & (1 << col) == 0 {
            continue;
        }
        if !mat[row][col].is_zero() {
            let sub = det_masked(mat, n, mask & !(1 << col), memo);
            let term = mat[row][col].mul(&sub);
            acc = if sign_positive {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Elementary symmetric functions e_0..e_n of integer roots, as constants.
pub fn elementary_from_roots(roots: &[i64]) -> Vec<MultiPoly> {
    let mut e = vec![MultiPoly::one()];
    for &r in roots {
        let mut next = Vec::with_capacity(e.len() + 1);
        next.push(MultiPoly::one());
        for k in 1..=e.len() {
            let lower = e[k - 1].scale(&crate::rational::rat(r));
            let same = if k < e.len() {
                e[k].clone()
            } else {
                MultiPoly::zero()
            };
            next.push(same.add(&lower));
        }
        e = next;
    }
    e
}
