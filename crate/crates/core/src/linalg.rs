//! Dense Gaussian elimination over a field context, on packed raw entries.
//!
//! Entries lying in a subfield keep every intermediate value in that
//! subfield, so the same routines compute ranks over `F_q` or `F_{q^t}`.

use crate::gf::FieldCtx;

/// Reduces `m` to row echelon form in place; returns the pivot columns.
fn echelon(ctx: &FieldCtx, m: &mut [Vec<u32>]) -> (Vec<usize>, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut swapped_odd = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if pr != r {
            m.swap(pr, r);
            swapped_odd = !swapped_odd;
        }
        let inv = ctx.raw_inv(m[r][c]);
        let pivot = m[r].clone();
        for row in m.iter_mut().take(rows).skip(r + 1) {
            if row[c] == 0 {
                continue;
            }
            let factor = ctx.raw_mul(row[c], inv);
            for (x, &pj) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                *x = ctx.raw_sub(*x, ctx.raw_mul(factor, pj));
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, swapped_odd)
}

pub fn det(ctx: &FieldCtx, mut m: Vec<Vec<u32>>) -> u32 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let (pivots, odd) = echelon(ctx, &mut m);
    if pivots.len() < k {
        return 0;
    }
    let mut d = 1;
    for (i, row) in m.iter().enumerate() {
        d = ctx.raw_mul(d, row[i]);
    }
    if odd {
        ctx.raw_neg(d)
    } else {
        d
    }
}

pub fn rank(ctx: &FieldCtx, mut m: Vec<Vec<u32>>) -> usize {
    echelon(ctx, &mut m).0.len()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(ctx: &FieldCtx, m: Vec<Vec<u32>>) -> Option<Vec<Vec<u32>>> {
    let k = m.len();
    let mut aug: Vec<Vec<u32>> = m
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..k).map(|j| u32::from(i == j)));
            row
        })
        .collect();
    for c in 0..k {
        let pr = (c..k).find(|&i| aug[i][c] != 0)?;
        aug.swap(pr, c);
        let inv = ctx.raw_inv(aug[c][c]);
        for x in aug[c].iter_mut() {
            *x = ctx.raw_mul(*x, inv);
        }
        let pivot = aug[c].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == c || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &pj) in row.iter_mut().zip(&pivot) {
                *x = ctx.raw_sub(*x, ctx.raw_mul(factor, pj));
            }
        }
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}

/// Incremental row basis used for subspace spans and membership.
#[derive(Clone, Debug, Default)]
pub struct RowBasis {
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, ctx: &FieldCtx, v: &mut [u32]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let factor = v[p];
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = ctx.raw_sub(*x, ctx.raw_mul(factor, r));
                    }
                }
            }
        }
    }

    /// Adds `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, ctx: &FieldCtx, mut v: Vec<u32>) -> bool {
        self.reduce(ctx, &mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = ctx.raw_inv(v[p]);
        for x in v.iter_mut() {
            *x = ctx.raw_mul(*x, inv);
        }
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            let _ = rp;
            if row[p] != 0 {
                let factor = row[p];
                for (x, &r) in row.iter_mut().zip(&v) {
                    if r != 0 {
                        *x = ctx.raw_sub(*x, ctx.raw_mul(factor, r));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[u32]) -> bool {
        let mut v = v.to_vec();
        self.reduce(ctx, &mut v);
        v.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse_over_f16() {
        let k = FieldCtx::make_field(2, 4, None).unwrap();
        let g = k.primitive_element().raw();
        let m = vec![vec![1, g], vec![g, 1]];
        let d = det(&k, m.clone());
        assert_eq!(d, k.raw_add(1, k.raw_mul(g, g)));
        let inv = inverse(&k, m.clone()).unwrap();
        for (i, row) in m.iter().enumerate() {
            for (j, _) in inv[0].iter().enumerate() {
                let v = (0..2).fold(0, |acc, l| k.raw_add(acc, k.raw_mul(row[l], inv[l][j])));
                assert_eq!(v, u32::from(i == j));
            }
        }
        assert_eq!(det(&k, vec![vec![g, g], vec![g, g]]), 0);
        assert!(inverse(&k, vec![vec![g, g], vec![g, g]]).is_none());
    }

    #[test]
    fn det_sign_in_odd_characteristic() {
        let k = FieldCtx::make_field(3, 1, None).unwrap();
        // [[0,1],[1,0]] has determinant -1 = 2.
        assert_eq!(det(&k, vec![vec![0, 1], vec![1, 0]]), 2);
    }

    #[test]
    fn row_basis_tracks_span() {
        let k = FieldCtx::make_field(3, 1, None).unwrap();
        let mut b = RowBasis::new();
        assert!(b.insert(&k, vec![1, 2, 0]));
        assert!(b.insert(&k, vec![0, 1, 1]));
        assert!(!b.insert(&k, vec![1, 0, 1]));
        assert!(b.contains(&k, &[2, 1, 0]));
        assert!(!b.contains(&k, &[0, 0, 1]));
        assert_eq!(b.rank(), 2);
        assert_eq!(rank(&k, vec![vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]]), 2);
    }
}
