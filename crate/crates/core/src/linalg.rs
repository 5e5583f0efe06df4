//! Dense linear algebra over a [`FieldCtx`]: row reduction, rank and null spaces.

use crate::gf::{Elem, FieldCtx};

pub type Matrix = Vec<Vec<Elem>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &FieldCtx, mat: &mut Matrix) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, sel);
        let inv = f.inv(mat[r][c]).expect("pivot is nonzero");
        for x in mat[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = f.neg(row[c]);
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = f.add(*x, f.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &FieldCtx, mat: &Matrix) -> usize {
    let mut m = mat.clone();
    rref(f, &mut m).len()
}

/// Rank of the matrix whose columns are the given vectors.
pub fn column_rank(f: &FieldCtx, cols: &[&[Elem]]) -> usize {
    let Some(first) = cols.first() else { return 0 };
    let rows = first.len();
    let mut mat: Matrix = (0..rows).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    rref(f, &mut mat).len()
}

/// Basis (as rows) of { x : mat · x^T = 0 }.
pub fn null_space(f: &FieldCtx, mat: &Matrix) -> Matrix {
    let cols = mat.first().map_or(0, |r| r.len());
    let mut m = mat.clone();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Elem::ZERO; cols];
            v[fc] = Elem::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[r][fc]);
            }
            v
        })
        .collect()
}

/// row vector times matrix
pub fn vec_mat(f: &FieldCtx, v: &[Elem], mat: &Matrix) -> Vec<Elem> {
    let cols = mat.first().map_or(0, |r| r.len());
    let mut out = vec![Elem::ZERO; cols];
    for (&c, row) in v.iter().zip(mat) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = f.add(*o, f.mul(c, x));
        }
    }
    out
}

pub fn dot(f: &FieldCtx, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn hamming_weight(v: &[Elem]) -> u32 {
    v.iter().filter(|x| !x.is_zero()).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_annihilates() {
        let f = FieldCtx::conway(3, 2).unwrap();
        let mat: Matrix = vec![
            (0..6).map(|i| f.alpha_pow(i)).collect(),
            (0..6).map(|i| f.alpha_pow(2 * i)).collect(),
            (0..6).map(|i| f.alpha_pow(3 * i + 1)).collect(),
        ];
        let r = rank(&f, &mat);
        let ns = null_space(&f, &mat);
        assert_eq!(ns.len(), 6 - r);
        for v in &ns {
            for row in &mat {
                assert!(dot(&f, row, v).is_zero());
            }
        }
    }

    #[test]
    fn rank_of_dependent_columns() {
        let f = FieldCtx::conway(2, 3).unwrap();
        let a = vec![Elem(1), Elem(2), Elem(3)];
        let b = vec![Elem(4), Elem(5), Elem(6)];
        let c: Vec<Elem> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        assert_eq!(column_rank(&f, &[&a, &b, &c]), 2);
        assert_eq!(column_rank(&f, &[&a, &b]), 2);
    }
}
