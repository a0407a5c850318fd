//! Subspaces of GF(q)^n in reduced row echelon form.

use std::fmt;

use super::field::{Elem, FiniteField};

/// A subspace given by its canonical RREF basis. Two subspaces are equal
/// iff their canonical matrices are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Elem>>,
}

impl Subspace {
    /// Span of arbitrary vectors, put into canonical form.
    pub fn span(field: &FiniteField, ambient: usize, vectors: &[Vec<Elem>]) -> Subspace {
        let mut rows = vectors.to_vec();
        let r = rref_in_place(field, &mut rows, ambient);
        rows.truncate(r);
        Subspace { ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn contains(&self, field: &FiniteField, other: &Subspace) -> bool {
        if other.dim() > self.dim() {
            return false;
        }
        let mut stacked: Vec<Vec<Elem>> = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        rank(field, stacked, self.ambient) == self.dim()
    }

    /// `dim(U ∩ W) = dim U + dim W − rank [U; W]`.
    pub fn intersection_dim(&self, field: &FiniteField, other: &Subspace) -> usize {
        let mut stacked: Vec<Vec<Elem>> = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        self.dim() + other.dim() - rank(field, stacked, self.ambient)
    }
}

impl fmt::Display for Subspace {
    /// Rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Row reduces in place, returning the rank. The first `rank` rows hold the
/// RREF afterwards.
pub fn rref_in_place(field: &FiniteField, rows: &mut [Vec<Elem>], ncols: usize) -> usize {
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(*x, field.mul(f, y));
            }
        }
        r += 1;
    }
    r
}

pub fn rank(field: &FiniteField, mut rows: Vec<Vec<Elem>>, ncols: usize) -> usize {
    rref_in_place(field, &mut rows, ncols)
}

/// Gaussian binomial `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All `d`-dimensional subspaces of GF(q)^n in lexicographic order of
/// their canonical matrices.
pub fn enumerate_subspaces(field: &FiniteField, n: usize, d: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let q = field.q() as u64;
    for pivots in combinations(n, d) {
        // free positions: (row r, col c) with c > pivot_r and c not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0 as Elem; n]; d];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            let mut rest = code;
            for &(r, c) in &free {
                rows[r][c] = (rest % q) as Elem;
                rest /= q;
            }
            out.push(Subspace { ambient: n, rows });
        }
    }
    out.sort();
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
