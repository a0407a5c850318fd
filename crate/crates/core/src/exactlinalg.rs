//! Exact ranks over F_p and integer spectral checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finitegeom::IncidenceMatrix;
use crate::jantzen::is_prime;

/// Largest matrix accepted by [`check_eigen_powers`].
pub const MAX_SPECTRAL_SIZE: usize = 200;

const PAR_THRESHOLD: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Storage {
    /// One `u64` bitset per row (`p = 2`).
    Packed { words: usize, rows: Vec<Vec<u64>> },
    Dense(Vec<Vec<u32>>),
}

/// A matrix over F_p with entries reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixModP {
    p: u64,
    nrows: usize,
    ncols: usize,
    storage: Storage,
}

impl MatrixModP {
    /// Reduces integer rows mod `p`; `p = 2` gets word-packed storage.
    pub fn from_rows<T>(p: u64, rows: &[Vec<T>]) -> Result<Self>
    where
        T: Copy + Into<i64>,
    {
        let dense = Self::dense_from_rows(p, rows)?;
        Ok(if p == 2 { dense.packed() } else { dense })
    }

    /// Same as [`from_rows`](Self::from_rows) but never packs.
    pub fn dense_from_rows<T>(p: u64, rows: &[Vec<T>]) -> Result<Self>
    where
        T: Copy + Into<i64>,
    {
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::NotPrime(p));
        }
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: r.len(),
            });
        }
        let pi = p as i64;
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| x.into().rem_euclid(pi) as u32).collect())
            .collect();
        Ok(MatrixModP {
            p,
            nrows: rows.len(),
            ncols,
            storage: Storage::Dense(data),
        })
    }

    pub fn from_incidence(m: &IncidenceMatrix, p: u64) -> Result<Self> {
        let rows: Vec<Vec<u8>> = m.rows().map(<[u8]>::to_vec).collect();
        let mut out = Self::from_rows(p, &rows)?;
        out.ncols = m.ncols();
        Ok(out)
    }

    fn packed(self) -> Self {
        let Storage::Dense(rows) = &self.storage else {
            return self;
        };
        let words = self.ncols.div_ceil(64);
        let packed = rows
            .iter()
            .map(|r| {
                let mut bits = vec![0u64; words];
                for (j, &x) in r.iter().enumerate() {
                    if x == 1 {
                        bits[j / 64] |= 1 << (j % 64);
                    }
                }
                bits
            })
            .collect();
        MatrixModP {
            storage: Storage::Packed {
                words,
                rows: packed,
            },
            ..self
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_packed(&self) -> bool {
        matches!(self.storage, Storage::Packed { .. })
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        match &self.storage {
            Storage::Packed { rows, .. } => (rows[i][j / 64] >> (j % 64)) & 1,
            Storage::Dense(rows) => u64::from(rows[i][j]),
        }
    }

    pub fn transpose(&self) -> MatrixModP {
        let rows: Vec<Vec<i64>> = (0..self.ncols)
            .map(|j| (0..self.nrows).map(|i| self.get(i, j) as i64).collect())
            .collect();
        let dense = Self::dense_from_rows(self.p, &rows).expect("p already validated");
        let mut out = if self.is_packed() { dense.packed() } else { dense };
        out.ncols = self.nrows;
        out
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry
    /// of each column in row order.
    pub fn rank(&self) -> usize {
        match &self.storage {
            Storage::Packed { words, rows } => rank_packed(rows.clone(), *words, self.ncols),
            Storage::Dense(rows) => rank_dense(rows.clone(), self.ncols, self.p),
        }
    }
}

fn rank_packed(mut rows: Vec<Vec<u64>>, words: usize, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let clear = |row: &mut Vec<u64>| {
            if row[w] & bit != 0 {
                for k in w..words {
                    row[k] ^= pivot[k];
                }
            }
        };
        if tail.len() * words > PAR_THRESHOLD {
            tail.par_iter_mut().for_each(clear);
        } else {
            tail.iter_mut().for_each(clear);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_dense(mut rows: Vec<Vec<u32>>, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = mod_inverse(u64::from(rows[rank][col]), p);
        for x in rows[rank][col..].iter_mut() {
            *x = (u64::from(*x) * inv % p) as u32;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let clear = |row: &mut Vec<u32>| {
            let f = u64::from(row[col]);
            if f == 0 {
                return;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = ((u64::from(*x) + p * p - f * u64::from(y)) % p) as u32;
            }
        };
        if tail.len() * ncols > PAR_THRESHOLD {
            tail.par_iter_mut().for_each(clear);
        } else {
            tail.iter_mut().for_each(clear);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

pub fn rank_mod_p(m: &MatrixModP) -> usize {
    m.rank()
}

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        Ok(IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigInt::one())
    }

    pub fn scalar(n: usize, c: BigInt) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = c.clone();
        }
        IntMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let entries = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                acc
            })
            .collect();
        IntMatrix { n, entries }
    }

    /// `self − c·I`.
    pub fn shift(&self, c: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] -= c;
        }
        out
    }

    /// Rank over Q by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let rows = self.entries.chunks(self.n.max(1)).map(<[BigInt]>::to_vec).collect();
        row_basis(rows, self.n).len()
    }
}

/// A basis of the row space over Q: the nonzero rows of a fraction-free
/// echelon form, each divided by the gcd of its entries.
fn row_basis(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == a.len() {
            break;
        }
        let Some(piv) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot = &head[rank];
        tail.par_iter_mut().for_each(|row| {
            for j in col + 1..ncols {
                row[j] = (&pivot[col] * &row[j] - &row[col] * &pivot[j]) / &prev;
            }
            row[col] = BigInt::zero();
        });
        prev = a[rank][col].clone();
        rank += 1;
    }
    a.truncate(rank);
    for row in &mut a {
        let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_one() {
            for x in row.iter_mut() {
                *x /= &g;
            }
        }
    }
    a
}

/// `A · Aᵀ` over the integers.
pub fn gram(m: &IncidenceMatrix) -> IntMatrix {
    let rows: Vec<&[u8]> = m.rows().collect();
    let n = rows.len();
    let mut entries = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let s: u64 = rows[i]
                .iter()
                .zip(rows[j])
                .map(|(&x, &y)| u64::from(x & y))
                .sum();
            entries[i * n + j] = BigInt::from(s);
            entries[j * n + i] = BigInt::from(s);
        }
    }
    IntMatrix { n, entries }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenPowerReport {
    /// The accumulated product annihilates the matrix.
    pub ok: bool,
    /// Exponents `a` whose factor `M − q^a I` was used.
    pub exponents: Vec<u32>,
    /// Whether the factor `M` itself (eigenvalue 0) was used.
    pub zero_eigenvalue: bool,
}

/// Searches for `S ⊆ {0..max_exp}` with `Π_{a∈S} (M − q^a I) = 0`, allowing
/// an extra factor `M` for a zero eigenvalue.
///
/// Factors are accepted greedily when they strictly lower the rank of the
/// running product over Q. For symmetric `M` the running product acts on
/// each eigenspace by a scalar, so a factor `M − cI` lowers its rank exactly
/// when `c` is an eigenvalue not yet used; that test is run as an exact
/// singularity check of `M − cI`. Other matrices go through elimination on
/// the running product itself.
pub fn check_eigen_powers(m: &IntMatrix, q: u64, max_exp: u32) -> Result<EigenPowerReport> {
    let n = m.size();
    if n > MAX_SPECTRAL_SIZE {
        return Err(Error::SizeCapExceeded {
            count: n,
            cap: MAX_SPECTRAL_SIZE,
        });
    }
    if m.is_symmetric() {
        Ok(eigen_powers_symmetric(m, q, max_exp))
    } else {
        Ok(eigen_powers_by_elimination(m, q, max_exp))
    }
}

fn candidates(q: u64, max_exp: u32) -> Vec<(u32, BigInt)> {
    let q = BigInt::from(q);
    (0..=max_exp)
        .map(|a| (a, num_traits::pow(q.clone(), a as usize)))
        .collect()
}

fn eigen_powers_symmetric(m: &IntMatrix, q: u64, max_exp: u32) -> EigenPowerReport {
    let zero_eigenvalue = modular::is_singular(&m.shift(&BigInt::zero()));
    let mut factors = Vec::new();
    if zero_eigenvalue {
        factors.push(m.clone());
    }
    let mut exponents = Vec::new();
    for (a, c) in candidates(q, max_exp) {
        let f = m.shift(&c);
        if modular::is_singular(&f) {
            exponents.push(a);
            factors.push(f);
        }
    }
    EigenPowerReport {
        ok: modular::product_is_zero(m.size(), &factors),
        exponents,
        zero_eigenvalue,
    }
}

fn eigen_powers_by_elimination(m: &IntMatrix, q: u64, max_exp: u32) -> EigenPowerReport {
    let n = m.size();
    let rows = |x: &IntMatrix| -> Vec<Vec<BigInt>> {
        x.entries.chunks(n.max(1)).map(<[BigInt]>::to_vec).collect()
    };
    // Row space of the running product P; that of P·F is (row space of P)·F.
    let mut basis = rows(&IntMatrix::identity(n));
    let mut exponents = Vec::new();
    let mut zero_eigenvalue = false;

    let m_basis = row_basis(rows(m), n);
    if m_basis.len() < n {
        basis = m_basis;
        zero_eigenvalue = true;
    }
    for (a, c) in candidates(q, max_exp) {
        if basis.is_empty() {
            break;
        }
        // B·(M − cI) = B·M − c·B
        let cand: Vec<Vec<BigInt>> = basis
            .par_iter()
            .map(|b| {
                (0..n)
                    .map(|j| {
                        let mut acc = -(&c * &b[j]);
                        for (k, x) in b.iter().enumerate() {
                            if !x.is_zero() {
                                acc += x * m.get(k, j);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let reduced = row_basis(cand, n);
        if reduced.len() < basis.len() {
            basis = reduced;
            exponents.push(a);
        }
    }
    EigenPowerReport {
        ok: basis.is_empty(),
        exponents,
        zero_eigenvalue,
    }
}

/// Exact integer facts certified by computations modulo 62-bit primes.
mod modular {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, ToPrimitive};
    use rayon::prelude::*;

    use super::IntMatrix;

    fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
        (u128::from(a) * u128::from(b) % u128::from(p)) as u64
    }

    fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul_mod(r, b, p);
            }
            b = mul_mod(b, b, p);
            e >>= 1;
        }
        r
    }

    /// Deterministic Miller–Rabin for 64-bit integers.
    pub(super) fn is_prime_u64(n: u64) -> bool {
        const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        if n < 2 {
            return false;
        }
        for b in BASES {
            if n.is_multiple_of(b) {
                return n == b;
            }
        }
        let (mut d, mut s) = (n - 1, 0);
        while d % 2 == 0 {
            d /= 2;
            s += 1;
        }
        'bases: for b in BASES {
            let mut x = pow_mod(b, d, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 1..s {
                x = mul_mod(x, x, n);
                if x == n - 1 {
                    continue 'bases;
                }
            }
            return false;
        }
        true
    }

    /// Primes below 2^62 in decreasing order.
    fn primes() -> impl Iterator<Item = u64> {
        ((1u64 << 61)..(1u64 << 62)).rev().filter(|&n| n % 2 == 1 && is_prime_u64(n))
    }

    fn reduce(x: &BigInt, p: u64) -> u64 {
        let r = x % BigInt::from(p);
        let r = if r.is_negative() { r + p } else { r };
        r.to_u64().expect("residue fits")
    }

    fn reduce_matrix(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
        let n = m.size();
        (0..n).map(|i| (0..n).map(|j| reduce(m.get(i, j), p)).collect()).collect()
    }

    fn singular_mod(mut a: Vec<Vec<u64>>, p: u64) -> bool {
        let n = a.len();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&i| a[i][col] != 0) else {
                return true;
            };
            a.swap(col, piv);
            let inv = pow_mod(a[col][col], p - 2, p);
            let (head, tail) = a.split_at_mut(col + 1);
            let pivot = &head[col];
            for row in tail.iter_mut() {
                let f = mul_mod(row[col], inv, p);
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    row[j] = (row[j] + p - mul_mod(f, pivot[j], p)) % p;
                }
            }
        }
        false
    }

    /// Hadamard's bound `Π_i ‖row_i‖₂`, rounded up.
    fn hadamard_bound(m: &IntMatrix) -> BigInt {
        let n = m.size();
        let mut bound = BigInt::one();
        for i in 0..n {
            let sq: BigInt = (0..n).map(|j| m.get(i, j) * m.get(i, j)).sum();
            bound *= sq.sqrt() + 1u32;
        }
        bound
    }

    /// `det m = 0`. A nonzero residue settles it at once; otherwise the
    /// determinant vanishes modulo a product of primes exceeding its bound.
    pub(super) fn is_singular(m: &IntMatrix) -> bool {
        if m.size() == 0 {
            return false;
        }
        let bound = hadamard_bound(m);
        let mut modulus = BigInt::one();
        for p in primes() {
            if !singular_mod(reduce_matrix(m, p), p) {
                return false;
            }
            modulus *= p;
            if modulus > bound {
                return true;
            }
        }
        unreachable!("prime supply exhausted")
    }

    fn row_norm_inf(m: &IntMatrix) -> BigInt {
        let n = m.size();
        (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).abs()).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }

    /// `Π factors = 0` (an empty product is the identity). Every entry of the
    /// product is at most `Π ‖F‖_∞` in absolute value.
    pub(super) fn product_is_zero(n: usize, factors: &[IntMatrix]) -> bool {
        if n == 0 {
            return true;
        }
        if factors.is_empty() {
            return false;
        }
        let bound: BigInt = factors.iter().map(row_norm_inf).product();
        let mut modulus = BigInt::one();
        for p in primes() {
            let mut acc = reduce_matrix(&factors[0], p);
            for f in &factors[1..] {
                let f = reduce_matrix(f, p);
                acc = acc
                    .par_iter()
                    .map(|row| {
                        (0..n)
                            .map(|j| {
                                row.iter()
                                    .zip(&f)
                                    .fold(0u128, |s, (&x, fr)| {
                                        (s + u128::from(x) * u128::from(fr[j])) % u128::from(p)
                                    }) as u64
                            })
                            .collect()
                    })
                    .collect();
            }
            if acc.iter().flatten().any(|&x| x != 0) {
                return false;
            }
            modulus *= p;
            if modulus > bound {
                return true;
            }
        }
        unreachable!("prime supply exhausted")
    }

}

/// Largest absolute entry, used only for diagnostics.
pub fn max_abs_entry(m: &IntMatrix) -> BigInt {
    m.entries.iter().map(Signed::abs).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegeom::GeometryProblem;
    use crate::weylgroup::TypeSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fano() -> IncidenceMatrix {
        GeometryProblem::new("A2".parse().unwrap(), 2, 1, TypeSet::new(vec![2], 2).unwrap())
            .unwrap()
            .build_incidence()
            .unwrap()
    }

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Rank mod p by brute force: largest k with a nonzero k×k minor,
    /// determinants by cofactor expansion.
    fn rank_by_minors(rows: &[Vec<i64>], p: i64) -> usize {
        fn det(m: &[Vec<i64>], p: i64) -> i64 {
            if m.len() == 1 {
                return m[0][0].rem_euclid(p);
            }
            let mut acc = 0;
            for j in 0..m.len() {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc = (acc + sign * m[0][j] * det(&minor, p)).rem_euclid(p);
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let (nr, nc) = (rows.len(), rows[0].len());
        for k in (1..=nr.min(nc)).rev() {
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let m: Vec<Vec<i64>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j]).collect()).collect();
                    if det(&m, p) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_examples() {
        for p in [2, 3, 5, 7] {
            for n in 1..8 {
                let id: Vec<Vec<i64>> =
                    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
                assert_eq!(MatrixModP::from_rows(p, &id).unwrap().rank(), n);
                let ones = vec![vec![1i64; n]; n];
                assert_eq!(MatrixModP::from_rows(p, &ones).unwrap().rank(), 1);
            }
        }
        let a = fano();
        assert_eq!(MatrixModP::from_incidence(&a, 2).unwrap().rank(), 3);
        let empty: Vec<Vec<i64>> = vec![];
        assert_eq!(MatrixModP::from_rows(3, &empty).unwrap().rank(), 0);
        assert!(MatrixModP::from_rows(4, &empty).is_err());
    }

    #[test]
    fn fano_rank_matches_minor_oracle() {
        let a = fano();
        let rows: Vec<Vec<i64>> = a.rows().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect();
        for p in [2, 3, 5] {
            let expected = rank_by_minors(&rows, p as i64);
            assert_eq!(MatrixModP::from_rows(p, &rows).unwrap().rank(), expected, "p={p}");
        }
        assert_eq!(rank_by_minors(&rows, 2), 3);
    }

    #[test]
    fn small_random_against_minor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let p = [2u64, 3, 5][rng.gen_range(0..3)];
            let (nr, nc) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let rows: Vec<Vec<i64>> = (0..nr)
                .map(|_| (0..nc).map(|_| rng.gen_range(-3..4)).collect())
                .collect();
            let m = MatrixModP::from_rows(p, &rows).unwrap();
            assert_eq!(m.rank(), rank_by_minors(&rows, p as i64));
            assert_eq!(m.transpose().rank(), m.rank());
        }
    }

    #[test]
    fn packed_agrees_with_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for size in [1usize, 63, 64, 65, 130, 500] {
            let rows: Vec<Vec<u8>> = (0..size)
                .map(|_| (0..size + 3).map(|_| u8::from(rng.gen_bool(0.1))).collect())
                .collect();
            let packed = MatrixModP::from_rows(2, &rows).unwrap();
            let dense = MatrixModP::dense_from_rows(2, &rows).unwrap();
            assert!(packed.is_packed() && !dense.is_packed());
            assert_eq!(packed.rank(), dense.rank(), "size {size}");
        }
    }

    #[test]
    fn permutation_invariance() {
        let a = fano();
        let rows: Vec<Vec<u8>> = a.rows().map(<[u8]>::to_vec).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2, 3] {
            let base = MatrixModP::from_rows(p, &rows).unwrap().rank();
            for _ in 0..20 {
                let mut perm_rows: Vec<usize> = (0..7).collect();
                let mut perm_cols: Vec<usize> = (0..7).collect();
                for i in (1..7).rev() {
                    perm_rows.swap(i, rng.gen_range(0..=i));
                    perm_cols.swap(i, rng.gen_range(0..=i));
                }
                let shuffled: Vec<Vec<u8>> = perm_rows
                    .iter()
                    .map(|&i| perm_cols.iter().map(|&j| rows[i][j]).collect())
                    .collect();
                assert_eq!(MatrixModP::from_rows(p, &shuffled).unwrap().rank(), base);
            }
        }
    }

    #[test]
    fn gram_examples() {
        let id = IncidenceMatrix::from_rows(
            crate::Family::A,
            1,
            2,
            TypeSet::empty(),
            TypeSet::empty(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        assert_eq!(gram(&id), IntMatrix::identity(3));
        let ones = IncidenceMatrix::from_rows(
            crate::Family::A,
            1,
            2,
            TypeSet::empty(),
            TypeSet::empty(),
            vec![vec![1; 3]; 3],
        )
        .unwrap();
        assert_eq!(gram(&ones), ints(&[&[3, 3, 3], &[3, 3, 3], &[3, 3, 3]]));
        let g = gram(&fano());
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(*g.get(i, j), BigInt::from(if i == j { 4 } else { 2 }));
            }
        }
        assert!(g.is_symmetric());
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(ints(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(ints(&[&[0, 1], &[1, 0]]).rank(), 2);
        assert_eq!(ints(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(ints(&[&[2, 1, 3], &[4, 2, 6], &[1, 1, 1]]).rank(), 2);
    }

    #[test]
    fn eigen_power_examples() {
        let r = check_eigen_powers(&IntMatrix::identity(4), 3, 4).unwrap();
        assert!(r.ok);
        assert_eq!(r.exponents, vec![0]);
        assert!(!r.zero_eigenvalue);

        let two = IntMatrix::scalar(3, BigInt::from(2));
        assert!(!check_eigen_powers(&two, 3, 6).unwrap().ok);

        let r = check_eigen_powers(&gram(&fano()), 2, 4).unwrap();
        assert!(r.ok);
        assert_eq!(r.exponents, vec![1, 4]);

        // singular: [[1,1],[1,1]] has eigenvalues 0 and 2
        let r = check_eigen_powers(&ints(&[&[1, 1], &[1, 1]]), 2, 3).unwrap();
        assert!(r.ok && r.zero_eigenvalue);
        assert_eq!(r.exponents, vec![1]);

        let big = IntMatrix::identity(MAX_SPECTRAL_SIZE + 1);
        assert!(matches!(
            check_eigen_powers(&big, 2, 1),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
