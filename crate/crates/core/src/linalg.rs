//! Exact integer matrices: bi-adjacency matrices of regions, determinants,
//! permanents and ranks. No floating point anywhere.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::region::TriangularRegion;
use crate::tiling::{enumerate_tilings, TilingCount};

/// Column limit for inclusion-exclusion permanents.
pub const DEFAULT_PERMANENT_COLUMNS: usize = 24;

/// State budget for the row-by-row permanent used beyond the column limit.
pub const SPARSE_PERMANENT_STATES: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
    row_labels: Option<Vec<Monomial>>,
    col_labels: Option<Vec<Monomial>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row_labels(&self) -> Option<&[Monomial]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[Monomial]> {
        self.col_labels.as_deref()
    }

    pub fn with_labels(mut self, rows: Vec<Monomial>, cols: Vec<Monomial>) -> Self {
        assert_eq!(rows.len(), self.rows);
        assert_eq!(cols.len(), self.cols);
        self.row_labels = Some(rows);
        self.col_labels = Some(cols);
        self
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Plain-text grid, one row per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    pub fn dump(&self) -> MatrixDump {
        let labels = |ls: &Option<Vec<Monomial>>| {
            ls.as_ref()
                .map(|ls| ls.iter().map(ToString::to_string).collect())
        };
        MatrixDump {
            rows: self.rows,
            cols: self.cols,
            row_labels: labels(&self.row_labels),
            col_labels: labels(&self.col_labels),
            entries: self
                .to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Option<Vec<String>>,
    pub col_labels: Option<Vec<String>>,
    /// Entries as decimal strings.
    pub entries: Vec<Vec<String>>,
}

/// `Z(T)`: rows are the down labels, columns the up labels (both descending
/// revlex), with a 1 where the two triangles share an edge.
pub fn biadjacency(region: &TriangularRegion) -> IntegerMatrix {
    let rows = region.down_labels().len();
    let cols = region.up_labels().len();
    let mut m = IntegerMatrix::zeros(rows, cols);
    for (i, ups) in region.adjacency().into_iter().enumerate() {
        for j in ups {
            m.set(i, j, BigInt::one());
        }
    }
    m.with_labels(region.down_labels().to_vec(), region.up_labels().to_vec())
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntegerMatrix) -> Result<BigInt> {
    m.require_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = (&row[j] * &pivot_row[k] - &row[k] * &pivot_row[j]) / &prev;
                row[j] = v;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Exact rank over the rationals by fraction-free elimination.
pub fn rank_bareiss(m: &IntegerMatrix) -> usize {
    let mut a = m.to_rows();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            for j in col + 1..m.cols {
                let v = (&row[j] * &pivot_row[col] - &row[col] * &pivot_row[j]) / &prev;
                row[j] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        r += 1;
    }
    r
}

const MERSENNE_61: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(MERSENNE_61)) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn residue(v: &BigInt) -> u64 {
    let p = BigInt::from(MERSENNE_61);
    let mut r = v % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().expect("residue below p")
}

/// Rank modulo the prime `2^61 - 1`. Never exceeds the rational rank.
pub fn rank_mod_prime(m: &IntegerMatrix) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(residue).collect())
        .collect();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = powmod(a[r][col], MERSENNE_61 - 2);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = mulmod(row[col], inv);
            for j in col..m.cols {
                if pivot_row[j] != 0 {
                    let sub = mulmod(f, pivot_row[j]);
                    row[j] = (row[j] + MERSENNE_61 - sub) % MERSENNE_61;
                }
            }
        }
        r += 1;
    }
    r
}

/// Exact rank over the rationals.
///
/// A full rank modulo a prime certifies full rational rank, since reduction
/// mod `p` can only lower the rank. Otherwise the fraction-free elimination
/// decides.
pub fn rank(m: &IntegerMatrix) -> usize {
    let full = m.rows.min(m.cols);
    if rank_mod_prime(m) == full {
        return full;
    }
    rank_bareiss(m)
}

/// Permanent with the default column limit.
pub fn permanent(m: &IntegerMatrix) -> Result<BigInt> {
    permanent_with_limit(m, DEFAULT_PERMANENT_COLUMNS)
}

/// Inclusion-exclusion up to `max_columns` columns; wider matrices go
/// through [`permanent_sparse`], which fails once its state budget is spent.
pub fn permanent_with_limit(m: &IntegerMatrix, max_columns: usize) -> Result<BigInt> {
    m.require_square()?;
    if m.cols <= max_columns {
        return permanent_ryser(m);
    }
    permanent_sparse(m, SPARSE_PERMANENT_STATES).ok_or(Error::PermanentTooLarge {
        cols: m.cols,
        limit: max_columns,
    })
}

/// Ryser's formula, visiting column subsets in Gray-code order so that each
/// step adds or removes one column from the running row sums.
pub fn permanent_ryser(m: &IntegerMatrix) -> Result<BigInt> {
    m.require_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    assert!(n < 63, "inclusion-exclusion over {n} columns");
    let small: Option<Vec<i64>> = m
        .entries
        .iter()
        .map(|v| v.to_i64().filter(|x| x.unsigned_abs() < 1 << 31))
        .collect();
    let Some(small) = small else {
        return Ok(ryser_big(m));
    };
    let mut sums = vec![0i64; n];
    let mut in_set = vec![false; n];
    let mut total = BigInt::zero();
    let mut acc: i128 = 0;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        in_set[j] = !in_set[j];
        let sign = if in_set[j] { 1 } else { -1 };
        for (i, s) in sums.iter_mut().enumerate() {
            *s += sign * small[i * n + j];
        }
        // subset size parity is the parity of the Gray code's popcount
        let negative = (n as u32 - (k ^ (k >> 1)).count_ones()) % 2 == 1;
        let term = match sums
            .iter()
            .try_fold(1i128, |p, &s| p.checked_mul(i128::from(s)))
        {
            Some(0) => continue,
            Some(p) => p,
            None => {
                let p: BigInt = sums.iter().map(|&s| BigInt::from(s)).product();
                total += if negative { -p } else { p };
                continue;
            }
        };
        let term = if negative { -term } else { term };
        acc = match acc.checked_add(term) {
            Some(v) => v,
            None => {
                total += BigInt::from(acc);
                term
            }
        };
    }
    Ok(total + BigInt::from(acc))
}

fn ryser_big(m: &IntegerMatrix) -> BigInt {
    let n = m.rows;
    let mut sums = vec![BigInt::zero(); n];
    let mut in_set = vec![false; n];
    let mut total = BigInt::zero();
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        in_set[j] = !in_set[j];
        for (i, s) in sums.iter_mut().enumerate() {
            if in_set[j] {
                *s += m.get(i, j);
            } else {
                *s -= m.get(i, j);
            }
        }
        let p: BigInt = sums.iter().product();
        if (n as u32 - (k ^ (k >> 1)).count_ones()) % 2 == 1 {
            total -= p;
        } else {
            total += p;
        }
    }
    total
}

/// Permanent by expanding one row at a time over the set of columns used so
/// far. Cheap for sparse banded matrices such as bi-adjacency matrices.
/// Returns `None` for more than 128 columns or when the number of partial
/// states exceeds `max_states`.
pub fn permanent_sparse(m: &IntegerMatrix, max_states: usize) -> Option<BigInt> {
    if !m.is_square() || m.cols > 128 {
        return None;
    }
    let mut states: HashMap<u128, BigInt> = HashMap::from([(0u128, BigInt::one())]);
    for i in 0..m.rows {
        let nonzero: Vec<(usize, &BigInt)> = (0..m.cols)
            .map(|j| (j, m.get(i, j)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let mut next: HashMap<u128, BigInt> = HashMap::new();
        for (mask, val) in &states {
            for &(j, v) in &nonzero {
                let bit = 1u128 << j;
                if mask & bit == 0 {
                    *next.entry(mask | bit).or_insert_with(BigInt::zero) += val * v;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.len() > max_states {
            return None;
        }
        states = next;
    }
    Some(states.into_values().sum())
}

/// `per Z(T)`, falling back to counting tilings when the matrix is too large
/// for the permanent routines.
pub fn region_permanent(region: &TriangularRegion, max_columns: usize) -> Result<BigInt> {
    let z = biadjacency(region);
    match permanent_with_limit(&z, max_columns) {
        Err(Error::PermanentTooLarge { .. }) => match enumerate_tilings(region, u64::MAX) {
            TilingCount::Exact(n) => Ok(BigInt::from(n)),
            TilingCount::Exceeded(_) => unreachable!("cap is u64::MAX"),
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::region::build_region;

    fn region(s: &str, d: u32) -> TriangularRegion {
        build_region(&s.parse().unwrap(), d).unwrap()
    }

    fn mat(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn hexagon_biadjacency() {
        let z = biadjacency(&region("x^2, y^2, z^2", 3));
        assert_eq!(
            z,
            mat(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).with_labels(
                vec![
                    Monomial::new(1, 0, 0),
                    Monomial::new(0, 1, 0),
                    Monomial::new(0, 0, 1)
                ],
                vec![
                    Monomial::new(1, 1, 0),
                    Monomial::new(1, 0, 1),
                    Monomial::new(0, 1, 1)
                ],
            )
        );
        assert_eq!(determinant(&z).unwrap(), BigInt::from(-2));
        assert_eq!(permanent(&z).unwrap(), BigInt::from(2));
    }

    #[test]
    fn small_region_matrix() {
        let z = biadjacency(&region("xy, y^2, z^3", 4));
        // rows x^2, xz, yz, z^2; cols x^3, x^2z, xz^2, yz^2
        assert_eq!(
            z,
            mat(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]]).with_labels(
                z.row_labels().unwrap().to_vec(),
                z.col_labels().unwrap().to_vec()
            )
        );
        assert_eq!(determinant(&z).unwrap().abs(), BigInt::one());
        assert_eq!(rank(&z), 4);
    }

    #[test]
    fn empty_matrices() {
        let z = biadjacency(&build_region(&MonomialIdeal::unit(), 3).unwrap());
        assert_eq!((z.rows(), z.cols()), (0, 0));
        assert_eq!(determinant(&z).unwrap(), BigInt::one());
        assert_eq!(permanent(&z).unwrap(), BigInt::one());
        assert_eq!(rank(&IntegerMatrix::zeros(0, 5)), 0);
        assert_eq!(rank(&IntegerMatrix::zeros(4, 0)), 0);
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            determinant(&IntegerMatrix::identity(5)).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            determinant(&mat(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&IntegerMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
        let z = biadjacency(&region("x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z", 8));
        assert!(z.is_square());
        assert_eq!(determinant(&z).unwrap(), BigInt::zero());
    }

    #[test]
    fn permanent_basics() {
        assert_eq!(
            permanent(&mat(&[&[1, 1], &[1, 1]])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            permanent(&mat(&[&[1, 2, 3], &[0, 0, 0], &[4, 5, 6]])).unwrap(),
            BigInt::zero()
        );
        assert!(permanent(&IntegerMatrix::zeros(2, 3)).is_err());
        // all-ones n x n has permanent n!
        let ones = IntegerMatrix::from_rows(&vec![vec![1i64; 7]; 7]);
        assert_eq!(permanent(&ones).unwrap(), BigInt::from(5040));
        assert_eq!(
            permanent_sparse(&ones, 1 << 20).unwrap(),
            BigInt::from(5040)
        );
        // entries beyond the small-integer path
        let big = mat(&[&[1 << 40, 3], &[5, 1 << 40]]);
        assert_eq!(
            permanent(&big).unwrap(),
            BigInt::from(1i64 << 40) * BigInt::from(1i64 << 40) + 15
        );
    }

    #[test]
    fn permanent_limit_and_fallback() {
        let t = region("x^4, y^4, z^4", 6);
        let z = biadjacency(&t);
        assert_eq!(permanent_with_limit(&z, 2).unwrap(), BigInt::from(20));
        assert!(permanent_sparse(&z, 1).is_none());
        assert_eq!(region_permanent(&t, 2).unwrap(), BigInt::from(20));
    }

    #[test]
    fn rank_examples() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_bareiss(&m), 2);
        let m = mat(&[&[0, 0, 1, 2], &[0, 0, 2, 4], &[0, 3, 0, 1]]);
        assert_eq!(rank_bareiss(&m), 2);
        assert_eq!(rank_bareiss(&m.transpose()), 2);
    }

    #[test]
    fn dumps() {
        let z = biadjacency(&region("x^2, y^2, z^2", 3));
        let d = z.dump();
        assert_eq!(d.row_labels.unwrap(), ["x", "y", "z"]);
        assert_eq!(d.col_labels.unwrap(), ["x*y", "x*z", "y*z"]);
        assert_eq!(d.entries[2], ["0", "1", "1"]);
        assert_eq!(z.to_text(), "1 1 0\n1 0 1\n0 1 1\n");
    }
}
