#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trireg::{build_region, Monomial, MonomialIdeal};

pub const CORPUS_SEED: u64 = 0x7269_6c65;

/// Random Artinian ideal: pure powers of degree 2..=7 plus up to four
/// mixed monomials of degree at most 9.
pub fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let mut gens = vec![
        Monomial::new(rng.gen_range(2..=7), 0, 0),
        Monomial::new(0, rng.gen_range(2..=7), 0),
        Monomial::new(0, 0, rng.gen_range(2..=7)),
    ];
    for _ in 0..rng.gen_range(0..=4) {
        let m = Monomial::new(
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
        );
        if m.degree() >= 2 {
            gens.push(m);
        }
    }
    MonomialIdeal::new(gens)
}

/// `(I, d)` pairs with `2 <= d <= 10` and non-empty `T_d(I)`. A balanced
/// `d` is chosen when one exists, with probability 3/4.
pub fn corpus(n: usize) -> Vec<(MonomialIdeal, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let ideal = random_ideal(&mut rng);
        let mut any = Vec::new();
        let mut balanced = Vec::new();
        for d in 2..=10 {
            let r = build_region(&ideal, d).unwrap();
            if r.is_empty() {
                continue;
            }
            any.push(d);
            if r.is_balanced() {
                balanced.push(d);
            }
        }
        if any.is_empty() {
            continue;
        }
        let pool = if !balanced.is_empty() && rng.gen_bool(0.75) {
            &balanced
        } else {
            &any
        };
        let d = pool[rng.gen_range(0..pool.len())];
        out.push((ideal, d));
    }
    out
}

pub fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect()
}

/// Plain Gauss-Jordan over the rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a = to_rational(rows);
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in c..m {
                    let v = &f * &a[r][k];
                    a[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn rational_det(rows: &[Vec<i64>]) -> BigInt {
    let mut a = to_rational(rows);
    let n = a.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for k in c..n {
                let v = &f * &a[c][k];
                a[i][k] -= v;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Sum over all permutations.
pub fn brute_permanent(rows: &[Vec<i64>]) -> BigInt {
    fn go(rows: &[Vec<i64>], i: usize, used: &mut Vec<bool>) -> BigInt {
        if i == rows.len() {
            return BigInt::one();
        }
        let mut s = BigInt::zero();
        for j in 0..rows.len() {
            if !used[j] && rows[i][j] != 0 {
                used[j] = true;
                s += BigInt::from(rows[i][j]) * go(rows, i + 1, used);
                used[j] = false;
            }
        }
        s
    }
    go(rows, 0, &mut vec![false; rows.len()])
}

/// Standard monomials of degree `j`, sorted greatest first: higher `x`
/// power wins after the smaller `z` power.
pub fn revlex_basis(ideal: &MonomialIdeal, j: u32) -> Vec<Monomial> {
    let mut v = Vec::new();
    for z in 0..=j {
        for y in 0..=j - z {
            let m = Monomial::new(j - y - z, y, z);
            if !ideal.generators().iter().any(|g| g.divides(m)) {
                v.push(m);
            }
        }
    }
    v.sort_by(|a, b| a.z.cmp(&b.z).then(a.y.cmp(&b.y)));
    v
}

/// Matrix of `x + y + z : [R/I]_{j} -> [R/I]_{j+1}`, rows indexed by the
/// target basis.
pub fn multiplication_matrix(
    ideal: &MonomialIdeal,
    j: u32,
) -> (Vec<Monomial>, Vec<Monomial>, Vec<Vec<i64>>) {
    let src = revlex_basis(ideal, j);
    let dst = revlex_basis(ideal, j + 1);
    let mut rows = vec![vec![0i64; src.len()]; dst.len()];
    for (c, s) in src.iter().enumerate() {
        let images = [
            Monomial::new(s.x + 1, s.y, s.z),
            Monomial::new(s.x, s.y + 1, s.z),
            Monomial::new(s.x, s.y, s.z + 1),
        ];
        for t in images {
            if let Some(r) = dst.iter().position(|&u| u == t) {
                rows[r][c] += 1;
            }
        }
    }
    (dst, src, rows)
}

pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect()
}
