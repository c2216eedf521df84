//! Explicit families of monomial ideals whose quotients have the weak
//! Lefschetz property and whose syzygy bundles are semistable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Degrees `d_1, ..., d_t` of a family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    degrees: Vec<u32>,
    d: u32,
}

impl FamilySpec {
    /// Checks `t >= 3`, that `d = (d_1 + ... + d_t)/(t - 1)` is an integer
    /// exceeding every `d_i`, and that at most three `d - d_i` are odd.
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        let t = degrees.len();
        if t < 3 {
            return Err(Error::Family(format!("need at least 3 degrees, got {t}")));
        }
        if let Some(i) = degrees.iter().position(|&e| e == 0) {
            return Err(Error::Family(format!("d_{} must be positive", i + 1)));
        }
        let sum: u64 = degrees.iter().map(|&e| u64::from(e)).sum();
        let den = (t - 1) as u64;
        if !sum.is_multiple_of(den) {
            return Err(Error::Family(format!(
                "degree sum {sum} is not divisible by t - 1 = {den}"
            )));
        }
        let d = (sum / den) as u32;
        if let Some(i) = degrees.iter().position(|&e| e >= d) {
            return Err(Error::Family(format!(
                "d_{} = {} is not below d = {d}",
                i + 1,
                degrees[i]
            )));
        }
        let odd = degrees.iter().filter(|&&e| (d - e) % 2 == 1).count();
        if odd > 3 {
            return Err(Error::Family(format!(
                "{odd} of the differences d - d_i are odd, at most 3 allowed"
            )));
        }
        Ok(FamilySpec { degrees, d })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Reorders so that every odd `d - d_i` sits among the first three
    /// positions and `d_3 <= min(d_1, d_2)`. Both steps are stable: odd
    /// entries first, then even ones in input order; the last occurrence of
    /// the smallest corner degree moves to position three.
    pub fn reindexed(&self) -> Vec<u32> {
        let d = self.d;
        let (odd, even): (Vec<u32>, Vec<u32>) =
            self.degrees.iter().partition(|&&e| (d - e) % 2 == 1);
        let mut order: Vec<u32> = odd.into_iter().chain(even).collect();
        let corner_min = *order[..3].iter().min().unwrap();
        let pos = order[..3].iter().rposition(|&e| e == corner_min).unwrap();
        let smallest = order.remove(pos);
        order.insert(2, smallest);
        // non-corner entries keep input order
        let corners: Vec<u32> = order[..3].to_vec();
        let mut rest = self.degrees.clone();
        for c in &corners {
            let i = rest.iter().position(|e| e == c).unwrap();
            rest.remove(i);
        }
        corners.into_iter().chain(rest).collect()
    }
}

/// A constructed family member together with its validation data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyIdeal {
    pub ideal: MonomialIdeal,
    /// `m_1, ..., m_t` in construction order.
    pub generators: Vec<Monomial>,
    pub degrees: Vec<u32>,
    pub d: u32,
    pub min_lcm_degree: u32,
    pub notes: Vec<String>,
}

const M5_NOTE: &str = "m_5 uses z-exponent -2d - 2 + d_3 + d_4 + d_5 so that deg m_5 = d_5";

fn exponent(index: usize, var: char, value: i64) -> Result<u32> {
    u32::try_from(value).map_err(|_| Error::FamilyGenerator {
        index,
        reason: format!("negative exponent {value} of {var}"),
    })
}

fn monomial(index: usize, x: i64, y: i64, z: i64) -> Result<Monomial> {
    Ok(Monomial::new(
        exponent(index, 'x', x)?,
        exponent(index, 'y', y)?,
        exponent(index, 'z', z)?,
    ))
}

/// `(x^{d_1}, y^{d_2}, z^{d_3}, m_4, ..., m_t)` built from the degree list
/// after [`FamilySpec::reindexed`].
pub fn example_family(spec: &FamilySpec) -> Result<FamilyIdeal> {
    let degs = spec.reindexed();
    let d = i64::from(spec.d());
    let t = degs.len();
    // 1-based access
    let dd = |k: usize| i64::from(degs[k - 1]);
    let sum_d = |from: usize, to: usize| (from..=to).map(dd).sum::<i64>();
    let sum_gap = |from: usize, to: usize| (from..=to).map(|k| d - dd(k)).sum::<i64>();

    let mut gens = vec![
        Monomial::new(degs[0], 0, 0),
        Monomial::new(0, degs[1], 0),
        Monomial::new(0, 0, degs[2]),
    ];
    for i in 4..=t {
        let m = match i {
            4 => monomial(i, d - dd(3), 1, -d - 1 + dd(3) + dd(4))?,
            5 => monomial(
                i,
                2 * d - dd(3) - dd(4),
                2,
                -2 * d - 2 + dd(3) + dd(4) + dd(5),
            )?,
            _ if i % 2 == 0 => monomial(
                i,
                d - dd(3),
                1 + sum_gap(4, i - 1),
                -d * (i as i64 - 3) - 1 + sum_d(3, i),
            )?,
            _ => monomial(
                i,
                -1 + sum_gap(3, i - 1),
                2,
                -d * (i as i64 - 3) - 1 + sum_d(3, i),
            )?,
        };
        gens.push(m);
    }
    let mut notes = Vec::new();
    if t >= 5 {
        notes.push(M5_NOTE.to_string());
    }
    validate(gens, degs, spec.d(), notes)
}

/// The family with `d_1 = 2t - 4`, `d_2 = d_3 = d - 1` and the remaining
/// degrees `d - 2`, written out in closed form.
pub fn convenient_family(t: usize, d: u32) -> Result<FamilyIdeal> {
    if t < 3 {
        return Err(Error::Family(format!("t = {t} must be at least 3")));
    }
    let d_min = 2 * t as i64 - 3;
    if i64::from(d) < d_min {
        return Err(Error::Family(format!(
            "d = {d} must be at least 2t - 3 = {d_min}"
        )));
    }
    let di = i64::from(d);
    let mut gens = vec![
        Monomial::new(2 * t as u32 - 4, 0, 0),
        Monomial::new(0, d - 1, 0),
        Monomial::new(0, 0, d - 1),
    ];
    if t >= 4 {
        gens.push(monomial(4, 1, 1, di - 4)?);
    }
    if t >= 5 {
        gens.push(monomial(5, 3, 2, di - 7)?);
    }
    for i in 6..=t {
        let i64_ = i as i64;
        let m = if i % 2 == 0 {
            monomial(i, 1, 2 * i64_ - 7, di + 4 - 2 * i64_)?
        } else {
            monomial(i, 2 * i64_ - 8, 2, di + 4 - 2 * i64_)?
        };
        gens.push(m);
    }
    let degrees = [2 * t as u32 - 4, d - 1, d - 1]
        .into_iter()
        .chain(std::iter::repeat_n(d - 2, t - 3))
        .collect();
    validate(gens, degrees, d, Vec::new())
}

fn validate(
    gens: Vec<Monomial>,
    degrees: Vec<u32>,
    d: u32,
    notes: Vec<String>,
) -> Result<FamilyIdeal> {
    for (i, (g, &e)) in gens.iter().zip(&degrees).enumerate() {
        if g.degree() != e {
            return Err(Error::FamilyGenerator {
                index: i + 1,
                reason: format!("{g} has degree {}, expected {e}", g.degree()),
            });
        }
    }
    let mut min_lcm = u32::MAX;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let l = gens[i].lcm(gens[j]).degree();
            min_lcm = min_lcm.min(l);
            if l <= d {
                return Err(Error::FamilyGenerator {
                    index: j + 1,
                    reason: format!(
                        "lcm({}, {}) has degree {l}, need at least {}",
                        gens[i],
                        gens[j],
                        d + 1
                    ),
                });
            }
        }
    }
    let ideal = MonomialIdeal::new(gens.iter().copied());
    if ideal.len() != gens.len() {
        return Err(Error::Family("generators are not minimal".into()));
    }
    Ok(FamilyIdeal {
        ideal,
        generators: gens,
        degrees,
        d,
        min_lcm_degree: min_lcm,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    const IDEAL_8_13: &str = "x^12, y^12, z^12, xyz^9, x^3y^2z^6, xy^5z^5, x^6y^2z^3, xy^9z";

    #[test]
    fn eight_generators_in_degree_13() {
        let spec = FamilySpec::new(vec![12, 12, 12, 11, 11, 11, 11, 11]).unwrap();
        assert_eq!(spec.d(), 13);
        let f = example_family(&spec).unwrap();
        assert_eq!(f.ideal, ideal(IDEAL_8_13));
        assert_eq!(f.generators[4], Monomial::new(3, 2, 6));
        assert!(f.min_lcm_degree >= 14);
        assert_eq!(f.notes.len(), 1);
    }

    #[test]
    fn convenient_matches_closed_form() {
        let f = convenient_family(8, 13).unwrap();
        assert_eq!(f.ideal, ideal(IDEAL_8_13));
        assert_eq!(f.d, 13);
        let g = convenient_family(3, 5).unwrap();
        assert_eq!(g.ideal, ideal("x^2, y^4, z^4"));
    }

    #[test]
    fn t_equal_three_is_pure_powers() {
        let f = example_family(&FamilySpec::new(vec![3, 4, 5]).unwrap()).unwrap();
        assert_eq!(f.d, 6);
        assert_eq!(f.ideal.len(), 3);
        assert!(f.ideal.generators().iter().all(|g| g.is_pure_power()));
    }

    #[test]
    fn small_convenient_instance() {
        // z-exponent d - 7 vanishes for m_5
        let f = convenient_family(5, 7).unwrap();
        assert_eq!(f.ideal, ideal("x^6, y^6, z^6, xyz^3, x^3y^2"));
        assert_eq!(f.min_lcm_degree, 8);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FamilySpec::new(vec![3, 3]).is_err());
        assert!(FamilySpec::new(vec![2, 2, 3]).is_err()); // 7/2
        assert!(FamilySpec::new(vec![4, 4, 8]).is_err()); // d = 8 not above d_3
                                                          // five odd differences
        assert!(FamilySpec::new(vec![4, 4, 4, 4, 4]).is_err());
        assert!(convenient_family(2, 10).is_err());
        assert!(convenient_family(6, 8).is_err());
    }

    #[test]
    fn reindexing_moves_odd_gaps_to_corners() {
        // d = 13: gaps 2, 1, 2, 1, 2 ... odd entries 12 go first
        let spec = FamilySpec::new(vec![11, 12, 11, 12, 11, 11, 11, 12]).unwrap();
        let r = spec.reindexed();
        assert_eq!(&r[..3], &[12, 12, 12]);
        assert!(r[3..].iter().all(|&e| (13 - e) % 2 == 0));
        // d = 7, gaps 2, 1, 3, 1
        let spec = FamilySpec::new(vec![5, 6, 4, 6]).unwrap();
        assert_eq!(spec.reindexed(), [6, 6, 4, 5]);
    }
}
