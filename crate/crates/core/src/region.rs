//! Triangular regions `T_d(I)` and their punctures.
//!
//! A region of side `d` consists of upward unit triangles labeled by the
//! degree `d - 1` monomials and downward ones labeled by degree `d - 2`
//! monomials; `T_d(I)` keeps the labels outside `I`. All geometry is
//! expressed through divisibility of labels.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{check_degree, minimal_generators, MonomialIdeal, DEFAULT_DEGREE_CAP};
use crate::monomial::{monomials_of_degree, Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularRegion {
    d: u32,
    up: Vec<Monomial>,
    down: Vec<Monomial>,
    source: MonomialIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Balance {
    DownHeavy,
    UpHeavy,
    Balanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleCounts {
    pub down: usize,
    pub up: usize,
    pub balance: Balance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Puncture {
    pub generator: Monomial,
    pub side_length: u32,
    pub boundary_contact: bool,
    pub floating: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PunctureRelation {
    Overlapping,
    Touching,
    Disjoint,
}

/// Position of `m` among the monomials of its degree in descending revlex.
pub(crate) fn revlex_index(m: Monomial) -> usize {
    let k = m.degree() as usize;
    let z = m.z as usize;
    z * (k + 1) - z * z.saturating_sub(1) / 2 + m.y as usize
}

fn find_desc(labels: &[Monomial], m: Monomial) -> Option<usize> {
    labels.binary_search_by(|p| m.cmp(p)).ok()
}

pub fn build_region(ideal: &MonomialIdeal, d: u32) -> Result<TriangularRegion> {
    build_region_capped(ideal, d, DEFAULT_DEGREE_CAP)
}

pub fn build_region_capped(ideal: &MonomialIdeal, d: u32, cap: u32) -> Result<TriangularRegion> {
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    check_degree(u64::from(d), cap)?;
    Ok(TriangularRegion {
        d,
        up: ideal.standard_monomials(d - 1),
        down: if d >= 2 {
            ideal.standard_monomials(d - 2)
        } else {
            Vec::new()
        },
        source: ideal.clone(),
    })
}

/// Relation between the punctures of two distinct monomials of degree `< d`,
/// read off from the degree of their least common multiple.
pub fn relate_punctures(m1: Monomial, m2: Monomial, d: u32) -> Result<PunctureRelation> {
    if m1 == m2 {
        return Err(Error::SamePuncture(m1));
    }
    for m in [m1, m2] {
        if m.degree() >= d {
            return Err(Error::DegreeTooLarge {
                monomial: m,
                degree: m.degree(),
                bound: d,
            });
        }
    }
    Ok(relation_unchecked(m1, m2, d))
}

fn relation_unchecked(m1: Monomial, m2: Monomial, d: u32) -> PunctureRelation {
    let l = m1.lcm(m2).degree();
    if l < d {
        PunctureRelation::Overlapping
    } else if l == d {
        PunctureRelation::Touching
    } else {
        PunctureRelation::Disjoint
    }
}

impl TriangularRegion {
    /// The side length.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Surviving upward labels (degree `d - 1`), descending revlex.
    pub fn up_labels(&self) -> &[Monomial] {
        &self.up
    }

    /// Surviving downward labels (degree `d - 2`), descending revlex.
    pub fn down_labels(&self) -> &[Monomial] {
        &self.down
    }

    pub fn source_ideal(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty() && self.down.is_empty()
    }

    pub fn up_index(&self, m: Monomial) -> Option<usize> {
        find_desc(&self.up, m)
    }

    pub fn down_index(&self, m: Monomial) -> Option<usize> {
        find_desc(&self.down, m)
    }

    pub fn triangle_counts(&self) -> TriangleCounts {
        let (down, up) = (self.down.len(), self.up.len());
        let balance = match down.cmp(&up) {
            std::cmp::Ordering::Greater => Balance::DownHeavy,
            std::cmp::Ordering::Less => Balance::UpHeavy,
            std::cmp::Ordering::Equal => Balance::Balanced,
        };
        TriangleCounts { down, up, balance }
    }

    pub fn is_balanced(&self) -> bool {
        self.down.len() == self.up.len()
    }

    /// Up neighbours of each down triangle, as indices into `up_labels`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.down
            .iter()
            .map(|&mu| {
                Var::ALL
                    .iter()
                    .filter_map(|&v| self.up_index(mu.times(v)))
                    .collect()
            })
            .collect()
    }

    /// The largest ideal `J` generated in degrees `< d` with `T_d(J) = self`.
    pub fn monomial_ideal(&self) -> MonomialIdeal {
        let d = self.d;
        // membership of every monomial of degree k < d in J, by revlex index
        let mut member: Vec<Vec<bool>> = vec![Vec::new(); d as usize];
        for k in (0..d).rev() {
            let row: Vec<bool> = monomials_of_degree(k)
                .map(|m| {
                    if k == d - 1 {
                        self.up_index(m).is_none()
                    } else {
                        let above = &member[k as usize + 1];
                        let multiples_out =
                            Var::ALL.iter().all(|&v| above[revlex_index(m.times(v))]);
                        multiples_out && (k + 2 != d || self.down_index(m).is_none())
                    }
                })
                .collect();
            member[k as usize] = row;
        }
        let gens = (0..d).flat_map(|k| {
            let member = &member;
            monomials_of_degree(k).filter(move |&m| {
                member[k as usize][revlex_index(m)]
                    && Var::ALL.iter().all(|&v| match m.div_var(v) {
                        Some(q) => !member[k as usize - 1][revlex_index(q)],
                        None => true,
                    })
            })
        });
        minimal_generators(gens)
    }

    /// One puncture per minimal generator of [`Self::monomial_ideal`], with
    /// floating flags resolved.
    pub fn punctures(&self) -> Vec<Puncture> {
        let j = self.monomial_ideal();
        let mut ps: Vec<Puncture> = j
            .generators()
            .iter()
            .map(|&g| Puncture {
                generator: g,
                side_length: self.d - g.degree(),
                boundary_contact: g.has_zero_exponent(),
                floating: true,
            })
            .collect();
        classify_floating(&mut ps, self.d);
        ps
    }

    /// Sub-region inside the puncture of `m`: labels of `self` divisible by
    /// `m`, divided by `m`. Equal to `T_{d - deg m}(I : m)`.
    pub fn monomial_subregion(&self, m: Monomial) -> Result<TriangularRegion> {
        if m.degree() >= self.d {
            return Err(Error::DegreeTooLarge {
                monomial: m,
                degree: m.degree(),
                bound: self.d,
            });
        }
        let quotient = |labels: &[Monomial]| -> Vec<Monomial> {
            labels.iter().filter_map(|&l| l.checked_div(m)).collect()
        };
        Ok(TriangularRegion {
            d: self.d - m.degree(),
            up: quotient(&self.up),
            down: quotient(&self.down),
            source: self.source.colon(m),
        })
    }

    /// Over-puncturing coefficient: total puncture side length minus `d`.
    pub fn overpuncturing(&self) -> i64 {
        let total: i64 = self
            .monomial_ideal()
            .generators()
            .iter()
            .map(|g| i64::from(self.d - g.degree()))
            .sum();
        total - i64::from(self.d)
    }

    pub fn is_perfectly_punctured(&self) -> bool {
        self.overpuncturing() == 0
    }

    /// The region obtained by renaming variables in every label.
    pub fn permute(&self, perm: [Var; 3]) -> TriangularRegion {
        let relabel = |ls: &[Monomial]| {
            let mut v: Vec<Monomial> = ls.iter().map(|l| l.permute(perm)).collect();
            crate::monomial::sort_desc(&mut v);
            v
        };
        TriangularRegion {
            d: self.d,
            up: relabel(&self.up),
            down: relabel(&self.down),
            source: self.source.permute(perm),
        }
    }

    pub fn same_triangles(&self, other: &TriangularRegion) -> bool {
        self.d == other.d && self.up == other.up && self.down == other.down
    }

    pub fn dump(&self) -> RegionDump {
        RegionDump {
            d: self.d,
            up: self.up.iter().map(ToString::to_string).collect(),
            down: self.down.iter().map(ToString::to_string).collect(),
            punctures: self
                .punctures()
                .into_iter()
                .map(|p| PunctureDump {
                    generator: p.generator.to_string(),
                    side: p.side_length,
                    floating: p.floating,
                })
                .collect(),
        }
    }
}

/// `𝔬_d(I)`: side lengths of the punctures of generators of degree `< d`, minus `d`.
pub fn overpuncturing_ideal(ideal: &MonomialIdeal, d: u32) -> i64 {
    let total: i64 = ideal
        .generators()
        .iter()
        .filter(|g| g.degree() < d)
        .map(|g| i64::from(d - g.degree()))
        .sum();
    total - i64::from(d)
}

/// Marks as non-floating every puncture connected, through overlaps or
/// touches, to one that meets the boundary. Everything else floats.
pub fn classify_floating(punctures: &mut [Puncture], d: u32) {
    let n = punctures.len();
    let mut grounded = vec![false; n];
    let mut queue = VecDeque::new();
    for (i, p) in punctures.iter().enumerate() {
        if p.boundary_contact {
            grounded[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if grounded[j] {
                continue;
            }
            let rel = relation_unchecked(punctures[i].generator, punctures[j].generator, d);
            if rel != PunctureRelation::Disjoint {
                grounded[j] = true;
                queue.push_back(j);
            }
        }
    }
    for (p, g) in punctures.iter_mut().zip(grounded) {
        p.floating = !g;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionDump {
    pub d: u32,
    pub up: Vec<String>,
    pub down: Vec<String>,
    pub punctures: Vec<PunctureDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PunctureDump {
    pub generator: String,
    pub side: u32,
    pub floating: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(x: u32, y: u32, z: u32) -> Monomial {
        Monomial::new(x, y, z)
    }

    fn region(s: &str, d: u32) -> TriangularRegion {
        build_region(&s.parse().unwrap(), d).unwrap()
    }

    const T8: &str = "x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z";
    const T8_PRIME: &str = "x^6, y^7, z^7, xy^4z^2, xy^2z^4, x^2y^2z^2";

    #[test]
    fn revlex_index_matches_enumeration() {
        for k in 0..9 {
            for (i, mono) in monomials_of_degree(k).enumerate() {
                assert_eq!(revlex_index(mono), i);
            }
        }
    }

    #[test]
    fn build_examples() {
        let t = region("xy, y^2, z^3", 4);
        assert_eq!(
            t.up_labels(),
            &[m(3, 0, 0), m(2, 0, 1), m(1, 0, 2), m(0, 1, 2)]
        );
        assert_eq!(
            t.down_labels(),
            &[m(2, 0, 0), m(1, 0, 1), m(0, 1, 1), m(0, 0, 2)]
        );

        let full = build_region(&MonomialIdeal::zero(), 4).unwrap();
        assert_eq!((full.up_labels().len(), full.down_labels().len()), (10, 6));

        assert!(build_region(&MonomialIdeal::unit(), 5).unwrap().is_empty());
        assert!(build_region(&MonomialIdeal::zero(), 1)
            .unwrap()
            .down_labels()
            .is_empty());
        assert_eq!(
            build_region(&MonomialIdeal::zero(), 0),
            Err(Error::InvalidDegree(0))
        );
        assert!(build_region_capped(&MonomialIdeal::zero(), 20, 10).is_err());
    }

    #[test]
    fn counts() {
        let c = region("xy, y^2, z^3", 4).triangle_counts();
        assert_eq!((c.down, c.up, c.balance), (4, 4, Balance::Balanced));
        let c = build_region(&MonomialIdeal::zero(), 4)
            .unwrap()
            .triangle_counts();
        assert_eq!((c.down, c.up, c.balance), (6, 10, Balance::UpHeavy));
        assert_eq!(region(T8, 8).triangle_counts().balance, Balance::Balanced);
    }

    #[test]
    fn monomial_ideal_of_region() {
        let t = region(T8, 8);
        let j = t.monomial_ideal();
        assert_eq!(j, "x^6, y^7, xy^5z, xy^2z^3, x^3y^2z".parse().unwrap());
        assert!(build_region(&j, 8).unwrap().same_triangles(&t));

        assert!(build_region(&MonomialIdeal::zero(), 5)
            .unwrap()
            .monomial_ideal()
            .is_zero());

        let t = region("xy, yz", 6);
        let j = t.monomial_ideal();
        assert!(j.contains(m(1, 1, 0)) && j.contains(m(0, 1, 1)));
        assert!(build_region(&j, 6).unwrap().same_triangles(&t));

        let empty = build_region(&MonomialIdeal::unit(), 3).unwrap();
        assert!(empty.monomial_ideal().is_unit());
    }

    #[test]
    fn puncture_sides() {
        let ps = region(T8, 8).punctures();
        let sides: Vec<(String, u32)> = ps
            .iter()
            .map(|p| (p.generator.to_string(), p.side_length))
            .collect();
        let mut expected = vec![
            ("x^6".to_string(), 2),
            ("y^7".to_string(), 1),
            ("x*y^5*z".to_string(), 1),
            ("x*y^2*z^3".to_string(), 2),
            ("x^3*y^2*z".to_string(), 2),
        ];
        expected.sort();
        let mut sides_sorted = sides.clone();
        sides_sorted.sort();
        assert_eq!(sides_sorted, expected);

        let single = region("xy^3z^2", 10).punctures();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].side_length, 4);
        assert!(single[0].floating);

        assert!(build_region(&MonomialIdeal::zero(), 6)
            .unwrap()
            .punctures()
            .is_empty());
    }

    #[test]
    fn relations() {
        assert_eq!(
            relate_punctures(m(7, 0, 0), m(5, 1, 1), 9).unwrap(),
            PunctureRelation::Touching
        );
        assert_eq!(
            relate_punctures(m(4, 2, 2), m(1, 3, 3), 9).unwrap(),
            PunctureRelation::Disjoint
        );
        assert_eq!(
            relate_punctures(m(1, 1, 0), m(0, 1, 1), 6).unwrap(),
            PunctureRelation::Overlapping
        );
        assert_eq!(
            relate_punctures(m(1, 1, 0), m(1, 1, 0), 6),
            Err(Error::SamePuncture(m(1, 1, 0)))
        );
        assert!(relate_punctures(m(6, 0, 0), m(1, 1, 0), 6).is_err());
    }

    #[test]
    fn floating_classification() {
        let ps = region(T8, 8).punctures();
        let mut grounded: Vec<String> = ps
            .iter()
            .filter(|p| !p.floating)
            .map(|p| p.generator.to_string())
            .collect();
        grounded.sort();
        assert_eq!(grounded, ["x^6", "y^7"]);
        assert_eq!(ps.iter().filter(|p| p.floating).count(), 3);
        for p in &ps {
            assert!(!(p.boundary_contact && p.floating));
        }
    }

    #[test]
    fn subregions() {
        let t = region(T8, 8);
        let sub = t.monomial_subregion(m(1, 2, 1)).unwrap();
        assert_eq!(sub.d(), 4);
        assert_eq!(sub.triangle_counts().balance, Balance::DownHeavy);
        assert_eq!(sub.overpuncturing(), 1);
        assert!(sub.same_triangles(&build_region(&t.source_ideal().colon(m(1, 2, 1)), 4).unwrap()));

        assert_eq!(t.monomial_subregion(Monomial::ONE).unwrap(), t);

        let t2 = region(T8_PRIME, 8);
        let sub = t2.monomial_subregion(m(1, 2, 2)).unwrap();
        assert_eq!(sub.triangle_counts().balance, Balance::DownHeavy);

        assert!(t.monomial_subregion(m(4, 4, 0)).is_err());
    }

    #[test]
    fn overpuncturing_examples() {
        assert_eq!(region(T8, 8).overpuncturing(), 0);
        assert_eq!(region("xy^3z^2", 10).overpuncturing(), -6);
        assert_eq!(
            region("x^7, x^4y^2z^2, xy^3z^3, y^7, z^7", 9).overpuncturing(),
            0
        );
        let i: MonomialIdeal = "xy, yz".parse().unwrap();
        let t = build_region(&i, 6).unwrap();
        assert!(t.overpuncturing() <= overpuncturing_ideal(&i, 6));
    }

    #[test]
    fn dump_is_sorted() {
        let dump = region("xy, y^2, z^3", 4).dump();
        assert_eq!(dump.up, ["x^3", "x^2*z", "x*z^2", "y*z^2"]);
        assert_eq!(dump.down, ["x^2", "x*z", "y*z", "z^2"]);
    }
}
