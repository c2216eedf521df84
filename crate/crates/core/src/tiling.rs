//! Lozenge tilings of triangular regions.
//!
//! A lozenge joins a downward triangle `μ` with one of the upward triangles
//! `xμ`, `yμ`, `zμ`, so a tiling is a perfect matching of the down/up
//! adjacency graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, Var};
use crate::region::{Balance, TriangleCounts, TriangularRegion};

/// Default bound for [`enumerate_tilings`].
pub const DEFAULT_TILING_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Lozenge {
    pub down: Monomial,
    pub up: Monomial,
}

impl Lozenge {
    pub fn new(down: Monomial, up: Monomial) -> Result<Self> {
        if down.step_to(up).is_none() {
            return Err(Error::TilingMismatch(format!(
                "{up} is not adjacent to {down}"
            )));
        }
        Ok(Lozenge { down, up })
    }

    /// The variable `v` with `up = v * down`.
    pub fn orientation(&self) -> Var {
        self.down
            .step_to(self.up)
            .expect("lozenge triangles share an edge")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Tiling {
    lozenges: Vec<Lozenge>,
}

impl Tiling {
    /// Sorts by descending revlex order of the down label.
    pub fn new(mut lozenges: Vec<Lozenge>) -> Self {
        lozenges.sort_by_key(|l| std::cmp::Reverse(l.down));
        Tiling { lozenges }
    }

    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    pub fn len(&self) -> usize {
        self.lozenges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lozenges.is_empty()
    }

    /// Checks that every triangle of `region` lies in exactly one lozenge.
    pub fn validate(&self, region: &TriangularRegion) -> Result<()> {
        let mut down_used = vec![false; region.down_labels().len()];
        let mut up_used = vec![false; region.up_labels().len()];
        for l in &self.lozenges {
            if l.down.step_to(l.up).is_none() {
                return Err(Error::TilingMismatch(format!(
                    "{} and {} do not share an edge",
                    l.down, l.up
                )));
            }
            let i = region
                .down_index(l.down)
                .ok_or_else(|| Error::TilingMismatch(format!("{} is not in the region", l.down)))?;
            let j = region
                .up_index(l.up)
                .ok_or_else(|| Error::TilingMismatch(format!("{} is not in the region", l.up)))?;
            if std::mem::replace(&mut down_used[i], true) {
                return Err(Error::TilingMismatch(format!("{} covered twice", l.down)));
            }
            if std::mem::replace(&mut up_used[j], true) {
                return Err(Error::TilingMismatch(format!("{} covered twice", l.up)));
            }
        }
        if down_used.iter().chain(&up_used).any(|u| !u) {
            return Err(Error::TilingMismatch("some triangle is not covered".into()));
        }
        Ok(())
    }
}

/// Maximum matching of the down/up adjacency by augmenting paths. Entry `i`
/// is the up index matched with down triangle `i`.
pub fn maximum_matching(region: &TriangularRegion) -> Vec<Option<usize>> {
    let adj = region.adjacency();
    let mut up_match: Vec<Option<usize>> = vec![None; region.up_labels().len()];
    let mut seen = vec![false; up_match.len()];
    for i in 0..adj.len() {
        seen.iter_mut().for_each(|s| *s = false);
        augment(i, &adj, &mut up_match, &mut seen);
    }
    let mut down_match = vec![None; adj.len()];
    for (j, m) in up_match.iter().enumerate() {
        if let Some(i) = *m {
            down_match[i] = Some(j);
        }
    }
    down_match
}

fn augment(
    i: usize,
    adj: &[Vec<usize>],
    up_match: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        let free = match up_match[j] {
            None => true,
            Some(k) => augment(k, adj, up_match, seen),
        };
        if free {
            up_match[j] = Some(i);
            return true;
        }
    }
    false
}

/// A tiling of `region` if one exists.
pub fn find_tiling(region: &TriangularRegion) -> Option<Tiling> {
    if !region.is_balanced() {
        return None;
    }
    let matching = maximum_matching(region);
    let lozenges = matching
        .iter()
        .enumerate()
        .map(|(i, m)| {
            m.map(|j| Lozenge {
                down: region.down_labels()[i],
                up: region.up_labels()[j],
            })
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Tiling::new(lozenges))
}

pub fn is_tileable(region: &TriangularRegion) -> bool {
    find_tiling(region).is_some()
}

/// Outcome of the structural tileability test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructuralVerdict {
    Tileable,
    Unbalanced {
        counts: TriangleCounts,
    },
    /// The monomial subregion of `witness` has more down than up triangles.
    HeavySubregion {
        witness: Monomial,
        counts: TriangleCounts,
    },
}

impl StructuralVerdict {
    pub fn is_tileable(&self) -> bool {
        matches!(self, StructuralVerdict::Tileable)
    }
}

/// Tileability via the absence of down-heavy monomial subregions.
///
/// Subregions are scanned from the largest down: monomials by ascending
/// degree, and within a degree in descending revlex order. The first
/// down-heavy one is reported.
pub fn is_tileable_structural(region: &TriangularRegion) -> StructuralVerdict {
    let counts = region.triangle_counts();
    if counts.balance != Balance::Balanced {
        return StructuralVerdict::Unbalanced { counts };
    }
    match heavy_subregions(region).next() {
        Some((witness, counts)) => StructuralVerdict::HeavySubregion { witness, counts },
        None => StructuralVerdict::Tileable,
    }
}

/// Every monomial whose subregion is down-heavy, in scan order.
pub fn heavy_subregions(
    region: &TriangularRegion,
) -> impl Iterator<Item = (Monomial, TriangleCounts)> + '_ {
    let d = region.d();
    (0..d.saturating_sub(1))
        .flat_map(monomials_of_degree)
        .filter_map(move |m| {
            let counts = subregion_counts(region, m);
            (counts.balance == Balance::DownHeavy).then_some((m, counts))
        })
}

fn subregion_counts(region: &TriangularRegion, m: Monomial) -> TriangleCounts {
    let down = region
        .down_labels()
        .iter()
        .filter(|l| m.divides(**l))
        .count();
    let up = region.up_labels().iter().filter(|l| m.divides(**l)).count();
    let balance = match down.cmp(&up) {
        std::cmp::Ordering::Greater => Balance::DownHeavy,
        std::cmp::Ordering::Less => Balance::UpHeavy,
        std::cmp::Ordering::Equal => Balance::Balanced,
    };
    TriangleCounts { down, up, balance }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum TilingCount {
    Exact(u64),
    /// Enumeration stopped after passing the cap; the count is at least this.
    Exceeded(u64),
}

impl TilingCount {
    pub fn exact(self) -> Option<u64> {
        match self {
            TilingCount::Exact(n) => Some(n),
            TilingCount::Exceeded(_) => None,
        }
    }

    pub fn is_positive(self) -> bool {
        match self {
            TilingCount::Exact(n) | TilingCount::Exceeded(n) => n > 0,
        }
    }
}

/// Counts tilings by depth-first search, always branching on the free
/// triangle with the fewest free neighbours (ties: down before up, then
/// descending revlex). Stops once the count passes `cap`.
pub fn enumerate_tilings(region: &TriangularRegion, cap: u64) -> TilingCount {
    if !region.is_balanced() {
        return TilingCount::Exact(0);
    }
    let down_adj = region.adjacency();
    let mut up_adj = vec![Vec::new(); region.up_labels().len()];
    for (i, ups) in down_adj.iter().enumerate() {
        for &j in ups {
            up_adj[j].push(i);
        }
    }
    let mut search = Enumerator {
        down_adj,
        up_adj,
        down_free: vec![true; region.down_labels().len()],
        up_free: vec![true; region.up_labels().len()],
        count: 0,
        cap,
    };
    search.run();
    if search.count > cap {
        TilingCount::Exceeded(search.count)
    } else {
        TilingCount::Exact(search.count)
    }
}

struct Enumerator {
    down_adj: Vec<Vec<usize>>,
    up_adj: Vec<Vec<usize>>,
    down_free: Vec<bool>,
    up_free: Vec<bool>,
    count: u64,
    cap: u64,
}

enum Side {
    Down(usize),
    Up(usize),
}

impl Enumerator {
    fn run(&mut self) {
        if self.count > self.cap {
            return;
        }
        let Some((side, options)) = self.most_constrained() else {
            self.count += 1;
            return;
        };
        for other in options {
            let (i, j) = match side {
                Side::Down(i) => (i, other),
                Side::Up(j) => (other, j),
            };
            self.down_free[i] = false;
            self.up_free[j] = false;
            self.run();
            self.down_free[i] = true;
            self.up_free[j] = true;
            if self.count > self.cap {
                return;
            }
        }
    }

    /// The free vertex with the fewest free neighbours, with those
    /// neighbours; `None` once everything is matched.
    fn most_constrained(&self) -> Option<(Side, Vec<usize>)> {
        let mut best: Option<(usize, Side)> = None;
        for (i, ups) in self.down_adj.iter().enumerate() {
            if !self.down_free[i] {
                continue;
            }
            let n = ups.iter().filter(|&&j| self.up_free[j]).count();
            if best.as_ref().is_none_or(|(b, _)| n < *b) {
                best = Some((n, Side::Down(i)));
                if n == 0 {
                    break;
                }
            }
        }
        if best.as_ref().is_none_or(|(b, _)| *b > 0) {
            for (j, downs) in self.up_adj.iter().enumerate() {
                if !self.up_free[j] {
                    continue;
                }
                let n = downs.iter().filter(|&&i| self.down_free[i]).count();
                if best.as_ref().is_none_or(|(b, _)| n < *b) {
                    best = Some((n, Side::Up(j)));
                    if n == 0 {
                        break;
                    }
                }
            }
        }
        let (_, side) = best?;
        let options = match side {
            Side::Down(i) => self.down_adj[i]
                .iter()
                .copied()
                .filter(|&j| self.up_free[j])
                .collect(),
            Side::Up(j) => self.up_adj[j]
                .iter()
                .copied()
                .filter(|&i| self.down_free[i])
                .collect(),
        };
        Some((side, options))
    }
}

/// The three conditions tied together for perfectly-punctured regions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoOfThree {
    pub perfectly_punctured: bool,
    pub no_overpunctured_subregion: bool,
    pub tileable: bool,
    /// First monomial (in scan order) whose subregion is over-punctured, with its coefficient.
    pub overpunctured_witness: Option<(Monomial, i64)>,
}

impl TwoOfThree {
    fn holds(&self) -> bool {
        let n = [
            self.perfectly_punctured,
            self.no_overpunctured_subregion,
            self.tileable,
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        n != 2
    }
}

/// Evaluates perfect puncturing, absence of over-punctured monomial
/// subregions and tileability, and fails if exactly two of them hold.
pub fn two_of_three(region: &TriangularRegion) -> Result<TwoOfThree> {
    let d = region.d();
    let overpunctured_witness = (0..d).flat_map(monomials_of_degree).find_map(|m| {
        let sub = region
            .monomial_subregion(m)
            .expect("degree below the side length");
        let o = sub.overpuncturing();
        (o > 0).then_some((m, o))
    });
    let report = TwoOfThree {
        perfectly_punctured: region.is_perfectly_punctured(),
        no_overpunctured_subregion: overpunctured_witness.is_none(),
        tileable: is_tileable(region),
        overpunctured_witness,
    };
    if !report.holds() {
        return Err(Error::Consistency(format!(
            "two-of-three violated on T_{}({}): {:?}",
            d,
            region.source_ideal(),
            report
        )));
    }
    Ok(report)
}
