//! Monomial ideals of `K[x, y, z]` and the graded pieces of their quotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, sort_desc, Monomial, Var};

/// Default bound on degree arguments accepted at input boundaries.
pub const DEFAULT_DEGREE_CAP: u32 = 512;

pub(crate) fn check_degree(degree: u64, cap: u32) -> Result<()> {
    if degree > u64::from(cap) {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

/// A monomial ideal, kept as its minimal generating set in descending revlex
/// order. The empty set is the zero ideal; `{1}` is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

/// `h_{R/I}(j)` at one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct HilbertRecord {
    pub degree: u32,
    pub value: u64,
}

/// Drops every generator divisible by a different one (and duplicates).
pub fn minimal_generators<I: IntoIterator<Item = Monomial>>(gens: I) -> MonomialIdeal {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    // ascending degree: a divisor is always visited before its multiples
    all.sort_unstable();
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        if !kept.iter().any(|g| g.divides(m)) {
            kept.push(m);
        }
    }
    sort_desc(&mut kept);
    MonomialIdeal { gens: kept }
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal::default()
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            gens: vec![Monomial::ONE],
        }
    }

    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        minimal_generators(gens)
    }

    /// Minimal generators in descending revlex order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial::ONE)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Smallest exponent `e` with `v^e` in the ideal.
    pub fn pure_power(&self, v: Var) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.is_pure_power())
            .find(|g| *g == &Monomial::power(v, g.degree()))
            .map(|g| g.degree())
    }

    /// True iff the ideal contains a pure power of each of `x`, `y`, `z`.
    pub fn is_artinian(&self) -> bool {
        Var::ALL.iter().all(|&v| self.pure_power(v).is_some())
    }

    pub fn require_artinian(&self) -> Result<()> {
        match Var::ALL.iter().find(|&&v| self.pure_power(v).is_none()) {
            Some(v) => Err(Error::NotArtinian {
                missing: v.symbol(),
            }),
            None => Ok(()),
        }
    }

    /// `I : m`, generated by `lcm(g, m) / m` over the generators `g`.
    pub fn colon(&self, m: Monomial) -> MonomialIdeal {
        minimal_generators(
            self.gens
                .iter()
                .map(|g| g.lcm(m).checked_div(m).expect("m divides lcm(g, m)")),
        )
    }

    /// `I + (extra)`.
    pub fn with<I: IntoIterator<Item = Monomial>>(&self, extra: I) -> MonomialIdeal {
        minimal_generators(self.gens.iter().copied().chain(extra))
    }

    /// Ideal obtained by renaming variables: variable `v` becomes `perm[v]`.
    pub fn permute(&self, perm: [Var; 3]) -> MonomialIdeal {
        minimal_generators(self.gens.iter().map(|g| g.permute(perm)))
    }

    /// Number of degree-`j` monomials outside the ideal; `0` for `j < 0`.
    pub fn hilbert_function(&self, j: i64) -> u64 {
        if j < 0 {
            return 0;
        }
        monomials_of_degree(j as u32)
            .filter(|&m| !self.contains(m))
            .count() as u64
    }

    pub fn hilbert_series(&self, max_degree: u32) -> Vec<HilbertRecord> {
        (0..=max_degree)
            .map(|j| HilbertRecord {
                degree: j,
                value: self.hilbert_function(i64::from(j)),
            })
            .collect()
    }

    /// The degree-`j` monomials outside the ideal, in descending revlex order.
    pub fn standard_monomials(&self, j: u32) -> Vec<Monomial> {
        monomials_of_degree(j)
            .filter(|&m| !self.contains(m))
            .collect()
    }

    /// Degrees of the monomial socle basis of `R/I`: standard monomials `u`
    /// with `xu`, `yu` and `zu` all in the ideal. Sorted ascending.
    pub fn socle_degrees(&self) -> Result<Vec<u32>> {
        self.require_artinian()?;
        let [px, py, pz] = Var::ALL.map(|v| self.pure_power(v).unwrap());
        let mut out = Vec::new();
        for a in 0..px {
            for b in 0..py {
                for c in 0..pz {
                    let u = Monomial::new(a, b, c);
                    if self.contains(u) {
                        continue;
                    }
                    if Var::ALL.iter().all(|&v| self.contains(u.times(v))) {
                        out.push(u.degree());
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Largest degree in which `R/I` is nonzero. Artinian ideals only.
    pub fn top_degree(&self) -> Result<Option<u32>> {
        Ok(self.socle_degrees()?.last().copied())
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_ideal(s)
    }
}
