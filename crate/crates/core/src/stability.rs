//! Semistability of syzygy bundles, decided only through tileability of
//! triangular regions, and the numerical criteria tying it to the weak
//! Lefschetz property.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lefschetz::has_wlp;
use crate::monomial::Monomial;
use crate::region::{build_region, overpuncturing_ideal};
use crate::tiling::is_tileable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Semistability {
    Semistable,
    NotSemistable,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemistabilityReport {
    pub d: u32,
    pub overpuncturing: i64,
    pub tileable: bool,
    pub verdict: Semistability,
}

/// Uses that, for `T = T_d(I)` non-empty and all generators of degree at
/// most `d`, any two of {`I` perfectly punctured, `T` tileable, syzygy
/// bundle semistable} imply the third. Perfectly punctured: semistable iff
/// tileable. Not perfectly punctured but tileable: not semistable.
/// Anything else is undetermined.
pub fn decide_semistability(ideal: &MonomialIdeal, d: u32) -> Result<SemistabilityReport> {
    ideal.require_artinian()?;
    if let Some(&g) = ideal.generators().iter().find(|g| g.degree() > d) {
        return Err(Error::GeneratorAboveDegree { generator: g, d });
    }
    let region = build_region(ideal, d)?;
    if region.is_empty() {
        return Err(Error::EmptyRegion(d));
    }
    let overpuncturing = overpuncturing_ideal(ideal, d);
    let tileable = is_tileable(&region);
    let verdict = match (overpuncturing == 0, tileable) {
        (true, true) => Semistability::Semistable,
        (true, false) => Semistability::NotSemistable,
        (false, true) => Semistability::NotSemistable,
        (false, false) => Semistability::Undetermined,
    };
    Ok(SemistabilityReport {
        d,
        overpuncturing,
        tileable,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictSource {
    /// Both verdicts follow from tileability of `T_d(I)`.
    Tileability,
    /// The Lefschetz verdict came from the full rank scan.
    RankScan,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub generator_degrees: Vec<u32>,
    /// `d = degree_sum / (t - 1)` as an exact fraction.
    pub degree_sum: u64,
    pub denominator: u64,
    pub d: Option<u32>,
    pub cond_integer: bool,
    pub cond_degrees_below: bool,
    pub cond_lcm_weak: bool,
    pub cond_lcm_strong: bool,
    pub cond_parity: bool,
    pub applicable_weak: bool,
    pub applicable_strong: bool,
    /// Smallest lcm degree over pairs of distinct generators, with a pair attaining it.
    pub min_lcm_degree: Option<u32>,
    pub min_lcm_pair: Option<(Monomial, Monomial)>,
    /// Generators `m_i` that are not pure powers with `d - d_i` odd.
    pub parity_violations: Vec<Monomial>,
    /// Set when the weak criterion applies: the property forces semistability.
    pub wlp_implies_semistable: bool,
    pub wlp_verdict: Option<bool>,
    pub semistable_verdict: Option<bool>,
    pub verdict_source: VerdictSource,
}

/// Evaluates the numerical conditions on the minimal generators
/// `m_1, ..., m_t` of degrees `d_i`, with `d = (d_1 + ... + d_t)/(t - 1)`:
///
/// 1. `d` is an integer;
/// 2. `d > d_i` for all `i`;
/// 3. pairwise lcm degrees are at least `d` (weak) or `d + 1` (strong);
/// 4. `d - d_i` is even whenever `m_i` is not a pure power.
///
/// With 1, 2, strong 3 and 4 the region `T_d(I)` is perfectly punctured
/// with separated punctures, and tileability decides both the Lefschetz
/// property and semistability. With 1, 2 and weak 3 only, the property
/// implies semistability and the rank scan is run.
pub fn criterion_check(ideal: &MonomialIdeal) -> Result<CriterionReport> {
    ideal.require_artinian()?;
    let gens = ideal.generators();
    let t = gens.len() as u64;
    let generator_degrees: Vec<u32> = gens.iter().map(|g| g.degree()).collect();
    let degree_sum: u64 = generator_degrees.iter().map(|&e| u64::from(e)).sum();
    let denominator = t.saturating_sub(1);

    let cond_integer = denominator > 0 && degree_sum.is_multiple_of(denominator);
    let d = cond_integer.then(|| (degree_sum / denominator) as u32);
    let cond_degrees_below = denominator > 0
        && generator_degrees
            .iter()
            .all(|&e| u64::from(e) * denominator < degree_sum);

    let mut min_lcm: Option<(u32, Monomial, Monomial)> = None;
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let l = a.lcm(b).degree();
            if min_lcm.is_none_or(|(m, _, _)| l < m) {
                min_lcm = Some((l, a, b));
            }
        }
    }
    let lcm_at_least = |extra: u64| {
        denominator > 0
            && min_lcm.is_none_or(|(l, _, _)| {
                u64::from(l) * denominator >= degree_sum + extra * denominator
            })
    };
    let cond_lcm_weak = lcm_at_least(0);
    let cond_lcm_strong = lcm_at_least(1);

    let parity_violations: Vec<Monomial> = match d {
        Some(d) => gens
            .iter()
            .copied()
            .filter(|g| !g.is_pure_power() && (d.abs_diff(g.degree())) % 2 == 1)
            .collect(),
        None => Vec::new(),
    };
    let cond_parity = cond_integer && parity_violations.is_empty();

    let applicable_weak = cond_integer && cond_degrees_below && cond_lcm_weak;
    let applicable_strong = cond_integer && cond_degrees_below && cond_lcm_strong && cond_parity;

    let mut report = CriterionReport {
        generator_degrees,
        degree_sum,
        denominator,
        d,
        cond_integer,
        cond_degrees_below,
        cond_lcm_weak,
        cond_lcm_strong,
        cond_parity,
        applicable_weak,
        applicable_strong,
        min_lcm_degree: min_lcm.map(|(l, _, _)| l),
        min_lcm_pair: min_lcm.map(|(_, a, b)| (a, b)),
        parity_violations,
        wlp_implies_semistable: applicable_weak,
        wlp_verdict: None,
        semistable_verdict: None,
        verdict_source: VerdictSource::None,
    };

    if applicable_strong {
        let d = d.expect("integral");
        let region = build_region(ideal, d)?;
        let tileable = is_tileable(&region);
        if tileable {
            if let Some(p) = region
                .punctures()
                .iter()
                .find(|p| p.floating && p.side_length % 2 == 1)
            {
                return Err(Error::Consistency(format!(
                    "floating puncture {} of odd side {} under the strong criterion",
                    p.generator, p.side_length
                )));
            }
        }
        report.wlp_verdict = Some(tileable);
        report.semistable_verdict = Some(tileable);
        report.verdict_source = VerdictSource::Tileability;
    } else if applicable_weak {
        let d = d.expect("integral");
        let wlp = has_wlp(ideal)?.verdict;
        report.wlp_verdict = Some(wlp);
        report.semistable_verdict = if wlp {
            Some(true)
        } else {
            match decide_semistability(ideal, d)?.verdict {
                Semistability::Semistable => Some(true),
                Semistability::NotSemistable => Some(false),
                Semistability::Undetermined => None,
            }
        };
        report.verdict_source = VerdictSource::RankScan;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    const J: &str = "x^7, x^4y^2z^2, xy^3z^3, y^7, z^7";
    const I: &str = "x^7, x^5yz, xy^3z^3, y^7, z^8";
    const T8: &str = "x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z";

    #[test]
    fn semistability_examples() {
        assert_eq!(
            decide_semistability(&ideal(J), 9).unwrap().verdict,
            Semistability::Semistable
        );
        assert_eq!(
            decide_semistability(&ideal(T8), 8).unwrap().verdict,
            Semistability::NotSemistable
        );
        let r = decide_semistability(&ideal("xy^3z^2, x^10, y^10, z^10"), 10).unwrap();
        assert_eq!(r.overpuncturing, -6);
        assert_eq!(r.verdict, Semistability::Undetermined);
    }

    #[test]
    fn semistability_preconditions() {
        assert!(matches!(
            decide_semistability(&ideal(T8), 7),
            Err(Error::GeneratorAboveDegree { .. })
        ));
        assert_eq!(
            decide_semistability(&ideal("1"), 3),
            Err(Error::EmptyRegion(3))
        );
        assert!(decide_semistability(&ideal("x, y"), 3).is_err());
    }

    #[test]
    fn criterion_for_j() {
        let r = criterion_check(&ideal(J)).unwrap();
        assert_eq!(r.d, Some(9));
        assert!(r.cond_integer && r.cond_degrees_below);
        assert!(r.cond_lcm_weak && r.cond_lcm_strong);
        assert!(!r.cond_parity);
        assert_eq!(r.parity_violations, vec![Monomial::new(4, 2, 2)]);
        assert!(r.applicable_weak && !r.applicable_strong);
        assert_eq!(r.min_lcm_degree, Some(10));
        assert_eq!(r.verdict_source, VerdictSource::RankScan);
        assert_eq!(r.wlp_verdict, Some(true));
        assert_eq!(r.semistable_verdict, Some(true));
    }

    #[test]
    fn criterion_for_i() {
        let r = criterion_check(&ideal(I)).unwrap();
        assert_eq!(r.d, Some(9));
        assert!(r.cond_lcm_weak && !r.cond_lcm_strong);
        assert_eq!(r.min_lcm_degree, Some(9));
        assert!(r.applicable_weak && !r.applicable_strong);
        assert!(r.wlp_implies_semistable);
        assert_eq!(r.wlp_verdict, Some(true));
        assert_eq!(r.semistable_verdict, Some(true));
        assert_eq!(r.verdict_source, VerdictSource::RankScan);
    }

    #[test]
    fn criterion_inapplicable() {
        let r = criterion_check(&ideal("x^2, y^2, z^3")).unwrap();
        assert!(!r.cond_integer);
        assert_eq!(r.d, None);
        assert!(!r.applicable_weak && !r.applicable_strong);
        assert_eq!(r.wlp_verdict, None);
        assert!(criterion_check(&ideal("xy, z")).is_err());
        let r = criterion_check(&MonomialIdeal::unit()).unwrap();
        assert!(!r.applicable_weak);
    }
}
