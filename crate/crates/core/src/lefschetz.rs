//! Deciding the weak Lefschetz property of `R/I` for Artinian monomial `I`.
//!
//! For monomial ideals in characteristic zero it suffices to test the
//! element `x + y + z`, and multiplication `[R/I]_{d-2} -> [R/I]_{d-1}` by
//! it is the transpose of `Z(T_d(I))`. So `R/I` has the property iff every
//! bi-adjacency matrix has maximal rank.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::linalg::{biadjacency, rank};
use crate::monomial::{Monomial, Var};
use crate::region::build_region;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub d: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WlpReport {
    pub verdict: bool,
    pub failing_degree: Option<u32>,
    pub records: Vec<DegreeRecord>,
    /// Last `d` examined.
    pub scanned_through: u32,
}

/// Rank record of `Z(T_d(I))`.
pub fn wlp_in_degree(ideal: &MonomialIdeal, d: u32) -> Result<DegreeRecord> {
    ideal.require_artinian()?;
    let region = build_region(ideal, d)?;
    let z = biadjacency(&region);
    let r = rank(&z);
    Ok(DegreeRecord {
        d,
        rows: z.rows(),
        cols: z.cols(),
        rank: r,
        maximal: r == z.rows().min(z.cols()),
    })
}

/// Scans `d = 1, 2, ...` until `[R/I]_{d-1}` vanishes, stopping at the first
/// degree without maximal rank.
pub fn has_wlp(ideal: &MonomialIdeal) -> Result<WlpReport> {
    ideal.require_artinian()?;
    let mut records = Vec::new();
    let mut d = 1;
    loop {
        let record = wlp_in_degree(ideal, d)?;
        records.push(record);
        if !record.maximal {
            return Ok(WlpReport {
                verdict: false,
                failing_degree: Some(d),
                records,
                scanned_through: d,
            });
        }
        if record.cols == 0 {
            return Ok(WlpReport {
                verdict: true,
                failing_degree: None,
                records,
                scanned_through: d,
            });
        }
        d += 1;
    }
}

/// `I + (x^d, y^d, z^d)`.
pub fn truncate(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    ideal.with(Var::ALL.map(|v| Monomial::power(v, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn degree_records() {
        let r = wlp_in_degree(&ideal("x^2, y^2, z^2"), 3).unwrap();
        assert_eq!((r.rows, r.cols, r.rank, r.maximal), (3, 3, 3, true));
        let r = wlp_in_degree(&ideal("x^2, y^2, z^2"), 1).unwrap();
        assert_eq!((r.rows, r.cols, r.maximal), (0, 1, true));
        // square of size 32 with determinant 196
        let r = wlp_in_degree(&ideal("x^7, x^4y^2z^2, xy^3z^3, y^7, z^7"), 9).unwrap();
        assert_eq!((r.rows, r.cols, r.rank), (32, 32, 32));
        let r = wlp_in_degree(&ideal("x^6, y^7, z^7, xy^4z^2, xy^2z^4, x^2y^2z^2"), 8).unwrap();
        assert!(!r.maximal);
    }

    #[test]
    fn known_verdicts() {
        let r = has_wlp(&ideal("x^7, x^5yz, xy^3z^3, y^7, z^8")).unwrap();
        assert!(r.verdict);
        assert_eq!(r.failing_degree, None);
        let r = has_wlp(&ideal("x^7, x^4y^2z^2, xy^3z^3, y^7, z^7")).unwrap();
        assert!(r.verdict);
        let r = has_wlp(&ideal("x^7, x^4yz^3, xy^3z^3, y^7, z^7")).unwrap();
        assert_eq!(r.failing_degree, Some(9));
        let r = has_wlp(&ideal("x^6, y^7, z^7, xy^4z^2, xy^2z^4, x^2y^2z^2")).unwrap();
        assert_eq!(r.failing_degree, Some(8));
        assert!(
            !has_wlp(&ideal("x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z"))
                .unwrap()
                .verdict
        );
        assert!(has_wlp(&ideal("x, y, z")).unwrap().verdict);
    }

    #[test]
    fn report_invariants() {
        for s in [
            "x^3, y^3, z^3",
            "x^2, y^3, z^4, xyz",
            "x^7, x^4y^2z^2, xy^3z^3, y^7, z^7",
        ] {
            let r = has_wlp(&ideal(s)).unwrap();
            assert_eq!(!r.verdict, r.failing_degree.is_some());
            if let Some(f) = r.failing_degree {
                assert!(!r.records.last().unwrap().maximal);
                assert_eq!(r.records.last().unwrap().d, f);
            }
            assert_eq!(r.scanned_through, r.records.last().unwrap().d);
            for (k, rec) in r.records.iter().enumerate() {
                assert_eq!(rec.d as usize, k + 1);
                assert_eq!(rec.maximal, rec.rank == rec.rows.min(rec.cols));
            }
        }
    }

    #[test]
    fn non_artinian_rejected() {
        assert_eq!(
            has_wlp(&ideal("xy, y^2, z^3")),
            Err(Error::NotArtinian { missing: 'x' })
        );
        assert!(wlp_in_degree(&ideal("x^2, y^2"), 2).is_err());
    }

    #[test]
    fn truncation() {
        assert_eq!(
            truncate(&ideal("xy, y^2, z^3"), 4),
            ideal("xy, y^2, z^3, x^4")
        );
        let i = ideal("x^2, y^3, z^4");
        assert_eq!(truncate(&i, 5), i);
        assert_eq!(truncate(&MonomialIdeal::zero(), 3), ideal("x^3, y^3, z^3"));
    }
}
