//! Triangular regions, lozenge tilings and the weak Lefschetz property for
//! Artinian monomial ideals in `K[x, y, z]`.
//!
//! An Artinian monomial ideal `I` is read through its triangular regions
//! `T_d(I)`: unit triangles labeled by the monomials of degrees `d - 2` and
//! `d - 1` outside `I`. Lozenge tilings of these regions are perfect
//! matchings of the bi-adjacency matrix `Z(T_d(I))`, whose ranks decide the
//! weak Lefschetz property of `R/I`, and whose tileability decides
//! semistability of the syzygy bundle in the perfectly-punctured case.

pub mod error;
pub mod family;
pub mod ideal;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod region;
pub mod render;
pub mod stability;
pub mod tiling;

pub use error::{Error, Result};
pub use family::{convenient_family, example_family, FamilyIdeal, FamilySpec};
pub use ideal::{minimal_generators, HilbertRecord, MonomialIdeal, DEFAULT_DEGREE_CAP};
pub use lefschetz::{has_wlp, truncate, wlp_in_degree, DegreeRecord, WlpReport};
pub use linalg::{biadjacency, determinant, permanent, rank, IntegerMatrix};
pub use monomial::{Monomial, Var};
pub use parse::{parse_ideal, parse_monomial};
pub use region::{
    build_region, overpuncturing_ideal, relate_punctures, Balance, Puncture, PunctureRelation,
    TriangleCounts, TriangularRegion,
};
pub use render::{region_svg, tiling_svg, RenderOptions};
pub use stability::{
    criterion_check, decide_semistability, CriterionReport, Semistability, SemistabilityReport,
};
pub use tiling::{
    enumerate_tilings, find_tiling, is_tileable_structural, two_of_three, Lozenge,
    StructuralVerdict, Tiling, TilingCount, TwoOfThree,
};
