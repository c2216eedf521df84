//! Fixed inputs shared by the benchmarks.

use trireg::{build_region, MonomialIdeal, TriangularRegion};

pub const WLP_IDEAL: &str = "x^7, x^5yz, xy^3z^3, y^7, z^8";
pub const FAMILY_IDEAL: &str = "x^12, y^12, z^12, xyz^9, x^3y^2z^6, xy^5z^5, x^6y^2z^3, xy^9z";

pub fn ideal(s: &str) -> MonomialIdeal {
    s.parse().expect("fixture parses")
}

/// `T_d(x^a, y^a, z^a)` with `d = (3a)/2`, a balanced hexagon.
pub fn hexagon(a: u32) -> TriangularRegion {
    let i = MonomialIdeal::new(trireg::Var::ALL.map(|v| trireg::Monomial::power(v, a)));
    build_region(&i, 3 * a / 2).expect("fixture builds")
}
