//! Monomials `x^a y^b z^c` in three variables.

use std::cmp::Ordering;
use std::fmt;

/// One of the three variables of `K[x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }
}

/// A monomial `x^x y^y z^z`, stored as its exponent vector.
///
/// The ordering is graded reverse-lexicographic with `x > y > z`: higher
/// degree first, and within a degree `m > n` iff the last nonzero entry of
/// `m - n` is negative. In degree two this gives `x² > xy > y² > xz > yz > z²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    /// The pure power `v^e`.
    pub fn power(v: Var, e: u32) -> Self {
        let mut m = Monomial::ONE;
        m.set(v, e);
        m
    }

    pub fn exponents(self) -> [u32; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_exponents(e: [u32; 3]) -> Self {
        Monomial::new(e[0], e[1], e[2])
    }

    pub fn exponent(self, v: Var) -> u32 {
        self.exponents()[v.index()]
    }

    fn set(&mut self, v: Var, e: u32) {
        match v {
            Var::X => self.x = e,
            Var::Y => self.y = e,
            Var::Z => self.z = e,
        }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y + self.z
    }

    /// Componentwise `self <= other`.
    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(
            self.x.max(other.x),
            self.y.max(other.y),
            self.z.max(other.z),
        )
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial::new(
            self.x.min(other.x),
            self.y.min(other.y),
            self.z.min(other.z),
        )
    }

    pub fn times(self, v: Var) -> Monomial {
        let mut m = self;
        m.set(v, self.exponent(v) + 1);
        m
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial::new(self.x - other.x, self.y - other.y, self.z - other.z))
    }

    /// `self / v`, or `None` when `v` does not divide `self`.
    pub fn div_var(self, v: Var) -> Option<Monomial> {
        let e = self.exponent(v);
        (e > 0).then(|| {
            let mut m = self;
            m.set(v, e - 1);
            m
        })
    }

    /// The single variable `v` with `self * v == other`, if any.
    pub fn step_to(self, other: Monomial) -> Option<Var> {
        Var::ALL.into_iter().find(|&v| self.times(v) == other)
    }

    /// True for `1` and for `x^e`, `y^e`, `z^e`.
    pub fn is_pure_power(self) -> bool {
        self.exponents().iter().filter(|&&e| e > 0).count() <= 1
    }

    /// True when some exponent vanishes.
    pub fn has_zero_exponent(self) -> bool {
        self.x == 0 || self.y == 0 || self.z == 0
    }

    pub fn permute(self, perm: [Var; 3]) -> Monomial {
        // variable i is sent to perm[i]
        let mut out = Monomial::ONE;
        for v in Var::ALL {
            out.set(perm[v.index()], self.exponent(v));
        }
        out
    }

    pub fn revlex_cmp(self, other: Monomial) -> Ordering {
        self.cmp(&other)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.z.cmp(&self.z))
            .then_with(|| other.y.cmp(&self.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Canonical `x^a*y^b*z^c` with unit exponents elided; `1` for the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.symbol())?;
            } else {
                write!(f, "{}^{}", v.symbol(), e)?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All monomials of degree `j`, in descending revlex order.
pub fn monomials_of_degree(j: u32) -> impl Iterator<Item = Monomial> {
    (0..=j).flat_map(move |z| (0..=j - z).map(move |y| Monomial::new(j - z - y, y, z)))
}

/// Sorts in place into descending revlex order.
pub fn sort_desc(ms: &mut [Monomial]) {
    ms.sort_unstable_by(|a, b| b.cmp(a));
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }
}
