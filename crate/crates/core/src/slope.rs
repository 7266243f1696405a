//! Surgery slope arithmetic and bundled boundary-slope tables.
//!
//! A slope is a reduced fraction a/b in Q ∪ {1/0}; the meridian 1/0 is the
//! trivial filling. The distance Δ(a/b, c/d) = |ad − bc| is the minimal
//! geometric intersection number of the two curve classes.
//!
//! Boundary slopes for the knots treated here are bundled data (they come
//! from the Hatcher–Oertel algorithm, which this crate does not implement).
//! Tables for p ≥ 7 are partial: only the toroidal slope 2(p+q) and
//! 2(p+q)+2 are known members.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SlopeError {
    #[error("0/0 is not a slope")]
    Indeterminate,
    #[error("cannot parse {0:?} as a slope")]
    Parse(String),
    #[error("knot parameters must be odd with 5 <= p <= q, got ({0}, {1})")]
    InvalidKnot(i64, i64),
}

/// A surgery slope a/b in canonical reduced form.
///
/// Invariants: gcd(|a|, b) = 1 and b >= 0; b = 0 only for the meridian 1/0.
/// The sign lives in the numerator, so equality is structural. Serializes
/// as the pair [numerator, denominator].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.num, self.den).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (num, den) = <(i64, i64)>::deserialize(deserializer)?;
        Slope::try_new(num, den).map_err(D::Error::custom)
    }
}

impl Slope {
    /// Canonical slope for the fraction `num/den`. Any nonzero `num` with
    /// `den = 0` normalizes to the meridian 1/0.
    ///
    /// Panics on 0/0.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(num != 0 || den != 0, "0/0 is not a slope");
        if den == 0 {
            return Slope { num: 1, den: 0 };
        }
        let (mut num, mut den) = (num, den);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        Slope { num: num / g, den: den / g }
    }

    pub fn try_new(num: i64, den: i64) -> Result<Self, SlopeError> {
        if num == 0 && den == 0 {
            Err(SlopeError::Indeterminate)
        } else {
            Ok(Self::new(num, den))
        }
    }

    /// The meridian 1/0 (trivial surgery).
    pub const fn meridian() -> Self {
        Slope { num: 1, den: 0 }
    }

    /// The integral slope n/1.
    pub const fn integer(n: i64) -> Self {
        Slope { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_meridian(&self) -> bool {
        self.den == 0
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// True for integral slopes with even numerator (the case with the
    /// weaker norm bound 2S in the finite surgery theorem).
    pub fn is_even_integer(&self) -> bool {
        self.den == 1 && self.num % 2 == 0
    }

    /// Minimal geometric intersection number Δ(a/b, c/d) = |ad − bc|.
    pub fn distance(&self, other: &Slope) -> u64 {
        let cross = self.num as i128 * other.den as i128 - self.den as i128 * other.num as i128;
        cross.unsigned_abs() as u64
    }

    /// Value as f64; the meridian maps to +infinity.
    pub fn to_f64(&self) -> f64 {
        if self.den == 0 {
            f64::INFINITY
        } else {
            self.num as f64 / self.den as f64
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication is monotone because denominators are >= 0;
        // the meridian compares greater than every finite slope.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |t: &str| t.trim().parse::<i64>().map_err(|_| SlopeError::Parse(s.to_string()));
        match s.split_once('/') {
            Some((a, b)) => Slope::try_new(parse_int(a)?, parse_int(b)?),
            None => Ok(Slope::integer(parse_int(s)?)),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.max(1)
}

/// The twist parameters (p, q) of a (-2,p,q) pretzel knot, p, q odd and
/// 5 <= p <= q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotSpec {
    p: i64,
    q: i64,
}

impl KnotSpec {
    pub fn new(p: i64, q: i64) -> Result<Self, SlopeError> {
        if p % 2 != 0 && q % 2 != 0 && 5 <= p && p <= q {
            Ok(KnotSpec { p, q })
        } else {
            Err(SlopeError::InvalidKnot(p, q))
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// 2(p+q), the toroidal surgery slope all exceptional slopes cluster
    /// around.
    pub fn toroidal(&self) -> i64 {
        2 * (self.p + self.q)
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(-2,{},{})", self.p, self.q)
    }
}

/// Boundary slopes of a pretzel knot, with a completeness flag.
///
/// Complete tables exist for p = 5. For p >= 7 only the two slopes
/// 2(p+q) and 2(p+q)+2 are bundled and the table is flagged partial, so
/// downstream logic can refuse deductions that need the full list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundarySlopeTable {
    pub knot: KnotSpec,
    pub slopes: Vec<Slope>,
    pub complete: bool,
}

impl BoundarySlopeTable {
    /// The bundled boundary-slope table for `knot`.
    pub fn for_knot(knot: KnotSpec) -> Self {
        let (p, q) = (knot.p(), knot.q());
        if p == 5 {
            let slopes = if q == 5 {
                vec![
                    Slope::integer(0),
                    Slope::integer(14),
                    Slope::integer(15),
                    Slope::integer(20),
                    Slope::integer(22),
                ]
            } else {
                vec![
                    Slope::integer(0),
                    Slope::integer(14),
                    Slope::integer(15),
                    Slope::new(q * q - q - 5, (q - 3) / 2),
                    Slope::integer(2 * q + 10),
                    Slope::integer(2 * q + 12),
                ]
            };
            BoundarySlopeTable { knot, slopes, complete: true }
        } else {
            BoundarySlopeTable {
                knot,
                slopes: vec![Slope::integer(knot.toroidal()), Slope::integer(knot.toroidal() + 2)],
                complete: false,
            }
        }
    }

    /// Membership test. `Some(false)` needs a complete table; a partial
    /// table can only certify presence, so absence comes back as `None`
    /// (unknown).
    pub fn contains(&self, s: &Slope) -> Option<bool> {
        if self.slopes.contains(s) {
            Some(true)
        } else if self.complete {
            Some(false)
        } else {
            None
        }
    }

    /// Strict boundary slopes: every nonzero entry (for a knot in the
    /// 3-sphere the only non-strict boundary slope is 0).
    pub fn strict_slopes(&self) -> Vec<Slope> {
        self.slopes.iter().copied().filter(|s| *s != Slope::integer(0)).collect()
    }
}
