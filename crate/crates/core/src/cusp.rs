//! Slope lengths on Euclidean cusp cross-sections and the resulting
//! exceptional-surgery candidate sets.
//!
//! All bundled cusp lattices have translations of the form s·(a + b√3·i)
//! with a, b rational and s² rational, so the squared length of any lattice
//! vector is an exact rational. The test "length > 6" of the 6-theorem is
//! decided as length² > 36 in exact arithmetic; this matters because the
//! knot-cusp vector (m,n) = (1,2) has length exactly 6.

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::slope::{BoundarySlopeTable, KnotSpec, Slope};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CuspError {
    #[error("(m, n) = ({0}, {1}) is not primitive")]
    NonPrimitive(i64, i64),
    #[error("lattice translations are linearly dependent")]
    DegenerateLattice,
    #[error("the 6-theorem candidate list applies only for p >= 7 or (p = 5, q >= 11), not {0}")]
    OutOfHypothesis(KnotSpec),
    #[error("candidate filtering needs a complete boundary-slope table")]
    PartialTable,
}

/// a + b·√3·i with rational a, b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqrtThreeComplex {
    /// rational real part a
    pub re: Rational64,
    /// rational coefficient b of √3·i
    pub im: Rational64,
}

impl SqrtThreeComplex {
    pub fn new(re: Rational64, im: Rational64) -> Self {
        SqrtThreeComplex { re, im }
    }

    fn to_f64_pair(self) -> (f64, f64) {
        let sqrt3 = 3.0_f64.sqrt();
        (self.re.to_f64().unwrap(), self.im.to_f64().unwrap() * sqrt3)
    }
}

/// A Euclidean cusp cross-section lattice.
///
/// Translations are stored as exact a + b√3·i pairs together with a global
/// scale factor whose square `scale_sq` is rational (the √2-rescaled cusps
/// need it). The actual translations are √scale_sq · meridian and
/// √scale_sq · second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspLattice {
    pub name: String,
    pub meridian: SqrtThreeComplex,
    pub second: SqrtThreeComplex,
    pub scale_sq: Rational64,
    /// The slope realized by the second translation, in the coordinates of
    /// the cusped manifold the lattice belongs to.
    pub second_label: Slope,
}

impl CuspLattice {
    pub fn new(
        name: impl Into<String>,
        meridian: SqrtThreeComplex,
        second: SqrtThreeComplex,
        scale_sq: Rational64,
        second_label: Slope,
    ) -> Result<Self, CuspError> {
        // Linear independence over R: the 2x2 determinant of the (re, im)
        // coordinates must be nonzero.
        let det = meridian.re * second.im - meridian.im * second.re;
        if det.is_zero() || scale_sq <= Rational64::zero() {
            return Err(CuspError::DegenerateLattice);
        }
        Ok(CuspLattice { name: name.into(), meridian, second, scale_sq, second_label })
    }

    /// Exact squared Euclidean length of the lattice vector
    /// n·meridian + m·second.
    pub fn length_sq(&self, m: i64, n: i64) -> Rational64 {
        let re = self.meridian.re * Rational64::from_integer(n)
            + self.second.re * Rational64::from_integer(m);
        let im = self.meridian.im * Rational64::from_integer(n)
            + self.second.im * Rational64::from_integer(m);
        self.scale_sq * (re * re + im * im * Rational64::from_integer(3))
    }

    /// Euclidean length of the primitive vector n·meridian + m·second.
    pub fn slope_length(&self, m: i64, n: i64) -> Result<f64, CuspError> {
        if !is_primitive(m, n) {
            return Err(CuspError::NonPrimitive(m, n));
        }
        Ok(self.length_sq(m, n).to_f64().unwrap().sqrt())
    }

    /// All primitive (m, n), one per ±pair, with length ≤ 6. The canonical
    /// representative has m > 0, or m = 0 with n = 1.
    pub fn short_slopes(&self) -> Vec<(i64, i64)> {
        self.short_slopes_sq_bound(Rational64::from_integer(36))
    }

    /// Same as [`short_slopes`](Self::short_slopes) with an explicit exact
    /// bound on length².
    pub fn short_slopes_sq_bound(&self, bound_sq: Rational64) -> Vec<(i64, i64)> {
        let bound = bound_sq.to_f64().unwrap().max(0.0).sqrt();
        // |m| <= bound·|meridian|/area and |n| <= bound·|second|/area; the
        // float ranges only bound the search, membership is exact.
        let scale = self.scale_sq.to_f64().unwrap().sqrt();
        let (mx, my) = self.meridian.to_f64_pair();
        let (sx, sy) = self.second.to_f64_pair();
        let area = scale * scale * (mx * sy - my * sx).abs();
        let m_max = (bound * scale * (mx * mx + my * my).sqrt() / area).ceil() as i64 + 1;
        let n_max = (bound * scale * (sx * sx + sy * sy).sqrt() / area).ceil() as i64 + 1;

        let mut found = Vec::new();
        for m in 0..=m_max {
            for n in -n_max..=n_max {
                if m == 0 && n != 1 {
                    continue;
                }
                if !is_primitive(m, n) {
                    continue;
                }
                if self.length_sq(m, n) <= bound_sq {
                    found.push((m, n));
                }
            }
        }
        found.sort_unstable();
        found
    }
}

fn is_primitive(m: i64, n: i64) -> bool {
    if m == 0 && n == 0 {
        return false;
    }
    num_integer::gcd(m, n) == 1
}

/// Exceptional-surgery candidates for one knot, with the filters each one
/// passed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateSet {
    pub knot: KnotSpec,
    pub slopes: Vec<Slope>,
    /// Filter trail per slope, aligned with `slopes`.
    pub provenance: Vec<Vec<String>>,
}

impl CandidateSet {
    fn push(&mut self, slope: Slope, why: Vec<String>) {
        self.slopes.push(slope);
        self.provenance.push(why);
    }
}

/// Exceptional-surgery candidates from the 6-theorem, for p >= 7 or
/// (p = 5, q >= 11). The meridian is always exceptional and is reported
/// separately, not listed.
///
/// Candidates are the integral slopes 2(p+q)+k obtained by relabeling the
/// short lattice vectors (m,n) as (2(p+q)·m + n)/m.
pub fn exceptional_candidates_6thm(knot: KnotSpec) -> Result<CandidateSet, CuspError> {
    let (p, q) = (knot.p(), knot.q());
    let lattice = if p >= 7 {
        knot_cusp_lattice()
    } else if q >= 11 {
        contracted_knot_cusp_lattice()
    } else {
        return Err(CuspError::OutOfHypothesis(knot));
    };

    let mut set = CandidateSet { knot, slopes: Vec::new(), provenance: Vec::new() };
    for (m, n) in lattice.short_slopes() {
        if m == 0 {
            // the meridian 1/0
            continue;
        }
        let s = Slope::new(knot.toroidal() * m + n, m);
        let len_sq = lattice.length_sq(m, n);
        set.push(
            s,
            vec![format!(
                "six-theorem: cusp length^2 = {} <= 36 on lattice {}",
                len_sq, lattice.name
            )],
        );
    }
    set.slopes.sort_unstable();
    Ok(set)
}

/// Finite-surgery candidates for the norm pipeline: all slopes a/b with
/// b in {1, 2} that
///   - are within intersection distance 10 of the toroidal slope 2(p+q),
///   - lie within 2/b of some strict boundary slope (strict inequality
///     when more than two strict slopes are detected, non-strict when
///     exactly two), and
///   - are not boundary slopes themselves.
///
/// The meridian is excluded by construction. Requires a complete table.
pub fn candidate_finite_slopes(
    knot: KnotSpec,
    table: &BoundarySlopeTable,
    detected_count: usize,
) -> Result<CandidateSet, CuspError> {
    if !table.complete {
        return Err(CuspError::PartialTable);
    }
    let strict = table.strict_slopes();
    let use_strict_inequality = detected_count > 2;
    let toroidal = Slope::integer(knot.toroidal());

    let mut set = CandidateSet { knot, slopes: Vec::new(), provenance: Vec::new() };
    for b in [1i64, 2] {
        let center = knot.toroidal() * b;
        for a in (center - 10)..=(center + 10) {
            if b == 2 && a % 2 == 0 {
                continue;
            }
            let s = Slope::new(a, b);
            debug_assert!(s.distance(&toroidal) <= 10);
            // |s - r| vs 2/b in exact arithmetic: compare b·|a·den(r) - b·num(r)|
            // against 2·den(r)·b, i.e. distance-based cross multiplication.
            let near = strict.iter().find(|r| {
                let lhs = (a as i128 * r.denominator() as i128 - b as i128 * r.numerator() as i128)
                    .unsigned_abs();
                let rhs = 2 * r.denominator() as u128;
                if use_strict_inequality {
                    lhs < rhs
                } else {
                    lhs <= rhs
                }
            });
            let Some(r) = near else { continue };
            if table.contains(&s) == Some(true) {
                continue;
            }
            set.push(
                s,
                vec![
                    format!("distance-10 filter: |Delta(s, {})| <= 10", toroidal),
                    "integral-or-half-integral filter".to_string(),
                    format!(
                        "boundary-slope proximity: |s - {}| {} 2/{}",
                        r,
                        if use_strict_inequality { "<" } else { "<=" },
                        b
                    ),
                    "not itself a boundary slope".to_string(),
                ],
            );
        }
    }
    let mut order: Vec<usize> = (0..set.slopes.len()).collect();
    order.sort_by_key(|&i| set.slopes[i]);
    set.slopes = order.iter().map(|&i| set.slopes[i]).collect();
    set.provenance = order.iter().map(|&i| set.provenance[i].clone()).collect();
    Ok(set)
}

/// The maximal-cusp lattice of the knot component: translations 2 and
/// -1 + 3√3·i, the latter realizing the slope that becomes 2(p+q).
pub fn knot_cusp_lattice() -> CuspLattice {
    CuspLattice::new(
        "knot-cusp",
        SqrtThreeComplex::new(Rational64::from_integer(2), Rational64::zero()),
        SqrtThreeComplex::new(Rational64::from_integer(-1), Rational64::from_integer(3)),
        Rational64::from_integer(1),
        Slope::new(4, 1),
    )
    .expect("bundled lattice is valid")
}

/// The knot-cusp lattice contracted by 1/√2 (used when one trivial-component
/// cusp is expanded by √2).
pub fn contracted_knot_cusp_lattice() -> CuspLattice {
    CuspLattice::new(
        "knot-cusp-contracted",
        SqrtThreeComplex::new(Rational64::from_integer(2), Rational64::zero()),
        SqrtThreeComplex::new(Rational64::from_integer(-1), Rational64::from_integer(3)),
        Rational64::new(1, 2),
        Slope::new(4, 1),
    )
    .expect("bundled lattice is valid")
}

/// The trivial link-component cusp: meridian √3·i, longitude 2.
pub fn trivial_cusp_lattice() -> CuspLattice {
    CuspLattice::new(
        "trivial-cusp",
        SqrtThreeComplex::new(Rational64::zero(), Rational64::from_integer(1)),
        SqrtThreeComplex::new(Rational64::from_integer(2), Rational64::zero()),
        Rational64::from_integer(1),
        Slope::new(0, 1),
    )
    .expect("bundled lattice is valid")
}

/// Trivial-component cusp rescaled by a factor with square `scale_sq`.
pub fn scaled_trivial_cusp_lattice(scale_sq: Rational64, name: &str) -> CuspLattice {
    CuspLattice::new(
        name,
        SqrtThreeComplex::new(Rational64::zero(), Rational64::from_integer(1)),
        SqrtThreeComplex::new(Rational64::from_integer(2), Rational64::zero()),
        scale_sq,
        Slope::new(0, 1),
    )
    .expect("bundled lattice is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn knot_cusp_lengths() {
        let lat = knot_cusp_lattice();
        assert_eq!(lat.length_sq(1, 0), rat(28, 1));
        let len = lat.slope_length(1, 0).unwrap();
        assert!((len - 28f64.sqrt()).abs() < 1e-12);
        // (1,2) sits exactly on the bound
        assert_eq!(lat.length_sq(1, 2), rat(36, 1));
    }

    #[test]
    fn trivial_cusp_lengths() {
        let lat = trivial_cusp_lattice();
        // slope -1/k is the vector -meridian + k·second
        assert_eq!(lat.length_sq(3, -1), rat(39, 1));
        let len = lat.slope_length(3, -1).unwrap();
        assert!((len - 39f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn scaled_trivial_cusp_length() {
        let lat = scaled_trivial_cusp_lattice(rat(1, 2), "trivial-cusp-contracted");
        assert_eq!(lat.length_sq(2, -1), rat(19, 2));
        let len = lat.slope_length(2, -1).unwrap();
        assert!((len - 9.5f64.sqrt()).abs() < 1e-12);
        // the expanded cusp realizes the same slope at sqrt(38)
        let expanded = scaled_trivial_cusp_lattice(rat(2, 1), "trivial-cusp-expanded");
        assert_eq!(expanded.length_sq(2, -1), rat(38, 1));
    }

    #[test]
    fn non_primitive_rejected() {
        let lat = knot_cusp_lattice();
        assert_eq!(lat.slope_length(2, 4), Err(CuspError::NonPrimitive(2, 4)));
        assert_eq!(lat.slope_length(0, 0), Err(CuspError::NonPrimitive(0, 0)));
    }

    #[test]
    fn knot_cusp_short_slopes() {
        assert_eq!(
            knot_cusp_lattice().short_slopes(),
            vec![(0, 1), (1, -1), (1, 0), (1, 1), (1, 2)]
        );
    }

    #[test]
    fn contracted_knot_cusp_short_slopes() {
        assert_eq!(
            contracted_knot_cusp_lattice().short_slopes(),
            vec![(0, 1), (1, -2), (1, -1), (1, 0), (1, 1), (1, 2), (1, 3)]
        );
    }

    #[test]
    fn trivial_cusp_short_minus_one_over_k() {
        // Among slopes -1/k, only k <= 2 stays at length <= 6.
        let short = trivial_cusp_lattice().short_slopes();
        let ks: Vec<i64> =
            short.iter().filter(|(_, n)| *n == -1).map(|(m, _)| *m).filter(|m| *m >= 1).collect();
        assert_eq!(ks, vec![1, 2]);
        // contracted trivial cusp: -1/l short up to l = 4
        let short = scaled_trivial_cusp_lattice(rat(1, 2), "c").short_slopes();
        let ls: Vec<i64> =
            short.iter().filter(|(_, n)| *n == -1).map(|(m, _)| *m).filter(|m| *m >= 1).collect();
        assert_eq!(ls, vec![1, 2, 3, 4]);
    }

    #[test]
    fn short_slopes_match_brute_force_scan() {
        for lat in [
            knot_cusp_lattice(),
            contracted_knot_cusp_lattice(),
            trivial_cusp_lattice(),
            scaled_trivial_cusp_lattice(rat(2, 1), "e"),
        ] {
            let mut brute = Vec::new();
            for m in 0..=4 {
                for n in -40..=40i64 {
                    if m == 0 && n != 1 {
                        continue;
                    }
                    if !is_primitive(m, n) {
                        continue;
                    }
                    if lat.length_sq(m, n) <= rat(36, 1) {
                        brute.push((m, n));
                    }
                }
            }
            brute.sort_unstable();
            assert_eq!(lat.short_slopes(), brute, "lattice {}", lat.name);
        }
    }

    #[test]
    fn length_negation_and_scaling_invariance() {
        let lat = knot_cusp_lattice();
        let doubled = CuspLattice::new(
            "doubled",
            lat.meridian,
            lat.second,
            rat(4, 1),
            lat.second_label,
        )
        .unwrap();
        for (m, n) in [(1, 0), (1, 2), (2, -3), (0, 1), (3, 5)] {
            assert_eq!(lat.length_sq(m, n), lat.length_sq(-m, -n));
            assert_eq!(doubled.length_sq(m, n), rat(4, 1) * lat.length_sq(m, n));
        }
        // |m| >= 2 is always long on the knot cusp: 27 m^2 >= 108 > 36
        for m in 2..6 {
            for n in -12..12 {
                if is_primitive(m, n) {
                    assert!(lat.length_sq(m, n) > rat(36, 1));
                }
            }
        }
    }

    #[test]
    fn six_theorem_candidates() {
        let c79 = exceptional_candidates_6thm(KnotSpec::new(7, 9).unwrap()).unwrap();
        assert_eq!(
            c79.slopes,
            vec![31, 32, 33, 34].into_iter().map(Slope::integer).collect::<Vec<_>>()
        );
        let c511 = exceptional_candidates_6thm(KnotSpec::new(5, 11).unwrap()).unwrap();
        assert_eq!(
            c511.slopes,
            vec![30, 31, 32, 33, 34, 35].into_iter().map(Slope::integer).collect::<Vec<_>>()
        );
        assert!(exceptional_candidates_6thm(KnotSpec::new(5, 9).unwrap()).is_err());
        assert!(exceptional_candidates_6thm(KnotSpec::new(5, 5).unwrap()).is_err());
    }

    fn slopes(texts: &[&str]) -> Vec<Slope> {
        texts.iter().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn norm_pipeline_candidates_5_5() {
        let knot = KnotSpec::new(5, 5).unwrap();
        let table = BoundarySlopeTable::for_knot(knot);
        let set = candidate_finite_slopes(knot, &table, 4).unwrap();
        assert_eq!(
            set.slopes,
            slopes(&["13", "31/2", "16", "19", "39/2", "41/2", "21", "43/2", "45/2", "23"])
        );
    }

    #[test]
    fn norm_pipeline_candidates_5_7() {
        let knot = KnotSpec::new(5, 7).unwrap();
        let table = BoundarySlopeTable::for_knot(knot);
        let set = candidate_finite_slopes(knot, &table, 4).unwrap();
        assert_eq!(
            set.slopes,
            slopes(&[
                "16", "17", "18", "19", "20", "23", "47/2", "49/2", "25", "51/2", "53/2", "27"
            ])
        );
    }

    #[test]
    fn norm_pipeline_candidates_5_9() {
        let knot = KnotSpec::new(5, 9).unwrap();
        let table = BoundarySlopeTable::for_knot(knot);
        let set = candidate_finite_slopes(knot, &table, 3).unwrap();
        assert_eq!(
            set.slopes,
            slopes(&[
                "21", "22", "23", "24", "27", "55/2", "57/2", "29", "59/2", "61/2", "31"
            ])
        );
    }

    #[test]
    fn candidates_refuse_partial_table() {
        let knot = KnotSpec::new(7, 9).unwrap();
        let table = BoundarySlopeTable::for_knot(knot);
        assert_eq!(candidate_finite_slopes(knot, &table, 2).unwrap_err(), CuspError::PartialTable);
    }

    #[test]
    fn candidate_properties() {
        for (p, q, det) in [(5, 5, 4), (5, 7, 4), (5, 9, 3)] {
            let knot = KnotSpec::new(p, q).unwrap();
            let table = BoundarySlopeTable::for_knot(knot);
            let set = candidate_finite_slopes(knot, &table, det).unwrap();
            let toroidal = Slope::integer(knot.toroidal());
            for s in &set.slopes {
                assert!(s.denominator() == 1 || s.denominator() == 2);
                assert!(s.distance(&toroidal) <= 10);
                assert_eq!(table.contains(s), Some(false));
                assert!(!s.is_meridian());
            }
        }
    }
}
