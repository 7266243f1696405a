//! Ideal-point detection from gluing-equation data via integer minors.
//!
//! A degeneration type assigns to every tetrahedron one of 0, 1, ∞ (its
//! shape limit). Replacing each equation entry by r'', r', or −r'−r''
//! according to that type gives an (n−1)×n integer matrix; the alternating
//! maximal minors form the vector d. When all entries of d share one strict
//! sign, the degeneration is realized by an ideal point of the deformation
//! variety, the valuation satisfies v(z_k) = d_k, and the detected boundary
//! slope is −v(L)/v(M).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gluing::{ExponentRow, GluingSystem};
use crate::slope::Slope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealPointError {
    #[error("degeneration type has length {got}, system has {want} tetrahedra")]
    TypeLength { want: usize, got: usize },
    #[error("d-vector has mixed signs; no ideal point is certified")]
    MixedSign,
}

/// Shape limit of one tetrahedron at an ideal point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degeneration {
    Zero,
    One,
    Infinity,
}

impl Degeneration {
    pub const ALL: [Degeneration; 3] = [Degeneration::Zero, Degeneration::One, Degeneration::Infinity];

    pub fn symbol(&self) -> &'static str {
        match self {
            Degeneration::Zero => "0",
            Degeneration::One => "1",
            Degeneration::Infinity => "inf",
        }
    }
}

/// A full degeneration type, one entry per tetrahedron.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenerationType(pub Vec<Degeneration>);

impl DegenerationType {
    pub fn symbols(&self) -> String {
        let parts: Vec<&str> = self.0.iter().map(|d| d.symbol()).collect();
        format!("({})", parts.join(","))
    }
}

/// An ideal point certified by the scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealPointRecord {
    pub degeneration: DegenerationType,
    /// d normalized to all-positive entries.
    pub d: Vec<i64>,
    /// +1 if the raw minors were already positive, −1 if they were negated.
    pub raw_sign: i64,
    /// valuations of the peripheral words under the normalized d
    pub v_meridian: i64,
    pub v_longitude: i64,
    pub slope: Slope,
}

/// Entrywise degeneration of the retained equations of `sys` at type `i`:
/// r'' where the entry degenerates to 1, r' at 0, −r'−r'' at ∞.
pub fn degeneration_matrix(
    sys: &GluingSystem,
    i: &DegenerationType,
) -> Result<Vec<Vec<i64>>, IdealPointError> {
    if i.0.len() != sys.n {
        return Err(IdealPointError::TypeLength { want: sys.n, got: i.0.len() });
    }
    Ok(sys
        .retained_equations()
        .iter()
        .map(|row| {
            (0..sys.n)
                .map(|k| match i.0[k] {
                    Degeneration::One => row.ones[k],
                    Degeneration::Zero => row.zs[k],
                    Degeneration::Infinity => -row.zs[k] - row.ones[k],
                })
                .collect()
        })
        .collect())
}

/// Alternating-sign maximal minors of an (n−1)×n integer matrix:
/// d_k = (−1)^k det(matrix with column k removed). Exact arithmetic.
pub fn d_vector(matrix: &[Vec<i64>]) -> Vec<i64> {
    let n = matrix.first().map_or(0, |r| r.len());
    (0..n)
        .map(|k| {
            let minor: Vec<Vec<i64>> = matrix
                .iter()
                .map(|row| {
                    row.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, &v)| v).collect()
                })
                .collect();
            let det = int_det(&minor);
            if k % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

/// Integer determinant by fraction-free (Bareiss) elimination in i128.
fn int_det(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// Valuations (v(z_k), v(1−z_k)) induced by a one-signed d at type `i`.
fn shape_valuations(i: &DegenerationType, d: &[i64]) -> Vec<(i64, i64)> {
    i.0.iter()
        .zip(d)
        .map(|(deg, &dk)| match deg {
            Degeneration::Zero => (dk, 0),
            Degeneration::One => (0, dk),
            Degeneration::Infinity => (-dk, -dk),
        })
        .collect()
}

/// Valuation of a peripheral word: Σ_k (r'_k v(z_k) + r''_k v(1−z_k)).
pub fn word_valuation(word: &ExponentRow, valuations: &[(i64, i64)]) -> i64 {
    valuations
        .iter()
        .enumerate()
        .map(|(k, &(vz, vo))| word.zs[k] * vz + word.ones[k] * vo)
        .sum()
}

/// Valuation of a peripheral word at degeneration type `i` with vector `d`.
/// Rejects mixed-sign d.
pub fn peripheral_valuation(
    sys: &GluingSystem,
    i: &DegenerationType,
    d: &[i64],
    word: &ExponentRow,
) -> Result<i64, IdealPointError> {
    if i.0.len() != sys.n {
        return Err(IdealPointError::TypeLength { want: sys.n, got: i.0.len() });
    }
    if !one_signed(d) {
        return Err(IdealPointError::MixedSign);
    }
    Ok(word_valuation(word, &shape_valuations(i, d)))
}

fn one_signed(d: &[i64]) -> bool {
    d.iter().all(|&v| v > 0) || d.iter().all(|&v| v < 0)
}

/// Scan all 3^n degeneration types and keep those certifying an ideal point
/// with nonzero meridian valuation. Records are sign-normalized (d made
/// positive) and sorted by degeneration type for deterministic output.
pub fn scan_degenerations(sys: &GluingSystem) -> Vec<IdealPointRecord> {
    let n = sys.n;
    let mut records = Vec::new();
    let mut stack = vec![0usize; n];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for slot in stack.iter_mut() {
            *slot = c % 3;
            c /= 3;
        }
        let itype = DegenerationType(stack.iter().map(|&s| Degeneration::ALL[s]).collect());
        let matrix = degeneration_matrix(sys, &itype).expect("type length matches");
        let raw = d_vector(&matrix);
        if !one_signed(&raw) {
            continue;
        }
        let raw_sign = if raw[0] > 0 { 1 } else { -1 };
        let d: Vec<i64> = raw.iter().map(|&v| v * raw_sign).collect();
        let vals = shape_valuations(&itype, &d);
        let v_m = word_valuation(&sys.meridian, &vals);
        let v_l = word_valuation(&sys.longitude, &vals);
        if v_m == 0 {
            continue;
        }
        records.push(IdealPointRecord {
            slope: Slope::new(-v_l, v_m),
            degeneration: itype,
            d,
            raw_sign,
            v_meridian: v_m,
            v_longitude: v_l,
        });
    }
    records.sort_by_key(|r| {
        r.degeneration.0.iter().map(|d| Degeneration::ALL.iter().position(|x| x == d).unwrap()).collect::<Vec<_>>()
    });
    records
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gluing::pretzel_255_system;
    use Degeneration::{Infinity as I, One as O1, Zero as Z};

    fn dtype(entries: &[Degeneration]) -> DegenerationType {
        DegenerationType(entries.to_vec())
    }

    #[test]
    fn d_vector_identity_like() {
        // unit rows in the first n-1 columns: only the minor omitting the
        // last column survives
        let matrix = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ];
        assert_eq!(d_vector(&matrix), vec![0, 0, 0, -1]);
    }

    #[test]
    fn d_vector_repeated_rows_vanish() {
        let matrix = vec![vec![1, 2, 3], vec![1, 2, 3]];
        assert_eq!(d_vector(&matrix), vec![0, 0, 0]);
    }

    #[test]
    fn figure_rows_d_vectors() {
        let sys = pretzel_255_system();
        let row1 = dtype(&[Z, O1, I, Z, Z, I, Z]);
        let m = degeneration_matrix(&sys, &row1).unwrap();
        let raw = d_vector(&m);
        let normalized: Vec<i64> =
            raw.iter().map(|&v| v * if raw[0] >= 0 { 1 } else { -1 }).collect();
        assert_eq!(normalized, vec![1, 2, 1, 1, 1, 1, 2]);

        let row3 = dtype(&[I, O1, I, Z, Z, I, Z]);
        let m = degeneration_matrix(&sys, &row3).unwrap();
        let raw = d_vector(&m);
        let normalized: Vec<i64> =
            raw.iter().map(|&v| v * if raw[0] >= 0 { 1 } else { -1 }).collect();
        assert_eq!(normalized, vec![1, 4, 2, 4, 3, 1, 6]);
    }

    #[test]
    fn zero_row_degenerates_to_zero_row() {
        let row = ExponentRow { zs: vec![0; 3], ones: vec![0; 3], sign: 1 };
        let sys = GluingSystem {
            name: "toy".into(),
            n: 3,
            equations: vec![row.clone(), row.clone(), row.clone()],
            meridian: row.clone(),
            longitude: row,
        };
        let m = degeneration_matrix(&sys, &dtype(&[Z, O1, I])).unwrap();
        assert!(m.iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn valuation_row1() {
        let sys = pretzel_255_system();
        let itype = dtype(&[Z, O1, I, Z, Z, I, Z]);
        let d = vec![1, 2, 1, 1, 1, 1, 2];
        let vm = peripheral_valuation(&sys, &itype, &d, &sys.meridian).unwrap();
        let vl = peripheral_valuation(&sys, &itype, &d, &sys.longitude).unwrap();
        assert_eq!((vm, vl), (-1, 14));
        assert_eq!(Slope::new(-vl, vm), Slope::integer(14));
    }

    #[test]
    fn mixed_sign_rejected() {
        let sys = pretzel_255_system();
        let itype = dtype(&[Z, O1, I, Z, Z, I, Z]);
        let d = vec![1, -2, 1, 1, 1, 1, 2];
        assert_eq!(
            peripheral_valuation(&sys, &itype, &d, &sys.meridian),
            Err(IdealPointError::MixedSign)
        );
    }

    #[test]
    fn scan_reproduces_detected_slopes() {
        let sys = pretzel_255_system();
        let records = scan_degenerations(&sys);
        assert_eq!(records.len(), 6);
        let mut slopes: Vec<Slope> = records.iter().map(|r| r.slope).collect();
        slopes.sort_unstable();
        assert_eq!(
            slopes,
            vec![
                Slope::integer(14),
                Slope::integer(14),
                Slope::integer(15),
                Slope::integer(15),
                Slope::integer(15),
                Slope::integer(15)
            ]
        );
    }

    #[test]
    fn scan_matches_expected_rows() {
        let sys = pretzel_255_system();
        let records = scan_degenerations(&sys);
        let expected: Vec<(Vec<Degeneration>, Vec<i64>, i64)> = vec![
            (vec![Z, O1, I, Z, Z, I, Z], vec![1, 2, 1, 1, 1, 1, 2], 14),
            (vec![I, I, Z, Z, I, Z, I], vec![2, 1, 1, 1, 1, 2, 1], 14),
            (vec![I, O1, I, Z, Z, I, Z], vec![1, 4, 2, 4, 3, 1, 6], 15),
            (vec![Z, O1, I, I, Z, I, Z], vec![4, 3, 1, 1, 1, 2, 1], 15),
            (vec![I, O1, Z, Z, I, Z, I], vec![4, 1, 3, 4, 2, 6, 1], 15),
            (vec![I, I, Z, I, I, Z, I], vec![3, 4, 1, 1, 1, 1, 2], 15),
        ];
        for (itype, d, slope) in expected {
            let matching = records
                .iter()
                .find(|r| r.degeneration.0 == itype)
                .unwrap_or_else(|| panic!("type {:?} not found", itype));
            assert_eq!(matching.d, d);
            assert_eq!(matching.slope, Slope::integer(slope));
        }
    }

    #[test]
    fn sign_flip_fixes_slope() {
        let sys = pretzel_255_system();
        for r in scan_degenerations(&sys) {
            let neg: Vec<i64> = r.d.iter().map(|v| -v).collect();
            let vals: Vec<(i64, i64)> = shape_valuations(&r.degeneration, &neg);
            let vm = word_valuation(&sys.meridian, &vals);
            let vl = word_valuation(&sys.longitude, &vals);
            assert_eq!((vm, vl), (-r.v_meridian, -r.v_longitude));
            assert_eq!(Slope::new(-vl, vm), r.slope);
        }
    }

    #[test]
    fn dropping_a_different_equation_flips_minors_globally() {
        let sys = pretzel_255_system();
        for drop in 0..sys.n {
            let mut perm = sys.clone();
            perm.equations = (0..sys.n)
                .filter(|&j| j != drop)
                .chain([drop])
                .map(|j| sys.equations[j].clone())
                .collect();
            let records = scan_degenerations(&perm);
            let mut slopes: Vec<Slope> = records.iter().map(|r| r.slope).collect();
            slopes.sort_unstable();
            let mut base: Vec<Slope> =
                scan_degenerations(&sys).iter().map(|r| r.slope).collect();
            base.sort_unstable();
            assert_eq!(slopes, base, "dropping equation {drop}");
        }
    }

    #[test]
    fn meridian_as_longitude_gives_slope_minus_one() {
        let mut sys = pretzel_255_system();
        sys.longitude = sys.meridian.clone();
        for r in scan_degenerations(&sys) {
            assert_eq!(r.slope, Slope::integer(-1));
        }
    }

    #[test]
    fn repeated_equation_row_scans_empty() {
        let mut sys = pretzel_255_system();
        sys.equations[1] = sys.equations[0].clone();
        assert!(scan_degenerations(&sys).is_empty());
    }
}
