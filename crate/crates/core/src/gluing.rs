//! Gluing-equation systems in exponent form.
//!
//! Each equation of an ideal triangulation is a product of shape parameters
//! z_k, z'_k = 1/(1−z_k), z''_k = 1 − 1/z_k equal to 1. Internally every
//! row is converted to the canonical basis
//!
//!   ± Π_k z_k^{r'_k} (1 − z_k)^{r''_k} = 1,
//!
//! using z'^e = (1−z)^{−e} and z''^e = (−1)^e z^{−e} (1−z)^e. Valuations and
//! minors are linear in this basis. The sign bit is (−1)^(sum of z''
//! exponents).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GluingError {
    #[error("equation {index} has {got} tetrahedron entries, expected {want}")]
    RowLength { index: usize, want: usize, got: usize },
    #[error("gluing file is malformed: {0}")]
    Format(String),
}

/// One multiplicative row in canonical (z, 1−z) exponent form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentRow {
    /// exponents of z_k
    pub zs: Vec<i64>,
    /// exponents of (1 − z_k)
    pub ones: Vec<i64>,
    /// +1 or −1
    pub sign: i64,
}

impl ExponentRow {
    /// Convert a row of (e, e', e'') triples to canonical form.
    pub fn from_triples(triples: &[[i64; 3]]) -> Self {
        let mut zs = Vec::with_capacity(triples.len());
        let mut ones = Vec::with_capacity(triples.len());
        let mut dbl_prime_sum = 0i64;
        for t in triples {
            let (e, ep, epp) = (t[0], t[1], t[2]);
            zs.push(e - epp);
            ones.push(-ep + epp);
            dbl_prime_sum += epp;
        }
        ExponentRow { zs, ones, sign: if dbl_prime_sum.rem_euclid(2) == 0 { 1 } else { -1 } }
    }

    pub fn len(&self) -> usize {
        self.zs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zs.is_empty()
    }

    /// Evaluate the product ± Π z^{r'} (1−z)^{r''} at a shape assignment.
    pub fn evaluate(&self, shapes: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(self.sign as f64, 0.0);
        for (k, &z) in shapes.iter().enumerate() {
            acc *= z.powi(self.zs[k] as i32) * (1.0 - z).powi(self.ones[k] as i32);
        }
        acc
    }

    /// d/dz_k of log of the row: r'_k / z_k − r''_k / (1 − z_k).
    pub fn log_derivative(&self, shapes: &[Complex64], k: usize) -> Complex64 {
        let z = shapes[k];
        self.zs[k] as f64 / z - self.ones[k] as f64 / (1.0 - z)
    }
}

/// A gluing system: n tetrahedra, the full list of edge equations (the
/// product of all of them is trivial, so one is redundant), and the
/// meridian/longitude exponent words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingSystem {
    pub name: String,
    pub n: usize,
    /// all n equations, in canonical form
    pub equations: Vec<ExponentRow>,
    pub meridian: ExponentRow,
    pub longitude: ExponentRow,
}

/// Serialization schema for triangulation files:
/// `{"n": 7, "equations": [[[e,e',e''] × n] × n], "meridian": ..., "longitude": ...}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GluingFile {
    #[serde(default)]
    pub schema: u32,
    #[serde(default)]
    pub name: String,
    pub n: usize,
    pub equations: Vec<Vec<[i64; 3]>>,
    pub meridian: Vec<[i64; 3]>,
    pub longitude: Vec<[i64; 3]>,
}

impl GluingSystem {
    pub fn from_file(file: &GluingFile) -> Result<Self, GluingError> {
        let n = file.n;
        for (index, row) in file.equations.iter().enumerate() {
            if row.len() != n {
                return Err(GluingError::RowLength { index, want: n, got: row.len() });
            }
        }
        if file.meridian.len() != n || file.longitude.len() != n {
            return Err(GluingError::Format("peripheral word length mismatch".into()));
        }
        Ok(GluingSystem {
            name: file.name.clone(),
            n,
            equations: file.equations.iter().map(|r| ExponentRow::from_triples(r)).collect(),
            meridian: ExponentRow::from_triples(&file.meridian),
            longitude: ExponentRow::from_triples(&file.longitude),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, GluingError> {
        let file: GluingFile =
            serde_json::from_str(text).map_err(|e| GluingError::Format(e.to_string()))?;
        Self::from_file(&file)
    }

    /// The n−1 equations kept for the degeneration scan (the last one is
    /// the redundant product of the others).
    pub fn retained_equations(&self) -> &[ExponentRow] {
        &self.equations[..self.equations.len() - 1]
    }

    /// Componentwise sum of all equation rows; the trivial row (all zero,
    /// sign +1) exactly when the product of the equations is 1.
    pub fn equation_sum(&self) -> ExponentRow {
        let mut zs = vec![0i64; self.n];
        let mut ones = vec![0i64; self.n];
        let mut sign = 1i64;
        for row in &self.equations {
            for k in 0..self.n {
                zs[k] += row.zs[k];
                ones[k] += row.ones[k];
            }
            sign *= row.sign;
        }
        ExponentRow { zs, ones, sign }
    }
}

/// The bundled gluing system of the (-2,5,5) pretzel knot complement
/// (7 ideal tetrahedra).
pub fn pretzel_255_system() -> GluingSystem {
    GluingSystem::from_json(crate::data::GLUING_255_JSON).expect("bundled data parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversion_matches_displayed_forms() {
        let sys = pretzel_255_system();
        // second equation: -(z1)^-1 z2 (1-z4)^-1 (z5)^-1 (z6)^-1 (1-z6)^-1 = 1
        let eq2 = &sys.equations[1];
        assert_eq!(eq2.zs, vec![-1, 1, 0, 0, -1, -1, 0]);
        assert_eq!(eq2.ones, vec![0, 0, 0, -1, 0, -1, 0]);
        assert_eq!(eq2.sign, -1);
        // third equation: (z1)^-1 (1-z1) (1-z2) (z3)^-1 (1-z4)^-1 (z7)^-1 (1-z7)^-1 = 1
        let eq3 = &sys.equations[2];
        assert_eq!(eq3.zs, vec![-1, 0, -1, 0, 0, 0, -1]);
        assert_eq!(eq3.ones, vec![1, 1, 0, -1, 0, 0, -1]);
        assert_eq!(eq3.sign, 1);
    }

    #[test]
    fn equation_signs() {
        let sys = pretzel_255_system();
        let signs: Vec<i64> = sys.equations.iter().map(|r| r.sign).collect();
        assert_eq!(signs, vec![1, -1, 1, 1, -1, -1, -1]);
    }

    #[test]
    fn product_of_all_equations_is_trivial() {
        let sum = pretzel_255_system().equation_sum();
        assert!(sum.zs.iter().all(|&v| v == 0));
        assert!(sum.ones.iter().all(|&v| v == 0));
        assert_eq!(sum.sign, 1);
    }

    #[test]
    fn row_length_validation() {
        let file = GluingFile {
            schema: 1,
            name: "bad".into(),
            n: 2,
            equations: vec![vec![[1, 0, 0]]],
            meridian: vec![[0, 0, 0], [0, 0, 0]],
            longitude: vec![[0, 0, 0], [0, 0, 0]],
        };
        assert!(matches!(
            GluingSystem::from_file(&file),
            Err(GluingError::RowLength { index: 0, want: 2, got: 1 })
        ));
    }
}
