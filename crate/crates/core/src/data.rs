//! Bundled data files and their schemas.
//!
//! Everything the pipeline treats as quoted input lives here as versioned
//! JSON: boundary-slope tables, cusp lattice constants, the (-2,5,5)
//! triangulation, the slope-24 cross-ratio polynomial, and the quotient
//! substitution scripts. Each file carries `"schema": 1`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::cusp::{CuspLattice, SqrtThreeComplex};
use crate::slope::{BoundarySlopeTable, KnotSpec, Slope};

pub const GLUING_255_JSON: &str = include_str!("../data/gluing_255.json");
pub const BOUNDARY_SLOPES_JSON: &str = include_str!("../data/boundary_slopes.json");
pub const CUSP_LATTICES_JSON: &str = include_str!("../data/cusp_lattices.json");
pub const QUOTIENT_POLYNOMIAL_JSON: &str = include_str!("../data/quotient_polynomial.json");
pub const QUOTIENT_SCRIPTS_JSON: &str = include_str!("../data/quotient_scripts.json");

#[derive(Debug, Serialize, Deserialize)]
pub struct BoundarySlopeFile {
    pub schema: u32,
    pub tables: Vec<BoundaryTableEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BoundaryTableEntry {
    pub knot: [i64; 2],
    pub slopes: Vec<[i64; 2]>,
    pub complete: bool,
}

impl BoundaryTableEntry {
    pub fn to_table(&self) -> Option<BoundarySlopeTable> {
        let knot = KnotSpec::new(self.knot[0], self.knot[1]).ok()?;
        Some(BoundarySlopeTable {
            knot,
            slopes: self.slopes.iter().map(|[n, d]| Slope::new(*n, *d)).collect(),
            complete: self.complete,
        })
    }
}

pub fn bundled_boundary_tables() -> Vec<BoundarySlopeTable> {
    let file: BoundarySlopeFile =
        serde_json::from_str(BOUNDARY_SLOPES_JSON).expect("bundled data parses");
    file.tables.iter().filter_map(|t| t.to_table()).collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LatticeFile {
    pub schema: u32,
    pub lattices: Vec<LatticeEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LatticeEntry {
    pub name: String,
    pub meridian: ExactComplexEntry,
    pub second: ExactComplexEntry,
    pub scale_sq: [i64; 2],
    pub second_label: [i64; 2],
}

/// re + im·√3·i with both parts as [numerator, denominator] pairs.
#[derive(Debug, Serialize, Deserialize)]
pub struct ExactComplexEntry {
    pub re: [i64; 2],
    pub im: [i64; 2],
}

impl ExactComplexEntry {
    fn to_value(&self) -> SqrtThreeComplex {
        SqrtThreeComplex::new(
            Rational64::new(self.re[0], self.re[1]),
            Rational64::new(self.im[0], self.im[1]),
        )
    }
}

pub fn bundled_lattices() -> Vec<CuspLattice> {
    let file: LatticeFile = serde_json::from_str(CUSP_LATTICES_JSON).expect("bundled data parses");
    file.lattices
        .iter()
        .map(|e| {
            CuspLattice::new(
                e.name.clone(),
                e.meridian.to_value(),
                e.second.to_value(),
                Rational64::new(e.scale_sq[0], e.scale_sq[1]),
                Slope::new(e.second_label[0], e.second_label[1]),
            )
            .expect("bundled lattice is valid")
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolynomialFile {
    pub schema: u32,
    pub name: String,
    /// factor coefficients, ascending degree
    pub factors: Vec<Vec<i64>>,
}

pub fn bundled_polynomial() -> PolynomialFile {
    serde_json::from_str(QUOTIENT_POLYNOMIAL_JSON).expect("bundled data parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_match_constructors() {
        for table in bundled_boundary_tables() {
            assert_eq!(table, BoundarySlopeTable::for_knot(table.knot));
        }
    }

    #[test]
    fn bundled_lattices_parse() {
        let lattices = bundled_lattices();
        assert_eq!(lattices.len(), 5);
        let knot_cusp = lattices.iter().find(|l| l.name == "knot-cusp").unwrap();
        assert_eq!(*knot_cusp, crate::cusp::knot_cusp_lattice());
    }

    #[test]
    fn bundled_polynomial_shape() {
        let file = bundled_polynomial();
        assert_eq!(file.factors.len(), 2);
        assert!(file.factors.iter().all(|f| f.len() == 9));
        // identical degree-3..8 coefficients, constant terms of modulus 1
        assert_eq!(file.factors[0][3..], file.factors[1][3..]);
        assert_eq!(file.factors[0][0].abs(), 1);
        assert_eq!(file.factors[1][0].abs(), 1);
    }
}
