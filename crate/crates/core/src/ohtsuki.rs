//! Desk-scale verification of the slope-24 ideal-point count: roots of the
//! bundled degree-16 polynomial and the number of distinct cross-ratio
//! values they produce.
//!
//! The cross ratio attached to a root ζ reduces to the closed form
//! −ζ(2+ζ) after fixing the three coordinates t₁⁻ = 0, t₁⁺ = 1,
//! t₃⁺ = t₂⁺ + 1 and t₂⁺ = 1 + ζ: the defining expression
//! (t₁⁺−t₂⁺)/(t₁⁺−t₁⁻) ÷ (t₃⁺−t₂⁺)/(t₃⁺−t₁⁻) becomes
//! (−ζ)/1 ÷ 1/(2+ζ) = −ζ(2+ζ). The only excluded argument is ζ = −2,
//! which puts t₃⁺ on top of t₁⁻.

use num_complex::Complex64;
use thiserror::Error;

use crate::data;

#[derive(Debug, Error, PartialEq)]
pub enum OhtsukiError {
    #[error("root finding did not converge (worst residual {0:.3e})")]
    NoConvergence(f64),
    #[error("polynomial must have degree >= 1")]
    DegreeZero,
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("cross ratio undefined at the excluded value -2")]
    ExcludedValue,
    #[error("clustering is ambiguous: inter-cluster gap {gap:.3e} within 10x tolerance {tol:.1e}")]
    AmbiguousClustering { gap: f64, tol: f64 },
}

/// Integer-coefficient polynomial, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    pub coefficients: Vec<i64>,
}

impl IntegerPolynomial {
    pub fn new(coefficients: Vec<i64>) -> Result<Self, OhtsukiError> {
        if coefficients.len() < 2 {
            return Err(OhtsukiError::DegreeZero);
        }
        if *coefficients.last().unwrap() == 0 {
            return Err(OhtsukiError::ZeroLeading);
        }
        Ok(IntegerPolynomial { coefficients })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
    }

    /// Product of two polynomials (used to assemble the degree-16 equation
    /// from its bundled factors).
    pub fn multiply(&self, other: &IntegerPolynomial) -> IntegerPolynomial {
        let mut coeffs = vec![0i64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntegerPolynomial { coefficients: coeffs }
    }

    /// Max |coefficient|, the normalization for relative residuals.
    pub fn coefficient_norm(&self) -> f64 {
        self.coefficients.iter().map(|c| c.abs()).max().unwrap_or(1) as f64
    }

    /// All complex roots by Durand–Kerner simultaneous iteration with a
    /// Newton polish. Residuals are checked against |p(root)| / ‖p‖ < tol.
    pub fn roots(&self, tol: f64) -> Result<Vec<Complex64>, OhtsukiError> {
        let n = self.degree();
        let lead = *self.coefficients.last().unwrap() as f64;
        let norm = self.coefficient_norm();

        // start on a slightly irrational spiral to break symmetries
        let radius = 1.0
            + self.coefficients[..n]
                .iter()
                .map(|&c| (c as f64 / lead).abs())
                .fold(0.0f64, f64::max);
        let mut roots: Vec<Complex64> = (0..n)
            .map(|k| {
                Complex64::from_polar(
                    radius.min(2.0) * (0.6 + 0.4 * (k as f64 / n as f64)),
                    2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.41,
                )
            })
            .collect();

        for _ in 0..500 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let zi = roots[i];
                let mut denom = Complex64::new(lead, 0.0);
                for (j, &zj) in roots.iter().enumerate() {
                    if j != i {
                        denom *= zi - zj;
                    }
                }
                if denom.norm() < 1e-290 {
                    continue;
                }
                let delta = self.eval(zi) / denom;
                roots[i] = zi - delta;
                moved = moved.max(delta.norm());
            }
            if moved < 1e-14 {
                break;
            }
        }
        // Newton polish
        let derivative: Vec<f64> = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as i64 * c) as f64)
            .collect();
        let eval_derivative = |z: Complex64| {
            derivative.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
        };
        for root in roots.iter_mut() {
            for _ in 0..8 {
                let d = eval_derivative(*root);
                if d.norm() < 1e-200 {
                    break;
                }
                *root -= self.eval(*root) / d;
            }
        }
        let worst =
            roots.iter().map(|&r| self.eval(r).norm() / norm).fold(0.0f64, f64::max);
        if worst >= tol {
            return Err(OhtsukiError::NoConvergence(worst));
        }
        roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        Ok(roots)
    }
}

/// The closed-form cross ratio −ζ(2+ζ) of a solution ζ.
pub fn cross_ratio_value(zeta: Complex64) -> Result<Complex64, OhtsukiError> {
    if (zeta + 2.0).norm() < 1e-12 {
        return Err(OhtsukiError::ExcludedValue);
    }
    Ok(-zeta * (zeta + 2.0))
}

/// Number of clusters of `values` under single-linkage at distance `tol`.
///
/// Errors unless every inter-cluster gap exceeds 10·tol, which turns the
/// numeric heuristic into a checkable contract.
pub fn count_distinct(values: &[Complex64], tol: f64) -> Result<usize, OhtsukiError> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (values[i] - values[j]).norm() < tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut gap = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            if roots[i] != roots[j] {
                gap = gap.min((values[i] - values[j]).norm());
            }
        }
    }
    if gap <= 10.0 * tol {
        return Err(OhtsukiError::AmbiguousClustering { gap, tol });
    }
    let mut distinct: Vec<usize> = roots.clone();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct.len())
}

/// The two bundled degree-8 factors.
pub fn bundled_factors() -> (IntegerPolynomial, IntegerPolynomial) {
    let file = data::bundled_polynomial();
    (
        IntegerPolynomial::new(file.factors[0].clone()).expect("bundled factor is valid"),
        IntegerPolynomial::new(file.factors[1].clone()).expect("bundled factor is valid"),
    )
}

/// Full report for the CLI: roots, cross ratios, distinct count.
pub struct CrossRatioReport {
    pub roots: Vec<Complex64>,
    pub cross_ratios: Vec<Complex64>,
    pub distinct: usize,
    pub worst_residual: f64,
}

pub fn cross_ratio_report(tol: f64) -> Result<CrossRatioReport, OhtsukiError> {
    let (f1, f2) = bundled_factors();
    let product = f1.multiply(&f2);
    let roots = product.roots(1e-10)?;
    let norm = product.coefficient_norm();
    let worst_residual =
        roots.iter().map(|&r| product.eval(r).norm() / norm).fold(0.0f64, f64::max);
    let cross_ratios: Result<Vec<Complex64>, OhtsukiError> =
        roots.iter().map(|&r| cross_ratio_value(r)).collect();
    let cross_ratios = cross_ratios?;
    let distinct = count_distinct(&cross_ratios, tol)?;
    Ok(CrossRatioReport { roots, cross_ratios, distinct, worst_residual })
}
