//! The Bloch–Wigner function D(z) = Im Li₂(z) + log|z| · arg(1 − z).
//!
//! D(z) is the hyperbolic volume of the ideal tetrahedron with cross-ratio
//! z. It is real-analytic off {0, 1, ∞}, vanishes on the real line, and
//! satisfies D(z̄) = −D(z).
//!
//! Li₂ is evaluated by reducing the argument with the inversion and
//! reflection identities and summing the Bernoulli series in
//! w = −log(1 − z), accurate to well below 1e-12 after reduction.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Volume of the regular ideal tetrahedron, D(exp(iπ/3)).
pub const REGULAR_IDEAL_TETRAHEDRON: f64 = 1.014_941_606_409_653_6;

const PI_SQ_OVER_6: f64 = PI * PI / 6.0;

/// Bernoulli numbers B₀, B₁, B₂, B₄, …, B₂₂ over (n+1)! as the series
/// coefficients of Li₂(1 − e^{-w}) in w.
fn li2_series(w: Complex64) -> Complex64 {
    // Li2(z) = sum_{n>=0} B_n w^{n+1} / (n+1)!  with w = -log(1-z)
    const B_OVER_FACT: [f64; 23] = [
        1.0,                      // B0/1!
        -0.25,                    // B1/2! (B1 = -1/2)
        1.0 / 36.0,               // B2/3!
        0.0,
        -1.0 / 3600.0,            // B4/5!
        0.0,
        1.0 / 211_680.0,          // B6/7!
        0.0,
        -1.0 / 10_886_400.0,      // B8/9!
        0.0,
        1.0 / 526_901_760.0,      // B10/11!
        0.0,
        -4.064_761_645_144_226e-11, // B12/13!
        0.0,
        8.921_691_020_456_453e-13,  // B14/15!
        0.0,
        -1.993_929_586_072_108e-14, // B16/17!
        0.0,
        4.518_980_029_619_918e-16,  // B18/19!
        0.0,
        -1.035_651_761_218_124e-17, // B20/21!
        0.0,
        2.395_218_621_026_021e-19,  // B22/23!
    ];
    let mut term = w;
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in &B_OVER_FACT {
        if c != 0.0 {
            acc += term * c;
        }
        term *= w;
    }
    acc
}

/// Complex dilogarithm Li₂(z) on the principal branch.
pub fn li2(z: Complex64) -> Complex64 {
    if z.norm_sqr() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if (z - 1.0).norm() < 1e-15 {
        return Complex64::new(PI_SQ_OVER_6, 0.0);
    }
    // |z| > 1: invert. Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
    if z.norm_sqr() > 1.0 {
        let log_neg = (-z).ln();
        return -li2(1.0 / z) - PI_SQ_OVER_6 - log_neg * log_neg * 0.5;
    }
    // Re z > 1/2: reflect. Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
    if z.re > 0.5 {
        return PI_SQ_OVER_6 - z.ln() * (1.0 - z).ln() - li2(1.0 - z);
    }
    li2_series(-(1.0 - z).ln())
}

/// Bloch–Wigner function D(z).
///
/// Values within 1e-14 of the real axis are treated as degenerate shapes
/// and contribute exactly 0.
pub fn bloch_wigner(z: Complex64) -> f64 {
    if z.im.abs() < 1e-14 {
        return 0.0;
    }
    li2(z).im + z.norm().ln() * (1.0 - z).arg()
}

/// Total volume Σ_k D(z_k) of a shape assignment. Degenerate coordinates
/// (real or at 0, 1) contribute 0.
pub fn volume(shapes: &[Complex64]) -> f64 {
    shapes.iter().map(|&z| bloch_wigner(z)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn li2_known_values() {
        // Li2(1) = pi^2/6, Li2(-1) = -pi^2/12, Li2(1/2) = pi^2/12 - ln^2(2)/2
        assert!((li2(c(1.0, 0.0)).re - PI_SQ_OVER_6).abs() < 1e-13);
        assert!((li2(c(-1.0, 0.0)).re + PI * PI / 12.0).abs() < 1e-13);
        let half = PI * PI / 12.0 - 0.5 * 2f64.ln() * 2f64.ln();
        assert!((li2(c(0.5, 0.0)).re - half).abs() < 1e-13);
    }

    #[test]
    fn li2_series_agreement() {
        // direct power series at a small argument
        let z = c(0.2, 0.1);
        let mut direct = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        for k in 1..200 {
            pow *= z;
            direct += pow / (k * k) as f64;
        }
        assert!((li2(z) - direct).norm() < 1e-13);
    }

    #[test]
    fn regular_tetrahedron_volume() {
        let z = Complex64::from_polar(1.0, PI / 3.0);
        assert!((bloch_wigner(z) - REGULAR_IDEAL_TETRAHEDRON).abs() < 1e-9);
    }

    #[test]
    fn vanishes_on_reals_and_flips_under_conjugation() {
        for x in [-3.0, -0.5, 0.5, 0.25, 2.0, 11.0] {
            assert_eq!(bloch_wigner(c(x, 0.0)), 0.0);
        }
        for z in [c(0.3, 0.8), c(-1.2, 2.0), c(1.5, 0.866)] {
            assert!((bloch_wigner(z) + bloch_wigner(z.conj())).abs() < 1e-11);
        }
    }

    #[test]
    fn five_term_symmetry() {
        // D is invariant under z -> 1 - 1/z and z -> 1/(1-z)
        for z in [c(0.3, 0.8), c(-1.2, 2.0), c(0.5, 0.289)] {
            let a = bloch_wigner(z);
            let b = bloch_wigner(1.0 - 1.0 / z);
            let d = bloch_wigner(1.0 / (1.0 - z));
            assert!((a - b).abs() < 1e-11, "{z}");
            assert!((a - d).abs() < 1e-11, "{z}");
        }
    }
}
