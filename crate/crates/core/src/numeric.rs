//! Small dense complex linear algebra and a damped Newton driver, sized for
//! the gluing systems here (at most 9 unknowns).

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NumericError {
    #[error("jacobian is singular (pivot {0:.3e})")]
    SingularJacobian(f64),
    #[error("newton iteration did not reach residual {target:.1e} in {budget} steps (final {achieved:.3e})")]
    NoConvergence { target: f64, budget: usize, achieved: f64 },
}

/// Solve A x = b in place by Gaussian elimination with partial pivoting.
pub fn solve_linear(a: &mut [Vec<Complex64>], b: &mut [Complex64]) -> Result<Vec<Complex64>, NumericError> {
    let n = b.len();
    for col in 0..n {
        let (pivot_row, pivot_norm) = (col..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pivot_norm < 1e-14 {
            return Err(NumericError::SingularJacobian(pivot_norm));
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in (col + 1)..n {
            let factor = a[r][col] / a[col][col];
            for c in col..n {
                let sub = factor * a[col][c];
                a[r][c] -= sub;
            }
            let sub = factor * b[col];
            b[r] -= sub;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in (row + 1)..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

/// Damped Newton iteration on F(x) = 0 with numerically supplied residual
/// and Jacobian. Stops when the max-norm of the residual drops below
/// `target`.
pub fn newton<F>(
    mut x: Vec<Complex64>,
    mut eval: F,
    target: f64,
    budget: usize,
) -> Result<Vec<Complex64>, NumericError>
where
    F: FnMut(&[Complex64]) -> (Vec<Complex64>, Vec<Vec<Complex64>>),
{
    let residual_norm =
        |f: &[Complex64]| f.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
    let (mut f, mut jac) = eval(&x);
    let mut res = residual_norm(&f);
    for _ in 0..budget {
        if res < target {
            return Ok(x);
        }
        if !res.is_finite() {
            return Err(NumericError::NoConvergence { target, budget, achieved: res });
        }
        let mut rhs: Vec<Complex64> = f.iter().map(|v| -v).collect();
        let step = solve_linear(&mut jac, &mut rhs)?;
        // Backtracking line search keeps the iteration from jumping over
        // the poles at z = 0, 1.
        let mut lambda = 1.0;
        loop {
            let trial: Vec<Complex64> =
                x.iter().zip(&step).map(|(xi, si)| xi + si * lambda).collect();
            let (tf, tj) = eval(&trial);
            let tres = residual_norm(&tf);
            if tres.is_finite() && (tres < res || lambda < 1.0 / 64.0) {
                x = trial;
                f = tf;
                jac = tj;
                res = tres;
                break;
            }
            lambda *= 0.5;
        }
    }
    if res < target {
        Ok(x)
    } else {
        Err(NumericError::NoConvergence { target, budget, achieved: res })
    }
}
