//! Numeric solutions of gluing systems: the complete hyperbolic structure
//! and Newton continuation into non-degenerate ideal points.
//!
//! A continuation plan names the degenerating coordinates with their local
//! form and order in the parameter t: z = c·t^ord (ToZero) or
//! z = 1 − c·t^ord (ToOne). The first listed coefficient is normalized to 1
//! (t is a local parameter on the deformation curve), leaving as many
//! unknowns as retained equations. The limit values of the non-degenerate
//! coordinates are obtained twice: by solving the cancelled t = 0 system
//! directly, and by Richardson extrapolation along the t-schedule; the
//! distance between the two is reported as drift.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

use crate::gluing::GluingSystem;
use crate::ideal_points::word_valuation;
use crate::numeric::{newton, NumericError};
use crate::slope::Slope;

#[derive(Debug, Error, PartialEq)]
pub enum ContinuationError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("initial shapes must have positive imaginary part")]
    BadInitialShapes,
    #[error("no geometric solution found from the seed battery")]
    NoGeometricSolution,
    #[error("retained equation {index} has net t-order {order}; the plan is inconsistent")]
    InconsistentPlan { index: usize, order: i64 },
    #[error("degenerate coefficient {index} tends to {value}; the plan is wrong")]
    CoefficientCollapse { index: usize, value: f64 },
    #[error("t-schedule must be positive and strictly decreasing")]
    BadSchedule,
    #[error("plan names tetrahedron {0} twice")]
    DuplicateCoordinate(usize),
}

/// How one coordinate degenerates along the plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalForm {
    /// z = c · t^order → 0
    ToZero,
    /// z = 1 − c · t^order → 1
    ToOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    /// tetrahedron index, 0-based
    pub tet: usize,
    pub form: LocalForm,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContinuationPlan {
    pub name: String,
    pub subs: Vec<Substitution>,
    /// seed the non-degenerate shapes in the lower half plane instead
    /// (selects the complex-conjugate branch)
    pub conjugate_seed: bool,
}

impl ContinuationPlan {
    /// The slope-20 ideal point of the (-2,5,5) system: z2 → 0, z6 → 1.
    pub fn slope20(conjugate_branch: bool) -> Self {
        ContinuationPlan {
            name: format!("slope20{}", if conjugate_branch { "-conj" } else { "" }),
            subs: vec![
                Substitution { tet: 1, form: LocalForm::ToZero, order: 1 },
                Substitution { tet: 5, form: LocalForm::ToOne, order: 1 },
            ],
            conjugate_seed: conjugate_branch,
        }
    }

    /// The slope-22 ideal point: z1, z2, z5 → 1 (z5 at order 2), z3, z7 → 0.
    pub fn slope22() -> Self {
        ContinuationPlan {
            name: "slope22".to_string(),
            subs: vec![
                Substitution { tet: 0, form: LocalForm::ToOne, order: 1 },
                Substitution { tet: 1, form: LocalForm::ToOne, order: 1 },
                Substitution { tet: 2, form: LocalForm::ToZero, order: 1 },
                Substitution { tet: 4, form: LocalForm::ToOne, order: 2 },
                Substitution { tet: 6, form: LocalForm::ToZero, order: 1 },
            ],
            conjugate_seed: false,
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "slope20" => Some(Self::slope20(false)),
            "slope20-conj" => Some(Self::slope20(true)),
            "slope22" => Some(Self::slope22()),
            _ => None,
        }
    }

    fn sub_for(&self, tet: usize) -> Option<&Substitution> {
        self.subs.iter().find(|s| s.tet == tet)
    }

    /// Valuations (v(z_k), v(1−z_k)) the plan induces.
    pub fn valuations(&self, n: usize) -> Vec<(i64, i64)> {
        (0..n)
            .map(|k| match self.sub_for(k) {
                Some(Substitution { form: LocalForm::ToZero, order, .. }) => (*order as i64, 0),
                Some(Substitution { form: LocalForm::ToOne, order, .. }) => (0, *order as i64),
                None => (0, 0),
            })
            .collect()
    }

    /// The boundary slope −v(L)/v(M) detected at this ideal point.
    pub fn detected_slope(&self, sys: &GluingSystem) -> Slope {
        let vals = self.valuations(sys.n);
        let vm = word_valuation(&sys.meridian, &vals);
        let vl = word_valuation(&sys.longitude, &vals);
        Slope::new(-vl, vm)
    }

    fn validate(&self, sys: &GluingSystem) -> Result<(), ContinuationError> {
        for (i, s) in self.subs.iter().enumerate() {
            if self.subs[..i].iter().any(|other| other.tet == s.tet) {
                return Err(ContinuationError::DuplicateCoordinate(s.tet));
            }
        }
        // Each retained equation must pick up a net t-power of zero.
        for (index, row) in sys.retained_equations().iter().enumerate() {
            let order: i64 = self
                .subs
                .iter()
                .map(|s| match s.form {
                    LocalForm::ToZero => row.zs[s.tet] * s.order as i64,
                    LocalForm::ToOne => row.ones[s.tet] * s.order as i64,
                })
                .sum();
            if order != 0 {
                return Err(ContinuationError::InconsistentPlan { index, order });
            }
        }
        Ok(())
    }
}

/// Complete-structure solution of a gluing system.
#[derive(Debug, Clone)]
pub struct CompleteSolution {
    pub shapes: Vec<Complex64>,
    pub residual: f64,
    /// derivative holonomies at the solution
    pub meridian: Complex64,
    pub longitude: Complex64,
}

const NEWTON_TOL: f64 = 1e-12;
const NEWTON_BUDGET: usize = 100;

/// Solve the gluing equations together with the completeness condition
/// M = 1 by Newton iteration from the given initial shapes (all with
/// positive imaginary part).
pub fn solve_complete(
    sys: &GluingSystem,
    initial: &[Complex64],
) -> Result<CompleteSolution, ContinuationError> {
    if initial.len() != sys.n || initial.iter().any(|z| z.im <= 0.0) {
        return Err(ContinuationError::BadInitialShapes);
    }
    let rows: Vec<_> = sys.retained_equations().to_vec();
    let eval = |z: &[Complex64]| {
        let mut f = Vec::with_capacity(sys.n);
        let mut jac = Vec::with_capacity(sys.n);
        for row in rows.iter().chain([&sys.meridian]) {
            let value = row.evaluate(z);
            f.push(value - 1.0);
            jac.push((0..sys.n).map(|k| value * row.log_derivative(z, k)).collect());
        }
        (f, jac)
    };
    let shapes = newton(initial.to_vec(), eval, NEWTON_TOL, NEWTON_BUDGET)?;
    let residual = rows
        .iter()
        .chain([&sys.meridian])
        .map(|row| (row.evaluate(&shapes) - 1.0).norm())
        .fold(0.0f64, f64::max);
    Ok(CompleteSolution {
        meridian: sys.meridian.evaluate(&shapes),
        longitude: sys.longitude.evaluate(&shapes),
        shapes,
        residual,
    })
}

/// Solve the complete structure from the uniform regular seed
/// z_k = exp(iπ/3).
pub fn solve_complete_default(sys: &GluingSystem) -> Result<CompleteSolution, ContinuationError> {
    let seed = vec![Complex64::from_polar(1.0, PI / 3.0); sys.n];
    solve_complete(sys, &seed)
}

/// Result of continuing a plan to its ideal point.
#[derive(Debug, Clone)]
pub struct ContinuationResult {
    pub plan: ContinuationPlan,
    /// indices of the non-degenerate tetrahedra, aligned with the limit
    /// vectors below
    pub nondegenerate: Vec<usize>,
    /// direct solution of the cancelled t = 0 system
    pub limit_direct: Vec<Complex64>,
    /// Richardson extrapolation of the t-schedule solutions
    pub limit_extrapolated: Vec<Complex64>,
    /// coefficient values of the degenerating coordinates at t = 0
    pub coefficients: Vec<Complex64>,
    /// max |extrapolated − direct| over the non-degenerate coordinates
    pub drift: f64,
    /// residual of the substituted system at the final t
    pub final_residual: f64,
    pub detected_slope: Slope,
}

struct SubstitutedSystem<'a> {
    sys: &'a GluingSystem,
    plan: &'a ContinuationPlan,
    nondeg: Vec<usize>,
}

impl<'a> SubstitutedSystem<'a> {
    fn new(sys: &'a GluingSystem, plan: &'a ContinuationPlan) -> Self {
        let nondeg = (0..sys.n).filter(|k| plan.sub_for(*k).is_none()).collect();
        SubstitutedSystem { sys, plan, nondeg }
    }

    /// Unknown layout: non-degenerate shapes, then coefficients of
    /// subs[1..] (subs[0] coefficient pinned to 1).
    fn unknown_count(&self) -> usize {
        self.nondeg.len() + self.plan.subs.len() - 1
    }

    fn coefficient(&self, u: &[Complex64], sub_index: usize) -> Complex64 {
        if sub_index == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            u[self.nondeg.len() + sub_index - 1]
        }
    }

    fn shapes_at(&self, u: &[Complex64], t: f64) -> Vec<Complex64> {
        let mut z = vec![Complex64::new(0.0, 0.0); self.sys.n];
        for (slot, &k) in self.nondeg.iter().enumerate() {
            z[k] = u[slot];
        }
        for (i, sub) in self.plan.subs.iter().enumerate() {
            let c = self.coefficient(u, i);
            let tp = t.powi(sub.order as i32);
            z[sub.tet] = match sub.form {
                LocalForm::ToZero => c * tp,
                LocalForm::ToOne => Complex64::new(1.0, 0.0) - c * tp,
            };
        }
        z
    }

    /// Residual and Jacobian of the substituted system at parameter t > 0.
    fn eval_at(&self, u: &[Complex64], t: f64) -> (Vec<Complex64>, Vec<Vec<Complex64>>) {
        let z = self.shapes_at(u, t);
        let rows = self.sys.retained_equations();
        let mut f = Vec::with_capacity(rows.len());
        let mut jac = Vec::with_capacity(rows.len());
        for row in rows {
            let value = row.evaluate(&z);
            f.push(value - 1.0);
            let mut grad = vec![Complex64::new(0.0, 0.0); self.unknown_count()];
            for (slot, &k) in self.nondeg.iter().enumerate() {
                grad[slot] = value * row.log_derivative(&z, k);
            }
            for (i, sub) in self.plan.subs.iter().enumerate().skip(1) {
                let tp = t.powi(sub.order as i32);
                let dz = match sub.form {
                    LocalForm::ToZero => Complex64::new(tp, 0.0),
                    LocalForm::ToOne => Complex64::new(-tp, 0.0),
                };
                grad[self.nondeg.len() + i - 1] = value * row.log_derivative(&z, sub.tet) * dz;
            }
            jac.push(grad);
        }
        (f, jac)
    }

    /// Residual and Jacobian of the t = 0 limit system, with the t-powers
    /// cancelled analytically: a ToZero coordinate contributes c^{r'},
    /// a ToOne coordinate c^{r''}, everything else its regular factor.
    fn eval_limit(&self, u: &[Complex64]) -> (Vec<Complex64>, Vec<Vec<Complex64>>) {
        let rows = self.sys.retained_equations();
        let mut f = Vec::with_capacity(rows.len());
        let mut jac = Vec::with_capacity(rows.len());
        for row in rows {
            let mut value = Complex64::new(row.sign as f64, 0.0);
            for (slot, &k) in self.nondeg.iter().enumerate() {
                let z = u[slot];
                value *= z.powi(row.zs[k] as i32) * (1.0 - z).powi(row.ones[k] as i32);
            }
            for (i, sub) in self.plan.subs.iter().enumerate() {
                let c = self.coefficient(u, i);
                let e = match sub.form {
                    LocalForm::ToZero => row.zs[sub.tet],
                    LocalForm::ToOne => row.ones[sub.tet],
                };
                value *= c.powi(e as i32);
            }
            let mut grad = vec![Complex64::new(0.0, 0.0); self.unknown_count()];
            for (slot, &k) in self.nondeg.iter().enumerate() {
                let z = u[slot];
                grad[slot] =
                    value * (row.zs[k] as f64 / z - row.ones[k] as f64 / (1.0 - z));
            }
            for (i, sub) in self.plan.subs.iter().enumerate().skip(1) {
                let c = self.coefficient(u, i);
                let e = match sub.form {
                    LocalForm::ToZero => row.zs[sub.tet],
                    LocalForm::ToOne => row.ones[sub.tet],
                };
                grad[self.nondeg.len() + i - 1] = value * e as f64 / c;
            }
            f.push(value - 1.0);
            jac.push(grad);
        }
        (f, jac)
    }
}

/// Deterministic seed battery for the limit-system solve.
fn seed_battery(sub: &SubstitutedSystem, conjugate: bool) -> Vec<Vec<Complex64>> {
    let base = Complex64::from_polar(1.0, PI / 3.0);
    let shape_seed = if conjugate { base.conj() } else { base };
    let coefficient_choices: Vec<Complex64> = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(-2.0, 0.0),
        Complex64::new(0.0, if conjugate { -1.0 } else { 1.0 }),
        Complex64::new(0.0, if conjugate { -2.0 } else { 2.0 }),
    ];
    let n_coef = sub.plan.subs.len() - 1;
    let mut seeds = Vec::new();
    // All coefficient assignments from the choice list would be 6^k; walk a
    // rotating pattern instead, which is plenty for these systems.
    for offset in 0..24 {
        let mut u = vec![shape_seed; sub.unknown_count()];
        for (i, slot) in u.iter_mut().enumerate().skip(sub.nondeg.len()) {
            let idx = (offset + (i - sub.nondeg.len()) * (offset % 3 + 1)) % coefficient_choices.len();
            *slot = coefficient_choices[idx];
        }
        // vary the shape seed a little between attempts
        let angle = PI / 3.0 + 0.17 * (offset as f64 - 4.0) / 5.0;
        let varied = Complex64::from_polar(1.0 + 0.1 * ((offset % 5) as f64 - 2.0) / 2.0, angle);
        for slot in u.iter_mut().take(sub.nondeg.len()) {
            *slot = if conjugate { varied.conj() } else { varied };
        }
        let _ = n_coef;
        seeds.push(u);
    }
    seeds
}

fn acceptable_limit(sub: &SubstitutedSystem, u: &[Complex64]) -> bool {
    // non-degenerate shapes away from 0 and 1, coefficients in a sane range
    for slot in 0..sub.nondeg.len() {
        let z = u[slot];
        if z.norm() < 1e-6 || (z - 1.0).norm() < 1e-6 || !z.is_finite() || z.norm() > 1e6 {
            return false;
        }
    }
    for i in 1..sub.plan.subs.len() {
        let c = sub.coefficient(u, i);
        if c.norm() < 1e-6 || c.norm() > 1e6 || !c.is_finite() {
            return false;
        }
    }
    true
}

/// Continue the gluing system into the ideal point described by `plan`.
///
/// The default schedule is t = 1e-1, 1e-2, 1e-3, 1e-4.
pub fn continuation_to_ideal_point(
    sys: &GluingSystem,
    plan: &ContinuationPlan,
    schedule: &[f64],
) -> Result<ContinuationResult, ContinuationError> {
    plan.validate(sys)?;
    if schedule.is_empty()
        || schedule.windows(2).any(|w| w[1] >= w[0])
        || schedule.iter().any(|&t| t <= 0.0)
    {
        return Err(ContinuationError::BadSchedule);
    }
    let sub = SubstitutedSystem::new(sys, plan);

    // Solve the cancelled t = 0 system from the seed battery.
    let mut limit_solution = None;
    for seed in seed_battery(&sub, plan.conjugate_seed) {
        if let Ok(u) = newton(seed, |u| sub.eval_limit(u), NEWTON_TOL, NEWTON_BUDGET) {
            if acceptable_limit(&sub, &u) {
                limit_solution = Some(u);
                break;
            }
        }
    }
    let limit_u = limit_solution.ok_or(ContinuationError::NoGeometricSolution)?;

    // March the schedule, warm-starting each solve from the previous one.
    let mut u = limit_u.clone();
    let mut per_step: Vec<Vec<Complex64>> = Vec::new();
    let mut final_residual = 0.0;
    for &t in schedule {
        u = newton(u, |u| sub.eval_at(u, t), NEWTON_TOL, NEWTON_BUDGET)?;
        for (i, s) in plan.subs.iter().enumerate() {
            let c = sub.coefficient(&u, i);
            if c.norm() < 1e-6 || c.norm() > 1e6 {
                return Err(ContinuationError::CoefficientCollapse {
                    index: s.tet,
                    value: c.norm(),
                });
            }
        }
        let (f, _) = sub.eval_at(&u, t);
        final_residual = f.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
        per_step.push(u[..sub.nondeg.len()].to_vec());
    }

    // Richardson extrapolation (order 2) in the schedule ratio.
    let ratio = schedule[0] / schedule[1];
    let extrapolated = richardson(&per_step, ratio);

    let limit_direct: Vec<Complex64> = limit_u[..sub.nondeg.len()].to_vec();
    let drift = limit_direct
        .iter()
        .zip(&extrapolated)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    let coefficients = (0..plan.subs.len()).map(|i| sub.coefficient(&limit_u, i)).collect();
    Ok(ContinuationResult {
        plan: plan.clone(),
        nondegenerate: sub.nondeg.clone(),
        limit_direct,
        limit_extrapolated: extrapolated,
        coefficients,
        drift,
        final_residual,
        detected_slope: plan.detected_slope(sys),
    })
}

/// Two levels of Richardson extrapolation on the per-step value vectors.
fn richardson(per_step: &[Vec<Complex64>], ratio: f64) -> Vec<Complex64> {
    let mut table: Vec<Vec<Complex64>> = per_step.to_vec();
    let mut factor = ratio;
    for _ in 0..2.min(table.len() - 1) {
        table = table
            .windows(2)
            .map(|w| {
                w[0].iter()
                    .zip(&w[1])
                    .map(|(prev, next)| (next * factor - prev) / (factor - 1.0))
                    .collect()
            })
            .collect();
        factor *= ratio;
    }
    table.last().cloned().unwrap_or_default()
}

pub const DEFAULT_SCHEDULE: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilog;
    use crate::gluing::pretzel_255_system;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complete_structure_is_geometric() {
        let sys = pretzel_255_system();
        let sol = solve_complete_default(&sys).unwrap();
        assert!(sol.residual < 1e-12);
        assert!(sol.shapes.iter().all(|z| z.im > 0.0));
        assert!((sol.meridian - 1.0).norm() < 1e-10);
        assert!((sol.longitude - 1.0).norm() < 1e-10);
        // every one of the displayed equations, including the omitted one
        for row in &sys.equations {
            assert!((row.evaluate(&sol.shapes) - 1.0).norm() < 1e-10);
        }
    }

    #[test]
    fn complete_structure_basin() {
        let sys = pretzel_255_system();
        let base = solve_complete_default(&sys).unwrap();
        let seed: Vec<Complex64> = (0..sys.n)
            .map(|k| {
                Complex64::from_polar(1.0, PI / 3.0)
                    + c(0.07 * ((k % 3) as f64 - 1.0), 0.05 * ((k % 2) as f64))
            })
            .collect();
        let sol = solve_complete(&sys, &seed).unwrap();
        for (a, b) in sol.shapes.iter().zip(&base.shapes) {
            assert!((a - b).norm() < 1e-9);
        }
    }

    #[test]
    fn negative_imaginary_seed_rejected() {
        let sys = pretzel_255_system();
        let mut seed = vec![Complex64::from_polar(1.0, PI / 3.0); sys.n];
        seed[2] = c(0.5, -0.2);
        assert_eq!(
            solve_complete(&sys, &seed).unwrap_err(),
            ContinuationError::BadInitialShapes
        );
    }

    #[test]
    fn complete_volume_regression() {
        // Frozen at first computation; the total Bloch-Wigner volume of the
        // complete solution must reproduce it to 1e-6.
        let sys = pretzel_255_system();
        let sol = solve_complete_default(&sys).unwrap();
        let vol = dilog::volume(&sol.shapes);
        let frozen = 6.779_025_767_069; // see the acceptance suite
        assert!((vol - frozen).abs() < 1e-6, "volume {vol}");
    }

    #[test]
    fn slope20_plans_are_consistent_and_detect_20() {
        let sys = pretzel_255_system();
        let plan = ContinuationPlan::slope20(false);
        assert!(plan.validate(&sys).is_ok());
        assert_eq!(plan.detected_slope(&sys), Slope::integer(20));
    }

    #[test]
    fn slope22_plan_detects_22() {
        let sys = pretzel_255_system();
        let plan = ContinuationPlan::slope22();
        assert!(plan.validate(&sys).is_ok());
        assert_eq!(plan.detected_slope(&sys), Slope::integer(22));
    }

    #[test]
    fn inconsistent_plan_rejected() {
        let sys = pretzel_255_system();
        let plan = ContinuationPlan {
            name: "broken".into(),
            subs: vec![Substitution { tet: 1, form: LocalForm::ToZero, order: 1 }],
            conjugate_seed: false,
        };
        assert!(matches!(
            plan.validate(&sys),
            Err(ContinuationError::InconsistentPlan { .. })
        ));
    }

    #[test]
    fn slope20_limits() {
        let sys = pretzel_255_system();
        let result = continuation_to_ideal_point(
            &sys,
            &ContinuationPlan::slope20(false),
            &DEFAULT_SCHEDULE,
        )
        .unwrap();
        assert_eq!(result.nondegenerate, vec![0, 2, 3, 4, 6]);
        let r3 = 3f64.sqrt();
        let expected_pos = [
            c(-1.0, 0.0),
            c(1.5, r3 / 2.0),
            c(0.5, r3 / 6.0),
            c(-0.5, r3 / 2.0),
            c(-1.0, 0.0),
        ];
        let expected_neg: Vec<Complex64> = expected_pos.iter().map(|z| z.conj()).collect();
        let matches = |limits: &[Complex64], expected: &[Complex64]| {
            limits.iter().zip(expected).all(|(a, b)| (a - b).norm() < 1e-6)
        };
        assert!(
            matches(&result.limit_direct, &expected_pos)
                || matches(&result.limit_direct, &expected_neg),
            "limits {:?}",
            result.limit_direct
        );
        assert!(result.drift < 1e-6);
        assert_eq!(result.detected_slope, Slope::integer(20));
    }

    #[test]
    fn slope20_both_branches() {
        let sys = pretzel_255_system();
        let a = continuation_to_ideal_point(&sys, &ContinuationPlan::slope20(false), &DEFAULT_SCHEDULE)
            .unwrap();
        let b = continuation_to_ideal_point(&sys, &ContinuationPlan::slope20(true), &DEFAULT_SCHEDULE)
            .unwrap();
        // z3 slot is index 1 of the non-degenerate list
        assert!(a.limit_direct[1].im * b.limit_direct[1].im < 0.0);
        for (x, y) in a.limit_direct.iter().zip(&b.limit_direct) {
            assert!((x - y.conj()).norm() < 1e-8);
        }
        // the volumes near the two ideal points are opposite
        let va = dilog::volume(&a.limit_direct);
        let vb = dilog::volume(&b.limit_direct);
        assert!((va + vb).abs() < 1e-8);
    }

    #[test]
    fn slope22_limit_values() {
        let sys = pretzel_255_system();
        let result =
            continuation_to_ideal_point(&sys, &ContinuationPlan::slope22(), &DEFAULT_SCHEDULE)
                .unwrap();
        assert_eq!(result.nondegenerate, vec![3, 5]);
        assert!((result.limit_direct[0] - c(0.5, 0.0)).norm() < 1e-6);
        assert!((result.limit_direct[1] - c(-1.0, 0.0)).norm() < 1e-6);
        assert!(result.drift < 1e-6);
        assert_eq!(result.detected_slope, Slope::integer(22));
    }
}
// temporary probe: log-form complete solve
#[test]
fn probe_m_sign() {
    use num_complex::Complex64;
    use std::f64::consts::PI;
    use crate::gluing::pretzel_255_system;
    use crate::numeric::newton;

    let sys = pretzel_255_system();
    // rows: 6 gluing + meridian; log target i*pi*m with parity from sign
    // (gluing: product must equal the sign bit; meridian: product = +1)
    let rows: Vec<_> = sys
        .retained_equations()
        .iter()
        .map(|r| (r.clone(), r.sign))
        .chain([(sys.meridian.clone(), 1i64)])
        .collect();
    let seed = vec![Complex64::from_polar(1.0, PI / 3.0); sys.n];
    let log_g = |row: &crate::gluing::ExponentRow, z: &[Complex64]| -> Complex64 {
        (0..z.len())
            .map(|k| {
                z[k].ln() * row.zs[k] as f64 + (1.0 - z[k]).ln() * row.ones[k] as f64
            })
            .sum()
    };
    let targets: Vec<Complex64> = rows
        .iter()
        .map(|(row, sign)| {
            let g = log_g(row, &seed);
            let mut m = (g.im / PI).round() as i64;
            let want_odd = *sign == -1;
            if (m.rem_euclid(2) == 1) != want_odd {
                m += if g.im / PI - m as f64 >= 0.0 { 1 } else { -1 };
            }
            Complex64::new(0.0, PI * m as f64)
        })
        .collect();
    println!("targets: {:?}", targets.iter().map(|t| t.im / PI).collect::<Vec<_>>());
    let eval = |z: &[Complex64]| {
        let mut f = Vec::new();
        let mut jac = Vec::new();
        for ((row, _), t) in rows.iter().zip(&targets) {
            f.push(log_g(row, z) - t);
            jac.push(
                (0..sys.n)
                    .map(|k| Complex64::new(row.zs[k] as f64, 0.0) / z[k]
                        - Complex64::new(row.ones[k] as f64, 0.0) / (1.0 - z[k]))
                    .collect::<Vec<_>>(),
            );
        }
        (f, jac)
    };
    match newton(seed, eval, 1e-13, 100) {
        Ok(z) => {
            let all_pos = z.iter().all(|w| w.im > 0.0);
            println!("converged, all Im>0: {all_pos}");
            for (i, zi) in z.iter().enumerate() { println!("  z{} = {zi}", i + 1); }
            for row in &sys.equations {
                println!("  eq check: {:?}", row.evaluate(&z));
            }
            println!("M = {:?}", sys.meridian.evaluate(&z));
            println!("L = {:?}", sys.longitude.evaluate(&z));
            let vol: f64 = z.iter().map(|&w| crate::dilog::bloch_wigner(w)).sum();
            println!("volume = {vol:.12}");
        }
        Err(e) => println!("failed: {e}"),
    }
}
