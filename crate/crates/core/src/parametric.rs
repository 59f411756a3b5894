//! The six-coefficient parametric equation
//!
//! ```text
//! ψ'' + (c1 + c2 s) / (s (1 + c3 s)) ψ' + (−Λ1 s² + Λ2 s − Λ3) / (s² (1 + c3 s)²) ψ = 0
//! ```
//!
//! and its two polynomial-terminating solution branches. With `c3 ≠ 0` the
//! ansatz `ψ = (1 + c3 s)^(−p) s^q y` reduces the equation to Jacobi's
//! equation in `z = 1 + 2 c3 s`; with `c3 = 0` the ansatz
//! `ψ = exp(−p s) s^q y` reduces it to the associated Laguerre equation in
//! `z = (2p − c2) s`. Energies are the roots, in `E`, of the termination
//! conditions `r3 = n (n + α + β + 1)` and `γ2 = n`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Real;

/// Default number of trial energies in the sign-change scan.
pub const SCAN_POINTS: usize = 2000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParametricError {
    #[error("negative discriminant {value:e} in the {which} quadratic: no real root at this energy")]
    NegativeDiscriminant { which: &'static str, value: f64 },
    #[error("coefficients are on the Laguerre branch (c3 = 0), Jacobi constants requested")]
    NotJacobiBranch,
    #[error("coefficients are on the Jacobi branch (c3 != 0), Laguerre constants requested")]
    NotLaguerreBranch,
    #[error("no bound state with n = {n}")]
    NoBoundState { n: usize },
    #[error("degenerate energy window [{lo}, {hi}]")]
    WindowDegenerate { lo: f64, hi: f64 },
    #[error("Appendix consistency violated: |r2| = {r2_abs:e}, |r1 + r3| = {r1_plus_r3_abs:e}")]
    ConsistencyViolation { r2_abs: f64, r1_plus_r3_abs: f64 },
}

pub type Result<T, E = ParametricError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `c3 ≠ 0`, Jacobi polynomials.
    Jacobi,
    /// `c3 = 0`, associated Laguerre polynomials.
    Laguerre,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::Jacobi => "jacobi",
            Branch::Laguerre => "laguerre",
        })
    }
}

/// Which root of a quadratic to take.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    fn apply<T: Real>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// Root selection for the `q` and `p` quadratics of the Jacobi branch. The
/// Laguerre branch always takes the `+` roots.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootChoice {
    pub q: Sign,
    pub p: Sign,
}

impl RootChoice {
    pub const PLUS_PLUS: Self = Self { q: Sign::Plus, p: Sign::Plus };
    pub const PLUS_MINUS: Self = Self { q: Sign::Plus, p: Sign::Minus };
    pub const MINUS_PLUS: Self = Self { q: Sign::Minus, p: Sign::Plus };
    pub const MINUS_MINUS: Self = Self { q: Sign::Minus, p: Sign::Minus };

    pub const ALL: [Self; 4] = [Self::PLUS_PLUS, Self::PLUS_MINUS, Self::MINUS_PLUS, Self::MINUS_MINUS];
}

/// `(c1, c2, c3, Λ1, Λ2, Λ3)` at one fixed trial energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParametricCoefficients<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
    pub lambda1: T,
    pub lambda2: T,
    pub lambda3: T,
}

impl<T: Real> ParametricCoefficients<T> {
    pub fn new(c1: T, c2: T, c3: T, lambda1: T, lambda2: T, lambda3: T) -> Self {
        Self { c1, c2, c3, lambda1, lambda2, lambda3 }
    }

    /// `Laguerre` iff `c3` is exactly zero.
    pub fn branch(&self) -> Branch {
        if self.c3 == T::zero() {
            Branch::Laguerre
        } else {
            Branch::Jacobi
        }
    }

    /// Polynomial coefficients `(r1, r2, r3)` of `R(z) = r1 z² + r2 z + r3`
    /// for arbitrary trial constants `q`, `p`.
    pub fn r_coefficients(&self, q: T, p: T) -> (T, T, T) {
        let one = T::one();
        let two = T::two();
        let four = T::lit(4.0);
        let ratio = self.c2 / self.c3;
        let l1 = self.lambda1 / (self.c3 * self.c3);
        let l2 = self.lambda2 / self.c3;
        let r1 = q * (q - one) - two * p * q + p * (p + one) + ratio * (q - p) - l1;
        let r2 = two * q * (q - one) - two * p * (p + one) + two * self.c1 * (q - p)
            + two * ratio * p
            + two * l1
            + two * l2;
        let r3 = q * (q - one) + two * p * q + p * (p + one) + two * self.c1 * (q + p)
            - ratio * (q + p)
            - l1
            - two * l2
            - four * self.lambda3;
        (r1, r2, r3)
    }

    /// Laguerre-branch `(γ1, γ2, γ3)` for arbitrary trial constants.
    pub fn gamma_coefficients(&self, q: T, p: T) -> (T, T, T) {
        let one = T::one();
        let scale = self.c2 - T::two() * p;
        let g1 = (p * p - self.c2 * p - self.lambda1) / (scale * scale);
        let g2 = (T::two() * q * p - self.c2 * q + self.c1 * p - self.lambda2) / scale;
        let g3 = q * (q - one) + self.c1 * q - self.lambda3;
        (g1, g2, g3)
    }
}

/// Constants of the `c3 ≠ 0` branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiBranchConstants<T> {
    pub q0: T,
    pub p0: T,
    pub alpha: T,
    pub beta: T,
    pub d: T,
    pub h: T,
    pub r1: T,
    pub r2: T,
    pub r3: T,
}

/// Constants of the `c3 = 0` branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreBranchConstants<T> {
    pub q10: T,
    pub p10: T,
    pub k: T,
    pub gamma1: T,
    pub gamma2: T,
    pub gamma3: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "lowercase")]
pub enum BranchConstants<T> {
    Jacobi(JacobiBranchConstants<T>),
    Laguerre(LaguerreBranchConstants<T>),
}

impl<T: Real> BranchConstants<T> {
    pub fn branch(&self) -> Branch {
        match self {
            BranchConstants::Jacobi(_) => Branch::Jacobi,
            BranchConstants::Laguerre(_) => Branch::Laguerre,
        }
    }

    /// `(p, q)` regardless of branch.
    pub fn p_q(&self) -> (T, T) {
        match self {
            BranchConstants::Jacobi(j) => (j.p0, j.q0),
            BranchConstants::Laguerre(l) => (l.p10, l.q10),
        }
    }
}

fn quadratic_root<T: Real>(half_b: T, c: T, sign: Sign, which: &'static str) -> Result<T> {
    // x² − 2·half_b·x − c = 0  →  x = half_b ± sqrt(half_b² + c)
    let disc = half_b * half_b + c;
    if disc < T::zero() || disc.is_nan() {
        return Err(ParametricError::NegativeDiscriminant { which, value: disc.as_f64() });
    }
    Ok(half_b + sign.apply(disc.sqrt()))
}

/// Fixes `q0` from `q² − (1 − c1) q − Λ3 = 0` and `p0` from
/// `p² − D p − H = 0`, then fills in `α`, `β` and `r1..r3`.
pub fn solve_jacobi_constants<T: Real>(
    pc: &ParametricCoefficients<T>,
    root_choice: RootChoice,
) -> Result<JacobiBranchConstants<T>> {
    if pc.branch() != Branch::Jacobi {
        return Err(ParametricError::NotJacobiBranch);
    }
    let one = T::one();
    let q0 = quadratic_root((one - pc.c1) * T::half(), pc.lambda3, root_choice.q, "q")?;
    let ratio = pc.c2 / pc.c3;
    let d = ratio - pc.c1 - one;
    let h = pc.lambda1 / (pc.c3 * pc.c3) + pc.lambda2 / pc.c3 + pc.lambda3;
    let p0 = quadratic_root(d * T::half(), h, root_choice.p, "p")?;
    let alpha = T::two() * q0 + pc.c1 - one;
    let beta = -T::two() * p0 - pc.c1 + ratio - one;
    let (r1, r2, r3) = pc.r_coefficients(q0, p0);
    Ok(JacobiBranchConstants { q0, p0, alpha, beta, d, h, r1, r2, r3 })
}

/// `q10` from `q (q − 1) + c1 q − Λ3 = 0` and `p10` from
/// `p² − c2 p − Λ1 = 0`, both with the `+` root.
pub fn solve_laguerre_constants<T: Real>(
    pc: &ParametricCoefficients<T>,
) -> Result<LaguerreBranchConstants<T>> {
    if pc.branch() != Branch::Laguerre {
        return Err(ParametricError::NotLaguerreBranch);
    }
    let one = T::one();
    let q10 = quadratic_root((one - pc.c1) * T::half(), pc.lambda3, Sign::Plus, "q")?;
    let p10 = quadratic_root(pc.c2 * T::half(), pc.lambda1, Sign::Plus, "p")?;
    let k = pc.c1 + T::two() * q10 - one;
    let (gamma1, gamma2, gamma3) = pc.gamma_coefficients(q10, p10);
    Ok(LaguerreBranchConstants { q10, p10, k, gamma1, gamma2, gamma3 })
}

/// Magnitudes of the two Appendix conditions at a solved Jacobi level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport<T> {
    pub r1: T,
    pub r2: T,
    pub r3: T,
    pub r2_abs: T,
    pub r1_plus_r3_abs: T,
}

/// Hard failure threshold for [`consistency_check`].
pub const CONSISTENCY_LIMIT: f64 = 1e-8;

/// Checks `r2 = 0` and `r1 = −r3`; fails above [`CONSISTENCY_LIMIT`].
pub fn consistency_check<T: Real>(jc: &JacobiBranchConstants<T>) -> Result<ConsistencyReport<T>> {
    let report = ConsistencyReport {
        r1: jc.r1,
        r2: jc.r2,
        r3: jc.r3,
        r2_abs: jc.r2.abs(),
        r1_plus_r3_abs: (jc.r1 + jc.r3).abs(),
    };
    let limit = T::tol(CONSISTENCY_LIMIT);
    if !(report.r2_abs <= limit && report.r1_plus_r3_abs <= limit) {
        return Err(ParametricError::ConsistencyViolation {
            r2_abs: report.r2_abs.as_f64(),
            r1_plus_r3_abs: report.r1_plus_r3_abs.as_f64(),
        });
    }
    Ok(report)
}

/// Each `Λi` as an affine function of the trial energy: `Λi(E) = offset[i] + slope[i]·E`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaMap<T> {
    pub offset: [T; 3],
    pub slope: [T; 3],
}

/// Admissible bound-state energies, open interval. `hi` may be `+∞` for
/// confining potentials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyWindow<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> EnergyWindow<T> {
    pub fn new(lo: T, hi: T) -> Self {
        Self { lo, hi }
    }

    pub fn contains(&self, e: T) -> bool {
        e > self.lo && e < self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        !(self.lo < self.hi) || !self.lo.is_finite()
    }
}

/// A potential's parametric equation with the trial energy left free.
/// `c1..c3` are fixed; only the `Λi` move with `E`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyDependentForm<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
    pub lambdas: LambdaMap<T>,
    pub window: EnergyWindow<T>,
}

impl<T: Real> EnergyDependentForm<T> {
    pub fn branch(&self) -> Branch {
        if self.c3 == T::zero() {
            Branch::Laguerre
        } else {
            Branch::Jacobi
        }
    }

    pub fn coeff_at(&self, e: T) -> ParametricCoefficients<T> {
        let l = &self.lambdas;
        ParametricCoefficients::new(
            self.c1,
            self.c2,
            self.c3,
            l.offset[0] + l.slope[0] * e,
            l.offset[1] + l.slope[1] * e,
            l.offset[2] + l.slope[2] * e,
        )
    }

    /// Branch constants at trial energy `e`.
    pub fn constants_at(&self, e: T, root_choice: RootChoice) -> Result<BranchConstants<T>> {
        let pc = self.coeff_at(e);
        match pc.branch() {
            Branch::Jacobi => solve_jacobi_constants(&pc, root_choice).map(BranchConstants::Jacobi),
            Branch::Laguerre => solve_laguerre_constants(&pc).map(BranchConstants::Laguerre),
        }
    }
}

fn residual_of<T: Real>(constants: &BranchConstants<T>, n: usize) -> T {
    let nn = T::of_usize(n);
    match constants {
        BranchConstants::Jacobi(j) => j.r3 - nn * (nn + j.alpha + j.beta + T::one()),
        BranchConstants::Laguerre(l) => l.gamma2 - nn,
    }
}

/// `r3(E) − n (n + α + β + 1)` on the Jacobi branch, `γ2(E) − n` on the
/// Laguerre branch. Zero exactly at the energy levels.
pub fn quantization_residual<T: Real>(
    form: &EnergyDependentForm<T>,
    n: usize,
    e: T,
    root_choice: RootChoice,
) -> Result<T> {
    form.constants_at(e, root_choice).map(|c| residual_of(&c, n))
}

/// The consolidated Jacobi quantization condition written in `q0 − p0`,
/// `(q0 − p0)² + (c2/c3 + 2n − 1)(q0 − p0) + n (n + c2/c3 − 1) = Λ1/c3²`,
/// returned as right-minus-left. Once `q0` and `p0` satisfy their quadratics
/// this equals the `r3` residual identically; used as a cross-check only.
pub fn consolidated_jacobi_residual<T: Real>(
    pc: &ParametricCoefficients<T>,
    jc: &JacobiBranchConstants<T>,
    n: usize,
) -> T {
    let nn = T::of_usize(n);
    let one = T::one();
    let ratio = pc.c2 / pc.c3;
    let x = jc.q0 - jc.p0;
    let lhs = x * x + (ratio + T::two() * nn - one) * x + nn * (nn + ratio - one);
    pc.lambda1 / (pc.c3 * pc.c3) - lhs
}

/// Tuning for the energy scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions<T> {
    /// Uniform trial energies across the window.
    pub points: usize,
    /// Accepted `|residual|` at a bisected root.
    pub residual_tol: T,
}

impl<T: Real> Default for ScanOptions<T> {
    fn default() -> Self {
        Self { points: SCAN_POINTS, residual_tol: T::tol(1e-10) }
    }
}

fn finite_residual<T: Real>(form: &EnergyDependentForm<T>, n: usize, e: T, rc: RootChoice) -> Option<T> {
    quantization_residual(form, n, e, rc).ok().filter(|r| r.is_finite())
}

/// Resolves an infinite upper edge by doubling a trial width until the
/// residual changes sign relative to the lower edge.
fn finite_upper_edge<T: Real>(form: &EnergyDependentForm<T>, n: usize, rc: RootChoice, inset: T) -> Option<T> {
    let lo = form.window.lo;
    let mut width = lo.abs().max(T::one());
    let base = finite_residual(form, n, lo + inset * width, rc)?;
    for _ in 0..256 {
        let hi = lo + width;
        if !hi.is_finite() {
            return None;
        }
        if let Some(r) = finite_residual(form, n, hi, rc) {
            if r.signum() != base.signum() {
                return Some(lo + T::two() * width);
            }
        }
        width = width * T::two();
    }
    None
}

fn bisect<T: Real>(
    form: &EnergyDependentForm<T>,
    n: usize,
    rc: RootChoice,
    mut a: T,
    mut fa: T,
    mut b: T,
) -> Option<T> {
    for _ in 0..400 {
        let mid = a + (b - a) * T::half();
        if mid <= a || mid >= b {
            break;
        }
        let fm = finite_residual(form, n, mid, rc)?;
        if fm == T::zero() {
            return Some(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Some(a + (b - a) * T::half())
}

/// Every root of the quantization residual for level `n` inside the window,
/// in increasing energy.
///
/// The window is scanned on `opts.points` uniform trial energies (edges nudged
/// inward so the residual stays finite), sign changes are bisected down to
/// adjacent floating-point values, and brackets whose bisected residual is not
/// small (poles) are dropped.
pub fn energy_roots<T: Real>(
    form: &EnergyDependentForm<T>,
    n: usize,
    root_choice: RootChoice,
    opts: &ScanOptions<T>,
) -> Result<Vec<T>> {
    let window = form.window;
    if window.is_degenerate() {
        return Err(ParametricError::WindowDegenerate { lo: window.lo.as_f64(), hi: window.hi.as_f64() });
    }
    let inset = T::epsilon().sqrt() * T::lit(1e-4);
    let lo = window.lo;
    let hi = if window.hi.is_finite() {
        window.hi
    } else {
        match finite_upper_edge(form, n, root_choice, inset) {
            Some(hi) => hi,
            None => return Ok(Vec::new()),
        }
    };
    let width = hi - lo;
    let points = opts.points.max(3);
    let last = points - 1;
    let trial = |i: usize| -> T {
        if i == 0 {
            lo + inset * width
        } else if i == last {
            hi - inset * width
        } else {
            lo + width * T::of_usize(i) / T::of_usize(last)
        }
    };

    let mut roots = Vec::new();
    let mut prev: Option<(T, T)> = None;
    for i in 0..points {
        let e = trial(i);
        let Some(r) = finite_residual(form, n, e, root_choice) else {
            prev = None;
            continue;
        };
        if r == T::zero() {
            roots.push(e);
            prev = None;
            continue;
        }
        if let Some((pe, pr)) = prev {
            if pr.signum() != r.signum() {
                if let Some(root) = bisect(form, n, root_choice, pe, pr, e) {
                    let cell_scale = pr.abs() + r.abs();
                    let accept = opts.residual_tol.max(T::lit(1e-8) * cell_scale);
                    if let Some(res) = finite_residual(form, n, root, root_choice) {
                        if res.abs() <= accept {
                            roots.push(root);
                        }
                    }
                }
            }
        }
        prev = Some((e, r));
    }
    Ok(roots)
}

/// The level-`n` energy: the lowest root of the quantization residual in the
/// window, or [`ParametricError::NoBoundState`] when the residual never
/// changes sign (the well has run out of levels).
pub fn solve_energy<T: Real>(form: &EnergyDependentForm<T>, n: usize, root_choice: RootChoice) -> Result<T> {
    solve_energy_with(form, n, root_choice, &ScanOptions::default())
}

pub fn solve_energy_with<T: Real>(
    form: &EnergyDependentForm<T>,
    n: usize,
    root_choice: RootChoice,
    opts: &ScanOptions<T>,
) -> Result<T> {
    energy_roots(form, n, root_choice, opts)?
        .first()
        .copied()
        .ok_or(ParametricError::NoBoundState { n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coulomb_form() -> EnergyDependentForm<f64> {
        // m = ħ = e = 1, ℓ = 0: Λ1 = −2E, Λ2 = 2, Λ3 = 0
        EnergyDependentForm {
            c1: 2.0,
            c2: 0.0,
            c3: 0.0,
            lambdas: LambdaMap { offset: [0.0, 2.0, 0.0], slope: [-2.0, 0.0, 0.0] },
            window: EnergyWindow::new(-4.0, 0.0),
        }
    }

    #[test]
    fn branch_tag_follows_c3_exactly() {
        let pc = ParametricCoefficients::new(1.0f64, 0.0, 0.0, 1.0, 1.0, 1.0);
        assert_eq!(pc.branch(), Branch::Laguerre);
        let pc = ParametricCoefficients::new(1.0f64, 0.0, 1e-300, 1.0, 1.0, 1.0);
        assert_eq!(pc.branch(), Branch::Jacobi);
    }

    #[test]
    fn jacobi_q_root_for_unit_c1() {
        // c1 = 1, c2 = c3 = −η, Λ3 = ε + κ  →  q0 = sqrt(ε + κ)
        let (eta, eps, kappa) = (0.7, 1.3, 2.1);
        let pc = ParametricCoefficients::new(1.0f64, -eta, -eta, 0.4, -0.9, eps + kappa);
        let jc = solve_jacobi_constants(&pc, RootChoice::PLUS_PLUS).unwrap();
        assert!((jc.q0 - (eps + kappa).sqrt()).abs() < 1e-14);

        let pc = ParametricCoefficients::new(1.0f64, -eta, -eta, 0.4, -0.9, 0.0);
        let jc = solve_jacobi_constants(&pc, RootChoice::PLUS_PLUS).unwrap();
        assert_eq!(jc.q0, 0.0);
    }

    #[test]
    fn woods_saxon_constants_at_a_trial_energy() {
        // V1 = 5, V2 = 10, a = ħ = m = 1: Λ1 = 2V2, Λ2 = 2(V1 + V2), Λ3 = ε = −2E
        let e = -5.3f64;
        let eps = -2.0 * e;
        let pc = ParametricCoefficients::new(1.0f64, -2.0, -1.0, 20.0, 30.0, eps);
        let jc = solve_jacobi_constants(&pc, RootChoice::PLUS_PLUS).unwrap();
        let shift = pc.lambda2 - pc.lambda1;
        assert!((jc.q0 - eps.sqrt()).abs() < 1e-14);
        assert!((jc.p0 - (eps - shift).sqrt()).abs() < 1e-14);
        // direct substitution into r2
        let q = jc.q0;
        let p = jc.p0;
        let r2 = 2.0 * q * (q - 1.0) - 2.0 * p * (p + 1.0) + 2.0 * (q - p) + 2.0 * 2.0 * p + 2.0 * 20.0
            - 2.0 * 30.0;
        assert!(r2.abs() < 1e-12, "r2 = {r2}");
        assert!(jc.r2.abs() < 1e-12);
        assert!((jc.r1 + jc.r3).abs() < 1e-12);
        assert!((jc.alpha - 2.0 * q).abs() < 1e-14);
        assert!((jc.beta + 2.0 * p).abs() < 1e-14);
    }

    #[test]
    fn jacobi_rejects_laguerre_coefficients_and_complex_roots() {
        let pc = ParametricCoefficients::new(2.0f64, 0.0, 0.0, 1.0, 1.0, 1.0);
        assert_eq!(solve_jacobi_constants(&pc, RootChoice::default()), Err(ParametricError::NotJacobiBranch));
        let pc = ParametricCoefficients::new(1.0f64, -2.0, -1.0, 20.0, 30.0, -1.0);
        assert!(matches!(
            solve_jacobi_constants(&pc, RootChoice::default()),
            Err(ParametricError::NegativeDiscriminant { which: "q", .. })
        ));
        let pc = ParametricCoefficients::new(1.0f64, -2.0, -1.0, 20.0, 30.0, 5.0);
        assert!(matches!(
            solve_jacobi_constants(&pc, RootChoice::default()),
            Err(ParametricError::NegativeDiscriminant { which: "p", .. })
        ));
    }

    #[test]
    fn laguerre_constants_examples() {
        for l in 0..5usize {
            let lf = l as f64;
            let pc = ParametricCoefficients::new(2.0f64, 0.0, 0.0, 1.0, 1.0, lf * (lf + 1.0));
            let lc = solve_laguerre_constants(&pc).unwrap();
            assert!((lc.q10 - lf).abs() < 1e-13);
            assert!((lc.k - (2.0 * lf + 1.0)).abs() < 1e-13);
        }
        let pc = ParametricCoefficients::new(1.0f64, 0.0, 0.0, 0.0, 0.0, 0.0);
        let lc = solve_laguerre_constants(&pc).unwrap();
        assert_eq!((lc.q10, lc.p10, lc.k), (0.0, 0.0, 0.0));

        let pc = ParametricCoefficients::new(2.0f64, 0.0, 0.0, 0.25, 1.0, 0.0);
        let lc = solve_laguerre_constants(&pc).unwrap();
        assert!((lc.p10 - 0.5).abs() < 1e-15);
        let gamma1 = (lc.p10 * lc.p10 - 0.25) / (2.0 * lc.p10).powi(2);
        assert_eq!(gamma1, 0.0);
        assert_eq!(lc.gamma1, 0.0);
        assert!(lc.gamma3.abs() < 1e-12);

        assert_eq!(solve_laguerre_constants(&ParametricCoefficients::new(1.0f64, 0.0, 1.0, 0.0, 0.0, 0.0)),
            Err(ParametricError::NotLaguerreBranch));
    }

    #[test]
    fn coulomb_residual_values() {
        let form = coulomb_form();
        let r = quantization_residual(&form, 0, -0.5, RootChoice::default()).unwrap();
        assert!(r.abs() < 1e-12);
        // p10 = 1/2 at E = −1/8, γ2 = Λ2/(2 p10) − c1/2 − q10 = 2 − 1 = 1
        let r = quantization_residual(&form, 0, -0.125, RootChoice::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coulomb_energies_from_scan() {
        let form = coulomb_form();
        for n in 0..5 {
            let e = solve_energy(&form, n, RootChoice::default()).unwrap();
            let n0 = (n + 1) as f64;
            assert!((e + 0.5 / (n0 * n0)).abs() < 1e-12, "n = {n}: {e}");
            let r = quantization_residual(&form, n, e, RootChoice::default()).unwrap();
            assert!(r.abs() < 1e-10);
        }
    }

    #[test]
    fn degenerate_window_is_an_error() {
        let mut form = coulomb_form();
        form.window = EnergyWindow::new(0.0, 0.0);
        assert!(matches!(solve_energy(&form, 0, RootChoice::default()), Err(ParametricError::WindowDegenerate { .. })));
    }

    #[test]
    fn exhausted_well_reports_no_bound_state() {
        // Morse V1 = 100, V2 = 20, a = 1: one level only
        let form = EnergyDependentForm {
            c1: 1.0,
            c2: 0.0,
            c3: 0.0,
            lambdas: LambdaMap { offset: [2.0, 2.0 * 20.0 / 10.0, 0.0], slope: [0.0, 0.0, -2.0] },
            window: EnergyWindow::new(-1.0, 0.0),
        };
        assert!(solve_energy(&form, 0, RootChoice::default()).is_ok());
        assert_eq!(solve_energy(&form, 1, RootChoice::default()), Err(ParametricError::NoBoundState { n: 1 }));
    }

    #[test]
    fn infinite_window_expands() {
        // pseudoharmonic-like: Λ2 carries the energy, confining
        let form = EnergyDependentForm {
            c1: 1.5,
            c2: 0.0,
            c3: 0.0,
            lambdas: LambdaMap { offset: [1.0, 2.0, 1.0], slope: [0.0, 0.5, 0.0] },
            window: EnergyWindow::new(0.0, f64::INFINITY),
        };
        let e5 = solve_energy(&form, 5, RootChoice::default()).unwrap();
        let r = quantization_residual(&form, 5, e5, RootChoice::default()).unwrap();
        assert!(r.abs() < 1e-10);
        let e6 = solve_energy(&form, 6, RootChoice::default()).unwrap();
        assert!(e6 > e5);
    }

    #[test]
    fn consistency_trivial_and_violation() {
        let pc = ParametricCoefficients::new(1.0f64, 1.0, 1.0, 0.0, 0.0, 0.0);
        let (r1, r2, r3) = pc.r_coefficients(0.0, 0.0);
        assert_eq!((r1, r2, r3), (0.0, 0.0, 0.0));
        let bad = JacobiBranchConstants { q0: 0.0, p0: 0.0, alpha: 0.0, beta: 0.0, d: 0.0, h: 0.0, r1: 1.0, r2: 1e-3, r3: 0.0 };
        assert!(matches!(consistency_check(&bad), Err(ParametricError::ConsistencyViolation { .. })));
    }

    #[test]
    fn single_precision_coulomb() {
        let form = EnergyDependentForm::<f32> {
            c1: 2.0,
            c2: 0.0,
            c3: 0.0,
            lambdas: LambdaMap { offset: [0.0, 2.0, 0.0], slope: [-2.0, 0.0, 0.0] },
            window: EnergyWindow::new(-4.0, 0.0),
        };
        let e = solve_energy(&form, 1, RootChoice::default()).unwrap();
        assert!((e + 0.125).abs() < 1e-5);
    }
}
