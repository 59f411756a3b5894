use super::coords::CoordinateMap;
use super::{PotentialError, PotentialSpec, Result, UnitsConfig};
use crate::numerics::{sampled_minimum, RadialGrid};
use crate::parametric::{EnergyDependentForm, EnergyWindow, LambdaMap, RootChoice};
use crate::scalar::Real;

/// Points in every default oracle grid.
pub const DEFAULT_GRID_POINTS: usize = 4000;

/// A family's parametric form together with its coordinate map and the root
/// choice that gives decaying states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametricModel<T> {
    pub form: EnergyDependentForm<T>,
    pub map: CoordinateMap<T>,
    pub root_choice: RootChoice,
}

/// Minimum of `A s² + B s + C` over `s ∈ [0, s_max]`.
fn quadratic_min<T: Real>(a: T, b: T, c: T, s_max: T) -> T {
    let at = |s: T| (a * s + b) * s + c;
    let mut m = at(T::zero()).min(at(s_max));
    if a > T::zero() {
        let vertex = -b / (T::two() * a);
        if vertex > T::zero() && vertex < s_max {
            m = m.min(at(vertex));
        }
    }
    m
}

/// `V_eff = base + A/r² − B/r` has its minimum `base − B²/(4A)`.
fn inverse_square_min<T: Real>(base: T, a: T, b: T) -> T {
    base - b * b / (T::lit(4.0) * a)
}

/// Energy-dependent parametric form, coordinate map and bound window.
pub fn to_parametric<T: Real>(spec: &PotentialSpec<T>, l: usize, units: &UnitsConfig<T>) -> Result<ParametricModel<T>> {
    spec.check(l, units)?;
    let zero = T::zero();
    let one = T::one();
    let two = T::two();
    let four = T::lit(4.0);
    let m = units.mass;
    let hb2 = units.hbar * units.hbar;
    let big_m = units.two_m_over_hbar2();
    let ll = T::of_usize(l * (l + 1));
    let centrifugal = ll / big_m;
    let asym = spec.asymptote().unwrap_or(T::infinity());
    let laguerre_radial = |offset: [T; 3], c1: T, lo: T, map: CoordinateMap<T>, slope: [T; 3]| ParametricModel {
        form: EnergyDependentForm {
            c1,
            c2: zero,
            c3: zero,
            lambdas: LambdaMap { offset, slope },
            window: EnergyWindow::new(lo, asym),
        },
        map,
        root_choice: RootChoice::PLUS_PLUS,
    };
    let coulomb_slope = [-big_m, zero, zero];
    let model = match *spec {
        PotentialSpec::GeneralizedMorse { v1, v2, a } => {
            let j = big_m / (a * a);
            laguerre_radial(
                [j, j * v2 / v1.sqrt(), zero],
                one,
                -v2 * v2 / (four * v1),
                CoordinateMap::Exponential { scale: v1.sqrt(), rate: a },
                [zero, zero, -j],
            )
        }
        PotentialSpec::Mie { v0, a } => laguerre_radial(
            [zero, big_m * a * v0, big_m * a * a * v0 * T::half() + ll],
            two,
            inverse_square_min(zero, v0 * a * a * T::half() + centrifugal, v0 * a),
            CoordinateMap::Identity,
            coulomb_slope,
        ),
        PotentialSpec::KratzerFues { de, re } => laguerre_radial(
            [big_m * de, two * big_m * de * re, big_m * de * re * re + ll],
            two,
            inverse_square_min(de, de * re * re + centrifugal, two * de * re),
            CoordinateMap::Identity,
            coulomb_slope,
        ),
        PotentialSpec::Coulomb { e2 } => laguerre_radial(
            [zero, big_m * e2, ll],
            two,
            -four * m * e2 * e2 / hb2,
            CoordinateMap::Identity,
            coulomb_slope,
        ),
        PotentialSpec::Pseudoharmonic { v0, r0 } => {
            let k = m / (two * hb2);
            let c = centrifugal / v0;
            let lo = two * v0 * ((one + c / (r0 * r0)).sqrt() - one);
            laguerre_radial(
                [k * v0 / (r0 * r0), k * two * v0, k * v0 * r0 * r0 + ll / four],
                T::lit(1.5),
                lo,
                CoordinateMap::Square,
                [zero, k, zero],
            )
        }
        PotentialSpec::NoncentralRadial { alpha, lambda } => laguerre_radial(
            [zero, -big_m * alpha, big_m * lambda],
            two,
            -four * m * alpha * alpha / hb2,
            CoordinateMap::Identity,
            coulomb_slope,
        ),
        PotentialSpec::DeformedRosenMorse { v1, v2, a, eta } => {
            let k = m / (two * a * a * hb2);
            let lo = quadratic_min(v2 * eta * eta, -eta * (v1 + v2), v1, eta.recip());
            jacobi_model(
                eta,
                [k * v2 * eta * eta, k * eta * (v1 + v2), k * v1],
                -k,
                lo,
                asym,
                CoordinateMap::Logistic { rate: two * a, eta },
            )
        }
        PotentialSpec::WoodsSaxon { v1, v2, a } => {
            let j = big_m / (a * a);
            let lo = quadratic_min(v2, -(v1 + v2), zero, one);
            jacobi_model(one, [j * v2, j * (v1 + v2), zero], -j, lo, asym, CoordinateMap::Logistic { rate: a, eta: one })
        }
        PotentialSpec::PoschlTeller { v0, a, eta } => {
            let k = m / (two * a * a * hb2);
            let lo = -v0 / eta;
            jacobi_model(
                eta,
                [four * k * v0 * eta, four * k * v0, zero],
                -k,
                lo,
                asym,
                CoordinateMap::Logistic { rate: two * a, eta },
            )
        }
    };
    Ok(model)
}

/// `c1 = 1, c2 = −2η, c3 = −η` with only `Λ3` moving (slope `s3`) in `E`.
fn jacobi_model<T: Real>(eta: T, offset: [T; 3], s3: T, lo: T, hi: T, map: CoordinateMap<T>) -> ParametricModel<T> {
    let zero = T::zero();
    ParametricModel {
        form: EnergyDependentForm {
            c1: T::one(),
            c2: -T::two() * eta,
            c3: -eta,
            lambdas: LambdaMap { offset, slope: [zero, zero, s3] },
            window: EnergyWindow::new(lo, hi),
        },
        map,
        root_choice: RootChoice::PLUS_MINUS,
    }
}

/// Closed-form level `n`, derived from the quantization condition.
///
/// Laguerre families: with `q` the regular root, the condition reads
/// `Λ2 = p (2n + 2q + c1)` with `p² = Λ1`. Jacobi families (`c1 = 1`,
/// `c2/c3 = 2`): `q − p = x = sqrt(1/4 + Λ1/c3²) − n − 1/2` and
/// `q² − p² = −Λ1/c3² − Λ2/c3`, then `Λ3(E) = q²`.
pub fn closed_form_energy<T: Real>(spec: &PotentialSpec<T>, l: usize, units: &UnitsConfig<T>, n: usize) -> Result<T> {
    let model = to_parametric(spec, l, units)?;
    let f = &model.form;
    let nn = T::of_usize(n);
    let one = T::one();
    let two = T::two();
    let none = || PotentialError::NoBoundState { n };
    let lam = f.lambdas;
    let energy = match *spec {
        PotentialSpec::GeneralizedMorse { .. } => {
            // p = sqrt(Λ1) fixed, q = sqrt(−J E)
            let p = lam.offset[0].sqrt();
            let q = (lam.offset[1] / p - two * nn - one) * T::half();
            if !(q > T::zero()) {
                return Err(none());
            }
            q * q / lam.slope[2]
        }
        PotentialSpec::Pseudoharmonic { .. } => {
            let p = lam.offset[0].sqrt();
            let root = (T::lit(1.0 / 16.0) + lam.offset[2]).sqrt();
            let lambda2 = p * (two * nn + one + two * root);
            (lambda2 - lam.offset[1]) / lam.slope[1]
        }
        PotentialSpec::Mie { .. }
        | PotentialSpec::KratzerFues { .. }
        | PotentialSpec::Coulomb { .. }
        | PotentialSpec::NoncentralRadial { .. } => {
            let denom = two * nn + one + (one + T::lit(4.0) * lam.offset[2]).sqrt();
            let p = lam.offset[1] / denom;
            if !(p > T::zero()) {
                return Err(none());
            }
            (p * p - lam.offset[0]) / lam.slope[0]
        }
        PotentialSpec::DeformedRosenMorse { .. } | PotentialSpec::WoodsSaxon { .. } | PotentialSpec::PoschlTeller { .. } => {
            let c3 = f.c3;
            let l1 = lam.offset[0] / (c3 * c3);
            let x = (T::lit(0.25) + l1).sqrt() - nn - T::half();
            if !(x > T::zero()) {
                return Err(none());
            }
            let d = -l1 - lam.offset[1] / c3;
            let q = (x + d / x) * T::half();
            let p = (d / x - x) * T::half();
            if !(q > T::zero() && p < T::zero()) {
                return Err(none());
            }
            (q * q - lam.offset[2]) / lam.slope[2]
        }
    };
    if !f.window.contains(energy) {
        return Err(none());
    }
    Ok(energy)
}

/// Default oracle grid: radial families on `[1e−4·L, 80·L]` with `L` the
/// natural length of the Coulomb-like tail (pseudoharmonic: `20·L`); line
/// families out to where `V` is within `1e−8·depth` of its asymptote, or
/// `100·depth` above the top of the well on a diverging side.
pub fn default_grid<T: Real>(spec: &PotentialSpec<T>, l: usize, units: &UnitsConfig<T>) -> Result<RadialGrid<T>> {
    let model = to_parametric(spec, l, units)?;
    let m = units.mass;
    let hb2 = units.hbar * units.hbar;
    let radial = |scale: T, reach: T| RadialGrid {
        x_min: T::lit(1e-4) * scale,
        x_max: reach * scale,
        n_points: DEFAULT_GRID_POINTS,
    };
    let eighty = T::lit(80.0);
    let grid = match *spec {
        PotentialSpec::Coulomb { e2 } => radial(hb2 / (m * e2), eighty),
        PotentialSpec::NoncentralRadial { alpha, .. } => radial(hb2 / (m * alpha.abs()), eighty),
        PotentialSpec::Mie { v0, a } => radial(a.max(hb2 / (m * v0 * a)), eighty),
        PotentialSpec::KratzerFues { de, re } => radial(re.max(hb2 / (m * T::two() * de * re)), eighty),
        PotentialSpec::Pseudoharmonic { v0, r0 } => {
            let omega = (T::two() * v0 / (m * r0 * r0)).sqrt();
            radial(r0.max((units.hbar / (m * omega)).sqrt()), T::lit(20.0))
        }
        _ => line_grid(spec, &model),
    };
    Ok(grid)
}

/// [`default_grid`] widened so the slowest-decaying level up to `n_max`
/// fits: on radial families with a Coulomb-like tail `r^{n+q} e^{−p r}`,
/// `x_max ≥ 8 (n + q + 1)/p` at unchanged spacing.
pub fn oracle_grid<T: Real>(spec: &PotentialSpec<T>, l: usize, units: &UnitsConfig<T>, n_max: usize) -> Result<RadialGrid<T>> {
    let base = default_grid(spec, l, units)?;
    if !spec.is_radial() || matches!(spec, PotentialSpec::Pseudoharmonic { .. }) {
        return Ok(base);
    }
    let model = to_parametric(spec, l, units)?;
    let top = (0..=n_max).rev().find_map(|n| closed_form_energy(spec, l, units, n).ok().map(|e| (n, e)));
    let Some((n, e)) = top else { return Ok(base) };
    let pc = model.form.coeff_at(e);
    let q = (T::lit(0.25) + pc.lambda3).sqrt() - T::half();
    let p = pc.lambda1.sqrt();
    let reach = T::lit(8.0) * (T::of_usize(n) + q + T::one()) / p;
    if !(reach > base.x_max) {
        return Ok(base);
    }
    let h = base.x_max / T::of_usize(base.n_points - 1);
    let n_points = (reach / h).ceil().to_usize().unwrap_or(base.n_points) + 1;
    Ok(RadialGrid { x_min: base.x_min, x_max: h * T::of_usize(n_points - 1), n_points })
}

fn line_grid<T: Real>(spec: &PotentialSpec<T>, model: &ParametricModel<T>) -> RadialGrid<T> {
    let rate = match model.map {
        CoordinateMap::Exponential { rate, .. } | CoordinateMap::Logistic { rate, .. } => rate,
        _ => T::one(),
    };
    let v = |x: T| spec.potential_unchecked(x);
    let span = T::lit(50.0) / rate;
    let xs: Vec<T> = (0..=2000).map(|i| -span + span * T::two() * T::of_usize(i) / T::lit(2000.0)).collect();
    let x_star = sampled_minimum(v, &xs).map(|(x, _)| x).unwrap_or(T::zero());
    let top = model.form.window.hi;
    let depth = (top - model.form.window.lo).max(T::epsilon() * top.abs().max(T::one()));
    let step = T::lit(0.05) / rate;
    let cap = T::lit(200.0) / rate;
    let far = T::lit(1e3) / rate;
    let edge = |dir: T| -> T {
        let side = v(x_star + dir * far);
        let mut x = x_star;
        while (x - x_star).abs() < cap {
            x = x + dir * step;
            let vx = v(x);
            let done = if side.is_finite() && side.abs() < T::max_value().sqrt() {
                (vx - side).abs() < T::lit(1e-8) * depth
            } else {
                vx >= top + T::lit(100.0) * depth
            };
            if done {
                break;
            }
        }
        x
    };
    RadialGrid { x_min: edge(-T::one()), x_max: edge(T::one()), n_points: DEFAULT_GRID_POINTS }
}
