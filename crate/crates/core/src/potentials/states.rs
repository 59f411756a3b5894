use serde::{Deserialize, Serialize};

use super::catalog::{default_grid, to_parametric, ParametricModel};
use super::coords::CoordinateMap;
use super::{PotentialError, PotentialSpec, Result, UnitsConfig};
use crate::numerics::{count_nodes, default_node_threshold, simpson_integrate, RadialGrid};
use crate::parametric::{
    consistency_check, energy_roots, BranchConstants, ParametricCoefficients, ParametricError, RootChoice,
    ScanOptions,
};
use crate::scalar::Real;
use crate::special::{jacobi_p, laguerre_l};

/// Samples used when counting nodes of an analytic state.
pub const NODE_SAMPLES: usize = 10_000;

/// Samples in the normalization quadrature.
const NORM_SAMPLES: usize = 8001;

/// One analytic bound state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundState<T> {
    pub potential: PotentialSpec<T>,
    pub units: UnitsConfig<T>,
    pub n: usize,
    pub l: usize,
    pub energy: T,
    /// Quantization residual at `energy`.
    pub residual: T,
    pub branch_constants: BranchConstants<T>,
    pub coefficients: ParametricCoefficients<T>,
    pub map: CoordinateMap<T>,
    /// Makes `∫ ψ² · measure dx = 1`.
    pub norm_constant: T,
}

impl<T: Real> BoundState<T> {
    /// Normalized `ψ(x)`: the radial function `R(r)` for radial families,
    /// `ψ(x)` on the line.
    pub fn wavefunction(&self, x: T) -> Result<T> {
        let ok = x.is_finite() && (!self.map.is_radial() || x >= T::zero());
        if !ok {
            return Err(PotentialError::OutOfDomain { family: self.potential.family().name(), x: x.as_f64() });
        }
        Ok(self.norm_constant * self.unnormalized(x)?)
    }

    /// `u = r·R(r)` for radial families, `ψ` on the line: the function the
    /// finite-difference oracle solves for.
    pub fn reduced(&self, x: T) -> Result<T> {
        let psi = self.wavefunction(x)?;
        Ok(if self.map.is_radial() { x * psi } else { psi })
    }

    /// `ψ² · measure`, the probability density in `x`.
    pub fn density(&self, x: T) -> Result<T> {
        let psi = self.wavefunction(x)?;
        Ok(psi * psi * self.map.measure(x))
    }

    fn unnormalized(&self, x: T) -> Result<T> {
        let ln_s = self.map.ln_s(x);
        let s = self.map.s_of_x(x);
        let pc = &self.coefficients;
        let (ln_envelope, poly, q) = match &self.branch_constants {
            BranchConstants::Laguerre(c) => {
                let z = (T::two() * c.p10 - pc.c2) * s;
                let poly = laguerre_l(self.n, c.k, z).map_err(|e| PotentialError::Normalization(e.to_string()))?;
                (-c.p10 * s, poly, c.q10)
            }
            BranchConstants::Jacobi(c) => {
                let ln_w = self.map.ln_one_minus_eta_s(x).unwrap_or_else(|| (T::one() + pc.c3 * s).ln());
                let z = T::one() + T::two() * pc.c3 * s;
                let poly = jacobi_p(self.n, c.alpha, c.beta, z).map_err(|e| PotentialError::Normalization(e.to_string()))?;
                (-c.p0 * ln_w, poly, c.q0)
            }
        };
        if poly == T::zero() {
            return Ok(T::zero());
        }
        let ln_power = if q == T::zero() { T::zero() } else { q * ln_s };
        let mag = (ln_envelope + ln_power + poly.abs().ln()).exp();
        Ok(if poly < T::zero() { -mag } else { mag })
    }

    /// Uniform quadrature nodes covering the support on `grid`: `[0, x_max]`
    /// for radial families, `[x_min, x_max]` on the line.
    pub fn quadrature_nodes(&self, grid: &RadialGrid<T>, points: usize) -> (Vec<T>, T) {
        quadrature_nodes(self.map.is_radial(), grid, points)
    }

    /// Interior sign changes on [`NODE_SAMPLES`] points of `grid`.
    pub fn node_count(&self, grid: &RadialGrid<T>) -> Result<usize> {
        let (xs, _) = self.quadrature_nodes(grid, NODE_SAMPLES + 2);
        let samples = xs[1..xs.len() - 1].iter().map(|&x| self.wavefunction(x)).collect::<Result<Vec<T>>>()?;
        Ok(count_nodes(&samples, default_node_threshold(&samples)))
    }
}

pub(crate) fn quadrature_nodes<T: Real>(radial: bool, grid: &RadialGrid<T>, points: usize) -> (Vec<T>, T) {
    let lo = if radial { T::zero() } else { grid.x_min };
    let h = (grid.x_max - lo) / T::of_usize(points - 1);
    let xs = (0..points).map(|i| if i + 1 == points { grid.x_max } else { lo + h * T::of_usize(i) }).collect();
    (xs, h)
}

fn is_physical<T: Real>(c: &BranchConstants<T>, pc: &ParametricCoefficients<T>, radial: bool) -> bool {
    match c {
        BranchConstants::Laguerre(l) => {
            l.p10 > T::zero() && T::two() * l.p10 - pc.c2 > T::zero() && (l.q10 > T::zero() || (radial && l.q10 == T::zero()))
        }
        BranchConstants::Jacobi(j) => j.q0 > T::zero() && j.p0 < T::zero(),
    }
}

fn build_state<T: Real>(
    spec: &PotentialSpec<T>,
    l: usize,
    units: &UnitsConfig<T>,
    model: &ParametricModel<T>,
    n: usize,
    energy: T,
) -> Result<BoundState<T>> {
    let coefficients = model.form.coeff_at(energy);
    let branch_constants = model.form.constants_at(energy, model.root_choice)?;
    let nn = T::of_usize(n);
    let residual = match &branch_constants {
        BranchConstants::Jacobi(j) => j.r3 - nn * (nn + j.alpha + j.beta + T::one()),
        BranchConstants::Laguerre(c) => c.gamma2 - nn,
    };
    Ok(BoundState {
        potential: *spec,
        units: *units,
        n,
        l,
        energy,
        residual,
        branch_constants,
        coefficients,
        map: model.map,
        norm_constant: T::one(),
    })
}

fn normalize<T: Real>(state: &mut BoundState<T>, grid: &RadialGrid<T>) -> Result<()> {
    let (xs, h) = state.quadrature_nodes(grid, NORM_SAMPLES);
    let dens = xs.iter().map(|&x| state.density(x)).collect::<Result<Vec<T>>>()?;
    let total = simpson_integrate(&dens, h).map_err(|e| PotentialError::Normalization(e.to_string()))?;
    if !(total.is_finite() && total > T::zero()) {
        return Err(PotentialError::Normalization(format!("norm integral is {total}")));
    }
    state.norm_constant = total.sqrt().recip();
    Ok(())
}

/// Bound states `n = 0..=n_max` that exist, in increasing energy. Stops at
/// the first `n` with no admissible root; never fabricates levels.
///
/// When the residual has several admissible roots for one `n`, the one
/// whose state has exactly `n` nodes is kept.
pub fn spectrum<T: Real>(spec: &PotentialSpec<T>, l: usize, units: &UnitsConfig<T>, n_max: usize) -> Result<Vec<BoundState<T>>> {
    let model = to_parametric(spec, l, units)?;
    let mut out: Vec<BoundState<T>> = Vec::new();
    if model.form.window.is_degenerate() {
        return Ok(out);
    }
    let grid = default_grid(spec, l, units)?;
    let opts = ScanOptions::default();
    let radial = model.map.is_radial();
    for n in 0..=n_max {
        let roots = match energy_roots(&model.form, n, model.root_choice, &opts) {
            Ok(r) => r,
            Err(ParametricError::WindowDegenerate { .. }) => break,
            Err(e) => return Err(e.into()),
        };
        let prev = out.last().map(|s| s.energy);
        let mut candidates = Vec::new();
        for e in roots {
            if prev.is_some_and(|p| e <= p) {
                continue;
            }
            let state = build_state(spec, l, units, &model, n, e)?;
            if is_physical(&state.branch_constants, &state.coefficients, radial) {
                candidates.push(state);
            }
        }
        let chosen = match candidates.len() {
            0 => break,
            1 => candidates.pop(),
            _ => {
                let mut pick = None;
                for mut c in candidates.iter().cloned() {
                    normalize(&mut c, &grid)?;
                    if c.node_count(&grid)? == n {
                        pick = Some(c);
                        break;
                    }
                }
                pick.or_else(|| candidates.into_iter().next())
            }
        };
        let Some(mut state) = chosen else { break };
        if let BranchConstants::Jacobi(j) = &state.branch_constants {
            consistency_check(j)?;
        }
        normalize(&mut state, &grid)?;
        out.push(state);
    }
    Ok(out)
}

/// Root choice actually used for `spec` (Jacobi families take the
/// decaying `p` root).
pub fn root_choice_for<T: Real>(spec: &PotentialSpec<T>, l: usize, units: &UnitsConfig<T>) -> Result<RootChoice> {
    Ok(to_parametric(spec, l, units)?.root_choice)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> UnitsConfig<f64> {
        UnitsConfig::default()
    }

    #[test]
    fn coulomb_levels_and_shape() {
        let states = spectrum(&PotentialSpec::Coulomb { e2: 1.0 }, 0, &u(), 2).unwrap();
        let want = [-0.5, -0.125, -1.0 / 18.0];
        assert_eq!(states.len(), 3);
        for (s, w) in states.iter().zip(want) {
            assert!((s.energy - w).abs() < 1e-12, "{} vs {w}", s.energy);
        }
        let g = &states[0];
        let ratio = g.wavefunction(2.0).unwrap() / g.wavefunction(1.0).unwrap();
        assert!((ratio - (-1.0f64).exp()).abs() < 1e-12);
        // normalized R = 2 e^{−r}
        assert!((g.wavefunction(0.0).unwrap() - 2.0).abs() < 1e-7);
    }

    #[test]
    fn finite_wells_exhaust() {
        let ws = spectrum(&PotentialSpec::WoodsSaxon { v1: 5.0, v2: 10.0, a: 1.0 }, 0, &u(), 5).unwrap();
        assert_eq!(ws.len(), 1);
        assert!((ws[0].energy + 5.28125).abs() < 1e-10);
        let morse = spectrum(&PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 20.0, a: 1.0 }, 0, &u(), 4).unwrap();
        assert_eq!(morse.len(), 1);
        let pt = spectrum(&PotentialSpec::PoschlTeller { v0: 10.0, a: 1.0, eta: 1.0 }, 0, &u(), 8).unwrap();
        assert_eq!(pt.len(), 4);
        let none = spectrum(&PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 1.0, a: 1.0 }, 0, &u(), 2).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn jacobi_states_vanish_at_both_ends() {
        let pt = spectrum(&PotentialSpec::PoschlTeller { v0: 10.0, a: 1.0, eta: 1.0 }, 0, &u(), 1).unwrap();
        for s in &pt {
            assert!(s.wavefunction(60.0).unwrap().abs() < 1e-30);
            assert!(s.wavefunction(-60.0).unwrap().abs() < 1e-30);
        }
    }

    #[test]
    fn out_of_domain() {
        let states = spectrum(&PotentialSpec::Coulomb { e2: 1.0 }, 0, &u(), 0).unwrap();
        assert!(states[0].wavefunction(-1.0).is_err());
        assert!(states[0].wavefunction(f64::NAN).is_err());
    }
}
