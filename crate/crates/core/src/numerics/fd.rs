use serde::{Deserialize, Serialize};

use super::grid::{Boundary, RadialGrid};
use super::quadrature::simpson_integrate;
use super::sturm::{inverse_iteration, sturm_count, tridiagonal_eigenvalues};
use super::{NumericsError, Result};
use crate::potentials::{PotentialSpec, UnitsConfig};
use crate::scalar::Real;

/// Largest relative eigenvalue shift tolerated between a grid and its
/// refinement.
pub const RICHARDSON_LIMIT: f64 = 1e-4;

/// Where the Dirichlet walls sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// Walls at `x_min` and `x_max`.
    Line,
    /// Radial problem for `u = rR`: nodes at `r = i·h`, `h = x_max/(n−1)`,
    /// wall at the last node below `x_min` (at `r = 0` whenever `x_min < h`)
    /// and at `x_max`.
    HalfLine,
}

/// Symmetric tridiagonal finite-difference Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct Discretization<T> {
    /// Positions of the unknowns.
    pub nodes: Vec<T>,
    /// Wall positions `(left, right)`.
    pub walls: (T, T),
    pub h: T,
    pub diag: Vec<T>,
    pub offdiag: Vec<T>,
}

/// Build `−(ħ²/2m) u'' + V_eff u` with the three-point Laplacian.
pub fn discretize<T: Real>(
    v_eff: impl Fn(T) -> T,
    domain: Domain,
    grid: &RadialGrid<T>,
    units: &UnitsConfig<T>,
) -> Result<Discretization<T>> {
    grid.validate()?;
    let last = grid.n_points - 1;
    let (h, first, origin) = match domain {
        Domain::Line => (grid.spacing(), 1, grid.x_min),
        Domain::HalfLine => {
            if grid.x_min < T::zero() {
                return Err(NumericsError::InvalidGrid("radial grid needs x_min >= 0".into()));
            }
            let h = grid.x_max / T::of_usize(last);
            let first = (grid.x_min / h).ceil().to_usize().unwrap_or(1).max(1);
            (h, first, T::zero())
        }
    };
    if first + 1 >= last {
        return Err(NumericsError::InvalidGrid("fewer than two interior unknowns".into()));
    }
    let nodes: Vec<T> = (first..last).map(|i| origin + h * T::of_usize(i)).collect();
    let t = units.hbar * units.hbar / (T::two() * units.mass * h * h);
    let diag: Vec<T> = nodes.iter().map(|&x| T::two() * t + v_eff(x)).collect();
    if let Some(bad) = nodes.iter().zip(&diag).find(|(_, d)| !d.is_finite()) {
        return Err(NumericsError::InvalidGrid(format!("effective potential is not finite at x = {}", bad.0)));
    }
    let offdiag = vec![-t; nodes.len() - 1];
    let walls = (origin + h * T::of_usize(first - 1), origin + h * T::of_usize(last));
    Ok(Discretization { nodes, walls, h, diag, offdiag })
}

impl<T: Real> Discretization<T> {
    pub fn count_below(&self, lambda: T) -> usize {
        sturm_count(&self.diag, &self.offdiag, lambda)
    }

    pub fn eigenvalues(&self, count: usize) -> Vec<T> {
        let tol = T::tol(1e-12).max(T::epsilon() * self.diag.iter().fold(T::zero(), |m, d| m.max(d.abs())));
        tridiagonal_eigenvalues(&self.diag, &self.offdiag, count, tol)
    }

    /// Normalized eigenvector at a converged eigenvalue, with the wall
    /// zeros included so the samples cover `[walls.0, walls.1]` uniformly.
    pub fn eigenvector(&self, lambda: T) -> Result<OracleState<T>> {
        let v = inverse_iteration(&self.diag, &self.offdiag, lambda);
        let mut x = Vec::with_capacity(v.len() + 2);
        let mut u = Vec::with_capacity(v.len() + 2);
        x.push(self.walls.0);
        u.push(T::zero());
        x.extend_from_slice(&self.nodes);
        u.extend(v);
        x.push(self.walls.1);
        u.push(T::zero());
        let sq: Vec<T> = u.iter().map(|v| *v * *v).collect();
        let norm = simpson_integrate(&sq, self.h)?.sqrt();
        for v in &mut u {
            *v = *v / norm;
        }
        Ok(OracleState { energy: lambda, x, u, h: self.h })
    }
}

/// Oracle eigenvector sampled on the grid, `∫ u² dx = 1`. For radial
/// problems `u = r·R(r)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleState<T> {
    pub energy: T,
    pub x: Vec<T>,
    pub u: Vec<T>,
    pub h: T,
}

/// Bound eigenvalues of the finite-difference Hamiltonian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSpectrum<T> {
    /// Richardson-extrapolated `(4·E(h/2) − E(h))/3`, strictly increasing,
    /// all below the asymptote.
    pub eigenvalues: Vec<T>,
    /// Unextrapolated eigenvalues on `grid`.
    pub raw_eigenvalues: Vec<T>,
    /// Unextrapolated eigenvalues on the refined grid.
    pub refined_eigenvalues: Vec<T>,
    pub grid: RadialGrid<T>,
    pub domain: Domain,
    pub boundary: (Boundary, Boundary),
    pub effective_potential_includes_centrifugal: bool,
    /// `None` for confining potentials.
    pub asymptote: Option<T>,
    /// Largest `|E(h/2) − E(h)| / |E(h/2)|` over the reported levels.
    pub richardson_shift: T,
    pub grid_adequate: bool,
}

impl<T: Real> OracleSpectrum<T> {
    pub fn to_f64(&self) -> OracleSpectrum<f64> {
        let conv = |v: &[T]| v.iter().map(|x| x.as_f64()).collect::<Vec<_>>();
        OracleSpectrum {
            eigenvalues: conv(&self.eigenvalues),
            raw_eigenvalues: conv(&self.raw_eigenvalues),
            refined_eigenvalues: conv(&self.refined_eigenvalues),
            grid: RadialGrid {
                x_min: self.grid.x_min.as_f64(),
                x_max: self.grid.x_max.as_f64(),
                n_points: self.grid.n_points,
            },
            domain: self.domain,
            boundary: self.boundary,
            effective_potential_includes_centrifugal: self.effective_potential_includes_centrifugal,
            asymptote: self.asymptote.map(Real::as_f64),
            richardson_shift: self.richardson_shift.as_f64(),
            grid_adequate: self.grid_adequate,
        }
    }
}

/// Lowest `count` bound eigenvalues of `V_eff` on `grid` and on its
/// refinement, extrapolated. Fails with [`NumericsError::GridTooCoarse`]
/// (carrying the spectrum anyway) when refinement moves any level by more
/// than [`RICHARDSON_LIMIT`] relative.
pub fn fd_spectrum<T: Real>(
    v_eff: impl Fn(T) -> T,
    domain: Domain,
    grid: &RadialGrid<T>,
    units: &UnitsConfig<T>,
    count: usize,
    asymptote: Option<T>,
    includes_centrifugal: bool,
) -> Result<OracleSpectrum<T>> {
    if count == 0 {
        return Err(NumericsError::NothingRequested(count));
    }
    let coarse = discretize(&v_eff, domain, grid, units)?;
    let fine_grid = grid.refined();
    let fine = discretize(&v_eff, domain, &fine_grid, units)?;
    let mut take = count.min(coarse.nodes.len());
    if let Some(edge) = asymptote {
        take = take.min(coarse.count_below(edge)).min(fine.count_below(edge));
    }
    let raw = coarse.eigenvalues(take);
    let refined = fine.eigenvalues(take);
    let three = T::lit(3.0);
    let four = T::lit(4.0);
    let mut eigenvalues = Vec::with_capacity(take);
    let mut shift = T::zero();
    for (&ec, &ef) in raw.iter().zip(&refined) {
        let extrapolated = (four * ef - ec) / three;
        if asymptote.is_some_and(|edge| !(extrapolated < edge)) {
            break;
        }
        let scale = ef.abs().max(T::min_positive_value());
        shift = shift.max((ef - ec).abs() / scale);
        eigenvalues.push(extrapolated);
    }
    let spectrum = OracleSpectrum {
        eigenvalues,
        raw_eigenvalues: raw,
        refined_eigenvalues: refined,
        grid: *grid,
        domain,
        boundary: (Boundary::Dirichlet, Boundary::Dirichlet),
        effective_potential_includes_centrifugal: includes_centrifugal,
        asymptote,
        richardson_shift: shift,
        grid_adequate: shift <= T::lit(RICHARDSON_LIMIT),
    };
    if spectrum.grid_adequate {
        Ok(spectrum)
    } else {
        Err(NumericsError::GridTooCoarse {
            max_shift: shift.as_f64(),
            limit: RICHARDSON_LIMIT,
            spectrum: Box::new(spectrum.to_f64()),
        })
    }
}

/// Finite-difference oracle for a catalog potential: radial families are
/// diagonalized for `u = rR` with the centrifugal term included, 1-D
/// families on the line.
pub fn fd_eigenvalues<T: Real>(
    spec: &PotentialSpec<T>,
    l: usize,
    units: &UnitsConfig<T>,
    grid: &RadialGrid<T>,
    count: usize,
) -> Result<OracleSpectrum<T>> {
    spec.check(l, units)?;
    let domain = if spec.is_radial() { Domain::HalfLine } else { Domain::Line };
    fd_spectrum(
        |x| spec.effective_potential(l, units, x),
        domain,
        grid,
        units,
        count,
        spec.asymptote(),
        spec.is_radial(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn unit() -> UnitsConfig<f64> {
        UnitsConfig::default()
    }

    #[test]
    fn particle_in_a_box() {
        let grid = RadialGrid::new(0.0, 1.0, 4000).unwrap();
        let s = fd_spectrum(|_| 0.0, Domain::Line, &grid, &unit(), 3, None, false).unwrap();
        for (n, e) in s.eigenvalues.iter().enumerate() {
            let exact = ((n + 1) as f64 * PI).powi(2) / 2.0;
            assert!((e - exact).abs() / exact < 1e-4, "{n}: {e} vs {exact}");
        }
    }

    #[test]
    fn box_converges_under_refinement() {
        let grid = RadialGrid::new(0.0, 1.0, 200).unwrap();
        let s = fd_spectrum(|_| 0.0, Domain::Line, &grid, &unit(), 3, None, false);
        let s = match s {
            Ok(s) => s.to_f64(),
            Err(NumericsError::GridTooCoarse { spectrum, .. }) => *spectrum,
            Err(e) => panic!("{e}"),
        };
        for n in 0..3 {
            let exact = ((n + 1) as f64 * PI).powi(2) / 2.0;
            assert!((s.refined_eigenvalues[n] - exact).abs() < (s.raw_eigenvalues[n] - exact).abs());
        }
    }

    #[test]
    fn coulomb_ground_state() {
        let grid = RadialGrid::new(1e-4, 80.0, 4000).unwrap();
        let s = fd_spectrum(|r| -1.0 / r, Domain::HalfLine, &grid, &unit(), 3, Some(0.0), true).unwrap();
        assert!((s.eigenvalues[0] + 0.5).abs() < 1e-5);
        assert!((s.eigenvalues[2] + 1.0 / 18.0).abs() / (1.0 / 18.0) < 1e-5);
    }

    #[test]
    fn harmonic_eigenvector_is_gaussian() {
        let grid = RadialGrid::new(-8.0, 8.0, 2001).unwrap();
        let d = discretize(|x| 0.5 * x * x, Domain::Line, &grid, &unit()).unwrap();
        let e0 = d.eigenvalues(1)[0];
        assert!((e0 - 0.5).abs() < 1e-4);
        let st = d.eigenvector(e0).unwrap();
        for (x, u) in st.x.iter().zip(&st.u) {
            let exact = PI.powf(-0.25) * (-x * x / 2.0).exp();
            assert!((u - exact).abs() < 1e-4);
        }
    }

    #[test]
    fn coarse_grid_is_flagged() {
        let grid = RadialGrid::new(1e-4, 80.0, 200).unwrap();
        let err = fd_spectrum(|r| -1.0 / r, Domain::HalfLine, &grid, &unit(), 3, Some(0.0), true).unwrap_err();
        match err {
            NumericsError::GridTooCoarse { max_shift, spectrum, .. } => {
                assert!(max_shift > RICHARDSON_LIMIT);
                assert!(!spectrum.grid_adequate);
            }
            e => panic!("unexpected {e}"),
        }
    }
}
