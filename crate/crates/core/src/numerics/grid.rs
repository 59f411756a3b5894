use serde::{Deserialize, Serialize};

use super::{NumericsError, Result};
use crate::scalar::Real;

pub const MIN_GRID_POINTS: usize = 100;

/// Uniform 1-D discretization `x_min, x_min + h, …, x_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid<T> {
    pub x_min: T,
    pub x_max: T,
    pub n_points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Dirichlet,
}

impl<T: Real> RadialGrid<T> {
    pub fn new(x_min: T, x_max: T, n_points: usize) -> Result<Self> {
        let grid = Self { x_min, x_max, n_points };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_min.is_finite() && self.x_max.is_finite()) {
            return Err(NumericsError::InvalidGrid("bounds must be finite".into()));
        }
        if !(self.x_min < self.x_max) {
            return Err(NumericsError::InvalidGrid(format!("x_min {} must be below x_max {}", self.x_min, self.x_max)));
        }
        if self.n_points < MIN_GRID_POINTS {
            return Err(NumericsError::InvalidGrid(format!(
                "n_points {} is below the minimum {MIN_GRID_POINTS}",
                self.n_points
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> T {
        (self.x_max - self.x_min) / T::of_usize(self.n_points - 1)
    }

    pub fn point(&self, i: usize) -> T {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + self.spacing() * T::of_usize(i)
        }
    }

    pub fn points(&self) -> Vec<T> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// Same interval with the spacing halved.
    pub fn refined(&self) -> Self {
        Self { x_min: self.x_min, x_max: self.x_max, n_points: 2 * (self.n_points - 1) + 1 }
    }

    /// Same interval with `n` points.
    pub fn with_points(&self, n: usize) -> Self {
        Self { n_points: n, ..*self }
    }
}
