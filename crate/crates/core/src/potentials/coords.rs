use serde::{Deserialize, Serialize};

use crate::scalar::{softplus, Real};

/// Substitution `s(x)` bringing a family's equation into parametric form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoordinateMap<T> {
    /// `s = r`, `r > 0`.
    Identity,
    /// `s = r²`, `r > 0`.
    Square,
    /// `s = scale · e^{−rate·x}` on the line.
    Exponential { scale: T, rate: T },
    /// `s = e^{−rate·x} / (1 + η e^{−rate·x})` on the line, `s ∈ (0, 1/η)`.
    Logistic { rate: T, eta: T },
}

impl<T: Real> CoordinateMap<T> {
    pub fn is_radial(&self) -> bool {
        matches!(self, CoordinateMap::Identity | CoordinateMap::Square)
    }

    /// Open interval of the physical coordinate.
    pub fn x_domain(&self) -> (T, T) {
        if self.is_radial() {
            (T::zero(), T::infinity())
        } else {
            (T::neg_infinity(), T::infinity())
        }
    }

    /// Open interval of `s`.
    pub fn s_domain(&self) -> (T, T) {
        match *self {
            CoordinateMap::Logistic { eta, .. } => (T::zero(), eta.recip()),
            _ => (T::zero(), T::infinity()),
        }
    }

    pub fn contains(&self, x: T) -> bool {
        let (lo, hi) = self.x_domain();
        if self.is_radial() {
            x >= lo && x < hi
        } else {
            x > lo && x < hi
        }
    }

    pub fn s_of_x(&self, x: T) -> T {
        match *self {
            CoordinateMap::Identity => x,
            CoordinateMap::Square => x * x,
            _ => self.ln_s(x).exp(),
        }
    }

    /// `ln s(x)`, accurate where `s` itself would under- or overflow.
    pub fn ln_s(&self, x: T) -> T {
        match *self {
            CoordinateMap::Identity => x.ln(),
            CoordinateMap::Square => T::two() * x.ln(),
            CoordinateMap::Exponential { scale, rate } => scale.ln() - rate * x,
            CoordinateMap::Logistic { rate, eta } => -rate * x - softplus(eta.ln() - rate * x),
        }
    }

    /// `ln(1 − η s) = −ln(1 + η e^{−rate·x})` for the logistic map.
    pub fn ln_one_minus_eta_s(&self, x: T) -> Option<T> {
        match *self {
            CoordinateMap::Logistic { rate, eta } => Some(-softplus(eta.ln() - rate * x)),
            _ => None,
        }
    }

    /// Weight in norm integrals over `x`: `r²` for radial maps, 1 on the line.
    pub fn measure(&self, x: T) -> T {
        if self.is_radial() {
            x * x
        } else {
            T::one()
        }
    }
}
