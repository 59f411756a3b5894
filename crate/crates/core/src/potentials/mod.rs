//! The nine potential families: parameters, physical potentials, coordinate
//! substitutions, energy-dependent parametric forms, closed-form spectra and
//! analytic bound states.

mod catalog;
mod coords;
mod states;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parametric::{Branch, ParametricError};
use crate::scalar::Real;

pub use catalog::{closed_form_energy, default_grid, oracle_grid, to_parametric, ParametricModel, DEFAULT_GRID_POINTS};
pub use coords::CoordinateMap;
pub use states::{root_choice_for, spectrum, BoundState, NODE_SAMPLES};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PotentialError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error("{family} is a one-dimensional problem; l = {l} is not supported (only l = 0)")]
    UnsupportedAngularMomentum { family: &'static str, l: usize },
    #[error("x = {x} lies outside the domain of {family}")]
    OutOfDomain { family: &'static str, x: f64 },
    #[error("no bound state with n = {n}")]
    NoBoundState { n: usize },
    #[error("invalid units: {0}")]
    InvalidUnits(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error(transparent)]
    Parametric(#[from] ParametricError),
}

pub type Result<T, E = PotentialError> = std::result::Result<T, E>;

/// `ħ` and the particle mass. Both default to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitsConfig<T> {
    pub hbar: T,
    pub mass: T,
}

impl<T: Real> Default for UnitsConfig<T> {
    fn default() -> Self {
        Self { hbar: T::one(), mass: T::one() }
    }
}

impl<T: Real> UnitsConfig<T> {
    pub fn new(hbar: T, mass: T) -> Result<Self> {
        let u = Self { hbar, mass };
        u.validate()?;
        Ok(u)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |v: T| v.is_finite() && v > T::zero();
        if !ok(self.hbar) {
            return Err(PotentialError::InvalidUnits(format!("hbar must be positive and finite, got {}", self.hbar)));
        }
        if !ok(self.mass) {
            return Err(PotentialError::InvalidUnits(format!("mass must be positive and finite, got {}", self.mass)));
        }
        Ok(())
    }

    /// `2m/ħ²`.
    pub fn two_m_over_hbar2(&self) -> T {
        T::two() * self.mass / (self.hbar * self.hbar)
    }
}

/// A potential family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum PotentialSpec<T> {
    /// `V1 e^{−2ax} − V2 e^{−ax}` on the line.
    #[serde(alias = "generalized_morse", alias = "morse")]
    GeneralizedMorse {
        #[serde(rename = "V1")]
        v1: T,
        #[serde(rename = "V2")]
        v2: T,
        a: T,
    },
    /// `V0 [(a/r)²/2 − a/r]`.
    #[serde(alias = "mie")]
    Mie {
        #[serde(rename = "V0")]
        v0: T,
        a: T,
    },
    /// `De ((r − re)/r)²`.
    #[serde(alias = "kratzer_fues", alias = "kratzer")]
    KratzerFues {
        #[serde(rename = "De")]
        de: T,
        re: T,
    },
    /// `−e2/r`.
    #[serde(alias = "coulomb")]
    Coulomb { e2: T },
    /// `V0 (r/r0 − r0/r)²`.
    #[serde(alias = "pseudoharmonic")]
    Pseudoharmonic {
        #[serde(rename = "V0")]
        v0: T,
        r0: T,
    },
    /// Radial part `alpha/r + lambda/r²`, where `lambda` is the full angular
    /// separation constant.
    #[serde(alias = "noncentral_radial", alias = "noncentral")]
    NoncentralRadial { alpha: T, lambda: T },
    /// `V1/(1 + η e^{−2ax}) − V2 η e^{−2ax}/(1 + η e^{−2ax})²` on the line.
    #[serde(alias = "deformed_rosen_morse", alias = "rosen_morse")]
    DeformedRosenMorse {
        #[serde(rename = "V1")]
        v1: T,
        #[serde(rename = "V2")]
        v2: T,
        a: T,
        eta: T,
    },
    /// `−V1/(1 + e^{ax}) − V2 e^{ax}/(1 + e^{ax})²` on the line.
    #[serde(alias = "woods_saxon")]
    WoodsSaxon {
        #[serde(rename = "V1")]
        v1: T,
        #[serde(rename = "V2")]
        v2: T,
        a: T,
    },
    /// `−4 V0 e^{−2ax}/(1 + η e^{−2ax})²` on the line.
    #[serde(alias = "poschl_teller")]
    PoschlTeller {
        #[serde(rename = "V0")]
        v0: T,
        a: T,
        eta: T,
    },
}

/// Family tag without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    GeneralizedMorse,
    Mie,
    KratzerFues,
    Coulomb,
    Pseudoharmonic,
    NoncentralRadial,
    DeformedRosenMorse,
    WoodsSaxon,
    PoschlTeller,
}

/// One parameter of a family: name as used in configs, and its unit kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamInfo {
    pub name: &'static str,
    pub unit: &'static str,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::GeneralizedMorse,
        Family::Mie,
        Family::KratzerFues,
        Family::Coulomb,
        Family::Pseudoharmonic,
        Family::NoncentralRadial,
        Family::DeformedRosenMorse,
        Family::WoodsSaxon,
        Family::PoschlTeller,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GeneralizedMorse => "GeneralizedMorse",
            Family::Mie => "Mie",
            Family::KratzerFues => "KratzerFues",
            Family::Coulomb => "Coulomb",
            Family::Pseudoharmonic => "Pseudoharmonic",
            Family::NoncentralRadial => "NoncentralRadial",
            Family::DeformedRosenMorse => "DeformedRosenMorse",
            Family::WoodsSaxon => "WoodsSaxon",
            Family::PoschlTeller => "PoschlTeller",
        }
    }

    /// Case-insensitive lookup accepting the canonical name, snake case, or
    /// a short alias.
    pub fn parse(name: &str) -> Option<Family> {
        let key: String = name.chars().filter(|c| *c != '_' && *c != '-').collect::<String>().to_lowercase();
        let fam = match key.as_str() {
            "generalizedmorse" | "morse" => Family::GeneralizedMorse,
            "mie" => Family::Mie,
            "kratzerfues" | "kratzer" => Family::KratzerFues,
            "coulomb" => Family::Coulomb,
            "pseudoharmonic" => Family::Pseudoharmonic,
            "noncentralradial" | "noncentral" => Family::NoncentralRadial,
            "deformedrosenmorse" | "rosenmorse" => Family::DeformedRosenMorse,
            "woodssaxon" => Family::WoodsSaxon,
            "poschlteller" | "pöschlteller" => Family::PoschlTeller,
            _ => return None,
        };
        Some(fam)
    }

    pub fn params(self) -> &'static [ParamInfo] {
        const E: &str = "energy";
        const L: &str = "length";
        const INV_L: &str = "1/length";
        const EL: &str = "energy*length";
        const EL2: &str = "energy*length^2";
        const ONE: &str = "dimensionless";
        match self {
            Family::GeneralizedMorse => &[ParamInfo { name: "V1", unit: E }, ParamInfo { name: "V2", unit: E }, ParamInfo { name: "a", unit: INV_L }],
            Family::Mie => &[ParamInfo { name: "V0", unit: E }, ParamInfo { name: "a", unit: L }],
            Family::KratzerFues => &[ParamInfo { name: "De", unit: E }, ParamInfo { name: "re", unit: L }],
            Family::Coulomb => &[ParamInfo { name: "e2", unit: EL }],
            Family::Pseudoharmonic => &[ParamInfo { name: "V0", unit: E }, ParamInfo { name: "r0", unit: L }],
            Family::NoncentralRadial => &[ParamInfo { name: "alpha", unit: EL }, ParamInfo { name: "lambda", unit: EL2 }],
            Family::DeformedRosenMorse => &[ParamInfo { name: "V1", unit: E }, ParamInfo { name: "V2", unit: E }, ParamInfo { name: "a", unit: INV_L }, ParamInfo { name: "eta", unit: ONE }],
            Family::WoodsSaxon => &[ParamInfo { name: "V1", unit: E }, ParamInfo { name: "V2", unit: E }, ParamInfo { name: "a", unit: INV_L }],
            Family::PoschlTeller => &[ParamInfo { name: "V0", unit: E }, ParamInfo { name: "a", unit: INV_L }, ParamInfo { name: "eta", unit: ONE }],
        }
    }

    pub fn branch(self) -> Branch {
        match self {
            Family::DeformedRosenMorse | Family::WoodsSaxon | Family::PoschlTeller => Branch::Jacobi,
            _ => Branch::Laguerre,
        }
    }

    /// Radial (3-D, `r > 0`) rather than one-dimensional on the whole line.
    pub fn is_radial(self) -> bool {
        !matches!(
            self,
            Family::GeneralizedMorse | Family::DeformedRosenMorse | Family::WoodsSaxon | Family::PoschlTeller
        )
    }

    /// Whether `l > 0` is accepted. The noncentral family carries its
    /// angular dependence in `lambda` instead.
    pub fn supports_l(self) -> bool {
        self.is_radial() && self != Family::NoncentralRadial
    }

    /// Build a spec from parameter values listed in [`Family::params`]
    /// order.
    pub fn with_values<T: Real>(self, v: &[T]) -> Result<PotentialSpec<T>> {
        let want = self.params().len();
        if v.len() != want {
            return Err(PotentialError::InvalidParameters {
                family: self.name(),
                reason: format!("expected {want} parameters, got {}", v.len()),
            });
        }
        let spec = match self {
            Family::GeneralizedMorse => PotentialSpec::GeneralizedMorse { v1: v[0], v2: v[1], a: v[2] },
            Family::Mie => PotentialSpec::Mie { v0: v[0], a: v[1] },
            Family::KratzerFues => PotentialSpec::KratzerFues { de: v[0], re: v[1] },
            Family::Coulomb => PotentialSpec::Coulomb { e2: v[0] },
            Family::Pseudoharmonic => PotentialSpec::Pseudoharmonic { v0: v[0], r0: v[1] },
            Family::NoncentralRadial => PotentialSpec::NoncentralRadial { alpha: v[0], lambda: v[1] },
            Family::DeformedRosenMorse => {
                PotentialSpec::DeformedRosenMorse { v1: v[0], v2: v[1], a: v[2], eta: v[3] }
            }
            Family::WoodsSaxon => PotentialSpec::WoodsSaxon { v1: v[0], v2: v[1], a: v[2] },
            Family::PoschlTeller => PotentialSpec::PoschlTeller { v0: v[0], a: v[1], eta: v[2] },
        };
        Ok(spec)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl<T: Real> PotentialSpec<T> {
    pub fn family(&self) -> Family {
        match self {
            PotentialSpec::GeneralizedMorse { .. } => Family::GeneralizedMorse,
            PotentialSpec::Mie { .. } => Family::Mie,
            PotentialSpec::KratzerFues { .. } => Family::KratzerFues,
            PotentialSpec::Coulomb { .. } => Family::Coulomb,
            PotentialSpec::Pseudoharmonic { .. } => Family::Pseudoharmonic,
            PotentialSpec::NoncentralRadial { .. } => Family::NoncentralRadial,
            PotentialSpec::DeformedRosenMorse { .. } => Family::DeformedRosenMorse,
            PotentialSpec::WoodsSaxon { .. } => Family::WoodsSaxon,
            PotentialSpec::PoschlTeller { .. } => Family::PoschlTeller,
        }
    }

    /// Parameter values in [`Family::params`] order.
    pub fn values(&self) -> Vec<T> {
        match *self {
            PotentialSpec::GeneralizedMorse { v1, v2, a } => vec![v1, v2, a],
            PotentialSpec::Mie { v0, a } => vec![v0, a],
            PotentialSpec::KratzerFues { de, re } => vec![de, re],
            PotentialSpec::Coulomb { e2 } => vec![e2],
            PotentialSpec::Pseudoharmonic { v0, r0 } => vec![v0, r0],
            PotentialSpec::NoncentralRadial { alpha, lambda } => vec![alpha, lambda],
            PotentialSpec::DeformedRosenMorse { v1, v2, a, eta } => vec![v1, v2, a, eta],
            PotentialSpec::WoodsSaxon { v1, v2, a } => vec![v1, v2, a],
            PotentialSpec::PoschlTeller { v0, a, eta } => vec![v0, a, eta],
        }
    }

    pub fn is_radial(&self) -> bool {
        self.family().is_radial()
    }

    /// Parameter invariants that do not depend on units.
    pub fn validate(&self) -> Result<()> {
        let family = self.family().name();
        let names = self.family().params();
        let values = self.values();
        for (info, v) in names.iter().zip(&values) {
            if !v.is_finite() {
                return Err(PotentialError::InvalidParameters { family, reason: format!("{} must be finite", info.name) });
            }
        }
        let positive: &[&str] = match self {
            PotentialSpec::GeneralizedMorse { .. } => &["V1", "V2", "a"],
            PotentialSpec::Mie { .. } => &["V0", "a"],
            PotentialSpec::KratzerFues { .. } => &["De", "re"],
            PotentialSpec::Coulomb { .. } => &["e2"],
            PotentialSpec::Pseudoharmonic { .. } => &["V0", "r0"],
            PotentialSpec::NoncentralRadial { .. } => &[],
            PotentialSpec::DeformedRosenMorse { .. } => &["V2", "a", "eta"],
            PotentialSpec::WoodsSaxon { .. } => &["V2", "a"],
            PotentialSpec::PoschlTeller { .. } => &["V0", "a", "eta"],
        };
        for (info, v) in names.iter().zip(&values) {
            if positive.contains(&info.name) && !(*v > T::zero()) {
                return Err(PotentialError::InvalidParameters {
                    family,
                    reason: format!("{} must be > 0, got {v}", info.name),
                });
            }
        }
        if let PotentialSpec::NoncentralRadial { alpha, .. } = *self {
            if !(alpha < T::zero()) {
                return Err(PotentialError::InvalidParameters {
                    family,
                    reason: format!("alpha must be < 0 (attractive), got {alpha}"),
                });
            }
        }
        Ok(())
    }

    /// Full precondition check for a solve: parameters, units, and `l`.
    pub fn check(&self, l: usize, units: &UnitsConfig<T>) -> Result<()> {
        self.validate()?;
        units.validate()?;
        let family = self.family();
        if l > 0 && !family.supports_l() {
            return Err(PotentialError::UnsupportedAngularMomentum { family: family.name(), l });
        }
        if let PotentialSpec::NoncentralRadial { lambda, .. } = *self {
            // Λ3 = 2mλ/ħ² must exceed −1/4 for a real regular exponent
            if !(units.two_m_over_hbar2() * lambda > T::lit(-0.25)) {
                return Err(PotentialError::InvalidParameters {
                    family: family.name(),
                    reason: format!("lambda must exceed -hbar^2/(8m), got {lambda}"),
                });
            }
        }
        Ok(())
    }

    fn domain_check(&self, x: T) -> Result<()> {
        let bad = !x.is_finite() || (self.is_radial() && !(x > T::zero()));
        if bad {
            return Err(PotentialError::OutOfDomain { family: self.family().name(), x: x.as_f64() });
        }
        Ok(())
    }

    /// `V(x)`; radial families need `x = r > 0`.
    pub fn potential_value(&self, x: T) -> Result<T> {
        self.domain_check(x)?;
        Ok(self.potential_unchecked(x))
    }

    pub(crate) fn potential_unchecked(&self, x: T) -> T {
        let one = T::one();
        let two = T::two();
        match *self {
            PotentialSpec::GeneralizedMorse { v1, v2, a } => {
                let u = (-a * x).exp();
                v1 * u * u - v2 * u
            }
            PotentialSpec::Mie { v0, a } => {
                let t = a / x;
                v0 * (T::half() * t * t - t)
            }
            PotentialSpec::KratzerFues { de, re } => {
                let t = (x - re) / x;
                de * t * t
            }
            PotentialSpec::Coulomb { e2 } => -e2 / x,
            PotentialSpec::Pseudoharmonic { v0, r0 } => {
                let t = x / r0 - r0 / x;
                v0 * t * t
            }
            PotentialSpec::NoncentralRadial { alpha, lambda } => alpha / x + lambda / (x * x),
            PotentialSpec::DeformedRosenMorse { v1, v2, a, eta } => {
                let (s, w) = logistic_parts(two * a, eta, x);
                v1 * w - v2 * eta * s * w
            }
            PotentialSpec::WoodsSaxon { v1, v2, a } => {
                let (s, w) = logistic_parts(a, one, x);
                -v1 * s - v2 * s * w
            }
            PotentialSpec::PoschlTeller { v0, a, eta } => {
                let (s, w) = logistic_parts(two * a, eta, x);
                -T::lit(4.0) * v0 * s * w
            }
        }
    }

    /// `V` plus the centrifugal term `ħ² l(l+1)/(2m r²)` for radial
    /// families. Not checked: callers validate first.
    pub fn effective_potential(&self, l: usize, units: &UnitsConfig<T>, x: T) -> T {
        let v = self.potential_unchecked(x);
        if self.is_radial() && l > 0 {
            let ll = T::of_usize(l * (l + 1));
            v + ll / (units.two_m_over_hbar2() * x * x)
        } else {
            v
        }
    }

    /// Limit of `V` where bound states must decay, the lower of the two
    /// ends on the line. `None` for the confining pseudoharmonic well.
    pub fn asymptote(&self) -> Option<T> {
        match *self {
            PotentialSpec::Pseudoharmonic { .. } => None,
            PotentialSpec::KratzerFues { de, .. } => Some(de),
            PotentialSpec::DeformedRosenMorse { v1, .. } => Some(v1.min(T::zero())),
            PotentialSpec::WoodsSaxon { v1, .. } => Some((-v1).min(T::zero())),
            _ => Some(T::zero()),
        }
    }
}

/// For `s = e^{−kx}/(1 + η e^{−kx})`, returns `(s, 1 − ηs)` without
/// overflow at either end.
fn logistic_parts<T: Real>(k: T, eta: T, x: T) -> (T, T) {
    let t = eta.ln() - k * x;
    let ln_w = -crate::scalar::softplus(t);
    let ln_s = -k * x + ln_w;
    (ln_s.exp(), ln_w.exp())
}
