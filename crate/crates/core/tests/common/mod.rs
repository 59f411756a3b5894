#![allow(dead_code)]

use specbound_core::potentials::{PotentialSpec, UnitsConfig};
use specbound_core::{Potential, Units};

pub fn units() -> Units {
    UnitsConfig::default()
}

/// One parameter set per family, in catalog order.
pub fn desk() -> Vec<Potential> {
    vec![
        PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 20.0, a: 1.0 },
        PotentialSpec::Mie { v0: 5.0, a: 1.0 },
        PotentialSpec::KratzerFues { de: 10.0, re: 1.0 },
        PotentialSpec::Coulomb { e2: 1.0 },
        PotentialSpec::Pseudoharmonic { v0: 2.0, r0: 1.0 },
        PotentialSpec::NoncentralRadial { alpha: -1.0, lambda: 0.0 },
        PotentialSpec::DeformedRosenMorse { v1: 4.0, v2: 8.0, a: 0.5, eta: 1.0 },
        PotentialSpec::WoodsSaxon { v1: 5.0, v2: 10.0, a: 1.0 },
        PotentialSpec::PoschlTeller { v0: 10.0, a: 1.0, eta: 1.0 },
    ]
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
