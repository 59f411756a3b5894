use serde::{Deserialize, Serialize};

use super::fd::OracleSpectrum;
use crate::potentials::BoundState;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelComparison<T> {
    pub n: usize,
    pub analytic: T,
    pub oracle: Option<T>,
    pub abs_diff: Option<T>,
    pub rel_diff: Option<T>,
    pub pass: bool,
}

/// Number of bound levels on each side when they disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDiscrepancy {
    pub analytic: usize,
    pub oracle: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport<T> {
    pub levels: Vec<LevelComparison<T>>,
    pub worst_rel_diff: T,
    pub rel_tol: T,
    pub count_discrepancy: Option<CountDiscrepancy>,
    pub grid_adequate: bool,
    pub richardson_shift: T,
    pub pass: bool,
}

impl<T: Real> VerificationReport<T> {
    /// Record a count mismatch found after the fact (e.g. an exhausted
    /// analytic spectrum checked against the oracle's bound count).
    pub fn flag_count(&mut self, discrepancy: Option<CountDiscrepancy>) {
        if discrepancy.is_some() {
            self.count_discrepancy = discrepancy;
            self.pass = false;
        }
    }
}

/// Pair analytic and oracle levels by index. Missing oracle levels are a
/// count discrepancy, never a panic.
pub fn compare_spectra<T: Real>(
    analytic: &[BoundState<T>],
    oracle: &OracleSpectrum<T>,
    rel_tol: T,
) -> VerificationReport<T> {
    let mut worst = T::zero();
    let levels: Vec<LevelComparison<T>> = analytic
        .iter()
        .enumerate()
        .map(|(i, state)| {
            let oracle_e = oracle.eigenvalues.get(i).copied();
            let abs_diff = oracle_e.map(|o| (o - state.energy).abs());
            let rel_diff = abs_diff.map(|d| d / state.energy.abs().max(T::min_positive_value()));
            if let Some(r) = rel_diff {
                worst = worst.max(r);
            }
            LevelComparison {
                n: state.n,
                analytic: state.energy,
                oracle: oracle_e,
                abs_diff,
                rel_diff,
                pass: rel_diff.is_some_and(|r| r <= rel_tol),
            }
        })
        .collect();
    let count_discrepancy = (oracle.eigenvalues.len() < analytic.len())
        .then_some(CountDiscrepancy { analytic: analytic.len(), oracle: oracle.eigenvalues.len() });
    let pass = !levels.is_empty()
        && levels.iter().all(|l| l.pass)
        && count_discrepancy.is_none()
        && oracle.grid_adequate;
    VerificationReport {
        levels,
        worst_rel_diff: worst,
        rel_tol,
        count_discrepancy,
        grid_adequate: oracle.grid_adequate,
        richardson_shift: oracle.richardson_shift,
        pass,
    }
}

/// When the analytic spectrum is known to be complete (`analytic_total`
/// levels in all), the oracle must find exactly as many bound levels.
pub fn bound_count_discrepancy<T: Real>(analytic_total: usize, oracle: &OracleSpectrum<T>) -> Option<CountDiscrepancy> {
    (oracle.eigenvalues.len() != analytic_total)
        .then_some(CountDiscrepancy { analytic: analytic_total, oracle: oracle.eigenvalues.len() })
}
