//! Jacobi and associated Laguerre polynomials.
//!
//! Production evaluation is by forward three-term recurrence. The explicit
//! finite sums are kept next to them as independent oracles for tests.

use thiserror::Error;

use crate::scalar::Real;

/// Largest degree the recurrences accept.
pub const MAX_DEGREE: usize = 1000;
/// Largest degree the explicit-sum oracles accept.
pub const MAX_SUM_DEGREE: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("degree {n} exceeds the limit {limit}")]
    DegreeOverflow { n: usize, limit: usize },
    #[error("Jacobi recurrence is singular at degree {n} for alpha + beta = {sum}")]
    SingularRecurrence { n: usize, sum: f64 },
    #[error("query carries {found} parameters, {expected} evaluation requested")]
    WrongFamily { expected: &'static str, found: &'static str },
}

pub type Result<T, E = SpecialError> = std::result::Result<T, E>;

/// Parameters of the polynomial family being evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolynomialParams<T> {
    Jacobi { alpha: T, beta: T },
    Laguerre { k: T },
}

/// Degree, family parameters and argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolynomialQuery<T> {
    pub n: usize,
    pub params: PolynomialParams<T>,
    pub z: T,
}

impl<T: Real> PolynomialQuery<T> {
    pub fn jacobi(n: usize, alpha: T, beta: T, z: T) -> Self {
        Self { n, params: PolynomialParams::Jacobi { alpha, beta }, z }
    }

    pub fn laguerre(n: usize, k: T, z: T) -> Self {
        Self { n, params: PolynomialParams::Laguerre { k }, z }
    }

    /// Whether the orthogonality weight is integrable (`α, β > −1` or `k > −1`).
    pub fn has_orthogonality_weight(&self) -> bool {
        let m1 = -T::one();
        match self.params {
            PolynomialParams::Jacobi { alpha, beta } => alpha > m1 && beta > m1,
            PolynomialParams::Laguerre { k } => k > m1,
        }
    }

    fn family(&self) -> &'static str {
        match self.params {
            PolynomialParams::Jacobi { .. } => "Jacobi",
            PolynomialParams::Laguerre { .. } => "Laguerre",
        }
    }

    fn jacobi_params(&self) -> Result<(T, T)> {
        match self.params {
            PolynomialParams::Jacobi { alpha, beta } => Ok((alpha, beta)),
            _ => Err(SpecialError::WrongFamily { expected: "Jacobi", found: self.family() }),
        }
    }

    fn laguerre_param(&self) -> Result<T> {
        match self.params {
            PolynomialParams::Laguerre { k } => Ok(k),
            _ => Err(SpecialError::WrongFamily { expected: "Laguerre", found: self.family() }),
        }
    }
}

fn check_degree(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(SpecialError::DegreeOverflow { n, limit })
    } else {
        Ok(())
    }
}

/// `P_n^(α,β)(z)` by the forward recurrence
///
/// ```text
/// 2m(m+α+β)(2m+α+β−2) P_m = (2m+α+β−1)[(2m+α+β)(2m+α+β−2) z + α² − β²] P_{m−1}
///                          − 2(m+α−1)(m+β−1)(2m+α+β) P_{m−2}
/// ```
///
/// seeded with `P_0 = 1`, `P_1 = (α+1) + (α+β+2)(z−1)/2`. Any real `α`, `β`
/// is accepted; the handful of parameter sums that zero the leading
/// coefficient return [`SpecialError::SingularRecurrence`].
pub fn jacobi_eval<T: Real>(q: &PolynomialQuery<T>) -> Result<T> {
    let (alpha, beta) = q.jacobi_params()?;
    jacobi_p(q.n, alpha, beta, q.z)
}

pub fn jacobi_p<T: Real>(n: usize, alpha: T, beta: T, z: T) -> Result<T> {
    check_degree(n, MAX_DEGREE)?;
    let one = T::one();
    let two = T::two();
    let mut prev = one;
    if n == 0 {
        return Ok(prev);
    }
    let ab = alpha + beta;
    let mut cur = (alpha + one) + (ab + two) * (z - one) * T::half();
    for m in 2..=n {
        let mf = T::of_usize(m);
        let s = two * mf + ab;
        let a1 = two * mf * (mf + ab) * (s - two);
        if a1 == T::zero() {
            return Err(SpecialError::SingularRecurrence { n: m, sum: ab.as_f64() });
        }
        let a2 = (s - one) * (s * (s - two) * z + alpha * alpha - beta * beta);
        let a3 = two * (mf + alpha - one) * (mf + beta - one) * s;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `L_n^k(z)` by `(m+1) L_{m+1} = (2m+1+k−z) L_m − (m+k) L_{m−1}`, seeded
/// with `L_0 = 1`, `L_1 = 1 + k − z`.
pub fn laguerre_eval<T: Real>(q: &PolynomialQuery<T>) -> Result<T> {
    let k = q.laguerre_param()?;
    laguerre_l(q.n, k, q.z)
}

pub fn laguerre_l<T: Real>(n: usize, k: T, z: T) -> Result<T> {
    check_degree(n, MAX_DEGREE)?;
    let one = T::one();
    let mut prev = one;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = one + k - z;
    for m in 1..n {
        let mf = T::of_usize(m);
        let next = ((T::two() * mf + one + k - z) * cur - (mf + k) * prev) / (mf + one);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Generalized binomial coefficient `C(x, j) = Π_{i=1..j} (x − j + i) / i`,
/// i.e. `Γ(x+1) / (Γ(j+1) Γ(x−j+1))` written as a product of ratios.
pub fn generalized_binomial<T: Real>(x: T, j: usize) -> T {
    let jf = T::of_usize(j);
    (1..=j).fold(T::one(), |acc, i| {
        let i = T::of_usize(i);
        acc * (x - jf + i) / i
    })
}

/// Explicit sum
/// `P_n^(α,β)(z) = Σ_m C(n+α, n−m) C(n+β, m) ((z−1)/2)^m ((z+1)/2)^(n−m)`.
pub fn jacobi_sum_oracle<T: Real>(q: &PolynomialQuery<T>) -> Result<T> {
    let (alpha, beta) = q.jacobi_params()?;
    check_degree(q.n, MAX_SUM_DEGREE)?;
    let n = q.n;
    let nf = T::of_usize(n);
    let minus = (q.z - T::one()) * T::half();
    let plus = (q.z + T::one()) * T::half();
    Ok((0..=n)
        .map(|m| {
            generalized_binomial(nf + alpha, n - m)
                * generalized_binomial(nf + beta, m)
                * minus.powi(m as i32)
                * plus.powi((n - m) as i32)
        })
        .sum())
}

/// Explicit sum `L_n^k(z) = Σ_m (−1)^m C(n+k, n−m) z^m / m!`.
pub fn laguerre_sum_oracle<T: Real>(q: &PolynomialQuery<T>) -> Result<T> {
    let k = q.laguerre_param()?;
    check_degree(q.n, MAX_SUM_DEGREE)?;
    let n = q.n;
    let nf = T::of_usize(n);
    let mut term_z = T::one();
    let mut total = T::zero();
    for m in 0..=n {
        if m > 0 {
            term_z = term_z * (-q.z) / T::of_usize(m);
        }
        total = total + generalized_binomial(nf + k, n - m) * term_z;
    }
    Ok(total)
}

/// Finite-difference step used by [`ode_residual_check`].
pub const ODE_STEP: f64 = 1e-5;

/// Sign of the `z` term in the Jacobi first-derivative coefficient
/// `β − α ∓ (α+β+2) z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiDriftSign {
    /// `β − α − (α+β+2) z`, the operator the recurrence polynomials satisfy.
    Standard,
    /// `β − α + (α+β+2) z`.
    Flipped,
}

/// `y(z)` and the central differences `[y(z+h) − y(z−h)]/2h`,
/// `[y(z+h) − 2y(z) + y(z−h)]/h²` of a polynomial given by
/// `y_m = (a_m + b_m z) y_{m−1} − c_m y_{m−2}`, `y_0 = 1`, `y_1 = a_1 + b_1 z`.
///
/// The differences are carried through the recurrence instead of formed
/// from three nearly equal values, so they keep full relative precision.
fn central_differences<T: Real>(
    n: usize,
    seed: (T, T),
    coeffs: impl Fn(usize) -> Result<(T, T, T)>,
    z: T,
    h: T,
) -> Result<(T, T, T)> {
    let two = T::two();
    // (y, y(z+h) − y(z−h), y(z+h) − 2y(z) + y(z−h))
    let mut prev = (T::one(), T::zero(), T::zero());
    let mut cur = (seed.0 + seed.1 * z, two * seed.1 * h, T::zero());
    if n == 0 {
        cur = prev;
    }
    for m in 2..=n {
        let (a, b, c) = coeffs(m)?;
        let g = a + b * z;
        let bh = b * h;
        let next = (
            g * cur.0 - c * prev.0,
            g * cur.1 + bh * (two * cur.0 + cur.2) - c * prev.1,
            g * cur.2 + bh * cur.1 - c * prev.2,
        );
        prev = cur;
        cur = next;
    }
    Ok((cur.0, cur.1 / (two * h), cur.2 / (h * h)))
}

/// `|(1−z²) y'' + [β−α−(α+β+2)z] y' + n(n+α+β+1) y|` for Jacobi queries and
/// `|z y'' + (k+1−z) y' + n y|` for Laguerre queries, with the derivatives
/// taken by second-order central differences of the recurrence values.
pub fn ode_residual_check<T: Real>(q: &PolynomialQuery<T>) -> Result<T> {
    match q.params {
        PolynomialParams::Jacobi { .. } => jacobi_ode_residual(q, JacobiDriftSign::Standard),
        PolynomialParams::Laguerre { k } => {
            let nf = T::of_usize(q.n);
            check_degree(q.n, MAX_DEGREE)?;
            let one = T::one();
            let coeffs = |m: usize| {
                let mf = T::of_usize(m);
                Ok(((T::two() * mf - one + k) / mf, -one / mf, (mf - one + k) / mf))
            };
            let (y, d1, d2) = central_differences(q.n, (one + k, -one), coeffs, q.z, T::lit(ODE_STEP))?;
            Ok((q.z * d2 + (k + T::one() - q.z) * d1 + nf * y).abs())
        }
    }
}

/// Jacobi ODE residual with an explicit choice of drift sign, so both
/// readings of the operator can be compared.
pub fn jacobi_ode_residual<T: Real>(q: &PolynomialQuery<T>, sign: JacobiDriftSign) -> Result<T> {
    let (alpha, beta) = q.jacobi_params()?;
    let one = T::one();
    let nf = T::of_usize(q.n);
    check_degree(q.n, MAX_DEGREE)?;
    let two = T::two();
    let ab = alpha + beta;
    let coeffs = |m: usize| {
        let mf = T::of_usize(m);
        let s = two * mf + ab;
        let a1 = two * mf * (mf + ab) * (s - two);
        if a1 == T::zero() {
            return Err(SpecialError::SingularRecurrence { n: m, sum: ab.as_f64() });
        }
        let a3 = two * (mf + alpha - one) * (mf + beta - one) * s;
        Ok(((s - one) * (alpha * alpha - beta * beta) / a1, (s - one) * s * (s - two) / a1, a3 / a1))
    };
    let seed = ((alpha + one) - (ab + two) * T::half(), (ab + two) * T::half());
    let (y, d1, d2) = central_differences(q.n, seed, coeffs, q.z, T::lit(ODE_STEP))?;
    let slope = (alpha + beta + T::two()) * q.z;
    let drift = match sign {
        JacobiDriftSign::Standard => beta - alpha - slope,
        JacobiDriftSign::Flipped => beta - alpha + slope,
    };
    Ok(((one - q.z * q.z) * d2 + drift * d1 + nf * (nf + alpha + beta + one) * y).abs())
}
