use super::{NumericsError, Result};
use crate::scalar::Real;

/// Composite Simpson rule on uniformly spaced samples. An even sample count
/// is handled by closing the last panel with the trapezoid rule.
pub fn simpson_integrate<T: Real>(samples: &[T], h: T) -> Result<T> {
    let len = samples.len();
    if len < 3 {
        return Err(NumericsError::TooFewSamples(len));
    }
    let odd_len = if len % 2 == 1 { len } else { len - 1 };
    let mut odd = T::zero();
    let mut even = T::zero();
    for (i, &f) in samples[1..odd_len - 1].iter().enumerate() {
        if i % 2 == 0 {
            odd = odd + f;
        } else {
            even = even + f;
        }
    }
    let mut total =
        (samples[0] + samples[odd_len - 1] + T::lit(4.0) * odd + T::two() * even) * h / T::lit(3.0);
    if odd_len < len {
        total = total + (samples[len - 2] + samples[len - 1]) * h * T::half();
    }
    Ok(total)
}
