use crate::scalar::Real;

/// `1e-8 · max |ψ|`.
pub fn default_node_threshold<T: Real>(samples: &[T]) -> T {
    samples.iter().fold(T::zero(), |m, v| m.max(v.abs())) * T::lit(1e-8)
}

/// Number of strict sign changes between successive samples whose magnitude
/// exceeds `threshold`; samples at or below the threshold are skipped.
pub fn count_nodes<T: Real>(samples: &[T], threshold: T) -> usize {
    let mut last_sign: Option<bool> = None;
    let mut nodes = 0;
    for &v in samples {
        if !(v.abs() > threshold) {
            continue;
        }
        let positive = v > T::zero();
        if let Some(prev) = last_sign {
            if prev != positive {
                nodes += 1;
            }
        }
        last_sign = Some(positive);
    }
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let pos: Vec<f64> = (1..50).map(|i| i as f64).collect();
        assert_eq!(count_nodes(&pos, 1e-8), 0);

        let n = 1000;
        let sine: Vec<f64> =
            (1..n - 1).map(|i| (2.0 * std::f64::consts::PI * i as f64 / (n - 1) as f64).sin()).collect();
        assert_eq!(count_nodes(&sine, default_node_threshold(&sine)), 1);
    }

    #[test]
    fn noise_below_threshold_is_ignored() {
        let s = [1.0, 1e-12, -1e-12, 1e-12, 0.5, -0.3];
        assert_eq!(count_nodes(&s, 1e-8), 1);
    }
}
