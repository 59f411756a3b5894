use crate::scalar::Real;

/// Golden-section search for a minimum of `f` on `[a, b]`; returns
/// `(x_min, f(x_min))` once the bracket is narrower than `tol`.
pub fn golden_section<T: Real>(f: impl Fn(T) -> T, mut a: T, mut b: T, tol: T) -> (T, T) {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::half();
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..500 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    let x = (a + b) * T::half();
    (x, f(x))
}

/// Coarse scan of `f` over `xs` followed by golden-section refinement around
/// the best sample. Returns `None` when the best sample sits on the first or
/// last point (no interior minimum in the scanned range).
pub fn sampled_minimum<T: Real>(f: impl Fn(T) -> T, xs: &[T]) -> Option<(T, T)> {
    let (best, _) = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| (i, f(x)))
        .filter(|(_, v)| v.is_finite())
        .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite values compare"))?;
    if best == 0 || best + 1 == xs.len() {
        return None;
    }
    let (a, b) = (xs[best - 1], xs[best + 1]);
    let tol = (b - a).abs() * T::epsilon().sqrt();
    Some(golden_section(&f, a, b, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola() {
        let (x, fx) = golden_section(|x: f64| (x - 1.25).powi(2) - 3.0, -4.0, 7.0, 1e-10);
        assert!((x - 1.25).abs() < 1e-7);
        assert!((fx + 3.0).abs() < 1e-14);
    }

    #[test]
    fn morse_minimum() {
        let (v1, v2, a) = (100.0f64, 20.0, 1.0);
        let v = |x: f64| v1 * (-2.0 * a * x).exp() - v2 * (-a * x).exp();
        let xs: Vec<f64> = (0..=400).map(|i| -5.0 + 0.05 * i as f64).collect();
        let (x, fx) = sampled_minimum(v, &xs).unwrap();
        assert!((x - (2.0 * v1 / v2).ln() / a).abs() < 1e-6);
        assert!((fx + v2 * v2 / (4.0 * v1)).abs() < 1e-12);
    }

    #[test]
    fn edge_minimum_is_rejected() {
        let xs: Vec<f64> = (1..100).map(|i| i as f64 * 0.1).collect();
        assert!(sampled_minimum(|r: f64| -1.0 / r, &xs).is_none());
    }
}
