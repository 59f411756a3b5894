use crate::scalar::Real;

/// Magnitude floor for Sturm pivots (`f64`); narrower types use their
/// smallest positive normal value.
pub const PIVOT_FLOOR: f64 = 1e-300;

fn pivot_floor<T: Real>() -> T {
    T::from_f64(PIVOT_FLOOR).filter(|v| *v > T::zero()).unwrap_or_else(T::min_positive_value)
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `lambda`.
pub fn sturm_count<T: Real>(diag: &[T], offdiag: &[T], lambda: T) -> usize {
    assert_eq!(offdiag.len() + 1, diag.len().max(1), "offdiag must be one shorter than diag");
    let floor = pivot_floor::<T>();
    let mut count = 0;
    let mut q = T::one();
    for (i, &d) in diag.iter().enumerate() {
        q = if i == 0 { d - lambda } else { d - lambda - offdiag[i - 1] * offdiag[i - 1] / q };
        if q.abs() < floor {
            q = -floor;
        }
        if q < T::zero() {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
fn gershgorin<T: Real>(diag: &[T], offdiag: &[T]) -> (T, T) {
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for (i, &d) in diag.iter().enumerate() {
        let left = if i > 0 { offdiag[i - 1].abs() } else { T::zero() };
        let right = if i < offdiag.len() { offdiag[i].abs() } else { T::zero() };
        lo = lo.min(d - left - right);
        hi = hi.max(d + left + right);
    }
    (lo, hi)
}

/// The lowest `count` eigenvalues in increasing order, each bisected until
/// its bracket is narrower than `tol` (or adjacent floats).
pub fn tridiagonal_eigenvalues<T: Real>(diag: &[T], offdiag: &[T], count: usize, tol: T) -> Vec<T> {
    let count = count.min(diag.len());
    if count == 0 {
        return Vec::new();
    }
    let (glo, ghi) = gershgorin(diag, offdiag);
    let pad = (ghi - glo).abs().max(T::one()) * T::lit(1e-12);
    let (glo, ghi) = (glo - pad, ghi + pad);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // k-th eigenvalue: smallest λ with sturm_count(λ) > k
        let mut a = out.last().copied().unwrap_or(glo).max(glo);
        if sturm_count(diag, offdiag, a) > k {
            a = glo;
        }
        let mut b = ghi;
        while b - a > tol {
            let mid = a + (b - a) * T::half();
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diag, offdiag, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(a + (b - a) * T::half());
    }
    out
}

/// Eigenvector for the converged eigenvalue `lambda` by inverse iteration
/// (at most 20 tridiagonal solves). Returned with unit Euclidean norm and a
/// positive first significant component.
pub fn inverse_iteration<T: Real>(diag: &[T], offdiag: &[T], lambda: T) -> Vec<T> {
    let n = diag.len();
    let floor = pivot_floor::<T>();
    let shift = lambda + (lambda.abs().max(T::one())) * T::epsilon() * T::lit(16.0);
    let solve = |rhs: &[T]| -> Vec<T> {
        let mut c = vec![T::zero(); n];
        let mut y = vec![T::zero(); n];
        let mut denom = diag[0] - shift;
        for i in 0..n {
            if i > 0 {
                denom = diag[i] - shift - offdiag[i - 1] * c[i - 1];
            }
            if denom.abs() < floor {
                denom = floor;
            }
            if i + 1 < n {
                c[i] = offdiag[i] / denom;
            }
            let prev = if i > 0 { offdiag[i - 1] * y[i - 1] } else { T::zero() };
            y[i] = (rhs[i] - prev) / denom;
        }
        for i in (0..n.saturating_sub(1)).rev() {
            y[i] = y[i] - c[i] * y[i + 1];
        }
        y
    };
    let normalize = |v: &mut Vec<T>| {
        let norm = v.iter().map(|x| *x * *x).sum::<T>().sqrt();
        let first = v.iter().copied().find(|x| x.abs() > norm * T::lit(1e-6)).unwrap_or(T::one());
        let scale = if first < T::zero() { -norm } else { norm };
        for x in v.iter_mut() {
            *x = *x / scale;
        }
    };
    let mut v = vec![T::one(); n];
    normalize(&mut v);
    for _ in 0..20 {
        let mut next = solve(&v);
        normalize(&mut next);
        let change = next.iter().zip(&v).map(|(a, b)| (*a - *b).abs()).fold(T::zero(), T::max);
        v = next;
        if change < T::epsilon() * T::lit(100.0) {
            break;
        }
    }
    v
}
