//! Small dense least-squares solver used by the polynomial and line fits.
//!
//! Householder QR rather than normal equations: the fits must reproduce
//! exact polynomial data to ~1e-8 residual, and squaring the Vandermonde
//! condition number would eat most of that budget.

/// Solves `min ||A x - b||_2` for a column-major matrix with `rows >= cols`.
///
/// `a` is laid out column-major (`a[c * rows + r]`). Returns the `cols`
/// solution coefficients. Panics on dimension mismatch; callers own the
/// shape contract.
pub fn lstsq(a: &[f64], rows: usize, cols: usize, b: &[f64]) -> Vec<f64> {
    assert_eq!(a.len(), rows * cols, "matrix shape mismatch");
    assert_eq!(b.len(), rows, "rhs length mismatch");
    assert!(rows >= cols, "underdetermined system");

    let mut m = a.to_vec();
    let mut rhs = b.to_vec();

    // Householder reflections applied in place, column by column.
    for k in 0..cols {
        let mut norm = 0.0;
        for r in k..rows {
            norm += m[k * rows + r] * m[k * rows + r];
        }
        let norm = norm.sqrt();
        if norm == 0.0 {
            continue; // zero column: coefficient stays free, set to 0 below
        }
        let akk = m[k * rows + k];
        let alpha = if akk >= 0.0 { -norm } else { norm };
        // v = x - alpha * e_k, stored over the column
        m[k * rows + k] = akk - alpha;
        let mut vnorm2 = 0.0;
        for r in k..rows {
            vnorm2 += m[k * rows + r] * m[k * rows + r];
        }
        if vnorm2 == 0.0 {
            m[k * rows + k] = alpha;
            continue;
        }
        // Apply H = I - 2 v v^T / (v^T v) to remaining columns and rhs.
        for c in (k + 1)..cols {
            let mut dot = 0.0;
            for r in k..rows {
                dot += m[k * rows + r] * m[c * rows + r];
            }
            let s = 2.0 * dot / vnorm2;
            for r in k..rows {
                m[c * rows + r] -= s * m[k * rows + r];
            }
        }
        let mut dot = 0.0;
        for r in k..rows {
            dot += m[k * rows + r] * rhs[r];
        }
        let s = 2.0 * dot / vnorm2;
        for r in k..rows {
            rhs[r] -= s * m[k * rows + r];
        }
        // Store R's diagonal entry; the sub-diagonal part of the column is
        // no longer needed.
        m[k * rows + k] = alpha;
    }

    // Back substitution on the upper-triangular system R x = Q^T b.
    let mut x = vec![0.0; cols];
    for k in (0..cols).rev() {
        let mut s = rhs[k];
        for c in (k + 1)..cols {
            s -= m[c * rows + k] * x[c];
        }
        let diag = m[k * rows + k];
        x[k] = if diag != 0.0 { s / diag } else { 0.0 };
    }
    x
}

/// Least-squares polynomial fit of the given degree: returns `degree + 1`
/// coefficients, lowest order first.
pub fn polyfit(ts: &[f64], ys: &[f64], degree: usize) -> Vec<f64> {
    assert_eq!(ts.len(), ys.len());
    let rows = ts.len();
    let cols = degree + 1;
    let mut a = vec![0.0; rows * cols];
    for (r, &t) in ts.iter().enumerate() {
        let mut p = 1.0;
        for c in 0..cols {
            a[c * rows + r] = p;
            p *= t;
        }
    }
    lstsq(&a, rows, cols, ys)
}

/// Evaluates a polynomial (lowest-order coefficient first) via Horner.
pub fn polyval(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// Least-squares straight line `y = intercept + slope * t`.
pub fn linefit(ts: &[f64], ys: &[f64]) -> (f64, f64) {
    let c = polyfit(ts, ys, 1);
    (c[0], c[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_quadratic_recovered() {
        let ts: Vec<f64> = (0..10).map(|i| i as f64 / 9.0).collect();
        let ys: Vec<f64> = ts.iter().map(|&t| 2.0 - 3.0 * t + 0.5 * t * t).collect();
        let c = polyfit(&ts, &ys, 2);
        assert!((c[0] - 2.0).abs() < 1e-12);
        assert!((c[1] + 3.0).abs() < 1e-12);
        assert!((c[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn overdetermined_matches_normal_equations() {
        // Small noisy line; compare against the closed-form 2x2 solution.
        let ts = [0.0, 1.0, 2.0, 3.0, 4.0];
        let ys = [0.1, 0.9, 2.2, 2.8, 4.1];
        let (b0, b1) = linefit(&ts, &ys);
        let n = ts.len() as f64;
        let st: f64 = ts.iter().sum();
        let sy: f64 = ys.iter().sum();
        let stt: f64 = ts.iter().map(|t| t * t).sum();
        let sty: f64 = ts.iter().zip(&ys).map(|(t, y)| t * y).sum();
        let slope = (n * sty - st * sy) / (n * stt - st * st);
        let intercept = (sy - slope * st) / n;
        assert!((b1 - slope).abs() < 1e-12);
        assert!((b0 - intercept).abs() < 1e-12);
    }

    #[test]
    fn zero_variance_column_is_harmless() {
        // All ts equal: slope column is a multiple of the intercept column.
        let ts = [1.0, 1.0, 1.0];
        let ys = [2.0, 2.0, 2.0];
        let c = polyfit(&ts, &ys, 1);
        let fit0 = polyval(&c, 1.0);
        assert!((fit0 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn polyval_horner() {
        // 1 + 2t + 3t^2 at t = 2 -> 17
        assert_eq!(polyval(&[1.0, 2.0, 3.0], 2.0), 17.0);
    }
}
