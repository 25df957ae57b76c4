//! Evaluation grids. Endpoints are always hit exactly and points ascend.

use crate::error::{domain, Result};

/// `points` equally spaced values from `a` to `b`.
pub fn uniform(a: f64, b: f64, points: usize) -> Result<Vec<f64>> {
    check(a, b, points)?;
    let step = (b - a) / (points - 1) as f64;
    let mut xs: Vec<f64> = (0..points).map(|i| a + step * i as f64).collect();
    xs[points - 1] = b;
    Ok(xs)
}

/// `points` values in `[x_min, x_max]` whose distances from `-1` are
/// geometrically spaced, so the grid crowds toward `x = -1`.
///
/// Requires `x_max < -1`.
pub fn log_spaced_below_minus_one(x_min: f64, x_max: f64, points: usize) -> Result<Vec<f64>> {
    check(x_min, x_max, points)?;
    if x_max >= -1.0 {
        return Err(domain(format!("log spacing needs x_max < -1, got {x_max}")));
    }
    let far = (-1.0 - x_min).ln();
    let near = (-1.0 - x_max).ln();
    let step = (near - far) / (points - 1) as f64;
    let mut xs: Vec<f64> = (0..points)
        .map(|i| -1.0 - (far + step * i as f64).exp())
        .collect();
    xs[0] = x_min;
    xs[points - 1] = x_max;
    Ok(xs)
}

fn check(a: f64, b: f64, points: usize) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(domain(format!("grid needs finite a < b, got [{a}, {b}]")));
    }
    if points < 2 {
        return Err(domain(format!(
            "grid needs at least 2 points, got {points}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_hits_endpoints() {
        let xs = uniform(-1.0, 1.0, 5).unwrap();
        assert_eq!(xs, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(uniform(-4.0, -1.01, 2).unwrap(), vec![-4.0, -1.01]);
    }

    #[test]
    fn log_grid_ascends_and_crowds_near_minus_one() {
        let xs = log_spaced_below_minus_one(-1e4, -1.0 - 1e-6, 400).unwrap();
        assert_eq!(xs.len(), 400);
        assert_eq!(xs[0], -1e4);
        assert_eq!(xs[399], -1.0 - 1e-6);
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        assert!(xs.iter().filter(|&&x| x > -1.01).count() > 100);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(uniform(1.0, 1.0, 10).is_err());
        assert!(uniform(0.0, 1.0, 1).is_err());
        assert!(log_spaced_below_minus_one(-3.0, -0.5, 10).is_err());
    }
}
