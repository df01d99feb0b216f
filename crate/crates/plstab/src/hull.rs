//! Upper concave envelope of points in the (x, log h) plane.

use crate::density::LogConcaveFunction;
use crate::error::{Error, Result};

/// Smallest log-concave function dominating the given `(x, ln h(x))` samples,
/// optionally extended by exponential tails.
///
/// The envelope is the upper convex hull of the point set (monotone chain).
/// When a tail slope is given, leading/trailing vertices that fall below the
/// tail line through their neighbor are absorbed, exactly as in support
/// function arithmetic, so the result is again a valid function of this crate.
pub fn log_concave_hull(
    points: &[(f64, f64)],
    left_tail_slope: Option<f64>,
    right_tail_slope: Option<f64>,
) -> Result<LogConcaveFunction> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.iter().any(|(x, l)| !x.is_finite() || !l.is_finite()) {
        return Err(Error::ParseError("non-finite hull input point".into()));
    }
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // Equal abscissas: keep only the highest value.
    let mut dedup: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for p in pts {
        match dedup.last_mut() {
            Some(last) if last.0 == p.0 => last.1 = last.1.max(p.1),
            _ => dedup.push(p),
        }
    }

    // Monotone chain, upper hull: pop while the middle point is not strictly
    // above the segment (collinear points are dropped).
    let mut chain: Vec<(f64, f64)> = Vec::with_capacity(dedup.len());
    for p in dedup {
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= 0.0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }

    // Absorb vertices dominated by a tail line.
    if let Some(s) = left_tail_slope {
        while chain.len() >= 2 {
            let slope = (chain[1].1 - chain[0].1) / (chain[1].0 - chain[0].0);
            if slope > s {
                chain.remove(0);
            } else {
                break;
            }
        }
    }
    if let Some(s) = right_tail_slope {
        while chain.len() >= 2 {
            let n = chain.len();
            let slope = (chain[n - 1].1 - chain[n - 2].1) / (chain[n - 1].0 - chain[n - 2].0);
            if slope < s {
                chain.pop();
            } else {
                break;
            }
        }
    }

    let (knots, logvals) = chain.into_iter().unzip();
    LogConcaveFunction::new(knots, logvals, left_tail_slope, right_tail_slope)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concave_chain_is_reproduced() {
        let pts = [(0.0, 0.0), (1.0, 1.0), (2.0, 1.5), (3.0, 1.2)];
        let h = log_concave_hull(&pts, None, None).unwrap();
        assert_eq!(h.knots(), &[0.0, 1.0, 2.0, 3.0]);
        assert_eq!(h.logvals(), &[0.0, 1.0, 1.5, 1.2]);
    }

    #[test]
    fn two_boxes_hull_is_constant() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)];
        let h = log_concave_hull(&pts, None, None).unwrap();
        assert_eq!(h.knots(), &[0.0, 3.0]);
        assert_eq!(h.eval(1.7), 1.0);
    }

    #[test]
    fn dominated_point_is_excluded() {
        let pts = [(0.0, 0.0), (1.0, 1.0), (2.0, 0.0), (1.0, 0.0)];
        let h = log_concave_hull(&pts, None, None).unwrap();
        assert_eq!(h.knots(), &[0.0, 1.0, 2.0]);
        assert_eq!(h.logvals(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn hull_dominates_inputs_and_is_idempotent() {
        let pts = [(-1.0, -3.0), (-0.2, 0.4), (0.0, 0.1), (0.5, 0.3), (2.0, -2.0), (2.5, -5.0)];
        let h = log_concave_hull(&pts, None, None).unwrap();
        for (x, l) in pts {
            assert!(h.log_at(x) >= l - 1e-12);
        }
        let verts: Vec<(f64, f64)> = h
            .knots()
            .iter()
            .copied()
            .zip(h.logvals().iter().copied())
            .collect();
        let h2 = log_concave_hull(&verts, None, None).unwrap();
        assert_eq!(h.knots(), h2.knots());
        assert_eq!(h.logvals(), h2.logvals());
    }

    #[test]
    fn shallow_tail_absorbs_leading_vertices() {
        // First chord slope is 2; a left tail of slope 0.5 dominates (0, 0).
        let pts = [(0.0, 0.0), (1.0, 2.0), (2.0, 1.0)];
        let h = log_concave_hull(&pts, Some(0.5), Some(-1.0)).unwrap();
        assert_eq!(h.knots(), &[1.0, 2.0]);
        assert!(h.log_at(0.0) >= 0.0);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(log_concave_hull(&[], None, None), Err(Error::EmptyInput)));
    }
}
