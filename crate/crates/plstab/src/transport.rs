//! The monotone transportation map between two log-concave densities, the
//! quadratic transport cost, and the pointwise deficit extracted from the
//! transport proof of the product-measure midpoint inequality.
//!
//! `T` matches cumulative masses: `cdf_f(x) = cdf_g(T(x))`. Both cdf and
//! quantile are closed form, so `T`, its inverse `S`, and its derivative
//! `T'(x) = f(x)/g(T(x))` are evaluated exactly; only the cost and deficit
//! integrals need quadrature. Integration is split at the knots of `f` and the
//! preimages of the knots of `g`:
//!
//! * where both densities run in pure exponential tails, `T` is exactly affine
//!   and the integrals have closed forms;
//! * where exactly one side has a tail, the integral is transformed to mass
//!   coordinates (`u =` tail mass), where the deficit integrand becomes
//!   analytic in `v = sqrt(u)` and the cost integrand decays exponentially in
//!   `w = -ln u`; the truncated cost remainder is bounded analytically via the
//!   tail-moment estimate for log-concave densities and charged to the error
//!   budget;
//! * interior pieces use adaptive Simpson quadrature.

use crate::density::{l1_distance, LogConcaveDensity, LogConcaveFunction};
use crate::error::{Error, Result};
use crate::loglin;
use crate::quad::adaptive_simpson;

/// The monotone coupling between a source and a target density.
#[derive(Debug, Clone)]
pub struct TransportMap {
    source: LogConcaveDensity,
    target: LogConcaveDensity,
    /// target mass / source mass; both are 1 up to normalization roundoff.
    ratio: f64,
}

/// Builds the transport map for normalized `f` and `g`.
pub fn transport_map(f: &LogConcaveDensity, g: &LogConcaveDensity) -> TransportMap {
    TransportMap::new(f, g)
}

impl TransportMap {
    pub fn new(f: &LogConcaveDensity, g: &LogConcaveDensity) -> Self {
        Self {
            source: f.clone(),
            target: g.clone(),
            ratio: g.mass() / f.mass(),
        }
    }

    pub fn source(&self) -> &LogConcaveDensity {
        &self.source
    }

    pub fn target(&self) -> &LogConcaveDensity {
        &self.target
    }

    /// `T(x)`, routed through whichever tail keeps the mass well conditioned.
    pub fn forward(&self, x: f64) -> f64 {
        let lower = self.source.mass_below(x);
        if lower <= 0.5 * self.source.mass() {
            let q = (lower * self.ratio).max(f64::MIN_POSITIVE);
            self.target.quantile_lower_mass(q.min(self.target.mass()))
        } else {
            let upper = self.source.mass_above(x);
            let q = (upper * self.ratio).max(f64::MIN_POSITIVE);
            self.target.quantile_upper_mass(q.min(self.target.mass()))
        }
    }

    /// `S(y) = T^{-1}(y)`.
    pub fn inverse(&self, y: f64) -> f64 {
        let lower = self.target.mass_below(y);
        if lower <= 0.5 * self.target.mass() {
            let q = (lower / self.ratio).max(f64::MIN_POSITIVE);
            self.source.quantile_lower_mass(q.min(self.source.mass()))
        } else {
            let upper = self.target.mass_above(y);
            let q = (upper / self.ratio).max(f64::MIN_POSITIVE);
            self.source.quantile_upper_mass(q.min(self.source.mass()))
        }
    }

    /// `T'(x) = f(x) / g(T(x))`, the almost-everywhere derivative. At the
    /// countably many points where the one-sided derivatives differ this is
    /// the right-hand value.
    pub fn derivative(&self, x: f64) -> f64 {
        let num = self.source.pdf(x);
        let den = self.target.pdf(self.forward(x));
        if den == 0.0 {
            f64::INFINITY
        } else {
            num / den
        }
    }
}

/// The pointwise deficit `(alpha + beta t)/t^beta - 1` with `beta = 1 - alpha`,
/// nonnegative and zero exactly at `t = 1`. For `alpha = 1/2` this equals
/// `(1 - sqrt(t))^2 / (2 sqrt(t))`.
pub fn deficit_integrand(tprime: f64, alpha: f64) -> Result<f64> {
    if !(tprime > 0.0) {
        return Err(Error::NonpositiveDerivative(tprime));
    }
    assert!(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    Ok(deficit_raw(tprime, alpha))
}

/// Same as [`deficit_integrand`] without the argument checks; `t > 0` assumed.
#[inline]
fn deficit_raw(t: f64, alpha: f64) -> f64 {
    let beta = 1.0 - alpha;
    let d = t - 1.0;
    // (1 + beta d) e^{-beta ln(1+d)} - 1, assembled in log space so the
    // value near t = 1 (where it is ~ alpha beta d^2 / 2) keeps full precision.
    ((beta * d).ln_1p() - beta * d.ln_1p()).exp_m1().max(0.0)
}

/// Which treatment one side of the real line gets.
enum Side {
    /// Both supports bounded on this side; the adjacent segment is regular.
    Plain,
    /// Both densities have exponential tails: `T` is exactly affine beyond
    /// `boundary` and contributions are closed form.
    PureTail { boundary: f64, nu: f64, slope_ratio: f64, f_tail_slope: f64 },
    /// Exactly one side is unbounded; integrate in mass coordinates
    /// `u in (0, u_hi]`.
    Singular { u_hi: f64, tailed_is_g: bool, tail_slope_abs: f64 },
}

/// Integration plan: interior Simpson segments plus one treatment per side.
struct Plan {
    segments: Vec<(f64, f64)>,
    left: Side,
    right: Side,
}

fn breakpoints(map: &TransportMap) -> Vec<f64> {
    let f = map.source();
    let g = map.target();
    let mut cuts: Vec<f64> = f.knots().to_vec();
    for &y in g.knots() {
        if g.mass_below(y) > 0.0 && g.mass_above(y) > 0.0 {
            cuts.push(map.inverse(y));
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::with_capacity(cuts.len());
    for c in cuts {
        if out.last().is_none_or(|p| c - p > 1e-12 * (1.0 + c.abs())) {
            out.push(c);
        }
    }
    out
}

fn plan(map: &TransportMap) -> Plan {
    let f = map.source();
    let g = map.target();
    let cuts = breakpoints(map);
    let mut segments: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();

    let left = match (f.left_tail_slope(), g.left_tail_slope()) {
        (Some(sf), Some(sg)) => Side::PureTail {
            boundary: cuts[0],
            nu: f.mass_below(cuts[0]),
            slope_ratio: sf / sg,
            f_tail_slope: sf,
        },
        (Some(sf), None) => Side::Singular {
            u_hi: f.mass_below(cuts[0]),
            tailed_is_g: false,
            tail_slope_abs: sf,
        },
        (None, Some(sg)) => {
            // The first segment starts at f's support end where T' blows up;
            // it is integrated in mass coordinates instead.
            if segments.is_empty() {
                Side::Plain
            } else {
                let (_, b1) = segments.remove(0);
                Side::Singular {
                    u_hi: f.mass_below(b1),
                    tailed_is_g: true,
                    tail_slope_abs: sg,
                }
            }
        }
        (None, None) => Side::Plain,
    };

    let right = match (f.right_tail_slope(), g.right_tail_slope()) {
        (Some(sf), Some(sg)) => {
            let b = *cuts.last().unwrap();
            Side::PureTail {
                boundary: b,
                nu: f.mass_above(b),
                slope_ratio: sf / sg,
                f_tail_slope: sf,
            }
        }
        (Some(sf), None) => Side::Singular {
            u_hi: f.mass_above(*cuts.last().unwrap()),
            tailed_is_g: false,
            tail_slope_abs: -sf,
        },
        (None, Some(sg)) => {
            if segments.is_empty() {
                Side::Plain
            } else {
                let (b0, _) = segments.pop().unwrap();
                Side::Singular {
                    u_hi: f.mass_above(b0),
                    tailed_is_g: true,
                    tail_slope_abs: -sg,
                }
            }
        }
        (None, None) => Side::Plain,
    };

    Plan { segments, left, right }
}

/// Point and image at lower-tail mass `u` (left side) or upper-tail mass `u`
/// (right side).
fn mass_coords(map: &TransportMap, u: f64, left: bool) -> (f64, f64) {
    let q_f = u.max(f64::MIN_POSITIVE).min(map.source.mass());
    let q_g = (u * map.ratio).max(f64::MIN_POSITIVE).min(map.target.mass());
    if left {
        (
            map.source.quantile_lower_mass(q_f),
            map.target.quantile_lower_mass(q_g),
        )
    } else {
        (
            map.source.quantile_upper_mass(q_f),
            map.target.quantile_upper_mass(q_g),
        )
    }
}

/// Tail-moment bound: `int over a tail of mass u of (x - mean)^2 h dx`
/// is at most `5 u (ln u)^2 / (4 h(w)^2)` for `u < 1/6`.
fn central_tail_second_moment_bound(u: f64, median_height: f64) -> f64 {
    debug_assert!(u < 1.0 / 6.0);
    1.25 * u * u.ln().powi(2) / (median_height * median_height)
}

/// Certified bound for the omitted cost `int (T - x)^2 du` over tail mass
/// `(0, u]`, using `(T-x)^2 <= 3(x-mu_f)^2 + 3(mu_f-mu_g)^2 + 3(T-mu_g)^2`.
fn cost_remainder_bound(map: &TransportMap, u: f64, left: bool) -> f64 {
    let f = map.source();
    let g = map.target();
    let mu_f = f.mean();
    let mu_g = g.mean();
    let (x_u, t_u) = mass_coords(map, u, left);

    let f_term = if (left && f.left_tail_slope().is_none())
        || (!left && f.right_tail_slope().is_none())
    {
        let end = if left { f.knots()[0] } else { *f.knots().last().unwrap() };
        u * (end - mu_f).powi(2).max((x_u - mu_f).powi(2))
    } else {
        let hw = f.pdf(f.quantile_lower_mass(0.5 * f.mass()));
        central_tail_second_moment_bound(u, hw)
    };
    let g_term = if (left && g.left_tail_slope().is_none())
        || (!left && g.right_tail_slope().is_none())
    {
        let end = if left { g.knots()[0] } else { *g.knots().last().unwrap() };
        u * (end - mu_g).powi(2).max((t_u - mu_g).powi(2))
    } else {
        let hw = g.pdf(g.quantile_lower_mass(0.5 * g.mass()));
        central_tail_second_moment_bound(u, hw)
    };
    3.0 * (f_term + g_term + u * (mu_f - mu_g).powi(2))
}

/// Closed-form `int f(x) (T(x) - x)^2 dx` over a pure-tail region where
/// `T(x) = t_b + k (x - b)` exactly.
fn pure_tail_cost(map: &TransportMap, boundary: f64, nu: f64, k: f64, f_slope: f64, left: bool) -> f64 {
    let f = map.source();
    let q = (nu * map.ratio).max(f64::MIN_POSITIVE).min(map.target.mass());
    let t_b = if left {
        map.target.quantile_lower_mass(q)
    } else {
        map.target.quantile_upper_mass(q)
    };
    let c0 = t_b - k * boundary;
    let l = f.log_at(boundary);
    let m = if left {
        loglin::left_tail_moments(boundary, l, f_slope, 2)
    } else {
        loglin::right_tail_moments(boundary, l, f_slope, 2)
    };
    let km1 = k - 1.0;
    km1 * km1 * m[2] + 2.0 * km1 * c0 * m[1] + c0 * c0 * m[0]
}

/// Quadratic transportation cost `int f(x) (T(x) - x)^2 dx` with certified
/// absolute error at most `tol`.
pub fn quadratic_cost(f: &LogConcaveDensity, g: &LogConcaveDensity, tol: f64) -> Result<f64> {
    let map = TransportMap::new(f, g);
    let p = plan(&map);
    let mut value = 0.0;
    let mut err = 0.0;

    let side_budget = 0.25 * tol;
    for (side, left) in [(&p.left, true), (&p.right, false)] {
        match side {
            Side::Plain => {}
            Side::PureTail { boundary, nu, slope_ratio, f_tail_slope } => {
                value += pure_tail_cost(&map, *boundary, *nu, *slope_ratio, *f_tail_slope, left);
            }
            Side::Singular { u_hi, .. } => {
                if *u_hi <= 0.0 {
                    continue;
                }
                // Truncate at mass e^{-cap}, pushing the analytic remainder
                // below half this side's budget when possible.
                let mut cap: f64 = 27.631; // u = 1e-12
                let mut rem = cost_remainder_bound(&map, (-cap).exp(), left);
                while rem > 0.5 * side_budget && cap < 138.0 {
                    cap += 23.026; // two decades
                    rem = cost_remainder_bound(&map, (-cap).exp(), left);
                }
                let w_lo = -u_hi.ln();
                if w_lo < cap {
                    let integrand = |w: f64| {
                        let u = (-w).exp();
                        let (x, t) = mass_coords(&map, u, left);
                        (t - x) * (t - x) * u
                    };
                    let (v, e) = adaptive_simpson(&integrand, w_lo, cap, 0.5 * side_budget)?;
                    value += v;
                    err += e;
                }
                err += rem;
            }
        }
    }

    if !p.segments.is_empty() {
        let seg_tol = 0.5 * tol / p.segments.len() as f64;
        for &(a, b) in &p.segments {
            let integrand = |x: f64| {
                let t = map.forward(x);
                let d = t - x;
                map.source.pdf(x) * d * d
            };
            let (v, e) = adaptive_simpson(&integrand, a, b, seg_tol)?;
            value += v;
            err += e;
        }
    }

    if err > tol {
        return Err(Error::ToleranceNotReached { tol, achieved: err });
    }
    Ok(value)
}

/// Deficit integral `int f(x) D(T'(x)) dx` with `D(t) = (1-sqrt t)^2/(2 sqrt t)`,
/// the slack of the transport proof; nonnegative, zero iff `g = f`.
pub fn pl_deficit_integral(f: &LogConcaveDensity, g: &LogConcaveDensity, tol: f64) -> Result<f64> {
    let map = TransportMap::new(f, g);
    let p = plan(&map);
    let mut value = 0.0;
    let mut err = 0.0;

    let side_budget = 0.25 * tol;
    for (side, left) in [(&p.left, true), (&p.right, false)] {
        match side {
            Side::Plain => {}
            Side::PureTail { nu, slope_ratio, .. } => {
                value += nu * deficit_raw(*slope_ratio, 0.5);
            }
            Side::Singular { u_hi, tailed_is_g, tail_slope_abs } => {
                if *u_hi <= 0.0 {
                    continue;
                }
                // In v = sqrt(mass) the integrand 2 v D(c/v^2) collapses to
                // the analytic form (v - sqrt c)^2 / sqrt c.
                let integrand = |v: f64| {
                    let u = v * v;
                    let (x, t) = mass_coords(&map, u, left);
                    let c = if *tailed_is_g {
                        map.source.pdf(x) / tail_slope_abs
                    } else {
                        map.target.pdf(t) / tail_slope_abs
                    };
                    let rc = c.sqrt();
                    let d = v - rc;
                    d * d / rc
                };
                let (v, e) = adaptive_simpson(&integrand, 0.0, u_hi.sqrt(), side_budget)?;
                value += v;
                err += e;
            }
        }
    }

    if !p.segments.is_empty() {
        let seg_tol = 0.5 * tol / p.segments.len() as f64;
        for &(a, b) in &p.segments {
            let integrand = |x: f64| {
                let tp = map.derivative(x);
                if tp.is_finite() && tp > 0.0 {
                    map.source.pdf(x) * deficit_raw(tp, 0.5)
                } else {
                    0.0
                }
            };
            let (v, e) = adaptive_simpson(&integrand, a, b, seg_tol)?;
            value += v;
            err += e;
        }
    }

    if err > tol {
        return Err(Error::ToleranceNotReached { tol, achieved: err });
    }
    Ok(value.max(0.0))
}

/// Localized cost `int_lo^hi f(x)(T(x)-x)^2 dx` over a window clamped to the
/// source support; shares the breakpoint structure of [`quadratic_cost`].
pub(crate) fn windowed_cost(
    map: &TransportMap,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64> {
    let (s_lo, s_hi) = map.source().support();
    let lo = lo.max(s_lo);
    let hi = hi.min(s_hi);
    if lo >= hi {
        return Ok(0.0);
    }
    let mut cuts: Vec<f64> = vec![lo, hi];
    for b in breakpoints(map) {
        if b > lo && b < hi {
            cuts.push(b);
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let seg_tol = tol / (cuts.len() - 1) as f64;
    let mut value = 0.0;
    for w in cuts.windows(2) {
        let integrand = |x: f64| {
            let t = map.forward(x);
            let d = t - x;
            map.source().pdf(x) * d * d
        };
        let (v, _) = adaptive_simpson(&integrand, w[0], w[1], seg_tol)?;
        value += v;
    }
    Ok(value)
}

/// An approximate minimizer of `int |f(t) - a m(t + b)| dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alignment {
    pub a: f64,
    pub b: f64,
    pub residual: f64,
}

/// Aligns `m` to `f` over scale `a` and shift `b`.
///
/// The initial guess `a0 = mass(f)/mass(m)`, `b0 = mean(m) - mean(f)` is
/// refined by a log-spaced grid (factor 4 in `a`, +-4 standard deviations in
/// `b`) and coordinate-wise golden-section search. The best point ever
/// evaluated is returned, so exact matches keep residual 0.
pub fn align(f: &LogConcaveDensity, m: &LogConcaveFunction) -> Result<Alignment> {
    if !(m.mass().is_finite() && m.mass() > 0.0) {
        return Err(Error::ZeroMass);
    }
    let residual = |a: f64, b: f64| -> f64 {
        let shifted = m
            .scaled_shifted(a, b)
            .expect("positive scale by construction");
        l1_distance(f.as_function(), &shifted)
    };

    let a0 = f.mass() / m.mass();
    let b0 = m.mean() - f.mean();
    let sigma = f.variance().max(m.variance()).sqrt().max(1e-6);

    let mut best = (a0, b0, residual(a0, b0));
    let consider = |a: f64, b: f64, best: &mut (f64, f64, f64)| {
        let r = residual(a, b);
        if r < best.2 {
            *best = (a, b, r);
        }
    };

    const GRID: i32 = 6;
    for i in -GRID..=GRID {
        let a = a0 * 4f64.powf(i as f64 / GRID as f64);
        for j in -GRID..=GRID {
            let b = b0 + 4.0 * sigma * j as f64 / GRID as f64;
            consider(a, b, &mut best);
        }
    }

    // Coordinate-wise golden-section refinement around the incumbent.
    let golden = |lo: f64, hi: f64, eval: &dyn Fn(f64) -> f64| -> (f64, f64) {
        let phi = 0.618_033_988_749_894_9;
        let (mut lo, mut hi) = (lo, hi);
        let mut x1 = hi - phi * (hi - lo);
        let mut x2 = lo + phi * (hi - lo);
        let (mut f1, mut f2) = (eval(x1), eval(x2));
        for _ in 0..80 {
            if hi - lo <= 1e-6 * (1.0 + lo.abs().max(hi.abs())) {
                break;
            }
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = eval(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = eval(x2);
            }
        }
        if f1 <= f2 {
            (x1, f1)
        } else {
            (x2, f2)
        }
    };

    for _ in 0..3 {
        let (af, bf) = (best.0, best.1);
        let (a_new, ra) = golden(af / 2.0, af * 2.0, &|a| residual(a, bf));
        if ra < best.2 {
            best = (a_new, bf, ra);
        }
        let (aa, bb) = (best.0, best.1);
        let span = (sigma * 0.5).max(1e-9 * (1.0 + bb.abs()));
        let (b_new, rb) = golden(bb - span, bb + span, &|b| residual(aa, b));
        if rb < best.2 {
            best = (aa, b_new, rb);
        }
    }

    Ok(Alignment { a: best.0, b: best.1, residual: best.2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laplace() -> LogConcaveDensity {
        LogConcaveDensity::build(vec![0.0], vec![0.5f64.ln()], Some(1.0), Some(-1.0)).unwrap()
    }

    fn uniform(a: f64, b: f64) -> LogConcaveDensity {
        LogConcaveDensity::build(vec![a, b], vec![0.0, 0.0], None, None).unwrap()
    }

    #[test]
    fn identity_map_and_zero_cost() {
        let d = laplace();
        let map = transport_map(&d, &d);
        assert!((map.forward(0.3) - 0.3).abs() < 1e-12);
        let cost = quadratic_cost(&d, &d, 1e-10).unwrap();
        assert!(cost.abs() < 1e-12);
        let def = pl_deficit_integral(&d, &d, 1e-10).unwrap();
        assert!(def.abs() < 1e-12);
    }

    #[test]
    fn uniform_stretch_has_linear_map() {
        let u1 = uniform(0.0, 1.0);
        let u2 = uniform(0.0, 2.0);
        let map = transport_map(&u1, &u2);
        assert!((map.forward(0.25) - 0.5).abs() < 1e-12);
        // int_0^1 x^2 dx = 1/3.
        let cost = quadratic_cost(&u1, &u2, 1e-10).unwrap();
        assert!((cost - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn affine_target_gives_affine_map() {
        let d = laplace();
        let g = d.affine_image(1.5, 0.7).unwrap();
        let map = transport_map(&d, &g);
        for x in [-3.0, -0.4, 0.0, 1.2, 5.0] {
            assert!((map.forward(x) - (1.5 * x + 0.7)).abs() < 1e-9, "x = {x}");
            assert!((map.inverse(map.forward(x)) - x).abs() < 1e-8);
        }
    }

    #[test]
    fn scaled_pair_cost_matches_closed_form() {
        // Target X/(1+eps): cost = eps^2/(1+eps)^2 * second moment (= 2).
        let d = laplace();
        for eps in [0.1, 0.01] {
            let g = d.affine_image(1.0 / (1.0 + eps), 0.0).unwrap();
            let cost = quadratic_cost(&d, &g, 1e-10).unwrap();
            let expect = eps * eps / ((1.0 + eps) * (1.0 + eps)) * 2.0;
            assert!((cost - expect).abs() < 1e-9, "eps = {eps}: {cost} vs {expect}");
            // T' is constant, so the deficit is D(1/(1+eps)) exactly.
            let def = pl_deficit_integral(&d, &g, 1e-10).unwrap();
            let expect = deficit_integrand(1.0 / (1.0 + eps), 0.5).unwrap();
            assert!((def - expect).abs() < 1e-12);
            assert!(def > 0.0 && def <= eps);
        }
    }

    #[test]
    fn deficit_integrand_identities() {
        assert_eq!(deficit_integrand(1.0, 0.5).unwrap(), 0.0);
        assert!((deficit_integrand(4.0, 0.5).unwrap() - 0.25).abs() < 1e-15);
        let expect = (0.3 + 0.7 * 4.0) / 4f64.powf(0.7) - 1.0;
        assert!((deficit_integrand(4.0, 0.3).unwrap() - expect).abs() < 1e-14);
        assert!(deficit_integrand(0.0, 0.5).is_err());
        // Symmetry at alpha = 1/2: D(t) = D(1/t).
        for t in [0.01, 0.3, 2.5, 40.0] {
            let a = deficit_integrand(t, 0.5).unwrap();
            let b = deficit_integrand(1.0 / t, 0.5).unwrap();
            assert!((a - b).abs() <= 1e-12 * a.max(1.0));
        }
    }

    #[test]
    fn align_recovers_scale_and_shift() {
        let d = laplace();
        let scaled = d.as_function().scaled_shifted(1.1, 0.0).unwrap();
        let al = align(&d, &scaled).unwrap();
        assert!((al.a - 1.0 / 1.1).abs() < 1e-12);
        assert_eq!(al.b, 0.0);
        assert!(al.residual < 1e-12);

        let shifted = d.as_function().scaled_shifted(1.0, -3.0).unwrap();
        let al = align(&d, &shifted).unwrap();
        assert!((al.a - 1.0).abs() < 1e-12);
        assert!((al.b - 3.0).abs() < 1e-12);
        assert!(al.residual < 1e-12);
    }

    #[test]
    fn align_never_beats_trivial_point() {
        let f = laplace();
        let m = uniform(0.0, 1.0);
        let al = align(&f, m.as_function()).unwrap();
        assert!(al.residual <= l1_distance(f.as_function(), m.as_function()) + 1e-12);
    }
}
