//! Piecewise log-linear functions and probability densities on the real line.
//!
//! A [`LogConcaveFunction`] is stored as knots `x_0 < ... < x_n` with
//! log-values `l_i = ln h(x_i)`, linear in between, plus optional exponential
//! tails: `ln h(x) = l_0 + s_L (x - x_0)` left of the support (slope `s_L > 0`)
//! and `l_n + s_R (x - x_n)` on the right (`s_R < 0`). Absent tails mean the
//! function is zero outside `[x_0, x_n]`, with a jump at the endpoint allowed
//! (the uniform density). Concavity of the log-values is validated at
//! construction, so every value of these types is genuinely log-concave.
//!
//! The representation is closed under affine images, concave hulls, and
//! weighted Minkowski midpoint sums, and every integral used by the crate
//! (mass, partial mass, moments, L1 distances) has a closed form, so no
//! quadrature error enters except where explicitly documented (transport
//! costs).
//!
//! All values are immutable after construction and all operations are pure.

use crate::error::{Error, Result};
use crate::loglin;

/// Slack allowed when validating chord-slope monotonicity, scaled by slope size.
const CONCAVITY_SLACK: f64 = 1e-10;

/// Normalization tolerance for [`LogConcaveDensity`].
pub const MASS_TOL: f64 = 1e-9;

/// An unnormalized log-concave function with piecewise log-linear structure.
#[derive(Debug, Clone, PartialEq)]
pub struct LogConcaveFunction {
    knots: Vec<f64>,
    logvals: Vec<f64>,
    left_tail_slope: Option<f64>,
    right_tail_slope: Option<f64>,
    // Derived, computed once at construction.
    slopes: Vec<f64>,
    prefix_mass: Vec<f64>,
    suffix_mass: Vec<f64>,
    mass: f64,
}

impl LogConcaveFunction {
    /// Validates the data and precomputes piece masses.
    pub fn new(
        knots: Vec<f64>,
        logvals: Vec<f64>,
        left_tail_slope: Option<f64>,
        right_tail_slope: Option<f64>,
    ) -> Result<Self> {
        if knots.is_empty() || logvals.is_empty() {
            return Err(Error::EmptyInput);
        }
        if knots.len() != logvals.len() {
            return Err(Error::ParseError(format!(
                "knots/logvals length mismatch: {} vs {}",
                knots.len(),
                logvals.len()
            )));
        }
        if knots.iter().any(|x| !x.is_finite()) || logvals.iter().any(|l| !l.is_finite()) {
            return Err(Error::ParseError("non-finite knot or logval".into()));
        }
        for i in 1..knots.len() {
            if knots[i] <= knots[i - 1] {
                return Err(Error::ParseError(format!(
                    "knots not strictly increasing at index {i}"
                )));
            }
        }
        let slopes: Vec<f64> = knots
            .windows(2)
            .zip(logvals.windows(2))
            .map(|(x, l)| (l[1] - l[0]) / (x[1] - x[0]))
            .collect();
        for i in 1..slopes.len() {
            let tol = CONCAVITY_SLACK * (1.0 + slopes[i - 1].abs().max(slopes[i].abs()));
            if slopes[i] > slopes[i - 1] + tol {
                return Err(Error::ConcavityViolated {
                    index: i,
                    prev: slopes[i - 1],
                    next: slopes[i],
                });
            }
        }
        if let Some(s) = left_tail_slope {
            if !(s > 0.0) {
                return Err(Error::InfiniteMass("left tail slope must be positive"));
            }
            if let Some(&first) = slopes.first() {
                let tol = CONCAVITY_SLACK * (1.0 + s.abs().max(first.abs()));
                if s < first - tol {
                    return Err(Error::ConcavityViolated {
                        index: 0,
                        prev: s,
                        next: first,
                    });
                }
            }
        }
        if let Some(s) = right_tail_slope {
            if !(s < 0.0) {
                return Err(Error::InfiniteMass("right tail slope must be negative"));
            }
            if let Some(&last) = slopes.last() {
                let tol = CONCAVITY_SLACK * (1.0 + s.abs().max(last.abs()));
                if s > last + tol {
                    return Err(Error::ConcavityViolated {
                        index: slopes.len(),
                        prev: last,
                        next: s,
                    });
                }
            }
        }
        if knots.len() == 1 && (left_tail_slope.is_none() || right_tail_slope.is_none()) {
            return Err(Error::InfiniteMass(
                "a single knot requires both tail slopes",
            ));
        }

        let n = knots.len();
        let left_mass = left_tail_slope.map_or(0.0, |s| logvals[0].exp() / s);
        let right_mass = right_tail_slope.map_or(0.0, |s| logvals[n - 1].exp() / -s);
        let piece_mass: Vec<f64> = (0..n - 1)
            .map(|i| loglin::seg_mass(logvals[i], slopes[i], knots[i + 1] - knots[i]))
            .collect();

        let mut prefix_mass = Vec::with_capacity(n);
        let mut acc = left_mass;
        prefix_mass.push(acc);
        for &m in &piece_mass {
            acc += m;
            prefix_mass.push(acc);
        }
        let mut suffix_mass = vec![0.0; n];
        let mut acc = right_mass;
        suffix_mass[n - 1] = acc;
        for i in (0..n - 1).rev() {
            acc += piece_mass[i];
            suffix_mass[i] = acc;
        }
        let mass = prefix_mass[n - 1] + right_mass;
        if !mass.is_finite() || mass <= 0.0 {
            return Err(Error::InfiniteMass("total mass is not finite and positive"));
        }

        Ok(Self {
            knots,
            logvals,
            left_tail_slope,
            right_tail_slope,
            slopes,
            prefix_mass,
            suffix_mass,
            mass,
        })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn logvals(&self) -> &[f64] {
        &self.logvals
    }

    pub fn left_tail_slope(&self) -> Option<f64> {
        self.left_tail_slope
    }

    pub fn right_tail_slope(&self) -> Option<f64> {
        self.right_tail_slope
    }

    /// Total integral over the line.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Support interval; infinite endpoints where a tail is present.
    pub fn support(&self) -> (f64, f64) {
        let lo = if self.left_tail_slope.is_some() {
            f64::NEG_INFINITY
        } else {
            self.knots[0]
        };
        let hi = if self.right_tail_slope.is_some() {
            f64::INFINITY
        } else {
            *self.knots.last().unwrap()
        };
        (lo, hi)
    }

    /// Index of the piece whose interval contains `x`, if any.
    /// `Err(false)` means left of the support anchor, `Err(true)` right of it.
    fn locate(&self, x: f64) -> std::result::Result<usize, bool> {
        if x < self.knots[0] {
            return Err(false);
        }
        let n = self.knots.len();
        if x >= self.knots[n - 1] {
            return Err(true);
        }
        // Number of knots <= x is at least 1 here.
        Ok(self.knots.partition_point(|k| *k <= x) - 1)
    }

    /// `ln h(x)`; `-inf` outside the support.
    pub fn log_at(&self, x: f64) -> f64 {
        match self.locate(x) {
            Ok(i) => self.logvals[i] + self.slopes[i] * (x - self.knots[i]),
            Err(false) => match self.left_tail_slope {
                Some(s) => self.logvals[0] + s * (x - self.knots[0]),
                None => f64::NEG_INFINITY,
            },
            Err(true) => {
                let n = self.knots.len();
                if x == self.knots[n - 1] {
                    return self.logvals[n - 1];
                }
                match self.right_tail_slope {
                    Some(s) => self.logvals[n - 1] + s * (x - self.knots[n - 1]),
                    None => f64::NEG_INFINITY,
                }
            }
        }
    }

    /// `h(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        self.log_at(x).exp()
    }

    /// Mass of `(-inf, x]`.
    pub fn mass_below(&self, x: f64) -> f64 {
        match self.locate(x) {
            Ok(i) => {
                self.prefix_mass[i] + loglin::seg_mass(self.logvals[i], self.slopes[i], x - self.knots[i])
            }
            Err(false) => match self.left_tail_slope {
                Some(s) => (self.logvals[0] + s * (x - self.knots[0])).exp() / s,
                None => 0.0,
            },
            Err(true) => self.mass - self.mass_above(x),
        }
    }

    /// Mass of `[x, inf)`, accumulated from the right so deep upper tails
    /// keep full relative precision.
    pub fn mass_above(&self, x: f64) -> f64 {
        match self.locate(x) {
            Ok(i) => {
                self.suffix_mass[i + 1]
                    + loglin::seg_mass(
                        self.logvals[i + 1],
                        -self.slopes[i],
                        self.knots[i + 1] - x,
                    )
            }
            Err(true) => {
                let n = self.knots.len();
                match self.right_tail_slope {
                    Some(s) => (self.logvals[n - 1] + s * (x - self.knots[n - 1])).exp() / -s,
                    None => 0.0,
                }
            }
            Err(false) => self.mass - self.mass_below(x),
        }
    }

    /// Moments `int x^k h(x) dx` for `k = 0..=kmax` (`kmax <= 8`).
    pub fn moments(&self, kmax: usize) -> [f64; loglin::MAX_MOMENT + 1] {
        let n = self.knots.len();
        let mut out = [0.0; loglin::MAX_MOMENT + 1];
        if let Some(s) = self.left_tail_slope {
            let t = loglin::left_tail_moments(self.knots[0], self.logvals[0], s, kmax);
            for k in 0..=kmax {
                out[k] += t[k];
            }
        }
        if let Some(s) = self.right_tail_slope {
            let t = loglin::right_tail_moments(self.knots[n - 1], self.logvals[n - 1], s, kmax);
            for k in 0..=kmax {
                out[k] += t[k];
            }
        }
        for i in 0..n - 1 {
            let m = loglin::seg_moments(
                self.knots[i],
                self.knots[i + 1],
                self.logvals[i],
                self.slopes[i],
                kmax,
            );
            for k in 0..=kmax {
                out[k] += m[k];
            }
        }
        out
    }

    /// Moments `int_x^inf t^k h(t) dt` for `k = 0..=kmax`.
    pub fn upper_moments(&self, x: f64, kmax: usize) -> [f64; loglin::MAX_MOMENT + 1] {
        let n = self.knots.len();
        let mut out = [0.0; loglin::MAX_MOMENT + 1];
        let start = match self.locate(x) {
            Ok(i) => {
                let m = loglin::seg_moments(x, self.knots[i + 1], self.log_at(x), self.slopes[i], kmax);
                for k in 0..=kmax {
                    out[k] += m[k];
                }
                i + 1
            }
            Err(false) => {
                if let Some(s) = self.left_tail_slope {
                    let full = loglin::left_tail_moments(self.knots[0], self.logvals[0], s, kmax);
                    let below = loglin::left_tail_moments(x, self.log_at(x), s, kmax);
                    for k in 0..=kmax {
                        out[k] += full[k] - below[k];
                    }
                }
                0
            }
            Err(true) => {
                if let Some(s) = self.right_tail_slope {
                    let t = loglin::right_tail_moments(x, self.log_at(x), s, kmax);
                    for k in 0..=kmax {
                        out[k] += t[k];
                    }
                }
                return out;
            }
        };
        for i in start..n - 1 {
            let m = loglin::seg_moments(
                self.knots[i],
                self.knots[i + 1],
                self.logvals[i],
                self.slopes[i],
                kmax,
            );
            for k in 0..=kmax {
                out[k] += m[k];
            }
        }
        if let Some(s) = self.right_tail_slope {
            let t = loglin::right_tail_moments(self.knots[n - 1], self.logvals[n - 1], s, kmax);
            for k in 0..=kmax {
                out[k] += t[k];
            }
        }
        out
    }

    /// Moments `int_-inf^x t^k h(t) dt`, by complementing [`Self::upper_moments`].
    pub fn lower_moments(&self, x: f64, kmax: usize) -> [f64; loglin::MAX_MOMENT + 1] {
        let all = self.moments(kmax);
        let up = self.upper_moments(x, kmax);
        let mut out = [0.0; loglin::MAX_MOMENT + 1];
        for k in 0..=kmax {
            out[k] = all[k] - up[k];
        }
        out
    }

    /// Mean of the normalized profile, `int x h / int h`.
    pub fn mean(&self) -> f64 {
        self.moments(1)[1] / self.mass
    }

    /// Variance of the normalized profile.
    pub fn variance(&self) -> f64 {
        let m = self.moments(2);
        m[2] / self.mass - (m[1] / self.mass).powi(2)
    }

    /// The function `t -> a * h(t + b)` (pointwise scale and shift).
    pub fn scaled_shifted(&self, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::NonpositiveScale(a));
        }
        let ln_a = a.ln();
        Self::new(
            self.knots.iter().map(|x| x - b).collect(),
            self.logvals.iter().map(|l| l + ln_a).collect(),
            self.left_tail_slope,
            self.right_tail_slope,
        )
    }
}

/// A normalized log-concave probability density.
#[derive(Debug, Clone, PartialEq)]
pub struct LogConcaveDensity {
    func: LogConcaveFunction,
}

impl std::ops::Deref for LogConcaveDensity {
    type Target = LogConcaveFunction;
    fn deref(&self) -> &LogConcaveFunction {
        &self.func
    }
}

/// Elementary statistics of a density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityStats {
    pub mean: f64,
    pub median: f64,
    /// Density height at the median, `h(w)`.
    pub median_height: f64,
    pub total_mass: f64,
    pub second_moment: f64,
}

impl LogConcaveDensity {
    /// Builds and normalizes: log-values are shifted by `-ln(mass)`, which
    /// preserves chord slopes exactly.
    pub fn build(
        knots: Vec<f64>,
        logvals: Vec<f64>,
        left_tail_slope: Option<f64>,
        right_tail_slope: Option<f64>,
    ) -> Result<Self> {
        let raw = LogConcaveFunction::new(knots, logvals, left_tail_slope, right_tail_slope)?;
        Self::normalize(raw)
    }

    /// Normalizes an already-validated function.
    pub fn normalize(f: LogConcaveFunction) -> Result<Self> {
        let shift = f.mass.ln();
        let func = LogConcaveFunction::new(
            f.knots,
            f.logvals.iter().map(|l| l - shift).collect(),
            f.left_tail_slope,
            f.right_tail_slope,
        )?;
        Ok(Self { func })
    }

    /// Wraps a function that is already normalized to mass 1 within `1e-9`.
    pub fn from_function(func: LogConcaveFunction) -> Result<Self> {
        if (func.mass - 1.0).abs() > MASS_TOL {
            return Err(Error::ParseError(format!(
                "mass {} is not 1 within {MASS_TOL:e}",
                func.mass
            )));
        }
        Ok(Self { func })
    }

    pub fn as_function(&self) -> &LogConcaveFunction {
        &self.func
    }

    pub fn into_function(self) -> LogConcaveFunction {
        self.func
    }

    /// Probability density at `x`.
    pub fn pdf(&self, x: f64) -> f64 {
        self.func.eval(x)
    }

    pub fn cdf(&self, x: f64) -> f64 {
        self.func.mass_below(x)
    }

    /// Survival function `1 - cdf`, computed from the right.
    pub fn sf(&self, x: f64) -> f64 {
        self.func.mass_above(x)
    }

    /// The point `x` with `cdf(x) = p`.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::QuantileOutOfRange(p));
        }
        // Work from whichever side keeps the target mass well conditioned.
        if p <= 0.5 * self.func.mass {
            Ok(self.quantile_lower_mass(p))
        } else {
            Ok(self.quantile_upper_mass((self.func.mass - p).max(f64::MIN_POSITIVE)))
        }
    }

    /// The point with `q` mass to its left. Exact in the far tail because no
    /// `1 - p` subtraction happens.
    pub fn quantile_lower_mass(&self, q: f64) -> f64 {
        let f = &self.func;
        let n = f.knots.len();
        debug_assert!(q > 0.0 && q <= f.mass);
        if q <= f.prefix_mass[0] {
            // Left tail: solve exp(l0 + s(x - x0))/s = q.
            let s = f.left_tail_slope.expect("positive prefix mass requires a tail");
            return f.knots[0] + ((q * s).ln() - f.logvals[0]) / s;
        }
        if q > f.prefix_mass[n - 1] {
            // Target lies in the right tail.
            return self.quantile_upper_mass((f.mass - q).max(f64::MIN_POSITIVE));
        }
        // q lies in piece i (between knots i and i+1).
        let i = f.prefix_mass.partition_point(|m| *m < q) - 1;
        let u = loglin::seg_mass_inv(f.logvals[i], f.slopes[i], q - f.prefix_mass[i]);
        f.knots[i] + u.min(f.knots[i + 1] - f.knots[i])
    }

    /// The point with `q` mass to its right.
    pub fn quantile_upper_mass(&self, q: f64) -> f64 {
        let f = &self.func;
        let n = f.knots.len();
        debug_assert!(q > 0.0 && q <= f.mass);
        if q <= f.suffix_mass[n - 1] {
            let s = f.right_tail_slope.expect("positive suffix mass requires a tail");
            return f.knots[n - 1] + ((q * -s).ln() - f.logvals[n - 1]) / s;
        }
        if q > f.suffix_mass[0] {
            // Target lies in the left tail.
            return self.quantile_lower_mass((f.mass - q).max(f64::MIN_POSITIVE));
        }
        // q lies in piece j (between knots j and j+1), measured from knot j+1 leftward.
        let j = f.suffix_mass.partition_point(|m| *m >= q) - 1;
        let u = loglin::seg_mass_inv(f.logvals[j + 1], -f.slopes[j], q - f.suffix_mass[j + 1]);
        f.knots[j + 1] - u.min(f.knots[j + 1] - f.knots[j])
    }

    /// Mean, median, median height, mass, and second moment, all closed form.
    pub fn stats(&self) -> DensityStats {
        let m = self.func.moments(2);
        let median = self.quantile_lower_mass(0.5 * self.func.mass);
        DensityStats {
            mean: m[1] / m[0],
            median,
            median_height: self.pdf(median),
            total_mass: self.func.mass,
            second_moment: m[2] / m[0],
        }
    }

    /// Density of `s X + t` for `X ~ self` and `s > 0`.
    pub fn affine_image(&self, scale: f64, shift: f64) -> Result<Self> {
        if !(scale > 0.0) {
            return Err(Error::NonpositiveScale(scale));
        }
        let f = &self.func;
        let ln_s = scale.ln();
        let func = LogConcaveFunction::new(
            f.knots.iter().map(|x| scale * x + shift).collect(),
            f.logvals.iter().map(|l| l - ln_s).collect(),
            f.left_tail_slope.map(|s| s / scale),
            f.right_tail_slope.map(|s| s / scale),
        )?;
        Ok(Self { func })
    }

    /// Translated so the mean is zero.
    pub fn recentered(&self) -> Self {
        self.affine_image(1.0, -self.mean())
            .expect("unit scale is positive")
    }
}

/// Exact `int |a - b|` over the line.
///
/// On every interval of the merged knot partition both log-values are affine,
/// so `a - b` changes sign at most once there; the crossing is located in
/// closed form and the signed piece integrals are summed.
pub fn l1_distance(a: &LogConcaveFunction, b: &LogConcaveFunction) -> f64 {
    let mut cuts: Vec<f64> = a.knots.iter().chain(b.knots.iter()).copied().collect();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup();

    let mut total = 0.0;
    // Leftmost region (-inf, cuts[0]].
    total += l1_region(a, b, f64::NEG_INFINITY, cuts[0]);
    for w in cuts.windows(2) {
        total += l1_region(a, b, w[0], w[1]);
    }
    total += l1_region(a, b, *cuts.last().unwrap(), f64::INFINITY);
    total
}

/// Local exponential-affine representation on a region interior to one piece:
/// `(anchor, logval at anchor, slope)`.
fn local_rep(f: &LogConcaveFunction, lo: f64, hi: f64) -> Option<(f64, f64, f64)> {
    let n = f.knots.len();
    if hi <= f.knots[0] {
        return f.left_tail_slope.map(|s| (f.knots[0], f.logvals[0], s));
    }
    if lo >= f.knots[n - 1] {
        return f.right_tail_slope.map(|s| (f.knots[n - 1], f.logvals[n - 1], s));
    }
    // The merged partition guarantees [lo, hi] sits inside one piece.
    let i = f.knots.partition_point(|k| *k <= lo).min(n - 1) - 1;
    Some((f.knots[i], f.logvals[i], f.slopes[i]))
}

/// Integral of the local representation over `[lo, hi]` (either may be infinite).
fn rep_integral(rep: (f64, f64, f64), lo: f64, hi: f64) -> f64 {
    let (anchor, l, s) = rep;
    if lo.is_infinite() {
        // (-inf, hi], s > 0 for an integrable left tail.
        return (l + s * (hi - anchor)).exp() / s;
    }
    if hi.is_infinite() {
        return (l + s * (lo - anchor)).exp() / -s;
    }
    loglin::seg_mass(l + s * (lo - anchor), s, hi - lo)
}

fn l1_region(a: &LogConcaveFunction, b: &LogConcaveFunction, lo: f64, hi: f64) -> f64 {
    if lo >= hi {
        return 0.0;
    }
    let ra = local_rep(a, lo, hi);
    let rb = local_rep(b, lo, hi);
    match (ra, rb) {
        (None, None) => 0.0,
        (Some(r), None) | (None, Some(r)) => rep_integral(r, lo, hi),
        (Some(ra), Some(rb)) => {
            let (aa, la, sa) = ra;
            let (ab, lb, sb) = rb;
            let mut pts = vec![lo, hi];
            if sa != sb {
                let x = (lb - la + sa * aa - sb * ab) / (sa - sb);
                if x > lo && x < hi {
                    pts = vec![lo, x, hi];
                }
            }
            let mut total = 0.0;
            for w in pts.windows(2) {
                total += (rep_integral(ra, w[0], w[1]) - rep_integral(rb, w[0], w[1])).abs();
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn laplace() -> LogConcaveDensity {
        LogConcaveDensity::build(vec![0.0], vec![0.5f64.ln()], Some(1.0), Some(-1.0)).unwrap()
    }

    pub fn uniform(a: f64, b: f64) -> LogConcaveDensity {
        LogConcaveDensity::build(vec![a, b], vec![0.0, 0.0], None, None).unwrap()
    }

    /// Half-exponential `phi(x) = e^{-x}/2` on `[-ln 2, inf)`; the extremal
    /// density for the median/mean product bound.
    pub fn half_exponential() -> LogConcaveDensity {
        let ln2 = std::f64::consts::LN_2;
        LogConcaveDensity::build(vec![-ln2, 0.0], vec![0.0, -ln2], None, Some(-1.0)).unwrap()
    }

    #[test]
    fn uniform_mass_is_one() {
        let u = uniform(0.0, 1.0);
        assert_eq!(u.mass(), 1.0);
        assert_eq!(u.pdf(0.5), 1.0);
    }

    #[test]
    fn laplace_is_normalized_and_symmetric() {
        let d = laplace();
        assert!((d.mass() - 1.0).abs() < 1e-12);
        assert!((d.pdf(0.0) - 0.5).abs() < 1e-12);
        assert!((d.cdf(0.0) - 0.5).abs() < 1e-12);
        // Analytic inversion of the tail: e^{-x}/2 = 0.25.
        assert!((d.quantile(0.75).unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn concavity_violation_is_rejected() {
        let err = LogConcaveDensity::build(vec![0.0, 1.0, 2.0], vec![0.0, 0.0, 1.0], None, None);
        assert!(matches!(err, Err(Error::ConcavityViolated { .. })));
    }

    #[test]
    fn missing_tail_rules() {
        assert!(matches!(
            LogConcaveFunction::new(vec![0.0], vec![0.0], Some(1.0), None),
            Err(Error::InfiniteMass(_))
        ));
        assert!(matches!(
            LogConcaveFunction::new(vec![0.0, 1.0], vec![0.0, 0.0], Some(-1.0), None),
            Err(Error::InfiniteMass(_))
        ));
        assert!(matches!(
            LogConcaveFunction::new(vec![], vec![], None, None),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn quantile_cdf_roundtrip() {
        let d = laplace();
        for i in 1..100 {
            let p = i as f64 / 100.0;
            let x = d.quantile(p).unwrap();
            assert!((d.cdf(x) - p).abs() < 1e-12, "p = {p}");
            assert!((d.quantile(d.cdf(x)).unwrap() - x).abs() < 1e-9);
        }
    }

    #[test]
    fn stats_of_half_exponential_hit_the_extremal_product() {
        let phi = half_exponential();
        let s = phi.stats();
        assert!(s.median.abs() < 1e-12);
        assert!((s.mean - (std::f64::consts::LN_2 - 1.0)).abs() < 1e-12);
        let product = s.median_height * (s.median - s.mean).abs();
        let bound = 0.5 * (1.0 - std::f64::consts::LN_2); // ln sqrt(e/2)
        assert!((product - bound).abs() < 1e-12);
    }

    #[test]
    fn affine_image_translates_and_scales() {
        let d = laplace();
        let shifted = d.affine_image(1.0, 3.0).unwrap();
        assert!((shifted.pdf(3.0) - 0.5).abs() < 1e-12);
        let squeezed = d.affine_image(1.0 / 1.1, 0.0).unwrap();
        assert!((squeezed.pdf(0.0) - 0.55).abs() < 1e-12);
        assert!((squeezed.mass() - 1.0).abs() < 1e-9);
        assert!(d.affine_image(0.0, 0.0).is_err());
    }

    #[test]
    fn l1_basics() {
        let d = laplace();
        assert_eq!(l1_distance(&d, &d), 0.0);
        let u1 = uniform(0.0, 1.0);
        let u2 = uniform(0.0, 2.0);
        assert!((l1_distance(&u1, &u2) - 1.0).abs() < 1e-12);
        // Laplace vs uniform[0,1]: sanity, bounded by 2 and symmetric.
        assert!((l1_distance(&d, &u1) - l1_distance(&u1, &d)).abs() < 1e-15);
        assert!(l1_distance(&d, &u1) <= 2.0);
    }

    #[test]
    fn upper_moments_complement() {
        let d = laplace();
        for x in [-2.0, -0.3, 0.0, 0.7, 3.0] {
            let up = d.upper_moments(x, 2);
            let lo = d.lower_moments(x, 2);
            let all = d.moments(2);
            for k in 0..=2 {
                assert!((up[k] + lo[k] - all[k]).abs() < 1e-12);
            }
            assert!((up[0] - d.sf(x)).abs() < 1e-12);
        }
    }
}
