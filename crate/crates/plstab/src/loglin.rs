//! Closed-form integrals of exponential-affine segments.
//!
//! Everything in the crate that integrates a piecewise log-linear function
//! reduces to integrals of `u^k * exp(l + s*u)` over a finite segment or an
//! exponential tail. The formulas here are exact up to roundoff; the small
//! `|s*dx|` regime goes through `expm1`/`log1p` or a short series so that no
//! cancellation occurs.

/// `expm1(z)/z`, continuously extended by 1 at `z = 0`.
#[inline]
pub(crate) fn em1(z: f64) -> f64 {
    if z == 0.0 {
        1.0
    } else {
        z.exp_m1() / z
    }
}

/// `log1p(z)/z`, continuously extended by 1 at `z = 0`.
#[inline]
pub(crate) fn ln1p_over(z: f64) -> f64 {
    if z == 0.0 {
        1.0
    } else {
        z.ln_1p() / z
    }
}

/// Mass of one segment: integral of `exp(l + s*u)` for `u` in `[0, dx]`.
#[inline]
pub(crate) fn seg_mass(l: f64, s: f64, dx: f64) -> f64 {
    l.exp() * dx * em1(s * dx)
}

/// Partial-mass inverse: the `u` with `int_0^u exp(l + s*v) dv = q`.
///
/// Assumes `0 <= q <=` segment mass, so the `log1p` argument stays `> -1`.
#[inline]
pub(crate) fn seg_mass_inv(l: f64, s: f64, q: f64) -> f64 {
    let t = q * (-l).exp();
    t * ln1p_over(s * t)
}

pub(crate) const MAX_MOMENT: usize = 8;

/// `int_0^dx v^j exp(s*v) dv` for `j = 0..=kmax`, requiring `|s*dx| <= 0.5`.
///
/// Series: `dx^(j+1) * sum_m (s*dx)^m / (m! * (j+m+1))`; twenty terms put the
/// truncation error below 1e-18 relative.
fn base_moments(s: f64, dx: f64, kmax: usize) -> [f64; MAX_MOMENT + 1] {
    debug_assert!((s * dx).abs() <= 0.5 + 1e-12);
    let z = s * dx;
    let mut out = [0.0; MAX_MOMENT + 1];
    for (j, slot) in out.iter_mut().enumerate().take(kmax + 1) {
        let mut term = 1.0; // z^m / m!
        let mut total = 1.0 / (j as f64 + 1.0);
        for m in 1..20 {
            term *= z / m as f64;
            total += term / (j + m + 1) as f64;
        }
        *slot = dx.powi(j as i32 + 1) * total;
    }
    out
}

/// Moments of one segment about `x = 0`:
/// `int_a^b x^k exp(l + s*(x - a)) dx` for `k = 0..=kmax`.
///
/// The segment is split so each sub-segment has `|s * width| <= 0.5`, then the
/// series above is shifted binomially. Exact at `s = 0`.
pub(crate) fn seg_moments(a: f64, b: f64, l: f64, s: f64, kmax: usize) -> [f64; MAX_MOMENT + 1] {
    assert!(kmax <= MAX_MOMENT);
    let dx = b - a;
    let mut out = [0.0; MAX_MOMENT + 1];
    if dx <= 0.0 {
        return out;
    }
    let n = ((s * dx).abs() / 0.5).ceil().max(1.0) as usize;
    let step = dx / n as f64;
    for i in 0..n {
        let u0 = i as f64 * step;
        let base = base_moments(s, step, kmax);
        let shift = a + u0;
        let scale = (l + s * u0).exp();
        // (shift + v)^k expanded binomially over the local moments.
        for k in 0..=kmax {
            let mut acc = 0.0;
            let mut binom = 1.0;
            for j in 0..=k {
                // binom = C(k, j)
                acc += binom * shift.powi((k - j) as i32) * base[j];
                binom *= (k - j) as f64 / (j + 1) as f64;
            }
            out[k] += scale * acc;
        }
    }
    out
}

/// Moments of a right tail about `x = 0`:
/// `int_x0^inf x^k exp(l + s*(x - x0)) dx` for `k = 0..=kmax`, with `s < 0`.
pub(crate) fn right_tail_moments(x0: f64, l: f64, s: f64, kmax: usize) -> [f64; MAX_MOMENT + 1] {
    assert!(kmax <= MAX_MOMENT && s < 0.0);
    let r = -1.0 / s;
    let scale = l.exp();
    let mut out = [0.0; MAX_MOMENT + 1];
    // int_0^inf v^j exp(s v) dv = j! * r^(j+1)
    let mut fact_r = [0.0; MAX_MOMENT + 1];
    let mut f = r;
    for (j, slot) in fact_r.iter_mut().enumerate().take(kmax + 1) {
        if j > 0 {
            f *= j as f64 * r;
        }
        *slot = f;
    }
    for k in 0..=kmax {
        let mut acc = 0.0;
        let mut binom = 1.0;
        for j in 0..=k {
            acc += binom * x0.powi((k - j) as i32) * fact_r[j];
            binom *= (k - j) as f64 / (j + 1) as f64;
        }
        out[k] = scale * acc;
    }
    out
}

/// Moments of a left tail about `x = 0`:
/// `int_-inf^x0 x^k exp(l + s*(x - x0)) dx` for `k = 0..=kmax`, with `s > 0`.
pub(crate) fn left_tail_moments(x0: f64, l: f64, s: f64, kmax: usize) -> [f64; MAX_MOMENT + 1] {
    assert!(kmax <= MAX_MOMENT && s > 0.0);
    let r = 1.0 / s;
    let scale = l.exp();
    let mut out = [0.0; MAX_MOMENT + 1];
    // int_-inf^0 v^j exp(s v) dv = (-1)^j j! r^(j+1)
    let mut fact_r = [0.0; MAX_MOMENT + 1];
    let mut f = r;
    for (j, slot) in fact_r.iter_mut().enumerate().take(kmax + 1) {
        if j > 0 {
            f *= -(j as f64) * r;
        }
        *slot = f;
    }
    for k in 0..=kmax {
        let mut acc = 0.0;
        let mut binom = 1.0;
        for j in 0..=k {
            acc += binom * x0.powi((k - j) as i32) * fact_r[j];
            binom *= (k - j) as f64 / (j + 1) as f64;
        }
        out[k] = scale * acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut acc = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 0 { 2.0 } else { 4.0 };
            acc += w * f(a + i as f64 * h);
        }
        acc * h / 3.0
    }

    #[test]
    fn seg_mass_matches_quadrature() {
        for &(l, s, dx) in &[(0.0, 1.0, 1.0), (-2.0, -3.5, 0.7), (1.0, 0.0, 2.0), (0.5, 1e-12, 1.0)] {
            let exact = seg_mass(l, s, dx);
            let num = simpson(|u| (l + s * u).exp(), 0.0, dx, 4096);
            assert!((exact - num).abs() <= 1e-12 * exact.abs().max(1.0), "l={l} s={s} dx={dx}");
        }
    }

    #[test]
    fn seg_mass_inv_roundtrip() {
        for &(l, s, dx) in &[(0.0, 1.0, 1.0), (-1.0, -2.0, 3.0), (0.3, 1e-14, 0.5)] {
            for frac in [0.1, 0.5, 0.9] {
                let q = frac * seg_mass(l, s, dx);
                let u = seg_mass_inv(l, s, q);
                assert!((seg_mass(l, s, u) - q).abs() <= 1e-14 * q.max(1e-300));
            }
        }
    }

    #[test]
    fn moments_match_quadrature() {
        for &(a, b, l, s) in &[(0.0, 1.0, 0.0, 1.0), (-2.0, 3.0, -1.0, -2.0), (5.0, 7.0, 0.2, 4.0), (-4.0, -1.0, 0.0, 0.0)] {
            let m = seg_moments(a, b, l, s, 8);
            for k in 0..=8usize {
                let num = simpson(|x| x.powi(k as i32) * (l + s * (x - a)).exp(), a, b, 1 << 14);
                assert!(
                    (m[k] - num).abs() <= 1e-9 * num.abs().max(1.0),
                    "k={k} a={a} b={b} s={s}: {} vs {num}",
                    m[k]
                );
            }
        }
    }

    #[test]
    fn tail_moments_match_quadrature() {
        let r = right_tail_moments(1.5, -0.3, -2.0, 6);
        for k in 0..=6usize {
            let num = simpson(|x| x.powi(k as i32) * (-0.3 - 2.0 * (x - 1.5)).exp(), 1.5, 40.0, 1 << 16);
            assert!((r[k] - num).abs() <= 1e-9 * num.abs().max(1.0), "right k={k}");
        }
        let l = left_tail_moments(-0.5, 0.1, 1.7, 6);
        for k in 0..=6usize {
            let num = simpson(|x| x.powi(k as i32) * (0.1 + 1.7 * (x + 0.5)).exp(), -45.0, -0.5, 1 << 16);
            assert!((l[k] - num).abs() <= 1e-9 * num.abs().max(1.0), "left k={k}");
        }
    }
}
