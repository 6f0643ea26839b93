//! Scalar special functions: the sine integral, an inverse hyperbolic sine
//! that keeps full relative accuracy for negative arguments, and the
//! exponential integral `E1` used for closed-form reference values.

use std::f64::consts::{FRAC_PI_2, LN_2};

use num_complex::Complex64;

use crate::error::{invalid, Result};

/// Arguments up to this magnitude use the Maclaurin series of `Si`.
const SI_SERIES_LIMIT: f64 = 4.0;
/// Beyond this, three terms of the asymptotic expansion of the auxiliary
/// functions are exact to working precision.
const SI_ASYMPTOTIC_LIMIT: f64 = 1.0e6;
const MAX_ITER: usize = 500;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// The sine integral `Si(x) = ∫₀ˣ sin(σ)/σ dσ`.
///
/// `Si(±∞)` returns `±π/2`. The function is odd; only `|x|` is evaluated.
pub fn si(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return FRAC_PI_2.copysign(x);
    }
    let ax = x.abs();
    let value = if ax <= SI_SERIES_LIMIT {
        si_series(ax)
    } else {
        let (f, g) = si_auxiliary(ax);
        FRAC_PI_2 - f * ax.cos() - g * ax.sin()
    };
    value.copysign(x)
}

/// `Σ (−1)ᵏ x^{2k+1} / ((2k+1)(2k+1)!)` for `0 ≤ x ≤ 4`.
fn si_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for k in 1..MAX_ITER {
        let m = (2 * k) as f64;
        term *= -x2 / (m * (m + 1.0));
        let contrib = term / (m + 1.0);
        sum += contrib;
        if contrib.abs() <= 0.25 * f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

/// Auxiliary functions `f(x)`, `g(x)` with `Si(x) = π/2 − f cos x − g sin x`.
///
/// Uses the identity `e^{ix} E1(ix) = g(x) − i f(x)`, where `E1(ix)` comes
/// from its continued fraction (modified Lentz), valid for `x > 2`.
fn si_auxiliary(x: f64) -> (f64, f64) {
    if x >= SI_ASYMPTOTIC_LIMIT {
        let r = 1.0 / (x * x);
        let f = (1.0 - 2.0 * r + 24.0 * r * r) / x;
        let g = (1.0 - 6.0 * r + 120.0 * r * r) * r;
        return (f, g);
    }
    let tiny = Complex64::new(1.0 / f64::MIN_POSITIVE, 0.0);
    let mut b = Complex64::new(1.0, x);
    let mut c = tiny;
    let mut d = b.inv();
    let mut h = d;
    for i in 1..MAX_ITER {
        let a = -((i * i) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < f64::EPSILON {
            break;
        }
    }
    (-h.im, h.re)
}

/// Inverse hyperbolic sine `log(x + √(x² + 1))`.
///
/// Negative arguments go through `arcsinh(−x) = −arcsinh(x)`; small ones use
/// `log1p`, large ones avoid squaring `x`.
pub fn arcsinh(x: f64) -> f64 {
    if x.is_nan() || x.is_infinite() {
        return x;
    }
    if x.is_sign_negative() {
        return -arcsinh(-x);
    }
    if x > 268_435_456.0 {
        // 2^28: x² + 1 == x² in double precision.
        x.ln() + LN_2
    } else if x > 2.0 {
        (2.0 * x + 1.0 / ((x * x + 1.0).sqrt() + x)).ln()
    } else {
        let x2 = x * x;
        (x + x2 / (1.0 + (1.0 + x2).sqrt())).ln_1p()
    }
}

/// Exponential integral `E1(x) = ∫ₓ^∞ e^{−s}/s ds`, also `Γ(0, x)`.
///
/// Power series for `x ≤ 1`, continued fraction above. `E1(+∞) = 0`.
pub fn e1(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(invalid("x", format!("E1 needs x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x <= 1.0 {
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..MAX_ITER {
            term *= -x / k as f64;
            let contrib = term / k as f64;
            sum += contrib;
            if contrib.abs() < 0.25 * f64::EPSILON * sum.abs() {
                break;
            }
        }
        return Ok(-EULER_GAMMA - x.ln() - sum);
    }
    Ok(e1_continued_fraction(x))
}

/// `E1(x)` for `x > 0` by the Lentz continued fraction; the caller decides
/// whether it converges fast enough.
pub(crate) fn e1_continued_fraction(x: f64) -> f64 {
    let tiny = f64::MIN_POSITIVE;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    h * (-x).exp()
}

/// `Γ(0, x)`, identical to `E1(x)`.
pub fn gamma_zero_upper(x: f64) -> Result<f64> {
    e1(x)
}
