//! Variable transformations `t = ψ(x)` mapping the real line onto the
//! integration interval, their derivatives, their inverses, and the
//! monotonicity threshold `x_γ` used by the DE side conditions.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Result, SincError};
use crate::special::arcsinh;

/// Below this, `ψ_DE3‡⁻¹` returns `−∞`.
const DE3_INVERSE_FLOOR: f64 = 1e-300;

/// The interval/decay situation an integrand falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalCase {
    /// `(−∞, ∞)`, algebraic decay at both ends.
    Case1,
    /// `(0, ∞)`, algebraic decay at infinity.
    Case2,
    /// `(0, ∞)`, exponential decay at infinity.
    Case3,
}

impl IntervalCase {
    /// Lower endpoint of the interval.
    pub fn lower(self) -> f64 {
        match self {
            IntervalCase::Case1 => f64::NEG_INFINITY,
            IntervalCase::Case2 | IntervalCase::Case3 => 0.0,
        }
    }
}

/// Which transformation is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformId {
    /// `sinh t`
    Se1,
    /// `e^t`
    Se2,
    /// `arcsinh(e^t)`
    Se3,
    /// `sinh((π/2) sinh t)`
    De1,
    /// `e^{(π/2) sinh t}`
    De2,
    /// `e^{t − e^{−t}}`; quadrature only.
    De3Dagger,
    /// `log(1 + e^{π sinh t})`
    De3DoubleDagger,
}

impl TransformId {
    pub const ALL: [TransformId; 7] = [
        TransformId::Se1,
        TransformId::Se2,
        TransformId::Se3,
        TransformId::De1,
        TransformId::De2,
        TransformId::De3Dagger,
        TransformId::De3DoubleDagger,
    ];

    pub fn case(self) -> IntervalCase {
        match self {
            TransformId::Se1 | TransformId::De1 => IntervalCase::Case1,
            TransformId::Se2 | TransformId::De2 => IntervalCase::Case2,
            TransformId::Se3 | TransformId::De3Dagger | TransformId::De3DoubleDagger => {
                IntervalCase::Case3
            }
        }
    }

    pub fn is_double_exponential(self) -> bool {
        !matches!(self, TransformId::Se1 | TransformId::Se2 | TransformId::Se3)
    }

    pub fn has_inverse(self) -> bool {
        self != TransformId::De3Dagger
    }

    pub fn name(self) -> &'static str {
        match self {
            TransformId::Se1 => "se1",
            TransformId::Se2 => "se2",
            TransformId::Se3 => "se3",
            TransformId::De1 => "de1",
            TransformId::De2 => "de2",
            TransformId::De3Dagger => "de3dagger",
            TransformId::De3DoubleDagger => "de3ddagger",
        }
    }

    /// The transformed abscissa `ψ(t)`.
    pub fn psi(self, t: f64) -> f64 {
        psi(self, t)
    }

    pub fn psi_prime(self, t: f64) -> f64 {
        psi_prime(self, t)
    }

    pub fn psi_inverse(self, x: f64) -> Result<f64> {
        psi_inverse(self, x)
    }
}

impl fmt::Display for TransformId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformId {
    type Err = SincError;

    fn from_str(s: &str) -> Result<Self> {
        TransformId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid("transform", format!("unknown transform `{s}`")))
    }
}

/// `log(1 + e^s)` without overflow or loss for very negative `s`.
fn softplus(s: f64) -> f64 {
    if s > 0.0 {
        s + (-s).exp().ln_1p()
    } else {
        s.exp().ln_1p()
    }
}

/// `ψ(t)` for the given transformation.
///
/// Saturates to `±∞` (or to the endpoint `0`) only where the true value
/// leaves the double range.
pub fn psi(id: TransformId, t: f64) -> f64 {
    match id {
        TransformId::Se1 => t.sinh(),
        TransformId::Se2 => t.exp(),
        TransformId::Se3 => {
            if t > 0.0 {
                // arcsinh(e^t) = t + log(1 + √(1 + e^{−2t}))
                t + (1.0 + (-2.0 * t).exp()).sqrt().ln_1p()
            } else {
                arcsinh(t.exp())
            }
        }
        TransformId::De1 => (FRAC_PI_2 * t.sinh()).sinh(),
        TransformId::De2 => (FRAC_PI_2 * t.sinh()).exp(),
        TransformId::De3Dagger => (t - (-t).exp()).exp(),
        TransformId::De3DoubleDagger => softplus(PI * t.sinh()),
    }
}

/// `ψ′(t)`, strictly positive wherever it does not underflow.
pub fn psi_prime(id: TransformId, t: f64) -> f64 {
    match id {
        TransformId::Se1 => t.cosh(),
        TransformId::Se2 => t.exp(),
        TransformId::Se3 => {
            if t > 0.0 {
                1.0 / (1.0 + (-2.0 * t).exp()).sqrt()
            } else {
                let e = t.exp();
                e / (1.0 + e * e).sqrt()
            }
        }
        TransformId::De1 => FRAC_PI_2 * t.cosh() * (FRAC_PI_2 * t.sinh()).cosh(),
        TransformId::De2 => FRAC_PI_2 * t.cosh() * (FRAC_PI_2 * t.sinh()).exp(),
        TransformId::De3Dagger => {
            let e = (-t).exp();
            (1.0 + e) * (t - e).exp()
        }
        TransformId::De3DoubleDagger => {
            // π cosh t / (1 + e^{−s}), written so that the exponent is never positive.
            let s = PI * t.sinh();
            if s >= 0.0 {
                PI * t.cosh() / (1.0 + (-s).exp())
            } else {
                let e = s.exp();
                PI * t.cosh() * e / (1.0 + e)
            }
        }
    }
}

/// `ψ⁻¹(x)` in closed form.
///
/// `x` must lie in the open image of `ψ`. `De3Dagger` has no elementary
/// inverse and always errors. For `De3DoubleDagger`, `x < 1e−300` maps to
/// `−∞`.
pub fn psi_inverse(id: TransformId, x: f64) -> Result<f64> {
    let domain = || SincError::Domain { id, x };
    if !x.is_finite() {
        return Err(domain());
    }
    if id.case() != IntervalCase::Case1 && x <= 0.0 {
        return Err(domain());
    }
    let t = match id {
        TransformId::Se1 => arcsinh(x),
        TransformId::Se2 => x.ln(),
        TransformId::Se3 => log_sinh(x),
        TransformId::De1 => arcsinh(arcsinh(x) / FRAC_PI_2),
        TransformId::De2 => arcsinh(x.ln() / FRAC_PI_2),
        TransformId::De3Dagger => return Err(SincError::UnsupportedTransform(id)),
        TransformId::De3DoubleDagger => {
            if x < DE3_INVERSE_FLOOR {
                f64::NEG_INFINITY
            } else {
                arcsinh(log_expm1(x) / PI)
            }
        }
    };
    Ok(t)
}

/// `log(sinh x)` for `x > 0`.
fn log_sinh(x: f64) -> f64 {
    if x > 1.0 {
        x + (-(-2.0 * x).exp()).ln_1p() - LN_2
    } else {
        x.sinh().ln()
    }
}

/// `log(e^x − 1)` for `x > 0`.
fn log_expm1(x: f64) -> f64 {
    if x > 1.0 {
        x + (-(-x).exp()).ln_1p()
    } else {
        x.exp_m1().ln()
    }
}

/// Threshold beyond which `cosh(x) e^{±πγ sinh x}` is monotone.
pub fn x_gamma(gamma: f64) -> Result<f64> {
    if gamma.is_nan() || gamma <= 0.0 {
        return Err(invalid("gamma", format!("must be positive, got {gamma}")));
    }
    let two_pi_gamma = 2.0 * PI * gamma;
    if two_pi_gamma < 1.0 {
        let inner = (1.0 - two_pi_gamma * two_pi_gamma).sqrt();
        // Largest root of γπ sinh²x − sinh x + γπ = 0, the weight's maximum.
        Ok(arcsinh((1.0 + inner) / two_pi_gamma))
    } else {
        Ok(arcsinh(1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ASINH_1: f64 = 0.881_373_587_019_543;

    #[test]
    fn cases() {
        use TransformId::*;
        for (id, case) in [
            (Se1, IntervalCase::Case1),
            (De1, IntervalCase::Case1),
            (Se2, IntervalCase::Case2),
            (De2, IntervalCase::Case2),
            (Se3, IntervalCase::Case3),
            (De3Dagger, IntervalCase::Case3),
            (De3DoubleDagger, IntervalCase::Case3),
        ] {
            assert_eq!(id.case(), case);
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(TransformId::Se1, 0.0), 0.0);
        assert_eq!(psi(TransformId::De3DoubleDagger, 0.0), LN_2);
        // mpmath: sinh((π/2) sinh 1) = 3.0882874179763228660...
        let v = psi(TransformId::De1, 1.0);
        assert!((v - 3.088_287_417_976_323).abs() / v < 1e-15);
        assert_eq!(psi(TransformId::Se2, -1e4), 0.0);
        assert_eq!(psi(TransformId::Se3, 1e3), 1e3 + LN_2);
    }

    #[test]
    fn psi_prime_examples() {
        assert_eq!(psi_prime(TransformId::Se2, 0.0), 1.0);
        assert_eq!(psi_prime(TransformId::De3DoubleDagger, 0.0), FRAC_PI_2);
        let t = 0.5;
        let step = 1e-5;
        let fd = (psi(TransformId::De1, t + step) - psi(TransformId::De1, t - step)) / (2.0 * step);
        let exact = psi_prime(TransformId::De1, t);
        assert!((fd - exact).abs() / exact < 1e-8);
    }

    #[test]
    fn de3_weight_stays_finite_for_large_t() {
        for t in [-8.0, -5.0, 5.0, 8.0] {
            let w = psi_prime(TransformId::De3DoubleDagger, t);
            assert!(w.is_finite() && w >= 0.0, "t = {t}: {w}");
        }
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inverse(TransformId::Se1, 0.0).unwrap(), 0.0);
        assert!(
            psi_inverse(TransformId::De3DoubleDagger, LN_2)
                .unwrap()
                .abs()
                < 1e-16
        );
        // mpmath: arcsinh((2/π) log 5) = 0.89866187640227338315...
        let t = psi_inverse(TransformId::De2, 5.0).unwrap();
        assert!((t - 0.898_661_876_402_273_4).abs() < 1e-15);
        assert!((psi(TransformId::De2, t) - 5.0).abs() < 5e-15);
    }

    #[test]
    fn psi_inverse_errors() {
        assert_eq!(
            psi_inverse(TransformId::De3Dagger, 1.0),
            Err(SincError::UnsupportedTransform(TransformId::De3Dagger))
        );
        assert!(matches!(
            psi_inverse(TransformId::Se2, 0.0),
            Err(SincError::Domain { .. })
        ));
        assert!(matches!(
            psi_inverse(TransformId::Se3, -1.0),
            Err(SincError::Domain { .. })
        ));
        assert!(psi_inverse(TransformId::Se1, f64::NAN).is_err());
        assert_eq!(
            psi_inverse(TransformId::De3DoubleDagger, 1e-310).unwrap(),
            f64::NEG_INFINITY
        );
    }

    #[test]
    fn x_gamma_branches() {
        assert_eq!(x_gamma(1.0).unwrap(), ASINH_1);
        assert!((x_gamma(1.0 / (2.0 * PI)).unwrap() - ASINH_1).abs() < 1e-15);
        // mpmath: x_{0.05} = arcsinh(6.20503836557284663...) = 2.52493952389015204...
        assert!((x_gamma(0.05).unwrap() - 2.524_939_523_890_152).abs() < 1e-14);
        assert!(x_gamma(0.0).is_err());
        assert!(x_gamma(-1.0).is_err());
        let below = x_gamma(1.0 / (2.0 * PI) * (1.0 - 1e-15)).unwrap();
        assert!((below - ASINH_1).abs() < 1e-6);
    }

    #[test]
    fn x_gamma_certifies_monotone_weight() {
        for gamma in [0.02, 0.05, 0.1, 1.0 / (2.0 * PI), 0.5, 1.0] {
            let start = x_gamma(gamma).unwrap();
            let w = |x: f64| x.cosh() * (-PI * gamma * x.sinh()).exp();
            let mut prev = w(start);
            for i in 1..=1000 {
                let x = start + 0.005 * i as f64;
                let cur = w(x);
                assert!(cur <= prev, "gamma = {gamma}, x = {x}");
                prev = cur;
            }
        }
    }

    #[test]
    fn parse_names() {
        for id in TransformId::ALL {
            assert_eq!(id.name().parse::<TransformId>().unwrap(), id);
        }
        assert!("se4".parse::<TransformId>().is_err());
    }
}
