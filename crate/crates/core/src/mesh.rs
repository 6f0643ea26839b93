//! Step size and truncation indices.
//!
//! Every scheme fixes `h` as a function of `n` and the decay data, then
//! chooses `M` (terms left of the origin) and `N` (terms right of it) so
//! that the slower-decaying side keeps `n` terms.

use std::f64::consts::{E, PI};
use std::fmt;

use crate::error::{invalid, Result};
use crate::transforms::{x_gamma, IntervalCase};

/// Decay and analyticity data `(K, α, β, d)` certified by the caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayParams {
    pub k: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Half-width of the strip of analyticity, `0 < d < π/2`.
    pub d: f64,
    pub case: IntervalCase,
}

impl DecayParams {
    pub fn new(k: f64, alpha: f64, beta: f64, d: f64, case: IntervalCase) -> Result<Self> {
        for (name, v) in [("K", k), ("alpha", alpha), ("beta", beta)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(invalid(
                    name,
                    format!("must be positive and finite, got {v}"),
                ));
            }
        }
        if !(d > 0.0 && d < PI / 2.0) {
            return Err(invalid("d", format!("must satisfy 0 < d < π/2, got {d}")));
        }
        Ok(DecayParams {
            k,
            alpha,
            beta,
            d,
            case,
        })
    }

    pub fn mu(&self) -> f64 {
        self.alpha.min(self.beta)
    }

    pub fn nu(&self) -> f64 {
        self.alpha.max(self.beta)
    }
}

/// The approximation formula together with its step-size rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeId {
    SeQuad,
    SeIndef,
    DeQuad,
    De3Quad,
    DeIndef,
    De3Indef,
    De3DaggerQuad,
}

impl SchemeId {
    pub fn is_indefinite(self) -> bool {
        matches!(
            self,
            SchemeId::SeIndef | SchemeId::DeIndef | SchemeId::De3Indef
        )
    }

    pub fn is_single_exponential(self) -> bool {
        matches!(self, SchemeId::SeQuad | SchemeId::SeIndef)
    }

    /// `h(n)` for this scheme.
    pub fn step(self, mu: f64, d: f64, n: usize) -> f64 {
        let n = n as f64;
        match self {
            SchemeId::SeQuad => (2.0 * PI * d / (mu * n)).sqrt(),
            SchemeId::SeIndef => (PI * d / (mu * n)).sqrt(),
            SchemeId::DeQuad => (8.0 * d * n / mu).ln() / n,
            SchemeId::De3Quad | SchemeId::DeIndef => (4.0 * d * n / mu).ln() / n,
            SchemeId::De3Indef => (2.0 * d * n / mu).ln() / n,
            SchemeId::De3DaggerQuad => (2.0 * PI * d * n / mu).ln() / n,
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SchemeId::SeQuad => "SE quadrature",
            SchemeId::SeIndef => "SE indefinite integration",
            SchemeId::DeQuad => "DE quadrature",
            SchemeId::De3Quad => "DE3‡ quadrature",
            SchemeId::DeIndef => "DE indefinite integration",
            SchemeId::De3Indef => "DE3‡ indefinite integration",
            SchemeId::De3DaggerQuad => "DE3† quadrature",
        };
        f.write_str(s)
    }
}

/// Discretization `h Σ_{k=−M}^{N}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh {
    pub h: f64,
    /// `M`, the number of nodes left of the origin.
    pub lower: usize,
    /// `N`, the number of nodes right of the origin.
    pub upper: usize,
    pub n: usize,
    /// Set when the DE floor rule produced a non-positive count that had to
    /// be raised to 1.
    pub clamped: bool,
}

impl Mesh {
    pub fn terms(&self) -> usize {
        self.lower + self.upper + 1
    }
}

/// Build `(h, M, N)` for `scheme` at size `n`.
pub fn build_mesh(scheme: SchemeId, params: &DecayParams, n: usize) -> Result<Mesh> {
    if n == 0 {
        return Err(invalid("n", "must be at least 1"));
    }
    let (alpha, beta) = (params.alpha, params.beta);
    let h = scheme.step(params.mu(), params.d, n);
    if !(h.is_finite() && h > 0.0) {
        return Err(invalid(
            "n",
            format!("step size h = {h} is not positive for n = {n}"),
        ));
    }
    // Ties α = β take the μ = α branch; both branches coincide there.
    let alpha_is_min = alpha <= beta;
    let (lower, upper, clamped) = match scheme {
        SchemeId::SeQuad | SchemeId::SeIndef => {
            if alpha_is_min {
                (n, (alpha * n as f64 / beta).ceil() as usize, false)
            } else {
                ((beta * n as f64 / alpha).ceil() as usize, n, false)
            }
        }
        SchemeId::De3DaggerQuad => (n, n, false),
        _ => {
            let shrink = |ratio: f64| {
                let cut = (ratio.ln() / h).floor() as i64;
                let m = n as i64 - cut;
                if m < 1 {
                    (1, true)
                } else {
                    (m as usize, false)
                }
            };
            if alpha_is_min {
                let (up, c) = shrink(beta / alpha);
                (n, up, c)
            } else {
                let (lo, c) = shrink(alpha / beta);
                (lo, n, c)
            }
        }
    };
    Ok(Mesh {
        h,
        lower,
        upper,
        n,
        clamped,
    })
}

/// One inequality `value ≥ threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Condition {
    pub value: f64,
    pub threshold: f64,
}

impl Condition {
    pub fn holds(&self) -> bool {
        self.value >= self.threshold
    }
}

/// Outcome of checking the side conditions of a DE theorem.
///
/// SE schemes and `De3DaggerQuad` carry no conditions and are always valid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    pub scheme: SchemeId,
    /// `n ≥ νe/(c d)`
    pub size: Option<Condition>,
    /// `M h ≥ x_γ` on the left
    pub left_reach: Option<Condition>,
    /// `N h ≥ x_γ` on the right
    pub right_reach: Option<Condition>,
    pub clamped: bool,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        !self.clamped
            && [self.size, self.left_reach, self.right_reach]
                .iter()
                .flatten()
                .all(Condition::holds)
    }
}

/// Check the side conditions of the theorem behind `scheme` for `mesh`.
pub fn validate_n(scheme: SchemeId, params: &DecayParams, mesh: &Mesh) -> ValidityReport {
    let no_conditions = ValidityReport {
        scheme,
        size: None,
        left_reach: None,
        right_reach: None,
        clamped: mesh.clamped,
    };
    // (c in n ≥ νe/(c d), whether x_γ is taken at α/2, β/2 rather than α, β)
    let (divisor, halved) = match scheme {
        SchemeId::SeQuad | SchemeId::SeIndef | SchemeId::De3DaggerQuad => return no_conditions,
        SchemeId::DeQuad => (8.0, true),
        SchemeId::DeIndef => (4.0, true),
        SchemeId::De3Quad => (4.0, false),
        SchemeId::De3Indef => (2.0, false),
    };
    let scale = if halved { 0.5 } else { 1.0 };
    let reach = |count: usize, exponent: f64| Condition {
        value: count as f64 * mesh.h,
        // exponents are positive, so x_gamma cannot fail here
        threshold: x_gamma(scale * exponent).unwrap_or(f64::INFINITY),
    };
    ValidityReport {
        scheme,
        size: Some(Condition {
            value: mesh.n as f64,
            threshold: params.nu() * E / (divisor * params.d),
        }),
        left_reach: Some(reach(mesh.lower, params.alpha)),
        right_reach: Some(reach(mesh.upper, params.beta)),
        clamped: mesh.clamped,
    }
}
