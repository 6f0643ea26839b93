//! Sinc quadrature and Sinc indefinite integration of a transformed
//! integrand `F(x) = f(ψ(x)) ψ′(x)`.

use std::f64::consts::PI;

use crate::bounds::{indef_certificate, quad_certificate, scheme_for, BoundCertificate};
use crate::error::{Result, SincError};
use crate::mesh::{build_mesh, validate_n, DecayParams, Mesh};
use crate::special::si;
use crate::transforms::{psi, psi_inverse, psi_prime, IntervalCase, TransformId};

/// An integrand `f` on the original interval.
///
/// Implementations must be pure. Samples that round onto an interval
/// endpoint (for example `ψ(kh) == 0` in cases 2 and 3) may be passed in.
pub trait Integrand {
    fn eval(&self, t: f64) -> f64;
}

impl<F: Fn(f64) -> f64> Integrand for F {
    fn eval(&self, t: f64) -> f64 {
        self(t)
    }
}

/// An approximation, the mesh behind it and, when certified, its bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub bound: Option<f64>,
    pub mesh: Mesh,
    /// Number of non-zero terms actually summed.
    pub terms_used: usize,
}

/// `F(kh)` for `k = −M, …, N`, stored at index `k + M`.
#[derive(Debug, Clone)]
struct Samples {
    mesh: Mesh,
    values: Vec<f64>,
    used: usize,
}

impl Samples {
    fn collect<F: Integrand + ?Sized>(f: &F, id: TransformId, mesh: &Mesh) -> Result<Self> {
        let lower = mesh.lower as i64;
        let mut values = Vec::with_capacity(mesh.terms());
        let mut used = 0;
        for k in -lower..=mesh.upper as i64 {
            let term = transformed_term(f, id, k, mesh.h)?;
            if term != 0.0 {
                used += 1;
            }
            values.push(term);
        }
        Ok(Samples {
            mesh: *mesh,
            values,
            used,
        })
    }

    /// `Σ_k values[k] · weight(k)`, accumulated from both ends toward `k = 0`.
    fn weighted_sum(&self, mut weight: impl FnMut(i64) -> f64) -> f64 {
        let lower = self.mesh.lower;
        let mut left = 0.0;
        for (i, v) in self.values[..lower].iter().enumerate() {
            if *v != 0.0 {
                left += v * weight(i as i64 - lower as i64);
            }
        }
        let mut right = 0.0;
        for (i, v) in self.values[lower + 1..].iter().enumerate().rev() {
            if *v != 0.0 {
                right += v * weight(i as i64 + 1);
            }
        }
        let centre = self.values[lower];
        let centre = if centre != 0.0 {
            centre * weight(0)
        } else {
            0.0
        };
        (left + right) + centre
    }
}

/// `f(ψ(kh)) ψ′(kh)` with the endpoint and underflow conventions applied.
fn transformed_term<F: Integrand + ?Sized>(f: &F, id: TransformId, k: i64, h: f64) -> Result<f64> {
    let t = k as f64 * h;
    let weight = psi_prime(id, t);
    if weight == 0.0 {
        return Ok(0.0);
    }
    let x = psi(id, t);
    let term = f.eval(x) * weight;
    if term.is_finite() {
        return Ok(term);
    }
    let saturated =
        x.is_infinite() || weight.is_infinite() || (id.case() != IntervalCase::Case1 && x == 0.0);
    if saturated {
        Ok(0.0)
    } else {
        Err(SincError::NonFiniteSample { k, t: x })
    }
}

/// `h Σ_{k=−M}^{N} f(ψ(kh)) ψ′(kh)`.
pub fn sinc_quad<F: Integrand + ?Sized>(f: &F, id: TransformId, mesh: &Mesh) -> Result<QuadResult> {
    let samples = Samples::collect(f, id, mesh)?;
    let value = mesh.h * samples.weighted_sum(|_| 1.0);
    Ok(QuadResult {
        value,
        bound: None,
        mesh: *mesh,
        terms_used: samples.used,
    })
}

/// The basis `J(k,h)(x) = h {1/2 + Si(π(x/h − k))/π}`.
///
/// Evaluated through `x − kh`, so `basis_j(k, h, x) == basis_j(0, h, x − kh)`.
/// `x = −∞` gives `0`, `x = +∞` gives `h`.
pub fn basis_j(k: i64, h: f64, x: f64) -> f64 {
    if x == f64::NEG_INFINITY {
        return 0.0;
    }
    if x == f64::INFINITY {
        return h;
    }
    let shifted = x - k as f64 * h;
    h * (0.5 + si(PI * shifted / h) / PI)
}

/// A Sinc indefinite integral `τ ↦ Σ F(kh) J(k,h)(ψ⁻¹(τ))` with the samples
/// `F(kh)` computed once.
#[derive(Debug, Clone)]
pub struct SincIndefinite {
    id: TransformId,
    samples: Samples,
}

impl SincIndefinite {
    pub fn new<F: Integrand + ?Sized>(f: &F, id: TransformId, mesh: &Mesh) -> Result<Self> {
        if !id.has_inverse() {
            return Err(SincError::UnsupportedTransform(id));
        }
        Ok(SincIndefinite {
            id,
            samples: Samples::collect(f, id, mesh)?,
        })
    }

    pub fn mesh(&self) -> &Mesh {
        &self.samples.mesh
    }

    pub fn terms_used(&self) -> usize {
        self.samples.used
    }

    /// Approximation of `∫_a^τ f`, `a` being the lower endpoint.
    pub fn eval(&self, tau: f64) -> Result<f64> {
        let domain = || SincError::Domain {
            id: self.id,
            x: tau,
        };
        if tau.is_nan() {
            return Err(domain());
        }
        let lower = self.id.case().lower();
        if tau < lower {
            return Err(domain());
        }
        if tau == lower {
            return Ok(0.0);
        }
        let xi = if tau == f64::INFINITY {
            f64::INFINITY
        } else {
            psi_inverse(self.id, tau)?
        };
        if xi == f64::NEG_INFINITY {
            return Ok(0.0);
        }
        let h = self.samples.mesh.h;
        Ok(self.samples.weighted_sum(|k| basis_j(k, h, xi)))
    }
}

/// `Σ_{k=−M}^{N} f(ψ(kh)) ψ′(kh) J(k,h)(ψ⁻¹(τ))`.
pub fn sinc_indef<F: Integrand + ?Sized>(
    f: &F,
    id: TransformId,
    mesh: &Mesh,
    tau: f64,
) -> Result<QuadResult> {
    let approx = SincIndefinite::new(f, id, mesh)?;
    Ok(QuadResult {
        value: approx.eval(tau)?,
        bound: None,
        mesh: *mesh,
        terms_used: approx.terms_used(),
    })
}

fn certified(cert: Result<BoundCertificate>, params: &DecayParams, mesh: &Mesh) -> Option<f64> {
    let cert = cert.ok()?;
    validate_n(cert.scheme, params, mesh)
        .is_valid()
        .then(|| cert.bound(mesh.n))
}

/// Quadrature at size `n` with the scheme belonging to `id`; the bound is
/// attached when a certificate exists and `n` passes the side conditions.
pub fn integrate<F: Integrand + ?Sized>(
    f: &F,
    id: TransformId,
    params: &DecayParams,
    n: usize,
) -> Result<QuadResult> {
    let scheme = scheme_for(id, false)?;
    let mesh = build_mesh(scheme, params, n)?;
    let mut result = sinc_quad(f, id, &mesh)?;
    result.bound = certified(quad_certificate(scheme, id, params), params, &mesh);
    Ok(result)
}

/// Indefinite integration at size `n`, with the uniform bound over `τ` when
/// certified.
pub fn indefinite<F: Integrand + ?Sized>(
    f: &F,
    id: TransformId,
    params: &DecayParams,
    n: usize,
) -> Result<(SincIndefinite, Option<f64>)> {
    let scheme = scheme_for(id, true)?;
    let mesh = build_mesh(scheme, params, n)?;
    let approx = SincIndefinite::new(f, id, &mesh)?;
    let bound = certified(indef_certificate(scheme, id, params), params, &mesh);
    Ok((approx, bound))
}

/// `E₁(x; γ) = (1 + x²)^{−(γ+1)/2}`
pub fn envelope_case1(x: f64, gamma: f64) -> f64 {
    (1.0 + x * x).powf(-(gamma + 1.0) / 2.0)
}

/// `E₂(x; α, β) = x^{α−1} / (1 + x²)^{(α+β)/2}`
pub fn envelope_case2(x: f64, alpha: f64, beta: f64) -> f64 {
    x.powf(alpha - 1.0) / (1.0 + x * x).powf((alpha + beta) / 2.0)
}

/// `E₃(x; α, β) = (x/(1 + x))^{α−1} e^{−βx}`
pub fn envelope_case3(x: f64, alpha: f64, beta: f64) -> f64 {
    (x / (1.0 + x)).powf(alpha - 1.0) * (-beta * x).exp()
}

/// Largest sampled ratio `|f(x)| / (K |E(x)|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeReport {
    pub max_ratio: f64,
    pub at: f64,
}

impl EnvelopeReport {
    pub fn within(&self) -> bool {
        self.max_ratio <= 1.0
    }
}

/// Samples the real-axis decay assumption `|f(x)| ≤ K |E(x; α, β)|`.
///
/// Only a sanity check: analyticity in the strip cannot be verified this way.
pub fn envelope_check<F: Integrand + ?Sized>(
    f: &F,
    params: &DecayParams,
    id: TransformId,
    grid: &[f64],
) -> Result<EnvelopeReport> {
    if id.case() != params.case {
        return Err(SincError::Mismatch {
            scheme: scheme_for(id, false)?,
            id,
            reason: "decay parameters describe a different interval case",
        });
    }
    let DecayParams { k, alpha, beta, .. } = *params;
    let mut report = EnvelopeReport {
        max_ratio: 0.0,
        at: f64::NAN,
    };
    for &x in grid {
        let envelope = match params.case {
            IntervalCase::Case1 => envelope_case1(x, if x < 0.0 { alpha } else { beta }),
            IntervalCase::Case2 => envelope_case2(x, alpha, beta),
            IntervalCase::Case3 => envelope_case3(x, alpha, beta),
        };
        let value = f.eval(x).abs();
        // Both sides may underflow far out; a zero sample never violates.
        let ratio = if value == 0.0 {
            0.0
        } else {
            value / (k * envelope)
        };
        if ratio > report.max_ratio || ratio.is_nan() {
            report = EnvelopeReport {
                max_ratio: ratio,
                at: x,
            };
        }
    }
    Ok(report)
}
