//! Explicit a-priori error bounds.
//!
//! Each certificate is a constant `C` together with a convergence rate in
//! `n`; the bound at `n` is `C · rate(n)`. Two independent routes produce the
//! constants: [`quad_certificate`]/[`indef_certificate`] evaluate the closed
//! forms per transform directly, while [`general_envelope_bound`] works in
//! the envelope function spaces and needs the `(L, R)` pair that
//! [`lemma_envelope`] derives for each transform.

use std::f64::consts::{E, PI};

use crate::error::{invalid, Result, SincError};
use crate::mesh::{build_mesh, validate_n, DecayParams, SchemeId};
use crate::transforms::{IntervalCase, TransformId};

/// Constant factor in the SE indefinite-integration bounds.
const INDEF_SE_FACTOR: f64 = 1.1;

fn check_strip(d: f64) -> Result<()> {
    if d > 0.0 && d < PI / 2.0 {
        Ok(())
    } else {
        Err(invalid("d", format!("must satisfy 0 < d < π/2, got {d}")))
    }
}

/// `c_{α,d}`, the case-3 SE factor.
pub fn c_alpha_d(alpha: f64, d: f64) -> Result<f64> {
    check_strip(d)?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(invalid("alpha", format!("must be positive, got {alpha}")));
    }
    if alpha < 1.0 {
        Ok((2.0 * (1.0 + 1.0 / d.cos())).powf((1.0 - alpha) / 2.0))
    } else {
        Ok(2f64.powf((alpha - 1.0) / 2.0))
    }
}

/// `c̃_d = c_d (1 + log(1 + c_d)) / log(1 + c_d)` with `c_d = 1 + 1/cos((π/2) sin d)`.
pub fn c_tilde_d(d: f64) -> Result<f64> {
    check_strip(d)?;
    let c = 1.0 + 1.0 / (PI / 2.0 * d.sin()).cos();
    let l = c.ln_1p();
    Ok((1.0 + l) / l * c)
}

/// `ε^DE_{d,μ}(n) = e^{−πdn/log(4dn/μ)} log(4dn/μ) / n`.
pub fn rate_eps_de(d: f64, mu: f64, n: usize) -> Result<f64> {
    let l = (4.0 * d * n as f64 / mu).ln();
    if l.is_nan() || l <= 0.0 || n == 0 {
        return Err(invalid(
            "n",
            format!("requires 4dn/μ > 1, got d = {d}, μ = {mu}, n = {n}"),
        ));
    }
    Ok(de_eps(d, mu, n as f64))
}

fn de_eps(d: f64, mu: f64, n: f64) -> f64 {
    let l = (4.0 * d * n / mu).ln();
    (-PI * d * n / l).exp() * l / n
}

/// Convergence rate as a function of `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rate {
    /// `e^{−√(2πdμn)}`
    SeQuad { d: f64, mu: f64 },
    /// `e^{−√(πdμn)}`
    SeIndef { d: f64, mu: f64 },
    /// `e^{−2πdn/log(c·dn/μ)}`, with `c = 8` (DE1, DE2), `4` (DE3‡) or `2π` (DE3†).
    DeQuad { d: f64, mu: f64, c: f64 },
    /// `ε^DE_{d,μ}(n)`
    DeIndef { d: f64, mu: f64 },
}

impl Rate {
    pub fn eval(&self, n: usize) -> f64 {
        let n = n as f64;
        match *self {
            Rate::SeQuad { d, mu } => (-(2.0 * PI * d * mu * n).sqrt()).exp(),
            Rate::SeIndef { d, mu } => (-(PI * d * mu * n).sqrt()).exp(),
            Rate::DeQuad { d, mu, c } => (-2.0 * PI * d * n / (c * d * n / mu).ln()).exp(),
            Rate::DeIndef { d, mu } => de_eps(d, mu, n),
        }
    }
}

/// Rate attached to `scheme`. Defined for every scheme, including the
/// rate-only DE3† quadrature.
pub fn scheme_rate(scheme: SchemeId, params: &DecayParams) -> Rate {
    let (d, mu) = (params.d, params.mu());
    match scheme {
        SchemeId::SeQuad => Rate::SeQuad { d, mu },
        SchemeId::SeIndef => Rate::SeIndef { d, mu },
        SchemeId::DeQuad => Rate::DeQuad { d, mu, c: 8.0 },
        SchemeId::De3Quad => Rate::DeQuad { d, mu, c: 4.0 },
        SchemeId::De3DaggerQuad => Rate::DeQuad { d, mu, c: 2.0 * PI },
        SchemeId::DeIndef => Rate::DeIndef { d, mu },
        SchemeId::De3Indef => Rate::DeIndef { d, mu: 2.0 * mu },
    }
}

/// `C` and `rate(n)` for one scheme and one set of decay data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCertificate {
    pub constant: f64,
    pub rate: Rate,
    pub scheme: SchemeId,
    pub params: DecayParams,
}

impl BoundCertificate {
    /// `C · rate(n)`, without checking the side conditions on `n`.
    pub fn bound(&self, n: usize) -> f64 {
        self.constant * self.rate.eval(n)
    }

    /// `C · rate(n)` if `n` satisfies the theorem's side conditions.
    pub fn certify(&self, n: usize) -> Result<f64> {
        let mesh = build_mesh(self.scheme, &self.params, n)?;
        if validate_n(self.scheme, &self.params, &mesh).is_valid() {
            Ok(self.bound(n))
        } else {
            Err(SincError::InvalidN {
                scheme: self.scheme,
                n,
            })
        }
    }
}

/// The scheme a transform uses for quadrature or indefinite integration.
pub fn scheme_for(id: TransformId, indefinite: bool) -> Result<SchemeId> {
    use TransformId::*;
    Ok(match (id, indefinite) {
        (Se1 | Se2 | Se3, false) => SchemeId::SeQuad,
        (Se1 | Se2 | Se3, true) => SchemeId::SeIndef,
        (De1 | De2, false) => SchemeId::DeQuad,
        (De1 | De2, true) => SchemeId::DeIndef,
        (De3DoubleDagger, false) => SchemeId::De3Quad,
        (De3DoubleDagger, true) => SchemeId::De3Indef,
        (De3Dagger, false) => SchemeId::De3DaggerQuad,
        (De3Dagger, true) => return Err(SincError::UnsupportedTransform(id)),
    })
}

fn check_pairing(scheme: SchemeId, id: TransformId, params: &DecayParams) -> Result<()> {
    if scheme == SchemeId::De3DaggerQuad {
        return Err(SincError::NoCertificate(scheme));
    }
    if id.case() != params.case {
        return Err(SincError::Mismatch {
            scheme,
            id,
            reason: "decay parameters describe a different interval case",
        });
    }
    let expected = scheme_for(id, scheme.is_indefinite())?;
    if expected != scheme {
        return Err(SincError::Mismatch {
            scheme,
            id,
            reason: "the transform belongs to another scheme",
        });
    }
    if matches!(scheme, SchemeId::De3Quad | SchemeId::De3Indef) && params.alpha > 1.0 {
        return Err(invalid(
            "alpha",
            format!("DE3‡ requires alpha <= 1, got {}", params.alpha),
        ));
    }
    Ok(())
}

/// `2^{(1−α+|1−α|)/2}`
fn case3_right_factor(alpha: f64) -> f64 {
    2f64.powf((1.0 - alpha + (1.0 - alpha).abs()) / 2.0)
}

/// Certificate for quadrature: `SeQuad`, `DeQuad` or `De3Quad`.
pub fn quad_certificate(
    scheme: SchemeId,
    id: TransformId,
    params: &DecayParams,
) -> Result<BoundCertificate> {
    if scheme.is_indefinite() {
        return Err(SincError::Mismatch {
            scheme,
            id,
            reason: "not a quadrature scheme",
        });
    }
    check_pairing(scheme, id, params)?;
    let DecayParams {
        k,
        alpha,
        beta,
        d,
        case,
    } = *params;
    let (mu, nu) = (params.mu(), params.nu());
    let half_sum = (alpha + beta) / 2.0;
    let constant = match scheme {
        SchemeId::SeQuad => {
            let den = 1.0 - (-(2.0 * PI * d * mu).sqrt()).exp();
            match case {
                IntervalCase::Case1 => {
                    2f64.powf(nu + 1.0) * k / mu * (2.0 / (den * d.cos().powf(nu)) + 1.0)
                }
                IntervalCase::Case2 => 2.0 * k / mu * (2.0 / (den * d.cos().powf(half_sum)) + 1.0),
                IntervalCase::Case3 => {
                    let c = c_alpha_d(alpha, d)?;
                    2.0 * k / mu
                        * (2f64.powf(1.0 + beta / 2.0) * c / (den * d.cos().powf(half_sum))
                            + case3_right_factor(alpha))
                }
            }
        }
        SchemeId::DeQuad => {
            let den = 1.0 - (-PI * mu * E / 4.0).exp();
            let cs = (PI / 2.0 * d.sin()).cos();
            let tail = (PI * nu / 4.0).exp();
            match case {
                IntervalCase::Case1 => {
                    2f64.powf(nu + 1.0) * k / mu * (2.0 / (den * cs.powf(nu) * d.cos()) + tail)
                }
                _ => 2.0 * k / mu * (2.0 / (den * cs.powf(half_sum) * d.cos()) + tail),
            }
        }
        SchemeId::De3Quad => {
            let den = 1.0 - (-PI * mu * E / 2.0).exp();
            let cs = (PI / 2.0 * d.sin()).cos();
            let ct = c_tilde_d(d)?;
            2.0 * k / mu
                * (2.0 * ct.powf(1.0 - alpha) / (den * cs.powf(alpha + beta) * d.cos())
                    + (PI * (1.0 - alpha + 6.0 * nu) / 12.0).exp())
        }
        _ => unreachable!("filtered above"),
    };
    Ok(BoundCertificate {
        constant,
        rate: scheme_rate(scheme, params),
        scheme,
        params: *params,
    })
}

/// Certificate for indefinite integration: `SeIndef`, `DeIndef` or `De3Indef`.
pub fn indef_certificate(
    scheme: SchemeId,
    id: TransformId,
    params: &DecayParams,
) -> Result<BoundCertificate> {
    if !scheme.is_indefinite() {
        return Err(SincError::Mismatch {
            scheme,
            id,
            reason: "not an indefinite-integration scheme",
        });
    }
    check_pairing(scheme, id, params)?;
    let DecayParams {
        k,
        alpha,
        beta,
        d,
        case,
    } = *params;
    let (mu, nu) = (params.mu(), params.nu());
    let half_sum = (alpha + beta) / 2.0;
    let constant = match scheme {
        SchemeId::SeIndef => {
            let den = 1.0 - (-2.0 * (PI * d * mu).sqrt()).exp();
            let root = (PI / (d * mu)).sqrt();
            match case {
                IntervalCase::Case1 => {
                    2f64.powf(nu + 1.0) * k / mu
                        * (root / (den * d.cos().powf(nu)) + INDEF_SE_FACTOR)
                }
                IntervalCase::Case2 => {
                    2.0 * k / mu * (root / (den * d.cos().powf(half_sum)) + INDEF_SE_FACTOR)
                }
                IntervalCase::Case3 => {
                    let c = c_alpha_d(alpha, d)?;
                    // 2^{β/2}, not 2^{1+β/2}: the envelope bound takes L, not 2L, here.
                    2.0 * k / mu
                        * (2f64.powf(beta / 2.0) * c * root / (den * d.cos().powf(half_sum))
                            + INDEF_SE_FACTOR * case3_right_factor(alpha))
                }
            }
        }
        SchemeId::DeIndef => {
            let den = 1.0 - (-PI * mu * E / 2.0).exp();
            let cs = (PI / 2.0 * d.sin()).cos();
            let tail = (PI * (alpha + beta) / 4.0).exp();
            match case {
                IntervalCase::Case1 => {
                    2f64.powf(nu + 1.0) * k / (mu * d)
                        * (1.0 / (den * cs.powf(nu) * d.cos()) + tail)
                }
                _ => 2.0 * k / (mu * d) * (1.0 / (den * cs.powf(half_sum) * d.cos()) + tail),
            }
        }
        SchemeId::De3Indef => {
            let den = 1.0 - (-PI * mu * E).exp();
            let cs = (PI / 2.0 * d.sin()).cos();
            let ct = c_tilde_d(d)?;
            2.0 * k / (mu * d)
                * (ct.powf(1.0 - alpha) / (den * cs.powf(alpha + beta) * d.cos())
                    + (PI * (1.0 + 5.0 * alpha + 6.0 * beta) / 12.0).exp())
        }
        _ => unreachable!("filtered above"),
    };
    Ok(BoundCertificate {
        constant,
        rate: scheme_rate(scheme, params),
        scheme,
        params: *params,
    })
}

/// SE or DE envelope function space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Se,
    De,
}

/// Definite or indefinite integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Quad,
    Indef,
}

/// Membership data for the envelope spaces: `L` bounds the transformed
/// integrand in the strip, `R` on the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralEnvelope {
    pub l: f64,
    pub r: f64,
    pub alpha: f64,
    pub beta: f64,
    pub d: f64,
}

impl GeneralEnvelope {
    pub fn new(l: f64, r: f64, alpha: f64, beta: f64, d: f64) -> Result<Self> {
        for (name, v) in [("L", l), ("R", r), ("alpha", alpha), ("beta", beta)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(invalid(
                    name,
                    format!("must be positive and finite, got {v}"),
                ));
            }
        }
        check_strip(d)?;
        Ok(GeneralEnvelope {
            l,
            r,
            alpha,
            beta,
            d,
        })
    }

    pub fn mu(&self) -> f64 {
        self.alpha.min(self.beta)
    }

    pub fn nu(&self) -> f64 {
        self.alpha.max(self.beta)
    }

    fn as_params(&self) -> DecayParams {
        DecayParams {
            k: 1.0,
            alpha: self.alpha,
            beta: self.beta,
            d: self.d,
            case: IntervalCase::Case1,
        }
    }
}

fn envelope_scheme(space: Family, kind: Kind) -> SchemeId {
    match (space, kind) {
        (Family::Se, Kind::Quad) => SchemeId::SeQuad,
        (Family::Se, Kind::Indef) => SchemeId::SeIndef,
        (Family::De, Kind::Quad) => SchemeId::DeQuad,
        (Family::De, Kind::Indef) => SchemeId::DeIndef,
    }
}

/// The constant of the envelope-space bound, without the rate.
pub fn general_envelope_constant(space: Family, kind: Kind, env: &GeneralEnvelope) -> f64 {
    let GeneralEnvelope {
        l,
        r,
        alpha,
        beta,
        d,
    } = *env;
    let (mu, nu) = (env.mu(), env.nu());
    let half_sum = (alpha + beta) / 2.0;
    match (space, kind) {
        (Family::Se, Kind::Quad) => {
            let den = 1.0 - (-(2.0 * PI * d * mu).sqrt()).exp();
            2.0 / mu * (2.0 * l / (den * d.cos().powf(half_sum)) + r)
        }
        (Family::Se, Kind::Indef) => {
            let den = 1.0 - (-2.0 * (PI * d * mu).sqrt()).exp();
            2.0 / mu
                * (l / (den * d.cos().powf(half_sum)) * (PI / (d * mu)).sqrt()
                    + INDEF_SE_FACTOR * r)
        }
        (Family::De, Kind::Quad) => {
            let den = 1.0 - (-PI * mu * E / 4.0).exp();
            let cs = (PI / 2.0 * d.sin()).cos();
            2.0 / mu * (2.0 * l / (den * cs.powf(half_sum) * d.cos()) + r * (PI * nu / 4.0).exp())
        }
        (Family::De, Kind::Indef) => {
            let den = 1.0 - (-PI * mu * E / 2.0).exp();
            let cs = (PI / 2.0 * d.sin()).cos();
            2.0 / (mu * d)
                * (l / (den * cs.powf(half_sum) * d.cos()) + r * (PI * (alpha + beta) / 4.0).exp())
        }
    }
}

/// Error bound for any transformed integrand in the SE or DE envelope space.
///
/// For DE spaces `n` must satisfy the side conditions of the underlying
/// theorem; otherwise this returns [`SincError::InvalidN`].
pub fn general_envelope_bound(
    space: Family,
    kind: Kind,
    env: &GeneralEnvelope,
    n: usize,
) -> Result<f64> {
    let scheme = envelope_scheme(space, kind);
    let params = env.as_params();
    let mesh = build_mesh(scheme, &params, n)?;
    if !validate_n(scheme, &params, &mesh).is_valid() {
        return Err(SincError::InvalidN { scheme, n });
    }
    let rate = scheme_rate(scheme, &params);
    Ok(general_envelope_constant(space, kind, env) * rate.eval(n))
}

/// The envelope-space membership `(L, R, α, β, d)` of `f(ψ(·))ψ′(·)` for an
/// integrand satisfying `params` under transform `id`.
///
/// DE3‡ lands in the DE space with doubled exponents `(2α, 2β)`.
pub fn lemma_envelope(id: TransformId, params: &DecayParams) -> Result<(Family, GeneralEnvelope)> {
    if id.case() != params.case {
        return Err(SincError::Mismatch {
            scheme: scheme_for(id, false).unwrap_or(SchemeId::De3DaggerQuad),
            id,
            reason: "decay parameters describe a different interval case",
        });
    }
    let DecayParams {
        k, alpha, beta, d, ..
    } = *params;
    let (mu, nu) = (params.mu(), params.nu());
    let (family, l, r, a, b) = match id {
        TransformId::Se1 => {
            let two_nu = 2f64.powf(nu);
            (
                Family::Se,
                two_nu * k / d.cos().powf((nu - mu) / 2.0),
                two_nu * k,
                alpha,
                beta,
            )
        }
        TransformId::Se2 => (Family::Se, k, k, alpha, beta),
        TransformId::Se3 => (
            Family::Se,
            2f64.powf(beta / 2.0) * c_alpha_d(alpha, d)? * k,
            case3_right_factor(alpha) * k,
            alpha,
            beta,
        ),
        TransformId::De1 => {
            let two_nu = 2f64.powf(nu);
            let cs = (PI / 2.0 * d.sin()).cos();
            (
                Family::De,
                two_nu * k / cs.powf((nu - mu) / 2.0),
                two_nu * k,
                alpha,
                beta,
            )
        }
        TransformId::De2 => (Family::De, k, k, alpha, beta),
        TransformId::De3DoubleDagger => {
            if alpha > 1.0 {
                return Err(invalid(
                    "alpha",
                    format!("DE3‡ requires alpha <= 1, got {alpha}"),
                ));
            }
            (
                Family::De,
                2.0 * c_tilde_d(d)?.powf(1.0 - alpha) * k,
                2.0 * (PI / 12.0).exp().powf(1.0 - alpha) * k,
                2.0 * alpha,
                2.0 * beta,
            )
        }
        TransformId::De3Dagger => return Err(SincError::NoCertificate(SchemeId::De3DaggerQuad)),
    };
    Ok((family, GeneralEnvelope::new(l, r, a, b, d)?))
}
