//! Verified automatic integration: pick the smallest admissible `n` whose
//! certified bound meets a tolerance, then evaluate once.

use crate::bounds::{indef_certificate, quad_certificate, BoundCertificate};
use crate::engine::{sinc_quad, Integrand, QuadResult, SincIndefinite};
use crate::error::{invalid, Result, SincError};
use crate::mesh::{build_mesh, validate_n, DecayParams, SchemeId};
use crate::transforms::TransformId;

pub const DEFAULT_N_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceRequest {
    pub tol: f64,
    pub scheme: SchemeId,
    pub id: TransformId,
    pub params: DecayParams,
    pub n_cap: usize,
}

impl ToleranceRequest {
    pub fn new(tol: f64, scheme: SchemeId, id: TransformId, params: DecayParams) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(invalid("tol", format!("must be positive, got {tol}")));
        }
        Ok(ToleranceRequest {
            tol,
            scheme,
            id,
            params,
            n_cap: DEFAULT_N_CAP,
        })
    }

    pub fn with_n_cap(mut self, n_cap: usize) -> Self {
        self.n_cap = n_cap;
        self
    }

    fn certificate(&self) -> Result<BoundCertificate> {
        if self.scheme.is_indefinite() {
            indef_certificate(self.scheme, self.id, &self.params)
        } else {
            quad_certificate(self.scheme, self.id, &self.params)
        }
    }

    fn is_valid(&self, n: usize) -> bool {
        build_mesh(self.scheme, &self.params, n)
            .map(|mesh| validate_n(self.scheme, &self.params, &mesh).is_valid())
            .unwrap_or(false)
    }
}

/// Smallest `n ≤ n_cap` that passes the side conditions and whose bound is at
/// most `tol`, together with that bound.
pub fn choose_n(req: &ToleranceRequest) -> Result<(usize, f64)> {
    if req.tol.is_nan() || req.tol <= 0.0 {
        return Err(invalid("tol", format!("must be positive, got {}", req.tol)));
    }
    let cert = req.certificate()?;
    let unreachable = || SincError::ToleranceUnreachable {
        tol: req.tol,
        n_cap: req.n_cap,
    };
    let start = (1..=req.n_cap)
        .find(|&n| req.is_valid(n))
        .ok_or_else(unreachable)?;
    let bound = |n: usize| cert.bound(n);
    if bound(start) <= req.tol {
        return Ok((start, bound(start)));
    }

    // Doubling: bound(lo) > tol throughout.
    let mut lo = start;
    let mut hi = start;
    loop {
        if hi >= req.n_cap {
            return Err(unreachable());
        }
        hi = hi.saturating_mul(2).min(req.n_cap);
        debug_assert!(bound(hi) <= bound(lo), "bound not monotone on [{lo}, {hi}]");
        if bound(hi) <= req.tol {
            break;
        }
        lo = hi;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        debug_assert!(bound(mid) <= bound(lo) && bound(hi) <= bound(mid));
        if bound(mid) <= req.tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // The side conditions are not monotone in n in general.
    (hi..=req.n_cap)
        .find(|&n| req.is_valid(n))
        .map(|n| (n, bound(n)))
        .ok_or_else(unreachable)
}

/// Quadrature with `n` from [`choose_n`]; `bound` holds the certified bound.
pub fn integrate_to_tol<F: Integrand + ?Sized>(
    f: &F,
    req: &ToleranceRequest,
) -> Result<QuadResult> {
    if req.scheme.is_indefinite() {
        return Err(SincError::Mismatch {
            scheme: req.scheme,
            id: req.id,
            reason: "use indefinite_to_tol for indefinite schemes",
        });
    }
    let (n, certified) = choose_n(req)?;
    let mesh = build_mesh(req.scheme, &req.params, n)?;
    let mut result = sinc_quad(f, req.id, &mesh)?;
    result.bound = Some(certified);
    Ok(result)
}

/// Indefinite integration whose uniform bound over `τ` meets the tolerance.
pub fn indefinite_to_tol<F: Integrand + ?Sized>(
    f: &F,
    req: &ToleranceRequest,
) -> Result<(SincIndefinite, f64)> {
    if !req.scheme.is_indefinite() {
        return Err(SincError::Mismatch {
            scheme: req.scheme,
            id: req.id,
            reason: "use integrate_to_tol for quadrature schemes",
        });
    }
    let (n, certified) = choose_n(req)?;
    let mesh = build_mesh(req.scheme, &req.params, n)?;
    Ok((SincIndefinite::new(f, req.id, &mesh)?, certified))
}
