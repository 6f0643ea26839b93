//! The three reference problems, their closed-form integrals, and the
//! error-versus-bound sweeps emitted as CSV.

use std::f64::consts::{E, PI};
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::bounds::{indef_certificate, quad_certificate, scheme_for, Family, Kind};
use crate::engine::{sinc_quad, SincIndefinite};
use crate::error::{invalid, Result, SincError};
use crate::mesh::{build_mesh, validate_n, DecayParams, SchemeId};
use crate::special::{e1, gamma_zero_upper};
use crate::transforms::{IntervalCase, TransformId};

pub const CSV_HEADER: &str = "n,h,M,N,abs_error,bound";

/// Reference problem number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Example {
    /// `f₁(t) = √3 / (2π(t² + t + 1))` on `(−∞, ∞)`.
    One,
    /// `f₂(t) = 2 / (π(1 + t²))` on `(0, ∞)`.
    Two,
    /// `f₃(t) = e^{−(1+t)} / (1 + t)` on `(0, ∞)`.
    Three,
}

impl Example {
    pub const ALL: [Example; 3] = [Example::One, Example::Two, Example::Three];

    pub fn number(self) -> u8 {
        match self {
            Example::One => 1,
            Example::Two => 2,
            Example::Three => 3,
        }
    }

    pub fn case(self) -> IntervalCase {
        match self {
            Example::One => IntervalCase::Case1,
            Example::Two => IntervalCase::Case2,
            Example::Three => IntervalCase::Case3,
        }
    }

    pub fn integrand(self) -> fn(f64) -> f64 {
        match self {
            Example::One => |t| 3f64.sqrt() / (2.0 * PI * (t * t + t + 1.0)),
            Example::Two => |t| 2.0 / (PI * (1.0 + t * t)),
            Example::Three => |t| (-(1.0 + t)).exp() / (1.0 + t),
        }
    }

    /// `∫` over the whole interval.
    pub fn exact_total(self) -> f64 {
        match self {
            Example::One | Example::Two => 1.0,
            // E1(1); x = 1 is always accepted.
            Example::Three => e1(1.0).unwrap_or(f64::NAN),
        }
    }

    /// `∫` from the lower endpoint to `tau`.
    pub fn exact_indefinite(self, tau: f64) -> f64 {
        match self {
            Example::One => {
                let u = 2.0 / 3f64.sqrt() * (tau + 0.5);
                if u < -1.0 {
                    // 1/2 + atan(u)/π cancels for u → −∞.
                    -(1.0 / u).atan() / PI
                } else {
                    0.5 + u.atan() / PI
                }
            }
            Example::Two => 2.0 / PI * tau.atan(),
            Example::Three => {
                if tau <= 0.0 {
                    0.0
                } else if tau <= 0.5 {
                    example3_head(tau)
                } else {
                    let tail = gamma_zero_upper(1.0 + tau).unwrap_or(f64::NAN);
                    self.exact_total() - tail
                }
            }
        }
    }

    /// Transform and decay data for this example under `family`.
    pub fn setup(self, family: Family) -> (TransformId, DecayParams) {
        let sqrt3 = 3f64.sqrt();
        let (id, k, d) = match (self, family) {
            (Example::One, Family::Se) => (TransformId::Se1, sqrt3 * E, 0.75),
            (Example::One, Family::De) => (TransformId::De1, 8.0 * sqrt3 / E, PI / 7.0),
            (Example::Two, Family::Se) => (TransformId::Se2, 2.0 / PI, 1f64.cosh()),
            (Example::Two, Family::De) => (TransformId::De2, 2.0 / PI, 1.5),
            (Example::Three, Family::Se) => (TransformId::Se3, (-1.0f64).exp(), 1.5),
            (Example::Three, Family::De) => (TransformId::De3DoubleDagger, E, PI.ln()),
        };
        let params = DecayParams {
            k,
            alpha: 1.0,
            beta: 1.0,
            d,
            case: self.case(),
        };
        (id, params)
    }

    /// Points at which indefinite-integration errors are measured:
    /// `0, ±2^{−100}, …, ±2^{100}` (403 points) on the real line, and the
    /// 201 positive points on the half line.
    pub fn tau_grid(self) -> Vec<f64> {
        let positive = (-100..=100).map(|e| 2f64.powi(e));
        match self.case() {
            IntervalCase::Case1 => {
                let mut grid: Vec<f64> = positive.clone().rev().map(|x| -x).collect();
                grid.push(0.0);
                grid.extend(positive);
                grid
            }
            _ => positive.collect(),
        }
    }
}

/// `∫₀^τ e^{−(1+t)}/(1+t) dt` for `0 < τ ≤ 1/2`, where `E1(1) − E1(1+τ)`
/// cancels. Uses `e^{−t}/(1+t) = Σ (−1)^k S_k t^k` with `S_k = Σ_{j≤k} 1/j!`.
fn example3_head(tau: f64) -> f64 {
    let mut sum = 0.0;
    let mut partial_e = 0.0;
    let mut inv_fact = 1.0;
    let mut power = tau;
    for k in 0..200 {
        partial_e += inv_fact;
        inv_fact /= (k + 1) as f64;
        let term = partial_e * power / (k + 1) as f64;
        sum += if k % 2 == 0 { term } else { -term };
        if term < 0.25 * f64::EPSILON * sum {
            break;
        }
        power *= tau;
    }
    sum * (-1.0f64).exp()
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for Example {
    type Err = SincError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Example::One),
            "2" => Ok(Example::Two),
            "3" => Ok(Example::Three),
            _ => Err(invalid("example", format!("expected 1, 2 or 3, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentSpec {
    pub example: Example,
    pub family: Family,
    pub kind: Kind,
    pub n_list: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentRow {
    pub n: usize,
    pub h: f64,
    pub lower: usize,
    pub upper: usize,
    pub abs_error: f64,
    /// `None` when no certificate exists or `n` fails the side conditions.
    pub bound: Option<f64>,
}

impl ExperimentSpec {
    pub fn scheme(&self) -> Result<SchemeId> {
        let (id, _) = self.example.setup(self.family);
        scheme_for(id, self.kind == Kind::Indef)
    }
}

/// Approximation error and certified bound for every `n` in the spec.
///
/// For indefinite integration the error is the maximum over
/// [`Example::tau_grid`].
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ExperimentRow>> {
    let (id, params) = spec.example.setup(spec.family);
    let scheme = spec.scheme()?;
    let f = spec.example.integrand();
    let cert = match spec.kind {
        Kind::Quad => quad_certificate(scheme, id, &params)?,
        Kind::Indef => indef_certificate(scheme, id, &params)?,
    };
    let grid = match spec.kind {
        Kind::Quad => Vec::new(),
        Kind::Indef => spec.example.tau_grid(),
    };
    let exact_on_grid: Vec<f64> = grid
        .iter()
        .map(|&t| spec.example.exact_indefinite(t))
        .collect();

    spec.n_list
        .iter()
        .map(|&n| {
            let mesh = build_mesh(scheme, &params, n)?;
            let abs_error = match spec.kind {
                Kind::Quad => (sinc_quad(&f, id, &mesh)?.value - spec.example.exact_total()).abs(),
                Kind::Indef => {
                    let approx = SincIndefinite::new(&f, id, &mesh)?;
                    let mut worst = 0.0f64;
                    for (&tau, &exact) in grid.iter().zip(&exact_on_grid) {
                        worst = worst.max((approx.eval(tau)? - exact).abs());
                    }
                    worst
                }
            };
            let bound = validate_n(scheme, &params, &mesh)
                .is_valid()
                .then(|| cert.bound(n));
            Ok(ExperimentRow {
                n,
                h: mesh.h,
                lower: mesh.lower,
                upper: mesh.upper,
                abs_error,
                bound,
            })
        })
        .collect()
}

/// Shortest-exact scientific formatting with 17 significant digits.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write rows as CSV with [`CSV_HEADER`], LF line endings.
pub fn write_csv<W: Write>(mut out: W, rows: &[ExperimentRow]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        let bound = row
            .bound
            .map_or_else(|| "unavailable".to_owned(), format_real);
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.n,
            format_real(row.h),
            row.lower,
            row.upper,
            format_real(row.abs_error),
            bound
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g1 = Example::One.tau_grid();
        assert_eq!(g1.len(), 403);
        assert_eq!(g1[0], -2f64.powi(100));
        assert_eq!(g1[201], 0.0);
        assert!(g1.windows(2).all(|w| w[0] < w[1]));
        for ex in [Example::Two, Example::Three] {
            let g = ex.tau_grid();
            assert_eq!(g.len(), 201);
            assert_eq!(g[0], 2f64.powi(-100));
            assert_eq!(g[200], 2f64.powi(100));
        }
    }

    #[test]
    fn closed_forms() {
        assert!((Example::One.exact_indefinite(0.0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((Example::Two.exact_indefinite(1.0) - 0.5).abs() < 1e-16);
        // mpmath: E1(1) − E1(2) = 0.17048342368745915411
        assert!((Example::Three.exact_indefinite(1.0) - 0.170_483_423_687_459_15).abs() < 1e-15);
        assert_eq!(Example::Three.exact_indefinite(0.0), 0.0);
        // mpmath: E1(1) − E1(1.5) = 0.11936435198888762178...,
        // E1(1) − E1(1 + 2⁻⁵⁰) = 3.2674258069981653816...e−16
        assert!((Example::Three.exact_indefinite(0.5) - 0.119_364_351_988_887_62).abs() < 1e-16);
        let tiny = 2f64.powi(-50);
        assert!(
            (Example::Three.exact_indefinite(tiny) / 3.267_425_806_998_165_4e-16 - 1.0).abs()
                < 1e-14
        );
        // mpmath: 1/2 + atan(2(τ+1/2)/√3)/π at τ = −2¹⁰⁰ is 2.1746090575846771373...e−31
        let far = Example::One.exact_indefinite(-2f64.powi(100));
        assert!((far / 2.174_609_057_584_677_1e-31 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn setups_follow_examples() {
        let (id, p) = Example::Two.setup(Family::Se);
        assert_eq!(id, TransformId::Se2);
        assert_eq!(p.d, 1f64.cosh());
        let (id, p) = Example::Three.setup(Family::De);
        assert_eq!(id, TransformId::De3DoubleDagger);
        assert_eq!((p.k, p.d), (E, PI.ln()));
        for ex in Example::ALL {
            for fam in [Family::Se, Family::De] {
                let (id, p) = ex.setup(fam);
                assert_eq!(id.case(), p.case);
                assert!(DecayParams::new(p.k, p.alpha, p.beta, p.d, p.case).is_ok());
            }
        }
    }

    #[test]
    fn csv_layout() {
        let rows = [
            ExperimentRow {
                n: 5,
                h: 0.5,
                lower: 5,
                upper: 5,
                abs_error: 1e-3,
                bound: Some(2e-3),
            },
            ExperimentRow {
                n: 1,
                h: 0.25,
                lower: 1,
                upper: 1,
                abs_error: 0.1,
                bound: None,
            },
        ];
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "n,h,M,N,abs_error,bound\n\
             5,5.0000000000000000e-1,5,5,1.0000000000000000e-3,2.0000000000000000e-3\n\
             1,2.5000000000000000e-1,1,1,1.0000000000000001e-1,unavailable\n"
        );
    }
}
