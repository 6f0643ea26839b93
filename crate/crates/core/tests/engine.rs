mod common;

use common::{linspace, pairs, KINDS};
use sinc_core::bounds::{Family, Kind};
use sinc_core::engine::{envelope_check, indefinite, integrate, sinc_quad, SincIndefinite};
use sinc_core::experiments::Example;
use sinc_core::mesh::{build_mesh, SchemeId};
use sinc_core::transforms::TransformId;

/// `h Σ |F(kh)|`, the scale of the rounding error in a Sinc sum.
fn abs_sum(example: Example, id: TransformId, n: usize, kind: Kind) -> f64 {
    let (_, params) = example.setup(if id.is_double_exponential() {
        Family::De
    } else {
        Family::Se
    });
    let scheme = sinc_core::bounds::scheme_for(id, kind == Kind::Indef).unwrap();
    let mesh = build_mesh(scheme, &params, n).unwrap();
    let f = example.integrand();
    sinc_quad(&|t: f64| f(t).abs(), id, &mesh).unwrap().value
}

#[test]
fn quadrature_is_linear() {
    let (id, params) = Example::Two.setup(Family::De);
    let mesh = build_mesh(SchemeId::DeQuad, &params, 30).unwrap();
    let f = Example::Two.integrand();
    let g = |t: f64| (-t).exp();
    let combo = |t: f64| 3.0 * f(t) - 0.5 * g(t);
    let lhs = sinc_quad(&combo, id, &mesh).unwrap().value;
    let rhs = 3.0 * sinc_quad(&f, id, &mesh).unwrap().value
        - 0.5 * sinc_quad(&g, id, &mesh).unwrap().value;
    assert!((lhs - rhs).abs() < 1e-14);
}

#[test]
fn examples_meet_their_bounds_above_rounding() {
    for (example, family) in pairs() {
        let (id, params) = example.setup(family);
        let f = example.integrand();
        for n in [10, 20, 30] {
            let r = integrate(&f, id, &params, n).unwrap();
            let err = (r.value - example.exact_total()).abs();
            if let Some(bound) = r.bound.filter(|b| *b > 1e-13) {
                assert!(err <= bound, "ex{example} {id} n={n}: {err:e} > {bound:e}");
            }
        }
    }
}

/// The certified bound covers the discretisation error only; the computed
/// error may also contain rounding of order `ε h Σ|F(kh)|`.
#[test]
fn bound_dominates_up_to_rounding() {
    let eps = f64::EPSILON;
    for (example, family) in pairs() {
        let (id, params) = example.setup(family);
        let f = example.integrand();
        for kind in KINDS {
            for n in (5..=100).step_by(5) {
                let allowance =
                    16.0 * eps * (abs_sum(example, id, n, kind) + example.exact_total());
                let (err, bound) = match kind {
                    Kind::Quad => {
                        let r = integrate(&f, id, &params, n).unwrap();
                        ((r.value - example.exact_total()).abs(), r.bound)
                    }
                    Kind::Indef => {
                        let (a, bound) = indefinite(&f, id, &params, n).unwrap();
                        let err = example
                            .tau_grid()
                            .into_iter()
                            .map(|t| (a.eval(t).unwrap() - example.exact_indefinite(t)).abs())
                            .fold(0.0, f64::max);
                        (err, bound)
                    }
                };
                if let Some(bound) = bound {
                    assert!(
                        err <= bound + allowance,
                        "ex{example} {id} {kind:?} n={n}: {err:e} > {bound:e} + {allowance:e}"
                    );
                }
            }
        }
    }
}

#[test]
fn errors_decay() {
    for (example, family) in pairs() {
        let (id, params) = example.setup(family);
        let f = example.integrand();
        let err = |n| (integrate(&f, id, &params, n).unwrap().value - example.exact_total()).abs();
        let (e10, e20) = (err(10), err(20));
        assert!(
            e20 < e10 || e20 < 1e-15,
            "ex{example} {id}: {e10:e} -> {e20:e}"
        );
    }
}

#[test]
fn de_beats_se_at_equal_n() {
    for example in Example::ALL {
        let f = example.integrand();
        let err = |family| {
            let (id, params) = example.setup(family);
            (integrate(&f, id, &params, 20).unwrap().value - example.exact_total()).abs()
        };
        assert!(err(Family::De) < err(Family::Se), "ex{example}");
    }
}

#[test]
fn indefinite_at_infinity_matches_quadrature_on_same_mesh() {
    for (example, family) in pairs() {
        let (id, params) = example.setup(family);
        let f = example.integrand();
        let scheme = sinc_core::bounds::scheme_for(id, true).unwrap();
        let mesh = build_mesh(scheme, &params, 25).unwrap();
        let a = SincIndefinite::new(&f, id, &mesh).unwrap();
        let q = sinc_quad(&f, id, &mesh).unwrap().value;
        assert!((a.eval(f64::INFINITY).unwrap() - q).abs() < 4.0 * f64::EPSILON * q.abs());
        assert_eq!(a.terms_used(), sinc_quad(&f, id, &mesh).unwrap().terms_used);
    }
}

#[test]
fn indefinite_tracks_closed_form() {
    for (example, family) in pairs() {
        let (id, params) = example.setup(family);
        let f = example.integrand();
        let (a, _) = indefinite(&f, id, &params, 60).unwrap();
        for t in [0.1, 0.5, 1.0, 3.0, 10.0] {
            let err = (a.eval(t).unwrap() - example.exact_indefinite(t)).abs();
            assert!(err < 1e-4, "ex{example} {id} tau={t}: {err:e}");
        }
    }
}

#[test]
fn examples_satisfy_real_axis_envelopes() {
    for (example, family) in pairs() {
        let (id, params) = example.setup(family);
        let grid = match example {
            Example::One => linspace(-1e3, 1e3, 20_001),
            _ => linspace(1e-6, 1e3, 20_001),
        };
        let r = envelope_check(&example.integrand(), &params, id, &grid).unwrap();
        // Example 2 meets its envelope with equality.
        assert!(
            r.max_ratio <= 1.0 + 4.0 * f64::EPSILON,
            "ex{example} {id}: ratio {} at {}",
            r.max_ratio,
            r.at
        );
    }
}

#[test]
fn de3_dagger_evaluates_without_bound() {
    let (_, params) = Example::Three.setup(Family::De);
    let f = Example::Three.integrand();
    let r = integrate(&f, TransformId::De3Dagger, &params, 40).unwrap();
    assert!(r.bound.is_none());
    assert!((r.value - Example::Three.exact_total()).abs() < 1e-10);
    assert!(indefinite(&f, TransformId::De3Dagger, &params, 40).is_err());
}
