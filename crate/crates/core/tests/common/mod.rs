#![allow(dead_code)]

use std::f64::consts::PI;

use sinc_core::bounds::{Family, Kind};
use sinc_core::experiments::Example;
use sinc_core::transforms::TransformId;

/// Transforms that carry an explicit constant.
pub const CERTIFIED: [TransformId; 6] = [
    TransformId::Se1,
    TransformId::Se2,
    TransformId::Se3,
    TransformId::De1,
    TransformId::De2,
    TransformId::De3DoubleDagger,
];

pub const FAMILIES: [Family; 2] = [Family::Se, Family::De];
pub const KINDS: [Kind; 2] = [Kind::Quad, Kind::Indef];

pub fn pairs() -> impl Iterator<Item = (Example, Family)> {
    Example::ALL
        .into_iter()
        .flat_map(|ex| FAMILIES.into_iter().map(move |fam| (ex, fam)))
}

/// `count` equally spaced points covering `[a, b]`, endpoints included.
pub fn linspace(a: f64, b: f64, count: usize) -> Vec<f64> {
    let step = (b - a) / (count - 1) as f64;
    (0..count).map(|i| a + step * i as f64).collect()
}

/// Gauss–Legendre nodes and weights on `[−1, 1]` by Newton's method on the
/// three-term recurrence.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let n = order as f64;
    for i in 0..order.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=order {
                let j = j as f64;
                let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    (nodes, weights)
}

/// `Si(x)` by composite 20-point Gauss–Legendre on panels of width ≤ 1/4.
pub fn si_oracle(x: f64) -> f64 {
    let (nodes, weights) = gauss_legendre(20);
    let panels = ((x.abs() / 0.25).ceil() as usize).max(1);
    let width = x.abs() / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        let half = 0.5 * width;
        let mut s = 0.0;
        for (t, w) in nodes.iter().zip(&weights) {
            let u = mid + half * t;
            s += w * u.sin() / u;
        }
        total += half * s;
    }
    total.copysign(x)
}

/// Central difference of fourth order.
pub fn five_point_derivative(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}
