//! Numerical integration on finite intervals.
//!
//! Two independent routes are provided. The workhorse is a globally adaptive
//! Gauss–Kronrod (G7,K15) scheme that keeps bisecting the subinterval with
//! the largest error estimate; it copes with integrable endpoint spikes by
//! grading itself toward the endpoint. The second route is a composite
//! Simpson rule on a dyadic mesh, used as a cross-check: agreement between
//! the two is strong evidence that neither silently missed a feature.

use crate::error::{Error, Result};

// 15-point Kronrod abscissae on [-1,1] (positive half) and the matching
// Kronrod and embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// One (G7,K15) evaluation on `[a,b]`: returns the K15 value and an error
/// estimate from the Gauss/Kronrod discrepancy.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    kronrod *= half;
    gauss *= half;
    let err = (200.0 * (kronrod - gauss).abs()).powf(1.5).min((kronrod - gauss).abs());
    (kronrod, err)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// Globally adaptive Gauss–Kronrod integration of `f` over `[a,b]`.
///
/// Terminates once the summed error estimate drops below
/// `max(abs_tol, rel_tol * |integral|)`; errors out if `max_panels`
/// subdivisions were not enough.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::Argument(format!("bad integration interval [{a}, {b}]")));
    }
    let (v, e) = kronrod15(&f, a, b);
    let mut panels = vec![Panel { a, b, value: v, error: e }];
    let mut total = v;
    let mut total_err = e;

    while total_err > abs_tol.max(rel_tol * total.abs()) {
        if panels.len() >= max_panels {
            return Err(Error::Numeric(format!(
                "quadrature did not converge: {} panels, error estimate {total_err:.3e}",
                panels.len()
            )));
        }
        // split the worst panel
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.error.total_cmp(&y.error))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let Panel { a, b, value, error } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            // interval shrunk to machine resolution; accept its estimate
            total_err -= error;
            panels.push(Panel { a, b, value, error: 0.0 });
            continue;
        }
        let (v1, e1) = kronrod15(&f, a, mid);
        let (v2, e2) = kronrod15(&f, mid, b);
        total += v1 + v2 - value;
        total_err += e1 + e2 - error;
        panels.push(Panel { a, b: mid, value: v1, error: e1 });
        panels.push(Panel { a: mid, b, value: v2, error: e2 });
    }
    Ok(panels.iter().map(|p| p.value).sum())
}

/// Composite Simpson rule on a mesh that grows dyadically away from `a`.
///
/// The panel edges are `a, 2a, 4a, ...` (capped at `b`), which matches
/// integrands whose only awkward behavior is an integrable spike at the left
/// endpoint; each panel is then regular enough for Simpson with `steps`
/// subintervals. Intended as the independent cross-check for
/// [`integrate_adaptive`], not as a general-purpose routine.
pub fn integrate_dyadic_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, steps: usize) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && 0.0 < a && a < b) {
        return Err(Error::Argument(format!(
            "dyadic mesh requires 0 < a < b, got [{a}, {b}]"
        )));
    }
    let steps = steps.max(2) & !1; // even
    let mut total = 0.0;
    let mut lo = a;
    while lo < b {
        let hi = (lo * 2.0).min(b);
        let h = (hi - lo) / steps as f64;
        let mut acc = f(lo) + f(hi);
        for j in 1..steps {
            let w = if j % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(lo + j as f64 * h);
        }
        total += acc * h / 3.0;
        if hi >= b {
            break;
        }
        lo = hi;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate_adaptive(|x| x * x, 0.0, 1.0, 1e-12, 1e-12, 100).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_integrand() {
        let v = integrate_adaptive(|x| (10.0 * x).sin(), 0.0, 1.0, 1e-12, 1e-12, 1000).unwrap();
        let exact = (1.0 - (10.0_f64).cos()) / 10.0;
        assert!((v - exact).abs() < 1e-12);
    }

    #[test]
    fn integrable_endpoint_spike() {
        // int_eps^1 x^(-1/2) dx = 2 (1 - sqrt(eps))
        let eps = 1e-12;
        let v = integrate_adaptive(|x| x.powf(-0.5), eps, 1.0, 1e-10, 1e-12, 4000).unwrap();
        let exact = 2.0 * (1.0 - eps.sqrt());
        assert!((v - exact).abs() < 1e-8, "{v} vs {exact}");
    }

    #[test]
    fn truncated_divergent_spike() {
        // int_eps^1 x^(-3/2) dx = 2 (eps^(-1/2) - 1); huge but well-defined
        let eps = 1e-12;
        let v = integrate_adaptive(|x| x.powf(-1.5), eps, 1.0, 1e-10, 1e-10, 4000).unwrap();
        let exact = 2.0 * (eps.powf(-0.5) - 1.0);
        assert!((v - exact).abs() / exact < 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn dyadic_simpson_agrees_with_adaptive() {
        let eps = 1e-12;
        for f in [
            |x: f64| x.powf(-0.5),
            |x: f64| x.powf(-1.5),
            |x: f64| (1.0 - 2.0 * x) / (1.0 - x),
        ] {
            let a = integrate_adaptive(f, eps, 0.5, 1e-10, 1e-10, 4000).unwrap();
            let s = integrate_dyadic_simpson(f, eps, 0.5, 256).unwrap();
            let scale = a.abs().max(1.0);
            assert!((a - s).abs() / scale < 1e-7, "{a} vs {s}");
        }
    }

    #[test]
    fn rejects_bad_intervals() {
        assert!(integrate_adaptive(|x| x, 1.0, 0.0, 1e-8, 1e-8, 10).is_err());
        assert!(integrate_adaptive(|x| x, f64::NAN, 1.0, 1e-8, 1e-8, 10).is_err());
        assert!(integrate_dyadic_simpson(|x| x, 0.0, 1.0, 8).is_err());
    }

    #[test]
    fn reports_non_convergence() {
        // a hard spike with an absurd panel budget
        let r = integrate_adaptive(|x| x.powf(-1.5), 1e-12, 1.0, 1e-12, 1e-12, 8);
        assert!(matches!(r, Err(Error::Numeric(_))));
    }
}
