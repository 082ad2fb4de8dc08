//! Window-spacing estimators of cumulative past/residual extropy of
//! k-record values, and the signed symmetry test statistic built on them.
//!
//! For a sorted sample of size `N`, every estimator is a single weighted sum
//! over `i = 1..=N` of the clamped spacing `X_{min(i+m,N):N} - X_{max(i-m,1):N}`,
//! with the plug-in CDF position `u_i = i/(N+1)` and the spacing divisor
//! `2m/N` applied uniformly (no boundary correction). The weight attached to
//! position `u` is the squared CDF (lower records) or squared survival
//! function (upper records) of the chosen record value, evaluated at the
//! `u`-quantile:
//!
//! ```text
//! lower:  u^{2k} (sum_{j=0}^{n-1} (-k ln u)^j / j!)^2
//! upper:  the same expression at 1-u
//! ```
//!
//! The signed statistic is the upper-record estimate minus the lower-record
//! estimate, computed as one fused sum with a single weight difference per
//! index. It is zero in population exactly for symmetric distributions.

use crate::error::{Error, Result};
use crate::sample::{RecordSpec, Sample, StatisticValue, WindowSpec};

/// Squared record-value CDF weight: `v^{2k} (sum_{j<n} (-k ln v)^j / j!)^2`.
///
/// Evaluated at `v = u` this is the lower-record weight; at `v = 1-u` the
/// upper-record weight. `v` must lie strictly inside (0,1).
fn record_weight_kernel(v: f64, r: RecordSpec) -> f64 {
    let x = -(r.k as f64) * v.ln(); // >= 0 on (0,1)
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..r.n {
        term *= x / j as f64;
        sum += term;
    }
    v.powi(2 * r.k as i32) * sum * sum
}

fn check_unit_interval(u: f64) -> Result<()> {
    if u > 0.0 && u < 1.0 {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "quantile position must lie strictly inside (0,1), got {u}"
        )))
    }
}

/// Lower-record weight `F^2_{L_{n,k}}` at the `u`-quantile.
pub fn weight_lower(u: f64, r: RecordSpec) -> Result<f64> {
    check_unit_interval(u)?;
    Ok(record_weight_kernel(u, r))
}

/// Upper-record weight `(survival of U_{n,k})^2` at the `u`-quantile.
///
/// By construction `weight_upper(u) = weight_lower(1-u)`.
pub fn weight_upper(u: f64, r: RecordSpec) -> Result<f64> {
    check_unit_interval(u)?;
    Ok(record_weight_kernel(1.0 - u, r))
}

/// Clamped order-statistic spacing `X_{min(i+m,N):N} - X_{max(i-m,1):N}`
/// for the 1-based index `i`.
pub fn clamped_spacing(s: &Sample, i: usize, w: WindowSpec) -> Result<f64> {
    let n = s.len();
    if i == 0 || i > n {
        return Err(Error::Argument(format!(
            "order-statistic index {i} outside 1..={n}"
        )));
    }
    w.validate_for(n)?;
    Ok(spacing_unchecked(s, i, w.m))
}

#[inline]
fn spacing_unchecked(s: &Sample, i: usize, m: usize) -> f64 {
    let n = s.len();
    let hi = (i + m).min(n);
    let lo = i.saturating_sub(m).max(1);
    s.order_statistic(hi) - s.order_statistic(lo)
}

/// Shared driver: `-(1/(2N)) * sum_i weight(u_i) * spacing_i / (2m/N)`.
fn weighted_spacing_sum<F>(s: &Sample, w: WindowSpec, weight: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    w.validate_for(s.len())?;
    let n = s.len();
    let denom = n as f64 + 1.0;
    let mut acc = 0.0;
    for i in 1..=n {
        let u = i as f64 / denom;
        acc += weight(u) * spacing_unchecked(s, i, w.m);
    }
    let nf = n as f64;
    Ok(-(acc / (2.0 * nf)) / (2.0 * w.m as f64 / nf))
}

/// Estimator of the cumulative past extropy of the lower record `L_{n,k}`.
///
/// Always non-positive: the weights and spacings are non-negative and the
/// sum is negated.
pub fn cpe_lower_estimate(s: &Sample, r: RecordSpec, w: WindowSpec) -> Result<StatisticValue> {
    weighted_spacing_sum(s, w, |u| record_weight_kernel(u, r)).map(StatisticValue::new)
}

/// Estimator of the cumulative residual extropy of the upper record `U_{n,k}`.
pub fn cre_upper_estimate(s: &Sample, r: RecordSpec, w: WindowSpec) -> Result<StatisticValue> {
    weighted_spacing_sum(s, w, |u| record_weight_kernel(1.0 - u, r)).map(StatisticValue::new)
}

/// The signed symmetry statistic for the record family `(n,k)`: the
/// upper-record CRE estimate minus the lower-record CPE estimate, computed
/// as one fused pass with a single weight difference per index.
pub fn delta_statistic(s: &Sample, r: RecordSpec, w: WindowSpec) -> Result<StatisticValue> {
    weighted_spacing_sum(s, w, |u| {
        record_weight_kernel(1.0 - u, r) - record_weight_kernel(u, r)
    })
    .map(StatisticValue::new)
}

/// The `(2,2)` statistic with its expanded closed-form weights
/// `(1-u)^4 (1-2 ln(1-u))^2 - u^4 (1-2 ln u)^2`.
///
/// Agrees with `delta_statistic(s, RecordSpec::DEFAULT, w)` to round-off.
pub fn delta_statistic_22(s: &Sample, w: WindowSpec) -> Result<StatisticValue> {
    weighted_spacing_sum(s, w, |u| {
        let v = 1.0 - u;
        let up = v.powi(4) * (1.0 - 2.0 * v.ln()).powi(2);
        let low = u.powi(4) * (1.0 - 2.0 * u.ln()).powi(2);
        up - low
    })
    .map(StatisticValue::new)
}

/// The record-free statistic with linear weight `1 - 2u`.
///
/// Identical (as an algebraic identity, `(1-u)^2 - u^2 = 1 - 2u`) to
/// `delta_statistic` with `n = k = 1`.
pub fn delta_plain(s: &Sample, w: WindowSpec) -> Result<StatisticValue> {
    weighted_spacing_sum(s, w, |u| 1.0 - 2.0 * u).map(StatisticValue::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(values: &[f64]) -> Sample {
        Sample::new(values.to_vec()).unwrap()
    }

    fn w(m: usize) -> WindowSpec {
        WindowSpec::new(m).unwrap()
    }

    fn r(n: u32, k: u32) -> RecordSpec {
        RecordSpec::new(n, k).unwrap()
    }

    #[test]
    fn spacing_interior_and_clamped() {
        let s = sample(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(clamped_spacing(&s, 3, w(1)).unwrap(), 2.0); // 4 - 2
        assert_eq!(clamped_spacing(&s, 1, w(2)).unwrap(), 2.0); // X3 - X1, lower clamp
        assert_eq!(clamped_spacing(&s, 5, w(2)).unwrap(), 2.0); // upper clamp
        assert!(clamped_spacing(&s, 0, w(1)).is_err());
        assert!(clamped_spacing(&s, 6, w(1)).is_err());
    }

    #[test]
    fn spacing_constant_sample_is_zero() {
        let s = sample(&[4.2; 5]);
        for i in 1..=5 {
            assert_eq!(clamped_spacing(&s, i, w(2)).unwrap(), 0.0);
        }
    }

    #[test]
    fn weight_lower_reduces_to_u_squared_for_first_record() {
        assert!((weight_lower(0.5, r(1, 1)).unwrap() - 0.25).abs() < 1e-15);
        assert!((weight_lower(0.3, r(1, 1)).unwrap() - 0.09).abs() < 1e-15);
    }

    #[test]
    fn weight_lower_22_matches_independent_evaluation() {
        // 0.5^4 (1 - 2 ln 0.5)^2, frozen from a 40-digit evaluation of the
        // closed form.
        let expected = 0.355_900_048_619_536_7;
        assert!((weight_lower(0.5, r(2, 2)).unwrap() - expected).abs() < 1e-15);
        assert!((weight_upper(0.5, r(2, 2)).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn weight_endpoint_limits() {
        // CDF of a record value tends to 1 at the right endpoint, the
        // survival weight to 1 at the left endpoint.
        for &(n, k) in &[(1, 1), (2, 2), (3, 1), (1, 3)] {
            let spec = r(n, k);
            assert!((weight_lower(1.0 - 1e-14, spec).unwrap() - 1.0).abs() < 1e-10);
            assert!((weight_upper(1e-14, spec).unwrap() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn weight_rejects_out_of_range() {
        for u in [0.0, 1.0, -0.5, 1.5, f64::NAN] {
            assert!(weight_lower(u, r(2, 2)).is_err());
            assert!(weight_upper(u, r(2, 2)).is_err());
        }
    }

    #[test]
    fn weight_mirror_symmetry_on_grid() {
        for n in 1..=3 {
            for k in 1..=3 {
                let spec = r(n, k);
                for j in 1..100 {
                    let u = j as f64 / 100.0;
                    let up = weight_upper(u, spec).unwrap();
                    let low = weight_lower(1.0 - u, spec).unwrap();
                    assert!((up - low).abs() <= 1e-14, "n={n} k={k} u={u}");
                }
            }
        }
    }

    #[test]
    fn estimates_vanish_on_constant_samples() {
        let s = sample(&[7.0; 9]);
        assert_eq!(cpe_lower_estimate(&s, r(2, 2), w(3)).unwrap().value, 0.0);
        assert_eq!(cre_upper_estimate(&s, r(2, 2), w(3)).unwrap().value, 0.0);
        assert_eq!(delta_statistic_22(&s, w(3)).unwrap().value, 0.0);
        assert_eq!(delta_plain(&s, w(3)).unwrap().value, 0.0);
    }

    #[test]
    fn cpe_estimate_is_never_positive() {
        let s = sample(&[0.3, -1.2, 4.5, 2.2, 0.0, 1.1, -0.4]);
        let v = cpe_lower_estimate(&s, r(2, 2), w(2)).unwrap();
        assert!(v.value <= 0.0);
        let v = cre_upper_estimate(&s, r(3, 1), w(2)).unwrap();
        assert!(v.value <= 0.0);
    }

    #[test]
    fn window_too_large_is_a_config_error() {
        let s = sample(&[1.0, 2.0, 3.0, 4.0]);
        assert!(delta_statistic_22(&s, w(2)).is_err());
        assert!(cpe_lower_estimate(&s, r(2, 2), w(2)).is_err());
    }

    #[test]
    fn mirroring_swaps_the_two_estimates() {
        // Negating the sample exchanges the roles of the lower and upper
        // record weights; check for n = k = 1 where the weights are exact
        // mirrors of each other.
        let s = sample(&[0.1, 0.5, 0.9, 1.4, 2.0, 3.3, 4.1]);
        let mirrored = sample(&s.values().iter().map(|x| -x).collect::<Vec<_>>());
        let a = cre_upper_estimate(&mirrored, r(1, 1), w(2)).unwrap().value;
        let b = cpe_lower_estimate(&s, r(1, 1), w(2)).unwrap().value;
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn mirroring_negates_the_statistic() {
        let s = sample(&[0.3, 1.2, 1.9, 2.1, 5.0, 5.5, 6.0, 9.9]);
        let mirrored = sample(&s.values().iter().map(|x| -x).collect::<Vec<_>>());
        for spec in [r(1, 1), r(2, 2), r(3, 2)] {
            let a = delta_statistic(&mirrored, spec, w(3)).unwrap().value;
            let b = delta_statistic(&s, spec, w(3)).unwrap().value;
            assert!((a + b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn plain_statistic_equals_first_record_family() {
        let s = sample(&[0.05, 0.21, 0.33, 0.50, 0.62, 0.71, 0.88, 0.93, 1.40, 2.10]);
        let a = delta_plain(&s, w(3)).unwrap().value;
        let b = delta_statistic(&s, r(1, 1), w(3)).unwrap().value;
        assert!((a - b).abs() <= 1e-12);
    }

    #[test]
    fn closed_form_22_matches_generic_path() {
        let s = sample(&[0.4, 1.3, 2.2, 2.9, 3.1, 4.8, 5.5, 7.2, 8.8, 9.1, 10.4]);
        let a = delta_statistic_22(&s, w(4)).unwrap().value;
        let b = delta_statistic(&s, RecordSpec::DEFAULT, w(4)).unwrap().value;
        assert!((a - b).abs() <= 1e-12);
    }
}
