//! Core value types: samples, record indices, spacing windows and the
//! signed statistic they produce.

use crate::error::{Error, Result};

/// An observed sample, stored sorted in ascending order.
///
/// All statistics in this crate are functions of the order statistics only,
/// so the original observation order is dropped at construction. Values must
/// be finite; `NaN` or infinities are rejected rather than silently filtered.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Build a sample from raw observations, sorting them ascending.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Argument("sample must contain at least one value".into()));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Argument(format!(
                "non-finite value {} at position {pos}",
                values[pos]
            )));
        }
        values.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values are ordered"));
        Ok(Self { values })
    }

    /// Number of observations.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one value
    }

    /// Sorted observations, ascending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The i-th order statistic, 1-based (`i` in `1..=len`).
    pub fn order_statistic(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

/// Which member of the k-record family a statistic refers to: the n-th
/// record in the sequence of k-th largest (or smallest) observations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordSpec {
    pub n: u32,
    pub k: u32,
}

impl RecordSpec {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Argument(format!(
                "record indices must be positive, got n={n}, k={k}"
            )));
        }
        Ok(Self { n, k })
    }

    /// The default family used throughout the reference tables.
    pub const DEFAULT: RecordSpec = RecordSpec { n: 2, k: 2 };
}

/// Half-width of the order-statistic spacing window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    pub m: usize,
}

impl WindowSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Argument("window size must be positive".into()));
        }
        Ok(Self { m })
    }

    /// A window is usable only when `2m < N` for the sample it is applied to.
    pub fn validate_for(&self, sample_size: usize) -> Result<()> {
        if 2 * self.m < sample_size {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "window m={} requires 2m < N, but N={sample_size}",
                self.m
            )))
        }
    }
}

/// A signed test statistic together with its absolute value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatisticValue {
    pub value: f64,
    pub abs_value: f64,
}

impl StatisticValue {
    pub(crate) fn new(value: f64) -> Self {
        Self {
            value,
            abs_value: value.abs(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_sorts_on_construction() {
        let s = Sample::new(vec![3.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.values(), &[1.0, 2.0, 3.0]);
        assert_eq!(s.order_statistic(1), 1.0);
        assert_eq!(s.order_statistic(3), 3.0);
        assert_eq!((s.min(), s.max()), (1.0, 3.0));
    }

    #[test]
    fn sample_rejects_empty_and_non_finite() {
        assert!(Sample::new(vec![]).is_err());
        assert!(Sample::new(vec![1.0, f64::NAN]).is_err());
        assert!(Sample::new(vec![f64::INFINITY]).is_err());
        assert!(Sample::new(vec![1.0, f64::NEG_INFINITY, 2.0]).is_err());
    }

    #[test]
    fn window_requires_2m_less_than_n() {
        let w = WindowSpec::new(2).unwrap();
        assert!(w.validate_for(5).is_ok());
        assert!(w.validate_for(4).is_err());
        assert!(WindowSpec::new(0).is_err());
    }

    #[test]
    fn record_spec_rejects_zero() {
        assert!(RecordSpec::new(0, 1).is_err());
        assert!(RecordSpec::new(1, 0).is_err());
        assert_eq!(RecordSpec::DEFAULT, RecordSpec::new(2, 2).unwrap());
    }
}
