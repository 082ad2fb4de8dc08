//! Monte Carlo machinery: null statistic replication, critical values,
//! power, p-values, empirical densities and the table grids built from them.
//!
//! Replication `r` of an experiment always draws from the RNG stream
//! `(master seed, domain, r)`, and results are collected by replication
//! index, so a run is reproducible bit for bit no matter how many worker
//! threads execute it. With the `parallel` feature (default) the replication
//! loops run on rayon; without it the same loops run sequentially and
//! produce identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};
use crate::estimator::delta_statistic;
use crate::normal::normal_pdf;
use crate::rng::replication_rng;
use crate::sample::{RecordSpec, Sample, WindowSpec};

/// Contract for one Monte Carlo experiment.
#[derive(Debug, Clone)]
pub struct McConfig {
    /// Number of replications (at least 100; the reference tables use 10,000).
    pub reps: usize,
    pub master_seed: u64,
    /// Distribution the null statistics are drawn from.
    pub null_dist: DistributionSpec,
    /// Sample size N of each replication.
    pub sample_size: usize,
    pub window: WindowSpec,
    pub record: RecordSpec,
}

/// Default replication count used throughout the reference tables.
pub const DEFAULT_REPS: usize = 10_000;

impl McConfig {
    pub fn new(sample_size: usize, window: WindowSpec, master_seed: u64) -> Self {
        Self {
            reps: DEFAULT_REPS,
            master_seed,
            null_dist: DistributionSpec::StdNormal,
            sample_size,
            window,
            record: RecordSpec::DEFAULT,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.reps < 100 {
            return Err(Error::Config(format!(
                "replication count must be at least 100, got {}",
                self.reps
            )));
        }
        self.null_dist.validate()?;
        self.window.validate_for(self.sample_size)
    }

    fn null_domain(&self) -> String {
        format!(
            "null/{}/N={}/m={}",
            self.null_dist.label(),
            self.sample_size,
            self.window.m
        )
    }

    fn alternative_domain(&self, alternative: &DistributionSpec) -> String {
        format!(
            "alt/{}/N={}/m={}",
            alternative.label(),
            self.sample_size,
            self.window.m
        )
    }
}

fn one_replication(
    dist: &DistributionSpec,
    cfg: &McConfig,
    domain: &str,
    replication: usize,
) -> f64 {
    let mut rng = replication_rng(cfg.master_seed, domain, replication as u64);
    let sample = dist
        .sample(cfg.sample_size, &mut rng)
        .expect("validated sampler yields finite draws");
    delta_statistic(&sample, cfg.record, cfg.window)
        .expect("validated window")
        .value
}

fn replicate(dist: &DistributionSpec, cfg: &McConfig, domain: &str) -> Vec<f64> {
    #[cfg(feature = "parallel")]
    {
        (0..cfg.reps)
            .into_par_iter()
            .map(|r| one_replication(dist, cfg, domain, r))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..cfg.reps)
            .map(|r| one_replication(dist, cfg, domain, r))
            .collect()
    }
}

/// Always-sequential twin of [`replicate`], kept unconditionally compiled so
/// tests and benchmarks can compare the two paths.
fn replicate_seq(dist: &DistributionSpec, cfg: &McConfig, domain: &str) -> Vec<f64> {
    (0..cfg.reps)
        .map(|r| one_replication(dist, cfg, domain, r))
        .collect()
}

/// Signed statistics of `cfg.reps` independent samples from the null
/// distribution, ordered by replication index.
pub fn null_statistics(cfg: &McConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    Ok(replicate(&cfg.null_dist, cfg, &cfg.null_domain()))
}

/// Sequential version of [`null_statistics`]; identical output.
pub fn null_statistics_seq(cfg: &McConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    Ok(replicate_seq(&cfg.null_dist, cfg, &cfg.null_domain()))
}

/// Empirical quantile by linear interpolation between closest ranks:
/// with M sorted values and target p, `h = (M-1) p` (0-based) and the result
/// interpolates between ranks `floor(h)` and `floor(h)+1`.
pub(crate) fn quantile_linear(sorted: &[f64], p: f64) -> f64 {
    let m = sorted.len();
    if m == 1 {
        return sorted[0];
    }
    let h = (m - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    if lo + 1 >= m {
        return sorted[m - 1];
    }
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
}

/// Critical value at significance `alpha`: the `(1 - alpha/2)` empirical
/// quantile of the absolute null statistics.
pub fn critical_value(stats: &[f64], alpha: f64) -> Result<f64> {
    if stats.is_empty() {
        return Err(Error::Argument("empty statistics vector".into()));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Argument(format!("alpha must lie in (0,1), got {alpha}")));
    }
    let mut abs: Vec<f64> = stats.iter().map(|s| s.abs()).collect();
    abs.sort_unstable_by(f64::total_cmp);
    Ok(quantile_linear(&abs, 1.0 - alpha / 2.0))
}

/// Fraction of replications from `alternative` whose absolute statistic
/// exceeds `threshold` (strict inequality).
pub fn power(cfg: &McConfig, alternative: &DistributionSpec, threshold: f64) -> Result<f64> {
    cfg.validate()?;
    alternative.validate()?;
    if !(threshold > 0.0) {
        return Err(Error::Argument(format!(
            "rejection threshold must be positive, got {threshold}"
        )));
    }
    let stats = replicate(alternative, cfg, &cfg.alternative_domain(alternative));
    let rejected = stats.iter().filter(|s| s.abs() > threshold).count();
    Ok(rejected as f64 / stats.len() as f64)
}

/// How an observed statistic is ranked against the null statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PValueMode {
    /// Fraction of null statistics strictly greater than the observed signed
    /// statistic. This is the convention behind the reference dataset
    /// p-values.
    SignedOneSided,
    /// Fraction of absolute null statistics strictly greater than the
    /// absolute observed statistic, matching the two-sided rejection rule.
    TwoSidedAbs,
}

/// Monte Carlo p-value of `observed` against a vector of null statistics.
pub fn p_value(observed: f64, null_stats: &[f64], mode: PValueMode) -> Result<f64> {
    if null_stats.is_empty() {
        return Err(Error::Argument("empty null statistics vector".into()));
    }
    let count = match mode {
        PValueMode::SignedOneSided => null_stats.iter().filter(|&&s| s > observed).count(),
        PValueMode::TwoSidedAbs => {
            let obs = observed.abs();
            null_stats.iter().filter(|&&s| s.abs() > obs).count()
        }
    };
    Ok(count as f64 / null_stats.len() as f64)
}

/// Bandwidth rule for [`density_export`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bandwidth {
    /// Silverman's rule of thumb, `0.9 min(sd, IQR/1.34) M^{-1/5}`.
    Silverman,
    Fixed(f64),
}

/// A kernel density estimate evaluated on an equally spaced grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityCurve {
    pub points: Vec<(f64, f64)>,
    pub bandwidth: f64,
}

impl DensityCurve {
    /// Trapezoid integral of the curve; close to 1 for a healthy estimate.
    pub fn integral(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| 0.5 * (w[0].1 + w[1].1) * (w[1].0 - w[0].0))
            .sum()
    }
}

/// Gaussian-kernel density estimate of `stats` on `grid_points` equally
/// spaced points spanning `[min - 3h, max + 3h]`.
pub fn density_export(stats: &[f64], grid_points: usize, bandwidth: Bandwidth) -> Result<DensityCurve> {
    if stats.len() < 2 {
        return Err(Error::Argument("density estimation needs at least 2 values".into()));
    }
    if grid_points < 2 {
        return Err(Error::Argument("density grid needs at least 2 points".into()));
    }
    let m = stats.len() as f64;
    let mean = stats.iter().sum::<f64>() / m;
    let var = stats.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (m - 1.0);
    if var == 0.0 {
        return Err(Error::Numeric("zero-variance statistics have no density estimate".into()));
    }
    let h = match bandwidth {
        Bandwidth::Fixed(h) if h > 0.0 && h.is_finite() => h,
        Bandwidth::Fixed(h) => {
            return Err(Error::Argument(format!("bandwidth must be positive, got {h}")))
        }
        Bandwidth::Silverman => {
            let sd = var.sqrt();
            let mut sorted = stats.to_vec();
            sorted.sort_unstable_by(f64::total_cmp);
            let iqr = quantile_linear(&sorted, 0.75) - quantile_linear(&sorted, 0.25);
            let spread = if iqr > 0.0 { sd.min(iqr / 1.34) } else { sd };
            0.9 * spread * m.powf(-0.2)
        }
    };
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &s in stats {
        lo = lo.min(s);
        hi = hi.max(s);
    }
    let (start, end) = (lo - 3.0 * h, hi + 3.0 * h);
    let step = (end - start) / (grid_points - 1) as f64;
    let points = (0..grid_points)
        .map(|i| {
            let x = start + i as f64 * step;
            let dens = stats.iter().map(|&s| normal_pdf((x - s) / h)).sum::<f64>() / (m * h);
            (x, dens)
        })
        .collect();
    Ok(DensityCurve { points, bandwidth: h })
}

/// Decision of the symmetry test for one dataset, with full provenance.
#[derive(Debug, Clone)]
pub struct TestReport {
    pub statistic: f64,
    pub abs_statistic: f64,
    pub p_value_signed: f64,
    pub p_value_two_sided: f64,
    /// `(alpha, critical value, reject)` per significance level, in the
    /// order the levels were requested.
    pub decisions: Vec<(f64, f64, bool)>,
    pub sample_size: usize,
    pub window: WindowSpec,
    pub record: RecordSpec,
    pub reps: usize,
    pub master_seed: u64,
    pub null_label: String,
}

/// Run the full test on a sample: statistic, Monte Carlo p-values and
/// reject/fail-to-reject decisions at each requested level.
pub fn run_test(sample: &Sample, cfg: &McConfig, alphas: &[f64]) -> Result<TestReport> {
    if cfg.sample_size != sample.len() {
        return Err(Error::Config(format!(
            "configured sample size {} does not match data size {}",
            cfg.sample_size,
            sample.len()
        )));
    }
    let statistic = delta_statistic(sample, cfg.record, cfg.window)?;
    let nulls = null_statistics(cfg)?;
    let mut decisions = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let threshold = critical_value(&nulls, alpha)?;
        decisions.push((alpha, threshold, statistic.abs_value > threshold));
    }
    Ok(TestReport {
        statistic: statistic.value,
        abs_statistic: statistic.abs_value,
        p_value_signed: p_value(statistic.value, &nulls, PValueMode::SignedOneSided)?,
        p_value_two_sided: p_value(statistic.value, &nulls, PValueMode::TwoSidedAbs)?,
        decisions,
        sample_size: sample.len(),
        window: cfg.window,
        record: cfg.record,
        reps: cfg.reps,
        master_seed: cfg.master_seed,
        null_label: cfg.null_dist.label(),
    })
}

/// Rectangular `(m, N)` grid shared by the critical-value and power tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGrid {
    pub window_sizes: Vec<usize>,
    pub sample_sizes: Vec<usize>,
}

impl TableGrid {
    pub fn new(window_sizes: Vec<usize>, sample_sizes: Vec<usize>) -> Result<Self> {
        if window_sizes.is_empty() || sample_sizes.is_empty() {
            return Err(Error::Argument("table axes must be non-empty".into()));
        }
        Ok(Self { window_sizes, sample_sizes })
    }
}

/// Provenance stamped on every table.
#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub master_seed: u64,
    pub reps: usize,
    pub null_label: String,
    pub quantile_method: &'static str,
}

pub const QUANTILE_METHOD: &str = "linear interpolation between closest ranks";

/// A grid of rejection thresholds at one significance level. Cells with
/// `2m >= N` are blank.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalValueTable {
    pub alpha: f64,
    pub grid: TableGrid,
    /// Row-major `[window][sample size]`.
    pub cells: Vec<Vec<Option<f64>>>,
    pub provenance: Provenance,
}

/// A grid of rejection rates against one alternative at one level.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerTable {
    pub alpha: f64,
    pub alternative: String,
    pub grid: TableGrid,
    pub cells: Vec<Vec<Option<f64>>>,
    pub provenance: Provenance,
}

fn cell_config(template: &McConfig, n: usize, m: usize) -> McConfig {
    McConfig {
        sample_size: n,
        window: WindowSpec { m },
        ..template.clone()
    }
}

/// Build one critical-value table per requested significance level.
///
/// The null statistics of a `(N, m)` cell are computed once and shared by
/// all levels, so thresholds are monotone in `alpha` by construction.
pub fn critical_value_tables(
    grid: &TableGrid,
    alphas: &[f64],
    template: &McConfig,
) -> Result<Vec<CriticalValueTable>> {
    if alphas.is_empty() {
        return Err(Error::Argument("no significance levels requested".into()));
    }
    for &alpha in alphas {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Argument(format!("alpha must lie in (0,1), got {alpha}")));
        }
    }
    let mut per_alpha: Vec<Vec<Vec<Option<f64>>>> = vec![Vec::new(); alphas.len()];
    for &m in &grid.window_sizes {
        let mut rows: Vec<Vec<Option<f64>>> = vec![Vec::new(); alphas.len()];
        for &n in &grid.sample_sizes {
            if 2 * m >= n {
                for row in rows.iter_mut() {
                    row.push(None);
                }
                continue;
            }
            let cfg = cell_config(template, n, m);
            let stats = null_statistics(&cfg)?;
            for (row, &alpha) in rows.iter_mut().zip(alphas) {
                row.push(Some(critical_value(&stats, alpha)?));
            }
        }
        for (table, row) in per_alpha.iter_mut().zip(rows) {
            table.push(row);
        }
    }
    let provenance = Provenance {
        master_seed: template.master_seed,
        reps: template.reps,
        null_label: template.null_dist.label(),
        quantile_method: QUANTILE_METHOD,
    };
    Ok(alphas
        .iter()
        .zip(per_alpha)
        .map(|(&alpha, cells)| CriticalValueTable {
            alpha,
            grid: grid.clone(),
            cells,
            provenance: provenance.clone(),
        })
        .collect())
}

/// Rejection rates of `alternative` over the grid at level `alpha`, with the
/// threshold of each cell taken from that cell's own null run.
pub fn power_table(
    grid: &TableGrid,
    alpha: f64,
    alternative: &DistributionSpec,
    template: &McConfig,
) -> Result<PowerTable> {
    alternative.validate()?;
    let mut cells = Vec::with_capacity(grid.window_sizes.len());
    for &m in &grid.window_sizes {
        let mut row = Vec::with_capacity(grid.sample_sizes.len());
        for &n in &grid.sample_sizes {
            if 2 * m >= n {
                row.push(None);
                continue;
            }
            let cfg = cell_config(template, n, m);
            let threshold = critical_value(&null_statistics(&cfg)?, alpha)?;
            row.push(Some(power(&cfg, alternative, threshold)?));
        }
        cells.push(row);
    }
    Ok(PowerTable {
        alpha,
        alternative: alternative.label(),
        grid: grid.clone(),
        cells,
        provenance: Provenance {
            master_seed: template.master_seed,
            reps: template.reps,
            null_label: template.null_dist.label(),
            quantile_method: QUANTILE_METHOD,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, m: usize, reps: usize, seed: u64) -> McConfig {
        let mut c = McConfig::new(n, WindowSpec { m }, seed);
        c.reps = reps;
        c
    }

    #[test]
    fn null_statistics_are_deterministic() {
        let c = cfg(20, 2, 100, 99);
        assert_eq!(null_statistics(&c).unwrap(), null_statistics(&c).unwrap());
    }

    #[test]
    fn parallel_and_sequential_paths_agree_exactly() {
        let c = cfg(30, 4, 400, 5);
        assert_eq!(null_statistics(&c).unwrap(), null_statistics_seq(&c).unwrap());
    }

    #[test]
    fn config_validation() {
        assert!(cfg(20, 2, 50, 1).validate().is_err()); // reps too small
        assert!(cfg(20, 10, 100, 1).validate().is_err()); // 2m >= N
        assert!(cfg(20, 2, 100, 1).validate().is_ok());
    }

    #[test]
    fn quantile_interpolates_between_closest_ranks() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile_linear(&xs, 0.0), 1.0);
        assert_eq!(quantile_linear(&xs, 1.0), 4.0);
        assert_eq!(quantile_linear(&xs, 0.5), 2.5);
        assert!((quantile_linear(&xs, 0.95) - 3.85).abs() < 1e-12);
        assert_eq!(quantile_linear(&[7.0], 0.3), 7.0);
    }

    #[test]
    fn critical_value_of_constant_stats_is_that_constant() {
        let stats = vec![1.0; 50];
        for alpha in [0.1, 0.05, 0.01] {
            assert_eq!(critical_value(&stats, alpha).unwrap(), 1.0);
        }
    }

    #[test]
    fn critical_value_is_monotone_in_alpha() {
        let c = cfg(20, 3, 500, 11);
        let stats = null_statistics(&c).unwrap();
        let c10 = critical_value(&stats, 0.10).unwrap();
        let c05 = critical_value(&stats, 0.05).unwrap();
        let c01 = critical_value(&stats, 0.01).unwrap();
        assert!(c01 >= c05 && c05 >= c10, "{c01} {c05} {c10}");
    }

    #[test]
    fn critical_value_rejects_bad_input() {
        assert!(critical_value(&[], 0.05).is_err());
        assert!(critical_value(&[1.0], 0.0).is_err());
        assert!(critical_value(&[1.0], 1.0).is_err());
    }

    #[test]
    fn p_value_counts_strictly_greater() {
        let nulls = vec![-1.0, 0.0, 1.0, 2.0];
        assert_eq!(p_value(0.5, &nulls, PValueMode::SignedOneSided).unwrap(), 0.5);
        assert_eq!(p_value(2.0, &nulls, PValueMode::SignedOneSided).unwrap(), 0.0);
        assert_eq!(p_value(-1e300, &nulls, PValueMode::SignedOneSided).unwrap(), 1.0);
        assert_eq!(p_value(0.5, &nulls, PValueMode::TwoSidedAbs).unwrap(), 0.75);
        assert!(p_value(0.5, &[], PValueMode::SignedOneSided).is_err());
    }

    #[test]
    fn density_integrates_to_one() {
        let c = cfg(20, 2, 500, 3);
        let stats = null_statistics(&c).unwrap();
        let curve = density_export(&stats, 512, Bandwidth::Silverman).unwrap();
        let integral = curve.integral();
        assert!((0.99..=1.01).contains(&integral), "integral {integral}");
        assert!(curve.points.iter().all(|&(_, d)| d >= 0.0));
        assert_eq!(curve.points.len(), 512);
    }

    #[test]
    fn density_rejects_degenerate_input() {
        assert!(density_export(&[1.0], 512, Bandwidth::Silverman).is_err());
        assert!(matches!(
            density_export(&[2.0; 10], 512, Bandwidth::Silverman),
            Err(Error::Numeric(_))
        ));
        assert!(density_export(&[1.0, 2.0], 1, Bandwidth::Silverman).is_err());
        assert!(density_export(&[1.0, 2.0], 512, Bandwidth::Fixed(0.0)).is_err());
    }

    #[test]
    fn kde_recovers_a_normal_density() {
        let mut rng = crate::rng::replication_rng(17, "kde-normal", 0);
        let draws: Vec<f64> = (0..100_000)
            .map(|_| crate::normal::normal_quantile(crate::rng::uniform_open01(&mut rng)))
            .collect();
        let curve = density_export(&draws, 512, Bandwidth::Silverman).unwrap();
        let max_err = curve
            .points
            .iter()
            .filter(|&&(x, _)| (-2.0..=2.0).contains(&x))
            .map(|&(x, d)| (d - normal_pdf(x)).abs())
            .fold(0.0, f64::max);
        assert!(max_err <= 0.02, "max deviation {max_err}");
    }

    #[test]
    fn single_cell_table_equals_direct_call() {
        let template = cfg(30, 10, 400, 21);
        let grid = TableGrid::new(vec![10], vec![30]).unwrap();
        let tables = critical_value_tables(&grid, &[0.05], &template).unwrap();
        let direct = critical_value(&null_statistics(&template).unwrap(), 0.05).unwrap();
        assert_eq!(tables[0].cells[0][0], Some(direct));
    }

    #[test]
    fn table_blank_pattern_follows_window_rule() {
        let template = cfg(30, 2, 200, 21);
        let grid = TableGrid::new(vec![2, 5], vec![5, 10, 20]).unwrap();
        let tables = critical_value_tables(&grid, &[0.10], &template).unwrap();
        let cells = &tables[0].cells;
        assert!(cells[0][0].is_some()); // m=2,  N=5
        assert!(cells[1][0].is_none()); // m=5,  N=5
        assert!(cells[1][1].is_none()); // m=5,  N=10 (2m = N)
        assert!(cells[1][2].is_some()); // m=5,  N=20
    }

    #[test]
    fn tables_share_null_runs_across_levels() {
        let template = cfg(20, 2, 300, 77);
        let grid = TableGrid::new(vec![2], vec![20]).unwrap();
        let tables = critical_value_tables(&grid, &[0.10, 0.05, 0.01], &template).unwrap();
        let v: Vec<f64> = tables.iter().map(|t| t.cells[0][0].unwrap()).collect();
        assert!(v[2] >= v[1] && v[1] >= v[0], "{v:?}");
    }

    #[test]
    fn power_of_impossible_threshold_is_zero() {
        let c = cfg(20, 2, 200, 13);
        let p = power(&c, &DistributionSpec::ChiSquare(1), 1e6).unwrap();
        assert_eq!(p, 0.0);
        assert!(power(&c, &DistributionSpec::ChiSquare(1), 0.0).is_err());
    }

    #[test]
    fn run_test_echoes_config_and_is_consistent() {
        let data = Sample::new((1..=20).map(|i| i as f64).collect()).unwrap();
        let c = cfg(20, 2, 500, 4);
        let report = run_test(&data, &c, &[0.10, 0.05, 0.01]).unwrap();
        assert_eq!(report.sample_size, 20);
        assert_eq!(report.reps, 500);
        assert_eq!(report.abs_statistic, report.statistic.abs());
        for &(_, threshold, reject) in &report.decisions {
            assert_eq!(reject, report.abs_statistic > threshold);
        }
        // mismatched sizes are a configuration error
        assert!(run_test(&data, &cfg(21, 2, 500, 4), &[0.05]).is_err());
    }
}
