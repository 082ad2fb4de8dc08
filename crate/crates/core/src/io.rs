//! File I/O: loading observation files and reading/writing the CSV table
//! and density formats.
//!
//! Table files mirror the published layout: a `#`-prefixed provenance block,
//! a `m\N` header row, one row per window size, and blank cells (not zeros)
//! where `2m >= N`. Density files are two-column `x,density` CSV with the
//! same provenance convention.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::datasets::NamedDataset;
use crate::error::{Error, Result};
use crate::montecarlo::{CriticalValueTable, DensityCurve, PowerTable, Provenance, TableGrid};
use crate::sample::Sample;

/// Parse a data file of whitespace/newline-delimited reals or single-column
/// CSV (comma-separated values are accepted anywhere). Lines starting with
/// `#` are ignored. At least 5 finite observations are required.
pub fn load_file(path: &Path) -> Result<NamedDataset> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut values = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: f64 = tok.parse().map_err(|_| Error::Parse {
                line: line_no + 1,
                message: format!("'{tok}' is not a number"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: line_no + 1,
                    message: format!("non-finite value '{tok}'"),
                });
            }
            values.push(v);
        }
    }
    if values.len() < 5 {
        return Err(Error::Argument(format!(
            "{}: need at least 5 observations, found {}",
            path.display(),
            values.len()
        )));
    }
    Ok(NamedDataset {
        name: path.display().to_string(),
        sample: Sample::new(values)?,
        source: path.display().to_string(),
        default_window: None,
    })
}

/// Write a sample one value per line, at full round-trip precision.
pub fn write_sample(path: &Path, sample: &Sample) -> Result<()> {
    let mut out = String::new();
    for v in sample.values() {
        writeln!(out, "{v}").expect("string write");
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

fn provenance_block(p: &Provenance, extra: &[(&str, String)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# seed={}", p.master_seed);
    let _ = writeln!(s, "# reps={}", p.reps);
    let _ = writeln!(s, "# null={}", p.null_label);
    let _ = writeln!(s, "# quantile-method={}", p.quantile_method);
    for (k, v) in extra {
        let _ = writeln!(s, "# {k}={v}");
    }
    s
}

fn grid_rows(grid: &TableGrid, cells: &[Vec<Option<f64>>]) -> String {
    let mut s = String::new();
    let header: Vec<String> = grid.sample_sizes.iter().map(|n| n.to_string()).collect();
    let _ = writeln!(s, "m\\N,{}", header.join(","));
    for (row, &m) in cells.iter().zip(&grid.window_sizes) {
        let cols: Vec<String> = row
            .iter()
            .map(|c| c.map(|v| format!("{v:.4}")).unwrap_or_default())
            .collect();
        let _ = writeln!(s, "{m},{}", cols.join(","));
    }
    s
}

/// Write a critical-value table in the published grid layout.
pub fn write_critical_value_table(path: &Path, table: &CriticalValueTable) -> Result<()> {
    let mut out = provenance_block(
        &table.provenance,
        &[("alpha", format!("{}", table.alpha)), ("kind", "critical-values".into())],
    );
    out.push_str(&grid_rows(&table.grid, &table.cells));
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Write a power table in the same grid layout.
pub fn write_power_table(path: &Path, table: &PowerTable) -> Result<()> {
    let mut out = provenance_block(
        &table.provenance,
        &[
            ("alpha", format!("{}", table.alpha)),
            ("alternative", table.alternative.clone()),
            ("kind", "power".into()),
        ],
    );
    out.push_str(&grid_rows(&table.grid, &table.cells));
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// A table grid read back from CSV; provenance lines are skipped.
pub struct GridFile {
    pub window_sizes: Vec<usize>,
    pub sample_sizes: Vec<usize>,
    pub cells: Vec<Vec<Option<f64>>>,
}

/// Read a grid CSV produced by [`write_critical_value_table`] or
/// [`write_power_table`].
pub fn read_grid_table(path: &Path) -> Result<GridFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut sample_sizes = Vec::new();
    let mut window_sizes = Vec::new();
    let mut cells = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let parse = |tok: &str, what: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line: line_no + 1,
                message: format!("bad {what} '{tok}'"),
            })
        };
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        if line.starts_with("m\\N") {
            sample_sizes = line
                .split(',')
                .skip(1)
                .map(|tok| parse(tok, "sample size"))
                .collect::<Result<_>>()?;
            continue;
        }
        let mut parts = line.split(',');
        let m = parse(parts.next().unwrap_or(""), "window size")?;
        window_sizes.push(m);
        let row: Vec<Option<f64>> = parts
            .map(|tok| {
                if tok.is_empty() {
                    Ok(None)
                } else {
                    tok.parse::<f64>().map(Some).map_err(|_| Error::Parse {
                        line: line_no + 1,
                        message: format!("bad cell '{tok}'"),
                    })
                }
            })
            .collect::<Result<_>>()?;
        cells.push(row);
    }
    if sample_sizes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "missing m\\N header row".into(),
        });
    }
    Ok(GridFile {
        window_sizes,
        sample_sizes,
        cells,
    })
}

/// Write a density curve as `x,density` CSV.
pub fn write_density(path: &Path, curve: &DensityCurve, provenance: &[(&str, String)]) -> Result<()> {
    let mut out = String::new();
    for (k, v) in provenance {
        let _ = writeln!(out, "# {k}={v}");
    }
    let _ = writeln!(out, "# bandwidth={:.6e}", curve.bandwidth);
    let _ = writeln!(out, "x,density");
    for &(x, d) in &curve.points {
        let _ = writeln!(out, "{x:.8e},{d:.8e}");
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Read back a density CSV as `(x, density)` pairs.
pub fn read_density(path: &Path) -> Result<Vec<(f64, f64)>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut points = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.trim().is_empty() || line.starts_with('x') {
            continue;
        }
        let mut parts = line.split(',');
        let mut get = || -> Result<f64> {
            parts
                .next()
                .unwrap_or("")
                .parse()
                .map_err(|_| Error::Parse {
                    line: line_no + 1,
                    message: format!("bad density row '{line}'"),
                })
        };
        let x = get()?;
        let d = get()?;
        points.push((x, d));
    }
    Ok(points)
}
