use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::{run_scenario, Scenario};
use crate::spectral::{ell_bound, time_to_contraction, worst_case_vector, BandedMatrixSpec, Reference};

/// Horizontal coordinate of the log-log fit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regressor {
    /// `log N`.
    #[default]
    N,
    /// `log(N^2 log N)`.
    N2LogN,
}

impl Regressor {
    fn x(self, n: f64) -> f64 {
        match self {
            Regressor::N => n.ln(),
            Regressor::N2LogN => (n * n * n.ln()).ln(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub seed: u64,
    pub tc: Option<usize>,
    pub mcc: Option<f64>,
    pub tcc: Option<f64>,
    pub truncated: bool,
}

/// Least-squares line through `(x, y)` points with its coefficient of determination.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub label: String,
    pub regressor: Regressor,
    pub rows: Vec<SweepRow>,
    /// Rows left out of the fit: truncated, horizon-exceeded, or zero TC.
    pub excluded: usize,
    pub fit: Option<Fit>,
    pub fit_error: Option<String>,
}

impl SweepResult {
    /// Per-`N` worst case over the rows that enter the fit.
    pub fn worst_case(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for row in self.rows.iter().filter(|r| usable(r)) {
            let tc = row.tc.unwrap_or(0);
            match out.last_mut() {
                Some((n, best)) if *n == row.n => *best = (*best).max(tc),
                _ => out.push((row.n, tc)),
            }
        }
        out
    }
}

fn usable(row: &SweepRow) -> bool {
    !row.truncated && row.tc.is_some_and(|t| t > 0)
}

/// Ordinary least squares. Needs at least three distinct abscissae.
pub fn fit_line(points: &[(f64, f64)]) -> Result<Fit> {
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < 3 {
        return Err(Error::FitRefused(format!("{} distinct sizes; at least 3 are needed", xs.len())));
    }
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(Fit { slope, intercept, r2, points: points.len() })
}

/// Log-log fit of `values` against `N` (or `N^2 log N`).
pub fn fit_loglog(values: &[(usize, f64)], regressor: Regressor) -> Result<Fit> {
    let pts: Vec<(f64, f64)> = values.iter().map(|&(n, v)| (regressor.x(n as f64), v.ln())).collect();
    fit_line(&pts)
}

/// Runs `template` for every `N` in `ns` and `seeds` seeds each, in parallel,
/// and fits the per-`N` worst-case TC.
pub fn sweep(template: &Scenario, ns: &[usize], seeds: usize, regressor: Regressor) -> Result<SweepResult> {
    if ns.is_empty() || seeds == 0 {
        return Err(Error::Config("a sweep needs at least one N and one seed".into()));
    }
    let base_seed = template.seed.unwrap_or(0);
    let cells: Vec<(usize, u64)> =
        ns.iter().flat_map(|&n| (0..seeds as u64).map(move |s| (n, base_seed + s))).collect();
    let mut rows = cells
        .par_iter()
        .map(|&(n, seed)| {
            let mut sc = template.clone();
            sc.network.n = n;
            sc.seed = Some(seed);
            if let Some(rs) = sc.rescheduling.as_mut() {
                rs.partition = None;
            }
            let run = run_scenario(&sc)?;
            let rep = run.report();
            Ok(SweepRow { n, seed, tc: rep.tc.tc(), mcc: rep.mcc, tcc: rep.tcc, truncated: rep.truncated })
        })
        .collect::<Result<Vec<SweepRow>>>()?;
    rows.sort_by_key(|r| (r.n, r.seed));
    let excluded = rows.iter().filter(|r| !usable(r)).count();
    let mut result = SweepResult {
        label: template.name.clone().unwrap_or_else(|| format!("{:?}", template.law.name)),
        regressor,
        rows,
        excluded,
        fit: None,
        fit_error: None,
    };
    let worst: Vec<(usize, f64)> = result.worst_case().into_iter().map(|(n, t)| (n, t as f64)).collect();
    match fit_loglog(&worst, regressor) {
        Ok(f) => result.fit = Some(f),
        Err(e) => result.fit_error = Some(e.to_string()),
    }
    Ok(result)
}

pub fn write_sweep_csv(result: &SweepResult, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "seed", "tc", "mcc", "tcc", "truncated"])?;
    let opt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x}"));
    for r in &result.rows {
        w.write_record([
            r.n.to_string(),
            r.seed.to_string(),
            r.tc.map_or(String::new(), |t| t.to_string()),
            opt(r.mcc),
            opt(r.tcc),
            r.truncated.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Measured and predicted contraction steps for one matrix size.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralRow {
    pub n: usize,
    pub measured: usize,
    pub predicted: usize,
}

/// For each `N`, iterates from the worst-case vector until it has shrunk by
/// `eps` (relative to the family's reference) and compares with the bound.
pub fn spectral_sweep(template: &BandedMatrixSpec<f64>, ns: &[usize], eps: f64) -> Result<Vec<SpectralRow>> {
    ns.par_iter()
        .map(|&n| {
            let spec = BandedMatrixSpec { n, ..*template };
            let v = worst_case_vector(&spec)?;
            let predicted = ell_bound(&spec, eps)?;
            let reference = match spec.family {
                crate::spectral::Family::Trid => Reference::Origin,
                _ => Reference::Average,
            };
            let measured = time_to_contraction(&spec, &v, eps, &reference, 64 * predicted + 64)?
                .ok_or_else(|| Error::Precondition(format!("no contraction within the budget at N = {n}")))?;
            Ok(SpectralRow { n, measured, predicted })
        })
        .collect()
}

pub fn write_spectral_csv(rows: &[SpectralRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "measured", "predicted"])?;
    for r in rows {
        w.write_record([r.n.to_string(), r.measured.to_string(), r.predicted.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line_is_recovered() {
        let pts: Vec<(f64, f64)> = (1..6).map(|k| (k as f64, 2.0 * k as f64 + 1.0)).collect();
        let f = fit_line(&pts).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12 && (f.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fewer_than_three_sizes_is_refused() {
        assert!(matches!(fit_loglog(&[(8, 3.0), (8, 4.0), (16, 9.0)], Regressor::N), Err(Error::FitRefused(_))));
    }

    #[test]
    fn spectral_rows_match_the_bound_for_trid() {
        let rows = spectral_sweep(&BandedMatrixSpec::trid(0.5, 0.0, 0.5, 2), &[8, 16], 1e-3).unwrap();
        for r in rows {
            assert_eq!(r.measured, r.predicted);
        }
    }
}
