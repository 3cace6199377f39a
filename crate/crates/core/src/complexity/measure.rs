use std::io::Write;

use serde::{Serialize, Serializer};

use crate::complexity::CostModel;
use crate::error::{Error, Result};
use crate::geom::EdgeSet;
use crate::netmodel::EvolutionTrace;
use crate::scalar::Scalar;

/// Consecutive states a task must hold at the end of a run before its time
/// complexity is reported as untruncated.
pub const DEFAULT_GUARD_WINDOW: usize = 10;

/// Result of a time-complexity measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcOutcome {
    /// Task holds at every recorded state from `tc` on. `truncated` is set
    /// when that suffix is shorter than the guard window.
    Achieved { tc: usize, truncated: bool },
    /// Task false at the last recorded state.
    HorizonExceeded,
}

impl TcOutcome {
    pub fn tc(&self) -> Option<usize> {
        match *self {
            TcOutcome::Achieved { tc, .. } => Some(tc),
            TcOutcome::HorizonExceeded => None,
        }
    }

    /// True for a finite TC backed by a full guard window.
    pub fn is_clean(&self) -> bool {
        matches!(self, TcOutcome::Achieved { truncated: false, .. })
    }
}

impl Serialize for TcOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.tc() {
            Some(tc) => s.serialize_u64(tc as u64),
            None => s.serialize_str("horizon-exceeded"),
        }
    }
}

/// TC from a per-state truth series.
pub fn measure_tc_series(truth: &[bool], guard: usize) -> TcOutcome {
    match truth.last() {
        None | Some(false) => TcOutcome::HorizonExceeded,
        Some(true) => {
            let tc = truth.iter().rposition(|&b| !b).map_or(0, |k| k + 1);
            TcOutcome::Achieved { tc, truncated: truth.len() - tc < guard }
        }
    }
}

/// TC of the task recorded in `trace`.
pub fn measure_tc<T: Scalar, W: Clone>(trace: &EvolutionTrace<T, W>, guard: usize) -> Result<TcOutcome> {
    let truth = trace.task.as_ref().ok_or_else(|| Error::InvalidInput("trace has no task record".into()))?;
    Ok(measure_tc_series(truth, guard))
}

/// Non-null edges of round `l`, if recorded.
pub fn nonnull_edges<T, W>(trace: &EvolutionTrace<T, W>, l: usize) -> Option<&EdgeSet> {
    trace.nonnull.get(l)
}

/// Per-round cost series: the online charges when available, otherwise
/// recomputed from the recorded non-null edge sets.
pub fn round_costs<T: Scalar, W: Clone>(trace: &EvolutionTrace<T, W>, model: &CostModel) -> Result<Vec<f64>> {
    if let Some(c) = trace.charges_for(model) {
        return Ok(c.to_vec());
    }
    if trace.nonnull.len() == trace.rounds {
        return Ok(trace.nonnull.iter().map(|e| model.cost(e)).collect());
    }
    if let CostModel::Unidirectional { c0 } = *model {
        return Ok(trace.nonnull_counts.iter().map(|&k| c0 * k as f64).collect());
    }
    Err(Error::InvalidInput(format!("cost model {} was not charged and edges were not recorded", model.label())))
}

/// `(mcc, tcc)` over the first `tc` rounds. Requires `0 < tc <= rounds`.
pub fn measure_mcc_tcc<T: Scalar, W: Clone>(
    trace: &EvolutionTrace<T, W>,
    tc: usize,
    model: &CostModel,
) -> Result<(f64, f64)> {
    if tc == 0 {
        return Err(Error::InvalidInput("mean communication complexity is undefined when TC = 0".into()));
    }
    if tc > trace.rounds {
        return Err(Error::InvalidInput(format!("TC {tc} exceeds the {} recorded rounds", trace.rounds)));
    }
    let costs = round_costs(trace, model)?;
    let tcc: f64 = costs[..tc].iter().sum();
    Ok((tcc / tc as f64, tcc))
}

/// Finite-horizon communication complexity of the execution: the mean cost
/// of rounds `0..k`.
pub fn estimate_cc<T: Scalar, W: Clone>(trace: &EvolutionTrace<T, W>, model: &CostModel, k: usize) -> Result<f64> {
    if k == 0 || k > trace.rounds {
        return Err(Error::InvalidInput(format!("k = {k} must lie in 1..={}", trace.rounds)));
    }
    let costs = round_costs(trace, model)?;
    Ok(costs[..k].iter().sum::<f64>() / k as f64)
}

/// Summary exported as JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexityReport {
    pub tc: TcOutcome,
    /// Undefined when the task never completes or holds initially.
    pub mcc: Option<f64>,
    pub tcc: Option<f64>,
    pub cost_model: String,
    pub horizon: usize,
    pub rounds: usize,
    pub truncated: bool,
    #[serde(skip)]
    pub costs: Vec<f64>,
}

/// Measures TC, MCC and TCC of the recorded task under `model`.
pub fn complexity_report<T: Scalar, W: Clone>(
    trace: &EvolutionTrace<T, W>,
    model: &CostModel,
    horizon: usize,
    guard: usize,
) -> Result<ComplexityReport> {
    let tc = measure_tc(trace, guard)?;
    let costs = round_costs(trace, model)?;
    let (mcc, tcc) = match tc.tc() {
        Some(0) => (None, Some(0.0)),
        Some(k) => {
            let (m, t) = measure_mcc_tcc(trace, k, model)?;
            (Some(m), Some(t))
        }
        None => (None, None),
    };
    Ok(ComplexityReport {
        truncated: !tc.is_clean(),
        tc,
        mcc,
        tcc,
        cost_model: model.label(),
        horizon,
        rounds: trace.rounds,
        costs,
    })
}

/// Writes `round,cost` rows.
pub fn write_cost_series_csv(costs: &[f64], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["round", "cost"])?;
    for (l, c) in costs.iter().enumerate() {
        w.write_record([l.to_string(), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tc_examples() {
        assert_eq!(measure_tc_series(&[true; 12], 10), TcOutcome::Achieved { tc: 0, truncated: false });
        assert_eq!(measure_tc_series(&[false; 5], 10), TcOutcome::HorizonExceeded);
        let mut s = vec![false, false];
        s.extend([true; 10]);
        assert_eq!(measure_tc_series(&s, 10), TcOutcome::Achieved { tc: 2, truncated: false });
        assert_eq!(measure_tc_series(&[false, true, true], 10), TcOutcome::Achieved { tc: 1, truncated: true });
        assert_eq!(measure_tc_series(&[true, false, true], 1), TcOutcome::Achieved { tc: 2, truncated: false });
    }

    #[test]
    fn outcome_json() {
        assert_eq!(serde_json::to_string(&TcOutcome::HorizonExceeded).unwrap(), "\"horizon-exceeded\"");
        let a = TcOutcome::Achieved { tc: 7, truncated: false };
        assert_eq!(serde_json::to_string(&a).unwrap(), "7");
    }
}
