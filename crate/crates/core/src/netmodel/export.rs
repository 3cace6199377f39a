use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::netmodel::EvolutionTrace;
use crate::scalar::Scalar;

#[derive(Serialize)]
struct StateLine<'a, T, W> {
    round: usize,
    x: &'a [Point<T>],
    w: &'a [W],
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonnull: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    task: Option<bool>,
}

fn require_states<T, W>(trace: &EvolutionTrace<T, W>) -> Result<()> {
    if trace.states_recorded {
        Ok(())
    } else {
        Err(Error::InvalidInput("trace was recorded without per-round states".into()))
    }
}

/// Writes one JSON object per state: round index, positions, logic, edge
/// count, non-null message count of the round leaving that state, task truth.
pub fn write_trace_jsonl<T: Scalar, W: Serialize + Clone>(
    trace: &EvolutionTrace<T, W>,
    mut out: impl Write,
) -> Result<()> {
    require_states(trace)?;
    for (l, s) in trace.states.iter().enumerate() {
        let line = StateLine {
            round: l,
            x: &s.x,
            w: &s.w,
            edges: trace.edges.get(l).map(|e| e.len()),
            nonnull: trace.nonnull_counts.get(l).copied(),
            task: trace.task.as_ref().and_then(|t| t.get(l).copied()),
        };
        serde_json::to_writer(&mut out, &line)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Writes positions in wide format: one row per state, one column per agent
/// coordinate (`x3` in 1-D, `x3_0`, `x3_1` in 2-D).
pub fn write_trace_csv<T: Scalar, W: Clone>(trace: &EvolutionTrace<T, W>, out: impl Write) -> Result<()> {
    require_states(trace)?;
    let mut w = csv::Writer::from_writer(out);
    let dim = trace.initial().x.first().map_or(1, Point::dim);
    let mut header = vec!["round".to_string()];
    for i in 0..trace.n {
        if dim == 1 {
            header.push(format!("x{i}"));
        } else {
            header.extend((0..dim).map(|k| format!("x{i}_{k}")));
        }
    }
    w.write_record(&header)?;
    for (l, s) in trace.states.iter().enumerate() {
        let mut row = vec![l.to_string()];
        row.extend(s.x.iter().flat_map(|p| p.coords().iter().map(|c| format!("{c:e}"))));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
