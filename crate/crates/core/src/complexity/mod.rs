//! Cost models, time and communication complexity, and rescheduling.

mod cost;
mod measure;
mod resched;

pub use cost::{cost_omnidirectional, cost_unidirectional, neighbor_induced_graph, welsh_powell, CostModel};
pub use measure::{
    complexity_report, estimate_cc, measure_mcc_tcc, measure_tc, measure_tc_series, nonnull_edges, round_costs,
    write_cost_series_csv, ComplexityReport, TcOutcome, DEFAULT_GUARD_WINDOW,
};
pub use resched::{
    block_end, reschedule, verify_rescheduling_invariance, Rescheduled, Rescheduling, ReschedulingReport,
};
