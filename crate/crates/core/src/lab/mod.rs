//! Scenario files, seeded initial conditions, parameter sweeps with
//! log-log fits, and plot/CSV output. Everything here is `f64`.

mod generators;
mod plot;
mod rng;
mod scenario;
mod sweep;

pub use generators::{gen_initial, segment_region, DeployCase, Generator, InitialCondition, PursuitCase};
pub use plot::{emit_plot, render_svg, render_trajectories};
pub use rng::Xorshift64Star;
pub use scenario::{
    check_rescheduling, default_horizon, run_scenario, AnyTrace, LawConfig, ReschedulingConfig, RunSummary, Scenario,
    ScenarioRun, SCENARIO_VERSION,
};
pub use sweep::{
    fit_line, fit_loglog, spectral_sweep, sweep, write_spectral_csv, write_sweep_csv, Fit, Regressor, SpectralRow,
    SweepResult, SweepRow,
};
