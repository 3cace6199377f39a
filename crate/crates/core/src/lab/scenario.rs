use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::complexity::{
    complexity_report, reschedule, verify_rescheduling_invariance, ComplexityReport, CostModel, Rescheduling,
    ReschedulingReport, DEFAULT_GUARD_WINDOW,
};
use crate::error::{Error, Result};
use crate::geom::{Density, EdgeSet, Interval, Point, DEFAULT_QUAD_NODES};
use crate::lab::{gen_initial, segment_region, Generator, Xorshift64Star};
use crate::laws::{
    law_agree_pursue, law_centroid_deploy, law_circumcenter, law_move_toward_average, law_parallel_circumcenter,
    AgreePursueLogic, Direction, LawKind, LawParams,
};
use crate::netmodel::{
    evolve, write_trace_csv, write_trace_jsonl, EvolutionTrace, EvolveOptions, Law, MessageArray, NetworkSpec,
    StateSpace,
};
use crate::tasks::{task_direction, TaskSpec};

/// Schema version accepted by [`Scenario::from_json`].
pub const SCENARIO_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawConfig {
    pub name: LawKind,
    /// Defaults to `r` for move-toward-average and `1/4` for agree-and-pursue.
    #[serde(default)]
    pub k_prop: Option<f64>,
    #[serde(default)]
    pub n_quad: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReschedulingConfig {
    pub s: usize,
    /// Defaults to the round-robin partition `{i : i mod s = k}`.
    #[serde(default)]
    pub partition: Option<Vec<Vec<usize>>>,
}

impl ReschedulingConfig {
    pub fn schedule(&self, n: usize) -> Result<Rescheduling> {
        let partition = match &self.partition {
            Some(p) => p.clone(),
            None => {
                if self.s == 0 || self.s > n {
                    return Err(Error::Config(format!("rescheduling s = {} must lie in 1..={n}", self.s)));
                }
                (0..self.s).map(|k| (k..n).step_by(self.s).collect()).collect()
            }
        };
        Rescheduling::new(n, partition).map_err(|e| Error::Config(e.to_string()))
    }
}

fn default_cost() -> CostModel {
    CostModel::Unidirectional { c0: 1.0 }
}

/// A complete, versioned run description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub network: NetworkSpec<f64>,
    pub law: LawConfig,
    pub task: TaskSpec<f64>,
    pub initial: Generator,
    /// Mandatory for random generators and for random agree-and-pursue directions.
    #[serde(default)]
    pub seed: Option<u64>,
    /// Defaults to [`default_horizon`].
    #[serde(default)]
    pub horizon: Option<usize>,
    #[serde(default)]
    pub guard: Option<usize>,
    #[serde(default = "default_cost")]
    pub cost_model: CostModel,
    #[serde(default)]
    pub rescheduling: Option<ReschedulingConfig>,
    /// Free-form annotations such as timestamps; never read by the runner.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Config("empty scenario".into()));
        }
        let sc: Scenario = serde_json::from_str(text)?;
        sc.validate()?;
        Ok(sc)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn guard(&self) -> usize {
        self.guard.unwrap_or(DEFAULT_GUARD_WINDOW)
    }

    pub fn horizon(&self) -> usize {
        self.horizon.unwrap_or_else(|| default_horizon(self))
    }

    /// Checks the version, the parameters and the law/task/network pairing.
    pub fn validate(&self) -> Result<()> {
        let cfg = |e: Error| Error::Config(e.to_string());
        if self.version != SCENARIO_VERSION {
            return Err(Error::Config(format!(
                "scenario version {} is not supported (expected {SCENARIO_VERSION})",
                self.version
            )));
        }
        self.network.validate().map_err(cfg)?;
        self.task.validate().map_err(cfg)?;
        if self.guard == Some(0) {
            return Err(Error::Config("guard window must be positive".into()));
        }
        let space = &self.network.state_space;
        let circle = matches!(space, StateSpace::Circle);
        let segment = matches!(space, StateSpace::Segment { .. });
        match self.law.name {
            LawKind::AgreePursue if !circle => {
                return Err(Error::Config("agr-pursuit runs on a circle network".into()))
            }
            LawKind::Centroid if !segment => return Err(Error::Config("centrd runs on a segment network".into())),
            LawKind::Average | LawKind::Circumcenter | LawKind::ParallelCircumcenter if circle => {
                return Err(Error::Config(format!("{:?} needs a Euclidean or segment network", self.law.name)))
            }
            _ => {}
        }
        match self.task {
            TaskSpec::DirectionAgreement if self.law.name != LawKind::AgreePursue => {
                return Err(Error::Config("direction agreement needs the agr-pursuit law".into()))
            }
            TaskSpec::EpsEquidistance { .. } if !circle => {
                return Err(Error::Config("eps-equidistance needs a circle network".into()))
            }
            TaskSpec::EpsRDeployment { .. } if !segment => {
                return Err(Error::Config("eps-r-deployment needs a segment network".into()))
            }
            TaskSpec::Rendezvous | TaskSpec::EpsRendezvous { .. } if circle => {
                return Err(Error::Config("rendezvous tasks are defined for Euclidean networks here".into()))
            }
            _ => {}
        }
        let random_dirs = self.law.name == LawKind::AgreePursue
            && !matches!(
                self.initial,
                Generator::AgreePursueLowerBound { .. }
                    | Generator::CircWorstCase { .. }
                    | Generator::Explicit { directions: Some(_), .. }
            );
        if (self.initial.is_random() || random_dirs) && self.seed.is_none() {
            return Err(Error::Config("this scenario draws random numbers and needs a seed".into()));
        }
        if let Some(rs) = &self.rescheduling {
            if self.law.name == LawKind::AgreePursue {
                return Err(Error::Config("rescheduling applies to static laws only".into()));
            }
            rs.schedule(self.network.n)?;
        }
        self.law_params().map(|_| ())
    }

    fn law_params(&self) -> Result<LawParams<f64>> {
        let r = self.network.r;
        let k_default = match self.law.name {
            LawKind::AgreePursue => 0.25,
            _ => r,
        };
        let mut p = LawParams::new(r).k_prop(self.law.k_prop.unwrap_or(k_default));
        p.n_quad = self.law.n_quad.unwrap_or(DEFAULT_QUAD_NODES);
        if let Some(q) = segment_region(&self.network) {
            p = p.region(q);
        }
        let check = |res: Result<()>| res.map_err(|e| Error::Config(e.to_string()));
        match self.law.name {
            LawKind::Average => check(law_move_toward_average(&p).map(|_| ()))?,
            LawKind::AgreePursue => check(law_agree_pursue(&p).map(|_| ()))?,
            LawKind::Circumcenter => check(law_circumcenter(&p).map(|_| ()))?,
            LawKind::ParallelCircumcenter => check(law_parallel_circumcenter(&p).map(|_| ()))?,
            LawKind::Centroid => check(law_centroid_deploy(&p).map(|_| ()))?,
        }
        Ok(p)
    }
}

/// Horizon when the scenario leaves it open: four times a step count
/// derived from the known upper bounds for the law and graph.
pub fn default_horizon(sc: &Scenario) -> usize {
    let n = sc.network.n as f64;
    let eps = match sc.task {
        TaskSpec::EpsRendezvous { eps } | TaskSpec::EpsEquidistance { eps } | TaskSpec::EpsRDeployment { eps, .. } => {
            eps
        }
        _ => 1e-2,
    };
    let log = (n / eps).ln().max(1.0);
    let base = match (sc.law.name, sc.network.edge_map) {
        (LawKind::Circumcenter, crate::netmodel::EdgeMapKind::RLd) => n * n * log,
        (LawKind::Circumcenter | LawKind::ParallelCircumcenter, _) => 8.0 * n,
        (LawKind::Average, _) => (n * (n - 1.0).powi(3) + 1.0).min(2.5e6),
        (LawKind::AgreePursue, _) => 16.0 * n * n * log,
        (LawKind::Centroid, _) => n.powi(3) * log,
    };
    let s = sc.rescheduling.as_ref().map_or(1, |r| r.s);
    (4.0 * base).ceil() as usize * s + 10
}

/// A trace with its logic type erased.
#[derive(Clone, Debug)]
pub enum AnyTrace {
    Static(EvolutionTrace<f64, ()>),
    Pursuit(EvolutionTrace<f64, AgreePursueLogic>),
    Rescheduled(EvolutionTrace<f64, MessageArray<Point<f64>>>),
}

impl AnyTrace {
    pub fn rounds(&self) -> usize {
        match self {
            AnyTrace::Static(t) => t.rounds,
            AnyTrace::Pursuit(t) => t.rounds,
            AnyTrace::Rescheduled(t) => t.rounds,
        }
    }

    /// Recorded positions, one entry per state.
    pub fn positions(&self) -> Vec<&[Point<f64>]> {
        match self {
            AnyTrace::Static(t) => t.states.iter().map(|s| s.x.as_slice()).collect(),
            AnyTrace::Pursuit(t) => t.states.iter().map(|s| s.x.as_slice()).collect(),
            AnyTrace::Rescheduled(t) => t.states.iter().map(|s| s.x.as_slice()).collect(),
        }
    }

    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        match self {
            AnyTrace::Static(t) => write_trace_csv(t, out),
            AnyTrace::Pursuit(t) => write_trace_csv(t, out),
            AnyTrace::Rescheduled(t) => write_trace_csv(t, out),
        }
    }

    pub fn write_jsonl(&self, out: impl Write) -> Result<()> {
        match self {
            AnyTrace::Static(t) => write_trace_jsonl(t, out),
            AnyTrace::Pursuit(t) => write_trace_jsonl(t, out),
            AnyTrace::Rescheduled(t) => write_trace_jsonl(t, out),
        }
    }
}

/// Report plus the run's identifying data, as exported to JSON.
#[derive(Clone, Debug, Serialize)]
pub struct RunSummary {
    pub name: Option<String>,
    pub law: LawKind,
    pub task: &'static str,
    pub n: usize,
    pub seed: Option<u64>,
    pub initial_scale: Option<f64>,
    #[serde(flatten)]
    pub report: ComplexityReport,
}

#[derive(Clone, Debug)]
pub struct ScenarioRun {
    pub summary: RunSummary,
    pub trace: AnyTrace,
}

impl ScenarioRun {
    pub fn report(&self) -> &ComplexityReport {
        &self.summary.report
    }
}

type LogicTask<'a, W> = dyn Fn(&[Point<f64>], &[W], &EdgeSet) -> bool + Sync + 'a;
type PosTask<'a> = dyn Fn(&[Point<f64>], &EdgeSet) -> bool + Sync + 'a;

fn execute<L: Law<f64>>(
    sc: &Scenario,
    law: &L,
    x0: Vec<Point<f64>>,
    w0: Vec<L::Logic>,
    task: &LogicTask<'_, L::Logic>,
    stretch: usize,
) -> Result<(ComplexityReport, EvolutionTrace<f64, L::Logic>)> {
    // An explicit horizon counts rounds of the original schedule.
    let horizon = sc.horizon.map_or_else(|| default_horizon(sc), |h| h * stretch);
    let guard = sc.guard() * stretch;
    let opts = EvolveOptions::new(horizon).task(task).stop_after(guard).cost(sc.cost_model.clone());
    let trace = evolve(&sc.network, law, x0, w0, &opts)?;
    let report = complexity_report(&trace, &sc.cost_model, horizon, guard)?;
    Ok((report, trace))
}

fn run_static<L: Law<f64, Logic = (), Payload = Point<f64>>>(
    sc: &Scenario,
    law: &L,
    x0: Vec<Point<f64>>,
    task: &PosTask<'_>,
) -> Result<(ComplexityReport, AnyTrace)> {
    let n = x0.len();
    match &sc.rescheduling {
        None => {
            let t = |x: &[Point<f64>], _: &[()], e: &EdgeSet| task(x, e);
            let (rep, trace) = execute(sc, law, x0, vec![(); n], &t, 1)?;
            Ok((rep, AnyTrace::Static(trace)))
        }
        Some(rs) => {
            let sched = rs.schedule(n)?;
            let s = sched.s();
            let wrapped = reschedule(law, sched);
            let w0 = wrapped.initial_logic(n);
            let t = |x: &[Point<f64>], _: &[MessageArray<Point<f64>>], e: &EdgeSet| task(x, e);
            let (rep, trace) = execute(sc, &wrapped, x0, w0, &t, s)?;
            Ok((rep, AnyTrace::Rescheduled(trace)))
        }
    }
}

/// Generates the initial condition, runs the law and measures the task.
pub fn run_scenario(sc: &Scenario) -> Result<ScenarioRun> {
    sc.validate()?;
    let seed = sc.seed.unwrap_or(0);
    let ic = gen_initial(&sc.initial, &sc.network, seed)?;
    let params = sc.law_params()?;
    let q: Option<Interval<f64>> = segment_region(&sc.network);
    let phi = Density::Uniform;
    let spec_task = sc.task;
    let pos_task = move |x: &[Point<f64>], e: &EdgeSet| spec_task.holds(x, e, q, &phi).unwrap_or(false);
    let x0 = ic.x.clone();
    let (report, trace) = match sc.law.name {
        LawKind::Average => run_static(sc, &law_move_toward_average(&params)?, x0, &pos_task)?,
        LawKind::Circumcenter => run_static(sc, &law_circumcenter(&params)?, x0, &pos_task)?,
        LawKind::ParallelCircumcenter => run_static(sc, &law_parallel_circumcenter(&params)?, x0, &pos_task)?,
        LawKind::Centroid => run_static(sc, &law_centroid_deploy(&params)?, x0, &pos_task)?,
        LawKind::AgreePursue => {
            let law = law_agree_pursue(&params)?;
            let directions = match &ic.directions {
                Some(d) => d.clone(),
                None => {
                    // A separate stream so that positions do not depend on
                    // whether directions are drawn.
                    let mut rng = Xorshift64Star::new(seed ^ 0xD1EC_7104);
                    (0..sc.network.n).map(|_| if rng.coin() { Direction::Cc } else { Direction::C }).collect()
                }
            };
            let w0 = law.initial_logic(&directions);
            let direction_task = matches!(sc.task, TaskSpec::DirectionAgreement);
            let t = |x: &[Point<f64>], w: &[AgreePursueLogic], e: &EdgeSet| {
                if direction_task {
                    task_direction(w)
                } else {
                    pos_task(x, e)
                }
            };
            let (rep, trace) = execute(sc, &law, x0, w0, &t, 1)?;
            (rep, AnyTrace::Pursuit(trace))
        }
    };
    Ok(ScenarioRun {
        summary: RunSummary {
            name: sc.name.clone(),
            law: sc.law.name,
            task: sc.task.name(),
            n: sc.network.n,
            seed: sc.seed,
            initial_scale: ic.scale,
            report,
        },
        trace,
    })
}

/// Runs a static-law scenario both as written and rescheduled by `cfg`, and
/// compares the two runs. Any `rescheduling` block in `sc` is ignored.
pub fn check_rescheduling(sc: &Scenario, cfg: &ReschedulingConfig) -> Result<ReschedulingReport> {
    let mut plain = sc.clone();
    plain.rescheduling = None;
    plain.validate()?;
    if plain.law.name == LawKind::AgreePursue {
        return Err(Error::Config("rescheduling applies to static laws only".into()));
    }
    let sched = cfg.schedule(plain.network.n).map_err(|e| Error::Config(e.to_string()))?;
    let ic = gen_initial(&plain.initial, &plain.network, plain.seed.unwrap_or(0))?;
    let params = plain.law_params()?;
    let q = segment_region(&plain.network);
    let phi = Density::Uniform;
    let spec_task = plain.task;
    let task = move |x: &[Point<f64>], e: &EdgeSet| spec_task.holds(x, e, q, &phi).unwrap_or(false);
    let horizon = plain.horizon.unwrap_or_else(|| default_horizon(&plain));
    let guard = plain.guard();
    let net = &plain.network;
    let model = &plain.cost_model;
    match plain.law.name {
        LawKind::Average => {
            let law = law_move_toward_average(&params)?;
            verify_rescheduling_invariance(net, &law, &task, &ic.x, sched, model, horizon, guard)
        }
        LawKind::Circumcenter => {
            let law = law_circumcenter(&params)?;
            verify_rescheduling_invariance(net, &law, &task, &ic.x, sched, model, horizon, guard)
        }
        LawKind::ParallelCircumcenter => {
            let law = law_parallel_circumcenter(&params)?;
            verify_rescheduling_invariance(net, &law, &task, &ic.x, sched, model, horizon, guard)
        }
        LawKind::Centroid => {
            let law = law_centroid_deploy(&params)?;
            verify_rescheduling_invariance(net, &law, &task, &ic.x, sched, model, horizon, guard)
        }
        LawKind::AgreePursue => unreachable!("rejected above"),
    }
}
