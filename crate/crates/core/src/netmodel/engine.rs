use serde::Serialize;

use crate::complexity::CostModel;
use crate::error::{Error, Result};
use crate::geom::{EdgeSet, Point};
use crate::netmodel::{Law, MessageArray, NetworkSpec};
use crate::scalar::Scalar;

/// Task predicate evaluated on `(x(t_ℓ), w(t_{ℓ-1}), E(x(t_ℓ)))`.
pub type TaskFn<'a, T, W> = &'a (dyn Fn(&[Point<T>], &[W], &EdgeSet) -> bool + Sync);

/// Positions and logic variables of all agents.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NetworkState<T, W> {
    pub x: Vec<Point<T>>,
    pub w: Vec<W>,
}

/// What happened in one round besides the state change.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundRecord {
    /// Communication graph at `t_ℓ`.
    pub edges: EdgeSet,
    /// Directed `(sender, receiver)` pairs that carried a non-null message.
    pub nonnull: EdgeSet,
}

/// Controls for [`evolve`].
pub struct EvolveOptions<'a, T, W> {
    /// Maximum number of rounds.
    pub horizon: usize,
    /// Task recorded at every state.
    pub task: Option<TaskFn<'a, T, W>>,
    /// Stop once the task has held at this many consecutive states.
    pub stop_window: Option<usize>,
    /// Keep every state; otherwise only the first and last.
    pub record_states: bool,
    /// Keep every edge set and non-null edge set.
    pub record_edges: bool,
    /// Cost models charged online, round by round.
    pub costs: Vec<CostModel>,
}

impl<'a, T, W> EvolveOptions<'a, T, W> {
    pub fn new(horizon: usize) -> Self {
        EvolveOptions {
            horizon,
            task: None,
            stop_window: None,
            record_states: true,
            record_edges: true,
            costs: Vec::new(),
        }
    }

    pub fn task(mut self, task: TaskFn<'a, T, W>) -> Self {
        self.task = Some(task);
        self
    }

    pub fn stop_after(mut self, window: usize) -> Self {
        self.stop_window = Some(window.max(1));
        self
    }

    pub fn cost(mut self, model: CostModel) -> Self {
        self.costs.push(model);
        self
    }

    /// Drops per-state and per-round graph storage; counts and charges stay.
    pub fn summary_only(mut self) -> Self {
        self.record_states = false;
        self.record_edges = false;
        self
    }
}

/// Record of an evolution.
///
/// State `ℓ` is `(x(t_ℓ), w(t_{ℓ-1}))` with `w(t_{-1}) = w₀`. Round `ℓ` maps
/// state `ℓ` to state `ℓ + 1`.
#[derive(Clone, Debug, Serialize)]
pub struct EvolutionTrace<T, W> {
    pub n: usize,
    /// Number of rounds executed.
    pub rounds: usize,
    /// All `rounds + 1` states, or just the first and last when not recorded.
    pub states: Vec<NetworkState<T, W>>,
    pub states_recorded: bool,
    /// `E(x(t_ℓ))` for every state, when recorded.
    pub edges: Vec<EdgeSet>,
    /// Non-null edges for every round, when recorded.
    pub nonnull: Vec<EdgeSet>,
    /// Number of non-null messages per round.
    pub nonnull_counts: Vec<usize>,
    /// Per-round charges of each requested cost model.
    pub charges: Vec<(CostModel, Vec<f64>)>,
    /// Task truth per state.
    pub task: Option<Vec<bool>>,
    /// True when the stop window ended the run before the horizon.
    pub stopped: bool,
}

impl<T: Scalar, W: Clone> EvolutionTrace<T, W> {
    pub fn initial(&self) -> &NetworkState<T, W> {
        &self.states[0]
    }

    pub fn last(&self) -> &NetworkState<T, W> {
        self.states.last().expect("a trace holds at least one state")
    }

    /// State `ℓ`, if it was recorded.
    pub fn state(&self, l: usize) -> Option<&NetworkState<T, W>> {
        if self.states_recorded {
            self.states.get(l)
        } else if l == 0 {
            self.states.first()
        } else if l == self.rounds {
            self.states.last()
        } else {
            None
        }
    }

    /// Per-round charges of `model`, if it was charged online.
    pub fn charges_for(&self, model: &CostModel) -> Option<&[f64]> {
        self.charges.iter().find(|(m, _)| m == model).map(|(_, c)| c.as_slice())
    }
}

/// Executes round `l` from `state`.
pub fn evolve_round<T: Scalar, L: Law<T>>(
    spec: &NetworkSpec<T>,
    law: &L,
    state: &NetworkState<T, L::Logic>,
    l: usize,
) -> Result<(NetworkState<T, L::Logic>, RoundRecord)> {
    let edges = spec.edges(&state.x)?;
    let (next, nonnull) = step(spec, law, state, &edges, l)?;
    Ok((next, RoundRecord { edges, nonnull }))
}

fn step<T: Scalar, L: Law<T>>(
    spec: &NetworkSpec<T>,
    law: &L,
    state: &NetworkState<T, L::Logic>,
    edges: &EdgeSet,
    l: usize,
) -> Result<(NetworkState<T, L::Logic>, EdgeSet)> {
    let n = state.x.len();
    // Every message is generated from the snapshot before any update.
    let mut inboxes = Vec::with_capacity(n);
    let mut senders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let mut entries = Vec::with_capacity(edges.out_degree(i));
        for &j in edges.neighbors(i) {
            if let Some(p) = law.msg(l, j, &state.x[j], &state.w[j], i) {
                entries.push((j, p));
                senders[j].push(i);
            }
        }
        inboxes.push(MessageArray::from_entries(n, entries));
    }
    let w: Vec<L::Logic> = (0..n).map(|i| law.stf(l, i, &state.w[i], &inboxes[i])).collect();
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        let p = law.round_map(l, i, &state.x[i], &w[i], &inboxes[i])?;
        spec.state_space.check(&p).map_err(|detail| Error::LeftStateSpace { agent: i, round: l, detail })?;
        x.push(p);
    }
    Ok((NetworkState { x, w }, EdgeSet::from_adjacency(senders)))
}

/// Runs up to `opts.horizon` rounds from `(x0, w0)`.
pub fn evolve<T: Scalar, L: Law<T>>(
    spec: &NetworkSpec<T>,
    law: &L,
    x0: Vec<Point<T>>,
    w0: Vec<L::Logic>,
    opts: &EvolveOptions<'_, T, L::Logic>,
) -> Result<EvolutionTrace<T, L::Logic>> {
    spec.validate()?;
    if x0.len() != spec.n || w0.len() != spec.n {
        return Err(Error::InvalidInput(format!(
            "expected {} positions and logic values, got {} and {}",
            spec.n,
            x0.len(),
            w0.len()
        )));
    }
    for (i, p) in x0.iter().enumerate() {
        spec.state_space
            .check(p)
            .map_err(|detail| Error::InvalidInput(format!("initial position of agent {i}: {detail}")))?;
    }
    let mut trace = EvolutionTrace {
        n: spec.n,
        rounds: 0,
        states: Vec::new(),
        states_recorded: opts.record_states,
        edges: Vec::new(),
        nonnull: Vec::new(),
        nonnull_counts: Vec::new(),
        charges: opts.costs.iter().map(|m| (m.clone(), Vec::new())).collect(),
        task: opts.task.map(|_| Vec::new()),
        stopped: false,
    };
    let mut state = NetworkState { x: x0, w: w0 };
    let mut streak = 0usize;
    let mut l = 0usize;
    loop {
        let edges = spec.edges(&state.x)?;
        if let (Some(task), Some(truth)) = (opts.task, trace.task.as_mut()) {
            let holds = task(&state.x, &state.w, &edges);
            truth.push(holds);
            streak = if holds { streak + 1 } else { 0 };
        }
        if opts.record_states || l == 0 {
            trace.states.push(state.clone());
        }
        let stop = opts.stop_window.is_some_and(|win| opts.task.is_some() && streak >= win);
        if stop || l == opts.horizon {
            trace.stopped = stop && l < opts.horizon;
            if opts.record_edges {
                trace.edges.push(edges);
            }
            break;
        }
        let (next, nonnull) = step(spec, law, &state, &edges, l)?;
        trace.nonnull_counts.push(nonnull.len());
        for (model, series) in &mut trace.charges {
            series.push(model.cost(&nonnull));
        }
        if opts.record_edges {
            trace.edges.push(edges);
            trace.nonnull.push(nonnull);
        }
        state = next;
        l += 1;
    }
    trace.rounds = l;
    if !opts.record_states && l > 0 {
        trace.states.push(state);
    }
    Ok(trace)
}
