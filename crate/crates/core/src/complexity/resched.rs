use serde::Serialize;

use crate::complexity::{measure_mcc_tcc, measure_tc, CostModel, TcOutcome};
use crate::error::{Error, Result};
use crate::geom::{EdgeSet, Point};
use crate::netmodel::{evolve, EvolveOptions, Law, MessageArray, NetworkSpec};
use crate::scalar::Scalar;

/// An `s`-partition of the agents into transmission slots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rescheduling {
    s: usize,
    slot: Vec<usize>,
    partition: Vec<Vec<usize>>,
}

impl Rescheduling {
    /// Checks that `partition` has `s` nonempty disjoint blocks covering `0..n`.
    pub fn new(n: usize, partition: Vec<Vec<usize>>) -> Result<Self> {
        let s = partition.len();
        if s == 0 || s > n {
            return Err(Error::InvalidParameter(format!("need 1 <= s <= N, got s = {s}, N = {n}")));
        }
        let mut slot = vec![usize::MAX; n];
        for (k, block) in partition.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidParameter(format!("block {k} of the partition is empty")));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::InvalidParameter(format!("agent {i} out of range")));
                }
                if slot[i] != usize::MAX {
                    return Err(Error::InvalidParameter(format!("agent {i} appears twice")));
                }
                slot[i] = k;
            }
        }
        if let Some(i) = slot.iter().position(|&k| k == usize::MAX) {
            return Err(Error::InvalidParameter(format!("agent {i} is in no block")));
        }
        Ok(Rescheduling { s, slot, partition })
    }

    /// Trivial one-block partition.
    pub fn identity(n: usize) -> Self {
        Rescheduling::new(n, vec![(0..n).collect()]).expect("one block covering all agents")
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn slot(&self, i: usize) -> usize {
        self.slot[i]
    }

    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }
}

/// Last round of block `k`, where the rescheduled law moves: `s(k+1) − 1`.
pub fn block_end(s: usize, k: usize) -> usize {
    s * (k + 1) - 1
}

/// A static law spread over blocks of `s` rounds.
///
/// In round `ℓ` the agents of slot `ℓ mod s` send what the original law would
/// send at round `⌊ℓ/s⌋`; everyone else is silent. Each agent buffers what it
/// receives during the block and applies the original round map once, in the
/// last round of the block.
pub struct Rescheduled<'a, L> {
    inner: &'a L,
    sched: Rescheduling,
    name: String,
}

/// Wraps `law` with the rescheduling `sched`. Only static laws qualify,
/// which the `Logic = ()` bound enforces.
pub fn reschedule<'a, T: Scalar, L: Law<T, Logic = ()>>(law: &'a L, sched: Rescheduling) -> Rescheduled<'a, L> {
    let name = format!("{}/s={}", law.name(), sched.s);
    Rescheduled { inner: law, sched, name }
}

impl<L> Rescheduled<'_, L> {
    pub fn schedule(&self) -> &Rescheduling {
        &self.sched
    }

    /// Empty block buffers for `n` agents.
    pub fn initial_logic<P>(&self, n: usize) -> Vec<MessageArray<P>> {
        (0..n).map(|_| MessageArray::new(n)).collect()
    }
}

impl<T: Scalar, L: Law<T, Logic = ()>> Law<T> for Rescheduled<'_, L> {
    type Logic = MessageArray<L::Payload>;
    type Payload = L::Payload;

    fn name(&self) -> &str {
        &self.name
    }

    fn is_static(&self) -> bool {
        false
    }

    fn msg(&self, t: usize, i: usize, x: &Point<T>, _w: &Self::Logic, to: usize) -> Option<Self::Payload> {
        let s = self.sched.s;
        if t % s == self.sched.slot[i] {
            self.inner.msg(t / s, i, x, &(), to)
        } else {
            None
        }
    }

    fn stf(&self, t: usize, _i: usize, w: &Self::Logic, y: &MessageArray<Self::Payload>) -> Self::Logic {
        let mut buf = if t.is_multiple_of(self.sched.s) { MessageArray::new(y.len()) } else { w.clone() };
        for (j, p) in y.non_null() {
            buf.set(j, p.clone());
        }
        buf
    }

    fn round_map(
        &self,
        t: usize,
        i: usize,
        x: &Point<T>,
        w: &Self::Logic,
        _y: &MessageArray<Self::Payload>,
    ) -> Result<Point<T>> {
        let s = self.sched.s;
        if t % s == s - 1 {
            self.inner.round_map(t / s, i, x, &(), w)
        } else {
            Ok(x.clone())
        }
    }
}

/// The six numbers compared by the rescheduling invariance check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReschedulingReport {
    pub s: usize,
    pub tc: TcOutcome,
    pub tc_resched: TcOutcome,
    pub mcc: Option<f64>,
    pub mcc_resched: Option<f64>,
    pub tcc: Option<f64>,
    pub tcc_resched: Option<f64>,
    /// Largest position gap between `x(t_k)` and the rescheduled positions on
    /// block `k` (both its first and its last state).
    pub max_trajectory_gap: f64,
    pub tc_relation: bool,
    pub tcc_equal: bool,
    /// Up to rounding, since `MCC/s` and `TCC/(s·TC)` round differently.
    pub mcc_relation: bool,
    /// Relations (ii) and (iii) are only asserted for additive costs.
    pub additive: bool,
}

impl ReschedulingReport {
    /// True when every asserted relation holds and trajectories match to `tol`.
    pub fn holds(&self, tol: f64) -> bool {
        let cost_ok = !self.additive || (self.tcc_equal && self.mcc_relation);
        self.tc_relation && cost_ok && self.max_trajectory_gap <= tol
    }
}

/// Runs `law` and its rescheduling from `x0` and compares TC, MCC, TCC and
/// the sampled trajectories.
#[allow(clippy::too_many_arguments)]
pub fn verify_rescheduling_invariance<T: Scalar, L: Law<T, Logic = ()>>(
    spec: &NetworkSpec<T>,
    law: &L,
    task: &(dyn Fn(&[Point<T>], &EdgeSet) -> bool + Sync),
    x0: &[Point<T>],
    sched: Rescheduling,
    model: &CostModel,
    horizon: usize,
    guard: usize,
) -> Result<ReschedulingReport> {
    let s = sched.s;
    let plain_task = |x: &[Point<T>], _: &[()], e: &EdgeSet| task(x, e);
    let opts = EvolveOptions::new(horizon).task(&plain_task).stop_after(guard).cost(model.clone());
    let base = evolve(spec, law, x0.to_vec(), vec![(); x0.len()], &opts)?;

    let wrapped = reschedule(law, sched);
    let buf_task = |x: &[Point<T>], _: &[MessageArray<L::Payload>], e: &EdgeSet| task(x, e);
    let ropts = EvolveOptions::new(horizon * s).task(&buf_task).stop_after(guard * s).cost(model.clone());
    let w0 = wrapped.initial_logic(x0.len());
    let resched = evolve(spec, &wrapped, x0.to_vec(), w0, &ropts)?;

    let mut gap = 0.0f64;
    for (k, st) in base.states.iter().enumerate() {
        for l in [s * k, block_end(s, k)] {
            if let Some(rs) = resched.states.get(l) {
                for (a, b) in st.x.iter().zip(&rs.x) {
                    gap = gap.max(a.dist(b).to_f64().unwrap_or(f64::INFINITY));
                }
            }
        }
    }

    let tc = measure_tc(&base, guard)?;
    let tc_resched = measure_tc(&resched, guard * s)?;
    let costs =
        |trace_tc: Option<usize>, r: &dyn Fn(usize) -> Result<(f64, f64)>| -> Result<(Option<f64>, Option<f64>)> {
            match trace_tc {
                Some(0) => Ok((None, Some(0.0))),
                Some(k) => r(k).map(|(m, t)| (Some(m), Some(t))),
                None => Ok((None, None)),
            }
        };
    let (mcc, tcc) = costs(tc.tc(), &|k| measure_mcc_tcc(&base, k, model))?;
    let (mcc_resched, tcc_resched) = costs(tc_resched.tc(), &|k| measure_mcc_tcc(&resched, k, model))?;

    let tc_relation = matches!((tc.tc(), tc_resched.tc()), (Some(a), Some(b)) if b == s * a);
    let tcc_equal = tcc.is_some() && tcc == tcc_resched;
    let mcc_relation = match (mcc, mcc_resched) {
        (Some(m), Some(mr)) => (mr - m / s as f64).abs() <= 4.0 * f64::EPSILON * (m / s as f64).abs(),
        (None, None) => tc.tc() == Some(0) && tc_resched.tc() == Some(0),
        _ => false,
    };
    Ok(ReschedulingReport {
        s,
        tc,
        tc_resched,
        mcc,
        mcc_resched,
        tcc,
        tcc_resched,
        max_trajectory_gap: gap,
        tc_relation,
        tcc_equal,
        mcc_relation,
        additive: model.is_additive(),
    })
}
