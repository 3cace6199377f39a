//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
//! status 1 if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex;
use rayon::prelude::*;

use robonet_core::complexity::{
    complexity_report, measure_tc, measure_tc_series, verify_rescheduling_invariance, CostModel, Rescheduling,
    TcOutcome,
};
use robonet_core::geom::{connected_components, edges_r_inf_disk, EdgeSet};
use robonet_core::lab::{
    fit_loglog, gen_initial, spectral_sweep, DeployCase, Generator, PursuitCase, Regressor, Xorshift64Star,
};
use robonet_core::laws::{
    law_agree_pursue, law_centroid_deploy, law_circumcenter, law_move_toward_average, law_parallel_circumcenter,
    Direction, LawParams,
};
use robonet_core::netmodel::{evolve, EdgeMapKind, EvolveOptions, Law, StateSpace};
use robonet_core::spectral::{
    atrid_eigenpairs, check_p_bounds, check_p_bounds_minus, check_p_bounds_plus, circ_eigenpairs, p_minus_apply,
    p_minus_coords, p_plus_apply, p_plus_coords, trid_eigenpairs, Sign,
};
use robonet_core::tasks::{
    gradient_H_r, objective_H_r, task_direction, task_eps_equidistance, task_eps_r_deployment, task_eps_rendezvous,
    task_rendezvous,
};
use robonet_core::{BandedMatrixSpec, CirclePos, Density, EigenPair, Interval, NetworkSpec, Point};

type Outcome = Result<String, String>;

const GUARD: usize = 10;
const UNIT: CostModel = CostModel::Unidirectional { c0: 1.0 };

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unit() -> Interval {
    Interval::new(0.0, 1.0).unwrap()
}

fn line_net(n: usize, r: f64, edge_map: EdgeMapKind) -> NetworkSpec {
    NetworkSpec::new(n, StateSpace::Euclidean { dim: 1 }, edge_map, r).unwrap()
}

fn pts(v: &[f64]) -> Vec<Point> {
    v.iter().map(|&a| Point::scalar(a)).collect()
}

fn xs(p: &[Point]) -> Vec<f64> {
    p.iter().map(|q| q.x()).collect()
}

fn residual(m: &[Vec<f64>], p: &EigenPair) -> f64 {
    let n = m.len();
    (0..n)
        .map(|i| {
            let av: Complex<f64> = (0..n).map(|j| p.vector[j] * m[i][j]).sum();
            (av - p.value * p.vector[i]).norm_sqr()
        })
        .sum::<f64>()
        .sqrt()
}

/// Runs a static law with a position task, charging unidirectional cost.
fn run_static<L: Law<f64, Logic = ()>>(
    spec: &NetworkSpec,
    law: &L,
    x0: Vec<Point>,
    task: &(dyn Fn(&[Point], &EdgeSet) -> bool + Sync),
    horizon: usize,
    keep_states: bool,
) -> (robonet_core::netmodel::EvolutionTrace<f64, ()>, TcOutcome, Option<f64>, Option<f64>) {
    let t = |x: &[Point], _: &[()], e: &EdgeSet| task(x, e);
    let mut opts = EvolveOptions::new(horizon).task(&t).stop_after(GUARD).cost(UNIT);
    if !keep_states {
        opts = opts.summary_only();
    }
    let n = x0.len();
    let trace = evolve(spec, law, x0, vec![(); n], &opts).unwrap();
    let rep = complexity_report(&trace, &UNIT, horizon, GUARD).unwrap();
    (trace, rep.tc, rep.mcc, rep.tcc)
}

// 1. Trid(1/2, 0, 1/2) contraction steps scale as N^2 and sit within [1, 4]
// times the spectral bound.
fn c1() -> Outcome {
    let start = Instant::now();
    let ns = [8, 16, 32, 64, 128];
    let eps = 1e-3;
    let rows = spectral_sweep(&BandedMatrixSpec::trid(0.5, 0.0, 0.5, 2), &ns, eps).map_err(|e| e.to_string())?;
    for row in &rows {
        // Independent form of the bound: rate cos(pi/(N+1)).
        let rate = (PI / (row.n as f64 + 1.0)).cos();
        let ell = ((1.0 / eps).ln() / -rate.ln()).ceil() as usize;
        ensure(ell == row.predicted, || format!("N={}: bound {} vs oracle {ell}", row.n, row.predicted))?;
        ensure(row.measured >= ell && row.measured <= 4 * ell, || {
            format!("N={}: measured {} outside [{ell}, {}]", row.n, row.measured, 4 * ell)
        })?;
    }
    let fit = fit_loglog(&rows.iter().map(|r| (r.n, r.measured as f64)).collect::<Vec<_>>(), Regressor::N)
        .map_err(|e| e.to_string())?;
    ensure((1.9..=2.1).contains(&fit.slope), || format!("slope {:.4}", fit.slope))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!("slope {:.4}, measured/bound in [1,4] for all N, {secs:.2}s", fit.slope))
}

// 2. Closed-form eigenpairs against dense materialization.
fn c2() -> Outcome {
    let ns: Vec<usize> = (2..=257).collect();
    let worst = ns
        .par_iter()
        .map(|&n| -> Result<f64, String> {
            let mut rng = Xorshift64Star::new(0xE16E_0000 + n as u64);
            let mut worst = 0.0f64;
            let draw = |rng: &mut Xorshift64Star| {
                let mag = rng.uniform(0.1, 1.0);
                if rng.coin() {
                    mag
                } else {
                    -mag
                }
            };
            let (a, b, c) = (draw(&mut rng), rng.uniform(-1.0, 1.0), draw(&mut rng));
            // Keep |a/c| moderate so that the eigenvector entries stay in range.
            let c = if (a / c).abs() > 4.0 || (c / a).abs() > 4.0 { c.signum() * a.abs() } else { c };
            let pick = |pairs: Vec<EigenPair>| -> Vec<EigenPair> {
                if n <= 64 {
                    pairs
                } else {
                    let step = n / 16;
                    pairs
                        .into_iter()
                        .enumerate()
                        .filter(|(k, _)| k % step == 0 || *k == n - 1)
                        .map(|(_, p)| p)
                        .collect()
                }
            };
            let families = [
                (BandedMatrixSpec::trid(a, b, c, n), trid_eigenpairs(a, b, c, n)),
                (BandedMatrixSpec::circ(a, b, c, n), circ_eigenpairs(a, b, c, n)),
                (BandedMatrixSpec::atrid(Sign::Plus, a, b, n), atrid_eigenpairs(Sign::Plus, a, b, n)),
                (BandedMatrixSpec::atrid(Sign::Minus, a, b, n), atrid_eigenpairs(Sign::Minus, a, b, n)),
            ];
            for (spec, pairs) in families {
                let m = spec.materialize();
                let pairs = pairs.map_err(|e| format!("N={n}: {e}"))?;
                if pairs.len() != n {
                    return Err(format!("N={n} {:?}: {} pairs", spec.family, pairs.len()));
                }
                for p in pick(pairs) {
                    worst = worst.max(residual(&m, &p));
                }
            }
            Ok(worst)
        })
        .collect::<Result<Vec<f64>, String>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    ensure(worst <= 1e-10, || format!("worst residual {worst:e}"))?;
    Ok(format!("256 draws over N=2..257, 4 families, worst residual {worst:.2e}"))
}

// 3. Circumcenter on an equispaced r-disk chain.
fn c3() -> Outcome {
    let ns = [5usize, 10, 20, 40, 80];
    let mut pts_tc = Vec::new();
    for &n in &ns {
        let spec = line_net(n, 1.0, EdgeMapKind::RDisk);
        let law = law_circumcenter(&LawParams::new(1.0)).unwrap();
        let x0 = pts(&(0..n).map(|i| i as f64).collect::<Vec<_>>());
        let (_, tc, _, _) = run_static(&spec, &law, x0, &task_rendezvous, 8 * n + 10, false);
        let tc = match tc {
            TcOutcome::Achieved { tc, truncated: false } => tc,
            other => return Err(format!("N={n}: {other:?}")),
        };
        ensure(tc >= n - 1 && tc <= 4 * (n - 1), || format!("N={n}: TC {tc} outside [{}, {}]", n - 1, 4 * (n - 1)))?;
        pts_tc.push((n, tc as f64));
    }
    let fit = fit_loglog(&pts_tc, Regressor::N).map_err(|e| e.to_string())?;
    let tail = fit_loglog(&pts_tc[2..], Regressor::N).map_err(|e| e.to_string())?;
    let tcs: Vec<String> = pts_tc.iter().map(|(n, t)| format!("{n}:{t}")).collect();
    ensure((0.9..=1.1).contains(&fit.slope), || {
        format!("TC {} slope {:.4} (N >= 20 only: {:.4})", tcs.join(" "), fit.slope, tail.slope)
    })?;
    Ok(format!("TC {} slope {:.4}", tcs.join(" "), fit.slope))
}

// 4. Circumcenter on the r-limited Delaunay graph from the slow mode.
fn c4() -> Outcome {
    let eps = 1e-2;
    let ns = [8usize, 16, 32, 64];
    let ratios = ns
        .par_iter()
        .map(|&n| -> Result<(usize, usize, f64), String> {
            let spec = line_net(n, 1.0, EdgeMapKind::RLd);
            let x0 = gen_initial(&Generator::LdWorstCase, &spec, 0).map_err(|e| e.to_string())?.x;
            let law = law_circumcenter(&LawParams::new(1.0)).unwrap();
            let nf = n as f64;
            let budget = 4.0 * nf * nf * (nf / eps).ln();
            let task = |x: &[Point], e: &EdgeSet| task_eps_rendezvous(x, e, eps);
            let (_, tc, _, _) = run_static(&spec, &law, x0, &task, budget as usize + 10, false);
            let tc = tc.tc().filter(|_| tc.is_clean()).ok_or_else(|| format!("N={n}: {tc:?}"))?;
            Ok((n, tc, tc as f64 / (nf * nf * (nf / eps).ln())))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let max = ratios.iter().map(|r| r.2).fold(0.0, f64::max);
    let min = ratios.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
    let tcs: Vec<String> = ratios.iter().map(|(n, t, _)| format!("{n}:{t}")).collect();
    let detail = format!("TC {} ratio max/min {:.3} (limit 4)", tcs.join(" "), max / min);
    ensure(min > 0.0 && max / min <= 4.0, || detail.clone())?;
    Ok(detail)
}

/// One coordinate of the parallel circumcenter dynamics, evolved on its own
/// with the r-inf-disk graph that the full run sees.
fn axis_oracle(x0: &[Point], r: f64, horizon: usize) -> (Vec<Vec<Vec<f64>>>, Vec<Vec<bool>>) {
    let n = x0.len();
    let mut x: Vec<Vec<f64>> = x0.iter().map(|p| p.coords().to_vec()).collect();
    let mut states = vec![x.clone()];
    let mut truth: Vec<Vec<bool>> = vec![Vec::new(), Vec::new()];
    for l in 0..=horizon {
        let adj = |i: usize, j: usize, x: &[Vec<f64>]| {
            i != j && (x[i][0] - x[j][0]).abs().max((x[i][1] - x[j][1]).abs()) <= r
        };
        for k in 0..2 {
            let ok = (0..n).all(|i| (0..n).all(|j| !adj(i, j, &x) || (x[i][k] - x[j][k]).abs() <= 1e-12));
            truth[k].push(ok);
        }
        if l == horizon {
            break;
        }
        let next: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..2)
                    .map(|k| {
                        let mut lo = x[i][k];
                        let mut hi = x[i][k];
                        for j in (0..n).filter(|&j| adj(i, j, &x)) {
                            lo = lo.min(x[j][k]);
                            hi = hi.max(x[j][k]);
                        }
                        (lo + hi) / 2.0
                    })
                    .collect()
            })
            .collect();
        x = next;
        states.push(x.clone());
    }
    (states, truth)
}

// 5. Parallel circumcenter equals the per-axis dynamics.
fn c5() -> Outcome {
    let mut checked = 0;
    for seed in 0..20u64 {
        let mut rng = Xorshift64Star::new(seed);
        let n = 2 + rng.below(39) as usize;
        let r = 1.0;
        let side = 0.6 * (n as f64).sqrt();
        let x0: Vec<Point> = (0..n).map(|_| Point::xy(rng.uniform(0.0, side), rng.uniform(0.0, side))).collect();
        let spec = NetworkSpec::new(n, StateSpace::Euclidean { dim: 2 }, EdgeMapKind::RInfDisk, r).unwrap();
        let law = law_parallel_circumcenter(&LawParams::new(r)).unwrap();
        let horizon = 8 * n + 10;
        let task = |x: &[Point], e: &EdgeSet| task_rendezvous(x, e);
        let (trace, tc, _, _) = run_static(&spec, &law, x0.clone(), &task, horizon, true);
        let (oracle, truth) = axis_oracle(&x0, r, trace.rounds);
        for (l, st) in trace.states.iter().enumerate() {
            for (i, p) in st.x.iter().enumerate() {
                for (k, want) in oracle[l][i].iter().enumerate().take(2) {
                    let d = (p.get(k) - want).abs();
                    ensure(d <= 1e-12, || format!("seed {seed}: state {l} agent {i} axis {k} differs by {d:e}"))?;
                }
            }
        }
        // The oracle's edges must be the ones the engine used.
        let e0 = edges_r_inf_disk(&x0, r);
        ensure(e0 == spec.edges(&x0).unwrap(), || format!("seed {seed}: edge sets differ"))?;
        let per_axis: Vec<Option<usize>> = truth.iter().map(|t| measure_tc_series(t, GUARD).tc()).collect();
        let expect = match (per_axis[0], per_axis[1]) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        ensure(tc.tc() == expect, || format!("seed {seed}: TC {tc:?} vs per-axis {per_axis:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} random 2-D instances, N up to 40"))
}

// 6. One-round rendezvous and its communication cost.
fn c6() -> Outcome {
    let r = 1.0;
    let radius = 2f64.sqrt() * r / 4.0;
    for n in 3..=20usize {
        let spec = NetworkSpec::new(n, StateSpace::Euclidean { dim: 2 }, EdgeMapKind::RDisk, r).unwrap();
        let x0 = gen_initial(&Generator::UniformBall { radius }, &spec, n as u64).map_err(|e| e.to_string())?.x;
        let law = law_circumcenter(&LawParams::new(r)).unwrap();
        let (_, tc, mcc, tcc) = run_static(&spec, &law, x0, &task_rendezvous, 100, false);
        let want = (n * (n - 1)) as f64;
        ensure(tc.tc() == Some(1), || format!("N={n}: TC {tc:?}"))?;
        ensure(mcc == Some(want) && tcc == Some(want), || format!("N={n}: MCC {mcc:?} TCC {tcc:?}, want {want}"))?;
    }
    Ok("TC = 1 and MCC = TCC = N(N-1) for N = 3..20".into())
}

fn order_of(x: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    idx
}

// 7. Move-toward-average.
fn c7() -> Outcome {
    let r = 1.0;
    let mut summary = Vec::new();
    for n in (5..=41usize).step_by(2) {
        let spec = line_net(n, r, EdgeMapKind::RDisk);
        let law = law_move_toward_average(&LawParams::new(r)).unwrap();
        let x0 = pts(&(0..n).map(|i| i as f64 * r).collect::<Vec<_>>());
        let bound = n * (n - 1).pow(3) + 1;
        let (_, tc, _, _) = run_static(&spec, &law, x0, &task_rendezvous, bound.min(2_500_000) + GUARD, false);
        let tc = tc.tc().filter(|_| tc.is_clean()).ok_or_else(|| format!("N={n}: {tc:?}"))?;
        ensure(2 * tc >= n - 1, || format!("N={n}: TC {tc} < (N-1)/2"))?;
        ensure(tc <= bound, || format!("N={n}: TC {tc} > {bound}"))?;
        if n == 5 || n == 41 {
            summary.push(format!("N={n}:{tc}"));
        }
    }
    let failures: Vec<String> = (0..200u64)
        .into_par_iter()
        .filter_map(|seed| {
            let mut rng = Xorshift64Star::new(seed ^ 0xA7E0);
            let n = 3 + rng.below(28) as usize;
            let spec = line_net(n, r, EdgeMapKind::RDisk);
            let law = law_move_toward_average(&LawParams::new(r)).unwrap();
            let x0: Vec<Point> = (0..n).map(|_| Point::scalar(rng.uniform(0.0, 0.8 * n as f64 * r))).collect();
            let bound = n * (n - 1).pow(3) + 1;
            let (trace, tc, _, _) = run_static(&spec, &law, x0.clone(), &task_rendezvous, bound + GUARD, true);
            if tc.tc().is_none_or(|t| t > bound) {
                return Some(format!("seed {seed}: TC {tc:?}"));
            }
            let x0s = xs(&x0);
            let order = order_of(&x0s);
            let comps = |x: &[Point]| {
                let mut c = connected_components(&spec.edges(x).unwrap(), n);
                c.iter_mut().for_each(|v| v.sort_unstable());
                c.sort();
                c
            };
            // Components may split but never merge: every component is
            // contained in a component of the previous state.
            let mut prev = comps(&x0);
            for (l, st) in trace.states.iter().enumerate() {
                let v = xs(&st.x);
                if order.windows(2).any(|w| v[w[0]] > v[w[1]]) {
                    return Some(format!("seed {seed}: order broken at state {l}"));
                }
                let now = comps(&st.x);
                if !now.iter().all(|c| prev.iter().any(|p| c.iter().all(|i| p.contains(i)))) {
                    return Some(format!("seed {seed}: components merged at state {l}"));
                }
                prev = now;
            }
            None
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!(
        "lower/upper bounds for odd N=5..41 ({}), 200 random instances keep order, components never merge",
        summary.join(" ")
    ))
}

/// Bound constant for direction agreement, TC <= C N / r. Each agent's
/// chaser closes in by at least k_prop r per round over less than a full
/// turn, so C = 2 pi / k_prop.
const C_DIRECTION: f64 = 2.0 * PI / 0.25;

// 8. Agree-and-pursue.
fn c8() -> Outcome {
    let n = 45usize;
    let r = TAU / 40.0;
    let k = 0.25;
    let eps = 0.05;
    let spec = NetworkSpec::new(n, StateSpace::Circle, EdgeMapKind::CircleRDisk, r).unwrap();
    let law = law_agree_pursue(&LawParams::new(r).k_prop(k)).unwrap();
    let nf = n as f64;
    let eq_horizon = (16.0 * nf * nf * (nf / eps).ln()) as usize;
    let dir_bound = C_DIRECTION * nf / r;
    let results = (0..20u64)
        .into_par_iter()
        .map(|seed| -> Result<(usize, usize), String> {
            let mut rng = Xorshift64Star::new(seed);
            let x0: Vec<Point> = (0..n).map(|_| Point::scalar(rng.uniform(0.0, TAU))).collect();
            let dirs: Vec<Direction> = (0..n).map(|_| if rng.coin() { Direction::C } else { Direction::Cc }).collect();
            let w0 = law.initial_logic(&dirs);
            let both = |x: &[Point], w: &[_], _: &EdgeSet| {
                let th: Vec<CirclePos> = x.iter().map(|p| CirclePos::new(p.x())).collect();
                task_direction(w) && task_eps_equidistance(&th, eps)
            };
            let opts = EvolveOptions::new(eq_horizon).task(&both).stop_after(GUARD);
            let trace = evolve(&spec, &law, x0.clone(), w0.clone(), &opts).map_err(|e| e.to_string())?;
            let eq = measure_tc(&trace, GUARD).unwrap();
            let eq_tc = eq.tc().ok_or_else(|| format!("seed {seed}: equidistance not reached in {eq_horizon}"))?;
            // Direction alone, on a run long enough to show it is permanent.
            let dir = |_: &[Point], w: &[_], _: &EdgeSet| task_direction(w);
            let opts = EvolveOptions::new(dir_bound as usize + GUARD).task(&dir).stop_after(GUARD);
            let trace = evolve(&spec, &law, x0, w0, &opts).map_err(|e| e.to_string())?;
            let d = measure_tc(&trace, GUARD).unwrap();
            let dir_tc = d.tc().filter(|_| d.is_clean()).ok_or_else(|| format!("seed {seed}: direction {d:?}"))?;
            Ok((dir_tc, eq_tc))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let max_dir = results.iter().map(|r| r.0).max().unwrap();
    let max_eq = results.iter().map(|r| r.1).max().unwrap();
    ensure(max_dir as f64 <= dir_bound, || format!("direction TC {max_dir} > {dir_bound:.0}"))?;

    let n_lb = 30usize;
    let spec_lb = NetworkSpec::new(n_lb, StateSpace::Circle, EdgeMapKind::CircleRDisk, r).unwrap();
    let ic = gen_initial(&Generator::AgreePursueLowerBound { case: PursuitCase::AlphaNonpositive }, &spec_lb, 0)
        .map_err(|e| e.to_string())?;
    let w0 = law.initial_logic(ic.directions.as_ref().unwrap());
    let dir = |_: &[Point], w: &[_], _: &EdgeSet| task_direction(w);
    let opts = EvolveOptions::new(4 * n_lb + GUARD).task(&dir).stop_after(GUARD);
    let trace = evolve(&spec_lb, &law, ic.x, w0, &opts).map_err(|e| e.to_string())?;
    let lb = measure_tc(&trace, GUARD).unwrap();
    let lb_tc = lb.tc().ok_or_else(|| format!("lower-bound run: {lb:?}"))?;
    ensure(lb_tc >= n_lb - 1, || format!("lower-bound TC {lb_tc} < {}", n_lb - 1))?;
    Ok(format!(
        "direction TC max {max_dir} <= {dir_bound:.0}; equidistance TC max {max_eq} <= {eq_horizon}; alpha<=0 TC {lb_tc} >= {}",
        n_lb - 1
    ))
}

fn random_partition(n: usize, s: usize, rng: &mut Xorshift64Star) -> Vec<Vec<usize>> {
    let mut ids: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut ids);
    // Every block gets one agent, the rest land anywhere.
    let mut blocks: Vec<Vec<usize>> = ids[..s].iter().map(|&i| vec![i]).collect();
    for &i in &ids[s..] {
        blocks[rng.below(s as u64) as usize].push(i);
    }
    blocks
}

// 9. Rescheduling invariance.
fn c9() -> Outcome {
    let mut checked = 0;
    for s in [2usize, 3] {
        for seed in 0..5u64 {
            let mut rng = Xorshift64Star::new(100 * s as u64 + seed);
            let n = 12;
            let r = 1.0;
            // Averaging on a connected 1-D chain.
            let spec = line_net(n, r, EdgeMapKind::RDisk);
            let x0 = gen_initial(&Generator::RandomChain { start: 0.0, min_gap: 0.2, max_gap: 1.0 }, &spec, seed)
                .map_err(|e| e.to_string())?
                .x;
            let law = law_move_toward_average(&LawParams::new(r)).unwrap();
            let sched = Rescheduling::new(n, random_partition(n, s, &mut rng)).unwrap();
            let rep = verify_rescheduling_invariance(&spec, &law, &task_rendezvous, &x0, sched, &UNIT, 200_000, GUARD)
                .map_err(|e| e.to_string())?;
            ensure(rep.holds(1e-12) && rep.tc.is_clean(), || format!("avrg s={s} seed={seed}: {rep:?}"))?;
            // Circumcenter in the plane.
            let spec = NetworkSpec::new(n, StateSpace::Euclidean { dim: 2 }, EdgeMapKind::RDisk, r).unwrap();
            let x0 = gen_initial(&Generator::UniformBall { radius: 1.5 }, &spec, seed).map_err(|e| e.to_string())?.x;
            let law = law_circumcenter(&LawParams::new(r)).unwrap();
            let sched = Rescheduling::new(n, random_partition(n, s, &mut rng)).unwrap();
            let rep = verify_rescheduling_invariance(&spec, &law, &task_rendezvous, &x0, sched, &UNIT, 1000, GUARD)
                .map_err(|e| e.to_string())?;
            ensure(rep.holds(1e-12) && rep.tc.is_clean(), || format!("crcmcntr s={s} seed={seed}: {rep:?}"))?;
            checked += 2;
        }
    }
    Ok(format!("{checked} runs: TC x s, equal TCC, MCC / s, trajectories within 1e-12"))
}

/// Next positions predicted by the affine map of the detected boundary case.
fn affine_step(x: &[f64], r: f64, q: Interval) -> Vec<f64> {
    let n = x.len();
    let near_lo = x[0] - q.lo <= r / 2.0;
    let near_hi = q.hi - x[n - 1] <= r / 2.0;
    (0..n)
        .map(|i| {
            let left = if i == 0 {
                if near_lo {
                    q.lo
                } else {
                    x[0] - r / 2.0
                }
            } else {
                (x[i - 1] + x[i]) / 2.0
            };
            let right = if i == n - 1 {
                if near_hi {
                    q.hi
                } else {
                    x[n - 1] + r / 2.0
                }
            } else {
                (x[i] + x[i + 1]) / 2.0
            };
            (left + right) / 2.0
        })
        .collect()
}

// 10. Centroid deployment on the segment.
fn c10() -> Outcome {
    let q = unit();
    let eps = 1e-3;
    let mut notes = Vec::new();

    // (a) and (b)
    for n in [4usize, 8, 16] {
        let r = 2.5 / n as f64;
        let spec = NetworkSpec::new(n, StateSpace::Segment { q }, EdgeMapKind::RLd, r).unwrap();
        let law = law_centroid_deploy(&LawParams::new(r).region(q)).unwrap();
        let star: Vec<f64> = (0..n).map(|i| q.lo + (1.0 + 2.0 * i as f64) * q.len() / (2.0 * n as f64)).collect();
        for case in [DeployCase::A, DeployCase::B, DeployCase::C] {
            for seed in 0..3u64 {
                let x0 = gen_initial(&Generator::DeploymentCase { case }, &spec, seed).map_err(|e| e.to_string())?.x;
                let close = |x: &[Point], _: &EdgeSet| x.iter().zip(&star).all(|(p, s)| (p.x() - s).abs() <= eps);
                let (trace, tc, _, _) = run_static(&spec, &law, x0, &close, 200_000, true);
                ensure(tc.is_clean(), || format!("(a) N={n} {case:?} seed {seed}: {tc:?}"))?;
                for (l, w) in trace.states.windows(2).enumerate() {
                    let now = xs(&w[0].x);
                    let pred = affine_step(&now, r, q);
                    let got = xs(&w[1].x);
                    let gap = pred.iter().zip(&got).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                    ensure(gap <= 1e-12, || format!("(b) N={n} {case:?} seed {seed} round {l}: gap {gap:e}"))?;
                }
            }
        }
    }
    notes.push("(a),(b) N=4,8,16 all cases".to_string());

    // (c) and (d)
    let c_budget = 1.0;
    for n in [8usize, 16, 32] {
        let r = 2.5 / n as f64;
        let nf = n as f64;
        let budget = c_budget * nf.powi(3) * (nf / eps).ln();
        let spec = NetworkSpec::new(n, StateSpace::Segment { q }, EdgeMapKind::RLd, r).unwrap();
        let law = law_centroid_deploy(&LawParams::new(r).region(q)).unwrap();
        let phi = Density::Uniform;
        let task = |x: &[Point], _: &EdgeSet| task_eps_r_deployment(&xs(x), q, r, eps, &phi, 64).unwrap();
        let mut worst = 0;
        for case in [DeployCase::A, DeployCase::B, DeployCase::C] {
            for seed in 0..3u64 {
                let x0 = gen_initial(&Generator::DeploymentCase { case }, &spec, seed).map_err(|e| e.to_string())?.x;
                let (_, tc, mcc, _) = run_static(&spec, &law, x0, &task, 4 * budget as usize, false);
                let t = tc.tc().filter(|_| tc.is_clean()).ok_or_else(|| format!("(c) N={n} {case:?}: {tc:?}"))?;
                ensure(t as f64 <= budget, || format!("(c) N={n} {case:?}: TC {t} > {budget:.0}"))?;
                if let Some(m) = mcc {
                    ensure(m >= 2.0 * (nf - 1.0) && m <= 6.0 * nf, || format!("(d) N={n} {case:?}: MCC {m}"))?;
                }
                worst = worst.max(t);
            }
        }
        notes.push(format!("N={n} worst TC {worst} <= {budget:.0}"));
    }
    Ok(notes.join("; "))
}

// 11. Gradient of the deployment objective.
fn c11() -> Outcome {
    let q = unit();
    let mut rng = Xorshift64Star::new(11);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 100 {
        let n = 1 + rng.below(8) as usize;
        let r = rng.uniform(0.05, 1.2);
        let mut x: Vec<f64> = (0..n).map(|_| rng.uniform(-0.1, 1.1)).collect();
        x.sort_by(f64::total_cmp);
        // Topology-stable: no near-coincident agents, no cell boundary near a
        // ball boundary or an end of Q.
        let h = 1e-6;
        let margin = 1e-3;
        let mut breaks = vec![q.lo, q.hi];
        breaks.extend(x.windows(2).map(|w| (w[0] + w[1]) / 2.0));
        let stable = x.windows(2).all(|w| w[1] - w[0] > margin)
            && x.iter().all(|&xi| {
                breaks.iter().all(|&b| ((b - xi).abs() - r / 2.0).abs() > margin && (b - xi).abs() > margin)
            });
        if !stable {
            continue;
        }
        let phi = if done % 2 == 0 { Density::Uniform } else { Density::from_fn(|t: f64| 1.0 + t) };
        let nq = 257;
        let g = gradient_H_r(&x, q, r, &phi, nq).map_err(|e| e.to_string())?;
        let fd: Vec<f64> = (0..n)
            .map(|i| {
                let mut p = x.clone();
                let mut m = x.clone();
                p[i] += h;
                m[i] -= h;
                (objective_H_r(&p, q, r, &phi, nq).unwrap() - objective_H_r(&m, q, r, &phi, nq).unwrap()) / (2.0 * h)
            })
            .collect();
        let diff = g.iter().zip(&fd).map(|(a, b)| (a + b).powi(2)).sum::<f64>().sqrt();
        let scale = fd.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-3);
        let rel = diff / scale;
        ensure(rel <= 1e-5, || format!("x={x:?} r={r}: relative error {rel:e}"))?;
        worst = worst.max(rel);
        done += 1;
    }
    // Exact zeros at centroidal configurations: the uniform case-(a)
    // equilibrium and isolated agents each centred in its own ball.
    let mut configs: Vec<(Vec<f64>, f64)> = [1usize, 2, 4, 8, 16]
        .iter()
        .map(|&n| ((0..n).map(|i| (2 * i + 1) as f64 / (2 * n) as f64).collect(), 2.0 / n as f64))
        .collect();
    configs.push((vec![0.25, 0.5, 0.75], 0.125));
    configs.push((vec![0.125, 0.75], 0.25));
    for (x, r) in &configs {
        let g = gradient_H_r(x, q, *r, &Density::Uniform, 64).map_err(|e| e.to_string())?;
        ensure(g.iter().all(|&v| v == 0.0), || format!("x={x:?}: gradient {g:?}"))?;
    }
    Ok(format!("100 instances, worst relative error {worst:.2e}; {} centroidal configurations give 0", configs.len()))
}

// 12. Bounds on the P transforms.
fn c12() -> Outcome {
    let mut rng = Xorshift64Star::new(12);
    for n in 2..=64usize {
        for _ in 0..1000 {
            let y: Vec<f64> = (0..n - 1).map(|_| rng.uniform(-1.0, 1.0)).collect();
            let x = p_plus_apply(&y);
            ensure(check_p_bounds_plus(&x, &y), || format!("N={n}: plus bound fails for y={y:?}"))?;
            let z: Vec<f64> = (0..n - 1).map(|_| rng.uniform(-1.0, 1.0)).collect();
            let x = p_minus_apply(&z);
            ensure(check_p_bounds_minus(&x, &z), || format!("N={n}: minus bound fails for z={z:?}"))?;
            if n >= 3 {
                // x orthogonal to both 1 and the alternating vector.
                let mut x: Vec<f64> = (0..n).map(|_| rng.uniform(-1.0, 1.0)).collect();
                let alt: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
                let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(a, b)| a * b).sum::<f64>();
                let ones = vec![1.0; n];
                // Orthogonal basis of span{1, alt}; for odd N the two overlap.
                let shift = dot(&alt, &ones) / n as f64;
                let alt_perp: Vec<f64> = alt.iter().map(|a| a - shift).collect();
                for u in [&ones, &alt_perp] {
                    let c = dot(&x, u) / dot(u, u);
                    x.iter_mut().zip(u.iter()).for_each(|(a, b)| *a -= c * b);
                }
                let y = p_plus_coords(&x).map_err(|e| e.to_string())?;
                let z = p_minus_coords(&x).map_err(|e| e.to_string())?;
                ensure(check_p_bounds(&x, &y, &z), || format!("N={n}: joint bound fails for x={x:?}"))?;
            }
        }
    }
    Ok("1000 vectors per N = 2..64 (plus, minus and joint)".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("spectral contraction scaling", c1),
        ("eigenpair residuals", c2),
        ("circumcenter on r-disk chain", c3),
        ("circumcenter on r-LD", c4),
        ("parallel circumcenter", c5),
        ("circumcenter communication cost", c6),
        ("move-toward-average", c7),
        ("agree-and-pursue", c8),
        ("rescheduling invariance", c9),
        ("centroid deployment", c10),
        ("deployment gradient", c11),
        ("P-transform bounds", c12),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", k + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
