//! Seeded initial conditions, including the extremal configurations used by
//! the complexity lower bounds.

use std::f64::consts::{SQRT_2, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::reduce_angle;
use crate::lab::Xorshift64Star;
use crate::laws::Direction;
use crate::netmodel::StateSpace;
use crate::spectral::{p_plus_apply, worst_case_vector, BandedMatrixSpec};
use crate::{Interval, NetworkSpec, Point};

/// Which side of `N r = 2 pi` the agree-and-pursue construction targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PursuitCase {
    /// `N r > 2 pi`: a full ring at spacing `r` plus a cluster opposite agent `N`.
    AlphaPositive,
    /// `N r <= 2 pi`: an open chain at spacing `r` in identifier order.
    AlphaNonpositive,
}

/// Boundary situation of a 1-D deployment configuration in `Q = [q-, q+]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeployCase {
    /// Both end agents within `r/2` of their end of `Q`.
    A,
    /// Neither end agent within `r/2` of its end.
    B,
    /// Only the left end agent within `r/2` of `q-`.
    C,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generator {
    /// Independent uniform coordinates in `[lo, hi)` (angles reduced mod `2 pi` on the circle).
    UniformRandom {
        lo: f64,
        hi: f64,
    },
    /// Uniform in the ball of the given radius around the origin.
    UniformBall {
        radius: f64,
    },
    /// `0, s, 2s, ...` along the first axis; `s` defaults to `r`.
    EquispacedChain {
        #[serde(default)]
        spacing: Option<f64>,
    },
    /// Ordered 1-D chain from `start` with gaps uniform in `[min_gap, max_gap] * r`.
    RandomChain {
        #[serde(default)]
        start: f64,
        min_gap: f64,
        max_gap: f64,
    },
    /// The slow mode of the limited-Delaunay circumcenter dynamics.
    LdWorstCase,
    /// Circle gaps `2 pi/N + k w` with `w` the slow circulant mode, `k` a
    /// fraction `amplitude` of the largest admissible value.
    CircWorstCase {
        #[serde(default = "default_amplitude")]
        amplitude: f64,
    },
    AgreePursueLowerBound {
        case: PursuitCase,
    },
    DeploymentCase {
        case: DeployCase,
    },
    Explicit {
        x: Vec<Vec<f64>>,
        #[serde(default)]
        directions: Option<Vec<Direction>>,
    },
}

fn default_amplitude() -> f64 {
    0.5
}

impl Generator {
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Generator::UniformRandom { .. }
                | Generator::UniformBall { .. }
                | Generator::RandomChain { .. }
                | Generator::DeploymentCase { .. }
        )
    }
}

/// Positions, optional directions for circle laws, and the amplitude scale
/// applied by generators that rescale defensively.
#[derive(Clone, Debug, PartialEq)]
pub struct InitialCondition {
    pub x: Vec<Point>,
    pub directions: Option<Vec<Direction>>,
    pub scale: Option<f64>,
}

impl InitialCondition {
    fn positions(x: Vec<Point>) -> Self {
        InitialCondition { x, directions: None, scale: None }
    }
}

/// Spacing used where a construction asks for agents exactly `r` apart; the
/// tiny shrink keeps those pairs adjacent despite rounding.
fn snug(r: f64) -> f64 {
    r * (1.0 - 1e-9)
}

fn need_line(spec: &NetworkSpec, what: &str) -> Result<()> {
    if spec.state_space.dim() == 1 && !matches!(spec.state_space, StateSpace::Circle) {
        Ok(())
    } else {
        Err(Error::Config(format!("{what} needs a one-dimensional Euclidean or segment network")))
    }
}

fn need_circle(spec: &NetworkSpec, what: &str) -> Result<()> {
    if matches!(spec.state_space, StateSpace::Circle) {
        Ok(())
    } else {
        Err(Error::Config(format!("{what} needs a circle network")))
    }
}

/// Builds the initial positions for `spec.n` agents.
pub fn gen_initial(gen: &Generator, spec: &NetworkSpec, seed: u64) -> Result<InitialCondition> {
    spec.validate()?;
    let n = spec.n;
    let r = spec.r;
    let d = spec.state_space.dim();
    let circle = matches!(spec.state_space, StateSpace::Circle);
    let mut rng = Xorshift64Star::new(seed);
    let ic = match gen {
        Generator::UniformRandom { lo, hi } => {
            if !(lo < hi) {
                return Err(Error::Config(format!("uniform-random bounds [{lo}, {hi}) are empty")));
            }
            let x = (0..n)
                .map(|_| {
                    let c: Vec<f64> = (0..d).map(|_| rng.uniform(*lo, *hi)).collect();
                    if circle {
                        Point::scalar(reduce_angle(c[0]))
                    } else {
                        Point::new(c)
                    }
                })
                .collect();
            InitialCondition::positions(x)
        }
        Generator::UniformBall { radius } => {
            if circle || !(*radius >= 0.0) {
                return Err(Error::Config("uniform-ball needs a Euclidean network and radius >= 0".into()));
            }
            let x = (0..n)
                .map(|_| loop {
                    let c: Vec<f64> = (0..d).map(|_| rng.uniform(-1.0, 1.0)).collect();
                    if c.iter().map(|v| v * v).sum::<f64>() <= 1.0 {
                        break Point::new(c).scale(*radius);
                    }
                })
                .collect();
            InitialCondition::positions(x)
        }
        Generator::EquispacedChain { spacing } => {
            let s = spacing.unwrap_or(r);
            let x = (0..n)
                .map(|i| {
                    let mut c = vec![0.0; d];
                    c[0] = if circle { reduce_angle(i as f64 * s) } else { i as f64 * s };
                    Point::new(c)
                })
                .collect();
            InitialCondition::positions(x)
        }
        Generator::RandomChain { start, min_gap, max_gap } => {
            need_line(spec, "random-chain")?;
            if !(0.0 <= *min_gap && min_gap <= max_gap && *max_gap <= 1.0) {
                return Err(Error::Config("random-chain needs 0 <= min_gap <= max_gap <= 1".into()));
            }
            let mut x = Vec::with_capacity(n);
            let mut pos = *start;
            for i in 0..n {
                if i > 0 {
                    pos += rng.uniform(*min_gap, *max_gap) * r;
                }
                x.push(Point::scalar(pos));
            }
            InitialCondition::positions(x)
        }
        Generator::LdWorstCase => ld_worst_case(spec)?,
        Generator::CircWorstCase { amplitude } => {
            need_circle(spec, "circ-worst-case")?;
            if n < 3 || !(0.0..1.0).contains(amplitude) {
                return Err(Error::Config("circ-worst-case needs N >= 3 and amplitude in [0, 1)".into()));
            }
            let w = worst_case_vector(&BandedMatrixSpec::<f64>::circ(0.5, 0.0, 0.5, n))?;
            let base = TAU / n as f64;
            let wmax = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let k = amplitude * base / wmax;
            let mut theta = 0.0;
            let mut x = Vec::with_capacity(n);
            for wi in &w {
                x.push(Point::scalar(reduce_angle(theta)));
                theta += base + k * wi;
            }
            InitialCondition { x, directions: Some(vec![Direction::C; n]), scale: Some(k) }
        }
        Generator::AgreePursueLowerBound { case } => pursuit_lower_bound(spec, *case)?,
        Generator::DeploymentCase { case } => deployment_case(spec, *case, &mut rng)?,
        Generator::Explicit { x, directions } => {
            if x.len() != n {
                return Err(Error::Config(format!("explicit positions list {} agents, network has {n}", x.len())));
            }
            if let Some(dirs) = directions {
                if dirs.len() != n {
                    return Err(Error::Config("explicit directions length differs from N".into()));
                }
            }
            let x = x.iter().map(|c| Point::try_new(c.clone())).collect::<Result<Vec<_>>>()?;
            InitialCondition { x, directions: directions.clone(), scale: None }
        }
    };
    for (i, p) in ic.x.iter().enumerate() {
        spec.state_space.check(p).map_err(|e| Error::Config(format!("generated position of agent {i}: {e}")))?;
    }
    Ok(ic)
}

/// `mu P+ [0; v_{N-1}]` with `mu = -r N^{5/2} / (10 sqrt 2)`, shrunk if needed
/// so that the coordinates increase with gaps at most `r`.
fn ld_worst_case(spec: &NetworkSpec) -> Result<InitialCondition> {
    need_line(spec, "ld-worst-case")?;
    let n = spec.n;
    if n < 3 {
        return Err(Error::Config("ld-worst-case needs N >= 3".into()));
    }
    let r = spec.r;
    let v: Vec<f64> =
        (1..n).map(|k| (2.0 / n as f64).sqrt() * (k as f64 * std::f64::consts::PI / n as f64).sin()).collect();
    let mu = -r * (n as f64).powf(2.5) / (10.0 * SQRT_2);
    let mut x: Vec<f64> = p_plus_apply(&v).into_iter().map(|u| mu * u).collect();
    let max_gap = x.windows(2).map(|w| w[1] - w[0]).fold(0.0f64, f64::max);
    let ordered = x.windows(2).all(|w| w[1] > w[0]);
    if !ordered {
        return Err(Error::Precondition("ld worst case is not ordered".into()));
    }
    let mut scale = 1.0;
    if max_gap > r {
        scale = r / max_gap;
        x.iter_mut().for_each(|u| *u *= scale);
    }
    Ok(InitialCondition { x: x.into_iter().map(Point::scalar).collect(), directions: None, scale: Some(mu * scale) })
}

fn pursuit_lower_bound(spec: &NetworkSpec, case: PursuitCase) -> Result<InitialCondition> {
    need_circle(spec, "agree-pursue-lower-bound")?;
    let n = spec.n;
    let r = spec.r;
    let alpha = n as f64 * r - TAU;
    let mut directions = vec![Direction::Cc; n];
    directions[n - 1] = Direction::C;
    let x = match case {
        PursuitCase::AlphaNonpositive => {
            if alpha > 0.0 {
                return Err(Error::Config(format!("alpha = N r - 2 pi = {alpha} is positive")));
            }
            (0..n).map(|i| Point::scalar(reduce_angle(i as f64 * snug(r)))).collect()
        }
        PursuitCase::AlphaPositive => {
            if alpha <= 0.0 {
                return Err(Error::Config(format!("alpha = N r - 2 pi = {alpha} is not positive")));
            }
            // Ring of m agents (the last one being agent N at angle 0), then a
            // cluster clockwise-behind the ring agent opposite agent N.
            let m = ((TAU / r) + 1e-9).floor() as usize;
            let m = m.min(n);
            let mut x = vec![Point::scalar(0.0); n];
            for (slot, agent) in (0..m - 1).enumerate() {
                x[agent] = Point::scalar(reduce_angle((slot + 1) as f64 * snug(r)));
            }
            let opposite = (m / 2).max(1) - 1;
            let anchor = x[opposite].x();
            let extra = n - m;
            for (k, agent) in (m - 1..n - 1).enumerate() {
                let off = 0.5 * r * (k + 1) as f64 / (extra + 1) as f64;
                x[agent] = Point::scalar(reduce_angle(anchor - off));
            }
            x
        }
    };
    Ok(InitialCondition { x, directions: Some(directions), scale: None })
}

fn deployment_case(spec: &NetworkSpec, case: DeployCase, rng: &mut Xorshift64Star) -> Result<InitialCondition> {
    let q = match spec.state_space {
        StateSpace::Segment { q } => q,
        _ => return Err(Error::Config("deployment-case needs a segment network".into())),
    };
    let n = spec.n;
    let r = spec.r;
    let len = q.len();
    let half = 0.5 * r;
    let max_span = (n - 1) as f64 * r;
    // Admissible total span G and left offset o = x_1 - q- for each case.
    let (g_lo, g_hi) = match case {
        DeployCase::A => ((len - r).max(0.0), len.min(max_span)),
        DeployCase::B => (0.0, (len - r).min(max_span)),
        DeployCase::C => (0.0, (len - half).min(max_span)),
    };
    if !(g_lo < g_hi) || (n == 1 && case == DeployCase::A && len > r) {
        return Err(Error::Config(format!("deployment case {case:?} is infeasible for N = {n}, r = {r}, |Q| = {len}")));
    }
    for _ in 0..10_000 {
        let total = if n == 1 { 0.0 } else { rng.uniform(g_lo, g_hi) };
        let weights: Vec<f64> = (1..n).map(|_| rng.uniform(0.2, 1.0)).collect();
        let wsum: f64 = weights.iter().sum();
        let gaps: Vec<f64> = weights.iter().map(|w| total * w / wsum).collect();
        if gaps.iter().any(|&g| g > r) {
            continue;
        }
        let (o_lo, o_hi) = match case {
            DeployCase::A => ((len - half - total).max(0.0), half.min(len - total)),
            DeployCase::B => (half, len - half - total),
            DeployCase::C => (0.0, half.min(len - half - total)),
        };
        if !(o_lo < o_hi) {
            continue;
        }
        // Keep strictly away from the case boundaries.
        let pad = 1e-6 * (o_hi - o_lo);
        let offset = rng.uniform(o_lo + pad, o_hi - pad);
        let mut pos = q.lo + offset;
        let mut x = vec![Point::scalar(pos)];
        for g in gaps {
            pos += g;
            x.push(Point::scalar(pos));
        }
        if x.iter().all(|p| q.contains(p.x())) {
            return Ok(InitialCondition::positions(x));
        }
    }
    Err(Error::Config(format!("could not sample deployment case {case:?}")))
}

/// The deployment region of a segment network.
pub fn segment_region(spec: &NetworkSpec) -> Option<Interval> {
    match spec.state_space {
        StateSpace::Segment { q } => Some(q),
        _ => None,
    }
}
