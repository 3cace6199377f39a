use serde::{Deserialize, Serialize};

use crate::geom::EdgeSet;

/// One-round cost charged on the directed edges that carried a message.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CostModel {
    /// `c0` per non-null message. Additive.
    Unidirectional { c0: f64 },
    /// Broadcast turns needed so that no receiver hears two senders at once,
    /// estimated by greedy coloring of the neighbor-induced graph.
    Omnidirectional,
    /// `c0` per transmitting agent, one omnidirectional broadcast each.
    /// Offered as an energy proxy; it is not one of the two models above.
    OmniEnergy { c0: f64 },
}

impl CostModel {
    pub fn cost(&self, e: &EdgeSet) -> f64 {
        match *self {
            CostModel::Unidirectional { c0 } => cost_unidirectional(e, c0),
            CostModel::Omnidirectional => cost_omnidirectional(e, e.n()),
            CostModel::OmniEnergy { c0 } => c0 * (0..e.n()).filter(|&i| e.out_degree(i) > 0).count() as f64,
        }
    }

    pub fn is_additive(&self) -> bool {
        matches!(self, CostModel::Unidirectional { .. })
    }

    /// Short label for reports.
    pub fn label(&self) -> String {
        match self {
            CostModel::Unidirectional { c0 } => format!("unidirectional(c0={c0})"),
            CostModel::Omnidirectional => "omnidirectional".into(),
            CostModel::OmniEnergy { c0 } => format!("omni-energy(c0={c0})"),
        }
    }
}

/// `c0 · |E|`.
pub fn cost_unidirectional(e: &EdgeSet, c0: f64) -> f64 {
    c0 * e.len() as f64
}

/// Neighbor-induced graph on the transmitters of `e`: two transmitters are
/// adjacent when one sends to the other or both send to a common receiver.
/// Returned as a dense symmetric adjacency matrix over all `n` agents.
pub fn neighbor_induced_graph(e: &EdgeSet, n: usize) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    let mut senders_to: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, j) in e.iter() {
        adj[i][j] = true;
        adj[j][i] = true;
        senders_to[j].push(i);
    }
    for s in &senders_to {
        for (a, &i) in s.iter().enumerate() {
            for &j in &s[a + 1..] {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    adj
}

/// Welsh–Powell coloring of the subgraph induced by `vertices`.
///
/// Vertices are ordered by decreasing degree with ties broken by id. Each
/// pass opens a new color and sweeps the order, giving it to every uncolored
/// vertex with no neighbor of that color. Returns `(vertex, color)` pairs.
pub fn welsh_powell(adj: &[Vec<bool>], vertices: &[usize]) -> Vec<(usize, usize)> {
    let degree = |v: usize| vertices.iter().filter(|&&u| adj[v][u]).count();
    let mut order: Vec<(usize, usize)> = vertices.iter().map(|&v| (v, degree(v))).collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut color: Vec<Option<usize>> = vec![None; order.len()];
    let mut next = 0;
    for start in 0..order.len() {
        if color[start].is_some() {
            continue;
        }
        let mut members = vec![order[start].0];
        color[start] = Some(next);
        for k in start + 1..order.len() {
            let v = order[k].0;
            if color[k].is_none() && members.iter().all(|&u| !adj[v][u]) {
                color[k] = Some(next);
                members.push(v);
            }
        }
        next += 1;
    }
    order.iter().zip(color).map(|(&(v, _), c)| (v, c.expect("every vertex colored"))).collect()
}

/// Number of broadcast turns for the transmitters in `e`.
pub fn cost_omnidirectional(e: &EdgeSet, n: usize) -> f64 {
    let transmitters: Vec<usize> = (0..n).filter(|&i| e.out_degree(i) > 0).collect();
    if transmitters.is_empty() {
        return 0.0;
    }
    let adj = neighbor_induced_graph(e, n);
    let colors = welsh_powell(&adj, &transmitters);
    colors.iter().map(|c| c.1).max().map_or(0, |m| m + 1) as f64
}
