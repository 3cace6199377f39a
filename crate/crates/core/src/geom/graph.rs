use serde::{Serialize, Serializer};

use crate::geom::Point;
use crate::scalar::Scalar;

/// Directed edge set over agents `0..n`, stored as sorted out-neighbor lists.
///
/// Self-loops are never stored. All proximity edge maps produce symmetric
/// sets; the rescheduling machinery and the non-null edge filter produce
/// directed subsets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EdgeSet {
    adj: Vec<Vec<usize>>,
}

impl EdgeSet {
    /// Empty edge set on `n` agents.
    pub fn empty(n: usize) -> Self {
        EdgeSet { adj: vec![Vec::new(); n] }
    }

    /// Builds from directed pairs, dropping duplicates.
    ///
    /// # Panics
    /// On a self-loop or an id `>= n`.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, j) in pairs {
            assert!(i < n && j < n, "edge ({i}, {j}) out of range for n = {n}");
            assert!(i != j, "self-loop at {i}");
            adj[i].push(j);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        EdgeSet { adj }
    }

    /// Builds a symmetric set from unordered pairs.
    pub fn from_undirected(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_pairs(n, pairs.into_iter().flat_map(|(i, j)| [(i, j), (j, i)]))
    }

    pub(crate) fn from_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(i, l)| { l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&i) }));
        EdgeSet { adj }
    }

    /// Number of agents.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of directed pairs.
    pub fn len(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.iter().all(Vec::is_empty)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.adj.get(i).is_some_and(|l| l.binary_search(&j).is_ok())
    }

    /// Out-neighbors of `i` in increasing id order.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Directed pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&j| (i, j)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(i, j)| self.contains(j, i))
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.iter().all(|(i, j)| other.contains(i, j))
    }

    /// Keeps the pairs `(i, j)` for which `keep(i, j)` holds.
    pub fn filter(&self, mut keep: impl FnMut(usize, usize) -> bool) -> EdgeSet {
        EdgeSet {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(i, l)| l.iter().copied().filter(|&j| keep(i, j)).collect())
                .collect(),
        }
    }

    /// Pairs present in either set.
    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.n(), other.n());
        EdgeSet::from_pairs(self.n(), self.iter().chain(other.iter()))
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// Connected components of the undirected graph underlying `e`.
///
/// Each component is sorted; components are ordered by their smallest id.
pub fn connected_components(e: &EdgeSet, n: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for (i, j) in e.iter() {
        uf.union(i, j);
    }
    let mut by_root: Vec<Option<usize>> = vec![None; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        let slot = *by_root[r].get_or_insert_with(|| {
            comps.push(Vec::new());
            comps.len() - 1
        });
        comps[slot].push(i);
    }
    comps
}

/// Largest pairwise Euclidean distance among the agents in `ids`.
pub fn config_diameter<T: Scalar>(x: &[Point<T>], ids: &[usize]) -> T {
    let mut best = T::zero();
    for (a, &i) in ids.iter().enumerate() {
        for &j in &ids[a + 1..] {
            best = best.max(x[i].dist(&x[j]));
        }
    }
    best
}
