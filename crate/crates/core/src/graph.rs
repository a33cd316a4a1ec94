//! Simple undirected graphs with sorted adjacency, traversal and distances,
//! plus the seeded random split-like generator used throughout the tests.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classes::{PartitionKind, SplitLikePartition};
use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let next = a[i].min(b[j]);
            i += usize::from(a[i] == next);
            j += usize::from(b[j] == next);
            out.push(next);
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let b = &other.0;
        let mut j = 0;
        let mut out = Vec::with_capacity(self.len());
        for &v in &self.0 {
            while j < b.len() && b[j] < v {
                j += 1;
            }
            if b.get(j) != Some(&v) {
                out.push(v);
            }
        }
        Self(out)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let b = &other.0;
        let mut j = 0;
        self.0.iter().all(|&v| {
            while j < b.len() && b[j] < v {
                j += 1;
            }
            b.get(j) == Some(&v)
        })
    }

    /// Vertices whose flag is set, in `O(flags.len())`.
    pub fn from_flags(flags: &[bool]) -> Self {
        Self((0..flags.len()).filter(|&v| flags[v]).collect())
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Errors unless every id is `< n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut ids: Vec<usize> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        ids.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    /// Neighbors of `v` are `targets[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; neighbor lists come out sorted.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(adjacency))
    }

    /// Flattens sorted, duplicate-free neighbor lists into one array.
    fn from_sorted_lists(lists: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        for list in lists {
            targets.extend(list);
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(self.vertices().collect())
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.is_connected_on(&self.all_vertices()).unwrap_or(false)
    }

    /// Whether the subgraph induced by `s` is connected.
    pub fn is_connected_on(&self, s: &VertexSet) -> Result<bool> {
        s.check_range(self.n())?;
        let Some(start) = s.first() else {
            return Err(Error::EmptyVertexSet);
        };
        let mut member = vec![false; self.n()];
        for v in s {
            member[v] = true;
        }
        Ok(self.reach_within(start, &mut member) == s.len())
    }

    /// BFS from `start` through vertices flagged in `member`, clearing the
    /// flags of everything reached. Returns the number of vertices reached.
    pub(crate) fn reach_within(&self, start: usize, member: &mut [bool]) -> usize {
        member[start] = false;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if member[w] {
                    member[w] = false;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `s`. The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        s.check_range(self.n())?;
        let back: Vec<usize> = s.iter().collect();
        let mut forward = vec![usize::MAX; self.n()];
        for (new, &old) in back.iter().enumerate() {
            forward[old] = new;
        }
        let adjacency = back
            .iter()
            .map(|&old| {
                self.neighbors(old)
                    .iter()
                    .filter_map(|&w| (forward[w] != usize::MAX).then_some(forward[w]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        Ok((Graph::from_sorted_lists(adjacency), back))
    }
}

/// Shortest-path distance, with a distinguished value for "unreachable".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

pub fn eccentricities(g: &Graph) -> Vec<Distance> {
    g.vertices()
        .map(|v| {
            g.bfs_distances(v)
                .into_iter()
                .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
                .map_or(Distance::Infinite, Distance::Finite)
        })
        .collect()
}

pub fn diameter(g: &Graph) -> Distance {
    eccentricities(g)
        .into_iter()
        .max()
        .unwrap_or(Distance::Finite(0))
}

/// Seeded random split-like graph.
///
/// `PartitionKind::Clique` takes exactly one part size and makes it a clique.
/// `PartitionKind::Multipartite` joins every pair of parts completely and
/// leaves each part edgeless. Independent vertices attach to each K-side
/// vertex with probability `attach_prob`; isolated ones are re-rolled onto a
/// single uniformly chosen K-side vertex. With a single multipartite part
/// (a bipartite graph) remaining components are joined by extra K–I edges.
pub fn gen_random_split_like(
    kind: PartitionKind,
    part_sizes: &[usize],
    indep_size: usize,
    attach_prob: f64,
    seed: u64,
) -> Result<(Graph, SplitLikePartition)> {
    if part_sizes.is_empty() || part_sizes.iter().all(|&s| s == 0) {
        return Err(Error::InvalidParameters("all part sizes are zero".into()));
    }
    if part_sizes.contains(&0) {
        return Err(Error::InvalidParameters("empty part requested".into()));
    }
    if kind == PartitionKind::Clique && part_sizes.len() != 1 {
        return Err(Error::InvalidParameters(
            "a clique partition takes exactly one part".into(),
        ));
    }
    if !(0.0..=1.0).contains(&attach_prob) {
        return Err(Error::InvalidParameters(format!(
            "attach probability {attach_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut parts = Vec::with_capacity(part_sizes.len());
    let mut next = 0;
    for &size in part_sizes {
        parts.push(VertexSet((next..next + size).collect()));
        next += size;
    }
    let k_size = next;
    let independent = VertexSet((k_size..k_size + indep_size).collect());
    let n = k_size + indep_size;

    let mut edges = Vec::new();
    match kind {
        PartitionKind::Clique => {
            for u in 0..k_size {
                for v in u + 1..k_size {
                    edges.push((u, v));
                }
            }
        }
        PartitionKind::Multipartite => {
            for (i, p) in parts.iter().enumerate() {
                for q in &parts[i + 1..] {
                    for u in p {
                        for v in q {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
    }
    for x in &independent {
        let before = edges.len();
        for k in 0..k_size {
            if rng.random_bool(attach_prob) {
                edges.push((k, x));
            }
        }
        if edges.len() == before {
            edges.push((rng.random_range(0..k_size), x));
        }
    }

    let mut g = Graph::new(n, &edges)?;
    if kind == PartitionKind::Multipartite && parts.len() == 1 && k_size > 1 {
        g = join_bipartite_components(g, k_size, &mut rng, &mut edges)?;
    }
    let partition = SplitLikePartition {
        kind,
        parts,
        independent,
    };
    Ok((g, partition))
}

/// Vertices `< k_size` are the K side. Isolated K vertices are attached to a
/// random independent vertex first; afterwards every component holds both a
/// K and an I vertex and components are chained by K–I edges.
fn join_bipartite_components(
    g: Graph,
    k_size: usize,
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(usize, usize)>,
) -> Result<Graph> {
    let n = g.n();
    if n == k_size {
        return Err(Error::InvalidParameters(
            "a single edgeless part needs independent vertices to be connected".into(),
        ));
    }
    for k in 0..k_size {
        if g.degree(k) == 0 {
            edges.push((k, rng.random_range(k_size..n)));
        }
    }
    let mut g = Graph::new(n, edges)?;
    loop {
        let comps = g.components();
        if comps.len() <= 1 {
            return Ok(g);
        }
        let ks: Vec<usize> = comps[0].iter().filter(|&v| v < k_size).collect();
        let is: Vec<usize> = comps[1].iter().filter(|&v| v >= k_size).collect();
        edges.push((
            ks[rng.random_range(0..ks.len())],
            is[rng.random_range(0..is.len())],
        ));
        g = Graph::new(n, edges)?;
    }
}
