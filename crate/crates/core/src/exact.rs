//! Steiner instances and solutions, and the exhaustive ground-truth solver.
//!
//! The objective counts Steiner vertices, so the oracle enumerates candidate
//! Steiner sets by increasing size and stops at the first connected one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_EXACT_CAP: usize = 22;
/// Graph order limit of the bitmask search.
pub const EXACT_MAX_ORDER: usize = 128;

/// A connected graph, a nonempty terminal set and an optional budget.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SteinerInstance {
    graph: Graph,
    terminals: VertexSet,
    budget: Option<usize>,
}

impl SteinerInstance {
    pub fn new(graph: Graph, terminals: VertexSet, budget: Option<usize>) -> Result<Self> {
        if terminals.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        terminals.check_range(graph.n())?;
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Self {
            graph,
            terminals,
            budget,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    pub fn with_budget(mut self, budget: Option<usize>) -> Self {
        self.budget = budget;
        self
    }

    pub fn non_terminals(&self) -> VertexSet {
        self.graph.all_vertices().difference(&self.terminals)
    }

    /// Whether the terminals alone already induce a connected subgraph.
    pub fn terminals_connected(&self) -> bool {
        self.graph
            .is_connected_on(&self.terminals)
            .expect("terminals are nonempty and in range")
    }
}

/// Steiner set plus a spanning tree of `G[R ∪ S]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SteinerSolution {
    pub steiner: VertexSet,
    pub tree_edges: Vec<(usize, usize)>,
}

impl SteinerSolution {
    /// Builds the BFS tree of `G[R ∪ S]` rooted at its smallest vertex.
    pub fn from_steiner_set(inst: &SteinerInstance, steiner: VertexSet) -> Result<Self> {
        let g = inst.graph();
        let span = inst.terminals().union(&steiner);
        span.check_range(g.n())?;
        let mut member = vec![false; g.n()];
        for v in &span {
            member[v] = true;
        }
        let root = span.first().ok_or(Error::EmptyVertexSet)?;
        member[root] = false;
        let mut queue = vec![root];
        let mut tree_edges = Vec::with_capacity(span.len() - 1);
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            for &w in g.neighbors(u) {
                if member[w] {
                    member[w] = false;
                    tree_edges.push((u.min(w), u.max(w)));
                    queue.push(w);
                }
            }
        }
        if queue.len() != span.len() {
            return Err(Error::Precondition(format!(
                "Steiner set {steiner} does not connect the terminals"
            )));
        }
        sort_edges(&mut tree_edges, g.n());
        Ok(Self {
            steiner,
            tree_edges,
        })
    }

    pub fn size(&self) -> usize {
        self.steiner.len()
    }
}

/// Lexicographic order of `(u, v)` pairs below `n` by two counting passes.
fn sort_edges(edges: &mut Vec<(usize, usize)>, n: usize) {
    let mut buf = vec![(0, 0); edges.len()];
    for key in [|e: &(usize, usize)| e.1, |e: &(usize, usize)| e.0] {
        let mut start = vec![0usize; n + 1];
        for e in edges.iter() {
            start[key(e) + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        for e in edges.iter() {
            let slot = &mut start[key(e)];
            buf[*slot] = *e;
            *slot += 1;
        }
        std::mem::swap(edges, &mut buf);
    }
}

/// Checks the solution invariants in `O(|V| + |E|)`: the Steiner set avoids
/// the terminals and the tree edges are graph edges forming a spanning tree
/// of `R ∪ S`.
pub fn verify_solution(inst: &SteinerInstance, sol: &SteinerSolution) -> bool {
    let g = inst.graph();
    let n = g.n();
    if sol.steiner.check_range(n).is_err() || !sol.steiner.is_disjoint(inst.terminals()) {
        return false;
    }
    let span = inst.terminals().union(&sol.steiner);
    if sol.tree_edges.len() + 1 != span.len() {
        return false;
    }
    let mut in_span = vec![false; n];
    for v in &span {
        in_span[v] = true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in &sol.tree_edges {
        if u >= n || v >= n || !in_span[u] || !in_span[v] || !g.has_edge(u, v) {
            return false;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    // |span| - 1 acyclic edges inside span form a spanning tree.
    true
}

/// Minimum Steiner set; the lexicographically smallest among minimum ones.
pub fn solve_exact(inst: &SteinerInstance) -> Result<SteinerSolution> {
    solve_exact_with_cap(inst, DEFAULT_EXACT_CAP)
}

pub fn solve_exact_with_cap(inst: &SteinerInstance, cap: usize) -> Result<SteinerSolution> {
    let search = ExactSearch::new(inst, cap)?;
    let steiner = search
        .smallest_within(search.pool.len())
        .expect("the full candidate pool connects a connected graph");
    SteinerSolution::from_steiner_set(inst, steiner)
}

/// Whether some Steiner set has at most `k` vertices.
pub fn decide(inst: &SteinerInstance, k: usize) -> Result<bool> {
    decide_with_cap(inst, k, DEFAULT_EXACT_CAP)
}

pub fn decide_with_cap(inst: &SteinerInstance, k: usize, cap: usize) -> Result<bool> {
    let search = ExactSearch::new(inst, cap)?;
    Ok(search.smallest_within(k).is_some())
}

struct ExactSearch {
    adj: Vec<u128>,
    terminals: u128,
    /// Candidate Steiner vertices, ascending.
    pool: Vec<usize>,
}

impl ExactSearch {
    fn new(inst: &SteinerInstance, cap: usize) -> Result<Self> {
        let g = inst.graph();
        if g.n() > EXACT_MAX_ORDER {
            return Err(Error::CapExceeded {
                what: "graph order for the exact search",
                size: g.n(),
                cap: EXACT_MAX_ORDER,
            });
        }
        let adj: Vec<u128> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
            .collect();
        let terminals = inst.terminals().iter().fold(0u128, |m, v| m | 1 << v);
        // A vertex of degree <= 1 is a leaf of G[R ∪ S] whenever it is used,
        // so it never belongs to a minimum Steiner set.
        let pool: Vec<usize> = inst
            .non_terminals()
            .iter()
            .filter(|&v| g.degree(v) >= 2)
            .collect();
        if pool.len() > cap {
            return Err(Error::CapExceeded {
                what: "candidate Steiner vertex pool",
                size: pool.len(),
                cap,
            });
        }
        Ok(Self {
            adj,
            terminals,
            pool,
        })
    }

    fn smallest_within(&self, max_size: usize) -> Option<VertexSet> {
        let mut chosen = Vec::new();
        (0..=max_size.min(self.pool.len())).find_map(|size| {
            self.combine(0, size, self.terminals, &mut chosen)
                .then(|| chosen.iter().map(|&i| self.pool[i]).collect())
        })
    }

    /// Extends `chosen` with `left` more pool indices from `from` onwards, in
    /// lexicographic order, stopping at the first connected union.
    fn combine(&self, from: usize, left: usize, mask: u128, chosen: &mut Vec<usize>) -> bool {
        if left == 0 {
            return connected(mask, &self.adj);
        }
        for i in from..=self.pool.len() - left {
            chosen.push(i);
            if self.combine(i + 1, left - 1, mask | 1 << self.pool[i], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn connected(mask: u128, adj: &[u128]) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reach = 1u128 << start;
    let mut frontier = reach;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !reach;
        reach |= fresh;
        frontier |= fresh;
    }
    reach == mask
}
