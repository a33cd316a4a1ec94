//! Recognizers and characterization checks for split-like graph classes.
//!
//! Every check here is exact. Where a polynomial recognizer is not needed
//! (unknown bisplit/trisplit partitions) the search is exhaustive under a
//! size cap and says so with an error instead of guessing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{diameter, Distance, Graph, VertexSet};

pub const DEFAULT_PARTITION_SEARCH_CAP: usize = 20;
pub const DEFAULT_NEIGHBORHOOD_CAP: usize = 24;
const MASK_BITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionKind {
    /// The K side is a single clique (split graph).
    Clique,
    /// The K side is complete multipartite over `parts`; one part gives a
    /// bipartite graph, two a bisplit graph, three a trisplit graph.
    Multipartite,
}

/// Certificate that a graph is split-like: `parts` form the K side,
/// `independent` the I side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitLikePartition {
    pub kind: PartitionKind,
    pub parts: Vec<VertexSet>,
    pub independent: VertexSet,
}

impl SplitLikePartition {
    pub fn multipartite(parts: Vec<VertexSet>, independent: VertexSet) -> Self {
        Self {
            kind: PartitionKind::Multipartite,
            parts,
            independent,
        }
    }

    pub fn clique(clique: VertexSet, independent: VertexSet) -> Self {
        Self {
            kind: PartitionKind::Clique,
            parts: vec![clique],
            independent,
        }
    }

    /// Number of parts on the K side.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn k_side(&self) -> VertexSet {
        self.parts.iter().flat_map(VertexSet::iter).collect()
    }

    fn check_range(&self, n: usize) -> Result<()> {
        for p in &self.parts {
            p.check_range(n)?;
        }
        self.independent.check_range(n)
    }

    /// Part index per vertex, `INDEPENDENT` for independent vertices; `None`
    /// unless every vertex is covered exactly once.
    fn labels(&self, n: usize) -> Option<Vec<u32>> {
        let mut label = vec![UNLABELED; n];
        let tagged = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.iter().map(move |v| (v, i as u32)))
            .chain(self.independent.iter().map(|v| (v, INDEPENDENT)));
        for (v, l) in tagged {
            if std::mem::replace(&mut label[v], l) != UNLABELED {
                return None;
            }
        }
        label.iter().all(|&l| l != UNLABELED).then_some(label)
    }
}

const INDEPENDENT: u32 = u32::MAX;
const UNLABELED: u32 = u32::MAX - 1;

/// Checks every partition invariant in `O(n + m)`.
pub fn verify_partition(g: &Graph, p: &SplitLikePartition) -> Result<bool> {
    p.check_range(g.n())?;
    let Some(label) = p.labels(g.n()) else {
        return Ok(false);
    };
    let k_size: usize = p.parts.iter().map(VertexSet::len).sum();
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        let part = label[v];
        if part == INDEPENDENT {
            if nbrs.iter().any(|&w| label[w] == INDEPENDENT) {
                return Ok(false);
            }
            continue;
        }
        let mut cross = 0;
        for &w in nbrs {
            match label[w] {
                INDEPENDENT => {}
                l if l == part && p.kind == PartitionKind::Multipartite => return Ok(false),
                _ => cross += 1,
            }
        }
        let expected = match p.kind {
            PartitionKind::Clique => k_size - 1,
            PartitionKind::Multipartite => k_size - p.parts[part as usize].len(),
        };
        if cross != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive search for a multipartite split-like partition with exactly
/// `k` nonempty parts. Vertices are assigned in id order, each trying part
/// 0, 1, ... before the independent side; parts are opened in order, so the
/// first hit is lexicographically smallest among canonical labelings.
pub fn find_partition_bruteforce(g: &Graph, k: usize) -> Result<Option<SplitLikePartition>> {
    find_partition_with(g, k, &VertexSet::new(), DEFAULT_PARTITION_SEARCH_CAP)
}

/// As [`find_partition_bruteforce`], additionally forcing `independent`
/// vertices onto the I side.
pub fn find_partition_with(
    g: &Graph,
    k: usize,
    forced_independent: &VertexSet,
    cap: usize,
) -> Result<Option<SplitLikePartition>> {
    forced_independent.check_range(g.n())?;
    let cap = cap.min(MASK_BITS);
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "partition search graph",
            size: g.n(),
            cap,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameters(
            "part count must be positive".into(),
        ));
    }
    let adj = adjacency_masks(g);
    let mut search = PartitionSearch {
        adj: &adj,
        k,
        forced: forced_independent,
        masks: vec![0; k + 1],
        assignment: vec![0; g.n()],
    };
    if !search.assign(0, 0) {
        return Ok(None);
    }
    let mut parts = vec![Vec::new(); k];
    let mut independent = Vec::new();
    for (v, &l) in search.assignment.iter().enumerate() {
        if l == k {
            independent.push(v);
        } else {
            parts[l].push(v);
        }
    }
    Ok(Some(SplitLikePartition::multipartite(
        parts.into_iter().map(VertexSet::from).collect(),
        independent.into(),
    )))
}

struct PartitionSearch<'a> {
    adj: &'a [u64],
    k: usize,
    forced: &'a VertexSet,
    /// One mask per part, then the independent side at index `k`.
    masks: Vec<u64>,
    assignment: Vec<usize>,
}

impl PartitionSearch<'_> {
    fn assign(&mut self, v: usize, opened: usize) -> bool {
        let n = self.assignment.len();
        if v == n {
            return opened == self.k;
        }
        if self.k - opened > n - v {
            return false;
        }
        let adj = self.adj[v];
        let bit = 1u64 << v;
        let part_limit = if self.forced.contains(v) {
            0
        } else {
            (opened + 1).min(self.k)
        };
        for part in 0..part_limit {
            let fits = adj & self.masks[part] == 0
                && (0..opened).all(|q| q == part || self.masks[q] & !adj == 0);
            if fits {
                self.masks[part] |= bit;
                self.assignment[v] = part;
                if self.assign(v + 1, opened.max(part + 1)) {
                    return true;
                }
                self.masks[part] &= !bit;
            }
        }
        if adj & self.masks[self.k] == 0 {
            self.masks[self.k] |= bit;
            self.assignment[v] = self.k;
            if self.assign(v + 1, opened) {
                return true;
            }
            self.masks[self.k] &= !bit;
        }
        false
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Split recognition by the degree-sequence criterion: with degrees sorted
/// non-increasingly and `m` the largest index with `d_m >= m - 1`, the graph
/// is split iff the top `m` degrees sum to `m(m-1)` plus the rest.
pub fn recognize_split(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d >= i)
        .count();
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique: VertexSet = order[..m].iter().copied().collect();
    let independent: VertexSet = order[m..].iter().copied().collect();
    debug_assert!(verify_partition(
        g,
        &SplitLikePartition::clique(clique.clone(), independent.clone())
    )
    .unwrap_or(false));
    Some((clique, independent))
}

/// BFS 2-coloring; each component's smallest vertex goes to the first side.
pub fn recognize_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for s in g.vertices() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            let cu = color[u]?;
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let first = g.vertices().filter(|&v| color[v] == Some(false)).collect();
    let second = g.vertices().filter(|&v| color[v] == Some(true)).collect();
    Some((first, second))
}

/// Largest `r` such that `g` has an induced `K_{1,r}`: the maximum over `v`
/// of the independence number of `G[N(v)]`.
pub fn max_induced_star(g: &Graph) -> Result<usize> {
    max_induced_star_with_cap(g, DEFAULT_NEIGHBORHOOD_CAP)
}

pub fn max_induced_star_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let cap = cap.min(MASK_BITS);
    let mut best = 0;
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        if nbrs.len() > cap {
            return Err(Error::CapExceeded {
                what: "vertex neighborhood",
                size: nbrs.len(),
                cap,
            });
        }
        if nbrs.len() <= best {
            continue;
        }
        let local: Vec<u64> = nbrs
            .iter()
            .map(|&a| {
                nbrs.iter()
                    .enumerate()
                    .filter(|&(_, &b)| g.has_edge(a, b))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let all = if nbrs.len() == 64 {
            u64::MAX
        } else {
            (1u64 << nbrs.len()) - 1
        };
        best = best.max(independence_number(all, &local));
    }
    Ok(best)
}

/// Exact independence number of the graph on the bits of `cand`.
pub(crate) fn independence_number(cand: u64, adj: &[u64]) -> usize {
    let mut best = 0;
    mis_branch(cand, adj, 0, &mut best);
    best
}

fn mis_branch(mut cand: u64, adj: &[u64], mut size: usize, best: &mut usize) {
    loop {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        // A vertex of degree <= 1 inside `cand` is always safe to take.
        let mut low = None;
        let mut high = (0, 0u32);
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (adj[v] & cand).count_ones();
            if d <= 1 {
                low = Some(v);
                break;
            }
            if d > high.1 {
                high = (v, d);
            }
        }
        match low {
            Some(v) => {
                cand &= !(adj[v] | 1 << v);
                size += 1;
            }
            None => {
                let v = high.0;
                mis_branch(cand & !(adj[v] | 1 << v), adj, size + 1, best);
                cand &= !(1 << v);
            }
        }
    }
}

pub fn is_k1r_free(g: &Graph, r: usize) -> Result<bool> {
    Ok(max_induced_star(g)? < r)
}

pub fn is_k1r_free_with_cap(g: &Graph, r: usize, cap: usize) -> Result<bool> {
    Ok(max_induced_star_with_cap(g, cap)? < r)
}

/// Lexicographic BFS visit order by partition refinement.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    struct Class {
        members: Vec<usize>,
        prev: usize,
        next: usize,
    }
    let n = g.n();
    let mut classes = vec![Class {
        members: (0..n).rev().collect(),
        prev: NONE,
        next: NONE,
    }];
    let mut head = if n == 0 { NONE } else { 0 };
    let mut class_of = vec![0usize; n];
    let mut pos: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
    let mut visited = vec![false; n];
    let mut split_into = Vec::<usize>::new();
    let mut touched = Vec::new();
    let mut order = Vec::with_capacity(n);

    let unlink = |classes: &mut Vec<Class>, head: &mut usize, c: usize| {
        let (p, q) = (classes[c].prev, classes[c].next);
        if p == NONE {
            *head = q;
        } else {
            classes[p].next = q;
        }
        if q != NONE {
            classes[q].prev = p;
        }
    };
    let remove = |classes: &mut Vec<Class>, pos: &mut Vec<usize>, c: usize, v: usize| {
        let i = pos[v];
        classes[c].members.swap_remove(i);
        if let Some(&moved) = classes[c].members.get(i) {
            pos[moved] = i;
        }
    };

    while head != NONE {
        let c = head;
        let v = classes[c].members.pop().expect("live classes are nonempty");
        if classes[c].members.is_empty() {
            unlink(&mut classes, &mut head, c);
        }
        visited[v] = true;
        order.push(v);

        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let old = class_of[w];
            if split_into.len() < classes.len() {
                split_into.resize(classes.len(), NONE);
            }
            let fresh = if split_into[old] == NONE {
                let fresh = classes.len();
                let prev = classes[old].prev;
                classes.push(Class {
                    members: Vec::new(),
                    prev,
                    next: old,
                });
                if prev == NONE {
                    head = fresh;
                } else {
                    classes[prev].next = fresh;
                }
                classes[old].prev = fresh;
                split_into.resize(classes.len(), NONE);
                split_into[old] = fresh;
                touched.push(old);
                fresh
            } else {
                split_into[old]
            };
            remove(&mut classes, &mut pos, old, w);
            pos[w] = classes[fresh].members.len();
            classes[fresh].members.push(w);
            class_of[w] = fresh;
        }
        for old in touched.drain(..) {
            split_into[old] = NONE;
            if classes[old].members.is_empty() {
                unlink(&mut classes, &mut head, old);
            }
        }
    }
    order
}

/// A perfect elimination ordering if `g` is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let mut position = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        position[v] = i;
    }
    for &v in &peo {
        let later = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v]);
        let Some(parent) = later.clone().min_by_key(|&w| position[w]) else {
            continue;
        };
        if later
            .filter(|&w| w != parent)
            .any(|w| !g.has_edge(parent, w))
        {
            return None;
        }
    }
    Some(peo)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Shape of a connected claw-free bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClawFreeShape {
    Path,
    EvenCycle,
    NotInClass,
}

pub fn classify_claw_free_bipartite(g: &Graph) -> Result<ClawFreeShape> {
    if g.n() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // Neighborhoods in a bipartite graph are independent, so an induced
    // claw is exactly a vertex of degree three or more.
    if g.max_degree() >= 3 || recognize_bipartite(g).is_none() {
        return Ok(ClawFreeShape::NotInClass);
    }
    Ok(if g.edge_count() + 1 == g.n() {
        ClawFreeShape::Path
    } else {
        ClawFreeShape::EvenCycle
    })
}

/// Requires a valid multipartite partition with three nonempty parts.
pub(crate) fn require_trisplit(g: &Graph, p: &SplitLikePartition) -> Result<()> {
    if p.kind != PartitionKind::Multipartite || p.k() != 3 {
        return Err(Error::InvalidPartition(
            "expected a three-part multipartite partition".into(),
        ));
    }
    if p.parts.iter().any(VertexSet::is_empty) {
        return Err(Error::InvalidPartition(
            "trisplit parts must be nonempty".into(),
        ));
    }
    if !verify_partition(g, p)? {
        return Err(Error::InvalidPartition(
            "partition does not certify the graph".into(),
        ));
    }
    Ok(())
}

/// The chordal trisplit characterization: the triclique is `K_{1,1,m}` and
/// every independent vertex has degree at most three with no two neighbors
/// in one part.
pub fn chordal_trisplit_check(g: &Graph, p: &SplitLikePartition) -> Result<bool> {
    require_trisplit(g, p)?;
    let singletons = p.parts.iter().filter(|part| part.len() == 1).count();
    if singletons < 2 {
        return Ok(false);
    }
    let mut part_of = vec![usize::MAX; g.n()];
    for (i, part) in p.parts.iter().enumerate() {
        for v in part {
            part_of[v] = i;
        }
    }
    for u in &p.independent {
        let nbrs = g.neighbors(u);
        if nbrs.len() > 3 {
            return Ok(false);
        }
        let mut hit = [false; 3];
        for &w in nbrs {
            if std::mem::replace(&mut hit[part_of[w]], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn center_among(
    g: &Graph,
    candidates: impl Iterator<Item = usize>,
    others: &VertexSet,
) -> Option<usize> {
    let must_hit: Vec<usize> = others.iter().filter(|&y| g.degree(y) != 1).collect();
    candidates
        .into_iter()
        .find(|&x| must_hit.iter().all(|&y| y == x || g.has_edge(x, y)))
}

/// Smallest `x` in `x_side` such that every vertex of `y_side` is pendant
/// or adjacent to `x`.
pub fn star_center_bipartite(
    g: &Graph,
    x_side: &VertexSet,
    y_side: &VertexSet,
) -> Result<Option<usize>> {
    x_side.check_range(g.n())?;
    y_side.check_range(g.n())?;
    Ok(center_among(g, x_side.iter(), y_side))
}

fn require_bisplit(g: &Graph, p: &SplitLikePartition) -> Result<()> {
    if p.kind != PartitionKind::Multipartite || p.k() != 2 {
        return Err(Error::InvalidPartition(
            "expected a two-part multipartite partition".into(),
        ));
    }
    if !verify_partition(g, p)? {
        return Err(Error::InvalidPartition(
            "partition does not certify the graph".into(),
        ));
    }
    Ok(())
}

/// Star convexity on the biclique: a biclique vertex adjacent to every
/// non-pendant independent vertex.
pub fn star_center_bisplit(g: &Graph, p: &SplitLikePartition) -> Result<Option<usize>> {
    require_bisplit(g, p)?;
    Ok(center_among(g, p.k_side().iter(), &p.independent))
}

/// Star convexity on the independent side: an independent vertex adjacent
/// to every non-pendant biclique vertex.
pub fn star_center_independent(g: &Graph, p: &SplitLikePartition) -> Result<Option<usize>> {
    require_bisplit(g, p)?;
    Ok(center_among(g, p.independent.iter(), &p.k_side()))
}

/// For every pair of independent vertices: common neighbor, or a joint
/// neighborhood contained in neither biclique side.
pub fn bisplit_diam3_condition(g: &Graph, p: &SplitLikePartition) -> Result<bool> {
    require_bisplit(g, p)?;
    let (a, b) = (&p.parts[0], &p.parts[1]);
    let indep = p.independent.as_slice();
    for (i, &x) in indep.iter().enumerate() {
        for &y in &indep[i + 1..] {
            let (nx, ny) = (g.neighbors(x), g.neighbors(y));
            if nx.iter().any(|w| ny.binary_search(w).is_ok()) {
                continue;
            }
            let joint = || nx.iter().chain(ny);
            let inside_a = joint().all(|&w| a.contains(w));
            let inside_b = joint().all(|&w| b.contains(w));
            if inside_a || inside_b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCenters {
    /// Center on the first bipartite side (every second-side vertex pendant or adjacent).
    pub bipartite_first: Option<usize>,
    pub bipartite_second: Option<usize>,
    /// Center in the biclique of the bisplit certificate.
    pub bisplit_biclique: Option<usize>,
    /// Center in the independent set of the bisplit certificate.
    pub bisplit_independent: Option<usize>,
}

/// Everything the recognizers can say about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub bipartite: Option<(VertexSet, VertexSet)>,
    pub split: Option<(VertexSet, VertexSet)>,
    pub chordal: bool,
    /// Part count of the supplied certificate, when it verified.
    pub k_split: Option<usize>,
    pub partition: Option<SplitLikePartition>,
    pub bisplit: Option<SplitLikePartition>,
    pub trisplit: Option<SplitLikePartition>,
    pub claw_free_bipartite: Option<ClawFreeShape>,
    pub star_centers: StarCenters,
    pub diameter: Distance,
    /// `None` when some neighborhood exceeds the exact-mode cap.
    pub max_induced_star: Option<usize>,
    pub has_universal_vertex: bool,
}

/// Runs every recognizer. A supplied certificate is verified and preferred;
/// otherwise bisplit/trisplit partitions are searched exhaustively (graphs up
/// to the search cap only), keeping `forced_independent` on the I side.
pub fn classify(
    g: &Graph,
    supplied: Option<&SplitLikePartition>,
    forced_independent: &VertexSet,
) -> Result<ClassReport> {
    let partition = match supplied {
        Some(p) if verify_partition(g, p)? => Some(p.clone()),
        _ => None,
    };
    let searched = |k: usize| -> Result<Option<SplitLikePartition>> {
        if let Some(p) = partition.as_ref().filter(|p| {
            p.kind == PartitionKind::Multipartite
                && p.k() == k
                && p.parts.iter().all(|q| !q.is_empty())
        }) {
            return Ok(Some(p.clone()));
        }
        if g.n() > DEFAULT_PARTITION_SEARCH_CAP {
            return Ok(None);
        }
        find_partition_with(g, k, forced_independent, DEFAULT_PARTITION_SEARCH_CAP)
    };
    let bisplit = searched(2)?;
    let trisplit = searched(3)?;
    let bipartite = recognize_bipartite(g);
    let connected = g.is_connected();

    let mut star_centers = StarCenters::default();
    if let Some((x, y)) = &bipartite {
        star_centers.bipartite_first = star_center_bipartite(g, x, y)?;
        star_centers.bipartite_second = star_center_bipartite(g, y, x)?;
    }
    if let Some(p) = &bisplit {
        star_centers.bisplit_biclique = star_center_bisplit(g, p)?;
        star_centers.bisplit_independent = star_center_independent(g, p)?;
    }
    let claw_free_bipartite = if connected && g.n() > 0 {
        Some(classify_claw_free_bipartite(g)?)
    } else {
        None
    };
    let max_induced_star = match max_induced_star(g) {
        Ok(r) => Some(r),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassReport {
        n: g.n(),
        edges: g.edge_count(),
        connected,
        split: recognize_split(g),
        chordal: is_chordal(g),
        k_split: partition.as_ref().map(SplitLikePartition::k),
        partition,
        bipartite,
        bisplit,
        trisplit,
        claw_free_bipartite,
        star_centers,
        diameter: diameter(g),
        max_induced_star,
        has_universal_vertex: g.vertices().any(|v| g.degree(v) + 1 == g.n()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete, complete_bipartite, cycle, path, star};

    fn vs<const N: usize>(ids: [usize; N]) -> VertexSet {
        VertexSet::from(ids)
    }

    fn paw() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn verify_partition_examples() {
        let c4 = cycle(4);
        let p = SplitLikePartition::multipartite(vec![vs([0, 2]), vs([1, 3])], vs([]));
        assert!(verify_partition(&c4, &p).unwrap());

        let k3 = complete(3);
        assert!(verify_partition(&k3, &SplitLikePartition::clique(vs([0, 1, 2]), vs([]))).unwrap());

        let p3 = path(3);
        let bad = SplitLikePartition::multipartite(vec![vs([0]), vs([2])], vs([1]));
        assert!(!verify_partition(&p3, &bad).unwrap());
    }

    #[test]
    fn verify_partition_rejects_overlap_and_gaps() {
        let c4 = cycle(4);
        let overlap = SplitLikePartition::multipartite(vec![vs([0, 2]), vs([1, 3])], vs([0]));
        assert!(!verify_partition(&c4, &overlap).unwrap());
        let gap = SplitLikePartition::multipartite(vec![vs([0, 2]), vs([1])], vs([]));
        assert!(!verify_partition(&c4, &gap).unwrap());
        let out = SplitLikePartition::multipartite(vec![vs([0, 2]), vs([1, 7])], vs([3]));
        assert!(verify_partition(&c4, &out).is_err());
    }

    #[test]
    fn find_partition_examples() {
        let p = find_partition_bruteforce(&cycle(4), 2).unwrap().unwrap();
        assert_eq!(p.parts, vec![vs([0, 2]), vs([1, 3])]);
        assert!(p.independent.is_empty());

        let claw = star(3);
        let p = find_partition_bruteforce(&claw, 2).unwrap().unwrap();
        assert!(verify_partition(&claw, &p).unwrap());

        assert!(find_partition_bruteforce(&cycle(5), 2).unwrap().is_none());
    }

    #[test]
    fn find_partition_matches_naive_assignment_enumeration() {
        // Oracle: enumerate all (k+1)^n labelings.
        fn naive(g: &Graph, k: usize) -> bool {
            let n = g.n();
            let total = (k + 1).pow(n as u32);
            (0..total).any(|mut code| {
                let mut parts = vec![Vec::new(); k];
                let mut indep = Vec::new();
                for v in 0..n {
                    let l = code % (k + 1);
                    code /= k + 1;
                    if l == k {
                        indep.push(v)
                    } else {
                        parts[l].push(v)
                    }
                }
                parts.iter().all(|p| !p.is_empty())
                    && verify_partition(
                        g,
                        &SplitLikePartition::multipartite(
                            parts.into_iter().map(VertexSet::from).collect(),
                            indep.into(),
                        ),
                    )
                    .unwrap()
            })
        }
        for g in crate::catalog::connected_graphs(5) {
            for k in 1..=3 {
                assert_eq!(
                    find_partition_bruteforce(&g, k).unwrap().is_some(),
                    naive(&g, k),
                    "{g:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn find_partition_cap() {
        let g = path(21);
        assert!(matches!(
            find_partition_bruteforce(&g, 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn recognize_split_examples() {
        assert_eq!(recognize_split(&complete(3)), Some((vs([0, 1, 2]), vs([]))));
        assert_eq!(recognize_split(&cycle(4)), None);
        let (clique, indep) = recognize_split(&paw()).unwrap();
        assert_eq!(clique, vs([0, 1, 2]));
        assert_eq!(indep, vs([3]));
    }

    #[test]
    fn recognize_split_agrees_with_bruteforce_on_catalog() {
        fn naive(g: &Graph) -> bool {
            (0u32..1 << g.n()).any(|mask| {
                let k: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
                let i = g.all_vertices().difference(&k);
                verify_partition(g, &SplitLikePartition::clique(k, i)).unwrap()
            })
        }
        for n in 1..=6 {
            for g in crate::catalog::connected_graphs(n) {
                assert_eq!(recognize_split(&g).is_some(), naive(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn recognize_bipartite_examples() {
        let (a, b) = recognize_bipartite(&cycle(6)).unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        assert!(recognize_bipartite(&cycle(5)).is_none());
        assert_eq!(recognize_bipartite(&path(3)), Some((vs([0, 2]), vs([1]))));
    }

    #[test]
    fn max_induced_star_examples() {
        assert_eq!(max_induced_star(&star(4)).unwrap(), 4);
        assert_eq!(max_induced_star(&complete(4)).unwrap(), 1);
        assert_eq!(max_induced_star(&cycle(6)).unwrap(), 2);
        assert_eq!(max_induced_star(&Graph::empty(1)).unwrap(), 0);
        assert!(matches!(
            max_induced_star_with_cap(&star(5), 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn k1r_free_examples() {
        assert!(!is_k1r_free(&star(3), 3).unwrap());
        assert!(is_k1r_free(&complete(4), 2).unwrap());
    }

    #[test]
    fn chordal_examples() {
        assert!(!is_chordal(&cycle(4)));
        assert!(is_chordal(&path(7)));
        assert!(is_chordal(&star(5)));
        let chorded = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&chorded));
        assert!(!is_chordal(&cycle(7)));
        assert!(is_chordal(&complete(6)));
        assert!(is_chordal(&Graph::empty(0)));
    }

    #[test]
    fn chordal_agrees_with_induced_cycle_search() {
        // Oracle: a graph is chordal iff no vertex subset of size >= 4
        // induces a cycle (connected, all degrees two).
        fn has_hole(g: &Graph) -> bool {
            (0u32..1 << g.n()).any(|mask| {
                let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
                if s.len() < 4 {
                    return false;
                }
                let (h, _) = g.induced_subgraph(&s).unwrap();
                h.is_connected() && h.vertices().all(|v| h.degree(v) == 2)
            })
        }
        for n in 1..=7 {
            for g in crate::catalog::connected_graphs(n) {
                assert_eq!(is_chordal(&g), !has_hole(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn claw_free_bipartite_examples() {
        assert_eq!(
            classify_claw_free_bipartite(&path(5)).unwrap(),
            ClawFreeShape::Path
        );
        assert_eq!(
            classify_claw_free_bipartite(&cycle(6)).unwrap(),
            ClawFreeShape::EvenCycle
        );
        assert_eq!(
            classify_claw_free_bipartite(&star(3)).unwrap(),
            ClawFreeShape::NotInClass
        );
        assert_eq!(
            classify_claw_free_bipartite(&cycle(5)).unwrap(),
            ClawFreeShape::NotInClass
        );
        assert_eq!(
            classify_claw_free_bipartite(&Graph::new(3, &[(0, 1)]).unwrap()),
            Err(Error::Disconnected)
        );
    }

    // a=0, b=1, c1=2, c2=3, then independent vertices.
    fn k112_with(indep: &[&[usize]]) -> (Graph, SplitLikePartition) {
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
        for (i, nbrs) in indep.iter().enumerate() {
            edges.extend(nbrs.iter().map(|&w| (w, 4 + i)));
        }
        let g = Graph::new(4 + indep.len(), &edges).unwrap();
        let p = SplitLikePartition::multipartite(
            vec![vs([0]), vs([1]), vs([2, 3])],
            (4..4 + indep.len()).collect(),
        );
        (g, p)
    }

    #[test]
    fn chordal_trisplit_examples() {
        let (g, p) = k112_with(&[&[0, 2]]);
        assert!(chordal_trisplit_check(&g, &p).unwrap());
        assert!(is_chordal(&g));

        let (g, p) = k112_with(&[&[2, 3]]);
        assert!(!chordal_trisplit_check(&g, &p).unwrap());
        assert!(!is_chordal(&g));

        // K_{2,2,1}: two parts of size two contain a C4.
        let g = Graph::new(
            5,
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
            ],
        )
        .unwrap();
        let p = SplitLikePartition::multipartite(vec![vs([0, 1]), vs([2, 3]), vs([4])], vs([]));
        assert!(!chordal_trisplit_check(&g, &p).unwrap());
        assert!(!is_chordal(&g));

        let bisplit = SplitLikePartition::multipartite(vec![vs([0]), vs([1, 2, 3])], vs([]));
        assert!(chordal_trisplit_check(&star(3), &bisplit).is_err());
    }

    #[test]
    fn star_center_examples() {
        let claw = star(3);
        assert_eq!(
            star_center_bipartite(&claw, &vs([0]), &vs([1, 2, 3])).unwrap(),
            Some(0)
        );
        let c6 = cycle(6);
        let (x, y) = recognize_bipartite(&c6).unwrap();
        assert_eq!(star_center_bipartite(&c6, &x, &y).unwrap(), None);
        assert_eq!(star_center_bipartite(&c6, &y, &x).unwrap(), None);

        let k22 = complete_bipartite(2, 2);
        let p = SplitLikePartition::multipartite(vec![vs([0, 1]), vs([2, 3])], vs([]));
        assert_eq!(star_center_bisplit(&k22, &p).unwrap(), Some(0));

        // K_{1,1} plus two independent vertices pendant to different parts.
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let p = SplitLikePartition::multipartite(vec![vs([0]), vs([1])], vs([2, 3]));
        assert_eq!(star_center_bisplit(&g, &p).unwrap(), Some(0));
    }

    #[test]
    fn diam3_condition_examples() {
        // Biclique {0,1}x{2}, independent 3~0 and 4~1 only: distance 4.
        let g = Graph::new(5, &[(0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        let p = SplitLikePartition::multipartite(vec![vs([0, 1]), vs([2])], vs([3, 4]));
        assert!(!bisplit_diam3_condition(&g, &p).unwrap());
        assert_eq!(diameter(&g), Distance::Finite(4));

        // The six-vertex witness: K_{2,2} with pendant independents on 0 and 1.
        let g = Graph::new(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (1, 5)]).unwrap();
        let p = SplitLikePartition::multipartite(vec![vs([0, 1]), vs([2, 3])], vs([4, 5]));
        assert!(!bisplit_diam3_condition(&g, &p).unwrap());
        assert_eq!(diameter(&g), Distance::Finite(4));

        let g = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let p = SplitLikePartition::multipartite(vec![vs([0]), vs([1])], vs([2]));
        assert!(bisplit_diam3_condition(&g, &p).unwrap());
    }

    #[test]
    fn classify_reports_paw() {
        let report = classify(&paw(), None, &VertexSet::new()).unwrap();
        assert!(report.split.is_some());
        assert!(report.chordal);
        assert!(report.bipartite.is_none());
        assert_eq!(report.diameter, Distance::Finite(2));
        assert_eq!(report.max_induced_star, Some(2));
        assert!(report.has_universal_vertex);
        assert_eq!(report.claw_free_bipartite, Some(ClawFreeShape::NotInClass));
    }
}
