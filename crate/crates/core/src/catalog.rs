//! Catalog of all connected graphs on a few vertices, one per isomorphism
//! class, built by vertex augmentation and canonical-form deduplication.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order the catalog supports (the canonical code is a `u64`).
pub const MAX_CATALOG_ORDER: usize = 11;

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// labeling, sorted by canonical code.
///
/// Every connected graph on `n` vertices has a vertex whose removal leaves
/// it connected, so extending each connected graph on `n - 1` vertices by a
/// vertex with a nonempty neighborhood reaches every class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_CATALOG_ORDER,
        "catalog limited to {MAX_CATALOG_ORDER} vertices"
    );
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for order in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nbrs in 1u16..1 << (order - 1) {
                let mut ext = adj.clone();
                ext.push(nbrs);
                for (v, row) in ext.iter_mut().enumerate().take(order - 1) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (order - 1);
                    }
                }
                let code = canonical_code(&ext);
                if seen.insert(code) {
                    next.push(code);
                }
            }
        }
        next.sort_unstable();
        level = next.into_iter().map(|c| decode(c, order)).collect();
    }
    level.iter().map(|adj| to_graph(adj)).collect()
}

pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

fn to_graph(adj: &[u16]) -> Graph {
    let mut edges = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(adj.len(), &edges).expect("catalog graphs are simple")
}

fn decode(code: u64, n: usize) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

fn encode(adj: &[u16], order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Smallest adjacency code over all labelings reachable by color refinement
/// plus individualization of every vertex in the first non-singleton cell.
pub(crate) fn canonical_code(adj: &[u16]) -> u64 {
    let degrees: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let colors = refine(adj, rank(&degrees));
    let mut best = u64::MAX;
    search(adj, colors, &mut best);
    best
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("present") as u32)
        .collect()
}

fn refine(adj: &[u16], mut colors: Vec<u32>) -> Vec<u32> {
    let n = adj.len();
    loop {
        let cells = colors.iter().max().map_or(0, |&c| c + 1);
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nc.sort_unstable();
                (colors[v], nc)
            })
            .collect();
        let next = rank(&sigs);
        let next_cells = next.iter().max().map_or(0, |&c| c + 1);
        colors = next;
        if next_cells == cells {
            return colors;
        }
    }
}

fn search(adj: &[u16], colors: Vec<u32>, best: &mut u64) {
    let n = adj.len();
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&c| c > 1) else {
        let mut order = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        *best = (*best).min(encode(adj, &order));
        return;
    };
    for v in (0..n).filter(|&v| colors[v] as usize == target) {
        // Individualize v ahead of its cell mates.
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(c as usize == target && w != v))
            .collect();
        search(adj, refine(adj, rank(&split)), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // Connected graphs up to isomorphism (OEIS A001349).
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &count) in expected.iter().enumerate() {
            let graphs = connected_graphs(i + 1);
            assert_eq!(graphs.len(), count, "n = {}", i + 1);
            assert!(graphs.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn canonical_code_is_labeling_invariant() {
        // C5 plus a chord, relabeled by a rotation and a reflection.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)];
        let build = |perm: [usize; 5]| {
            let mut adj = vec![0u16; 5];
            for &(u, v) in &edges {
                let (a, b) = (perm[u], perm[v]);
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            canonical_code(&adj)
        };
        let base = build([0, 1, 2, 3, 4]);
        assert_eq!(base, build([2, 3, 4, 0, 1]));
        assert_eq!(base, build([4, 3, 2, 1, 0]));
    }
}
