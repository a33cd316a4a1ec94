//! Second exact oracle: binary counting over all non-terminal subsets with a
//! union-find connectivity test. Shares no code with the library search.

#![allow(dead_code)]

use splitlike::{Graph, VertexSet};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn spans(g: &Graph, member: u32) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    let mut pieces = member.count_ones();
    for (u, v) in g.edges() {
        if member >> u & 1 == 1 && member >> v & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                pieces -= 1;
            }
        }
    }
    pieces == 1
}

/// Minimum number of Steiner vertices, by counting through every subset of
/// the non-terminals in increasing binary order. Graphs up to 20 vertices.
pub fn min_steiner_by_counting(g: &Graph, terminals: &VertexSet) -> usize {
    assert!(g.n() <= 20);
    let others: Vec<usize> = g.vertices().filter(|&v| !terminals.contains(v)).collect();
    let base = terminals.iter().fold(0u32, |m, v| m | 1 << v);
    let mut best = others.len();
    for bits in 0u32..1 << others.len() {
        let size = bits.count_ones() as usize;
        if size >= best {
            continue;
        }
        let member = others
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .fold(base, |m, (_, &v)| m | 1 << v);
        if spans(g, member) {
            best = size;
        }
    }
    best
}

/// Every subset of `0..n` with 1 to `max` elements.
pub fn small_subsets(n: usize, max: usize) -> Vec<VertexSet> {
    (1u32..1 << n)
        .filter(|m| (m.count_ones() as usize) <= max)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}
