//! Brute-force oracles shared by the integration suites. None of these call
//! into the code paths they check.

#![allow(dead_code)]

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topolab::{Graph, NodeId};

/// G(n, p) edge list.
pub fn gnp_edges(n: usize, p: f64, seed: u64) -> Vec<(NodeId, NodeId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as NodeId {
        for v in u + 1..n as NodeId {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    Graph::from_edges(n, gnp_edges(n, p, seed)).unwrap().0
}

/// Dense adjacency matrix from the raw edge list.
pub fn matrix(n: usize, edges: &[(NodeId, NodeId)]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        if u != v {
            m[u as usize][v as usize] = true;
            m[v as usize][u as usize] = true;
        }
    }
    m
}

/// Triangles through each node by enumerating every node triple.
pub fn triangles_by_triples(adj: &[Vec<bool>]) -> Vec<u64> {
    let n = adj.len();
    let mut kt = vec![0u64; n];
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a][c] && adj[b][c] {
                    kt[a] += 1;
                    kt[b] += 1;
                    kt[c] += 1;
                }
            }
        }
    }
    kt
}

/// Distinct triangles via edge iteration with a hash-set lookup.
pub fn triangle_total_by_edges(g: &Graph) -> u64 {
    let edges: std::collections::HashSet<(NodeId, NodeId)> = g.edges().collect();
    let mut total = 0;
    for &(u, v) in &edges {
        for &w in g.neighbors(v) {
            if w > v && edges.contains(&(u, w)) {
                total += 1;
            }
        }
    }
    total
}

/// Largest component over non-excluded nodes, by breadth-first search on a
/// dense matrix.
pub fn largest_component_bfs(adj: &[Vec<bool>], excluded: &[bool]) -> usize {
    let n = adj.len();
    let mut seen = excluded.to_vec();
    let mut best = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for v in 0..n {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Rank by sorting (degree desc, id asc) and counting club links pairwise.
pub fn rich_club_direct(g: &Graph, r: f64) -> f64 {
    let n = g.node_count();
    let mut ids: Vec<usize> = (0..n).collect();
    ids.sort_by_key(|&u| (std::cmp::Reverse(g.neighbors(u as NodeId).len()), u));
    let size = ((r * n as f64).floor() as usize).clamp(2, n);
    let club = &ids[..size];
    let mut links = 0usize;
    for i in 0..size {
        for j in i + 1..size {
            if g.neighbors(club[i] as NodeId)
                .contains(&(club[j] as NodeId))
            {
                links += 1;
            }
        }
    }
    links as f64 / (size * (size - 1) / 2) as f64
}

/// Residual graph after deleting `removed`, rebuilt from scratch; returns its
/// largest component size via BFS.
pub fn residual_giant(g: &Graph, removed: &[NodeId]) -> usize {
    let n = g.node_count();
    let mut gone = vec![false; n];
    for &u in removed {
        gone[u as usize] = true;
    }
    let kept: Vec<(NodeId, NodeId)> = g
        .edges()
        .filter(|&(u, v)| !gone[u as usize] && !gone[v as usize])
        .collect();
    largest_component_bfs(&matrix(n, &kept), &gone)
}

/// P(K >= k) from a plain degree histogram.
pub fn ccdf_by_histogram(g: &Graph) -> Vec<(usize, f64)> {
    let n = g.node_count();
    let mut hist = std::collections::BTreeMap::new();
    for u in 0..n as NodeId {
        *hist.entry(g.neighbors(u).len()).or_insert(0usize) += 1;
    }
    let mut out = Vec::new();
    for &k in hist.keys() {
        let at_least: usize = hist.range(k..).map(|(_, c)| c).sum();
        out.push((k, at_least as f64 / n as f64));
    }
    out
}

pub fn degree_sum_is_twice_links(g: &Graph) -> bool {
    (0..g.node_count() as NodeId)
        .map(|u| g.neighbors(u).len())
        .sum::<usize>()
        == 2 * g.edge_count()
}
