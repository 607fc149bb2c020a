//! Simple undirected graphs over dense node ids.
//!
//! A [`Graph`] is frozen at construction: adjacency is stored as one flat,
//! per-node sorted neighbor array (CSR layout). Generators grow a
//! [`GraphBuilder`] and call [`GraphBuilder::freeze`] when done.

use crate::error::{Error, Result};

/// Dense node index in `[0, N)`.
pub type NodeId = u32;

/// Immutable simple undirected graph.
///
/// Invariants: no self-loops, no parallel edges, symmetric adjacency, every
/// neighbor slice strictly increasing, and the degree sum equals `2 * L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    edge_count: usize,
}

/// Items silently dropped while building a graph from a raw edge sequence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
}

impl Graph {
    /// Builds a graph on `n_nodes` nodes from raw pairs.
    ///
    /// Self-loops and repeated pairs (in either orientation) are dropped and
    /// counted. An id `>= n_nodes` is an error naming the offending pair.
    pub fn from_edges<I>(n_nodes: usize, edges: I) -> Result<(Graph, BuildReport)>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut report = BuildReport::default();
        let mut pairs = Vec::new();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            if u as usize >= n_nodes || v as usize >= n_nodes {
                return Err(Error::NodeOutOfRange {
                    index,
                    u,
                    v,
                    n_nodes,
                });
            }
            if u == v {
                report.self_loops_dropped += 1;
                continue;
            }
            pairs.push(if u < v { (u, v) } else { (v, u) });
        }
        let raw = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        report.duplicates_dropped = raw - pairs.len();
        Ok((Graph::from_canonical_pairs(n_nodes, &pairs), report))
    }

    /// `pairs` must be sorted, deduplicated and have `u < v`.
    fn from_canonical_pairs(n_nodes: usize, pairs: &[(NodeId, NodeId)]) -> Graph {
        let mut degree = vec![0usize; n_nodes];
        for &(u, v) in pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n_nodes + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n_nodes].to_vec();
        let mut targets = vec![0; 2 * pairs.len()];
        // Pairs are sorted by (u, v): filling u's list with v, and v's list
        // with u, yields each list already in increasing order.
        for &(u, v) in pairs {
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
        }
        for &(u, v) in pairs {
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for u in 0..n_nodes {
            targets[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Graph {
            offsets,
            targets,
            edge_count: pairs.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, u: NodeId) -> usize {
        let u = u as usize;
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Sorted neighbors of `u`.
    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        let u = u as usize;
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

/// Mutable graph used while growing a topology.
///
/// Only the generators write to it; edge insertion assumes the caller has
/// already ruled out self-loops and duplicates.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl GraphBuilder {
    pub fn with_capacity(nodes: usize) -> Self {
        GraphBuilder {
            adjacency: Vec::with_capacity(nodes),
            edge_count: 0,
        }
    }

    pub fn add_node(&mut self) -> NodeId {
        self.adjacency.push(Vec::new());
        (self.adjacency.len() - 1) as NodeId
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adjacency[u as usize].len()
    }

    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        &self.adjacency[u as usize]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a as usize].contains(&b)
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId) {
        debug_assert!(u != v, "self-loop {u}");
        debug_assert!(!self.has_edge(u, v), "duplicate edge ({u}, {v})");
        self.adjacency[u as usize].push(v);
        self.adjacency[v as usize].push(u);
        self.edge_count += 1;
    }

    pub fn freeze(self) -> Graph {
        let n = self.adjacency.len();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(2 * self.edge_count);
        for mut list in self.adjacency {
            list.sort_unstable();
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Graph {
            offsets,
            targets,
            edge_count: self.edge_count,
        }
    }
}

/// Disjoint-set forest with union by size and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) -> u32 {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        ra
    }

    pub fn component_size(&mut self, x: u32) -> usize {
        let r = self.find(x);
        self.size[r as usize] as usize
    }
}

fn surviving_forest(g: &Graph, excluded: &[bool]) -> UnionFind {
    assert_eq!(
        excluded.len(),
        g.node_count(),
        "exclusion mask must cover every node"
    );
    let mut uf = UnionFind::new(g.node_count());
    for (u, v) in g.edges() {
        if !excluded[u as usize] && !excluded[v as usize] {
            uf.union(u, v);
        }
    }
    uf
}

/// Size of the largest connected component among nodes with
/// `excluded[u] == false`. Returns 0 when every node is excluded.
///
/// # Panics
///
/// If `excluded.len() != g.node_count()`.
pub fn largest_component(g: &Graph, excluded: &[bool]) -> usize {
    let mut uf = surviving_forest(g, excluded);
    (0..g.node_count() as u32)
        .filter(|&u| !excluded[u as usize])
        .map(|u| uf.component_size(u))
        .max()
        .unwrap_or(0)
}

/// Component label per node, `None` for excluded nodes. Labels are dense and
/// numbered in order of each component's smallest node id.
pub fn component_labels(g: &Graph, excluded: &[bool]) -> Vec<Option<usize>> {
    let mut uf = surviving_forest(g, excluded);
    let mut root_label = vec![usize::MAX; g.node_count()];
    let mut next = 0;
    (0..g.node_count() as u32)
        .map(|u| {
            if excluded[u as usize] {
                return None;
            }
            let r = uf.find(u) as usize;
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            Some(root_label[r])
        })
        .collect()
}
