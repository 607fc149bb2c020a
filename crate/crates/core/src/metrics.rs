//! Structural measurements: degree distribution and its power-law exponent,
//! degree ranking, rich-club connectivity and triangle coefficients.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Default lower degree cutoff for the exponent fit.
pub const DEFAULT_KMIN: usize = 3;

/// Empirical P(K >= k) over the degrees present in a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeCcdf {
    points: Vec<(usize, f64)>,
}

impl DegreeCcdf {
    /// Wraps precomputed points. `k` must be strictly increasing and `p`
    /// non-increasing within `(0, 1]`.
    pub fn from_points(points: Vec<(usize, f64)>) -> Result<Self> {
        if points
            .windows(2)
            .any(|w| w[1].0 <= w[0].0 || w[1].1 > w[0].1)
        {
            return Err(Error::param(
                "CCDF must have increasing k and non-increasing p",
            ));
        }
        if points.iter().any(|&(_, p)| !(p > 0.0 && p <= 1.0)) {
            return Err(Error::param("CCDF values must lie in (0, 1]"));
        }
        Ok(DegreeCcdf { points })
    }

    pub fn points(&self) -> &[(usize, f64)] {
        &self.points
    }

    pub fn as_curve(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(|&(k, p)| (k as f64, p)).collect()
    }
}

/// Complementary cumulative distribution of `counts`, where `counts[v]` is
/// how many items have value `v`. Only values that occur appear.
fn ccdf_from_histogram(counts: &[usize]) -> Vec<(usize, f64)> {
    let n: usize = counts.iter().sum();
    let mut at_least = n;
    let mut points = Vec::new();
    for (value, &c) in counts.iter().enumerate() {
        if c > 0 {
            points.push((value, at_least as f64 / n as f64));
            at_least -= c;
        }
    }
    points
}

pub fn degree_ccdf(g: &Graph) -> DegreeCcdf {
    let mut hist = vec![0usize; g.max_degree() + 1];
    for d in g.degrees() {
        hist[d] += 1;
    }
    DegreeCcdf {
        points: ccdf_from_histogram(&hist),
    }
}

/// Least-squares slope of `ln p` against `ln k` over CCDF points with
/// `k >= kmin`, returned as the density exponent `γ = 1 - slope`.
pub fn fit_power_law_exponent(ccdf: &DegreeCcdf, kmin: usize) -> Result<f64> {
    let logs: Vec<(f64, f64)> = ccdf
        .points
        .iter()
        .filter(|&&(k, _)| k >= kmin && k > 0)
        .map(|&(k, p)| ((k as f64).ln(), p.ln()))
        .collect();
    if logs.len() < 3 {
        return Err(Error::InsufficientRange(format!(
            "{} CCDF points with k >= {kmin}, need 3",
            logs.len()
        )));
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::InsufficientRange("zero variance in log k".into()));
    }
    Ok(1.0 - sxy / sxx)
}

/// Nodes by decreasing degree, ties by ascending id. Node at position `i`
/// has normalized rank `(i + 1) / N`.
pub fn rank_nodes(g: &Graph) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..g.node_count() as NodeId).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    order
}

/// Club size for rank fraction `r`: `max(2, floor(r * N))`, capped at N.
pub fn club_size(r: f64, n: usize) -> usize {
    ((r * n as f64).floor() as usize).clamp(2, n.max(2))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RichClubCurve {
    /// `(r, φ(r))` with `r` strictly increasing.
    pub points: Vec<(f64, f64)>,
}

/// Links among club members per club size: entry `n` is the number of edges
/// inside the `n` best-ranked nodes. One pass over the ranking; each edge is
/// counted when its later-ranked endpoint joins.
fn club_link_counts(g: &Graph, order: &[NodeId]) -> Vec<usize> {
    let mut position = vec![0usize; g.node_count()];
    for (i, &u) in order.iter().enumerate() {
        position[u as usize] = i;
    }
    let mut counts = Vec::with_capacity(order.len() + 1);
    counts.push(0);
    let mut links = 0;
    for (i, &u) in order.iter().enumerate() {
        links += g
            .neighbors(u)
            .iter()
            .filter(|&&v| position[v as usize] < i)
            .count();
        counts.push(links);
    }
    counts
}

/// φ(r) = links inside the top-ranked club / (n_r (n_r - 1) / 2).
///
/// `r_values` must be strictly increasing within `(0, 1]`.
pub fn rich_club_curve(g: &Graph, r_values: &[f64]) -> Result<RichClubCurve> {
    if let Some(r) = r_values.iter().find(|&&r| !(r > 0.0 && r <= 1.0)) {
        return Err(Error::param(format!("rank fraction {r} outside (0, 1]")));
    }
    if r_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::param("rank fractions must be strictly increasing"));
    }
    let n = g.node_count();
    if n < 2 {
        return Err(Error::param(
            "rich-club connectivity needs at least 2 nodes",
        ));
    }
    let counts = club_link_counts(g, &rank_nodes(g));
    let points = r_values
        .iter()
        .map(|&r| {
            let size = club_size(r, n);
            let possible = (size * (size - 1) / 2) as f64;
            (r, counts[size] as f64 / possible)
        })
        .collect();
    Ok(RichClubCurve { points })
}

/// `count` log-spaced values from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![hi],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            let mut grid: Vec<f64> = (0..count)
                .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
                .collect();
            grid[0] = lo;
            grid[count - 1] = hi;
            grid
        }
    }
}

/// 64 log-spaced rank fractions from `2/N` to 1.
pub fn default_rank_grid(n: usize) -> Vec<f64> {
    log_grid(2.0 / n as f64, 1.0, 64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleStats {
    /// K_t per node id.
    pub per_node: Vec<u64>,
    pub max_kt: u64,
    pub mean_kt: f64,
    /// `(t, fraction of nodes with K_t >= t)` over the values present.
    pub ccdf: Vec<(u64, f64)>,
}

impl TriangleStats {
    pub fn from_per_node(per_node: Vec<u64>) -> Self {
        let max_kt = per_node.iter().copied().max().unwrap_or(0);
        let mean_kt = if per_node.is_empty() {
            0.0
        } else {
            per_node.iter().sum::<u64>() as f64 / per_node.len() as f64
        };
        let mut sorted = per_node.clone();
        sorted.sort_unstable();
        let n = sorted.len();
        let mut ccdf = Vec::new();
        let mut i = 0;
        while i < n {
            let t = sorted[i];
            ccdf.push((t, (n - i) as f64 / n as f64));
            while i < n && sorted[i] == t {
                i += 1;
            }
        }
        TriangleStats {
            per_node,
            max_kt,
            mean_kt,
            ccdf,
        }
    }

    /// Distinct triangles in the graph.
    pub fn triangle_count(&self) -> u64 {
        self.per_node.iter().sum::<u64>() / 3
    }

    pub fn ccdf_curve(&self) -> Vec<(f64, f64)> {
        self.ccdf.iter().map(|&(t, p)| (t as f64, p)).collect()
    }
}

fn sorted_intersection_len(a: &[NodeId], b: &[NodeId]) -> u64 {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// K_t(u): number of links among the neighbors of `u`, i.e. the number of
/// triangles through `u`.
pub fn triangle_coefficients(g: &Graph) -> TriangleStats {
    let per_node = (0..g.node_count() as NodeId)
        .map(|u| {
            let nu = g.neighbors(u);
            let twice: u64 = nu
                .iter()
                .map(|&v| sorted_intersection_len(nu, g.neighbors(v)))
                .sum();
            twice / 2
        })
        .collect();
    TriangleStats::from_per_node(per_node)
}

/// `(max K_t, mean K_t)`.
pub fn triangle_summary(stats: &TriangleStats) -> (u64, f64) {
    (stats.max_kt, stats.mean_kt)
}
