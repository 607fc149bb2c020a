//! Node-attack simulation.
//!
//! Nodes are removed in a strategy-defined order and, at each requested
//! removal fraction, the largest surviving component is measured relative to
//! the original node count. The graph is never mutated; removals are an
//! exclusion mask.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::generators::RngSeed;
use crate::graph::{largest_component, Graph, NodeId};
use crate::metrics::{log_grid, rank_nodes};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttackStrategy {
    /// Decreasing degree in the original graph.
    TargetedStatic,
    /// Highest current degree among survivors, recomputed after each removal.
    TargetedAdaptive,
    /// Uniformly shuffled order.
    Random(RngSeed),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttackCurve {
    /// `(f, s)`: fraction removed, giant component size / original N.
    pub points: Vec<(f64, f64)>,
}

/// Nodes removed at fraction `f`: `f * N` rounded to the nearest integer.
pub fn removed_count(f: f64, n: usize) -> usize {
    ((f * n as f64).round() as usize).min(n)
}

/// Full removal order for `strategy`, truncated to `limit` nodes.
pub fn removal_order(g: &Graph, strategy: AttackStrategy, limit: usize) -> Vec<NodeId> {
    let n = g.node_count();
    let limit = limit.min(n);
    match strategy {
        AttackStrategy::TargetedStatic => {
            let mut order = rank_nodes(g);
            order.truncate(limit);
            order
        }
        AttackStrategy::Random(seed) => {
            let mut order: Vec<NodeId> = (0..n as NodeId).collect();
            order.shuffle(&mut seed.rng());
            order.truncate(limit);
            order
        }
        AttackStrategy::TargetedAdaptive => {
            let mut degree: Vec<usize> = g.degrees().collect();
            let mut queue: BTreeSet<(Reverse<usize>, NodeId)> = (0..n as NodeId)
                .map(|u| (Reverse(degree[u as usize]), u))
                .collect();
            let mut removed = vec![false; n];
            let mut order = Vec::with_capacity(limit);
            while order.len() < limit {
                let (_, u) = queue.pop_first().expect("queue holds every survivor");
                removed[u as usize] = true;
                order.push(u);
                for &v in g.neighbors(u) {
                    if !removed[v as usize] {
                        let d = &mut degree[v as usize];
                        queue.remove(&(Reverse(*d), v));
                        *d -= 1;
                        queue.insert((Reverse(*d), v));
                    }
                }
            }
            order
        }
    }
}

/// Giant-component fraction after removing `f * N` nodes, for each `f`.
///
/// `fractions` must be strictly increasing within `[0, 1)`.
pub fn attack_curve(g: &Graph, strategy: AttackStrategy, fractions: &[f64]) -> Result<AttackCurve> {
    if let Some(f) = fractions.iter().find(|&&f| !(0.0..1.0).contains(&f)) {
        return Err(Error::param(format!("removal fraction {f} outside [0, 1)")));
    }
    if fractions.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::param(
            "removal fractions must be strictly increasing",
        ));
    }
    let n = g.node_count();
    if n == 0 {
        return Err(Error::param("cannot attack an empty graph"));
    }
    let last = fractions.last().map_or(0, |&f| removed_count(f, n));
    let order = removal_order(g, strategy, last);

    let mut excluded = vec![false; n];
    let mut done = 0;
    let points = fractions
        .iter()
        .map(|&f| {
            let target = removed_count(f, n);
            for &u in &order[done..target] {
                excluded[u as usize] = true;
            }
            done = target;
            (f, largest_component(g, &excluded) as f64 / n as f64)
        })
        .collect();
    Ok(AttackCurve { points })
}

/// 32 log-spaced fractions from `1/N` to `0.1`.
pub fn default_fraction_grid(n: usize) -> Vec<f64> {
    log_grid(1.0 / n as f64, 0.1, 32)
}
