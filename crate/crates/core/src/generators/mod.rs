//! Seeded growth models for Internet-like power-law topologies.
//!
//! Both models start from a small connected seed graph and add one node per
//! step, choosing link endpoints preferentially. Randomness comes from
//! ChaCha8 seeded with a `u64` via `SeedableRng::seed_from_u64`; the same
//! parameters and seed always produce the same graph.

mod fba;
mod ig;
pub mod sampler;

pub use fba::generate_fba;
pub use ig::generate_ig;
pub use sampler::WeightedSampler;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{largest_component, Graph, GraphBuilder, NodeId};

/// Node count of the default run, matching the measured AS graph.
pub const PAPER_NODE_COUNT: usize = 11122;

/// Rejected preferential draws tolerated before switching to an exact scan
/// over the acceptable candidates.
const REJECTION_LIMIT: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// Initial graph the growth process starts from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedGraphSpec {
    pub n0: usize,
    pub initial_edges: Vec<(NodeId, NodeId)>,
}

impl SeedGraphSpec {
    /// Star: node 0 linked to `1..n`.
    pub fn star(n: usize) -> Self {
        SeedGraphSpec {
            n0: n,
            initial_edges: (1..n as NodeId).map(|v| (0, v)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        let n32 = n as NodeId;
        SeedGraphSpec {
            n0: n,
            initial_edges: (0..n32).map(|u| (u, (u + 1) % n32)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let n32 = n as NodeId;
        SeedGraphSpec {
            n0: n,
            initial_edges: (0..n32)
                .flat_map(|u| (u + 1..n32).map(move |v| (u, v)))
                .collect(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.initial_edges.len()
    }

    /// Checks the edges form a connected simple graph on `[0, n0)`.
    pub fn validate(&self) -> Result<()> {
        if self.n0 < 2 {
            return Err(Error::param("seed graph needs at least 2 nodes"));
        }
        let (g, report) = Graph::from_edges(self.n0, self.initial_edges.iter().copied())
            .map_err(|e| Error::param(format!("seed graph: {e}")))?;
        if report.duplicates_dropped + report.self_loops_dropped > 0 {
            return Err(Error::param("seed graph must be simple"));
        }
        if largest_component(&g, &vec![false; self.n0]) != self.n0 {
            return Err(Error::param("seed graph must be connected"));
        }
        Ok(())
    }

    fn builder(&self, capacity: usize) -> GraphBuilder {
        let mut b = GraphBuilder::with_capacity(capacity);
        for _ in 0..self.n0 {
            b.add_node();
        }
        for &(u, v) in &self.initial_edges {
            b.add_edge(u, v);
        }
        b
    }
}

/// Preferential draw restricted to nodes satisfying `accept`.
///
/// Redraws on rejection, which leaves the conditional distribution exact.
/// After [`REJECTION_LIMIT`] misses the acceptable candidates among the first
/// `existing` ids are enumerated and drawn from directly: by weight if any is
/// positive, uniformly otherwise. Errors if no candidate exists.
fn pick<R, F>(
    sampler: &WeightedSampler,
    rng: &mut R,
    existing: usize,
    accept: F,
    what: &str,
) -> Result<NodeId>
where
    R: Rng + ?Sized,
    F: Fn(NodeId) -> bool,
{
    for _ in 0..REJECTION_LIMIT {
        let c = sampler.sample(rng)?;
        if accept(c) {
            return Ok(c);
        }
    }
    let candidates: Vec<NodeId> = (0..existing as NodeId).filter(|&c| accept(c)).collect();
    if candidates.is_empty() {
        return Err(Error::GeneratorStalled(format!(
            "no eligible {what} among {existing} nodes"
        )));
    }
    let total: f64 = candidates.iter().map(|&c| sampler.weight(c)).sum();
    if total > 0.0 {
        let mut target = rng.random::<f64>() * total;
        for &c in &candidates {
            let w = sampler.weight(c);
            if w > 0.0 && target < w {
                return Ok(c);
            }
            target -= w;
        }
        // Rounding left a sliver past the last candidate.
        return Ok(*candidates
            .iter()
            .rev()
            .find(|&&c| sampler.weight(c) > 0.0)
            .unwrap());
    }
    Ok(candidates[rng.random_range(0..candidates.len())])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FitnessLaw {
    /// η ~ U[0, 1).
    Uniform,
    /// Every node gets the same η.
    Constant(f64),
}

impl FitnessLaw {
    fn draw<R: Rng + ?Sized>(self, rng: &mut R) -> f64 {
        match self {
            FitnessLaw::Uniform => rng.random::<f64>(),
            FitnessLaw::Constant(eta) => eta,
        }
    }
}

/// Fitness-weighted preferential attachment parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FbaParams {
    pub n_target: usize,
    /// Links added with each new node.
    pub m: usize,
    pub seed_graph: SeedGraphSpec,
    pub fitness_law: FitnessLaw,
}

impl FbaParams {
    /// m = 3 on an 8-node star, uniform fitness.
    pub fn with_defaults(n_target: usize) -> Self {
        FbaParams {
            n_target,
            m: 3,
            seed_graph: SeedGraphSpec::star(8),
            fitness_law: FitnessLaw::Uniform,
        }
    }

    pub fn expected_edge_count(&self) -> usize {
        self.seed_graph.edge_count() + self.m * (self.n_target - self.seed_graph.n0)
    }

    pub fn validate(&self) -> Result<()> {
        self.seed_graph.validate()?;
        let n0 = self.seed_graph.n0;
        if self.n_target <= n0 {
            return Err(Error::param(format!(
                "n_target {} must exceed seed size {n0}",
                self.n_target
            )));
        }
        if self.m == 0 || self.m > n0 {
            return Err(Error::param(format!("m = {} must be in [1, {n0}]", self.m)));
        }
        if self.n_target > NodeId::MAX as usize {
            return Err(Error::param("n_target too large"));
        }
        if let FitnessLaw::Constant(eta) = self.fitness_law {
            if !(eta.is_finite() && eta > 0.0) {
                return Err(Error::param(format!(
                    "constant fitness {eta} must be positive"
                )));
            }
        }
        Ok(())
    }
}

/// Interactive-growth parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct IgParams {
    pub n_target: usize,
    /// Probability that a step uses one host and two interior links.
    pub p_one_host: f64,
    pub seed_graph: SeedGraphSpec,
}

impl IgParams {
    /// p = 0.4 on an 8-node star.
    pub fn with_defaults(n_target: usize) -> Self {
        IgParams {
            n_target,
            p_one_host: 0.4,
            seed_graph: SeedGraphSpec::star(8),
        }
    }

    pub fn expected_edge_count(&self) -> usize {
        self.seed_graph.edge_count() + 3 * (self.n_target - self.seed_graph.n0)
    }

    pub fn validate(&self) -> Result<()> {
        self.seed_graph.validate()?;
        let n0 = self.seed_graph.n0;
        if n0 < 4 {
            return Err(Error::param(format!(
                "seed graph has {n0} nodes, need at least 4"
            )));
        }
        if self.n_target <= n0 {
            return Err(Error::param(format!(
                "n_target {} must exceed seed size {n0}",
                self.n_target
            )));
        }
        if !(0.0..=1.0).contains(&self.p_one_host) {
            return Err(Error::param(format!(
                "p_one_host = {} outside [0, 1]",
                self.p_one_host
            )));
        }
        if self.n_target > NodeId::MAX as usize {
            return Err(Error::param("n_target too large"));
        }
        Ok(())
    }
}
