use super::{pick, FbaParams, RngSeed, WeightedSampler};
use crate::error::Result;
use crate::graph::{Graph, NodeId};

/// Grows a fitness-weighted preferential-attachment graph.
///
/// Every node draws a fitness η when it appears (seed nodes included). Each
/// step adds one node linked to `m` distinct existing nodes, each drawn with
/// probability proportional to `η_j * k_j`; a draw that repeats a target
/// already chosen in this step is redrawn. Final link count is
/// `L0 + m * (n_target - n0)`.
pub fn generate_fba(params: &FbaParams, seed: RngSeed) -> Result<Graph> {
    params.validate()?;
    let mut rng = seed.rng();
    let mut builder = params.seed_graph.builder(params.n_target);
    let mut sampler = WeightedSampler::new(params.n_target);
    let mut fitness = Vec::with_capacity(params.n_target);
    for u in 0..params.seed_graph.n0 as NodeId {
        let eta = params.fitness_law.draw(&mut rng);
        fitness.push(eta);
        sampler.set(u, eta * builder.degree(u) as f64)?;
    }

    let mut targets: Vec<NodeId> = Vec::with_capacity(params.m);
    while builder.node_count() < params.n_target {
        let existing = builder.node_count();
        let eta = params.fitness_law.draw(&mut rng);
        targets.clear();
        for _ in 0..params.m {
            let t = pick(
                &sampler,
                &mut rng,
                existing,
                |c| !targets.contains(&c),
                "target",
            )?;
            targets.push(t);
        }
        let v = builder.add_node();
        fitness.push(eta);
        for &t in &targets {
            builder.add_edge(v, t);
            sampler.add(t, fitness[t as usize])?;
        }
        sampler.set(v, eta * params.m as f64)?;
    }
    Ok(builder.freeze())
}
