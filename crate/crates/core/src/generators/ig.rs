use rand::Rng;

use super::{pick, IgParams, RngSeed, WeightedSampler};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, NodeId};

/// Links decided for one growth step, applied after all draws are made.
#[derive(Debug, Clone, Copy)]
enum Step {
    /// New node -> host, host -> both peers.
    OneHost { host: NodeId, peers: [NodeId; 2] },
    /// New node -> both hosts, first host -> peer.
    TwoHosts { hosts: [NodeId; 2], peer: NodeId },
}

/// Grows an interactive-growth graph.
///
/// Each step adds one node and exactly three links. With probability
/// `p_one_host` the node joins one host and the host gains links to two new
/// peers; otherwise the node joins two hosts and the first host gains a link
/// to one new peer. Hosts and peers are drawn with probability proportional
/// to degree at the start of the step, redrawing until the new links keep
/// the graph simple.
///
/// A host is only accepted if it still has enough non-adjacent nodes to
/// receive its interior links. If the drawn branch has no such host (small
/// dense seeds), the other branch is used for that step.
pub fn generate_ig(params: &IgParams, seed: RngSeed) -> Result<Graph> {
    params.validate()?;
    let mut rng = seed.rng();
    let mut builder = params.seed_graph.builder(params.n_target);
    let mut sampler = WeightedSampler::new(params.n_target);
    for u in 0..params.seed_graph.n0 as NodeId {
        sampler.set(u, builder.degree(u) as f64)?;
    }

    while builder.node_count() < params.n_target {
        let one_host = rng.random::<f64>() < params.p_one_host;
        let step = match draw_step(&builder, &sampler, &mut rng, one_host) {
            Err(Error::GeneratorStalled(_)) => draw_step(&builder, &sampler, &mut rng, !one_host)?,
            other => other?,
        };
        let v = builder.add_node();
        let links: [(NodeId, NodeId); 3] = match step {
            Step::OneHost { host, peers } => [(v, host), (host, peers[0]), (host, peers[1])],
            Step::TwoHosts { hosts, peer } => [(v, hosts[0]), (v, hosts[1]), (hosts[0], peer)],
        };
        for (a, b) in links {
            builder.add_edge(a, b);
            sampler.add(a, 1.0)?;
            sampler.add(b, 1.0)?;
        }
    }
    Ok(builder.freeze())
}

fn non_adjacent(builder: &GraphBuilder, u: NodeId) -> usize {
    builder.node_count() - 1 - builder.degree(u)
}

fn draw_step<R: Rng + ?Sized>(
    b: &GraphBuilder,
    sampler: &WeightedSampler,
    rng: &mut R,
    one_host: bool,
) -> Result<Step> {
    let existing = b.node_count();
    if one_host {
        let host = pick(sampler, rng, existing, |c| non_adjacent(b, c) >= 2, "host")?;
        let free = |c: NodeId| c != host && !b.has_edge(host, c);
        let p0 = pick(sampler, rng, existing, free, "peer")?;
        let p1 = pick(sampler, rng, existing, |c| c != p0 && free(c), "peer")?;
        Ok(Step::OneHost {
            host,
            peers: [p0, p1],
        })
    } else {
        let h0 = pick(sampler, rng, existing, |c| non_adjacent(b, c) >= 1, "host")?;
        // If h0 has a single non-neighbor, h1 must not consume it.
        let h1 = pick(
            sampler,
            rng,
            existing,
            |c| c != h0 && (non_adjacent(b, h0) >= 2 || b.has_edge(h0, c)),
            "second host",
        )?;
        let peer = pick(
            sampler,
            rng,
            existing,
            |c| c != h0 && c != h1 && !b.has_edge(h0, c),
            "peer",
        )?;
        Ok(Step::TwoHosts {
            hosts: [h0, h1],
            peer,
        })
    }
}
