//! Dynamic weighted sampling over node ids.
//!
//! Weights live in a Fenwick (binary indexed) tree of prefix sums, so both a
//! weight update and a draw cost O(log n).

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::NodeId;

#[derive(Debug, Clone)]
pub struct WeightedSampler {
    weights: Vec<f64>,
    tree: Vec<f64>,
    positive: usize,
    top_bit: usize,
}

impl WeightedSampler {
    /// `len` slots, all with weight zero.
    pub fn new(len: usize) -> Self {
        let top_bit = if len == 0 {
            0
        } else {
            1 << (usize::BITS - 1 - len.leading_zeros())
        };
        WeightedSampler {
            weights: vec![0.0; len],
            tree: vec![0.0; len + 1],
            positive: 0,
            top_bit,
        }
    }

    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let mut s = Self::new(weights.len());
        for (i, &w) in weights.iter().enumerate() {
            s.set(i as NodeId, w)?;
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, id: NodeId) -> f64 {
        self.weights[id as usize]
    }

    /// Number of slots with a strictly positive weight.
    pub fn positive_count(&self) -> usize {
        self.positive
    }

    pub fn total(&self) -> f64 {
        self.prefix(self.weights.len())
    }

    /// Sum of the first `count` weights.
    fn prefix(&self, mut count: usize) -> f64 {
        let mut sum = 0.0;
        while count > 0 {
            sum += self.tree[count];
            count &= count - 1;
        }
        sum
    }

    pub fn set(&mut self, id: NodeId, weight: f64) -> Result<()> {
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(Error::param(format!("weight {weight} for node {id}")));
        }
        let i = id as usize;
        let old = self.weights[i];
        match (old > 0.0, weight > 0.0) {
            (false, true) => self.positive += 1,
            (true, false) => self.positive -= 1,
            _ => {}
        }
        self.weights[i] = weight;
        let delta = weight - old;
        let mut pos = i + 1;
        while pos < self.tree.len() {
            self.tree[pos] += delta;
            pos += pos & pos.wrapping_neg();
        }
        Ok(())
    }

    pub fn add(&mut self, id: NodeId, delta: f64) -> Result<()> {
        self.set(id, self.weights[id as usize] + delta)
    }

    /// Draws `i` with probability `weight(i) / total()`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<NodeId> {
        if self.positive == 0 {
            return Err(Error::ZeroWeights);
        }
        let total = self.total();
        loop {
            let target = rng.random::<f64>() * total;
            // Smallest index whose inclusive prefix sum exceeds `target`.
            let mut pos = 0;
            let mut rest = target;
            let mut step = self.top_bit;
            while step > 0 {
                let next = pos + step;
                if next < self.tree.len() && self.tree[next] <= rest {
                    pos = next;
                    rest -= self.tree[next];
                }
                step >>= 1;
            }
            // Rounding in the tree can land past the end or on a zero slot;
            // both are vanishingly rare and simply redrawn.
            if pos < self.weights.len() && self.weights[pos] > 0.0 {
                return Ok(pos as NodeId);
            }
        }
    }
}
