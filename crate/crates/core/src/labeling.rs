//! Integer labellings and the two directions between them and transitive
//! orientations.
//!
//! Going from labels to arcs orients every edge from the divisor to the
//! multiple. Going from arcs to labels gives each vertex its own prime and
//! multiplies in the primes of every vertex with an arc into it. Since the
//! orientation is transitive, the in-neighbourhood of `v` already contains
//! the in-neighbourhood of each of its members, so this one-shot product is
//! the fixed point of merging label lists along arcs.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexId};
use crate::primes::first_primes;

/// Distinct positive integers, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    values: Vec<BigUint>,
}

impl Labeling {
    pub fn new(values: Vec<BigUint>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(values.len());
        for value in &values {
            if value.is_zero() {
                return Err(Error::NonPositiveValue(value.to_string()));
            }
            if !seen.insert(value) {
                return Err(Error::DuplicateValue(value.to_string()));
            }
        }
        Ok(Self { values })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Label of vertex `v`, 1-based.
    pub fn get(&self, v: VertexId) -> &BigUint {
        &self.values[v - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Symbol sets per vertex; symbol `i` stands for the `i`-th prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSets {
    sets: Vec<BTreeSet<VertexId>>,
}

impl LabelSets {
    pub fn get(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.sets[v - 1]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

fn divides(a: &BigUint, b: &BigUint) -> bool {
    (b % a).is_zero()
}

/// Divisor graph of `values`: vertex `i` carries `values[i - 1]` and two
/// vertices are adjacent when one label divides the other.
pub fn divisor_graph_of_set(values: &[BigUint]) -> Result<(Graph, Labeling)> {
    let labeling = Labeling::new(values.to_vec())?;
    let n = values.len();
    let edges = (1..=n).flat_map(|u| {
        let labeling = &labeling;
        (u + 1..=n).filter_map(move |v| {
            let (a, b) = (labeling.get(u), labeling.get(v));
            (divides(a, b) || divides(b, a)).then_some((u, v))
        })
    });
    let graph = Graph::new(n, edges.collect::<Vec<_>>())?;
    Ok((graph, labeling))
}

fn check_coverage(g: &Graph, labeling: &Labeling) -> Result<()> {
    if g.order() != labeling.len() {
        return Err(Error::CoverageMismatch {
            n: g.order(),
            labels: labeling.len(),
        });
    }
    Ok(())
}

/// Orients each edge from the endpoint whose label divides the other's.
pub fn orient_by_divisibility(g: &Graph, labeling: &Labeling) -> Result<Digraph> {
    check_coverage(g, labeling)?;
    let mut arcs = Vec::with_capacity(g.size());
    for (u, v) in g.edges() {
        let (a, b) = (labeling.get(u), labeling.get(v));
        if divides(a, b) {
            arcs.push((u, v));
        } else if divides(b, a) {
            arcs.push((v, u));
        } else {
            return Err(Error::NotComparable(u, v));
        }
    }
    Digraph::new(g.order(), arcs)
}

/// `{v} ∪ in_set(v)` for every vertex of a transitive orientation.
pub fn label_sets(d: &Digraph) -> Result<LabelSets> {
    if !d.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut sets: Vec<BTreeSet<VertexId>> = (1..=d.order()).map(|v| BTreeSet::from([v])).collect();
    for (tail, head) in d.arcs() {
        sets[head - 1].insert(tail);
    }
    Ok(LabelSets { sets })
}

/// Labels whose divisor graph is exactly the underlying graph of `d`.
pub fn label_from_orientation(d: &Digraph) -> Result<Labeling> {
    let sets = label_sets(d)?;
    let primes = first_primes(d.order());
    let values = sets
        .sets
        .iter()
        .map(|set| {
            set.iter()
                .fold(BigUint::from(1u32), |acc, &u| acc * primes[u - 1])
        })
        .collect();
    Labeling::new(values)
}

/// Whether the divisor graph of `labeling` has exactly the edges of `g`.
pub fn verify_certificate(g: &Graph, labeling: &Labeling) -> Result<bool> {
    check_coverage(g, labeling)?;
    let (recomputed, _) = divisor_graph_of_set(labeling.values())?;
    Ok(recomputed == *g)
}
