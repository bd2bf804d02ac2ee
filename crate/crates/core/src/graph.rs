//! Simple graphs and their orientations over dense 1-based vertex indices.
//!
//! Edges are kept as sorted pairs `(min, max)` and arcs as ordered pairs
//! `(tail, head)`, both in ordered sets, so equality of two graphs is plain
//! set equality and iteration order is deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Vertex index in `1..=n`.
pub type VertexId = usize;

fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v == 0 || v > n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    Ok(())
}

/// Simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl Graph {
    /// Builds a graph of order `n`. Duplicate pairs (in either orientation)
    /// collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Self { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Degrees indexed by vertex, `degrees()[v - 1]` is the degree of `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }
}

/// An orientation of a simple graph: no loops and at most one arc per pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if set.contains(&(v, u)) {
                return Err(Error::NotAntisymmetric(u, v));
            }
            set.insert((u, v));
        }
        Ok(Self { n, arcs: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs.range((v, 0)..(v + 1, 0)).map(|&(_, head)| head)
    }

    /// Tails of arcs entering `v`.
    pub fn in_set(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        check_vertex(v, self.n)?;
        Ok(self
            .arcs
            .iter()
            .filter(|&&(_, head)| head == v)
            .map(|&(tail, _)| tail)
            .collect())
    }

    /// Heads of arcs leaving `v`.
    pub fn out_set(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        check_vertex(v, self.n)?;
        Ok(self.successors(v).collect())
    }

    /// Whether arcs `(x, y)` and `(y, z)` always imply the arc `(x, z)`.
    pub fn is_transitive(&self) -> bool {
        self.arcs
            .iter()
            .all(|&(x, y)| self.successors(y).all(|z| self.arcs.contains(&(x, z))))
    }

    /// Forgets arc directions. Antisymmetry means no two arcs merge.
    pub fn underlying_graph(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self
                .arcs
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn make_graph_counts_and_dedups() {
        let g = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap();
        assert_eq!((g.order(), g.size()), (4, 4));

        let g = Graph::new(1, []).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));

        let g = Graph::new(3, [(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn make_graph_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(Error::OutOfRange { vertex: 4, n: 3 })
        );
        assert!(matches!(
            Graph::new(3, [(0, 1)]),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn digraph_rejects_opposite_arcs() {
        assert_eq!(
            Digraph::new(2, [(1, 2), (2, 1)]),
            Err(Error::NotAntisymmetric(2, 1))
        );
    }

    #[test]
    fn transitivity_examples() {
        assert!(digraph(3, &[(1, 2), (2, 3), (1, 3)]).is_transitive());
        assert!(!digraph(3, &[(1, 2), (2, 3)]).is_transitive());
        assert!(digraph(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).is_transitive());
        assert!(Digraph::empty(0).is_transitive());
    }

    #[test]
    fn underlying_graph_examples() {
        let g = digraph(3, &[(1, 2), (2, 3), (1, 3)]).underlying_graph();
        assert_eq!(g, Graph::complete(3));

        assert_eq!(Digraph::empty(5).underlying_graph(), Graph::empty(5));

        let g = digraph(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).underlying_graph();
        assert_eq!(g, Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap());

        let g = digraph(3, &[(3, 1)]).underlying_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 3)]);
    }

    #[test]
    fn in_and_out_sets() {
        let d = digraph(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(d.in_set(3).unwrap(), BTreeSet::from([1, 2]));
        assert!(d.out_set(3).unwrap().is_empty());
        assert!(d.in_set(1).unwrap().is_empty());
        assert_eq!(d.out_set(1).unwrap(), BTreeSet::from([2, 3]));

        let d = digraph(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]);
        assert_eq!(d.in_set(2).unwrap(), BTreeSet::from([1]));
        assert_eq!(d.out_set(2).unwrap(), BTreeSet::from([3]));

        assert_eq!(d.in_set(5), Err(Error::OutOfRange { vertex: 5, n: 4 }));
        assert!(d.out_set(0).is_err());
    }

    /// Every orientation-like digraph on `n` vertices: each unordered pair is
    /// absent, forward, or backward.
    fn all_digraphs(n: usize) -> Vec<Digraph> {
        let pairs: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let total = 3usize.pow(pairs.len() as u32);
        (0..total)
            .map(|mut code| {
                let mut arcs = Vec::new();
                for &(u, v) in &pairs {
                    match code % 3 {
                        1 => arcs.push((u, v)),
                        2 => arcs.push((v, u)),
                        _ => {}
                    }
                    code /= 3;
                }
                Digraph::new(n, arcs).unwrap()
            })
            .collect()
    }

    fn triple_loop_transitive(d: &Digraph) -> bool {
        let n = d.order();
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    if d.has_arc(x, y) && d.has_arc(y, z) && !d.has_arc(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn transitivity_matches_triple_loop_for_small_orders() {
        for n in 0..=4 {
            for d in all_digraphs(n) {
                assert_eq!(d.is_transitive(), triple_loop_transitive(&d), "{d:?}");
            }
        }
    }

    #[test]
    fn underlying_graph_preserves_counts_and_partitions_neighborhoods() {
        for n in 1..=4 {
            for d in all_digraphs(n) {
                let g = d.underlying_graph();
                assert_eq!(g.order(), d.order());
                assert_eq!(g.size(), d.arc_count());
                for v in 1..=n {
                    let ins = d.in_set(v).unwrap();
                    let outs = d.out_set(v).unwrap();
                    assert!(ins.is_disjoint(&outs));
                    let union: BTreeSet<_> = ins.union(&outs).copied().collect();
                    assert_eq!(union, g.neighbors(v));
                    assert_eq!(g.degree(v), g.degrees()[v - 1]);
                }
            }
        }
    }
}
