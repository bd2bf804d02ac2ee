//! Divisor-graph recognition by searching for a transitive orientation.
//!
//! The search walks edges in lexicographic order and tries `low -> high`
//! before `high -> low`. Fixing an arc `(x, y)` forces `(x, z)` for every
//! fixed `(y, z)` and `(w, y)` for every fixed `(w, x)`; a forced pair that
//! is not an edge, or is already fixed the other way, prunes the branch.
//! Forcing only removes assignments that cannot be completed, so the first
//! orientation found is the lexicographically first transitive one.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexId};
use crate::labeling::{label_from_orientation, verify_certificate, Labeling};

/// Largest edge count accepted by [`oracle_is_divisor_graph`].
pub const ORACLE_MAX_EDGES: usize = 20;

/// A transitive orientation together with the labels it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub orientation: Digraph,
    pub labeling: Labeling,
}

struct Search {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    /// `index[u][v]` is the position of edge `{u, v}` in `edges`.
    index: Vec<Vec<Option<usize>>>,
    neighbors: Vec<Vec<VertexId>>,
    /// `Some(true)` means `low -> high`.
    state: Vec<Option<bool>>,
    trail: Vec<usize>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let edges: Vec<_> = g.edges().collect();
        let mut index = vec![vec![None; n + 1]; n + 1];
        let mut neighbors = vec![Vec::new(); n + 1];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u][v] = Some(i);
            index[v][u] = Some(i);
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        let state = vec![None; edges.len()];
        Self {
            n,
            edges,
            index,
            neighbors,
            state,
            trail: Vec::new(),
        }
    }

    /// Whether `(x, y)` is currently fixed as an arc.
    fn arc(&self, x: VertexId, y: VertexId) -> bool {
        match self.index[x][y].and_then(|i| self.state[i]) {
            Some(forward) => forward == (x < y),
            None => false,
        }
    }

    /// Fixes `(x, y)` and everything it forces. Returns false on conflict,
    /// leaving partial assignments on the trail for the caller to undo.
    fn assign(&mut self, x: VertexId, y: VertexId) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            let Some(i) = self.index[x][y] else {
                return false;
            };
            match self.state[i] {
                Some(forward) if forward == (x < y) => continue,
                Some(_) => return false,
                None => {
                    self.state[i] = Some(x < y);
                    self.trail.push(i);
                }
            }
            for &z in &self.neighbors[y] {
                if z != x && self.arc(y, z) {
                    queue.push((x, z));
                }
            }
            for &w in &self.neighbors[x] {
                if w != y && self.arc(w, x) {
                    queue.push((w, y));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for i in self.trail.drain(mark..) {
            self.state[i] = None;
        }
    }

    fn solve(&mut self, from: usize) -> bool {
        let Some(next) = (from..self.edges.len()).find(|&i| self.state[i].is_none()) else {
            return true;
        };
        let (u, v) = self.edges[next];
        for (x, y) in [(u, v), (v, u)] {
            let mark = self.trail.len();
            if self.assign(x, y) && self.solve(next + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn orientation(&self) -> Digraph {
        let arcs =
            self.edges
                .iter()
                .zip(&self.state)
                .map(|(&(u, v), s)| if *s == Some(true) { (u, v) } else { (v, u) });
        Digraph::new(self.n, arcs).expect("edges of a simple graph orient to a valid digraph")
    }
}

pub fn find_transitive_orientation(g: &Graph) -> Option<Digraph> {
    let mut search = Search::new(g);
    if !search.solve(0) {
        return None;
    }
    let d = search.orientation();
    debug_assert!(d.is_transitive());
    Some(d)
}

pub fn is_divisor_graph(g: &Graph) -> Option<Certificate> {
    let orientation = find_transitive_orientation(g)?;
    let labeling =
        label_from_orientation(&orientation).expect("search only returns transitive orientations");
    debug_assert_eq!(orientation.underlying_graph(), *g);
    debug_assert_eq!(verify_certificate(g, &labeling), Ok(true));
    Some(Certificate {
        orientation,
        labeling,
    })
}

/// Tries every one of the `2^m` orientations of `g`.
pub fn oracle_is_divisor_graph(g: &Graph) -> Result<bool> {
    let m = g.size();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::TooLarge {
            m,
            max: ORACLE_MAX_EDGES,
        });
    }
    let edges: Vec<_> = g.edges().collect();
    for mask in 0u32..(1 << m) {
        let arcs = edges.iter().enumerate().map(
            |(i, &(u, v))| {
                if mask & (1 << i) == 0 {
                    (u, v)
                } else {
                    (v, u)
                }
            },
        );
        let d = Digraph::new(g.order(), arcs).expect("valid orientation");
        if d.is_transitive() {
            return Ok(true);
        }
    }
    Ok(false)
}
