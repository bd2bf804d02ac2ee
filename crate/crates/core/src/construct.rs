//! Divisor graphs of any prescribed order and size.
//!
//! For `m >= n - 1` the pipeline starts from the star sequence, raises it one
//! edge at a time with [`increment`], then realizes the final sequence as a
//! transitive digraph. Smaller sizes use a partial star oriented away from
//! its centre. Both paths are certified through [`label_from_orientation`].

use crate::degree_seq::{
    e_vector, ferrers_index, increment, initial_sequence, require_hypotheses, DegreeSequence,
    IncrementTrace,
};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::labeling::{label_from_orientation, verify_certificate, Labeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub orientation: Digraph,
    pub certificate: Labeling,
    /// One entry per increment applied, empty in the star regime.
    pub trace: Vec<IncrementTrace>,
    /// The sequence handed to [`build_digraph`], `None` in the star regime.
    pub degree_sequence: Option<DegreeSequence>,
}

/// Largest size for order `n`, `n * (n - 1) / 2`.
pub fn max_size(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn postcondition(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolated(what()))
    }
}

/// Arcs `(i, j)` for `1 <= i <= f` and `i < j <= d_i + 1`.
pub fn build_digraph(seq: &DegreeSequence) -> Result<Digraph> {
    require_hypotheses(seq)?;
    let n = seq.len();
    let f = ferrers_index(seq);
    let arcs = (1..=f).flat_map(|i| (i + 1..=seq.get(i) + 1).map(move |j| (i, j)));
    let d = Digraph::new(n, arcs)?;

    postcondition(d.is_transitive(), || {
        format!("{seq}: digraph is not transitive")
    })?;

    // Vertex degrees must match position by position, following the three
    // regimes i <= f, i = f + 1 and i > f + 1.
    let e = e_vector(seq);
    let degrees = d.underlying_graph().degrees();
    for i in 1..=n {
        let predicted = if i <= f {
            e.get(i) - 1
        } else if i == f + 1 {
            f
        } else {
            e.get(i - 1)
        };
        postcondition(seq.get(i) == predicted, || {
            format!(
                "{seq}: d_{i} = {} but regime formula gives {predicted}",
                seq.get(i)
            )
        })?;
        postcondition(degrees[i - 1] == seq.get(i), || {
            format!(
                "{seq}: vertex {i} has degree {} not {}",
                degrees[i - 1],
                seq.get(i)
            )
        })?;
    }
    Ok(d)
}

/// Vertex 1 joined to vertices `2..=m + 1`.
pub fn star_graph(n: usize, m: usize) -> Result<Graph> {
    star_orientation(n, m).map(|d| d.underlying_graph())
}

fn star_orientation(n: usize, m: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    if m > n - 1 {
        return Err(Error::SizeOutOfRange { n, m, max: n - 1 });
    }
    Digraph::new(n, (2..=m + 1).map(|j| (1, j)))
}

pub fn construct_order_size(n: usize, m: usize) -> Result<ConstructionResult> {
    if n < 1 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    let max = max_size(n);
    if m > max {
        return Err(Error::SizeOutOfRange { n, m, max });
    }

    let (orientation, trace, degree_sequence) = if m < n - 1 || n == 1 {
        (star_orientation(n, m)?, Vec::new(), None)
    } else {
        let mut seq = initial_sequence(n)?;
        let mut trace = Vec::with_capacity(m - (n - 1));
        for _ in n - 1..m {
            let (next, step) = increment(&seq)?;
            seq = next;
            trace.push(step);
        }
        (build_digraph(&seq)?, trace, Some(seq))
    };

    let graph = orientation.underlying_graph();
    let certificate = label_from_orientation(&orientation)?;

    postcondition(graph.order() == n && graph.size() == m, || {
        format!(
            "({n}, {m}): built order {} size {}",
            graph.order(),
            graph.size()
        )
    })?;
    postcondition(orientation.is_transitive(), || {
        format!("({n}, {m}): orientation is not transitive")
    })?;
    postcondition(verify_certificate(&graph, &certificate)?, || {
        format!("({n}, {m}): certificate does not reproduce the graph")
    })?;

    Ok(ConstructionResult {
        graph,
        orientation,
        certificate,
        trace,
        degree_sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree_seq::IncrementCase;

    fn seq(values: &[usize]) -> DegreeSequence {
        DegreeSequence::new(values.to_vec()).unwrap()
    }

    fn arcs(d: &Digraph) -> Vec<(usize, usize)> {
        d.arcs().collect()
    }

    #[test]
    fn build_digraph_examples() {
        let d = build_digraph(&seq(&[3, 2, 2, 1])).unwrap();
        assert_eq!(arcs(&d), vec![(1, 2), (1, 3), (1, 4), (2, 3)]);

        let d = build_digraph(&seq(&[3, 3, 2, 2])).unwrap();
        assert_eq!(arcs(&d), vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]);

        let d = build_digraph(&seq(&[4, 1, 1, 1, 1])).unwrap();
        assert_eq!(arcs(&d), vec![(1, 2), (1, 3), (1, 4), (1, 5)]);
    }

    #[test]
    fn build_digraph_rejects_infeasible() {
        // The wheel W_4 is graphic but fails the partial-sum condition at t = 2.
        assert!(matches!(
            build_digraph(&seq(&[4, 2, 2, 2, 2])),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            build_digraph(&seq(&[3, 2, 1, 1])),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn star_graph_examples() {
        assert_eq!(
            star_graph(4, 2).unwrap(),
            Graph::new(4, [(1, 2), (1, 3)]).unwrap()
        );
        assert_eq!(star_graph(4, 0).unwrap(), Graph::empty(4));
        assert_eq!(star_graph(1, 0).unwrap(), Graph::empty(1));
        assert_eq!(
            star_graph(4, 4),
            Err(Error::SizeOutOfRange { n: 4, m: 4, max: 3 })
        );
        assert!(star_orientation(5, 3).unwrap().is_transitive());
    }

    #[test]
    fn construct_examples() {
        let r = construct_order_size(4, 4).unwrap();
        assert_eq!(
            r.graph,
            Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap()
        );
        assert_eq!(r.certificate, Labeling::from_u64s(&[2, 6, 30, 14]).unwrap());
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.trace[0].case_taken, IncrementCase::CaseTwo);
        assert_eq!(r.degree_sequence, Some(seq(&[3, 2, 2, 1])));

        let r = construct_order_size(1, 0).unwrap();
        assert_eq!(r.graph, Graph::empty(1));
        assert_eq!(r.orientation.arc_count(), 0);
        assert_eq!(r.certificate, Labeling::from_u64s(&[2]).unwrap());

        let r = construct_order_size(4, 6).unwrap();
        assert_eq!(r.graph, Graph::complete(4));

        assert_eq!(
            construct_order_size(4, 7).unwrap_err(),
            Error::SizeOutOfRange { n: 4, m: 7, max: 6 }
        );
        assert_eq!(
            construct_order_size(0, 0).unwrap_err(),
            Error::OrderTooSmall { n: 0, min: 1 }
        );
    }

    #[test]
    fn isolated_vertices_get_fresh_primes() {
        let r = construct_order_size(5, 2).unwrap();
        assert_eq!(
            r.certificate,
            Labeling::from_u64s(&[2, 6, 10, 7, 11]).unwrap()
        );
    }

    #[test]
    fn every_order_and_size_is_realized() {
        for n in 1..=8 {
            for m in 0..=max_size(n) {
                let r = construct_order_size(n, m).unwrap();
                assert_eq!((r.graph.order(), r.graph.size()), (n, m));
                assert_eq!(r.orientation.underlying_graph(), r.graph);
                if let Some(s) = &r.degree_sequence {
                    assert_eq!(&DegreeSequence::of_graph(&r.graph), s);
                    assert_eq!(r.trace.len(), m - (n - 1));
                }
            }
        }
    }
}
