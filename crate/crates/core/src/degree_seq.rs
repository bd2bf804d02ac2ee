//! Degree sequences, their conjugate counts, and the one-edge increment step
//! that walks from the star sequence `(n-1, 1, ..., 1)` up to the complete
//! sequence `(n-1, ..., n-1)` while keeping the realization conditions
//! intact.
//!
//! Positions are 1-based in every public field (`g`, `h`, `t`) to match the
//! vertex numbering used by [`crate::construct::build_digraph`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Non-increasing list `d_1 >= ... >= d_n` with every `d_i <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if let Some(w) = values.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidSequence(format!(
                "not non-increasing: {} before {}",
                w[0], w[1]
            )));
        }
        if let Some(&first) = values.first() {
            if first > n - 1 {
                return Err(Error::InvalidSequence(format!(
                    "degree {first} exceeds n - 1 = {}",
                    n - 1
                )));
            }
        }
        Ok(Self { values })
    }

    /// Degrees of `g` sorted into non-increasing order.
    pub fn of_graph(g: &Graph) -> Self {
        let mut values = g.degrees();
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    /// `d_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Conjugate counts `e_i = |{j : d_j >= i}|` for `i = 1..=n`, zero padded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EVector {
    counts: Vec<usize>,
}

impl EVector {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `e_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.counts[i - 1]
    }

    /// `|{j : e_j >= i}|` for `i = 1..=n`. Returns the original degrees when
    /// the counts came from a degree sequence.
    pub fn conjugate(&self) -> Vec<usize> {
        conjugate_counts(&self.counts)
    }
}

fn conjugate_counts(values: &[usize]) -> Vec<usize> {
    (1..=values.len())
        .map(|i| values.iter().filter(|&&v| v >= i).count())
        .collect()
}

pub fn e_vector(seq: &DegreeSequence) -> EVector {
    EVector {
        counts: conjugate_counts(&seq.values),
    }
}

/// `|{i : d_i >= i}|`, the side of the Durfee square.
pub fn ferrers_index(seq: &DegreeSequence) -> usize {
    seq.values
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d > i)
        .count()
}

/// Outcome of evaluating the realization conditions on a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub sum_is_2m: bool,
    pub ferrers_index: usize,
    /// Entry `t - 1` holds `sum_{i<=t} d_i == sum_{i<=t} (e_i - 1)`.
    pub partial_sum_ok: Vec<bool>,
    /// `d_1 == n - 1`.
    pub leading_is_full: bool,
    /// `d_n >= 1`.
    pub no_isolated: bool,
    pub feasible: bool,
}

impl FeasibilityReport {
    /// Feasible and inside the frame `n - 1 = d_1 >= ... >= d_n >= 1`.
    pub fn hypotheses_hold(&self) -> bool {
        self.feasible && self.leading_is_full && self.no_isolated
    }

    fn describe_failure(&self, seq: &DegreeSequence, m: usize) -> String {
        let mut reasons = Vec::new();
        if !self.sum_is_2m {
            reasons.push(format!("degree sum {} != 2m = {}", seq.sum(), 2 * m));
        }
        for (t, ok) in self.partial_sum_ok.iter().enumerate() {
            if !ok {
                reasons.push(format!("partial-sum condition fails at t = {}", t + 1));
            }
        }
        if !self.leading_is_full {
            reasons.push("d_1 != n - 1".to_string());
        }
        if !self.no_isolated {
            reasons.push("d_n = 0".to_string());
        }
        format!("{seq}: {}", reasons.join("; "))
    }
}

pub fn check_feasible(seq: &DegreeSequence, m: usize) -> FeasibilityReport {
    let n = seq.len();
    let e = e_vector(seq);
    let f = ferrers_index(seq);

    let mut lhs = 0usize;
    let mut rhs = 0isize;
    let partial_sum_ok: Vec<bool> = (1..=f)
        .map(|t| {
            lhs += seq.get(t);
            rhs += e.get(t) as isize - 1;
            lhs as isize == rhs
        })
        .collect();

    let sum_is_2m = seq.sum() == 2 * m;
    let feasible = sum_is_2m && partial_sum_ok.iter().all(|&ok| ok);
    FeasibilityReport {
        sum_is_2m,
        ferrers_index: f,
        partial_sum_ok,
        leading_is_full: n >= 1 && seq.get(1) == n - 1,
        no_isolated: n >= 1 && seq.get(n) >= 1,
        feasible,
    }
}

/// Checks the frame and conditions for the size implied by the degree sum.
pub(crate) fn require_hypotheses(seq: &DegreeSequence) -> Result<usize> {
    let total = seq.sum();
    if !total.is_multiple_of(2) {
        return Err(Error::Infeasible(format!(
            "{seq}: degree sum {total} is odd"
        )));
    }
    let m = total / 2;
    let report = check_feasible(seq, m);
    if !report.hypotheses_hold() {
        return Err(Error::Infeasible(report.describe_failure(seq, m)));
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncrementCase {
    /// `2 <= g <= f`, second index `h = d_g + 2`.
    CaseOne,
    /// `g = f + 1`, second index `h = f + 2`.
    CaseTwo,
}

/// Which two positions an increment raised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncrementTrace {
    pub g: usize,
    pub h: usize,
    pub case_taken: IncrementCase,
}

fn invariant(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolated(what()))
    }
}

/// Raises two entries of a feasible sequence by one each so that the result
/// is feasible for size `m + 1`.
pub fn increment(seq: &DegreeSequence) -> Result<(DegreeSequence, IncrementTrace)> {
    let n = seq.len();
    if n >= 2 && seq.sum() == n * (n - 1) {
        return Err(Error::CompleteSequence);
    }
    let m = require_hypotheses(seq)?;
    let e = e_vector(seq);
    let f = ferrers_index(seq);

    invariant(f < n - 1, || format!("{seq}: f = {f} not below n - 1"))?;
    let g = (1..=n)
        .find(|&i| seq.get(i) < n - 1)
        .ok_or_else(|| Error::InvariantViolated(format!("{seq}: every degree is n - 1")))?;
    invariant((2..=f + 1).contains(&g), || {
        format!("{seq}: g = {g} outside 2..={}", f + 1)
    })?;

    let (h, case_taken) = if g <= f {
        let h = seq.get(g) + 2;
        invariant(e.get(g) == h - 1, || {
            format!("{seq}: e_g = {} but h - 1 = {}", e.get(g), h - 1)
        })?;
        invariant(seq.get(h) == g - 1, || {
            format!("{seq}: d_h = {} but g - 1 = {}", seq.get(h), g - 1)
        })?;
        (h, IncrementCase::CaseOne)
    } else {
        invariant((g..=n).all(|i| seq.get(i) == g - 1), || {
            format!("{seq}: tail from g = {g} is not constant g - 1")
        })?;
        (f + 2, IncrementCase::CaseTwo)
    };

    let mut values = seq.values.clone();
    values[g - 1] += 1;
    values[h - 1] += 1;
    let next = DegreeSequence::new(values)
        .map_err(|err| Error::InvariantViolated(format!("{seq} -> {err}")))?;

    let report = check_feasible(&next, m + 1);
    invariant(report.hypotheses_hold(), || {
        format!("{seq} -> {next}: {}", report.describe_failure(&next, m + 1))
    })?;
    let f_next = report.ferrers_index;
    match case_taken {
        IncrementCase::CaseOne => invariant(f_next <= f, || {
            format!("{seq} -> {next}: f grew from {f} to {f_next}")
        })?,
        IncrementCase::CaseTwo => invariant(f_next == f + 1, || {
            format!(
                "{seq} -> {next}: f went from {f} to {f_next}, expected {}",
                f + 1
            )
        })?,
    }

    Ok((next, IncrementTrace { g, h, case_taken }))
}

/// The star sequence `(n-1, 1, ..., 1)`.
pub fn initial_sequence(n: usize) -> Result<DegreeSequence> {
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let mut values = vec![1; n];
    values[0] = n - 1;
    DegreeSequence::new(values)
}
