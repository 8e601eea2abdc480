//! Equitable tree-colorings: the verifier, the round-robin construction along
//! an interval order, and the decision procedure for proper interval graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph, IntervalRep};

mod exact;

pub use exact::{exact_solve, exact_solve_sequential, exact_solve_with_deadline, SolveOutcome};

/// Vertex to color map with colors in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::Argument("number of colors k must be at least 1".into()));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::Argument(format!("vertex {v} has color {c}, outside 0..{k}")));
        }
        Ok(Coloring { colors, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Size of every class, indexed by color. Empty classes count as 0.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// Vertices of every class in increasing order, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    None,
    MonochromaticCycle,
    Imbalance,
    Uncolored,
}

impl std::fmt::Display for FailureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FailureKind::None => "none",
            FailureKind::MonochromaticCycle => "monochromatic_cycle",
            FailureKind::Imbalance => "imbalance",
            FailureKind::Uncolored => "uncolored",
        })
    }
}

/// Why a coloring is not an equitable tree-coloring, with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// `edge` closes a cycle inside one color class.
    MonochromaticCycle { edge: (usize, usize), color: usize },
    /// `classes.0` is a largest class and `classes.1` a smallest; their
    /// sizes differ by at least two.
    Imbalance {
        classes: (usize, usize),
        sizes: (usize, usize),
    },
    Uncolored { vertex: usize },
}

impl Failure {
    pub fn kind(&self) -> FailureKind {
        match self {
            Failure::MonochromaticCycle { .. } => FailureKind::MonochromaticCycle,
            Failure::Imbalance { .. } => FailureKind::Imbalance,
            Failure::Uncolored { .. } => FailureKind::Uncolored,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Failure::MonochromaticCycle { edge: (u, v), color } => {
                write!(f, "edge {u}-{v} closes a cycle in color class {color}")
            }
            Failure::Imbalance {
                classes: (a, b),
                sizes: (sa, sb),
            } => write!(f, "color classes {a} and {b} have sizes {sa} and {sb}"),
            Failure::Uncolored { vertex } => write!(f, "vertex {vertex} has no color"),
        }
    }
}

/// Outcome of [`verify_equitable_tree_coloring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    failure: Option<Failure>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<Failure> {
        self.failure
    }

    pub fn kind(&self) -> FailureKind {
        self.failure.map_or(FailureKind::None, |f| f.kind())
    }
}

/// Checks both conditions: any two class sizes differ by at most one, and
/// every color class induces a forest. Checked in that order; a coloring
/// shorter than the graph reports the first uncolored vertex.
pub fn verify_equitable_tree_coloring(g: &Graph, c: &Coloring) -> Result<Verdict> {
    let n = g.vertex_count();
    if c.len() > n {
        return Err(Error::Argument(format!("coloring assigns {} vertices but the graph has {n}", c.len())));
    }
    if c.len() < n {
        return Ok(Verdict {
            failure: Some(Failure::Uncolored { vertex: c.len() }),
        });
    }
    let sizes = c.class_sizes();
    let largest = argmax(&sizes);
    let smallest = argmin(&sizes);
    if sizes[largest] > sizes[smallest] + 1 {
        return Ok(Verdict {
            failure: Some(Failure::Imbalance {
                classes: (largest, smallest),
                sizes: (sizes[largest], sizes[smallest]),
            }),
        });
    }
    if let Some((u, v)) = graph::monochromatic_cycle_edge(g, c)? {
        return Ok(Verdict {
            failure: Some(Failure::MonochromaticCycle {
                edge: (u, v),
                color: c.color(u),
            }),
        });
    }
    Ok(Verdict { failure: None })
}

fn argmax(xs: &[usize]) -> usize {
    (0..xs.len()).fold(0, |best, i| if xs[i] > xs[best] { i } else { best })
}

fn argmin(xs: &[usize]) -> usize {
    (0..xs.len()).fold(0, |best, i| if xs[i] < xs[best] { i } else { best })
}

/// Smallest `k` for which the round-robin coloring of any interval graph of
/// maximum degree `max_degree` is guaranteed to work: `ceil((Δ + 1) / 2)`.
pub fn guaranteed_threshold(max_degree: usize) -> usize {
    (max_degree + 2) / 2
}

/// Colors the `p`-th vertex of the interval order with `p mod k`.
///
/// Always equitable. Each class is a forest whenever
/// `k >= guaranteed_threshold(Δ)`; below that the coloring is returned
/// anyway and the verifier decides.
pub fn round_robin_color(rep: &IntervalRep, k: usize) -> Result<Coloring> {
    if k < 1 {
        return Err(Error::Argument("number of colors k must be at least 1".into()));
    }
    let order = graph::interval_order(rep);
    let mut colors = vec![0; rep.len()];
    for (p, &v) in order.as_slice().iter().enumerate() {
        colors[v] = p % k;
    }
    Coloring::new(colors, k)
}

/// Answer of [`decide_proper_interval`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperDecision {
    pub answer: bool,
    /// The round-robin coloring, present exactly when `answer` is true.
    pub certificate: Option<Coloring>,
    pub clique_number: usize,
}

/// Decides whether a proper interval graph has an equitable tree-k-coloring.
///
/// Colors round-robin along the interval order and looks for a
/// monochromatic cycle; the answer is YES iff there is none. The clique
/// bound `ω <= 2k` is computed independently and must agree with the scan.
pub fn decide_proper_interval(rep: &IntervalRep, k: usize) -> Result<ProperDecision> {
    if k < 1 {
        return Err(Error::Argument("number of colors k must be at least 1".into()));
    }
    if let Some((outer, inner)) = graph::find_containment(rep) {
        return Err(Error::NotProper { outer, inner });
    }
    let g = graph::derive_graph(rep);
    let coloring = round_robin_color(rep, k)?;
    let cycle = graph::monochromatic_cycle_edge(&g, &coloring)?;
    let clique_number = graph::max_clique_sweep(rep);
    let answer = cycle.is_none();
    if answer != (clique_number <= 2 * k) {
        return Err(Error::Consistency(format!(
            "clique number {clique_number} with k = {k} disagrees with the cycle scan (cycle edge {cycle:?})"
        )));
    }
    Ok(ProperDecision {
        answer,
        certificate: answer.then_some(coloring),
        clique_number,
    })
}

/// Minimum number of colors admitting an equitable tree-coloring of a
/// proper interval graph: `ceil(ω / 2)`, and at least 1.
pub fn min_colors_proper(rep: &IntervalRep) -> Result<usize> {
    if let Some((outer, inner)) = graph::find_containment(rep) {
        return Err(Error::NotProper { outer, inner });
    }
    Ok(graph::max_clique_sweep(rep).div_ceil(2).max(1))
}
