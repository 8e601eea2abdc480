//! Bin-packing instances and the two graph gadgets that encode them: a
//! disjoint union of split graphs, and an interval graph with bounded
//! clique size. Each gadget comes with maps in both directions between
//! packings and equitable tree-colorings.

mod binpacking;
mod random;

pub use binpacking::{solve_bin_packing, BinPackingInstance, Packing};
pub use random::gen_random_interval;

use crate::coloring::{verify_equitable_tree_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{derive_graph, Graph, IntervalRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Split,
    Interval,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Split => "split",
            GadgetKind::Interval => "interval",
        }
    }
}

/// One split component `K_{2k-1} + (a+1) K_1`: a clique joined to an
/// independent set. `center` is the clique vertex colored like the
/// independent set in the packing-to-coloring map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPart {
    pub center: usize,
    /// The `2k - 2` clique vertices other than `center`.
    pub clique_rest: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPart {
    pub fn clique(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.center).chain(self.clique_rest.iter().copied())
    }
}

/// One interval component for an item of size `a`: cliques `q[i]`,
/// `q_prime[i]` of size `2k - 1` and connector vertices `y[i]`, where
/// `y[i]` is joined to `q[i]`, `q_prime[i]` and, except for the last, `q[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPart {
    pub q: Vec<Vec<usize>>,
    pub q_prime: Vec<Vec<usize>>,
    pub y: Vec<usize>,
}

impl IntervalPart {
    /// The `3a - 1` maximal cliques in their consecutive order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let a = self.y.len();
        let mut out = Vec::with_capacity(3 * a);
        for i in 0..a {
            let with_y = |clique: &Vec<usize>| {
                let mut m = clique.clone();
                m.push(self.y[i]);
                m.sort_unstable();
                m
            };
            out.push(with_y(&self.q[i]));
            out.push(with_y(&self.q_prime[i]));
            if i + 1 < a {
                out.push(with_y(&self.q[i + 1]));
            }
        }
        out
    }

    fn cliques(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.q.iter().zip(&self.q_prime).flat_map(|(q, qp)| [q, qp])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetParts {
    Split(Vec<SplitPart>),
    Interval(Vec<IntervalPart>),
}

/// A gadget graph with its parts labeled per item, plus the interval
/// model when the gadget is an interval graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetLayout {
    instance: BinPackingInstance,
    graph: Graph,
    rep: Option<IntervalRep>,
    parts: GadgetParts,
}

impl GadgetLayout {
    pub fn kind(&self) -> GadgetKind {
        match self.parts {
            GadgetParts::Split(_) => GadgetKind::Split,
            GadgetParts::Interval(_) => GadgetKind::Interval,
        }
    }

    pub fn instance(&self) -> &BinPackingInstance {
        &self.instance
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rep(&self) -> Option<&IntervalRep> {
        self.rep.as_ref()
    }

    pub fn parts(&self) -> &GadgetParts {
        &self.parts
    }

    /// Named vertex groups, partitioning the vertex set.
    pub fn labels(&self) -> Vec<(String, Vec<usize>)> {
        let mut out = Vec::new();
        match &self.parts {
            GadgetParts::Split(parts) => {
                for (j, p) in parts.iter().enumerate() {
                    out.push((format!("item{j}.center"), vec![p.center]));
                    out.push((format!("item{j}.clique"), p.clique_rest.clone()));
                    out.push((format!("item{j}.independent"), p.independent.clone()));
                }
            }
            GadgetParts::Interval(parts) => {
                for (j, p) in parts.iter().enumerate() {
                    for i in 0..p.y.len() {
                        out.push((format!("item{j}.q{i}"), p.q[i].clone()));
                        out.push((format!("item{j}.qp{i}"), p.q_prime[i].clone()));
                        out.push((format!("item{j}.y{i}"), vec![p.y[i]]));
                    }
                }
            }
        }
        out
    }

    /// Edges implied by the labels alone.
    fn labeled_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        let clique = |vs: &[usize], edges: &mut Vec<(usize, usize)>| {
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    edges.push((u, v));
                }
            }
        };
        match &self.parts {
            GadgetParts::Split(parts) => {
                for p in parts {
                    let members: Vec<usize> = p.clique().collect();
                    clique(&members, &mut edges);
                    for &u in &members {
                        for &v in &p.independent {
                            edges.push((u, v));
                        }
                    }
                }
            }
            GadgetParts::Interval(parts) => {
                for p in parts {
                    for q in p.cliques() {
                        clique(q, &mut edges);
                    }
                    let a = p.y.len();
                    for (i, &y) in p.y.iter().enumerate() {
                        let mut joined = vec![&p.q[i], &p.q_prime[i]];
                        if i + 1 < a {
                            joined.push(&p.q[i + 1]);
                        }
                        for q in joined {
                            edges.extend(q.iter().map(|&v| (y, v)));
                        }
                    }
                }
            }
        }
        edges
    }

    /// Labels partition the vertices, the graph is exactly the label-implied
    /// graph, and the interval model (if any) induces the same graph.
    pub fn check_well_formed(&self) -> Result<()> {
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n];
        for (name, vs) in self.labels() {
            for v in vs {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Construction(format!("label {name} repeats or overflows vertex {v}")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Construction(format!("vertex {v} carries no label")));
        }
        let labeled = Graph::from_edges(n, self.labeled_edges())
            .map_err(|e| Error::Construction(format!("labels imply an invalid graph: {e}")))?;
        if labeled != self.graph {
            return Err(Error::Construction("graph edges differ from label-implied edges".into()));
        }
        if let Some(rep) = &self.rep {
            if derive_graph(rep) != self.graph {
                return Err(Error::Construction(
                    "interval model induces a different graph than the labels".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Disjoint union over items of `K_{2k-1}` joined to `a_j + 1` independent
/// vertices. Per component the clique comes first (its lowest vertex is the
/// center), then the independent set. `|V| = k (2n + B)`.
pub fn build_split_gadget(inst: &BinPackingInstance) -> Result<GadgetLayout> {
    let k = inst.bins();
    let mut next = 0;
    let mut take = |count: usize| {
        let vs: Vec<usize> = (next..next + count).collect();
        next += count;
        vs
    };
    let parts: Vec<SplitPart> = inst
        .items()
        .iter()
        .map(|&a| {
            let clique = take(2 * k - 1);
            SplitPart {
                center: clique[0],
                clique_rest: clique[1..].to_vec(),
                independent: take(a + 1),
            }
        })
        .collect();
    assemble(inst, next, None, GadgetParts::Split(parts))
}

const PERIOD: i64 = 60;

/// Disjoint union over items of the interval component for `a_j`, built both
/// from labels and from explicit coordinates (per unit `t = 1..=a`, shifted
/// per component): `q ← [60t-50, 60t-40]`, `q' ← [60t-30, 60t-20]`,
/// `y ← [60t-45, 60t+12]`, except the last `y ← [60a-45, 60a-25]`.
/// The two must induce the same graph. `|V| = k (4k - 1) B`.
pub fn build_interval_gadget(inst: &BinPackingInstance) -> Result<GadgetLayout> {
    let k = inst.bins();
    let clique_size = 2 * k - 1;
    let mut intervals: Vec<(i64, i64)> = Vec::new();
    let mut parts = Vec::with_capacity(inst.items().len());
    let mut offset: i64 = 0;
    for &a in inst.items() {
        let mut part = IntervalPart {
            q: Vec::with_capacity(a),
            q_prime: Vec::with_capacity(a),
            y: Vec::with_capacity(a),
        };
        let block = |count: usize, left: i64, right: i64, intervals: &mut Vec<(i64, i64)>| {
            let start = intervals.len();
            intervals.extend(std::iter::repeat_n((offset + left, offset + right), count));
            (start..intervals.len()).collect::<Vec<_>>()
        };
        for t in 1..=a as i64 {
            let base = PERIOD * t;
            part.q.push(block(clique_size, base - 50, base - 40, &mut intervals));
            part.q_prime.push(block(clique_size, base - 30, base - 20, &mut intervals));
            let y_right = if t < a as i64 { base + 12 } else { base - 25 };
            part.y.push(block(1, base - 45, y_right, &mut intervals)[0]);
        }
        parts.push(part);
        offset += PERIOD * a as i64 + PERIOD;
    }
    let n = intervals.len();
    let rep = IntervalRep::from_pairs(intervals)?;
    assemble(inst, n, Some(rep), GadgetParts::Interval(parts))
}

fn assemble(inst: &BinPackingInstance, n: usize, rep: Option<IntervalRep>, parts: GadgetParts) -> Result<GadgetLayout> {
    let mut layout = GadgetLayout {
        instance: inst.clone(),
        graph: Graph::empty(n),
        rep,
        parts,
    };
    layout.graph = Graph::from_edges(n, layout.labeled_edges())?;
    layout.check_well_formed()?;
    Ok(layout)
}

/// Checks, per interval component, that the listed cliques are maximal
/// cliques of the graph, that there are `3a - 1` distinct ones covering
/// every edge, and that the cliques containing any vertex are consecutive.
pub fn verify_maximal_clique_order(layout: &GadgetLayout) -> Result<bool> {
    let GadgetParts::Interval(parts) = &layout.parts else {
        return Err(Error::Argument("maximal-clique ordering applies to interval gadgets only".into()));
    };
    let g = &layout.graph;
    for part in parts {
        let cliques = part.maximal_cliques();
        let a = part.y.len();
        let mut distinct = cliques.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != 3 * a - 1 || cliques.len() != 3 * a - 1 {
            return Ok(false);
        }
        for m in &cliques {
            if !is_maximal_clique(g, m) {
                return Ok(false);
            }
        }
        let members: Vec<usize> = part.cliques().flatten().copied().chain(part.y.iter().copied()).collect();
        for &u in &members {
            for &v in g.neighbors(u) {
                if !cliques.iter().any(|m| m.contains(&u) && m.contains(&v)) {
                    return Ok(false);
                }
            }
        }
        for &v in &members {
            let hits: Vec<usize> = (0..cliques.len()).filter(|&i| cliques[i].contains(&v)).collect();
            if hits.is_empty() || hits.windows(2).any(|w| w[1] != w[0] + 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn is_maximal_clique(g: &Graph, m: &[usize]) -> bool {
    let is_clique = m
        .iter()
        .enumerate()
        .all(|(i, &u)| m[i + 1..].iter().all(|&v| g.has_edge(u, v)));
    let extendable = m
        .first()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .any(|&w| !m.contains(&w) && m.iter().all(|&x| g.has_edge(x, w)))
        })
        .unwrap_or(false);
    is_clique && !extendable
}

/// Turns a solution of the gadget's instance into an equitable
/// tree-k-coloring of the gadget.
///
/// An item in bin `i` gets color `i` on its independent set and center
/// (split) or on its connector vertices (interval). Every clique of the
/// component then uses each other color exactly twice, and color `i` once
/// in the interval cliques.
pub fn coloring_from_packing(layout: &GadgetLayout, packing: &Packing) -> Result<Coloring> {
    let inst = &layout.instance;
    let bin_of = packing.check_solves(inst)?;
    let k = inst.bins();
    let mut colors = vec![usize::MAX; layout.graph.vertex_count()];
    // the other colors, each twice
    let paired = |own: usize| -> Vec<usize> { (0..k).filter(|&c| c != own).flat_map(|c| [c, c]).collect() };
    match &layout.parts {
        GadgetParts::Split(parts) => {
            for (j, p) in parts.iter().enumerate() {
                let own = bin_of[j];
                colors[p.center] = own;
                for &v in &p.independent {
                    colors[v] = own;
                }
                for (&v, c) in p.clique_rest.iter().zip(paired(own)) {
                    colors[v] = c;
                }
            }
        }
        GadgetParts::Interval(parts) => {
            for (j, p) in parts.iter().enumerate() {
                let own = bin_of[j];
                for &y in &p.y {
                    colors[y] = own;
                }
                for q in p.cliques() {
                    colors[q[0]] = own;
                    for (&v, c) in q[1..].iter().zip(paired(own)) {
                        colors[v] = c;
                    }
                }
            }
        }
    }
    debug_assert!(colors.iter().all(|&c| c < k));
    Coloring::new(colors, k)
}

/// Reads a packing back off an equitable tree-k-coloring of the gadget:
/// item `j` goes to the bin named by the common color of its independent
/// set (split) or connector vertices (interval).
pub fn packing_from_coloring(layout: &GadgetLayout, c: &Coloring) -> Result<Packing> {
    let inst = &layout.instance;
    let k = inst.bins();
    if c.k() != k {
        return Err(Error::Argument(format!("coloring uses k = {}, instance has k = {k}", c.k())));
    }
    let verdict = verify_equitable_tree_coloring(&layout.graph, c)?;
    if let Some(failure) = verdict.failure() {
        return Err(Error::Argument(format!("not an equitable tree-coloring: {failure}")));
    }
    let forced: Vec<&[usize]> = match &layout.parts {
        GadgetParts::Split(parts) => parts.iter().map(|p| p.independent.as_slice()).collect(),
        GadgetParts::Interval(parts) => parts.iter().map(|p| p.y.as_slice()).collect(),
    };
    let mut bins = vec![Vec::new(); k];
    for (j, group) in forced.iter().enumerate() {
        let color = c.color(group[0]);
        if let Some(&v) = group.iter().find(|&&v| c.color(v) != color) {
            return Err(Error::Consistency(format!(
                "item {j}: vertex {v} has color {} but its group is forced to color {color}",
                c.color(v)
            )));
        }
        bins[color].push(j);
    }
    let packing = Packing::new(bins);
    let loads = packing.loads(inst);
    if let Some((i, load)) = loads.iter().enumerate().find(|&(_, &l)| l != inst.capacity()) {
        return Err(Error::Consistency(format!(
            "bin {i} recovered with load {load}, capacity is {}",
            inst.capacity()
        )));
    }
    Ok(packing)
}
