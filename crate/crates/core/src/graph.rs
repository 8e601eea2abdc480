//! Interval representations, the graphs they induce, and the structural
//! primitives (orders, cliques, forests, stars) the rest of the crate uses.

use crate::coloring::Coloring;
use crate::dsu::RollbackUnionFind;
use crate::error::{Error, Result};

/// A closed interval `[left, right]` with integer endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Self {
        Interval { left, right }
    }

    /// Closed intervals that merely touch at an endpoint intersect.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }

    /// `self` contains `other` and the two are not the same interval.
    pub fn strictly_contains(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right && self != other
    }
}

/// Interval model of a graph: vertex `v` is represented by `intervals[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalRep {
    intervals: Vec<Interval>,
}

impl IntervalRep {
    /// Build from `(vertex_id, left, right)` entries in any order. The ids
    /// must be exactly `0..n` and every entry must satisfy `left <= right`.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, i64)>,
    {
        let entries: Vec<_> = entries.into_iter().collect();
        let n = entries.len();
        let mut slots: Vec<Option<Interval>> = vec![None; n];
        for (index, &(vertex, left, right)) in entries.iter().enumerate() {
            let bad = |reason: String| Error::Representation {
                index,
                vertex,
                reason,
            };
            if left > right {
                return Err(bad(format!("left endpoint {left} exceeds right endpoint {right}")));
            }
            if vertex >= n {
                return Err(bad(format!("vertex id out of range 0..{n}")));
            }
            if slots[vertex].is_some() {
                return Err(bad("duplicate vertex id".to_string()));
            }
            slots[vertex] = Some(Interval::new(left, right));
        }
        // n entries with distinct ids in 0..n cover every slot
        let intervals = slots.into_iter().map(|s| s.expect("ids are a permutation")).collect();
        Ok(IntervalRep { intervals })
    }

    /// Intervals given in vertex-id order.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::new(pairs.into_iter().enumerate().map(|(v, (l, r))| (v, l, r)))
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// `(vertex_id, interval)` pairs in id order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Interval)> + '_ {
        self.intervals.iter().copied().enumerate()
    }
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Rejects self-loops, out-of-range endpoints and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!("edge {u}-{v} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Argument(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Argument(format!("duplicate edge {u}-{}", w[0])));
            }
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }
}

/// A total order on the vertices, stored as the sorted vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    permutation: Vec<usize>,
}

impl VertexOrder {
    pub fn new(permutation: Vec<usize>) -> Result<Self> {
        let n = permutation.len();
        let mut seen = vec![false; n];
        for &v in &permutation {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Argument(format!("order is not a permutation of 0..{n} (at vertex {v})")));
            }
        }
        Ok(VertexOrder { permutation })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.permutation
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }
}

/// Intersection graph of the representation.
///
/// Sweeps the intervals in left-endpoint order: for each interval only the
/// later intervals starting at or before its right endpoint are visited, so
/// the cost is `O(n log n + m)`.
pub fn derive_graph(rep: &IntervalRep) -> Graph {
    let order = sorted_vertices(rep);
    let mut adjacency = vec![Vec::new(); rep.len()];
    let mut edge_count = 0;
    for (p, &u) in order.iter().enumerate() {
        let reach = rep.interval(u).right;
        for &v in order[p + 1..].iter().take_while(|&&v| rep.interval(v).left <= reach) {
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Graph {
        adjacency,
        edge_count,
    }
}

fn sorted_vertices(rep: &IntervalRep) -> Vec<usize> {
    let mut order: Vec<usize> = (0..rep.len()).collect();
    order.sort_unstable_by_key(|&v| {
        let t = rep.interval(v);
        (t.left, t.right, v)
    });
    order
}

/// Vertices sorted by `(left, right, id)`. Any interval representation
/// sorted this way satisfies the umbrella property checked by [`verify_order`].
pub fn interval_order(rep: &IntervalRep) -> VertexOrder {
    VertexOrder {
        permutation: sorted_vertices(rep),
    }
}

/// Brute-force check of the umbrella property: for positions `p < q < r`,
/// an edge between the vertices at `p` and `r` forces an edge between `p`
/// and `q`. `O(n^3)`; a test oracle only.
pub fn verify_order(g: &Graph, order: &VertexOrder) -> Result<bool> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(Error::Argument(format!(
            "order has {} vertices but the graph has {n}",
            order.len()
        )));
    }
    let perm = order.as_slice();
    let mut adj = vec![false; n * n];
    for (u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    for p in 0..n {
        for r in p + 2..n {
            if !adj[perm[p] * n + perm[r]] {
                continue;
            }
            if (p + 1..r).any(|q| !adj[perm[p] * n + perm[q]]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First strict containment `(outer, inner)` found, if any.
///
/// Sorting by `(left asc, right desc)` puts every container before what it
/// contains, so tracking the earliest interval with the largest right
/// endpoint seen so far finds a containment whenever one exists.
pub fn find_containment(rep: &IntervalRep) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..rep.len()).collect();
    order.sort_unstable_by_key(|&v| {
        let t = rep.interval(v);
        (t.left, std::cmp::Reverse(t.right), v)
    });
    let mut widest: Option<usize> = None;
    for &v in &order {
        let t = rep.interval(v);
        if let Some(w) = widest {
            let tw = rep.interval(w);
            if tw.strictly_contains(&t) {
                return Some((w, v));
            }
            if tw.right >= t.right {
                continue;
            }
        }
        widest = Some(v);
    }
    None
}

/// No interval strictly contains another. Identical intervals are allowed.
pub fn is_proper_representation(rep: &IntervalRep) -> bool {
    find_containment(rep).is_none()
}

/// Clique number of the interval graph: the largest number of intervals
/// sharing a common point. At equal coordinates left endpoints are counted
/// before right endpoints because closed intervals touching at a point
/// intersect.
pub fn max_clique_sweep(rep: &IntervalRep) -> usize {
    let mut events: Vec<(i64, u8)> = Vec::with_capacity(2 * rep.len());
    for t in rep.intervals() {
        events.push((t.left, 0));
        events.push((t.right, 1));
    }
    events.sort_unstable();
    let (mut open, mut best) = (0usize, 0usize);
    for (_, kind) in events {
        if kind == 0 {
            open += 1;
            best = best.max(open);
        } else {
            open -= 1;
        }
    }
    best
}

/// First edge (in [`Graph::edges`] order) whose endpoints share a color and
/// are already connected inside that color class.
pub fn monochromatic_cycle_edge(g: &Graph, coloring: &Coloring) -> Result<Option<(usize, usize)>> {
    check_covers(g, coloring)?;
    let mut uf = RollbackUnionFind::new(g.vertex_count());
    for (u, v) in g.edges() {
        if coloring.color(u) == coloring.color(v) && !uf.union(u, v) {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

/// Every color class induces a forest.
pub fn color_classes_are_forests(g: &Graph, coloring: &Coloring) -> Result<bool> {
    Ok(monochromatic_cycle_edge(g, coloring)?.is_none())
}

pub(crate) fn check_covers(g: &Graph, coloring: &Coloring) -> Result<()> {
    if coloring.len() != g.vertex_count() {
        return Err(Error::Argument(format!(
            "coloring assigns {} vertices but the graph has {}",
            coloring.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// No vertex has `r` pairwise non-adjacent neighbors, i.e. the graph has no
/// induced `K_{1,r}`. Exhaustive over neighborhood subsets; test scale only.
pub fn is_star_free(g: &Graph, r: usize) -> Result<bool> {
    if r < 1 {
        return Err(Error::Argument("star size r must be at least 1".into()));
    }
    let mut chosen = Vec::with_capacity(r);
    for v in 0..g.vertex_count() {
        if has_independent_subset(g, g.neighbors(v), r, &mut chosen) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_independent_subset(g: &Graph, candidates: &[usize], need: usize, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    for (i, &c) in candidates.iter().enumerate() {
        if candidates.len() - i < need {
            break;
        }
        if chosen.iter().any(|&x| g.has_edge(x, c)) {
            continue;
        }
        chosen.push(c);
        let found = has_independent_subset(g, &candidates[i + 1..], need - 1, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}
