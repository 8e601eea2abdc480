//! Brute-force oracles shared by the integration tests. None of these call
//! into the code paths they are used to check.
#![allow(dead_code)]

use eqtree::{Graph, IntervalRep};

pub fn equal_intervals(n: usize) -> IntervalRep {
    IntervalRep::from_pairs(vec![(0, 1); n]).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Adjacency straight from the pairwise intersection test.
#[allow(clippy::needless_range_loop)]
pub fn adjacency_matrix(rep: &IntervalRep) -> Vec<Vec<bool>> {
    let n = rep.len();
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            let (a, b) = (rep.interval(u), rep.interval(v));
            adj[u][v] = u != v && a.left.max(b.left) <= a.right.min(b.right);
        }
    }
    adj
}

pub fn graph_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Largest clique by scanning all `2^n` vertex subsets.
pub fn brute_force_clique_number(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || adj[u][v]))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Does the subgraph induced by `members` contain a cycle? Iterative DFS
/// looking for a non-tree edge.
pub fn induced_has_cycle(adj: &[Vec<bool>], members: &[usize]) -> bool {
    let n = adj.len();
    let mut inside = vec![false; n];
    for &v in members {
        inside[v] = true;
    }
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for &root in members {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if !adj[u][w] || !inside[w] || w == parent[u] {
                    continue;
                }
                if visited[w] {
                    return true;
                }
                visited[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    false
}

/// Equitable tree-coloring check written against the definition.
pub fn is_equitable_tree_coloring(adj: &[Vec<bool>], colors: &[usize], k: usize) -> bool {
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        if c >= k {
            return false;
        }
        classes[c].push(v);
    }
    let max = classes.iter().map(Vec::len).max().unwrap_or(0);
    let min = classes.iter().map(Vec::len).min().unwrap_or(0);
    max <= min + 1 && classes.iter().all(|c| !induced_has_cycle(adj, c))
}

/// Tries all `k^n` colorings. Tiny graphs only.
pub fn naive_coloring_exists(adj: &[Vec<bool>], k: usize) -> bool {
    let n = adj.len();
    let total = (k as u64).pow(n as u32);
    assert!(total <= 5_000_000, "naive oracle too large");
    (0..total).any(|mut code| {
        let colors: Vec<usize> = (0..n)
            .map(|_| {
                let c = (code % k as u64) as usize;
                code /= k as u64;
                c
            })
            .collect();
        is_equitable_tree_coloring(adj, &colors, k)
    })
}

/// All maximal cliques, Bron–Kerbosch with pivoting.
pub fn maximal_cliques(adj: &[Vec<bool>], within: &[usize]) -> Vec<Vec<usize>> {
    fn bk(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        let mut p = p;
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            bk(adj, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(adj, &mut Vec::new(), within.to_vec(), Vec::new(), &mut out);
    out.sort();
    out
}

/// Umbrella property over every triple of positions.
pub fn order_is_umbrella(adj: &[Vec<bool>], perm: &[usize]) -> bool {
    let n = perm.len();
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                if adj[perm[p]][perm[r]] && !adj[perm[p]][perm[q]] {
                    return false;
                }
            }
        }
    }
    true
}
