//! Exhaustive search for an equitable tree-k-coloring.
//!
//! Vertices are colored in id order. Colors are opened in order of first use
//! (vertex 0 always gets color 0), class sizes are capped at the forced
//! multiset (`n mod k` classes of `ceil(n/k)`, the rest `floor(n/k)`), and a
//! rollback union-find rejects a color the moment it would close a cycle.
//! The first solution in this canonical order is returned, whether the
//! search runs sequentially or splits its top levels across threads.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use super::Coloring;
use crate::dsu::RollbackUnionFind;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Result of a search that may be cut short by a deadline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(Coloring),
    Infeasible,
    TimedOut,
}

impl SolveOutcome {
    pub fn into_option(self) -> Option<Coloring> {
        match self {
            SolveOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// First equitable tree-k-coloring in canonical search order, if any.
pub fn exact_solve(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    Ok(exact_solve_with_deadline(g, k, None)?.into_option())
}

/// Same answer as [`exact_solve`], always on the calling thread.
pub fn exact_solve_sequential(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    check_k(k)?;
    let stop = Stop::new(None);
    let mut search = Search::new(g, k, &stop, None);
    Ok(match search.dfs() {
        Step::Found => Some(search.into_coloring()),
        _ => None,
    })
}

/// Exhaustive search that gives up once `deadline` has passed.
pub fn exact_solve_with_deadline(g: &Graph, k: usize, deadline: Option<Instant>) -> Result<SolveOutcome> {
    check_k(k)?;
    let stop = Stop::new(deadline);
    let prefixes = frontier(g, k, &stop);
    let best = AtomicUsize::new(usize::MAX);
    let run = |(index, prefix): (usize, &Vec<usize>)| -> (Step, Option<Coloring>) {
        let mut search = Search::new(g, k, &stop, Some((&best, index)));
        for &c in prefix {
            search.push(c).expect("frontier prefixes are valid partial colorings");
        }
        let step = search.dfs();
        if step == Step::Found {
            best.fetch_min(index, Ordering::SeqCst);
            (step, Some(search.into_coloring()))
        } else {
            (step, None)
        }
    };

    #[cfg(feature = "parallel")]
    let results: Vec<(Step, Option<Coloring>)> = {
        use rayon::prelude::*;
        prefixes.par_iter().enumerate().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<(Step, Option<Coloring>)> = {
        let mut out = Vec::with_capacity(prefixes.len());
        for item in prefixes.iter().enumerate() {
            let r = run(item);
            let done = r.0 != Step::Exhausted;
            out.push(r);
            if done {
                break;
            }
        }
        out
    };

    if stop.timed_out() && prefixes.is_empty() {
        return Ok(SolveOutcome::TimedOut);
    }
    for (step, coloring) in results {
        match step {
            Step::Found => return Ok(SolveOutcome::Found(coloring.expect("found carries a coloring"))),
            Step::Exhausted => {}
            // A branch is only cancelled after a lower branch succeeded,
            // which would have returned above.
            Step::Stopped => return Ok(SolveOutcome::TimedOut),
        }
    }
    Ok(SolveOutcome::Infeasible)
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::Argument("number of colors k must be at least 1".into()));
    }
    Ok(())
}

/// Number of independent subtrees to hand to the thread pool.
const FRONTIER_TARGET: usize = 256;

/// Valid partial colorings at a common depth, in canonical order, such that
/// every solution extends exactly one of them.
fn frontier(g: &Graph, k: usize, stop: &Stop) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    let mut depth = 0;
    while depth < n && level.len() < FRONTIER_TARGET && !level.is_empty() {
        if stop.check_deadline() {
            return Vec::new();
        }
        let mut next = Vec::new();
        for prefix in &level {
            let mut search = Search::new(g, k, stop, None);
            for &c in prefix {
                search.push(c).expect("prefix was validated when generated");
            }
            for c in 0..search.open_limit() {
                if let Some(undo) = search.push(c) {
                    next.push(search.colors.clone());
                    search.pop(undo);
                }
            }
        }
        level = next;
        depth += 1;
    }
    level
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Stopped,
}

struct Stop {
    deadline: Option<Instant>,
    expired: AtomicBool,
}

impl Stop {
    fn new(deadline: Option<Instant>) -> Self {
        Stop {
            deadline,
            expired: AtomicBool::new(false),
        }
    }

    fn check_deadline(&self) -> bool {
        if self.expired.load(Ordering::Relaxed) {
            return true;
        }
        match self.deadline {
            Some(d) if Instant::now() >= d => {
                self.expired.store(true, Ordering::Relaxed);
                true
            }
            _ => false,
        }
    }

    fn timed_out(&self) -> bool {
        self.expired.load(Ordering::Relaxed)
    }
}

struct Undo {
    checkpoint: usize,
    opened: bool,
    became_large: bool,
    filled_deficit: bool,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    /// floor(n / k)
    base: usize,
    /// number of classes allowed to reach base + 1
    large_allowed: usize,
    colors: Vec<usize>,
    sizes: Vec<usize>,
    opened: usize,
    large: usize,
    /// vertices still needed to bring every class up to `base`
    deficit: usize,
    uf: RollbackUnionFind,
    nodes: u64,
    stop: &'a Stop,
    /// (lowest successful branch so far, this branch's index)
    race: Option<(&'a AtomicUsize, usize)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, stop: &'a Stop, race: Option<(&'a AtomicUsize, usize)>) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            k,
            base: n / k,
            large_allowed: n % k,
            colors: Vec::with_capacity(n),
            sizes: vec![0; k],
            opened: 0,
            large: 0,
            deficit: (n / k) * k,
            uf: RollbackUnionFind::new(n),
            nodes: 0,
            stop,
            race,
        }
    }

    fn open_limit(&self) -> usize {
        (self.opened + 1).min(self.k)
    }

    /// Give the next vertex color `c`, or `None` if that breaks a size cap,
    /// closes a cycle, or leaves too few vertices to fill the classes.
    fn push(&mut self, c: usize) -> Option<Undo> {
        let v = self.colors.len();
        let size = self.sizes[c];
        let became_large = size == self.base;
        if size > self.base || (became_large && self.large == self.large_allowed) {
            return None;
        }
        let checkpoint = self.uf.checkpoint();
        for &u in self.g.neighbors(v).iter().take_while(|&&u| u < v) {
            if self.colors[u] == c && !self.uf.union(u, v) {
                self.uf.rollback(checkpoint);
                return None;
            }
        }
        let undo = Undo {
            checkpoint,
            opened: c == self.opened,
            became_large,
            filled_deficit: size < self.base,
        };
        self.colors.push(c);
        self.sizes[c] += 1;
        self.opened += undo.opened as usize;
        self.large += undo.became_large as usize;
        self.deficit -= undo.filled_deficit as usize;
        if self.deficit > self.g.vertex_count() - self.colors.len() {
            self.pop(undo);
            return None;
        }
        Some(undo)
    }

    fn pop(&mut self, undo: Undo) {
        let c = self.colors.pop().expect("pop follows push");
        self.sizes[c] -= 1;
        self.opened -= undo.opened as usize;
        self.large -= undo.became_large as usize;
        self.deficit += undo.filled_deficit as usize;
        self.uf.rollback(undo.checkpoint);
    }

    fn should_stop(&self) -> bool {
        if let Some((best, index)) = self.race {
            if best.load(Ordering::Relaxed) < index {
                return true;
            }
        }
        self.stop.check_deadline()
    }

    fn dfs(&mut self) -> Step {
        if self.colors.len() == self.g.vertex_count() {
            return Step::Found;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.should_stop() {
            return Step::Stopped;
        }
        for c in 0..self.open_limit() {
            if let Some(undo) = self.push(c) {
                match self.dfs() {
                    Step::Exhausted => self.pop(undo),
                    other => return other,
                }
            }
        }
        Step::Exhausted
    }

    fn into_coloring(self) -> Coloring {
        Coloring::new(self.colors, self.k).expect("search only assigns colors below k")
    }
}
