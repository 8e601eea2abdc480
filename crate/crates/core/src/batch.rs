//! Batch evaluation over many independent instances.
//!
//! With the `parallel` feature the per-instance work is spread over the
//! rayon pool; otherwise it runs in order on the calling thread. Output
//! order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::coloring::{self, decide_proper_interval, round_robin_color, verify_equitable_tree_coloring};
use crate::error::Result;
use crate::graph::{derive_graph, max_clique_sweep, monochromatic_cycle_edge, IntervalRep};

/// Apply `f` to every item, in parallel when the feature is enabled.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// Apply `f` to every item on the calling thread.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Round-robin coloring at the guaranteed threshold, checked by the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdCheck {
    pub vertices: usize,
    pub max_degree: usize,
    pub k: usize,
    pub verified: bool,
}

fn threshold_check(rep: &IntervalRep) -> Result<ThresholdCheck> {
    let g = derive_graph(rep);
    let max_degree = g.max_degree();
    let k = coloring::guaranteed_threshold(max_degree);
    let c = round_robin_color(rep, k)?;
    Ok(ThresholdCheck {
        vertices: g.vertex_count(),
        max_degree,
        k,
        verified: verify_equitable_tree_coloring(&g, &c)?.is_ok(),
    })
}

pub fn check_guaranteed_threshold(reps: &[IntervalRep]) -> Result<Vec<ThresholdCheck>> {
    map(reps, threshold_check).into_iter().collect()
}

pub fn check_guaranteed_threshold_sequential(reps: &[IntervalRep]) -> Result<Vec<ThresholdCheck>> {
    map_sequential(reps, threshold_check).into_iter().collect()
}

/// For one proper representation and one `k`: the decision procedure, the
/// clique bound, whether the round-robin coloring has a monochromatic
/// cycle, and the exhaustive solver's answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProperCrossCheck {
    pub k: usize,
    pub decided: bool,
    pub clique_bound_holds: bool,
    pub round_robin_acyclic: bool,
    pub exact: bool,
}

impl ProperCrossCheck {
    pub fn consistent(&self) -> bool {
        self.decided == self.exact && self.decided == self.clique_bound_holds && self.decided == self.round_robin_acyclic
    }
}

fn proper_cross_check(rep: &IntervalRep, ks: &[usize]) -> Result<Vec<ProperCrossCheck>> {
    let g = derive_graph(rep);
    let omega = max_clique_sweep(rep);
    ks.iter()
        .map(|&k| {
            let decision = decide_proper_interval(rep, k)?;
            let rr = round_robin_color(rep, k)?;
            Ok(ProperCrossCheck {
                k,
                decided: decision.answer,
                clique_bound_holds: omega <= 2 * k,
                round_robin_acyclic: monochromatic_cycle_edge(&g, &rr)?.is_none(),
                exact: coloring::exact_solve_sequential(&g, k)?.is_some(),
            })
        })
        .collect()
}

/// Cross-checks every representation against every `k`, one row per pair
/// in input order.
pub fn cross_check_proper(reps: &[IntervalRep], ks: &[usize]) -> Result<Vec<Vec<ProperCrossCheck>>> {
    map(reps, |rep| proper_cross_check(rep, ks)).into_iter().collect()
}

pub fn cross_check_proper_sequential(reps: &[IntervalRep], ks: &[usize]) -> Result<Vec<Vec<ProperCrossCheck>>> {
    map_sequential(reps, |rep| proper_cross_check(rep, ks)).into_iter().collect()
}
