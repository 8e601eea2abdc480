use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::IntervalRep;

/// Deterministic pseudo-random interval representation on coordinates
/// `0..=max_coord`.
///
/// With `proper`, all `2n` endpoints are distinct and intervals are paired
/// first-in first-out along a random balanced sequence of opens and closes,
/// so rights increase with lefts and no interval contains another.
pub fn gen_random_interval(n: usize, max_coord: i64, seed: u64, proper: bool) -> Result<IntervalRep> {
    if max_coord < 1 {
        return Err(Error::Argument("max_coord must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if !proper {
        let max_len = (max_coord / 4).max(1);
        let pairs: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let left = rng.gen_range(0..=max_coord);
                let right = (left + rng.gen_range(0..=max_len)).min(max_coord);
                (left, right)
            })
            .collect();
        return IntervalRep::from_pairs(pairs);
    }

    let slots = usize::try_from(max_coord).ok().and_then(|m| m.checked_add(1));
    if slots.is_none_or(|s| 2 * n > s) {
        return Err(Error::Argument(format!(
            "cannot place {n} intervals with distinct endpoints in [0, {max_coord}]"
        )));
    }
    let mut coords: Vec<i64> = sample(&mut rng, slots.unwrap(), 2 * n)
        .into_iter()
        .map(|c| c as i64)
        .collect();
    coords.sort_unstable();

    let mut lefts = Vec::with_capacity(n);
    let mut rights = Vec::with_capacity(n);
    let (mut opens_left, mut open) = (n, 0usize);
    for c in coords {
        let must_open = open == 0;
        let may_open = opens_left > 0;
        if may_open && (must_open || rng.gen_bool(0.5)) {
            lefts.push(c);
            opens_left -= 1;
            open += 1;
        } else {
            rights.push(c);
            open -= 1;
        }
    }
    // Intervals get ids in a shuffled order so id order is not sweep order.
    let mut ids: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    IntervalRep::new(
        ids.into_iter()
            .zip(lefts.into_iter().zip(rights))
            .map(|(v, (l, r))| (v, l, r)),
    )
}
