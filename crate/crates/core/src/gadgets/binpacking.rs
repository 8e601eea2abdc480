use crate::error::{Error, Result};

/// Items to be split into `bins` parts, each summing to exactly `capacity`.
/// The item total always equals `bins * capacity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinPackingInstance {
    items: Vec<usize>,
    bins: usize,
    capacity: usize,
}

impl BinPackingInstance {
    pub fn new(items: Vec<usize>, bins: usize, capacity: usize) -> Result<Self> {
        if let Some(j) = items.iter().position(|&a| a == 0) {
            return Err(Error::Instance(format!("item {j} has size 0")));
        }
        if bins < 1 {
            return Err(Error::Instance("number of bins k must be at least 1".into()));
        }
        if capacity < 1 {
            return Err(Error::Instance("capacity B must be at least 1".into()));
        }
        let total: usize = items.iter().sum();
        if total != bins * capacity {
            return Err(Error::Instance(format!(
                "item sizes sum to {total}, expected k * B = {bins} * {capacity} = {}",
                bins * capacity
            )));
        }
        Ok(BinPackingInstance { items, bins, capacity })
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    pub fn bins(&self) -> usize {
        self.bins
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }
}

/// An assignment of item indices to bins; `bins()[i]` lists the items of bin `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    bins: Vec<Vec<usize>>,
}

impl Packing {
    /// Item lists are sorted; bin order is kept.
    pub fn new(mut bins: Vec<Vec<usize>>) -> Self {
        for bin in &mut bins {
            bin.sort_unstable();
        }
        Packing { bins }
    }

    pub fn bins(&self) -> &[Vec<usize>] {
        &self.bins
    }

    /// Total item size per bin.
    pub fn loads(&self, inst: &BinPackingInstance) -> Vec<usize> {
        self.bins
            .iter()
            .map(|bin| bin.iter().map(|&j| inst.items[j]).sum())
            .collect()
    }

    /// Bin index of every item, or an error if the packing does not place
    /// each item exactly once into exactly `k` bins that are all full.
    pub fn check_solves(&self, inst: &BinPackingInstance) -> Result<Vec<usize>> {
        if self.bins.len() != inst.bins {
            return Err(Error::Argument(format!(
                "packing has {} bins, instance has {}",
                self.bins.len(),
                inst.bins
            )));
        }
        let mut bin_of = vec![usize::MAX; inst.items.len()];
        for (i, bin) in self.bins.iter().enumerate() {
            for &j in bin {
                if j >= bin_of.len() || bin_of[j] != usize::MAX {
                    return Err(Error::Argument(format!("item {j} is unknown or placed twice")));
                }
                bin_of[j] = i;
            }
        }
        if let Some(j) = bin_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Argument(format!("item {j} is not placed")));
        }
        if let Some((i, load)) = self.loads(inst).into_iter().enumerate().find(|&(_, l)| l != inst.capacity) {
            return Err(Error::Argument(format!("bin {i} holds {load}, capacity is {}", inst.capacity)));
        }
        Ok(bin_of)
    }

    /// Same multiset of bins, ignoring bin order.
    pub fn same_bins_as(&self, other: &Packing) -> bool {
        let mut a = self.bins.clone();
        let mut b = other.bins.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Exact packing by backtracking. Items are placed largest first; a bin is
/// skipped when an earlier bin at this step had the same load, since both
/// subtrees are identical up to relabeling.
pub fn solve_bin_packing(inst: &BinPackingInstance) -> Option<Packing> {
    let mut order: Vec<usize> = (0..inst.items.len()).collect();
    order.sort_by_key(|&j| std::cmp::Reverse(inst.items[j]));
    let mut loads = vec![0; inst.bins];
    let mut bin_of = vec![0; inst.items.len()];
    if !place(inst, &order, 0, &mut loads, &mut bin_of) {
        return None;
    }
    let mut bins = vec![Vec::new(); inst.bins];
    for (j, &b) in bin_of.iter().enumerate() {
        bins[b].push(j);
    }
    Some(Packing::new(bins))
}

fn place(inst: &BinPackingInstance, order: &[usize], depth: usize, loads: &mut [usize], bin_of: &mut [usize]) -> bool {
    let Some(&j) = order.get(depth) else {
        return loads.iter().all(|&l| l == inst.capacity);
    };
    let a = inst.items[j];
    for b in 0..loads.len() {
        if loads[b] + a > inst.capacity || loads[..b].contains(&loads[b]) {
            continue;
        }
        loads[b] += a;
        bin_of[j] = b;
        if place(inst, order, depth + 1, loads, bin_of) {
            return true;
        }
        loads[b] -= a;
    }
    false
}
