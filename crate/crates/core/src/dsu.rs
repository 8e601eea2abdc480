/// Disjoint-set forest with union by rank and an undo log.
///
/// No path compression, so every union can be rolled back exactly. `find`
/// stays `O(log n)`.
#[derive(Debug, Clone)]
pub struct RollbackUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    history: Vec<Undo>,
}

#[derive(Debug, Clone, Copy)]
struct Undo {
    child: usize,
    root: usize,
    rank_bumped: bool,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merge the sets of `a` and `b`. Returns `false` (and records nothing)
    /// when they already share a set, i.e. the edge `ab` would close a cycle.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra] < self.rank[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        let rank_bumped = self.rank[ra] == self.rank[rb];
        self.parent[rb] = ra;
        if rank_bumped {
            self.rank[ra] += 1;
        }
        self.history.push(Undo {
            child: rb,
            root: ra,
            rank_bumped,
        });
        true
    }

    /// Number of successful unions currently applied.
    pub fn checkpoint(&self) -> usize {
        self.history.len()
    }

    /// Undo unions until only `checkpoint` of them remain.
    pub fn rollback(&mut self, checkpoint: usize) {
        while self.history.len() > checkpoint {
            let undo = self.history.pop().expect("history is non-empty");
            self.parent[undo.child] = undo.child;
            if undo.rank_bumped {
                self.rank[undo.root] -= 1;
            }
        }
    }
}
