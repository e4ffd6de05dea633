//! Exact cover of the point set by blocks.

use crate::design::Design;

struct Search<'a> {
    blocks: &'a [Vec<usize>],
    by_point: Vec<Vec<usize>>,
    covered: Vec<bool>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn available(&self, block: usize) -> bool {
        self.blocks[block].iter().all(|&p| !self.covered[p])
    }

    fn solve(&mut self) -> bool {
        // branch on the uncovered point with the fewest usable blocks
        let mut best: Option<(usize, usize)> = None;
        for p in 0..self.covered.len() {
            if self.covered[p] {
                continue;
            }
            let n = self.by_point[p]
                .iter()
                .filter(|&&b| self.available(b))
                .count();
            if n == 0 {
                return false;
            }
            if best.is_none_or(|(_, m)| n < m) {
                best = Some((p, n));
            }
        }
        let Some((point, _)) = best else {
            return true;
        };
        let candidates: Vec<usize> = self.by_point[point]
            .iter()
            .copied()
            .filter(|&b| self.available(b))
            .collect();
        for b in candidates {
            for &p in &self.blocks[b] {
                self.covered[p] = true;
            }
            self.chosen.push(b);
            if self.solve() {
                return true;
            }
            self.chosen.pop();
            for &p in &self.blocks[b] {
                self.covered[p] = false;
            }
        }
        false
    }
}

/// Indices of blocks that partition the point set, if any subfamily does.
pub fn find_block_partition(design: &Design) -> Option<Vec<usize>> {
    let (v, k) = (design.v(), design.k());
    if design.is_empty() || k == 0 || v % k != 0 {
        return None;
    }
    let mut by_point = vec![Vec::new(); v];
    for (i, block) in design.blocks().iter().enumerate() {
        for &p in block {
            by_point[p].push(i);
        }
    }
    let mut search = Search {
        blocks: design.blocks(),
        by_point,
        covered: vec![false; v],
        chosen: Vec::new(),
    };
    search.solve().then(|| {
        let mut chosen = search.chosen;
        chosen.sort_unstable();
        chosen
    })
}

pub fn block_partition_exists(design: &Design) -> bool {
    find_block_partition(design).is_some()
}
