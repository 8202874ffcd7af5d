use fixedbitset::FixedBitSet;

use super::UGraph;

/// A maximum clique, sorted by vertex. Branch and bound with a greedy
/// coloring bound on the candidate set.
pub fn max_clique(g: &UGraph) -> Vec<usize> {
    let mut all = FixedBitSet::with_capacity(g.len());
    all.insert_range(..);
    max_clique_within(g, &all)
}

/// A maximum clique of the subgraph induced by `candidates`.
pub fn max_clique_within(g: &UGraph, candidates: &FixedBitSet) -> Vec<usize> {
    let mut search = Search { g, best: Vec::new(), current: Vec::new() };
    search.expand(candidates.clone());
    search.best.sort_unstable();
    search.best
}

struct Search<'a> {
    g: &'a UGraph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: FixedBitSet) {
        let (order, bounds) = self.color_order(&cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.neighbor_set(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.set(v, false);
        }
    }

    /// Greedy color classes; `bounds[i]` is the number of classes used up to
    /// and including `order[i]`.
    fn color_order(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut class = 0;
        while !uncolored.is_clear() {
            class += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.ones().next() {
                available.set(v, false);
                available.difference_with(self.g.neighbor_set(v));
                uncolored.set(v, false);
                order.push(v);
                bounds.push(class);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_clique_number(g: &UGraph) -> usize {
        let n = g.len();
        (0u32..(1 << n))
            .filter(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut state = 12345u64;
        for _ in 0..300 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = (state >> 60) as usize % 10;
            let mut g = UGraph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if (state >> 33).is_multiple_of(2) {
                        g.add_edge(a, b);
                    }
                }
            }
            let c = max_clique(&g);
            assert_eq!(c.len(), brute_clique_number(&g));
            assert!(c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b))));
        }
    }

    #[test]
    fn empty_graph_has_empty_clique() {
        assert!(max_clique(&UGraph::new(0)).is_empty());
        assert_eq!(max_clique(&UGraph::new(3)).len(), 1);
    }
}
