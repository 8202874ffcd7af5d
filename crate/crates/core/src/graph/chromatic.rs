//! Exact chromatic number by DSATUR branch and bound.
//!
//! The search is single-threaded and fully deterministic: the branching
//! vertex is the uncolored one with the highest saturation, then the highest
//! degree, then the lowest index; colors are tried in increasing order.

use super::{max_clique, Coloring, UGraph};
use crate::error::{Error, Result};

/// Default vertex-count limit for exact routines.
pub const DEFAULT_EXACT_LIMIT: usize = 64;

/// Minimum `k <= cap` admitting a proper `k`-coloring, with a witness.
///
/// Fails with `SizeLimitExceeded` above `limit` vertices and with
/// `ExceedsCap` (carrying the best coloring found) when `cap` colors do not
/// suffice.
pub fn chromatic_exact(g: &UGraph, cap: usize, limit: usize) -> Result<(usize, Coloring)> {
    let n = g.len();
    if n > limit {
        return Err(Error::SizeLimitExceeded { size: n, limit });
    }
    if n == 0 {
        return Ok((0, Coloring { colors: Vec::new(), num_colors: 0 }));
    }
    let mut solver = Solver::new(g);
    let greedy = solver.greedy();
    let lower = max_clique(g).len();
    solver.lower = lower;
    solver.best_k = greedy.num_colors;
    solver.best = greedy.colors.clone();
    // Only colorings that beat both the greedy answer and the cap are searched.
    solver.bound = greedy.num_colors.min(cap.saturating_add(1));
    if greedy.num_colors > lower && lower <= cap {
        solver.search(0);
    }
    let coloring = Coloring::from_colors(solver.best);
    if coloring.num_colors > cap {
        return Err(Error::ExceedsCap { cap, best: coloring });
    }
    Ok((coloring.num_colors, coloring))
}

struct Solver<'a> {
    g: &'a UGraph,
    nbrs: Vec<Vec<usize>>,
    color: Vec<Option<usize>>,
    /// `counts[v][c]`: colored neighbors of `v` holding color `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    /// Colorings must use strictly fewer colors than this.
    bound: usize,
    lower: usize,
}

impl<'a> Solver<'a> {
    fn new(g: &'a UGraph) -> Self {
        let n = g.len();
        Solver {
            g,
            nbrs: (0..n).map(|v| g.neighbors(v).collect()).collect(),
            color: vec![None; n],
            counts: vec![vec![0; n + 1]; n],
            sat: vec![0; n],
            best: Vec::new(),
            best_k: usize::MAX,
            bound: usize::MAX,
            lower: 0,
        }
    }

    fn select(&self) -> Option<usize> {
        (0..self.g.len())
            .filter(|&v| self.color[v].is_none())
            .max_by(|&a, &b| (self.sat[a], self.nbrs[a].len()).cmp(&(self.sat[b], self.nbrs[b].len())).then(b.cmp(&a)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            if self.counts[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn greedy(&mut self) -> Coloring {
        let mut order = Vec::new();
        while let Some(v) = self.select() {
            let c = (0..).find(|&c| self.counts[v][c] == 0).expect("a free color exists");
            self.assign(v, c);
            order.push((v, c));
        }
        let mut colors = vec![0; self.g.len()];
        for &(v, c) in order.iter().rev() {
            colors[v] = c;
            self.unassign(v, c);
        }
        Coloring::from_colors(colors)
    }

    /// Returns true once a coloring matching the clique bound is found.
    fn search(&mut self, used: usize) -> bool {
        if used >= self.bound {
            return false;
        }
        let Some(v) = self.select() else {
            self.best = self.color.iter().map(|c| c.expect("complete")).collect();
            self.best_k = used;
            self.bound = used;
            return used <= self.lower;
        };
        let limit = (used + 1).min(self.bound.saturating_sub(1));
        for c in 0..limit {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            let done = self.search(used.max(c + 1));
            self.unassign(v, c);
            if done {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: try every assignment of `k` colors for growing `k`.
    fn brute_chromatic(g: &UGraph) -> usize {
        let n = g.len();
        if n == 0 {
            return 0;
        }
        let edges = g.edges();
        for k in 1..=n {
            let mut assign = vec![0usize; n];
            loop {
                if edges.iter().all(|&(a, b)| assign[a] != assign[b]) {
                    return k;
                }
                let mut i = 0;
                while i < n {
                    assign[i] += 1;
                    if assign[i] < k {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        n
    }

    #[test]
    fn triangle() {
        let k3 = UGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let (k, col) = chromatic_exact(&k3, 8, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(k, 3);
        assert!(col.is_proper(&k3));
    }

    #[test]
    fn edgeless() {
        let g = UGraph::new(5);
        let (k, col) = chromatic_exact(&g, 8, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(k, 1);
        assert_eq!(col.colors, vec![0; 5]);
    }

    #[test]
    fn cap_and_limit() {
        let k4 = UGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        match chromatic_exact(&k4, 3, DEFAULT_EXACT_LIMIT) {
            Err(Error::ExceedsCap { cap: 3, best }) => {
                assert!(best.is_proper(&k4));
                assert_eq!(best.num_colors, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            chromatic_exact(&UGraph::new(10), 3, 5),
            Err(Error::SizeLimitExceeded { size: 10, limit: 5 })
        ));
    }

    #[test]
    fn odd_cycles_and_mycielski() {
        let c5 = UGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(chromatic_exact(&c5, 8, 64).unwrap().0, 3);
        // Grötzsch graph: triangle-free, chromatic number 4.
        let grotzsch = UGraph::from_edges(
            11,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 1),
                (5, 4),
                (6, 0),
                (6, 2),
                (7, 1),
                (7, 3),
                (8, 2),
                (8, 4),
                (9, 3),
                (9, 0),
                (10, 5),
                (10, 6),
                (10, 7),
                (10, 8),
                (10, 9),
            ],
        );
        let (k, col) = chromatic_exact(&grotzsch, 8, 64).unwrap();
        assert_eq!(k, 4);
        assert!(col.is_proper(&grotzsch));
    }

    #[test]
    fn agrees_with_enumeration() {
        let mut state = 99u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..200 {
            let n = (next() % 8) as usize + 1;
            let density = next() % 100;
            let mut g = UGraph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if next() % 100 < density {
                        g.add_edge(a, b);
                    }
                }
            }
            let (k, col) = chromatic_exact(&g, 8, 64).unwrap();
            assert_eq!(k, brute_chromatic(&g), "{g:?}");
            assert!(col.is_proper(&g));
        }
    }
}
