use std::collections::VecDeque;

use super::{OrthoGraph, UGraph};
use crate::error::{Error, Result};
use crate::model::{Ev, EventStructure};

/// Outcome of a chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elimination {
    /// A perfect elimination ordering: each vertex's later neighbors form a clique.
    Perfect(Vec<usize>),
    /// An induced cycle of length at least four.
    ChordlessCycle(Vec<usize>),
}

impl Elimination {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Elimination::Perfect(_))
    }

    pub fn order(&self) -> &[usize] {
        match self {
            Elimination::Perfect(v) | Elimination::ChordlessCycle(v) => v,
        }
    }
}

/// Lex-BFS visit order; ties go to the lowest index.
fn lex_bfs(g: &UGraph) -> Vec<usize> {
    let n = g.len();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Chordality via Lex-BFS, verified; a chordless cycle witnesses failure.
pub fn perfect_elimination(g: &UGraph) -> Elimination {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let mut pos = vec![0; g.len()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                let cycle = chordless_cycle(g).expect("failed elimination implies a chordless cycle");
                return Elimination::ChordlessCycle(cycle);
            }
        }
    }
    Elimination::Perfect(peo)
}

/// For a center `v` and non-adjacent neighbors `u < w`, a shortest `u`-`w`
/// path avoiding the rest of `N[v]` closes an induced cycle through `v`.
fn chordless_cycle(g: &UGraph) -> Option<Vec<usize>> {
    let n = g.len();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let blocked = |x: usize| x == v || (x != u && x != w && g.has_edge(v, x));
                let mut prev = vec![usize::MAX; n];
                prev[u] = u;
                let mut queue = VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    if x == w {
                        break;
                    }
                    for y in g.neighbors(x) {
                        if prev[y] == usize::MAX && !blocked(y) {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if prev[w] != usize::MAX {
                    let mut path = vec![w];
                    while *path.last().expect("non-empty") != u {
                        path.push(prev[*path.last().expect("non-empty")]);
                    }
                    path.reverse();
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Chordality test for the subgraph of `G(E)` induced by an antichain.
///
/// Vertex indices of the result refer to positions in `antichain`.
pub fn antichain_elimination(es: &EventStructure, antichain: &[Ev]) -> Result<(OrthoGraph, Elimination)> {
    for (i, &a) in antichain.iter().enumerate() {
        for &b in &antichain[i + 1..] {
            if es.comparable(a, b) {
                return Err(Error::NotAnAntichain(es.name(a).to_string(), es.name(b).to_string()));
            }
        }
    }
    let g = super::ortho_graph_on(es, antichain);
    let elim = perfect_elimination(&g.graph);
    Ok((g, elim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::graph::greedy_color;

    fn is_peo(g: &UGraph, order: &[usize]) -> bool {
        let mut pos = vec![0; g.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order.iter().all(|&v| {
            let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
            later.iter().enumerate().all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
    }

    #[test]
    fn triangle_is_chordal() {
        let k3 = UGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let e = perfect_elimination(&k3);
        assert!(e.is_chordal());
        assert!(is_peo(&k3, e.order()));
    }

    #[test]
    fn square_is_not_chordal() {
        let c4 = UGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match perfect_elimination(&c4) {
            Elimination::ChordlessCycle(c) => {
                assert_eq!(c.len(), 4);
                let mut sorted = c.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, [0, 1, 2, 3]);
                for i in 0..4 {
                    assert!(c4.has_edge(c[i], c[(i + 1) % 4]));
                }
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn longer_hole_inside_chordal_parts() {
        // A 5-hole with a pendant triangle.
        let g = UGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 4)]);
        let Elimination::ChordlessCycle(c) = perfect_elimination(&g) else { panic!() };
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                let adjacent_on_cycle = j == i + 1 || (i == 0 && j == c.len() - 1);
                assert_eq!(g.has_edge(c[i], c[j]), adjacent_on_cycle);
            }
        }
    }

    #[test]
    fn top_level_of_s() {
        let es = fixture("S").unwrap();
        let level: Vec<Ev> = ["6", "7", "8", "9"].iter().map(|x| es.index_of(x).unwrap()).collect();
        let (g, elim) = antichain_elimination(&es, &level).unwrap();
        assert_eq!(g.edge_ids(), [("6", "7"), ("8", "9")]);
        assert!(elim.is_chordal());
        assert!(is_peo(&g.graph, elim.order()));
        let col = greedy_color(&g.graph, elim.order()).unwrap();
        assert_eq!(col.num_colors, 2);
    }

    #[test]
    fn rejects_comparable_sets() {
        let es = fixture("S").unwrap();
        let bad = [es.index_of("1").unwrap(), es.index_of("3").unwrap()];
        assert!(matches!(antichain_elimination(&es, &bad), Err(Error::NotAnAntichain(..))));
    }
}
