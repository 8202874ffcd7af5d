//! The orthogonality graph of an event structure and the graph algorithms
//! run on it.

mod chordal;
mod chromatic;
mod clique;
mod cycles;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::model::{Ev, EventId, EventStructure};

pub use chordal::{antichain_elimination, perfect_elimination, Elimination};
pub use chromatic::{chromatic_exact, DEFAULT_EXACT_LIMIT};
pub use clique::{max_clique, max_clique_within};
pub use cycles::{shared_face_violations, straight_cycles};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct UGraph {
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UGraph").field("n", &self.len()).field("edges", &self.edges()).finish()
    }
}

impl UGraph {
    pub fn new(n: usize) -> Self {
        UGraph { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = UGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.adj[a].ones().filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count_ones(..)).sum::<usize>() / 2
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> UGraph {
        let mut g = UGraph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// `G(E)`: events as vertices, orthogonal pairs as edges.
///
/// Vertex `i` of `graph` is event `vertices[i]`; for the full graph of a
/// structure this coincides with the event index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoGraph {
    pub vertices: Vec<EventId>,
    pub graph: UGraph,
}

impl OrthoGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_ids(&self) -> Vec<(&str, &str)> {
        self.graph.edges().into_iter().map(|(a, b)| (self.vertices[a].as_str(), self.vertices[b].as_str())).collect()
    }
}

pub fn ortho_graph(es: &EventStructure) -> OrthoGraph {
    let all: Vec<Ev> = es.events().collect();
    ortho_graph_on(es, &all)
}

/// Orthogonality graph induced by a subset of events (vertex `i` = `subset[i]`).
pub fn ortho_graph_on(es: &EventStructure, subset: &[Ev]) -> OrthoGraph {
    let mut g = UGraph::new(subset.len());
    for (i, &a) in subset.iter().enumerate() {
        for (j, &b) in subset.iter().enumerate().skip(i + 1) {
            if es.is_orthogonal(a, b) {
                g.add_edge(i, j);
            }
        }
    }
    OrthoGraph { vertices: subset.iter().map(|&a| es.id(a).clone()).collect(), graph: g }
}

/// Degree of the structure: the clique number of its orthogonality graph.
pub fn degree(es: &EventStructure) -> usize {
    max_clique(&ortho_graph(es).graph).len()
}

/// A proper vertex coloring: `colors[v] < num_colors` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let num_colors = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring { colors, num_colors }
    }

    pub fn is_proper(&self, g: &UGraph) -> bool {
        self.colors.len() == g.len()
            && self.colors.iter().all(|&c| c < self.num_colors)
            && g.edges().iter().all(|&(a, b)| self.colors[a] != self.colors[b])
    }
}

/// First-fit coloring along `order`.
pub fn greedy_color(g: &UGraph, order: &[usize]) -> Result<Coloring> {
    let n = g.len();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::BadOrder(format!("{order:?} is not a permutation of 0..{n}")));
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for &v in order {
        let mut taken = FixedBitSet::with_capacity(n + 1);
        for w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                taken.insert(c);
            }
        }
        colors[v] = Some((0..=n).find(|&c| !taken.contains(c)).expect("n+1 colors suffice"));
    }
    Ok(Coloring::from_colors(colors.into_iter().map(|c| c.expect("all colored")).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn ortho_graph_examples() {
        let g = ortho_graph(&fixture("CHAIN3").unwrap());
        assert_eq!((g.len(), g.graph.edge_count()), (3, 0));

        let g = ortho_graph(&fixture("ANTI3").unwrap());
        assert_eq!(g.graph.edge_count(), 3);

        // Frozen from an exhaustive expansion of the definitions over all 36 pairs.
        let g = ortho_graph(&fixture("S").unwrap());
        let expected = [
            ("1", "2"),
            ("1", "5"),
            ("1", "8"),
            ("1", "9"),
            ("2", "3"),
            ("2", "6"),
            ("2", "7"),
            ("3", "4"),
            ("3", "5"),
            ("4", "5"),
            ("4", "6"),
            ("4", "7"),
            ("4", "8"),
            ("4", "9"),
            ("6", "7"),
            ("8", "9"),
        ];
        assert_eq!(g.edge_ids(), expected);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&fixture("CHAIN3").unwrap()), 1);
        assert_eq!(degree(&fixture("EMPTY").unwrap()), 0);
        assert_eq!(degree(&fixture("ANTI3").unwrap()), 3);
        assert_eq!(degree(&fixture("S").unwrap()), 3);
    }

    #[test]
    fn greedy_examples() {
        let k3 = UGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(greedy_color(&k3, &[2, 0, 1]).unwrap().num_colors, 3);
        let edgeless = UGraph::new(4);
        assert_eq!(greedy_color(&edgeless, &[0, 1, 2, 3]).unwrap().num_colors, 1);
        assert!(matches!(greedy_color(&k3, &[0, 0, 1]), Err(Error::BadOrder(_))));
        assert!(matches!(greedy_color(&k3, &[0, 1]), Err(Error::BadOrder(_))));
    }
}
