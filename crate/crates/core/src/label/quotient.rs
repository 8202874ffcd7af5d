use std::collections::BTreeMap;

use super::{checked, label_tree, Labelling, Strategy};
use crate::error::{Error, Result};
use crate::graph::{chromatic_exact, ortho_graph_on, Coloring, UGraph, DEFAULT_EXACT_LIMIT};
use crate::model::{Ev, EventStructure};

/// A partition of the events into numbered classes `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<Ev>>,
}

impl Partition {
    /// Classes are renumbered densely in order of their smallest member.
    pub fn from_class_ids<K: Ord + Clone>(class_of: &[K]) -> Self {
        let mut seen: BTreeMap<K, usize> = BTreeMap::new();
        let mut classes: Vec<Vec<Ev>> = Vec::new();
        let mut dense = Vec::with_capacity(class_of.len());
        for (x, key) in class_of.iter().enumerate() {
            let c = *seen.entry(key.clone()).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(x);
            dense.push(c);
        }
        Partition { class_of: dense, classes }
    }

    /// Partition from an event-id to class-name map covering every event.
    pub fn from_map(es: &EventStructure, map: &BTreeMap<String, String>) -> Result<Self> {
        if let Some(stray) = map.keys().find(|k| es.index_of(k).is_err()) {
            return Err(Error::UnknownEvent(stray.clone()));
        }
        let keys = es
            .ids()
            .iter()
            .map(|id| map.get(id.as_str()).cloned().ok_or_else(|| Error::UnlabelledEvent(id.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_class_ids(&keys))
    }

    pub fn singletons(es: &EventStructure) -> Self {
        Self::from_class_ids(&es.events().collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<Ev>] {
        &self.classes
    }

    pub fn class_of(&self, x: Ev) -> usize {
        self.class_of[x]
    }
}

/// Classes are adjacent when some of their members are orthogonal.
pub fn quotient_graph(es: &EventStructure, p: &Partition) -> UGraph {
    let mut g = UGraph::new(p.len());
    for (x, y) in es.orthogonal_pairs() {
        g.add_edge(p.class_of(x), p.class_of(y));
    }
    g
}

/// How to label the events inside each class with at most three letters.
#[derive(Debug, Clone, Copy)]
pub enum ClassLabeller<'a> {
    /// Optimal coloring of the class's orthogonality subgraph.
    Exact,
    /// Each class is a tree labelled by [`label_tree`].
    Tree,
    /// Precomputed letters, by event index.
    Given(&'a [usize]),
}

fn describe(es: &EventStructure, class: &[Ev]) -> String {
    let names: Vec<&str> = class.iter().map(|&x| es.name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn class_letters(es: &EventStructure, class: &[Ev], labeller: ClassLabeller<'_>) -> Result<Vec<usize>> {
    let letters = match labeller {
        ClassLabeller::Exact => {
            let g = ortho_graph_on(es, class);
            match chromatic_exact(&g.graph, 3, DEFAULT_EXACT_LIMIT.max(class.len())) {
                Ok((_, c)) => c.colors,
                Err(Error::ExceedsCap { .. }) => return Err(Error::ClassNotThreeLabellable(describe(es, class))),
                Err(e) => return Err(e),
            }
        }
        ClassLabeller::Tree => {
            let lab = label_tree(es, class)?;
            class.iter().map(|&x| lab[x].expect("tree member")).collect()
        }
        ClassLabeller::Given(all) => class.iter().map(|&x| all[x]).collect(),
    };
    let g = ortho_graph_on(es, class);
    let proper = g.graph.edges().into_iter().all(|(a, b)| letters[a] != letters[b]);
    if !proper || letters.iter().any(|&l| l >= 3) {
        return Err(Error::ClassNotThreeLabellable(describe(es, class)));
    }
    Ok(letters)
}

/// Letter `3 * color(class) + internal letter`, for an alphabet of three
/// times the number of quotient colors.
pub fn label_quotient(
    es: &EventStructure,
    p: &Partition,
    labeller: ClassLabeller<'_>,
    quotient_colors: &Coloring,
) -> Result<Labelling> {
    if p.class_of.len() != es.len() {
        return Err(Error::BadOrder(format!("partition covers {} of {} events", p.class_of.len(), es.len())));
    }
    let q = quotient_graph(es, p);
    if quotient_colors.colors.len() != p.len() {
        return Err(Error::BadQuotientColoring(format!(
            "{} colors for {} classes",
            quotient_colors.colors.len(),
            p.len()
        )));
    }
    if let Some((a, b)) = q.edges().into_iter().find(|&(a, b)| quotient_colors.colors[a] == quotient_colors.colors[b]) {
        return Err(Error::BadQuotientColoring(format!(
            "adjacent classes {} and {} share color {}",
            describe(es, &p.classes[a]),
            describe(es, &p.classes[b]),
            quotient_colors.colors[a]
        )));
    }
    let mut letters = vec![0; es.len()];
    for (c, class) in p.classes.iter().enumerate() {
        let inner = class_letters(es, class, labeller)?;
        for (i, &x) in class.iter().enumerate() {
            letters[x] = 3 * quotient_colors.colors[c] + inner[i];
        }
    }
    let alphabet = 3 * quotient_colors.colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    checked(es, Labelling::from_indices(es, letters, Strategy::Quotient).with_alphabet(alphabet))
}
