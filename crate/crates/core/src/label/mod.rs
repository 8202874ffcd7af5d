//! Nice labellings: letters on events such that orthogonal events differ.
//!
//! Every strategy here verifies its own output before returning it.

mod quotient;
mod simple;
mod stratified;
mod tree;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{self, chromatic_exact};
use crate::model::{Ev, EventId, EventStructure};

pub use quotient::{label_quotient, quotient_graph, ClassLabeller, Partition};
pub use simple::{check_simple, label_simple, label_simple_report, SimpleReport};
pub use stratified::{label_stratified, skewness, StratifyingFunction};
pub use tree::{choose_tree_order, label_forest, label_tree, LinearOrder, TreeContext};

/// Which algorithm produced a labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Exact,
    Dilworth,
    Stratified,
    Forest,
    Simple,
    Greedy,
    Quotient,
    /// Read from a file or supplied by a caller.
    External,
}

impl Strategy {
    pub const ALL: [Strategy; 6] = [
        Strategy::Exact,
        Strategy::Dilworth,
        Strategy::Stratified,
        Strategy::Forest,
        Strategy::Simple,
        Strategy::Greedy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Exact => "exact",
            Strategy::Dilworth => "dilworth",
            Strategy::Stratified => "stratified",
            Strategy::Forest => "forest",
            Strategy::Simple => "simple",
            Strategy::Greedy => "greedy",
            Strategy::Quotient => "quotient",
            Strategy::External => "external",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Strategy::Exact),
            "dilworth" => Ok(Strategy::Dilworth),
            "stratified" => Ok(Strategy::Stratified),
            "forest" => Ok(Strategy::Forest),
            "simple" => Ok(Strategy::Simple),
            "greedy" => Ok(Strategy::Greedy),
            "quotient" => Ok(Strategy::Quotient),
            "external" => Ok(Strategy::External),
            other => Err(format!("unknown strategy {other:?}")),
        }
    }
}

/// An assignment of letters `0..alphabet_size` to events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelling {
    pub assignment: BTreeMap<EventId, usize>,
    pub alphabet_size: usize,
    pub strategy: Strategy,
}

impl Labelling {
    /// `letters[i]` labels event `i`; the alphabet is `0..=max letter`.
    pub fn from_indices(es: &EventStructure, letters: Vec<usize>, strategy: Strategy) -> Self {
        assert_eq!(letters.len(), es.len(), "one letter per event");
        let alphabet_size = letters.iter().map(|&l| l + 1).max().unwrap_or(0);
        let assignment = letters.into_iter().enumerate().map(|(i, l)| (es.id(i).clone(), l)).collect();
        Labelling { assignment, alphabet_size, strategy }
    }

    pub fn with_alphabet(mut self, alphabet_size: usize) -> Self {
        debug_assert!(self.assignment.values().all(|&l| l < alphabet_size));
        self.alphabet_size = alphabet_size;
        self
    }

    pub fn letter(&self, id: &str) -> Option<usize> {
        self.assignment.get(id).copied()
    }

    /// Letters indexed by event; fails on events without a letter.
    pub fn letters_by_index(&self, es: &EventStructure) -> Result<Vec<usize>> {
        es.ids()
            .iter()
            .map(|id| self.letter(id.as_str()).ok_or_else(|| Error::UnlabelledEvent(id.to_string())))
            .collect()
    }

    /// Number of distinct letters actually assigned.
    pub fn letters_used(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }
}

/// Orthogonal pairs sharing a letter, in index order. Empty iff `lab` is nice.
pub fn verify_labelling(es: &EventStructure, lab: &Labelling) -> Result<Vec<(EventId, EventId)>> {
    if let Some(stray) = lab.assignment.keys().find(|id| es.index_of(id.as_str()).is_err()) {
        return Err(Error::UnknownEvent(stray.to_string()));
    }
    let letters = lab.letters_by_index(es)?;
    Ok(es
        .orthogonal_pairs()
        .into_iter()
        .filter(|&(x, y)| letters[x] == letters[y])
        .map(|(x, y)| (es.id(x).clone(), es.id(y).clone()))
        .collect())
}

/// Refuses to hand out a labelling that fails verification.
pub(crate) fn checked(es: &EventStructure, lab: Labelling) -> Result<Labelling> {
    let bad = verify_labelling(es, &lab)?;
    match bad.first() {
        None => Ok(lab),
        Some((a, b)) => Err(Error::theorem(
            format!("{} labelling must be nice", lab.strategy),
            format!("{a} and {b} share a letter"),
        )),
    }
}

/// An optimal labelling: the alphabet size is the labelling number.
pub fn label_exact(es: &EventStructure, cap: usize, limit: usize) -> Result<Labelling> {
    let g = graph::ortho_graph(es);
    let (k, coloring) = chromatic_exact(&g.graph, cap, limit)?;
    let lab = Labelling::from_indices(es, coloring.colors, Strategy::Exact).with_alphabet(k);
    checked(es, lab)
}

/// One letter per chain of a minimum chain cover; uses exactly `width` letters.
pub fn label_dilworth(es: &EventStructure) -> Result<Labelling> {
    let chains = crate::chains::min_chain_cover(es);
    let mut letters = vec![0; es.len()];
    for (letter, chain) in chains.iter().enumerate() {
        for &x in chain {
            letters[x] = letter;
        }
    }
    let lab = Labelling::from_indices(es, letters, Strategy::Dilworth).with_alphabet(chains.len());
    checked(es, lab)
}

/// First-fit coloring of `G(E)` in id order.
pub fn label_greedy(es: &EventStructure) -> Result<Labelling> {
    let g = graph::ortho_graph(es);
    let order: Vec<Ev> = es.events().collect();
    let coloring = graph::greedy_color(&g.graph, &order)?;
    let lab = Labelling::from_indices(es, coloring.colors, Strategy::Greedy).with_alphabet(coloring.num_colors);
    checked(es, lab)
}

/// Runs the named strategy with default parameters.
pub fn label_with(es: &EventStructure, strategy: Strategy, exact_cap: usize, exact_limit: usize) -> Result<Labelling> {
    match strategy {
        Strategy::Exact => label_exact(es, exact_cap, exact_limit),
        Strategy::Dilworth => label_dilworth(es),
        Strategy::Stratified => label_stratified(es, None),
        Strategy::Forest => label_forest(es),
        Strategy::Simple => label_simple(es),
        Strategy::Greedy => label_greedy(es),
        Strategy::Quotient | Strategy::External => {
            Err(Error::BadOrder(format!("strategy {strategy} needs explicit inputs")))
        }
    }
}
