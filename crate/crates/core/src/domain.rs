//! The domain of configurations: conflict-free lower sets ordered by inclusion.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::label::Labelling;
use crate::model::{Ev, EventStructure};

pub const DEFAULT_MAX_CONFIGS: usize = 100_000;

/// A conflict-free lower set, members sorted by event index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub members: Vec<Ev>,
    set: FixedBitSet,
}

impl Configuration {
    fn new(set: FixedBitSet) -> Self {
        Configuration { members: set.ones().collect(), set }
    }

    pub fn contains(&self, x: Ev) -> bool {
        self.set.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_set(&self) -> &FixedBitSet {
        &self.set
    }
}

/// A covering pair `lower < upper` with `upper = lower + event`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    pub event: Ev,
}

/// All configurations in BFS order (by size, lexicographic within a size).
#[derive(Debug, Clone)]
pub struct DomainPoset {
    pub configs: Vec<Configuration>,
    pub hasse: Vec<HasseEdge>,
    index: HashMap<FixedBitSet, usize>,
}

impl DomainPoset {
    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn find(&self, set: &FixedBitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn upper_covers(&self, config: usize) -> impl Iterator<Item = &HasseEdge> {
        self.hasse.iter().filter(move |e| e.lower == config)
    }

    /// Events `x` such that `config + x` is an upper cover.
    pub fn extensions(&self, config: usize) -> Vec<Ev> {
        self.upper_covers(config).map(|e| e.event).collect()
    }
}

pub fn configurations(es: &EventStructure, max_configs: usize) -> Result<DomainPoset> {
    let n = es.len();
    let mut configs = vec![Configuration::new(FixedBitSet::with_capacity(n))];
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    index.insert(configs[0].set.clone(), 0);
    if configs.len() > max_configs {
        return Err(Error::DomainTooLarge { reached: max_configs });
    }
    let mut hasse = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next_sets: Vec<FixedBitSet> = Vec::new();
        let mut pending: Vec<(usize, Ev, FixedBitSet)> = Vec::new();
        for &ci in &frontier {
            let base = configs[ci].set.clone();
            for x in es.events() {
                if base.contains(x)
                    || !es.lower_covers_of(x).iter().all(|&p| base.contains(p))
                    || es.conflict_set(x).intersection(&base).next().is_some()
                {
                    continue;
                }
                let mut grown = base.clone();
                grown.insert(x);
                next_sets.push(grown.clone());
                pending.push((ci, x, grown));
            }
        }
        next_sets.sort_by(|a, b| a.ones().cmp(b.ones()));
        next_sets.dedup();
        frontier.clear();
        for set in next_sets {
            if configs.len() >= max_configs {
                return Err(Error::DomainTooLarge { reached: max_configs });
            }
            index.insert(set.clone(), configs.len());
            frontier.push(configs.len());
            configs.push(Configuration::new(set));
        }
        let mut edges: Vec<HasseEdge> =
            pending.into_iter().map(|(lower, event, set)| HasseEdge { lower, upper: index[&set], event }).collect();
        edges.sort_by_key(|e| (e.lower, e.upper));
        hasse.extend(edges);
    }
    Ok(DomainPoset { configs, hasse, index })
}

/// Maximum number of upper covers of a configuration.
pub fn branching_degree(d: &DomainPoset) -> usize {
    let mut out = vec![0usize; d.len()];
    for e in &d.hasse {
        out[e.lower] += 1;
    }
    out.into_iter().max().unwrap_or(0)
}

/// A failure of the edge-labelling conditions induced by an event labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerspectiveViolation {
    /// Two edges leaving `config` carry the same letter.
    SameSource { config: usize, first: Ev, second: Ev, letter: usize },
    /// Perspective edges (indices into `hasse`) carry different letters.
    Perspective { first: usize, second: usize },
}

/// Labels each Hasse edge `(I, I + x)` by the letter of `x` and checks that
/// edges out of one configuration get distinct letters and perspective
/// edges get equal ones.
pub fn check_perspective_labelling(
    d: &DomainPoset,
    es: &EventStructure,
    lab: &Labelling,
) -> Result<Vec<PerspectiveViolation>> {
    let letters = lab.letters_by_index(es)?;
    let mut out = Vec::new();

    let mut by_source: Vec<Vec<&HasseEdge>> = vec![Vec::new(); d.len()];
    for e in &d.hasse {
        by_source[e.lower].push(e);
    }
    for (config, edges) in by_source.iter().enumerate() {
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if letters[a.event] == letters[b.event] {
                    out.push(PerspectiveViolation::SameSource {
                        config,
                        first: a.event,
                        second: b.event,
                        letter: letters[a.event],
                    });
                }
            }
        }
    }

    let n = es.len();
    let pairs = if n <= 128 {
        let packed = pack(d);
        perspective_pairs(d, es.len(), &packed, |a, b| a & b == *a, |a, b| a & b, |a, b| a | b)
    } else {
        let sets: Vec<FixedBitSet> = d.configs.iter().map(|c| c.set.clone()).collect();
        perspective_pairs(
            d,
            n,
            &sets,
            |a, b| a.is_subset(b),
            |a, b| a.intersection(b).collect_bits(n),
            |a, b| a.union(b).collect_bits(n),
        )
    };
    for (i, j) in pairs {
        if letters[d.hasse[i].event] != letters[d.hasse[j].event] {
            out.push(PerspectiveViolation::Perspective { first: i, second: j });
        }
    }
    Ok(out)
}

fn pack(d: &DomainPoset) -> Vec<u128> {
    d.configs.iter().map(|c| c.set.ones().fold(0, |acc, x| acc | 1 << x)).collect()
}

/// Index pairs of perspective Hasse edges, `I0 = I1 ∩ J0` and `J1 = I1 ∪ J0`.
fn perspective_pairs<S: PartialEq>(
    d: &DomainPoset,
    n: usize,
    sets: &[S],
    subset: impl Fn(&S, &S) -> bool,
    meet: impl Fn(&S, &S) -> S,
    join: impl Fn(&S, &S) -> S,
) -> Vec<(usize, usize)> {
    // Perspective edges add the same event, since J1 \ J0 = I1 \ I0.
    let mut by_event: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in d.hasse.iter().enumerate() {
        by_event[e.event].push(i);
    }
    let mut out = Vec::new();
    for (i, e) in d.hasse.iter().enumerate() {
        let (i0, i1) = (&sets[e.lower], &sets[e.upper]);
        for &j in &by_event[e.event] {
            let f = &d.hasse[j];
            let j0 = &sets[f.lower];
            if i == j || !subset(i0, j0) {
                continue;
            }
            if meet(i1, j0) == *i0 && join(i1, j0) == sets[f.upper] {
                out.push((i, j));
            }
        }
    }
    out
}

trait CollectBits {
    fn collect_bits(self, n: usize) -> FixedBitSet;
}

impl<I: Iterator<Item = usize>> CollectBits for I {
    fn collect_bits(self, n: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(n);
        s.extend(self);
        s
    }
}

/// A counterexample to the chopped-lattice laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeViolation {
    /// `X ∩ Y` is not a configuration.
    NotClosedUnderMeet { x: usize, y: usize },
    /// `X ∪ Y` is a configuration but `Z ∩ (X ∪ Y) != (Z ∩ X) ∪ (Z ∩ Y)`.
    NotDistributive { x: usize, y: usize, z: usize },
}

/// Closure under binary intersection and distributivity wherever `X ∪ Y` exists.
pub fn check_chopped_lattice(d: &DomainPoset) -> Vec<LatticeViolation> {
    let n = d.configs.first().map(|c| c.set.len()).unwrap_or(0);
    if n <= 128 {
        let packed = pack(d);
        let index: HashMap<u128, usize> = packed.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        chopped_lattice_by(&packed, |s| index.contains_key(s), |a, b| a & b, |a, b| a | b)
    } else {
        let sets: Vec<FixedBitSet> = d.configs.iter().map(|c| c.set.clone()).collect();
        chopped_lattice_by(
            &sets,
            |s| d.find(s).is_some(),
            |a, b| a.intersection(b).collect_bits(n),
            |a, b| a.union(b).collect_bits(n),
        )
    }
}

fn chopped_lattice_by<S: PartialEq>(
    sets: &[S],
    member: impl Fn(&S) -> bool,
    meet: impl Fn(&S, &S) -> S,
    join: impl Fn(&S, &S) -> S,
) -> Vec<LatticeViolation> {
    let mut out = Vec::new();
    for x in 0..sets.len() {
        for y in x + 1..sets.len() {
            let (sx, sy) = (&sets[x], &sets[y]);
            if !member(&meet(sx, sy)) {
                out.push(LatticeViolation::NotClosedUnderMeet { x, y });
            }
            let xy = join(sx, sy);
            if !member(&xy) {
                continue;
            }
            for (z, sz) in sets.iter().enumerate() {
                if meet(sz, &xy) != join(&meet(sz, sx), &meet(sz, sy)) {
                    out.push(LatticeViolation::NotDistributive { x, y, z });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::label::{Labelling, Strategy};

    fn members(es: &EventStructure, d: &DomainPoset) -> Vec<Vec<String>> {
        d.configs.iter().map(|c| c.members.iter().map(|&x| es.name(x).to_string()).collect()).collect()
    }

    #[test]
    fn chain_domain() {
        let es = fixture("CHAIN3").unwrap();
        let d = configurations(&es, DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(members(&es, &d), [vec![], vec!["a"], vec!["a", "b"], vec!["a", "b", "c"]]);
        assert_eq!(d.hasse.len(), 3);
        assert_eq!(branching_degree(&d), 1);
        assert!(check_chopped_lattice(&d).is_empty());
    }

    #[test]
    fn antichain_domain() {
        let es = fixture("ANTI3").unwrap();
        let d = configurations(&es, DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(d.len(), 8);
        assert_eq!(d.hasse.len(), 12);
        assert_eq!(branching_degree(&d), 3);
        assert_eq!(d.extensions(0), [0, 1, 2]);
    }

    #[test]
    fn conflict_domain() {
        let es = fixture("CONF2").unwrap();
        let d = configurations(&es, DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(members(&es, &d), [vec![], vec!["a"], vec!["b"]]);
        assert!(check_chopped_lattice(&d).is_empty());
    }

    #[test]
    fn s_domain() {
        let es = fixture("S").unwrap();
        let d = configurations(&es, DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(branching_degree(&d), 3);
        assert!(check_chopped_lattice(&d).is_empty());
    }

    #[test]
    fn too_large() {
        let es = fixture("ANTI3").unwrap();
        assert!(matches!(configurations(&es, 5), Err(Error::DomainTooLarge { reached: 5 })));
        assert!(configurations(&es, 8).is_ok());
    }

    #[test]
    fn perspective_examples() {
        let chain = fixture("CHAIN3").unwrap();
        let d = configurations(&chain, DEFAULT_MAX_CONFIGS).unwrap();
        let constant = Labelling::from_indices(&chain, vec![0, 0, 0], Strategy::External);
        assert!(check_perspective_labelling(&d, &chain, &constant).unwrap().is_empty());

        let anti = fixture("ANTI3").unwrap();
        let d = configurations(&anti, DEFAULT_MAX_CONFIGS).unwrap();
        let good = Labelling::from_indices(&anti, vec![0, 1, 2], Strategy::External);
        assert!(check_perspective_labelling(&d, &anti, &good).unwrap().is_empty());

        let bad = Labelling::from_indices(&anti, vec![0, 0, 1], Strategy::External);
        let v = check_perspective_labelling(&d, &anti, &bad).unwrap();
        assert!(v.contains(&PerspectiveViolation::SameSource { config: 0, first: 0, second: 1, letter: 0 }));
    }

    #[test]
    fn perspective_requires_total_labelling() {
        let anti = fixture("ANTI3").unwrap();
        let d = configurations(&anti, DEFAULT_MAX_CONFIGS).unwrap();
        let mut partial = Labelling::from_indices(&anti, vec![0, 1, 2], Strategy::External);
        partial.assignment.remove("c");
        assert!(matches!(check_perspective_labelling(&d, &anti, &partial), Err(Error::UnlabelledEvent(_))));
    }
}
