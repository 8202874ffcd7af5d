//! Deterministic random generators.
//!
//! Structures grow one event at a time. A new event is maximal: its lower
//! covers form a conflict-free antichain and its fresh conflict generators
//! only involve itself, so the only orthogonality edges that change are the
//! ones at the new event. A candidate is kept when the degree stays within
//! the cap (and, for simple structures, gradedness and the 3-clique rule
//! hold); after a bounded number of rejected draws the event becomes the
//! only child of a maximal event, which never breaks any of these.
//!
//! Randomness comes from SplitMix64 seeded with `seed`. Integers below `n`
//! are `(next_u64() * n) >> 64` and coin flips compare `next_u64() >> 11`
//! scaled by `2^-53` against the probability, so other implementations can
//! reproduce a structure from its parameters.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{max_clique_within, UGraph};
use crate::model::{EventId, EventStructure};

pub use crate::fixtures::{fixture, FIXTURE_NAMES};

/// Random draws per event before falling back to a safe extension.
const ATTEMPTS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    Random,
    Forest,
    Simple,
}

impl GenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::Random => "random",
            GenKind::Forest => "forest",
            GenKind::Simple => "simple",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "random" => Ok(GenKind::Random),
            "forest" => Ok(GenKind::Forest),
            "simple" => Ok(GenKind::Simple),
            other => Err(format!("unknown generator kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub num_events: usize,
    pub seed: u64,
    pub kind: GenKind,
    pub degree_cap: usize,
    /// Probability that a new event receives fresh conflict generators.
    pub conflict_density: f64,
}

impl GenParams {
    pub fn new(kind: GenKind, num_events: usize, seed: u64) -> Self {
        GenParams { num_events, seed, kind, degree_cap: 3, conflict_density: 0.35 }
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn with_conflict_density(mut self, density: f64) -> Self {
        self.conflict_density = density;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.degree_cap == 0 {
            return Err(Error::GenerationFailed("degree_cap must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.conflict_density) {
            return Err(Error::GenerationFailed(format!(
                "conflict_density {} is outside [0, 1]",
                self.conflict_density
            )));
        }
        Ok(())
    }
}

/// Dispatches on `p.kind`.
pub fn generate(p: &GenParams) -> Result<EventStructure> {
    p.validate()?;
    Grower::new(p).run()
}

pub fn gen_random(p: &GenParams) -> Result<EventStructure> {
    generate(&GenParams { kind: GenKind::Random, ..*p })
}

/// Every event has at most one lower cover.
pub fn gen_forest(p: &GenParams) -> Result<EventStructure> {
    generate(&GenParams { kind: GenKind::Forest, ..*p })
}

/// Graded, at most two lower covers per event, every 3-clique has a minimal
/// conflict, degree at most `min(degree_cap, 3)`.
pub fn gen_simple(p: &GenParams) -> Result<EventStructure> {
    generate(&GenParams { kind: GenKind::Simple, ..*p })
}

struct Draw(SplitMix64);

impl Draw {
    fn below(&mut self, n: usize) -> usize {
        ((self.0.next_u64() as u128 * n as u128) >> 64) as usize
    }

    fn chance(&mut self, p: f64) -> bool {
        ((self.0.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }
}

struct Candidate {
    parents: Vec<usize>,
    generators: Vec<usize>,
    down: FixedBitSet,
    conflict: FixedBitSet,
    ortho: FixedBitSet,
}

struct Grower {
    kind: GenKind,
    target: usize,
    cap: usize,
    density: f64,
    rng: Draw,
    lower: Vec<Vec<usize>>,
    height: Vec<usize>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    conflict: Vec<FixedBitSet>,
    graph: UGraph,
    generators: Vec<(usize, usize)>,
}

impl Grower {
    fn new(p: &GenParams) -> Self {
        let cap = if p.kind == GenKind::Simple { p.degree_cap.min(3) } else { p.degree_cap };
        Grower {
            kind: p.kind,
            target: p.num_events,
            cap,
            density: p.conflict_density,
            rng: Draw(SplitMix64::seed_from_u64(p.seed)),
            lower: Vec::new(),
            height: Vec::new(),
            down: Vec::new(),
            up: Vec::new(),
            conflict: Vec::new(),
            graph: UGraph::new(p.num_events),
            generators: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.lower.len()
    }

    fn run(mut self) -> Result<EventStructure> {
        while self.len() < self.target {
            let mut chosen = None;
            for _ in 0..ATTEMPTS {
                let (parents, generators) = self.propose();
                if let Some(c) = self.evaluate(parents, generators) {
                    chosen = Some(c);
                    break;
                }
            }
            let c = match chosen {
                Some(c) => c,
                None => self
                    .fallback()
                    .ok_or_else(|| Error::GenerationFailed(format!("no safe extension at event {}", self.len())))?,
            };
            self.commit(c);
        }
        self.finish()
    }

    fn propose(&mut self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        if n == 0 {
            return (Vec::new(), Vec::new());
        }
        let parents = match self.kind {
            GenKind::Forest => {
                if self.rng.chance(0.15) {
                    Vec::new()
                } else {
                    vec![self.rng.below(n)]
                }
            }
            GenKind::Random => {
                let k = [0, 1, 1, 1, 2, 2, 3][self.rng.below(7)];
                let mut ps: Vec<usize> = Vec::new();
                for _ in 0..k {
                    let p = self.rng.below(n);
                    let fits = ps.iter().all(|&q| {
                        !self.down[p].contains(q) && !self.down[q].contains(p) && !self.conflict[p].contains(q)
                    });
                    if fits {
                        ps.push(p);
                    }
                }
                ps
            }
            GenKind::Simple => {
                if self.rng.chance(0.15) {
                    Vec::new()
                } else {
                    let p = self.rng.below(n);
                    let mut ps = vec![p];
                    if self.rng.chance(0.4) {
                        let q = self.rng.below(n);
                        if q != p && self.height[q] == self.height[p] && !self.conflict[p].contains(q) {
                            ps.push(q);
                        }
                    }
                    ps
                }
            }
        };
        let mut generators = Vec::new();
        if self.rng.chance(self.density) {
            let k = 1 + self.rng.below(2);
            for _ in 0..k {
                generators.push(self.rng.below(n));
            }
        }
        (parents, generators)
    }

    /// The only child of a maximal event (or the first event).
    fn fallback(&self) -> Option<Candidate> {
        if self.len() == 0 {
            return self.evaluate(Vec::new(), Vec::new());
        }
        let leaf = (0..self.len()).find(|&x| self.up[x].count_ones(..) == 1)?;
        self.evaluate(vec![leaf], Vec::new())
    }

    fn is_min_conflict(&self, a: usize, b: usize) -> bool {
        self.conflict[a].contains(b)
            && self.lower[a].iter().all(|&p| !self.conflict[p].contains(b))
            && self.lower[b].iter().all(|&q| !self.conflict[a].contains(q))
    }

    fn evaluate(&self, mut parents: Vec<usize>, mut generators: Vec<usize>) -> Option<Candidate> {
        let n = self.len();
        let x = n;
        parents.sort_unstable();
        parents.dedup();
        let mut down = FixedBitSet::with_capacity(self.target);
        for &p in &parents {
            down.union_with(&self.down[p]);
        }
        down.insert(x);
        generators.sort_unstable();
        generators.dedup();
        if generators.iter().any(|&g| down.contains(g)) {
            return None;
        }
        let mut conflict = FixedBitSet::with_capacity(self.target);
        for &p in &parents {
            conflict.union_with(&self.conflict[p]);
        }
        for &g in &generators {
            conflict.union_with(&self.up[g]);
        }
        if conflict.intersection(&down).next().is_some() {
            return None;
        }
        let mut ortho = FixedBitSet::with_capacity(self.target);
        let mut min_conflict = FixedBitSet::with_capacity(self.target);
        for y in 0..n {
            if down.contains(y) {
                continue;
            }
            if !conflict.contains(y) {
                ortho.insert(y);
            } else if parents.iter().all(|&p| !self.conflict[p].contains(y))
                && self.lower[y].iter().all(|&q| !conflict.contains(q))
            {
                ortho.insert(y);
                min_conflict.insert(y);
            }
        }
        if max_clique_within(&self.graph, &ortho).len() + 1 > self.cap {
            return None;
        }
        if self.kind == GenKind::Simple {
            let h = parents.first().map(|&p| self.height[p]);
            if parents.iter().any(|&p| Some(self.height[p]) != h) {
                return None;
            }
            for a in ortho.ones() {
                for b in self.graph.neighbor_set(a).intersection(&ortho).filter(|&b| b > a) {
                    if !min_conflict.contains(a) && !min_conflict.contains(b) && !self.is_min_conflict(a, b) {
                        return None;
                    }
                }
            }
        }
        Some(Candidate { parents, generators, down, conflict, ortho })
    }

    fn commit(&mut self, c: Candidate) {
        let x = self.len();
        self.height.push(c.parents.iter().map(|&p| self.height[p] + 1).max().unwrap_or(0));
        for d in c.down.ones() {
            if d != x {
                self.up[d].insert(x);
            }
        }
        let mut up = FixedBitSet::with_capacity(self.target);
        up.insert(x);
        self.up.push(up);
        for y in c.conflict.ones() {
            self.conflict[y].insert(x);
        }
        self.conflict.push(c.conflict);
        for y in c.ortho.ones() {
            self.graph.add_edge(x, y);
        }
        for &g in &c.generators {
            self.generators.push((g, x));
        }
        self.down.push(c.down);
        self.lower.push(c.parents);
    }

    fn finish(self) -> Result<EventStructure> {
        let width = self.target.saturating_sub(1).to_string().len().max(3);
        let id = |i: usize| EventId::new(format!("e{i:0width$}")).expect("generated ids are tokens");
        let events = (0..self.len()).map(id).collect();
        let covers =
            self.lower.iter().enumerate().flat_map(|(c, ps)| ps.iter().map(move |&p| (id(p), id(c)))).collect();
        let conflicts = self.generators.iter().map(|&(a, b)| (id(a), id(b))).collect();
        EventStructure::build(events, covers, conflicts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree;
    use crate::label::check_simple;

    #[test]
    fn empty_and_single() {
        assert_eq!(gen_random(&GenParams::new(GenKind::Random, 0, 5)).unwrap(), EventStructure::empty());
        let one = gen_forest(&GenParams::new(GenKind::Forest, 1, 5)).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.covers().is_empty());
    }

    #[test]
    fn deterministic() {
        for kind in [GenKind::Random, GenKind::Forest, GenKind::Simple] {
            let p = GenParams::new(kind, 40, 11);
            assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
        }
        let a = generate(&GenParams::new(GenKind::Random, 40, 1)).unwrap();
        let b = generate(&GenParams::new(GenKind::Random, 40, 2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn caps_hold() {
        for seed in 0..30 {
            let r = gen_random(&GenParams::new(GenKind::Random, 30, seed)).unwrap();
            assert!(degree(&r) <= 3);
            let f = gen_forest(&GenParams::new(GenKind::Forest, 30, seed)).unwrap();
            assert!(f.is_forest() && degree(&f) <= 3);
            let s = gen_simple(&GenParams::new(GenKind::Simple, 30, seed)).unwrap();
            check_simple(&s).unwrap();
            let two = gen_random(&GenParams::new(GenKind::Random, 20, seed).with_degree_cap(2)).unwrap();
            assert!(degree(&two) <= 2);
        }
    }

    #[test]
    fn ids_sort_numerically() {
        let es = gen_random(&GenParams::new(GenKind::Random, 12, 3)).unwrap();
        assert_eq!(es.name(0), "e000");
        assert_eq!(es.name(11), "e011");
    }

    #[test]
    fn bad_params() {
        let p = GenParams::new(GenKind::Random, 5, 0).with_degree_cap(0);
        assert!(matches!(generate(&p), Err(Error::GenerationFailed(_))));
        let p = GenParams::new(GenKind::Random, 5, 0).with_conflict_density(1.5);
        assert!(matches!(generate(&p), Err(Error::GenerationFailed(_))));
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs of SplitMix64 seeded with 0, from the reference implementation.
        let mut r = SplitMix64::seed_from_u64(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }
}
