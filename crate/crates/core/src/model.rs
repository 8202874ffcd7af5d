//! Coherent event structures and their derived relations.
//!
//! A structure is given by its events, the Hasse diagram of the causal order
//! and a set of conflict generators. Building it closes conflict upwards along
//! the order and caches every relation the rest of the crate asks for, so the
//! value is immutable and cheap to query from several threads at once.
//!
//! Events are stored in lexicographic id order; the index of an event in
//! [`EventStructure::ids`] is its [`Ev`] handle, and index order is the global
//! tie-break used by every deterministic algorithm in the crate.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Index of an event inside one [`EventStructure`].
pub type Ev = usize;

/// Name of an event. Ordered lexicographically by bytes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventId(String);

impl EventId {
    /// Validates `s` against the token grammar `[A-Za-z0-9_.-]+`.
    pub fn new(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        if is_token(&s) {
            Ok(EventId(s))
        } else {
            Err(Error::InvalidEventId(s))
        }
    }

    /// Ids minted by the library itself (the lifted bottom) bypass the grammar.
    pub(crate) fn unchecked(s: impl Into<String>) -> Self {
        EventId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'.' || b == b'-')
}

impl fmt::Display for EventId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for EventId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// How an ordered pair of events is related. Exactly one kind holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Equal,
    Below,
    Above,
    Concurrent,
    Conflict,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationKind::Equal => "Equal",
            RelationKind::Below => "Below",
            RelationKind::Above => "Above",
            RelationKind::Concurrent => "Concurrent",
            RelationKind::Conflict => "Conflict",
        };
        f.write_str(s)
    }
}

/// A finite coherent event structure.
#[derive(Clone)]
pub struct EventStructure {
    ids: Vec<EventId>,
    index: BTreeMap<EventId, Ev>,
    lower: Vec<Vec<Ev>>,
    upper: Vec<Vec<Ev>>,
    /// `down[x]` = { y : y <= x }
    down: Vec<FixedBitSet>,
    /// `up[x]` = { y : x <= y }
    up: Vec<FixedBitSet>,
    conflict: Vec<FixedBitSet>,
    ortho: Vec<FixedBitSet>,
    height: Vec<usize>,
}

impl fmt::Debug for EventStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EventStructure")
            .field("events", &self.ids.iter().map(EventId::as_str).collect::<Vec<_>>())
            .field("covers", &self.cover_ids())
            .field("minimal_conflicts", &self.minimal_conflict_ids())
            .finish()
    }
}

impl PartialEq for EventStructure {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.lower == other.lower && self.conflict == other.conflict
    }
}

impl Eq for EventStructure {}

impl EventStructure {
    /// Validates the input and computes all derived relations.
    ///
    /// `conflicts` are generators: the stored relation is their upward
    /// closure, `x # y` and `x <= x'`, `y <= y'` give `x' # y'`.
    pub fn build(
        events: Vec<EventId>,
        covers: Vec<(EventId, EventId)>,
        conflicts: Vec<(EventId, EventId)>,
    ) -> Result<Self> {
        let mut ids = events;
        ids.sort();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEvent(w[0].to_string()));
        }
        let n = ids.len();
        let index: BTreeMap<EventId, Ev> = ids.iter().cloned().enumerate().map(|(i, id)| (id, i)).collect();
        let lookup =
            |id: &EventId| -> Result<Ev> { index.get(id).copied().ok_or_else(|| Error::UnknownEvent(id.to_string())) };

        let mut lower: Vec<Vec<Ev>> = vec![Vec::new(); n];
        let mut upper: Vec<Vec<Ev>> = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (p, c) in &covers {
            let (pi, ci) = (lookup(p)?, lookup(c)?);
            if pi == ci {
                return Err(Error::CycleInCovers(p.to_string()));
            }
            if !seen.insert((pi, ci)) {
                return Err(Error::RedundantCoverEdge(p.to_string(), c.to_string()));
            }
            lower[ci].push(pi);
            upper[pi].push(ci);
        }
        for v in lower.iter_mut().chain(upper.iter_mut()) {
            v.sort_unstable();
        }

        let topo = topological_order(&lower, &upper).map_err(|e| Error::CycleInCovers(ids[e].to_string()))?;

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        let mut height = vec![0usize; n];
        for &x in &topo {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &p in &lower[x] {
                set.union_with(&down[p]);
                height[x] = height[x].max(height[p] + 1);
            }
            down[x] = set;
        }
        for c in 0..n {
            for &p in &lower[c] {
                if lower[c].iter().any(|&q| q != p && down[q].contains(p)) {
                    return Err(Error::RedundantCoverEdge(ids[p].to_string(), ids[c].to_string()));
                }
            }
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (y, below) in down.iter().enumerate() {
            for x in below.ones() {
                up[x].insert(y);
            }
        }

        let mut conflict = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in &conflicts {
            let (ai, bi) = (lookup(a)?, lookup(b)?);
            if down[ai].contains(bi) || up[ai].contains(bi) {
                return Err(Error::ConflictBetweenComparable(a.to_string(), b.to_string()));
            }
            for x in up[ai].ones() {
                conflict[x].union_with(&up[bi]);
            }
            for y in up[bi].ones() {
                conflict[y].union_with(&up[ai]);
            }
        }
        for x in 0..n {
            let mut comparable = down[x].clone();
            comparable.union_with(&up[x]);
            if let Some(y) = conflict[x].intersection(&comparable).next() {
                return Err(Error::ConflictBetweenComparable(ids[x].to_string(), ids[y].to_string()));
            }
        }

        let mut es = EventStructure { ids, index, lower, upper, down, up, conflict, ortho: Vec::new(), height };
        es.ortho = es.compute_orthogonality();
        Ok(es)
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(events: &[&str], covers: &[(&str, &str)], conflicts: &[(&str, &str)]) -> Result<Self> {
        let id = |s: &str| EventId::new(s);
        let events = events.iter().map(|s| id(s)).collect::<Result<Vec<_>>>()?;
        let pairs = |v: &[(&str, &str)]| -> Result<Vec<(EventId, EventId)>> {
            v.iter().map(|(a, b)| Ok((id(a)?, id(b)?))).collect()
        };
        Self::build(events, pairs(covers)?, pairs(conflicts)?)
    }

    pub fn empty() -> Self {
        Self::build(Vec::new(), Vec::new(), Vec::new()).expect("empty structure is valid")
    }

    fn compute_orthogonality(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut ortho = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in (x + 1)..n {
                if self.comparable(x, y) {
                    continue;
                }
                let edge = !self.conflict[x].contains(y) || self.minimal_conflict_unchecked(x, y);
                if edge {
                    ortho[x].insert(y);
                    ortho[y].insert(x);
                }
            }
        }
        ortho
    }

    // Heredity makes it enough to look at lower covers.
    fn minimal_conflict_unchecked(&self, x: Ev, y: Ev) -> bool {
        self.conflict[x].contains(y)
            && self.lower[x].iter().all(|&p| !self.conflict[p].contains(y))
            && self.lower[y].iter().all(|&q| !self.conflict[x].contains(q))
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[EventId] {
        &self.ids
    }

    pub fn id(&self, x: Ev) -> &EventId {
        &self.ids[x]
    }

    pub fn name(&self, x: Ev) -> &str {
        self.ids[x].as_str()
    }

    pub fn index_of(&self, id: &str) -> Result<Ev> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownEvent(id.to_string()))
    }

    pub fn events(&self) -> std::ops::Range<Ev> {
        0..self.len()
    }

    // Index-level relation queries.

    pub fn leq(&self, x: Ev, y: Ev) -> bool {
        self.down[y].contains(x)
    }

    pub fn lt(&self, x: Ev, y: Ev) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Ev, y: Ev) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn in_conflict(&self, x: Ev, y: Ev) -> bool {
        self.conflict[x].contains(y)
    }

    pub fn concurrent(&self, x: Ev, y: Ev) -> bool {
        !self.comparable(x, y) && !self.in_conflict(x, y)
    }

    /// Weak concurrency: equal, comparable, or concurrent (not in conflict).
    pub fn weakly_concurrent(&self, x: Ev, y: Ev) -> bool {
        !self.in_conflict(x, y)
    }

    pub fn is_minimal_conflict(&self, x: Ev, y: Ev) -> bool {
        self.minimal_conflict_unchecked(x, y)
    }

    pub fn is_orthogonal(&self, x: Ev, y: Ev) -> bool {
        self.ortho[x].contains(y)
    }

    pub fn relation_of(&self, x: Ev, y: Ev) -> RelationKind {
        if x == y {
            RelationKind::Equal
        } else if self.leq(x, y) {
            RelationKind::Below
        } else if self.leq(y, x) {
            RelationKind::Above
        } else if self.in_conflict(x, y) {
            RelationKind::Conflict
        } else {
            RelationKind::Concurrent
        }
    }

    pub fn down_set(&self, x: Ev) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: Ev) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn conflict_set(&self, x: Ev) -> &FixedBitSet {
        &self.conflict[x]
    }

    pub fn ortho_set(&self, x: Ev) -> &FixedBitSet {
        &self.ortho[x]
    }

    pub fn lower_covers_of(&self, x: Ev) -> &[Ev] {
        &self.lower[x]
    }

    pub fn upper_covers_of(&self, x: Ev) -> &[Ev] {
        &self.upper[x]
    }

    /// Longest chain strictly below `x`, counted in edges.
    pub fn height_of(&self, x: Ev) -> usize {
        self.height[x]
    }

    pub fn heights(&self) -> &[usize] {
        &self.height
    }

    pub fn minimal_events(&self) -> Vec<Ev> {
        self.events().filter(|&x| self.lower[x].is_empty()).collect()
    }

    /// Cover pairs `(parent, child)` sorted by (parent, child).
    pub fn covers(&self) -> Vec<(Ev, Ev)> {
        let mut v: Vec<(Ev, Ev)> = self.events().flat_map(|c| self.lower[c].iter().map(move |&p| (p, c))).collect();
        v.sort_unstable();
        v
    }

    /// Minimal conflicts `(x, y)` with `x < y` by index.
    pub fn minimal_conflicts(&self) -> Vec<(Ev, Ev)> {
        let mut v = Vec::new();
        for x in self.events() {
            for y in self.conflict[x].ones().filter(|&y| y > x) {
                if self.minimal_conflict_unchecked(x, y) {
                    v.push((x, y));
                }
            }
        }
        v
    }

    /// Orthogonal pairs `(x, y)` with `x < y`.
    pub fn orthogonal_pairs(&self) -> Vec<(Ev, Ev)> {
        self.events().flat_map(|x| self.ortho[x].ones().filter(move |&y| y > x).map(move |y| (x, y))).collect()
    }

    fn cover_ids(&self) -> Vec<(&str, &str)> {
        self.covers().into_iter().map(|(p, c)| (self.name(p), self.name(c))).collect()
    }

    fn minimal_conflict_ids(&self) -> Vec<(&str, &str)> {
        self.minimal_conflicts().into_iter().map(|(a, b)| (self.name(a), self.name(b))).collect()
    }

    pub fn is_forest(&self) -> bool {
        self.lower.iter().all(|l| l.len() <= 1)
    }

    pub fn twins_idx(&self, x: Ev, y: Ev) -> bool {
        x != y && self.lower[x] == self.lower[y]
    }

    /// `{ z : z ⊥ x and no y in avoid has y <= z }`.
    pub fn o_set_idx(&self, x: Ev, avoid: &[Ev]) -> FixedBitSet {
        let mut out = self.ortho[x].clone();
        for &y in avoid {
            out.difference_with(&self.up[y]);
        }
        out
    }

    // Id-level operations.

    pub fn relation(&self, x: &str, y: &str) -> Result<RelationKind> {
        Ok(self.relation_of(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn minimal_conflict(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.is_minimal_conflict(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn orthogonal(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.is_orthogonal(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn lower_covers(&self, x: &str) -> Result<Vec<EventId>> {
        let i = self.index_of(x)?;
        Ok(self.lower[i].iter().map(|&p| self.ids[p].clone()).collect())
    }

    pub fn height_of_event(&self, x: &str) -> Result<usize> {
        Ok(self.height[self.index_of(x)?])
    }

    /// Maximum event height; 0 for the empty structure.
    pub fn height(&self) -> usize {
        self.height.iter().copied().max().unwrap_or(0)
    }

    /// Size of a maximum antichain, computed as the size of a minimum chain cover.
    pub fn width(&self) -> usize {
        crate::chains::min_chain_cover(self).len()
    }

    pub fn twins(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.twins_idx(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn o_set(&self, x: &str, avoid: &[&str]) -> Result<Vec<EventId>> {
        let xi = self.index_of(x)?;
        let avoid = avoid.iter().map(|y| self.index_of(y)).collect::<Result<Vec<_>>>()?;
        if !avoid.contains(&xi) {
            return Err(Error::XNotInY(x.to_string()));
        }
        Ok(self.o_set_idx(xi, &avoid).ones().map(|z| self.ids[z].clone()).collect())
    }

    /// Sub-structure induced by `keep`: restricted order (re-reduced to its
    /// Hasse diagram) and restricted conflict.
    pub fn restrict(&self, keep: &[Ev]) -> EventStructure {
        let mut keep: Vec<Ev> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut covers = Vec::new();
        let mut conflicts = Vec::new();
        for &a in &keep {
            for &b in &keep {
                if self.lt(a, b) && !keep.iter().any(|&c| self.lt(a, c) && self.lt(c, b)) {
                    covers.push((self.ids[a].clone(), self.ids[b].clone()));
                }
                if a < b && self.in_conflict(a, b) {
                    conflicts.push((self.ids[a].clone(), self.ids[b].clone()));
                }
            }
        }
        let events = keep.iter().map(|&a| self.ids[a].clone()).collect();
        EventStructure::build(events, covers, conflicts).expect("restriction of a valid structure is valid")
    }

    /// The structure induced by the events orthogonal to `x`.
    pub fn star(&self, x: &str) -> Result<EventStructure> {
        let xi = self.index_of(x)?;
        let keep: Vec<Ev> = self.ortho[xi].ones().collect();
        Ok(self.restrict(&keep))
    }

    /// Adds a fresh minimum below every minimal event. The new id is `⊥`,
    /// or `⊥0`, `⊥1`, ... when that name is taken.
    pub fn lift_bottom(&self) -> (EventStructure, EventId) {
        let bottom = std::iter::once("⊥".to_string())
            .chain((0..).map(|i| format!("⊥{i}")))
            .map(EventId::unchecked)
            .find(|id| !self.index.contains_key(id.as_str()))
            .expect("some fresh id exists");
        let mut events = self.ids.clone();
        events.push(bottom.clone());
        let mut covers: Vec<(EventId, EventId)> =
            self.covers().into_iter().map(|(p, c)| (self.ids[p].clone(), self.ids[c].clone())).collect();
        for m in self.minimal_events() {
            covers.push((bottom.clone(), self.ids[m].clone()));
        }
        let conflicts =
            self.minimal_conflicts().into_iter().map(|(a, b)| (self.ids[a].clone(), self.ids[b].clone())).collect();
        let lifted = EventStructure::build(events, covers, conflicts).expect("lifting a valid structure is valid");
        (lifted, bottom)
    }
}

/// Kahn's algorithm; on a cycle returns the least event that was never freed.
fn topological_order(lower: &[Vec<Ev>], upper: &[Vec<Ev>]) -> std::result::Result<Vec<Ev>, Ev> {
    let n = lower.len();
    let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut queue: VecDeque<Ev> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &c in &upper[x] {
            indeg[c] -= 1;
            if indeg[c] == 0 {
                queue.push_back(c);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&x| indeg[x] > 0).expect("cycle leaves a positive in-degree"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn names(v: &[EventId]) -> Vec<&str> {
        v.iter().map(EventId::as_str).collect()
    }

    #[test]
    fn chain_relations() {
        let es = fixture("CHAIN3").unwrap();
        assert_eq!(es.relation("a", "c").unwrap(), RelationKind::Below);
        assert_eq!(es.relation("c", "a").unwrap(), RelationKind::Above);
        assert_eq!(es.relation("b", "b").unwrap(), RelationKind::Equal);
        assert!(!es.minimal_conflict("a", "b").unwrap());
        assert_eq!(es.height_of_event("c").unwrap(), 2);
        assert_eq!(es.height(), 2);
        assert_eq!(es.width(), 1);
        assert!(!es.twins("a", "b").unwrap());
    }

    #[test]
    fn two_event_conflict() {
        let es = fixture("CONF2").unwrap();
        assert_eq!(es.relation("a", "b").unwrap(), RelationKind::Conflict);
        assert!(es.orthogonal("a", "b").unwrap());
    }

    #[test]
    fn antichain_of_three() {
        let es = fixture("ANTI3").unwrap();
        for (x, y) in [("a", "b"), ("a", "c"), ("b", "c")] {
            assert!(es.orthogonal(x, y).unwrap());
            assert!(es.twins(x, y).unwrap());
        }
        assert_eq!(es.width(), 3);
        assert_eq!(es.height(), 0);
    }

    #[test]
    fn s_conflict_closure() {
        let es = fixture("S").unwrap();
        let mut closed = Vec::new();
        for x in es.events() {
            for y in es.events().filter(|&y| y > x) {
                if es.in_conflict(x, y) {
                    closed.push((es.name(x), es.name(y)));
                }
            }
        }
        let expected = [
            ("3", "5"),
            ("3", "8"),
            ("3", "9"),
            ("5", "6"),
            ("5", "7"),
            ("6", "7"),
            ("6", "8"),
            ("6", "9"),
            ("7", "8"),
            ("7", "9"),
            ("8", "9"),
        ];
        assert_eq!(closed, expected);
    }

    #[test]
    fn s_relations() {
        let es = fixture("S").unwrap();
        assert_eq!(es.relation("6", "4").unwrap(), RelationKind::Concurrent);
        assert!(es.minimal_conflict("3", "5").unwrap());
        assert!(!es.minimal_conflict("6", "5").unwrap());
        assert!(!es.orthogonal("6", "8").unwrap());
        assert!(es.twins("6", "7").unwrap());
        assert!(!es.twins("6", "8").unwrap());
        assert_eq!(es.height(), 2);
    }

    #[test]
    fn s_o_set() {
        let es = fixture("S").unwrap();
        // 2 is concurrent with 3 and above neither 3 nor 5.
        assert_eq!(names(&es.o_set("3", &["3", "5"]).unwrap()), ["2", "4"]);
        assert!(matches!(es.o_set("3", &["5"]), Err(Error::XNotInY(_))));
    }

    #[test]
    fn fork_o_set_is_empty() {
        let es = fixture("FORK").unwrap();
        assert!(es.o_set("x", &["x", "y"]).unwrap().is_empty());
    }

    #[test]
    fn three_twins_have_empty_o_set() {
        let es = fixture("ANTI3").unwrap();
        assert!(es.o_set("a", &["a", "b", "c"]).unwrap().is_empty());
    }

    #[test]
    fn star_examples() {
        let chain = fixture("CHAIN3").unwrap();
        assert!(chain.star("a").unwrap().is_empty());

        let anti = fixture("ANTI3").unwrap();
        let st = anti.star("a").unwrap();
        assert_eq!(st.len(), 2);
        assert_eq!(crate::graph::degree(&st), 2);

        let s = fixture("S").unwrap();
        let st = s.star("4").unwrap();
        assert_eq!(names(st.ids()), ["3", "5", "6", "7", "8", "9"]);
        assert_eq!(crate::graph::degree(&st), 2);
    }

    #[test]
    fn lift_examples() {
        let conf = fixture("CONF2").unwrap();
        let (lifted, bot) = conf.lift_bottom();
        assert_eq!(bot.as_str(), "⊥");
        assert_eq!(lifted.len(), 3);
        assert!(lifted.lower_covers("⊥").unwrap().is_empty());
        assert_eq!(names(&lifted.lower_covers("a").unwrap()), ["⊥"]);
        assert_eq!(lifted.relation("a", "b").unwrap(), RelationKind::Conflict);

        let empty = EventStructure::empty();
        let (lifted, _) = empty.lift_bottom();
        assert_eq!(names(lifted.ids()), ["⊥"]);

        let (twice, second) = lifted.lift_bottom();
        assert_eq!(second.as_str(), "⊥0");
        assert_eq!(twice.len(), 2);
    }

    #[test]
    fn build_errors() {
        let err = |r: Result<EventStructure>| r.unwrap_err().kind();
        assert_eq!(err(EventStructure::from_strs(&["a", "a"], &[], &[])), "DuplicateEvent");
        assert_eq!(err(EventStructure::from_strs(&["a"], &[("a", "b")], &[])), "UnknownEvent");
        assert_eq!(err(EventStructure::from_strs(&["a"], &[], &[("a", "z")])), "UnknownEvent");
        assert_eq!(err(EventStructure::from_strs(&["a", "b"], &[("a", "b"), ("b", "a")], &[])), "CycleInCovers");
        assert_eq!(err(EventStructure::from_strs(&["a"], &[("a", "a")], &[])), "CycleInCovers");
        assert_eq!(
            err(EventStructure::from_strs(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[])),
            "RedundantCoverEdge"
        );
        assert_eq!(
            err(EventStructure::from_strs(&["a", "b"], &[("a", "b")], &[("a", "b")])),
            "ConflictBetweenComparable"
        );
        // a # b closes to c # b, and b <= c.
        assert_eq!(
            err(EventStructure::from_strs(&["a", "b", "c"], &[("a", "c"), ("b", "c")], &[("a", "b")])),
            "ConflictBetweenComparable"
        );
        assert!(EventId::new("bad id").is_err());
        assert!(EventId::new("").is_err());
        assert!(EventId::new("ok_1.2-x").is_ok());
    }

    #[test]
    fn empty_structure() {
        let es = EventStructure::empty();
        assert_eq!(es.height(), 0);
        assert_eq!(es.width(), 0);
        assert!(es.orthogonal_pairs().is_empty());
    }
}
