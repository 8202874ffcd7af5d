//! Three-letter labelling of trees inside a structure of degree at most 3.
//!
//! A tree `T` is a convex set of events, each with exactly one lower cover,
//! whose minimal elements share that lower cover. Trees are labelled one
//! event at a time along a linear order that extends tree height and puts,
//! of two proper twins, the one with the larger O-set first.

use fixedbitset::FixedBitSet;

use super::{checked, Labelling, Strategy};
use crate::error::{Error, Result};
use crate::graph;
use crate::model::{Ev, EventStructure};

/// A linear order on the events of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    pub sequence: Vec<Ev>,
    position: Vec<Option<usize>>,
}

impl LinearOrder {
    fn new(n: usize, sequence: Vec<Ev>) -> Self {
        let mut position = vec![None; n];
        for (i, &x) in sequence.iter().enumerate() {
            position[x] = Some(i);
        }
        LinearOrder { sequence, position }
    }

    pub fn position(&self, x: Ev) -> Option<usize> {
        self.position.get(x).copied().flatten()
    }

    /// `x` strictly precedes `y`; false when either is outside the order.
    pub fn precedes(&self, x: Ev, y: Ev) -> bool {
        matches!((self.position(x), self.position(y)), (Some(a), Some(b)) if a < b)
    }
}

/// A validated tree together with its labelling order.
#[derive(Debug, Clone)]
pub struct TreeContext<'a> {
    es: &'a EventStructure,
    members: FixedBitSet,
    parent: Vec<Ev>,
    tree_height: Vec<usize>,
    order: LinearOrder,
}

fn not_a_tree(msg: String) -> Error {
    Error::NotATree(msg)
}

impl<'a> TreeContext<'a> {
    /// Validates `tree` and fixes its order with [`choose_tree_order`].
    pub fn new(es: &'a EventStructure, tree: &[Ev]) -> Result<Self> {
        let n = es.len();
        let mut members = FixedBitSet::with_capacity(n);
        members.extend(tree.iter().copied());
        let mut parent = vec![usize::MAX; n];
        for x in members.ones() {
            match es.lower_covers_of(x) {
                [p] => parent[x] = *p,
                [] => return Err(not_a_tree(format!("{} has no lower cover", es.name(x)))),
                _ => return Err(not_a_tree(format!("{} has several lower covers", es.name(x)))),
            }
        }
        for z in members.ones() {
            for x in members.ones() {
                if !es.lt(x, z) {
                    continue;
                }
                let mut between = es.up_set(x).clone();
                between.intersect_with(es.down_set(z));
                if let Some(y) = between.difference(&members).next() {
                    return Err(not_a_tree(format!(
                        "{} lies between {} and {} but is not in the tree",
                        es.name(y),
                        es.name(x),
                        es.name(z)
                    )));
                }
            }
        }
        let mut tree_height = vec![0; n];
        for x in members.ones() {
            tree_height[x] = es.down_set(x).intersection(&members).count() - 1;
        }
        let roots: Vec<Ev> = members.ones().filter(|&x| tree_height[x] == 0).collect();
        if let Some(&r) = roots.iter().find(|&&r| parent[r] != parent[roots[0]]) {
            return Err(not_a_tree(format!(
                "minimal elements {} and {} have different lower covers",
                es.name(roots[0]),
                es.name(r)
            )));
        }
        let mut ctx = TreeContext { es, members, parent, tree_height, order: LinearOrder::new(n, Vec::new()) };
        ctx.order = ctx.choose_order()?;
        Ok(ctx)
    }

    fn choose_order(&self) -> Result<LinearOrder> {
        let es = self.es;
        let mut seq: Vec<Ev> = self.members.ones().collect();
        seq.sort_by_key(|&x| (self.tree_height[x], x));
        let mut order = LinearOrder::new(es.len(), seq);
        for (x, y) in self.proper_twins() {
            let ox = es.o_set_idx(x, &[x, y]);
            let oy = es.o_set_idx(y, &[x, y]);
            let y_first = if ox == oy || oy.is_subset(&ox) {
                false
            } else if ox.is_subset(&oy) {
                true
            } else {
                return Err(Error::IncomparableTwinOSets(es.name(x).to_string(), es.name(y).to_string()));
            };
            if y_first {
                let (px, py) = (order.position[x].expect("member"), order.position[y].expect("member"));
                order.sequence.swap(px, py);
                order.position[x] = Some(py);
                order.position[y] = Some(px);
            }
        }
        Ok(order)
    }

    /// Pairs `x < y` of events that are the only two children of their parent.
    fn proper_twins(&self) -> Vec<(Ev, Ev)> {
        let mut by_parent: std::collections::BTreeMap<Ev, Vec<Ev>> = Default::default();
        for x in self.members.ones() {
            by_parent.entry(self.parent[x]).or_default().push(x);
        }
        by_parent.into_values().filter(|kids| kids.len() == 2).map(|kids| (kids[0], kids[1])).collect()
    }

    pub fn order(&self) -> &LinearOrder {
        &self.order
    }

    pub fn contains(&self, x: Ev) -> bool {
        self.members.contains(x)
    }

    /// The unique lower cover of a tree event.
    pub fn parent(&self, x: Ev) -> Ev {
        self.parent[x]
    }

    pub fn tree_height(&self, x: Ev) -> usize {
        self.tree_height[x]
    }

    /// Earlier tree events orthogonal to `x`.
    pub fn o_set(&self, x: Ev) -> Vec<Ev> {
        self.es.ortho_set(x).ones().filter(|&y| self.members.contains(y) && self.order.precedes(y, x)).collect()
    }

    /// Members of `O(x)` lying above the lower cover of `x`.
    pub fn c_set(&self, x: Ev) -> Vec<Ev> {
        self.o_set(x).into_iter().filter(|&y| self.es.leq(self.parent[x], y)).collect()
    }

    /// `O(x)` minus `C(x)`.
    pub fn l_set(&self, x: Ev) -> Vec<Ev> {
        self.o_set(x).into_iter().filter(|&y| !self.es.leq(self.parent[x], y)).collect()
    }

    /// The labelling order satisfies the height and twin constraints.
    pub fn order_is_valid(&self) -> bool {
        let es = self.es;
        let seq = &self.order.sequence;
        let heights_ok = seq.windows(2).all(|w| self.tree_height[w[0]] <= self.tree_height[w[1]]);
        let twins_ok = self.proper_twins().into_iter().all(|(x, y)| {
            let (ox, oy) = (es.o_set_idx(x, &[x, y]), es.o_set_idx(y, &[x, y]));
            let (first, second) = if self.order.precedes(x, y) { (ox, oy) } else { (oy, ox) };
            second.is_subset(&first)
        });
        heights_ok && twins_ok
    }
}

/// Order used to label `tree`: tree height, then event index, then twin swaps.
pub fn choose_tree_order(es: &EventStructure, tree: &[Ev]) -> Result<LinearOrder> {
    Ok(TreeContext::new(es, tree)?.order)
}

fn third_letter(a: usize, b: usize) -> usize {
    (0..3).find(|&c| c != a && c != b).expect("three letters")
}

/// Letters in `{0, 1, 2}` for the events of `tree`, indexed by event
/// (`None` outside the tree). Every step is checked against the bounds that
/// hold for degree 3; a failed check is a `TheoremViolation`.
pub fn label_tree(es: &EventStructure, tree: &[Ev]) -> Result<Vec<Option<usize>>> {
    let ctx = TreeContext::new(es, tree)?;
    let mut lab: Vec<Option<usize>> = vec![None; es.len()];
    let got = |lab: &[Option<usize>], y: Ev| lab[y].expect("earlier events are labelled");
    for &x in &ctx.order.sequence {
        let name = es.name(x);
        let c = ctx.c_set(x);
        let l = ctx.l_set(x);
        if c.len() > 2 {
            return Err(Error::theorem("C(x) has at most two elements", name));
        }
        if let Some(&y) = c.iter().find(|&&y| !es.twins_idx(x, y)) {
            return Err(Error::theorem("elements of C(x) are twins of x", format!("{name}, {}", es.name(y))));
        }
        let letter = if c.is_empty() {
            if ctx.tree_height(x) == 0 {
                0
            } else {
                got(&lab, ctx.parent(x))
            }
        } else if l.is_empty() {
            let used: Vec<usize> = c.iter().map(|&y| got(&lab, y)).collect();
            if used.len() == 2 && used[0] == used[1] {
                return Err(Error::theorem("the two elements of C(x) carry different letters", name));
            }
            (0..3).find(|l| !used.contains(l)).expect("at most two letters are used")
        } else {
            let [y] = c[..] else {
                return Err(Error::theorem("C(x) is a singleton when L(x) is non-empty", name));
            };
            let minimal: Vec<Ev> = l.iter().copied().filter(|&z| !l.iter().any(|&w| es.lt(w, z))).collect();
            let [z0] = minimal[..] else {
                return Err(Error::theorem("L(x) has a least element", name));
            };
            let (ly, lz) = (got(&lab, y), got(&lab, z0));
            if ly == lz {
                return Err(Error::theorem(
                    "the C-element and the least L-element carry different letters",
                    format!("{name}: {} and {}", es.name(y), es.name(z0)),
                ));
            }
            third_letter(ly, lz)
        };
        lab[x] = Some(letter);
    }
    for (a, b) in es.orthogonal_pairs() {
        if ctx.contains(a) && ctx.contains(b) && lab[a] == lab[b] {
            return Err(Error::theorem("tree labelling is nice", format!("{} and {}", es.name(a), es.name(b))));
        }
    }
    Ok(lab)
}

/// At most three letters for a forest of degree at most 3.
pub fn label_forest(es: &EventStructure) -> Result<Labelling> {
    if let Some(x) = es.events().find(|&x| es.lower_covers_of(x).len() > 1) {
        return Err(Error::NotAForest(es.name(x).to_string()));
    }
    let d = graph::degree(es);
    if d > 3 {
        return Err(Error::DegreeExceedsThree(d));
    }
    let (lifted, bottom) = es.lift_bottom();
    let bot = lifted.index_of(bottom.as_str())?;
    let tree: Vec<Ev> = lifted.events().filter(|&x| x != bot).collect();
    let lab = label_tree(&lifted, &tree)?;
    let letters = es
        .ids()
        .iter()
        .map(|id| Ok(lab[lifted.index_of(id.as_str())?].expect("every event is in the tree")))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = if es.is_empty() { 0 } else { 3 };
    checked(es, Labelling::from_indices(es, letters, Strategy::Forest).with_alphabet(alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn idx(es: &EventStructure, names: &[&str]) -> Vec<Ev> {
        names.iter().map(|n| es.index_of(n).unwrap()).collect()
    }

    #[test]
    fn forest_fixtures() {
        for name in ["EMPTY", "SINGLE", "CHAIN3", "ANTI3", "CONF2", "FORK", "TWIN2"] {
            let es = fixture(name).unwrap();
            let lab = label_forest(&es).unwrap();
            assert!(lab.letters_used() <= 3, "{name}");
        }
        let anti = label_forest(&fixture("ANTI3").unwrap()).unwrap();
        assert_eq!(anti.letters_used(), 3);
    }

    #[test]
    fn s_is_not_a_forest() {
        assert!(matches!(label_forest(&fixture("S").unwrap()), Err(Error::NotAForest(_))));
    }

    #[test]
    fn degree_four_is_rejected() {
        let es = EventStructure::from_strs(&["a", "b", "c", "d"], &[], &[]).unwrap();
        assert!(matches!(label_forest(&es), Err(Error::DegreeExceedsThree(4))));
    }

    #[test]
    fn tree_validation() {
        let es = fixture("S").unwrap();
        // 4 has two lower covers.
        assert!(matches!(TreeContext::new(&es, &idx(&es, &["4"])), Err(Error::NotATree(_))));
        // 1 and 6 without 3 is not convex.
        let (lifted, _) = es.lift_bottom();
        assert!(matches!(TreeContext::new(&lifted, &idx(&lifted, &["1", "6"])), Err(Error::NotATree(_))));
        // 3 and 5 hang from different events.
        assert!(matches!(TreeContext::new(&lifted, &idx(&lifted, &["3", "5"])), Err(Error::NotATree(_))));
        let ctx = TreeContext::new(&lifted, &idx(&lifted, &["1", "3", "6", "7"])).unwrap();
        assert_eq!(ctx.tree_height(lifted.index_of("6").unwrap()), 2);
        assert!(ctx.order_is_valid());
    }

    #[test]
    fn sets_on_a_fork() {
        // r < x, r < y, x # y, plus z concurrent with everything.
        let es = EventStructure::from_strs(&["r", "x", "y", "z"], &[("r", "x"), ("r", "y")], &[("x", "y")]).unwrap();
        let (lifted, _) = es.lift_bottom();
        let tree: Vec<Ev> = idx(&lifted, &["r", "x", "y", "z"]);
        let ctx = TreeContext::new(&lifted, &tree).unwrap();
        let [r, x, y, z] = tree[..] else { unreachable!() };
        assert_eq!(ctx.order().sequence[..2], [r, z]);
        // z is orthogonal to r and precedes x and y.
        assert_eq!(ctx.o_set(z), [r]);
        assert!(ctx.c_set(z).contains(&r));
        let later = if ctx.order().precedes(x, y) { y } else { x };
        assert_eq!(ctx.c_set(later).len(), 1);
        assert_eq!(ctx.l_set(later), [z]);
        let lab = label_tree(&lifted, &tree).unwrap();
        assert_ne!(lab[x], lab[y]);
        assert_ne!(lab[x], lab[z]);
        assert_ne!(lab[r], lab[z]);
    }

    #[test]
    fn twin_order_prefers_larger_o_set() {
        // x and y are twins under r. w # x, so z (above w) is orthogonal to y only.
        let es =
            EventStructure::from_strs(&["r", "w", "x", "y", "z"], &[("r", "x"), ("r", "y"), ("w", "z")], &[("w", "x")])
                .unwrap();
        let (lifted, _) = es.lift_bottom();
        let tree = idx(&lifted, &["r", "w", "x", "y", "z"]);
        let ctx = TreeContext::new(&lifted, &tree).unwrap();
        assert!(ctx.order_is_valid());
        let (x, y) = (lifted.index_of("x").unwrap(), lifted.index_of("y").unwrap());
        assert!(lifted.o_set_idx(x, &[x, y]).is_subset(&lifted.o_set_idx(y, &[x, y])));
        assert!(ctx.order().precedes(y, x));
        assert!(label_tree(&lifted, &tree).is_ok());
    }
}
