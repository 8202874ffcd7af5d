//! Twelve letters for simple structures of degree at most 3.
//!
//! A structure is simple when it is graded and every 3-clique of its
//! orthogonality graph contains a minimal conflict. After adding a bottom,
//! events split by their number of lower covers: the bottom, the events
//! with one lower cover (grouped into trees hanging from their first
//! ancestor with two lower covers) and the events with two. Trees get three
//! letters each and are combined through a 4-coloring of the quotient.

use std::cmp::Ordering;

use super::{checked, label_quotient, ClassLabeller, Labelling, Partition, Strategy};
use crate::error::{Error, Result};
use crate::graph::{self, Coloring};
use crate::model::{Ev, EventStructure};

/// Shape of the decomposition used by [`label_simple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SimpleReport {
    /// Events with exactly one lower cover.
    pub single_parent: usize,
    /// Events with exactly two lower covers.
    pub double_parent: usize,
    /// Number of tree classes.
    pub trees: usize,
}

fn not_simple(condition: &str, witness: String) -> Error {
    Error::NotSimple { condition: condition.to_string(), witness }
}

/// Checks degree at most 3, gradedness and the 3-clique condition.
pub fn check_simple(es: &EventStructure) -> Result<()> {
    let d = graph::degree(es);
    if d > 3 {
        return Err(not_simple("degree at most 3", format!("degree {d}")));
    }
    for (p, c) in es.covers() {
        if es.height_of(c) != es.height_of(p) + 1 {
            return Err(not_simple("graded", format!("{} < {}", es.name(p), es.name(c))));
        }
    }
    for (a, b) in es.orthogonal_pairs() {
        let mut common = es.ortho_set(a).clone();
        common.intersect_with(es.ortho_set(b));
        for c in common.ones().filter(|&c| c > b) {
            let has_conflict =
                es.is_minimal_conflict(a, b) || es.is_minimal_conflict(a, c) || es.is_minimal_conflict(b, c);
            if !has_conflict {
                return Err(not_simple(
                    "every 3-clique contains a minimal conflict",
                    format!("{}, {}, {}", es.name(a), es.name(b), es.name(c)),
                ));
            }
        }
    }
    Ok(())
}

pub fn label_simple(es: &EventStructure) -> Result<Labelling> {
    label_simple_report(es).map(|(lab, _)| lab)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Part {
    Bottom,
    Tree(usize),
    Top,
}

/// Like [`label_simple`], also describing the decomposition.
pub fn label_simple_report(es: &EventStructure) -> Result<(Labelling, SimpleReport)> {
    check_simple(es)?;
    let (l, bottom) = es.lift_bottom();
    let bot = l.index_of(bottom.as_str())?;
    let n = l.len();
    let covers = |x: Ev| l.lower_covers_of(x).len();
    if let Some(x) = l.events().find(|&x| covers(x) >= 3) {
        return Err(Error::theorem("no event has three lower covers", l.name(x)));
    }
    if let Some(x) = l.events().find(|&x| covers(x) == 0 && x != bot) {
        return Err(Error::theorem("the bottom is the only minimal event", l.name(x)));
    }

    let mut order: Vec<Ev> = l.events().collect();
    order.sort_by_key(|&x| (l.height_of(x), x));
    let mut pos = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let before = |a: Ev, b: Ev| pos[a] < pos[b];

    // Events with two lower covers: first fit along the order, at most three letters.
    let mut inner = vec![usize::MAX; n];
    inner[bot] = 0;
    let mut report = SimpleReport::default();
    for &x in order.iter().filter(|&&x| covers(x) == 2) {
        report.double_parent += 1;
        let o: Vec<Ev> = l.ortho_set(x).ones().filter(|&y| covers(y) == 2 && before(y, x)).collect();
        if o.len() > 2 {
            return Err(Error::theorem("an event with two lower covers has at most two earlier neighbors", l.name(x)));
        }
        if let Some(&y) = o.iter().find(|&&y| !l.lower_covers_of(y).iter().all(|p| l.lower_covers_of(x).contains(p))) {
            return Err(Error::theorem(
                "earlier neighbors share their lower covers",
                format!("{}, {}", l.name(x), l.name(y)),
            ));
        }
        inner[x] = (0..3).find(|c| o.iter().all(|&y| inner[y] != *c)).expect("two neighbors leave a letter");
    }

    // Events with one lower cover hang from their first ancestor outside that set.
    let mut root = vec![usize::MAX; n];
    for &x in &order {
        if covers(x) == 1 {
            report.single_parent += 1;
            let p = l.lower_covers_of(x)[0];
            root[x] = if covers(p) == 1 { root[p] } else { p };
        }
    }
    let part: Vec<Part> = l
        .events()
        .map(|x| match covers(x) {
            0 => Part::Bottom,
            1 => Part::Tree(pos[root[x]]),
            _ => Part::Top,
        })
        .collect();
    let partition = Partition::from_class_ids(&part);
    let class_part: Vec<Part> = partition.classes().iter().map(|c| part[c[0]]).collect();

    for (c, class) in partition.classes().iter().enumerate() {
        if let Part::Tree(_) = class_part[c] {
            report.trees += 1;
            let lab = super::label_tree(&l, class).map_err(|e| match e {
                Error::NotATree(msg) => Error::theorem("single-parent classes are trees", msg),
                other => other,
            })?;
            for &x in class {
                inner[x] = lab[x].expect("tree member");
            }
        }
    }

    // Quotient coloring: bottom 0, trees first fit in order of their roots, the rest 3.
    let q = crate::label::quotient_graph(&l, &partition);
    let mut tree_classes: Vec<usize> =
        (0..partition.len()).filter(|&c| matches!(class_part[c], Part::Tree(_))).collect();
    tree_classes.sort_by_key(|&c| class_part[c]);
    let mut qcolor = vec![usize::MAX; partition.len()];
    for (c, p) in class_part.iter().enumerate() {
        match p {
            Part::Bottom => qcolor[c] = 0,
            Part::Top => qcolor[c] = 3,
            Part::Tree(_) => {}
        }
    }
    for (i, &cx) in tree_classes.iter().enumerate() {
        let rho_x = root[partition.classes()[cx][0]];
        let earlier: Vec<usize> = tree_classes[..i].iter().copied().filter(|&cy| q.has_edge(cx, cy)).collect();
        if earlier.len() > 2 {
            return Err(Error::theorem("a tree has at most two earlier neighboring trees", l.name(rho_x)));
        }
        let mut images = Vec::new();
        for &cy in &earlier {
            let f = attachment(
                &l,
                partition.classes()[cy].as_slice(),
                partition.classes()[cx].as_slice(),
                root[partition.classes()[cy][0]],
                rho_x,
            )?;
            if images.contains(&f) {
                return Err(Error::theorem("neighboring trees attach at distinct events", l.name(f)));
            }
            images.push(f);
        }
        qcolor[cx] = (0..3).find(|c| earlier.iter().all(|&cy| qcolor[cy] != *c)).expect("two neighbors leave a color");
    }

    let lab = label_quotient(&l, &partition, ClassLabeller::Given(&inner), &Coloring::from_colors(qcolor))?;
    let letters = es
        .ids()
        .iter()
        .map(|id| lab.letter(id.as_str()).ok_or_else(|| Error::UnlabelledEvent(id.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = if es.is_empty() { 0 } else { 12 };
    let lab = Labelling::from_indices(es, letters, Strategy::Simple).with_alphabet(alphabet);
    Ok((checked(es, lab)?, report))
}

/// For an earlier tree `ty` (root `rho_y`) adjacent to `tx` (root `rho_x`):
/// the least event above `rho_y`, below the first witness `y'`, that is not
/// below `rho_x`. It must be orthogonal to `rho_x` and have only lower
/// covers of `rho_x` as lower covers.
fn attachment(l: &EventStructure, ty: &[Ev], tx: &[Ev], rho_y: Ev, rho_x: Ev) -> Result<Ev> {
    let (y1, x1) = ty
        .iter()
        .flat_map(|&y| tx.iter().map(move |&x| (y, x)))
        .find(|&(y, x)| l.is_orthogonal(y, x))
        .expect("adjacent trees have an orthogonal pair");
    let witness = format!("{} / {}", l.name(y1), l.name(x1));
    if !l.is_orthogonal(y1, rho_x) {
        return Err(Error::theorem("the witness from the earlier tree is orthogonal to the later root", witness));
    }
    let f = l
        .up_set(rho_y)
        .ones()
        .filter(|&z| l.leq(z, y1) && !l.leq(z, rho_x))
        .min_by(|&a, &b| match (l.lt(a, b), l.lt(b, a)) {
            (true, _) => Ordering::Less,
            (_, true) => Ordering::Greater,
            _ => a.cmp(&b),
        })
        .expect("the witness itself qualifies");
    if !l.is_orthogonal(f, rho_x) {
        return Err(Error::theorem("the attachment is orthogonal to the later root", witness));
    }
    if !l.lower_covers_of(f).iter().all(|p| l.lower_covers_of(rho_x).contains(p)) {
        return Err(Error::theorem("the attachment shares its lower covers with the later root", witness));
    }
    Ok(f)
}
