use crate::model::{Ev, EventStructure};

/// All straight cycles with length in `min_len..=max_len`.
///
/// A straight cycle visits pairwise incomparable events, consecutive ones
/// orthogonal. Each cycle is reported once: it starts at its least vertex
/// and runs in the direction whose second vertex is smaller than its last.
/// Lengths below 3 are treated as 3.
pub fn straight_cycles(es: &EventStructure, min_len: usize, max_len: usize) -> Vec<Vec<Ev>> {
    let min_len = min_len.max(3);
    let mut out = Vec::new();
    if max_len < min_len {
        return out;
    }
    let mut path = Vec::new();
    for start in es.events() {
        path.push(start);
        extend(es, &mut path, min_len, max_len, &mut out);
        path.pop();
    }
    out
}

fn extend(es: &EventStructure, path: &mut Vec<Ev>, min_len: usize, max_len: usize, out: &mut Vec<Vec<Ev>>) {
    let start = path[0];
    let last = *path.last().expect("path is non-empty");
    if path.len() >= min_len && path.len() >= 3 && es.is_orthogonal(last, start) && path[1] < last {
        out.push(path.clone());
    }
    if path.len() == max_len {
        return;
    }
    for next in es.ortho_set(last).ones() {
        if next <= start || path.contains(&next) || path.iter().any(|&p| es.comparable(p, next)) {
            continue;
        }
        path.push(next);
        extend(es, path, min_len, max_len, out);
        path.pop();
    }
}

/// Pairs of 3-cliques `{x0,x1,x2}`, `{x1,x2,x3}` sharing a face whose
/// outer vertices are incomparable. Empty for every structure of degree at
/// most 3; returned as `(x0, x1, x2, x3)`.
pub fn shared_face_violations(es: &EventStructure) -> Vec<(Ev, Ev, Ev, Ev)> {
    let mut out = Vec::new();
    for (x1, x2) in es.orthogonal_pairs() {
        let mut common = es.ortho_set(x1).clone();
        common.intersect_with(es.ortho_set(x2));
        let apexes: Vec<Ev> = common.ones().collect();
        for (i, &x0) in apexes.iter().enumerate() {
            for &x3 in &apexes[i + 1..] {
                if !es.comparable(x0, x3) {
                    out.push((x0, x1, x2, x3));
                }
            }
        }
    }
    out
}
