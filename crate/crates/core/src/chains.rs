//! Minimum chain covers of the causal order.
//!
//! A maximum matching in the bipartite graph with an edge `x -> y` for every
//! strict comparability `x < y` links each event to its successor in some
//! chain; unmatched events start chains. The number of chains is
//! `n - |matching|`, which by Dilworth equals the width.

use fixedbitset::FixedBitSet;

use crate::model::{Ev, EventStructure};

/// Chains ordered bottom-up, listed by their least member's index.
pub fn min_chain_cover(es: &EventStructure) -> Vec<Vec<Ev>> {
    let n = es.len();
    let succ_candidates: Vec<Vec<Ev>> =
        es.events().map(|x| es.up_set(x).ones().filter(|&y| y != x).collect()).collect();

    let mut match_right: Vec<Option<Ev>> = vec![None; n];
    let mut match_left: Vec<Option<Ev>> = vec![None; n];
    for x in 0..n {
        let mut visited = vec![false; n];
        augment(x, &succ_candidates, &mut visited, &mut match_left, &mut match_right);
    }

    let mut chains: Vec<Vec<Ev>> = (0..n)
        .filter(|&y| match_right[y].is_none())
        .map(|start| {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = match_left[cur] {
                chain.push(next);
                cur = next;
            }
            chain
        })
        .collect();
    chains.sort_by_key(|c| c[0]);
    chains
}

fn augment(
    x: Ev,
    adj: &[Vec<Ev>],
    visited: &mut [bool],
    match_left: &mut [Option<Ev>],
    match_right: &mut [Option<Ev>],
) -> bool {
    for &y in &adj[x] {
        if visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match match_right[y] {
            None => true,
            Some(other) => augment(other, adj, visited, match_left, match_right),
        };
        if free {
            match_left[x] = Some(y);
            match_right[y] = Some(x);
            return true;
        }
    }
    false
}

/// All maximal antichains (Bron–Kerbosch with pivoting on the
/// incomparability graph), each sorted, in discovery order. `None` once more
/// than `limit` have been found.
pub fn maximal_antichains(es: &EventStructure, limit: usize) -> Option<Vec<Vec<Ev>>> {
    let n = es.len();
    let incomparable: Vec<FixedBitSet> = es
        .events()
        .map(|x| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert_range(..);
            s.difference_with(es.down_set(x));
            s.difference_with(es.up_set(x));
            s
        })
        .collect();
    let mut out = Vec::new();
    if n == 0 {
        return Some(out);
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    bron_kerbosch(&incomparable, &mut Vec::new(), p, x, limit, &mut out).then_some(out)
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<Ev>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    limit: usize,
    out: &mut Vec<Vec<Ev>>,
) -> bool {
    if p.is_clear() && x.is_clear() {
        if out.len() == limit {
            return false;
        }
        let mut found = r.clone();
        found.sort_unstable();
        out.push(found);
        return true;
    }
    let pivot = p.ones().chain(x.ones()).max_by_key(|&u| adj[u].intersection(&p).count()).expect("p or x is non-empty");
    let candidates: Vec<Ev> = p.difference(&adj[pivot]).collect();
    for v in candidates {
        r.push(v);
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        if !bron_kerbosch(adj, r, np, nx, limit, out) {
            return false;
        }
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    true
}
