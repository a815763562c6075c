//! Naive reference implementations used by the test suites.
//!
//! Everything here is deliberately brute force and shares no code with the
//! production algorithms it cross-checks: spectra by subset + permutation
//! enumeration, cuts by trying every bipartition, chromatic numbers by
//! plain backtracking over all colorings.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};

/// Cycle lengths by checking, for every vertex subset, whether its induced
/// subgraph has a Hamiltonian cycle (by permutation search). Only sensible
/// for small graphs.
pub fn spectrum_by_enumeration(g: &Graph) -> BTreeSet<usize> {
    let n = g.vertex_count();
    assert!(n <= 20, "oracle is exponential; refuse n > 20");
    let mut lengths = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 3 || lengths.contains(&k) {
            continue;
        }
        let verts: Vec<VertexId> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if has_hamiltonian_cycle_on(g, &verts) {
            lengths.insert(k);
        }
    }
    lengths
}

fn has_hamiltonian_cycle_on(g: &Graph, verts: &[VertexId]) -> bool {
    // Fix the first vertex, permute the rest, cut the reversal symmetry.
    let k = verts.len();
    let mut perm: Vec<usize> = (1..k).collect();
    loop {
        if perm[0] < perm[k - 2] {
            let mut ok = g.has_edge(verts[0], verts[perm[0]])
                && g.has_edge(verts[perm[k - 2]], verts[0]);
            if ok {
                for w in perm.windows(2) {
                    if !g.has_edge(verts[w[0]], verts[w[1]]) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return true;
            }
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Maximum cut size over all 2^n bipartitions.
pub fn max_cut_by_enumeration(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "oracle is exponential; refuse n > 20");
    let edges: Vec<_> = g.edges().collect();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let cut = edges
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        best = best.max(cut);
    }
    best
}

/// Chromatic number by backtracking over all proper colorings, trying
/// k = 1, 2, ... in order.
pub fn chromatic_by_enumeration(g: &Graph) -> u32 {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    assert!(n <= 16, "oracle is exponential; refuse n > 16");
    for k in 1..=n as u32 {
        let mut colors = vec![u32::MAX; n];
        if color_rec(g, &mut colors, 0, k) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

fn color_rec(g: &Graph, colors: &mut [u32], v: usize, k: u32) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for c in 0..k {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_rec(g, colors, v + 1, k) {
                return true;
            }
            colors[v] = u32::MAX;
        }
    }
    false
}
