//! Chromatic-number machinery: an exact branch-and-bound solver, minimal
//! d-chromatic subgraphs, parity-controlled paths, odd theta subgraphs,
//! and the pipeline certifying consecutive (not just even) cycle lengths
//! in graphs of large chromatic number.

use std::collections::{BTreeMap, HashSet, VecDeque};

use thiserror::Error;

use crate::extraction::{
    ab_path_lengths, consecutive_even_cycles, CertificateParity, CycleFamilyCertificate,
    PipelineConfig, PipelineError, StageRecord, ThetaSubgraph,
};
use crate::graph::{
    bfs_layering, center_vertex, connected_components, CycleWitness, Graph, PathWitness, Subgraph,
    VertexId, VertexSet, WitnessError,
};
use crate::spectrum::{cycle_spectrum, odd_length_count, CycleSpectrum, SpectrumOptions};

/// Branch-node budget for the exact coloring solver; beyond it the solver
/// refuses rather than approximates.
pub const DEFAULT_CHROMATIC_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChromaticError {
    #[error("coloring search exceeded its branch budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is bipartite; no odd structure exists")]
    Bipartite,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("invalid witness: {0}")]
    Witness(#[from] WitnessError),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("spectrum could not be computed exhaustively within budget")]
    SpectrumIncomplete,
}

/// A proper coloring together with the number of colors it uses.
#[derive(Debug, Clone)]
pub struct ColoringWitness {
    pub colors: Vec<u32>,
    pub color_count: u32,
}

impl ColoringWitness {
    pub fn validate(&self, g: &Graph) -> Result<(), ChromaticError> {
        if self.colors.len() != g.vertex_count() {
            return Err(ChromaticError::Precondition(
                "coloring length differs from vertex count".into(),
            ));
        }
        for (u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Err(ChromaticError::Precondition(format!(
                    "edge {{{u}, {v}}} is monochromatic"
                )));
            }
        }
        let distinct: HashSet<u32> = self.colors.iter().copied().collect();
        if distinct.len() as u32 != self.color_count {
            return Err(ChromaticError::Precondition(
                "color count does not match the distinct colors used".into(),
            ));
        }
        Ok(())
    }
}

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// saturation-ordered backtracking for each candidate color count.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<(u32, ColoringWitness), ChromaticError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((
            0,
            ColoringWitness {
                colors: Vec::new(),
                color_count: 0,
            },
        ));
    }
    let lb = greedy_clique(g).len() as u32;
    let (ub, greedy) = dsatur_greedy(g);
    if lb == ub {
        return Ok((
            ub,
            ColoringWitness {
                colors: greedy,
                color_count: ub,
            },
        ));
    }
    let mut nodes: u64 = 0;
    for k in lb..ub {
        let mut colors = vec![u32::MAX; n];
        match k_colorable(g, k, &mut colors, &mut nodes, budget) {
            Outcome::Colored => {
                let witness = ColoringWitness {
                    colors,
                    color_count: k,
                };
                witness.validate(g)?;
                return Ok((k, witness));
            }
            Outcome::Impossible => continue,
            Outcome::OutOfBudget => return Err(ChromaticError::BudgetExceeded(budget)),
        }
    }
    Ok((
        ub,
        ColoringWitness {
            colors: greedy,
            color_count: ub,
        },
    ))
}

enum Outcome {
    Colored,
    Impossible,
    OutOfBudget,
}

fn k_colorable(g: &Graph, k: u32, colors: &mut [u32], nodes: &mut u64, budget: u64) -> Outcome {
    if *nodes >= budget {
        return Outcome::OutOfBudget;
    }
    *nodes += 1;
    // Saturation-degree ordering: most distinctly-colored neighbors first.
    let n = g.vertex_count();
    let mut pick: Option<(usize, usize, VertexId)> = None;
    for v in 0..n {
        if colors[v] != u32::MAX {
            continue;
        }
        let sat: HashSet<u32> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| colors[w] != u32::MAX)
            .map(|&w| colors[w])
            .collect();
        let key = (sat.len(), g.degree(v), v);
        match pick {
            Some((s, d, u)) if (s, d, n - u) >= (key.0, key.1, n - key.2) => {}
            _ => pick = Some(key),
        }
    }
    let Some((_, _, v)) = pick else {
        return Outcome::Colored;
    };
    let used = colors
        .iter()
        .filter(|&&c| c != u32::MAX)
        .max()
        .map_or(0, |&m| m + 1);
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        match k_colorable(g, k, colors, nodes, budget) {
            Outcome::Colored => return Outcome::Colored,
            Outcome::OutOfBudget => return Outcome::OutOfBudget,
            Outcome::Impossible => colors[v] = u32::MAX,
        }
    }
    Outcome::Impossible
}

fn greedy_clique(g: &Graph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = Vec::new();
    for &seed in order.iter().take(8) {
        let mut clique = vec![seed];
        for &v in &order {
            if v != seed && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn dsatur_greedy(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.vertex_count();
    let mut colors = vec![u32::MAX; n];
    for _ in 0..n {
        let mut pick: Option<(usize, usize, VertexId)> = None;
        for v in 0..n {
            if colors[v] != u32::MAX {
                continue;
            }
            let sat: HashSet<u32> = g
                .neighbors(v)
                .iter()
                .filter(|&&w| colors[w] != u32::MAX)
                .map(|&w| colors[w])
                .collect();
            let key = (sat.len(), g.degree(v), v);
            match pick {
                Some((s, d, u)) if (s, d, n - u) >= (key.0, key.1, n - key.2) => {}
                _ => pick = Some(key),
            }
        }
        let (_, _, v) = pick.unwrap();
        let mut c = 0;
        while g.neighbors(v).iter().any(|&w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    let count = colors.iter().copied().max().map_or(0, |m| m + 1);
    (count, colors)
}

fn is_two_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() {
        return false;
    }
    for v in 0..n {
        let rest: Vec<VertexId> = (0..n).filter(|&u| u != v).collect();
        if !g.induced(&rest).graph.is_connected() {
            return false;
        }
    }
    true
}

/// Vertex-minimal (then edge-minimal) subgraph of chromatic number exactly
/// `d`; greedy deletion in id order. For d >= 3 the result has no
/// cut-vertex, which is asserted.
pub fn critical_subgraph(g: &Graph, d: u32, budget: u64) -> Result<Subgraph, ChromaticError> {
    let (chi, _) = chromatic_number(g, budget)?;
    if chi < d {
        return Err(ChromaticError::Precondition(format!(
            "chromatic number {chi} is below the target {d}"
        )));
    }
    let mut verts: Vec<VertexId> = g.vertices().collect();
    loop {
        let mut removed = false;
        for idx in 0..verts.len() {
            let mut candidate = verts.clone();
            candidate.remove(idx);
            let sub = g.induced(&candidate);
            let (c, _) = chromatic_number(&sub.graph, budget)?;
            if c >= d {
                verts = candidate;
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    let sub = g.induced(&verts);
    let mut edges: Vec<(VertexId, VertexId)> = sub.graph.edges().collect();
    loop {
        let mut removed = false;
        for idx in 0..edges.len() {
            let mut candidate = edges.clone();
            candidate.remove(idx);
            let trial = Graph::new(sub.graph.vertex_count(), &candidate).unwrap();
            let (c, _) = chromatic_number(&trial, budget)?;
            if c >= d {
                edges = candidate;
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    let graph = Graph::new(sub.graph.vertex_count(), &edges).unwrap();
    let (c, _) = chromatic_number(&graph, budget)?;
    debug_assert_eq!(c, d, "greedy minimization lands exactly on the target");
    if d >= 3 && !is_two_connected(&graph) {
        return Err(ChromaticError::NotTwoConnected);
    }
    Ok(Subgraph {
        graph,
        to_parent: sub.to_parent,
    })
}

/// An odd cycle in a non-bipartite graph: a same-parity edge of a BFS tree
/// closed through the tree.
pub fn find_odd_cycle(g: &Graph) -> Option<CycleWitness> {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if depth[start] != usize::MAX {
            continue;
        }
        depth[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (depth[w] + depth[v]) % 2 == 0 && w != v {
                    // Same parity: the tree paths to their meeting point
                    // plus this edge close an odd cycle.
                    let (mut a, mut b) = (v, w);
                    let mut up_a = vec![a];
                    let mut up_b = vec![b];
                    while depth[a] > depth[b] {
                        a = parent[a];
                        up_a.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        up_b.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        up_a.push(a);
                        up_b.push(b);
                    }
                    up_a.extend(up_b.into_iter().rev().skip(1).take(usize::MAX));
                    let cycle = CycleWitness::new(up_a);
                    debug_assert!(cycle.len() % 2 == 1);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Unit-capacity max flow on a small directed network, breadth-first
/// augmentation. Used for vertex-disjoint path extraction.
struct UnitFlow {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl UnitFlow {
    fn new(nodes: usize) -> Self {
        UnitFlow {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(1);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut pred: Vec<Option<usize>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &e in &self.adj[v] {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    pred[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while let Some(e) = pred[v] {
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        true
    }

    fn flow_on(&self, e: usize) -> bool {
        self.cap[e ^ 1] > 0
    }
}

/// Simple paths of odd and even length between two vertices of a
/// 2-connected non-bipartite graph.
///
/// Construction: fix an odd cycle C; route two vertex-disjoint paths from
/// the endpoints to C by unit-capacity max flow, then go around C both
/// ways. The two arcs of an odd cycle have opposite parity.
pub fn parity_paths(
    h: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<(PathWitness, PathWitness), ChromaticError> {
    let n = h.vertex_count();
    if u >= n || v >= n || u == v {
        return Err(ChromaticError::Precondition(
            "endpoints must be two distinct vertices".into(),
        ));
    }
    if h.is_bipartite() {
        return Err(ChromaticError::Bipartite);
    }
    if !is_two_connected(h) {
        return Err(ChromaticError::NotTwoConnected);
    }
    let cycle = find_odd_cycle(h).expect("non-bipartite graph has an odd cycle");
    let on_cycle: HashSet<VertexId> = cycle.vertices.iter().copied().collect();

    // Nodes: in(w) = 2w, out(w) = 2w+1, source = 2n, sink = 2n+1. Cycle
    // vertices are sinks only, so paths stop at their first cycle hit.
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = UnitFlow::new(2 * n + 2);
    let mut arc_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let add = |net: &mut UnitFlow, map: &mut BTreeMap<(usize, usize), usize>, a: usize, b: usize| {
        map.insert((a, b), net.to.len());
        net.add_edge(a, b);
    };
    for w in 0..n {
        if on_cycle.contains(&w) {
            add(&mut net, &mut arc_of, 2 * w, sink);
        } else {
            add(&mut net, &mut arc_of, 2 * w, 2 * w + 1);
        }
    }
    for (a, b) in h.edges() {
        if !on_cycle.contains(&a) {
            add(&mut net, &mut arc_of, 2 * a + 1, 2 * b);
        }
        if !on_cycle.contains(&b) {
            add(&mut net, &mut arc_of, 2 * b + 1, 2 * a);
        }
    }
    add(&mut net, &mut arc_of, source, 2 * u);
    add(&mut net, &mut arc_of, source, 2 * v);
    let mut flow = 0;
    while net.augment(source, sink) {
        flow += 1;
    }
    if flow < 2 {
        return Err(ChromaticError::SearchFailed(
            "could not route two disjoint paths to the odd cycle".into(),
        ));
    }

    let walk = |start: VertexId| -> Vec<VertexId> {
        let mut path = vec![start];
        let mut cur = start;
        while !on_cycle.contains(&cur) {
            let next = h
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| {
                    arc_of
                        .get(&(2 * cur + 1, 2 * w))
                        .is_some_and(|&e| net.flow_on(e))
                })
                .expect("unit flow leaves every interior vertex");
            path.push(next);
            cur = next;
        }
        path
    };
    let path_u = walk(u);
    let path_v = walk(v);
    let w_end = *path_u.last().unwrap();
    let x_end = *path_v.last().unwrap();
    debug_assert_ne!(w_end, x_end);

    // The two arcs of the odd cycle between the landing points.
    let k = cycle.len();
    let iw = cycle.vertices.iter().position(|&c| c == w_end).unwrap();
    let ix = cycle.vertices.iter().position(|&c| c == x_end).unwrap();
    let mut arc1 = Vec::new();
    let mut idx = iw;
    loop {
        arc1.push(cycle.vertices[idx]);
        if idx == ix {
            break;
        }
        idx = (idx + 1) % k;
    }
    let mut arc2 = Vec::new();
    let mut idx = iw;
    loop {
        arc2.push(cycle.vertices[idx]);
        if idx == ix {
            break;
        }
        idx = (idx + k - 1) % k;
    }

    let assemble = |arc: &[VertexId]| -> PathWitness {
        let mut verts = path_u.clone();
        verts.extend_from_slice(&arc[1..]);
        verts.extend(path_v.iter().rev().skip(1));
        PathWitness::new(verts)
    };
    let p1 = assemble(&arc1);
    let p2 = assemble(&arc2);
    p1.validate(h)?;
    p2.validate(h)?;
    debug_assert_ne!(p1.len_edges() % 2, p2.len_edges() % 2);
    if p1.len_edges() % 2 == 1 {
        Ok((p1, p2))
    } else {
        Ok((p2, p1))
    }
}

/// Upgrades an even cycle to an odd theta subgraph containing it: a path
/// between two cycle vertices, internally off the cycle, whose length
/// mismatches the cycle distance in parity.
///
/// Candidates come from a parity-layered breadth-first search; walks that
/// fail simplicity fall back to a bounded depth-first path search.
pub fn odd_theta(
    h: &Graph,
    c: &CycleWitness,
    budget: u64,
) -> Result<ThetaSubgraph, ChromaticError> {
    c.validate(h)?;
    if c.len() % 2 != 0 {
        return Err(ChromaticError::Precondition(
            "the anchor cycle must have even length".into(),
        ));
    }
    if h.is_bipartite() {
        return Err(ChromaticError::Bipartite);
    }
    let k = c.len();
    let pos: BTreeMap<VertexId, usize> =
        c.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let on_cycle: HashSet<VertexId> = c.vertices.iter().copied().collect();

    let mut best: Option<Vec<VertexId>> = None;
    for (ia, &a) in c.vertices.iter().enumerate() {
        for &b in c.vertices.iter().skip(ia + 1) {
            let ib = pos[&b];
            let cycle_dist = (ib - ia).min(k - (ib - ia));
            let want_parity = (cycle_dist + 1) % 2;
            // Interior must avoid the cycle: search in h minus the other
            // cycle vertices.
            let allowed: Vec<bool> = (0..h.vertex_count())
                .map(|w| w == a || w == b || !on_cycle.contains(&w))
                .collect();
            let cap = best.as_ref().map_or(h.vertex_count(), |p| p.len() - 1);
            if let Some(path) = parity_path(h, &allowed, a, b, want_parity, cap, budget) {
                if best.as_ref().is_none_or(|p| path.len() < p.len()) {
                    best = Some(path);
                }
            }
        }
    }
    let q = best.ok_or_else(|| {
        ChromaticError::SearchFailed(format!(
            "no parity-mismatched path between cycle vertices within {budget} nodes"
        ))
    })?;

    let theta = split_cycle_with_ear(c, q);
    theta
        .validate(h)
        .map_err(|e| ChromaticError::SearchFailed(format!("assembled theta invalid: {e}")))?;
    if !theta.is_odd() {
        return Err(ChromaticError::SearchFailed(
            "assembled theta is bipartite".into(),
        ));
    }
    Ok(theta)
}

fn split_cycle_with_ear(c: &CycleWitness, ear: Vec<VertexId>) -> ThetaSubgraph {
    let h1 = ear[0];
    let h2 = *ear.last().unwrap();
    let k = c.len();
    let i1 = c.vertices.iter().position(|&v| v == h1).unwrap();
    let mut rotated = Vec::with_capacity(k);
    rotated.extend_from_slice(&c.vertices[i1..]);
    rotated.extend_from_slice(&c.vertices[..i1]);
    let i2 = rotated.iter().position(|&v| v == h2).unwrap();
    let arc1: Vec<VertexId> = rotated[..=i2].to_vec();
    let mut arc2: Vec<VertexId> = rotated[i2..].to_vec();
    arc2.push(h1);
    arc2.reverse();
    ThetaSubgraph {
        hubs: (h1, h2),
        paths: [
            PathWitness::new(arc1),
            PathWitness::new(arc2),
            PathWitness::new(ear),
        ],
    }
}

/// Shortest simple path from `a` to `b` of the requested parity within the
/// allowed vertex set. A parity-layered BFS proposes a walk; if the walk
/// repeats vertices, a budgeted iterative-deepening search takes over.
fn parity_path(
    h: &Graph,
    allowed: &[bool],
    a: VertexId,
    b: VertexId,
    parity: usize,
    max_len: usize,
    budget: u64,
) -> Option<Vec<VertexId>> {
    let n = h.vertex_count();
    let idx = |v: VertexId, p: usize| 2 * v + p;
    let mut pred: Vec<Option<usize>> = vec![None; 2 * n];
    let mut dist = vec![usize::MAX; 2 * n];
    dist[idx(a, 0)] = 0;
    let mut queue = VecDeque::from([idx(a, 0)]);
    while let Some(s) = queue.pop_front() {
        let (v, p) = (s / 2, s % 2);
        for &w in h.neighbors(v) {
            if !allowed[w] {
                continue;
            }
            let t = idx(w, 1 - p);
            if dist[t] == usize::MAX {
                dist[t] = dist[s] + 1;
                pred[t] = Some(s);
                queue.push_back(t);
            }
        }
    }
    let target = idx(b, parity);
    if dist[target] != usize::MAX && dist[target] <= max_len {
        let mut walk = Vec::new();
        let mut s = target;
        walk.push(b);
        while let Some(q) = pred[s] {
            walk.push(q / 2);
            s = q;
        }
        walk.reverse();
        let distinct: HashSet<VertexId> = walk.iter().copied().collect();
        if distinct.len() == walk.len() {
            return Some(walk);
        }
    } else if dist[target] == usize::MAX {
        return None; // no walk of that parity at all
    }

    // Walk was non-simple: iterative deepening over simple paths.
    let mut nodes = 0u64;
    for depth in (1..=max_len).filter(|d| d % 2 == parity) {
        let mut path = vec![a];
        let mut on_path = vec![false; n];
        on_path[a] = true;
        if dfs_exact_path(h, allowed, b, depth, &mut path, &mut on_path, &mut nodes, budget) {
            return Some(path);
        }
        if nodes >= budget {
            return None;
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn dfs_exact_path(
    h: &Graph,
    allowed: &[bool],
    b: VertexId,
    depth: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    nodes: &mut u64,
    budget: u64,
) -> bool {
    if *nodes >= budget {
        return false;
    }
    *nodes += 1;
    let v = *path.last().unwrap();
    if path.len() == depth + 1 {
        return v == b;
    }
    for &w in h.neighbors(v) {
        if !allowed[w] || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if dfs_exact_path(h, allowed, b, depth, path, on_path, nodes, budget) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

/// Result of the odd-cycle-count check against the chromatic number.
#[derive(Debug, Clone)]
pub struct OddLengthCheck {
    pub chromatic_number: u32,
    pub odd_length_count: usize,
    pub passes: bool,
}

/// Graphs of chromatic number 2d+1 carry at least d distinct odd cycle
/// lengths; `passes` records whether the spectrum meets that bound.
pub fn gyarfas_check(
    g: &Graph,
    chi_budget: u64,
    spectrum_options: &SpectrumOptions,
) -> Result<OddLengthCheck, ChromaticError> {
    let (chi, _) = chromatic_number(g, chi_budget)?;
    let spec = cycle_spectrum(g, spectrum_options);
    if !spec.is_exhaustive() {
        return Err(ChromaticError::SpectrumIncomplete);
    }
    let odd = odd_length_count(&spec);
    let required = (chi.saturating_sub(1) / 2) as usize;
    Ok(OddLengthCheck {
        chromatic_number: chi,
        odd_length_count: odd,
        passes: odd >= required,
    })
}

fn longest_even_cycle(spec: &CycleSpectrum) -> Option<CycleWitness> {
    spec.lengths()
        .iter()
        .rev()
        .find(|&&l| l % 2 == 0)
        .and_then(|l| spec.witness(*l).cloned())
}

/// Pipeline certifying a run of consecutive cycle lengths (both parities)
/// in a graph of chromatic number at least 3.
///
/// Layers the chromatically-heaviest component, restricts to the layer of
/// maximum chromatic number, takes a minimal subgraph of chromatic number
/// max(3, chi/2), upgrades its longest even cycle to an odd theta, and
/// closes AB-paths of every length through equal-length tree paths.
/// Bipartite inputs (and failures of the odd stages) fall back to the
/// even-length pipeline and note why.
pub fn consecutive_cycles_chromatic(
    g: &Graph,
    cfg: &PipelineConfig,
    chi_budget: u64,
) -> Result<CycleFamilyCertificate, PipelineError> {
    chromatic_pipeline_inner(g, cfg, chi_budget).or_else(|err| {
        crate::extraction::spectrum_fallback(g, cfg, CertificateParity::Any, err)
    })
}

fn chromatic_pipeline_inner(
    g: &Graph,
    cfg: &PipelineConfig,
    chi_budget: u64,
) -> Result<CycleFamilyCertificate, PipelineError> {
    let mut trace: Vec<StageRecord> = Vec::new();
    let stage_fail = |stage: &str, reason: String, trace: &[StageRecord]| PipelineError {
        stage: stage.into(),
        reason,
        trace: trace.to_vec(),
    };

    if g.vertex_count() == 0 {
        return Err(stage_fail("chromatic", "graph has no vertices".into(), &trace));
    }

    // Chromatically heaviest component.
    let comps = connected_components(g);
    let mut best: Option<(u32, &Vec<VertexId>)> = None;
    for comp in &comps {
        let sub = g.induced(comp);
        let (chi, _) = chromatic_number(&sub.graph, chi_budget)
            .map_err(|e| stage_fail("chromatic", e.to_string(), &trace))?;
        if best.is_none_or(|(b, _)| chi > b) {
            best = Some((chi, comp));
        }
    }
    let (chi, comp) = best.unwrap();
    trace.push(StageRecord {
        stage: "chromatic".into(),
        detail: format!("chromatic number {chi} on a component of {} vertices", comp.len()),
    });

    let fallback = |mut trace: Vec<StageRecord>,
                    why: String|
     -> Result<CycleFamilyCertificate, PipelineError> {
        trace.push(StageRecord {
            stage: "odd-theta".into(),
            detail: format!("unreachable: {why}; falling back to the even-length pipeline"),
        });
        let mut cert = consecutive_even_cycles(g, 1, cfg)?;
        let mut stages = trace;
        stages.extend(cert.stages);
        cert.stages = stages;
        Ok(cert)
    };

    if chi <= 2 {
        return fallback(trace, "input is bipartite".into());
    }

    let k_sub = g.induced(comp);
    let k_graph = &k_sub.graph;
    let root = center_vertex(k_graph);
    let layering = bfs_layering(k_graph, root).unwrap();
    let radius = layering.layers.len() - 1;

    // Layer of maximum chromatic number (smallest index on ties).
    let mut layer_best: Option<(u32, usize)> = None;
    for (i, layer) in layering.layers.iter().enumerate() {
        let sub = k_graph.induced(layer);
        let (c, _) = chromatic_number(&sub.graph, chi_budget)
            .map_err(|e| stage_fail("layer-chromatic", e.to_string(), &trace))?;
        if layer_best.is_none_or(|(b, _)| c > b) {
            layer_best = Some((c, i));
        }
    }
    let (layer_chi, level) = layer_best.unwrap();
    trace.push(StageRecord {
        stage: "layer-chromatic".into(),
        detail: format!("layer {level} has chromatic number {layer_chi}"),
    });
    if layer_chi < 3 {
        return fallback(trace, "no layer of chromatic number 3 or more".into());
    }

    let target = (chi.div_ceil(2)).max(3).min(layer_chi);
    let layer_sub = k_graph.induced(layering.layer(level));
    let critical = match critical_subgraph(&layer_sub.graph, target, chi_budget) {
        Ok(c) => c,
        Err(e) => return fallback(trace, format!("critical subgraph failed: {e}")),
    };
    trace.push(StageRecord {
        stage: "critical".into(),
        detail: format!(
            "minimal {target}-chromatic subgraph on {} vertices",
            critical.graph.vertex_count()
        ),
    });

    // Longest even cycle in the critical subgraph, upgraded to an odd theta.
    let spec = cycle_spectrum(
        &critical.graph,
        &SpectrumOptions {
            store_witnesses: true,
            ..SpectrumOptions::default()
        },
    );
    let Some(even_cycle) = longest_even_cycle(&spec) else {
        return fallback(trace, "critical subgraph has no even cycle".into());
    };
    let theta_crit = match odd_theta(&critical.graph, &even_cycle, cfg.cycle_search_budget) {
        Ok(t) => t,
        Err(e) => return fallback(trace, format!("odd theta search failed: {e}")),
    };
    trace.push(StageRecord {
        stage: "odd-theta".into(),
        detail: format!("cycles {:?}", theta_crit.cycle_lengths()),
    });

    // Lift to component coordinates: critical -> layer -> component.
    let lift: Vec<VertexId> = critical
        .to_parent
        .iter()
        .map(|&v| layer_sub.to_parent[v])
        .collect();
    let theta_k = theta_crit.map(&lift);
    theta_k
        .validate(k_graph)
        .map_err(|e| stage_fail("odd-theta", format!("lifted theta invalid: {e}"), &trace))?;

    // Assembly: all theta vertices sit in one layer, so every tree path
    // between different branches of their spanning subtree's root has one
    // length 2h, and AB-paths of every length close into cycles.
    let verts: Vec<VertexId> = theta_k.vertices().into_iter().collect();
    for &v in &verts {
        if layering.depth_of(v) != Some(level) {
            return Err(stage_fail(
                "assembly",
                "theta vertex escaped its layer".into(),
                &trace,
            ));
        }
    }
    let mut by_orig = verts.clone();
    by_orig.sort_by_key(|&v| k_sub.to_parent[v]);
    let rho = by_orig[1..]
        .iter()
        .fold(by_orig[0], |acc, &v| layering.lca(acc, v));
    let rho_depth = layering.depth_of(rho).unwrap();
    let half = level - rho_depth;
    if half == 0 {
        return Err(stage_fail(
            "assembly",
            "theta vertices do not branch above their layer".into(),
            &trace,
        ));
    }
    let branch_of = |v: VertexId| -> VertexId {
        let chain = layering.ancestor_chain(v);
        chain[level - rho_depth - 1]
    };
    let a_branch = branch_of(by_orig[0]);
    let a_set: VertexSet = verts
        .iter()
        .copied()
        .filter(|&v| branch_of(v) == a_branch)
        .collect();
    if a_set.len() == verts.len() {
        return Err(stage_fail(
            "assembly",
            "all theta vertices share one branch at the subtree root".into(),
            &trace,
        ));
    }

    let ab = ab_path_lengths(k_graph, &theta_k, &a_set)
        .map_err(|e| stage_fail("assembly", format!("ab-path enumeration failed: {e}"), &trace))?;
    let theta_verts = theta_k.vertices();
    let mut achieved: BTreeMap<usize, CycleWitness> = BTreeMap::new();
    for (&len, path) in &ab {
        let (a_end, b_end) = path.endpoints();
        debug_assert!(a_set.contains(&a_end) && !a_set.contains(&b_end));
        let tree = layering.tree_path(b_end, a_end);
        if tree.len() != 2 * half + 1 {
            return Err(stage_fail(
                "assembly",
                "tree path has unexpected length".into(),
                &trace,
            ));
        }
        if tree[1..tree.len() - 1].iter().any(|v| theta_verts.contains(v)) {
            return Err(stage_fail(
                "assembly",
                "tree path re-enters the theta subgraph".into(),
                &trace,
            ));
        }
        let mut cycle = path.vertices.clone();
        cycle.extend_from_slice(&tree[1..tree.len() - 1]);
        achieved.insert(len + 2 * half, CycleWitness::new(cycle).map(&k_sub.to_parent));
    }
    if achieved.len() < verts.len() - 1 {
        return Err(stage_fail(
            "assembly",
            format!(
                "only {} of {} lengths realized through the non-bipartite theta",
                achieved.len(),
                verts.len() - 1
            ),
            &trace,
        ));
    }

    let lengths: Vec<usize> = achieved.keys().copied().collect();
    let (run_start, run_count) = crate::extraction::longest_step_run(&lengths, 1);
    let cycles: Vec<CycleWitness> = (0..run_count)
        .map(|k| achieved[&(run_start + k)].clone())
        .collect();
    trace.push(StageRecord {
        stage: "certificate".into(),
        detail: format!("run of {run_count} consecutive lengths from {run_start}"),
    });

    let cert = CycleFamilyCertificate {
        cycles,
        parity: CertificateParity::Any,
        run_start,
        run_count,
        shortest_cycle: run_start,
        radius_bound: Some(radius),
        target_run_length: None,
        stages: trace.clone(),
    };
    cert.validate(g)
        .map_err(|e| stage_fail("certificate", format!("replay failed: {e}"), &trace))?;
    Ok(cert)
}
