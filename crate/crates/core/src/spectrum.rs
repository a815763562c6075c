//! Exact computation of the set of cycle lengths present in a graph, with
//! pruned backtracking, plus the derived statistics (reciprocal sum,
//! longest runs, odd counts).

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{CycleWitness, Graph, VertexId};

/// Default node-expansion budget for spectrum enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// The set of cycle lengths of a host graph. `exhaustive_up_to` is the
/// largest bound below which the length set is complete; partial results
/// from budget overruns are never silently treated as complete.
#[derive(Debug, Clone)]
pub struct CycleSpectrum {
    host_order: usize,
    lengths: BTreeSet<usize>,
    exhaustive_up_to: usize,
    witnesses: BTreeMap<usize, CycleWitness>,
}

impl CycleSpectrum {
    pub fn lengths(&self) -> &BTreeSet<usize> {
        &self.lengths
    }

    pub fn contains(&self, len: usize) -> bool {
        self.lengths.contains(&len)
    }

    pub fn count(&self) -> usize {
        self.lengths.len()
    }

    pub fn exhaustive_up_to(&self) -> usize {
        self.exhaustive_up_to
    }

    /// True when every possible cycle length of the host was decided.
    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive_up_to >= self.host_order
    }

    pub fn witness(&self, len: usize) -> Option<&CycleWitness> {
        self.witnesses.get(&len)
    }

    pub fn witnesses(&self) -> &BTreeMap<usize, CycleWitness> {
        &self.witnesses
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    /// Minimum length, which equals the girth once the spectrum is
    /// exhaustive at least up to it.
    pub fn min_length(&self) -> Option<usize> {
        self.lengths.first().copied()
    }
}

#[derive(Debug, Clone)]
pub struct SpectrumOptions {
    /// Largest cycle length of interest; `None` means all lengths.
    pub max_len: Option<usize>,
    pub node_budget: u64,
    pub store_witnesses: bool,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            max_len: None,
            node_budget: DEFAULT_NODE_BUDGET,
            store_witnesses: false,
        }
    }
}

impl SpectrumOptions {
    pub fn exhaustive() -> Self {
        Self::default()
    }

    pub fn with_witnesses() -> Self {
        SpectrumOptions {
            store_witnesses: true,
            ..Self::default()
        }
    }
}

/// Single-length query outcome. A budget overrun is reported as `Unknown`,
/// never as a silent `Absent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleSearch {
    Found(CycleWitness),
    Absent,
    Unknown,
}

struct Enumerator<'a> {
    g: &'a Graph,
    /// BFS distance to the current root within the subgraph on ids >= root.
    dist: Vec<u32>,
    root: VertexId,
    cap: usize,
    found: Vec<bool>,
    witnesses: BTreeMap<usize, CycleWitness>,
    store_witnesses: bool,
    only_length: Option<usize>,
    budget: u64,
    exhausted: bool,
    path: Vec<VertexId>,
    on_path: Vec<bool>,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, budget: u64, store_witnesses: bool, only_length: Option<usize>) -> Self {
        let n = g.vertex_count();
        Enumerator {
            g,
            dist: vec![u32::MAX; n],
            root: 0,
            cap: 0,
            found: vec![false; n + 1],
            witnesses: BTreeMap::new(),
            store_witnesses,
            only_length,
            budget,
            exhausted: false,
            path: Vec::with_capacity(n),
            on_path: vec![false; n],
        }
    }

    fn bfs_from_root(&mut self) {
        self.dist.fill(u32::MAX);
        self.dist[self.root] = 0;
        let mut queue = std::collections::VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if w >= self.root && self.dist[w] == u32::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    fn all_found(&self, lo: usize, hi: usize) -> bool {
        (lo.max(3)..=hi).all(|len| self.found[len])
    }

    fn record(&mut self, len: usize) {
        match self.only_length {
            Some(l) if l != len => return,
            _ => {}
        }
        if !self.found[len] {
            self.found[len] = true;
            if self.store_witnesses || self.only_length.is_some() {
                self.witnesses
                    .insert(len, CycleWitness::new(self.path.clone()));
            }
        }
    }

    /// Depth-first extension of a path rooted at the minimum-id vertex of
    /// every cycle it discovers. Each cycle is visited exactly once: all
    /// non-root vertices exceed the root, and the direction with
    /// `path[1] < path.last()` is the canonical one.
    fn dfs(&mut self) {
        if self.exhausted {
            return;
        }
        if self.budget == 0 {
            self.exhausted = true;
            return;
        }
        self.budget -= 1;
        let v = *self.path.last().unwrap();
        if self.path.len() >= 3
            && self.path[1] < v
            && self.g.has_edge(v, self.root)
            && self.path.len() <= self.cap
        {
            self.record(self.path.len());
        }
        if self.done_for_now() {
            return;
        }
        let neighbors = self.g.neighbors(v).to_vec();
        for w in neighbors {
            if w <= self.root || self.on_path[w] {
                continue;
            }
            // Any cycle through this child has at least lo vertices: the
            // extended path plus the cheapest return to the root.
            let lo = self.path.len() + 1 + (self.dist[w] as usize).saturating_sub(1);
            if lo > self.cap || self.all_found(lo, self.cap) {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            self.dfs();
            self.on_path[w] = false;
            self.path.pop();
            if self.exhausted || self.done_for_now() {
                return;
            }
        }
    }

    fn done_for_now(&self) -> bool {
        match self.only_length {
            Some(l) => self.found[l],
            None => false,
        }
    }

    /// Iterative deepening over the length cap so a budget overrun still
    /// yields a sound `exhaustive_up_to`.
    fn run(&mut self, max_cap: usize) -> usize {
        let n = self.g.vertex_count();
        let mut complete_up_to = max_cap.min(2);
        for cap in 3..=max_cap {
            self.cap = cap;
            for root in 0..n {
                self.root = root;
                if self.g.degree(root) < 2 {
                    continue;
                }
                self.bfs_from_root();
                self.path.clear();
                self.on_path.fill(false);
                self.path.push(root);
                self.on_path[root] = true;
                self.dfs();
                self.on_path[root] = false;
                if self.exhausted || self.done_for_now() {
                    break;
                }
            }
            if self.exhausted {
                return complete_up_to;
            }
            complete_up_to = cap;
            if self.done_for_now() {
                break;
            }
        }
        complete_up_to
    }
}

/// Cycle lengths of `g` up to `opts.max_len` (default: all). The result is
/// flagged with the bound up to which it is exhaustive; on budget overrun
/// the bound stops short and the listed lengths remain sound.
pub fn cycle_spectrum(g: &Graph, opts: &SpectrumOptions) -> CycleSpectrum {
    let n = g.vertex_count();
    let max_cap = opts.max_len.unwrap_or(n).min(n);
    let mut e = Enumerator::new(g, opts.node_budget, opts.store_witnesses, None);
    let complete_up_to = if max_cap >= 3 { e.run(max_cap) } else { max_cap };
    let lengths: BTreeSet<usize> = (3..=max_cap).filter(|&l| e.found[l]).collect();
    // A fully covered request extends exhaustiveness to the host order:
    // no cycle can be longer than the vertex count.
    let exhaustive_up_to = if complete_up_to >= max_cap && opts.max_len.unwrap_or(n) >= n {
        n.max(complete_up_to)
    } else {
        complete_up_to
    };
    CycleSpectrum {
        host_order: n,
        lengths,
        exhaustive_up_to,
        witnesses: if opts.store_witnesses {
            e.witnesses
        } else {
            BTreeMap::new()
        },
    }
}

/// Does `g` contain a cycle of exactly this length? Budget overruns report
/// `Unknown` rather than a false `Absent`.
pub fn has_cycle_of_length(g: &Graph, len: usize, node_budget: u64) -> CycleSearch {
    if len < 3 || len > g.vertex_count() {
        return CycleSearch::Absent;
    }
    let mut e = Enumerator::new(g, node_budget, false, Some(len));
    e.cap = len;
    let n = g.vertex_count();
    for root in 0..n {
        e.root = root;
        if g.degree(root) < 2 {
            continue;
        }
        e.bfs_from_root();
        e.path.clear();
        e.on_path.fill(false);
        e.path.push(root);
        e.on_path[root] = true;
        e.dfs();
        e.on_path[root] = false;
        if e.found[len] {
            return CycleSearch::Found(e.witnesses.remove(&len).unwrap());
        }
        if e.exhausted {
            return CycleSearch::Unknown;
        }
    }
    CycleSearch::Absent
}

/// Longest cycle found within the budget; best-effort, no exhaustiveness
/// claim. Used by pipeline fallbacks on small subgraphs.
pub fn longest_cycle(g: &Graph, node_budget: u64) -> Option<CycleWitness> {
    let opts = SpectrumOptions {
        max_len: None,
        node_budget,
        store_witnesses: true,
    };
    let spec = cycle_spectrum(g, &opts);
    spec.lengths
        .last()
        .and_then(|&l| spec.witnesses.get(&l).cloned())
}

pub fn reciprocal_sum(s: &CycleSpectrum) -> f64 {
    s.lengths.iter().map(|&l| 1.0 / l as f64).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunParity {
    Even,
    Odd,
    Any,
}

/// Longest arithmetic run of cycle lengths: step 2 within a parity class,
/// step 1 for `Any`. Ties take the smallest start; empty spectra give (0, 0).
pub fn longest_run(s: &CycleSpectrum, parity: RunParity) -> (usize, usize) {
    let step = match parity {
        RunParity::Any => 1,
        _ => 2,
    };
    let lengths: Vec<usize> = s
        .lengths
        .iter()
        .copied()
        .filter(|&l| match parity {
            RunParity::Even => l % 2 == 0,
            RunParity::Odd => l % 2 == 1,
            RunParity::Any => true,
        })
        .collect();
    let mut best = (0usize, 0usize);
    let mut i = 0;
    while i < lengths.len() {
        let mut j = i;
        while j + 1 < lengths.len() && lengths[j + 1] == lengths[j] + step {
            j += 1;
        }
        let run = (lengths[i], j - i + 1);
        if run.1 > best.1 {
            best = run;
        }
        i = j + 1;
    }
    best
}

pub fn odd_length_count(s: &CycleSpectrum) -> usize {
    s.lengths.iter().filter(|&&l| l % 2 == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, CageName};
    use crate::oracle;

    fn exhaustive(g: &Graph) -> CycleSpectrum {
        cycle_spectrum(g, &SpectrumOptions::exhaustive())
    }

    #[test]
    fn complete_graph_spectra() {
        let s = exhaustive(&generators::complete(5).unwrap());
        assert_eq!(
            s.lengths().iter().copied().collect::<Vec<_>>(),
            vec![3, 4, 5]
        );
        assert!(s.is_exhaustive());
        // average degree d = 4, |C| = d - 1
        assert_eq!(s.count(), 3);
    }

    #[test]
    fn complete_bipartite_spectra() {
        let s = exhaustive(&generators::complete_bipartite(3, 3).unwrap());
        assert_eq!(s.lengths().iter().copied().collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(s.count(), 2);
    }

    #[test]
    fn petersen_spectrum() {
        let s = exhaustive(&generators::cage(CageName::Petersen));
        assert_eq!(
            s.lengths().iter().copied().collect::<Vec<_>>(),
            vec![5, 6, 8, 9]
        );
    }

    #[test]
    fn tree_spectrum_is_empty() {
        let s = exhaustive(&generators::path(6).unwrap());
        assert!(s.lengths().is_empty());
        assert!(s.is_exhaustive());
    }

    #[test]
    fn witnesses_are_valid() {
        let g = generators::cage(CageName::Petersen);
        let s = cycle_spectrum(&g, &SpectrumOptions::with_witnesses());
        for (&len, w) in s.witnesses() {
            assert_eq!(w.len(), len);
            w.validate(&g).unwrap();
        }
        assert_eq!(s.witnesses().len(), s.count());
    }

    #[test]
    fn single_length_queries() {
        let c6 = generators::cycle(6).unwrap();
        match has_cycle_of_length(&c6, 6, 1_000_000) {
            CycleSearch::Found(w) => w.validate(&c6).unwrap(),
            other => panic!("expected a 6-cycle, got {other:?}"),
        }
        assert_eq!(has_cycle_of_length(&c6, 5, 1_000_000), CycleSearch::Absent);

        let p = generators::cage(CageName::Petersen);
        assert_eq!(has_cycle_of_length(&p, 7, 10_000_000), CycleSearch::Absent);
    }

    #[test]
    fn budget_overrun_is_flagged() {
        let g = generators::complete(9).unwrap();
        let s = cycle_spectrum(
            &g,
            &SpectrumOptions {
                max_len: None,
                node_budget: 20,
                store_witnesses: false,
            },
        );
        assert!(!s.is_exhaustive());
        assert!(s.exhaustive_up_to() < 9);

        assert_eq!(has_cycle_of_length(&g, 9, 3), CycleSearch::Unknown);
    }

    #[test]
    fn reciprocal_sums() {
        let k5 = exhaustive(&generators::complete(5).unwrap());
        let expected = 1.0 / 3.0 + 1.0 / 4.0 + 1.0 / 5.0;
        assert!((reciprocal_sum(&k5) - expected).abs() < 1e-12);

        let empty = exhaustive(&generators::path(3).unwrap());
        assert_eq!(reciprocal_sum(&empty), 0.0);

        let k33 = exhaustive(&generators::complete_bipartite(3, 3).unwrap());
        assert!((reciprocal_sum(&k33) - (0.25 + 1.0 / 6.0)).abs() < 1e-12);
    }

    #[test]
    fn longest_runs() {
        let g = generators::complete(5).unwrap();
        let s = exhaustive(&g);
        assert_eq!(longest_run(&s, RunParity::Any), (3, 3));

        // Hand-built spectrum {4,6,8,12} via a disjoint union of cycles.
        let mut edges = Vec::new();
        let mut base = 0;
        for len in [4usize, 6, 8, 12] {
            for i in 0..len {
                edges.push((base + i, base + (i + 1) % len));
            }
            base += len;
        }
        let g = Graph::new(base, &edges).unwrap();
        let s = exhaustive(&g);
        assert_eq!(
            s.lengths().iter().copied().collect::<Vec<_>>(),
            vec![4, 6, 8, 12]
        );
        assert_eq!(longest_run(&s, RunParity::Even), (4, 3));

        let empty = exhaustive(&generators::path(2).unwrap());
        assert_eq!(longest_run(&empty, RunParity::Any), (0, 0));
    }

    #[test]
    fn odd_counts() {
        assert_eq!(odd_length_count(&exhaustive(&generators::complete(5).unwrap())), 2);
        assert_eq!(
            odd_length_count(&exhaustive(&generators::complete_bipartite(3, 3).unwrap())),
            0
        );
        assert_eq!(odd_length_count(&exhaustive(&generators::complete(7).unwrap())), 3);
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        let graphs = vec![
            generators::complete(6).unwrap(),
            generators::complete_bipartite(3, 4).unwrap(),
            generators::cycle(7).unwrap(),
            generators::theta_graph(2, 3, 3).unwrap().0,
            generators::path(6).unwrap(),
        ];
        for g in graphs {
            let s = exhaustive(&g);
            let expected = oracle::spectrum_by_enumeration(&g);
            assert_eq!(s.lengths(), &expected, "mismatch on {g:?}");
        }
    }

    #[test]
    fn theta_spectra_match_arithmetic() {
        for a in 2..=6usize {
            for b in a..=6 {
                for c in b..=6 {
                    let (g, _) = generators::theta_graph(a, b, c).unwrap();
                    let s = exhaustive(&g);
                    let expected: BTreeSet<usize> = [a + b, a + c, b + c].into();
                    assert_eq!(s.lengths(), &expected, "theta({a},{b},{c})");
                }
            }
        }
        // a = 1 cases
        for b in 2..=5usize {
            for c in b..=5 {
                let (g, _) = generators::theta_graph(1, b, c).unwrap();
                let s = exhaustive(&g);
                let expected: BTreeSet<usize> = [1 + b, 1 + c, b + c].into();
                assert_eq!(s.lengths(), &expected, "theta(1,{b},{c})");
            }
        }
    }

    #[test]
    fn longest_cycle_search() {
        let p = generators::cage(CageName::Petersen);
        let w = longest_cycle(&p, 10_000_000).unwrap();
        assert_eq!(w.len(), 9);
        w.validate(&p).unwrap();
    }
}
