//! Immutable simple-graph representation and the structural primitives
//! (girth, cores, BFS layers, boundaries, bipartition heuristics) the rest
//! of the crate builds on.
//!
//! Graphs are immutable after construction. Every subgraph-producing
//! operation returns a [`Subgraph`] carrying a relabeling map back to the
//! parent, so witnesses extracted deep inside a pipeline can always be
//! replayed against the original input.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declared {expected} edges but {found} edge lines were present")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("witness vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("witness repeats vertex {0}")]
    RepeatedVertex(VertexId),
    #[error("witness uses missing edge {{{0}, {1}}}")]
    MissingEdge(VertexId, VertexId),
    #[error("cycle witness has length {0}, minimum is 3")]
    TooShort(usize),
    #[error("empty witness")]
    Empty,
}

/// Immutable simple undirected graph with 0-based vertex ids and sorted
/// adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={})",
            self.vertex_count(),
            self.edge_count
        )
    }
}

impl Graph {
    pub fn new(order: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order {
                return Err(GraphError::VertexOutOfRange { vertex: u, order });
            }
            if v >= order {
                return Err(GraphError::VertexOutOfRange { vertex: v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for v in 0..order {
            adj[v].sort_unstable();
            if adj[v].windows(2).any(|w| w[0] == w[1]) {
                let dup = adj[v]
                    .windows(2)
                    .find(|w| w[0] == w[1])
                    .map(|w| w[0])
                    .unwrap();
                return Err(GraphError::DuplicateEdge(v.min(dup), v.max(dup)));
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    /// Edges as ordered pairs (u, v) with u < v.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn average_degree(&self) -> f64 {
        if self.adj.is_empty() {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.adj.len() as f64
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Proper 2-coloring if one exists (graph may be disconnected).
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `verts`, relabeled to 0..k in the given order.
    /// Duplicate entries are ignored after the first occurrence.
    pub fn induced(&self, verts: &[VertexId]) -> Subgraph {
        let n = self.vertex_count();
        let mut local = vec![usize::MAX; n];
        let mut to_parent = Vec::with_capacity(verts.len());
        for &v in verts {
            assert!(v < n, "induced subgraph vertex out of range");
            if local[v] == usize::MAX {
                local[v] = to_parent.len();
                to_parent.push(v);
            }
        }
        let mut edges = Vec::new();
        for (i, &v) in to_parent.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && j > i {
                    edges.push((i, j));
                }
            }
        }
        let graph = Graph::new(to_parent.len(), &edges).expect("induced subgraph is simple");
        Subgraph { graph, to_parent }
    }

    /// Graph on the same vertex set keeping exactly the given edges.
    pub fn edge_subgraph(&self, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Graph::new(self.vertex_count(), edges)
    }

    /// Edge-list text format: first line `n m`, then `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate();
        let (header_line, header) = loop {
            match lines.next() {
                Some((idx, line)) if line.trim().is_empty() => {
                    // Leading blank lines are tolerated so stream blocks parse.
                    let _ = idx;
                }
                Some((idx, line)) => break (idx + 1, line),
                None => return Err(ParseError::Empty),
            }
        };
        let mut parts = header.split_whitespace();
        let order: usize = parts
            .next()
            .ok_or(ParseError::Malformed {
                line: header_line,
                message: "expected header `n m`".into(),
            })?
            .parse()
            .map_err(|_| ParseError::Malformed {
                line: header_line,
                message: "vertex count is not an integer".into(),
            })?;
        let declared: usize = parts
            .next()
            .ok_or(ParseError::Malformed {
                line: header_line,
                message: "expected header `n m`".into(),
            })?
            .parse()
            .map_err(|_| ParseError::Malformed {
                line: header_line,
                message: "edge count is not an integer".into(),
            })?;
        if parts.next().is_some() {
            return Err(ParseError::Malformed {
                line: header_line,
                message: "header has trailing tokens".into(),
            });
        }

        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); order];
        let mut found = 0usize;
        for (idx, raw) in lines {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let mut it = raw.split_whitespace();
            let u: usize = it
                .next()
                .unwrap()
                .parse()
                .map_err(|_| ParseError::Malformed {
                    line,
                    message: "endpoint is not an integer".into(),
                })?;
            let v: usize = it
                .next()
                .ok_or(ParseError::Malformed {
                    line,
                    message: "expected `u v`".into(),
                })?
                .parse()
                .map_err(|_| ParseError::Malformed {
                    line,
                    message: "endpoint is not an integer".into(),
                })?;
            if it.next().is_some() {
                return Err(ParseError::Malformed {
                    line,
                    message: "edge line has trailing tokens".into(),
                });
            }
            if u >= order {
                return Err(ParseError::VertexOutOfRange {
                    line,
                    vertex: u,
                    order,
                });
            }
            if v >= order {
                return Err(ParseError::VertexOutOfRange {
                    line,
                    vertex: v,
                    order,
                });
            }
            if u == v {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(ParseError::DuplicateEdge {
                    line,
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            adj[u].push(v);
            adj[v].push(u);
            found += 1;
        }
        if found != declared {
            return Err(ParseError::EdgeCountMismatch {
                expected: declared,
                found,
            });
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: found,
        })
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// A subgraph on compact ids 0..k together with the map back to parent ids.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_parent: Vec<VertexId>,
}

impl Subgraph {
    pub fn is_empty(&self) -> bool {
        self.graph.vertex_count() == 0
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.to_parent[v]
    }

    pub fn map_vertices(&self, vs: &[VertexId]) -> Vec<VertexId> {
        vs.iter().map(|&v| self.to_parent[v]).collect()
    }
}

/// An ordered simple path; `vertices` are consecutive-adjacent in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<VertexId>,
}

impl PathWitness {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        PathWitness { vertices }
    }

    /// Path length in edges.
    pub fn len_edges(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (
            *self.vertices.first().expect("nonempty path"),
            *self.vertices.last().expect("nonempty path"),
        )
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        if self.vertices.is_empty() {
            return Err(WitnessError::Empty);
        }
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return Err(WitnessError::VertexOutOfRange {
                    vertex: v,
                    order: g.vertex_count(),
                });
            }
            if !seen.insert(v) {
                return Err(WitnessError::RepeatedVertex(v));
            }
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(WitnessError::MissingEdge(w[0], w[1]));
            }
        }
        Ok(())
    }

    pub fn map(&self, to_parent: &[VertexId]) -> PathWitness {
        PathWitness::new(self.vertices.iter().map(|&v| to_parent[v]).collect())
    }
}

/// A simple cycle listed once; closure back to the first vertex is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<VertexId>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        CycleWitness { vertices }
    }

    /// Cycle length (= number of vertices = number of edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        if self.vertices.len() < 3 {
            return Err(WitnessError::TooShort(self.vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return Err(WitnessError::VertexOutOfRange {
                    vertex: v,
                    order: g.vertex_count(),
                });
            }
            if !seen.insert(v) {
                return Err(WitnessError::RepeatedVertex(v));
            }
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(WitnessError::MissingEdge(w[0], w[1]));
            }
        }
        let (first, last) = (self.vertices[0], *self.vertices.last().unwrap());
        if !g.has_edge(last, first) {
            return Err(WitnessError::MissingEdge(last, first));
        }
        Ok(())
    }

    pub fn map(&self, to_parent: &[VertexId]) -> CycleWitness {
        CycleWitness::new(self.vertices.iter().map(|&v| to_parent[v]).collect())
    }
}

/// Exact distance classes from a root within its component, plus the
/// breadth-first tree (parent map).
#[derive(Debug, Clone)]
pub struct BfsLayering {
    pub root: VertexId,
    pub layers: Vec<Vec<VertexId>>,
    parent: Vec<Option<VertexId>>,
    depth: Vec<Option<usize>>,
}

impl BfsLayering {
    pub fn depth_of(&self, v: VertexId) -> Option<usize> {
        self.depth[v]
    }

    pub fn parent_of(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn layer(&self, i: usize) -> &[VertexId] {
        &self.layers[i]
    }

    /// Lowest common ancestor in the BFS tree; both vertices must be in the
    /// layered component.
    pub fn lca(&self, u: VertexId, v: VertexId) -> VertexId {
        let mut a = u;
        let mut b = v;
        let mut da = self.depth[a].expect("vertex in component");
        let mut db = self.depth[b].expect("vertex in component");
        while da > db {
            a = self.parent[a].unwrap();
            da -= 1;
        }
        while db > da {
            b = self.parent[b].unwrap();
            db -= 1;
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        a
    }

    /// Vertices on the unique tree path from `u` to `v`, inclusive.
    pub fn tree_path(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let anc = self.lca(u, v);
        let mut up = Vec::new();
        let mut x = u;
        while x != anc {
            up.push(x);
            x = self.parent[x].unwrap();
        }
        up.push(anc);
        let mut down = Vec::new();
        let mut y = v;
        while y != anc {
            down.push(y);
            y = self.parent[y].unwrap();
        }
        up.extend(down.into_iter().rev());
        up
    }

    /// `v, parent(v), ..., root`.
    pub fn ancestor_chain(&self, v: VertexId) -> Vec<VertexId> {
        let mut chain = vec![v];
        let mut x = v;
        while let Some(p) = self.parent[x] {
            chain.push(p);
            x = p;
        }
        chain
    }
}

/// Length of the shortest cycle; `None` for forests.
///
/// For every edge {u, v}, the shortest u-v path avoiding that edge plus the
/// edge itself is a cycle, and every shortest cycle arises this way.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        // Only distances strictly below best-1 can improve the answer.
        let cap = best.map(|b| b - 2);
        if let Some(d) = bfs_distance_avoiding_edge(g, u, v, cap) {
            let candidate = d + 1;
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
                if candidate == 3 {
                    return best;
                }
            }
        }
    }
    best
}

fn bfs_distance_avoiding_edge(
    g: &Graph,
    from: VertexId,
    to: VertexId,
    depth_cap: Option<usize>,
) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if let Some(cap) = depth_cap {
            if dist[x] >= cap {
                continue;
            }
        }
        for &y in g.neighbors(x) {
            if (x == from && y == to) || (x == to && y == from) {
                continue;
            }
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == to {
                    return Some(dist[y]);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Open neighborhood of `x`: vertices outside `x` adjacent to some member.
pub fn boundary(g: &Graph, x: &VertexSet) -> Result<VertexSet, GraphError> {
    let n = g.vertex_count();
    let mut out = VertexSet::new();
    for &v in x {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        for &w in g.neighbors(v) {
            if !x.contains(&w) {
                out.insert(w);
            }
        }
    }
    Ok(out)
}

/// Maximal subgraph with minimum degree >= k, by iterated peeling. The
/// result is order-independent; an empty subgraph is returned when no
/// vertex survives.
pub fn k_core(g: &Graph, k: usize) -> Subgraph {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: Vec<VertexId> = (0..n).filter(|&v| deg[v] < k).collect();
    for &v in &queue {
        removed[v] = true;
    }
    while let Some(v) = queue.pop() {
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    removed[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    let survivors: Vec<VertexId> = (0..n).filter(|&v| !removed[v]).collect();
    g.induced(&survivors)
}

pub fn bfs_layering(g: &Graph, root: VertexId) -> Result<BfsLayering, GraphError> {
    let n = g.vertex_count();
    if root >= n {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            order: n,
        });
    }
    let mut depth = vec![None; n];
    let mut parent = vec![None; n];
    let mut layers = vec![vec![root]];
    depth[root] = Some(0);
    let mut frontier = vec![root];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if depth[w].is_none() {
                    depth[w] = Some(depth[v].unwrap() + 1);
                    parent[w] = Some(v);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next.clone());
        frontier = next;
    }
    Ok(BfsLayering {
        root,
        layers,
        parent,
        depth,
    })
}

/// Index i maximizing the average degree of the subgraph induced by
/// consecutive layers L_i and L_{i+1}; ties take the smallest i. A
/// single-layer component yields the layer itself.
pub fn densest_level_pair(g: &Graph, layering: &BfsLayering) -> (usize, Subgraph) {
    let layers = &layering.layers;
    if layers.len() == 1 {
        return (0, g.induced(&layers[0]));
    }
    let mut best: Option<(usize, f64)> = None;
    for i in 0..layers.len() - 1 {
        let mut verts = layers[i].clone();
        verts.extend_from_slice(&layers[i + 1]);
        let sub = g.induced(&verts);
        let avg = sub.graph.average_degree();
        if best.is_none_or(|(_, b)| avg > b) {
            best = Some((i, avg));
        }
    }
    let (i, _) = best.unwrap();
    let mut verts = layers[i].clone();
    verts.extend_from_slice(&layers[i + 1]);
    (i, g.induced(&verts))
}

/// Bipartite subgraph with at least half the edges, by single-vertex-flip
/// local search from a deterministic greedy seed. Returns the subgraph of
/// crossing edges (same vertex ids) and the bipartition.
pub fn max_cut_bipartite_subgraph(g: &Graph) -> (Graph, (VertexSet, VertexSet)) {
    let n = g.vertex_count();
    let mut side = vec![0u8; n];
    // Greedy seed: put each vertex opposite the majority of its placed
    // neighbors.
    for v in 0..n {
        let mut on0 = 0usize;
        let mut on1 = 0usize;
        for &w in g.neighbors(v) {
            if w < v {
                match side[w] {
                    0 => on0 += 1,
                    _ => on1 += 1,
                }
            }
        }
        side[v] = if on0 > on1 { 1 } else { 0 };
    }
    // Local search: flip any vertex with more same-side than cross-side
    // neighbors. Each flip strictly increases the cut, so this terminates.
    loop {
        let mut improved = false;
        for v in 0..n {
            let mut same = 0usize;
            let mut cross = 0usize;
            for &w in g.neighbors(v) {
                if side[w] == side[v] {
                    same += 1;
                } else {
                    cross += 1;
                }
            }
            if same > cross {
                side[v] = 1 - side[v];
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    let crossing: Vec<(VertexId, VertexId)> =
        g.edges().filter(|&(u, v)| side[u] != side[v]).collect();
    let h = Graph::new(n, &crossing).expect("crossing edges are simple");
    let s: VertexSet = (0..n).filter(|&v| side[v] == 0).collect();
    let t: VertexSet = (0..n).filter(|&v| side[v] == 1).collect();
    (h, (s, t))
}

#[derive(Debug, Clone)]
pub struct ComponentStats {
    pub vertices: Vec<VertexId>,
    pub average_degree: f64,
    /// Minimum eccentricity within the component; 0 for a single vertex.
    pub radius: usize,
    /// A vertex attaining the radius (smallest id on ties).
    pub center: VertexId,
}

pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn component_stats(g: &Graph) -> Vec<ComponentStats> {
    connected_components(g)
        .into_iter()
        .map(|comp| {
            let sub = g.induced(&comp);
            let mut radius = usize::MAX;
            let mut center = comp[0];
            for (local, &orig) in sub.to_parent.iter().enumerate() {
                let ecc = eccentricity(&sub.graph, local);
                if ecc < radius {
                    radius = ecc;
                    center = orig;
                }
            }
            ComponentStats {
                average_degree: sub.graph.average_degree(),
                vertices: comp,
                radius,
                center,
            }
        })
        .collect()
}

fn eccentricity(g: &Graph, v: VertexId) -> usize {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = std::collections::VecDeque::from([v]);
    let mut ecc = 0;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                ecc = ecc.max(dist[y]);
                queue.push_back(y);
            }
        }
    }
    ecc
}

/// Vertex of minimum eccentricity (smallest id on ties). The graph must be
/// connected and nonempty.
pub fn center_vertex(g: &Graph) -> VertexId {
    let mut best = (usize::MAX, 0);
    for v in g.vertices() {
        let ecc = eccentricity(g, v);
        if ecc < best.0 {
            best = (ecc, v);
        }
    }
    best.1
}

/// Splits a multi-graph stream (blocks separated by blank lines) into
/// individually parsed graphs, tagging errors with the block index.
pub fn parse_edge_list_stream(text: &str) -> Vec<Result<Graph, ParseError>> {
    text.split("\n\n")
        .map(str::trim)
        .filter(|block| !block.is_empty())
        .map(Graph::parse_edge_list)
        .collect()
}
