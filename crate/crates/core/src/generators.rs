//! Deterministic constructors for the named graphs, random models, and
//! parametric families used throughout the test suites and pipelines.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("pairing model rejected {attempts} times; parameters too tight")]
    RejectionBudgetExhausted { attempts: usize },
    #[error("unknown cage `{0}`")]
    UnknownCage(String),
}

/// Restart cap for the pairing-model generator.
pub const PAIRING_RESTART_CAP: usize = 1000;

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::InvalidParameters("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges).unwrap())
}

pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph, GenError> {
    if r < 1 || s < 1 {
        return Err(GenError::InvalidParameters(
            "complete bipartite graph needs r, s >= 1".into(),
        ));
    }
    let mut edges = Vec::with_capacity(r * s);
    for u in 0..r {
        for v in 0..s {
            edges.push((u, r + v));
        }
    }
    Ok(Graph::new(r + s, &edges).unwrap())
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidParameters("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).unwrap())
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::InvalidParameters("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges).unwrap())
}

/// Two hubs joined by three internally disjoint paths of a, b, c edges.
/// Requires 1 <= a <= b <= c and b >= 2, so the graph is simple; the three
/// cycles have lengths a+b, a+c, b+c.
pub fn theta_graph(a: usize, b: usize, c: usize) -> Result<(Graph, (VertexId, VertexId)), GenError> {
    if a < 1 || a > b || b > c {
        return Err(GenError::InvalidParameters(
            "theta graph needs 1 <= a <= b <= c".into(),
        ));
    }
    if b < 2 {
        return Err(GenError::InvalidParameters(
            "theta graph needs b >= 2 (at most one path of length 1)".into(),
        ));
    }
    let u = 0;
    let v = 1;
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = u;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    let g = Graph::new(a + b + c - 1, &edges).unwrap();
    Ok((g, (u, v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CageName {
    Petersen,
    Heawood,
    McGee,
    TutteCoxeter,
}

impl std::str::FromStr for CageName {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        match s.to_ascii_lowercase().as_str() {
            "petersen" => Ok(CageName::Petersen),
            "heawood" => Ok(CageName::Heawood),
            "mcgee" => Ok(CageName::McGee),
            "tutte_coxeter" | "tutte-coxeter" | "tuttecoxeter" => Ok(CageName::TutteCoxeter),
            other => Err(GenError::UnknownCage(other.into())),
        }
    }
}

impl CageName {
    pub fn as_str(&self) -> &'static str {
        match self {
            CageName::Petersen => "petersen",
            CageName::Heawood => "heawood",
            CageName::McGee => "mcgee",
            CageName::TutteCoxeter => "tutte_coxeter",
        }
    }

    pub const ALL: [CageName; 4] = [
        CageName::Petersen,
        CageName::Heawood,
        CageName::McGee,
        CageName::TutteCoxeter,
    ];

    fn expected(&self) -> (usize, usize, usize) {
        // (order, degree, girth)
        match self {
            CageName::Petersen => (10, 3, 5),
            CageName::Heawood => (14, 3, 6),
            CageName::McGee => (24, 3, 7),
            CageName::TutteCoxeter => (30, 3, 8),
        }
    }
}

/// The named cage, from an embedded edge list. The constant is self-checked
/// on load (order, regularity, girth) so corruption cannot reach consumers.
pub fn cage(name: CageName) -> Graph {
    let g = match name {
        CageName::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer 5-cycle
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
                edges.push((i, 5 + i)); // spokes
            }
            Graph::new(10, &edges).unwrap()
        }
        CageName::Heawood => lcf_graph(14, &[5, -5]),
        CageName::McGee => lcf_graph(24, &[12, 7, -7]),
        CageName::TutteCoxeter => lcf_graph(30, &[-13, -9, 7, -7, 9, 13]),
    };
    let (order, degree, girth) = name.expected();
    assert_eq!(g.vertex_count(), order, "cage {name:?} has wrong order");
    assert!(
        g.vertices().all(|v| g.degree(v) == degree),
        "cage {name:?} is not {degree}-regular"
    );
    assert_eq!(
        crate::graph::girth(&g),
        Some(girth),
        "cage {name:?} has wrong girth"
    );
    g
}

/// Hamiltonian cycle on n vertices plus the chords of an LCF code.
fn lcf_graph(n: usize, pattern: &[i64]) -> Graph {
    let mut edges: std::collections::BTreeSet<(usize, usize)> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            (i.min(j), i.max(j))
        })
        .collect();
    for i in 0..n {
        let step = pattern[i % pattern.len()];
        let j = ((i as i64 + step).rem_euclid(n as i64)) as usize;
        edges.insert((i.min(j), i.max(j)));
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::new(n, &edges).unwrap()
}

/// d-regular simple graph via the pairing model with rejection of loops and
/// multi-edges: stubs are shuffled and paired, conflicting pairs are thrown
/// back into the pool, and the whole pairing restarts when the leftover
/// stubs admit no further simple edge. Deterministic for a fixed seed;
/// fails after [`PAIRING_RESTART_CAP`] restarts.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GenError> {
    if d >= n {
        return Err(GenError::InvalidParameters(format!(
            "degree {d} must be below order {n}"
        )));
    }
    if (n * d) % 2 != 0 {
        return Err(GenError::InvalidParameters(format!(
            "n*d = {} must be even",
            n * d
        )));
    }
    if d == 0 {
        return Ok(Graph::empty(n));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _attempt in 0..PAIRING_RESTART_CAP {
        let mut stubs: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut seen = std::collections::HashSet::with_capacity(n * d / 2);
        let mut edges = Vec::with_capacity(n * d / 2);
        while !stubs.is_empty() {
            stubs.shuffle(&mut rng);
            let mut leftover = Vec::new();
            for pair in stubs.chunks(2) {
                if pair.len() < 2 {
                    leftover.push(pair[0]);
                    continue;
                }
                let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                if u == v || !seen.insert((u, v)) {
                    leftover.push(pair[0]);
                    leftover.push(pair[1]);
                } else {
                    edges.push((u, v));
                }
            }
            if leftover.len() == stubs.len() && !suitable_pair_exists(&leftover, &seen) {
                break; // dead end, restart the pairing
            }
            stubs = leftover;
        }
        if stubs.is_empty() {
            return Ok(Graph::new(n, &edges).unwrap());
        }
    }
    Err(GenError::RejectionBudgetExhausted {
        attempts: PAIRING_RESTART_CAP,
    })
}

fn suitable_pair_exists(
    stubs: &[VertexId],
    seen: &std::collections::HashSet<(VertexId, VertexId)>,
) -> bool {
    let distinct: std::collections::BTreeSet<VertexId> = stubs.iter().copied().collect();
    let verts: Vec<VertexId> = distinct.into_iter().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !seen.contains(&(u.min(v), u.max(v))) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    #[test]
    fn standard_graphs() {
        let k5 = complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(girth(&k5), Some(3));

        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(girth(&k33), Some(4));

        let c7 = cycle(7).unwrap();
        assert_eq!(girth(&c7), Some(7));

        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn theta_graphs() {
        let (g, (u, v)) = theta_graph(1, 2, 2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.has_edge(u, v));

        let (g, _) = theta_graph(2, 2, 2).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(girth(&g), Some(4));

        let (g, _) = theta_graph(2, 3, 4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(girth(&g), Some(5));

        assert!(theta_graph(1, 1, 2).is_err());
        assert!(theta_graph(3, 2, 4).is_err());
    }

    #[test]
    fn cages_load_and_validate() {
        for name in CageName::ALL {
            let g = cage(name);
            let (order, degree, expected_girth) = name.expected();
            assert_eq!(g.vertex_count(), order);
            assert!(g.vertices().all(|v| g.degree(v) == degree));
            assert_eq!(girth(&g), Some(expected_girth));
        }
    }

    #[test]
    fn cage_names_parse() {
        assert_eq!("petersen".parse::<CageName>().unwrap(), CageName::Petersen);
        assert_eq!(
            "tutte-coxeter".parse::<CageName>().unwrap(),
            CageName::TutteCoxeter
        );
        assert!("nosuch".parse::<CageName>().is_err());
    }

    #[test]
    fn random_regular_smallest_case_is_k4() {
        for seed in [0, 1, 7, 99] {
            let g = random_regular(4, 3, seed).unwrap();
            assert_eq!(g.edge_count(), 6);
        }
    }

    #[test]
    fn random_regular_degrees_and_determinism() {
        let g = random_regular(10, 3, 42).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));

        let h = random_regular(10, 3, 42).unwrap();
        assert_eq!(g, h);

        let g1 = random_regular(20, 4, 1).unwrap();
        let g2 = random_regular(20, 4, 2).unwrap();
        assert!(g1.vertices().all(|v| g1.degree(v) == 4));
        assert!(g2.vertices().all(|v| g2.degree(v) == 4));

        assert!(random_regular(5, 3, 0).is_err());
        assert!(random_regular(4, 4, 0).is_err());
    }
}
