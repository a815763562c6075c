//! Shared sampling helpers for the integration suites. Everything is
//! seeded, so reruns see the same instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use cyclespect::generators;
use cyclespect::graph::Graph;

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha12Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_connected_graph(n: usize, p: f64, rng: &mut ChaCha12Rng) -> Graph {
    loop {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every generator-built graph with at most `max_order` vertices.
pub fn generator_catalog(max_order: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(generators::complete(n).unwrap());
        out.push(generators::path(n).unwrap());
        if n >= 3 {
            out.push(generators::cycle(n).unwrap());
        }
    }
    for r in 1..max_order {
        for s in r..max_order {
            if r + s <= max_order {
                out.push(generators::complete_bipartite(r, s).unwrap());
            }
        }
    }
    for a in 1..=max_order {
        for b in a.max(2)..=max_order {
            for c in b..=max_order {
                if a + b + c - 1 <= max_order {
                    if let Ok((g, _)) = generators::theta_graph(a, b, c) {
                        out.push(g);
                    }
                }
            }
        }
    }
    for name in generators::CageName::ALL {
        let g = generators::cage(name);
        if g.vertex_count() <= max_order {
            out.push(g);
        }
    }
    out
}
