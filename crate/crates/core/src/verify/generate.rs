//! Seeded random graph generators.
//!
//! Every generator takes an explicit seed and draws from a ChaCha stream,
//! so the same arguments always give the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labelled tree on `size` nodes, decoded from a random
/// Pruefer sequence in linear time.
pub fn random_tree_edges<R: Rng>(size: usize, rng: &mut R) -> Vec<(usize, usize)> {
    match size {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..size - 2).map(|_| rng.gen_range(0..size)).collect();
    let mut degree = vec![1usize; size];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(size - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &v in &code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, size - 1));
    edges
}

/// Each pair `i < j` of `0..size` independently with probability `p`, using
/// geometric skips so the cost is proportional to the output.
pub fn bernoulli_pairs<R: Rng>(size: usize, p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let total = size * size.saturating_sub(1) / 2;
    if p <= 0.0 || total == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(((total as f64) * p.min(1.0) * 1.05) as usize + 16);
    let log_q = (1.0 - p.min(1.0)).ln();
    let mut row = 0usize;
    let mut row_begin = 0usize;
    let mut t = 0usize;
    loop {
        if p < 1.0 {
            let u: f64 = 1.0 - rng.gen::<f64>();
            let skip = (u.ln() / log_q).floor();
            if skip >= (total - t) as f64 {
                break;
            }
            t += skip as usize;
        }
        if t >= total {
            break;
        }
        while t >= row_begin + (size - 1 - row) {
            row_begin += size - 1 - row;
            row += 1;
        }
        out.push((row, row + 1 + (t - row_begin)));
        t += 1;
    }
    out
}

/// `k` components of `size` nodes each: a uniform random spanning tree per
/// component plus every other pair with probability `extra_edge_prob`, with
/// the `k * size` labels shuffled uniformly at the end.
pub fn gen_block_graph(k: usize, size: usize, extra_edge_prob: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let n = k * size;
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut edges = Vec::new();
    for c in 0..k {
        let base = c * size;
        let tree = random_tree_edges(size, &mut rng);
        let extra = bernoulli_pairs(size, extra_edge_prob, &mut rng);
        edges.extend(
            tree.into_iter()
                .chain(extra)
                .map(|(u, v)| (labels[base + u], labels[base + v])),
        );
    }
    Graph::from_internal_edges(n, edges, true).expect("generated labels are in range")
}

/// Erdos-Renyi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let edges = bernoulli_pairs(n, p, &mut rng);
    Graph::from_internal_edges(n, edges, false).expect("pairs are distinct and in range")
}

/// `G(n, p)` with `p` chosen for an expected `avg_degree * n / 2` edges.
pub fn gen_random_graph(n: usize, avg_degree: f64, seed: u64) -> Graph {
    let p = if n < 2 {
        0.0
    } else {
        (avg_degree / (n - 1) as f64).min(1.0)
    };
    gen_gnp(n, p, seed)
}

/// Random relabelling of `g`.
pub fn shuffle_labels(g: &Graph, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut labels: Vec<usize> = (0..g.n()).collect();
    labels.shuffle(&mut rng);
    let edges = g.edges().map(|(u, v)| (labels[u], labels[v])).collect();
    Graph::from_internal_edges(g.n(), edges, false).expect("relabelling is a bijection")
}

pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_internal_edges(n, edges, false).unwrap()
}

/// Node 0 joined to every other node.
pub fn star(n: usize) -> Graph {
    let edges = (1..n).map(|i| (0, i)).collect();
    Graph::from_internal_edges(n, edges, false).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::from_internal_edges(n, edges, false).unwrap()
}

/// Disjoint union, with `b`'s nodes placed after `a`'s.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    let edges = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + off, v + off)))
        .collect();
    Graph::from_internal_edges(a.n() + b.n(), edges, false).unwrap()
}
