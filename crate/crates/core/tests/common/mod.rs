#![allow(dead_code)]

use lrcm::verify::gen_block_graph;
use lrcm::verify::generate::{
    complete, disjoint_union, gen_random_graph, path, shuffle_labels, star,
};
use lrcm::{Graph, IndexBase};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ops::RangeInclusive;

/// Two components: {1, 3} and {2, 4}.
pub fn toy_graph() -> Graph {
    Graph::from_edges(4, &[(1, 3), (2, 4)], IndexBase::One, false).unwrap()
}

/// Path 1-4-3-2.
pub fn path_example() -> Graph {
    Graph::from_edges(4, &[(1, 4), (2, 3), (3, 4)], IndexBase::One, false).unwrap()
}

/// 13 nodes, four components, read off the printed Laplacian.
pub const THIRTEEN_NODE_EDGES: [(usize, usize); 10] = [
    (1, 4),
    (2, 5),
    (3, 6),
    (5, 13),
    (7, 8),
    (7, 9),
    (7, 10),
    (8, 11),
    (9, 12),
    (10, 12),
];

pub fn thirteen_node_graph() -> Graph {
    Graph::from_edges(13, &THIRTEEN_NODE_EDGES, IndexBase::One, false).unwrap()
}

/// Published RCM vector for the 13-node graph.
pub const THIRTEEN_NODE_RCM: [usize; 13] = [4, 1, 13, 5, 2, 6, 3, 11, 8, 7, 10, 9, 12];

/// Published permuted Laplacian of the 13-node graph, entered verbatim.
pub const THIRTEEN_NODE_LHAT: [[i32; 13]; 13] = [
    [1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, 3, -1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 2, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 2],
];

/// Published Laplacian of the 13-node graph, entered verbatim.
pub const THIRTEEN_NODE_L: [[i32; 13]; 13] = [
    [1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 3, -1, -1, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 2, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 2, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 2, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Published permuted Laplacian of the two-component toy graph.
pub const TOY_LHAT: [[i32; 4]; 4] = [[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, -1, 1]];

/// Published tridiagonal permuted Laplacian of the 4-node path.
pub const PATH_LHAT: [[i32; 4]; 4] = [[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]];

/// Seeded mixed corpus: random sparse graphs with `m/n` in [0, 8], block
/// graphs, and edgeless, single-node, star, path, complete and
/// isolated-node specials, with every `n` drawn from `sizes`.
pub fn mixed_corpus(count: usize, sizes: RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(sizes.clone());
            let s = rng.gen::<u64>();
            match i % 10 {
                0 => Graph::edgeless(n),
                1 => shuffle_labels(&star(n), s),
                2 => shuffle_labels(&path(n), s),
                // complete graphs keep m/n = (n-1)/2 <= 8
                3 => shuffle_labels(&complete(n.min(17)), s),
                4 => {
                    let k = rng.gen_range(1..=8.min(n));
                    let size = n / k;
                    gen_block_graph(k, size, rng.gen_range(0.0..4.0) / size as f64, s)
                }
                5 => {
                    let iso = rng.gen_range(0..=n.min(20));
                    let core = gen_random_graph(n - iso.min(n - 1), rng.gen_range(0.0..6.0), s);
                    shuffle_labels(
                        &disjoint_union(&core, &Graph::edgeless(iso.min(n - 1))),
                        s ^ 1,
                    )
                }
                6 if i % 20 == 6 && *sizes.start() == 1 => Graph::edgeless(1),
                _ => gen_random_graph(n, rng.gen_range(0.0..15.0), s),
            }
        })
        .collect()
}
