//! Cuthill-McKee and Reverse Cuthill-McKee orderings.
//!
//! Each component is numbered by a breadth-first sweep from a
//! pseudoperipheral vertex, enqueueing unvisited neighbors by increasing
//! degree. Ties are broken everywhere by the lower node index so the
//! orderings are fully deterministic.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::Permutation;

/// Nodes of one component grouped by BFS distance from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStructure {
    pub root: usize,
    pub levels: Vec<Vec<usize>>,
}

impl LevelStructure {
    /// Number of levels minus one.
    pub fn eccentricity(&self) -> usize {
        self.levels.len() - 1
    }

    /// Level index of every node in the structure; `None` elsewhere.
    pub fn level_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (l, nodes) in self.levels.iter().enumerate() {
            for &v in nodes {
                out[v] = Some(l);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Reusable BFS buffers. The visit mark is a generation counter so that
/// repeated sweeps do not clear an O(n) array.
struct Bfs {
    mark: Vec<u32>,
    generation: u32,
    order: Vec<u32>,
    level_ends: Vec<usize>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Bfs {
            mark: vec![0; n],
            generation: 0,
            order: Vec::with_capacity(n),
            level_ends: Vec::new(),
        }
    }

    fn run(&mut self, g: &Graph, root: usize) {
        self.generation += 1;
        let generation = self.generation;
        self.order.clear();
        self.level_ends.clear();
        self.order.push(root as u32);
        self.mark[root] = generation;
        let mut start = 0;
        while start < self.order.len() {
            let end = self.order.len();
            for k in start..end {
                let u = self.order[k] as usize;
                for &w in g.neighbors(u) {
                    if self.mark[w as usize] != generation {
                        self.mark[w as usize] = generation;
                        self.order.push(w);
                    }
                }
            }
            self.level_ends.push(end);
            start = end;
        }
    }

    fn eccentricity(&self) -> usize {
        self.level_ends.len() - 1
    }

    fn last_level(&self) -> &[u32] {
        let n = self.level_ends.len();
        let begin = if n >= 2 { self.level_ends[n - 2] } else { 0 };
        &self.order[begin..self.level_ends[n - 1]]
    }

    fn component(&self) -> &[u32] {
        &self.order
    }
}

fn check_node(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::LabelOutOfRange { label: v, n: g.n() });
    }
    Ok(())
}

/// Lowest-degree node of `nodes`, ties to the lower index.
fn min_degree(g: &Graph, nodes: &[u32]) -> usize {
    nodes
        .iter()
        .map(|&v| (g.degree(v as usize), v as usize))
        .min()
        .expect("non-empty node set")
        .1
}

/// BFS level structure rooted at `root` (0-based).
pub fn level_structure(g: &Graph, root: usize) -> Result<LevelStructure> {
    check_node(g, root)?;
    let mut bfs = Bfs::new(g.n());
    bfs.run(g, root);
    let mut levels = Vec::with_capacity(bfs.level_ends.len());
    let mut begin = 0;
    for &end in &bfs.level_ends {
        let mut level: Vec<usize> = bfs.order[begin..end].iter().map(|&v| v as usize).collect();
        level.sort_unstable();
        levels.push(level);
        begin = end;
    }
    Ok(LevelStructure { root, levels })
}

fn pseudoperipheral_with(bfs: &mut Bfs, g: &Graph, start: usize) -> usize {
    bfs.run(g, start);
    let mut ecc = bfs.eccentricity();
    loop {
        let candidate = min_degree(g, bfs.last_level());
        bfs.run(g, candidate);
        let candidate_ecc = bfs.eccentricity();
        if candidate_ecc > ecc {
            ecc = candidate_ecc;
        } else {
            return candidate;
        }
    }
}

/// Pseudoperipheral vertex reached from `start` (0-based).
///
/// From the current node, move to the minimum-degree node of its last BFS
/// level while that strictly increases the eccentricity; the first
/// candidate that fails to increase it is returned.
pub fn pseudoperipheral(g: &Graph, start: usize) -> Result<usize> {
    check_node(g, start)?;
    let mut bfs = Bfs::new(g.n());
    Ok(pseudoperipheral_with(&mut bfs, g, start))
}

/// Cuthill-McKee numbering of every node.
///
/// Components are taken in order of their lowest unvisited index; each is
/// started from the pseudoperipheral vertex seeded at its lowest-index
/// minimum-degree node.
pub fn cuthill_mckee(g: &Graph) -> Permutation {
    let n = g.n();
    let mut bfs = Bfs::new(n);
    let mut visited = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut batch: Vec<(usize, usize)> = Vec::new();

    for first in 0..n {
        if visited[first] {
            continue;
        }
        let root = if g.degree(first) == 0 {
            first
        } else {
            bfs.run(g, first);
            let seed = min_degree(g, bfs.component());
            pseudoperipheral_with(&mut bfs, g, seed)
        };

        let mut head = order.len();
        visited[root] = true;
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            batch.clear();
            for &w in g.neighbors(u) {
                let w = w as usize;
                if !visited[w] {
                    visited[w] = true;
                    batch.push((g.degree(w), w));
                }
            }
            batch.sort_unstable();
            order.extend(batch.iter().map(|&(_, w)| w));
        }
    }

    Permutation::from_forward(order).expect("BFS visits every node exactly once")
}

/// Reverse Cuthill-McKee: the whole Cuthill-McKee sequence read backwards.
pub fn rcm_order(g: &Graph) -> Permutation {
    cuthill_mckee(g).reversed()
}
