use std::collections::VecDeque;

use crate::detection::Partition;
use crate::graph::Graph;

/// Connected components by plain breadth-first search.
pub fn components_bfs(g: &Graph) -> Partition {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        components.push(comp);
    }
    Partition::new(components)
}

/// Largest node degree; 0 for edgeless graphs.
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}
