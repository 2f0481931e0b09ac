//! Undirected simple graphs in compressed sparse row layout.
//!
//!   offsets  = prefix sums of degrees, length n + 1
//!   adjacency = concatenated sorted neighbor lists, length 2m
//!   neighbors(v) = adjacency[offsets[v] .. offsets[v + 1]]

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Whether external node labels start at 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexBase {
    Zero,
    #[default]
    One,
}

impl IndexBase {
    pub fn offset(self) -> usize {
        match self {
            IndexBase::Zero => 0,
            IndexBase::One => 1,
        }
    }

    /// Converts an external label to an internal 0-based index.
    pub fn to_internal(self, label: usize, n: usize) -> Result<usize> {
        let off = self.offset();
        if label < off || label - off >= n {
            return Err(Error::LabelOutOfRange { label, n });
        }
        Ok(label - off)
    }

    pub fn to_external(self, index: usize) -> usize {
        index + self.offset()
    }
}

/// Undirected simple graph: symmetric, loop-free, sorted duplicate-free
/// neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    adjacency: Vec<u32>,
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            adjacency: Vec::new(),
        }
    }

    /// Builds a graph from unordered label pairs.
    ///
    /// With `sanitize` set, self-loops are dropped and repeated edges
    /// (in either orientation) merged; otherwise both are errors.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        base: IndexBase,
        sanitize: bool,
    ) -> Result<Self> {
        let mut internal = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let a = base.to_internal(u, n)?;
            let b = base.to_internal(v, n)?;
            internal.push((a, b));
        }
        Self::from_internal_edges(n, internal, sanitize).map_err(|e| match e {
            Error::SelfLoop { node } => Error::SelfLoop {
                node: base.to_external(node),
            },
            Error::DuplicateEdge { u, v } => Error::DuplicateEdge {
                u: base.to_external(u),
                v: base.to_external(v),
            },
            other => other,
        })
    }

    /// Builds a graph from 0-based pairs that are already range-checked.
    pub(crate) fn from_internal_edges(
        n: usize,
        edges: Vec<(usize, usize)>,
        sanitize: bool,
    ) -> Result<Self> {
        assert!(n <= u32::MAX as usize, "graph too large for u32 indices");
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::LabelOutOfRange { label: u, n });
            }
            if v >= n {
                return Err(Error::LabelOutOfRange { label: v, n });
            }
            if u == v {
                if sanitize {
                    continue;
                }
                return Err(Error::SelfLoop { node: u });
            }
            degree[u] += 1;
            degree[v] += 1;
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut adjacency = vec![0u32; offsets[n]];
        for &(u, v) in &edges {
            if u == v {
                continue;
            }
            adjacency[cursor[u]] = v as u32;
            cursor[u] += 1;
            adjacency[cursor[v]] = u as u32;
            cursor[v] += 1;
        }

        let mut duplicate = None;
        for v in 0..n {
            let row = &mut adjacency[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            if duplicate.is_none() {
                if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                    duplicate = Some((v, w[0] as usize));
                }
            }
        }

        match duplicate {
            None => Ok(Graph { offsets, adjacency }),
            Some((u, v)) if !sanitize => Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            }),
            Some(_) => Ok(Self::dedup(n, &offsets, &adjacency)),
        }
    }

    fn dedup(n: usize, offsets: &[usize], adjacency: &[u32]) -> Self {
        let mut new_offsets = Vec::with_capacity(n + 1);
        new_offsets.push(0);
        let mut new_adj = Vec::with_capacity(adjacency.len());
        for v in 0..n {
            let row = &adjacency[offsets[v]..offsets[v + 1]];
            let mut last = None;
            for &w in row {
                if last != Some(w) {
                    new_adj.push(w);
                    last = Some(w);
                }
            }
            new_offsets.push(new_adj.len());
        }
        Graph {
            offsets: new_offsets,
            adjacency: new_adj,
        }
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.adjacency.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Relabels nodes so that old node `p.forward()[new]` becomes `new`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                actual: p.len(),
            });
        }
        let inv = p.inverse();
        let edges = self
            .edges()
            .map(|(u, v)| (inv[u], inv[v]))
            .collect::<Vec<_>>();
        Self::from_internal_edges(self.n(), edges, false)
    }

    /// Checks every structural invariant; used by tests and debug builds.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for v in 0..n {
            let row = self.neighbors(v);
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::DuplicateEdge {
                        u: v,
                        v: w[1] as usize,
                    });
                }
            }
            for &w in row {
                let w = w as usize;
                if w >= n {
                    return Err(Error::LabelOutOfRange { label: w, n });
                }
                if w == v {
                    return Err(Error::SelfLoop { node: v });
                }
                if !self.has_edge(w, v) {
                    return Err(Error::NotSymmetric { row: v, col: w });
                }
            }
        }
        Ok(())
    }
}
