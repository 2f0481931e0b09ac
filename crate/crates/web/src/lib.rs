//! WebAssembly bindings for the interactive demo in `www/`.
//!
//! [`Session`] holds the native state and is what the tests exercise;
//! [`Demo`] is the thin `wasm-bindgen` wrapper the page talks to.

pub mod raster;

use lrcm::{
    build_laplacian, components_lrcm, permute_symmetric, Graph, IndexBase, LrcmOutput,
    SparseSymMatrix,
};
use wasm_bindgen::prelude::*;

/// Largest graph the page will build; keeps the browser responsive.
pub const MAX_NODES: usize = 1 << 18;

/// A graph together with its Laplacian before and after ordering.
#[derive(Debug, Clone)]
pub struct Session {
    graph: Graph,
    laplacian: SparseSymMatrix,
    reordered: SparseSymMatrix,
    result: LrcmOutput,
}

impl Session {
    pub fn new(graph: Graph) -> Result<Self, String> {
        if graph.n() > MAX_NODES {
            return Err(format!(
                "{} nodes exceeds the demo limit of {MAX_NODES}",
                graph.n()
            ));
        }
        let laplacian = build_laplacian(&graph);
        let result = components_lrcm(&graph).map_err(|e| e.to_string())?;
        let reordered = permute_symmetric(&laplacian, &result.order).map_err(|e| e.to_string())?;
        Ok(Session {
            graph,
            laplacian,
            reordered,
            result,
        })
    }

    /// `k` blocks of `size` nodes with shuffled labels.
    pub fn blocks(k: usize, size: usize, p: f64, seed: u64) -> Result<Self, String> {
        let n = k.checked_mul(size).filter(|&n| n <= MAX_NODES);
        if n.is_none() {
            return Err(format!("k * size exceeds the demo limit of {MAX_NODES}"));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("edge probability {p} is not in [0, 1]"));
        }
        Self::new(lrcm::verify::gen_block_graph(k, size, p, seed))
    }

    /// One-based edge list with an `n m` header; duplicates are merged.
    pub fn parse(text: &str) -> Result<Self, String> {
        let g = lrcm::io::parse_edge_list(text, IndexBase::One, true).map_err(|e| e.to_string())?;
        Self::new(g)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spy_original(&self, px: usize) -> Vec<u8> {
        raster::spy(&self.laplacian, px, None)
    }

    pub fn spy_reordered(&self, px: usize) -> Vec<u8> {
        raster::spy(&self.reordered, px, Some(&self.result.cuts))
    }

    pub fn summary(&self) -> serde_json::Value {
        let sizes = self.result.partition.sizes();
        serde_json::json!({
            "n": self.graph.n(),
            "m": self.graph.m(),
            "k": self.result.partition.len(),
            "largest": sizes.iter().copied().max().unwrap_or(0),
            "sizes": sizes,
            "cut": self.result.cuts.0,
            "bandwidth_before": self.laplacian.bandwidth(),
            "bandwidth_after": self.reordered.bandwidth(),
        })
    }
}

#[wasm_bindgen]
pub struct Demo {
    inner: Session,
}

#[wasm_bindgen]
impl Demo {
    /// Generates a graph of `k` connected blocks.
    #[wasm_bindgen(js_name = fromBlocks)]
    pub fn from_blocks(k: usize, size: usize, p: f64, seed: u32) -> Result<Demo, JsError> {
        Session::blocks(k, size, p, seed as u64)
            .map(|inner| Demo { inner })
            .map_err(|e| JsError::new(&e))
    }

    /// Parses a pasted edge list.
    #[wasm_bindgen(js_name = fromEdgeList)]
    pub fn from_edge_list(text: &str) -> Result<Demo, JsError> {
        Session::parse(text)
            .map(|inner| Demo { inner })
            .map_err(|e| JsError::new(&e))
    }

    /// RGBA pixels of the Laplacian in input order.
    #[wasm_bindgen(js_name = spyOriginal)]
    pub fn spy_original(&self, px: usize) -> Vec<u8> {
        self.inner.spy_original(px)
    }

    /// RGBA pixels of the reordered Laplacian with block boundaries.
    #[wasm_bindgen(js_name = spyReordered)]
    pub fn spy_reordered(&self, px: usize) -> Vec<u8> {
        self.inner.spy_reordered(px)
    }

    /// Component count, sizes, cut positions and bandwidths as JSON.
    pub fn summary(&self) -> String {
        self.inner.summary().to_string()
    }
}
