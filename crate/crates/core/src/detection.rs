//! Component detection from an RCM-ordered Laplacian.
//!
//! After RCM numbering, the lower-triangular row sum of row `i`,
//!
//!   s_i = sum_{j <= i} lhat_ij = #{ neighbors of i with index > i },
//!
//! vanishes exactly at the maximum index (the root) of each component, and
//! every component occupies a contiguous index range. The zeros of `s`
//! therefore delimit the diagonal blocks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::SparseSymMatrix;
use crate::ordering::rcm_order;
use crate::permutation::Permutation;

/// Lower-triangular row sums, one per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSums(pub Vec<i64>);

impl RowSums {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// Root positions of the diagonal blocks.
///
/// Values are 1-based row indices of the last row of each block, which is
/// the same thing as the exclusive 0-based end of the block. Block `b`
/// covers rows `cuts[b - 1] .. cuts[b]` (0-based, with `cuts[-1] = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutVector(pub Vec<usize>);

impl CutVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based half-open row ranges of the blocks.
    pub fn blocks(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        let mut begin = 0;
        self.0.iter().map(move |&end| {
            let r = begin..end;
            begin = end;
            r
        })
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().map(|r| r.len()).collect()
    }
}

/// Disjoint node sets covering the graph, in canonical form: members
/// ascending, sets ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition(Vec<Vec<usize>>);

impl Partition {
    pub fn new(mut components: Vec<Vec<usize>>) -> Self {
        components.retain(|c| !c.is_empty());
        for c in &mut components {
            c.sort_unstable();
        }
        components.sort_unstable_by_key(|c| c[0]);
        Partition(components)
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.0
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }

    /// Component index of every node.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (c, nodes) in self.0.iter().enumerate() {
            for &v in nodes {
                out[v] = c;
            }
        }
        out
    }

    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.0
            .iter()
            .map(|c| c.iter().map(|v| v + 1).collect())
            .collect()
    }
}

/// `s_i = sum_{j <= i} lhat_ij` in exact integer arithmetic.
pub fn lower_tri_row_sums(lhat: &SparseSymMatrix) -> RowSums {
    let sums = (0..lhat.n())
        .map(|i| {
            let (cols, vals) = lhat.row(i);
            let upto = cols.partition_point(|&j| j as usize <= i);
            vals[..upto].iter().map(|&v| v as i64).sum()
        })
        .collect();
    RowSums(sums)
}

/// Indices where `s` vanishes.
///
/// Fails when the last sum is nonzero: that cannot happen for a Laplacian,
/// so the input was not an RCM-ordered Laplacian.
pub fn find_cuts(s: &RowSums) -> Result<CutVector> {
    let s = s.as_slice();
    if let Some(&last) = s.last() {
        if last != 0 {
            return Err(Error::Contract(format!(
                "last lower-triangular row sum is {last}, expected 0"
            )));
        }
    }
    Ok(CutVector(
        s.iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(i, _)| i + 1)
            .collect(),
    ))
}

/// Block search through indicator products.
///
/// Starting at the first row of the trailing submatrix, extend the indicator
/// vector one column at a time and close a block at the first `p` where
/// `lhat * e_p` vanishes. The product is maintained incrementally together
/// with a count of its nonzero entries.
pub fn detect_blocks_evec(lhat: &SparseSymMatrix) -> Result<CutVector> {
    let n = lhat.n();
    let mut product = vec![0i64; n];
    let mut nonzero = 0usize;
    let mut cuts = Vec::new();
    for p in 0..n {
        // column p equals row p by symmetry
        let (cols, vals) = lhat.row(p);
        for (&i, &v) in cols.iter().zip(vals) {
            let slot = &mut product[i as usize];
            let before = *slot != 0;
            *slot += v as i64;
            let after = *slot != 0;
            match (before, after) {
                (false, true) => nonzero += 1,
                (true, false) => nonzero -= 1,
                _ => {}
            }
        }
        if nonzero == 0 {
            cuts.push(p + 1);
        }
    }
    if n > 0 && cuts.last() != Some(&n) {
        return Err(Error::Contract(
            "indicator product over all columns is nonzero; not a Laplacian".to_string(),
        ));
    }
    Ok(CutVector(cuts))
}

/// Maps each block of the RCM order back to original node indices.
pub fn partition_from_cuts(order: &Permutation, cuts: &CutVector) -> Partition {
    let forward = order.forward();
    Partition::new(cuts.blocks().map(|r| forward[r].to_vec()).collect())
}

/// Everything the L-RCM pipeline produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrcmOutput {
    pub partition: Partition,
    pub order: Permutation,
    pub cuts: CutVector,
}

/// Connected components by Laplacian construction, RCM ordering, symmetric
/// permutation, lower-triangular row sums and zero search.
pub fn components_lrcm(g: &Graph) -> Result<LrcmOutput> {
    let l = SparseSymMatrix::laplacian(g);
    let order = rcm_order(g);
    let lhat = l.permute_symmetric(&order)?;
    let cuts = find_cuts(&lower_tri_row_sums(&lhat))?;
    Ok(LrcmOutput {
        partition: partition_from_cuts(&order, &cuts),
        order,
        cuts,
    })
}
