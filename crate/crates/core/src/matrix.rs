//! Symmetric sparse integer matrices: Laplacian construction, symmetric
//! permutation and bandwidth.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::Permutation;

/// Row-major sparse symmetric matrix with integer entries.
///
/// Column indices within each row are strictly increasing. The diagonal is
/// always stored, even when it is zero; off-diagonal zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSymMatrix {
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    values: Vec<i32>,
}

impl SparseSymMatrix {
    /// Builds a matrix from dense rows, checking squareness and symmetry.
    pub fn from_dense<R: AsRef<[i32]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut row_ptr = Vec::with_capacity(n + 1);
        row_ptr.push(0);
        let mut cols = Vec::new();
        let mut values = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if rows[j].as_ref().get(i) != Some(&v) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                if v != 0 || i == j {
                    cols.push(j as u32);
                    values.push(v);
                }
            }
            row_ptr.push(cols.len());
        }
        Ok(SparseSymMatrix {
            row_ptr,
            cols,
            values,
        })
    }

    /// The graph Laplacian `L = D - A` with the degree on the diagonal and
    /// -1 at every edge.
    pub fn laplacian(g: &Graph) -> Self {
        let n = g.n();
        let nnz = 2 * g.m() + n;
        let mut row_ptr = Vec::with_capacity(n + 1);
        row_ptr.push(0);
        let mut cols = Vec::with_capacity(nnz);
        let mut values = Vec::with_capacity(nnz);
        for i in 0..n {
            let nbrs = g.neighbors(i);
            let split = nbrs.partition_point(|&j| (j as usize) < i);
            for &j in &nbrs[..split] {
                cols.push(j);
                values.push(-1);
            }
            cols.push(i as u32);
            values.push(nbrs.len() as i32);
            for &j in &nbrs[split..] {
                cols.push(j);
                values.push(-1);
            }
            row_ptr.push(cols.len());
        }
        SparseSymMatrix {
            row_ptr,
            cols,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.row_ptr.len() - 1
    }

    /// Stored entries, diagonal included.
    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// Column indices and values of row `i`.
    #[inline]
    pub fn row(&self, i: usize) -> (&[u32], &[i32]) {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        (&self.cols[r.clone()], &self.values[r])
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        let (cols, vals) = self.row(i);
        match cols.binary_search(&(j as u32)) {
            Ok(k) => vals[k],
            Err(_) => 0,
        }
    }

    /// Iterates stored entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i32)> + '_ {
        (0..self.n()).flat_map(move |i| {
            let (cols, vals) = self.row(i);
            cols.iter()
                .zip(vals)
                .map(move |(&j, &v)| (i, j as usize, v))
        })
    }

    pub fn diagonal(&self) -> Vec<i32> {
        (0..self.n()).map(|i| self.get(i, i)).collect()
    }

    /// Full row sums in exact integer arithmetic.
    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n())
            .map(|i| self.row(i).1.iter().map(|&v| v as i64).sum())
            .collect()
    }

    /// Row-major dense copy in floating point.
    pub fn to_dense_f64(&self) -> Vec<f64> {
        let n = self.n();
        let mut dense = vec![0.0; n * n];
        for (i, j, v) in self.entries() {
            dense[i * n + j] = v as f64;
        }
        dense
    }

    pub fn to_dense(&self) -> Vec<Vec<i32>> {
        let n = self.n();
        let mut dense = vec![vec![0; n]; n];
        for (i, j, v) in self.entries() {
            dense[i][j] = v;
        }
        dense
    }

    /// True when every row sums to zero, the diagonal is non-negative and
    /// every off-diagonal entry is -1.
    pub fn is_laplacian(&self) -> bool {
        self.entries()
            .all(|(i, j, v)| if i == j { v >= 0 } else { v == -1 })
            && self.row_sums().iter().all(|&s| s == 0)
    }

    /// `P M P^T`: entry `(i, j)` of the result is entry
    /// `(forward[i], forward[j])` of `self`.
    pub fn permute_symmetric(&self, p: &Permutation) -> Result<Self> {
        let n = self.n();
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.len(),
            });
        }
        let forward = p.forward();
        let inverse = p.inverse();
        let mut row_ptr = Vec::with_capacity(n + 1);
        row_ptr.push(0);
        let mut cols = Vec::with_capacity(self.nnz());
        let mut values = Vec::with_capacity(self.nnz());
        let mut scratch: Vec<(u32, i32)> = Vec::new();
        for &old in forward {
            let (oc, ov) = self.row(old);
            scratch.clear();
            scratch.extend(
                oc.iter()
                    .zip(ov)
                    .map(|(&j, &v)| (inverse[j as usize] as u32, v)),
            );
            scratch.sort_unstable_by_key(|&(j, _)| j);
            for &(j, v) in &scratch {
                cols.push(j);
                values.push(v);
            }
            row_ptr.push(cols.len());
        }
        Ok(SparseSymMatrix {
            row_ptr,
            cols,
            values,
        })
    }

    /// `max |i - j|` over nonzero entries; 0 for diagonal or empty matrices.
    pub fn bandwidth(&self) -> usize {
        let mut bw = 0;
        for i in 0..self.n() {
            let (cols, vals) = self.row(i);
            // sorted columns: the extremes are the first and last nonzero
            if let Some(k) = vals.iter().position(|&v| v != 0) {
                bw = bw.max(i.abs_diff(cols[k] as usize));
            }
            if let Some(k) = vals.iter().rposition(|&v| v != 0) {
                bw = bw.max(i.abs_diff(cols[k] as usize));
            }
        }
        bw
    }
}

/// Free-function form of [`SparseSymMatrix::laplacian`].
pub fn build_laplacian(g: &Graph) -> SparseSymMatrix {
    SparseSymMatrix::laplacian(g)
}

pub fn permute_symmetric(m: &SparseSymMatrix, p: &Permutation) -> Result<SparseSymMatrix> {
    m.permute_symmetric(p)
}

pub fn bandwidth(m: &SparseSymMatrix) -> usize {
    m.bandwidth()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::IndexBase;

    fn toy() -> Graph {
        Graph::from_edges(4, &[(1, 3), (2, 4)], IndexBase::One, false).unwrap()
    }

    fn path_example() -> Graph {
        Graph::from_edges(4, &[(1, 4), (2, 3), (3, 4)], IndexBase::One, false).unwrap()
    }

    #[test]
    fn toy_laplacian_matches_printed_matrix() {
        let l = build_laplacian(&toy());
        assert_eq!(
            l.to_dense(),
            vec![
                vec![1, 0, -1, 0],
                vec![0, 1, 0, -1],
                vec![-1, 0, 1, 0],
                vec![0, -1, 0, 1],
            ]
        );
        assert_eq!(l.nnz(), 2 * 2 + 4);
        assert!(l.is_laplacian());
    }

    #[test]
    fn edgeless_laplacian_is_zero_with_stored_diagonal() {
        let l = build_laplacian(&Graph::edgeless(3));
        assert_eq!(l.nnz(), 3);
        assert_eq!(l.to_dense(), vec![vec![0; 3]; 3]);
        assert_eq!(l.row_sums(), vec![0, 0, 0]);
    }

    #[test]
    fn path_example_permutes_to_tridiagonal() {
        let l = build_laplacian(&path_example());
        assert_eq!(bandwidth(&l), 3);
        let p = Permutation::from_one_based(&[2, 3, 4, 1]).unwrap();
        let lhat = permute_symmetric(&l, &p).unwrap();
        assert_eq!(
            lhat.to_dense(),
            vec![
                vec![1, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 1],
            ]
        );
        assert_eq!(bandwidth(&lhat), 1);
    }

    #[test]
    fn identity_and_inverse_round_trip() {
        let l = build_laplacian(&path_example());
        assert_eq!(l.permute_symmetric(&Permutation::identity(4)).unwrap(), l);
        let p = Permutation::from_one_based(&[3, 1, 4, 2]).unwrap();
        let back = l
            .permute_symmetric(&p)
            .unwrap()
            .permute_symmetric(&p.inverted())
            .unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn dimension_mismatch() {
        let l = build_laplacian(&toy());
        assert!(matches!(
            l.permute_symmetric(&Permutation::identity(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn diagonal_bandwidth_is_zero() {
        let id = SparseSymMatrix::from_dense(&[[1, 0], [0, 1]]).unwrap();
        assert_eq!(id.bandwidth(), 0);
        let empty = SparseSymMatrix::from_dense::<[i32; 0]>(&[]).unwrap();
        assert_eq!(empty.bandwidth(), 0);
    }

    #[test]
    fn from_dense_rejects_asymmetry() {
        assert!(matches!(
            SparseSymMatrix::from_dense(&[[1, -1], [0, 1]]),
            Err(Error::NotSymmetric { .. })
        ));
    }
}
