//! Dense cyclic Jacobi eigensolver for small symmetric matrices.

use crate::error::{Error, Result};
use crate::matrix::SparseSymMatrix;

/// Largest dimension the dense oracle accepts.
pub const SPECTRAL_LIMIT: usize = 256;

/// Relative threshold under which an eigenvalue counts as zero.
pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-8;

const OFF_DIAGONAL_REDUCTION: f64 = 1e-12;
const MAX_SWEEPS: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub zero_multiplicity: usize,
    pub tolerance: f64,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Eigenvalues of a symmetric row-major matrix, ascending; also returns the
/// number of sweeps used.
fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> (Vec<f64>, usize) {
    let target = OFF_DIAGONAL_REDUCTION * off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off_diagonal_norm(&a, n) > target {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    (eig, sweeps)
}

/// Full spectrum of `l` and the multiplicity of zero, counting eigenvalues
/// with `|lambda| < tol * max(1, lambda_max)`.
pub fn spectrum(l: &SparseSymMatrix, tol: f64) -> Result<SpectralReport> {
    let n = l.n();
    if n > SPECTRAL_LIMIT {
        return Err(Error::OracleLimit {
            n,
            limit: SPECTRAL_LIMIT,
        });
    }
    let (eigenvalues, sweeps) = jacobi_eigenvalues(l.to_dense_f64(), n);
    let scale = eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
    let zero_multiplicity = eigenvalues.iter().filter(|v| v.abs() < tol * scale).count();
    Ok(SpectralReport {
        eigenvalues,
        zero_multiplicity,
        tolerance: tol,
        sweeps,
    })
}

pub fn zero_multiplicity(l: &SparseSymMatrix, tol: f64) -> Result<usize> {
    spectrum(l, tol).map(|r| r.zero_multiplicity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, IndexBase};

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-10)
    }

    #[test]
    fn toy_graph_spectrum() {
        let g = Graph::from_edges(4, &[(1, 3), (2, 4)], IndexBase::One, false).unwrap();
        let r = spectrum(&SparseSymMatrix::laplacian(&g), DEFAULT_ZERO_TOLERANCE).unwrap();
        assert!(
            close(&r.eigenvalues, &[0.0, 0.0, 2.0, 2.0]),
            "{:?}",
            r.eigenvalues
        );
        assert_eq!(r.zero_multiplicity, 2);
    }

    #[test]
    fn single_edge_and_zero_matrix() {
        let k2 = SparseSymMatrix::from_dense(&[[1, -1], [-1, 1]]).unwrap();
        let r = spectrum(&k2, DEFAULT_ZERO_TOLERANCE).unwrap();
        assert!(close(&r.eigenvalues, &[0.0, 2.0]));
        assert_eq!(r.zero_multiplicity, 1);

        let z = SparseSymMatrix::laplacian(&Graph::edgeless(3));
        assert_eq!(zero_multiplicity(&z, DEFAULT_ZERO_TOLERANCE).unwrap(), 3);
    }

    #[test]
    fn path_spectrum_matches_closed_form() {
        // P_n Laplacian eigenvalues: 2 - 2 cos(pi k / n)
        let n = 9;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(n, &edges, IndexBase::Zero, false).unwrap();
        let r = spectrum(&SparseSymMatrix::laplacian(&g), DEFAULT_ZERO_TOLERANCE).unwrap();
        let expected: Vec<f64> = (0..n)
            .map(|k| 2.0 - 2.0 * (std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        assert!(close(&r.eigenvalues, &expected));
    }

    #[test]
    fn oracle_limit() {
        let big = SparseSymMatrix::laplacian(&Graph::edgeless(SPECTRAL_LIMIT + 1));
        assert!(matches!(
            spectrum(&big, DEFAULT_ZERO_TOLERANCE),
            Err(Error::OracleLimit { .. })
        ));
    }
}
