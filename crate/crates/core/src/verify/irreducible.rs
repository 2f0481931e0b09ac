use crate::error::{Error, Result};
use crate::matrix::SparseSymMatrix;

/// Largest dimension accepted by the bipartition enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Irreducibility by enumerating every split of the index set.
///
/// The matrix is irreducible when, for every nonempty proper subset `S`,
/// some nonzero `a_ij` has `i` in `S` and `j` outside it. A 1x1 matrix is
/// irreducible iff its entry is nonzero. The empty matrix is reported as
/// reducible.
pub fn is_irreducible_bruteforce(m: &SparseSymMatrix) -> Result<bool> {
    let n = m.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleLimit {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    match n {
        0 => return Ok(false),
        1 => return Ok(m.get(0, 0) != 0),
        _ => {}
    }

    // reach[i]: columns j != i with a_ij != 0
    let reach: Vec<u32> = (0..n)
        .map(|i| {
            let (cols, vals) = m.row(i);
            cols.iter()
                .zip(vals)
                .filter(|&(&c, &v)| c as usize != i && v != 0)
                .fold(0u32, |acc, (&c, _)| acc | (1 << c))
        })
        .collect();

    let full: u32 = (1u32 << n) - 1;
    // union of reach over the members of each subset, built from the subset
    // with its lowest bit removed
    let mut union = vec![0u32; 1 << n];
    for subset in 1..full {
        let low = subset.trailing_zeros() as usize;
        union[subset as usize] = union[(subset & (subset - 1)) as usize] | reach[low];
        if union[subset as usize] & !subset & full == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
