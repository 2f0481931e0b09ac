use crate::error::{Error, Result};

/// A bijection between old and new node labels.
///
/// `forward[new] = old`, `inverse[old] = new`, both 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            forward: (0..n).collect(),
            inverse: (0..n).collect(),
        }
    }

    pub fn from_forward(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in forward.iter().enumerate() {
            if old >= n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {old} out of range for length {n}"
                )));
            }
            if inverse[old] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("entry {old} repeated")));
            }
            inverse[old] = new;
        }
        Ok(Permutation { forward, inverse })
    }

    /// Parses a 1-based forward vector such as `[2, 3, 4, 1]`.
    pub fn from_one_based(forward: &[usize]) -> Result<Self> {
        let zero = forward
            .iter()
            .map(|&v| {
                v.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPermutation("label 0 in 1-based vector".to_string())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_forward(zero)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.forward.iter().map(|v| v + 1).collect()
    }

    /// The inverse bijection as a permutation in its own right.
    pub fn inverted(&self) -> Permutation {
        Permutation {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// New order read back to front.
    pub fn reversed(&self) -> Permutation {
        let forward: Vec<usize> = self.forward.iter().rev().copied().collect();
        let n = forward.len();
        let inverse = self.inverse.iter().map(|&i| n - 1 - i).collect();
        Permutation { forward, inverse }
    }
}
