//! Fixed-length integer-vector solution representation.
//!
//! A genome stores 0-based symbols; the per-position alphabet sizes (arities)
//! live on the owning problem. Human-friendly 1-based labels appear only in
//! serialized output.

use crate::core::rng::RngStream;
use crate::error::{Error, Result};

/// Fixed-length vector of non-negative integers over per-position alphabets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genome {
    genes: Vec<u32>,
}

impl Genome {
    pub fn new(genes: Vec<u32>) -> Self {
        Self { genes }
    }

    /// Genome with each gene drawn uniformly over its arity.
    pub fn random(arity: &[u32], rng: &mut RngStream) -> Self {
        let genes = arity
            .iter()
            .map(|&a| {
                debug_assert!(a >= 1);
                if a == 1 {
                    0
                } else {
                    rng.index(a as usize) as u32
                }
            })
            .collect();
        Self { genes }
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn genes(&self) -> &[u32] {
        &self.genes
    }

    pub fn genes_mut(&mut self) -> &mut [u32] {
        &mut self.genes
    }

    /// Checks every gene against its arity.
    pub fn check(&self, arity: &[u32]) -> Result<()> {
        if self.genes.len() != arity.len() {
            return Err(Error::LengthMismatch {
                left: self.genes.len(),
                right: arity.len(),
            });
        }
        for (position, (&g, &a)) in self.genes.iter().zip(arity).enumerate() {
            if g >= a {
                return Err(Error::GeneOutOfRange {
                    position,
                    value: g,
                    arity: a,
                });
            }
        }
        Ok(())
    }

    /// Count of positions where `self` and `other` differ.
    pub fn hamming(&self, other: &Genome) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .genes
            .iter()
            .zip(&other.genes)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Comma-separated 1-based labels, e.g. `1,2,1` (allocation result files).
    pub fn to_one_based(&self) -> String {
        self.genes
            .iter()
            .map(|g| (g + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// `0`/`1` string (binary-encoded problems).
    pub fn to_bitstring(&self) -> String {
        self.genes
            .iter()
            .map(|&g| if g == 0 { '0' } else { '1' })
            .collect()
    }
}
