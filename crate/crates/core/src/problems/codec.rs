//! Binary genome <-> continuous point codec.
//!
//! Dimension `d` occupies bits `[d*B, (d+1)*B)`, most significant bit first,
//! read as an unsigned integer `v` and mapped affinely onto
//! `[lower_d, upper_d]` with `2^B - 1` steps.

use crate::core::genome::Genome;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BinaryCodec {
    bits_per_dim: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BinaryCodec {
    pub fn new(bits_per_dim: usize, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if !(2..=63).contains(&bits_per_dim) {
            return Err(Error::InvalidParams(
                "bits_per_dim must be in [2, 63]".into(),
            ));
        }
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(Error::InvalidParams(
                "lower/upper bounds must be non-empty and equal length".into(),
            ));
        }
        for (l, u) in lower.iter().zip(&upper) {
            if l >= u || l.is_nan() || u.is_nan() {
                return Err(Error::InvalidBounds {
                    min_t: *l,
                    max_t: *u,
                });
            }
        }
        Ok(Self {
            bits_per_dim,
            lower,
            upper,
        })
    }

    pub fn bits_per_dim(&self) -> usize {
        self.bits_per_dim
    }

    pub fn n_dims(&self) -> usize {
        self.lower.len()
    }

    /// Total genome length `B * n_dims`.
    pub fn genome_len(&self) -> usize {
        self.bits_per_dim * self.n_dims()
    }

    pub fn decode(&self, g: &Genome) -> Result<Vec<f64>> {
        if g.len() != self.genome_len() {
            return Err(Error::LengthMismatch {
                left: g.len(),
                right: self.genome_len(),
            });
        }
        if g.genes().iter().any(|&b| b > 1) {
            return Err(Error::NonBinaryGenome);
        }
        let b = self.bits_per_dim;
        let steps = ((1u64 << b) - 1) as f64;
        Ok((0..self.n_dims())
            .map(|d| {
                let v = g.genes()[d * b..(d + 1) * b]
                    .iter()
                    .fold(0u64, |acc, &bit| (acc << 1) | bit as u64);
                self.lower[d] + v as f64 * (self.upper[d] - self.lower[d]) / steps
            })
            .collect())
    }

    /// Nearest-grid-point encoding; inverse of `decode` on grid values.
    pub fn encode(&self, x: &[f64]) -> Result<Genome> {
        if x.len() != self.n_dims() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.n_dims(),
            });
        }
        let b = self.bits_per_dim;
        let steps = ((1u64 << b) - 1) as f64;
        let mut genes = Vec::with_capacity(self.genome_len());
        for (d, &v) in x.iter().enumerate() {
            let t = ((v - self.lower[d]) / (self.upper[d] - self.lower[d]) * steps).round();
            let q = (t.max(0.0) as u64).min(steps as u64);
            for i in (0..b).rev() {
                genes.push(((q >> i) & 1) as u32);
            }
        }
        Ok(Genome::new(genes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn codec(b: usize, dims: usize) -> BinaryCodec {
        BinaryCodec::new(b, vec![-10.0; dims], vec![10.0; dims]).unwrap()
    }

    #[test]
    fn all_zero_bits_decode_to_lower_endpoint() {
        let c = codec(8, 3);
        let x = c.decode(&Genome::new(vec![0; 24])).unwrap();
        assert_eq!(x, vec![-10.0; 3]);
    }

    #[test]
    fn all_one_bits_decode_to_upper_endpoint() {
        let c = codec(8, 3);
        let x = c.decode(&Genome::new(vec![1; 24])).unwrap();
        assert_eq!(x, vec![10.0; 3]);
    }

    #[test]
    fn four_bit_affine_map() {
        let c = codec(4, 1);
        // v = 5 -> -10 + 5 * 20 / 15
        let x = c.decode(&Genome::new(vec![0, 1, 0, 1])).unwrap();
        assert!((x[0] - (-10.0 + 5.0 * 20.0 / 15.0)).abs() < 1e-12);
        assert!((x[0] - (-10.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn non_binary_genome_rejected() {
        let c = codec(4, 1);
        assert!(matches!(
            c.decode(&Genome::new(vec![0, 2, 0, 1])),
            Err(Error::NonBinaryGenome)
        ));
    }

    proptest! {
        #[test]
        fn decode_encode_round_trip_on_grid_values(
            b in 2usize..=20,
            k in any::<u64>(),
        ) {
            let c = codec(b, 1);
            let steps = (1u64 << b) - 1;
            let v = k % (steps + 1);
            let x = -10.0 + v as f64 * 20.0 / steps as f64;
            let g = c.encode(&[x]).unwrap();
            let back = c.decode(&g).unwrap()[0];
            prop_assert!((back - x).abs() <= 1e-12 * x.abs().max(1.0));
        }

        #[test]
        fn decoded_values_lie_within_bounds(bits in prop::collection::vec(0u32..2, 30)) {
            let c = codec(10, 3);
            let x = c.decode(&Genome::new(bits)).unwrap();
            for v in x {
                prop_assert!((-10.0..=10.0).contains(&v));
            }
        }
    }
}
