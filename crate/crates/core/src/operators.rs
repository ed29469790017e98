//! Variation operators composed by all algorithms: single-gene mutation,
//! single-point crossover, multi-parent crossover over the global-best pool,
//! onlooker neighborhood perturbation, and the linear inertia schedule.

use crate::core::genome::Genome;
use crate::core::rng::RngStream;
use crate::error::{Error, Result};

/// Linearly annealed inertia weight: `w_max - t * (w_max - w_min) / iter_max`.
pub fn inertia(t: u32, iter_max: u32, w_max: f64, w_min: f64) -> Result<f64> {
    if iter_max == 0 {
        return Err(Error::ZeroIterMax);
    }
    debug_assert!(t <= iter_max);
    debug_assert!(w_max >= w_min);
    Ok(w_max - t as f64 * (w_max - w_min) / iter_max as f64)
}

/// Changes exactly one gene: position uniform over mutable positions
/// (arity >= 2), new value uniform over the alphabet excluding the current
/// value.
pub fn mutate_one(g: &Genome, arity: &[u32], rng: &mut RngStream) -> Result<Genome> {
    let mutable: Vec<usize> = (0..arity.len()).filter(|&i| arity[i] >= 2).collect();
    if mutable.is_empty() {
        return Err(Error::NoMutablePosition);
    }
    let pos = mutable[rng.index(mutable.len())];
    let mut out = g.clone();
    out.genes_mut()[pos] = different_value(g.genes()[pos], arity[pos], rng);
    Ok(out)
}

/// Uniform draw over `[0, arity)` excluding `current`.
fn different_value(current: u32, arity: u32, rng: &mut RngStream) -> u32 {
    debug_assert!(arity >= 2);
    let v = rng.index(arity as usize - 1) as u32;
    if v >= current {
        v + 1
    } else {
        v
    }
}

/// Single-point crossover with an interior cut drawn uniformly from
/// `[1, M-1]`; both children are returned.
pub fn single_point_crossover(
    a: &Genome,
    b: &Genome,
    rng: &mut RngStream,
) -> Result<(Genome, Genome)> {
    let m = a.len();
    if m != b.len() {
        return Err(Error::LengthMismatch {
            left: m,
            right: b.len(),
        });
    }
    if m < 2 {
        return Err(Error::NoInteriorCut { len: m });
    }
    let cut = rng.int_in(1, (m - 1) as i64) as usize;
    let mut c1 = a.genes()[..cut].to_vec();
    c1.extend_from_slice(&b.genes()[cut..]);
    let mut c2 = b.genes()[..cut].to_vec();
    c2.extend_from_slice(&a.genes()[cut..]);
    Ok((Genome::new(c1), Genome::new(c2)))
}

/// Lengths of the `e` near-equal contiguous segments of a length-`m` genome,
/// longer segments first. Sums to `m`; lengths differ by at most one.
pub fn segment_lengths(m: usize, e: usize) -> Vec<usize> {
    let base = m / e;
    let rem = m % e;
    (0..e).map(|s| base + usize::from(s < rem)).collect()
}

/// Child assembled from `E` parents: the positions are split into `E`
/// contiguous near-equal segments and a uniform random permutation assigns
/// one parent to each segment, so every parent contributes exactly once.
pub fn multi_parent_crossover(parents: &[Genome], rng: &mut RngStream) -> Result<Genome> {
    let e = parents.len();
    if e == 0 {
        return Err(Error::NoParents);
    }
    let m = parents[0].len();
    for p in &parents[1..] {
        if p.len() != m {
            return Err(Error::LengthMismatch {
                left: m,
                right: p.len(),
            });
        }
    }
    if m < e {
        return Err(Error::TooManyParents { parents: e, len: m });
    }
    let mut order: Vec<usize> = (0..e).collect();
    rng.shuffle(&mut order);
    let mut genes = Vec::with_capacity(m);
    let mut start = 0;
    for (seg, len) in segment_lengths(m, e).into_iter().enumerate() {
        genes.extend_from_slice(&parents[order[seg]].genes()[start..start + len]);
        start += len;
    }
    Ok(Genome::new(genes))
}

/// Neighbor at exact Hamming distance `k`: `k` distinct mutable positions,
/// each changed to a different value.
pub fn onlooker_neighbor(
    g: &Genome,
    k: usize,
    arity: &[u32],
    rng: &mut RngStream,
) -> Result<Genome> {
    let mutable: Vec<usize> = (0..arity.len()).filter(|&i| arity[i] >= 2).collect();
    if k == 0 || k > mutable.len() {
        return Err(Error::DistanceTooLarge {
            k,
            mutable: mutable.len(),
        });
    }
    let picks = rng.distinct_indices(k, mutable.len());
    let mut out = g.clone();
    for idx in picks {
        let pos = mutable[idx];
        out.genes_mut()[pos] = different_value(g.genes()[pos], arity[pos], rng);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    #[test]
    fn inertia_endpoints_and_midpoint() {
        assert_eq!(inertia(0, 400, 0.9, 0.4).unwrap(), 0.9);
        assert_eq!(inertia(400, 400, 0.9, 0.4).unwrap(), 0.4);
        assert!((inertia(200, 400, 0.9, 0.4).unwrap() - 0.65).abs() < 1e-15);
        assert!(matches!(inertia(0, 0, 0.9, 0.4), Err(Error::ZeroIterMax)));
    }

    #[test]
    fn inertia_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for t in 0..=400 {
            let w = inertia(t, 400, 0.9, 0.4).unwrap();
            assert!(w < prev);
            prev = w;
        }
    }

    #[test]
    fn mutate_one_changes_exactly_one_position() {
        let g = Genome::new(vec![1, 1, 1]);
        let arity = [4, 4, 4];
        let mut rng = RngStream::new(5);
        for _ in 0..100 {
            let out = mutate_one(&g, &arity, &mut rng).unwrap();
            assert_eq!(g.hamming(&out).unwrap(), 1);
            assert!(out.check(&arity).is_ok());
        }
    }

    #[test]
    fn mutate_one_binary_single_gene_is_forced() {
        let out = mutate_one(&Genome::new(vec![0]), &[2], &mut RngStream::new(0)).unwrap();
        assert_eq!(out.genes(), &[1]);
    }

    #[test]
    fn mutate_one_rejects_all_unit_arities() {
        let r = mutate_one(&Genome::new(vec![0, 0]), &[1, 1], &mut RngStream::new(0));
        assert!(matches!(r, Err(Error::NoMutablePosition)));
    }

    #[test]
    fn mutate_one_position_frequencies_are_uniform() {
        let g = Genome::new(vec![0; 5]);
        let arity = [3; 5];
        let mut counts = [0usize; 5];
        for seed in 0..10_000u64 {
            let out = mutate_one(&g, &arity, &mut RngStream::new(seed)).unwrap();
            let pos = (0..5).find(|&i| out.genes()[i] != 0).unwrap();
            counts[pos] += 1;
        }
        for &c in &counts {
            let f = c as f64 / 10_000.0;
            assert!((f - 0.2).abs() <= 0.02, "position frequency {f}");
        }
    }

    #[test]
    fn crossover_cut_example() {
        // force cut = 2 by scanning seeds for it, then check the children
        let a = Genome::new(vec![1, 1, 1, 1]);
        let b = Genome::new(vec![2, 2, 2, 2]);
        let mut found = false;
        for seed in 0..50 {
            let mut rng = RngStream::new(seed);
            let (c1, c2) = single_point_crossover(&a, &b, &mut rng).unwrap();
            if c1.genes() == [1, 1, 2, 2] {
                assert_eq!(c2.genes(), &[2, 2, 1, 1]);
                found = true;
                break;
            }
        }
        assert!(found);
    }

    #[test]
    fn crossover_identical_parents_is_idempotent() {
        let a = Genome::new(vec![3, 1, 4, 1, 5]);
        let (c1, c2) = single_point_crossover(&a, &a, &mut RngStream::new(0)).unwrap();
        assert_eq!(c1, a);
        assert_eq!(c2, a);
    }

    #[test]
    fn crossover_needs_interior_cut() {
        let a = Genome::new(vec![0]);
        assert!(matches!(
            single_point_crossover(&a, &a, &mut RngStream::new(0)),
            Err(Error::NoInteriorCut { .. })
        ));
    }

    #[test]
    fn multi_parent_single_parent_copies_it() {
        let p = Genome::new(vec![7, 8, 9]);
        let c = multi_parent_crossover(std::slice::from_ref(&p), &mut RngStream::new(0)).unwrap();
        assert_eq!(c, p);
    }

    #[test]
    fn multi_parent_rejects_more_parents_than_genes() {
        let ps: Vec<Genome> = (0..4).map(|i| Genome::new(vec![i, i])).collect();
        assert!(matches!(
            multi_parent_crossover(&ps, &mut RngStream::new(0)),
            Err(Error::TooManyParents { .. })
        ));
    }

    #[test]
    fn multi_parent_four_parents_sixteen_genes_segments() {
        // parents are constant genomes so the segment owner is readable off
        // the child; every child must be 4 runs of 4 with distinct owners
        let parents: Vec<Genome> = (0..4u32).map(|i| Genome::new(vec![i; 16])).collect();
        let mut seen = std::collections::HashSet::new();
        for seed in 0..2000u64 {
            let c = multi_parent_crossover(&parents, &mut RngStream::new(seed)).unwrap();
            let owners: Vec<u32> = c.genes().chunks(4).map(|ch| {
                assert!(ch.iter().all(|&g| g == ch[0]));
                ch[0]
            }).collect();
            let mut sorted = owners.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![0, 1, 2, 3]);
            seen.insert(owners);
        }
        // all 24 permutations occur
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn multi_parent_permutation_uniformity() {
        let parents: Vec<Genome> = (0..4u32).map(|i| Genome::new(vec![i; 16])).collect();
        let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut rng = RngStream::new(99);
        let trials = 24_000;
        for _ in 0..trials {
            let c = multi_parent_crossover(&parents, &mut rng).unwrap();
            let owners: Vec<u32> = c.genes().chunks(4).map(|ch| ch[0]).collect();
            *counts.entry(owners).or_default() += 1;
        }
        assert_eq!(counts.len(), 24);
        for &c in counts.values() {
            let f = c as f64 / trials as f64;
            assert!((f - 1.0 / 24.0).abs() <= 0.01, "permutation frequency {f}");
        }
    }

    #[test]
    fn segment_lengths_are_fair() {
        for m in 1..40 {
            for e in 1..=m {
                let lens = segment_lengths(m, e);
                assert_eq!(lens.iter().sum::<usize>(), m);
                let max = *lens.iter().max().unwrap();
                let min = *lens.iter().min().unwrap();
                assert!(max - min <= 1);
                // longer segments first
                assert!(lens.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn onlooker_exact_distances() {
        let arity = [4; 10];
        let g = Genome::new(vec![0; 10]);
        let mut rng = RngStream::new(3);
        for k in [1usize, 3, 10] {
            let out = onlooker_neighbor(&g, k, &arity, &mut rng).unwrap();
            assert_eq!(g.hamming(&out).unwrap(), k);
            assert!(out.check(&arity).is_ok());
        }
    }

    #[test]
    fn onlooker_full_binary_flip_is_complement() {
        let g = Genome::new(vec![0, 1, 0, 1]);
        let out = onlooker_neighbor(&g, 4, &[2; 4], &mut RngStream::new(0)).unwrap();
        assert_eq!(out.genes(), &[1, 0, 1, 0]);
    }

    #[test]
    fn onlooker_k_too_large_errors() {
        let g = Genome::new(vec![0, 0]);
        assert!(matches!(
            onlooker_neighbor(&g, 3, &[2, 2], &mut RngStream::new(0)),
            Err(Error::DistanceTooLarge { .. })
        ));
    }

    fn arb_arity() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(2u32..6, 2..24)
    }

    proptest! {
        #[test]
        fn crossover_gene_provenance(arity in arb_arity(), seed in any::<u64>()) {
            let mut rng = RngStream::new(seed);
            let a = Genome::random(&arity, &mut rng);
            let b = Genome::random(&arity, &mut rng);
            let (c1, c2) = single_point_crossover(&a, &b, &mut rng).unwrap();
            for i in 0..arity.len() {
                prop_assert!(c1.genes()[i] == a.genes()[i] || c1.genes()[i] == b.genes()[i]);
                prop_assert!(c2.genes()[i] == a.genes()[i] || c2.genes()[i] == b.genes()[i]);
            }
        }

        #[test]
        fn multi_parent_per_position_provenance(
            arity in arb_arity(),
            e in 1usize..5,
            seed in any::<u64>(),
        ) {
            let e = e.min(arity.len());
            let mut rng = RngStream::new(seed);
            let parents: Vec<Genome> =
                (0..e).map(|_| Genome::random(&arity, &mut rng)).collect();
            let child = multi_parent_crossover(&parents, &mut rng).unwrap();
            // recover the segment layout and check the child gene-for-gene
            // against some consistent owner per segment
            let lens = segment_lengths(arity.len(), e);
            let mut start = 0;
            let mut owners = Vec::new();
            for len in lens {
                let seg = &child.genes()[start..start + len];
                let owner = (0..e).find(|&p|
                    parents[p].genes()[start..start + len] == *seg);
                prop_assert!(owner.is_some(), "segment not traceable to one parent");
                owners.push(owner.unwrap());
                start += len;
            }
            prop_assert!(child.check(&arity).is_ok());
        }

        #[test]
        fn onlooker_distance_contract(
            arity in arb_arity(),
            k in 1usize..8,
            seed in any::<u64>(),
        ) {
            let k = k.min(arity.len());
            let mut rng = RngStream::new(seed);
            let g = Genome::random(&arity, &mut rng);
            let out = onlooker_neighbor(&g, k, &arity, &mut rng).unwrap();
            prop_assert_eq!(g.hamming(&out).unwrap(), k);
            prop_assert!(out.check(&arity).is_ok());
        }
    }
}
