//! Grid allocation problem: assign each demand point to one service center
//! minimizing total assigned distance. Separable per demand, so the global
//! optimum (nearest-center assignment) and worst case are known exactly.

use std::fmt::Write as _;
use std::path::Path;

use crate::core::genome::Genome;
use crate::error::{Error, Result};

/// Center placement for generated grid instances.
#[derive(Clone, Debug)]
pub enum CenterLayout {
    /// Four centers at the centroids of the four equal grid quadrants.
    Quadrants,
    /// Explicitly supplied center coordinates.
    Explicit(Vec<[f64; 2]>),
}

/// Centers, demand points and the precomputed demand-to-center distances.
#[derive(Clone, Debug)]
pub struct AllocationInstance {
    centers: Vec<[f64; 2]>,
    demands: Vec<[f64; 2]>,
    /// `dist[j][i]` = Euclidean distance from demand `j` to center `i`.
    dist: Vec<Vec<f64>>,
}

impl AllocationInstance {
    pub fn new(centers: Vec<[f64; 2]>, demands: Vec<[f64; 2]>) -> Result<Self> {
        if centers.is_empty() || demands.is_empty() {
            return Err(Error::EmptyInstance);
        }
        let dist = demands
            .iter()
            .map(|d| {
                centers
                    .iter()
                    .map(|c| ((d[0] - c[0]).powi(2) + (d[1] - c[1]).powi(2)).sqrt())
                    .collect()
            })
            .collect();
        Ok(Self {
            centers,
            demands,
            dist,
        })
    }

    /// Number of centers N.
    pub fn n_centers(&self) -> usize {
        self.centers.len()
    }

    /// Number of demand points M.
    pub fn n_demands(&self) -> usize {
        self.demands.len()
    }

    pub fn centers(&self) -> &[[f64; 2]] {
        &self.centers
    }

    pub fn demands(&self) -> &[[f64; 2]] {
        &self.demands
    }

    pub fn distance(&self, demand: usize, center: usize) -> f64 {
        self.dist[demand][center]
    }

    /// Total assigned distance of a genome (gene `j` = 0-based center index
    /// for demand `j`). Each demand contributes exactly one distance term.
    pub fn fitness(&self, g: &Genome) -> f64 {
        debug_assert_eq!(g.len(), self.n_demands());
        g.genes()
            .iter()
            .enumerate()
            .map(|(j, &c)| self.dist[j][c as usize])
            .sum()
    }

    /// Exact global optimum: each demand assigned to its nearest center
    /// (ties broken toward the lowest center index).
    ///
    /// This is the true minimum because the fitness is a sum of independent
    /// per-demand terms.
    pub fn oracle(&self) -> (Genome, f64) {
        let genes: Vec<u32> = self
            .dist
            .iter()
            .map(|row| {
                let mut best = 0usize;
                for (i, &d) in row.iter().enumerate() {
                    if d < row[best] {
                        best = i;
                    }
                }
                best as u32
            })
            .collect();
        let g = Genome::new(genes);
        let f = self.fitness(&g);
        (g, f)
    }

    /// Fitness of the farthest-center assignment (separable maximum).
    pub fn worst(&self) -> f64 {
        self.dist
            .iter()
            .map(|row| row.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
            .sum()
    }

    /// Plain-text serialization: `M N` header, then N center lines, then M
    /// demand lines, each `x y` with 17 significant digits.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n_demands(), self.n_centers()).unwrap();
        for c in &self.centers {
            writeln!(out, "{:.16e} {:.16e}", c[0], c[1]).unwrap();
        }
        for d in &self.demands {
            writeln!(out, "{:.16e} {:.16e}", d[0], d[1]).unwrap();
        }
        std::fs::write(path, out)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let err = |reason: &str| Error::MalformedFile {
            path: path.display().to_string(),
            reason: reason.to_string(),
        };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| err("missing header"))?;
        let mut parts = header.split_whitespace();
        let m: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err("bad M in header"))?;
        let n: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err("bad N in header"))?;
        let mut read_points = |count: usize| -> Result<Vec<[f64; 2]>> {
            (0..count)
                .map(|_| {
                    let line = lines.next().ok_or_else(|| err("truncated file"))?;
                    let mut ps = line.split_whitespace();
                    let x: f64 = ps
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("bad coordinate"))?;
                    let y: f64 = ps
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("bad coordinate"))?;
                    Ok([x, y])
                })
                .collect()
        };
        let centers = read_points(n)?;
        let demands = read_points(m)?;
        Self::new(centers, demands)
    }
}

/// Regular `rows` x `cols` demand grid at the given spacing, demands in
/// row-major order with demand `(r, c)` at `(c * spacing, r * spacing)`.
pub fn generate_grid_instance(
    rows: usize,
    cols: usize,
    spacing: f64,
    layout: CenterLayout,
) -> Result<AllocationInstance> {
    if rows < 2 || cols < 2 || spacing <= 0.0 || spacing.is_nan() {
        return Err(Error::DegenerateGrid);
    }
    let mut demands = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            demands.push([c as f64 * spacing, r as f64 * spacing]);
        }
    }
    let centers = match layout {
        CenterLayout::Explicit(cs) => cs,
        CenterLayout::Quadrants => {
            if !rows.is_multiple_of(2) || !cols.is_multiple_of(2) {
                return Err(Error::OddQuadrants { rows, cols });
            }
            // centroid of a half-axis of k grid points starting at 0: (k-1)/2 * spacing
            let hx = (cols / 2 - 1) as f64 / 2.0 * spacing;
            let hy = (rows / 2 - 1) as f64 / 2.0 * spacing;
            let ox = (cols / 2) as f64 * spacing;
            let oy = (rows / 2) as f64 * spacing;
            vec![
                [hx, hy],
                [ox + hx, hy],
                [hx, oy + hy],
                [ox + hx, oy + hy],
            ]
        }
    };
    AllocationInstance::new(centers, demands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::rng::RngStream;
    use proptest::prelude::*;

    fn collinear() -> AllocationInstance {
        AllocationInstance::new(
            vec![[0.0, 0.0], [10.0, 0.0]],
            vec![[1.0, 0.0], [9.0, 0.0], [0.0, 1.0]],
        )
        .unwrap()
    }

    #[test]
    fn fitness_collinear_unit_distances() {
        let inst = collinear();
        // 1-based <1,2,1> is 0-based <0,1,0>
        let g = Genome::new(vec![0, 1, 0]);
        assert_eq!(inst.fitness(&g), 3.0);
    }

    #[test]
    fn fitness_hand_euclidean() {
        let inst = collinear();
        let g = Genome::new(vec![1, 1, 1]);
        let expected = 9.0 + 1.0 + 101.0f64.sqrt();
        assert!((inst.fitness(&g) - expected).abs() < 1e-12);
        assert!((inst.fitness(&g) - 20.049_875_621_120_89).abs() < 1e-4);
    }

    #[test]
    fn single_demand_fitness_is_one_distance() {
        let inst = AllocationInstance::new(vec![[0.0, 0.0], [3.0, 4.0]], vec![[0.0, 0.0]]).unwrap();
        assert_eq!(inst.fitness(&Genome::new(vec![1])), 5.0);
    }

    #[test]
    fn oracle_on_collinear_instance() {
        let inst = collinear();
        let (g, f) = inst.oracle();
        assert_eq!(g.genes(), &[0, 1, 0]);
        assert_eq!(f, 3.0);
        // exhaustive check over all 2^3 assignments
        for bits in 0..8u32 {
            let cand = Genome::new((0..3).map(|j| (bits >> j) & 1).collect());
            assert!(inst.fitness(&cand) >= f);
        }
    }

    #[test]
    fn single_center_oracle_equals_worst() {
        let inst =
            AllocationInstance::new(vec![[0.0, 0.0]], vec![[1.0, 0.0], [0.0, 2.0]]).unwrap();
        let (g, f) = inst.oracle();
        assert_eq!(g.genes(), &[0, 0]);
        assert_eq!(f, 3.0);
        assert_eq!(inst.worst(), f);
    }

    #[test]
    fn coincident_demand_contributes_zero() {
        let inst =
            AllocationInstance::new(vec![[2.0, 2.0], [9.0, 9.0]], vec![[2.0, 2.0]]).unwrap();
        let (_, f) = inst.oracle();
        assert_eq!(f, 0.0);
    }

    #[test]
    fn worst_per_demand_maxima() {
        let inst =
            AllocationInstance::new(vec![[0.0, 0.0], [10.0, 0.0]], vec![[1.0, 0.0], [9.0, 0.0]])
                .unwrap();
        assert_eq!(inst.worst(), 18.0);
    }

    #[test]
    fn grid_2x2_with_explicit_centroid_center() {
        let inst = generate_grid_instance(
            2,
            2,
            1.0,
            CenterLayout::Explicit(vec![[0.5, 0.5]]),
        )
        .unwrap();
        let mut pts: Vec<_> = inst.demands().to_vec();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(pts, vec![[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]]);
        assert_eq!(inst.centers(), &[[0.5, 0.5]]);
    }

    #[test]
    fn grid_20x20_and_60x60_quadrants() {
        let small = generate_grid_instance(20, 20, 1.0, CenterLayout::Quadrants).unwrap();
        assert_eq!(small.n_demands(), 400);
        assert_eq!(small.n_centers(), 4);
        assert_eq!(small.centers()[0], [4.5, 4.5]);
        assert_eq!(small.centers()[3], [14.5, 14.5]);
        let large = generate_grid_instance(60, 60, 1.0, CenterLayout::Quadrants).unwrap();
        assert_eq!(large.n_demands(), 3600);
        assert_eq!(large.n_centers(), 4);
    }

    #[test]
    fn odd_grid_with_quadrant_centers_errors() {
        assert!(matches!(
            generate_grid_instance(3, 4, 1.0, CenterLayout::Quadrants),
            Err(Error::OddQuadrants { .. })
        ));
    }

    #[test]
    fn distance_matrix_matches_euclidean() {
        let inst = generate_grid_instance(4, 6, 0.5, CenterLayout::Quadrants).unwrap();
        for (j, d) in inst.demands().iter().enumerate() {
            for (i, c) in inst.centers().iter().enumerate() {
                let e = ((d[0] - c[0]).powi(2) + (d[1] - c[1]).powi(2)).sqrt();
                let got = inst.distance(j, i);
                assert!((got - e).abs() <= 1e-12 * e.max(1.0));
            }
        }
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("inst.txt");
        let inst = generate_grid_instance(4, 4, 1.25, CenterLayout::Quadrants).unwrap();
        inst.save(&path).unwrap();
        let loaded = AllocationInstance::load(&path).unwrap();
        assert_eq!(loaded.centers(), inst.centers());
        assert_eq!(loaded.demands(), inst.demands());
    }

    fn arb_instance() -> impl Strategy<Value = AllocationInstance> {
        (2usize..=3, 1usize..=6, any::<u64>()).prop_map(|(n, m, seed)| {
            let mut rng = RngStream::new(seed);
            let pt = |rng: &mut RngStream| [rng.uniform() * 20.0, rng.uniform() * 20.0];
            let centers = (0..n).map(|_| pt(&mut rng)).collect();
            let demands = (0..m).map(|_| pt(&mut rng)).collect();
            AllocationInstance::new(centers, demands).unwrap()
        })
    }

    proptest! {
        #[test]
        fn oracle_equals_exhaustive_minimum(inst in arb_instance()) {
            let (_, f) = inst.oracle();
            let n = inst.n_centers() as u32;
            let m = inst.n_demands();
            let mut best = f64::INFINITY;
            let total = (n as u64).pow(m as u32);
            for mut code in 0..total {
                let genes: Vec<u32> = (0..m).map(|_| {
                    let g = (code % n as u64) as u32;
                    code /= n as u64;
                    g
                }).collect();
                best = best.min(inst.fitness(&Genome::new(genes)));
            }
            prop_assert_eq!(f, best);
        }

        #[test]
        fn fitness_between_oracle_and_worst(inst in arb_instance(), seed in any::<u64>()) {
            let (_, lo) = inst.oracle();
            let hi = inst.worst();
            let arity = vec![inst.n_centers() as u32; inst.n_demands()];
            let g = Genome::random(&arity, &mut RngStream::new(seed));
            let f = inst.fitness(&g);
            prop_assert!(f >= lo - 1e-12 && f <= hi + 1e-12);
        }
    }
}
