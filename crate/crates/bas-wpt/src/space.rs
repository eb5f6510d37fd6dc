//! Variable bounds and the normalized search cube.
//!
//! The optimizer walks the unit hypercube `[0, 1]^N`; physical values are
//! recovered per variable by an affine rescale, with discrete variables
//! snapped to their nearest admissible grid value. Keeping normalization
//! here means the search kernel never sees problem units.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One decision variable: either a continuous interval or a finite grid of
/// admissible physical values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum VariableSpec {
    /// Continuous interval `[lower, upper]` in problem units.
    Continuous { lower: f64, upper: f64 },
    /// Ordered, strictly increasing list of admissible values. The variable's
    /// bounds are the first and last grid entries.
    Grid { values: Vec<f64> },
}

impl VariableSpec {
    /// Continuous variable on `[lower, upper]`. Requires `lower < upper`.
    pub fn continuous(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() || lower >= upper {
            return Err(Error::InvalidVariable(format!(
                "continuous bounds must satisfy lower < upper, got [{lower}, {upper}]"
            )));
        }
        Ok(Self::Continuous { lower, upper })
    }

    /// Discrete variable restricted to `values`, which must be non-empty,
    /// finite, and strictly increasing.
    pub fn grid(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidVariable("grid must be non-empty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidVariable("grid values must be finite".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidVariable(
                "grid values must be strictly increasing".into(),
            ));
        }
        Ok(Self::Grid { values })
    }

    /// Evenly spaced grid `{start, start+step, …}` with `count` points.
    pub fn grid_steps(start: f64, step: f64, count: usize) -> Result<Self> {
        if step <= 0.0 || !step.is_finite() {
            return Err(Error::InvalidVariable(format!(
                "grid step must be positive, got {step}"
            )));
        }
        Self::grid((0..count).map(|k| start + k as f64 * step).collect())
    }

    /// Lower bound in problem units.
    pub fn lower(&self) -> f64 {
        match self {
            Self::Continuous { lower, .. } => *lower,
            Self::Grid { values } => values[0],
        }
    }

    /// Upper bound in problem units.
    pub fn upper(&self) -> f64 {
        match self {
            Self::Continuous { upper, .. } => *upper,
            Self::Grid { values } => *values.last().expect("grid is non-empty"),
        }
    }

    /// Nearest admissible grid value to `x`; exact midpoints round up to the
    /// larger grid value. Returns `x` unchanged for continuous variables.
    pub fn snap(&self, x: f64) -> f64 {
        match self {
            Self::Continuous { .. } => x,
            Self::Grid { values } => {
                // index of first grid value >= x
                let idx = values.partition_point(|&v| v < x);
                if idx == 0 {
                    return values[0];
                }
                if idx == values.len() {
                    return values[values.len() - 1];
                }
                let below = values[idx - 1];
                let above = values[idx];
                if x - below < above - x {
                    below
                } else {
                    above
                }
            }
        }
    }

    fn is_member(&self, x: f64) -> bool {
        match self {
            Self::Continuous { lower, upper } => (*lower..=*upper).contains(&x),
            Self::Grid { values } => values.contains(&x),
        }
    }
}

/// Ordered list of variables defining the physical domain and its normalized
/// unit-cube image.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    variables: Vec<VariableSpec>,
}

impl SearchSpace {
    /// Builds a space from its variables. Requires at least one variable.
    pub fn new(variables: Vec<VariableSpec>) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::EmptyDimension);
        }
        Ok(Self { variables })
    }

    /// Uniform continuous box `[lower, upper]^dim`.
    pub fn uniform_box(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        Self::new(
            (0..dim)
                .map(|_| VariableSpec::continuous(lower, upper))
                .collect::<Result<_>>()?,
        )
    }

    pub fn dimension(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[VariableSpec] {
        &self.variables
    }

    /// Maps a normalized point to problem units: each component is clamped to
    /// `[0, 1]`, rescaled onto its variable's bounds, and snapped for grid
    /// variables. Output always lies within the physical bounds.
    pub fn denormalize(&self, u: &[f64]) -> Result<Vec<f64>> {
        self.check_dimension(u.len())?;
        Ok(self
            .variables
            .iter()
            .zip(u)
            .map(|(var, &ui)| {
                let t = ui.clamp(0.0, 1.0);
                var.snap(var.lower() + t * (var.upper() - var.lower()))
            })
            .collect())
    }

    /// Maps a physical point into the unit cube. Errors if any component is
    /// outside its variable's bounds; inverse of [`denormalize`] for
    /// continuous variables.
    ///
    /// [`denormalize`]: SearchSpace::denormalize
    pub fn normalize(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dimension(x.len())?;
        self.variables
            .iter()
            .zip(x)
            .enumerate()
            .map(|(index, (var, &xi))| {
                let (lower, upper) = (var.lower(), var.upper());
                if !(lower..=upper).contains(&xi) {
                    return Err(Error::OutOfBounds {
                        index,
                        value: xi,
                        lower,
                        upper,
                    });
                }
                Ok((xi - lower) / (upper - lower))
            })
            .collect()
    }

    /// True when every component of `x` is admissible: inside bounds, and an
    /// exact grid member for grid variables.
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && self
                .variables
                .iter()
                .zip(x)
                .all(|(var, &xi)| var.is_member(xi))
    }

    /// Uniform random point in `[0, 1]^N`.
    pub fn random_unit_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        (0..self.dimension()).map(|_| rng.gen::<f64>()).collect()
    }

    fn check_dimension(&self, len: usize) -> Result<()> {
        if len != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: len,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pv_grid() -> VariableSpec {
        VariableSpec::grid_steps(0.0625, 0.0625, 99).unwrap()
    }

    #[test]
    fn denormalize_rescales_midpoint() {
        let space = SearchSpace::new(vec![VariableSpec::continuous(10.0, 200.0).unwrap()]).unwrap();
        assert_eq!(space.denormalize(&[0.5]).unwrap(), vec![105.0]);
    }

    #[test]
    fn denormalize_hits_endpoints() {
        let space = SearchSpace::new(vec![VariableSpec::continuous(10.0, 200.0).unwrap()]).unwrap();
        assert_eq!(space.denormalize(&[0.0]).unwrap(), vec![10.0]);
        assert_eq!(space.denormalize(&[1.0]).unwrap(), vec![200.0]);
    }

    #[test]
    fn denormalize_tops_out_on_grid() {
        let space = SearchSpace::new(vec![pv_grid()]).unwrap();
        assert_eq!(space.denormalize(&[1.0]).unwrap(), vec![6.1875]);
    }

    #[test]
    fn denormalize_clamps_out_of_cube_inputs() {
        let space = SearchSpace::new(vec![
            VariableSpec::continuous(10.0, 200.0).unwrap(),
            VariableSpec::continuous(10.0, 200.0).unwrap(),
        ])
        .unwrap();
        assert_eq!(space.denormalize(&[-0.3, 1.7]).unwrap(), vec![10.0, 200.0]);
    }

    #[test]
    fn normalize_is_inverse_at_given_points() {
        let space = SearchSpace::new(vec![VariableSpec::continuous(10.0, 200.0).unwrap()]).unwrap();
        assert_eq!(space.normalize(&[105.0]).unwrap(), vec![0.5]);
        let space = SearchSpace::new(vec![VariableSpec::continuous(33.0, 45.0).unwrap()]).unwrap();
        assert_eq!(space.normalize(&[33.0]).unwrap(), vec![0.0]);
    }

    #[test]
    fn normalize_rejects_out_of_bounds_naming_index() {
        let space = SearchSpace::uniform_box(3, 0.0, 1.0).unwrap();
        let err = space.normalize(&[0.5, 2.0, 0.5]).unwrap_err();
        match err {
            Error::OutOfBounds { index, .. } => assert_eq!(index, 1),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let space = SearchSpace::uniform_box(2, 0.0, 1.0).unwrap();
        assert!(matches!(
            space.denormalize(&[0.5]).unwrap_err(),
            Error::DimensionMismatch {
                expected: 2,
                actual: 1
            }
        ));
    }

    #[test]
    fn snap_picks_nearest_grid_value() {
        let grid = pv_grid();
        assert_eq!(grid.snap(0.8130), 0.8125);
    }

    #[test]
    fn snap_clamps_below_grid_minimum() {
        assert_eq!(pv_grid().snap(0.01), 0.0625);
    }

    #[test]
    fn snap_breaks_midpoint_ties_upward() {
        // 0.09375 is the exact midpoint of 0.0625 and 0.125
        assert_eq!(pv_grid().snap(0.09375), 0.125);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(VariableSpec::continuous(5.0, 5.0).is_err());
        assert!(VariableSpec::continuous(7.0, 2.0).is_err());
        assert!(VariableSpec::grid(vec![]).is_err());
        assert!(VariableSpec::grid(vec![1.0, 1.0]).is_err());
        assert!(VariableSpec::grid(vec![2.0, 1.0]).is_err());
        assert!(SearchSpace::new(vec![]).is_err());
    }

    #[test]
    fn random_unit_point_is_seeded_and_in_range() {
        let space = SearchSpace::uniform_box(3, -5.0, 5.0).unwrap();
        let mut rng_a = ChaCha8Rng::seed_from_u64(7);
        let mut rng_b = ChaCha8Rng::seed_from_u64(7);
        let a = space.random_unit_point(&mut rng_a);
        let b = space.random_unit_point(&mut rng_b);
        assert_eq!(a, b);
        for _ in 0..10_000 {
            let p = space.random_unit_point(&mut rng_a);
            assert!(p.iter().all(|&v| (0.0..=1.0).contains(&v)));
        }
    }

    #[test]
    fn random_unit_point_is_uniform_on_average() {
        let space = SearchSpace::uniform_box(2, 0.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut sums = [0.0f64; 2];
        let draws = 100_000;
        for _ in 0..draws {
            let p = space.random_unit_point(&mut rng);
            sums[0] += p[0];
            sums[1] += p[1];
        }
        for s in sums {
            assert!((s / draws as f64 - 0.5).abs() < 0.01);
        }
    }

    proptest! {
        #[test]
        fn round_trip_identity_on_continuous(u in proptest::collection::vec(0.0f64..=1.0, 1..6)) {
            let space = SearchSpace::uniform_box(u.len(), -3.0, 17.0).unwrap();
            let x = space.denormalize(&u).unwrap();
            let back = space.normalize(&x).unwrap();
            for (ui, bi) in u.iter().zip(&back) {
                prop_assert!((ui - bi).abs() < 1e-12);
            }
        }

        #[test]
        fn denormalize_stays_in_bounds(u in proptest::collection::vec(-2.0f64..=3.0, 2)) {
            let space = SearchSpace::new(vec![
                VariableSpec::continuous(10.0, 200.0).unwrap(),
                VariableSpec::grid_steps(0.0625, 0.0625, 99).unwrap(),
            ])
            .unwrap();
            let x = space.denormalize(&u).unwrap();
            prop_assert!(space.contains(&x), "{x:?} escaped bounds");
        }

        #[test]
        fn snap_returns_grid_members(x in -1.0f64..8.0) {
            let grid = pv_grid();
            let snapped = grid.snap(x);
            prop_assert!((snapped / 0.0625).fract() == 0.0);
            prop_assert!((0.0625..=6.1875).contains(&snapped));
        }
    }
}
