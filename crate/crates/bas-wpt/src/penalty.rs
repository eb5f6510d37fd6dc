//! One-sided inequality constraints and the penalty fitness.
//!
//! Every constraint is a scalar function `g(x)` interpreted as `g(x) <= 0`;
//! the boundary `g(x) = 0` counts as feasible. Infeasible points pay
//! `lambda * g(x)` per violated constraint on top of the raw objective, which
//! makes them arbitrarily unattractive for large `lambda` while still ranking
//! low-violation points ahead of gross violators.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scalar constraint function over a physical point, interpreted as `g(x) <= 0`.
pub type ConstraintFn = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Ordered collection of one-sided inequality constraints.
#[derive(Default)]
pub struct ConstraintSet {
    constraints: Vec<ConstraintFn>,
}

impl ConstraintSet {
    /// Empty set: every point is feasible.
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(constraints: Vec<ConstraintFn>) -> Self {
        Self { constraints }
    }

    /// Appends one `g(x) <= 0` constraint.
    pub fn push<F>(&mut self, g: F)
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        self.constraints.push(Box::new(g));
    }

    /// Appends both halves of `lower <= g(x) <= upper`.
    pub fn push_two_sided<F>(&mut self, lower: f64, upper: f64, g: F) -> Result<()>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        let [lo, hi] = split_two_sided(lower, upper, g)?;
        self.constraints.push(lo);
        self.constraints.push(hi);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Evaluates every constraint at `x`, failing on the first non-finite
    /// value with the offending constraint index.
    pub fn values(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.constraints
            .iter()
            .enumerate()
            .map(|(index, g)| {
                let v = g(x);
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::NonFiniteConstraint {
                        index,
                        point: x.to_vec(),
                    })
                }
            })
            .collect()
    }

    /// Evaluates all constraints and aggregates per-constraint feasibility.
    pub fn report(&self, x: &[f64]) -> Result<FeasibilityReport> {
        Ok(FeasibilityReport::from_values(self.values(x)?))
    }
}

impl std::fmt::Debug for ConstraintSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConstraintSet")
            .field("count", &self.constraints.len())
            .finish()
    }
}

/// Per-constraint values and the aggregate feasibility verdict at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    /// Constraint values `g_j(x)` in problem units.
    pub values: Vec<f64>,
    /// `true` where `g_j(x) > 0`.
    pub violated: Vec<bool>,
    /// `true` iff no constraint is violated.
    pub feasible: bool,
}

impl FeasibilityReport {
    pub fn from_values(values: Vec<f64>) -> Self {
        let violated: Vec<bool> = values
            .iter()
            .map(|&v| violation_indicator(v) == 1.0)
            .collect();
        let feasible = !violated.iter().any(|&v| v);
        Self {
            values,
            violated,
            feasible,
        }
    }
}

/// Violation indicator: 1 when `g_value > 0`, else 0. The boundary counts as
/// feasible.
pub fn violation_indicator(g_value: f64) -> f64 {
    if g_value > 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Penalized fitness `F = f + lambda * sum_j h_j(g_j) * g_j`. Equals `f`
/// exactly whenever every constraint is satisfied, for any `lambda`.
pub fn penalized_fitness(f: f64, g_values: &[f64], lambda: f64) -> f64 {
    let penalty: f64 = g_values.iter().map(|&g| violation_indicator(g) * g).sum();
    f + lambda * penalty
}

/// Splits `lower <= g(x) <= upper` into two one-sided constraints
/// `lower - g(x) <= 0` and `g(x) - upper <= 0`.
pub fn split_two_sided<F>(lower: f64, upper: f64, g: F) -> Result<[ConstraintFn; 2]>
where
    F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
{
    if lower.is_nan() || upper.is_nan() || lower >= upper {
        return Err(Error::InvalidRange { lower, upper });
    }
    let g = Arc::new(g);
    let g_lo = Arc::clone(&g);
    Ok([
        Box::new(move |x: &[f64]| lower - g_lo(x)),
        Box::new(move |x: &[f64]| g(x) - upper),
    ])
}
