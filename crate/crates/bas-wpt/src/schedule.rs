//! Coupled step-size / antenna-distance schedule.
//!
//! The step size follows the affine recurrence `delta' = c1 * delta +
//! delta_add`, and the antenna distance stays locked to `d = delta / c2`.
//! With `delta_add = 0` the step decays geometrically; with `delta_add > 0`
//! it converges to the fixed point `delta_add / (1 - c1)`, which acts as a
//! resolution floor. Setting `delta_add = delta_init` reproduces the
//! textbook recurrence `delta^t = c1 * delta^{t-1} + delta^0` verbatim.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Current step size and antenna distance plus the recurrence coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepSchedule {
    delta: f64,
    d: f64,
    c1: f64,
    c2: f64,
    delta_add: f64,
    delta_init: f64,
}

impl StepSchedule {
    /// Builds a schedule starting at `delta_init`.
    ///
    /// Requires `0 <= c1 < 1`, `c2 > 0`, `delta_init > 0`, `delta_add >= 0`.
    pub fn new(c1: f64, c2: f64, delta_init: f64, delta_add: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&c1) {
            return Err(Error::InvalidConfig(format!(
                "c1 must lie in [0, 1), got {c1}"
            )));
        }
        if !c2.is_finite() || c2 <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "c2 must be positive, got {c2}"
            )));
        }
        if !delta_init.is_finite() || delta_init <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "delta_init must be positive, got {delta_init}"
            )));
        }
        if !delta_add.is_finite() || delta_add < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "delta_add must be non-negative, got {delta_add}"
            )));
        }
        Ok(Self {
            delta: delta_init,
            d: delta_init / c2,
            c1,
            c2,
            delta_add,
            delta_init,
        })
    }

    /// Current step size in normalized-space units.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Current antenna distance, always `delta / c2`.
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn delta_add(&self) -> f64 {
        self.delta_add
    }

    pub fn delta_init(&self) -> f64 {
        self.delta_init
    }

    /// Advances one iteration: `delta <- c1 * delta + delta_add`, then
    /// re-derives `d = delta / c2`.
    pub fn advance(&mut self) {
        self.delta = self.c1 * self.delta + self.delta_add;
        self.d = self.delta / self.c2;
    }

    /// The value `delta` converges to: `delta_add / (1 - c1)`.
    pub fn fixed_point(&self) -> f64 {
        self.delta_add / (1.0 - self.c1)
    }
}
