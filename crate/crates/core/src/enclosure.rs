//! Enclosure arithmetic: real values paired with a certified absolute error
//! radius. All series evaluations in this crate return an [`Enclosure`], and
//! every combinator preserves the containment guarantee: if the true inputs
//! lie inside their enclosures, the true result lies inside the output.
//!
//! Rounding of the underlying hardware operations is not directed; instead a
//! fixed slack of [`SLACK_ULPS`] machine epsilons (relative to the result) is
//! folded into the radius on every operation.

use crate::error::{Error, Result};

/// Slack added per arithmetic operation, in units of machine epsilon times
/// the magnitude of the result. Covers un-directed hardware rounding.
pub const SLACK_ULPS: f64 = 8.0;

/// A real value with a certified absolute error radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    value: f64,
    error: f64,
}

fn slack(v: f64) -> f64 {
    SLACK_ULPS * f64::EPSILON * v.abs()
}

impl Enclosure {
    pub fn new(value: f64, error: f64) -> Self {
        assert!(error >= 0.0 && error.is_finite(), "error radius must be finite and >= 0");
        assert!(value.is_finite(), "value must be finite");
        Enclosure { value, error }
    }

    /// An exactly-known value (zero radius).
    pub fn exact(value: f64) -> Self {
        Enclosure::new(value, 0.0)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn error(&self) -> f64 {
        self.error
    }

    pub fn lower(&self) -> f64 {
        self.value - self.error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower() <= x && x <= self.upper()
    }

    /// Widen the radius by a non-negative amount (e.g. a truncation tail).
    pub fn widen(self, extra: f64) -> Self {
        assert!(extra >= 0.0 && extra.is_finite());
        Enclosure::new(self.value, self.error + extra)
    }

    pub fn add(self, rhs: Enclosure) -> Self {
        let v = self.value + rhs.value;
        Enclosure::new(v, self.error + rhs.error + slack(v))
    }

    pub fn sub(self, rhs: Enclosure) -> Self {
        let v = self.value - rhs.value;
        Enclosure::new(v, self.error + rhs.error + slack(v))
    }

    pub fn mul(self, rhs: Enclosure) -> Self {
        let v = self.value * rhs.value;
        let e = self.value.abs() * rhs.error + rhs.value.abs() * self.error + self.error * rhs.error;
        Enclosure::new(v, e + slack(v))
    }

    /// Multiply by an exactly-known scalar.
    pub fn scale(self, c: f64) -> Self {
        let v = self.value * c;
        Enclosure::new(v, self.error * c.abs() + slack(v))
    }

    /// Square root of an enclosure. The upper edge must be non-negative; a
    /// lower edge below zero is clamped at zero and the radius widened
    /// accordingly.
    pub fn sqrt(self) -> Result<Self> {
        if self.upper() < 0.0 {
            return Err(Error::Domain(format!(
                "sqrt of enclosure entirely below zero: {} ± {}",
                self.value, self.error
            )));
        }
        let lo = self.lower().max(0.0).sqrt();
        let hi = self.upper().sqrt();
        let v = 0.5 * (lo + hi);
        Enclosure::new(v, 0.5 * (hi - lo) + slack(v)).ok()
    }

    /// ln(1 + x) for an enclosure of x; the whole enclosure must stay above
    /// −1. Keeps the error relative to x when x is tiny, where `ln` on an
    /// enclosure of 1 + x would floor the radius at machine epsilon.
    pub fn ln_1p(self) -> Result<Self> {
        if self.lower() <= -1.0 {
            return Err(Error::Domain(format!(
                "ln_1p of enclosure touching -1: {} ± {}",
                self.value, self.error
            )));
        }
        let lo = self.lower().ln_1p();
        let hi = self.upper().ln_1p();
        let v = 0.5 * (lo + hi);
        Enclosure::new(v, 0.5 * (hi - lo) + slack(v)).ok()
    }

    /// Natural logarithm; the whole enclosure must be strictly positive.
    pub fn ln(self) -> Result<Self> {
        if self.lower() <= 0.0 {
            return Err(Error::Domain(format!(
                "ln of enclosure touching zero: {} ± {}",
                self.value, self.error
            )));
        }
        let lo = self.lower().ln();
        let hi = self.upper().ln();
        let v = 0.5 * (lo + hi);
        Enclosure::new(v, 0.5 * (hi - lo) + slack(v)).ok()
    }

    fn ok(self) -> Result<Self> {
        Ok(self)
    }
}

impl std::ops::Add for Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: Enclosure) -> Enclosure {
        Enclosure::add(self, rhs)
    }
}

impl std::ops::Sub for Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: Enclosure) -> Enclosure {
        Enclosure::sub(self, rhs)
    }
}

impl std::ops::Mul for Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: Enclosure) -> Enclosure {
        Enclosure::mul(self, rhs)
    }
}

impl std::fmt::Display for Enclosure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ± {:.3e}", self.value, self.error)
    }
}
