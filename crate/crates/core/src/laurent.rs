//! Truncated Laurent expansions: exact coefficients on a fixed exponent window.
//!
//! A window never truncates silently. Restricting to a smaller window is
//! only allowed when every dropped coefficient is zero; anything else is a
//! `WindowOverflow` error. That discipline is what keeps the Čech ranks
//! computed from these spaces honest.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::ExactError;
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentWindow {
    lo: i64,
    hi: i64,
    coeffs: Vec<GaussianRational>,
}

impl LaurentWindow {
    pub fn zeros(lo: i64, hi: i64) -> Result<Self, ExactError> {
        if hi < lo {
            return Err(ExactError::WindowBoundsInverted { lo, hi });
        }
        Ok(LaurentWindow {
            lo,
            hi,
            coeffs: vec![GaussianRational::zero(); (hi - lo + 1) as usize],
        })
    }

    pub fn from_coeffs(lo: i64, coeffs: Vec<GaussianRational>) -> Result<Self, ExactError> {
        if coeffs.is_empty() {
            return Err(ExactError::WindowBoundsInverted { lo, hi: lo - 1 });
        }
        let hi = lo + coeffs.len() as i64 - 1;
        Ok(LaurentWindow { lo, hi, coeffs })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn coeff(&self, exponent: i64) -> GaussianRational {
        if exponent < self.lo || exponent > self.hi {
            GaussianRational::zero()
        } else {
            self.coeffs[(exponent - self.lo) as usize].clone()
        }
    }

    pub fn set_coeff(&mut self, exponent: i64, value: GaussianRational) -> Result<(), ExactError> {
        if exponent < self.lo || exponent > self.hi {
            return Err(ExactError::WindowOverflow { exponent });
        }
        self.coeffs[(exponent - self.lo) as usize] = value;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Addition requires identical windows; combining mismatched spans is
    /// exactly the silent-truncation bug this type exists to forbid.
    pub fn add(&self, rhs: &LaurentWindow) -> Result<LaurentWindow, ExactError> {
        if self.lo != rhs.lo || self.hi != rhs.hi {
            return Err(ExactError::WindowMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LaurentWindow {
            lo: self.lo,
            hi: self.hi,
            coeffs,
        })
    }

    /// Full product window `[lo₁+lo₂, hi₁+hi₂]`; no coefficient can be lost.
    pub fn mul(&self, rhs: &LaurentWindow) -> LaurentWindow {
        let lo = self.lo + rhs.lo;
        let hi = self.hi + rhs.hi;
        let mut coeffs = vec![GaussianRational::zero(); (hi - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        LaurentWindow { lo, hi, coeffs }
    }

    /// Shrink to `[lo, hi]`; errors if a nonzero coefficient would be dropped.
    pub fn restrict(&self, lo: i64, hi: i64) -> Result<LaurentWindow, ExactError> {
        if hi < lo {
            return Err(ExactError::WindowBoundsInverted { lo, hi });
        }
        for (e, c) in self.iter() {
            if (e < lo || e > hi) && !c.is_zero() {
                return Err(ExactError::WindowOverflow { exponent: e });
            }
        }
        let mut out = LaurentWindow::zeros(lo, hi)?;
        for (e, c) in self.iter() {
            if e >= lo && e <= hi {
                out.set_coeff(e, c.clone())?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*t^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
