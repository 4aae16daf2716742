use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::Scalar;

/// A point of affine tropical n-space, n ≥ 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropVector(Vec<Scalar>);

impl TropVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::shape("vectors must have at least one entry"));
        }
        Ok(TropVector(entries))
    }

    /// Convenience constructor from integers; panics on an empty slice.
    pub fn from_ints(values: &[i64]) -> Self {
        TropVector::new(values.iter().map(|&v| Scalar::from_int(v)).collect())
            .expect("non-empty vector")
    }

    pub fn zeros(n: usize) -> Self {
        TropVector::new(vec![Scalar::zero(); n]).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub(crate) fn check_len(&self, other: &TropVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::shape(format!(
                "vector lengths differ ({} vs {})",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    /// `λ ⊗ x`: adds λ to every entry.
    pub fn scale(&self, lambda: &Scalar) -> TropVector {
        TropVector(self.0.iter().map(|v| v + lambda).collect())
    }

    /// Componentwise maximum.
    pub fn oplus(&self, other: &TropVector) -> Result<TropVector> {
        self.check_len(other)?;
        Ok(TropVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        ))
    }

    /// Componentwise minimum (the min-plus sum).
    pub fn min(&self, other: &TropVector) -> Result<TropVector> {
        self.check_len(other)?;
        Ok(TropVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a <= b { a.clone() } else { b.clone() })
                .collect(),
        ))
    }

    pub fn negate(&self) -> TropVector {
        TropVector(self.0.iter().map(|v| -v).collect())
    }

    /// Componentwise partial order: `x ≤ y` iff `x_i ≤ y_i` for all i.
    pub fn leq(&self, other: &TropVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// True if `other = λ ⊗ self` for some λ.
    pub fn is_scaling_of(&self, other: &TropVector) -> Result<bool> {
        self.check_len(other)?;
        let shift = &other.0[0] - &self.0[0];
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| (b - a) == shift))
    }

    /// Representative with last coordinate 0 (canonical up to scaling).
    pub fn normalized(&self) -> TropVector {
        let last = self.0[self.len() - 1].clone();
        self.scale(&-last)
    }

    /// Image in projective (n−1)-space: `(x_1 − x_n, …, x_{n−1} − x_n)`.
    pub fn projectivize(&self) -> Result<Vec<Scalar>> {
        let n = self.len();
        if n < 2 {
            return Err(Error::precondition("projectivization needs n >= 2"));
        }
        let last = &self.0[n - 1];
        Ok(self.0[..n - 1].iter().map(|v| v - last).collect())
    }
}

/// `⟨x | y⟩ = max{λ : λ ⊗ x ≤ y} = min_i (y_i − x_i)`.
pub fn residuation(x: &TropVector, y: &TropVector) -> Result<Scalar> {
    x.check_len(y)?;
    Ok(x.0
        .iter()
        .zip(&y.0)
        .map(|(a, b)| b - a)
        .min()
        .expect("non-empty"))
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
