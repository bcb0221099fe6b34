//! One-indeterminate formal power series and moment/cumulant sequences,
//! all with exact arbitrary-precision integer coefficients and 1-based
//! indexing (no constant term).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A formal power series sum a_k z^k for k = 1..=max_order, with no constant
/// term. Every index from 1 to max_order is stored, including zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    /// coefficients[i] is a_{i+1}.
    coefficients: Vec<BigInt>,
}

impl FormalSeries {
    /// Builds a series from the coefficients a_1, a_2, ..., in order.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        FormalSeries { coefficients }
    }

    pub fn max_order(&self) -> usize {
        self.coefficients.len()
    }

    /// The coefficient a_k; indices past max_order have not been computed
    /// and are an error rather than an implicit zero.
    pub fn coefficient(&self, k: usize) -> Result<&BigInt> {
        if k == 0 || k > self.coefficients.len() {
            return Err(Error::OrderNotComputed {
                requested: k,
                max_order: self.coefficients.len(),
            });
        }
        Ok(&self.coefficients[k - 1])
    }

    /// (index, coefficient) pairs from a_1 upward.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| (i + 1, c))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// True iff every odd-index coefficient is zero.
    pub fn is_even(&self) -> bool {
        self.iter().all(|(k, c)| k % 2 == 0 || c.is_zero())
    }
}

/// Moments m_1, m_2, ..., m_L of a single random variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    values: Vec<BigInt>,
}

/// Free cumulants k_1, k_2, ..., k_L of a single random variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantSequence {
    values: Vec<BigInt>,
}

macro_rules! sequence_impl {
    ($name:ident) => {
        impl $name {
            /// Builds a sequence from the values at indices 1, 2, ..., in order.
            pub fn from_values(values: Vec<BigInt>) -> Self {
                $name { values }
            }

            pub fn len(&self) -> usize {
                self.values.len()
            }

            pub fn is_empty(&self) -> bool {
                self.values.is_empty()
            }

            /// The value at index n (1-based), if computed.
            pub fn get(&self, n: usize) -> Option<&BigInt> {
                if n == 0 {
                    None
                } else {
                    self.values.get(n - 1)
                }
            }

            pub fn values(&self) -> &[BigInt] {
                &self.values
            }

            /// (index, value) pairs from index 1 upward.
            pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
                self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
            }

            /// Reinterprets the sequence as the series sum of value_k z^k.
            pub fn to_series(&self) -> FormalSeries {
                FormalSeries::from_coefficients(self.values.clone())
            }
        }
    };
}

sequence_impl!(MomentSequence);
sequence_impl!(CumulantSequence);

#[cfg(test)]
mod tests {
    use super::*;

    fn series(values: &[i64]) -> FormalSeries {
        FormalSeries::from_coefficients(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn coefficient_access_is_one_indexed() {
        let s = series(&[0, 4, 0, 28]);
        assert_eq!(s.max_order(), 4);
        assert_eq!(*s.coefficient(2).unwrap(), BigInt::from(4));
        assert_eq!(*s.coefficient(4).unwrap(), BigInt::from(28));
        assert!(matches!(
            s.coefficient(5),
            Err(Error::OrderNotComputed {
                requested: 5,
                max_order: 4
            })
        ));
        assert!(s.coefficient(0).is_err());
    }

    #[test]
    fn evenness_detection() {
        assert!(series(&[0, 4, 0, 28]).is_even());
        assert!(!series(&[0, 4, 1, 28]).is_even());
        assert!(series(&[]).is_even());
    }

    #[test]
    fn sequence_access() {
        let m = MomentSequence::from_values(vec![BigInt::from(0), BigInt::from(4)]);
        assert_eq!(m.len(), 2);
        assert_eq!(m.get(2), Some(&BigInt::from(4)));
        assert_eq!(m.get(0), None);
        assert_eq!(m.get(3), None);
        assert_eq!(m.iter().map(|(i, _)| i).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(m.to_series(), series(&[0, 4]));
    }
}
