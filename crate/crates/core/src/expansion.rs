//! Exact expansions of powers of the generating operator in the
//! word-length-sphere basis.
//!
//! A `WordLengthExpansion` of order n holds the integer coefficients c_l of
//! G^n = sum_l c_l X_l, where X_l is the formal sum of all reduced words of
//! length l. Invariants, enforced on construction:
//!
//! - parity: c_l != 0 only for l congruent to n mod 2
//! - bound: c_l = 0 for l > n
//! - leading term: c_n = 1 (c_0 = 1 when n = 0)
//! - nonnegativity: every stored coefficient is >= 0
//!
//! Mass conservation (sum of c_l * |sphere l| = (2N)^n) additionally depends
//! on N and is exposed as [`mass_check`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::GroupParameter;

/// Number of reduced words of length `len` in F_N: 1 for the identity,
/// otherwise 2N * (2N-1)^(len-1).
pub fn sphere_size(params: GroupParameter, len: usize) -> BigInt {
    if len == 0 {
        BigInt::one()
    } else {
        params.degree_big() * params.branching_big().pow(len as u32 - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordLengthExpansion {
    order: usize,
    /// Nonzero coefficients only; absent lengths are zero.
    coefficients: BTreeMap<usize, BigInt>,
}

impl WordLengthExpansion {
    /// The expansion of G^0 = e.
    pub fn identity() -> Self {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(0, BigInt::one());
        WordLengthExpansion {
            order: 0,
            coefficients,
        }
    }

    /// Builds an expansion from explicit coefficients, validating the
    /// structural invariants. Zero coefficients are dropped.
    pub fn from_coefficients(order: usize, coefficients: BTreeMap<usize, BigInt>) -> Result<Self> {
        let coefficients: BTreeMap<usize, BigInt> = coefficients
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (&len, coeff) in &coefficients {
            if len > order {
                return Err(Error::InvalidExpansion(format!(
                    "coefficient at length {len} exceeds order {order}"
                )));
            }
            if len % 2 != order % 2 {
                return Err(Error::InvalidExpansion(format!(
                    "coefficient at length {len} violates parity of order {order}"
                )));
            }
            if coeff.is_negative() {
                return Err(Error::InvalidExpansion(format!(
                    "negative coefficient at length {len}"
                )));
            }
        }
        if coefficients.get(&order) != Some(&BigInt::one()) {
            return Err(Error::InvalidExpansion(format!(
                "leading coefficient at length {order} must be 1"
            )));
        }
        Ok(WordLengthExpansion {
            order,
            coefficients,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The coefficient c_len (zero when absent).
    pub fn coefficient(&self, len: usize) -> BigInt {
        self.coefficients.get(&len).cloned().unwrap_or_default()
    }

    pub fn get(&self, len: usize) -> Option<&BigInt> {
        self.coefficients.get(&len)
    }

    /// Nonzero coefficients in increasing length order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> {
        self.coefficients.iter().map(|(&l, c)| (l, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coefficients.keys().copied()
    }

    /// Sum of c_l * |sphere l|: the number of letter sequences accounted for.
    pub fn total_mass(&self, params: GroupParameter) -> BigInt {
        self.coefficients
            .iter()
            .map(|(&l, c)| c * sphere_size(params, l))
            .sum()
    }
}

trait IsNegative {
    fn is_negative(&self) -> bool;
}

impl IsNegative for BigInt {
    fn is_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
}

/// True iff the expansion accounts for all (2N)^n letter sequences:
/// sum of c_l * sphere_size(N, l) = (2N)^n.
pub fn mass_check(expansion: &WordLengthExpansion, params: GroupParameter) -> bool {
    expansion.total_mass(params) == params.degree_big().pow(expansion.order() as u32)
}
